use std::fmt;
use std::sync::Arc;

/// Ordered list of variable names. Two rings are equal when their names agree
/// position by position.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ring with `extra` appended after the existing variables.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Ring {
        let mut names: Vec<String> = self.names.to_vec();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(&names)
    }

    pub fn ptr_eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.names, &other.names)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}
