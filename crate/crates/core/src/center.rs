//! Presented closed immersions `V(f₁..f_n) ⊂ Spec Q[z]`.

use std::collections::HashSet;

use crate::polycore::{fresh_name, parse_polynomial, ExprError, Ideal, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CenterError {
    #[error("center generators must live in the ambient ring")]
    MixedRings,
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error(transparent)]
    Parse(#[from] ExprError),
}

/// Generators f₁..f_n in the ambient ring, possibly redundant or non-regular,
/// together with the names used for the attached variables: Rees variables
/// `x_i`, Koszul cells `e_i` and blow-up chart variables `y_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterPresentation {
    ambient: Ring,
    gens: Vec<Polynomial>,
    labels: Vec<String>,
    cells: Vec<String>,
    chart_vars: Vec<String>,
}

impl CenterPresentation {
    pub fn new(ambient: &Ring, gens: Vec<Polynomial>) -> Result<Self, CenterError> {
        if gens.iter().any(|g| g.ring() != ambient) {
            return Err(CenterError::MixedRings);
        }
        let mut taken = ambient.clone();
        let mut pick = |base: String| {
            let n = fresh_name(&taken, &base);
            taken = taken.extended(&[n.as_str()]);
            n
        };
        let n = gens.len();
        let labels = (1..=n).map(|i| pick(format!("x{i}"))).collect();
        let cells = (1..=n).map(|i| pick(format!("e{i}"))).collect();
        let chart_vars = (1..=n).map(|i| pick(format!("y{i}"))).collect();
        Ok(CenterPresentation {
            ambient: ambient.clone(),
            gens,
            labels,
            cells,
            chart_vars,
        })
    }

    /// Parse generator strings over `Q[vars]`.
    pub fn parse(vars: &[&str], gens: &[&str]) -> Result<Self, CenterError> {
        let ring = Ring::new(vars);
        let gens = gens
            .iter()
            .map(|g| parse_polynomial(g, &ring))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&ring, gens)
    }

    /// Override the Rees-variable and cell names.
    pub fn with_names(mut self, labels: &[&str], cells: &[&str]) -> Result<Self, CenterError> {
        let n = self.gens.len();
        for got in [labels.len(), cells.len()] {
            if got != n {
                return Err(CenterError::NameCount { expected: n, got });
            }
        }
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self.cells = cells.iter().map(|s| s.to_string()).collect();
        self.check_names()?;
        Ok(self)
    }

    pub fn with_chart_vars(mut self, names: &[&str]) -> Result<Self, CenterError> {
        if names.len() != self.gens.len() {
            return Err(CenterError::NameCount {
                expected: self.gens.len(),
                got: names.len(),
            });
        }
        self.chart_vars = names.iter().map(|s| s.to_string()).collect();
        self.check_names()?;
        Ok(self)
    }

    fn check_names(&self) -> Result<(), CenterError> {
        let mut seen = HashSet::new();
        for n in self
            .ambient
            .names()
            .iter()
            .chain(&self.labels)
            .chain(&self.cells)
            .chain(&self.chart_vars)
        {
            if !seen.insert(n.as_str()) {
                return Err(CenterError::DuplicateName(n.clone()));
            }
        }
        Ok(())
    }

    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn cells(&self) -> &[String] {
        &self.cells
    }

    pub fn chart_vars(&self) -> &[String] {
        &self.chart_vars
    }

    /// The ideal (f₁..f_n) of the ambient ring.
    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ambient, self.gens.clone()).expect("generators share the ambient ring")
    }

    /// Name for t⁻¹ avoiding every other name in use.
    pub fn tinv_name(&self) -> String {
        fresh_name(&self.all_names(), "tinv")
    }

    /// Name for t (the inverse of t⁻¹).
    pub fn t_name(&self) -> String {
        let r = self.all_names().extended(&[self.tinv_name()]);
        fresh_name(&r, "t")
    }

    pub(crate) fn all_names(&self) -> Ring {
        self.ambient
            .extended(&self.labels)
            .extended(&self.cells)
            .extended(&self.chart_vars)
    }

    /// Concatenate two centers over the same ambient ring, keeping Rees and
/// cell names; chart variables are renamed afresh.
    pub fn union(&self, other: &CenterPresentation) -> Result<Self, CenterError> {
        if self.ambient != other.ambient {
            return Err(CenterError::MixedRings);
        }
        let mut c = self.clone();
        c.gens.extend(other.gens.iter().cloned());
        c.labels.extend(other.labels.iter().cloned());
        c.cells.extend(other.cells.iter().cloned());
        c.chart_vars.clear();
        c.check_names()?;
        let mut taken = c.all_names();
        for i in 1..=c.len() {
            let n = fresh_name(&taken, &format!("y{i}"));
            taken = taken.extended(&[n.as_str()]);
            c.chart_vars.push(n);
        }
        Ok(c)
    }

    /// `ring Q[...]; center (...);` rendering of the input data.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        format!("ring Q[{}]; center ({});", self.ambient.names().join(","), gens.join(", "))
    }
}
