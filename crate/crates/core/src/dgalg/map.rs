use super::graded::gc_substitute;
use super::{DgError, SemifreeCDGA};
use crate::polycore::Polynomial;

/// Algebra map between semifree algebras, given on variables.
#[derive(Debug, Clone)]
pub struct DgMap {
    source: SemifreeCDGA,
    target: SemifreeCDGA,
    images: Vec<Polynomial>,
}

impl DgMap {
    /// Unlisted variables go to the target variable of the same name.
    pub fn new(source: &SemifreeCDGA, target: &SemifreeCDGA, images: &[(&str, Polynomial)]) -> Result<DgMap, DgError> {
        let src = source.total_ring();
        let mut out = Vec::with_capacity(src.nvars());
        for name in src.names() {
            let img = match images.iter().find(|(n, _)| n == name) {
                Some((_, p)) => target.import(p)?,
                None => target.var(name)?,
            };
            out.push(img);
        }
        for (n, _) in images {
            if src.index_of(n).is_none() {
                return Err(DgError::UnknownGenerator(n.to_string()));
            }
        }
        Ok(DgMap {
            source: source.clone(),
            target: target.clone(),
            images: out,
        })
    }

    pub fn source(&self) -> &SemifreeCDGA {
        &self.source
    }

    pub fn target(&self) -> &SemifreeCDGA {
        &self.target
    }

    pub fn image_of(&self, name: &str) -> Option<&Polynomial> {
        self.source.total_ring().index_of(name).map(|v| &self.images[v])
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, DgError> {
        let p = self.source.import(p)?;
        Ok(gc_substitute(&p, &self.images, self.target.total_ring(), self.target.odd()))
    }

    /// Checks gradings and d∘φ = φ∘d on every variable; returns the first
    /// offending variable with the defect.
    pub fn check_chain_map(&self) -> Result<(), (String, String)> {
        let src = self.source.total_ring();
        for (v, name) in src.names().iter().enumerate() {
            let img = &self.images[v];
            let mono = crate::polycore::Monomial::var(src.nvars(), v);
            for (m, _) in img.terms() {
                if self.target.hdeg_of(m) != self.source.hdeg_of(&mono)
                    || self.target.weight_of(m) != self.source.weight_of(&mono)
                {
                    return Err((name.clone(), format!("grading of image {img}")));
                }
            }
            let lhs = self.target.d(img);
            let dv = self.source.diff_of(name).expect("variable of the source");
            let rhs = gc_substitute(dv, &self.images, self.target.total_ring(), self.target.odd());
            let defect = &lhs - &rhs;
            if !defect.is_zero() {
                return Err((name.clone(), defect.to_string()));
            }
        }
        Ok(())
    }

    pub fn compose(&self, next: &DgMap) -> Result<DgMap, DgError> {
        if next.source != self.target {
            return Err(DgError::BaseMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|p| gc_substitute(p, &next.images, next.target.total_ring(), next.target.odd()))
            .collect();
        Ok(DgMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        })
    }
}
