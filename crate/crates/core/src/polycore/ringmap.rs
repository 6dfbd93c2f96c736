use super::groebner::GroebnerBasis;
use super::ideal::Ideal;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::PolyError;

/// Ring homomorphism `Q[source] → Q[target]` given on variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
}

impl RingMap {
    /// Variables not listed go to the target variable of the same name.
    pub fn new(source: &Ring, target: &Ring, images: &[(&str, Polynomial)]) -> Result<RingMap, PolyError> {
        for (n, _) in images {
            if source.index_of(n).is_none() {
                return Err(PolyError::UnknownVariable(n.to_string()));
            }
        }
        let mut out = Vec::with_capacity(source.nvars());
        for name in source.names() {
            let img = match images.iter().find(|(n, _)| n == name) {
                Some((_, p)) => p.to_ring(target)?,
                None => {
                    let v = target
                        .index_of(name)
                        .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    Polynomial::var(target, v)
                }
            };
            out.push(img);
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images: out,
        })
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        let p = p.to_ring(&self.source)?;
        Ok(p.substitute(&self.target, &self.images))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &RingMap) -> Result<RingMap, PolyError> {
        if next.source != self.target {
            return Err(PolyError::MixedRings);
        }
        let images = self
            .images
            .iter()
            .map(|p| p.substitute(&next.target, &next.images))
            .collect();
        Ok(RingMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        })
    }

    /// The map descends to `source/i → target/j`.
    pub fn respects(&self, i: &Ideal, j: &GroebnerBasis) -> Result<bool, PolyError> {
        for g in i.gens() {
            if !j.contains(&self.apply(g)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For an endomorphism: every variable is fixed modulo `j`.
    pub fn is_identity_modulo(&self, j: &GroebnerBasis) -> Result<bool, PolyError> {
        if self.source != self.target {
            return Err(PolyError::MixedRings);
        }
        for (v, img) in self.images.iter().enumerate() {
            let diff = img - &Polynomial::var(&self.source, v);
            if !j.contains(&diff)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
