use std::fmt;

use super::groebner::{buchberger_in, GroebnerBasis};
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::PolyError;

/// Finitely generated ideal; the generator list may be empty (zero ideal).
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self, PolyError> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(PolyError::MixedRings);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis {
        buchberger_in(&self.ring, &self.gens, order).expect("generators share the ideal's ring")
    }

    /// Degrevlex reduced basis.
    pub fn reduced_basis(&self) -> Vec<Polynomial> {
        self.groebner(MonomialOrder::DegRevLex).into_basis()
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, PolyError> {
        self.groebner(MonomialOrder::DegRevLex).contains(p)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::MixedRings);
        }
        other.groebner(MonomialOrder::DegRevLex).contains_all(&self.gens)
    }

    pub fn equals(&self, other: &Ideal, order: MonomialOrder) -> Result<bool, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::MixedRings);
        }
        Ok(self.groebner(order) == other.groebner(order))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner(MonomialOrder::DegRevLex).is_unit_ideal()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::MixedRings);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with(&self, extra: &[Polynomial]) -> Result<Ideal, PolyError> {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::MixedRings);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                push_unique(&mut gens, a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// All `n`-fold products of the generators; `I^0 = (1)`.
    pub fn power(&self, n: u32) -> Ideal {
        // (product, index of the last factor) over multisets of generators
        let mut prods: Vec<(Polynomial, usize)> = vec![(Polynomial::one(&self.ring), 0)];
        for _ in 0..n {
            prods = prods
                .iter()
                .flat_map(|(p, last)| {
                    self.gens
                        .iter()
                        .enumerate()
                        .skip(*last)
                        .map(move |(k, g)| (p * g, k))
                })
                .collect();
        }
        let mut uniq = Vec::new();
        for (g, _) in prods {
            if !g.is_zero() {
                push_unique(&mut uniq, g);
            }
        }
        Ideal {
            ring: self.ring.clone(),
            gens: uniq,
        }
    }

    /// Generators of `I ∩ Q[keep]`, expressed in the original ring.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal, PolyError> {
        let n = self.ring.nvars();
        if let Some(&bad) = keep.iter().find(|&&k| k >= n) {
            return Err(PolyError::UnknownVariable(format!("#{bad}")));
        }
        let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        if elim.is_empty() {
            return Ideal::new(&self.ring, self.reduced_basis());
        }
        let mut order_names: Vec<&str> = elim.iter().map(|&i| self.ring.name(i)).collect();
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        order_names.extend(kept.iter().map(|&i| self.ring.name(i)));
        let perm = Ring::new(&order_names);
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.to_ring(&perm))
            .collect::<Result<_, _>>()?;
        let gb = buchberger_in(&perm, &gens, MonomialOrder::Block(elim.len()))?;
        let kept_gens: Vec<Polynomial> = gb
            .basis()
            .iter()
            .filter(|p| (0..elim.len()).all(|i| !p.involves(i)))
            .map(|p| p.to_ring(&self.ring))
            .collect::<Result<_, _>>()?;
        Ideal::new(&self.ring, kept_gens)
    }

    pub fn eliminate_names(&self, keep: &[&str]) -> Result<Ideal, PolyError> {
        let idx: Vec<usize> = keep
            .iter()
            .map(|k| {
                self.ring
                    .index_of(k)
                    .ok_or_else(|| PolyError::UnknownVariable(k.to_string()))
            })
            .collect::<Result<_, _>>()?;
        self.eliminate(&idx)
    }

    /// `I : f^∞` by adjoining `w` with `w f - 1` and eliminating `w`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal, PolyError> {
        if f.ring() != &self.ring {
            return Err(PolyError::MixedRings);
        }
        if f.is_zero() {
            return Err(PolyError::ZeroSaturant);
        }
        let w = fresh_name(&self.ring, "w");
        let big = Ring::new(&[w.as_str()]).extended(self.ring.names());
        let wv = Polynomial::var(&big, 0);
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.to_ring(&big))
            .collect::<Result<_, _>>()?;
        gens.push(&(&wv * &f.to_ring(&big)?) - &Polynomial::one(&big));
        let gb = buchberger_in(&big, &gens, MonomialOrder::Block(1))?;
        let kept: Vec<Polynomial> = gb
            .basis()
            .iter()
            .filter(|p| !p.involves(0))
            .map(|p| p.to_ring(&self.ring))
            .collect::<Result<_, _>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// Transport generators into `target` by variable name.
    pub fn to_ring(&self, target: &Ring) -> Result<Ideal, PolyError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }
}

fn push_unique(v: &mut Vec<Polynomial>, p: Polynomial) {
    if !v.contains(&p) {
        v.push(p);
    }
}

/// A name not already used in `ring`, built from `base` with primes appended.
pub fn fresh_name(ring: &Ring, base: &str) -> String {
    let mut name = base.to_string();
    while ring.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

pub fn ideal_equal(i: &Ideal, j: &Ideal, order: MonomialOrder) -> Result<bool, PolyError> {
    i.equals(j, order)
}

pub fn eliminate(i: &Ideal, keep: &[&str]) -> Result<Ideal, PolyError> {
    i.eliminate_names(keep)
}

pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal, PolyError> {
    i.saturate(f)
}

pub fn ideal_power(i: &Ideal, n: u32) -> Ideal {
    i.power(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn ideal(ring: &Ring, s: &[&str]) -> Ideal {
        Ideal::new(ring, s.iter().map(|t| parse_polynomial(t, ring).unwrap()).collect()).unwrap()
    }

    fn strs(i: &Ideal) -> Vec<String> {
        i.gens().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn equality_examples() {
        let r = Ring::new(&["x", "y"]);
        let o = MonomialOrder::DegRevLex;
        assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x"]), o).unwrap());
        assert!(!ideal(&r, &["x"]).equals(&ideal(&r, &["x^2"]), o).unwrap());
        assert!(ideal(&r, &["x^2 - 1", "x*y - 1"])
            .equals(&ideal(&r, &["x - y", "y^2 - 1"]), o)
            .unwrap());
        let s = Ring::new(&["x"]);
        assert_eq!(ideal(&r, &["x"]).equals(&ideal(&s, &["x"]), o), Err(PolyError::MixedRings));
    }

    #[test]
    fn elimination_examples() {
        let r = Ring::new(&["x", "y"]);
        assert!(ideal(&r, &["y - x^2"]).eliminate_names(&["y"]).unwrap().is_zero());
        assert_eq!(strs(&ideal(&r, &["x", "y"]).eliminate_names(&["y"]).unwrap()), vec!["y"]);
        // image of t -> (t^2, t^3)
        let c = Ring::new(&["t", "x", "y"]);
        let e = ideal(&c, &["x - t^2", "y - t^3"]).eliminate_names(&["x", "y"]).unwrap();
        assert_eq!(strs(&e), vec!["x^3 - y^2"]);
    }

    #[test]
    fn saturation_examples() {
        let r = Ring::new(&["tinv", "x1", "x2"]);
        let i = ideal(&r, &["tinv*x1 - tinv*x2"]);
        let f = parse_polynomial("tinv", &r).unwrap();
        assert_eq!(strs(&i.saturate(&f).unwrap()), vec!["x1 - x2"]);
        let r = Ring::new(&["x", "y"]);
        let y = parse_polynomial("y", &r).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        assert_eq!(strs(&ideal(&r, &["x"]).saturate(&y).unwrap()), vec!["x"]);
        assert_eq!(strs(&ideal(&r, &["x*y"]).saturate(&x).unwrap()), vec!["y"]);
        assert_eq!(
            ideal(&r, &["x"]).saturate(&Polynomial::zero(&r)),
            Err(PolyError::ZeroSaturant)
        );
    }

    #[test]
    fn power_examples() {
        let r = Ring::new(&["x", "y"]);
        assert_eq!(strs(&ideal(&r, &["x", "y"]).power(2)), vec!["x^2", "x*y", "y^2"]);
        assert_eq!(strs(&ideal(&r, &["x^2", "x*y"]).power(2)), vec!["x^4", "x^3*y", "x^2*y^2"]);
        assert_eq!(strs(&ideal(&r, &["x^2", "x*y"]).power(0)), vec!["1"]);
        assert_eq!(ideal(&r, &["x", "y"]).power(3).gens().len(), 4);
    }
}
