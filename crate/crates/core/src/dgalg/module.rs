use super::graded::gc_mul;
use super::{make_cdga, DgError, GeneratorSpec, SemifreeCDGA};
use crate::polycore::Polynomial;

/// Finite free dg-module over a semifree algebra. The differential of each
/// generator is a list of (coefficient in the algebra, module generator).
#[derive(Debug, Clone, PartialEq)]
pub struct DGModuleSpec {
    pub algebra: SemifreeCDGA,
    pub gens: Vec<GeneratorSpec>,
    pub diff: Vec<Vec<(Polynomial, String)>>,
}

impl DGModuleSpec {
    /// Free module with zero differential.
    pub fn free(algebra: &SemifreeCDGA, gens: Vec<GeneratorSpec>) -> Self {
        let diff = vec![Vec::new(); gens.len()];
        DGModuleSpec {
            algebra: algebra.clone(),
            gens,
            diff,
        }
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }
}

/// Free graded-commutative algebra on the module generators over the
/// algebra, with the induced differential.
pub fn sym_algebra(m: &DGModuleSpec) -> Result<SemifreeCDGA, DgError> {
    let a = &m.algebra;
    let mut gens = a.gens().to_vec();
    gens.extend(m.gens.iter().cloned());
    let names: Vec<&str> = m.gens.iter().map(|g| g.name.as_str()).collect();
    let big = a.total_ring().extended(&names);
    let mut odd: Vec<bool> = a.odd().to_vec();
    odd.extend(m.gens.iter().map(|g| g.is_odd()));
    let mut diffs: Vec<Polynomial> = a
        .gens()
        .iter()
        .map(|g| a.diff_of(&g.name).expect("own generator").to_ring(&big))
        .collect::<Result<_, _>>()?;
    for terms in &m.diff {
        let mut acc = Polynomial::zero(&big);
        for (c, target) in terms {
            let c = a.import(c)?.to_ring(&big)?;
            let t = big
                .index_of(target)
                .ok_or_else(|| DgError::UnknownGenerator(target.clone()))?;
            acc = &acc + &gc_mul(&c, &Polynomial::var(&big, t), &odd);
        }
        diffs.push(acc);
    }
    make_cdga(a.base(), gens, diffs)
}
