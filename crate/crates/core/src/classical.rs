//! Classical oracle: Rees ideals by elimination, normal cones, blow-up charts,
//! and comparisons against π₀ of the derived constructions.

use crate::center::CenterPresentation;
use crate::dgalg::Pi0Presentation;
use crate::polycore::{buchberger_in, fresh_name, Ideal, MonomialOrder, Polynomial, Ring};
use crate::Error;

/// Kernel of `Q[z][X] → Q[z][t]`, `X_i ↦ f_i·t` (and `t⁻¹ ↦ t⁻¹` when extended).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalReesIdeal {
    /// `z, [t⁻¹,] X₁..X_n`.
    pub ideal: Ideal,
    pub labels: Vec<String>,
    pub tinv: Option<String>,
}

impl ClassicalReesIdeal {
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.ideal.reduced_basis().iter().map(|g| g.to_string()).collect()
    }

    /// Weights of the ring variables: X has 1, t⁻¹ has −1.
    pub fn weights(&self) -> Vec<i64> {
        self.ring()
            .names()
            .iter()
            .map(|n| {
                if self.labels.contains(n) {
                    1
                } else if self.tinv.as_deref() == Some(n.as_str()) {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }
}

pub fn classical_rees(center: &CenterPresentation, extended: bool) -> Result<ClassicalReesIdeal, Error> {
    if center.is_empty() {
        return Err(Error::EmptyCenter);
    }
    let ambient = center.ambient();
    let tinv = extended.then(|| center.tinv_name());
    let mut keep: Vec<String> = ambient.names().to_vec();
    keep.extend(tinv.iter().cloned());
    keep.extend(center.labels().iter().cloned());
    let target = Ring::new(&keep);
    let t = fresh_name(&target, "t");
    let mut all = keep.clone();
    all.push(t.clone());
    let ring = Ring::new(&all);
    let tv = Polynomial::named(&ring, &t);
    let mut gens = Vec::new();
    for (x, f) in center.labels().iter().zip(center.gens()) {
        gens.push(&Polynomial::named(&ring, x) - &(&f.to_ring(&ring)? * &tv));
    }
    if let Some(ti) = &tinv {
        gens.push(&(&Polynomial::named(&ring, ti) * &tv) - &Polynomial::one(&ring));
    }
    let keep_refs: Vec<&str> = keep.iter().map(String::as_str).collect();
    let ideal = Ideal::new(&ring, gens)?.eliminate_names(&keep_refs)?.to_ring(&target)?;
    Ok(ClassicalReesIdeal {
        ideal,
        labels: center.labels().to_vec(),
        tinv,
    })
}

/// `⊕ I^n/I^{n+1}` presented as `Q[z][X]/(Rees ideal + (f))`.
pub fn classical_normal_cone(center: &CenterPresentation) -> Result<Pi0Presentation, Error> {
    let rees = classical_rees(center, false)?;
    let ring = rees.ring().clone();
    let fs: Vec<Polynomial> = center.gens().iter().map(|f| f.to_ring(&ring)).collect::<Result<_, _>>()?;
    Ok(Pi0Presentation::new(rees.ideal.with(&fs)?))
}

/// Chart `X_j ≠ 0` of the classical blow-up over `Q[z][y_i : i ≠ j]`.
pub fn classical_chart(center: &CenterPresentation, j: usize) -> Result<Ideal, Error> {
    let n = center.len();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let rees = classical_rees(center, false)?;
    let ambient = center.ambient();
    let ys: Vec<&str> = (1..=n).filter(|&i| i != j).map(|i| center.chart_vars()[i - 1].as_str()).collect();
    let ring = ambient.extended(&ys);
    let mut images: Vec<Polynomial> = (0..ambient.nvars()).map(|v| Polynomial::var(&ring, v)).collect();
    for i in 1..=n {
        images.push(if i == j {
            Polynomial::one(&ring)
        } else {
            Polynomial::named(&ring, &center.chart_vars()[i - 1])
        });
    }
    let gens = rees.ideal.gens().iter().map(|g| g.substitute(&ring, &images)).collect();
    Ok(Ideal::new(&ring, gens)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConsistency {
    /// t⁻¹ is a nonzerodivisor on the extended Rees quotient.
    pub tinv_regular: bool,
    /// The extended ideal meets `Q[z][X]` in the ordinary Rees ideal.
    pub nonnegative_part: bool,
    /// For each n: multiplication by t⁻ⁿ carries the weight-n piece onto I^n
    /// with `X^b ↦ f^b`.
    pub powers: Vec<(u32, bool)>,
}

impl OracleConsistency {
    pub fn holds(&self) -> bool {
        self.tinv_regular && self.nonnegative_part && self.powers.iter().all(|(_, ok)| *ok)
    }
}

pub fn oracle_consistency(center: &CenterPresentation, nmax: u32) -> Result<OracleConsistency, Error> {
    let ext = classical_rees(center, true)?;
    let plain = classical_rees(center, false)?;
    let tinv = ext.tinv.clone().expect("extended");
    let ring = ext.ring().clone();
    let tv = Polynomial::named(&ring, &tinv);
    let tinv_regular = ext.ideal.saturate(&tv)?.equals(&ext.ideal, MonomialOrder::DegRevLex)?;
    let keep: Vec<&str> = plain.ring().names().iter().map(String::as_str).collect();
    let nonnegative_part = ext
        .ideal
        .eliminate_names(&keep)?
        .to_ring(plain.ring())?
        .equals(&plain.ideal, MonomialOrder::DegRevLex)?;

    // order [t⁻¹, X | z]: normal forms of t⁻ⁿ·X^b land in Q[z]
    let ambient = center.ambient();
    let mut order = vec![tinv.clone()];
    order.extend(ext.labels.iter().cloned());
    order.extend(ambient.names().iter().cloned());
    let elim = Ring::new(&order);
    let gens: Vec<Polynomial> = ext.ideal.gens().iter().map(|g| g.to_ring(&elim)).collect::<Result<_, _>>()?;
    let gb = buchberger_in(&elim, &gens, MonomialOrder::Block(1 + center.len()))?;
    let mut powers = Vec::new();
    for n in 0..=nmax {
        let mut ok = true;
        for b in exponent_vectors(center.len(), n) {
            let mut mono = Polynomial::named(&elim, &tinv).pow(n);
            let mut fb = Polynomial::one(ambient);
            for (i, &k) in b.iter().enumerate() {
                mono = &mono * &Polynomial::named(&elim, &ext.labels[i]).pow(k);
                fb = &fb * &center.gens()[i].pow(k);
            }
            let nf = gb.normal_form(&mono)?;
            ok &= nf.to_ring(ambient).map(|p| p == fb).unwrap_or(false);
        }
        powers.push((n, ok));
    }
    Ok(OracleConsistency {
        tinv_regular,
        nonnegative_part,
        powers,
    })
}

fn exponent_vectors(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=total {
        for mut rest in exponent_vectors(len - 1, total - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationComparison {
    /// π₀ relations of the derived algebra hold classically.
    pub surjective: bool,
    /// Saturating at t⁻¹ gives the classical extended Rees ideal.
    pub closure_matches: bool,
    /// Saturation added nothing.
    pub saturation_noop: bool,
    /// Generators of the saturation missing from π₀: the t⁻¹-torsion.
    pub torsion: Vec<String>,
    /// Setting t⁻¹ = 0 in the saturation gives the classical normal cone.
    pub special_fiber_matches: bool,
}

impl DeformationComparison {
    pub fn holds(&self) -> bool {
        self.surjective && self.closure_matches && self.special_fiber_matches
    }
}

/// Compare π₀ of the extended Rees algebra, given on `z, t⁻¹, x`, with the
/// classical extended Rees ideal.
pub fn compare_deformation_pi0(center: &CenterPresentation, pi0: &Pi0Presentation) -> Result<DeformationComparison, Error> {
    let classical = classical_rees(center, true)?;
    let tinv = classical.tinv.clone().expect("extended");
    let ring = classical.ring().clone();
    let j = pi0.ideal().to_ring(&ring)?;
    let order = MonomialOrder::DegRevLex;
    let surjective = j.is_subset_of(&classical.ideal)?;
    let sat = j.saturate(&Polynomial::named(&ring, &tinv))?;
    let closure_matches = sat.equals(&classical.ideal, order)?;
    let jgb = j.groebner(order);
    let torsion: Vec<String> = sat
        .reduced_basis()
        .into_iter()
        .filter(|g| !jgb.contains(g).unwrap_or(true))
        .map(|g| g.to_string())
        .collect();
    let cone = classical_normal_cone(center)?;
    let keep: Vec<&str> = cone.ring().names().iter().map(String::as_str).collect();
    let special = sat
        .with(&[Polynomial::named(&ring, &tinv)])?
        .eliminate_names(&keep)?
        .to_ring(cone.ring())?;
    let special_fiber_matches = special.equals(cone.ideal(), order)?;
    Ok(DeformationComparison {
        surjective,
        closure_matches,
        saturation_noop: torsion.is_empty(),
        torsion,
        special_fiber_matches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartComparison {
    pub index: usize,
    /// Saturating at the exceptional equation gives the classical chart.
    pub matches: bool,
    pub saturation_noop: bool,
    pub classical: Vec<String>,
    pub saturated: Vec<String>,
}

/// Compare π₀ of chart `j`, given on `z, y_i (i ≠ j)`, with the classical chart.
pub fn compare_chart_pi0(center: &CenterPresentation, j: usize, pi0: &Pi0Presentation) -> Result<ChartComparison, Error> {
    let classical = classical_chart(center, j)?;
    let ring = classical.ring().clone();
    let ideal = pi0.ideal().to_ring(&ring)?;
    let fj = center.gens()[j - 1].to_ring(&ring)?;
    let sat = if fj.is_zero() {
        Ideal::unit(&ring)
    } else {
        ideal.saturate(&fj)?
    };
    let order = MonomialOrder::DegRevLex;
    Ok(ChartComparison {
        index: j,
        matches: sat.equals(&classical, order)?,
        saturation_noop: sat.equals(&ideal, order)?,
        classical: classical.reduced_basis().iter().map(|g| g.to_string()).collect(),
        saturated: sat.reduced_basis().iter().map(|g| g.to_string()).collect(),
    })
}
