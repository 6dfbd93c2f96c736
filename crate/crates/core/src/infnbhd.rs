//! Infinitesimal neighborhoods X^(n) as weight-0 parts of R^ext modulo
//! t^{-(n+1)}, their exact triangles, and the π₀ tower.

use crate::center::CenterPresentation;
use crate::dgalg::{homology_table, weight_piece, DgError, HomologyTable, SemifreeCDGA, WeightPiece};
use crate::polycore::{fresh_name, Ideal, MonomialOrder, Polynomial};
use crate::rees::{normal_cone_model, rees_extended, ReesPresentation};
use crate::Error;

/// `R^ext⟨ζ⟩` with `dζ = (t⁻¹)^{n+1}`; X^(n) is its weight-0 part.
#[derive(Debug, Clone, PartialEq)]
pub struct InfNeighborhood {
    pub n: u32,
    pub cdga: SemifreeCDGA,
    pub zeta: String,
    /// Kernel of `O_Y → π₀ O_{X^(n)}`.
    pub kernel: Ideal,
}

impl InfNeighborhood {
    /// Monomial basis of X^(n) in internal degrees up to `cutoff`.
    pub fn weight_zero_piece(&self, cutoff: u32) -> Result<WeightPiece, DgError> {
        weight_piece(&self.cdga, 0, cutoff)
    }

    /// Homology of X^(n) in all homological degrees.
    pub fn homology(&self, cutoff: u32) -> Result<HomologyTable, DgError> {
        let top = self.cdga.gens().iter().map(|g| g.hdeg).max().unwrap_or(0);
        homology_table(&self.cdga, 0..=top, 0..=0, cutoff)
    }
}

pub fn inf_neighborhood(r: &ReesPresentation, n: u32) -> Result<InfNeighborhood, Error> {
    let a = r.cdga();
    let zeta = fresh_name(a.total_ring(), "zeta");
    let tinv = Polynomial::named(a.total_ring(), r.tinv());
    let cdga = a.derived_quotient_named(&[(&zeta, tinv.pow(n + 1), -(i64::from(n) + 1))])?;
    let ideal = r.pi0_ideal();
    let ring = ideal.ring().clone();
    let keep: Vec<&str> = r.center().ambient().names().iter().map(String::as_str).collect();
    let kernel = ideal
        .with(&[Polynomial::named(&ring, r.tinv()).pow(n + 1)])?
        .eliminate_names(&keep)?
        .to_ring(r.center().ambient())?;
    Ok(InfNeighborhood { n, cdga, zeta, kernel })
}

/// Koszul presentation `Q[z]⟨e_i⟩`, `d e_i = f_i`.
pub fn koszul_model(center: &CenterPresentation) -> Result<SemifreeCDGA, DgError> {
    let elems: Vec<(&str, Polynomial, i64)> = center
        .cells()
        .iter()
        .zip(center.gens())
        .map(|(e, f)| (e.as_str(), f.clone(), 0))
        .collect();
    SemifreeCDGA::base_algebra(center.ambient()).derived_quotient_named(&elems)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZerothNeighborhood {
    pub pi0_equal: bool,
    /// `None` when either side had to be homogenized: tables are then not comparable.
    pub homology_equal: Option<bool>,
    pub certified_band: u32,
}

/// X^(0) against the Koszul presentation of X.
pub fn check_zeroth(center: &CenterPresentation, cutoff: u32) -> Result<ZerothNeighborhood, Error> {
    let r = rees_extended(center);
    let x0 = inf_neighborhood(&r, 0)?;
    let k = koszul_model(center)?;
    let pi0_equal = x0.kernel.equals(&center.ideal(), MonomialOrder::DegRevLex)?;
    let hx = x0.homology(cutoff)?;
    let top = center.len() as u32;
    let hk = homology_table(&k, 0..=top + 1, 0..=0, cutoff)?;
    let band = hx.certified_band.min(hk.certified_band);
    let homology_equal = (!hx.homogenized && !hk.homogenized).then(|| {
        (0..=top + 1).all(|h| (0..=band).all(|d| hx.get(h, 0, d) == hk.get(h, 0, d)))
    });
    Ok(ZerothNeighborhood {
        pi0_equal,
        homology_equal,
        certified_band: band,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCheck {
    pub n: u32,
    pub certified_band: u32,
    /// Per degree d: (χ Sym^n, χ X^(n), χ X^(n−1)).
    pub first: Vec<(u32, i64, i64, i64)>,
    /// Per degree d: (χ R_{n+1}, χ O_Y, χ X^(n)).
    pub second: Vec<(u32, i64, i64, i64)>,
    /// First (triangle, d) at which additivity fails.
    pub failure: Option<(u8, u32)>,
    /// False when some table had to be homogenized; the counts then live in
    /// different rings and the comparison says nothing.
    pub comparable: bool,
}

impl TriangleCheck {
    pub fn holds(&self) -> bool {
        self.comparable && self.failure.is_none()
    }
}

fn euler(t: &HomologyTable, w: i64, d: u32) -> i64 {
    t.euler_homology(w, d)
}

/// Euler-characteristic additivity in each internal degree of the band for
/// `Sym^n(N^∨) → O_{X^(n)} → O_{X^(n−1)}` and `R_{n+1} → O_Y → O_{X^(n)}`.
pub fn verify_inf_triangles(center: &CenterPresentation, n: u32, cutoff: u32) -> Result<TriangleCheck, Error> {
    if n == 0 {
        return Err(DgError::InvalidSubstitution("triangles need n ≥ 1".into()).into());
    }
    let r = rees_extended(center);
    let top = center.len() as u32;
    let xn = inf_neighborhood(&r, n)?.homology(cutoff)?;
    let xp = inf_neighborhood(&r, n - 1)?.homology(cutoff)?;
    let cone = normal_cone_model(center);
    let sym = homology_table(&cone, 0..=top, i64::from(n)..=i64::from(n), cutoff)?;
    let w = i64::from(n) + 1;
    let rn = homology_table(r.cdga(), 0..=top, w..=w, cutoff)?;
    let oy = homology_table(&SemifreeCDGA::base_algebra(center.ambient()), 0..=0, 0..=0, cutoff)?;
    let tables = [&xn, &xp, &sym, &rn, &oy];
    let band = tables.iter().map(|t| t.certified_band).min().unwrap_or(0);
    let comparable = tables.iter().all(|t| !t.homogenized);
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut failure = None;
    for d in 0..=band {
        let (s, a, b) = (euler(&sym, i64::from(n), d), euler(&xn, 0, d), euler(&xp, 0, d));
        if s != a - b && failure.is_none() {
            failure = Some((1, d));
        }
        first.push((d, s, a, b));
        let (p, q) = (euler(&rn, w, d), euler(&oy, 0, d));
        if p != q - a && failure.is_none() {
            failure = Some((2, d));
        }
        second.push((d, p, q, a));
    }
    Ok(TriangleCheck {
        n,
        certified_band: band,
        first,
        second,
        failure,
        comparable,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelIndex {
    pub n: u32,
    pub kernel: Vec<String>,
    pub equals_power_n: bool,
    pub equals_power_n_plus_1: bool,
}

impl KernelIndex {
    /// Candidate exponents realizing the kernel.
    pub fn matching(&self) -> Vec<u32> {
        let mut out = Vec::new();
        if self.equals_power_n {
            out.push(self.n);
        }
        if self.equals_power_n_plus_1 {
            out.push(self.n + 1);
        }
        out
    }
}

/// Which of `I^n`, `I^{n+1}` is the kernel of `π₀ O_Y → π₀ O_{X^(n)}`.
pub fn pi0_ideal_check(center: &CenterPresentation, n: u32) -> Result<KernelIndex, Error> {
    let r = rees_extended(center);
    let k = inf_neighborhood(&r, n)?.kernel;
    let i = center.ideal();
    let order = MonomialOrder::DegRevLex;
    Ok(KernelIndex {
        n,
        kernel: k.reduced_basis().iter().map(|g| g.to_string()).collect(),
        equals_power_n: k.equals(&i.power(n), order)?,
        equals_power_n_plus_1: k.equals(&i.power(n + 1), order)?,
    })
}

/// Offsets `c ∈ {0, 1}` such that the kernel at level n is `I^{n+c}` in
/// every report.
pub fn consistent_offsets(reports: &[KernelIndex]) -> Vec<u32> {
    [0u32, 1]
        .into_iter()
        .filter(|&c| reports.iter().all(|r| if c == 0 { r.equals_power_n } else { r.equals_power_n_plus_1 }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerLevel {
    pub n: u32,
    pub kernel: Vec<String>,
    /// K_n ⊆ K_{n−1}: the map to the previous level is onto at π₀.
    pub surjects_on_previous: bool,
    /// Smallest m ≤ 4 with K_{n−1}^m ⊆ K_n.
    pub nilpotency: Option<u32>,
    /// K_{n−1}/K_n is the slice I^n/I^{n+1} of the associated graded.
    pub graded_slice: bool,
}

pub fn filtration_tower(r: &ReesPresentation, nmax: u32) -> Result<Vec<TowerLevel>, Error> {
    let i = r.center().ideal();
    let order = MonomialOrder::DegRevLex;
    let mut out = Vec::new();
    let mut prev: Option<Ideal> = None;
    for n in 0..=nmax {
        let k = inf_neighborhood(r, n)?.kernel;
        let (surjects_on_previous, nilpotency, graded_slice) = match &prev {
            None => (true, None, k.equals(&i, order)?),
            Some(p) => {
                let mut nil = None;
                for m in 1..=4 {
                    if p.power(m).is_subset_of(&k)? {
                        nil = Some(m);
                        break;
                    }
                }
                let slice = p.equals(&i.power(n), order)? && k.equals(&i.power(n + 1), order)?;
                (k.is_subset_of(p)?, nil, slice)
            }
        };
        out.push(TowerLevel {
            n,
            kernel: k.reduced_basis().iter().map(|g| g.to_string()).collect(),
            surjects_on_previous,
            nilpotency,
            graded_slice,
        });
        prev = Some(k);
    }
    Ok(out)
}
