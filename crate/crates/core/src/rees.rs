//! Extended Rees algebra of a presented closed immersion, its fibers over
//! the t⁻¹-line, the normal-cone model and the adic filtration.

use std::collections::BTreeMap;

use num_traits::One;

use crate::center::CenterPresentation;
use crate::dgalg::{
    homology_table, make_cdga, sym_algebra, weight_piece, DGModuleSpec, DgError, GeneratorSpec,
    HomologyTable, Pi0Presentation, SemifreeCDGA,
};
use crate::polycore::{
    buchberger_in, GroebnerBasis, Ideal, Monomial, MonomialOrder, PolyError, Polynomial, Rational, Ring,
};

/// Internal degree given to the Rees variable of `f`.
pub fn rees_var_degree(f: &Polynomial) -> u32 {
    f.total_degree().unwrap_or(0).max(1)
}

/// `Q[z][t⁻¹, x₁..x_n]⟨e₁..e_n⟩` with `d e_i = x_i·t⁻¹ − f_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReesPresentation {
    cdga: SemifreeCDGA,
    center: CenterPresentation,
    tinv: String,
}

impl ReesPresentation {
    pub fn cdga(&self) -> &SemifreeCDGA {
        &self.cdga
    }

    pub fn center(&self) -> &CenterPresentation {
        &self.center
    }

    pub fn tinv(&self) -> &str {
        &self.tinv
    }

    pub fn pi0(&self) -> Pi0Presentation {
        self.cdga.pi0()
    }

    /// The π₀ ideal J = (x_i·t⁻¹ − f_i).
    pub fn pi0_ideal(&self) -> Ideal {
        self.pi0().ideal().clone()
    }
}

pub fn rees_extended(center: &CenterPresentation) -> ReesPresentation {
    let tinv = center.tinv_name();
    let base = center.ambient();
    let mut gens = vec![GeneratorSpec::new(&tinv, 0, -1).with_deg(0)];
    for (f, x) in center.gens().iter().zip(center.labels()) {
        gens.push(GeneratorSpec::new(x, 0, 1).with_deg(rees_var_degree(f)));
    }
    for e in center.cells() {
        gens.push(GeneratorSpec::new(e, 1, 0));
    }
    let names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    let total = base.extended(&names);
    let t = Polynomial::named(&total, &tinv);
    let mut diffs = vec![Polynomial::zero(&total); 1 + center.len()];
    for (f, x) in center.gens().iter().zip(center.labels()) {
        let f = f.to_ring(&total).expect("ambient variables");
        diffs.push(&(&Polynomial::named(&total, x) * &t) - &f);
    }
    let cdga = make_cdga(base, gens, diffs).expect("Rees presentation is valid");
    ReesPresentation {
        cdga,
        center: center.clone(),
        tinv,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiberKind {
    /// t⁻¹ = 0: the normal bundle.
    Special,
    /// t⁻¹ inverted: Y × G_m.
    Generic,
}

impl std::str::FromStr for FiberKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "special" => Ok(FiberKind::Special),
            "generic" => Ok(FiberKind::Generic),
            other => Err(format!("unknown fiber `{other}` (expected special or generic)")),
        }
    }
}

impl std::fmt::Display for FiberKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FiberKind::Special => "special",
            FiberKind::Generic => "generic",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeformationFiber {
    pub kind: FiberKind,
    pub cdga: SemifreeCDGA,
}

pub fn deformation_fiber(r: &ReesPresentation, kind: FiberKind) -> DeformationFiber {
    let a = r.cdga();
    let cdga = match kind {
        FiberKind::Special => a
            .base_change(&[(r.tinv(), Polynomial::zero(a.total_ring()))])
            .expect("t⁻¹ ↦ 0 is a valid specialization"),
        FiberKind::Generic => {
            let t = r.center().t_name();
            let cell = crate::polycore::fresh_name(&a.total_ring().extended(&[t.as_str()]), "eta");
            a.localize_named(r.tinv(), &t, &cell).expect("t⁻¹ has homological degree 0")
        }
    };
    DeformationFiber { kind, cdga }
}

/// Free rank-n module in hdeg 0, weight 1 over the Koszul algebra K(f).
/// Cells of K(f) get the same internal degree as the matching Rees cells.
pub fn conormal_model(center: &CenterPresentation) -> DGModuleSpec {
    let base = center.ambient();
    let cells = center
        .cells()
        .iter()
        .zip(center.gens())
        .map(|(e, f)| GeneratorSpec::new(e, 1, 0).with_deg(rees_var_degree(f)))
        .collect();
    let k = make_cdga(base, cells, center.gens().to_vec()).expect("Koszul algebra is valid");
    let gens = center
        .labels()
        .iter()
        .zip(center.gens())
        .map(|(x, f)| GeneratorSpec::new(x, 0, 1).with_deg(rees_var_degree(f)))
        .collect();
    DGModuleSpec::free(&k, gens)
}

/// Sym of the conormal model, generators sorted by homological degree.
pub fn normal_cone_model(center: &CenterPresentation) -> SemifreeCDGA {
    sym_algebra(&conormal_model(center))
        .expect("free module over a valid algebra")
        .canonicalized()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFiberCheck {
    /// Equality after the canonical isomorphism e_i ↦ −e_i.
    pub presentation_equal: bool,
    pub tables_equal: bool,
    pub certified_band: u32,
}

/// Compare the special fiber with the normal-cone model, as presentations and
/// through homology tables on the certified band.
pub fn check_special_fiber(r: &ReesPresentation, weights: std::ops::RangeInclusive<i64>, cutoff: u32) -> Result<SpecialFiberCheck, DgError> {
    let special = deformation_fiber(r, FiberKind::Special).cdga;
    let cone = normal_cone_model(r.center());
    let minus = -Rational::one();
    let mut flipped = special.clone();
    for e in r.center().cells() {
        flipped = flipped.rescale_generator(e, &minus)?;
    }
    let presentation_equal = flipped == cone;
    let kmax = r.center().len() as u32;
    let ts = homology_table(&special, 0..=kmax, weights.clone(), cutoff)?;
    let tc = homology_table(&cone, 0..=kmax, weights, cutoff)?;
    let band = ts.certified_band.min(tc.certified_band);
    let tables_equal = ts
        .entries
        .iter()
        .filter(|((_, _, d), _)| *d <= band)
        .all(|(k, v)| tc.entries.get(k) == Some(v));
    Ok(SpecialFiberCheck {
        presentation_equal,
        tables_equal,
        certified_band: band,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericFiberCheck {
    pub computed: Vec<String>,
    pub expected: Vec<String>,
    pub holds: bool,
}

/// Reduced basis of π₀ of the generic fiber under an order eliminating the
/// Rees variables, against `{x_i − f_i·t} ∪ {t⁻¹·t − 1}`.
pub fn check_generic_fiber(r: &ReesPresentation) -> Result<GenericFiberCheck, PolyError> {
    let fiber = deformation_fiber(r, FiberKind::Generic).cdga;
    let p = fiber.pi0();
    let center = r.center();
    let t = center.t_name();
    let mut order: Vec<String> = center.labels().to_vec();
    order.extend(center.ambient().names().iter().cloned());
    order.push(r.tinv().to_string());
    order.push(t.clone());
    let ring = Ring::new(&order);
    let gens: Vec<Polynomial> = p.ideal().gens().iter().map(|g| g.to_ring(&ring)).collect::<Result<_, _>>()?;
    let gb = buchberger_in(&ring, &gens, MonomialOrder::Block(center.len()))?;
    let tp = Polynomial::named(&ring, &t);
    let mut expected: Vec<Polynomial> = center
        .labels()
        .iter()
        .zip(center.gens())
        .map(|(x, f)| Ok(&Polynomial::named(&ring, x) - &(&f.to_ring(&ring)? * &tp)))
        .collect::<Result<_, PolyError>>()?;
    expected.push(&(&Polynomial::named(&ring, r.tinv()) * &tp) - &Polynomial::one(&ring));
    let mut computed: Vec<String> = gb.basis().iter().map(|g| g.to_string()).collect();
    let mut expect: Vec<String> = expected.iter().map(|g| g.to_string()).collect();
    computed.sort();
    expect.sort();
    let holds = computed == expect;
    Ok(GenericFiberCheck {
        computed,
        expected: expect,
        holds,
    })
}

/// Gröbner basis of J in the ring ordered `[t⁻¹, x | z]`, eliminating t⁻¹ and x.
fn elimination_basis(r: &ReesPresentation) -> Result<GroebnerBasis, PolyError> {
    let center = r.center();
    let mut order = vec![r.tinv().to_string()];
    order.extend(center.labels().iter().cloned());
    order.extend(center.ambient().names().iter().cloned());
    let ring = Ring::new(&order);
    let gens: Vec<Polynomial> = r.pi0_ideal().gens().iter().map(|g| g.to_ring(&ring)).collect::<Result<_, _>>()?;
    buchberger_in(&ring, &gens, MonomialOrder::Block(1 + center.len()))
}

/// Reduce `p` (in t⁻¹, x, z) to the ambient ring; `None` if the remainder
/// still involves t⁻¹ or x.
fn reduce_to_ambient(gb: &GroebnerBasis, p: &Polynomial, ambient: &Ring) -> Result<Option<Polynomial>, PolyError> {
    let nf = gb.normal_form(&p.to_ring(gb.ring())?)?;
    Ok(nf.to_ring(ambient).ok())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesStructure {
    /// Weights ≤ 0 of π₀ are free over Q[z] on the powers of t⁻¹.
    pub nonpositive_free: bool,
    pub generated_in_weight_one: bool,
    /// Image of the weight-1 part in O_Y under multiplication by t⁻¹.
    pub weight_one_image: Vec<String>,
    pub weight_one_is_ideal: bool,
    /// Weight-1 elements killed by t⁻¹ (nonzero in π₀).
    pub weight_one_torsion: Vec<String>,
}

impl ReesStructure {
    pub fn holds(&self) -> bool {
        self.nonpositive_free && self.generated_in_weight_one && self.weight_one_is_ideal
    }
}

pub fn rees_structure(r: &ReesPresentation, cutoff: u32) -> Result<ReesStructure, PolyError> {
    let center = r.center();
    let ambient = center.ambient();
    let j = r.pi0_ideal();
    let ring = j.ring().clone();
    let gb = j.groebner(MonomialOrder::DegRevLex);

    // Q[z][t⁻¹] injects and x_i t⁻¹ ≡ f_i, so each weight ≤ 0 piece is Q[z]·t⁻ᵏ.
    let mut keep: Vec<&str> = ambient.names().iter().map(String::as_str).collect();
    keep.push(r.tinv());
    let injective = j.eliminate_names(&keep)?.is_zero();
    let tv = Polynomial::named(&ring, r.tinv());
    let mut relations = true;
    for (x, f) in center.labels().iter().zip(center.gens()) {
        let rel = &(&Polynomial::named(&ring, x) * &tv) - &f.to_ring(&ring)?;
        relations &= gb.contains(&rel)?;
    }
    let powers_survive = (0..=cutoff).all(|k| !gb.normal_form(&tv.pow(k)).map(|p| p.is_zero()).unwrap_or(true));
    let nonpositive_free = injective && relations && powers_survive;

    // π₀ variables outside Q[z][t⁻¹] all have weight 1, and every standard
    // monomial of weight w ≥ 1 is t⁻¹-power times a product of ≥ w of them.
    let a = r.cdga();
    let weight_of = |name: &str| a.generator(name).map_or(0, |g| g.weight);
    let mut generated = ring
        .names()
        .iter()
        .filter(|n| ambient.index_of(n).is_none() && n.as_str() != r.tinv())
        .all(|n| weight_of(n) == 1);
    let xs: Vec<usize> = center.labels().iter().map(|x| ring.index_of(x).expect("label")).collect();
    let ti = ring.index_of(r.tinv()).expect("tinv");
    for m in monomials_up_to(ring.nvars(), cutoff) {
        if !gb.is_standard(&m) {
            continue;
        }
        let xdeg: i64 = xs.iter().map(|&v| i64::from(m.exponent(v))).sum();
        let w = xdeg - i64::from(m.exponent(ti));
        if w >= 1 && xdeg < w {
            generated = false;
        }
    }

    let egb = elimination_basis(r)?;
    let mut image = Vec::new();
    let mut reduced_ok = true;
    for x in center.labels() {
        let big = egb.ring();
        let p = &Polynomial::named(big, r.tinv()) * &Polynomial::named(big, x);
        match reduce_to_ambient(&egb, &p, ambient)? {
            Some(q) => image.push(q),
            None => reduced_ok = false,
        }
    }
    let image_ideal = Ideal::new(ambient, image)?;
    let weight_one_is_ideal = reduced_ok && image_ideal.equals(&center.ideal(), MonomialOrder::DegRevLex)?;

    let sat = j.saturate(&tv)?;
    let weight_one_torsion = sat
        .reduced_basis()
        .into_iter()
        .filter(|g| {
            let w: Vec<i64> = g.weighted_degrees(&pi0_weights(a, &ring));
            w.iter().all(|&k| k == 1) && !gb.contains(g).unwrap_or(true)
        })
        .map(|g| g.to_string())
        .collect();

    Ok(ReesStructure {
        nonpositive_free,
        generated_in_weight_one: generated,
        weight_one_image: image_ideal.reduced_basis().iter().map(|g| g.to_string()).collect(),
        weight_one_is_ideal,
        weight_one_torsion,
    })
}

/// Weights of the π₀ ring variables (ambient variables have weight 0).
fn pi0_weights(a: &SemifreeCDGA, ring: &Ring) -> Vec<i64> {
    ring.names().iter().map(|n| a.generator(n).map_or(0, |g| g.weight)).collect()
}

fn monomials_up_to(nvars: usize, maxdeg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; nvars];
    fn rec(i: usize, rem: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == e.len() {
            out.push(Monomial::from_exponents(e.clone()));
            return;
        }
        for k in 0..=rem {
            e[i] = k;
            rec(i + 1, rem - k, e, out);
        }
        e[i] = 0;
    }
    rec(0, maxdeg, &mut e, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightComponent {
    pub weight: i64,
    pub cutoff: u32,
    /// (hdeg, internal degree) -> number of monomials.
    pub chain_dims: BTreeMap<(u32, u32), usize>,
    pub homology: HomologyTable,
    /// For weight ≤ 0: whether homology is Q[z]·t^{weight} in every certified
    /// degree (H₀ of the right size, nothing above).
    pub free_on_tinv_power: Option<bool>,
}

pub fn weight_component(r: &ReesPresentation, n: i64, cutoff: u32) -> Result<WeightComponent, DgError> {
    let a = r.cdga();
    let piece = weight_piece(a, n, cutoff)?;
    let chain_dims = piece.by_slot.iter().map(|(k, v)| (*k, v.len())).collect();
    let kmax = r.center().len() as u32;
    let homology = homology_table(a, 0..=kmax, n..=n, cutoff)?;
    let free_on_tinv_power = (n <= 0).then(|| {
        // homogenization adds one ambient variable
        let m = (r.center().ambient().nvars() + usize::from(homology.homogenized)) as u64;
        (0..=homology.certified_band).all(|d| {
            let expect = binomial(m + u64::from(d) - 1, u64::from(d)) as usize;
            let expect = if m == 0 { usize::from(d == 0) } else { expect };
            homology.get(0, n, d) == expect && (1..=kmax).all(|k| homology.get(k, n, d) == 0)
        })
    });
    Ok(WeightComponent {
        weight: n,
        cutoff,
        chain_dims,
        homology,
        free_on_tinv_power,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Fil_n(O_Y) = (R^ext)_n: weight-n generators and their image in O_Y.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationPiece {
    pub n: u32,
    /// Monomials x^b with |b| = n generating the weight-n part over weight 0.
    pub generators: Vec<Polynomial>,
    /// Image of t⁻ⁿ·(weight n) in O_Y.
    pub image: Ideal,
    /// Whether the image equals I^n.
    pub image_is_power: bool,
}

pub fn adic_filtration(r: &ReesPresentation, n: u32) -> Result<FiltrationPiece, PolyError> {
    let center = r.center();
    let ambient = center.ambient();
    let ring = r.pi0().ring().clone();
    let xs: Vec<usize> = center.labels().iter().map(|x| ring.index_of(x).expect("label")).collect();
    let mut generators = Vec::new();
    for m in monomials_up_to(xs.len(), n) {
        if m.degree() != n {
            continue;
        }
        let mut e = vec![0u32; ring.nvars()];
        for (k, &v) in xs.iter().enumerate() {
            e[v] = m.exponent(k);
        }
        generators.push(Polynomial::monomial(&ring, Monomial::from_exponents(e), Rational::one()));
    }
    generators.sort_by(|a, b| b.to_string().cmp(&a.to_string()));
    let egb = elimination_basis(r)?;
    let tv = Polynomial::named(&ring, r.tinv()).pow(n);
    let mut image = Vec::new();
    let mut ok = true;
    for g in &generators {
        match reduce_to_ambient(&egb, &(&tv * g), ambient)? {
            Some(q) => image.push(q),
            None => ok = false,
        }
    }
    let image = Ideal::new(ambient, image)?;
    let image_is_power = ok && image.equals(&center.ideal().power(n), MonomialOrder::DegRevLex)?;
    Ok(FiltrationPiece {
        n,
        generators,
        image,
        image_is_power,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityCheck {
    pub presentation_equal: bool,
    pub pi0_equal: bool,
}

/// R^ext of `a ∪ b` against the tensor product of R^ext(a) and R^ext(b) over Q[z][t⁻¹].
pub fn check_multiplicativity(a: &CenterPresentation, b: &CenterPresentation) -> Result<MultiplicativityCheck, crate::Error> {
    let joint = rees_extended(&a.union(b)?);
    let ra = rees_extended(a);
    let rb = rees_extended(b);
    if ra.tinv() != rb.tinv() || ra.tinv() != joint.tinv() {
        return Err(DgError::BaseMismatch.into());
    }
    let (t, _) = ra.cdga().derived_tensor_over(rb.cdga(), &[ra.tinv()])?;
    let pj = joint.pi0();
    let pt = t.pi0();
    let pi0_equal = pj.ring() == pt.ring() && pj.basis() == pt.basis();
    Ok(MultiplicativityCheck {
        presentation_equal: &t == joint.cdga(),
        pi0_equal,
    })
}
