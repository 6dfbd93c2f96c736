//! Derived blow-up charts of a presented closed immersion, the exceptional
//! divisor, chart transitions, excessive squares and the blow-up description
//! of the deformation space.

use crate::center::CenterPresentation;
use crate::dgalg::{homology_table, DgError, DgMap, GeneratorSpec, HomologyTable, SemifreeCDGA, make_cdga};
use crate::polycore::{fresh_name, GroebnerBasis, Ideal, MonomialOrder, PolyError, Polynomial, Ring, RingMap};
use crate::rees::rees_extended;
use crate::Error;

/// Chart j of the blow-up: `Q[z][y_i : i ≠ j]⟨e_i : i ≠ j⟩`,
/// `d e_i = y_i·f_j − f_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPresentation {
    /// 1-based.
    pub index: usize,
    pub cdga: SemifreeCDGA,
    pub exceptional_equation: Polynomial,
    /// (i, name of y_i) for i ≠ j, 1-based.
    pub chart_vars: Vec<(usize, String)>,
    /// Before cancelling (e_j, s): `d e_i = y_i·s − f_i`, `d e_j = s − f_j`.
    pub precursor: SemifreeCDGA,
    /// The precursor maps into the Rees algebra localized at x_j by a chain map.
    pub precursor_maps_to_rees: bool,
    /// π₀ of the chart equals π₀ of the precursor with s eliminated.
    pub pi0_preserved: bool,
}

impl ChartPresentation {
    pub fn var_name(&self, i: usize) -> Option<&str> {
        self.chart_vars.iter().find(|(k, _)| *k == i).map(|(_, n)| n.as_str())
    }
}

fn chart_precursor(center: &CenterPresentation, j: usize) -> (SemifreeCDGA, String) {
    let n = center.len();
    let base = center.ambient();
    let s = fresh_name(&center.all_names(), "s");
    let ys: Vec<(usize, &str)> = (1..=n).filter(|&i| i != j).map(|i| (i, center.chart_vars()[i - 1].as_str())).collect();
    let mut gens: Vec<GeneratorSpec> = ys.iter().map(|(_, y)| GeneratorSpec::new(*y, 0, 0)).collect();
    gens.push(GeneratorSpec::new(&s, 0, 0));
    gens.extend(center.cells().iter().map(|e| GeneratorSpec::new(e, 1, 0)));
    let names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    let total = base.extended(&names);
    let sv = Polynomial::named(&total, &s);
    let mut diffs = vec![Polynomial::zero(&total); ys.len() + 1];
    for (i, f) in center.gens().iter().enumerate() {
        let f = f.to_ring(&total).expect("ambient");
        let lead = if i + 1 == j {
            sv.clone()
        } else {
            &Polynomial::named(&total, &center.chart_vars()[i]) * &sv
        };
        diffs.push(&lead - &f);
    }
    let a = make_cdga(base, gens, diffs).expect("chart precursor is valid");
    (a, s)
}

/// y_i ↦ x_i·x_j⁻¹, s ↦ t⁻¹·x_j, e_i ↦ e_i + x_i·t⁻¹·η (i ≠ j), into R^ext[x_j⁻¹].
fn precursor_chain_map(center: &CenterPresentation, j: usize, pre: &SemifreeCDGA, s: &str) -> Result<bool, DgError> {
    let r = rees_extended(center);
    let a = r.cdga();
    let xj = &center.labels()[j - 1];
    let inv = fresh_name(a.total_ring(), &format!("{xj}_inv"));
    let cell = fresh_name(&a.total_ring().extended(&[inv.as_str()]), "eta");
    let loc = a.localize_named(xj, &inv, &cell)?;
    let ring = loc.total_ring();
    let v = |n: &str| Polynomial::named(ring, n);
    let mut images = vec![(s.to_string(), &v(r.tinv()) * &v(xj))];
    for i in (1..=center.len()).filter(|&i| i != j) {
        let x = &center.labels()[i - 1];
        images.push((center.chart_vars()[i - 1].clone(), &v(x) * &v(&inv)));
        let e = &center.cells()[i - 1];
        images.push((e.clone(), &v(e) + &(&(&v(x) * &v(r.tinv())) * &v(&cell))));
    }
    let borrowed: Vec<(&str, Polynomial)> = images.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    let map = DgMap::new(pre, &loc, &borrowed)?;
    Ok(map.check_chain_map().is_ok())
}

fn build_chart(center: &CenterPresentation, j: usize) -> Result<ChartPresentation, Error> {
    let (pre, s) = chart_precursor(center, j);
    let precursor_maps_to_rees = precursor_chain_map(center, j, &pre, &s)?;
    let cdga = pre.cancel_cell(&center.cells()[j - 1], &s)?;
    let p = pre.pi0();
    let keep: Vec<&str> = p.ring().names().iter().map(String::as_str).filter(|n| *n != s).collect();
    let eliminated = p.ideal().eliminate_names(&keep)?;
    let chart_pi0 = cdga.pi0();
    let pi0_preserved = eliminated.to_ring(chart_pi0.ring())?.equals(chart_pi0.ideal(), MonomialOrder::DegRevLex)?;
    let chart_vars = (1..=center.len())
        .filter(|&i| i != j)
        .map(|i| (i, center.chart_vars()[i - 1].clone()))
        .collect();
    Ok(ChartPresentation {
        index: j,
        cdga,
        exceptional_equation: center.gens()[j - 1].clone(),
        chart_vars,
        precursor: pre,
        precursor_maps_to_rees,
        pi0_preserved,
    })
}

/// One chart per generator; empty for the empty center.
pub fn blowup_charts(center: &CenterPresentation) -> Result<Vec<ChartPresentation>, Error> {
    (1..=center.len()).map(|j| build_chart(center, j)).collect()
}

/// Homology of a chart in weight 0, all homological degrees.
pub fn chart_homology(chart: &ChartPresentation, cutoff: u32) -> Result<HomologyTable, DgError> {
    let top = chart.chart_vars.len() as u32;
    homology_table(&chart.cdga, 0..=top, 0..=0, cutoff)
}

/// The chart modulo its exceptional equation (cell `eps`).
pub fn exceptional_divisor(chart: &ChartPresentation) -> Result<SemifreeCDGA, DgError> {
    let a = &chart.cdga;
    let eps = fresh_name(a.total_ring(), "eps");
    a.derived_quotient_named(&[(&eps, chart.exceptional_equation.clone(), 0)])
}

/// Map from chart k into chart j with y_k inverted.
#[derive(Debug, Clone)]
pub struct TransitionReport {
    pub from: usize,
    pub to: usize,
    /// Name of (y_k)⁻¹ in the target.
    pub inverse: String,
    /// (source variable, image) in source order.
    pub images: Vec<(String, String)>,
    /// `Ok` or the first variable on which d does not commute, with the defect.
    pub chain_map: Result<(), (String, String)>,
    /// Round trip through the reverse transition is the identity on π₀.
    pub pi0_round_trip: bool,
}

impl TransitionReport {
    pub fn holds(&self) -> bool {
        self.chain_map.is_ok() && self.pi0_round_trip
    }
}

fn chart_of(charts: &[ChartPresentation], j: usize) -> Result<&ChartPresentation, Error> {
    charts.iter().find(|c| c.index == j).ok_or(Error::IndexOutOfRange { index: j, len: charts.len() })
}

/// Transition from chart `k` to chart `j` (1-based):
/// y_i ↦ y_i·u, y_j ↦ u, e_i ↦ e_i − y_i·u·e_k + y_i·f_j·η, e_j ↦ −u·e_k + f_j·η,
/// where u = y_k⁻¹ and dη = y_k·u − 1.
pub fn transition(charts: &[ChartPresentation], k: usize, j: usize) -> Result<TransitionReport, Error> {
    let n = charts.len();
    if j == k || j == 0 || k == 0 || j > n || k > n {
        let index = if k == 0 || k > n { k } else { j };
        return Err(Error::IndexOutOfRange { index, len: n });
    }
    let src = chart_of(charts, k)?;
    let dst = chart_of(charts, j)?;
    let yk = dst.var_name(k).expect("chart variable").to_string();
    let u = fresh_name(dst.cdga.total_ring(), &format!("{yk}_inv"));
    let eta = fresh_name(&dst.cdga.total_ring().extended(&[u.as_str()]), "eta");
    let target = dst.cdga.localize_named(&yk, &u, &eta)?;
    let ring = target.total_ring();
    let v = |name: &str| Polynomial::named(ring, name);
    let fj = dst.exceptional_equation.to_ring(ring)?;
    let ek = cell_name(dst, k);
    let mut images: Vec<(String, Polynomial)> = Vec::new();
    for (i, y) in &src.chart_vars {
        let img = if *i == j { v(&u) } else { &v(dst.var_name(*i).expect("chart variable")) * &v(&u) };
        images.push((y.clone(), img));
    }
    for (i, _) in &src.chart_vars {
        let e = cell_name(src, *i);
        let yu = if *i == j { v(&u) } else { &v(dst.var_name(*i).expect("chart variable")) * &v(&u) };
        let coeff = if *i == j { fj.clone() } else { &v(dst.var_name(*i).expect("chart variable")) * &fj };
        let base = if *i == j { Polynomial::zero(ring) } else { v(&e) };
        let img = &(&base - &(&yu * &v(&ek))) + &(&coeff * &v(&eta));
        images.push((e, img));
    }
    let borrowed: Vec<(&str, Polynomial)> = images.iter().map(|(a, p)| (a.as_str(), p.clone())).collect();
    let map = DgMap::new(&src.cdga, &target, &borrowed)?;
    let chain_map = map.check_chain_map();
    let round = overlap_map(charts, k, j)?.then(&overlap_map(charts, j, k)?)?;
    let pi0_round_trip = round.is_identity_modulo(&overlap_basis(src)?)?;
    Ok(TransitionReport {
        from: k,
        to: j,
        inverse: u,
        images: images.iter().map(|(a, p)| (a.clone(), p.to_string())).collect(),
        chain_map,
        pi0_round_trip,
    })
}

fn cell_name(chart: &ChartPresentation, i: usize) -> String {
    // cells of a chart are listed in the order of their indices
    let pos = chart.chart_vars.iter().position(|(k, _)| *k == i).expect("cell index");
    chart.cdga.gens()[chart.chart_vars.len() + pos].name.clone()
}

fn inverse_name(chart: &ChartPresentation, y: &str) -> String {
    fresh_name(chart.cdga.total_ring(), &format!("{y}_inv"))
}

/// π₀ ring of a chart with every chart variable inverted.
fn overlap_ring(chart: &ChartPresentation) -> Ring {
    let p = chart.cdga.pi0();
    let invs: Vec<String> = chart.chart_vars.iter().map(|(_, y)| inverse_name(chart, y)).collect();
    p.ring().extended(&invs)
}

fn overlap_basis(chart: &ChartPresentation) -> Result<GroebnerBasis, PolyError> {
    let ring = overlap_ring(chart);
    let mut gens: Vec<Polynomial> = chart
        .cdga
        .pi0()
        .ideal()
        .gens()
        .iter()
        .map(|g| g.to_ring(&ring))
        .collect::<Result<_, _>>()?;
    for (_, y) in &chart.chart_vars {
        let inv = inverse_name(chart, y);
        gens.push(&(&Polynomial::named(&ring, y) * &Polynomial::named(&ring, &inv)) - &Polynomial::one(&ring));
    }
    Ok(Ideal::new(&ring, gens)?.groebner(MonomialOrder::DegRevLex))
}

/// π₀ map between fully localized charts, `k → i`, reading y_a^{(k)} = x_a/x_k.
fn overlap_map(charts: &[ChartPresentation], k: usize, i: usize) -> Result<RingMap, Error> {
    let src = chart_of(charts, k)?;
    let dst = chart_of(charts, i)?;
    let sring = overlap_ring(src);
    let tring = overlap_ring(dst);
    let v = |name: &str| Polynomial::named(&tring, name);
    // x_a/x_i in the target
    let ratio = |a: usize| -> Polynomial {
        if a == i {
            Polynomial::one(&tring)
        } else {
            v(dst.var_name(a).expect("chart variable"))
        }
    };
    let inv_ratio = |a: usize| -> Polynomial {
        if a == i {
            Polynomial::one(&tring)
        } else {
            v(&inverse_name(dst, dst.var_name(a).expect("chart variable")))
        }
    };
    let mut images = Vec::new();
    for (a, y) in &src.chart_vars {
        // x_a/x_k = (x_a/x_i)·(x_i/x_k)
        images.push((y.clone(), &ratio(*a) * &inv_ratio(k)));
        images.push((inverse_name(src, y), &ratio(k) * &inv_ratio(*a)));
    }
    let borrowed: Vec<(&str, Polynomial)> = images.iter().map(|(a, p)| (a.as_str(), p.clone())).collect();
    Ok(RingMap::new(&sring, &tring, &borrowed)?)
}

/// Cocycle identity on the triple overlap of charts i, j, k: the direct
/// map k → i agrees with k → j → i modulo the relations of chart i.
pub fn check_cocycle(charts: &[ChartPresentation], i: usize, j: usize, k: usize) -> Result<bool, Error> {
    let direct = overlap_map(charts, k, i)?;
    let via = overlap_map(charts, k, j)?.then(&overlap_map(charts, j, i)?)?;
    let gb = overlap_basis(chart_of(charts, i)?)?;
    for (a, b) in direct.images().iter().zip(via.images()) {
        if !gb.contains(&(a - b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A commutative square of closed immersions `X′ → Y′`, `X → Y` with
/// `Y = Spec Q[z]`, `Y′ = Spec Q[z′]/(g′)`, and `φ: Q[z] → Q[z′]` sending
/// each `f_i` to `Σ_k c_ik·f′_k` modulo `g′`.
#[derive(Debug, Clone)]
pub struct ExcessiveSquareData {
    pub source: CenterPresentation,
    pub target: CenterPresentation,
    pub ambient_relations: Vec<Polynomial>,
    pub ambient_map: RingMap,
    /// n × n′ coefficient matrix.
    pub coefficients: Vec<Vec<Polynomial>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcessiveReport {
    /// The declared coefficients satisfy φ(f_i) ≡ Σ c_ik·f′_k.
    pub well_formed: bool,
    pub classically_cartesian: bool,
    pub conormal_surjective: bool,
    pub excessive: bool,
    /// `None`: the conormal condition was decided exactly at π₀.
    pub certified_band: Option<u32>,
}

pub fn check_excessive(data: &ExcessiveSquareData) -> Result<ExcessiveReport, Error> {
    let ring = data.target.ambient();
    if data.ambient_map.target() != ring || data.ambient_map.source() != data.source.ambient() {
        return Err(PolyError::MixedRings.into());
    }
    let n = data.source.len();
    let m = data.target.len();
    if data.coefficients.len() != n || data.coefficients.iter().any(|row| row.len() != m) {
        return Err(DgError::ArityMismatch.into());
    }
    let g = Ideal::new(ring, data.ambient_relations.clone())?;
    let ggb = g.groebner(MonomialOrder::DegRevLex);
    let images: Vec<Polynomial> = data.source.gens().iter().map(|f| data.ambient_map.apply(f)).collect::<Result<_, _>>()?;
    let mut well_formed = true;
    for (img, row) in images.iter().zip(&data.coefficients) {
        let mut acc = img.clone();
        for (c, f) in row.iter().zip(data.target.gens()) {
            acc = &acc - &(&c.to_ring(ring)? * f);
        }
        well_formed &= ggb.contains(&acc)?;
    }
    let pulled = g.with(&images)?;
    let xprime = g.with(data.target.gens())?;
    let classically_cartesian = pulled.equals(&xprime, MonomialOrder::DegRevLex)?;
    // e^♯ on π₀ is given by the coefficient matrix; it is onto over O_{X′}
    // iff its maximal minors generate the unit ideal there.
    let conormal_surjective = if m == 0 {
        true
    } else {
        let mut minors = Vec::new();
        for rows in combinations(n, m) {
            let mat: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| data.coefficients[r].iter().map(|c| c.to_ring(ring)).collect::<Result<_, _>>())
                .collect::<Result<_, PolyError>>()?;
            minors.push(determinant(&mat, ring));
        }
        xprime.with(&minors)?.is_unit()
    };
    Ok(ExcessiveReport {
        well_formed,
        classically_cartesian,
        conormal_surjective,
        excessive: well_formed && classically_cartesian && conormal_surjective,
        certified_band: None,
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn determinant(m: &[Vec<Polynomial>], ring: &Ring) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(ring);
            for c in 0..n {
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][c] * &determinant(&minor, ring);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationChartCheck {
    /// 1-based chart index of the enlarged center; `n + 1` is the t⁻¹ chart.
    pub chart: usize,
    /// Equation removed from the chart (the transform of t⁻¹), if any.
    pub removed: Option<String>,
    pub pi0_isomorphic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationAsBlowup {
    pub charts: Vec<DeformationChartCheck>,
}

impl DeformationAsBlowup {
    pub fn holds(&self) -> bool {
        self.charts.iter().all(|c| c.pi0_isomorphic)
    }
}

/// Blow up `(f, t⁻¹)` in `Q[z][t⁻¹]`, remove the strict transform of
/// `t⁻¹ = 0` from each chart and compare π₀ with the matching localization of
/// π₀ of the extended Rees algebra.
pub fn verify_deformation_as_blowup(center: &CenterPresentation) -> Result<DeformationAsBlowup, Error> {
    if center.is_empty() {
        return Err(Error::EmptyCenter);
    }
    let n = center.len();
    let rees = rees_extended(center);
    let tinv = rees.tinv().to_string();
    let big_ring = center.ambient().extended(&[tinv.as_str()]);
    let mut gens: Vec<Polynomial> = center.gens().iter().map(|f| f.to_ring(&big_ring)).collect::<Result<_, _>>()?;
    gens.push(Polynomial::named(&big_ring, &tinv));
    let big = CenterPresentation::new(&big_ring, gens)?;
    let charts = blowup_charts(&big)?;
    let rp = rees.pi0();
    let mut out = Vec::new();

    // t⁻¹ chart: y_i = x_i
    let last = &charts[n];
    let lp = last.cdga.pi0();
    let rename: Vec<(&str, Polynomial)> = (1..=n)
        .map(|i| (center.labels()[i - 1].as_str(), Polynomial::named(lp.ring(), last.var_name(i).expect("chart variable"))))
        .collect();
    let to_chart = RingMap::new(rp.ring(), lp.ring(), &rename)?;
    let back: Vec<(&str, Polynomial)> = (1..=n)
        .map(|i| (last.var_name(i).expect("chart variable"), Polynomial::named(rp.ring(), &center.labels()[i - 1])))
        .collect();
    let from_chart = RingMap::new(lp.ring(), rp.ring(), &back)?;
    let ok = to_chart.respects(rp.ideal(), lp.basis())? && from_chart.respects(lp.ideal(), rp.basis())?;
    out.push(DeformationChartCheck {
        chart: n + 1,
        removed: None,
        pi0_isomorphic: ok,
    });

    for j in 1..=n {
        let chart = &charts[j - 1];
        let sigma = chart.var_name(n + 1).expect("chart variable for t⁻¹").to_string();
        let cp = chart.cdga.pi0();
        let sigma_inv = fresh_name(cp.ring(), &format!("{sigma}_inv"));
        let cring = cp.ring().extended(&[sigma_inv.as_str()]);
        let cv = |name: &str| Polynomial::named(&cring, name);
        let cideal = cp.ideal().to_ring(&cring)?.with(&[&(&cv(&sigma) * &cv(&sigma_inv)) - &Polynomial::one(&cring)])?;

        let xj = &center.labels()[j - 1];
        let xj_inv = fresh_name(rp.ring(), &format!("{xj}_inv"));
        let rring = rp.ring().extended(&[xj_inv.as_str()]);
        let rv = |name: &str| Polynomial::named(&rring, name);
        let rideal = rp.ideal().to_ring(&rring)?.with(&[&(&rv(xj) * &rv(&xj_inv)) - &Polynomial::one(&rring)])?;

        let mut fwd = vec![(xj.clone(), cv(&sigma_inv)), (xj_inv.clone(), cv(&sigma))];
        let mut bwd = vec![(sigma.clone(), rv(&xj_inv)), (sigma_inv.clone(), rv(xj))];
        for i in (1..=n).filter(|&i| i != j) {
            let x = &center.labels()[i - 1];
            let y = chart.var_name(i).expect("chart variable");
            fwd.push((x.clone(), &cv(y) * &cv(&sigma_inv)));
            bwd.push((y.to_string(), &rv(x) * &rv(&xj_inv)));
        }
        let fwd: Vec<(&str, Polynomial)> = fwd.iter().map(|(a, p)| (a.as_str(), p.clone())).collect();
        let bwd: Vec<(&str, Polynomial)> = bwd.iter().map(|(a, p)| (a.as_str(), p.clone())).collect();
        let a = RingMap::new(&rring, &cring, &fwd)?;
        let b = RingMap::new(&cring, &rring, &bwd)?;
        let rgb = rideal.groebner(MonomialOrder::DegRevLex);
        let cgb = cideal.groebner(MonomialOrder::DegRevLex);
        let ok = a.respects(&rideal, &cgb)?
            && b.respects(&cideal, &rgb)?
            && a.then(&b)?.is_identity_modulo(&rgb)?
            && b.then(&a)?.is_identity_modulo(&cgb)?;
        out.push(DeformationChartCheck {
            chart: j,
            removed: Some(sigma),
            pi0_isomorphic: ok,
        });
    }
    out.sort_by_key(|c| c.chart);
    Ok(DeformationAsBlowup { charts: out })
}
