use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};

use super::graded::{gc_mul, gc_substitute, grading, leibniz, normalize, transport};
use super::{DgError, GeneratorSpec, Pi0Presentation};
use crate::polycore::{
    fresh_name, parse_with_product, ExprError, Ideal, Monomial, Polynomial, Rational, Ring,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct VarInfo {
    pub hdeg: u32,
    pub weight: i64,
    pub deg: u32,
    pub odd: bool,
}

/// Semifree graded-commutative dg-algebra over `Q[base]`.
///
/// Variables of the underlying polynomial storage are the base variables
/// followed by the generators, in declaration order.
#[derive(Clone, PartialEq)]
pub struct SemifreeCDGA {
    base: Ring,
    gens: Vec<GeneratorSpec>,
    total: Ring,
    diff: Vec<Polynomial>,
    info: Vec<VarInfo>,
    odd: Vec<bool>,
}

fn total_ring(base: &Ring, gens: &[GeneratorSpec]) -> Result<Ring, DgError> {
    let mut seen = HashSet::new();
    for n in base.names().iter().chain(gens.iter().map(|g| &g.name)) {
        if !seen.insert(n.as_str()) {
            return Err(DgError::DuplicateName(n.clone()));
        }
    }
    let names: Vec<&str> = gens.iter().map(|g| g.name.as_str()).collect();
    Ok(base.extended(&names))
}

/// Validate and build an algebra. Differentials may live in any ring whose
/// variable names belong to the algebra; they are moved over by name.
pub fn make_cdga(
    base: &Ring,
    gens: Vec<GeneratorSpec>,
    diff: Vec<Polynomial>,
) -> Result<SemifreeCDGA, DgError> {
    if gens.len() != diff.len() {
        return Err(DgError::ArityMismatch);
    }
    let total = total_ring(base, &gens)?;
    let nb = base.nvars();
    let n = total.nvars();
    let mut odd = vec![false; n];
    for (i, g) in gens.iter().enumerate() {
        odd[nb + i] = g.is_odd();
    }
    let mut dtotal = vec![Polynomial::zero(&total); n];
    for (i, p) in diff.iter().enumerate() {
        dtotal[nb + i] = normalize(&transport(p, &total, &odd)?, &odd);
    }

    let hdeg: Vec<u32> = (0..n).map(|v| if v < nb { 0 } else { gens[v - nb].hdeg }).collect();
    let weight: Vec<i64> = (0..n).map(|v| if v < nb { 0 } else { gens[v - nb].weight }).collect();
    let mut deg: Vec<u32> = vec![1; n];

    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| gens[i].hdeg);
    let mut gens = gens;
    for i in order {
        let v = nb + i;
        let g = &gens[i];
        let d = &dtotal[v];
        for (m, _) in d.terms() {
            if grading(m, &hdeg) != i64::from(g.hdeg) - 1 {
                return Err(DgError::DegreeMismatch(g.name.clone()));
            }
            if grading(m, &weight) != g.weight {
                return Err(DgError::WeightMismatch(g.name.clone()));
            }
        }
        let top = d.terms().map(|(m, _)| grading(m, &deg) as u32).max();
        deg[v] = match (g.deg, g.hdeg) {
            (Some(k), _) => k,
            (None, 0) => 1,
            (None, _) => top.unwrap_or(0),
        };
        gens[i].deg = Some(deg[v]);
    }

    let info: Vec<VarInfo> = (0..n)
        .map(|v| VarInfo {
            hdeg: hdeg[v],
            weight: weight[v],
            deg: deg[v],
            odd: odd[v],
        })
        .collect();
    let a = SemifreeCDGA {
        base: base.clone(),
        gens,
        total,
        diff: dtotal,
        info,
        odd,
    };
    for (i, g) in a.gens.iter().enumerate() {
        let dd = a.d(&a.diff[nb + i]);
        if !dd.is_zero() {
            return Err(DgError::DSquareNonzero {
                generator: g.name.clone(),
                residue: dd.to_string(),
            });
        }
    }
    Ok(a)
}

impl SemifreeCDGA {
    /// The base ring with no generators.
    pub fn base_algebra(base: &Ring) -> SemifreeCDGA {
        make_cdga(base, Vec::new(), Vec::new()).expect("no generators to validate")
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn gens(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    /// Base variables followed by generators.
    pub fn total_ring(&self) -> &Ring {
        &self.total
    }

    pub(crate) fn info(&self) -> &[VarInfo] {
        &self.info
    }

    pub(crate) fn odd(&self) -> &[bool] {
        &self.odd
    }

    pub fn generator(&self, name: &str) -> Option<&GeneratorSpec> {
        self.gens.iter().find(|g| g.name == name)
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Internal degree of the named variable (base variables have degree 1).
    pub fn deg_of(&self, name: &str) -> Option<u32> {
        self.total.index_of(name).map(|v| self.info[v].deg)
    }

    /// Differential of a generator, as an element of the algebra.
    pub fn diff_of(&self, name: &str) -> Option<&Polynomial> {
        self.total.index_of(name).map(|v| &self.diff[v])
    }

    pub fn var(&self, name: &str) -> Result<Polynomial, DgError> {
        self.total
            .index_of(name)
            .map(|v| Polynomial::var(&self.total, v))
            .ok_or_else(|| DgError::UnknownGenerator(name.to_string()))
    }

    /// Parse an element using the graded-commutative product.
    pub fn parse(&self, text: &str) -> Result<Polynomial, ExprError> {
        let odd = self.odd.clone();
        let p = parse_with_product(text, &self.total, &move |a, b| gc_mul(a, b, &odd))?;
        Ok(normalize(&p, &self.odd))
    }

    /// Move an element expressed over a subset of the variable names into this algebra.
    pub fn import(&self, p: &Polynomial) -> Result<Polynomial, DgError> {
        Ok(normalize(&transport(p, &self.total, &self.odd)?, &self.odd))
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        gc_mul(a, b, &self.odd)
    }

    pub fn d(&self, p: &Polynomial) -> Polynomial {
        leibniz(p, &self.diff, &self.odd)
    }

    pub fn hdeg_of(&self, m: &Monomial) -> u32 {
        m.support().map(|v| m.exponent(v) * self.info[v].hdeg).sum()
    }

    pub fn weight_of(&self, m: &Monomial) -> i64 {
        m.support().map(|v| i64::from(m.exponent(v)) * self.info[v].weight).sum()
    }

    pub fn deg_of_monomial(&self, m: &Monomial) -> u32 {
        m.support().map(|v| m.exponent(v) * self.info[v].deg).sum()
    }

    /// Largest internal degree among all differential terms, `None` if d = 0.
    pub fn max_image_degree(&self) -> Option<u32> {
        self.diff
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| self.deg_of_monomial(m)))
            .max()
    }

    /// Every differential is homogeneous of its generator's internal degree.
    pub fn is_internally_homogeneous(&self) -> bool {
        let nb = self.base.nvars();
        self.gens.iter().enumerate().all(|(i, g)| {
            let d = g.deg.unwrap_or(0);
            self.diff[nb + i].terms().all(|(m, _)| self.deg_of_monomial(m) == d)
        })
    }

    pub fn num_hdeg0_gens(&self) -> usize {
        self.gens.iter().filter(|g| g.hdeg == 0).count()
    }

    fn rebuild(&self, gens: Vec<GeneratorSpec>, diff: Vec<Polynomial>) -> Result<SemifreeCDGA, DgError> {
        make_cdga(&self.base, gens, diff)
    }

    fn own_diffs(&self) -> Vec<Polynomial> {
        let nb = self.base.nvars();
        self.diff[nb..].to_vec()
    }

    /// Stable sort of generators by homological degree.
    pub fn canonicalized(&self) -> SemifreeCDGA {
        let mut idx: Vec<usize> = (0..self.gens.len()).collect();
        idx.sort_by_key(|&i| self.gens[i].hdeg);
        let d = self.own_diffs();
        self.rebuild(
            idx.iter().map(|&i| self.gens[i].clone()).collect(),
            idx.iter().map(|&i| d[i].clone()).collect(),
        )
        .expect("reordering preserves validity")
    }

    /// Insert generators keeping the list sorted by homological degree.
    fn with_inserted(&self, new: Vec<(GeneratorSpec, Polynomial)>) -> Result<SemifreeCDGA, DgError> {
        let mut gens = self.gens.clone();
        let mut diffs = self.own_diffs();
        for (g, p) in new {
            let pos = gens.iter().rposition(|h| h.hdeg <= g.hdeg).map_or(0, |k| k + 1);
            gens.insert(pos, g);
            diffs.insert(pos, p);
        }
        self.rebuild(gens, diffs)
    }

    /// Adjoin hdeg-1 cells killing the given hdeg-0 elements.
    pub fn derived_quotient_named(&self, elems: &[(&str, Polynomial, i64)]) -> Result<SemifreeCDGA, DgError> {
        let mut new = Vec::new();
        for (name, p, w) in elems {
            let p = self.import(p)?;
            for (m, _) in p.terms() {
                if self.hdeg_of(m) != 0 {
                    return Err(DgError::NotDegreeZero(name.to_string()));
                }
                if self.weight_of(m) != *w {
                    return Err(DgError::WeightMismatch(name.to_string()));
                }
            }
            new.push((GeneratorSpec::new(*name, 1, *w), p));
        }
        self.with_inserted(new)
    }

    /// As [`Self::derived_quotient_named`] with cells named `e1, e2, ...`.
    pub fn derived_quotient(&self, elems: &[(Polynomial, i64)]) -> Result<SemifreeCDGA, DgError> {
        let mut ring = self.total.clone();
        let mut names = Vec::new();
        for k in 1..=elems.len() {
            let n = fresh_name(&ring, &format!("e{k}"));
            ring = ring.extended(&[n.as_str()]);
            names.push(n);
        }
        let named: Vec<(&str, Polynomial, i64)> = names
            .iter()
            .zip(elems)
            .map(|(n, (p, w))| (n.as_str(), p.clone(), *w))
            .collect();
        self.derived_quotient_named(&named)
    }

    /// Tensor product over the common base. Colliding generator names of
    /// `other` get numeric suffixes; the renames are returned.
    pub fn derived_tensor(&self, other: &SemifreeCDGA) -> Result<(SemifreeCDGA, Vec<(String, String)>), DgError> {
        self.derived_tensor_over(other, &[])
    }

    /// Tensor product over the base extended by the `shared` hdeg-0
    /// generators, which must be declared identically with d = 0 on both sides.
    pub fn derived_tensor_over(
        &self,
        other: &SemifreeCDGA,
        shared: &[&str],
    ) -> Result<(SemifreeCDGA, Vec<(String, String)>), DgError> {
        if self.base != other.base {
            return Err(DgError::BaseMismatch);
        }
        for s in shared {
            let (a, b) = match (self.generator(s), other.generator(s)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(DgError::UnknownGenerator(s.to_string())),
            };
            let zero = |x: &SemifreeCDGA| x.diff_of(s).is_some_and(|p| p.is_zero());
            if a != b || a.hdeg != 0 || !zero(self) || !zero(other) {
                return Err(DgError::BaseMismatch);
            }
        }
        let mut used: HashSet<String> = self.total.names().iter().cloned().collect();
        let mut renames = Vec::new();
        let mut other_names = Vec::new();
        for g in &other.gens {
            let mut name = g.name.clone();
            if !shared.contains(&name.as_str()) && used.contains(&name) {
                let mut k = 2;
                while used.contains(&format!("{}_{k}", g.name)) || other.generator(&format!("{}_{k}", g.name)).is_some() {
                    k += 1;
                }
                name = format!("{}_{k}", g.name);
                renames.push((g.name.clone(), name.clone()));
            }
            used.insert(name.clone());
            other_names.push(name);
        }
        let renamed_ring = other.base.extended(&other_names);
        let mut gens = self.gens.clone();
        let mut diffs = self.own_diffs();
        let nb = other.base.nvars();
        for (i, g) in other.gens.iter().enumerate() {
            if shared.contains(&g.name.as_str()) {
                continue;
            }
            let mut g = g.clone();
            g.name = other_names[i].clone();
            gens.push(g);
            let p = &other.diff[nb + i];
            diffs.push(Polynomial::from_terms(
                &renamed_ring,
                p.terms().map(|(m, c)| (m.clone(), c.clone())),
            ));
        }
        let mut idx: Vec<usize> = (0..gens.len()).collect();
        idx.sort_by_key(|&i| gens[i].hdeg);
        let a = self.rebuild(
            idx.iter().map(|&i| gens[i].clone()).collect(),
            idx.iter().map(|&i| diffs[i].clone()).collect(),
        )?;
        Ok((a, renames))
    }

    /// Substitute base variables or generators. A generator whose image does
    /// not involve it is removed; its image must commute with d.
    pub fn base_change(&self, subst: &[(&str, Polynomial)]) -> Result<SemifreeCDGA, DgError> {
        let n = self.total.nvars();
        let nb = self.base.nvars();
        let mut images: Vec<Polynomial> = (0..n).map(|v| Polynomial::var(&self.total, v)).collect();
        let mut removed = vec![false; n];
        for (name, img) in subst {
            let v = self
                .total
                .index_of(name)
                .ok_or_else(|| DgError::UnknownGenerator(name.to_string()))?;
            let img = self.import(img)?;
            for (m, _) in img.terms() {
                if self.hdeg_of(m) != self.info[v].hdeg {
                    return Err(DgError::DegreeMismatch(name.to_string()));
                }
                if self.weight_of(m) != self.info[v].weight {
                    return Err(DgError::WeightMismatch(name.to_string()));
                }
            }
            if v >= nb {
                if img.involves(v) {
                    if img != Polynomial::var(&self.total, v) {
                        return Err(DgError::InvalidSubstitution(format!(
                            "image of `{name}` involves `{name}`"
                        )));
                    }
                } else {
                    removed[v] = true;
                }
            }
            images[v] = img;
        }
        for (v, img) in images.iter().enumerate() {
            if let Some(u) = (0..n).find(|&u| removed[u] && img.involves(u)) {
                return Err(DgError::InvalidSubstitution(format!(
                    "image of `{}` involves removed `{}`",
                    self.total.name(v),
                    self.total.name(u)
                )));
            }
        }
        let mut gens = Vec::new();
        let mut diffs = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            if !removed[nb + i] {
                gens.push(g.clone());
                diffs.push(gc_substitute(&self.diff[nb + i], &images, &self.total, &self.odd));
            }
        }
        let out = self.rebuild(gens, diffs)?;
        for v in nb..n {
            if removed[v] && self.info[v].hdeg > 0 {
                let lhs = out.d(&out.import(&images[v])?);
                let rhs = out.import(&gc_substitute(&self.diff[v], &images, &self.total, &self.odd))?;
                if lhs != rhs {
                    return Err(DgError::InvalidSubstitution(format!(
                        "image of `{}` does not commute with d",
                        self.total.name(v)
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Replace the base by `new_base`, sending base variable `i` to `images[i]`
    /// (polynomials over `new_base`).
    pub fn change_base(&self, new_base: &Ring, images: &[Polynomial]) -> Result<SemifreeCDGA, DgError> {
        if images.len() != self.base.nvars() {
            return Err(DgError::ArityMismatch);
        }
        let target = total_ring(new_base, &self.gens)?;
        let mut todd = vec![false; target.nvars()];
        for (i, g) in self.gens.iter().enumerate() {
            todd[new_base.nvars() + i] = g.is_odd();
        }
        let mut imgs = Vec::with_capacity(self.total.nvars());
        for p in images {
            imgs.push(p.to_ring(&target)?);
        }
        for i in 0..self.gens.len() {
            imgs.push(Polynomial::var(&target, new_base.nvars() + i));
        }
        let nb = self.base.nvars();
        let diffs = (0..self.gens.len())
            .map(|i| gc_substitute(&self.diff[nb + i], &imgs, &target, &todd))
            .collect();
        make_cdga(new_base, self.gens.clone(), diffs)
    }

    /// Invert an hdeg-0 variable `g`: adjoin `inv` and a cell `cell` with
    /// d(cell) = g·inv − 1.
    pub fn localize_named(&self, g: &str, inv: &str, cell: &str) -> Result<SemifreeCDGA, DgError> {
        let v = self
            .total
            .index_of(g)
            .ok_or_else(|| DgError::UnknownGenerator(g.to_string()))?;
        if self.info[v].hdeg != 0 {
            return Err(DgError::NotDegreeZero(g.to_string()));
        }
        let big = self.total.extended(&[inv]);
        let rel = &(&Polynomial::var(&big, v) * &Polynomial::named(&big, inv)) - &Polynomial::one(&big);
        self.with_inserted(vec![
            (
                GeneratorSpec::new(inv, 0, -self.info[v].weight).with_deg(1),
                Polynomial::zero(&self.total),
            ),
            (GeneratorSpec::new(cell, 1, 0), rel),
        ])
    }

    /// [`Self::localize_named`] with default names: `tinv` inverts to `t`,
    /// anything else `g` to `g_inv`; the cell is `eta_g`.
    pub fn localize(&self, g: &str) -> Result<SemifreeCDGA, DgError> {
        let inv = if g == "tinv" { "t".to_string() } else { format!("{g}_inv") };
        let inv = fresh_name(&self.total, &inv);
        let ring = self.total.extended(&[inv.as_str()]);
        let cell = fresh_name(&ring, &format!("eta_{g}"));
        self.localize_named(g, &inv, &cell)
    }

    /// Remove a contractible pair (e, s) with d(e) = c·s − p, substituting
    /// s ↦ p/c everywhere else.
    pub fn cancel_cell(&self, e: &str, s: &str) -> Result<SemifreeCDGA, DgError> {
        let fail = |reason: &str| DgError::CellNotCancellable {
            cell: e.to_string(),
            reason: reason.to_string(),
        };
        let nb = self.base.nvars();
        let ve = self.total.index_of(e).ok_or_else(|| DgError::UnknownGenerator(e.to_string()))?;
        let vs = self.total.index_of(s).ok_or_else(|| DgError::UnknownGenerator(s.to_string()))?;
        if ve < nb || self.info[ve].hdeg != 1 {
            return Err(fail("not a generator of homological degree 1"));
        }
        if vs < nb || self.info[vs].hdeg != 0 {
            return Err(fail("partner is not a free generator of homological degree 0"));
        }
        let de = &self.diff[ve];
        let s_mono = Monomial::var(self.total.nvars(), vs);
        let mut c = Rational::zero();
        let mut rest = Vec::new();
        for (m, k) in de.terms() {
            if *m == s_mono {
                c = k.clone();
            } else if m.exponent(vs) > 0 {
                return Err(fail("partner occurs non-linearly"));
            } else {
                rest.push((m.clone(), k.clone()));
            }
        }
        if c.is_zero() {
            return Err(fail("partner does not occur linearly"));
        }
        for (v, p) in self.diff.iter().enumerate() {
            if v != ve && p.involves(ve) {
                return Err(fail("cell occurs in another differential"));
            }
        }
        let minus_inv = -(Rational::one() / c);
        let p = Polynomial::from_terms(&self.total, rest).scale(&minus_inv);
        let mut images: Vec<Polynomial> = (0..self.total.nvars()).map(|v| Polynomial::var(&self.total, v)).collect();
        images[vs] = p;
        let mut gens = Vec::new();
        let mut diffs = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            if nb + i == ve || nb + i == vs {
                continue;
            }
            gens.push(g.clone());
            diffs.push(gc_substitute(&self.diff[nb + i], &images, &self.total, &self.odd));
        }
        self.rebuild(gens, diffs)
    }

    /// Replace generator `g` by `c·g`.
    pub fn rescale_generator(&self, name: &str, c: &Rational) -> Result<SemifreeCDGA, DgError> {
        let nb = self.base.nvars();
        let v = self
            .total
            .index_of(name)
            .filter(|&v| v >= nb)
            .ok_or_else(|| DgError::UnknownGenerator(name.to_string()))?;
        if c.is_zero() {
            return Err(DgError::InvalidSubstitution("zero scale".into()));
        }
        let mut images: Vec<Polynomial> = (0..self.total.nvars()).map(|u| Polynomial::var(&self.total, u)).collect();
        images[v] = images[v].scale(&(Rational::one() / c));
        let diffs = (nb..self.total.nvars())
            .map(|u| {
                if u == v {
                    self.diff[u].scale(c)
                } else {
                    gc_substitute(&self.diff[u], &images, &self.total, &self.odd)
                }
            })
            .collect();
        self.rebuild(self.gens.clone(), diffs)
    }

    /// Rename generators; names not listed keep their value.
    pub fn rename(&self, map: &[(&str, &str)]) -> Result<SemifreeCDGA, DgError> {
        let nb = self.base.nvars();
        let gens: Vec<GeneratorSpec> = self
            .gens
            .iter()
            .map(|g| {
                let mut g = g.clone();
                if let Some((_, new)) = map.iter().find(|(old, _)| *old == g.name) {
                    g.name = new.to_string();
                }
                g
            })
            .collect();
        let ring = total_ring(&self.base, &gens)?;
        let diffs = (0..gens.len())
            .map(|i| {
                Polynomial::from_terms(&ring, self.diff[nb + i].terms().map(|(m, c)| (m.clone(), c.clone())))
            })
            .collect();
        self.rebuild(gens, diffs)
    }

    /// Classical truncation: hdeg-0 variables modulo the images of hdeg-1 cells.
    pub fn pi0(&self) -> Pi0Presentation {
        let names: Vec<&str> = self
            .gens
            .iter()
            .filter(|g| g.hdeg == 0)
            .map(|g| g.name.as_str())
            .collect();
        let ring = self.base.extended(&names);
        let nb = self.base.nvars();
        let rels: Vec<Polynomial> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.hdeg == 1)
            .map(|(i, _)| self.diff[nb + i].to_ring(&ring).expect("hdeg-0 image"))
            .collect();
        let ideal = Ideal::new(&ring, rels).expect("same ring");
        Pi0Presentation::new(ideal)
    }

    /// Homogenize the internal grading with a fresh base variable `h` if any
    /// differential is inhomogeneous. Returns the flag alongside.
    pub fn homogenized(&self) -> (SemifreeCDGA, bool) {
        if self.is_internally_homogeneous() {
            return (self.clone(), false);
        }
        let h = fresh_name(&self.total, "h");
        let base = self.base.extended(&[h.as_str()]);
        let mut gens = self.gens.clone();
        let target = total_ring(&base, &gens).expect("fresh name");
        let nb = base.nvars();
        let hv = nb - 1;
        let mut deg = vec![1u32; target.nvars()];
        let mut todd = vec![false; target.nvars()];
        for (i, g) in gens.iter().enumerate() {
            todd[nb + i] = g.is_odd();
        }
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.sort_by_key(|&i| gens[i].hdeg);
        let mut diffs = vec![Polynomial::zero(&target); gens.len()];
        let onb = self.base.nvars();
        for i in order {
            let p = transport(&self.diff[onb + i], &target, &todd).expect("superset ring");
            let tdeg = |m: &Monomial| -> u32 { m.support().map(|v| m.exponent(v) * deg[v]).sum() };
            let top = p.terms().map(|(m, _)| tdeg(m)).max().unwrap_or(0);
            let declared = if gens[i].hdeg == 0 { gens[i].deg.unwrap_or(1) } else { gens[i].deg.unwrap_or(0) };
            let dg = if p.is_zero() { declared } else { declared.max(top) };
            let padded = Polynomial::from_terms(
                &target,
                p.terms().map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e[hv] += dg - tdeg(m);
                    (Monomial::from_exponents(e), c.clone())
                }),
            );
            deg[nb + i] = dg;
            gens[i].deg = Some(dg);
            diffs[i] = padded;
        }
        let a = make_cdga(&base, gens, diffs).expect("homogenization preserves validity");
        (a, true)
    }

    /// One line per generator: `name (hdeg, weight, deg): d = ...`.
    pub fn describe(&self) -> String {
        let nb = self.base.nvars();
        let mut out = format!("base {}\n", self.base);
        for (i, g) in self.gens.iter().enumerate() {
            out.push_str(&format!(
                "{} ({}, {}, {}): d = {}\n",
                g.name,
                g.hdeg,
                g.weight,
                g.deg.unwrap_or(0),
                self.diff[nb + i]
            ));
        }
        out
    }
}

impl fmt::Debug for SemifreeCDGA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Display for SemifreeCDGA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
