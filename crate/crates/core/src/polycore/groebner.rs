//! Buchberger's algorithm with the coprime and chain criteria, producing
//! reduced Gröbner bases.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::rc::Rc;

use num_traits::{One, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::parse::parse_polynomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::{PolyError, Rational};

/// Reduced Gröbner basis: monic, sorted by increasing leading monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.basis.iter()).finish()
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Polynomial> {
        self.basis
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|p| p.leading_monomial(self.order).unwrap().clone())
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        if p.ring() != &self.ring {
            return Err(PolyError::MixedRings);
        }
        let work: Vec<Work> = self.basis.iter().map(|b| Work::from_poly(b, self.order)).collect();
        let r = reduce_full(Work::from_poly(p, self.order), &work, self.order);
        Ok(r.into_poly(&self.ring))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every polynomial of `gens` lies in the ideal.
    pub fn contains_all(&self, gens: &[Polynomial]) -> Result<bool, PolyError> {
        for g in gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monomials not divisible by any leading monomial, among `candidates`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.basis
            .iter()
            .all(|b| !b.leading_monomial(self.order).unwrap().divides(m))
    }
}

/// Storage for computed bases, consulted by [`buchberger`] when installed with
/// [`with_basis_store`]. Keys and values are canonical text.
pub trait BasisStore {
    fn lookup(&self, key: &str) -> Option<Vec<String>>;
    fn store(&self, key: &str, basis: &[String]);
}

thread_local! {
    static STORE: RefCell<Option<Rc<dyn BasisStore>>> = const { RefCell::new(None) };
}

/// Run `f` with `store` consulted by every Gröbner computation on this thread.
pub fn with_basis_store<R>(store: Rc<dyn BasisStore>, f: impl FnOnce() -> R) -> R {
    let prev = STORE.with(|s| s.borrow_mut().replace(store));
    struct Restore(Option<Rc<dyn BasisStore>>);
    impl Drop for Restore {
        fn drop(&mut self) {
            let prev = self.0.take();
            STORE.with(|s| *s.borrow_mut() = prev);
        }
    }
    let _restore = Restore(prev);
    f()
}

fn cache_key(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> String {
    let gens: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("{}|{}|{}", order, ring.names().join(","), gens.join(";"))
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger_in(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(PolyError::MixedRings);
    }
    let store = STORE.with(|s| s.borrow().clone());
    let key = store.as_ref().map(|_| cache_key(ring, gens, order));
    if let (Some(store), Some(key)) = (&store, &key) {
        if let Some(texts) = store.lookup(key) {
            let parsed: Result<Vec<Polynomial>, _> =
                texts.iter().map(|t| parse_polynomial(t, ring)).collect();
            if let Ok(basis) = parsed {
                return Ok(GroebnerBasis {
                    ring: ring.clone(),
                    order,
                    basis,
                });
            }
        }
    }
    let work: Vec<Work> = gens.iter().map(|g| Work::from_poly(g, order)).collect();
    let reduced = groebner_work(work, order);
    let basis: Vec<Polynomial> = reduced.into_iter().map(|w| w.into_poly(ring)).collect();
    if let (Some(store), Some(key)) = (&store, &key) {
        let texts: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
        store.store(key, &texts);
    }
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        basis,
    })
}

/// Reduced Gröbner basis of `(gens)`. An empty list is rejected only because
/// it carries no ring; use [`buchberger_in`] for that case.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    let ring = gens.first().ok_or(PolyError::EmptyGenerators)?.ring().clone();
    buchberger_in(&ring, gens, order)
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    gb.normal_form(p)
}

/// Polynomial as a list of terms in ascending order; the leading term is last.
#[derive(Clone, Debug)]
struct Work {
    terms: Vec<(Monomial, Rational)>,
}

impl Work {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Work {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Work { terms }
    }

    fn into_poly(self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().unwrap().1
    }

    fn make_monic(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let inv = self.lc().recip();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }
}

/// `a - c * mono * b`, both ascending.
fn sub_scaled(a: &[(Monomial, Rational)], c: &Rational, mono: &Monomial, b: &[(Monomial, Rational)], order: MonomialOrder) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted: Vec<(Monomial, Rational)> = b.iter().map(|(m, k)| (m.mul(mono), -(k * c))).collect();
    while i < a.len() && j < shifted.len() {
        match order.cmp(&a[i].0, &shifted[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(shifted[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].1 + &shifted[j].1;
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(shifted.into_iter().skip(j));
    out
}

fn reduce_full(mut p: Work, basis: &[Work], order: MonomialOrder) -> Work {
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        match basis.iter().find(|g| g.lm().divides(lm)) {
            Some(g) => {
                let q = g.lm().quotient_of(lm);
                let c = lc / g.lc();
                p.terms = sub_scaled(&p.terms, &c, &q, &g.terms, order);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Work { terms: rem }
}

fn s_poly(f: &Work, g: &Work, order: MonomialOrder) -> Work {
    let l = f.lm().lcm(g.lm());
    let uf = f.lm().quotient_of(&l);
    let ug = g.lm().quotient_of(&l);
    let cf = f.lc().recip();
    let a: Vec<(Monomial, Rational)> = f.terms.iter().map(|(m, c)| (m.mul(&uf), c * &cf)).collect();
    let cg = g.lc().recip();
    Work {
        terms: sub_scaled(&a, &cg, &ug, &g.terms, order),
    }
}

fn groebner_work(gens: Vec<Work>, order: MonomialOrder) -> Vec<Work> {
    let mut g: Vec<Work> = Vec::new();
    for mut w in gens.into_iter().filter(|w| !w.is_zero()) {
        w.make_monic();
        if w.lm().is_one() {
            return vec![w_one(w.lm().nvars())];
        }
        g.push(w);
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pairs.iter().min_by(|a, b| pair_key(&g, **a, **b, order)) {
        pairs.remove(&(i, j));
        let l = g[i].lm().lcm(g[j].lm());
        if g[i].lm().coprime(g[j].lm()) {
            continue;
        }
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].lm().divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&g[i], &g[j], order);
        let mut r = reduce_full(s, &g, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if r.lm().is_one() {
            return vec![w_one(r.lm().nvars())];
        }
        let n = g.len();
        g.push(r);
        for k in 0..n {
            pairs.insert((k, n));
        }
    }
    interreduce(g, order)
}

fn w_one(nvars: usize) -> Work {
    Work {
        terms: vec![(Monomial::one(nvars), Rational::one())],
    }
}

fn pair_key(g: &[Work], a: (usize, usize), b: (usize, usize), order: MonomialOrder) -> Ordering {
    let la = g[a.0].lm().lcm(g[a.1].lm());
    let lb = g[b.0].lm().lcm(g[b.1].lm());
    la.degree()
        .cmp(&lb.degree())
        .then_with(|| order.cmp(&la, &lb))
        .then_with(|| a.cmp(&b))
}

fn interreduce(g: Vec<Work>, order: MonomialOrder) -> Vec<Work> {
    let mut minimal: Vec<Work> = Vec::new();
    for (i, w) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, v)| {
            j != i && v.lm().divides(w.lm()) && (v.lm() != w.lm() || j < i)
        });
        if !redundant {
            minimal.push(w.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Work> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, w)| w.clone())
            .collect();
        let mut r = reduce_full(minimal[i].clone(), &others, order);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn polys(ring: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(t, ring).unwrap()).collect()
    }

    #[test]
    fn hand_reduced_example() {
        // x^2 - 1, xy - 1: x*(xy-1) - y*(x^2-1) = y - x, then y^2 - 1.
        let r = Ring::new(&["x", "y"]);
        let gb = buchberger(&polys(&r, &["x^2 - 1", "x*y - 1"]), MonomialOrder::DegRevLex).unwrap();
        let got: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["x - y", "y^2 - 1"]);
        let nf = gb.normal_form(&parse_polynomial("x^2", &r).unwrap()).unwrap();
        assert_eq!(nf.to_string(), "1");
    }

    #[test]
    fn trivial_ideals() {
        let r = Ring::new(&["x", "y"]);
        let gb = buchberger(&polys(&r, &["0"]), MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_zero_ideal());
        let p = parse_polynomial("x^3 + y", &r).unwrap();
        assert_eq!(gb.normal_form(&p).unwrap(), p);
        assert!(gb.normal_form(&Polynomial::zero(&r)).unwrap().is_zero());
        let gb = buchberger(&polys(&r, &["1"]), MonomialOrder::Lex).unwrap();
        assert!(gb.is_unit_ideal());
        let gb = buchberger(&polys(&r, &["2*x + 4", "x"]), MonomialOrder::Lex).unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn mixed_rings_rejected() {
        let r = Ring::new(&["x"]);
        let s = Ring::new(&["y"]);
        let g = vec![Polynomial::var(&r, 0), Polynomial::var(&s, 0)];
        assert_eq!(buchberger(&g, MonomialOrder::DegRevLex), Err(PolyError::MixedRings));
        let gb = buchberger(&g[..1], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.normal_form(&g[1]), Err(PolyError::MixedRings));
    }

    #[test]
    fn lex_twisted_cubic() {
        let r = Ring::new(&["t", "x", "y", "z"]);
        let gb = buchberger(&polys(&r, &["x - t", "y - t^2", "z - t^3"]), MonomialOrder::Lex).unwrap();
        let got: Vec<String> = gb.basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["y^3 - z^2", "-y^2 + x*z", "x*y - z", "x^2 - y", "t - x"]);
    }
}
