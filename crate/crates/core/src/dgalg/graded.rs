//! Graded-commutative arithmetic on top of [`Polynomial`] storage.
//!
//! A monomial is read as the product of its variables in index order, so odd
//! variables are implicitly ordered and carry exponent at most 1.

use num_traits::One;

use crate::polycore::{Monomial, PolyError, Polynomial, Rational, Ring};

/// Product of two monomials with the Koszul sign, `None` if an odd variable repeats.
pub(crate) fn mono_mul(a: &Monomial, b: &Monomial, odd: &[bool]) -> Option<(Monomial, bool)> {
    let mut seen_b = 0u32;
    let mut inversions = 0u32;
    for v in 0..odd.len() {
        if !odd[v] {
            continue;
        }
        let (ea, eb) = (a.exponent(v), b.exponent(v));
        if ea > 0 && eb > 0 {
            return None;
        }
        if ea > 0 {
            inversions += seen_b;
        }
        if eb > 0 {
            seen_b += 1;
        }
    }
    Some((a.mul(b), inversions % 2 == 1))
}

pub(crate) fn gc_mul(a: &Polynomial, b: &Polynomial, odd: &[bool]) -> Polynomial {
    let ring = a.ring();
    let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(a.num_terms() * b.num_terms());
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            if let Some((m, neg)) = mono_mul(ma, mb, odd) {
                let c = ca * cb;
                terms.push((m, if neg { -c } else { c }));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Drop terms in which an odd variable has exponent above 1.
pub(crate) fn normalize(p: &Polynomial, odd: &[bool]) -> Polynomial {
    Polynomial::from_terms(
        p.ring(),
        p.terms()
            .filter(|(m, _)| (0..odd.len()).all(|v| !odd[v] || m.exponent(v) <= 1))
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

pub(crate) fn gc_pow(p: &Polynomial, n: u32, odd: &[bool]) -> Polynomial {
    let mut acc = Polynomial::one(p.ring());
    for _ in 0..n {
        acc = gc_mul(&acc, p, odd);
    }
    acc
}

/// Algebra map sending source variable `v` to `images[v]` (elements of `target`).
pub(crate) fn gc_substitute(
    p: &Polynomial,
    images: &[Polynomial],
    target: &Ring,
    target_odd: &[bool],
) -> Polynomial {
    let mut out = Polynomial::zero(target);
    for (m, c) in p.terms() {
        let mut t = Polynomial::constant(target, c.clone());
        for v in m.support() {
            let f = gc_pow(&images[v], m.exponent(v), target_odd);
            t = gc_mul(&t, &f, target_odd);
            if t.is_zero() {
                break;
            }
        }
        out = &out + &t;
    }
    out
}

/// Leibniz extension of `diff` (one entry per variable) to `p`.
pub(crate) fn leibniz(p: &Polynomial, diff: &[Polynomial], odd: &[bool]) -> Polynomial {
    let ring = p.ring();
    let n = ring.nvars();
    let mut out = Polynomial::zero(ring);
    for (m, c) in p.terms() {
        for v in m.support() {
            let dv = &diff[v];
            if dv.is_zero() {
                continue;
            }
            let e = m.exponent(v);
            let mut pre = vec![0u32; n];
            let mut post = vec![0u32; n];
            let mut pre_parity = false;
            for u in 0..n {
                let x = m.exponent(u);
                if u < v {
                    pre[u] = x;
                    if odd[u] && x % 2 == 1 {
                        pre_parity = !pre_parity;
                    }
                } else if u > v {
                    post[u] = x;
                }
            }
            let mut mid = vec![0u32; n];
            mid[v] = e - 1;
            let coeff = if pre_parity { -(c * Rational::from_integer(e.into())) } else { c * Rational::from_integer(e.into()) };
            let pre_p = Polynomial::monomial(ring, Monomial::from_exponents(pre), Rational::one());
            let mid_p = Polynomial::monomial(ring, Monomial::from_exponents(mid), coeff);
            let post_p = Polynomial::monomial(ring, Monomial::from_exponents(post), Rational::one());
            let t = gc_mul(&gc_mul(&gc_mul(&pre_p, &mid_p, odd), dv, odd), &post_p, odd);
            out = &out + &t;
        }
    }
    out
}

/// Total of an additive grading over a monomial.
pub(crate) fn grading<T>(m: &Monomial, per_var: &[T]) -> i64
where
    T: Copy + Into<i64>,
{
    m.support().map(|v| i64::from(m.exponent(v)) * per_var[v].into()).sum()
}

/// Move `p` into `target` by variable name, with the sign picked up by
/// reordering odd variables. `target_odd` gives parities in `target`.
pub(crate) fn transport(p: &Polynomial, target: &Ring, target_odd: &[bool]) -> Result<Polynomial, PolyError> {
    if p.ring() == target {
        return Ok(p.clone());
    }
    let src = p.ring();
    let mut map = Vec::with_capacity(src.nvars());
    for (i, name) in src.names().iter().enumerate() {
        match target.index_of(name) {
            Some(j) => map.push(Some(j)),
            None if p.involves(i) => return Err(PolyError::UnknownVariable(name.clone())),
            None => map.push(None),
        }
    }
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        let mut e = vec![0u32; target.nvars()];
        let mut odd_order = Vec::new();
        for v in m.support() {
            let j = map[v].expect("used variables are mapped");
            e[j] += m.exponent(v);
            if target_odd[j] {
                odd_order.push(j);
            }
        }
        let mut inv = 0usize;
        for a in 0..odd_order.len() {
            for b in a + 1..odd_order.len() {
                if odd_order[a] > odd_order[b] {
                    inv += 1;
                }
            }
        }
        let c = if inv % 2 == 1 { -c.clone() } else { c.clone() };
        terms.push((Monomial::from_exponents(e), c));
    }
    Ok(Polynomial::from_terms(target, terms))
}
