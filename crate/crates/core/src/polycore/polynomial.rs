use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use super::{PolyError, Rational};

/// Sparse polynomial over Q. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ring: &Ring, idx: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), idx), Rational::one())
    }

    /// Variable by name; panics if absent.
    pub fn named(ring: &Ring, name: &str) -> Self {
        let idx = ring
            .index_of(name)
            .unwrap_or_else(|| panic!("no variable {name} in {ring}"));
        Self::var(ring, idx)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(ring: &Ring, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Maximum total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Degree of the polynomial in a single variable.
    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(idx)).max().unwrap_or(0)
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(idx) > 0)
    }

    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.involves(i)).collect()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.ring == other.ring,
            "polynomial arithmetic across rings {} and {}",
            self.ring,
            other.ring
        );
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::MixedRings);
        }
        Ok(self + other)
    }

    /// Ring homomorphism: variable `i` goes to `images[i]`, all images in one ring.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut out = Polynomial::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Re-express in `target` by matching variable names. Fails if a used
    /// variable has no counterpart.
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, name) in self.ring.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.involves(i) {
                        return Err(PolyError::UnknownVariable(name.clone()));
                    }
                    map.push(None)
                }
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    e[map[i].unwrap()] += x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Terms sorted by descending `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Weighted degree of each term with the given per-variable weights.
    pub fn weighted_degrees(&self, weights: &[i64]) -> Vec<i64> {
        self.terms
            .keys()
            .map(|m| {
                m.exponents()
                    .iter()
                    .zip(weights)
                    .map(|(&e, &w)| e as i64 * w)
                    .sum()
            })
            .collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes `name^e*...` for a monomial, or an empty string for 1.
pub(crate) fn fmt_monomial(names: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

/// Canonical text for a sequence of (monomial string, coefficient) pairs
/// already in display order.
pub(crate) fn fmt_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a Rational)>,
{
    let mut s = String::new();
    for (k, (mono, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            s.push_str(&fmt_rational(&a));
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&fmt_rational(&a));
            s.push('*');
            s.push_str(&mono);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ring.names();
        let s = fmt_terms(
            self.sorted_terms(MonomialOrder::DegRevLex)
                .into_iter()
                .map(|(m, c)| (fmt_monomial(names, m), c)),
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
