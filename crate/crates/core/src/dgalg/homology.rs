use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use num_traits::One;

use super::cdga::VarInfo;
use super::linalg::{Echelon, SparseRow};
use super::{DgError, SemifreeCDGA};
use crate::polycore::{Monomial, Polynomial, Rational};

/// Homology dimensions per (hdeg, weight, internal degree) up to a cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyTable {
    pub cutoff: u32,
    /// Entries with internal degree at most this are exact.
    pub certified_band: u32,
    /// The algebra was homogenized with an extra degree-1 variable first.
    pub homogenized: bool,
    pub hdeg_range: (u32, u32),
    pub weight_range: (i64, i64),
    /// (k, w, d) -> dim H_k, for every k in the requested range and d ≤ cutoff.
    pub entries: BTreeMap<(u32, i64, u32), usize>,
    /// (k, w, d) -> dim C_k for every nonzero chain group of the slice.
    pub chain_dims: BTreeMap<(u32, i64, u32), usize>,
}

impl HomologyTable {
    pub fn get(&self, k: u32, w: i64, d: u32) -> usize {
        self.entries.get(&(k, w, d)).copied().unwrap_or(0)
    }

    pub fn is_certified(&self, d: u32) -> bool {
        d <= self.certified_band
    }

    /// Certified entries only.
    pub fn certified(&self) -> impl Iterator<Item = ((u32, i64, u32), usize)> + '_ {
        self.entries
            .iter()
            .filter(|((_, _, d), _)| *d <= self.certified_band)
            .map(|(k, v)| (*k, *v))
    }

    /// Σ (−1)^k dim H_k over the requested hdeg range.
    pub fn euler_homology(&self, w: i64, d: u32) -> i64 {
        self.entries
            .iter()
            .filter(|((_, ww, dd), _)| *ww == w && *dd == d)
            .map(|((k, _, _), n)| if k % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    /// Σ (−1)^k dim C_k over all homological degrees.
    pub fn euler_chains(&self, w: i64, d: u32) -> i64 {
        self.chain_dims
            .iter()
            .filter(|((_, ww, dd), _)| *ww == w && *dd == d)
            .map(|((k, _, _), n)| if k % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    /// True when every certified entry with hdeg ≥ `k0` vanishes.
    pub fn vanishes_from(&self, k0: u32) -> bool {
        self.certified().all(|((k, _, _), n)| k < k0 || n == 0)
    }
}

/// Monomial basis of a weight slice, grouped by (hdeg, internal degree).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightPiece {
    pub weight: i64,
    pub cutoff: u32,
    pub by_slot: BTreeMap<(u32, u32), Vec<Polynomial>>,
}

impl WeightPiece {
    pub fn dim(&self, hdeg: u32, deg: u32) -> usize {
        self.by_slot.get(&(hdeg, deg)).map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.by_slot.values().all(Vec::is_empty)
    }
}

/// Monomials of exact weight `w` and internal degree `d`, sorted.
pub(crate) fn enumerate_slice(
    info: &[VarInfo],
    names: &[String],
    w: i64,
    d: u32,
) -> Result<Vec<Monomial>, DgError> {
    let n = info.len();
    let pos: Vec<usize> = (0..n).filter(|&v| info[v].deg > 0).collect();
    let zero_odd: Vec<usize> = (0..n).filter(|&v| info[v].deg == 0 && info[v].odd).collect();
    let zero_even: Vec<usize> = (0..n).filter(|&v| info[v].deg == 0 && !info[v].odd).collect();
    let mut sign = 0i64;
    for &v in &zero_even {
        let s = info[v].weight.signum();
        if s == 0 || (sign != 0 && s != sign) {
            return Err(DgError::UnboundedSlice(names[v].clone()));
        }
        sign = s;
    }

    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    positive(info, &pos, 0, d, &mut exps, &mut |exps| {
        let wp: i64 = pos.iter().map(|&v| i64::from(exps[v]) * info[v].weight).sum();
        for mask in 0u64..(1u64 << zero_odd.len()) {
            let mut e = exps.to_vec();
            let mut wo = 0;
            for (b, &v) in zero_odd.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    e[v] = 1;
                    wo += info[v].weight;
                }
            }
            zero_weight(info, &zero_even, 0, w - wp - wo, &mut e, &mut out);
        }
    });
    out.sort();
    Ok(out)
}

fn positive(
    info: &[VarInfo],
    pos: &[usize],
    i: usize,
    rem: u32,
    exps: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if i == pos.len() {
        if rem == 0 {
            emit(exps);
        }
        return;
    }
    let v = pos[i];
    let dv = info[v].deg;
    let max = if info[v].odd { 1.min(rem / dv) } else { rem / dv };
    for e in 0..=max {
        exps[v] = e;
        positive(info, pos, i + 1, rem - e * dv, exps, emit);
    }
    exps[v] = 0;
}

fn zero_weight(info: &[VarInfo], vars: &[usize], i: usize, rem: i64, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if i == vars.len() {
        if rem == 0 {
            out.push(Monomial::from_exponents(e.clone()));
        }
        return;
    }
    let v = vars[i];
    let wv = info[v].weight;
    let max = if rem * wv > 0 { rem / wv } else { 0 };
    for k in 0..=max {
        e[v] = k as u32;
        zero_weight(info, vars, i + 1, rem - k * wv, e, out);
    }
    e[v] = 0;
}

/// Monomial basis of the weight-`w` part in internal degrees `0..=cutoff`.
pub fn weight_piece(a: &SemifreeCDGA, w: i64, cutoff: u32) -> Result<WeightPiece, DgError> {
    let mut by_slot = BTreeMap::new();
    for d in 0..=cutoff {
        for m in enumerate_slice(a.info(), a.total_ring().names(), w, d)? {
            let k = a.hdeg_of(&m);
            by_slot
                .entry((k, d))
                .or_insert_with(Vec::new)
                .push(Polynomial::monomial(a.total_ring(), m, Rational::one()));
        }
    }
    Ok(WeightPiece {
        weight: w,
        cutoff,
        by_slot,
    })
}

/// Exact homology dimensions per slice. Inhomogeneous algebras are
/// homogenized first; degrees above `cutoff − maxdeg(d)` are provisional.
pub fn homology_table(
    a: &SemifreeCDGA,
    hdeg: RangeInclusive<u32>,
    weights: RangeInclusive<i64>,
    cutoff: u32,
) -> Result<HomologyTable, DgError> {
    let (a, homogenized) = a.homogenized();
    let maxdeg = a.max_image_degree().unwrap_or(0);
    if maxdeg > cutoff {
        return Err(DgError::CutoffTooSmall { cutoff, maxdeg });
    }
    let mut entries = BTreeMap::new();
    let mut chain_dims = BTreeMap::new();
    for w in weights.clone() {
        for d in 0..=cutoff {
            let basis = enumerate_slice(a.info(), a.total_ring().names(), w, d)?;
            let mut by_k: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
            for m in basis {
                by_k.entry(a.hdeg_of(&m)).or_default().push(m);
            }
            for (k, v) in &by_k {
                chain_dims.insert((*k, w, d), v.len());
            }
            let mut ranks: HashMap<u32, usize> = HashMap::new();
            let mut rank_of = |k: u32| -> usize {
                if k == 0 {
                    return 0;
                }
                *ranks.entry(k).or_insert_with(|| differential_rank(&a, &by_k, k))
            };
            for k in hdeg.clone() {
                let dim = by_k.get(&k).map_or(0, Vec::len);
                let h = dim - rank_of(k) - rank_of(k + 1);
                entries.insert((k, w, d), h);
            }
        }
    }
    Ok(HomologyTable {
        cutoff,
        certified_band: cutoff - maxdeg,
        homogenized,
        hdeg_range: (*hdeg.start(), *hdeg.end()),
        weight_range: (*weights.start(), *weights.end()),
        entries,
        chain_dims,
    })
}

/// Rank of d: C_k → C_{k−1} on one slice.
fn differential_rank(a: &SemifreeCDGA, by_k: &BTreeMap<u32, Vec<Monomial>>, k: u32) -> usize {
    let (Some(src), Some(dst)) = (by_k.get(&k), by_k.get(&(k - 1))) else { return 0 };
    let index: HashMap<&Monomial, usize> = dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new();
    for m in src {
        let img = a.d(&Polynomial::monomial(a.total_ring(), m.clone(), Rational::one()));
        let row: SparseRow = img
            .terms()
            .map(|(t, c)| (*index.get(t).expect("differential preserves the slice"), c.clone()))
            .collect();
        ech.insert(row);
        if ech.rank() == dst.len() {
            break;
        }
    }
    ech.rank()
}
