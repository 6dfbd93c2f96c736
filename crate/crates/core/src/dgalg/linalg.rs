//! Exact rank over Q by incremental row reduction on sparse rows.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::polycore::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// Echelon form built one row at a time; each stored row has leading entry 1.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the stored pivots; returns the remainder.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut floor = 0usize;
        loop {
            let next = row.range(floor..).find(|(c, _)| self.pivots.contains_key(c)).map(|(c, v)| (*c, v.clone()));
            let Some((col, coef)) = next else { return row };
            let piv = &self.pivots[&col];
            for (c, v) in piv {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &coef * v;
                if e.is_zero() {
                    row.remove(c);
                }
            }
            floor = col + 1;
        }
    }

    /// Insert a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else { return false };
        let inv = Rational::one() / lv;
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        // keep stored rows reduced at the new pivot column
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&lead).cloned() {
                for (c, v) in &row {
                    let e = other.entry(*c).or_insert_with(Rational::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        other.remove(c);
                    }
                }
            }
        }
        self.pivots.insert(lead, row);
        true
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[(usize, i64)]) -> SparseRow {
        v.iter().map(|&(c, x)| (c, Rational::from_integer(x.into()))).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(rank(vec![row(&[(0, 1)]), row(&[(1, 1)]), row(&[(0, 1), (1, 1)])]), 2);
        assert_eq!(rank(vec![row(&[]), row(&[(2, 3)])]), 1);
        assert_eq!(rank(vec![row(&[(0, 1), (1, 1)]), row(&[(0, 1), (1, -1)]), row(&[(1, 5), (2, 1)])]), 3);
    }
}
