//! Sparse exact row reduction over a [`Scalar`] field.

use crate::scalar::Scalar;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Sparse coordinate vector, no explicit zeros.
pub type SparseVec<S> = BTreeMap<usize, S>;

/// Add `c * w` into `v`, dropping entries that cancel.
pub fn add_scaled<S: Scalar>(v: &mut SparseVec<S>, w: &SparseVec<S>, c: &S) {
    if c.is_zero() {
        return;
    }
    for (idx, b) in w {
        let delta = b.mul(c);
        match v.get_mut(idx) {
            Some(a) => {
                let sum = a.add(&delta);
                if sum.is_zero() {
                    v.remove(idx);
                } else {
                    *a = sum;
                }
            }
            None => {
                v.insert(*idx, delta);
            }
        }
    }
}

/// Row-reduced subspace: one stored row per pivot column, pivot entry 1.
#[derive(Clone, Debug)]
pub struct RowSpace<S: Scalar> {
    rows: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> Default for RowSpace<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> RowSpace<S> {
    pub fn new() -> Self {
        RowSpace {
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; the remainder has no pivot hits.
    pub fn reduce(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        loop {
            let hit = v
                .iter()
                .find_map(|(idx, _)| self.rows.get(idx).map(|row| (*idx, row.clone())));
            match hit {
                Some((idx, row)) => {
                    let c = v.get(&idx).expect("pivot present").neg();
                    add_scaled(&mut v, &row, &c);
                }
                None => return v,
            }
        }
    }

    /// Insert `v` if independent of the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<S>) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, _)) = r.iter().next() else {
            return false;
        };
        let lead = r.get(&pivot).expect("pivot present").clone();
        let inv = lead.inv().expect("nonzero pivot");
        for val in r.values_mut() {
            *val = val.mul(&inv);
        }
        // Back-substitute so stored rows stay fully reduced and sparse.
        let cols: Vec<usize> = self
            .rows
            .iter()
            .filter(|(_, row)| row.contains_key(&pivot))
            .map(|(col, _)| *col)
            .collect();
        for col in cols {
            let row = self.rows.get_mut(&col).expect("row present");
            let c = row.get(&pivot).expect("entry present").neg();
            let r_clone = r.clone();
            add_scaled(row, &r_clone, &c);
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// The stored reduced rows, ordered by pivot column.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<S>> {
        self.rows.values()
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec<S>) -> Option<Vec<(usize, S)>> {
        let mut v = v.clone();
        let mut coords = Vec::new();
        loop {
            let hit = v
                .iter()
                .find_map(|(idx, _)| self.rows.get(idx).map(|row| (*idx, row.clone())));
            match hit {
                Some((idx, row)) => {
                    let c = v.get(&idx).expect("pivot present").clone();
                    coords.push((idx, c.clone()));
                    add_scaled(&mut v, &row, &c.neg());
                }
                None => {
                    return if v.is_empty() { Some(coords) } else { None };
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rat};

    fn sv(entries: &[(usize, i64)]) -> SparseVec<Rat> {
        entries
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (*i, rat_int(*c)))
            .collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut space: RowSpace<Rat> = RowSpace::new();
        assert!(space.insert(sv(&[(0, 1), (1, 2)])));
        assert!(space.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!space.insert(sv(&[(0, 2), (1, 6), (2, 2)])));
        assert_eq!(space.dim(), 2);
        assert!(space.contains(&sv(&[(0, 3), (1, 8), (2, 2)])));
        assert!(!space.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn coordinates_recover_combination() {
        let mut space: RowSpace<Rat> = RowSpace::new();
        space.insert(sv(&[(0, 1), (3, -1)]));
        space.insert(sv(&[(1, 2)]));
        let v = sv(&[(0, 5), (1, 4), (3, -5)]);
        let coords = space.coordinates(&v).unwrap();
        let mut rebuilt = SparseVec::new();
        for (pivot, c) in coords {
            let row = space.rows.get(&pivot).unwrap().clone();
            add_scaled(&mut rebuilt, &row, &c);
        }
        assert_eq!(rebuilt, v);
        assert_eq!(space.coordinates(&sv(&[(2, 1)])), None);
    }
}
