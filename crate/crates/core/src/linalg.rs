//! Sparse vectors and incremental row echelon forms over a coefficient field.

use std::collections::HashMap;

use crate::ring::Field;

/// A sparse vector: `(index, coefficient)` pairs with increasing indices and
/// nonzero coefficients.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Builds a sparse vector from unsorted entries, merging duplicates.
pub fn sparse_from<F: Field>(field: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, c) in entries {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d = field.add(d, &c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

/// `a + s·b`.
pub fn axpy<F: Field>(field: &F, a: &[(usize, F::Elem)], s: &F::Elem, b: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(s, &b[j].1)));
            j += 1;
        } else {
            let c = field.add(&a[i].1, &field.mul(s, &b[j].1));
            if !field.is_zero(&c) {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rows with distinct leading indices, each normalized to leading coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: HashMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon { field, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, index: usize) -> bool {
        self.pivot_row.contains_key(&index)
    }

    /// The unique representative of `v` modulo the row span with no entry at
    /// a pivot index.
    pub fn reduce(&self, v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut v = v;
        let mut pos = 0;
        while pos < v.len() {
            let (idx, c) = (v[pos].0, v[pos].1.clone());
            match self.pivot_row.get(&idx) {
                Some(&r) => v = axpy(&self.field, &v, &self.field.neg(&c), &self.rows[r]),
                None => pos += 1,
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank went up.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> bool {
        let w = self.reduce(v);
        let Some((lead, c)) = w.first().cloned() else {
            return false;
        };
        let inv = self.field.inv(&c);
        let row = w.into_iter().map(|(i, d)| (i, self.field.mul(&inv, &d))).collect();
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<F: Field>(field: &F, vectors: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut e = Echelon::new(field.clone());
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![(0, q(1)), (1, q(2))],
            vec![(0, q(2)), (1, q(4))],
            vec![(1, q(1)), (2, q(1))],
        ];
        assert_eq!(rank(&Rationals, rows), 2);
    }

    #[test]
    fn characteristic_matters() {
        // [[1, 1], [1, -1]] is singular exactly in characteristic 2
        let f2 = PrimeField::new(2).unwrap();
        let rows = |f: &PrimeField| vec![vec![(0, f.from_i64(1)), (1, f.from_i64(1))], vec![(0, f.from_i64(1)), (1, f.from_i64(-1))]];
        assert_eq!(rank(&f2, rows(&f2)), 1);
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(rank(&f3, rows(&f3)), 2);
    }

    #[test]
    fn reduction_clears_pivots() {
        let mut e = Echelon::new(Rationals);
        e.insert(vec![(0, q(1)), (2, q(1))]);
        e.insert(vec![(1, q(1)), (2, q(3))]);
        let r = e.reduce(vec![(0, q(1)), (1, q(1)), (2, q(1))]);
        assert_eq!(r, vec![(2, q(-3))]);
        assert!(e.is_pivot(0) && e.is_pivot(1) && !e.is_pivot(2));
    }

    #[test]
    fn merging_drops_cancellations() {
        let v = sparse_from(&Rationals, vec![(3, q(1)), (1, q(2)), (3, q(-1))]);
        assert_eq!(v, vec![(1, q(2))]);
    }
}
