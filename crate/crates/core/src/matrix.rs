//! Matrices of polynomials between bigraded free modules.
//!
//! A free module is described by the bidegrees of its basis elements. Entry
//! `(i, j)` of a graded matrix is then bihomogeneous of bidegree
//! `source[j] - target[i]`, so that every column is a homogeneous element of
//! the target module.

use crate::error::{Error, Result};
use crate::ring::{Bidegree, Field, PolyRing, Polynomial};

/// Bidegree `(x-degree, t-degree)` of a basis element; may be negative.
pub type Deg = (i32, i32);

#[inline]
pub fn deg_add(a: Deg, b: Deg) -> Deg {
    (a.0 + b.0, a.1 + b.1)
}

#[inline]
pub fn deg_sub(a: Deg, b: Deg) -> Deg {
    (a.0 - b.0, a.1 - b.1)
}

/// A map between bigraded free modules, stored densely in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
    source: Vec<Deg>,
    target: Vec<Deg>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl<F: Field> GradedMatrix<F> {
    pub fn zero(target: Vec<Deg>, source: Vec<Deg>) -> Self {
        let (rows, cols) = (target.len(), source.len());
        GradedMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
            source,
            target,
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    /// Builds a matrix from its columns. The source bidegree of each column is
    /// read off from its first nonzero entry; zero columns get `zero_deg`.
    pub fn from_columns(
        ring: &PolyRing<F>,
        target: Vec<Deg>,
        columns: Vec<Vec<Polynomial<F>>>,
        zero_deg: Deg,
    ) -> Result<Self> {
        let mut source = Vec::with_capacity(columns.len());
        for col in &columns {
            if col.len() != target.len() {
                return Err(Error::Shape(format!("column of length {} for {} rows", col.len(), target.len())));
            }
            source.push(column_degree(ring, &target, col)?.unwrap_or(zero_deg));
        }
        let mut m = Self::zero(target, source);
        for (j, col) in columns.into_iter().enumerate() {
            for (i, p) in col.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m.check_graded(ring)?;
        Ok(m)
    }

    /// A `1 × n` matrix `[g_1 ... g_n]` into a rank-one module generated in degree `(0, 0)`.
    pub fn row(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        Self::from_columns(ring, vec![(0, 0)], gens.iter().map(|g| vec![g.clone()]).collect(), (0, 0))
    }

    pub fn identity(ring: &PolyRing<F>, degs: Vec<Deg>) -> Self {
        let mut m = Self::zero(degs.clone(), degs);
        for i in 0..m.rows {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn source(&self) -> &[Deg] {
        &self.source
    }

    pub fn target(&self) -> &[Deg] {
        &self.target
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn with_labels(mut self, rows: Vec<String>, cols: Vec<String>) -> Self {
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    /// Checks that every entry has bidegree `source[j] - target[i]`.
    pub fn check_graded(&self, ring: &PolyRing<F>) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = deg_sub(self.source[j], self.target[i]);
                match ring.bidegree(self.entry(i, j)) {
                    Bidegree::Zero => {}
                    Bidegree::Pure(a, b) if (a as i32, b as i32) == want => {}
                    Bidegree::Pure(a, b) => {
                        return Err(Error::Shape(format!(
                            "entry ({i}, {j}) has bidegree ({a}, {b}), expected {want:?}"
                        )))
                    }
                    Bidegree::Inhomogeneous => return Err(Error::Inhomogeneous),
                }
            }
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let neg = |d: &Deg| (-d.0, -d.1);
        let mut m = GradedMatrix::zero(
            self.source.iter().map(neg).collect(),
            self.target.iter().map(neg).collect(),
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.entry(i, j).clone());
            }
        }
        m.row_labels = self.col_labels.clone();
        m.col_labels = self.row_labels.clone();
        m
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &PolyRing<F>, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!("cannot compose {}x{} after {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut m = GradedMatrix::zero(self.target.clone(), other.source.clone());
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.entry(i, k), other.entry(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = ring.add(&acc, &ring.mul(a, b));
                    }
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, ring: &PolyRing<F>, v: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (k, vk) in v.iter().enumerate() {
                    if !vk.is_zero() && !self.entry(i, k).is_zero() {
                        acc = ring.add(&acc, &ring.mul(self.entry(i, k), vk));
                    }
                }
                acc
            })
            .collect())
    }

    /// `[self | other]`; both must share the target.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.target != other.target {
            return Err(Error::Shape("hstack needs equal targets".into()));
        }
        let mut source = self.source.clone();
        source.extend_from_slice(&other.source);
        let mut m = GradedMatrix::zero(self.target.clone(), source);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.entry(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.entry(i, j).clone());
            }
        }
        Ok(m)
    }

    /// The submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = GradedMatrix::zero(
            rows.iter().map(|&i| self.target[i]).collect(),
            cols.iter().map(|&j| self.source[j]).collect(),
        );
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.entry(i, j).clone());
            }
        }
        m
    }

    /// `I · identity` on the target: the relations presenting `(R/I)^rows`.
    pub fn ideal_relations(ring: &PolyRing<F>, target: &[Deg], gens: &[Polynomial<F>]) -> Result<Self> {
        let mut columns = Vec::new();
        for i in 0..target.len() {
            for g in gens {
                let mut col = vec![ring.zero(); target.len()];
                col[i] = g.clone();
                columns.push(col);
            }
        }
        Self::from_columns(ring, target.to_vec(), columns, (0, 0))
    }
}

/// The bidegree of a homogeneous column relative to `target`, or `None` for zero.
pub fn column_degree<F: Field>(ring: &PolyRing<F>, target: &[Deg], col: &[Polynomial<F>]) -> Result<Option<Deg>> {
    for (i, p) in col.iter().enumerate() {
        match ring.bidegree(p) {
            Bidegree::Zero => continue,
            Bidegree::Pure(a, b) => return Ok(Some(deg_add(target[i], (a as i32, b as i32)))),
            Bidegree::Inhomogeneous => return Err(Error::Inhomogeneous),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    #[test]
    fn koszul_composite_vanishes() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let (a, b) = (r.x(1, 2), r.t(1));
        let m = GradedMatrix::row(&r, &[a.clone(), b.clone()]).unwrap();
        let s = GradedMatrix::from_columns(&r, m.source().to_vec(), vec![vec![b, r.neg(&a)]], (0, 0)).unwrap();
        assert_eq!(s.source(), &[(1, 1)]);
        assert!(m.compose(&r, &s).unwrap().is_zero());
    }

    #[test]
    fn grading_is_checked() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let bad = GradedMatrix::from_columns(&r, vec![(0, 0), (0, 0)], vec![vec![r.x(1, 2), r.t(1)]], (0, 0));
        assert!(bad.is_err());
    }

    #[test]
    fn transpose_negates_degrees() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let m = GradedMatrix::row(&r, &[r.x(1, 2)]).unwrap();
        let t = m.transpose();
        assert_eq!(t.source(), &[(0, 0)]);
        assert_eq!(t.target(), &[(-1, 0)]);
        t.check_graded(&r).unwrap();
    }
}
