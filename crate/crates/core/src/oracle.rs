//! Graded Betti numbers by linear algebra in each bidegree, with no Gröbner
//! bases involved.
//!
//! For a module `M = coker(P)` over the polynomial ring in a chosen subset of
//! the variables, `β_{i,D}(M) = dim H_i(K ⊗ M)_D` where `K` is the Koszul
//! complex on those variables. Each graded piece `M_D` is the quotient of the
//! free piece by the span of all monomial multiples of relation columns, and
//! each Koszul differential is an explicit matrix whose rank is computed by
//! sparse elimination.

use std::collections::HashMap;

use crate::betti::BettiTable;
use crate::cancel;
use crate::error::{Error, Result};
use crate::linalg::{sparse_from, Echelon, SparseVec};
use crate::matrix::{Deg, GradedMatrix};
use crate::ring::{Field, Monomial, PolyRing, Polynomial};

/// Indices of the x-variables: modules defined over `K[x]` use these.
pub fn x_variables<F: Field>(ring: &PolyRing<F>) -> Vec<usize> {
    (0..ring.nx()).collect()
}

pub fn all_variables<F: Field>(ring: &PolyRing<F>) -> Vec<usize> {
    (0..ring.nvars()).collect()
}

/// All monomials of bidegree `d` in the given variables.
fn monomials_of<F: Field>(ring: &PolyRing<F>, vars: &[usize], d: Deg) -> Vec<Monomial> {
    if d.0 < 0 || d.1 < 0 {
        return Vec::new();
    }
    let (xs, ts): (Vec<usize>, Vec<usize>) = vars.iter().partition(|&&v| v < ring.nx());
    let xm = monomials_in(ring, &xs, d.0 as u32);
    let tm = monomials_in(ring, &ts, d.1 as u32);
    let mut out = Vec::with_capacity(xm.len() * tm.len());
    for a in &xm {
        for b in &tm {
            out.push(a.mul(b));
        }
    }
    out
}

fn monomials_in<F: Field>(ring: &PolyRing<F>, vars: &[usize], deg: u32) -> Vec<Monomial> {
    fn rec(vars: &[usize], deg: u32, exps: &mut Vec<u32>, nx: usize, out: &mut Vec<Monomial>) {
        let Some((&v, rest)) = vars.split_first() else {
            if deg == 0 {
                out.push(Monomial::from_exponents(exps, nx));
            }
            return;
        };
        for e in (0..=deg).rev() {
            exps[v] = e;
            rec(rest, deg - e, exps, nx, out);
        }
        exps[v] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0; ring.nvars()];
    rec(vars, deg, &mut exps, ring.nx(), &mut out);
    out
}

fn var_degree<F: Field>(ring: &PolyRing<F>, v: usize) -> Deg {
    if v < ring.nx() {
        (1, 0)
    } else {
        (0, 1)
    }
}

fn sub(a: Deg, b: Deg) -> Deg {
    (a.0 - b.0, a.1 - b.1)
}

/// Coordinates of monomial multiples of columns in a free piece. The basis
/// of the piece is `(row, monomial)` with `deg monomial = D - target[row]`.
struct FreePiece {
    basis: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl FreePiece {
    fn new<F: Field>(ring: &PolyRing<F>, vars: &[usize], target: &[Deg], d: Deg) -> Self {
        let mut basis = Vec::new();
        for (row, &g) in target.iter().enumerate() {
            for m in monomials_of(ring, vars, sub(d, g)) {
                basis.push((row, m));
            }
        }
        let index = basis.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        FreePiece { basis, index }
    }

    fn len(&self) -> usize {
        self.basis.len()
    }

    /// `m · col` in this piece's coordinates.
    fn multiple<F: Field>(&self, field: &F, m: &Monomial, col: &[Polynomial<F>]) -> SparseVec<F::Elem> {
        let mut entries = Vec::new();
        for (row, p) in col.iter().enumerate() {
            for (mono, c) in p.terms() {
                let k = self.index[&(row, mono.mul(m))];
                entries.push((k, c.clone()));
            }
        }
        sparse_from(field, entries)
    }
}

/// Spanning vectors of the degree-`d` piece of the submodule generated by
/// the columns of `m`.
fn column_span_vectors<F: Field>(
    ring: &PolyRing<F>,
    vars: &[usize],
    m: &GradedMatrix<F>,
    piece: &FreePiece,
    d: Deg,
) -> Vec<SparseVec<F::Elem>> {
    let mut out = Vec::new();
    for j in 0..m.cols() {
        let col = m.column(j);
        if col.iter().all(|p| p.is_zero()) {
            continue;
        }
        for mono in monomials_of(ring, vars, sub(d, m.source()[j])) {
            out.push(piece.multiple(ring.field(), &mono, &col));
        }
    }
    out
}

fn check_support<F: Field>(vars: &[usize], m: &GradedMatrix<F>) -> Result<()> {
    let allowed = vars.iter().fold(0u32, |acc, v| acc | (1 << v));
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            for (mono, _) in m.entry(i, j).terms() {
                if mono.support_mask() & !allowed != 0 {
                    return Err(Error::InvalidParameter("matrix entry uses a variable outside the chosen set".into()));
                }
            }
        }
    }
    Ok(())
}

/// Dimension of the degree-`d` piece of the span of the columns of `m`.
pub fn span_dimension<F: Field>(ring: &PolyRing<F>, vars: &[usize], m: &GradedMatrix<F>, d: Deg) -> Result<usize> {
    check_support(vars, m)?;
    let piece = FreePiece::new(ring, vars, m.target(), d);
    let mut e = Echelon::new(ring.field().clone());
    for v in column_span_vectors(ring, vars, m, &piece, d) {
        e.insert(v);
    }
    Ok(e.rank())
}

/// Dimension of the degree-`d` piece of `ker(m)`.
pub fn kernel_dimension<F: Field>(ring: &PolyRing<F>, vars: &[usize], m: &GradedMatrix<F>, d: Deg) -> Result<usize> {
    check_support(vars, m)?;
    let source = FreePiece::new(ring, vars, m.source(), d);
    let target = FreePiece::new(ring, vars, m.target(), d);
    let mut e = Echelon::new(ring.field().clone());
    for (j, mono) in &source.basis {
        e.insert(target.multiple(ring.field(), mono, &m.column(*j)));
    }
    Ok(source.len() - e.rank())
}

/// One graded piece of the quotient module.
struct QuotientPiece<F: Field> {
    free: FreePiece,
    relations: Echelon<F>,
    /// free index → quotient index, for the non-pivot free indices.
    quotient_of: HashMap<usize, usize>,
    /// quotient index → free index.
    free_of: Vec<usize>,
}

/// Koszul-homology Betti numbers of `coker(relations)` over the polynomial
/// ring in `vars`.
pub struct KoszulOracle<F: Field> {
    ring: PolyRing<F>,
    vars: Vec<usize>,
    relations: GradedMatrix<F>,
    pieces: HashMap<Deg, QuotientPiece<F>>,
    ranks: HashMap<(usize, Deg), usize>,
}

impl<F: Field> KoszulOracle<F> {
    pub fn new(ring: &PolyRing<F>, vars: &[usize], relations: &GradedMatrix<F>) -> Result<Self> {
        check_support(vars, relations)?;
        if vars.len() > 31 {
            return Err(Error::InvalidParameter("too many variables".into()));
        }
        Ok(KoszulOracle {
            ring: ring.clone(),
            vars: vars.to_vec(),
            relations: relations.clone(),
            pieces: HashMap::new(),
            ranks: HashMap::new(),
        })
    }

    fn piece(&mut self, d: Deg) -> &QuotientPiece<F> {
        if !self.pieces.contains_key(&d) {
            let free = FreePiece::new(&self.ring, &self.vars, self.relations.target(), d);
            let mut relations = Echelon::new(self.ring.field().clone());
            for v in column_span_vectors(&self.ring, &self.vars, &self.relations, &free, d) {
                relations.insert(v);
            }
            let free_of: Vec<usize> = (0..free.len()).filter(|&k| !relations.is_pivot(k)).collect();
            let quotient_of = free_of.iter().enumerate().map(|(q, &k)| (k, q)).collect();
            self.pieces.insert(d, QuotientPiece { free, relations, quotient_of, free_of });
        }
        &self.pieces[&d]
    }

    /// `dim M_d`.
    pub fn hilbert_function(&mut self, d: Deg) -> usize {
        self.piece(d).free_of.len()
    }

    /// `x_v · (basis element q of M_d)` in the coordinates of `M_{d + deg x_v}`.
    fn multiply(&self, d: Deg, q: usize, v: usize) -> SparseVec<F::Elem> {
        let src = &self.pieces[&d];
        let (row, mono) = src.free.basis[src.free_of[q]];
        let dv = var_degree(&self.ring, v);
        let dst = &self.pieces[&(d.0 + dv.0, d.1 + dv.1)];
        let x = Monomial::variable(v, self.ring.nvars(), self.ring.nx());
        let k = dst.free.index[&(row, mono.mul(&x))];
        let reduced = dst.relations.reduce(vec![(k, self.ring.field().one())]);
        reduced.into_iter().map(|(k, c)| (dst.quotient_of[&k], c)).collect()
    }

    fn subset_degree(&self, mask: u32) -> Deg {
        let mut d = (0, 0);
        for (pos, &v) in self.vars.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                let dv = var_degree(&self.ring, v);
                d = (d.0 + dv.0, d.1 + dv.1);
            }
        }
        d
    }

    /// Basis `(T, q)` of `(⋀^i K^n ⊗ M)_d`, `T` a subset of variable positions.
    fn chain_basis(&mut self, i: usize, d: Deg) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for mask in crate::exterior::subsets(self.vars.len(), i) {
            let e = sub(d, self.subset_degree(mask));
            if e.0 < 0 || e.1 < 0 {
                continue;
            }
            let dim = self.piece(e).free_of.len();
            out.extend((0..dim).map(|q| (mask, q)));
        }
        out
    }

    /// Rank of the Koszul differential `C_i → C_{i-1}` in degree `d`.
    fn differential_rank(&mut self, i: usize, d: Deg) -> Result<usize> {
        if i == 0 || i > self.vars.len() {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, d)) {
            return Ok(r);
        }
        let source = self.chain_basis(i, d);
        let target = self.chain_basis(i - 1, d);
        let target_index: HashMap<(u32, usize), usize> = target.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        let field = self.ring.field().clone();
        let mut e = Echelon::new(field.clone());
        for &(mask, q) in &source {
            cancel::check()?;
            let d_elem = sub(d, self.subset_degree(mask));
            let mut entries = Vec::new();
            let mut sign_negative = false;
            for pos in 0..self.vars.len() {
                if mask & (1 << pos) == 0 {
                    continue;
                }
                let rest = mask & !(1 << pos);
                for (q2, c) in self.multiply(d_elem, q, self.vars[pos]) {
                    let c = if sign_negative { field.neg(&c) } else { c };
                    entries.push((target_index[&(rest, q2)], c));
                }
                sign_negative = !sign_negative;
            }
            e.insert(sparse_from(&field, entries));
        }
        let r = e.rank();
        self.ranks.insert((i, d), r);
        Ok(r)
    }

    /// `β_{i,d}` for one homological index and bidegree.
    pub fn betti_number(&mut self, i: usize, d: Deg) -> Result<usize> {
        let dim = self.chain_basis(i, d).len();
        let out = self.differential_rank(i, d)?;
        let inc = self.differential_rank(i + 1, d)?;
        Ok(dim - out - inc)
    }

    /// All `β_{i,d}` with `i <= max_i` and total degree `d.0 + d.1 <= max_deg`.
    pub fn betti_table(&mut self, max_i: usize, max_deg: i32) -> Result<BettiTable> {
        let gens = self.relations.target().to_vec();
        let Some(amin) = gens.iter().map(|g| g.0).min() else {
            return Ok(BettiTable::new());
        };
        let bmin = gens.iter().map(|g| g.1).min().unwrap_or(0);
        let mut table = BettiTable::new();
        for a in amin..=max_deg - bmin {
            for b in bmin..=max_deg - a {
                for i in 0..=max_i {
                    let n = self.betti_number(i, (a, b))?;
                    table.add(i, (a, b), n);
                }
            }
        }
        Ok(table)
    }
}

/// Convenience wrapper: the Betti table of `coker(relations)`.
pub fn koszul_betti<F: Field>(
    ring: &PolyRing<F>,
    vars: &[usize],
    relations: &GradedMatrix<F>,
    max_i: usize,
    max_deg: i32,
) -> Result<BettiTable> {
    KoszulOracle::new(ring, vars, relations)?.betti_table(max_i, max_deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    #[test]
    fn koszul_complex_on_three_variables() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let vars = x_variables(&r);
        let p = GradedMatrix::row(&r, &[r.x(1, 2), r.x(1, 3), r.x(2, 3)]).unwrap();
        let b = koszul_betti(&r, &vars, &p, 4, 4).unwrap();
        assert_eq!(b.totals(), vec![1, 3, 3, 1]);
        assert_eq!(b.get(3, (3, 0)), 1);
    }

    #[test]
    fn hilbert_function_of_a_quadric() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), 3).unwrap();
        let vars = x_variables(&r);
        let x = r.x(1, 2);
        let p = GradedMatrix::row(&r, &[r.mul(&x, &x)]).unwrap();
        let mut o = KoszulOracle::new(&r, &vars, &p).unwrap();
        // K[a,b,c]/(a^2): 1, 3, 5, 7, ...
        assert_eq!((0..4).map(|d| o.hilbert_function((d, 0))).collect::<Vec<_>>(), vec![1, 3, 5, 7]);
    }

    #[test]
    fn kernel_and_span_dimensions() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let vars = x_variables(&r);
        let m = GradedMatrix::row(&r, &[r.x(1, 2), r.x(1, 3)]).unwrap();
        let syz = GradedMatrix::from_columns(&r, m.source().to_vec(), vec![vec![r.x(1, 3), r.neg(&r.x(1, 2))]], (0, 0)).unwrap();
        for d in 0..5 {
            assert_eq!(kernel_dimension(&r, &vars, &m, (d, 0)).unwrap(), span_dimension(&r, &vars, &syz, (d, 0)).unwrap());
        }
    }

    #[test]
    fn variables_outside_the_set_are_rejected() {
        let r = PolyRing::new(Rationals, 2).unwrap();
        let p = GradedMatrix::row(&r, &[r.t(1)]).unwrap();
        assert!(KoszulOracle::new(&r, &x_variables(&r), &p).is_err());
    }
}
