//! Exterior algebras on a free module `F` of rank `f` and on its dual, the
//! mutual actions of one on the other, divided powers of 2-forms and Pfaffians.
//!
//! A basis element `e_S` (or `e*_S`) is stored as a bitmask of the index set
//! `S`, bit `i - 1` for index `i`, and always means the wedge of the basis
//! vectors in increasing index order. Every sign is produced by counting the
//! transpositions needed to merge index sets; no sign tables are written out.
//!
//! Actions follow one convention on both sides: a degree-one element acts as
//! the interior product expanding from the leftmost factor, and a product acts
//! factor by factor, `(u ∧ v)(w) = u(v(w))`. With this convention
//! `e*_j ∧ e*_i` pairs to one with `e_i ∧ e_j`.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ring::{Field, PolyRing, Polynomial};

/// Which exterior algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `⋀F`
    Primal,
    /// `⋀F*`
    Dual,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Primal => Side::Dual,
            Side::Dual => Side::Primal,
        }
    }
}

/// A homogeneous element of `⋀^k F` or `⋀^k F*` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement<F: Field> {
    side: Side,
    rank: usize,
    degree: usize,
    terms: BTreeMap<u32, Polynomial<F>>,
}

/// Bitmask of a 1-based index set.
pub fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

/// Increasing 1-based indices of a bitmask.
pub fn indices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
}

/// All `k`-subsets of `{1..n}` as bitmasks, in lexicographic order of their
/// increasing index sequences.
pub fn subsets(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n {
            if n - i + 1 < k {
                break;
            }
            rec(i + 1, n, k - 1, acc | (1 << (i - 1)), out);
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, 0, &mut out);
    out
}

/// `(-1)^{# pairs (s, t), s in a, t in b, s > t}`: the sign of `e_a ∧ e_b = ± e_{a ∪ b}`.
#[inline]
fn merge_sign(a: u32, b: u32) -> bool {
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let t = rest.trailing_zeros();
        rest &= rest - 1;
        count += (a >> (t + 1)).count_ones();
    }
    count % 2 == 1
}

/// Interior product of the basis covector `i` (0-based bit) into `e_set`.
/// Returns the remaining set and whether the sign is negative.
#[inline]
fn interior(bit: u32, set: u32) -> Option<(u32, bool)> {
    if set & (1 << bit) == 0 {
        return None;
    }
    let before = (set & ((1 << bit) - 1)).count_ones();
    Some((set & !(1 << bit), before % 2 == 1))
}

/// `e_s(e_t)` for basis elements on opposite sides with `s ⊆ t`: the
/// factors of `s` act one at a time, the rightmost first.
fn act_basis(s: u32, t: u32) -> Option<(u32, bool)> {
    if s & t != s {
        return None;
    }
    let mut set = t;
    let mut negative = false;
    let mut rest = s;
    let mut bits = Vec::with_capacity(s.count_ones() as usize);
    while rest != 0 {
        bits.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    for &b in bits.iter().rev() {
        let (next, sign) = interior(b, set)?;
        set = next;
        negative ^= sign;
    }
    Some((set, negative))
}

impl<F: Field> ExteriorElement<F> {
    pub fn zero(side: Side, rank: usize, degree: usize) -> Self {
        ExteriorElement { side, rank, degree, terms: BTreeMap::new() }
    }

    /// The wedge of basis vectors taken in the given order, e.g. `[3, 2, 1]`
    /// gives `e_3 ∧ e_2 ∧ e_1 = -e_1 ∧ e_2 ∧ e_3`. Repeated indices give zero.
    pub fn basis(ring: &PolyRing<F>, side: Side, rank: usize, indices: &[usize]) -> Self {
        let mut set = 0u32;
        let mut negative = false;
        for &i in indices {
            assert!((1..=rank).contains(&i), "basis index {i} out of range");
            let bit = 1u32 << (i - 1);
            if set & bit != 0 {
                return Self::zero(side, rank, indices.len());
            }
            negative ^= merge_sign(set, bit);
            set |= bit;
        }
        let coeff = if negative { ring.from_i64(-1) } else { ring.one() };
        let mut terms = BTreeMap::new();
        terms.insert(set, coeff);
        ExteriorElement { side, rank, degree: indices.len(), terms }
    }

    /// Builds an element from `(index set, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        ring: &PolyRing<F>,
        side: Side,
        rank: usize,
        degree: usize,
        items: impl IntoIterator<Item = (u32, Polynomial<F>)>,
    ) -> Self {
        let mut out = Self::zero(side, rank, degree);
        for (set, c) in items {
            assert_eq!(set.count_ones() as usize, degree, "index set of wrong size");
            out.add_term(ring, set, &c);
        }
        out
    }

    fn add_term(&mut self, ring: &PolyRing<F>, set: u32, c: &Polynomial<F>) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(set).or_insert_with(Polynomial::zero);
        *entry = ring.add(entry, c);
        if entry.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Polynomial<F>)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient on the basis element with the given increasing index set.
    pub fn coefficient(&self, set: u32) -> Polynomial<F> {
        self.terms.get(&set).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Coefficient of a degree-zero element.
    pub fn scalar(&self) -> Polynomial<F> {
        assert_eq!(self.degree, 0, "not a scalar");
        self.coefficient(0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.side != other.side {
            return Err(Error::MixedSides);
        }
        if self.rank != other.rank {
            return Err(Error::Shape(format!("ranks {} and {}", self.rank, other.rank)));
        }
        Ok(())
    }

    pub fn add(&self, ring: &PolyRing<F>, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.degree != other.degree {
            return Err(Error::Shape(format!("degrees {} and {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(ring, *s, c);
        }
        Ok(out)
    }

    pub fn sub(&self, ring: &PolyRing<F>, other: &Self) -> Result<Self> {
        self.add(ring, &other.neg(ring))
    }

    pub fn neg(&self, ring: &PolyRing<F>) -> Self {
        self.scale(ring, &ring.from_i64(-1))
    }

    pub fn scale(&self, ring: &PolyRing<F>, c: &Polynomial<F>) -> Self {
        let mut out = Self::zero(self.side, self.rank, self.degree);
        for (s, d) in &self.terms {
            let p = ring.mul(c, d);
            if !p.is_zero() {
                out.terms.insert(*s, p);
            }
        }
        out
    }

    /// `u ∧ v`; zero when the degrees exceed the rank.
    pub fn wedge(&self, ring: &PolyRing<F>, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let degree = self.degree + other.degree;
        let mut out = Self::zero(self.side, self.rank, degree);
        if degree > self.rank {
            return Ok(out);
        }
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let mut c = ring.mul(ca, cb);
                if merge_sign(*a, *b) {
                    c = ring.neg(&c);
                }
                out.add_term(ring, a | b, &c);
            }
        }
        Ok(out)
    }

    /// The module action of `self` on an element of the opposite algebra:
    /// the result has the side of `target` and degree `deg target - deg self`
    /// (zero if negative).
    pub fn act(&self, ring: &PolyRing<F>, target: &Self) -> Result<Self> {
        if self.side == target.side {
            return Err(Error::MixedSides);
        }
        if self.rank != target.rank {
            return Err(Error::Shape(format!("ranks {} and {}", self.rank, target.rank)));
        }
        if self.degree > target.degree {
            return Ok(Self::zero(target.side, target.rank, 0));
        }
        let mut out = Self::zero(target.side, target.rank, target.degree - self.degree);
        for (s, cs) in &self.terms {
            for (t, ct) in &target.terms {
                if let Some((rest, negative)) = act_basis(*s, *t) {
                    let mut c = ring.mul(cs, ct);
                    if negative {
                        c = ring.neg(&c);
                    }
                    out.add_term(ring, rest, &c);
                }
            }
        }
        Ok(out)
    }

    /// Contraction of a dual element `phi` (degree `q`) with a primal element
    /// `f` (degree `p`): `phi(f)` in `⋀^{p-q} F` when `q <= p`, otherwise
    /// `f(phi)` in `⋀^{q-p} F*`. When `p = q` both agree and give the pairing.
    pub fn contract(ring: &PolyRing<F>, phi: &Self, f: &Self) -> Result<Self> {
        if phi.side != Side::Dual || f.side != Side::Primal {
            return Err(Error::MixedSides);
        }
        if phi.degree <= f.degree {
            phi.act(ring, f)
        } else {
            f.act(ring, phi)
        }
    }

    /// The alternating matrix read off a 2-form: entry `(i, j)`, `i < j`, is
    /// the coefficient of `e_i ∧ e_j`.
    pub fn to_alternating_matrix(&self) -> AlternatingMatrix<F> {
        assert_eq!(self.degree, 2, "not a 2-form");
        let mut a = AlternatingMatrix::zero(self.rank);
        for (s, c) in &self.terms {
            let idx = indices_of(*s);
            a.set(idx[0], idx[1], c.clone());
        }
        a
    }

    /// The `l`-th divided power of a 2-form: the coefficient of `e_I` is the
    /// Pfaffian of the `I`-indexed principal submatrix. Computed as a signed
    /// sum over perfect matchings (sign = parity of crossings).
    pub fn divided_power(&self, ring: &PolyRing<F>, l: usize) -> Result<Self> {
        if self.side != Side::Primal || self.degree != 2 {
            return Err(Error::Shape("divided powers are defined here for primal 2-forms".into()));
        }
        if l == 0 {
            return Ok(Self::from_terms(ring, Side::Primal, self.rank, 0, [(0, ring.one())]));
        }
        let mut out = Self::zero(Side::Primal, self.rank, 2 * l);
        if 2 * l > self.rank {
            return Ok(out);
        }
        let a = self.to_alternating_matrix();
        for set in subsets(self.rank, 2 * l) {
            let c = pfaffian_by_matchings(ring, &a, &indices_of(set));
            out.add_term(ring, set, &c);
        }
        Ok(out)
    }

    /// A random element: each basis term is present with probability 0.6 and
    /// carries a random polynomial of total degree at most `max_deg`.
    pub fn random<R: Rng + ?Sized>(
        ring: &PolyRing<F>,
        rng: &mut R,
        side: Side,
        rank: usize,
        degree: usize,
        max_deg: u32,
    ) -> Self {
        let basis = subsets(rank, degree);
        let mut out = Self::zero(side, rank, degree);
        if basis.is_empty() {
            return out;
        }
        for set in &basis {
            if rng.gen_bool(0.6) {
                out.add_term(ring, *set, &ring.random(rng, max_deg, 2));
            }
        }
        out
    }
}

/// An `n × n` alternating matrix; only the strict upper triangle is stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingMatrix<F: Field> {
    n: usize,
    upper: Vec<Polynomial<F>>,
}

impl<F: Field> AlternatingMatrix<F> {
    pub fn zero(n: usize) -> Self {
        AlternatingMatrix { n, upper: vec![Polynomial::zero(); n * n.saturating_sub(1) / 2] }
    }

    /// The generic alternating matrix `X` with `x_(i,j)` above the diagonal.
    pub fn generic(ring: &PolyRing<F>) -> Self {
        let n = ring.f();
        let mut a = Self::zero(n);
        for i in 1..=n {
            for j in i + 1..=n {
                a.set(i, j, ring.x(i, j));
            }
        }
        a
    }

    pub fn size(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.n);
        let before: usize = (1..i).map(|a| self.n - a).sum();
        before + (j - i - 1)
    }

    /// Sets entry `(i, j)` for `i < j` (1-based); `(j, i)` becomes its negative.
    pub fn set(&mut self, i: usize, j: usize, v: Polynomial<F>) {
        let s = self.slot(i, j);
        self.upper[s] = v;
    }

    /// Entry `(i, j)` with the alternating sign convention.
    pub fn entry(&self, ring: &PolyRing<F>, i: usize, j: usize) -> Polynomial<F> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.slot(i, j)].clone(),
            Equal => Polynomial::zero(),
            Greater => ring.neg(&self.upper[self.slot(j, i)]),
        }
    }

    /// Entry `(i, j)`, `i < j`, without sign handling.
    pub fn upper_entry(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.upper[self.slot(i, j)]
    }
}

/// Pfaffian of the principal submatrix on `rows` (increasing, 1-based) by
/// expansion along the first row:
/// `Pf = sum_{j>=2} (-1)^j a_{1,j} Pf(rows without 1 and j)`.
pub fn pfaffian_oracle<F: Field>(
    ring: &PolyRing<F>,
    a: &AlternatingMatrix<F>,
    rows: &[usize],
) -> Result<Polynomial<F>> {
    if rows.len() % 2 == 1 {
        return Err(Error::OddPfaffian(rows.len()));
    }
    if rows.is_empty() {
        return Ok(ring.one());
    }
    let mut acc = ring.zero();
    for k in 1..rows.len() {
        let entry = a.entry(ring, rows[0], rows[k]);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> =
            rows.iter().enumerate().filter(|(idx, _)| *idx != 0 && *idx != k).map(|(_, &r)| r).collect();
        let term = ring.mul(&entry, &pfaffian_oracle(ring, a, &rest)?);
        // position k (0-based) is column j = k + 1 in 1-based terms
        if (k + 1) % 2 == 0 {
            acc = ring.add(&acc, &term);
        } else {
            acc = ring.sub(&acc, &term);
        }
    }
    Ok(acc)
}

/// Pfaffian as a sum over perfect matchings of `rows`, each signed by the
/// parity of its crossings. Independent of the row expansion above.
fn pfaffian_by_matchings<F: Field>(ring: &PolyRing<F>, a: &AlternatingMatrix<F>, rows: &[usize]) -> Polynomial<F> {
    fn matchings(items: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if items.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = items[0];
        for k in 1..items.len() {
            let rest: Vec<usize> = items
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != 0 && *i != k)
                .map(|(_, &v)| v)
                .collect();
            acc.push((first, items[k]));
            matchings(&rest, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    matchings(rows, &mut Vec::new(), &mut all);
    let mut terms = Vec::new();
    for m in all {
        let crossings = m
            .iter()
            .enumerate()
            .flat_map(|(i, p)| m[i + 1..].iter().map(move |q| (p, q)))
            .filter(|((a1, b1), (a2, b2))| (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1))
            .count();
        let mut prod = if crossings % 2 == 0 { ring.one() } else { ring.from_i64(-1) };
        for &(i, j) in &m {
            prod = ring.mul(&prod, a.upper_entry(i, j));
        }
        terms.extend(prod.into_terms());
    }
    ring.from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_polynomial, Rationals};

    fn ring(f: usize) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, f).unwrap()
    }

    #[test]
    fn basis_wedges() {
        let r = ring(3);
        let e1 = ExteriorElement::basis(&r, Side::Primal, 3, &[1]);
        let e2 = ExteriorElement::basis(&r, Side::Primal, 3, &[2]);
        let e12 = e1.wedge(&r, &e2).unwrap();
        assert_eq!(e12.coefficient(mask_of(&[1, 2])), r.one());
        let e21 = e2.wedge(&r, &e1).unwrap();
        assert_eq!(e21, e12.neg(&r));
        assert!(e1.wedge(&r, &e1).unwrap().is_zero());
    }

    #[test]
    fn interior_products_on_basis() {
        let r = ring(3);
        let e12 = ExteriorElement::basis(&r, Side::Primal, 3, &[1, 2]);
        let d1 = ExteriorElement::basis(&r, Side::Dual, 3, &[1]);
        let d3 = ExteriorElement::basis(&r, Side::Dual, 3, &[3]);
        let out = ExteriorElement::contract(&r, &d1, &e12).unwrap();
        assert_eq!(out, ExteriorElement::basis(&r, Side::Primal, 3, &[2]));
        assert!(ExteriorElement::contract(&r, &d3, &e12).unwrap().is_zero());
        // e*_2 ∧ e*_1 pairs to one with e_1 ∧ e_2
        let d21 = ExteriorElement::basis(&r, Side::Dual, 3, &[2, 1]);
        assert_eq!(ExteriorElement::contract(&r, &d21, &e12).unwrap().scalar(), r.one());
    }

    #[test]
    fn mixed_sides_rejected() {
        let r = ring(3);
        let e1 = ExteriorElement::basis(&r, Side::Primal, 3, &[1]);
        let d1 = ExteriorElement::basis(&r, Side::Dual, 3, &[1]);
        assert_eq!(e1.wedge(&r, &d1), Err(Error::MixedSides));
        assert_eq!(e1.act(&r, &e1), Err(Error::MixedSides));
    }

    #[test]
    fn pfaffian_base_cases() {
        let r = ring(4);
        let x = AlternatingMatrix::generic(&r);
        assert_eq!(pfaffian_oracle(&r, &x, &[]).unwrap(), r.one());
        assert_eq!(pfaffian_oracle(&r, &x, &[1, 2]).unwrap(), r.x(1, 2));
        assert_eq!(pfaffian_oracle(&r, &x, &[1, 2, 3]), Err(Error::OddPfaffian(3)));
        let pf4 = parse_polynomial(&r, "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)").unwrap();
        assert_eq!(pfaffian_oracle(&r, &x, &[1, 2, 3, 4]).unwrap(), pf4);
        assert_eq!(pfaffian_by_matchings(&r, &x, &[1, 2, 3, 4]), pf4);
    }

    #[test]
    fn subsets_are_lexicographic() {
        let s = subsets(4, 2);
        let idx: Vec<Vec<usize>> = s.iter().map(|&m| indices_of(m)).collect();
        assert_eq!(idx, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(subsets(3, 0), vec![0]);
        assert!(subsets(3, 4).is_empty());
    }
}
