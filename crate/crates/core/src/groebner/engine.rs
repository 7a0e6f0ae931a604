//! Buchberger's algorithm for submodules of a graded free module `R^r`.
//!
//! Ideals are the rank-one case. Pairs are chosen by the normal strategy with
//! sugar degree and pruned with the Gebauer–Möller criteria. Input generators
//! enter as pseudo-pairs processed after the S-pairs of the same degree, so
//! for homogeneous input the generators that survive reduction form a
//! minimal generating set.

use std::cmp::Ordering;

use crate::cancel;
use crate::error::Result;
use crate::matrix::Deg;
use crate::ring::{Field, Monomial, MonomialOrder, PolyRing, Polynomial};

/// How terms in different components are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrderKind {
    /// Shifted monomial first, then the component (lower index is larger).
    TermOverPosition,
    /// Component first (lower index is larger), then the monomial.
    PositionOverTerm,
    /// Every term in components `< k` beats every term in components `>= k`;
    /// term-over-position inside each block.
    Eliminate(usize),
}

/// A monomial order on `R^r` built from a ring order and the degrees of the
/// basis elements.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleOrder {
    mono: MonomialOrder,
    degs: Vec<Deg>,
    kind: ModuleOrderKind,
}

impl ModuleOrder {
    pub fn new(mono: MonomialOrder, degs: Vec<Deg>, kind: ModuleOrderKind) -> Self {
        ModuleOrder { mono, degs, kind }
    }

    pub fn rank(&self) -> usize {
        self.degs.len()
    }

    pub fn degs(&self) -> &[Deg] {
        &self.degs
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.mono
    }

    #[inline]
    fn top(&self, a: &Monomial, ca: u32, b: &Monomial, cb: u32) -> Ordering {
        self.mono
            .cmp_shifted(a, self.degs[ca as usize], b, self.degs[cb as usize])
            .then_with(|| cb.cmp(&ca))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ca: u32, b: &Monomial, cb: u32) -> Ordering {
        match self.kind {
            ModuleOrderKind::TermOverPosition => self.top(a, ca, b, cb),
            ModuleOrderKind::PositionOverTerm => cb.cmp(&ca).then_with(|| self.mono.cmp(a, b)),
            ModuleOrderKind::Eliminate(k) => {
                let (ua, ub) = ((ca as usize) < k, (cb as usize) < k);
                ua.cmp(&ub).then_with(|| self.top(a, ca, b, cb))
            }
        }
    }

    /// Total degree of the term `m e_c`.
    #[inline]
    pub fn degree(&self, m: &Monomial, c: u32) -> i32 {
        let d = self.degs[c as usize];
        m.degree() as i32 + d.0 + d.1
    }
}

/// An element of `R^r` as a list of terms sorted decreasingly in a module order.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<F: Field> {
    terms: Vec<(Monomial, u32, F::Elem)>,
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u32, F::Elem)] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&(Monomial, u32, F::Elem)> {
        self.terms.first()
    }

    /// Builds a vector from polynomial components.
    pub fn from_components(ord: &ModuleOrder, comps: &[Polynomial<F>]) -> Self {
        let mut terms = Vec::new();
        for (c, p) in comps.iter().enumerate() {
            for (m, a) in p.terms() {
                terms.push((*m, c as u32, a.clone()));
            }
        }
        terms.sort_by(|a, b| ord.cmp(&b.0, b.1, &a.0, a.1));
        Vector { terms }
    }

    /// Same as `from_components` with the components placed at `offset`.
    pub fn from_components_at(ord: &ModuleOrder, offset: usize, comps: &[Polynomial<F>]) -> Self {
        let mut terms = Vec::new();
        for (c, p) in comps.iter().enumerate() {
            for (m, a) in p.terms() {
                terms.push((*m, (c + offset) as u32, a.clone()));
            }
        }
        terms.sort_by(|a, b| ord.cmp(&b.0, b.1, &a.0, a.1));
        Vector { terms }
    }

    /// Concatenation of two vectors with disjoint component ranges.
    pub fn join(ord: &ModuleOrder, a: Vector<F>, b: Vector<F>) -> Self {
        let mut terms = a.terms;
        terms.extend(b.terms);
        terms.sort_by(|a, b| ord.cmp(&b.0, b.1, &a.0, a.1));
        Vector { terms }
    }

    /// Components `offset .. offset + len` as polynomials sorted by `ring`.
    pub fn components(&self, ring: &PolyRing<F>, offset: usize, len: usize) -> Vec<Polynomial<F>> {
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); len];
        for (m, c, a) in &self.terms {
            let c = *c as usize;
            if c >= offset && c < offset + len {
                buckets[c - offset].push((*m, a.clone()));
            }
        }
        buckets.into_iter().map(|t| ring.from_terms(t)).collect()
    }

    /// True when no term lies in components `< k`.
    pub fn vanishes_below(&self, k: usize) -> bool {
        self.terms.iter().all(|t| t.1 as usize >= k)
    }
}

/// Builds `a - c * m * b`, assuming both are sorted in `ord`.
fn sub_scaled<F: Field>(
    fld: &F,
    ord: &ModuleOrder,
    a: &[(Monomial, u32, F::Elem)],
    c: &F::Elem,
    m: &Monomial,
    b: &[(Monomial, u32, F::Elem)],
) -> Vec<(Monomial, u32, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<(Monomial, u32, F::Elem)> = None;
    while i < a.len() || j < b.len() || pending.is_some() {
        if pending.is_none() && j < b.len() {
            let (bm, bc, ba) = &b[j];
            pending = Some((bm.mul(m), *bc, fld.neg(&fld.mul(c, ba))));
            j += 1;
        }
        match (&pending, a.get(i)) {
            (Some(p), Some(t)) => match ord.cmp(&t.0, t.1, &p.0, p.1) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().expect("pending term"));
                }
                Ordering::Equal => {
                    let s = fld.add(&t.2, &p.2);
                    if !fld.is_zero(&s) {
                        out.push((t.0, t.1, s));
                    }
                    pending = None;
                    i += 1;
                }
            },
            (Some(_), None) => out.push(pending.take().expect("pending term")),
            (None, Some(t)) => {
                out.push(t.clone());
                i += 1;
            }
            (None, None) => break,
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Element<F: Field> {
    v: Vector<F>,
    lm: Monomial,
    comp: u32,
    mask: u32,
    sugar: i32,
    active: bool,
}

#[derive(Clone, Debug)]
enum PairKind {
    S(usize, usize),
    Input(usize),
}

#[derive(Clone, Debug)]
struct Pair {
    sugar: i32,
    lcm: Monomial,
    comp: u32,
    kind: PairKind,
}

/// Switches for one Buchberger run.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Buchberger's coprime-leading-term criterion; only sound for ideals.
    pub product_criterion: bool,
    /// Inter-reduce the tails of the final basis.
    pub reduce_result: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { product_criterion: false, reduce_result: true }
    }
}

/// The outcome of a Buchberger run.
#[derive(Clone, Debug)]
pub struct ModuleGB<F: Field> {
    ring: PolyRing<F>,
    order: ModuleOrder,
    elems: Vec<Vector<F>>,
    minimal_inputs: Vec<usize>,
}

struct Engine<'a, F: Field> {
    ring: &'a PolyRing<F>,
    ord: &'a ModuleOrder,
    basis: Vec<Element<F>>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    opts: Options,
}

impl<'a, F: Field> Engine<'a, F> {
    fn pair_before(&self, a: &Pair, b: &Pair) -> bool {
        let key = |p: &Pair| (p.sugar, matches!(p.kind, PairKind::Input(_)));
        match key(a).cmp(&key(b)) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
        match self.ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp) {
            Ordering::Less => return true,
            Ordering::Greater => return false,
            Ordering::Equal => {}
        }
        let idx = |p: &Pair| match p.kind {
            PairKind::S(i, j) => (i, j),
            PairKind::Input(i) => (i, 0),
        };
        idx(a) < idx(b)
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            if self.pair_before(&self.pairs[k], &self.pairs[best]) {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn find_reducer(&self, m: &Monomial, c: u32) -> Option<usize> {
        let mask = m.support_mask();
        let mut best: Option<usize> = None;
        for &g in &self.by_comp[c as usize] {
            let e = &self.basis[g];
            if e.mask & !mask != 0 || !e.lm.divides(m) {
                continue;
            }
            match best {
                Some(b) if self.basis[b].v.len() <= e.v.len() => {}
                _ => best = Some(g),
            }
        }
        best
    }

    /// Fully reduces `v` against the active basis.
    fn reduce(&self, v: Vector<F>) -> Vector<F> {
        let fld = self.ring.field();
        let mut rest = v.terms;
        let mut pos = 0;
        let mut done: Vec<(Monomial, u32, F::Elem)> = Vec::new();
        while pos < rest.len() {
            let (m, c, a) = rest[pos].clone();
            match self.find_reducer(&m, c) {
                Some(g) => {
                    let e = &self.basis[g];
                    let q = e.lm.quotient_of(&m);
                    // the reducer is monic, so the leading terms cancel exactly
                    rest = sub_scaled(fld, self.ord, &rest[pos..], &a, &q, &e.v.terms);
                    pos = 0;
                }
                None => {
                    done.push((m, c, a));
                    pos += 1;
                }
            }
        }
        debug_assert!(pos == rest.len());
        Vector { terms: done }
    }

    fn make_monic(&self, mut v: Vector<F>) -> Vector<F> {
        let fld = self.ring.field();
        if let Some((_, _, lc)) = v.terms.first() {
            if !fld.is_one(lc) {
                let inv = fld.inv(lc);
                for t in v.terms.iter_mut() {
                    t.2 = fld.mul(&t.2, &inv);
                }
            }
        }
        v
    }

    fn s_vector(&self, i: usize, j: usize, lcm: &Monomial) -> Vector<F> {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let qa = a.lm.quotient_of(lcm);
        let qb = b.lm.quotient_of(lcm);
        let fld = self.ring.field();
        let scaled_a: Vec<_> = a.v.terms[1..].iter().map(|(m, c, x)| (m.mul(&qa), *c, x.clone())).collect();
        Vector { terms: sub_scaled(fld, self.ord, &scaled_a, &fld.one(), &qb, &b.v.terms[1..]) }
    }

    fn insert(&mut self, v: Vector<F>, sugar: i32) {
        let (lm, comp, _) = v.terms[0].clone();
        let k = self.basis.len();
        let product = self.opts.product_criterion;

        // candidate pairs with the active elements in the same component
        let mut new: Vec<(usize, Monomial, bool)> = Vec::new();
        for &i in &self.by_comp[comp as usize] {
            let li = &self.basis[i].lm;
            new.push((i, li.lcm(&lm), product && li.is_coprime(&lm)));
        }

        // chain criterion on the old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| match p.kind {
            PairKind::S(i, j) if p.comp == comp && lm.divides(&p.lcm) => {
                let lik = basis[i].lm.lcm(&lm);
                let ljk = basis[j].lm.lcm(&lm);
                lik == p.lcm || ljk == p.lcm
            }
            _ => true,
        });

        // chain criterion among the new pairs, then the product criterion
        let mut keep = vec![true; new.len()];
        for a in 0..new.len() {
            for b in 0..new.len() {
                if a != b && new[b].1.divides(&new[a].1) && new[b].1 != new[a].1 {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut groups: Vec<(Monomial, Vec<usize>)> = Vec::new();
        for a in 0..new.len() {
            if !keep[a] {
                continue;
            }
            match groups.iter_mut().find(|g| g.0 == new[a].1) {
                Some(g) => g.1.push(a),
                None => groups.push((new[a].1, vec![a])),
            }
        }
        for (lcm, members) in groups {
            if members.iter().any(|&a| new[a].2) {
                continue;
            }
            let i = new[members[0]].0;
            let e = &self.basis[i];
            let sugar_i = e.sugar + e.lm.quotient_of(&lcm).degree() as i32;
            let sugar_k = sugar + lm.quotient_of(&lcm).degree() as i32;
            self.pairs.push(Pair { sugar: sugar_i.max(sugar_k), lcm, comp, kind: PairKind::S(i, k) });
        }

        // drop active elements whose leading term the new one divides
        let mut remaining = Vec::with_capacity(self.by_comp[comp as usize].len() + 1);
        for &i in &self.by_comp[comp as usize] {
            if lm.divides(&self.basis[i].lm) {
                self.basis[i].active = false;
            } else {
                remaining.push(i);
            }
        }
        remaining.push(k);
        self.by_comp[comp as usize] = remaining;
        self.basis.push(Element { mask: lm.support_mask(), lm, comp, v, sugar, active: true });
    }
}

impl<F: Field> ModuleGB<F> {
    /// Runs Buchberger's algorithm on `gens`, elements of `R^r` with
    /// `r = order.rank()`.
    pub fn compute(ring: &PolyRing<F>, order: ModuleOrder, gens: Vec<Vector<F>>, opts: Options) -> Result<Self> {
        let mut engine = Engine {
            ring,
            ord: &order,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); order.rank()],
            pairs: Vec::new(),
            opts,
        };
        let mut inputs = Vec::with_capacity(gens.len());
        for (idx, g) in gens.into_iter().enumerate() {
            if let Some((m, c, _)) = g.terms.first() {
                let sugar = g.terms.iter().map(|(m, c, _)| order.degree(m, *c)).max().unwrap_or(0);
                engine.pairs.push(Pair { sugar, lcm: *m, comp: *c, kind: PairKind::Input(idx) });
            }
            inputs.push(g);
        }
        let mut minimal_inputs = Vec::new();
        let mut steps = 0u64;
        while let Some(pair) = engine.next_pair() {
            steps += 1;
            if steps.is_multiple_of(16) {
                cancel::check()?;
            }
            let (v, is_input) = match pair.kind {
                PairKind::S(i, j) => (engine.s_vector(i, j, &pair.lcm), None),
                PairKind::Input(idx) => (std::mem::replace(&mut inputs[idx], Vector::zero()), Some(idx)),
            };
            let h = engine.reduce(v);
            if h.is_zero() {
                continue;
            }
            if let Some(idx) = is_input {
                minimal_inputs.push(idx);
            }
            let h = engine.make_monic(h);
            engine.insert(h, pair.sugar);
        }
        minimal_inputs.sort_unstable();

        let mut active: Vec<usize> = (0..engine.basis.len()).filter(|&i| engine.basis[i].active).collect();
        active.sort_by(|&a, &b| {
            let (x, y) = (&engine.basis[a], &engine.basis[b]);
            order.cmp(&x.lm, x.comp, &y.lm, y.comp)
        });
        let mut elems = Vec::with_capacity(active.len());
        if opts.reduce_result {
            for &i in &active {
                cancel::check()?;
                let v = &engine.basis[i].v;
                let head = v.terms[0].clone();
                let tail = engine.reduce(Vector { terms: v.terms[1..].to_vec() });
                let mut terms = Vec::with_capacity(tail.len() + 1);
                terms.push(head);
                terms.extend(tail.terms);
                elems.push(Vector { terms });
            }
        } else {
            elems = active.iter().map(|&i| engine.basis[i].v.clone()).collect();
        }
        Ok(ModuleGB { ring: ring.clone(), order, elems, minimal_inputs })
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.order.rank()
    }

    /// Basis elements, increasing by leading term.
    pub fn elements(&self) -> &[Vector<F>] {
        &self.elems
    }

    /// Indices of the input generators that were not redundant when reached.
    /// For homogeneous input these index a minimal generating set.
    pub fn minimal_inputs(&self) -> &[usize] {
        &self.minimal_inputs
    }

    /// Normal form of `v` with respect to the basis.
    pub fn reduce(&self, v: Vector<F>) -> Vector<F> {
        let engine = Engine {
            ring: &self.ring,
            ord: &self.order,
            basis: self
                .elems
                .iter()
                .map(|v| {
                    let (lm, comp, _) = v.terms[0].clone();
                    Element { v: v.clone(), mask: lm.support_mask(), lm, comp, sugar: 0, active: true }
                })
                .collect(),
            by_comp: {
                let mut by = vec![Vec::new(); self.order.rank()];
                for (i, v) in self.elems.iter().enumerate() {
                    by[v.terms[0].1 as usize].push(i);
                }
                by
            },
            pairs: Vec::new(),
            opts: Options::default(),
        };
        engine.reduce(v)
    }

    /// Normal forms of several vectors, sharing the reducer set.
    pub fn reduce_all(&self, vs: Vec<Vector<F>>) -> Vec<Vector<F>> {
        vs.into_iter().map(|v| self.reduce(v)).collect()
    }

    pub fn contains(&self, v: Vector<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Membership of a column given by polynomial components.
    pub fn contains_column(&self, col: &[Polynomial<F>]) -> bool {
        self.contains(Vector::from_components(&self.order, col))
    }
}

/// A set of generators of `R^r` together with their module order, the usual
/// input to `ModuleGB::compute`.
pub fn columns_to_vectors<F: Field>(ord: &ModuleOrder, cols: &[Vec<Polynomial<F>>]) -> Vec<Vector<F>> {
    cols.iter().map(|c| Vector::from_components(ord, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    fn ideal_order(deg: Deg) -> ModuleOrder {
        ModuleOrder::new(MonomialOrder::GrevLex, vec![deg], ModuleOrderKind::TermOverPosition)
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = PolyRing::new(Rationals, 4).unwrap();
        let ord = ideal_order((0, 0));
        let pf = r.sub(&r.mul(&r.x(1, 2), &r.x(3, 4)), &r.mul(&r.x(1, 3), &r.x(2, 4)));
        let gb = ModuleGB::compute(&r, ord.clone(), columns_to_vectors(&ord, &[vec![pf.clone()]]), Options::default())
            .unwrap();
        assert_eq!(gb.elements().len(), 1);
        assert!(gb.contains_column(&[r.mul(&pf, &r.t(1))]));
        assert!(!gb.contains_column(&[r.x(1, 2)]));
    }

    #[test]
    fn twisted_cubic_style_minors() {
        // 2x2 minors of [[a, b, c], [b, c, d]] need no new elements beyond the
        // three minors under grevlex, and all three are minimal
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 4).unwrap();
        let (a, b, c, d) = (r.x(1, 2), r.x(1, 3), r.x(1, 4), r.x(2, 3));
        let m1 = r.sub(&r.mul(&a, &c), &r.mul(&b, &b));
        let m2 = r.sub(&r.mul(&a, &d), &r.mul(&b, &c));
        let m3 = r.sub(&r.mul(&b, &d), &r.mul(&c, &c));
        let ord = ideal_order((0, 0));
        let gens = columns_to_vectors(&ord, &[vec![m1.clone()], vec![m2], vec![m3], vec![r.mul(&m1, &a)]]);
        let gb = ModuleGB::compute(&r, ord, gens, Options { product_criterion: true, reduce_result: true }).unwrap();
        assert_eq!(gb.minimal_inputs(), &[0, 1, 2]);
        assert_eq!(gb.elements().len(), 3);
    }

    #[test]
    fn elimination_order_finds_koszul_syzygy() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let (x, y) = (r.x(1, 2), r.x(1, 3));
        // rank 1 target plus two tag components
        let ord = ModuleOrder::new(MonomialOrder::GrevLex, vec![(0, 0), (1, 0), (1, 0)], ModuleOrderKind::Eliminate(1));
        let gens = vec![
            Vector::from_components(&ord, &[x.clone(), r.one(), r.zero()]),
            Vector::from_components(&ord, &[y.clone(), r.zero(), r.one()]),
        ];
        let gb = ModuleGB::compute(&r, ord, gens, Options { product_criterion: false, reduce_result: false }).unwrap();
        let kernel: Vec<_> = gb.elements().iter().filter(|v| v.vanishes_below(1)).collect();
        assert_eq!(kernel.len(), 1);
        let comps = kernel[0].components(&r, 1, 2);
        let s = r.add(&r.mul(&comps[0], &x), &r.mul(&comps[1], &y));
        assert!(s.is_zero());
        assert!(!comps[0].is_zero());
    }
}
