//! Gröbner bases of ideals and submodules: membership, kernels of matrices
//! modulo relations, ideal quotients, saturation-style membership, and
//! dimension with Hilbert numerators.

mod engine;
mod hilbert;

pub use engine::{columns_to_vectors, ModuleGB, ModuleOrder, ModuleOrderKind, Options, Vector};
pub use hilbert::{hilbert_numerator, monomial_dimension, order_at_one, HilbertData};

use crate::error::{Error, Result};
use crate::matrix::{Deg, GradedMatrix};
use crate::ring::{Field, Monomial, MonomialOrder, PolyRing, Polynomial};

/// A reduced Gröbner basis of an ideal: monic, inter-reduced, sorted
/// increasingly by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    gb: ModuleGB<F>,
    gens: Vec<Polynomial<F>>,
}

fn ideal_order(mono: MonomialOrder) -> ModuleOrder {
    ModuleOrder::new(mono, vec![(0, 0)], ModuleOrderKind::TermOverPosition)
}

impl<F: Field> GroebnerBasis<F> {
    fn from_module(ring: PolyRing<F>, gb: ModuleGB<F>) -> Self {
        let gens = gb.elements().iter().map(|v| v.components(&ring, 0, 1).remove(0)).collect();
        GroebnerBasis { ring, gb, gens }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| *g.lead_monomial().expect("nonzero basis element")).collect()
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let v = Vector::from_components(self.gb.order(), std::slice::from_ref(f));
        self.gb.reduce(v).components(&self.ring, 0, 1).remove(0)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.lead_monomial().is_some_and(|m| m.is_one()))
    }

    /// Both inclusions, decided by normal forms.
    pub fn same_ideal(&self, other: &GroebnerBasis<F>) -> bool {
        self.gens.iter().all(|g| other.contains(g)) && other.gens.iter().all(|g| self.contains(g))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `order`.
pub fn groebner_basis<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<F>> {
    let ring = ring.with_order(order);
    let ord = ideal_order(order);
    let vs = gens.iter().filter(|g| !g.is_zero()).map(|g| Vector::from_components(&ord, std::slice::from_ref(g))).collect();
    let gb = ModuleGB::compute(&ring, ord, vs, Options { product_criterion: true, reduce_result: true })?;
    Ok(GroebnerBasis::from_module(ring, gb))
}

/// A minimal generating subset of a homogeneous ideal, in input order.
pub fn minimal_generators<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Inhomogeneous);
    }
    let ord = ideal_order(ring.order());
    let vs = gens.iter().map(|g| Vector::from_components(&ord, std::slice::from_ref(g))).collect();
    let gb = ModuleGB::compute(ring, ord, vs, Options { product_criterion: true, reduce_result: false })?;
    Ok(gb.minimal_inputs().iter().map(|&i| gens[i].clone()).collect())
}

/// `(I : f)` for `I = (gens)`, computed from the syzygies of `[f, gens]`:
/// the first coordinates of the syzygies generate the quotient.
pub fn ideal_quotient<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>], f: &Polynomial<F>) -> Result<GroebnerBasis<F>> {
    if f.is_zero() {
        return Err(Error::InvalidParameter("ideal quotient by the zero polynomial".into()));
    }
    let fdeg = f.total_degree().unwrap_or(0) as i32;
    let ord = ModuleOrder::new(ring.order(), vec![(0, 0), (fdeg, 0)], ModuleOrderKind::Eliminate(1));
    let mut vs = vec![Vector::from_components(&ord, &[f.clone(), ring.one()])];
    for g in gens.iter().filter(|g| !g.is_zero()) {
        vs.push(Vector::from_components(&ord, &[g.clone(), ring.zero()]));
    }
    let gb = ModuleGB::compute(ring, ord, vs, Options { product_criterion: false, reduce_result: false })?;
    let quotient: Vec<Polynomial<F>> = gb
        .elements()
        .iter()
        .filter(|v| v.vanishes_below(1))
        .map(|v| v.components(ring, 1, 1).remove(0))
        .collect();
    groebner_basis(ring, &quotient, ring.order())
}

/// Outcome of a bounded saturation membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaturationWitness {
    pub member: bool,
    /// The least `N` with `f^N g` in the ideal, when one was found.
    pub exponent: Option<u32>,
}

/// Least `N <= bound` with `f^N · g ∈ (gens)`.
pub fn saturation_member<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    bound: u32,
) -> Result<SaturationWitness> {
    let gb = groebner_basis(ring, gens, ring.order())?;
    Ok(saturation_member_gb(&gb, f, g, bound))
}

/// As [`saturation_member`] against a precomputed basis.
pub fn saturation_member_gb<F: Field>(gb: &GroebnerBasis<F>, f: &Polynomial<F>, g: &Polynomial<F>, bound: u32) -> SaturationWitness {
    let ring = gb.ring();
    let mut h = gb.normal_form(g);
    for n in 0..=bound {
        if h.is_zero() {
            return SaturationWitness { member: true, exponent: Some(n) };
        }
        h = gb.normal_form(&ring.mul(f, &h));
    }
    SaturationWitness { member: false, exponent: None }
}

/// Dimension, codimension and Hilbert numerator of `S / (gens)` where `S` is
/// the full polynomial ring of `ring`.
pub fn dimension_codim<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<HilbertData> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::Inhomogeneous);
    }
    let gb = groebner_basis(ring, gens, MonomialOrder::GrevLex)?;
    Ok(hilbert_data(&gb))
}

/// Hilbert data read from the leading monomials of a basis.
pub fn hilbert_data<F: Field>(gb: &GroebnerBasis<F>) -> HilbertData {
    let n = gb.ring().nvars();
    let lms = gb.leading_monomials();
    let dim = monomial_dimension(&lms, n);
    HilbertData { dim, codim: n - dim, hilbert_numerator: hilbert_numerator(&lms) }
}

/// Gröbner basis of the submodule of `R^r` spanned by the columns of the
/// given matrices (all with the same target).
pub fn image_basis<F: Field>(ring: &PolyRing<F>, mats: &[&GradedMatrix<F>]) -> Result<ModuleGB<F>> {
    let target = mats
        .first()
        .map(|m| m.target().to_vec())
        .ok_or_else(|| Error::Shape("image of an empty list of matrices".into()))?;
    if mats.iter().any(|m| m.target() != target.as_slice()) {
        return Err(Error::Shape("matrices with different targets".into()));
    }
    let ord = ModuleOrder::new(ring.order(), target, ModuleOrderKind::TermOverPosition);
    let mut vs = Vec::new();
    for m in mats {
        for col in m.columns() {
            let v = Vector::from_components(&ord, &col);
            if !v.is_zero() {
                vs.push(v);
            }
        }
    }
    ModuleGB::compute(ring, ord, vs, Options::default())
}

/// Indices of a minimal subset of the columns of a graded matrix spanning
/// its image, in column order.
pub fn minimal_columns<F: Field>(ring: &PolyRing<F>, m: &GradedMatrix<F>) -> Result<Vec<usize>> {
    let ord = ModuleOrder::new(ring.order(), m.target().to_vec(), ModuleOrderKind::TermOverPosition);
    let vs = m.columns().iter().map(|c| Vector::from_components(&ord, c)).collect();
    let gb = ModuleGB::compute(ring, ord, vs, Options { product_criterion: false, reduce_result: false })?;
    Ok(gb.minimal_inputs().to_vec())
}

/// Columns generating `{ a : map · a ∈ image(relations) }`, a submodule of
/// the source of `map`. With `minimal`, the generators are pruned to a
/// minimal generating set.
pub fn kernel_modulo<F: Field>(
    ring: &PolyRing<F>,
    map: &GradedMatrix<F>,
    relations: Option<&GradedMatrix<F>>,
    minimal: bool,
) -> Result<GradedMatrix<F>> {
    let r = map.rows();
    let k = map.cols();
    if let Some(rel) = relations {
        if rel.target() != map.target() {
            return Err(Error::Shape("relations must share the target of the map".into()));
        }
    }
    let mut degs = map.target().to_vec();
    degs.extend_from_slice(map.source());
    let ord = ModuleOrder::new(ring.order(), degs, ModuleOrderKind::Eliminate(r));
    let mut vs = Vec::with_capacity(k + relations.map_or(0, |m| m.cols()));
    for j in 0..k {
        let mut tag = vec![ring.zero(); k];
        tag[j] = ring.one();
        let head = Vector::from_components(&ord, &map.column(j));
        let tail = Vector::from_components_at(&ord, r, &tag);
        vs.push(Vector::join(&ord, head, tail));
    }
    if let Some(rel) = relations {
        for col in rel.columns() {
            let v = Vector::from_components(&ord, &col);
            if !v.is_zero() {
                vs.push(v);
            }
        }
    }
    let gb = ModuleGB::compute(ring, ord.clone(), vs, Options { product_criterion: false, reduce_result: false })?;
    let mut cols = Vec::new();
    let mut col_degs: Vec<Deg> = Vec::new();
    for v in gb.elements().iter().filter(|v| v.vanishes_below(r)) {
        let (m, c, _) = v.lead().expect("nonzero basis element");
        let d = ord.degs()[*c as usize];
        let (a, b) = m.bidegree();
        col_degs.push((d.0 + a as i32, d.1 + b as i32));
        cols.push(v.components(ring, r, k));
    }
    let mut out = GradedMatrix::zero(map.source().to_vec(), col_degs);
    for (j, col) in cols.into_iter().enumerate() {
        for (i, p) in col.into_iter().enumerate() {
            out.set(i, j, p);
        }
    }
    if !minimal || out.cols() == 0 {
        return Ok(out);
    }
    let keep = minimal_columns(ring, &out)?;
    let all: Vec<usize> = (0..out.rows()).collect();
    Ok(out.select(&all, &keep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    #[test]
    fn quotient_of_square_by_variable() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let x = r.x(1, 2);
        let q = ideal_quotient(&r, &[r.mul(&x, &x)], &x).unwrap();
        assert_eq!(q.generators(), &[x]);
    }

    #[test]
    fn quotient_by_zero_is_rejected() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        assert!(ideal_quotient(&r, &[r.x(1, 2)], &r.zero()).is_err());
    }

    #[test]
    fn saturation_exponents() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 3).unwrap();
        let (x, y) = (r.x(1, 2), r.x(1, 3));
        let ideal = [r.mul(&r.mul(&x, &x), &y)];
        let w = saturation_member(&r, &ideal, &x, &y, 5).unwrap();
        assert_eq!(w, SaturationWitness { member: true, exponent: Some(2) });
        let w = saturation_member(&r, &ideal, &y, &x, 5).unwrap();
        assert!(!w.member);
        let w = saturation_member(&r, &ideal, &x, &ideal[0], 5).unwrap();
        assert_eq!(w.exponent, Some(0));
    }

    #[test]
    fn koszul_kernel_of_a_row() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let m = GradedMatrix::row(&r, &[r.x(1, 2), r.x(1, 3)]).unwrap();
        let k = kernel_modulo(&r, &m, None, true).unwrap();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.source(), &[(2, 0)]);
        assert!(m.compose(&r, &k).unwrap().is_zero());
    }

    #[test]
    fn identity_has_no_kernel() {
        let r = PolyRing::new(Rationals, 2).unwrap();
        let id = GradedMatrix::identity(&r, vec![(0, 0), (1, 0)]);
        assert_eq!(kernel_modulo(&r, &id, None, true).unwrap().cols(), 0);
    }

    #[test]
    fn inhomogeneous_dimension_is_rejected() {
        let r = PolyRing::new(Rationals, 2).unwrap();
        let g = r.add(&r.x(1, 2), &r.one());
        assert_eq!(dimension_codim(&r, &[g]), Err(Error::Inhomogeneous));
    }
}
