//! Syzygies, minimal graded free resolutions, homology of presented
//! complexes and the checks built on them.

use crate::betti::BettiTable;
use crate::cancel;
use crate::constructions::{generic_xi, map_matrix, pfaffians, MapName, PresentedComplex};
use crate::error::{Error, Result};
use crate::exterior::{ExteriorElement, Side};
use crate::groebner::{image_basis, kernel_modulo};
use crate::matrix::{Deg, GradedMatrix};
use crate::ring::{binomial, Field, PolyRing, Polynomial};

/// Generators of the kernel of `m`, pruned to a minimal set.
pub fn syzygies<F: Field>(ring: &PolyRing<F>, m: &GradedMatrix<F>) -> Result<GradedMatrix<F>> {
    kernel_modulo(ring, m, None, true)
}

/// A complex of free modules `... → F_2 → F_1 → F_0` with
/// `maps[i]: F_{i+1} → F_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeComplex<F: Field> {
    pub maps: Vec<GradedMatrix<F>>,
}

impl<F: Field> FreeComplex<F> {
    /// Basis degrees of `F_0, F_1, ...`.
    pub fn modules(&self) -> Vec<Vec<Deg>> {
        let mut out = Vec::new();
        if let Some(first) = self.maps.first() {
            out.push(first.target().to_vec());
        }
        for m in &self.maps {
            out.push(m.source().to_vec());
        }
        out
    }

    /// Index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.modules().iter().rposition(|m| !m.is_empty()).unwrap_or(0)
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_degrees(&self.modules())
    }

    /// Index `i` of the first map pair with `maps[i] ∘ maps[i + 1] ≠ 0`.
    pub fn first_nonzero_composite(&self, ring: &PolyRing<F>) -> Result<Option<usize>> {
        for i in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[i].compose(ring, &self.maps[i + 1])?.is_zero() {
                return Ok(Some(i + 1));
            }
        }
        Ok(None)
    }

    /// Positions `i >= 1` where `ker(F_i → F_{i-1})` is not contained in
    /// the image of `F_{i+1}`. Empty for a resolution.
    pub fn homology_defects(&self, ring: &PolyRing<F>) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for i in 1..=self.maps.len() {
            cancel::check()?;
            let kernel = kernel_modulo(ring, &self.maps[i - 1], None, false)?;
            let exact = match self.maps.get(i) {
                Some(incoming) if incoming.cols() > 0 => {
                    let gb = image_basis(ring, &[incoming])?;
                    kernel.columns().iter().all(|c| gb.contains_column(c))
                }
                _ => kernel.columns().iter().all(|c| c.iter().all(|p| p.is_zero())),
            };
            if !exact {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Whether every differential has all entries in the homogeneous maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| unit_position(m).is_none())
    }
}

fn is_unit<F: Field>(p: &Polynomial<F>) -> bool {
    p.lead_monomial().is_some_and(|m| m.is_one())
}

fn unit_position<F: Field>(m: &GradedMatrix<F>) -> Option<(usize, usize)> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).find(|&(i, j)| is_unit(m.entry(i, j)))
}

fn drop_index(n: usize, k: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != k).collect()
}

/// Removes unit entries by Gaussian elimination: a unit at `(r, c)` of
/// `maps[i]` splits off `R(-a) --u--> R(-a)`. Pivots are taken from the
/// lowest map index first, then the lowest `(row, column)`.
pub fn minimalize<F: Field>(ring: &PolyRing<F>, complex: &FreeComplex<F>) -> Result<(FreeComplex<F>, BettiTable)> {
    if let Some(position) = complex.first_nonzero_composite(ring)? {
        return Err(Error::NotAResolution { position });
    }
    let field = ring.field();
    let mut maps = complex.maps.clone();
    let mut i = 0;
    while i < maps.len() {
        let Some((r, c)) = unit_position(&maps[i]) else {
            i += 1;
            continue;
        };
        cancel::check()?;
        let m = &maps[i];
        let u_inv = field.inv(m.entry(r, c).lead_coeff().expect("unit entry"));
        let rows = drop_index(m.rows(), r);
        let cols = drop_index(m.cols(), c);
        let mut reduced = m.select(&rows, &cols);
        for (a, &ra) in rows.iter().enumerate() {
            let gamma = m.entry(ra, c);
            if gamma.is_zero() {
                continue;
            }
            let factor = ring.scale(&u_inv, gamma);
            for (b, &cb) in cols.iter().enumerate() {
                let beta = m.entry(r, cb);
                if beta.is_zero() {
                    continue;
                }
                let v = ring.sub(reduced.entry(a, b), &ring.mul(&factor, beta));
                reduced.set(a, b, v);
            }
        }
        maps[i] = reduced;
        if i + 1 < maps.len() {
            let next = &maps[i + 1];
            let all: Vec<usize> = (0..next.cols()).collect();
            maps[i + 1] = next.select(&drop_index(next.rows(), c), &all);
        }
        if i > 0 {
            let prev = &maps[i - 1];
            let all: Vec<usize> = (0..prev.rows()).collect();
            maps[i - 1] = prev.select(&all, &drop_index(prev.cols(), r));
        }
    }
    while maps.len() > 1 && maps.last().is_some_and(|m| m.cols() == 0) {
        maps.pop();
    }
    let out = FreeComplex { maps };
    let betti = out.betti();
    Ok((out, betti))
}

/// Default length bound for resolutions at matrix size `f`: `C(f-2, 2) + 3`.
pub fn default_max_len(f: usize) -> usize {
    binomial(f.saturating_sub(2), 2) + 3
}

/// Minimal free resolution of the cokernel of `presentation`.
/// Fails with [`Error::Truncated`] when a nonzero syzygy module remains after
/// `max_len` steps.
pub fn free_resolution<F: Field>(
    ring: &PolyRing<F>,
    presentation: &GradedMatrix<F>,
    max_len: usize,
) -> Result<FreeComplex<F>> {
    if max_len == 0 {
        return Err(Error::InvalidParameter("max_len must be positive".into()));
    }
    let first = if presentation.cols() == 0 {
        presentation.clone()
    } else {
        let keep = crate::groebner::minimal_columns(ring, presentation)?;
        let all: Vec<usize> = (0..presentation.rows()).collect();
        presentation.select(&all, &keep)
    };
    let mut maps = vec![first];
    loop {
        cancel::check()?;
        let last = maps.last().expect("nonempty");
        if last.cols() == 0 {
            break;
        }
        let next = syzygies(ring, last)?;
        if next.cols() == 0 {
            break;
        }
        if maps.len() >= max_len {
            return Err(Error::Truncated { max_len });
        }
        maps.push(next);
    }
    let (min, _) = minimalize(ring, &FreeComplex { maps })?;
    Ok(min)
}

/// `(R/(gens))` presented by the row of generators.
pub fn cyclic_presentation<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<GradedMatrix<F>> {
    GradedMatrix::row(ring, gens)
}

/// Whether the complex is exact at `position`: every element of the kernel
/// of the outgoing map (computed modulo the relations of the next module)
/// lies in the image of the incoming map plus the relations of this module.
/// At the ends the missing map counts as zero.
pub fn homology_is_zero<F: Field>(c: &PresentedComplex<F>, position: usize) -> Result<bool> {
    let ring = &c.ring;
    let module = c.modules.get(position).ok_or_else(|| Error::InvalidParameter(format!("no position {position}")))?;
    let kernel = match c.maps.get(position) {
        Some(out) => kernel_modulo(ring, out, Some(&c.modules[position + 1].relations), false)?,
        None => GradedMatrix::identity(ring, module.generators.clone()),
    };
    let mut spans = vec![&module.relations];
    if position > 0 {
        spans.push(&c.maps[position - 1]);
    }
    let gb = image_basis(ring, &spans)?;
    for col in kernel.columns() {
        cancel::check()?;
        if !gb.contains_column(&col) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The shift `σ` with `β_{i,j} = β_{c-i,σ-j}` when the table has length
/// `codim` and is palindromic in that sense.
pub fn betti_palindrome_check(b: &BettiTable, codim: usize) -> Option<i32> {
    match b.palindrome() {
        Some((c, sigma)) if c == codim => Some(sigma),
        _ => None,
    }
}

/// Outcome of the comparison of `N = coker(d1) ⊗ A` at `f = 5` over a field
/// of characteristic 2 and over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Char2Anomaly {
    /// The witness `Pf_1234 · e_5*` lies in the column span of `d1` over `F_2`.
    pub witness_in_d1_char2: bool,
    /// The witness lies in the relations of `N` over `F_2` (it is zero in `N`).
    pub witness_zero_in_n_char2: bool,
    /// The witness lies in the column span of `d1` over `Q`.
    pub witness_in_d1_rational: bool,
    /// `d1` of the explicit preimage `[φ1(ξ)](φ4) + ½ ξ(φ1 ∧ φ4)` equals the witness over `Q`.
    pub certificate_holds: bool,
    pub beta1_char2: usize,
    pub beta1_rational: usize,
    pub pd_char2: usize,
    pub pd_rational: usize,
}

impl Char2Anomaly {
    /// All the expected facts: the witness separates the characteristics.
    pub fn confirms_anomaly(&self) -> bool {
        !self.witness_in_d1_char2
            && self.witness_zero_in_n_char2
            && self.witness_in_d1_rational
            && self.certificate_holds
            && self.beta1_char2 > self.beta1_rational
            && self.pd_char2 == self.pd_rational
    }
}

/// Presentation `[d1 | I·F*]` of `N` with `F*` generated in degree 0.
pub fn n_presentation<F: Field>(ring: &PolyRing<F>) -> Result<GradedMatrix<F>> {
    let d1 = map_matrix(ring, MapName::D1)?;
    let shifted = GradedMatrix::from_columns(ring, vec![(0, 0); ring.f()], d1.columns(), (1, 0))?;
    let ideal = GradedMatrix::ideal_relations(ring, &vec![(0, 0); ring.f()], &pfaffians(ring)?)?;
    shifted.hstack(&ideal)
}

/// The column `[0, ..., 0, Pf_1234]` of `F*` at `f = 5`.
pub fn char2_witness<F: Field>(ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>> {
    if ring.f() != 5 {
        return Err(Error::InvalidParameter("the witness lives at f = 5".into()));
    }
    let mut col = vec![ring.zero(); 5];
    col[4] = pfaffians(ring)?[0].clone();
    Ok(col)
}

/// `ξ^(2)(φ4)·φ1 - ξ([φ1(ξ)](φ4) + ½ ξ(φ1 ∧ φ4))`; zero whenever 2 is invertible.
pub fn half_identity_defect<F: Field>(
    ring: &PolyRing<F>,
    phi1: &ExteriorElement<F>,
    phi4: &ExteriorElement<F>,
) -> Result<ExteriorElement<F>> {
    let field = ring.field();
    let half = ring.constant(field.inv(&field.from_i64(2)));
    let xi = generic_xi(ring)?;
    let xi2 = xi.divided_power(ring, 2)?;
    let lhs = phi1.scale(ring, &ExteriorElement::contract(ring, phi4, &xi2)?.scalar());
    let preimage = phi1.act(ring, &xi)?.act(ring, phi4)?.add(ring, &xi.act(ring, &phi1.wedge(ring, phi4)?)?.scale(ring, &half))?;
    lhs.sub(ring, &xi.act(ring, &preimage)?)
}

fn witness_in_span<F: Field>(ring: &PolyRing<F>, m: &GradedMatrix<F>, col: &[Polynomial<F>]) -> Result<bool> {
    Ok(image_basis(ring, &[m])?.contains_column(col))
}

/// Compares `N` at `f = 5` over `F_2` and over `Q`.
pub fn char2_anomaly_check() -> Result<Char2Anomaly> {
    use crate::ring::{PrimeField, Rationals};
    let r2 = PolyRing::new(PrimeField::new(2)?, 5)?;
    let rq = PolyRing::new(Rationals, 5)?;
    let max_len = default_max_len(5);

    let w2 = char2_witness(&r2)?;
    let d1_2 = map_matrix(&r2, MapName::D1)?;
    let n2 = n_presentation(&r2)?;
    let res2 = free_resolution(&r2, &n2, max_len)?;

    let wq = char2_witness(&rq)?;
    let d1_q = map_matrix(&rq, MapName::D1)?;
    let nq = n_presentation(&rq)?;
    let resq = free_resolution(&rq, &nq, max_len)?;

    let phi1 = ExteriorElement::basis(&rq, Side::Dual, 5, &[5]);
    let phi4 = ExteriorElement::basis(&rq, Side::Dual, 5, &[1, 2, 3, 4]);
    let certificate_holds = half_identity_defect(&rq, &phi1, &phi4)?.is_zero();

    Ok(Char2Anomaly {
        witness_in_d1_char2: witness_in_span(&r2, &d1_2, &w2)?,
        witness_zero_in_n_char2: witness_in_span(&r2, &n2, &w2)?,
        witness_in_d1_rational: witness_in_span(&rq, &d1_q, &wq)?,
        certificate_holds,
        beta1_char2: res2.modules().get(1).map_or(0, |m| m.len()),
        beta1_rational: resq.modules().get(1).map_or(0, |m| m.len()),
        pd_char2: res2.length(),
        pd_rational: resq.length(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_complex, build_ideal, ComplexName, IdealKind};
    use crate::ring::{PrimeField, Rationals};

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let (x, y) = (r.x(1, 2), r.x(1, 3));
        let m = GradedMatrix::row(&r, &[x.clone(), y.clone()]).unwrap();
        let s = syzygies(&r, &m).unwrap();
        assert_eq!(s.cols(), 1);
        let col = s.column(0);
        assert!(col == vec![y.clone(), r.neg(&x)] || col == vec![r.neg(&y), x]);
        assert_eq!(syzygies(&r, &GradedMatrix::identity(&r, vec![(0, 0), (0, 0)])).unwrap().cols(), 0);
    }

    #[test]
    fn resolution_of_a_variable() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let p = cyclic_presentation(&r, &[r.x(1, 2)]).unwrap();
        let res = free_resolution(&r, &p, 3).unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.betti().totals(), vec![1, 1]);
        assert_eq!(res.betti().get(1, (1, 0)), 1);
    }

    #[test]
    fn padding_is_removed() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let x = r.x(1, 2);
        // R(-1) ⊕ R(-1) --[x 0; 0 1]--> R ⊕ R(-1)
        let mut m = GradedMatrix::zero(vec![(0, 0), (1, 0)], vec![(1, 0), (1, 0)]);
        m.set(0, 0, x.clone());
        m.set(1, 1, r.one());
        let (min, betti) = minimalize(&r, &FreeComplex { maps: vec![m] }).unwrap();
        assert!(min.is_minimal());
        assert_eq!(betti.totals(), vec![1, 1]);
        assert_eq!(*min.maps[0].entry(0, 0), x);
    }

    #[test]
    fn minimal_input_is_unchanged() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let p = cyclic_presentation(&r, &[r.x(1, 2), r.x(1, 3)]).unwrap();
        let res = free_resolution(&r, &p, 3).unwrap();
        let (again, _) = minimalize(&r, &res).unwrap();
        assert_eq!(again, res);
    }

    #[test]
    fn non_complex_is_rejected() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let a = GradedMatrix::row(&r, &[r.x(1, 2)]).unwrap();
        let b = GradedMatrix::from_columns(&r, vec![(1, 0)], vec![vec![r.x(1, 3)]], (0, 0)).unwrap();
        let c = FreeComplex { maps: vec![a, b] };
        assert_eq!(minimalize(&r, &c), Err(Error::NotAResolution { position: 1 }));
    }

    #[test]
    fn truncation_is_reported() {
        let r = PolyRing::new(Rationals, 3).unwrap();
        let p = cyclic_presentation(&r, &[r.x(1, 2), r.x(1, 3), r.x(2, 3)]).unwrap();
        assert_eq!(free_resolution(&r, &p, 2), Err(Error::Truncated { max_len: 2 }));
        assert_eq!(free_resolution(&r, &p, 3).unwrap().betti().totals(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn gorenstein_codim_three_at_four() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 4).unwrap();
        let j = build_ideal(&r, IdealKind::J).unwrap();
        let res = free_resolution(&r, &cyclic_presentation(&r, &j.gens).unwrap(), default_max_len(4)).unwrap();
        assert_eq!(res.betti().totals(), vec![1, 5, 5, 1]);
        assert!(res.first_nonzero_composite(&r).unwrap().is_none());
        assert!(betti_palindrome_check(&res.betti(), 3).is_some());
    }

    #[test]
    fn seq43_is_exact_at_two() {
        let r = PolyRing::new(Rationals, 2).unwrap();
        let c = build_complex(&r, ComplexName::Seq43).unwrap();
        for p in 0..c.len() {
            assert!(homology_is_zero(&c, p).unwrap(), "position {p}");
        }
    }

    #[test]
    fn seq32_leftmost_position_is_not_exact() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 4).unwrap();
        let c = build_complex(&r, ComplexName::Seq32).unwrap();
        assert!(!homology_is_zero(&c, 0).unwrap());
        assert!(homology_is_zero(&c, 2).unwrap());
    }

    #[test]
    fn half_identity_needs_two_invertible() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 5).unwrap();
        let phi1 = ExteriorElement::basis(&r, Side::Dual, 5, &[2]);
        let phi4 = ExteriorElement::basis(&r, Side::Dual, 5, &[1, 3, 4, 5]);
        assert!(half_identity_defect(&r, &phi1, &phi4).unwrap().is_zero());
    }
}
