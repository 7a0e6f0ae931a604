//! The generic objects: the 2-form `ξ`, the covector `τ`, the ideals `I`, `K`,
//! `J`, `I_λ`, the named matrices between exterior powers, the localization
//! variable sets and the four presented complexes built from them.
//!
//! Apart from `d0`, whose matrix is `-X` by definition, every matrix here is
//! produced by applying exterior-algebra operations to basis elements and
//! reading off coordinates.

use std::fmt;
use std::str::FromStr;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::exterior::{indices_of, mask_of, subsets, ExteriorElement, Side};
use crate::groebner::image_basis;
use crate::matrix::{deg_add, Deg, GradedMatrix};
use crate::ring::{binomial, Bidegree, Field, PolyRing, Polynomial, Variable};

type Elem<F> = ExteriorElement<F>;

fn need_f<F: Field>(ring: &PolyRing<F>, min: usize, what: &str) -> Result<usize> {
    let f = ring.f();
    if f < min {
        return Err(Error::InvalidParameter(format!("{what} needs f >= {min}, got {f}")));
    }
    Ok(f)
}

/// `ξ = Σ_{i<j} x_(i,j) e_i ∧ e_j`.
pub fn generic_xi<F: Field>(ring: &PolyRing<F>) -> Result<Elem<F>> {
    let f = need_f(ring, 2, "the generic 2-form")?;
    let terms = subsets(f, 2).into_iter().map(|m| {
        let ij = indices_of(m);
        (m, ring.x(ij[0], ij[1]))
    });
    Ok(ExteriorElement::from_terms(ring, Side::Primal, f, 2, terms))
}

/// `τ = Σ t_i e_i*`.
pub fn generic_tau<F: Field>(ring: &PolyRing<F>) -> Elem<F> {
    let f = ring.f();
    let terms = (1..=f).map(|i| (mask_of(&[i]), ring.t(i)));
    ExteriorElement::from_terms(ring, Side::Dual, f, 1, terms)
}

/// The Pfaffians of the principal 4×4 submatrices of `X`, in lexicographic
/// order of the row sets: the coefficients of `ξ^(2)`.
pub fn pfaffians<F: Field>(ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>> {
    let xi2 = generic_xi(ring)?.divided_power(ring, 2)?;
    Ok(subsets(ring.f(), 4).into_iter().map(|s| xi2.coefficient(s)).collect())
}

/// The entries `(tX)_1, ..., (tX)_f`: the coordinates of `τ(ξ)` in `F`.
pub fn t_x_entries<F: Field>(ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>> {
    let txi = generic_tau(ring).act(ring, &generic_xi(ring)?)?;
    Ok((1..=ring.f()).map(|j| txi.coefficient(mask_of(&[j]))).collect())
}

/// Which ideal to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    /// `Pf_4(X)`.
    I,
    /// The entries of `tX`.
    K,
    /// `I + K`.
    J,
    /// `I + (x_(i,j) : j <= λ)`.
    Lambda(usize),
    /// `Pf_4` of `X` with its first row and column deleted.
    IPrime,
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealKind::I => write!(f, "I"),
            IdealKind::K => write!(f, "K"),
            IdealKind::J => write!(f, "J"),
            IdealKind::Lambda(l) => write!(f, "I_{l}"),
            IdealKind::IPrime => write!(f, "Iprime"),
        }
    }
}

/// An ideal given by an explicit generator list.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec<F: Field> {
    pub kind: IdealKind,
    pub f: usize,
    pub gens: Vec<Polynomial<F>>,
}

impl<F: Field> IdealSpec<F> {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Bidegrees of the generators; all generators built here are bihomogeneous.
    pub fn bidegrees(&self, ring: &PolyRing<F>) -> Vec<(u32, u32)> {
        self.gens
            .iter()
            .map(|g| match ring.bidegree(g) {
                Bidegree::Pure(a, b) => (a, b),
                other => panic!("generator of {} has bidegree {other:?}", self.kind),
            })
            .collect()
    }
}

pub fn build_ideal<F: Field>(ring: &PolyRing<F>, kind: IdealKind) -> Result<IdealSpec<F>> {
    let f = need_f(ring, 2, "the ideals")?;
    let gens = match kind {
        IdealKind::I => pfaffians(ring)?,
        IdealKind::K => t_x_entries(ring)?,
        IdealKind::J => {
            let mut g = pfaffians(ring)?;
            g.extend(t_x_entries(ring)?);
            g
        }
        IdealKind::Lambda(l) => {
            if l == 0 || l >= f {
                return Err(Error::InvalidParameter(format!("lambda must lie in 1..={}, got {l}", f - 1)));
            }
            let mut g = pfaffians(ring)?;
            for j in 2..=l {
                for i in 1..j {
                    g.push(ring.x(i, j));
                }
            }
            g
        }
        IdealKind::IPrime => {
            let all = pfaffians(ring)?;
            subsets(f, 4).into_iter().zip(all).filter(|(s, _)| s & 1 == 0).map(|(_, p)| p).collect()
        }
    };
    Ok(IdealSpec { kind, f, gens })
}

/// The named matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapName {
    /// `φ1 ↦ φ1(ξ)`, `F* → F`.
    D0,
    /// `φ3 ↦ ξ(φ3)`, `⋀³F* → F*`.
    D1,
    /// `f1 ↦ f1 ∧ ξ`, `F → ⋀³F`.
    Delta1,
    /// `[x_(2,3), -x_(1,3), x_(1,2)]`, `A³ → A`.
    Rho,
    /// The first three rows of `d0`.
    D0Prime,
    /// The row vector `t`.
    TauRow,
    /// `φ1 ↦ [τ(ξ)](φ1)`, `F* → R`.
    TXiRow,
    /// `E1 → E0` of the relation complex.
    BigD1,
    /// `E2 → E1` of the relation complex.
    BigD2,
}

impl MapName {
    pub const ALL: [MapName; 9] = [
        MapName::D0,
        MapName::D1,
        MapName::Delta1,
        MapName::Rho,
        MapName::D0Prime,
        MapName::TauRow,
        MapName::TXiRow,
        MapName::BigD1,
        MapName::BigD2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::D0 => "d0",
            MapName::D1 => "d1",
            MapName::Delta1 => "delta1",
            MapName::Rho => "rho",
            MapName::D0Prime => "d0prime",
            MapName::TauRow => "tau_row",
            MapName::TXiRow => "tXi_row",
            MapName::BigD1 => "D1",
            MapName::BigD2 => "D2",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// A list of basis elements with printable labels.
struct Basis<F: Field> {
    elems: Vec<Elem<F>>,
    labels: Vec<String>,
}

impl<F: Field> Basis<F> {
    fn len(&self) -> usize {
        self.elems.len()
    }

    /// Coordinates of `v` in this basis. Every basis element is `±e_S` for a
    /// distinct set `S`, so the coordinate is the coefficient times that sign.
    fn coords(&self, ring: &PolyRing<F>, v: &Elem<F>) -> Vec<Polynomial<F>> {
        self.elems
            .iter()
            .map(|b| {
                let (mask, sign) = b.terms().next().expect("basis element is nonzero");
                ring.mul(&v.coefficient(mask), sign)
            })
            .collect()
    }
}

fn star(side: Side) -> &'static str {
    match side {
        Side::Primal => "",
        Side::Dual => "*",
    }
}

/// Basis of `⋀^k F` or `⋀^k F*` by increasing index sets.
fn increasing_basis<F: Field>(ring: &PolyRing<F>, side: Side, k: usize) -> Basis<F> {
    let f = ring.f();
    let mut elems = Vec::new();
    let mut labels = Vec::new();
    for s in subsets(f, k) {
        let idx = indices_of(s);
        elems.push(ExteriorElement::basis(ring, side, f, &idx));
        let parts: Vec<String> = idx.iter().map(|i| format!("e_{i}{}", star(side))).collect();
        labels.push(parts.join("∧"));
    }
    Basis { elems, labels }
}

/// Basis `e_k* ∧ e_j* ∧ e_i*` of `⋀³F*`, `(i, j, k)` lexicographically increasing.
fn dual3_basis<F: Field>(ring: &PolyRing<F>) -> Basis<F> {
    let f = ring.f();
    let mut elems = Vec::new();
    let mut labels = Vec::new();
    for s in subsets(f, 3) {
        let mut idx = indices_of(s);
        idx.reverse();
        elems.push(ExteriorElement::basis(ring, Side::Dual, f, &idx));
        labels.push(format!("e_{}*∧e_{}*∧e_{}*", idx[0], idx[1], idx[2]));
    }
    Basis { elems, labels }
}

fn assemble<F: Field>(
    ring: &PolyRing<F>,
    target: Vec<Deg>,
    source: Vec<Deg>,
    columns: Vec<Vec<Polynomial<F>>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
) -> Result<GradedMatrix<F>> {
    let mut m = GradedMatrix::zero(target, source);
    for (j, col) in columns.into_iter().enumerate() {
        for (i, p) in col.into_iter().enumerate() {
            m.set(i, j, p);
        }
    }
    m.check_graded(ring)?;
    Ok(m.with_labels(row_labels, col_labels))
}

fn d1_with<F: Field>(ring: &PolyRing<F>, target: Deg) -> Result<GradedMatrix<F>> {
    let xi = generic_xi(ring)?;
    let (src, tgt) = (dual3_basis(ring), increasing_basis(ring, Side::Dual, 1));
    let cols = src.elems.iter().map(|b| Ok(tgt.coords(ring, &xi.act(ring, b)?))).collect::<Result<Vec<_>>>()?;
    assemble(ring, vec![target; tgt.len()], vec![deg_add(target, (1, 0)); src.len()], cols, tgt.labels, src.labels)
}

fn d0_with<F: Field>(ring: &PolyRing<F>, target: Deg) -> Result<GradedMatrix<F>> {
    let xi = generic_xi(ring)?;
    let (src, tgt) = (increasing_basis(ring, Side::Dual, 1), increasing_basis(ring, Side::Primal, 1));
    let cols = src.elems.iter().map(|b| Ok(tgt.coords(ring, &b.act(ring, &xi)?))).collect::<Result<Vec<_>>>()?;
    assemble(ring, vec![target; tgt.len()], vec![deg_add(target, (1, 0)); src.len()], cols, tgt.labels, src.labels)
}

fn delta1_with<F: Field>(ring: &PolyRing<F>, target: Deg) -> Result<GradedMatrix<F>> {
    let xi = generic_xi(ring)?;
    let (src, tgt) = (increasing_basis(ring, Side::Primal, 1), increasing_basis(ring, Side::Primal, 3));
    let cols = src.elems.iter().map(|b| Ok(tgt.coords(ring, &b.wedge(ring, &xi)?))).collect::<Result<Vec<_>>>()?;
    assemble(ring, vec![target; tgt.len()], vec![deg_add(target, (1, 0)); src.len()], cols, tgt.labels, src.labels)
}

fn rho_with<F: Field>(ring: &PolyRing<F>, target: Deg) -> Result<GradedMatrix<F>> {
    let entries = [ring.x(2, 3), ring.neg(&ring.x(1, 3)), ring.x(1, 2)];
    let cols = entries.into_iter().map(|p| vec![p]).collect();
    let labels = (1..=3).map(|i| format!("e_{i}")).collect();
    assemble(ring, vec![target], vec![deg_add(target, (1, 0)); 3], cols, vec!["1".into()], labels)
}

fn d0prime_with<F: Field>(ring: &PolyRing<F>, target: Deg) -> Result<GradedMatrix<F>> {
    let d0 = d0_with(ring, target)?;
    let cols: Vec<usize> = (0..d0.cols()).collect();
    let m = d0.select(&[0, 1, 2], &cols);
    let rows = d0.row_labels()[..3].to_vec();
    let col_labels = d0.col_labels().to_vec();
    Ok(m.with_labels(rows, col_labels))
}

fn row_with<F: Field>(ring: &PolyRing<F>, entries: Vec<Polynomial<F>>, entry_deg: Deg) -> Result<GradedMatrix<F>> {
    let labels = (1..=entries.len()).map(|i| format!("e_{i}*")).collect();
    let n = entries.len();
    assemble(ring, vec![(0, 0)], vec![entry_deg; n], entries.into_iter().map(|p| vec![p]).collect(), vec!["1".into()], labels)
}

fn big_d1<F: Field>(ring: &PolyRing<F>) -> Result<GradedMatrix<F>> {
    let xi = generic_xi(ring)?;
    let xi2 = xi.divided_power(ring, 2)?;
    let txi = generic_tau(ring).act(ring, &xi)?;
    let b1 = increasing_basis(ring, Side::Dual, 1);
    let b4 = increasing_basis(ring, Side::Dual, 4);
    let mut cols = Vec::new();
    let mut source = Vec::new();
    for phi in &b1.elems {
        cols.push(vec![ExteriorElement::contract(ring, phi, &txi)?.scalar()]);
        source.push((1, 1));
    }
    for phi in &b4.elems {
        cols.push(vec![ExteriorElement::contract(ring, phi, &xi2)?.scalar()]);
        source.push((2, 0));
    }
    let labels = b1.labels.into_iter().chain(b4.labels).collect();
    assemble(ring, vec![(0, 0)], source, cols, vec!["1".into()], labels)
}

/// A basis of `ker(F* ⊗ ⋀⁵F* → ⋀⁶F*)` as signed combinations of pure
/// tensors `e_i* ⊗ e*_S`, `S` increasing.
fn wedge_kernel_basis<F: Field>(ring: &PolyRing<F>) -> Result<Vec<(Vec<(Polynomial<F>, usize, u32)>, String)>> {
    let f = ring.f();
    let mut out = Vec::new();
    let fives = subsets(f, 5);
    for &s in &fives {
        for i in indices_of(s) {
            out.push((vec![(ring.one(), i, s)], format!("e_{i}*⊗e*_{}", set_label(s))));
        }
    }
    if f == 6 {
        let full = (1u32 << 6) - 1;
        let sign = |j: usize| -> Result<Polynomial<F>> {
            let a = ExteriorElement::basis(ring, Side::Dual, f, &[j]);
            let b = ExteriorElement::basis(ring, Side::Dual, f, &indices_of(full & !(1 << (j - 1))));
            Ok(a.wedge(ring, &b)?.coefficient(full))
        };
        let s1 = sign(1)?;
        for j in 2..=6 {
            let sj = sign(j)?;
            let rest_j = full & !(1 << (j - 1));
            let rest_1 = full & !1;
            out.push((
                vec![(s1.clone(), j, rest_j), (ring.neg(&sj), 1, rest_1)],
                format!("e_{j}*⊗e*_{}±e_1*⊗e*_{}", set_label(rest_j), set_label(rest_1)),
            ));
        }
    }
    Ok(out)
}

fn set_label(s: u32) -> String {
    indices_of(s).iter().map(|i| i.to_string()).collect()
}

fn big_d2<F: Field>(ring: &PolyRing<F>) -> Result<GradedMatrix<F>> {
    let f = ring.f();
    let xi = generic_xi(ring)?;
    let tau = generic_tau(ring);
    let b3 = dual3_basis(ring);
    let b1 = increasing_basis(ring, Side::Dual, 1);
    let b4 = increasing_basis(ring, Side::Dual, 4);
    let stack = |top: Vec<Polynomial<F>>, bottom: Vec<Polynomial<F>>| -> Vec<Polynomial<F>> {
        top.into_iter().chain(bottom).collect()
    };
    let zeros = |n: usize| vec![ring.zero(); n];

    let mut cols = Vec::new();
    let mut source = Vec::new();
    let mut labels = Vec::new();
    for (phi, label) in b3.elems.iter().zip(&b3.labels) {
        let top = b1.coords(ring, &xi.act(ring, phi)?);
        let bottom = b4.coords(ring, &tau.wedge(ring, phi)?);
        cols.push(stack(top, bottom));
        source.push((2, 1));
        labels.push(label.clone());
    }
    for (combo, label) in wedge_kernel_basis(ring)? {
        let mut acc = ExteriorElement::zero(Side::Dual, f, 4);
        for (c, i, s) in combo {
            let phi1 = ExteriorElement::basis(ring, Side::Dual, f, &[i]);
            let phi5 = ExteriorElement::basis(ring, Side::Dual, f, &indices_of(s));
            let v = phi1.act(ring, &xi)?.act(ring, &phi5)?;
            acc = acc.add(ring, &v.scale(ring, &c))?;
        }
        cols.push(stack(zeros(f), b4.coords(ring, &acc)));
        source.push((3, 0));
        labels.push(label);
    }
    for (a, la) in b3.elems.iter().zip(&b3.labels) {
        for (b, lb) in b3.elems.iter().zip(&b3.labels) {
            let left = xi.act(ring, a)?.wedge(ring, b)?;
            let right = a.wedge(ring, &xi.act(ring, b)?)?;
            cols.push(stack(zeros(f), b4.coords(ring, &left.sub(ring, &right)?)));
            source.push((3, 0));
            labels.push(format!("({la})⊗({lb})"));
        }
    }
    let mut target = vec![(1, 1); f];
    target.extend(vec![(2, 0); b4.len()]);
    let rows = b1.labels.into_iter().chain(b4.labels).collect();
    assemble(ring, target, source, cols, rows, labels)
}

/// The named matrix with its standalone grading: `⋀³F` and `A` sit in
/// degree 0 and each application of `ξ` raises the x-degree by one.
pub fn map_matrix<F: Field>(ring: &PolyRing<F>, name: MapName) -> Result<GradedMatrix<F>> {
    match name {
        MapName::D0 => {
            need_f(ring, 2, "d0")?;
            d0_with(ring, (1, 0))
        }
        MapName::D1 => {
            need_f(ring, 3, "d1")?;
            d1_with(ring, (2, 0))
        }
        MapName::Delta1 => {
            need_f(ring, 3, "delta1")?;
            delta1_with(ring, (0, 0))
        }
        MapName::Rho => {
            need_f(ring, 3, "rho")?;
            rho_with(ring, (0, 0))
        }
        MapName::D0Prime => {
            need_f(ring, 3, "d0prime")?;
            d0prime_with(ring, (1, 0))
        }
        MapName::TauRow => {
            need_f(ring, 2, "tau_row")?;
            row_with(ring, (1..=ring.f()).map(|i| ring.t(i)).collect(), (0, 1))
        }
        MapName::TXiRow => {
            need_f(ring, 2, "tXi_row")?;
            row_with(ring, t_x_entries(ring)?, (1, 1))
        }
        MapName::BigD1 => {
            need_f(ring, 2, "D1")?;
            big_d1(ring)
        }
        MapName::BigD2 => {
            need_f(ring, 2, "D2")?;
            big_d2(ring)
        }
    }
}

/// The four complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexName {
    /// `⋀³F̄* → F̄* → F̄ → ⋀³F̄` over `A = R/I`.
    PreComplex,
    /// `⋀³F̄* → F̄* → A³ → A → A' → 0` with `A' = R/I_3`.
    Seq32,
    /// `0 → 𝒜 → 𝒩 → 𝒜 → ℛ/J → 0`.
    Seq43,
    /// `E2 → E1 → E0`.
    RelationComplex,
}

impl ComplexName {
    pub const ALL: [ComplexName; 4] =
        [ComplexName::PreComplex, ComplexName::Seq32, ComplexName::Seq43, ComplexName::RelationComplex];

    pub fn as_str(self) -> &'static str {
        match self {
            ComplexName::PreComplex => "precplx",
            ComplexName::Seq32 => "seq32",
            ComplexName::Seq43 => "seq43",
            ComplexName::RelationComplex => "relcplx",
        }
    }
}

impl fmt::Display for ComplexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ComplexName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComplexName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// The cokernel of `relations`, a map into the free module with the given
/// generator bidegrees.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedModule<F: Field> {
    pub label: String,
    pub generators: Vec<Deg>,
    pub relations: GradedMatrix<F>,
}

impl<F: Field> PresentedModule<F> {
    pub fn free(label: &str, generators: Vec<Deg>) -> Self {
        let relations = GradedMatrix::zero(generators.clone(), Vec::new());
        PresentedModule { label: label.to_string(), generators, relations }
    }

    /// `(R/(gens))^n`.
    pub fn quotient(ring: &PolyRing<F>, label: &str, generators: Vec<Deg>, gens: &[Polynomial<F>]) -> Result<Self> {
        let relations = GradedMatrix::ideal_relations(ring, &generators, gens)?;
        Ok(PresentedModule { label: label.to_string(), generators, relations })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

/// A sequence of presented modules with maps `maps[k]: modules[k] → modules[k + 1]`.
#[derive(Clone, Debug)]
pub struct PresentedComplex<F: Field> {
    pub name: ComplexName,
    pub ring: PolyRing<F>,
    pub modules: Vec<PresentedModule<F>>,
    pub maps: Vec<GradedMatrix<F>>,
    /// Generators of the ideal defining the base ring.
    pub base_ideal: Vec<Polynomial<F>>,
    /// Positions at which the complex is known to be exact. The first and
    /// last positions count the zero maps into and out of the sequence.
    pub exact_positions: Vec<usize>,
}

impl<F: Field> PresentedComplex<F> {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// For each `k`, whether every column of `maps[k + 1] ∘ maps[k]` lies in
    /// the relations of `modules[k + 2]`.
    pub fn composites_vanish(&self) -> Result<Vec<bool>> {
        let ring = &self.ring;
        let mut out = Vec::new();
        for k in 0..self.maps.len().saturating_sub(1) {
            let comp = self.maps[k + 1].compose(ring, &self.maps[k])?;
            let gb = image_basis(ring, &[&self.modules[k + 2].relations])?;
            out.push(comp.columns().iter().all(|c| gb.contains_column(c)));
        }
        Ok(out)
    }

    /// For each map, whether it sends relations into relations, so that it
    /// descends to the presented modules.
    pub fn maps_well_defined(&self) -> Result<Vec<bool>> {
        let ring = &self.ring;
        let mut out = Vec::new();
        for (k, m) in self.maps.iter().enumerate() {
            let images = m.compose(ring, &self.modules[k].relations)?;
            let gb = image_basis(ring, &[&self.modules[k + 1].relations])?;
            out.push(images.columns().iter().all(|c| gb.contains_column(c)));
        }
        Ok(out)
    }
}

/// Builds a named complex over `ring`.
pub fn build_complex<F: Field>(ring: &PolyRing<F>, name: ComplexName) -> Result<PresentedComplex<F>> {
    let f = ring.f();
    match name {
        ComplexName::PreComplex => {
            need_f(ring, 3, "precplx")?;
            let i = pfaffians(ring)?;
            let n3 = binomial(f, 3);
            let modules = vec![
                PresentedModule::quotient(ring, "⋀³F̄*", vec![(3, 0); n3], &i)?,
                PresentedModule::quotient(ring, "F̄*", vec![(2, 0); f], &i)?,
                PresentedModule::quotient(ring, "F̄", vec![(1, 0); f], &i)?,
                PresentedModule::quotient(ring, "⋀³F̄", vec![(0, 0); n3], &i)?,
            ];
            let maps = vec![d1_with(ring, (2, 0))?, d0_with(ring, (1, 0))?, delta1_with(ring, (0, 0))?];
            Ok(PresentedComplex { name, ring: ring.clone(), modules, maps, base_ideal: i, exact_positions: vec![1, 2] })
        }
        ComplexName::Seq32 => {
            need_f(ring, 3, "seq32")?;
            let i = pfaffians(ring)?;
            let mut i3_gens = i.clone();
            i3_gens.extend([ring.x(1, 2), ring.x(1, 3), ring.x(2, 3)]);
            let modules = vec![
                PresentedModule::quotient(ring, "⋀³F̄*", vec![(3, 0); binomial(f, 3)], &i)?,
                PresentedModule::quotient(ring, "F̄*", vec![(2, 0); f], &i)?,
                PresentedModule::quotient(ring, "A³", vec![(1, 0); 3], &i)?,
                PresentedModule::quotient(ring, "A", vec![(0, 0)], &i)?,
                PresentedModule::quotient(ring, "A'", vec![(0, 0)], &i3_gens)?,
            ];
            let maps = vec![
                d1_with(ring, (2, 0))?,
                d0prime_with(ring, (1, 0))?,
                rho_with(ring, (0, 0))?,
                GradedMatrix::identity(ring, vec![(0, 0)]),
            ];
            Ok(PresentedComplex { name, ring: ring.clone(), modules, maps, base_ideal: i, exact_positions: vec![1, 2, 3, 4] })
        }
        ComplexName::Seq43 => {
            need_f(ring, 2, "seq43")?;
            let i = pfaffians(ring)?;
            let j = build_ideal(ring, IdealKind::J)?.gens;
            let n_rel = {
                let d1 = d1_with(ring, (1, 1))?;
                let ideal = GradedMatrix::ideal_relations(ring, &vec![(1, 1); f], &i)?;
                d1.hstack(&ideal)?
            };
            let modules = vec![
                PresentedModule::quotient(ring, "𝒜", vec![(1, 2)], &i)?,
                PresentedModule { label: "𝒩".into(), generators: vec![(1, 1); f], relations: n_rel },
                PresentedModule::quotient(ring, "𝒜", vec![(0, 0)], &i)?,
                PresentedModule::quotient(ring, "ℛ/J", vec![(0, 0)], &j)?,
            ];
            let tau_col = {
                let cols = vec![(1..=f).map(|k| ring.t(k)).collect()];
                let rows = (1..=f).map(|k| format!("e_{k}*")).collect();
                assemble(ring, vec![(1, 1); f], vec![(1, 2)], cols, rows, vec!["1".into()])?
            };
            let maps = vec![tau_col, row_with(ring, t_x_entries(ring)?, (1, 1))?, GradedMatrix::identity(ring, vec![(0, 0)])];
            Ok(PresentedComplex { name, ring: ring.clone(), modules, maps, base_ideal: i, exact_positions: vec![0, 1, 2, 3] })
        }
        ComplexName::RelationComplex => {
            need_f(ring, 2, "relcplx")?;
            let d2 = big_d2(ring)?;
            let d1 = big_d1(ring)?;
            let modules = vec![
                PresentedModule::free("E2", d2.source().to_vec()),
                PresentedModule::free("E1", d1.source().to_vec()),
                PresentedModule::free("E0", vec![(0, 0)]),
            ];
            Ok(PresentedComplex { name, ring: ring.clone(), modules, maps: vec![d2, d1], base_ideal: Vec::new(), exact_positions: Vec::new() })
        }
    }
}

/// The variables `S1` and polynomials `S2` that, together with `x_(1,2)^{±1}`,
/// give coordinates on the localization of `ℛ/J` at `x_(1,2)`.
pub fn s1_s2_sets<F: Field>(ring: &PolyRing<F>) -> Result<(Vec<Variable>, Vec<Polynomial<F>>)> {
    let f = need_f(ring, 3, "the localization sets")?;
    let mut s1 = Vec::new();
    for i in 1..=2 {
        for j in 3..=f {
            s1.push(Variable::X(i, j));
        }
    }
    for j in 3..=f {
        s1.push(Variable::T(j));
    }
    let mut s2 = Vec::new();
    for i in 3..=f {
        for j in i + 1..=f {
            let a = ring.mul(&ring.x(1, 2), &ring.x(i, j));
            let b = ring.mul(&ring.x(1, i), &ring.x(2, j));
            let c = ring.mul(&ring.x(1, j), &ring.x(2, i));
            s2.push(ring.add(&ring.sub(&a, &b), &c));
        }
    }
    let mut first = ring.mul(&ring.x(1, 2), &ring.t(2));
    let mut second = ring.mul(&ring.x(1, 2), &ring.t(1));
    for j in 3..=f {
        first = ring.add(&first, &ring.mul(&ring.x(1, j), &ring.t(j)));
        second = ring.sub(&second, &ring.mul(&ring.x(2, j), &ring.t(j)));
    }
    s2.push(first);
    s2.push(second);
    Ok((s1, s2))
}

/// Betti table of the iterated mapping cone resolving `ℛ/J` from the
/// resolutions of `A` (table `β`) and `N` (table `γ`):
/// `L_i = ⊕ ℛ(-j-1,-2)^{β_{i-2,j}} ⊕ ℛ(-j-1,-1)^{γ_{i-1,j}} ⊕ ℛ(-j,0)^{β_{i,j}}`.
pub fn mapping_cone_betti(beta_a: &BettiTable, gamma_n: &BettiTable) -> BettiTable {
    let mut out = BettiTable::new();
    for e in beta_a.entries() {
        out.add(e.i + 2, (e.jx + 1, e.jt + 2), e.count);
        out.add(e.i, (e.jx, e.jt), e.count);
    }
    for e in gamma_n.entries() {
        out.add(e.i + 1, (e.jx + 1, e.jt + 1), e.count);
    }
    out
}
