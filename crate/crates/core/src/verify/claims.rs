//! Checks of the ideal-theoretic and homological statements.

use super::Outcome;
use crate::betti::BettiTable;
use crate::constructions::{
    build_complex, build_ideal, mapping_cone_betti, map_matrix, s1_s2_sets, t_x_entries, ComplexName, IdealKind,
    MapName,
};
use crate::error::Result;
use crate::groebner::{dimension_codim, groebner_basis, ideal_quotient, saturation_member_gb};
use crate::homology::{char2_anomaly_check, cyclic_presentation, default_max_len, free_resolution, n_presentation, FreeComplex};
use crate::matrix::GradedMatrix;
use crate::oracle::{all_variables, x_variables, KoszulOracle};
use crate::ring::{binomial, Field, PolyRing, Polynomial};

/// `C(f-2, 2)`, the codimension of the Pfaffian ideal.
pub fn codim_i(f: usize) -> usize {
    binomial(f.saturating_sub(2), 2)
}

/// Expected codimension of `J`: `1` at `f = 2`, otherwise `C(f-2, 2) + 2`.
pub fn codim_j(f: usize) -> usize {
    if f == 2 {
        1
    } else {
        codim_i(f) + 2
    }
}

fn codim<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> Result<usize> {
    Ok(dimension_codim(ring, gens)?.codim)
}

fn compare(what: &str, got: usize, expected: usize) -> Outcome {
    Outcome::new(got == expected, format!("{what} = {got}, expected {expected}"))
}

pub fn grade_of_i<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let i = build_ideal(ring, IdealKind::I)?;
    Ok(compare("codim I", codim(ring, &i.gens)?, codim_i(ring.f())))
}

pub fn grade_of_j<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let j = build_ideal(ring, IdealKind::J)?;
    Ok(compare("codim J", codim(ring, &j.gens)?, codim_j(ring.f())))
}

pub fn grades_of_i_lambda<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let f = ring.f();
    let mut passed = true;
    let mut parts = Vec::new();
    for lambda in 1..f {
        let got = codim(ring, &build_ideal(ring, IdealKind::Lambda(lambda))?.gens)?;
        let expected = codim_i(f) + lambda - 1;
        passed &= got == expected;
        parts.push(format!("λ={lambda}: {got}/{expected}"));
    }
    Ok(Outcome::new(passed, format!("codim/expected {}", parts.join(", "))))
}

pub fn relation_complex_closes<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let d1 = map_matrix(ring, MapName::BigD1)?;
    let d2 = map_matrix(ring, MapName::BigD2)?;
    let zero = d1.compose(ring, &d2)?.is_zero();
    Ok(Outcome::new(zero, format!("D1 ∘ D2 on {} columns: {}", d2.cols(), if zero { "zero" } else { "nonzero" })))
}

pub fn relation_complex_image<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let d1 = map_matrix(ring, MapName::BigD1)?;
    let j = build_ideal(ring, IdealKind::J)?;
    let entries: Vec<Polynomial<F>> = d1.columns().into_iter().flatten().collect();
    let image = groebner_basis(ring, &entries, ring.order())?;
    let same = image.same_ideal(&groebner_basis(ring, &j.gens, ring.order())?);
    Ok(Outcome::new(same, format!("image of D1 {} J", if same { "equals" } else { "differs from" })))
}

pub fn complex_closes<F: Field>(ring: &PolyRing<F>, name: ComplexName) -> Result<Outcome> {
    let c = build_complex(ring, name)?;
    let composites = c.composites_vanish()?;
    let defined = c.maps_well_defined()?;
    let bad_comp: Vec<usize> = composites.iter().enumerate().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
    let bad_def: Vec<usize> = defined.iter().enumerate().filter(|(_, ok)| !**ok).map(|(k, _)| k).collect();
    let passed = bad_comp.is_empty() && bad_def.is_empty();
    let detail = if passed {
        format!("{} composites vanish, {} maps descend", composites.len(), defined.len())
    } else {
        format!("nonzero composites at {bad_comp:?}, ill-defined maps at {bad_def:?}")
    };
    Ok(Outcome::new(passed, detail))
}

pub fn complex_exact<F: Field>(ring: &PolyRing<F>, name: ComplexName) -> Result<Outcome> {
    let c = build_complex(ring, name)?;
    let mut failing = Vec::new();
    for &p in &c.exact_positions {
        if !crate::homology::homology_is_zero(&c, p)? {
            failing.push(p);
        }
    }
    let detail = if failing.is_empty() {
        format!("homology zero at positions {:?}", c.exact_positions)
    } else {
        format!("nonzero homology at positions {failing:?}")
    };
    Ok(Outcome::new(failing.is_empty(), detail))
}

/// The modules whose resolutions are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolved {
    /// `A = R/I`.
    A,
    /// `N = coker(d1) ⊗ A`.
    N,
    /// `ℛ/J`.
    RJ,
}

impl Resolved {
    pub fn presentation<F: Field>(self, ring: &PolyRing<F>) -> Result<GradedMatrix<F>> {
        match self {
            Resolved::A => cyclic_presentation(ring, &build_ideal(ring, IdealKind::I)?.gens),
            Resolved::N => n_presentation(ring),
            Resolved::RJ => cyclic_presentation(ring, &build_ideal(ring, IdealKind::J)?.gens),
        }
    }

    /// Variables the module actually involves: the `x` variables for `A`, `N`.
    pub fn variables<F: Field>(self, ring: &PolyRing<F>) -> Vec<usize> {
        match self {
            Resolved::A | Resolved::N => x_variables(ring),
            Resolved::RJ => all_variables(ring),
        }
    }

    pub fn expected_pd(self, f: usize) -> usize {
        match self {
            Resolved::A | Resolved::N => codim_i(f),
            Resolved::RJ => codim_j(f),
        }
    }

    /// Generators of the ideal whose codimension should equal the projective dimension.
    fn grade_ideal<F: Field>(self, ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>> {
        let kind = if self == Resolved::RJ { IdealKind::J } else { IdealKind::I };
        Ok(build_ideal(ring, kind)?.gens)
    }

    pub fn resolve<F: Field>(self, ring: &PolyRing<F>) -> Result<FreeComplex<F>> {
        free_resolution(ring, &self.presentation(ring)?, default_max_len(ring.f()))
    }
}

/// Projective dimension, codimension of the matching ideal and exactness of
/// the computed resolution.
pub fn perfection<F: Field>(ring: &PolyRing<F>, module: Resolved) -> Result<Outcome> {
    let res = module.resolve(ring)?;
    let pd = res.length();
    let expected = module.expected_pd(ring.f());
    let grade = codim(ring, &module.grade_ideal(ring)?)?;
    let defects = res.homology_defects(ring)?;
    let passed = pd == expected && grade == pd && defects.is_empty() && res.is_minimal();
    let mut detail = format!("pd = {pd}, expected {expected}, grade {grade}, Betti {:?}", res.betti().totals());
    if !defects.is_empty() {
        detail.push_str(&format!(", homology at {defects:?}"));
    }
    Ok(Outcome::new(passed, detail))
}

/// Compares the computed Betti table with the Koszul-homology oracle up to
/// one past the largest degree and length seen.
pub fn oracle_agreement<F: Field>(ring: &PolyRing<F>, module: Resolved) -> Result<Outcome> {
    let res = module.resolve(ring)?;
    let table = res.betti();
    let max_deg = table.entries().iter().map(|e| e.j).max().unwrap_or(0) + 1;
    let mut oracle = KoszulOracle::new(ring, &module.variables(ring), &module.presentation(ring)?)?;
    let independent = oracle.betti_table(res.length() + 1, max_deg)?;
    let passed = independent == table;
    Ok(Outcome::new(
        passed,
        format!("resolution {:?}, oracle {:?} (degrees <= {max_deg})", table.totals(), independent.totals()),
    ))
}

pub fn mapping_cone<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let beta = Resolved::A.resolve(ring)?.betti();
    let gamma = Resolved::N.resolve(ring)?.betti();
    let direct = Resolved::RJ.resolve(ring)?.betti();
    let cone = mapping_cone_betti(&beta, &gamma);
    Ok(Outcome::new(
        cone == direct,
        format!("cone {:?}, direct {:?}", cone.totals(), direct.totals()),
    ))
}

/// Last Betti number one and a palindromic table of length `codim`.
fn gorenstein_shape(table: &BettiTable, codim: usize, need_cyclic_end: bool) -> Outcome {
    let totals = table.totals();
    let last = totals.last().copied().unwrap_or(0);
    let palindrome = table.palindrome();
    let passed = (!need_cyclic_end || last == 1) && palindrome.is_some_and(|(c, _)| c == codim);
    let shape = match palindrome {
        Some((c, sigma)) => format!("palindromic with c = {c}, σ = {sigma}"),
        None => "not palindromic".into(),
    };
    Outcome::new(passed, format!("Betti {totals:?}, {shape}, expected length {codim}"))
}

pub fn gorenstein<F: Field>(ring: &PolyRing<F>, module: Resolved) -> Result<Outcome> {
    let table = module.resolve(ring)?.betti();
    Ok(gorenstein_shape(&table, module.expected_pd(ring.f()), module != Resolved::N))
}

fn s2<F: Field>(ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>> {
    Ok(s1_s2_sets(ring)?.1)
}

pub fn s2_in_j<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let gb = groebner_basis(ring, &build_ideal(ring, IdealKind::J)?.gens, ring.order())?;
    let s2 = s2(ring)?;
    let outside = s2.iter().filter(|g| !gb.contains(g)).count();
    Ok(Outcome::new(outside == 0, format!("{} of {} elements outside J", outside, s2.len())))
}

/// Least exponents `N` with `x_(1,2)^N · g` in the ideal for every generator `g` of `J`.
fn saturation_exponents<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    bound: u32,
) -> Result<(Vec<Option<u32>>, Option<u32>)> {
    let gb = groebner_basis(ring, gens, ring.order())?;
    let x12 = ring.x(1, 2);
    let exps: Vec<Option<u32>> = build_ideal(ring, IdealKind::J)?
        .gens
        .iter()
        .map(|g| saturation_member_gb(&gb, &x12, g, bound).exponent)
        .collect();
    let worst = exps.iter().try_fold(0, |acc, e| e.map(|n| acc.max(n)));
    Ok((exps, worst))
}

pub fn j_in_s2_after_inverting<F: Field>(ring: &PolyRing<F>) -> Result<Outcome> {
    let (exps, worst) = saturation_exponents(ring, &s2(ring)?, 2)?;
    Ok(match worst {
        Some(n) => Outcome::pass(format!("x_(1,2)^{n} suffices for all {} generators", exps.len())),
        None => Outcome::fail(format!("exponent above 2 needed: {exps:?}")),
    })
}

pub fn j_in_two_entries_after_inverting<F: Field>(ring: &PolyRing<F>, bound: u32) -> Result<Outcome> {
    let mut gens = build_ideal(ring, IdealKind::I)?.gens;
    gens.extend(t_x_entries(ring)?.into_iter().take(2));
    let (exps, worst) = saturation_exponents(ring, &gens, bound)?;
    Ok(match worst {
        Some(n) => Outcome::pass(format!("x_(1,2)^{n} suffices for all {} generators, bound {bound}", exps.len())),
        None => Outcome::fail(format!("exponent above {bound} needed: {exps:?}")),
    })
}

/// `(L : x_(1,2)) = L` and `((L + (x_(1,2))) : x_(1,3)) = L + (x_(1,2))`.
pub fn regular_sequence<F: Field>(ring: &PolyRing<F>, kind: IdealKind) -> Result<Outcome> {
    let base = build_ideal(ring, kind)?.gens;
    let (x12, x13) = (ring.x(1, 2), ring.x(1, 3));
    let first = ideal_quotient(ring, &base, &x12)?.same_ideal(&groebner_basis(ring, &base, ring.order())?);
    let mut next = base.clone();
    next.push(x12);
    let second = ideal_quotient(ring, &next, &x13)?.same_ideal(&groebner_basis(ring, &next, ring.order())?);
    Ok(Outcome::new(
        first && second,
        format!("x_(1,2) {} x_(1,3) {}", verdict(first), verdict(second)),
    ))
}

fn verdict(regular: bool) -> &'static str {
    if regular {
        "regular"
    } else {
        "zero divisor"
    }
}

pub fn char2_anomaly() -> Result<Outcome> {
    let a = char2_anomaly_check()?;
    let passed = a.confirms_anomaly() && a.pd_char2 == codim_i(5);
    Ok(Outcome::new(
        passed,
        format!(
            "witness in im d1 over F_2: {}, zero in N over F_2: {}, in im d1 over Q: {}, certificate: {}, β1 {} vs {}, pd {} vs {}",
            a.witness_in_d1_char2,
            a.witness_zero_in_n_char2,
            a.witness_in_d1_rational,
            a.certificate_holds,
            a.beta1_char2,
            a.beta1_rational,
            a.pd_char2,
            a.pd_rational
        ),
    ))
}
