//! Seeded random trials of the exterior-algebra identities.

use rand::Rng;

use super::Outcome;
use crate::cancel;
use crate::error::Result;
use crate::exterior::{pfaffian_oracle, AlternatingMatrix, ExteriorElement, Side};
use crate::homology::half_identity_defect;
use crate::ring::{Field, PolyRing};

type Elem<F> = ExteriorElement<F>;

fn random<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, side: Side, degree: usize) -> Elem<F> {
    Elem::random(ring, rng, side, ring.f(), degree, 1)
}

fn constant<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, side: Side, degree: usize) -> Elem<F> {
    Elem::random(ring, rng, side, ring.f(), degree, 0)
}

fn sign(negative: bool) -> i64 {
    if negative {
        -1
    } else {
        1
    }
}

fn tally(trials: usize, failures: Vec<usize>) -> Outcome {
    match failures.first() {
        None => Outcome::pass(format!("{trials} trials")),
        Some(first) => Outcome::fail(format!("{} of {trials} trials failed, first at trial {first}", failures.len())),
    }
}

/// `(f1(φq))(fp) = f1 ∧ φq(fp) + (-1)^{1+q} φq(f1 ∧ fp)` for `1 <= q <= p < f`.
pub fn contraction_derivation<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, trials: usize) -> Result<Outcome> {
    let f = ring.f();
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let p = rng.gen_range(1..f);
        let q = rng.gen_range(1..=p);
        let f1 = random(ring, rng, Side::Primal, 1);
        let phi = random(ring, rng, Side::Dual, q);
        let fp = random(ring, rng, Side::Primal, p);
        let lhs = f1.act(ring, &phi)?.act(ring, &fp)?;
        let first = f1.wedge(ring, &phi.act(ring, &fp)?)?;
        let second = phi.act(ring, &f1.wedge(ring, &fp)?)?.scale(ring, &ring.from_i64(sign(q % 2 == 0)));
        if !lhs.sub(ring, &first.add(ring, &second)?)?.is_zero() {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

/// `[f2(φ3)](f2) = φ3(f2^(2))`.
pub fn divided_power_contraction<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, trials: usize) -> Result<Outcome> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let f2 = random(ring, rng, Side::Primal, 2);
        let phi3 = random(ring, rng, Side::Dual, 3);
        let lhs = f2.act(ring, &phi3)?.act(ring, &f2)?;
        let rhs = phi3.act(ring, &f2.divided_power(ring, 2)?)?;
        if !lhs.sub(ring, &rhs)?.is_zero() {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

/// `f2(φ ∧ φ' ∧ φ'') = f2(φ ∧ φ')·φ'' - f2(φ ∧ φ'')·φ' + f2(φ' ∧ φ'')·φ`.
pub fn three_covector_expansion<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, trials: usize) -> Result<Outcome> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let f2 = random(ring, rng, Side::Primal, 2);
        let a = random(ring, rng, Side::Dual, 1);
        let b = random(ring, rng, Side::Dual, 1);
        let c = random(ring, rng, Side::Dual, 1);
        let pair = |u: &Elem<F>, v: &Elem<F>| -> Result<_> { Ok(f2.act(ring, &u.wedge(ring, v)?)?.scalar()) };
        let lhs = f2.act(ring, &a.wedge(ring, &b)?.wedge(ring, &c)?)?;
        let rhs = c
            .scale(ring, &pair(&a, &b)?)
            .sub(ring, &b.scale(ring, &pair(&a, &c)?))?
            .add(ring, &a.scale(ring, &pair(&b, &c)?))?;
        if !lhs.sub(ring, &rhs)?.is_zero() {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

/// For `τ ∈ F*` and 2-forms `v, w`: `τ(v ∧ w) = τ(v) ∧ w + v ∧ τ(w)` and
/// `τ(v^(2)) = τ(v) ∧ v`.
pub fn divided_power_derivation<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, trials: usize) -> Result<Outcome> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let tau = random(ring, rng, Side::Dual, 1);
        let v = random(ring, rng, Side::Primal, 2);
        let w = random(ring, rng, Side::Primal, 2);
        let product = tau
            .act(ring, &v.wedge(ring, &w)?)?
            .sub(ring, &tau.act(ring, &v)?.wedge(ring, &w)?)?
            .sub(ring, &v.wedge(ring, &tau.act(ring, &w)?)?)?;
        let square = tau.act(ring, &v.divided_power(ring, 2)?)?.sub(ring, &tau.act(ring, &v)?.wedge(ring, &v)?)?;
        if !product.is_zero() || !square.is_zero() {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

/// `φi(fi) = fi(φi)` in every degree `0 <= i <= f`.
pub fn pairing_compatibility<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, trials: usize) -> Result<Outcome> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let i = trial % (ring.f() + 1);
        let phi = random(ring, rng, Side::Dual, i);
        let x = random(ring, rng, Side::Primal, i);
        if phi.act(ring, &x)?.scalar() != x.act(ring, &phi)?.scalar() {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

/// `ξ^(2)(φ4)·φ1 = ξ([φ1(ξ)](φ4) + ½ ξ(φ1 ∧ φ4))` for the generic 2-form `ξ`.
pub fn half_identity<F: Field, R: Rng>(ring: &PolyRing<F>, rng: &mut R, trials: usize) -> Result<Outcome> {
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let phi1 = constant(ring, rng, Side::Dual, 1);
        let phi4 = constant(ring, rng, Side::Dual, 4);
        if !half_identity_defect(ring, &phi1, &phi4)?.is_zero() {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

/// Determinant by expansion along the first row.
pub fn cofactor_determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    for (j, a) in m[0].iter().enumerate() {
        if field.is_zero(a) {
            continue;
        }
        let minor: Vec<Vec<F::Elem>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, c)| c.clone()).collect())
            .collect();
        let term = field.mul(a, &cofactor_determinant(field, &minor));
        acc = if j % 2 == 0 { field.add(&acc, &term) } else { field.sub(&acc, &term) };
    }
    acc
}

/// `Pf(A)^2 = det(A)` for random integer alternating `6 × 6` matrices.
pub fn pfaffian_squared<F: Field, R: Rng>(field: &F, rng: &mut R, trials: usize) -> Result<Outcome> {
    let ring = PolyRing::new(field.clone(), 2)?;
    let n = 6;
    let mut failures = Vec::new();
    for trial in 0..trials {
        cancel::check()?;
        let mut a = AlternatingMatrix::zero(n);
        let mut dense = vec![vec![field.zero(); n]; n];
        for i in 1..=n {
            for j in i + 1..=n {
                let v = rng.gen_range(-9i64..=9);
                a.set(i, j, ring.from_i64(v));
                dense[i - 1][j - 1] = field.from_i64(v);
                dense[j - 1][i - 1] = field.from_i64(-v);
            }
        }
        let rows: Vec<usize> = (1..=n).collect();
        let pf = pfaffian_oracle(&ring, &a, &rows)?;
        let det = ring.constant(cofactor_determinant(field, &dense));
        if ring.mul(&pf, &pf) != det {
            failures.push(trial);
        }
    }
    Ok(tally(trials, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn determinant_of_small_matrices() {
        let q = Rationals;
        let m = vec![vec![q.from_i64(2), q.from_i64(1)], vec![q.from_i64(7), q.from_i64(4)]];
        assert_eq!(cofactor_determinant(&q, &m), q.from_i64(1));
        let id: Vec<Vec<_>> = (0..4).map(|i| (0..4).map(|j| q.from_i64((i == j) as i64)).collect()).collect();
        assert_eq!(cofactor_determinant(&q, &id), q.from_i64(1));
    }

    #[test]
    fn identities_hold_at_four() {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(contraction_derivation(&r, &mut rng, 10).unwrap().passed);
        assert!(divided_power_contraction(&r, &mut rng, 10).unwrap().passed);
        assert!(three_covector_expansion(&r, &mut rng, 10).unwrap().passed);
        assert!(divided_power_derivation(&r, &mut rng, 10).unwrap().passed);
        assert!(pairing_compatibility(&r, &mut rng, 10).unwrap().passed);
        assert!(half_identity(&r, &mut rng, 3).unwrap().passed);
    }

    #[test]
    fn wrong_sign_is_detected() {
        // dropping the (-1)^{1+q} sign must break the derivation rule
        let r = PolyRing::new(Rationals, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f1 = random(&r, &mut rng, Side::Primal, 1);
        let phi = random(&r, &mut rng, Side::Dual, 1);
        let fp = random(&r, &mut rng, Side::Primal, 2);
        let lhs = f1.act(&r, &phi).unwrap().act(&r, &fp).unwrap();
        let first = f1.wedge(&r, &phi.act(&r, &fp).unwrap()).unwrap();
        let second = phi.act(&r, &f1.wedge(&r, &fp).unwrap()).unwrap().neg(&r);
        let defect = lhs.sub(&r, &first.add(&r, &second).unwrap()).unwrap();
        assert!(!defect.is_zero());
    }

    #[test]
    fn pfaffian_square_is_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(pfaffian_squared(&Rationals, &mut rng, 5).unwrap().passed);
    }
}
