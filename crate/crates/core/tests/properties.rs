//! Randomized invariants of the polynomial arithmetic, the text format and
//! the exterior algebra.

use pfaffkit::exterior::{pfaffian_oracle, subsets, AlternatingMatrix, ExteriorElement, Side};
use pfaffkit::groebner::groebner_basis;
use pfaffkit::ring::{parse_polynomial, render_polynomial, Field, PolyRing, Polynomial, PrimeField, Rationals};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const F: usize = 4;

fn terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    let nvars = F * (F - 1) / 2 + F;
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -7i64..8), 0..6)
}

fn poly<Fd: Field>(ring: &PolyRing<Fd>, ts: &[(Vec<u32>, i64)]) -> Polynomial<Fd> {
    ring.from_terms(ts.iter().map(|(e, c)| (ring.monomial(e), ring.field().from_i64(*c))).collect())
}

fn qq() -> PolyRing<Rationals> {
    PolyRing::new(Rationals, F).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in terms(), b in terms(), c in terms()) {
        let r = qq();
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&r.add(&a, &b), &c), r.add(&r.mul(&a, &c), &r.mul(&b, &c)));
        prop_assert!(r.sub(&a, &a).is_zero());
    }

    #[test]
    fn render_parse_round_trip(a in terms()) {
        let r = qq();
        let p = poly(&r, &a);
        let text = render_polynomial(&r, &p);
        prop_assert_eq!(parse_polynomial(&r, &text).unwrap(), p);
    }

    #[test]
    fn render_parse_round_trip_mod_p(a in terms()) {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), F).unwrap();
        let p = poly(&r, &a);
        prop_assert_eq!(parse_polynomial(&r, &render_polynomial(&r, &p)).unwrap(), p);
    }

    #[test]
    fn normal_forms_are_idempotent(a in terms(), b in terms(), g in terms()) {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), F).unwrap();
        let gens = vec![poly(&r, &a), poly(&r, &b)];
        prop_assume!(gens.iter().all(|p| p.is_homogeneous()));
        let gb = groebner_basis(&r, &gens, r.order()).unwrap();
        let g = poly(&r, &g);
        let nf = gb.normal_form(&g);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.contains(&r.sub(&g, &nf)));
        for p in &gens {
            prop_assert!(gb.contains(&r.mul(p, &g)));
        }
    }

    #[test]
    fn wedge_is_graded_commutative(seed in any::<u64>(), p in 0usize..=F, q in 0usize..=F) {
        let r = qq();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = ExteriorElement::random(&r, &mut rng, Side::Primal, F, p, 1);
        let b = ExteriorElement::random(&r, &mut rng, Side::Primal, F, q, 1);
        prop_assume!(p + q <= F);
        let ab = a.wedge(&r, &b).unwrap();
        let ba = b.wedge(&r, &a).unwrap();
        let expected = if (p * q) % 2 == 1 { ba.neg(&r) } else { ba };
        prop_assert_eq!(ab, expected);
    }

    #[test]
    fn wedge_is_associative(seed in any::<u64>()) {
        let r = qq();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = ExteriorElement::random(&r, &mut rng, Side::Dual, F, 1, 1);
        let b = ExteriorElement::random(&r, &mut rng, Side::Dual, F, 2, 1);
        let c = ExteriorElement::random(&r, &mut rng, Side::Dual, F, 1, 1);
        let left = a.wedge(&r, &b).unwrap().wedge(&r, &c).unwrap();
        let right = a.wedge(&r, &b.wedge(&r, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn covector_actions_compose(seed in any::<u64>()) {
        // (u ∧ v)(w) = u(v(w))
        let r = qq();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = ExteriorElement::random(&r, &mut rng, Side::Dual, F, 1, 1);
        let v = ExteriorElement::random(&r, &mut rng, Side::Dual, F, 1, 1);
        let w = ExteriorElement::random(&r, &mut rng, Side::Primal, F, 3, 1);
        let lhs = u.wedge(&r, &v).unwrap().act(&r, &w).unwrap();
        let rhs = u.act(&r, &v.act(&r, &w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_of_a_two_form_is_twice_its_divided_power(seed in any::<u64>()) {
        let r = qq();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = ExteriorElement::random(&r, &mut rng, Side::Primal, F, 2, 1);
        let square = v.wedge(&r, &v).unwrap();
        let twice = v.divided_power(&r, 2).unwrap().scale(&r, &r.from_i64(2));
        prop_assert_eq!(square, twice);
    }
}

#[test]
fn divided_power_coefficients_are_pfaffians() {
    let r = PolyRing::new(Rationals, 6).unwrap();
    let xi = pfaffkit::constructions::generic_xi(&r).unwrap();
    let a = AlternatingMatrix::generic(&r);
    for l in 1..=3 {
        let d = xi.divided_power(&r, l).unwrap();
        for set in subsets(6, 2 * l) {
            let rows = pfaffkit::exterior::indices_of(set);
            assert_eq!(d.coefficient(set), pfaffian_oracle(&r, &a, &rows).unwrap(), "rows {rows:?}");
        }
    }
}
