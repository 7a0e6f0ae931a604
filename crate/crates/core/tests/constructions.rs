use pfaffkit::constructions::{
    build_complex, build_ideal, map_matrix, s1_s2_sets, t_x_entries, ComplexName, IdealKind, MapName,
};
use pfaffkit::groebner::groebner_basis;
use pfaffkit::ring::{binomial, parse_polynomial, render_polynomial, Field, PolyRing, PrimeField, Rationals};

fn q(f: usize) -> PolyRing<Rationals> {
    PolyRing::new(Rationals, f).unwrap()
}

#[test]
fn the_four_by_four_pfaffian() {
    let r = q(4);
    let i = build_ideal(&r, IdealKind::I).unwrap();
    let expected = parse_polynomial(&r, "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)").unwrap();
    assert_eq!(i.gens, vec![expected]);
}

#[test]
fn j_at_two_is_x12_times_t() {
    let r = q(2);
    let j = build_ideal(&r, IdealKind::J).unwrap();
    let x12 = r.x(1, 2);
    let target = groebner_basis(&r, &[r.mul(&r.t(1), &x12), r.mul(&r.t(2), &x12)], r.order()).unwrap();
    assert!(groebner_basis(&r, &j.gens, r.order()).unwrap().same_ideal(&target));
}

#[test]
fn generator_counts_and_bidegrees() {
    for f in 2..=6 {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), f).unwrap();
        let i = build_ideal(&r, IdealKind::I).unwrap();
        let j = build_ideal(&r, IdealKind::J).unwrap();
        assert_eq!(i.len(), binomial(f, 4));
        assert_eq!(j.len(), binomial(f, 4) + f);
        assert!(i.bidegrees(&r).iter().all(|&d| d == (2, 0)));
        assert!(j.bidegrees(&r)[i.len()..].iter().all(|&d| d == (1, 1)));
        if f >= 5 {
            assert_eq!(build_ideal(&r, IdealKind::IPrime).unwrap().len(), binomial(f - 1, 4));
        }
    }
}

#[test]
fn every_generator_survives_render_and_parse() {
    for f in 2..=6 {
        let r = q(f);
        let mut kinds = vec![IdealKind::I, IdealKind::K, IdealKind::J, IdealKind::IPrime];
        kinds.extend((1..f).map(IdealKind::Lambda));
        for kind in kinds {
            for g in build_ideal(&r, kind).unwrap().gens {
                let text = render_polynomial(&r, &g);
                assert_eq!(parse_polynomial(&r, &text).unwrap(), g, "{kind} at f = {f}: {text}");
            }
        }
    }
}

#[test]
fn lambda_out_of_range_is_rejected() {
    let r = q(4);
    assert!(build_ideal(&r, IdealKind::Lambda(0)).is_err());
    assert!(build_ideal(&r, IdealKind::Lambda(4)).is_err());
}

#[test]
fn t_x_at_two() {
    let r = q(2);
    let tx = t_x_entries(&r).unwrap();
    assert_eq!(tx, vec![r.neg(&r.mul(&r.t(2), &r.x(1, 2))), r.mul(&r.t(1), &r.x(1, 2))]);
}

#[test]
fn d1_is_dual_to_delta1() {
    for f in 3..=5 {
        let r = q(f);
        let d1 = map_matrix(&r, MapName::D1).unwrap();
        let delta1 = map_matrix(&r, MapName::Delta1).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (f, binomial(f, 3)));
        for i in 0..d1.rows() {
            for j in 0..d1.cols() {
                assert_eq!(d1.entry(i, j), delta1.entry(j, i));
            }
        }
    }
}

#[test]
fn d1_column_at_three() {
    // the single column, for e_3* ∧ e_2* ∧ e_1*, is (x_(2,3), -x_(1,3), x_(1,2))
    let r = q(3);
    let d1 = map_matrix(&r, MapName::D1).unwrap();
    assert_eq!(d1.column(0), vec![r.x(2, 3), r.neg(&r.x(1, 3)), r.x(1, 2)]);
}

#[test]
fn relation_complex_closes_through_five() {
    for f in 2..=5 {
        let r = PolyRing::new(PrimeField::new(32003).unwrap(), f).unwrap();
        let d1 = map_matrix(&r, MapName::BigD1).unwrap();
        let d2 = map_matrix(&r, MapName::BigD2).unwrap();
        assert!(d1.compose(&r, &d2).unwrap().is_zero(), "f = {f}");
    }
}

#[test]
fn presented_complexes_close_over_two_fields() {
    fn run<F: Field>(r: &PolyRing<F>) {
        for name in [ComplexName::PreComplex, ComplexName::Seq32, ComplexName::Seq43] {
            let c = build_complex(r, name).unwrap();
            assert!(c.composites_vanish().unwrap().iter().all(|&b| b), "{name} f = {}", r.f());
            assert!(c.maps_well_defined().unwrap().iter().all(|&b| b), "{name} f = {}", r.f());
        }
    }
    for f in 3..=5 {
        run(&q(f));
        run(&PolyRing::new(PrimeField::new(2).unwrap(), f).unwrap());
    }
}

#[test]
fn localization_sets() {
    let r = q(5);
    let (s1, s2) = s1_s2_sets(&r).unwrap();
    assert_eq!(s1.len(), 3 * 3);
    assert_eq!(s2.len(), binomial(3, 2) + 2);
    assert!(s1_s2_sets(&q(2)).is_err());
}
