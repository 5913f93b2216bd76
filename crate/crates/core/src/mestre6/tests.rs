use super::*;
use crate::ellmodel::{independence_certificate, Verdict};
use crate::polyalg::parse::parse_expr;
use proptest::prelude::*;

fn rf(s: &str) -> RationalFunction {
    RationalFunction::parse(s).unwrap()
}

fn symbolic_curve() -> MestreCurve<RationalFunction> {
    curve_and_points(&HalfOffsetSequence::symbolic()).unwrap()
}

#[test]
fn degenerate_values_are_rejected() {
    for t in degenerate_values() {
        assert!(matches!(
            HalfOffsetSequence::new(t.clone()),
            Err(Error::DegenerateSequence(_))
        ));
        let nearby = &t + &Rational::frac(1, 7);
        assert!(HalfOffsetSequence::new(nearby).is_ok());
    }
    let err = HalfOffsetSequence::new(Rational::frac(1, 2)).unwrap_err();
    assert!(err.to_string().contains("at t = 1/2"), "{err}");
}

#[test]
fn p_vanishes_at_the_squares() {
    let seq = HalfOffsetSequence::symbolic();
    let p = build_p(&seq);
    assert_eq!(p.degree(), Some(12));
    assert!(p.is_monic() && p.is_even());
    for x in seq.x_values() {
        assert!(p.eval(&x).is_zero());
    }
}

#[test]
fn p_x10_coefficient_is_minus_power_sum() {
    let p = build_p(&HalfOffsetSequence::symbolic());
    let mut sum = String::from("0");
    for k in OFFSETS {
        sum = format!("{sum}+(t+{k}/2)^4");
    }
    assert_eq!(p.coeff(10), rf(&sum).neg());
}

#[test]
fn specialize_then_build_matches_build_then_specialize() {
    let t0 = Rational::frac(3, 4);
    let symbolic = build_p(&HalfOffsetSequence::symbolic());
    let direct = build_p(&HalfOffsetSequence::new(t0.clone()).unwrap());
    assert_eq!(symbolic.try_map(|c| c.eval(&t0)).unwrap(), direct);
}

#[test]
fn decomposition_identity_and_transcription() {
    let m = symbolic_curve();
    let d = &m.decomposition;
    assert!(d.identity_holds());
    for (name, k, expr) in reference::Q_COEFFS {
        assert_eq!(d.q.coeff(k), rf(expr), "{name}");
    }
    for (name, k, expr) in reference::R_COEFFS {
        assert_eq!(d.r.coeff(k), rf(expr), "{name}");
    }
    for k in [1, 3, 5] {
        assert!(d.q.coeff(k).is_zero());
    }
    let x = rf("(t+3/2)^2");
    assert_eq!(d.r.eval(&x), d.q.eval(&x).square());
}

#[test]
fn six_points_on_the_symbolic_curve() {
    let m = symbolic_curve();
    for (x, y) in &m.points {
        assert!(m.curve.contains(x, y));
    }
}

#[test]
fn zero_is_a_singular_specialization() {
    // t = 0 is also a collision, so go through the decomposition directly
    let seq = HalfOffsetSequence {
        t: Rational::zero(),
    };
    assert!(matches!(
        curve_and_points(&seq),
        Err(Error::SingularSpecialization(_))
    ));
}

#[test]
fn three_quarters_has_six_distinct_points() {
    let m = curve_and_points(&HalfOffsetSequence::new(Rational::frac(3, 4)).unwrap()).unwrap();
    for i in 0..6 {
        assert!(m.curve.contains(&m.points[i].0, &m.points[i].1));
        for j in i + 1..6 {
            assert_ne!(m.points[i].0, m.points[j].0);
        }
    }
}

#[test]
fn estar_model_symbolic() {
    let estar = estar_model(&HalfOffsetSequence::symbolic()).unwrap();
    let model = &estar.two_torsion.model;
    assert!(model.a6.is_zero());
    assert!(model.contains(&Point::new(
        RationalFunction::zero(),
        RationalFunction::zero()
    )));
    for p in &estar.points {
        assert!(model.contains(p));
        assert!(!p.is_infinity());
    }
    let reference = reference_model().unwrap();
    assert_eq!(
        model.j_invariant().unwrap(),
        reference.j_invariant().unwrap()
    );
    let layer = compare_models(model, &reference).unwrap();
    assert_ne!(layer, MatchLayer::None);
}

#[test]
fn reference_beta_has_the_expected_factor() {
    let beta = parse_expr::<RationalFunction>(reference::BETA, Some(("t", RationalFunction::t())))
        .unwrap();
    let factor = rf("4*t^2+17");
    assert!(beta.div(&factor).unwrap().denom().is_one());
}

#[test]
fn estar_dual_path() {
    let t0 = Rational::frac(3, 4);
    let symbolic = estar_model(&HalfOffsetSequence::symbolic()).unwrap();
    let direct = estar_model(&HalfOffsetSequence::new(t0.clone()).unwrap()).unwrap();
    let specialized = symbolic.two_torsion.model.try_map(|c| c.eval(&t0)).unwrap();
    assert_eq!(
        specialized.j_invariant().unwrap(),
        direct.two_torsion.model.j_invariant().unwrap()
    );
    assert!(direct.verify_maps().unwrap().all());
}

#[test]
fn duplicated_point_is_not_certified() {
    let t0 = Rational::frac(3, 4);
    let estar = estar_model(&HalfOffsetSequence::new(t0).unwrap()).unwrap();
    let p = estar.points[0].clone();
    let cert = independence_certificate(&estar.two_torsion.model, &[p.clone(), p]).unwrap();
    assert_eq!(cert.verdict, Verdict::NotCertified, "{cert:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn random_t_points_on_curve(n in -60i64..60, d in 1i64..12) {
        let t = Rational::frac(n, d);
        prop_assume!(!degenerate_values().contains(&t));
        let m = curve_and_points(&HalfOffsetSequence::new(t).unwrap()).unwrap();
        for (x, y) in &m.points {
            prop_assert!(m.curve.contains(x, y));
        }
    }
}
