use super::*;
use proptest::prelude::*;

fn rf(s: &str) -> RationalFunction {
    RationalFunction::parse(s).unwrap()
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn symbolic_stages() -> &'static Stages<RationalFunction> {
    static STAGES: OnceLock<Stages<RationalFunction>> = OnceLock::new();
    STAGES.get_or_init(|| stages(&SequenceSpec::symbolic()).unwrap())
}

fn reference_rho() -> RationalFunction {
    rf(reference::RHO)
}

fn reference_h() -> BinaryQuadratic<RationalFunction> {
    let pre = rf(reference::H_PREFACTOR);
    BinaryQuadratic::new(
        pre.mul(&rf(reference::H_PP)),
        pre.mul(&rf(reference::H_PW)),
        pre.mul(&rf(reference::H_WW)),
    )
}

fn unscaled(st: &Stages<RationalFunction>) -> Stages<RationalFunction> {
    Stages {
        forms: quadric_parametrize(&st.lambda),
        ..st.clone()
    }
}

#[test]
fn degenerate_values_are_rejected() {
    for t in degenerate_values() {
        assert!(matches!(
            SequenceSpec::new(t.clone()),
            Err(Error::DegenerateSequence(_))
        ));
        assert!(SequenceSpec::new(&t + &Rational::frac(1, 5)).is_ok());
    }
    let err = SequenceSpec::new(Rational::zero()).unwrap_err();
    assert!(err.to_string().contains("at t = 0"), "{err}");
    assert!(SequenceSpec::new(Rational::from_i64(3)).is_ok());
}

#[test]
fn x_values_at_three() {
    let seq = SequenceSpec::new(Rational::from_i64(3)).unwrap();
    assert_eq!(
        seq.x_values(),
        [1, 4, 9, 16, 25, 36].map(Rational::from_i64)
    );
}

#[test]
fn solve_abc_examples() {
    let seq = SequenceSpec::new(Rational::from_i64(3)).unwrap();
    let one = Rational::one();
    assert_eq!(
        solve_abc(&seq, &one, &one, &one).unwrap(),
        (Rational::zero(), Rational::zero(), Rational::one())
    );
    let [d, e, f] = [16, 81, 256].map(Rational::from_i64);
    assert_eq!(
        solve_abc(&seq, &d, &e, &f).unwrap(),
        (Rational::one(), Rational::zero(), Rational::zero())
    );
    let half = SequenceSpec {
        t: Rational::frac(1, 2),
    };
    assert_eq!(
        solve_abc(&half, &one, &one, &one),
        Err(Error::SingularSystem)
    );
}

#[test]
fn solve_abc_reproduces_the_system() {
    let seq = SequenceSpec::new(Rational::frac(7, 3)).unwrap();
    let [d, e, f] = [q("2/5"), q("-3"), q("11/4")];
    let (a, b, c) = solve_abc(&seq, &d, &e, &f).unwrap();
    for (i, y) in BASE_OFFSETS.iter().zip([&d, &e, &f]) {
        let x2 = seq.square_at(*i).square();
        assert_eq!(&(&(&a * &x2) + &b) * &x2 + c.clone(), y * y);
    }
}

#[test]
fn relations_sum_to_one() {
    let st = symbolic_stages();
    for rel in [&st.lambda, &st.nu, &st.kappa] {
        assert_eq!(rel.sum(), RationalFunction::one());
    }
    assert_eq!(st.lambda.target, G_OFFSET);
    assert_eq!(st.nu.target, H_OFFSET);
    assert_eq!(st.kappa.target, K_OFFSET);
}

#[test]
fn lambda_matches_reference_relation() {
    let st = symbolic_stages();
    for (coeff, (name, expr)) in st.lambda.coeffs.iter().zip(reference::lambda()) {
        assert_eq!(*coeff, rf(&expr), "{name}");
    }
}

#[test]
fn relation_target_value_is_the_combination() {
    // independent check: on y² = x⁴ − 3x² + 5 the relation reproduces each target y²
    let seq = SequenceSpec::new(q("5/7")).unwrap();
    let y2 = |i: i64| {
        let x2 = seq.square_at(i).square();
        &(&x2 * &x2) - &(&Rational::from_i64(3) * &x2) + Rational::from_i64(5)
    };
    for target in [G_OFFSET, H_OFFSET, K_OFFSET] {
        let rel = square_relation(&seq, target).unwrap();
        let combo = BASE_OFFSETS
            .iter()
            .zip(&rel.coeffs)
            .fold(Rational::zero(), |acc, (&i, l)| &acc + &(l * &y2(i)));
        assert_eq!(combo, y2(target));
    }
}

#[test]
fn relations_specialize_consistently_at_three() {
    let t0 = Rational::from_i64(3);
    let st = symbolic_stages();
    let numeric = stages(&SequenceSpec::new(t0.clone()).unwrap()).unwrap();
    for (sym, num) in [
        (&st.lambda, &numeric.lambda),
        (&st.nu, &numeric.nu),
        (&st.kappa, &numeric.kappa),
    ] {
        assert_eq!(sym.map(|c| c.eval(&t0).unwrap()), *num);
    }
}

#[test]
fn quadric_parametrize_examples() {
    let st = symbolic_stages();
    let forms = quadric_parametrize(&st.lambda);
    let one = RationalFunction::one();
    let zero = RationalFunction::zero();
    let at_seed = forms.eval(&[one.clone(), one.clone(), one.clone()]);
    assert_eq!(at_seed, [one.neg(), one.neg(), one.neg(), one.clone()]);
    let l3 = st.lambda.coeffs[2].clone();
    let at_w = forms.eval(&[zero.clone(), zero, one]);
    assert_eq!(at_w, [l3.clone(), l3.clone(), l3.neg(), l3]);
}

#[test]
fn quadric_identity_holds_symbolically() {
    let st = symbolic_stages();
    for forms in [quadric_parametrize(&st.lambda), st.forms.clone()] {
        let lhs = st.lambda.apply(&forms.d, &forms.e, &forms.f);
        assert!((&lhs - &forms.g.pow(2)).is_zero());
    }
}

#[test]
fn clearing_factor_is_lcm_of_lambda_denominators() {
    let st = symbolic_stages();
    let lcm = st.lambda.coeffs.iter().fold(Polynomial::one(), |acc, c| {
        let den = c.denom();
        (&acc * den).exact_div(&acc.gcd(den)).unwrap()
    });
    let factor = clearing_factor(&RationalFunction::t());
    assert!(factor.is_polynomial());
    assert_eq!(factor.numer().monic(), lcm.monic());
    for form in [&st.forms.d, &st.forms.e, &st.forms.f, &st.forms.g] {
        assert!(form.terms().all(|(_, c)| c.is_polynomial()));
    }
}

#[test]
fn h_quartic_shape() {
    let st = symbolic_stages();
    let quartic = st.h_quartic();
    assert!(quartic.is_homogeneous(4));
    assert_eq!(quartic.total_degree(), Some(4));
    let scaled_l1 = st.lambda.coeffs[0].mul(&clearing_factor(&st.seq.t));
    assert_eq!(quartic.coeff([4, 0, 0]), scaled_l1.square());
    assert_eq!(
        unscaled(st).h_quartic().coeff([4, 0, 0]),
        st.lambda.coeffs[0].square()
    );
}

#[test]
fn h_quartic_specializes_at_three() {
    let t0 = Rational::from_i64(3);
    let numeric = stages(&SequenceSpec::new(t0.clone()).unwrap()).unwrap();
    let symbolic = symbolic_stages().h_quartic().map(|c| c.eval(&t0).unwrap());
    assert!((&symbolic - &numeric.h_quartic()).is_zero());
}

#[test]
fn reference_rho_kills_the_discriminant() {
    let kill = symbolic_kill().unwrap();
    assert_eq!(kill.source, KillSource::Reference);
    assert_eq!(kill.rho, reference_rho());
    let st = symbolic_stages();
    assert!(st.killed_quartic(&kill.rho).invariants().disc.is_zero());
    let perturbed = kill.rho.add(&RationalFunction::one());
    assert!(!st.killed_quartic(&perturbed).invariants().disc.is_zero());
}

#[test]
fn discriminant_in_q_vanishes_at_rho() {
    let st = symbolic_stages();
    let disc = discriminant_in_q(&st.h_quartic());
    assert!(!disc.is_zero());
    assert!(disc.eval(&reference_rho()).is_zero());
}

#[test]
fn killed_discriminant_vanishes_at_three() {
    let t0 = Rational::from_i64(3);
    let rho = reference_rho().eval(&t0).unwrap();
    assert_eq!(rho, q("752/1347"));
    let st = stages(&SequenceSpec::new(t0).unwrap()).unwrap();
    assert!(st.killed_quartic(&rho).invariants().disc.is_zero());
}

#[test]
fn h_squares_to_the_killed_quartic_and_matches_reference() {
    let st = symbolic_stages();
    let rho = reference_rho();
    let h = st.extract_h(&rho).unwrap();
    assert_eq!(h.square(), st.killed_quartic(&rho));
    assert_eq!(h, reference_h());
}

#[test]
fn h_at_three_evaluates_to_leading_coefficient() {
    let t0 = Rational::from_i64(3);
    let sp = specialize(&t0).unwrap();
    let quartic = sp.stages.killed_quartic(&sp.rho);
    let (one, zero) = (Rational::one(), Rational::zero());
    assert_eq!(sp.h.eval(&one, &zero).square(), quartic.a);
}

#[test]
fn k_quartic_leading_coefficient_is_lambda1_squared() {
    let st = symbolic_stages();
    let rho = reference_rho();
    let scaled_l1 = st.lambda.coeffs[0].mul(&clearing_factor(&st.seq.t));
    let k = st.k_quartic(&rho);
    assert_eq!(k.a, scaled_l1.square());
    assert!(!k.invariants().disc.is_zero());
    let plain = unscaled(st).k_quartic(&rho);
    assert_eq!(plain.a, st.lambda.coeffs[0].square());
}

#[test]
fn k_quartic_at_three() {
    let sp = specialize(&Rational::from_i64(3)).unwrap();
    let k = &sp.k_quartic;
    assert_eq!(k.a, Rational::from_i64(7965562500));
    assert_eq!(k.b, q("263912517750000/449"));
    assert!(!k.invariants().disc.is_zero());
}

#[test]
fn specialization_at_three_matches_reference_jacobian() {
    let sp = specialize(&Rational::from_i64(3)).unwrap();
    let sc = &sp.jacobian;
    assert!(sc.closed_form_on_curve);
    assert!(sc.curve.contains(&sc.point));
    assert!(sc.curve.a2.is_zero());
    assert_eq!(sc.curve.a4, q(reference::T3_A4));
    assert_eq!(sc.curve.a6, q(reference::T3_A6));
    assert_eq!(sc.point, Point::new(q(reference::T3_X), q(reference::T3_Y)));
    assert_eq!(
        sc.curve.torsion_order(&sc.point).unwrap(),
        TorsionOrder::Infinite
    );
}

#[test]
fn walk_at_three_emits_distinct_verified_curves() {
    let walk = jacobian_walk(&Rational::from_i64(3), 3).unwrap();
    assert_eq!(walk.records.len(), 3);
    let squares = [1, 4, 9, 16, 25, 36].map(Rational::from_i64);
    for (rec, (_, wit)) in walk.records.iter().zip(&walk.witnesses) {
        assert!(rec.check().unwrap().is_empty());
        assert!(wit.on_curve(&SequenceSpec {
            t: Rational::from_i64(3)
        }));
        let xs: Vec<Rational> = rec.points.iter().map(|p| p[0].parse().unwrap()).collect();
        assert_eq!(xs, squares);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(!same_up_to_square(
                &walk.witnesses[i].1.abc,
                &walk.witnesses[j].1.abc
            ));
        }
    }
}

#[test]
fn walk_rejects_degenerate_start() {
    assert!(matches!(
        jacobian_walk(&Rational::zero(), 1),
        Err(Error::DegenerateSequence(_))
    ));
}

#[test]
fn same_up_to_square_examples() {
    let abc = (q("1"), q("-2"), q("3"));
    let scaled = (q("4/9"), q("-8/9"), q("4/3"));
    assert!(same_up_to_square(&abc, &scaled));
    let other = (q("2"), q("-4"), q("6"));
    assert!(!same_up_to_square(&abc, &other));
}

fn good_t() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12)
        .prop_map(|(n, d)| Rational::frac(n, d))
        .prop_filter("nondegenerate", |t| {
            let seq = SequenceSpec::new(t.clone());
            seq.is_ok() && reference_rho().eval(t).is_ok() && specialize(t).is_ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn symbolic_then_specialize_equals_specialize_then_derive(t0 in good_t()) {
        let sym = symbolic_stages();
        let at = |c: &RationalFunction| c.eval(&t0).unwrap();
        let sp = specialize(&t0).unwrap();
        let st = &sp.stages;
        prop_assert_eq!(sym.lambda.map(at), st.lambda.clone());
        prop_assert_eq!(sym.nu.map(at), st.nu.clone());
        prop_assert_eq!(sym.kappa.map(at), st.kappa.clone());
        for (a, b) in [(&sym.forms.d, &st.forms.d), (&sym.forms.e, &st.forms.e), (&sym.forms.f, &st.forms.f), (&sym.forms.g, &st.forms.g)] {
            prop_assert!((&a.map(at) - b).is_zero());
        }
        let rho = reference_rho();
        prop_assert_eq!(at(&rho), sp.rho.clone());
        let h = sym.extract_h(&rho).unwrap().map(at);
        prop_assert!(h == sp.h || h == sp.h.neg());
        prop_assert_eq!(sym.k_quartic(&rho).map(at), sp.k_quartic.clone());
    }
}

#[test]
fn derived_roots_include_reference_rho() {
    let st = symbolic_stages();
    let disc = discriminant_in_q(&st.h_quartic());
    let roots =
        rational_root_interpolation(&disc, crate::polyalg::roots::INTERPOLATION_BOUND).unwrap();
    assert!(roots.contains(&reference_rho()));
    let kill = derive_rho(st).unwrap();
    assert_eq!(kill.source, KillSource::Derived);
    assert!(roots.contains(&kill.rho));
    assert!(st.extract_h(&kill.rho).is_ok());
}
