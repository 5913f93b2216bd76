//! Birational maps from quartic models to Weierstrass models.

use crate::error::{Error, Result};
use crate::polyalg::{Field, Polynomial};

use super::curves::{Point, QuarticCurve, QuarticPoint, WeierstrassModel};
use super::funcfield::{CurveFunction, FunctionField};

/// Mutually inverse maps between a quartic `y² = f(x)` and a Weierstrass model.
#[derive(Clone, Debug)]
pub struct RationalMapPair<F> {
    pub source: FunctionField<F>,
    pub target: FunctionField<F>,
    pub model: WeierstrassModel<F>,
    pub marked: QuarticPoint<F>,
    /// `(X, Y)` as functions of `(x, y)`.
    pub forward: [CurveFunction<F>; 2],
    /// `(x, y)` as functions of `(X, Y)`.
    pub backward: [CurveFunction<F>; 2],
}

/// Outcome of the three symbolic checks on a map pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapChecks {
    pub pullback: bool,
    pub roundtrip: bool,
    pub marked_to_infinity: bool,
}

impl MapChecks {
    pub fn all(&self) -> bool {
        self.pullback && self.roundtrip && self.marked_to_infinity
    }
}

/// Builds `(X, Y)` and the model for a quartic with a marked point.
pub fn quartic_to_weierstrass<F: Field>(
    curve: &QuarticCurve<F>,
) -> Result<(WeierstrassModel<F>, RationalMapPair<F>)> {
    if curve.quartic.invariants().disc.is_zero() {
        return Err(Error::SingularQuartic);
    }
    let marked = curve.marked.clone().ok_or(Error::NoRationalPoint)?;
    let f = curve.polynomial();
    let source = FunctionField::new(f.clone());
    let pair = match &marked {
        QuarticPoint::Affine { x, y } if y.is_zero() => ramified(&source, x)?,
        QuarticPoint::Affine { x, y } => {
            // u = x − x₀, v = y
            let g = f.compose(&Polynomial::new(vec![x.clone(), F::one()]));
            let u = source.sub(&source.x(), &source.constant(x.clone()));
            let x0 = x.clone();
            connell(&source, &g, y, u, source.y(), move |k, u, v| {
                Ok((k.add(u, &k.constant(x0.clone())), v.clone()))
            })?
        }
        QuarticPoint::Infinity { branch } => {
            // u = 1/x, v = y/x²
            let g = f.reversed(4);
            let u = source.inv(&source.x())?;
            let v = source.mul(&source.y(), &source.square(&u));
            connell(&source, &g, branch, u, v, |k, u, v| {
                let x = k.inv(u)?;
                Ok((x.clone(), k.mul(v, &k.square(&x))))
            })?
        }
    };
    let (model, forward, target, backward) = pair;
    Ok((
        model.clone(),
        RationalMapPair {
            source,
            target,
            model,
            marked,
            forward,
            backward,
        },
    ))
}

type Parts<F> = (
    WeierstrassModel<F>,
    [CurveFunction<F>; 2],
    FunctionField<F>,
    [CurveFunction<F>; 2],
);

/// `v² = a u⁴ + b u³ + c u² + d u + q²` with `(u, v) = (0, q)` sent to infinity.
fn connell<F: Field>(
    source: &FunctionField<F>,
    g: &Polynomial<F>,
    q: &F,
    u: CurveFunction<F>,
    v: CurveFunction<F>,
    to_source: impl Fn(
        &FunctionField<F>,
        &CurveFunction<F>,
        &CurveFunction<F>,
    ) -> Result<(CurveFunction<F>, CurveFunction<F>)>,
) -> Result<Parts<F>> {
    let (a, b, c, d) = (g.coeff(4), g.coeff(3), g.coeff(2), g.coeff(1));
    let k = source;
    let two = F::from_i64(2);
    let two_q = two.mul(q);
    let q2 = q.square();
    let d2_over_2q = d.square().div(&two_q)?;

    let a1 = d.div(q)?;
    let a2 = c.sub(&d.square().div(&F::from_i64(4).mul(&q2))?);
    let a3 = two_q.mul(&b);
    let a4 = F::from_i64(-4).mul(&q2).mul(&a);
    let a6 = a2.mul(&a4);

    let u2 = k.square(&u);
    let u3 = k.mul(&u2, &u);
    let v_plus_q = k.add(&v, &k.constant(q.clone()));
    let x_num = k.add(&k.scale(&v_plus_q, &two_q), &k.scale(&u, &d));
    let big_x = k.div(&x_num, &u2)?;
    let y_num = k.sub(
        &k.add(
            &k.scale(&v_plus_q, &F::from_i64(4).mul(&q2)),
            &k.scale(&k.add(&k.scale(&u, &d), &k.scale(&u2, &c)), &two_q),
        ),
        &k.scale(&u2, &d2_over_2q),
    );
    let big_y = k.div(&y_num, &u3)?;
    let half = two.inv()?;
    // complete the square: Y' = Y + (a₁X + a₃)/2
    let big_y_short = k.add(
        &big_y,
        &k.scale(
            &k.add(&k.scale(&big_x, &a1), &k.constant(a3.clone())),
            &half,
        ),
    );

    let model = WeierstrassModel::new(
        a2.add(&a1.square().mul(&F::from_i64(4).inv()?)),
        a4.add(&a1.mul(&a3).mul(&half)),
        a6.add(&a3.square().mul(&F::from_i64(4).inv()?)),
    );
    if model.is_singular() {
        return Err(Error::SingularQuartic);
    }

    let t = FunctionField::new(model.cubic());
    let (tx, ty) = (t.x(), t.y());
    // long-form Y = Y' − (a₁X + a₃)/2
    let long_y = t.sub(
        &ty,
        &t.scale(&t.add(&t.scale(&tx, &a1), &t.constant(a3)), &half),
    );
    let u_num = t.sub(
        &t.scale(&t.add(&tx, &t.constant(c)), &two_q),
        &t.constant(d2_over_2q),
    );
    let u_back = t.div(&u_num, &long_y)?;
    let inner = t.sub(&t.mul(&u_back, &tx), &t.constant(d));
    let v_back = t.add(
        &t.constant(q.neg()),
        &t.scale(&t.mul(&u_back, &inner), &two_q.inv()?),
    );
    let (bx, by) = to_source(&t, &u_back, &v_back)?;
    Ok((model, [big_x, big_y_short], t, [bx, by]))
}

/// Marked point `(x₀, 0)`: `s = x − x₀`, `X = α/s`, `Y = αy/s²` with `α = f'(x₀)`.
fn ramified<F: Field>(source: &FunctionField<F>, x0: &F) -> Result<Parts<F>> {
    let k = source;
    let g = source
        .defining_polynomial()
        .compose(&Polynomial::new(vec![x0.clone(), F::one()]));
    let (alpha, beta, gamma, delta) = (g.coeff(1), g.coeff(2), g.coeff(3), g.coeff(4));
    if alpha.is_zero() {
        return Err(Error::SingularQuartic);
    }
    let model = WeierstrassModel::new(beta, gamma.mul(&alpha), delta.mul(&alpha.square()));
    if model.is_singular() {
        return Err(Error::SingularQuartic);
    }
    let s = k.sub(&k.x(), &k.constant(x0.clone()));
    let big_x = k.scale(&k.inv(&s)?, &alpha);
    let big_y = k.scale(&k.div(&k.y(), &k.square(&s))?, &alpha);

    let t = FunctionField::new(model.cubic());
    let inv_x = t.inv(&t.x())?;
    let bx = t.add(&t.constant(x0.clone()), &t.scale(&inv_x, &alpha));
    let by = t.scale(&t.mul(&t.y(), &t.square(&inv_x)), &alpha);
    Ok((model, [big_x, big_y], t, [bx, by]))
}

impl<F: Field> RationalMapPair<F> {
    /// Runs the pullback, roundtrip and marked-point checks symbolically.
    pub fn verify(&self) -> Result<MapChecks> {
        let (k, t) = (&self.source, &self.target);
        let [fx, fy] = &self.forward;
        let [bx, by] = &self.backward;
        let lhs = k.square(fy);
        let rhs = k.eval_poly(&self.model.cubic(), fx);
        let pullback = k.equal(&lhs, &rhs);
        let back_then_fwd = [k.pullback(bx, fx, fy)?, k.pullback(by, fx, fy)?];
        let fwd_then_back = [t.pullback(fx, bx, by)?, t.pullback(fy, bx, by)?];
        let roundtrip = k.equal(&back_then_fwd[0], &k.x())
            && k.equal(&back_then_fwd[1], &k.y())
            && t.equal(&fwd_then_back[0], &t.x())
            && t.equal(&fwd_then_back[1], &t.y());
        let marked_to_infinity = k.value_at(fx, &self.marked)?.is_none();
        Ok(MapChecks {
            pullback,
            roundtrip,
            marked_to_infinity,
        })
    }

    pub fn forward_point(&self, pt: &QuarticPoint<F>) -> Result<Point<F>> {
        let k = &self.source;
        match k.value_at(&self.forward[0], pt)? {
            None => Ok(Point::Infinity),
            Some(x) => {
                let y = k.value_at(&self.forward[1], pt)?.ok_or(Error::NotOnCurve)?;
                Ok(Point::new(x, y))
            }
        }
    }

    pub fn backward_point(&self, pt: &Point<F>) -> Result<QuarticPoint<F>> {
        let (x0, y0) = match pt {
            Point::Infinity => return Ok(self.marked.clone()),
            Point::Affine { x, y } => (x.clone(), y.clone()),
        };
        let t = &self.target;
        let here = QuarticPoint::Affine { x: x0, y: y0 };
        match t.value_at(&self.backward[0], &here)? {
            Some(x) => {
                let y = t
                    .value_at(&self.backward[1], &here)?
                    .ok_or(Error::NotOnCurve)?;
                Ok(QuarticPoint::Affine { x, y })
            }
            None => {
                let branch_fn = t.div(&self.backward[1], &t.square(&self.backward[0]))?;
                let branch = t.value_at(&branch_fn, &here)?.ok_or(Error::NotOnCurve)?;
                Ok(QuarticPoint::Infinity { branch })
            }
        }
    }
}

/// Moves a rational root of the cubic to `x = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoTorsionModel<F> {
    pub model: WeierstrassModel<F>,
    /// The root `r`; points map by `(x, y) ↦ (x − r, y)`.
    pub shift: F,
}

impl<F: Field> TwoTorsionModel<F> {
    pub fn alpha(&self) -> &F {
        &self.model.a2
    }

    pub fn beta(&self) -> &F {
        &self.model.a4
    }

    pub fn transport(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::new(x.sub(&self.shift), y.clone()),
        }
    }
}

/// Root of least complexity, preferring zero and then the smallest; `y² = x(x² + αx + β)`.
pub fn two_torsion_normalize<F: Field>(w: &WeierstrassModel<F>) -> Result<TwoTorsionModel<F>> {
    let roots = F::poly_roots(&w.cubic())?;
    let r = roots
        .into_iter()
        .min_by(|p, q| {
            p.complexity()
                .cmp(&q.complexity())
                .then_with(|| q.is_zero().cmp(&p.is_zero()))
                .then_with(|| {
                    let diff = p.sub(q);
                    if diff.is_zero() {
                        std::cmp::Ordering::Equal
                    } else if diff.is_negative() {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
        })
        .ok_or(Error::NoRationalTwoTorsion)?;
    let alpha = F::from_i64(3).mul(&r).add(&w.a2);
    let beta = F::from_i64(3)
        .mul(&r.square())
        .add(&F::from_i64(2).mul(&w.a2).mul(&r))
        .add(&w.a4);
    Ok(TwoTorsionModel {
        model: WeierstrassModel::two_torsion_form(alpha, beta),
        shift: r,
    })
}

/// `s` with `α₂ = sα₁`, `β₂ = s²β₁` and `s` a square.
pub fn isomorphism_scaling<F: Field>(
    w1: &WeierstrassModel<F>,
    w2: &WeierstrassModel<F>,
) -> Option<F> {
    if !w1.a6.is_zero() || !w2.a6.is_zero() {
        return None;
    }
    let s = if !w1.a2.is_zero() {
        w2.a2.div(&w1.a2).ok()?
    } else {
        if !w2.a2.is_zero() {
            return None;
        }
        // α = 0 on both sides: s² = β₂/β₁
        w2.a4.div(&w1.a4).ok()?.sqrt()?
    };
    let candidates = if w1.a2.is_zero() {
        vec![s.clone(), s.neg()]
    } else {
        vec![s]
    };
    candidates
        .into_iter()
        .find(|s| !s.is_zero() && w2.a4 == s.square().mul(&w1.a4) && s.sqrt().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::polyalg::{BinaryQuartic, RationalFunction};
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn w(a2: i64, a4: i64, a6: i64) -> WeierstrassModel<Rational> {
        WeierstrassModel::new(r(a2), r(a4), r(a6))
    }

    fn quartic(c: [i64; 5]) -> BinaryQuartic<Rational> {
        BinaryQuartic::new(r(c[0]), r(c[1]), r(c[2]), r(c[3]), r(c[4]))
    }

    #[test]
    fn normalize_examples() {
        let n = two_torsion_normalize(&w(0, -1, 0)).unwrap();
        assert_eq!((n.alpha(), n.beta()), (&r(0), &r(-1)));
        // (x − 2)(x² + 1) = x³ − 2x² + x − 2
        let n = two_torsion_normalize(&w(-2, 1, -2)).unwrap();
        assert_eq!(n.model, w(4, 5, 0));
        assert_eq!(n.shift, r(2));
        assert_eq!(
            two_torsion_normalize(&w(0, 0, 2)),
            Err(Error::NoRationalTwoTorsion)
        );
    }

    #[test]
    fn scaling_examples() {
        let a = w(3, 5, 0);
        assert_eq!(isomorphism_scaling(&a, &a), Some(r(1)));
        assert_eq!(isomorphism_scaling(&a, &w(12, 80, 0)), Some(r(4)));
        assert_eq!(isomorphism_scaling(&a, &w(6, 20, 0)), None);
        let t = RationalFunction::t();
        let alpha = t.add(&RationalFunction::from_i64(1));
        let a = WeierstrassModel::two_torsion_form(alpha.clone(), t.clone());
        let b = WeierstrassModel::two_torsion_form(
            alpha.mul(&RationalFunction::from_i64(2)),
            t.mul(&RationalFunction::from_i64(4)),
        );
        assert_eq!(isomorphism_scaling(&a, &b), None);
    }

    fn check_curve(curve: &QuarticCurve<Rational>) {
        let (model, maps) = quartic_to_weierstrass(curve).unwrap();
        let checks = maps.verify().unwrap();
        assert!(checks.all(), "{checks:?} for {curve:?}");
        assert_eq!(
            maps.forward_point(curve.marked.as_ref().unwrap()).unwrap(),
            Point::Infinity
        );
        assert_eq!(
            maps.backward_point(&Point::Infinity).unwrap(),
            curve.marked.clone().unwrap()
        );
        let f = curve.polynomial();
        for x in -6..=6 {
            let x = r(x);
            if let Some(y) = f.eval(&x).sqrt() {
                let pt = QuarticPoint::Affine { x, y };
                let image = maps.forward_point(&pt).unwrap();
                assert!(model.contains(&image));
                if image != Point::Infinity {
                    assert_eq!(maps.backward_point(&image).unwrap(), pt);
                }
            }
        }
    }

    #[test]
    fn marked_point_kinds() {
        // y² = x⁴ + 2x + 1 through (0, ±1) and both points at infinity
        let q = quartic([1, 0, 0, 2, 1]);
        for marked in [
            QuarticPoint::Affine { x: r(0), y: r(1) },
            QuarticPoint::Affine { x: r(0), y: r(-1) },
            QuarticPoint::Infinity { branch: r(1) },
            QuarticPoint::Infinity { branch: r(-1) },
        ] {
            check_curve(&QuarticCurve::new(q.clone(), Some(marked)).unwrap());
        }
        // y² = x⁴ − 1 through (1, 0)
        let q = quartic([1, 0, 0, 0, -1]);
        check_curve(
            &QuarticCurve::new(q, Some(QuarticPoint::Affine { x: r(1), y: r(0) })).unwrap(),
        );
    }

    #[test]
    fn missing_point() {
        let q = quartic([2, 0, 0, 0, 1]);
        let c = QuarticCurve::new(q, None).unwrap();
        assert_eq!(
            quartic_to_weierstrass(&c).err(),
            Some(Error::NoRationalPoint)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn planted_point_maps(c in proptest::array::uniform4(-9i64..9), x0 in -4i64..4, y0 in -5i64..5) {
            // solve for the constant term so that (x₀, y₀) lies on the curve
            let [a, b, cc, d] = c;
            prop_assume!(a != 0);
            let e = y0 * y0 - (((a * x0 + b) * x0 + cc) * x0 + d) * x0;
            let q = quartic([a, b, cc, d, e]);
            prop_assume!(!q.invariants().disc.is_zero());
            let marked = QuarticPoint::Affine { x: r(x0), y: r(y0) };
            let curve = QuarticCurve::new(q, Some(marked)).unwrap();
            let (_, maps) = quartic_to_weierstrass(&curve).unwrap();
            let checks = maps.verify().unwrap();
            prop_assert!(checks.all(), "{:?}", checks);
        }
    }
}
