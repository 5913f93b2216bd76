//! The invariant-theoretic Jacobian `y² = x³ − 27Ix − 27J` of a binary quartic.

use crate::error::{Error, Result};
use crate::polyalg::{BinaryQuartic, Field};

use super::curves::{Point, QuarticCurve, QuarticPoint, WeierstrassModel};
use super::transform::quartic_to_weierstrass;

#[derive(Clone, Debug, PartialEq)]
pub struct ScJacobian<F> {
    pub curve: WeierstrassModel<F>,
    pub point: Point<F>,
    /// Whether the closed-form point satisfied the curve equation; when it does
    /// not, `point` comes from the birational map through infinity instead.
    pub closed_form_on_curve: bool,
}

pub fn sc_jacobian_with_point<F: Field>(quartic: &BinaryQuartic<F>) -> Result<ScJacobian<F>> {
    let BinaryQuartic { a, b, c, d, .. } = quartic;
    let root = a.sqrt().ok_or(Error::LeadingCoefficientNotSquare)?;
    if root.is_zero() {
        return Err(Error::LeadingCoefficientNotSquare);
    }
    let curve = WeierstrassModel::new(
        F::zero(),
        F::from_i64(-27).mul(&quartic.invariant_i()),
        F::from_i64(-27).mul(&quartic.invariant_j()),
    );
    if curve.is_singular() {
        return Err(Error::SingularQuartic);
    }
    let k = F::from_i64;
    let x = k(3)
        .mul(&k(3).mul(&b.square()).sub(&k(8).mul(a).mul(c)))
        .div(&k(4).mul(a))?;
    let y = k(27)
        .mul(
            &b.pow(3)
                .add(&k(8).mul(&a.square()).mul(d))
                .sub(&k(4).mul(a).mul(b).mul(c)),
        )
        .div(&k(8).mul(&root.pow(3)))?;
    let point = Point::new(x, y);
    if curve.contains(&point) {
        return Ok(ScJacobian {
            curve,
            point,
            closed_form_on_curve: true,
        });
    }
    let marked = QuarticCurve::new(
        quartic.clone(),
        Some(QuarticPoint::Infinity {
            branch: root.clone(),
        }),
    )?;
    let (model, maps) = quartic_to_weierstrass(&marked)?;
    let image = maps.forward_point(&QuarticPoint::Infinity { branch: root.neg() })?;
    let iso = WeierstrassIsomorphism::between(&model, &curve).ok_or(Error::NotIsomorphic)?;
    Ok(ScJacobian {
        curve,
        point: iso.apply(&image),
        closed_form_on_curve: false,
    })
}

/// `(x, y) ↦ (u²(x + r₁) − r₂, u³y)` where `rᵢ = a₂/3` of each side.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassIsomorphism<F> {
    pub u: F,
    r1: F,
    r2: F,
}

impl<F: Field> WeierstrassIsomorphism<F> {
    pub fn between(from: &WeierstrassModel<F>, to: &WeierstrassModel<F>) -> Option<Self> {
        let third = F::from_i64(3).inv().ok()?;
        let (r1, r2) = (from.a2.mul(&third), to.a2.mul(&third));
        let (a1, b1) = short_coefficients(from);
        let (a2, b2) = short_coefficients(to);
        let candidates: Vec<F> = if !a1.is_zero() && !b1.is_zero() {
            if a2.is_zero() || b2.is_zero() {
                return None;
            }
            let u2 = b2.mul(&a1).div(&a2.mul(&b1)).ok()?;
            vec![u2]
        } else if b1.is_zero() {
            if !b2.is_zero() || a2.is_zero() {
                return None;
            }
            let u2 = a2.div(&a1).ok()?.sqrt()?;
            vec![u2.clone(), u2.neg()]
        } else {
            if !a2.is_zero() || b2.is_zero() {
                return None;
            }
            // u⁶ = B₂/B₁: try u² from a cube root of the ratio given as a square
            let ratio = b2.div(&b1).ok()?;
            let u3 = ratio.sqrt()?;
            [u3.clone(), u3.neg()]
                .into_iter()
                .filter_map(|c| {
                    F::poly_roots(&crate::polyalg::Polynomial::new(vec![
                        c.neg(),
                        F::zero(),
                        F::zero(),
                        F::one(),
                    ]))
                    .ok()
                })
                .flatten()
                .map(|u| u.square())
                .collect()
        };
        candidates.into_iter().find_map(|u2| {
            let u = u2.sqrt()?;
            let ok = a2 == u2.square().mul(&a1) && b2 == u2.pow(3).mul(&b1);
            ok.then(|| WeierstrassIsomorphism {
                u,
                r1: r1.clone(),
                r2: r2.clone(),
            })
        })
    }

    pub fn apply(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let u2 = self.u.square();
                Point::new(
                    u2.mul(&x.add(&self.r1)).sub(&self.r2),
                    u2.mul(&self.u).mul(y),
                )
            }
        }
    }

    pub fn invert(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let u2 = self.u.square();
                let x1 = x.add(&self.r2).div(&u2).expect("u ≠ 0").sub(&self.r1);
                Point::new(x1, y.div(&u2.mul(&self.u)).expect("u ≠ 0"))
            }
        }
    }
}

/// `(A, B)` of the depressed form `y² = x³ + Ax + B`.
fn short_coefficients<F: Field>(w: &WeierstrassModel<F>) -> (F, F) {
    let third = F::from_i64(3).inv().expect("characteristic 0");
    let r = w.a2.mul(&third);
    let a = w.a4.sub(&w.a2.mul(&r));
    let b = w.a6.sub(&w.a4.mul(&r)).add(&F::from_i64(2).mul(&r.pow(3)));
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn x4_plus_1() {
        let q = BinaryQuartic::new(r(1), r(0), r(0), r(0), r(1));
        let sc = sc_jacobian_with_point(&q).unwrap();
        assert_eq!(sc.curve, WeierstrassModel::new(r(0), r(-324), r(0)));
        assert_eq!(sc.point, Point::new(r(0), r(0)));
        assert!(sc.closed_form_on_curve);
        let q = BinaryQuartic::new(r(2), r(0), r(0), r(0), r(1));
        assert_eq!(
            sc_jacobian_with_point(&q),
            Err(Error::LeadingCoefficientNotSquare)
        );
    }

    #[test]
    fn isomorphism_round_trip() {
        let w1 = WeierstrassModel::new(r(3), r(-2), r(7));
        let p = Point::new(r(1), r(3));
        assert!(w1.contains(&p));
        // u = 2 and a shift of the x-coordinate
        let (a, b) = short_coefficients(&w1);
        let w2 = WeierstrassModel::new(r(0), a.mul(&r(16)), b.mul(&r(64)));
        let iso = WeierstrassIsomorphism::between(&w1, &w2).unwrap();
        let q = iso.apply(&p);
        assert!(w2.contains(&q));
        assert_eq!(iso.invert(&q), p);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn closed_form_point_lies_on_curve(a in 1i64..6, c in proptest::array::uniform4(-20i64..20)) {
            let q = BinaryQuartic::new(r(a * a), r(c[0]), r(c[1]), r(c[2]), r(c[3]));
            prop_assume!(!q.invariants().disc.is_zero());
            let sc = sc_jacobian_with_point(&q).unwrap();
            prop_assert!(sc.curve.contains(&sc.point));
            prop_assert!(sc.closed_form_on_curve);
        }
    }
}
