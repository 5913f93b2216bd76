//! Arithmetic in the function field of `y² = f(x)`.
//!
//! Elements are kept as `(n₀(x) + n₁(x)·y) / d(x)` without gcd reduction;
//! `d` is kept monic.

use crate::error::{Error, Result};
use crate::polyalg::{Field, Polynomial};

use super::curves::QuarticPoint;

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionField<F> {
    f: Polynomial<F>,
}

#[derive(Clone, Debug)]
pub struct CurveFunction<F> {
    n0: Polynomial<F>,
    n1: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> CurveFunction<F> {
    fn normalized(n0: Polynomial<F>, n1: Polynomial<F>, den: Polynomial<F>) -> Self {
        let lc = den.leading();
        if lc.is_one() {
            return CurveFunction { n0, n1, den };
        }
        let s = lc.inv().expect("nonzero denominator");
        CurveFunction {
            n0: n0.scale(&s),
            n1: n1.scale(&s),
            den: den.scale(&s),
        }
    }

    pub fn parts(&self) -> (&Polynomial<F>, &Polynomial<F>, &Polynomial<F>) {
        (&self.n0, &self.n1, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.n0.is_zero() && self.n1.is_zero()
    }

    /// Cancels the common factor of the three parts.
    pub fn reduced(&self) -> Self {
        let g = self.den.gcd(&self.n0.gcd(&self.n1));
        if g.is_constant() {
            return self.clone();
        }
        let q = |p: &Polynomial<F>| p.exact_div(&g).expect("gcd divides");
        Self::normalized(q(&self.n0), q(&self.n1), q(&self.den))
    }
}

impl<F: Field> FunctionField<F> {
    pub fn new(f: Polynomial<F>) -> Self {
        FunctionField { f }
    }

    pub fn defining_polynomial(&self) -> &Polynomial<F> {
        &self.f
    }

    pub fn element(
        &self,
        n0: Polynomial<F>,
        n1: Polynomial<F>,
        den: Polynomial<F>,
    ) -> Result<CurveFunction<F>> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CurveFunction::normalized(n0, n1, den))
    }

    pub fn from_poly(&self, p: Polynomial<F>) -> CurveFunction<F> {
        CurveFunction::normalized(p, Polynomial::zero(), Polynomial::one())
    }

    pub fn constant(&self, c: F) -> CurveFunction<F> {
        self.from_poly(Polynomial::constant(c))
    }

    pub fn x(&self) -> CurveFunction<F> {
        self.from_poly(Polynomial::x())
    }

    pub fn y(&self) -> CurveFunction<F> {
        CurveFunction::normalized(Polynomial::zero(), Polynomial::one(), Polynomial::one())
    }

    pub fn add(&self, a: &CurveFunction<F>, b: &CurveFunction<F>) -> CurveFunction<F> {
        if a.den == b.den {
            return CurveFunction::normalized(&a.n0 + &b.n0, &a.n1 + &b.n1, a.den.clone());
        }
        CurveFunction::normalized(
            &(&a.n0 * &b.den) + &(&b.n0 * &a.den),
            &(&a.n1 * &b.den) + &(&b.n1 * &a.den),
            &a.den * &b.den,
        )
    }

    pub fn neg(&self, a: &CurveFunction<F>) -> CurveFunction<F> {
        CurveFunction::normalized(-&a.n0, -&a.n1, a.den.clone())
    }

    pub fn sub(&self, a: &CurveFunction<F>, b: &CurveFunction<F>) -> CurveFunction<F> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &CurveFunction<F>, c: &F) -> CurveFunction<F> {
        CurveFunction::normalized(a.n0.scale(c), a.n1.scale(c), a.den.clone())
    }

    pub fn mul(&self, a: &CurveFunction<F>, b: &CurveFunction<F>) -> CurveFunction<F> {
        let n0 = &(&a.n0 * &b.n0) + &(&(&a.n1 * &b.n1) * &self.f);
        let n1 = &(&a.n0 * &b.n1) + &(&a.n1 * &b.n0);
        CurveFunction::normalized(n0, n1, &a.den * &b.den)
    }

    pub fn square(&self, a: &CurveFunction<F>) -> CurveFunction<F> {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &CurveFunction<F>, exp: u32) -> CurveFunction<F> {
        (0..exp).fold(self.constant(F::one()), |acc, _| self.mul(&acc, a))
    }

    /// Multiplies by the conjugate `n₀ − n₁y` and divides by the norm `n₀² − n₁²f`.
    pub fn inv(&self, a: &CurveFunction<F>) -> Result<CurveFunction<F>> {
        let norm = &(&a.n0 * &a.n0) - &(&(&a.n1 * &a.n1) * &self.f);
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = a.reduced();
        let norm = &(&a.n0 * &a.n0) - &(&(&a.n1 * &a.n1) * &self.f);
        Ok(CurveFunction::normalized(&a.den * &a.n0, -&(&a.den * &a.n1), norm).reduced())
    }

    pub fn div(&self, a: &CurveFunction<F>, b: &CurveFunction<F>) -> Result<CurveFunction<F>> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn equal(&self, a: &CurveFunction<F>, b: &CurveFunction<F>) -> bool {
        &a.n0 * &b.den == &b.n0 * &a.den && &a.n1 * &b.den == &b.n1 * &a.den
    }

    /// `p(g)` for a polynomial `p`.
    pub fn eval_poly(&self, p: &Polynomial<F>, g: &CurveFunction<F>) -> CurveFunction<F> {
        let mut acc = self.constant(F::zero());
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, g), &self.constant(c.clone()));
        }
        acc
    }

    /// Pulls back an element of `target` along `(X, Y)`, elements of this field.
    pub fn pullback(
        &self,
        target_elem: &CurveFunction<F>,
        x: &CurveFunction<F>,
        y: &CurveFunction<F>,
    ) -> Result<CurveFunction<F>> {
        let n0 = self.eval_poly(&target_elem.n0, x);
        let n1 = self.eval_poly(&target_elem.n1, x);
        let den = self.eval_poly(&target_elem.den, x);
        self.div(&self.add(&n0, &self.mul(&n1, y)), &den)
    }

    /// Value at a point, or `None` at a pole.
    pub fn value_at(&self, g: &CurveFunction<F>, pt: &QuarticPoint<F>) -> Result<Option<F>> {
        match pt {
            QuarticPoint::Affine { x, y } => {
                if y.square() != self.f.eval(x) {
                    return Err(Error::NotOnCurve);
                }
                if y.is_zero() {
                    Ok(self.value_at_ramified(g, x))
                } else {
                    Ok(self.value_at_unramified(g, x, y))
                }
            }
            QuarticPoint::Infinity { branch } => {
                if self.f.degree() != Some(4) || branch.square() != self.f.leading() {
                    return Err(Error::NotOnCurve);
                }
                let (field, h) = self.at_infinity(g);
                Ok(field.value_at_unramified(&h, &F::zero(), branch))
            }
        }
    }

    /// Rewrites `g` in the coordinates `u = 1/x`, `v = y/x²` of the reversed quartic.
    fn at_infinity(&self, g: &CurveFunction<F>) -> (FunctionField<F>, CurveFunction<F>) {
        let deg = |p: &Polynomial<F>| p.degree().unwrap_or(0);
        let (d0, d1, dd) = (deg(&g.n0), deg(&g.n1) + 2, deg(&g.den));
        let m = d0.max(d1).max(dd);
        let n0 = g.n0.reversed(d0).shift_up(m - d0);
        let n1 = g.n1.reversed(d1 - 2).shift_up(m - d1);
        let den = g.den.reversed(dd).shift_up(m - dd);
        (
            FunctionField::new(self.f.reversed(4)),
            CurveFunction::normalized(n0, n1, den),
        )
    }

    fn value_at_unramified(&self, g: &CurveFunction<F>, x0: &F, y0: &F) -> Option<F> {
        let shift = Polynomial::new(vec![x0.clone(), F::one()]);
        let den = g.den.compose(&shift);
        let v_den = den
            .coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero");
        let prec = v_den + 1;
        let fs = self.f.compose(&shift);
        let two_y0_inv = F::from_i64(2).mul(y0).inv().expect("y₀ ≠ 0");
        let mut ys = vec![y0.clone()];
        for k in 1..prec {
            let mut acc = fs.coeff(k);
            for i in 1..k {
                acc = acc.sub(&ys[i].mul(&ys[k - i]));
            }
            ys.push(acc.mul(&two_y0_inv));
        }
        let n0 = g.n0.compose(&shift);
        let n1 = g.n1.compose(&shift);
        let num = |k: usize| {
            let mut acc = n0.coeff(k);
            for i in 0..=k {
                let c = n1.coeff(i);
                if !c.is_zero() {
                    acc = acc.add(&c.mul(&ys[k - i]));
                }
            }
            acc
        };
        for k in 0..v_den {
            if !num(k).is_zero() {
                return None;
            }
        }
        Some(num(v_den).div(&den.coeff(v_den)).expect("nonzero"))
    }

    fn value_at_ramified(&self, g: &CurveFunction<F>, x0: &F) -> Option<F> {
        let shift = Polynomial::new(vec![x0.clone(), F::one()]);
        let lowest = |p: &Polynomial<F>| -> Option<(usize, F)> {
            let s = p.compose(&shift);
            s.coeffs()
                .iter()
                .position(|c| !c.is_zero())
                .map(|k| (k, s.coeff(k)))
        };
        // orders at the point: ord(x − x₀) = 2, ord(y) = 1
        let (od, dv) = lowest(&g.den).expect("nonzero");
        let o0 = lowest(&g.n0);
        let o1 = lowest(&g.n1);
        let ord_num = match (&o0, &o1) {
            (None, None) => return Some(F::zero()),
            (Some((k, _)), None) => 2 * k,
            (None, Some((k, _))) => 2 * k + 1,
            (Some((k0, _)), Some((k1, _))) => (2 * k0).min(2 * k1 + 1),
        };
        let ord_den = 2 * od;
        if ord_num > ord_den {
            Some(F::zero())
        } else if ord_num < ord_den {
            None
        } else {
            let (_, v0) = o0.expect("even order comes from n₀");
            Some(v0.div(&dv).expect("nonzero"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn field() -> FunctionField<Rational> {
        // y² = x⁴ + 2x + 1
        FunctionField::new(Polynomial::from_ints_desc(&[1, 0, 0, 2, 1]))
    }

    #[test]
    fn arithmetic_identities() {
        let k = field();
        let (x, y) = (k.x(), k.y());
        let f = k.from_poly(k.defining_polynomial().clone());
        assert!(k.equal(&k.square(&y), &f));
        let g = k.add(&x, &y);
        let gi = k.inv(&g).unwrap();
        assert!(k.equal(&k.mul(&g, &gi), &k.constant(r(1))));
        assert!(k.inv(&k.constant(r(0))).is_err());
        assert!(k.sub(&g, &g).is_zero());
    }

    #[test]
    fn values() {
        let k = field();
        let (x, y) = (k.x(), k.y());
        let p = QuarticPoint::Affine { x: r(0), y: r(-1) };
        // (y + 1)/x at (0, −1): y = −1 − x + O(x²) so the value is −1
        let g = k.div(&k.add(&y, &k.constant(r(1))), &x).unwrap();
        assert_eq!(k.value_at(&g, &p).unwrap(), Some(r(-1)));
        assert_eq!(k.value_at(&k.inv(&x).unwrap(), &p).unwrap(), None);
        // y/x² → 1 on the positive branch at infinity
        let h = k.div(&y, &k.square(&x)).unwrap();
        assert_eq!(
            k.value_at(&h, &QuarticPoint::Infinity { branch: r(1) })
                .unwrap(),
            Some(r(1))
        );
        assert_eq!(
            k.value_at(&h, &QuarticPoint::Infinity { branch: r(-1) })
                .unwrap(),
            Some(r(-1))
        );
        assert_eq!(
            k.value_at(&x, &QuarticPoint::Infinity { branch: r(1) })
                .unwrap(),
            None
        );
    }

    #[test]
    fn ramified_values() {
        // y² = x³ − x at (0, 0): y²/x → −1, y/x → pole, x/y → 0
        let k = FunctionField::new(Polynomial::from_ints_desc(&[1, 0, -1, 0]));
        let (x, y) = (k.x(), k.y());
        let p = QuarticPoint::Affine { x: r(0), y: r(0) };
        assert_eq!(
            k.value_at(&k.div(&k.square(&y), &x).unwrap(), &p).unwrap(),
            Some(r(-1))
        );
        assert_eq!(k.value_at(&k.div(&y, &x).unwrap(), &p).unwrap(), None);
        assert_eq!(k.value_at(&k.div(&x, &y).unwrap(), &p).unwrap(), Some(r(0)));
    }
}
