//! The rational function field ℚ(t).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::field::Field;
use super::poly::Polynomial;
use super::roots;

pub type QPoly = Polynomial<Rational>;

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0 / 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(QPoly::zero()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Skips the gcd; the caller guarantees coprimality.
    fn from_coprime(num: QPoly, den: QPoly) -> Self {
        let lc = den.leading();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip().expect("nonzero");
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(num: QPoly) -> Self {
        RationalFunction {
            num,
            den: QPoly::one(),
        }
    }

    /// The transcendental `t`.
    pub fn t() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at `t = tau`; fails where the denominator vanishes.
    pub fn eval(&self, tau: &Rational) -> Result<Rational> {
        let d = self.den.eval(tau);
        self.num.eval(tau).checked_div(&d)
    }

    /// Largest of the numerator and denominator degrees.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_expr(s, Some(("t", Self::t())))
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(QPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        if b.is_constant() {
            return Self::from_coprime(&(a * d) + c, d.clone());
        }
        if d.is_constant() {
            return Self::from_coprime(&(c * b) + a, b.clone());
        }
        if b == d {
            return Self::new(a + c, b.clone()).expect("nonzero denominator");
        }
        let g = b.gcd(d);
        if g.is_constant() {
            return Self::from_coprime(&(a * d) + &(c * b), b * d);
        }
        let b1 = b.exact_div(&g).expect("gcd divides");
        let d1 = d.exact_div(&g).expect("gcd divides");
        let num = &(a * &d1) + &(c * &b1);
        // only factors of g can survive in common
        let h = num.gcd(&g);
        let (num, g) = if h.is_constant() {
            (num, g)
        } else {
            (num.exact_div(&h).unwrap(), g.exact_div(&h).unwrap())
        };
        Self::from_coprime(num, &(&b1 * &d1) * &g)
    }

    fn sub(&self, other: &Self) -> Self {
        Field::add(self, &Field::neg(other))
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, b, c, d) = (&self.num, &self.den, &other.num, &other.den);
        let cancel = |x: &QPoly, y: &QPoly| -> (QPoly, QPoly) {
            if y.is_constant() || x.is_constant() {
                return (x.clone(), y.clone());
            }
            let g = x.gcd(y);
            if g.is_constant() {
                (x.clone(), y.clone())
            } else {
                (x.exact_div(&g).unwrap(), y.exact_div(&g).unwrap())
            }
        };
        let (a1, d1) = cancel(a, d);
        let (c1, b1) = cancel(c, b);
        Self::from_coprime(&a1 * &c1, &b1 * &d1)
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(QPoly::constant(r.clone()))
    }

    fn sqrt(&self) -> Option<Self> {
        let n = self.num.perfect_square_root()?;
        let d = self.den.perfect_square_root()?;
        Some(Self::from_coprime(n, d))
    }

    fn is_negative(&self) -> bool {
        self.num.leading().is_negative()
    }

    fn complexity(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    fn poly_roots(f: &Polynomial<Self>) -> Result<Vec<Self>> {
        match roots::rational_root_interpolation(f, roots::TWO_TORSION_BOUND) {
            Ok(r) => Ok(r),
            Err(Error::NoRationalRoot) => Ok(Vec::new()),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&self.num.display_in("t"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_in("t"),
                self.den.display_in("t")
            )
        }
    }
}

impl From<Rational> for RationalFunction {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

macro_rules! ops {
    ($($tr:ident $method:ident $body:expr),*) => {$(
        impl<'a> $tr<&'a RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'a RationalFunction) -> RationalFunction {
                $body(self, rhs)
            }
        }
    )*};
}

ops!(
    Add add |a: &RationalFunction, b| Field::add(a, b),
    Sub sub |a: &RationalFunction, b| Field::sub(a, b),
    Mul mul |a: &RationalFunction, b| Field::mul(a, b),
    Div div |a: &RationalFunction, b| Field::div(a, b).expect("division by zero")
);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        Field::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn normal_form() {
        let r = rf("(2*t^2 - 2)/(4*t + 4)");
        assert_eq!(
            r.numer(),
            &QPoly::from_ints_desc(&[1, -1]).scale(&Rational::frac(1, 2))
        );
        assert!(r.is_polynomial());
        let s = rf("(t+1)/(2*t-6)");
        assert!(s.denom().is_monic());
        assert_eq!(s.to_string(), "(1/2*t + 1/2)/(t - 3)");
    }

    #[test]
    fn field_arithmetic() {
        let a = rf("1/(t-1)");
        let b = rf("1/(t+1)");
        assert_eq!(&a + &b, rf("2*t/(t^2-1)"));
        assert_eq!(&a - &a, RationalFunction::zero());
        assert_eq!(&(&a * &b) * &rf("t^2-1"), RationalFunction::one());
        assert_eq!(&rf("t/(t-1)") + &rf("1/(t^2-1)"), rf("(t^2+t+1)/(t^2-1)"));
        assert_eq!(rf("(t-1)/(t+2)").inv().unwrap(), rf("(t+2)/(t-1)"));
        assert_eq!(RationalFunction::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn roots_and_specialization() {
        let r = rf("(9*t^2 - 6*t + 1)/(4*t^2)");
        assert_eq!(r.sqrt(), Some(rf("(3*t-1)/(2*t)")));
        assert_eq!(rf("-t^2").sqrt(), None);
        assert_eq!(rf("2*t^2").sqrt(), None);
        assert_eq!(r.eval(&Rational::from_i64(1)).unwrap(), Rational::one());
        assert_eq!(r.eval(&Rational::zero()), Err(Error::DivisionByZero));
    }
}
