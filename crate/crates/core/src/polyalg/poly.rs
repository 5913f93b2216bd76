//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::field::Field;

/// Coefficients lowest degree first; the leading coefficient is never zero.
/// The zero polynomial has no coefficients and `degree() == None`.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Builds from integer coefficients listed highest degree first.
    pub fn from_ints_desc(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().rev().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Polynomial<G>> {
        Ok(Polynomial::new(
            self.coeffs.iter().map(f).collect::<Result<_>>()?,
        ))
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * g) + &Self::constant(c.clone())
        })
    }

    /// `x^deg · self(1/x)` for a given formal degree.
    pub fn reversed(&self, deg: usize) -> Self {
        let mut coeffs: Vec<F> = (0..=deg).map(|i| self.coeff(i)).collect();
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let inv = g.leading().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dg];
        for top in (dg..r.len()).rev() {
            let factor = r[top].mul(&inv);
            if factor.is_zero() {
                continue;
            }
            for (i, gc) in g.coeffs.iter().enumerate() {
                let k = top - dg + i;
                r[k] = r[k].sub(&factor.mul(gc));
            }
            q[top - dg] = factor;
        }
        r.truncate(dg);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.1)
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        let (q, r) = self.divrem(g)?;
        if !r.is_zero() {
            return Err(Error::IdentityFailed("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }

    pub(crate) fn euclid_gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Mestre's partial square root: for monic `P` of degree `2n`, the unique
    /// monic `Q` of degree `n` with `R = Q² − P` of degree at most `n − 1`.
    ///
    /// `Q` is solved coefficient by coefficient from the top.
    pub fn mestre_sqrt(&self) -> Result<(Self, Self)> {
        let deg = self.degree().ok_or(Error::NotMonic)?;
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        if deg % 2 == 1 {
            return Err(Error::OddDegree);
        }
        let n = deg / 2;
        let half = F::from_i64(2).inv()?;
        let mut q = vec![F::zero(); n + 1];
        q[n] = F::one();
        for k in 1..=n {
            let target = 2 * n - k;
            let low = n - k;
            // contributions of already known coefficients q_i q_j, i + j = target, i, j > low
            let mut known = F::zero();
            for i in (low + 1)..=n {
                let j = target - i;
                if j > low && j <= n {
                    known = known.add(&q[i].mul(&q[j]));
                }
            }
            q[low] = self.coeff(target).sub(&known).mul(&half);
        }
        let q = Self::new(q);
        let r = &(&q * &q) - self;
        debug_assert!(r.degree().map_or(true, |d| d < n));
        Ok((q, r))
    }

    /// `G` with `G² = self`, leading coefficient chosen non-negative.
    pub fn perfect_square_root(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let lc = self.leading();
        let s = lc.sqrt()?;
        let (q, r) = self.monic().mestre_sqrt().ok()?;
        if !r.is_zero() {
            return None;
        }
        Some(q.scale(&s))
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_s = mag.to_string();
            let simple = !mag_s.contains([' ', '+']) && !mag_s[1..].contains('-');
            let mag_s = if simple { mag_s } else { format!("({mag_s})") };
            match k {
                0 => out.push_str(&mag_s),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag_s);
                        out.push('*');
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        Polynomial::new(F::poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Self) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;

    type P = Polynomial<Rational>;

    fn p(desc: &[i64]) -> P {
        P::from_ints_desc(desc)
    }

    #[test]
    fn basic_arithmetic() {
        assert_eq!(&p(&[1, 0, 1]) * &p(&[1, 0, -1]), p(&[1, 0, 0, 0, -1]));
        let (q, r) = p(&[1, 0, 0, 0, -1]).divrem(&p(&[1, 0, 1])).unwrap();
        assert_eq!(q, p(&[1, 0, -1]));
        assert!(r.is_zero());
        assert_eq!(p(&[1]).divrem(&P::zero()), Err(Error::DivisionByZero));
        assert_eq!(P::zero().degree(), None);
        assert_eq!(p(&[3, 0, 1, 5]).derivative(), p(&[9, 0, 1]));
        // (x+1)^2 composed with x-1 is x^2
        assert_eq!(p(&[1, 2, 1]).compose(&p(&[1, -1])), p(&[1, 0, 0]));
        assert_eq!(p(&[1, 2, 3]).reversed(2), p(&[3, 2, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let f = &p(&[1, -3, 2]) * &p(&[2, 1]);
        let g = &p(&[1, -3, 2]) * &p(&[1, 7]);
        assert_eq!(f.gcd(&g), p(&[1, -3, 2]));
        assert_eq!(f.euclid_gcd(&g), p(&[1, -3, 2]));
        assert_eq!(p(&[2, 1]).gcd(&p(&[1, 7])), P::one());
    }

    #[test]
    fn mestre_sqrt_examples() {
        let (q, r) = p(&[1, 2, 3, 4, 5]).mestre_sqrt().unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert_eq!(r, p(&[-2, -4]));
        let sq = p(&[1, 0, -2, 7]).pow(2);
        let (q, r) = sq.mestre_sqrt().unwrap();
        assert_eq!(q, p(&[1, 0, -2, 7]));
        assert!(r.is_zero());
        assert_eq!(p(&[2, 0, 1]).mestre_sqrt(), Err(Error::NotMonic));
        assert_eq!(p(&[1, 0, 1, 0]).mestre_sqrt(), Err(Error::OddDegree));
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(
            p(&[1, 0, 2, 0, 1]).perfect_square_root(),
            Some(p(&[1, 0, 1]))
        );
        assert_eq!(p(&[1, 0, 0, 1, 1]).perfect_square_root(), None);
        assert_eq!(p(&[4, -4, 1]).perfect_square_root(), Some(p(&[2, -1])));
        assert_eq!(p(&[-1, 0, 0]).perfect_square_root(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -3, 2]).display_in("t"), "t^3 - 3*t + 2");
        assert_eq!(p(&[-1, 1]).display_in("t"), "-t + 1");
        assert_eq!(P::zero().display_in("t"), "0");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn even_monic() -> impl Strategy<Value = P> {
            (2usize..=6).prop_flat_map(|n| {
                prop::collection::vec((-50i64..=50, 1i64..=9), n).prop_map(move |cs| {
                    let mut coeffs = vec![Rational::zero(); 2 * n + 1];
                    coeffs[2 * n] = Rational::one();
                    for (k, (num, den)) in cs.into_iter().enumerate() {
                        coeffs[2 * k] = Rational::frac(num, den);
                    }
                    P::new(coeffs)
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn mestre_sqrt_splits_even_monic(poly in even_monic()) {
                let n = poly.degree().unwrap() / 2;
                let (q, r) = poly.mestre_sqrt().unwrap();
                prop_assert!(q.is_monic());
                prop_assert_eq!(q.degree(), Some(n));
                prop_assert!(r.degree().map_or(true, |d| d < n));
                prop_assert_eq!(&(&q * &q) - &r, poly.clone());
                let parity = n % 2;
                prop_assert!((0..=n).all(|k| k % 2 == parity || q.coeff(k).is_zero()));
            }

            #[test]
            fn mestre_sqrt_recovers_planted_split(
                n in 2usize..=6,
                qs in prop::collection::vec(-20i64..=20, 6),
                rs in prop::collection::vec(-20i64..=20, 6),
            ) {
                let mut qc: Vec<Rational> = qs[..n].iter().map(|&c| Rational::from_i64(c)).collect();
                qc.push(Rational::one());
                let q0 = P::new(qc);
                let r0 = P::new(rs[..n].iter().map(|&c| Rational::from_i64(c)).collect());
                let (q, r) = (&(&q0 * &q0) - &r0).mestre_sqrt().unwrap();
                prop_assert_eq!(q, q0);
                prop_assert_eq!(r, r0);
            }
        }
    }
}
