use std::fmt;

use crate::error::Result;
use crate::exact::Rational;

use super::poly::Polynomial;

/// A field of characteristic zero: ℚ or ℚ(t) in this crate.
///
/// Arithmetic takes references; the hooks at the bottom let a field swap in
/// faster polynomial kernels than the generic schoolbook/Euclid defaults.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn from_rational(r: &Rational) -> Self;

    /// Square root inside the field, normalized so that `is_negative()` is false.
    fn sqrt(&self) -> Option<Self>;

    /// Sign convention used to pick one of `±r`.
    fn is_negative(&self) -> bool;

    /// Rough size measure; smaller means simpler.
    fn complexity(&self) -> usize;

    /// All roots of `f` that lie in the field, without multiplicity.
    fn poly_roots(f: &Polynomial<Self>) -> Result<Vec<Self>>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_i64(n))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        schoolbook_mul(a, b)
    }

    fn poly_gcd(a: &Polynomial<Self>, b: &Polynomial<Self>) -> Polynomial<Self> {
        a.euclid_gcd(b)
    }
}

pub(crate) fn schoolbook_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}
