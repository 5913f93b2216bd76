//! ℚ as a [`Field`], with multi-modular gcd and p-adic rational root finding
//! for `Polynomial<Rational>`.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact::{common_denominator, Rational};

use super::field::{schoolbook_mul, Field};
use super::modp;
use super::poly::Polynomial;

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        self.recip()
    }
    fn div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn sqrt(&self) -> Option<Self> {
        self.is_square()
    }
    fn is_negative(&self) -> bool {
        Rational::is_negative(self)
    }
    fn complexity(&self) -> usize {
        self.naive_height().bits() as usize
    }
    fn poly_roots(f: &Polynomial<Self>) -> Result<Vec<Self>> {
        Ok(rational_roots(f))
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        if a.len() * b.len() <= 16 {
            return schoolbook_mul(a, b);
        }
        let (ai, da) = to_integers(a);
        let (bi, db) = to_integers(b);
        let den = da * db;
        integer_mul(&ai, &bi)
            .into_iter()
            .map(|c| Rational::new(c, den.clone()).expect("nonzero denominator"))
            .collect()
    }

    fn poly_gcd(a: &Polynomial<Self>, b: &Polynomial<Self>) -> Polynomial<Self> {
        modular_gcd(a, b)
    }
}

/// Scales by the common denominator: returns integers `c_i` and `d` with `a_i = c_i / d`.
pub(crate) fn to_integers(a: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = common_denominator(a);
    let ints = a.iter().map(|r| r.numer() * (&d / r.denom())).collect();
    (ints, d)
}

pub(crate) fn integer_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Integer coefficients with content 1 and positive leading coefficient.
pub(crate) fn primitive_integers(f: &Polynomial<Rational>) -> Vec<BigInt> {
    let (mut ints, _) = to_integers(f.coeffs());
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if content.is_zero() {
        return ints;
    }
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let content = content * sign;
    for c in ints.iter_mut() {
        *c = &*c / &content;
    }
    ints
}

/// Wang's rational reconstruction with balanced bounds `sqrt(m/2)`.
pub(crate) fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Rational::new(r1, s1).ok()
}

fn crt_combine(acc: &BigInt, modulus: &BigInt, residue: u64, p: u64) -> BigInt {
    // x ≡ acc (mod modulus), x ≡ residue (mod p)
    let m_mod_p = modp::reduce(modulus, p);
    let acc_mod_p = modp::reduce(acc, p);
    let diff = (residue + p - acc_mod_p) % p;
    let k = modp::mul_mod(diff, modp::inv_mod(m_mod_p, p), p);
    acc + modulus * BigInt::from(k)
}

fn modular_gcd(a: &Polynomial<Rational>, b: &Polynomial<Rational>) -> Polynomial<Rational> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let fa = primitive_integers(a);
    let fb = primitive_integers(b);
    let lc_prod = fa.last().unwrap() * fb.last().unwrap();

    let mut degree = usize::MAX;
    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = Vec::new();
    let mut last_candidate: Option<Polynomial<Rational>> = None;

    for p in modp::large_primes() {
        if modp::reduce(&lc_prod, p) == 0 {
            continue;
        }
        let g = modp::gcd(
            &modp::from_integers(&fa, p),
            &modp::from_integers(&fb, p),
            p,
        );
        let d = g.len() - 1;
        if d == 0 {
            return Polynomial::one();
        }
        if d > degree {
            continue;
        }
        if d < degree {
            degree = d;
            modulus = BigInt::from(p);
            residues = g.iter().map(|&c| BigInt::from(c)).collect();
            last_candidate = None;
        } else {
            residues = residues
                .iter()
                .zip(&g)
                .map(|(acc, &c)| crt_combine(acc, &modulus, c, p))
                .collect();
            modulus *= BigInt::from(p);
        }
        let candidate: Option<Vec<Rational>> = residues
            .iter()
            .map(|r| rational_reconstruct(r, &modulus))
            .collect();
        if let Some(c) = candidate {
            let c = Polynomial::new(c);
            if last_candidate.as_ref() == Some(&c)
                && a.rem(&c).is_ok_and(|r| r.is_zero())
                && b.rem(&c).is_ok_and(|r| r.is_zero())
            {
                return c;
            }
            last_candidate = Some(c);
        }
    }
    unreachable!("prime supply is unbounded")
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn eval_int_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

/// Distinct rational roots, ascending.
pub fn rational_roots(f: &Polynomial<Rational>) -> Vec<Rational> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // strip powers of x
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let f = Polynomial::new(f.coeffs()[zeros..].to_vec());
    if zeros > 0 {
        roots.push(Rational::zero());
    }
    let sqf = f.exact_div(&f.gcd(&f.derivative())).expect("gcd divides");
    match sqf.degree() {
        Some(0) | None => {}
        Some(1) => roots.push(sqf.coeff(0).neg().checked_div(&sqf.coeff(1)).unwrap()),
        Some(_) => roots.extend(padic_roots(&sqf)),
    }
    roots.sort();
    roots.dedup();
    roots
}

fn padic_roots(f: &Polynomial<Rational>) -> Vec<Rational> {
    let ints = primitive_integers(f);
    let df: Vec<BigInt> = ints
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let lc = ints.last().unwrap().abs();
    let c0 = ints[0].abs();
    let bound = if lc > c0 { lc.clone() } else { c0.clone() };
    let target = &bound * &bound * BigInt::from(2) + BigInt::one();

    let p = modp::small_primes()
        .find(|&p| {
            if modp::reduce(&lc, p) == 0 {
                return false;
            }
            let fp = modp::from_integers(&ints, p);
            let g = modp::gcd(&fp, &modp::derivative(&fp, p), p);
            g.len() == 1
        })
        .expect("a squarefree polynomial stays squarefree modulo almost every prime");
    let fp = modp::from_integers(&ints, p);
    let pb = BigInt::from(p);

    let mut out = Vec::new();
    for r in (0..p).filter(|&r| modp::eval(&fp, r, p) == 0) {
        let mut modulus = pb.clone();
        let mut root = BigInt::from(r);
        while modulus < target {
            modulus = &modulus * &modulus;
            let value = eval_int_mod(&ints, &root, &modulus);
            let slope = eval_int_mod(&df, &root, &modulus);
            let Some(inv) = mod_inverse(&slope, &modulus) else {
                break;
            };
            root = (&root - value * inv).mod_floor(&modulus);
        }
        if let Some(c) = rational_reconstruct(&root, &modulus) {
            if f.eval(&c).is_zero() {
                out.push(c);
            }
        }
    }
    out
}

/// Multiplicity of `r` as a root of `f` (0 when it is not a root).
pub fn root_multiplicity<F: Field>(f: &Polynomial<F>, r: &F) -> usize {
    let mut g = f.clone();
    let mut m = 0;
    while !g.is_zero() && g.eval(r).is_zero() {
        m += 1;
        g = g.derivative();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<Rational>;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn linear_product(roots: &[Rational]) -> P {
        roots.iter().fold(P::one(), |acc, r| {
            &acc * &P::new(vec![r.neg(), Rational::one()])
        })
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64);
        let r = q("-17/23");
        let inv = mod_inverse(&BigInt::from(23), &m).unwrap();
        let residue = (BigInt::from(-17) * inv).mod_floor(&m);
        assert_eq!(rational_reconstruct(&residue, &m), Some(r));
    }

    #[test]
    fn modular_gcd_matches_euclid() {
        let common = linear_product(&[q("3/7"), q("-2"), q("11/5")]);
        let a = &common * &linear_product(&[q("1/2"), q("9")]);
        let b = &common * &P::from_ints_desc(&[5, 0, 1, 3]);
        assert_eq!(a.gcd(&b), common.monic());
        assert_eq!(a.euclid_gcd(&b), common.monic());
        let coprime = P::from_ints_desc(&[1, 0, 1]);
        assert_eq!(a.gcd(&coprime), P::one());
    }

    #[test]
    fn roots_over_q() {
        let rs = vec![q("-3/2"), q("0"), q("5/7"), q("12345678901/3")];
        let f =
            &(&linear_product(&rs) * &linear_product(&[q("5/7")])) * &P::from_ints_desc(&[1, 0, 2]);
        assert_eq!(rational_roots(&f), rs);
        assert!(rational_roots(&P::from_ints_desc(&[1, 0, -2])).is_empty());
        assert_eq!(root_multiplicity(&f, &q("5/7")), 2);
        assert_eq!(root_multiplicity(&f, &q("1")), 0);
    }
}
