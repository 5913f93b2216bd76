//! Word-size prime fields, used for modular gcds and root finding over ℚ.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::ToPrimitive;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

/// Small odd primes, smallest first.
pub(crate) fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| is_prime(n))
}

pub(crate) fn reduce(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Dense polynomial over `F_p`, lowest degree first, no trailing zeros.
pub(crate) type PolyP = Vec<u64>;

pub(crate) fn trim(mut f: PolyP) -> PolyP {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub(crate) fn from_integers(coeffs: &[BigInt], p: u64) -> PolyP {
    trim(coeffs.iter().map(|c| reduce(c, p)).collect())
}

pub(crate) fn monic(f: &PolyP, p: u64) -> PolyP {
    match f.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            f.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

pub(crate) fn rem(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    let mut r = f.clone();
    let dg = g.len() - 1;
    let inv = inv_mod(g[dg], p);
    while r.len() > dg {
        let top = r.len() - 1;
        let factor = mul_mod(r[top], inv, p);
        if factor != 0 {
            let shift = top - dg;
            for (i, &gc) in g.iter().enumerate() {
                let sub = mul_mod(factor, gc, p);
                let slot = &mut r[shift + i];
                *slot = if *slot >= sub {
                    *slot - sub
                } else {
                    *slot + p - sub
                };
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(f: &PolyP, g: &PolyP, p: u64) -> PolyP {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub(crate) fn derivative(f: &PolyP, p: u64) -> PolyP {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect(),
    )
}

pub(crate) fn eval(f: &PolyP, x: u64, p: u64) -> u64 {
    f.iter()
        .rev()
        .fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}
