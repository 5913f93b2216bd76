//! Roots in ℚ(t) of polynomials with ℚ(t) coefficients.
//!
//! A rational root found at a specialization `t = τ₀` is lifted to a power
//! series in `s = t − τ₀` by Newton iteration, then turned back into a
//! rational function by Padé approximation. Every candidate is checked by
//! exact substitution before it is returned.

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::field::Field;
use super::poly::Polynomial;
use super::ratfunc::{QPoly, RationalFunction};
use super::rational::{rational_roots, root_multiplicity};

/// Numerator/denominator degree bound for general root recovery.
pub const INTERPOLATION_BOUND: usize = 8;
/// Larger bound used when searching for rational 2-torsion over ℚ(t).
pub const TWO_TORSION_BOUND: usize = 64;

/// Specializations tried, in order.
fn specializations() -> impl Iterator<Item = Rational> {
    const NUMS: [(i64, i64); 20] = [
        (3, 1),
        (5, 2),
        (-2, 1),
        (7, 3),
        (4, 1),
        (-5, 3),
        (11, 4),
        (6, 1),
        (-7, 2),
        (13, 5),
        (9, 1),
        (-11, 3),
        (17, 6),
        (10, 1),
        (-13, 4),
        (19, 7),
        (12, 1),
        (-17, 5),
        (23, 8),
        (15, 1),
    ];
    NUMS.into_iter().map(|(n, d)| Rational::frac(n, d))
}

type Series = Vec<Rational>;

fn series_mul(a: &[Rational], b: &[Rational], prec: usize) -> Series {
    let mut out = vec![Rational::zero(); prec];
    for (i, x) in a.iter().enumerate().take(prec) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(prec - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn series_inv(a: &[Rational], prec: usize) -> Result<Series> {
    let a0_inv = a.first().ok_or(Error::DivisionByZero)?.recip()?;
    let mut out = vec![Rational::zero(); prec];
    out[0] = a0_inv.clone();
    for k in 1..prec {
        let mut acc = Rational::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc = &acc + &(&a[j] * &out[k - j]);
        }
        out[k] = -(&acc * &a0_inv);
    }
    Ok(out)
}

fn shift(p: &QPoly, tau: &Rational) -> QPoly {
    p.compose(&QPoly::new(vec![tau.clone(), Rational::one()]))
}

/// Taylor expansion of `f` around `t = tau`.
fn expand(f: &RationalFunction, tau: &Rational, prec: usize) -> Result<Series> {
    let mut num = shift(f.numer(), tau).into_coeffs();
    num.resize(prec.max(num.len()), Rational::zero());
    num.truncate(prec);
    if f.is_polynomial() {
        let c = f.denom().leading().recip()?;
        return Ok(num.iter().map(|x| x * &c).collect());
    }
    let den = shift(f.denom(), tau).into_coeffs();
    Ok(series_mul(&num, &series_inv(&den, prec)?, prec))
}

fn eval_series(coeffs: &[Series], q: &[Rational], prec: usize) -> Series {
    let mut acc = vec![Rational::zero(); prec];
    for c in coeffs.iter().rev() {
        acc = series_mul(&acc, q, prec);
        for (a, b) in acc.iter_mut().zip(c) {
            *a = &*a + b;
        }
    }
    acc
}

/// Newton lift of a simple root `r0` of `g(τ₀, ·)` to precision `prec`.
fn newton_lift(
    g: &Polynomial<RationalFunction>,
    tau: &Rational,
    r0: &Rational,
    prec: usize,
) -> Result<Series> {
    let coeffs: Vec<Series> = g
        .coeffs()
        .iter()
        .map(|c| expand(c, tau, prec))
        .collect::<Result<_>>()?;
    let dcoeffs: Vec<Series> = g
        .derivative()
        .coeffs()
        .iter()
        .map(|c| expand(c, tau, prec))
        .collect::<Result<_>>()?;
    let mut q = vec![r0.clone()];
    let mut cur = 1;
    while cur < prec {
        cur = (2 * cur).min(prec);
        q.resize(cur, Rational::zero());
        let value = eval_series(&coeffs, &q, cur);
        let slope = eval_series(&dcoeffs, &q, cur);
        let step = series_mul(&value, &series_inv(&slope, cur)?, cur);
        for (a, b) in q.iter_mut().zip(&step) {
            *a = &*a - b;
        }
    }
    Ok(q)
}

/// Padé approximant of type `(n, n)` from the first `2n + 1` series terms.
fn pade(series: &[Rational], n: usize) -> Option<(QPoly, QPoly)> {
    let k = 2 * n + 1;
    let s = QPoly::new(series[..k].to_vec());
    if s.is_zero() {
        return Some((QPoly::zero(), QPoly::one()));
    }
    let (mut r0, mut r1) = (QPoly::monomial(Rational::one(), k), s);
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
    while r1.degree().is_some_and(|d| d > n) {
        let (q, r) = r0.divrem(&r1).ok()?;
        let t2 = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let ok = t1.degree().is_some_and(|d| d <= n) && !t1.coeff(0).is_zero();
    ok.then_some((r1, t1))
}

fn eval_at_root(d: &Polynomial<RationalFunction>, rho: &RationalFunction) -> RationalFunction {
    d.eval(rho)
}

fn specialize(d: &Polynomial<RationalFunction>, tau: &Rational) -> Option<QPoly> {
    let lc = d.leading().eval(tau).ok()?;
    if lc.is_zero() {
        return None;
    }
    d.try_map(|c| c.eval(tau)).ok()
}

/// All roots of `d` in ℚ(t) whose numerator and denominator degrees are at
/// most `bound`.
pub fn rational_root_interpolation(
    d: &Polynomial<RationalFunction>,
    bound: usize,
) -> Result<Vec<RationalFunction>> {
    if d.degree().unwrap_or(0) == 0 {
        return Err(Error::NoRationalRoot);
    }
    let good: Vec<(Rational, QPoly)> = specializations()
        .filter_map(|tau| specialize(d, &tau).map(|p| (tau, p)))
        .take(3)
        .collect();
    if good.is_empty() {
        return Err(Error::NoRationalRoot);
    }
    let specialized_roots: Vec<Vec<Rational>> =
        good.iter().map(|(_, p)| rational_roots(p)).collect();
    if specialized_roots.iter().any(|r| r.is_empty()) {
        return Err(Error::NoRationalRoot);
    }

    let prec = 2 * bound + 1;
    let mut trials: Vec<usize> = std::iter::successors(Some(1usize), |n| Some(n * 2))
        .take_while(|&n| n < bound)
        .collect();
    trials.insert(0, 0);
    trials.push(bound);

    let mut found: Vec<RationalFunction> = Vec::new();
    // two base points, so that roots colliding at one specialization are still separated at the other
    for ((tau, dp), roots) in good.iter().zip(&specialized_roots).take(2) {
        let check = good.iter().find(|(t, _)| t != tau);
        for r0 in roots {
            let m = root_multiplicity(dp, r0);
            let mut g = d.clone();
            for _ in 1..m {
                g = g.derivative();
            }
            let Ok(series) = newton_lift(&g, tau, r0, prec) else {
                continue;
            };
            for &n in &trials {
                let Some((a, b)) = pade(&series, n) else {
                    continue;
                };
                let back = |p: &QPoly| shift(p, &-tau);
                let Ok(rho) = RationalFunction::new(back(&a), back(&b)) else {
                    continue;
                };
                if found.contains(&rho) {
                    break;
                }
                if let Some((t1, p1)) = check {
                    if rho.eval(t1).map_or(true, |v| !p1.eval(&v).is_zero()) {
                        continue;
                    }
                }
                if eval_at_root(d, &rho).is_zero() {
                    found.push(rho);
                    break;
                }
            }
        }
    }
    if found.is_empty() {
        return Err(Error::DegreeBoundExceeded(bound));
    }
    found.sort_by_key(|r| r.complexity());
    Ok(found)
}
