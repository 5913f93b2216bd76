//! Canonical heights by the doubling limit, and numeric independence certificates.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{ln_integer, Integer, Rational};
use crate::polyalg::modp::small_primes;
use crate::polyalg::{resultant, Polynomial};

use super::curves::{Point, WeierstrassModel};
use super::group::TorsionOrder;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeightConfig {
    /// The last two estimates must differ by less than this.
    pub tolerance: f64,
    pub max_doublings: u32,
    /// Return at the first pair of estimates within `tolerance` instead of
    /// doubling `max_doublings` times.
    pub early_stop: bool,
}

impl Default for HeightConfig {
    fn default() -> Self {
        HeightConfig {
            tolerance: 1e-3,
            max_doublings: 8,
            early_stop: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Independent,
    NotCertified,
}

/// Floating-point Gram matrix of the height pairing; not a proof.
#[derive(Clone, Debug, PartialEq)]
pub struct IndependenceCertificate {
    pub heights: Vec<f64>,
    pub gram: Vec<Vec<f64>>,
    pub determinant: f64,
    /// An exact relation `a·Pᵢ = b·Pⱼ` found among small multiples, as `(i, a, j, b)`.
    pub relation: Option<(usize, i64, usize, i64)>,
    pub verdict: Verdict,
}

impl IndependenceCertificate {
    pub const LABEL: &'static str = "NUMERIC";
    pub const THRESHOLD: f64 = 1e-3;
    /// Largest multiplier tried when looking for exact pairwise relations.
    pub const RELATION_SEARCH: i64 = 4;
}

/// Finds `a·Pᵢ = b·Pⱼ` with `1 ≤ a ≤ RELATION_SEARCH` and `0 < |b| ≤ RELATION_SEARCH`.
fn small_relation(
    w: &WeierstrassModel<Rational>,
    points: &[Point<Rational>],
) -> Option<(usize, i64, usize, i64)> {
    let bound = IndependenceCertificate::RELATION_SEARCH;
    let multiples: Vec<Vec<Point<Rational>>> = points
        .iter()
        .map(|p| {
            let mut acc = vec![p.clone()];
            for _ in 1..bound {
                acc.push(w.add(acc.last().expect("nonempty"), p));
            }
            acc
        })
        .collect();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for a in 1..=bound {
                for b in 1..=bound {
                    let (pa, pb) = (&multiples[i][a as usize - 1], &multiples[j][b as usize - 1]);
                    if pa == pb {
                        return Some((i, a, j, b));
                    }
                    if *pa == w.negate(pb) {
                        return Some((i, a, j, -b));
                    }
                }
            }
        }
    }
    None
}

const TRIAL_DIVISION_BOUND: u64 = 1 << 16;

fn valuation(n: &Integer, p: &Integer) -> i64 {
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

fn strip(n: &Integer, p: &Integer) -> Integer {
    let mut n = n.clone();
    while (&n % p).is_zero() {
        n /= p;
    }
    n
}

/// `u` making `u²a₂, u⁴a₄, u⁶a₆` integral, minimal at primes below the trial-division bound.
fn integral_scale(w: &WeierstrassModel<Rational>) -> Rational {
    let coeffs = [(&w.a2, 2i64), (&w.a4, 4), (&w.a6, 6)];
    let mut num = Integer::one();
    let mut den = Integer::one();
    let mut rests: Vec<Integer> = coeffs.iter().map(|(c, _)| c.denom().clone()).collect();
    for p in std::iter::once(2).chain(small_primes().take_while(|&p| p < TRIAL_DIVISION_BOUND)) {
        let p = Integer::from(p);
        let g = coeffs
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, weight)| {
                let v = valuation(c.numer(), &p) - valuation(c.denom(), &p);
                num_integer::Integer::div_ceil(&(-v), weight)
            })
            .max()
            .unwrap_or(0);
        if g > 0 {
            num *= num_traits::pow(p.clone(), g as usize);
        } else if g < 0 {
            den *= num_traits::pow(p.clone(), (-g) as usize);
        }
        for r in rests.iter_mut() {
            if (&*r % &p).is_zero() {
                *r = strip(r, &p);
            }
        }
    }
    // remaining denominator factors: use the largest perfect-power root available
    for (rest, (_, weight)) in rests.iter().zip(coeffs) {
        let weight = weight as u32;
        let root = (1..=weight)
            .rev()
            .find_map(|r| {
                let c = rest.nth_root(r);
                (num_traits::pow(c.clone(), r as usize) == *rest).then_some(c)
            })
            .expect("r = 1 always works");
        num = num.lcm(&root);
    }
    Rational::new(num, den).expect("nonzero")
}

struct DoublingChain {
    b: [Integer; 4],
    bound: Integer,
}

impl DoublingChain {
    fn new(w: &WeierstrassModel<Rational>) -> (Self, Rational) {
        let u = integral_scale(w);
        let u2 = &u * &u;
        let int = |r: Rational| -> Integer {
            assert!(r.is_integer());
            r.numer().clone()
        };
        let a2 = int(&w.a2 * &u2);
        let a4 = int(&w.a4 * &(&u2 * &u2));
        let a6 = int(&w.a6 * &(&(&u2 * &u2) * &u2));
        let b2 = &a2 * 4;
        let b4 = &a4 * 2;
        let b6 = &a6 * 4;
        let b8 = &a2 * &a6 * 4 - &a4 * &a4;
        let q = |v: &Integer| Rational::from_integer(v.clone());
        let f = Polynomial::new(vec![
            -q(&b8),
            -q(&(&b6 * 2)),
            -q(&b4),
            Rational::zero(),
            Rational::one(),
        ]);
        let g = Polynomial::new(vec![q(&b6), q(&(&b4 * 2)), q(&b2), Rational::from_i64(4)]);
        let bound = resultant(&f, &g).numer().abs();
        (
            DoublingChain {
                b: [b2, b4, b6, b8],
                bound,
            },
            u,
        )
    }

    /// `x(2P)` from `x(P) = a/d` in lowest terms; `None` when `2P` is at infinity.
    fn step(&self, a: &Integer, d: &Integer) -> Option<(Integer, Integer)> {
        let [b2, b4, b6, b8] = &self.b;
        let (a2, d2) = (a * a, d * d);
        let ad = a * d;
        let num: Integer = &a2 * &a2 - b4 * &a2 * &d2 - b6 * &ad * &d2 * 2 - b8 * &d2 * &d2;
        let den: Integer = (&a2 * &ad * 4) + b2 * &a2 * &d2 + b4 * &ad * &d2 * 2 + b6 * &d2 * &d2;
        if den.is_zero() {
            return None;
        }
        // common factors of num and den divide the resultant
        let mut g: Integer = num.mod_floor(&self.bound).gcd(&self.bound);
        if !g.is_one() {
            g = den.mod_floor(&g).gcd(&g);
        }
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num / &g, den / &g)
        };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Some((num, den))
    }
}

pub fn canonical_height(w: &WeierstrassModel<Rational>, p: &Point<Rational>) -> Result<f64> {
    canonical_height_with(w, p, &HeightConfig::default())
}

pub fn canonical_height_with(
    w: &WeierstrassModel<Rational>,
    p: &Point<Rational>,
    config: &HeightConfig,
) -> Result<f64> {
    let x = match p {
        Point::Infinity => return Ok(0.0),
        Point::Affine { x, .. } => x,
    };
    let (chain, u) = DoublingChain::new(w);
    let scaled = x * &(&u * &u);
    let (mut a, mut d) = (scaled.numer().clone(), scaled.denom().clone());
    let naive = |a: &Integer, d: &Integer| ln_integer(a).max(ln_integer(d));
    let mut prev = naive(&a, &d);
    let mut scale = 1.0f64;
    let mut est = prev;
    for _ in 0..config.max_doublings {
        let Some((na, nd)) = chain.step(&a, &d) else {
            return Ok(0.0);
        };
        a = na;
        d = nd;
        scale *= 4.0;
        prev = est;
        est = naive(&a, &d) / scale;
        if config.early_stop && (est - prev).abs() < config.tolerance {
            return Ok(est);
        }
    }
    if (est - prev).abs() < config.tolerance {
        Ok(est)
    } else {
        Err(Error::PrecisionNotReached(config.max_doublings))
    }
}

pub fn independence_certificate(
    w: &WeierstrassModel<Rational>,
    points: &[Point<Rational>],
) -> Result<IndependenceCertificate> {
    independence_certificate_with(w, points, &HeightConfig::default())
}

pub fn independence_certificate_with(
    w: &WeierstrassModel<Rational>,
    points: &[Point<Rational>],
    config: &HeightConfig,
) -> Result<IndependenceCertificate> {
    for (index, p) in points.iter().enumerate() {
        if let TorsionOrder::Finite(order) = w.torsion_order(p)? {
            return Err(Error::TorsionInput { index, order });
        }
    }
    let n = points.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let values: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let q = if i == j {
                points[i].clone()
            } else {
                w.add(&points[i], &points[j])
            };
            canonical_height_with(w, &q, config)
        })
        .collect::<Result<_>>()?;
    let mut heights = vec![0.0; n];
    for (&(i, j), v) in pairs.iter().zip(&values) {
        if i == j {
            heights[i] = *v;
        }
    }
    let mut gram = vec![vec![0.0; n]; n];
    for (&(i, j), v) in pairs.iter().zip(&values) {
        let entry = if i == j {
            *v
        } else {
            (v - heights[i] - heights[j]) / 2.0
        };
        gram[i][j] = entry;
        gram[j][i] = entry;
    }
    let determinant = float_determinant(gram.clone());
    let relation = small_relation(w, points);
    let verdict = if relation.is_none() && determinant > IndependenceCertificate::THRESHOLD {
        Verdict::Independent
    } else {
        Verdict::NotCertified
    };
    Ok(IndependenceCertificate {
        heights,
        gram,
        determinant,
        relation,
        verdict,
    })
}

fn float_determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("nonempty");
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    det
}
