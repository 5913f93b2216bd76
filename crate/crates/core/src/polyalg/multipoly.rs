//! Sparse polynomials in the three variables `p`, `q`, `w`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::quartic::{BinaryQuadratic, BinaryQuartic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    P,
    Q,
    W,
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::P => 0,
            Var::Q => 1,
            Var::W => 2,
        }
    }

    fn name(self) -> &'static str {
        ["p", "q", "w"][self.index()]
    }
}

pub type Exponents = [u32; 3];

/// Map from exponent triples `(deg_p, deg_q, deg_w)` to nonzero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPolynomial<F> {
    terms: BTreeMap<Exponents, F>,
}

impl<F: Field> MultiPolynomial<F> {
    pub fn zero() -> Self {
        MultiPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Self::monomial(F::one(), e)
    }

    pub fn monomial(c: F, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: Exponents) -> F {
        self.terms.get(&exps).cloned().unwrap_or_else(F::zero)
    }

    fn insert_add(terms: &mut BTreeMap<Exponents, F>, e: Exponents, c: F) {
        match terms.get_mut(&e) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    terms.remove(&e);
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(e, c);
                }
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPolynomial {
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::constant(F::one()), |acc, _| &acc * self)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == deg)
    }

    /// The part multiplying `v^k`, with `v` removed.
    pub fn coefficient_of(&self, v: Var, k: u32) -> Self {
        let i = v.index();
        MultiPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == k)
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &Self) -> Self {
        let i = v.index();
        let max = self.degree_in(v).unwrap_or(0);
        let mut powers = vec![Self::constant(F::one())];
        for k in 1..=max as usize {
            powers.push(&powers[k - 1] * value);
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[i] = 0;
            let term = &Self::monomial(c.clone(), rest) * &powers[e[i] as usize];
            out = &out + &term;
        }
        out
    }

    pub fn eval(&self, point: &[F; 3]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (e, c)| {
            let m = (0..3).fold(c.clone(), |m, i| m.mul(&point[i].pow(e[i])));
            acc.add(&m)
        })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MultiPolynomial<G> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let g = f(c);
            if !g.is_zero() {
                terms.insert(*e, g);
            }
        }
        MultiPolynomial { terms }
    }

    pub fn try_map<G: Field, E>(
        &self,
        f: impl Fn(&F) -> Result<G, E>,
    ) -> Result<MultiPolynomial<G>, E> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let g = f(c)?;
            if !g.is_zero() {
                terms.insert(*e, g);
            }
        }
        Ok(MultiPolynomial { terms })
    }

    /// Reads a form homogeneous of degree 4 in `x`, `y` (no other variable) as a binary quartic.
    pub fn to_binary_quartic(&self, x: Var, y: Var) -> Option<BinaryQuartic<F>> {
        let c = self.binary_coeffs(x, y, 4)?;
        Some(BinaryQuartic::new(
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
            c[3].clone(),
            c[4].clone(),
        ))
    }

    pub fn to_binary_quadratic(&self, x: Var, y: Var) -> Option<BinaryQuadratic<F>> {
        let c = self.binary_coeffs(x, y, 2)?;
        Some(BinaryQuadratic::new(
            c[0].clone(),
            c[1].clone(),
            c[2].clone(),
        ))
    }

    /// Coefficients of `x^deg, x^(deg-1) y, …, y^deg`.
    fn binary_coeffs(&self, x: Var, y: Var, deg: u32) -> Option<Vec<F>> {
        let (xi, yi) = (x.index(), y.index());
        let mut out = vec![F::zero(); deg as usize + 1];
        for (e, c) in &self.terms {
            let other = 3 - xi - yi;
            if e[other] != 0 || e[xi] + e[yi] != deg {
                return None;
            }
            out[e[yi] as usize] = c.clone();
        }
        Some(out)
    }
}

impl<F: Field> From<&BinaryQuadratic<F>> for MultiPolynomial<F> {
    /// `a p² + b p w + c w²`.
    fn from(f: &BinaryQuadratic<F>) -> Self {
        let mut out = Self::zero();
        for (k, c) in [&f.a, &f.b, &f.c].into_iter().enumerate() {
            out = &out + &Self::monomial(c.clone(), [2 - k as u32, 0, k as u32]);
        }
        out
    }
}

impl<F: Field> Add for &MultiPolynomial<F> {
    type Output = MultiPolynomial<F>;
    fn add(self, rhs: Self) -> MultiPolynomial<F> {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            MultiPolynomial::insert_add(&mut terms, *e, c.clone());
        }
        MultiPolynomial { terms }
    }
}

impl<F: Field> Sub for &MultiPolynomial<F> {
    type Output = MultiPolynomial<F>;
    fn sub(self, rhs: Self) -> MultiPolynomial<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &MultiPolynomial<F> {
    type Output = MultiPolynomial<F>;
    fn neg(self) -> MultiPolynomial<F> {
        MultiPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
}

impl<F: Field> Mul for &MultiPolynomial<F> {
    type Output = MultiPolynomial<F>;
    fn mul(self, rhs: Self) -> MultiPolynomial<F> {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                MultiPolynomial::insert_add(&mut terms, e, c1.mul(c2));
            }
        }
        MultiPolynomial { terms }
    }
}

impl<F: Field> fmt::Display for MultiPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = [Var::P, Var::Q, Var::W];
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = vars
                    .iter()
                    .filter(|v| e[v.index()] > 0)
                    .map(|v| match e[v.index()] {
                        1 => v.name().to_string(),
                        k => format!("{}^{k}", v.name()),
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::polyalg::RationalFunction;

    type M = MultiPolynomial<Rational>;

    #[test]
    fn substitution() {
        let p = M::var(Var::P);
        let q = M::var(Var::Q);
        let w = M::var(Var::W);
        let two_w = w.scale(&Rational::from_i64(2));
        assert_eq!(
            (&p * &q).substitute(Var::Q, &two_w),
            (&p * &w).scale(&Rational::from_i64(2))
        );
        assert_eq!(
            q.pow(2).substitute(Var::Q, &two_w),
            w.pow(2).scale(&Rational::from_i64(4))
        );
        let f = &(&p * &p) + &(&q * &w);
        assert_eq!(f.total_degree(), Some(2));
        assert!(f.is_homogeneous(2));
        assert_eq!(f.coefficient_of(Var::Q, 1), w);
    }

    #[test]
    fn substitution_with_function_coefficients() {
        type MR = MultiPolynomial<RationalFunction>;
        let rho = RationalFunction::parse("(t+1)/(t-2)").unwrap();
        let q2 = MR::var(Var::Q).pow(2);
        let got = q2.substitute(Var::Q, &MR::var(Var::W).scale(&rho));
        assert_eq!(got, MR::monomial(rho.square(), [0, 0, 2]));
    }

    #[test]
    fn binary_forms() {
        let p = M::var(Var::P);
        let w = M::var(Var::W);
        let f = &p.pow(4) + &(&p * &w.pow(3)).scale(&Rational::from_i64(-3));
        let bq = f.to_binary_quartic(Var::P, Var::W).unwrap();
        assert_eq!(bq.coeffs()[3], &Rational::from_i64(-3));
        assert!(M::var(Var::Q)
            .pow(4)
            .to_binary_quartic(Var::P, Var::W)
            .is_none());
    }
}
