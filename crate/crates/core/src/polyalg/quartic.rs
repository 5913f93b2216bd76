//! Binary quartic forms `A p⁴ + B p³w + C p²w² + D pw³ + E w⁴` and their invariants.

use crate::error::Result;

use super::field::Field;
use super::poly::Polynomial;

#[derive(Clone, PartialEq, Debug)]
pub struct BinaryQuartic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
}

/// `a p² + b p w + c w²`.
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryQuadratic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

/// Classical invariants of a binary quartic.
#[derive(Clone, PartialEq, Debug)]
pub struct QuarticInvariants<F> {
    pub i: F,
    pub j: F,
    pub disc: F,
}

impl<F: Field> BinaryQuadratic<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        BinaryQuadratic { a, b, c }
    }

    pub fn eval(&self, p: &F, w: &F) -> F {
        self.a
            .mul(&p.square())
            .add(&self.b.mul(&p.mul(w)))
            .add(&self.c.mul(&w.square()))
    }

    pub fn square(&self) -> BinaryQuartic<F> {
        let two = F::from_i64(2);
        BinaryQuartic::new(
            self.a.square(),
            two.mul(&self.a).mul(&self.b),
            self.b.square().add(&two.mul(&self.a).mul(&self.c)),
            two.mul(&self.b).mul(&self.c),
            self.c.square(),
        )
    }

    pub fn neg(&self) -> Self {
        BinaryQuadratic::new(self.a.neg(), self.b.neg(), self.c.neg())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BinaryQuadratic<G> {
        BinaryQuadratic::new(f(&self.a), f(&self.b), f(&self.c))
    }
}

impl<F: Field> BinaryQuartic<F> {
    pub fn new(a: F, b: F, c: F, d: F, e: F) -> Self {
        BinaryQuartic { a, b, c, d, e }
    }

    pub fn coeffs(&self) -> [&F; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BinaryQuartic<G> {
        BinaryQuartic::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d), f(&self.e))
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<BinaryQuartic<G>> {
        Ok(BinaryQuartic::new(
            f(&self.a)?,
            f(&self.b)?,
            f(&self.c)?,
            f(&self.d)?,
            f(&self.e)?,
        ))
    }

    pub fn eval(&self, p: &F, w: &F) -> F {
        let mut acc = F::zero();
        for (k, c) in self.coeffs().into_iter().enumerate() {
            acc = acc.add(&c.mul(&p.pow(4 - k as u32)).mul(&w.pow(k as u32)));
        }
        acc
    }

    /// `F(p, 1)` as a polynomial in `p`.
    pub fn dehomogenize(&self) -> Polynomial<F> {
        Polynomial::new(vec![
            self.e.clone(),
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
        ])
    }

    /// `I = 12AE − 3BD + C²`.
    pub fn invariant_i(&self) -> F {
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        F::from_i64(12)
            .mul(&a.mul(e))
            .sub(&F::from_i64(3).mul(&b.mul(d)))
            .add(&c.square())
    }

    /// `J = 72ACE + 9BCD − 27AD² − 27B²E − 2C³`.
    pub fn invariant_j(&self) -> F {
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        F::from_i64(72)
            .mul(&a.mul(c).mul(e))
            .add(&F::from_i64(9).mul(&b.mul(c).mul(d)))
            .sub(&F::from_i64(27).mul(&a.mul(&d.square())))
            .sub(&F::from_i64(27).mul(&b.square().mul(e)))
            .sub(&F::from_i64(2).mul(&c.pow(3)))
    }

    /// `I`, `J` and `disc = (4I³ − J²)/27`.
    pub fn invariants(&self) -> QuarticInvariants<F> {
        let i = self.invariant_i();
        let j = self.invariant_j();
        let disc = F::from_i64(4)
            .mul(&i.pow(3))
            .sub(&j.square())
            .div(&F::from_i64(27))
            .expect("27 is invertible");
        QuarticInvariants { i, j, disc }
    }

    /// Discriminant through `Res(f, f′) / lc(f)` after a unimodular change of
    /// variables that makes the leading coefficient nonzero.
    pub fn discriminant_by_resultant(&self) -> F {
        if self.is_zero() {
            return F::zero();
        }
        // (p, w) -> (p, w + k p) has determinant 1
        let coeffs: Vec<F> = self.coeffs().into_iter().cloned().collect();
        for k in 0..5i64 {
            let k = F::from_i64(k);
            let shifted_w = Polynomial::new(vec![F::one(), k.clone()]);
            let mut f = Polynomial::zero();
            for (i, c) in coeffs.iter().enumerate() {
                let term = &Polynomial::monomial(c.clone(), 4 - i) * &shifted_w.pow(i as u32);
                f = &f + &term;
            }
            if f.degree() == Some(4) {
                let r = resultant(&f, &f.derivative());
                return r.div(&f.leading()).expect("nonzero leading coefficient");
            }
        }
        unreachable!("a nonzero quartic form is nonzero at one of five points")
    }

    /// Square root as a binary quadratic form, when the quartic is a perfect square.
    pub fn perfect_square_root(&self) -> Option<BinaryQuadratic<F>> {
        let f = self.dehomogenize();
        let g = f.perfect_square_root()?;
        Some(BinaryQuadratic::new(g.coeff(2), g.coeff(1), g.coeff(0)))
    }
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> F {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return F::zero();
    };
    let size = m + n;
    if size == 0 {
        return F::one();
    }
    let mut mat = vec![vec![F::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    determinant(mat)
}

/// Determinant by Gaussian elimination over the field.
pub fn determinant<F: Field>(mut mat: Vec<Vec<F>>) -> F {
    let n = mat.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = det.neg();
        }
        let p = mat[col][col].clone();
        det = det.mul(&p);
        let inv = p.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = mat[r][col].mul(&inv);
            for c in col..n {
                let v = mat[col][c].mul(&factor);
                mat[r][c] = mat[r][c].sub(&v);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use proptest::prelude::*;

    fn bq(c: [i64; 5]) -> BinaryQuartic<Rational> {
        let r = |x| Rational::from_i64(x);
        BinaryQuartic::new(r(c[0]), r(c[1]), r(c[2]), r(c[3]), r(c[4]))
    }

    #[test]
    fn invariant_examples() {
        let inv = bq([1, 0, 0, 0, 1]).invariants();
        assert_eq!(inv.i, Rational::from_i64(12));
        assert_eq!(inv.j, Rational::zero());
        assert_eq!(inv.disc, Rational::from_i64(256));
        assert_eq!(
            bq([1, 0, 0, 0, 1]).discriminant_by_resultant(),
            Rational::from_i64(256)
        );
        let inv = bq([1, 0, 6, 0, 1]).invariants();
        assert_eq!(inv.i, Rational::from_i64(48));
        assert_eq!(inv.j, Rational::zero());
        // (p² + pw − 2w²)² is a square: repeated roots
        let sq = BinaryQuadratic::new(
            Rational::from_i64(1),
            Rational::from_i64(1),
            Rational::from_i64(-2),
        )
        .square();
        assert!(sq.invariants().disc.is_zero());
        assert_eq!(sq.perfect_square_root().unwrap().c, Rational::from_i64(-2));
    }

    #[test]
    fn resultant_of_small_polynomials() {
        let f = Polynomial::<Rational>::from_ints_desc(&[1, 0, -1]);
        let g = Polynomial::<Rational>::from_ints_desc(&[1, -2]);
        // f(2) = 3
        assert_eq!(resultant(&f, &g), Rational::from_i64(3));
    }

    #[test]
    fn squares_with_vanishing_leading_terms() {
        // w²(p + w)² has A = B = 0
        let f = BinaryQuadratic::new(Rational::zero(), Rational::one(), Rational::one()).square();
        assert_eq!(f.a, Rational::zero());
        let g = f.perfect_square_root().unwrap();
        assert_eq!(g.square(), f);
        assert!(f.discriminant_by_resultant().is_zero());
        assert!(bq([0, 1, 0, 0, 1]).perfect_square_root().is_none());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn disc_formula_matches_resultant(c in proptest::array::uniform5(-30i64..30)) {
            prop_assume!(c.iter().any(|&x| x != 0));
            let f = bq(c);
            prop_assert_eq!(f.invariants().disc, f.discriminant_by_resultant());
        }

        #[test]
        fn square_root_of_square(c in proptest::array::uniform3(-50i64..50)) {
            let g = BinaryQuadratic::new(Rational::from_i64(c[0]), Rational::from_i64(c[1]), Rational::from_i64(c[2]));
            let root = g.square().perfect_square_root().unwrap();
            prop_assert!(root == g || root == g.neg());
            prop_assert_eq!(root.square(), g.square());
        }
    }
}
