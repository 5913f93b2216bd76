use crate::error::{Error, Result};
use crate::polyalg::{BinaryQuartic, Field, Polynomial};

/// `y² = x³ + a₂x² + a₄x + a₆`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassModel<F> {
    pub a2: F,
    pub a4: F,
    pub a6: F,
}

#[derive(Clone, PartialEq, Debug)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: Field> Point<F> {
    pub fn new(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            Point::Affine { x, .. } => Some(x),
            Point::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            Point::Affine { y, .. } => Some(y),
            Point::Infinity => None,
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Point<G> {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::new(f(x), f(y)),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Point<G>> {
        Ok(match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::new(f(x)?, f(y)?),
        })
    }
}

impl<F: Field> WeierstrassModel<F> {
    pub fn new(a2: F, a4: F, a6: F) -> Self {
        WeierstrassModel { a2, a4, a6 }
    }

    /// `y² = x(x² + αx + β)`.
    pub fn two_torsion_form(alpha: F, beta: F) -> Self {
        WeierstrassModel::new(alpha, beta, F::zero())
    }

    pub fn cubic(&self) -> Polynomial<F> {
        Polynomial::new(vec![
            self.a6.clone(),
            self.a4.clone(),
            self.a2.clone(),
            F::one(),
        ])
    }

    pub fn rhs(&self, x: &F) -> F {
        x.add(&self.a2).mul(x).add(&self.a4).mul(x).add(&self.a6)
    }

    pub fn contains(&self, pt: &Point<F>) -> bool {
        match pt {
            Point::Infinity => true,
            Point::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    fn b_invariants(&self) -> [F; 4] {
        let b2 = F::from_i64(4).mul(&self.a2);
        let b4 = F::from_i64(2).mul(&self.a4);
        let b6 = F::from_i64(4).mul(&self.a6);
        let b8 = F::from_i64(4)
            .mul(&self.a2)
            .mul(&self.a6)
            .sub(&self.a4.square());
        [b2, b4, b6, b8]
    }

    pub fn c4(&self) -> F {
        let [b2, b4, ..] = self.b_invariants();
        b2.square().sub(&F::from_i64(24).mul(&b4))
    }

    pub fn discriminant(&self) -> F {
        let [b2, b4, b6, b8] = self.b_invariants();
        b2.square()
            .mul(&b8)
            .neg()
            .sub(&F::from_i64(8).mul(&b4.pow(3)))
            .sub(&F::from_i64(27).mul(&b6.square()))
            .add(&F::from_i64(9).mul(&b2).mul(&b4).mul(&b6))
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// `c₄³ / Δ`.
    pub fn j_invariant(&self) -> Result<F> {
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        self.c4().pow(3).div(&disc)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> WeierstrassModel<G> {
        WeierstrassModel::new(f(&self.a2), f(&self.a4), f(&self.a6))
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<WeierstrassModel<G>> {
        Ok(WeierstrassModel::new(
            f(&self.a2)?,
            f(&self.a4)?,
            f(&self.a6)?,
        ))
    }
}

/// `y² = ax⁴ + bx² + c`.
#[derive(Clone, PartialEq, Debug)]
pub struct EvenQuartic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Field> EvenQuartic<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        EvenQuartic { a, b, c }
    }

    pub fn rhs(&self, x: &F) -> F {
        let x2 = x.square();
        self.a.mul(&x2).add(&self.b).mul(&x2).add(&self.c)
    }

    pub fn contains(&self, x: &F, y: &F) -> bool {
        y.square() == self.rhs(x)
    }

    pub fn polynomial(&self) -> Polynomial<F> {
        Polynomial::new(vec![
            self.c.clone(),
            F::zero(),
            self.b.clone(),
            F::zero(),
            self.a.clone(),
        ])
    }

    pub fn as_binary_quartic(&self) -> BinaryQuartic<F> {
        BinaryQuartic::new(
            self.a.clone(),
            F::zero(),
            self.b.clone(),
            F::zero(),
            self.c.clone(),
        )
    }

    /// `a ≠ 0` and the quartic has distinct roots.
    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero() || self.as_binary_quartic().invariants().disc.is_zero()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> EvenQuartic<G> {
        EvenQuartic::new(f(&self.a), f(&self.b), f(&self.c))
    }
}

/// A rational point on a quartic curve `y² = f(x)`.
#[derive(Clone, PartialEq, Debug)]
pub enum QuarticPoint<F> {
    Affine {
        x: F,
        y: F,
    },
    /// One of the two points at infinity, where `y / x²` tends to `branch`
    /// (a square root of the leading coefficient).
    Infinity {
        branch: F,
    },
}

/// `y² = Ax⁴ + Bx³ + Cx² + Dx + E`, optionally with a marked rational point.
#[derive(Clone, PartialEq, Debug)]
pub struct QuarticCurve<F> {
    pub quartic: BinaryQuartic<F>,
    pub marked: Option<QuarticPoint<F>>,
}

impl<F: Field> QuarticCurve<F> {
    pub fn new(quartic: BinaryQuartic<F>, marked: Option<QuarticPoint<F>>) -> Result<Self> {
        if quartic.invariants().disc.is_zero() {
            return Err(Error::SingularQuartic);
        }
        let curve = QuarticCurve { quartic, marked };
        match &curve.marked {
            Some(QuarticPoint::Affine { x, y }) if !curve.contains(x, y) => Err(Error::NotOnCurve),
            Some(QuarticPoint::Infinity { branch })
                if curve.quartic.a.is_zero() || branch.square() != curve.quartic.a =>
            {
                Err(Error::NotOnCurve)
            }
            _ => Ok(curve),
        }
    }

    /// Marks the point at infinity with positive branch, if the leading coefficient is a square.
    pub fn with_point_at_infinity(quartic: BinaryQuartic<F>) -> Result<Self> {
        let branch = quartic.a.sqrt().ok_or(Error::LeadingCoefficientNotSquare)?;
        if branch.is_zero() {
            return Err(Error::NoRationalPoint);
        }
        Self::new(quartic, Some(QuarticPoint::Infinity { branch }))
    }

    pub fn polynomial(&self) -> Polynomial<F> {
        self.quartic.dehomogenize()
    }

    pub fn contains(&self, x: &F, y: &F) -> bool {
        y.square() == self.polynomial().eval(x)
    }
}
