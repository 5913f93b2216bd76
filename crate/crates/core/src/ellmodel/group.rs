//! Chord-and-tangent group law on `y² = x³ + a₂x² + a₄x + a₆`.

use crate::error::Result;
use crate::exact::Rational;
use crate::polyalg::Field;

use super::curves::{Point, WeierstrassModel};

/// Orders a rational torsion point can have (Mazur).
pub const MAZUR_ORDERS: [u32; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionOrder {
    Finite(u32),
    Infinite,
}

impl<F: Field> WeierstrassModel<F> {
    pub fn negate(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::new(x.clone(), y.neg()),
        }
    }

    pub fn add(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if y1.add(y2).is_zero() {
                return Point::Infinity;
            }
            // tangent: (3x² + 2a₂x + a₄) / 2y
            let num = F::from_i64(3)
                .mul(&x1.square())
                .add(&F::from_i64(2).mul(&self.a2).mul(x1))
                .add(&self.a4);
            num.div(&F::from_i64(2).mul(y1)).expect("y ≠ 0 here")
        } else {
            y2.sub(y1).div(&x2.sub(x1)).expect("x₁ ≠ x₂ here")
        };
        let x3 = slope.square().sub(&self.a2).sub(x1).sub(x2);
        let y3 = slope.mul(&x1.sub(&x3)).sub(y1);
        Point::new(x3, y3)
    }

    pub fn double(&self, p: &Point<F>) -> Point<F> {
        self.add(p, p)
    }

    /// `n·P` by double-and-add; negative `n` negates.
    pub fn multiple(&self, p: &Point<F>, n: i64) -> Point<F> {
        let mut base = if n < 0 { self.negate(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.double(&base);
            }
        }
        acc
    }
}

impl WeierstrassModel<Rational> {
    /// Exact order when it is at most 12, otherwise `Infinite`. Over ℚ this
    /// decides torsion completely, since rational torsion orders are bounded by 12.
    pub fn torsion_order(&self, p: &Point<Rational>) -> Result<TorsionOrder> {
        let mut acc = p.clone();
        for n in 1..=12u32 {
            if acc.is_infinity() {
                debug_assert!(MAZUR_ORDERS.contains(&n), "order 11 cannot occur over Q");
                return Ok(TorsionOrder::Finite(n));
            }
            acc = self.add(&acc, p);
        }
        Ok(TorsionOrder::Infinite)
    }
}
