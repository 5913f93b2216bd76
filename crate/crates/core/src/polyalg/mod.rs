//! Polynomial algebra over ℚ and ℚ(t).

mod field;
pub(crate) mod modp;
mod multipoly;
pub mod parse;
mod poly;
mod quartic;
mod ratfunc;
mod rational;
pub mod roots;

pub use field::Field;
pub use multipoly::{Exponents, MultiPolynomial, Var};
pub use poly::Polynomial;
pub use quartic::{determinant, resultant, BinaryQuadratic, BinaryQuartic, QuarticInvariants};
pub use ratfunc::{QPoly, RationalFunction};
pub use rational::{rational_roots, root_multiplicity};
pub use roots::rational_root_interpolation;
