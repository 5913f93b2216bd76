pub mod cli;
pub mod ellmodel;
pub mod error;
pub mod exact;
pub mod fixedseq6;
pub mod mestre6;
pub mod polyalg;

pub use error::{Error, Result};
pub use exact::{Integer, Rational};
