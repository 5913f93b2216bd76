use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("log height of zero is undefined")]
    ZeroHeightInput,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has odd degree")]
    OddDegree,
    #[error("no rational root found")]
    NoRationalRoot,
    #[error("rational reconstruction exceeded degree bound ({0}, {0})")]
    DegreeBoundExceeded(usize),
    #[error("quartic is not a perfect square")]
    NotAPerfectSquare,

    #[error("quartic is singular")]
    SingularQuartic,
    #[error("no rational point to base the transformation on")]
    NoRationalPoint,
    #[error("cubic has no rational root, so no rational 2-torsion")]
    NoRationalTwoTorsion,
    #[error("leading coefficient is not a square")]
    LeadingCoefficientNotSquare,
    #[error("curve is singular")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("curves are not isomorphic over the base field")]
    NotIsomorphic,
    #[error("height estimate did not stabilise after {0} doublings")]
    PrecisionNotReached(u32),
    #[error("independence certificate needs non-torsion points; point {index} has order {order}")]
    TorsionInput { index: usize, order: u32 },

    #[error("degenerate sequence: {0}")]
    DegenerateSequence(String),
    #[error("curve degenerates at this specialization: {0}")]
    SingularSpecialization(String),
    #[error("linear system for (a, b, c) is singular")]
    SingularSystem,
    #[error("no substitution kills the discriminant")]
    NoKillingSubstitution,
    #[error("point has finite order {0}")]
    PointIsTorsion(u32),
    #[error("only {found} of {wanted} records after {tried} multiples")]
    ExhaustedMultiples {
        wanted: usize,
        found: usize,
        tried: u64,
    },
    #[error("internal identity failed: {0}")]
    IdentityFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
