use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElimError {
    #[error("exact division failed: nonzero remainder")]
    NotDivisible,
    #[error("not a perfect square")]
    NotASquare,
    #[error("degree {actual} exceeds declared degree {declared}")]
    DegreeExceeded { actual: u32, declared: u32 },
    #[error("leading declared coefficient vanishes")]
    LeadingZero,
    #[error("polynomial is not homogeneous of degree {0} in the active variables")]
    NonHomogeneous(u32),
    #[error("Res(P1,P2,X1) vanishes; the pair discriminant is undefined here")]
    DenominatorZero,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("extraneous Macaulay minor vanished after {0} coordinate changes")]
    NeedsCoordinateChange(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, ElimError>;
