use thiserror::Error;

/// Errors reported by partition operations with data-dependent preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least {min}, got {m}")]
    ModulusTooSmall { m: u64, min: u64 },
    #[error("parts must be positive")]
    ZeroPart,
    #[error("part {part} is a multiple of {m}")]
    PartDivisible { part: u64, m: u64 },
    #[error("part {part} is not a multiple of {m}")]
    PartNotDivisible { part: u64, m: u64 },
    #[error("part {part} occurs {multiplicity} times, expected fewer than {m}")]
    MultiplicityTooLarge {
        part: u64,
        multiplicity: u64,
        m: u64,
    },
    #[error("part {part} occurs {multiplicity} times, not a multiple of {m}")]
    MultiplicityNotDivisible {
        part: u64,
        multiplicity: u64,
        m: u64,
    },
    #[error("drawn part {part} does not occur in the partition")]
    DrawnPartMissing { part: u64 },
    #[error("index must be positive")]
    ZeroIndex,
    #[error("invalid part list: {0}")]
    ParseParts(String),
    #[error("evaluation point has {got} coordinates, need {expected}")]
    PointDimension { expected: u64, got: u64 },
    #[error("unknown identity tag `{0}`")]
    UnknownIdentity(String),
    #[error("unknown sign `{0}`, expected +1 or -1")]
    UnknownSign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
