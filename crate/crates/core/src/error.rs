use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generating set contains the identity element")]
    IdentityInGeneratingSet,
    #[error("generating set contains {0} more than once")]
    DuplicateGenerator(String),
    #[error("generating set is empty")]
    EmptyGeneratingSet,
    #[error("{family} requires n >= {min}, got n = {n}")]
    DimensionTooSmall {
        family: &'static str,
        n: u32,
        min: u32,
    },
    #[error("cannot add {extra} extra generators in dimension {n} (at most {max})")]
    TooManyExtras { n: u32, extra: u64, max: u64 },
    #[error("edge index {index} out of range 1..={delta}")]
    EdgeIndexOutOfRange { index: usize, delta: usize },
    #[error("bit string width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: u32, found: u32 },
    #[error("invalid bit string {0:?}")]
    InvalidBitString(String),
    #[error("{wires} wires exceeds the limit of {limit}")]
    TooManyWires { wires: usize, limit: usize },
    #[error(
        "degree {delta} is not a power of two; the diffusion circuit needs a full coin register"
    )]
    DegreeNotPowerOfTwo { delta: usize },
    #[error("search window is empty")]
    EmptyWindow,
    #[error("need at least {min} rows, got {rows}")]
    TooFewRows { rows: usize, min: usize },
    #[error("least-squares fit is degenerate (all degrees equal)")]
    DegenerateFit,
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
