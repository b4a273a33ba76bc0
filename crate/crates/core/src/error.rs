use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power in [2, 256]")]
    NotPrimePower(u32),

    #[error("unconstructible: {0}")]
    Unconstructible(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("replacement array has {found} rows but the replaced column has {expected} levels")]
    RowCountMismatch { expected: u32, found: usize },

    #[error("column {col} has {levels} levels; folding needs an even level count")]
    OddLevels { col: usize, levels: u32 },

    #[error("pairwise distance scan needs {pairs} row pairs, budget is {budget}; supply a linear hint or raise the budget")]
    BudgetExceeded { pairs: u128, budget: u64 },

    #[error("generator has rank {rank} but {k} message coordinates")]
    RankDeficient { rank: usize, k: usize },

    #[error("enumeration of {size} codewords exceeds the cap of 2^24")]
    TooLarge { size: u128 },

    #[error("invalid distance: n = {n} is smaller than 2(d-1) = {}", 2 * (d.saturating_sub(1)))]
    InvalidDistance { n: usize, d: usize },

    #[error("partition is not a valid orthogonal partition: {0}")]
    PartitionInvalid(String),

    #[error("minimum distance unavailable: {0}")]
    DistanceUnavailable(Box<Error>),

    #[error("array is not irredundant at strength {0}")]
    NotIrredundant(usize),

    #[error("array does not have strength {0}")]
    InsufficientStrength(usize),

    #[error("reduced density matrix on parties {parties:?} has dimension {dim}, above the exactness cap {cap}")]
    DimensionCap {
        parties: Vec<usize>,
        dim: u128,
        cap: u128,
    },

    #[error("row set does not form a linear code: {0}")]
    NotLinear(String),

    #[error("independent computations disagree: {0}")]
    OracleDisagreement(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
