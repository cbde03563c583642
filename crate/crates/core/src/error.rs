use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("letter {letter} lies outside the alphabet of rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("rank must be positive")]
    ZeroRank,
    #[error("empty word")]
    EmptyWord,
    #[error("column {0:?} is not strictly increasing")]
    NotAColumn(Vec<i32>),
    #[error("column heights must weakly decrease from left to right")]
    BadShape,
    #[error("letter 0 is not a valid letter")]
    ZeroLetter,
    #[error("({row}, {col}) is not an outside corner")]
    InvalidCorner { row: usize, col: usize },
    #[error("no tableau inserts to the given tableau through this corner")]
    NoPreimage,
    #[error("contraction precondition violated: {0}")]
    Contraction(&'static str),
    #[error("plactic search exhausted its budget of {0} words")]
    BudgetExhausted(usize),
    #[error("cocyclage is not defined on a single column")]
    SingleColumn,
    #[error("cocyclage is not authorized for this tableau")]
    Unauthorized,
    #[error("weight is not zero")]
    NonzeroWeight,
    #[error("reduction is not applicable: {0}")]
    Reduction(&'static str),
    #[error("charge chain revisited a tableau")]
    ChainRepetition,
    #[error("negative charge {0}")]
    NegativeCharge(i64),
    #[error("hypothesis violated: {0}")]
    Hypothesis(&'static str),
    #[error("parity violation: {0}")]
    Parity(&'static str),
    #[error("negative coefficient in a Kostka-Foulkes polynomial: {0}")]
    Positivity(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
