use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("field order {0} exceeds the supported maximum of 64")]
    UnsupportedFieldOrder(usize),
    #[error("division by zero in a Galois field")]
    DivideByZero,
    #[error("quadratic character is only defined for fields of odd order, got {0}")]
    EvenCharacteristic(usize),

    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("cell ({row},{col}) holds {value}, outside 0..{levels}")]
    Range {
        row: usize,
        col: usize,
        value: usize,
        levels: usize,
    },
    #[error("degenerate array: {0}")]
    Degenerate(String),
    #[error("empty column selection")]
    EmptySelection,
    #[error("column index {0} out of range for {1} columns")]
    IndexOutOfRange(usize, usize),
    #[error(
        "collapse map for column {col} has domain size {map} but the column has {levels} levels"
    )]
    MapMismatch {
        col: usize,
        map: usize,
        levels: usize,
    },
    #[error("invalid level-collapse map: {0}")]
    BadCollapseMap(String),

    #[error("empty column subset")]
    EmptySubset,
    #[error("all J-characteristics up to size {0} are zero; resolution undefined > {0}")]
    AllZeroJ(usize),
    #[error("regularity test refused for k = {0} > 20 columns")]
    TooManyColumns(usize),
    #[error("two-level view requires every column at two levels")]
    NotTwoLevel,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("LP solver scale cap exceeded: k = {0} > 40")]
    SolverScaleExceeded(usize),
    #[error("internal error: {0}")]
    Internal(String),

    #[error("invalid difference scheme: {0}")]
    InvalidScheme(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("q = {0} is in the wrong residue class mod 4 for this construction")]
    BadResidueClass(usize),
    #[error("construction produced an invalid matrix: {0}")]
    ConstructionInvalid(String),
    #[error("matrix is not Hadamard: {0}")]
    NotHadamard(String),
    #[error("block partition has {got} blocks, expected {expected}")]
    PartitionMismatch { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("squares {0} and {1} are not orthogonal")]
    NotMols(usize, usize),
    #[error("array is not convertible to Latin squares: {0}")]
    NotConvertible(String),
    #[error("matrix is not a symmetric BIBD: {0}")]
    NotSbibd(String),
    #[error("block index {0} out of range for {1} blocks")]
    BlockIndexOutOfRange(usize, usize),

    #[error("generator rows are linearly dependent")]
    RankDeficient,
    #[error("codeword enumeration of size {0} exceeds the cap of 2^20")]
    ScaleExceeded(u128),
    #[error("code has fewer than two codewords")]
    TooFewWords,

    #[error("mixed-level arrays are not supported here")]
    MixedLevelsUnsupported,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("column {0} of B is not a permutation of the centered level vector")]
    NotFromGamma(usize),
    #[error("column {col} has {levels} levels, expected {expected}")]
    LevelCountMismatch {
        col: usize,
        levels: usize,
        expected: usize,
    },
    #[error("invalid sample plan: {0}")]
    PlanInvalid(String),
    #[error("invalid slice partition: {0}")]
    BadPartition(String),
    #[error("invalid group specification: {0}")]
    BadGroupSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
