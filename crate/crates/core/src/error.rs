use thiserror::Error;

/// Everything that can go wrong while building designs, multiplying
/// matrices or running the command line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set must be non-empty (v = 0)")]
    EmptyPointSet,
    #[error("design has no blocks")]
    EmptyDesign,
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("block {block} contains point {point}, outside 1..={v}")]
    PointOutOfRange { block: usize, point: i64, v: u32 },
    #[error("point {point} is outside 1..={v}")]
    PointIdOutOfRange { point: u32, v: u32 },
    #[error("block {block} contains point {point} more than once")]
    DuplicatePointInBlock { block: usize, point: u32 },
    #[error("non-uniform block size: block {block} has {found} points, block 1 has {expected}")]
    NonUniformBlockSize {
        block: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-uniform replication: point {point} occurs in {found} blocks, point 1 occurs in {expected}")]
    NonUniformReplication {
        point: u32,
        expected: u64,
        found: u64,
    },
    #[error("non-uniform pair count: pair ({x},{y}) occurs in {found} blocks, pair (1,2) occurs in {expected}")]
    NonUniformPairCount {
        x: u32,
        y: u32,
        expected: u64,
        found: u64,
    },
    #[error("block size {k} must be smaller than v = {v} (only k = 1 designs may have k = v)")]
    BlockSizeNotBelowV { k: usize, v: u32 },
    #[error("pair count is zero for block size {k}; only k = 1 designs may have lambda = 0")]
    ZeroLambda { k: usize },
    #[error("parameter relation violated: {relation}")]
    ParameterRelation { relation: String },

    #[error("invalid block size k = {k} for v = {v} (need 1 <= k < v)")]
    InvalidK { v: u32, k: u32 },
    #[error("complement blocks would have {size} points, need at least 2")]
    ComplementTooSmall { size: usize },
    #[error("result is not a balanced design: {0}")]
    NotABibd(Box<Error>),
    #[error("block {block:?} does not occur often enough in the larger design")]
    BlockNotPresent { block: Vec<u32> },
    #[error("not a difference set mod {modulus}: difference {difference} arises {found} times, expected {expected}")]
    NotADifferenceSet {
        modulus: u32,
        difference: u32,
        expected: u64,
        found: u64,
    },
    #[error("designs have different block sizes ({k1} vs {k2})")]
    MixedBlockSize { k1: usize, k2: usize },
    #[error("designs live on different point sets (v = {v1} vs v = {v2})")]
    MixedV { v1: u32, v2: u32 },
    #[error("unknown fixture {0:?} (expected fano, ex1_d2, ex3_d1 or ex3_d2)")]
    UnknownFixture(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero vector cannot be an eigenvector")]
    ZeroVector,

    #[error("designs are built on different point sets (v = {v1} vs v = {v2})")]
    MismatchedPointSets { v1: u32, v2: u32 },
    #[error("Z vectors span only {rank} dimensions, expected {expected}")]
    DegenerateSpan { rank: usize, expected: usize },
    #[error("b1 = {b1} < v = {v}: Fisher's inequality fails")]
    FisherViolation { b1: u64, v: u32 },

    #[error("size set for S-block intersection graph is empty")]
    EmptySizeSet,

    #[error("parse error: {0}")]
    Parse(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("golden mismatch: {0}")]
    GoldenMismatch(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
