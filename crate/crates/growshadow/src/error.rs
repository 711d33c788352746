//! Error type shared across the toolkit.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("not normalizable: non-polynomial field")]
    NotNormalizable,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("zero field has no top-degree part")]
    ZeroField,

    #[error("boundary point has no finite preimage")]
    BoundaryNoPreimage,

    #[error("ball touches boundary")]
    BallTouchesBoundary,

    #[error("time change degenerates at boundary")]
    TimeChangeDegenerate,

    #[error("stiff or singular; undetermined")]
    StiffUndetermined,

    #[error("invalid error law: {0}")]
    LawInvalid(String),

    #[error("law kind does not match trajectory space: {0}")]
    KindSpaceMismatch(String),

    #[error("non-hyperbolic boundary point: {0}")]
    NonHyperbolic(String),

    #[error("no transversal direction at boundary point")]
    NotTransversal,

    #[error("no admissible exponent: transversal direction not contracting")]
    NoAdmissibleExponent,

    #[error("hyperbolic box alignment violated at step {0}")]
    BoxAlignment(usize),

    #[error("no invariant cubes: pseudotrajectory too coarse for given boxes")]
    EmptyRefinement,

    #[error("weight base below floor: need C >= {required}, got {got}")]
    WeightBelowFloor { required: f64, got: f64 },

    #[error("rate bounds violated at step {step}: {msg}")]
    RateBounds { step: usize, msg: String },

    #[error("decompactified orbit blows up before the pseudotrajectory ends")]
    TransferBlowUp,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
