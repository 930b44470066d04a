//! Crate-wide error type and result alias.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two words over different alphabets were combined.
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    /// A substitution was missing an image for a generator.
    #[error("no image assigned for generator {0}")]
    MissingAssignment(String),

    /// The stable letter has no matrix or braid image.
    #[error("the letter t is a formal stable letter and has no braid image")]
    StableLetterHasNoImage,

    /// Inversion of a matrix whose determinant is not a unit.
    #[error("singular matrix: determinant {0} is not a unit")]
    SingularMatrix(String),

    /// Division by zero in a field.
    #[error("division by zero")]
    DivisionByZero,

    /// gcd(0, 0) and similar degenerate ring queries.
    #[error("invalid ring operation: {0}")]
    InvalidRingOp(String),

    /// A family index outside its domain of definition.
    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// A recursion/index bound configured in `RunConfig` was exceeded.
    #[error("depth bound exceeded: {what} {requested} > {bound}")]
    DepthExceeded {
        what: &'static str,
        requested: i64,
        bound: i64,
    },

    /// Group closure grew past the configured element cap.
    #[error("closure cap exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },

    /// Malformed input to one of the text parsers.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A self-consistency invariant failed during construction.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),

    /// Registry lookup with an id that is not registered.
    #[error("unknown check id: {0}")]
    UnknownCheck(String),

    /// Cache file did not match the expected format.
    #[error("cache format error: {0}")]
    CacheFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Exit code class for the CLI: 2 = usage/parse, 3 = resource.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::AlphabetMismatch(_)
                | Error::MissingAssignment(_)
                | Error::StableLetterHasNoImage
                | Error::UnknownCheck(_)
                | Error::InvalidIndex(_)
        )
    }

    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::DepthExceeded { .. } | Error::CapExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
