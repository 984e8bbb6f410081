//! Crate-wide error type.
//!
//! Every fallible operation in the crate returns [`Result`]. Domain
//! violations (values outside a carrier, magnitudes below the class
//! minimum) are reported through [`Error::Domain`] and friends rather than
//! panics; panics are reserved for internal invariant breaches.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two operands carry different magnitudes and cannot be combined.
    #[error("magnitude mismatch: {left} vs {right}")]
    MagnitudeMismatch { left: String, right: String },

    /// A negative value reached an operation defined only on nonnegative
    /// inputs.
    #[error("negative input {value}: operation is defined on nonnegative values only")]
    NegativeInput { value: String },

    /// A value fell outside the carrier or a parameter outside its
    /// documented range.
    #[error("domain error: {0}")]
    Domain(String),

    /// An indeterminate form (`inf + -inf` or `inf * 0`) was evaluated in
    /// strict mode.
    #[error("indeterminate form: {0}")]
    IndeterminateForm(&'static str),

    /// A fold or reduction was applied to an empty sequence.
    #[error("empty sequence")]
    EmptySequence,

    /// A series operation requiring nonnegative terms met a negative one.
    /// The index is 1-based.
    #[error("negative term at index {index}")]
    NegativeTerm { index: usize },

    /// The series classifier could not assign a class.
    #[error("series classification is unknown")]
    UnknownClassification,

    /// A term stream ended before the classification window filled.
    #[error("insufficient terms: classification window needs {window}, only {available} available")]
    InsufficientTerms { window: usize, available: usize },

    /// The requested law is not defined for the requested class.
    #[error("law {law} is not defined for class {class}")]
    UnsupportedLaw { law: String, class: String },

    /// An operation was requested under a class that does not support it.
    #[error("class {class} does not support {operation}")]
    ClassError { class: String, operation: String },

    /// Expression or spec-string parsing failed. Offsets are in bytes.
    #[error("parse error at byte {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },

    /// Unknown demo name.
    #[error("unknown demo `{0}`")]
    UnknownDemo(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    ///
    /// 1 = parse error, 2 = domain or class error, 3 = indeterminate form
    /// under strict evaluation. (0 = success and 4 = unknown subcommand are
    /// assigned by the front end itself.)
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. } => 1,
            Error::IndeterminateForm(_) => 3,
            _ => 2,
        }
    }
}
