//! Scalar foundations: exact rationals, extended reals, magnitudes.

mod exact;
mod extended;
mod magnitude;

pub use exact::{ExactScalar, ExtendedRational};
pub use extended::{ext_add, ext_mul, EvalMode, ExtendedReal};
pub use magnitude::{BmMagnitude, Magnitude};

pub(crate) use exact::parse_exact;
