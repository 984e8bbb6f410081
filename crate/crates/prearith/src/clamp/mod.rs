//! Clamped arithmetic on `[0, M]` and `[-M, M]`.

mod expansion;
mod signed;
mod unsigned;

pub use expansion::{greedy_expansion, ExpansionResult};
pub use signed::{amm_add, amm_coproject, amm_fold, amm_mul, AmmValue};
pub use unsigned::{am_add, am_coproject, am_mul, AmValue};

use crate::error::{Error, Result};
use crate::scalar::Magnitude;

pub(crate) fn same_magnitude(left: &Magnitude, right: &Magnitude) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::MagnitudeMismatch {
            left: left.to_string(),
            right: right.to_string(),
        })
    }
}
