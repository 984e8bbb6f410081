//! The signed clamped class on `[-M, M]`.
//!
//! Carrier `[-M, M]` with `a (+) b = t(a + b)` and `a (*) b = t(a * b)`,
//! where `t` clamps to `[-M, M]`. Unlike the nonnegative class, this one is
//! closed under negation — but its addition is *not* associative: once a
//! partial sum hits the ceiling, information about the overshoot is lost,
//! and adding a negative number afterwards cannot recover it. The canonical
//! counterexample is
//!
//! ```text
//! (-2) (+) (M (+) 1) = M - 2      but      ((-2) (+) M) (+) 1 = M - 1
//! ```
//!
//! Because of this, reductions over sequences must fix an evaluation order;
//! [`amm_fold`] folds strictly left to right, clamping after every step.
//!
//! The coprojector `t` is total on the extended reals: `+inf` lands on `M`
//! and `-inf` on `-M`.

use std::fmt;

use crate::clamp::same_magnitude;
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, ExtendedRational, Magnitude};

/// An element of `[-M, M]` tagged with its magnitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmmValue {
    value: ExactScalar,
    magnitude: Magnitude,
}

impl AmmValue {
    pub fn new(value: ExactScalar, magnitude: Magnitude) -> Result<Self> {
        if value.abs() > *magnitude.value() {
            return Err(Error::Domain(format!(
                "value {value} outside [-{magnitude}, {magnitude}]"
            )));
        }
        Ok(AmmValue { value, magnitude })
    }

    pub fn zero(magnitude: Magnitude) -> Self {
        AmmValue {
            value: ExactScalar::zero(),
            magnitude,
        }
    }

    /// The top element `M`.
    pub fn top(magnitude: Magnitude) -> Self {
        AmmValue {
            value: magnitude.value().clone(),
            magnitude,
        }
    }

    /// The bottom element `-M`.
    pub fn bottom(magnitude: Magnitude) -> Self {
        AmmValue {
            value: -magnitude.value(),
            magnitude,
        }
    }

    pub fn value(&self) -> &ExactScalar {
        &self.value
    }

    pub fn magnitude(&self) -> &Magnitude {
        &self.magnitude
    }

    pub fn into_value(self) -> ExactScalar {
        self.value
    }

    /// Negation; the carrier is symmetric, so this never leaves it.
    pub fn neg(&self) -> AmmValue {
        AmmValue {
            value: -&self.value,
            magnitude: self.magnitude.clone(),
        }
    }
}

impl fmt::Display for AmmValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn clamp(value: ExactScalar, magnitude: &Magnitude) -> ExactScalar {
    let top = magnitude.value();
    if &value > top {
        top.clone()
    } else if value < -top {
        -top
    } else {
        value
    }
}

/// `a (+) b = t(a + b)` with `t` the clamp to `[-M, M]`.
pub fn amm_add(a: &AmmValue, b: &AmmValue) -> Result<AmmValue> {
    same_magnitude(&a.magnitude, &b.magnitude)?;
    Ok(AmmValue {
        value: clamp(&a.value + &b.value, &a.magnitude),
        magnitude: a.magnitude.clone(),
    })
}

/// `a (*) b = t(a * b)`.
pub fn amm_mul(a: &AmmValue, b: &AmmValue) -> Result<AmmValue> {
    same_magnitude(&a.magnitude, &b.magnitude)?;
    Ok(AmmValue {
        value: clamp(&a.value * &b.value, &a.magnitude),
        magnitude: a.magnitude.clone(),
    })
}

/// Coprojector `t` from the extended reals onto `[-M, M]`; total.
pub fn amm_coproject(x: &ExtendedRational, magnitude: &Magnitude) -> AmmValue {
    let value = match x {
        ExtendedRational::NegInf => -magnitude.value(),
        ExtendedRational::PosInf => magnitude.value().clone(),
        ExtendedRational::Finite(v) => clamp(v.clone(), magnitude),
    };
    AmmValue {
        value,
        magnitude: magnitude.clone(),
    }
}

/// Left-to-right fold under `(+)`: `(((a1 (+) a2) (+) a3) ...)`. The order
/// is part of the contract — addition here is not associative, so different
/// orders give different results.
pub fn amm_fold(terms: &[AmmValue]) -> Result<AmmValue> {
    let (first, rest) = terms.split_first().ok_or(Error::EmptySequence)?;
    let mut acc = first.clone();
    for term in rest {
        acc = amm_add(&acc, term)?;
    }
    Ok(acc)
}
