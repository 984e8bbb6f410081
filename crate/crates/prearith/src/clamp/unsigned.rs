//! The clamped class on `[0, M]`.
//!
//! Carrier `[0, M]` with `a (+) b = min(M, a + b)` and
//! `a (*) b = min(M, a * b)`, both exact on rationals. The class models
//! bounded perception and bounded machine arithmetic: once a sum reaches the
//! ceiling it stays there, so adding one grain to a heap of `M` grains gives
//! back `M`.
//!
//! Clamped addition keeps associativity, commutativity, identity `0`, and
//! monotonicity. Clamped multiplication keeps commutativity, identity `1`,
//! and annihilator `0`, but associativity and distributivity fail whenever
//! an intermediate product clamps on one side only; see the law-audit module
//! for machine-checked counterexamples.
//!
//! The coprojector `h(x) = min(M, x)` maps the nonnegative extended reals
//! onto the carrier; it is the bridge from ordinary series values to clamped
//! ones.

use std::fmt;

use crate::clamp::same_magnitude;
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, ExtendedRational, Magnitude};

/// An element of `[0, M]` tagged with its magnitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmValue {
    value: ExactScalar,
    magnitude: Magnitude,
}

impl AmValue {
    pub fn new(value: ExactScalar, magnitude: Magnitude) -> Result<Self> {
        if value.is_negative() || &value > magnitude.value() {
            return Err(Error::Domain(format!(
                "value {value} outside [0, {magnitude}]"
            )));
        }
        Ok(AmValue { value, magnitude })
    }

    pub fn zero(magnitude: Magnitude) -> Self {
        AmValue {
            value: ExactScalar::zero(),
            magnitude,
        }
    }

    /// The top element `M`.
    pub fn top(magnitude: Magnitude) -> Self {
        AmValue {
            value: magnitude.value().clone(),
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
}

impl fmt::Display for AmValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `a (+) b = min(M, a + b)`.
pub fn am_add(a: &AmValue, b: &AmValue) -> Result<AmValue> {
    same_magnitude(&a.magnitude, &b.magnitude)?;
    let sum = &a.value + &b.value;
    Ok(AmValue {
        value: sum.min(a.magnitude.value().clone()),
        magnitude: a.magnitude.clone(),
    })
}

/// `a (*) b = min(M, a * b)`.
pub fn am_mul(a: &AmValue, b: &AmValue) -> Result<AmValue> {
    same_magnitude(&a.magnitude, &b.magnitude)?;
    let product = &a.value * &b.value;
    Ok(AmValue {
        value: product.min(a.magnitude.value().clone()),
        magnitude: a.magnitude.clone(),
    })
}

/// Coprojector `h(x) = min(M, x)` from the nonnegative extended reals onto
/// `[0, M]`. `+inf` lands on `M`; negative inputs (including `-inf`) are
/// outside the domain.
pub fn am_coproject(x: &ExtendedRational, magnitude: &Magnitude) -> Result<AmValue> {
    if x.is_negative() {
        return Err(Error::NegativeInput {
            value: x.to_string(),
        });
    }
    let value = match x {
        ExtendedRational::PosInf => magnitude.value().clone(),
        ExtendedRational::Finite(v) => v.clone().min(magnitude.value().clone()),
        ExtendedRational::NegInf => unreachable!("negative input rejected above"),
    };
    Ok(AmValue {
        value,
        magnitude: magnitude.clone(),
    })
}
