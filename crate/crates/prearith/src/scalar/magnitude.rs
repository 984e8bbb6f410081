//! Magnitude parameters for the bounded classes.
//!
//! The clamped classes require `M >= 1` so that both `0` and the
//! multiplicative identity `1` lie in the carrier. The arctan-generated
//! class only needs a positive interval length, but works on floats, so it
//! carries its own magnitude type.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::exact::ExactScalar;

/// Exact magnitude `M >= 1` for the clamped classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Magnitude(ExactScalar);

impl Magnitude {
    pub fn new(value: ExactScalar) -> Result<Self> {
        if value < ExactScalar::one() {
            return Err(Error::Domain(format!(
                "magnitude must be at least 1, got {value}"
            )));
        }
        Ok(Magnitude(value))
    }

    pub fn from_int(value: i64) -> Result<Self> {
        Magnitude::new(ExactScalar::from(value))
    }

    pub fn value(&self) -> &ExactScalar {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Float magnitude `M > 0` for the arctan-generated class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BmMagnitude(f64);

impl BmMagnitude {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::Domain(format!(
                "magnitude must be a positive finite number, got {value}"
            )));
        }
        Ok(BmMagnitude(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl fmt::Display for BmMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
