//! Extended real line with explicit conventions for indeterminate forms.
//!
//! The arctan-generated class evaluates its operations on the two-point
//! compactification of the reals, so `inf + -inf` and `inf * 0` genuinely
//! arise (for instance when the operands map to the endpoints of the
//! interval). Two conventions make the operations total:
//!
//! * `inf + -inf  = inf`  — addition is dominated by `+inf`, which is what
//!   makes the top element absorbing for the projected addition;
//! * `(+-inf) * 0 = 0`    — the measure-theoretic convention; it keeps
//!   multiplication on the extended line commutative and associative.
//!
//! Under [`EvalMode::Strict`] both forms are reported as
//! [`Error::IndeterminateForm`] instead.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::exact::ExtendedRational;

/// A real number or one of the two infinities. `Finite` payloads are always
/// finite, never NaN, and negative zero is canonicalized to positive zero so
/// that equality is unambiguous.
#[derive(Clone, Copy, Debug)]
pub enum ExtendedReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtendedReal {
    /// Classifies a float. `+-inf` become the corresponding tags; `-0.0`
    /// becomes `0.0`. Panics on NaN, which no operation in this crate
    /// produces.
    pub fn from_f64(value: f64) -> Self {
        assert!(!value.is_nan(), "NaN has no extended-real value");
        if value == f64::INFINITY {
            ExtendedReal::PosInf
        } else if value == f64::NEG_INFINITY {
            ExtendedReal::NegInf
        } else {
            ExtendedReal::Finite(value + 0.0)
        }
    }

    pub fn to_f64(self) -> f64 {
        match self {
            ExtendedReal::NegInf => f64::NEG_INFINITY,
            ExtendedReal::Finite(v) => v,
            ExtendedReal::PosInf => f64::INFINITY,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    fn rank(self) -> u8 {
        match self {
            ExtendedReal::NegInf => 0,
            ExtendedReal::Finite(_) => 1,
            ExtendedReal::PosInf => 2,
        }
    }
}

impl From<ExtendedRational> for ExtendedReal {
    fn from(v: ExtendedRational) -> Self {
        match v {
            ExtendedRational::NegInf => ExtendedReal::NegInf,
            ExtendedRational::Finite(x) => ExtendedReal::from_f64(x.to_f64()),
            ExtendedRational::PosInf => ExtendedReal::PosInf,
        }
    }
}

impl PartialEq for ExtendedReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExtendedReal {}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => {
                a.partial_cmp(b).expect("Finite is never NaN")
            }
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => write!(f, "-inf"),
            ExtendedReal::Finite(v) => write!(f, "{v}"),
            ExtendedReal::PosInf => write!(f, "inf"),
        }
    }
}

/// How indeterminate forms are handled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EvalMode {
    /// Apply the conventions above; every operation is total.
    #[default]
    Total,
    /// Report `inf + -inf` and `inf * 0` as errors.
    Strict,
}

/// Extended-real addition. Total mode never fails.
pub fn ext_add(a: ExtendedReal, b: ExtendedReal, mode: EvalMode) -> Result<ExtendedReal> {
    use ExtendedReal::*;
    match (a, b) {
        (Finite(x), Finite(y)) => Ok(ExtendedReal::from_f64(x + y)),
        (PosInf, NegInf) | (NegInf, PosInf) => match mode {
            EvalMode::Total => Ok(PosInf),
            EvalMode::Strict => Err(Error::IndeterminateForm("inf + -inf")),
        },
        (PosInf, _) | (_, PosInf) => Ok(PosInf),
        (NegInf, _) | (_, NegInf) => Ok(NegInf),
    }
}

/// Extended-real multiplication. Total mode never fails.
pub fn ext_mul(a: ExtendedReal, b: ExtendedReal, mode: EvalMode) -> Result<ExtendedReal> {
    use ExtendedReal::*;
    let inf_signed = |positive: bool| if positive { PosInf } else { NegInf };
    match (a, b) {
        (Finite(x), Finite(y)) => Ok(ExtendedReal::from_f64(x * y)),
        (Finite(x), inf) | (inf, Finite(x)) => {
            if x == 0.0 {
                match mode {
                    EvalMode::Total => Ok(Finite(0.0)),
                    EvalMode::Strict => Err(Error::IndeterminateForm("inf * 0")),
                }
            } else {
                Ok(inf_signed((inf == PosInf) == (x > 0.0)))
            }
        }
        (PosInf, PosInf) | (NegInf, NegInf) => Ok(PosInf),
        (PosInf, NegInf) | (NegInf, PosInf) => Ok(NegInf),
    }
}
