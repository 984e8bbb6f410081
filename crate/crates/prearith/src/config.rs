//! Shared run configuration: class selection, magnitudes, modes, formats.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{BmMagnitude, EvalMode, ExactScalar, Magnitude};

/// Default seed for randomized audits when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0;

/// The three arithmetic classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithClass {
    /// Clamped `[0, M]`.
    Am,
    /// Clamped `[-M, M]`.
    Amm,
    /// Arctan-generated `[0, M]`.
    Bm,
}

impl ArithClass {
    pub fn token(self) -> &'static str {
        match self {
            ArithClass::Am => "am",
            ArithClass::Amm => "amm",
            ArithClass::Bm => "bm",
        }
    }
}

impl fmt::Display for ArithClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ArithClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "am" => Ok(ArithClass::Am),
            "amm" => Ok(ArithClass::Amm),
            "bm" => Ok(ArithClass::Bm),
            other => Err(Error::Parse {
                offset: 0,
                expected: "am, amm, or bm".into(),
                found: other.to_string(),
            }),
        }
    }
}

impl FromStr for EvalMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "total" => Ok(EvalMode::Total),
            "strict" => Ok(EvalMode::Strict),
            other => Err(Error::Parse {
                offset: 0,
                expected: "total or strict".into(),
                found: other.to_string(),
            }),
        }
    }
}

/// Output rendering selected on the command line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    /// Human-readable lines.
    #[default]
    Text,
    /// One `key=value` record per line.
    Machine,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "machine" => Ok(OutputFormat::Machine),
            other => Err(Error::Parse {
                offset: 0,
                expected: "text or machine".into(),
                found: other.to_string(),
            }),
        }
    }
}

/// A class together with its (validated) magnitude.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassContext {
    Am(Magnitude),
    Amm(Magnitude),
    Bm(BmMagnitude),
}

impl ClassContext {
    /// Parses a magnitude string appropriate for the class: exact rational
    /// (at least 1) for the clamped classes, positive float for the arctan
    /// class.
    pub fn parse(class: ArithClass, magnitude: &str) -> Result<Self> {
        let value: ExactScalar = magnitude.parse()?;
        match class {
            ArithClass::Am => Ok(ClassContext::Am(Magnitude::new(value)?)),
            ArithClass::Amm => Ok(ClassContext::Amm(Magnitude::new(value)?)),
            ArithClass::Bm => Ok(ClassContext::Bm(BmMagnitude::new(value.to_f64())?)),
        }
    }

    pub fn class(&self) -> ArithClass {
        match self {
            ClassContext::Am(_) => ArithClass::Am,
            ClassContext::Amm(_) => ArithClass::Amm,
            ClassContext::Bm(_) => ArithClass::Bm,
        }
    }

    /// The magnitude as displayed in reports.
    pub fn magnitude_string(&self) -> String {
        match self {
            ClassContext::Am(m) | ClassContext::Amm(m) => m.to_string(),
            ClassContext::Bm(m) => m.to_string(),
        }
    }

    /// The magnitude as a float (exact for the arctan class).
    pub fn magnitude_f64(&self) -> f64 {
        match self {
            ClassContext::Am(m) | ClassContext::Amm(m) => m.to_f64(),
            ClassContext::Bm(m) => m.value(),
        }
    }
}

/// Everything an evaluation needs to know besides the input itself.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub context: ClassContext,
    pub mode: EvalMode,
    pub format: OutputFormat,
    pub seed: u64,
    /// Overrides the series term budget when set.
    pub max_terms: Option<usize>,
}

impl RunConfig {
    pub fn new(context: ClassContext) -> Self {
        RunConfig {
            context,
            mode: EvalMode::default(),
            format: OutputFormat::default(),
            seed: DEFAULT_SEED,
            max_terms: None,
        }
    }
}
