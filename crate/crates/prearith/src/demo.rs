//! Narrated demonstrations of bounded arithmetic resolving old puzzles.
//!
//! Each demo picks a magnitude, evaluates one or two operations, and
//! explains what the saturating result models. They exist so the ideas
//! can be shown, not just tested; the equations they print are computed,
//! never hard-coded.

use std::fmt;
use std::str::FromStr;

use crate::clamp::{am_add, AmValue};
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Magnitude};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Demo {
    /// A heap of a million grains stays the same heap when one grain lands.
    Sorites,
    /// Saturating integer addition at `i32::MAX`, as hardware does it.
    MachineInfinity,
    /// One raindrop plus one raindrop: a single, larger raindrop.
    Raindrop,
    /// One lion plus one rabbit: one (well-fed) lion.
    LionRabbit,
}

impl Demo {
    pub fn all() -> [Demo; 4] {
        [Demo::Sorites, Demo::MachineInfinity, Demo::Raindrop, Demo::LionRabbit]
    }

    pub fn token(self) -> &'static str {
        match self {
            Demo::Sorites => "sorites",
            Demo::MachineInfinity => "machine-infinity",
            Demo::Raindrop => "raindrop",
            Demo::LionRabbit => "lion-rabbit",
        }
    }
}

impl fmt::Display for Demo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Demo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Demo::all()
            .into_iter()
            .find(|demo| demo.token() == s)
            .ok_or_else(|| Error::UnknownDemo(s.to_string()))
    }
}

/// A computed demo: the headline equation plus the story around it.
#[derive(Clone, Debug, PartialEq)]
pub struct DemoReport {
    pub demo: Demo,
    pub magnitude: String,
    /// `"a (+) b = c"` with every number computed in the class.
    pub equation: String,
    pub narrative: Vec<String>,
}

fn saturating_sum(a: i64, b: i64, m: i64) -> Result<(AmValue, String)> {
    let m = Magnitude::from_int(m)?;
    let a = AmValue::new(ExactScalar::from(a), m.clone())?;
    let b = AmValue::new(ExactScalar::from(b), m)?;
    let sum = am_add(&a, &b)?;
    let equation = format!("{a} (+) {b} = {sum}");
    Ok((sum, equation))
}

pub fn run_demo(demo: Demo) -> Result<DemoReport> {
    match demo {
        Demo::Sorites => {
            let heap = 1_000_000;
            let (sum, equation) = saturating_sum(heap, 1, heap)?;
            Ok(DemoReport {
                demo,
                magnitude: heap.to_string(),
                equation,
                narrative: vec![
                    format!(
                        "Call {heap} grains of sand a heap, and take M = {heap}: \
                         once something is a heap, counting higher adds nothing."
                    ),
                    "Adding one grain saturates instead of counting past the bound:"
                        .into(),
                    format!(
                        "the sum is {sum}, the heap it already was. No induction up \
                         the integers, so the one-grain-at-a-time argument never starts."
                    ),
                ],
            })
        }
        Demo::MachineInfinity => {
            let top = i32::MAX as i64;
            let (sum, equation) = saturating_sum(top, 1, top)?;
            Ok(DemoReport {
                demo,
                magnitude: top.to_string(),
                equation,
                narrative: vec![
                    format!(
                        "A 32-bit register cannot represent anything past {top}; \
                         saturating arithmetic treats that ceiling as M."
                    ),
                    format!(
                        "So {top} + 1 stays {sum} instead of wrapping around to a \
                         negative number - the bound behaves like a machine infinity."
                    ),
                ],
            })
        }
        Demo::Raindrop => {
            let (sum, equation) = saturating_sum(1, 1, 1)?;
            Ok(DemoReport {
                demo,
                magnitude: "1".into(),
                equation,
                narrative: vec![
                    "Two raindrops that meet on a window merge into one drop.".into(),
                    format!(
                        "With M = 1, one plus one is {sum}: the count of drops, \
                         not the amount of water, and the arithmetic says so directly."
                    ),
                ],
            })
        }
        Demo::LionRabbit => {
            let (sum, equation) = saturating_sum(1, 1, 1)?;
            Ok(DemoReport {
                demo,
                magnitude: "1".into(),
                equation,
                narrative: vec![
                    "Put one lion and one rabbit in a cage and come back later."
                        .into(),
                    format!(
                        "You find {sum} animal: with M = 1 the sum saturates, which \
                         is exactly what happened to the rabbit."
                    ),
                ],
            })
        }
    }
}
