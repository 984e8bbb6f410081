//! Randomized plus exhaustive-grid audits of algebraic laws.
//!
//! Each audit checks a law over a fixed grid (`{0, M/8, ..., M}`, extended
//! with the negated points for the signed class) and a seeded batch of
//! random samples, and reports every violating tuple. Violations are not
//! exceptions here: half the point of these classes is that familiar laws
//! *fail* once values clamp, and the audit is the machine-checked record of
//! where.
//!
//! The identity laws are stated through each class' representation of the
//! real numbers 0 and 1: `identity-0` checks the image of 0 (literal `0`
//! for the clamped classes, `M/2` for the arctan class), `identity-1` the
//! image of 1 (`1`, respectively `3M/4`), and `annihilator-0` the image of
//! 0 as a multiplicative annihilator. `absorbing-M` checks that `M`
//! absorbs addition; on `[-M, M]` it is restricted to nonnegative operands.
//! `order-compat` checks that both operations respect `a <= b` in each
//! argument; premise-failing tuples pass vacuously.
//!
//! Clamped classes compare exactly; the arctan class compares within
//! [`BM_AUDIT_REL_TOL`] relative to `M`, and its random samples stay in
//! `[0.01 M, 0.99 M]` (the grid still exercises the endpoints).

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clamp::{am_add, am_mul, amm_add, amm_mul, AmValue, AmmValue};
use crate::config::{ArithClass, ClassContext};
use crate::error::{Error, Result};
use crate::projective::{bm_add, bm_forward, bm_mul, BmValue};
use crate::scalar::{BmMagnitude, EvalMode, ExactScalar, ExtendedReal, Magnitude};

/// Relative tolerance (times `M`) for float comparisons in arctan-class
/// audits.
pub const BM_AUDIT_REL_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    AddAssoc,
    MulAssoc,
    AddComm,
    MulComm,
    LeftDistrib,
    RightDistrib,
    IdentityZero,
    IdentityOne,
    AnnihilatorZero,
    AbsorbingTop,
    OrderCompat,
    /// Signed class only: negation stays in the carrier and cancels.
    NegClosure,
}

impl Law {
    pub fn all() -> [Law; 12] {
        use Law::*;
        [
            AddAssoc,
            MulAssoc,
            AddComm,
            MulComm,
            LeftDistrib,
            RightDistrib,
            IdentityZero,
            IdentityOne,
            AnnihilatorZero,
            AbsorbingTop,
            OrderCompat,
            NegClosure,
        ]
    }

    pub fn token(self) -> &'static str {
        match self {
            Law::AddAssoc => "add-assoc",
            Law::MulAssoc => "mul-assoc",
            Law::AddComm => "add-comm",
            Law::MulComm => "mul-comm",
            Law::LeftDistrib => "left-distrib",
            Law::RightDistrib => "right-distrib",
            Law::IdentityZero => "identity-0",
            Law::IdentityOne => "identity-1",
            Law::AnnihilatorZero => "annihilator-0",
            Law::AbsorbingTop => "absorbing-M",
            Law::OrderCompat => "order-compat",
            Law::NegClosure => "neg-closure",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Law::AddAssoc | Law::MulAssoc | Law::LeftDistrib | Law::RightDistrib
            | Law::OrderCompat => 3,
            Law::AddComm | Law::MulComm => 2,
            Law::IdentityZero | Law::IdentityOne | Law::AnnihilatorZero
            | Law::AbsorbingTop | Law::NegClosure => 1,
        }
    }

    pub fn is_supported(self, class: ArithClass) -> bool {
        match self {
            Law::NegClosure => class == ArithClass::Amm,
            _ => true,
        }
    }

    /// All laws defined for a class.
    pub fn supported(class: ArithClass) -> Vec<Law> {
        Law::all()
            .into_iter()
            .filter(|law| law.is_supported(class))
            .collect()
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::all()
            .into_iter()
            .find(|law| law.token() == s)
            .ok_or_else(|| Error::Parse {
                offset: 0,
                expected: "a law name (add-assoc, mul-assoc, ...)".into(),
                found: s.to_string(),
            })
    }
}

/// A tuple on which a law failed, with both mismatching sides rendered in
/// the class' display form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}): lhs={} rhs={}",
            self.inputs.join(", "),
            self.lhs,
            self.rhs
        )
    }
}

/// Audit outcome for one law. Violations are sorted lexicographically by
/// input tuple and deduplicated.
#[derive(Clone, Debug, PartialEq)]
pub struct LawReport {
    pub class: ArithClass,
    pub magnitude: String,
    pub law: Law,
    pub samples_checked: usize,
    pub violations: Vec<Violation>,
    pub seed: u64,
}

impl LawReport {
    pub fn held(&self) -> bool {
        self.violations.is_empty()
    }

    /// One human-readable line.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} M={} {}: {} ({} samples, seed {})",
            self.class, self.magnitude, self.law,
            if self.held() { "held" } else { "violated" },
            self.samples_checked, self.seed,
        );
        if let Some(first) = self.violations.first() {
            line.push_str(&format!(
                "; {} violations, first {first}",
                self.violations.len()
            ));
        }
        line
    }
}

/// The audit grid: `{0, M/8, ..., M}`, plus the negated points for the
/// signed class. Points are exact rationals in every class (the arctan
/// magnitude is a float, hence exactly representable).
pub fn default_grid(ctx: &ClassContext) -> Vec<ExactScalar> {
    let m = match ctx {
        ClassContext::Am(m) | ClassContext::Amm(m) => m.value().clone(),
        ClassContext::Bm(m) => {
            ExactScalar::from_f64_exact(m.value()).expect("magnitude is finite")
        }
    };
    let eighth = &m / ExactScalar::from(8);
    let mut grid: Vec<ExactScalar> = (0..=8)
        .map(|i| &eighth * ExactScalar::from(i))
        .collect();
    if matches!(ctx, ClassContext::Amm(_)) {
        let negatives: Vec<ExactScalar> = grid.iter().skip(1).map(|v| -v).collect();
        grid.extend(negatives);
        grid.sort();
    }
    grid
}

/// Audits `laws` over the default grid plus `budget` seeded random tuples
/// per law, returning one report per law in the order requested.
///
/// Reports are deterministic in `(ctx, laws, budget, seed)`; the random
/// stream is derived from the law identity, so adding or removing laws
/// from the set does not change the samples of the others.
pub fn audit_laws(
    ctx: &ClassContext,
    laws: &[Law],
    budget: usize,
    seed: u64,
) -> Result<Vec<LawReport>> {
    for law in laws {
        if !law.is_supported(ctx.class()) {
            return Err(Error::UnsupportedLaw {
                law: law.token().into(),
                class: ctx.class().to_string(),
            });
        }
    }
    let grid = default_grid(ctx);
    laws.iter()
        .map(|&law| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(law as u64);
            let mut samples = 0usize;
            let mut found: Vec<(Vec<ExactScalar>, Violation)> = Vec::new();
            let mut run = |tuple: Vec<ExactScalar>| {
                samples += 1;
                if let Some(violation) = check(ctx, law, &tuple) {
                    found.push((tuple, violation));
                }
            };
            for tuple in grid_tuples(&grid, law.arity()) {
                run(tuple);
            }
            for _ in 0..budget {
                run(sample_tuple(ctx, law.arity(), &mut rng));
            }
            found.sort_by(|a, b| a.0.cmp(&b.0));
            found.dedup_by(|a, b| a.0 == b.0);
            Ok(LawReport {
                class: ctx.class(),
                magnitude: ctx.magnitude_string(),
                law,
                samples_checked: samples,
                violations: found.into_iter().map(|(_, v)| v).collect(),
                seed,
            })
        })
        .collect()
}

/// Returns the lexicographically smallest violating tuple over the given
/// grid points, or `None` if the law holds everywhere on the grid (or is
/// not defined for the class).
pub fn find_counterexample(
    ctx: &ClassContext,
    law: Law,
    grid: &[ExactScalar],
) -> Option<Violation> {
    if !law.is_supported(ctx.class()) {
        return None;
    }
    let mut points = grid.to_vec();
    points.sort();
    points.dedup();
    grid_tuples(&points, law.arity())
        .into_iter()
        .find_map(|tuple| check(ctx, law, &tuple))
}

fn grid_tuples(points: &[ExactScalar], arity: usize) -> Vec<Vec<ExactScalar>> {
    let mut tuples = Vec::new();
    match arity {
        1 => {
            for a in points {
                tuples.push(vec![a.clone()]);
            }
        }
        2 => {
            for a in points {
                for b in points {
                    tuples.push(vec![a.clone(), b.clone()]);
                }
            }
        }
        3 => {
            for a in points {
                for b in points {
                    for c in points {
                        tuples.push(vec![a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
        }
        n => unreachable!("no law has arity {n}"),
    }
    tuples
}

fn sample_tuple(ctx: &ClassContext, arity: usize, rng: &mut ChaCha8Rng) -> Vec<ExactScalar> {
    (0..arity).map(|_| sample_value(ctx, rng)).collect()
}

fn sample_value(ctx: &ClassContext, rng: &mut ChaCha8Rng) -> ExactScalar {
    match ctx {
        ClassContext::Am(m) => sample_rational(m, false, rng),
        ClassContext::Amm(m) => sample_rational(m, true, rng),
        ClassContext::Bm(m) => {
            let v = rng.random_range(0.01 * m.value()..=0.99 * m.value());
            ExactScalar::from_f64_exact(v).expect("sample is finite")
        }
    }
}

/// Random rational in `[0, M]` (or `[-M, M]` when `signed`) with
/// denominator up to 64. Uniformity is per-denominator, which is plenty
/// for an audit.
fn sample_rational(m: &Magnitude, signed: bool, rng: &mut ChaCha8Rng) -> ExactScalar {
    let den: i64 = rng.random_range(1..=64);
    let bound = (m.value() * ExactScalar::from(den)).floor_bigint();
    let bound = u128::try_from(bound).unwrap_or(u128::MAX);
    let num = rng.random_range(0..=bound);
    let value = ExactScalar::from_bigint(num.into()) / ExactScalar::from(den);
    if signed && rng.random_bool(0.5) {
        -value
    } else {
        value
    }
}

fn check(ctx: &ClassContext, law: Law, tuple: &[ExactScalar]) -> Option<Violation> {
    match ctx {
        ClassContext::Am(m) => check_am(law, tuple, m),
        ClassContext::Amm(m) => check_amm(law, tuple, m),
        ClassContext::Bm(m) => check_bm(law, tuple, *m),
    }
}

fn check_am(law: Law, tuple: &[ExactScalar], m: &Magnitude) -> Option<Violation> {
    let val = |x: &ExactScalar| {
        AmValue::new(x.clone(), m.clone()).expect("audit points lie in the carrier")
    };
    let add = |a: &AmValue, b: &AmValue| am_add(a, b).expect("uniform magnitude");
    let mul = |a: &AmValue, b: &AmValue| am_mul(a, b).expect("uniform magnitude");
    let viol = |lhs: &AmValue, rhs: &AmValue| {
        Some(Violation {
            inputs: tuple.iter().map(ExactScalar::to_string).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    };
    let neq = |lhs: &AmValue, rhs: &AmValue| {
        if lhs != rhs {
            viol(lhs, rhs)
        } else {
            None
        }
    };

    match law {
        Law::AddAssoc => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&add(&add(&a, &b), &c), &add(&a, &add(&b, &c)))
        }
        Law::MulAssoc => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&mul(&a, &b), &c), &mul(&a, &mul(&b, &c)))
        }
        Law::AddComm => {
            let (a, b) = (val(&tuple[0]), val(&tuple[1]));
            neq(&add(&a, &b), &add(&b, &a))
        }
        Law::MulComm => {
            let (a, b) = (val(&tuple[0]), val(&tuple[1]));
            neq(&mul(&a, &b), &mul(&b, &a))
        }
        Law::LeftDistrib => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&a, &add(&b, &c)), &add(&mul(&a, &b), &mul(&a, &c)))
        }
        Law::RightDistrib => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&add(&a, &b), &c), &add(&mul(&a, &c), &mul(&b, &c)))
        }
        Law::IdentityZero => {
            let a = val(&tuple[0]);
            let zero = AmValue::zero(m.clone());
            neq(&add(&a, &zero), &a).or_else(|| neq(&add(&zero, &a), &a))
        }
        Law::IdentityOne => {
            let a = val(&tuple[0]);
            let one = val(&ExactScalar::one());
            neq(&mul(&a, &one), &a).or_else(|| neq(&mul(&one, &a), &a))
        }
        Law::AnnihilatorZero => {
            let a = val(&tuple[0]);
            let zero = AmValue::zero(m.clone());
            neq(&mul(&a, &zero), &zero).or_else(|| neq(&mul(&zero, &a), &zero))
        }
        Law::AbsorbingTop => {
            let a = val(&tuple[0]);
            let top = AmValue::top(m.clone());
            neq(&add(&top, &a), &top).or_else(|| neq(&add(&a, &top), &top))
        }
        Law::OrderCompat => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            if a.value() > b.value() {
                return None; // premise a <= b unsatisfied
            }
            let (la, lb) = (add(&a, &c), add(&b, &c));
            if la.value() > lb.value() {
                return viol(&la, &lb);
            }
            let (la, lb) = (mul(&a, &c), mul(&b, &c));
            if la.value() > lb.value() {
                return viol(&la, &lb);
            }
            None
        }
        Law::NegClosure => None, // not defined for this class
    }
}

fn check_amm(law: Law, tuple: &[ExactScalar], m: &Magnitude) -> Option<Violation> {
    let val = |x: &ExactScalar| {
        AmmValue::new(x.clone(), m.clone()).expect("audit points lie in the carrier")
    };
    let add = |a: &AmmValue, b: &AmmValue| amm_add(a, b).expect("uniform magnitude");
    let mul = |a: &AmmValue, b: &AmmValue| amm_mul(a, b).expect("uniform magnitude");
    let viol = |lhs: &AmmValue, rhs: &AmmValue| {
        Some(Violation {
            inputs: tuple.iter().map(ExactScalar::to_string).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    };
    let neq = |lhs: &AmmValue, rhs: &AmmValue| {
        if lhs != rhs {
            viol(lhs, rhs)
        } else {
            None
        }
    };

    match law {
        Law::AddAssoc => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&add(&add(&a, &b), &c), &add(&a, &add(&b, &c)))
        }
        Law::MulAssoc => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&mul(&a, &b), &c), &mul(&a, &mul(&b, &c)))
        }
        Law::AddComm => {
            let (a, b) = (val(&tuple[0]), val(&tuple[1]));
            neq(&add(&a, &b), &add(&b, &a))
        }
        Law::MulComm => {
            let (a, b) = (val(&tuple[0]), val(&tuple[1]));
            neq(&mul(&a, &b), &mul(&b, &a))
        }
        Law::LeftDistrib => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&a, &add(&b, &c)), &add(&mul(&a, &b), &mul(&a, &c)))
        }
        Law::RightDistrib => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&add(&a, &b), &c), &add(&mul(&a, &c), &mul(&b, &c)))
        }
        Law::IdentityZero => {
            let a = val(&tuple[0]);
            let zero = AmmValue::zero(m.clone());
            neq(&add(&a, &zero), &a).or_else(|| neq(&add(&zero, &a), &a))
        }
        Law::IdentityOne => {
            let a = val(&tuple[0]);
            let one = val(&ExactScalar::one());
            neq(&mul(&a, &one), &a).or_else(|| neq(&mul(&one, &a), &a))
        }
        Law::AnnihilatorZero => {
            let a = val(&tuple[0]);
            let zero = AmmValue::zero(m.clone());
            neq(&mul(&a, &zero), &zero).or_else(|| neq(&mul(&zero, &a), &zero))
        }
        Law::AbsorbingTop => {
            let a = val(&tuple[0]);
            if a.value().is_negative() {
                return None; // absorption is only claimed for a >= 0
            }
            let top = AmmValue::top(m.clone());
            neq(&add(&top, &a), &top).or_else(|| neq(&add(&a, &top), &top))
        }
        Law::OrderCompat => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            if a.value() > b.value() {
                return None;
            }
            let (la, lb) = (add(&a, &c), add(&b, &c));
            if la.value() > lb.value() {
                return viol(&la, &lb);
            }
            let (la, lb) = (mul(&a, &c), mul(&b, &c));
            if la.value() > lb.value() {
                return viol(&la, &lb);
            }
            None
        }
        Law::NegClosure => {
            let a = val(&tuple[0]);
            let zero = AmmValue::zero(m.clone());
            neq(&add(&a, &a.neg()), &zero)
        }
    }
}

fn check_bm(law: Law, tuple: &[ExactScalar], m: BmMagnitude) -> Option<Violation> {
    let val = |x: &ExactScalar| {
        BmValue::new(x.to_f64(), m).expect("audit points lie in the carrier")
    };
    let add = |a: &BmValue, b: &BmValue| {
        bm_add(a, b, EvalMode::Total).expect("total mode never fails")
    };
    let mul = |a: &BmValue, b: &BmValue| {
        bm_mul(a, b, EvalMode::Total).expect("total mode never fails")
    };
    let viol = |lhs: &BmValue, rhs: &BmValue| {
        Some(Violation {
            inputs: tuple.iter().map(|x| x.to_f64().to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    };
    let tol = BM_AUDIT_REL_TOL * m.value();
    let neq = |lhs: &BmValue, rhs: &BmValue| {
        if (lhs.value() - rhs.value()).abs() > tol {
            viol(lhs, rhs)
        } else {
            None
        }
    };

    match law {
        Law::AddAssoc => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&add(&add(&a, &b), &c), &add(&a, &add(&b, &c)))
        }
        Law::MulAssoc => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&mul(&a, &b), &c), &mul(&a, &mul(&b, &c)))
        }
        Law::AddComm => {
            let (a, b) = (val(&tuple[0]), val(&tuple[1]));
            neq(&add(&a, &b), &add(&b, &a))
        }
        Law::MulComm => {
            let (a, b) = (val(&tuple[0]), val(&tuple[1]));
            neq(&mul(&a, &b), &mul(&b, &a))
        }
        Law::LeftDistrib => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&a, &add(&b, &c)), &add(&mul(&a, &b), &mul(&a, &c)))
        }
        Law::RightDistrib => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            neq(&mul(&add(&a, &b), &c), &add(&mul(&a, &c), &mul(&b, &c)))
        }
        Law::IdentityZero => {
            let a = val(&tuple[0]);
            let zero = bm_forward(ExtendedReal::Finite(0.0), m); // M/2
            neq(&add(&a, &zero), &a).or_else(|| neq(&add(&zero, &a), &a))
        }
        Law::IdentityOne => {
            let a = val(&tuple[0]);
            let one = bm_forward(ExtendedReal::Finite(1.0), m); // 3M/4
            neq(&mul(&a, &one), &a).or_else(|| neq(&mul(&one, &a), &a))
        }
        Law::AnnihilatorZero => {
            let a = val(&tuple[0]);
            let zero = bm_forward(ExtendedReal::Finite(0.0), m);
            neq(&mul(&a, &zero), &zero).or_else(|| neq(&mul(&zero, &a), &zero))
        }
        Law::AbsorbingTop => {
            let a = val(&tuple[0]);
            let top = BmValue::top(m);
            neq(&add(&top, &a), &top).or_else(|| neq(&add(&a, &top), &top))
        }
        Law::OrderCompat => {
            let (a, b, c) = (val(&tuple[0]), val(&tuple[1]), val(&tuple[2]));
            if a.value() > b.value() {
                return None;
            }
            let (la, lb) = (add(&a, &c), add(&b, &c));
            if la.value() > lb.value() + tol {
                return viol(&la, &lb);
            }
            let (la, lb) = (mul(&a, &c), mul(&b, &c));
            if la.value() > lb.value() + tol {
                return viol(&la, &lb);
            }
            None
        }
        Law::NegClosure => None,
    }
}
