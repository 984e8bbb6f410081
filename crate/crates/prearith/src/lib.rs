//! Saturating and projective arithmetic over bounded carriers.
//!
//! This crate implements three families of "arithmetic with a largest
//! number": operations that look like `+` and `*` but whose results are
//! forced back into a bounded carrier, so that familiar identities hold
//! only until a bound is hit.
//!
//! * [`clamp::AmValue`] — the carrier `[0, M]` with `a (+) b = min(M, a+b)`
//!   and `a (*) b = min(M, ab)`, over exact rationals.
//! * [`clamp::AmmValue`] — the signed carrier `[-M, M]`, clamping on both
//!   sides; addition is no longer associative, so evaluation order is part
//!   of every contract ([`clamp::amm_fold`]).
//! * [`projective::BmValue`] — the carrier `[0, M]` reached through
//!   `f(x) = M(atan(x)/pi + 1/2)`, a bijection from the extended reals;
//!   `0` and `M` are genuine images of `-inf` and `+inf`.
//!
//! On top of the scalar classes sit a series-projection engine
//! ([`series`]), a randomized law-audit harness ([`laws`]), a greedy
//! base-`x` expansion ([`clamp::greedy_expansion`]), a tiny expression
//! language ([`expr`]), and narrated demos ([`demo`]).
//!
//! The exact classes are built on arbitrary-precision rationals: when an
//! audit reports that associativity failed, the failure is the clamp's,
//! never the representation's. The arctan class is `f64`-based with
//! documented tolerances.
//!
//! # Where to start
//!
//! The `examples/` directory is the front door; each example is a small
//! narrated program:
//!
//! * `heap_paradox` — a million grains plus one make a million grains.
//! * `clamped_basics` — `[0, M]` operations and the laws they keep/lose.
//! * `signed_order_matters` — why `[-M, M]` sums must declare their order.
//! * `arctan_projective` — the bijective projection and its endpoints.
//! * `series_projection` — divergent series made summable by projection.
//! * `law_audit` — the audit harness and counterexample search.
//! * `greedy_expansion` — approximating reals with clamped powers.
//! * `expressions` — the expression language across all three classes.
//!
//! A thin CLI (`prearith`) exposes the same capabilities as subcommands
//! (`eval`, `series`, `laws`, `expand`, `demo`).

pub mod clamp;
pub mod config;
pub mod demo;
pub mod error;
pub mod expr;
pub mod laws;
pub mod projective;
pub mod report;
pub mod scalar;
pub mod series;

pub use clamp::{
    am_add, am_coproject, am_mul, amm_add, amm_coproject, amm_fold, amm_mul,
    greedy_expansion, AmValue, AmmValue, ExpansionResult,
};
pub use config::{ArithClass, ClassContext, OutputFormat, RunConfig, DEFAULT_SEED};
pub use demo::{run_demo, Demo, DemoReport};
pub use error::{Error, Result};
pub use expr::{eval_expression, EvalOutcome, Expr};
pub use laws::{audit_laws, find_counterexample, Law, LawReport, Violation};
pub use projective::{bm_add, bm_forward, bm_inverse, bm_mul, BmValue};
pub use scalar::{
    ext_add, ext_mul, BmMagnitude, EvalMode, ExactScalar, ExtendedRational,
    ExtendedReal, Magnitude,
};
pub use series::{
    classify_series, classify_stream, project_series_am, project_series_amm,
    project_series_bm, split_identity_check, ConvergenceClass, Limit, SeriesKind,
    SeriesProjection, SeriesSpec, Verdict,
};
