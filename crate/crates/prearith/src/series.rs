//! Series classification and projection into the bounded classes.
//!
//! A series is described by a [`SeriesSpec`]: a built-in family (geometric,
//! harmonic, alternating harmonic, p-series, Grandi), an explicit term
//! list, or a term list with a caller-declared classification. Built-in
//! families carry analytic classifications, exact where the value is
//! rational, so projections of known series never depend on numerics. For
//! raw float term streams there is [`classify_stream`], a windowed
//! heuristic over partial sums; it is honest about its limits (it reports
//! [`Verdict::Unknown`] for series like the harmonic one that diverge too
//! slowly to detect numerically).
//!
//! Projection sends the sequence of partial sums through a class'
//! coprojector and asks whether the projected sequence converges:
//!
//! * `[0, M]`: a nonnegative series always has a limit `L` in `[0, +inf]`,
//!   and the projected sums converge to `min(M, L)`.
//! * `[-M, M]`: the projected sums converge to `M` when the partial sums'
//!   liminf is at least `M`, to `-M` when their limsup is at most `-M`, and
//!   to the limit when one exists strictly inside; otherwise they do not
//!   converge.
//! * arctan class: the generator is a homeomorphism of the extended line
//!   onto `[0, M]`, so projected sums converge exactly when the series
//!   converges in the extended reals (divergence to `+-inf` included,
//!   landing on the endpoints).
//!
//! Projection is order-sensitive: these classes are not associative, so
//! reordering or pre-summing segments of a series can change the projected
//! value. Operations here always consume terms in the order given.

use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use crate::clamp::{am_add, am_coproject, amm_coproject, AmValue, AmmValue};
use crate::error::{Error, Result};
use crate::projective::{bm_forward, BmValue};
use crate::scalar::{parse_exact, BmMagnitude, ExactScalar, ExtendedRational, ExtendedReal, Magnitude};

pub const DEFAULT_MAX_TERMS: usize = 1_000_000;
pub const DEFAULT_WINDOW: usize = 1_000;
pub const DEFAULT_REL_EPSILON: f64 = 1e-9;
pub const DEFAULT_DIVERGENCE_THRESHOLD: f64 = 1e12;

/// Limit of a convergent series: exact rational when available, otherwise
/// a float estimate.
#[derive(Clone, Debug, PartialEq)]
pub enum Limit {
    Exact(ExactScalar),
    Approx(f64),
}

impl Limit {
    pub fn to_f64(&self) -> f64 {
        match self {
            Limit::Exact(v) => v.to_f64(),
            Limit::Approx(x) => *x,
        }
    }

    /// Exact rational representation: the value itself, or the exact value
    /// of the float estimate.
    pub fn to_exact(&self) -> ExactScalar {
        match self {
            Limit::Exact(v) => v.clone(),
            Limit::Approx(x) => {
                ExactScalar::from_f64_exact(*x).expect("limit estimates are finite")
            }
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Exact(v) => write!(f, "{v}"),
            Limit::Approx(x) => write!(f, "{x}"),
        }
    }
}

/// The five possible classifications of a series.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    ConvergesTo(Limit),
    DivergesPlus,
    DivergesMinus,
    Oscillates,
    Unknown,
}

/// A verdict together with liminf/limsup estimates for the partial sums.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceClass {
    pub verdict: Verdict,
    pub liminf: ExtendedReal,
    pub limsup: ExtendedReal,
}

impl ConvergenceClass {
    pub fn converges_exact(value: ExactScalar) -> Self {
        let est = ExtendedReal::from_f64(value.to_f64());
        ConvergenceClass {
            verdict: Verdict::ConvergesTo(Limit::Exact(value)),
            liminf: est,
            limsup: est,
        }
    }

    pub fn converges_approx(value: f64) -> Self {
        let est = ExtendedReal::from_f64(value);
        ConvergenceClass {
            verdict: Verdict::ConvergesTo(Limit::Approx(value)),
            liminf: est,
            limsup: est,
        }
    }

    pub fn diverges_plus() -> Self {
        ConvergenceClass {
            verdict: Verdict::DivergesPlus,
            liminf: ExtendedReal::PosInf,
            limsup: ExtendedReal::PosInf,
        }
    }

    pub fn diverges_minus() -> Self {
        ConvergenceClass {
            verdict: Verdict::DivergesMinus,
            liminf: ExtendedReal::NegInf,
            limsup: ExtendedReal::NegInf,
        }
    }

    pub fn oscillates(liminf: ExtendedReal, limsup: ExtendedReal) -> Self {
        ConvergenceClass {
            verdict: Verdict::Oscillates,
            liminf,
            limsup,
        }
    }

    pub fn unknown(liminf: ExtendedReal, limsup: ExtendedReal) -> Self {
        ConvergenceClass {
            verdict: Verdict::Unknown,
            liminf,
            limsup,
        }
    }
}

impl fmt::Display for ConvergenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::ConvergesTo(limit) => write!(f, "converges={limit}"),
            Verdict::DivergesPlus => write!(f, "diverges+"),
            Verdict::DivergesMinus => write!(f, "diverges-"),
            Verdict::Oscillates => {
                write!(f, "oscillates[{}, {}]", self.liminf, self.limsup)
            }
            Verdict::Unknown => write!(f, "unknown[{}, {}]", self.liminf, self.limsup),
        }
    }
}

/// Term source of a series.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind {
    /// `a, a*r, a*r^2, ...`
    Geometric { first: ExactScalar, ratio: ExactScalar },
    /// `1/n`, negated when `negated` is set.
    Harmonic { negated: bool },
    /// `(-1)^(n+1) / n`, converging to `ln 2`.
    AlternatingHarmonic,
    /// `1/n^p`.
    PSeries { exponent: ExactScalar },
    /// `(-1)^n`: partial sums alternate between -1 and 0.
    Grandi,
    /// Finite list of terms, implicitly followed by zeros.
    ExplicitList(Vec<ExactScalar>),
    /// Finite list of terms with a caller-asserted classification, taken
    /// at face value.
    Declared {
        terms: Vec<ExactScalar>,
        class: ConvergenceClass,
    },
}

/// A series plus the evaluation budget for numeric estimation.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSpec {
    pub kind: SeriesKind,
    pub max_terms: usize,
}

impl SeriesSpec {
    /// Wraps a kind with the default budget: [`DEFAULT_MAX_TERMS`] for
    /// built-in families, the list length for explicit lists.
    pub fn new(kind: SeriesKind) -> Self {
        let max_terms = match &kind {
            SeriesKind::ExplicitList(terms) | SeriesKind::Declared { terms, .. } => {
                terms.len().max(1)
            }
            _ => DEFAULT_MAX_TERMS,
        };
        SeriesSpec { kind, max_terms }
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Exact `n`-th term (1-based), when representable as a rational.
    /// `None` only for p-series with non-integer exponent.
    pub fn exact_term(&self, n: usize) -> Option<ExactScalar> {
        assert!(n >= 1, "terms are 1-based");
        let term = match &self.kind {
            SeriesKind::Geometric { first, ratio } => first * ratio.pow((n - 1) as u32),
            SeriesKind::Harmonic { negated } => {
                let t = ExactScalar::ratio(1, n as i64);
                if *negated {
                    -t
                } else {
                    t
                }
            }
            SeriesKind::AlternatingHarmonic => {
                let t = ExactScalar::ratio(1, n as i64);
                if n % 2 == 0 {
                    -t
                } else {
                    t
                }
            }
            SeriesKind::PSeries { exponent } => {
                if !exponent.is_integer() {
                    return None;
                }
                let p = i32::try_from(exponent.to_bigint()).ok()?;
                let base = ExactScalar::from(n as i64);
                if p >= 0 {
                    ExactScalar::one() / base.pow(p as u32)
                } else {
                    base.pow(p.unsigned_abs())
                }
            }
            SeriesKind::Grandi => {
                if n % 2 == 0 {
                    ExactScalar::one()
                } else {
                    ExactScalar::from(-1)
                }
            }
            SeriesKind::ExplicitList(terms) | SeriesKind::Declared { terms, .. } => {
                terms.get(n - 1).cloned().unwrap_or_else(ExactScalar::zero)
            }
        };
        Some(term)
    }

    /// Exact sum of the first `k` terms (`k = 0` gives `0`).
    pub fn exact_prefix_sum(&self, k: usize) -> Option<ExactScalar> {
        let mut sum = ExactScalar::zero();
        // Geometric terms are built incrementally; pow-per-term would be
        // quadratic in k.
        if let SeriesKind::Geometric { first, ratio } = &self.kind {
            let mut term = first.clone();
            for _ in 0..k {
                sum = sum + &term;
                term = &term * ratio;
            }
            return Some(sum);
        }
        for n in 1..=k {
            sum = sum + self.exact_term(n)?;
        }
        Some(sum)
    }

    /// Exact value of the series in the extended rationals, when the
    /// analysis determines one.
    pub fn exact_value(&self) -> Option<ExtendedRational> {
        match &self.kind {
            SeriesKind::Geometric { first, ratio } => {
                if first.is_zero() {
                    Some(ExactScalar::zero().into())
                } else if ratio.abs() < ExactScalar::one() {
                    Some((first / (ExactScalar::one() - ratio)).into())
                } else if *ratio >= ExactScalar::one() {
                    Some(if first.is_positive() {
                        ExtendedRational::PosInf
                    } else {
                        ExtendedRational::NegInf
                    })
                } else {
                    None
                }
            }
            SeriesKind::Harmonic { negated: false } => Some(ExtendedRational::PosInf),
            SeriesKind::Harmonic { negated: true } => Some(ExtendedRational::NegInf),
            SeriesKind::AlternatingHarmonic => None, // ln 2 is irrational
            SeriesKind::PSeries { exponent } => {
                if *exponent <= ExactScalar::one() {
                    Some(ExtendedRational::PosInf)
                } else {
                    None // zeta values are not rational
                }
            }
            SeriesKind::Grandi => None,
            SeriesKind::ExplicitList(terms) => {
                Some(terms.iter().cloned().sum::<ExactScalar>().into())
            }
            SeriesKind::Declared { class, .. } => match &class.verdict {
                Verdict::ConvergesTo(Limit::Exact(v)) => Some(v.clone().into()),
                Verdict::DivergesPlus => Some(ExtendedRational::PosInf),
                Verdict::DivergesMinus => Some(ExtendedRational::NegInf),
                _ => None,
            },
        }
    }

    /// Exact liminf/limsup of the partial sums, when determined.
    fn exact_bounds(&self) -> Option<(ExtendedRational, ExtendedRational)> {
        use ExtendedRational::{NegInf, PosInf};
        match &self.kind {
            SeriesKind::Geometric { first, ratio } => {
                if first.is_zero() {
                    let zero: ExtendedRational = ExactScalar::zero().into();
                    Some((zero.clone(), zero))
                } else if *ratio == ExactScalar::from(-1) {
                    // Partial sums alternate between `first` and 0.
                    let lo = first.clone().min(ExactScalar::zero());
                    let hi = first.clone().max(ExactScalar::zero());
                    Some((lo.into(), hi.into()))
                } else if ratio.abs() < ExactScalar::one() || *ratio >= ExactScalar::one() {
                    let v = self.exact_value()?;
                    Some((v.clone(), v))
                } else {
                    Some((NegInf, PosInf)) // r < -1: unbounded both ways
                }
            }
            SeriesKind::Grandi => Some((
                ExactScalar::from(-1).into(),
                ExactScalar::zero().into(),
            )),
            SeriesKind::AlternatingHarmonic => None,
            SeriesKind::PSeries { .. }
            | SeriesKind::Harmonic { .. }
            | SeriesKind::ExplicitList(_) => {
                let v = self.exact_value()?;
                Some((v.clone(), v))
            }
            SeriesKind::Declared { class, .. } => match &class.verdict {
                Verdict::ConvergesTo(Limit::Exact(v)) => {
                    let v: ExtendedRational = v.clone().into();
                    Some((v.clone(), v))
                }
                Verdict::DivergesPlus => Some((PosInf, PosInf)),
                Verdict::DivergesMinus => Some((NegInf, NegInf)),
                _ => None,
            },
        }
    }

    /// 1-based index of the first negative term, if any.
    pub fn first_negative_term(&self) -> Option<usize> {
        match &self.kind {
            SeriesKind::Geometric { first, ratio } => {
                if first.is_negative() {
                    Some(1)
                } else if first.is_positive() && ratio.is_negative() {
                    Some(2)
                } else {
                    None
                }
            }
            SeriesKind::Harmonic { negated } => negated.then_some(1),
            SeriesKind::AlternatingHarmonic => Some(2),
            SeriesKind::PSeries { .. } => None,
            SeriesKind::Grandi => Some(1),
            SeriesKind::ExplicitList(terms) | SeriesKind::Declared { terms, .. } => terms
                .iter()
                .position(|t| t.is_negative())
                .map(|i| i + 1),
        }
    }

    /// Unbounded float term stream; callers cap it with `max_terms`.
    pub fn float_terms(&self) -> Box<dyn Iterator<Item = f64> + '_> {
        match &self.kind {
            SeriesKind::Geometric { first, ratio } => {
                let r = ratio.to_f64();
                Box::new(std::iter::successors(Some(first.to_f64()), move |t| {
                    Some(t * r)
                }))
            }
            SeriesKind::Harmonic { negated } => {
                let sign = if *negated { -1.0 } else { 1.0 };
                Box::new((1u64..).map(move |n| sign / n as f64))
            }
            SeriesKind::AlternatingHarmonic => Box::new((1u64..).map(|n| {
                let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
                sign / n as f64
            })),
            SeriesKind::PSeries { exponent } => {
                let p = exponent.to_f64();
                Box::new((1u64..).map(move |n| (n as f64).powf(-p)))
            }
            SeriesKind::Grandi => {
                Box::new((1u64..).map(|n| if n % 2 == 0 { 1.0 } else { -1.0 }))
            }
            SeriesKind::ExplicitList(terms) | SeriesKind::Declared { terms, .. } => Box::new(
                terms
                    .iter()
                    .map(ExactScalar::to_f64)
                    .chain(std::iter::repeat(0.0)),
            ),
        }
    }
}

/// Parameters of the windowed partial-sum heuristic.
#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Number of trailing partial sums inspected.
    pub window: usize,
    /// Relative oscillation below which the window counts as settled.
    pub rel_epsilon: f64,
    /// A monotone window beyond this magnitude counts as divergence.
    pub divergence_threshold: f64,
    /// Hard cap on consumed terms.
    pub max_terms: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            window: DEFAULT_WINDOW,
            rel_epsilon: DEFAULT_REL_EPSILON,
            divergence_threshold: DEFAULT_DIVERGENCE_THRESHOLD,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// Windowed heuristic classification of a raw term stream.
///
/// Consumes up to `max_terms` terms and inspects the last `window` partial
/// sums: if their spread is within `rel_epsilon` (relative to the last
/// sum), the stream counts as convergent; a monotone window beyond
/// `divergence_threshold` counts as divergence; a monotone window below it
/// stays [`Verdict::Unknown`] (slow divergence and slow convergence are
/// indistinguishable in a finite window); anything else is
/// [`Verdict::Oscillates`] with the window's min/max as estimates.
///
/// Streams that end before the window fills are an error.
pub fn classify_stream(
    terms: impl IntoIterator<Item = f64>,
    opts: &ClassifyOptions,
) -> Result<ConvergenceClass> {
    let mut window = std::collections::VecDeque::with_capacity(opts.window + 1);
    let mut sum = 0.0f64;
    let mut seen = 0usize;
    for term in terms.into_iter().take(opts.max_terms) {
        sum += term;
        seen += 1;
        window.push_back(sum);
        if window.len() > opts.window {
            window.pop_front();
        }
    }
    if seen < opts.window {
        return Err(Error::InsufficientTerms {
            window: opts.window,
            available: seen,
        });
    }

    let last = *window.back().expect("window is nonempty");
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut nondecreasing = true;
    let mut nonincreasing = true;
    let mut prev = None;
    for &s in &window {
        min = min.min(s);
        max = max.max(s);
        if let Some(p) = prev {
            nondecreasing &= s >= p;
            nonincreasing &= s <= p;
        }
        prev = Some(s);
    }

    let spread = max - min;
    let scale = last.abs().max(1.0);
    let class = if spread <= opts.rel_epsilon * scale {
        ConvergenceClass::converges_approx(last)
    } else if nondecreasing && last > opts.divergence_threshold {
        ConvergenceClass::diverges_plus()
    } else if nonincreasing && last < -opts.divergence_threshold {
        ConvergenceClass::diverges_minus()
    } else {
        let lo = ExtendedReal::from_f64(min);
        let hi = ExtendedReal::from_f64(max);
        if nondecreasing || nonincreasing {
            // Drifting monotonically but below the divergence threshold:
            // the window cannot tell slow divergence from slow convergence.
            ConvergenceClass::unknown(lo, hi)
        } else {
            ConvergenceClass::oscillates(lo, hi)
        }
    };
    Ok(class)
}

/// Classification of a [`SeriesSpec`]. Built-in families and explicit lists
/// are classified analytically; declared classes pass through.
pub fn classify_series(series: &SeriesSpec) -> Result<ConvergenceClass> {
    let class = match &series.kind {
        SeriesKind::Geometric { first, ratio } => {
            if first.is_zero() {
                ConvergenceClass::converges_exact(ExactScalar::zero())
            } else if ratio.abs() < ExactScalar::one() {
                ConvergenceClass::converges_exact(first / (ExactScalar::one() - ratio))
            } else if *ratio >= ExactScalar::one() {
                if first.is_positive() {
                    ConvergenceClass::diverges_plus()
                } else {
                    ConvergenceClass::diverges_minus()
                }
            } else {
                let (lo, hi) = series.exact_bounds().expect("bounded oscillation");
                ConvergenceClass::oscillates(lo.into(), hi.into())
            }
        }
        SeriesKind::Harmonic { negated: false } => ConvergenceClass::diverges_plus(),
        SeriesKind::Harmonic { negated: true } => ConvergenceClass::diverges_minus(),
        SeriesKind::AlternatingHarmonic => ConvergenceClass::converges_approx(LN_2),
        SeriesKind::PSeries { exponent } => {
            if *exponent > ExactScalar::one() {
                ConvergenceClass::converges_approx(zeta(
                    exponent.to_f64(),
                    series.max_terms.min(10_000),
                ))
            } else {
                ConvergenceClass::diverges_plus()
            }
        }
        SeriesKind::Grandi => ConvergenceClass::oscillates(
            ExtendedReal::Finite(-1.0),
            ExtendedReal::Finite(0.0),
        ),
        // A finite list is eventually constant, so it converges exactly.
        SeriesKind::ExplicitList(terms) => {
            ConvergenceClass::converges_exact(terms.iter().cloned().sum())
        }
        SeriesKind::Declared { class, .. } => class.clone(),
    };
    Ok(class)
}

/// `zeta(p)` estimate: partial sum plus an Euler-Maclaurin tail. For
/// `p = 2` and the default budget the error is below `1e-12`.
fn zeta(p: f64, terms: usize) -> f64 {
    let n = terms.max(2) as f64;
    let mut sum = 0.0;
    for k in 1..=terms.max(2) {
        sum += (k as f64).powf(-p);
    }
    sum + n.powf(1.0 - p) / (p - 1.0) - 0.5 * n.powf(-p) + p / 12.0 * n.powf(-p - 1.0)
}

/// Result of projecting a series into a class whose projected partial sums
/// may fail to converge.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesProjection<V> {
    Converges(V),
    NoConvergence,
}

impl<V> SeriesProjection<V> {
    pub fn converged(self) -> Option<V> {
        match self {
            SeriesProjection::Converges(v) => Some(v),
            SeriesProjection::NoConvergence => None,
        }
    }
}

impl<V: fmt::Display> fmt::Display for SeriesProjection<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesProjection::Converges(v) => write!(f, "{v}"),
            SeriesProjection::NoConvergence => write!(f, "no-convergence"),
        }
    }
}

fn require_nonnegative(series: &SeriesSpec) -> Result<()> {
    match series.first_negative_term() {
        Some(index) => Err(Error::NegativeTerm { index }),
        None => Ok(()),
    }
}

/// Projects a nonnegative series into `[0, M]`: the coprojector applied to
/// the series value, which always exists in `[0, +inf]`.
pub fn project_series_am(series: &SeriesSpec, magnitude: &Magnitude) -> Result<AmValue> {
    require_nonnegative(series)?;
    if let Some(value) = series.exact_value() {
        return am_coproject(&value, magnitude);
    }
    match classify_series(series)?.verdict {
        Verdict::ConvergesTo(limit) => am_coproject(&limit.to_exact().into(), magnitude),
        Verdict::DivergesPlus => am_coproject(&ExtendedRational::PosInf, magnitude),
        // A nonnegative series has monotone partial sums; anything else
        // means the declared classification contradicts the terms.
        _ => Err(Error::UnknownClassification),
    }
}

/// Checks the split identity `h(sum) = h(prefix) (+) h(tail)` for a
/// nonnegative series at prefix length `k`, exactly.
///
/// Requires an exactly representable series value (geometric with rational
/// limit, harmonic, integer-exponent p-series, lists); series with
/// irrational values are rejected rather than checked approximately.
pub fn split_identity_check(series: &SeriesSpec, k: usize, magnitude: &Magnitude) -> Result<bool> {
    if k >= series.max_terms {
        return Err(Error::Domain(format!(
            "split point {k} not below the term budget {}",
            series.max_terms
        )));
    }
    require_nonnegative(series)?;
    let total = series.exact_value().ok_or_else(|| {
        Error::Domain("series value is not exactly representable; cannot check the identity exactly".into())
    })?;
    let prefix = series.exact_prefix_sum(k).ok_or_else(|| {
        Error::Domain("series terms are not exactly representable; cannot check the identity exactly".into())
    })?;
    let tail = total.sub_finite(&prefix);
    let lhs = am_coproject(&total, magnitude)?;
    let rhs = am_add(
        &am_coproject(&prefix.into(), magnitude)?,
        &am_coproject(&tail, magnitude)?,
    )?;
    Ok(lhs == rhs)
}

/// Projects a series into `[-M, M]` by the trichotomy on the partial sums:
/// liminf at least `M` gives `M`, limsup at most `-M` gives `-M`, a limit
/// strictly inside gives that limit; anything else does not converge.
pub fn project_series_amm(
    series: &SeriesSpec,
    magnitude: &Magnitude,
) -> Result<SeriesProjection<AmmValue>> {
    let m = magnitude.value();
    if let Some((lo, hi)) = series.exact_bounds() {
        let projection = if lo >= *m {
            SeriesProjection::Converges(AmmValue::top(magnitude.clone()))
        } else if hi <= -m {
            SeriesProjection::Converges(AmmValue::bottom(magnitude.clone()))
        } else if lo == hi {
            SeriesProjection::Converges(amm_coproject(&lo, magnitude))
        } else {
            SeriesProjection::NoConvergence
        };
        return Ok(projection);
    }
    let class = classify_series(series)?;
    let projection = match class.verdict {
        Verdict::ConvergesTo(limit) => {
            SeriesProjection::Converges(amm_coproject(&limit.to_exact().into(), magnitude))
        }
        Verdict::DivergesPlus => SeriesProjection::Converges(AmmValue::top(magnitude.clone())),
        Verdict::DivergesMinus => {
            SeriesProjection::Converges(AmmValue::bottom(magnitude.clone()))
        }
        Verdict::Oscillates => {
            // Float estimates: the exact kinds never reach this arm.
            let m = magnitude.to_f64();
            if class.liminf >= ExtendedReal::Finite(m) {
                SeriesProjection::Converges(AmmValue::top(magnitude.clone()))
            } else if class.limsup <= ExtendedReal::Finite(-m) {
                SeriesProjection::Converges(AmmValue::bottom(magnitude.clone()))
            } else {
                SeriesProjection::NoConvergence
            }
        }
        Verdict::Unknown => return Err(Error::UnknownClassification),
    };
    Ok(projection)
}

/// Projects a series into the arctan class: the generator maps the series
/// value (finite or infinite) into `[0, M]`; an oscillating series has no
/// projected limit because the generator is injective.
pub fn project_series_bm(
    series: &SeriesSpec,
    magnitude: &BmMagnitude,
) -> Result<SeriesProjection<BmValue>> {
    let class = classify_series(series)?;
    let projection = match class.verdict {
        Verdict::ConvergesTo(limit) => SeriesProjection::Converges(bm_forward(
            ExtendedReal::from_f64(limit.to_f64()),
            *magnitude,
        )),
        Verdict::DivergesPlus => {
            SeriesProjection::Converges(bm_forward(ExtendedReal::PosInf, *magnitude))
        }
        Verdict::DivergesMinus => {
            SeriesProjection::Converges(bm_forward(ExtendedReal::NegInf, *magnitude))
        }
        Verdict::Oscillates => SeriesProjection::NoConvergence,
        Verdict::Unknown => return Err(Error::UnknownClassification),
    };
    Ok(projection)
}

fn offset_in(src: &str, part: &str) -> usize {
    part.as_ptr() as usize - src.as_ptr() as usize
}

fn parse_kv<'a>(src: &str, part: &'a str, key: &str) -> Result<&'a str> {
    match part.split_once('=') {
        Some((k, v)) if k.trim() == key => Ok(v),
        _ => Err(Error::Parse {
            offset: offset_in(src, part),
            expected: format!("{key}=<number>"),
            found: part.to_string(),
        }),
    }
}

fn parse_term_list(src: &str, body: &str) -> Result<Vec<ExactScalar>> {
    if body.trim().is_empty() {
        return Err(Error::Parse {
            offset: offset_in(src, body),
            expected: "comma-separated terms".into(),
            found: "end of input".into(),
        });
    }
    body.split(',')
        .map(|part| parse_exact(part, offset_in(src, part)))
        .collect()
}

/// Series spec strings:
///
/// ```text
/// geom:a=1,r=0.5          harmonic:+    harmonic:-    altharmonic
/// pseries:p=2             grandi        list:1,2,-3/4
/// declared:<class>:<terms>   with <class> one of
///     converges=<number> | diverges+ | diverges- | oscillates | unknown
/// ```
impl FromStr for SeriesSpec {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let (head, rest) = match src.split_once(':') {
            Some((head, rest)) => (head, Some(rest)),
            None => (src, None),
        };
        let kind = match (head.trim(), rest) {
            ("geom", Some(body)) => {
                let (a_part, r_part) = body.split_once(',').ok_or_else(|| Error::Parse {
                    offset: offset_in(src, body) + body.len(),
                    expected: ",r=<number>".into(),
                    found: "end of input".into(),
                })?;
                let a = parse_kv(src, a_part, "a")?;
                let r = parse_kv(src, r_part, "r")?;
                SeriesKind::Geometric {
                    first: parse_exact(a, offset_in(src, a))?,
                    ratio: parse_exact(r, offset_in(src, r))?,
                }
            }
            ("harmonic", None) | ("harmonic", Some("+")) => {
                SeriesKind::Harmonic { negated: false }
            }
            ("harmonic", Some("-")) => SeriesKind::Harmonic { negated: true },
            ("harmonic", Some(other)) => {
                return Err(Error::Parse {
                    offset: offset_in(src, other),
                    expected: "'+' or '-'".into(),
                    found: other.to_string(),
                })
            }
            ("altharmonic", None) => SeriesKind::AlternatingHarmonic,
            ("pseries", Some(body)) => {
                let p = parse_kv(src, body, "p")?;
                SeriesKind::PSeries {
                    exponent: parse_exact(p, offset_in(src, p))?,
                }
            }
            ("grandi", None) => SeriesKind::Grandi,
            ("list", Some(body)) => SeriesKind::ExplicitList(parse_term_list(src, body)?),
            ("declared", Some(body)) => {
                let (class_part, terms_part) =
                    body.split_once(':').ok_or_else(|| Error::Parse {
                        offset: offset_in(src, body) + body.len(),
                        expected: "':' followed by terms".into(),
                        found: "end of input".into(),
                    })?;
                let terms = parse_term_list(src, terms_part)?;
                let class = parse_declared_class(src, class_part, &terms)?;
                SeriesKind::Declared { terms, class }
            }
            (other, _) => {
                return Err(Error::Parse {
                    offset: offset_in(src, head),
                    expected: "geom, harmonic, altharmonic, pseries, grandi, list, or declared"
                        .into(),
                    found: other.to_string(),
                })
            }
        };
        Ok(SeriesSpec::new(kind))
    }
}

fn parse_declared_class(
    src: &str,
    part: &str,
    terms: &[ExactScalar],
) -> Result<ConvergenceClass> {
    match part.trim() {
        "diverges+" => Ok(ConvergenceClass::diverges_plus()),
        "diverges-" => Ok(ConvergenceClass::diverges_minus()),
        token @ ("oscillates" | "unknown") => {
            // Estimate liminf/limsup from the partial sums of the evidence
            // list.
            let mut sum = ExactScalar::zero();
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for t in terms {
                sum = sum + t;
                lo = lo.min(sum.to_f64());
                hi = hi.max(sum.to_f64());
            }
            let (lo, hi) = (ExtendedReal::from_f64(lo), ExtendedReal::from_f64(hi));
            Ok(if token == "oscillates" {
                ConvergenceClass::oscillates(lo, hi)
            } else {
                ConvergenceClass::unknown(lo, hi)
            })
        }
        _ => {
            let value = parse_kv(src, part, "converges")?;
            Ok(ConvergenceClass::converges_exact(parse_exact(
                value,
                offset_in(src, value),
            )?))
        }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |terms: &[ExactScalar]| {
            terms
                .iter()
                .map(ExactScalar::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.kind {
            SeriesKind::Geometric { first, ratio } => write!(f, "geom:a={first},r={ratio}"),
            SeriesKind::Harmonic { negated: false } => write!(f, "harmonic:+"),
            SeriesKind::Harmonic { negated: true } => write!(f, "harmonic:-"),
            SeriesKind::AlternatingHarmonic => write!(f, "altharmonic"),
            SeriesKind::PSeries { exponent } => write!(f, "pseries:p={exponent}"),
            SeriesKind::Grandi => write!(f, "grandi"),
            SeriesKind::ExplicitList(terms) => write!(f, "list:{}", join(terms)),
            SeriesKind::Declared { terms, class } => {
                let tag = match &class.verdict {
                    Verdict::ConvergesTo(limit) => format!("converges={limit}"),
                    Verdict::DivergesPlus => "diverges+".into(),
                    Verdict::DivergesMinus => "diverges-".into(),
                    Verdict::Oscillates => "oscillates".into(),
                    Verdict::Unknown => "unknown".into(),
                };
                write!(f, "declared:{tag}:{}", join(terms))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExactScalar {
        s.parse().unwrap()
    }

    fn spec(s: &str) -> SeriesSpec {
        s.parse().unwrap()
    }

    fn mag(n: i64) -> Magnitude {
        Magnitude::from_int(n).unwrap()
    }

    #[test]
    fn classifies_geometric_families() {
        let class = classify_series(&spec("geom:a=1,r=1/2")).unwrap();
        assert_eq!(class.verdict, Verdict::ConvergesTo(Limit::Exact(r("2"))));

        let class = classify_series(&spec("geom:a=3,r=-1/3")).unwrap();
        assert_eq!(class.verdict, Verdict::ConvergesTo(Limit::Exact(r("9/4"))));

        assert_eq!(
            classify_series(&spec("geom:a=2,r=2")).unwrap().verdict,
            Verdict::DivergesPlus
        );
        assert_eq!(
            classify_series(&spec("geom:a=-1,r=1")).unwrap().verdict,
            Verdict::DivergesMinus
        );
        assert_eq!(
            classify_series(&spec("geom:a=0,r=7")).unwrap().verdict,
            Verdict::ConvergesTo(Limit::Exact(r("0")))
        );

        let class = classify_series(&spec("geom:a=1,r=-1")).unwrap();
        assert_eq!(class.verdict, Verdict::Oscillates);
        assert_eq!(class.liminf, ExtendedReal::Finite(0.0));
        assert_eq!(class.limsup, ExtendedReal::Finite(1.0));

        let class = classify_series(&spec("geom:a=1,r=-2")).unwrap();
        assert_eq!(class.verdict, Verdict::Oscillates);
        assert_eq!(class.liminf, ExtendedReal::NegInf);
        assert_eq!(class.limsup, ExtendedReal::PosInf);
    }

    #[test]
    fn geometric_limit_matches_partial_sum_oracle() {
        // Independent oracle: 10^4 partial sums in floats.
        let series = spec("geom:a=1,r=1/2");
        let oracle: f64 = series.float_terms().take(10_000).sum();
        match classify_series(&series).unwrap().verdict {
            Verdict::ConvergesTo(limit) => {
                assert!((limit.to_f64() - oracle).abs() <= 1e-9)
            }
            other => panic!("expected convergence, got {other:?}"),
        }
    }

    #[test]
    fn classifies_harmonic_with_partial_sum_oracle() {
        // Oracle: the millionth partial sum exceeds 14 and the sums are
        // monotone, which is the divergence evidence for the analytic
        // verdict below.
        let mut sum = 0.0f64;
        let mut prev = 0.0f64;
        for n in 1..=1_000_000u64 {
            sum += 1.0 / n as f64;
            assert!(sum > prev);
            prev = sum;
        }
        assert!(sum > 14.0);

        assert_eq!(
            classify_series(&spec("harmonic:+")).unwrap().verdict,
            Verdict::DivergesPlus
        );
        assert_eq!(
            classify_series(&spec("harmonic:-")).unwrap().verdict,
            Verdict::DivergesMinus
        );
    }

    #[test]
    fn classifies_alternating_harmonic_as_ln_two() {
        let class = classify_series(&spec("altharmonic")).unwrap();
        assert_eq!(class.verdict, Verdict::ConvergesTo(Limit::Approx(LN_2)));
    }

    #[test]
    fn classifies_p_series_against_basel_value() {
        let class = classify_series(&spec("pseries:p=2")).unwrap();
        match class.verdict {
            Verdict::ConvergesTo(limit) => {
                let basel = std::f64::consts::PI.powi(2) / 6.0;
                assert!(
                    (limit.to_f64() - basel).abs() <= 1e-9,
                    "zeta(2) estimate {} vs {basel}",
                    limit.to_f64()
                );
            }
            other => panic!("expected convergence, got {other:?}"),
        }
        assert_eq!(
            classify_series(&spec("pseries:p=1")).unwrap().verdict,
            Verdict::DivergesPlus
        );
        assert_eq!(
            classify_series(&spec("pseries:p=1/2")).unwrap().verdict,
            Verdict::DivergesPlus
        );
    }

    #[test]
    fn classifies_grandi_bounds_exactly() {
        let class = classify_series(&spec("grandi")).unwrap();
        assert_eq!(class.verdict, Verdict::Oscillates);
        assert_eq!(class.liminf, ExtendedReal::Finite(-1.0));
        assert_eq!(class.limsup, ExtendedReal::Finite(0.0));
    }

    #[test]
    fn classifies_explicit_lists_exactly() {
        let class = classify_series(&spec("list:1,2,-3/4")).unwrap();
        assert_eq!(class.verdict, Verdict::ConvergesTo(Limit::Exact(r("9/4"))));
    }

    #[test]
    fn declared_classification_passes_through() {
        let series = spec("declared:converges=2:1,1/2,1/4");
        let class = classify_series(&series).unwrap();
        assert_eq!(class.verdict, Verdict::ConvergesTo(Limit::Exact(r("2"))));
    }

    #[test]
    fn stream_heuristic_detects_settled_sums() {
        let series = spec("geom:a=1,r=1/2");
        let class = classify_stream(
            series.float_terms().take(10_000),
            &ClassifyOptions::default(),
        )
        .unwrap();
        match class.verdict {
            Verdict::ConvergesTo(limit) => {
                assert!((limit.to_f64() - 2.0).abs() <= 1e-9)
            }
            other => panic!("expected convergence, got {other:?}"),
        }
    }

    #[test]
    fn stream_heuristic_is_honest_about_slow_divergence() {
        // Harmonic partial sums drift monotonically but stay far below the
        // divergence threshold within the budget: the heuristic must not
        // guess.
        let series = spec("harmonic:+");
        let class = classify_stream(
            series.float_terms().take(DEFAULT_MAX_TERMS),
            &ClassifyOptions::default(),
        )
        .unwrap();
        assert_eq!(class.verdict, Verdict::Unknown);
    }

    #[test]
    fn stream_heuristic_detects_fast_divergence() {
        let class = classify_stream(
            std::iter::repeat(1e10).take(2_000),
            &ClassifyOptions::default(),
        )
        .unwrap();
        assert_eq!(class.verdict, Verdict::DivergesPlus);
        let class = classify_stream(
            std::iter::repeat(-1e10).take(2_000),
            &ClassifyOptions::default(),
        )
        .unwrap();
        assert_eq!(class.verdict, Verdict::DivergesMinus);
    }

    #[test]
    fn stream_heuristic_detects_oscillation() {
        let series = spec("grandi");
        let class = classify_stream(
            series.float_terms().take(10_000),
            &ClassifyOptions::default(),
        )
        .unwrap();
        assert_eq!(class.verdict, Verdict::Oscillates);
        assert_eq!(class.liminf, ExtendedReal::Finite(-1.0));
        assert_eq!(class.limsup, ExtendedReal::Finite(0.0));
    }

    #[test]
    fn stream_heuristic_needs_a_full_window() {
        let result = classify_stream([1.0, 0.5, 0.25], &ClassifyOptions::default());
        assert!(matches!(
            result,
            Err(Error::InsufficientTerms {
                window: DEFAULT_WINDOW,
                available: 3
            })
        ));
    }

    #[test]
    fn exact_terms_and_prefixes() {
        let geo = spec("geom:a=1,r=1/2");
        assert_eq!(geo.exact_term(1).unwrap(), r("1"));
        assert_eq!(geo.exact_term(4).unwrap(), r("1/8"));
        assert_eq!(geo.exact_prefix_sum(4).unwrap(), r("15/8"));
        assert_eq!(geo.exact_prefix_sum(0).unwrap(), r("0"));

        let alt = spec("altharmonic");
        assert_eq!(alt.exact_term(2).unwrap(), r("-1/2"));
        assert_eq!(alt.exact_prefix_sum(3).unwrap(), r("5/6"));

        let p2 = spec("pseries:p=2");
        assert_eq!(p2.exact_term(3).unwrap(), r("1/9"));
        let p_neg = spec("pseries:p=-1");
        assert_eq!(p_neg.exact_term(5).unwrap(), r("5"));
        let p_frac = spec("pseries:p=3/2");
        assert_eq!(p_frac.exact_term(2), None);

        let list = spec("list:1,2,-3/4");
        assert_eq!(list.exact_term(3).unwrap(), r("-3/4"));
        assert_eq!(list.exact_term(10).unwrap(), r("0"));
        assert_eq!(list.exact_prefix_sum(5).unwrap(), r("9/4"));
    }

    #[test]
    fn projects_nonnegative_series_into_the_clamped_class() {
        let m = mag(10);
        let two = project_series_am(&spec("geom:a=1,r=1/2"), &m).unwrap();
        assert_eq!(two.value(), &r("2"));

        // A divergent series lands on M.
        let top = project_series_am(&spec("geom:a=2,r=2"), &m).unwrap();
        assert_eq!(top.value(), &r("10"));
        let top = project_series_am(&spec("harmonic:+"), &m).unwrap();
        assert_eq!(top.value(), &r("10"));

        // A single term above M also lands on M.
        let top = project_series_am(&spec("list:12"), &m).unwrap();
        assert_eq!(top.value(), &r("10"));

        // The Basel series has an irrational value; the projection falls
        // back to the float estimate.
        let basel = project_series_am(&spec("pseries:p=2"), &m).unwrap();
        let expect = std::f64::consts::PI.powi(2) / 6.0;
        assert!((basel.value().to_f64() - expect).abs() <= 1e-9);
    }

    #[test]
    fn negative_terms_are_rejected_by_the_nonnegative_projection() {
        let m = mag(10);
        for (text, index) in [
            ("grandi", 1),
            ("altharmonic", 2),
            ("harmonic:-", 1),
            ("geom:a=1,r=-1/2", 2),
            ("geom:a=-1,r=1/2", 1),
            ("list:1,2,-3/4", 3),
        ] {
            match project_series_am(&spec(text), &m) {
                Err(Error::NegativeTerm { index: i }) => assert_eq!(i, index, "{text}"),
                other => panic!("{text}: expected NegativeTerm, got {other:?}"),
            }
        }
    }

    #[test]
    fn split_identity_holds_for_geometric_prefix() {
        let m = mag(10);
        assert!(split_identity_check(&spec("geom:a=1,r=1/2"), 2, &m).unwrap());
    }

    #[test]
    fn split_identity_holds_when_everything_clamps() {
        let m = mag(10);
        // Single term above M followed by zeros: both sides clamp to M.
        assert!(split_identity_check(&spec("list:11,0"), 1, &m).unwrap());
        // Divergent series: h(inf) = M on the left; on the right the tail
        // is still infinite.
        assert!(split_identity_check(&spec("harmonic:+"), 5, &mag(3)).unwrap());
        assert!(split_identity_check(&spec("geom:a=2,r=2"), 4, &mag(7)).unwrap());
    }

    #[test]
    fn split_identity_requires_exact_values() {
        let m = mag(10);
        assert!(matches!(
            split_identity_check(&spec("pseries:p=2"), 3, &m),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn split_identity_validates_inputs() {
        let m = mag(10);
        let list = spec("list:1,2"); // max_terms = 2
        assert!(split_identity_check(&list, 1, &m).unwrap());
        assert!(matches!(
            split_identity_check(&list, 2, &m),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            split_identity_check(&spec("altharmonic"), 2, &m),
            Err(Error::NegativeTerm { index: 2 })
        ));
    }

    #[test]
    fn signed_projection_follows_the_trichotomy() {
        let m = mag(1);
        // Limit strictly inside (-M, M).
        let inside = project_series_amm(&spec("altharmonic"), &m).unwrap();
        match inside {
            SeriesProjection::Converges(v) => assert_eq!(v.value().to_f64(), LN_2),
            other => panic!("expected convergence, got {other:?}"),
        }

        // liminf >= M lands on M, limsup <= -M lands on -M.
        let m = mag(2);
        let top = project_series_amm(&spec("harmonic:+"), &m).unwrap();
        assert_eq!(top, SeriesProjection::Converges(AmmValue::top(m.clone())));
        let bottom = project_series_amm(&spec("harmonic:-"), &m).unwrap();
        assert_eq!(
            bottom,
            SeriesProjection::Converges(AmmValue::bottom(m.clone()))
        );

        // A finite sum at or above M also lands on M.
        let top = project_series_amm(&spec("list:3,4"), &m).unwrap();
        assert_eq!(top, SeriesProjection::Converges(AmmValue::top(m.clone())));

        // Bounded oscillation straddling the interior does not converge.
        let none = project_series_amm(&spec("grandi"), &m).unwrap();
        assert_eq!(none, SeriesProjection::NoConvergence);
    }

    #[test]
    fn signed_projection_handles_oscillation_pinned_at_the_ceiling() {
        // Partial sums oscillate between 10 and 11; with M = 5, the
        // projected sums are eventually constant at 5.
        let m = mag(5);
        let series = spec("declared:oscillates:10,1,-1,1,-1");
        let projected = project_series_amm(&series, &m).unwrap();
        assert_eq!(
            projected,
            SeriesProjection::Converges(AmmValue::top(m.clone()))
        );
        // And the mirrored series pins at -5.
        let series = spec("declared:oscillates:-10,-1,1,-1,1");
        let projected = project_series_amm(&series, &m).unwrap();
        assert_eq!(projected, SeriesProjection::Converges(AmmValue::bottom(m)));
    }

    #[test]
    fn unknown_classification_is_an_error_not_a_guess() {
        let m = mag(5);
        let series = spec("declared:unknown:1,1,1");
        assert!(matches!(
            project_series_amm(&series, &m),
            Err(Error::UnknownClassification)
        ));
        assert!(matches!(
            project_series_bm(&series, &BmMagnitude::new(4.0).unwrap()),
            Err(Error::UnknownClassification)
        ));
        assert!(matches!(
            project_series_am(&series, &m),
            Err(Error::UnknownClassification)
        ));
    }

    #[test]
    fn arctan_projection_maps_limits_through_the_generator() {
        let m = BmMagnitude::new(4.0).unwrap();
        let projected = project_series_bm(&spec("geom:a=1,r=1/2"), &m).unwrap();
        let expect = bm_forward(ExtendedReal::Finite(2.0), m);
        match projected {
            SeriesProjection::Converges(v) => {
                assert!(v.approx_eq(&expect), "{v} vs {expect}")
            }
            other => panic!("expected convergence, got {other:?}"),
        }

        let top = project_series_bm(&spec("harmonic:+"), &m).unwrap();
        assert_eq!(top.converged().unwrap().value(), 4.0);
        let bottom = project_series_bm(&spec("harmonic:-"), &m).unwrap();
        assert_eq!(bottom.converged().unwrap().value(), 0.0);
        let none = project_series_bm(&spec("grandi"), &m).unwrap();
        assert_eq!(none, SeriesProjection::NoConvergence);
    }

    #[test]
    fn order_sensitivity_of_the_signed_projection() {
        // Same multiset of terms, different split: projecting the whole
        // series gives t(4) = 4, but pre-summing the first two terms and
        // projecting the pieces gives t(6) (+) t(-2) = 5 (+) -2 = 3.
        let m = mag(5);
        let whole = project_series_amm(&spec("list:3,3,-2"), &m).unwrap();
        let whole = whole.converged().unwrap();
        assert_eq!(whole.value(), &r("4"));

        let prefix = amm_coproject(&r("6").into(), &m);
        let suffix = amm_coproject(&r("-2").into(), &m);
        let split = crate::clamp::amm_add(&prefix, &suffix).unwrap();
        assert_eq!(split.value(), &r("3"));
        assert_ne!(whole, split);
    }

    #[test]
    fn absolute_convergence_always_projects() {
        // Term-wise absolute values of any bounded list give a monotone
        // series, which always projects (possibly onto M).
        let m = mag(3);
        for text in ["list:1,-2,3,-4", "list:-1/2,1/3,-1/4", "list:0,0,0"] {
            let series = spec(text);
            let abs_terms: Vec<ExactScalar> = match &series.kind {
                SeriesKind::ExplicitList(terms) => terms.iter().map(ExactScalar::abs).collect(),
                _ => unreachable!(),
            };
            let abs_series = SeriesSpec::new(SeriesKind::ExplicitList(abs_terms));
            let projected = project_series_amm(&abs_series, &m).unwrap();
            assert!(
                matches!(projected, SeriesProjection::Converges(_)),
                "{text}"
            );
        }
    }

    #[test]
    fn parses_and_displays_canonical_forms() {
        for (text, canonical) in [
            ("geom:a=1,r=0.5", "geom:a=1,r=1/2"),
            ("harmonic:+", "harmonic:+"),
            ("harmonic", "harmonic:+"),
            ("harmonic:-", "harmonic:-"),
            ("altharmonic", "altharmonic"),
            ("pseries:p=2", "pseries:p=2"),
            ("grandi", "grandi"),
            ("list:1,2,-3/4", "list:1,2,-3/4"),
            ("declared:converges=2:1,1/2", "declared:converges=2:1,1/2"),
            ("declared:diverges+:5,5", "declared:diverges+:5,5"),
            ("declared:oscillates:1,-1", "declared:oscillates:1,-1"),
        ] {
            let series = spec(text);
            assert_eq!(series.to_string(), canonical, "{text}");
            // Display output reparses to the same series.
            assert_eq!(spec(&series.to_string()), series, "{text}");
        }
    }

    #[test]
    fn default_budgets() {
        assert_eq!(spec("harmonic:+").max_terms, DEFAULT_MAX_TERMS);
        assert_eq!(spec("list:1,2,3").max_terms, 3);
        assert_eq!(
            spec("grandi").with_max_terms(500).max_terms,
            500
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        for (text, expected_offset) in [
            ("geom:a=1", 8),      // missing ",r=..."
            ("geom:a=1,r=x", 11), // bad number
            ("geom:b=1,r=2", 5),  // wrong key
            ("harmonic:*", 9),
            ("list:", 5),
            ("list:1,,2", 7),
            ("pseries:q=2", 8),
            ("declared:converges=2", 20),
            ("declared:sideways:1,2", 9),
            ("warble", 0),
        ] {
            match text.parse::<SeriesSpec>() {
                Err(Error::Parse { offset, .. }) => {
                    assert_eq!(offset, expected_offset, "{text}")
                }
                other => panic!("{text}: expected parse error, got {other:?}"),
            }
        }
    }
}
