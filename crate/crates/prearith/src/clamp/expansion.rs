//! Greedy base-`x` expansion of a value in `(0, M]`.
//!
//! Any `z` in `(0, M]` can be approximated from below by a sum
//! `k1*x + k2*x^2 + ... + km*x^m` with natural-number counts, choosing each
//! `kj` greedily: the largest `k` such that the running sum stays strictly
//! below `z`. After `m` stages the gap to `z` is at most `x^m`, so for
//! `x < 1` the expansion converges to `z` from below as `m` grows.
//!
//! All arithmetic is exact, so the reported error bound is a theorem about
//! the returned counts, not a float estimate.

use num::bigint::{BigInt, BigUint};
use num::One;

use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Magnitude};

/// Outcome of a greedy expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    /// `counts[j]` is the coefficient of `x^(j+1)`.
    pub counts: Vec<BigUint>,
    /// `sum(counts[j] * x^(j+1))`, always strictly below `z`.
    pub partial_sum: ExactScalar,
    /// `x^m`; the true gap `z - partial_sum` never exceeds it.
    pub error_bound: ExactScalar,
}

/// Greedily expands `z` in powers of `x` over `m = stages` stages.
///
/// Requires `0 < z <= M`, `0 < x < 1`, and `stages >= 1`.
pub fn greedy_expansion(
    z: &ExactScalar,
    x: &ExactScalar,
    stages: u32,
    magnitude: &Magnitude,
) -> Result<ExpansionResult> {
    if !z.is_positive() || z > magnitude.value() {
        return Err(Error::Domain(format!(
            "expansion target {z} outside (0, {magnitude}]"
        )));
    }
    if !x.is_positive() || x >= &ExactScalar::one() {
        return Err(Error::Domain(format!("expansion base {x} outside (0, 1)")));
    }
    if stages == 0 {
        return Err(Error::Domain("expansion needs at least one stage".into()));
    }

    let mut counts = Vec::with_capacity(stages as usize);
    let mut sum = ExactScalar::zero();
    let mut power = ExactScalar::one();
    for _ in 0..stages {
        power = &power * x;
        // Largest k with sum + k * x^j strictly below z. The quotient
        // (z - sum) / x^j is positive; an exact integer quotient must be
        // decremented because the inequality is strict.
        let quotient = (z - &sum) / &power;
        let k: BigInt = if quotient.is_integer() {
            quotient.to_bigint() - BigInt::one()
        } else {
            quotient.floor_bigint()
        };
        sum = sum + &power * ExactScalar::from_bigint(k.clone());
        counts.push(k.to_biguint().expect("greedy count is nonnegative"));
    }

    Ok(ExpansionResult {
        counts,
        partial_sum: sum,
        error_bound: x.pow(stages),
    })
}
