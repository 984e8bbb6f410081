//! Greedy expansion: approximating a value by clamped powers of a base.
//!
//! Any `z` in `(0, M]` can be approached from below by sums
//! `k1*x + k2*x^2 + ... + km*x^m` with natural-number counts, picking each
//! count greedily as large as possible while staying strictly below `z`.
//! After `m` stages the gap is at most `x^m` - an exact bound, because
//! every count is computed in rational arithmetic.
//!
//! Run with: `cargo run --example greedy_expansion`

use prearith::{greedy_expansion, ExactScalar, Magnitude};

fn main() -> prearith::Result<()> {
    let m = Magnitude::from_int(1)?;
    let z: ExactScalar = "7/10".parse()?;
    let x: ExactScalar = "1/2".parse()?;

    // Four stages of halves: 7/10 = 1/2 + 1/8 + 1/16 + (gap 1/80).
    let result = greedy_expansion(&z, &x, 4, &m)?;
    println!("expanding {z} in powers of {x}:");
    for (i, count) in result.counts.iter().enumerate() {
        println!("  stage {}: {count} * ({x})^{}", i + 1, i + 1);
    }
    let gap = &z - &result.partial_sum;
    println!("partial sum {} , true gap {gap}, bound {}", result.partial_sum, result.error_bound);
    assert!(gap <= result.error_bound);
    assert!(result.partial_sum < z, "approximation is strictly from below");

    // The bound x^m is honest: doubling the stages squares it away.
    println!("\ngap as stages grow:");
    for stages in [2, 4, 8, 16, 32] {
        let r = greedy_expansion(&z, &x, stages, &m)?;
        println!(
            "  {stages:>2} stages: partial {} (gap {})",
            r.partial_sum,
            &z - &r.partial_sum
        );
    }

    // With base 1/10 the expansion recovers decimal digits - from below,
    // so 7/10 comes out as 0.6999...: the strict inequality forbids the
    // terminating form.
    let r = greedy_expansion(&z, &"1/10".parse()?, 6, &m)?;
    let digits: Vec<String> = r.counts.iter().map(|c| c.to_string()).collect();
    println!("\ndecimal digits of {z} from below: [{}]", digits.join(", "));
    assert_eq!(digits.join(""), "699999");

    // Counts are big integers, so tiny bases (huge per-stage counts) are
    // fine: expanding 10 in powers of 1/1000000 needs k1 = 9999999.
    let wide = Magnitude::from_int(10)?;
    let r = greedy_expansion(&ExactScalar::from(10), &"1/1000000".parse()?, 2, &wide)?;
    println!(
        "expanding 10 in millionths: counts = [{}, {}], partial {}",
        r.counts[0], r.counts[1], r.partial_sum
    );
    assert_eq!(r.counts[0].to_string(), "9999999");
    Ok(())
}
