//! Auditing algebraic laws: which identities survive in each class.
//!
//! The audit checks each law on an exhaustive grid plus seeded random
//! samples and collects every violating tuple. The exact classes compare
//! rationals, so a reported violation is a theorem about the clamp;
//! the arctan class compares within a documented tolerance.
//!
//! Run with: `cargo run --example law_audit`

use prearith::{audit_laws, find_counterexample, ArithClass, ClassContext, ExactScalar, Law};

fn main() -> prearith::Result<()> {
    let budget = 2_000;
    let seed = 0;

    for (class, magnitude) in [
        (ArithClass::Am, "2"),
        (ArithClass::Amm, "5"),
        (ArithClass::Bm, "4"),
    ] {
        let ctx = ClassContext::parse(class, magnitude)?;
        let laws = Law::supported(class);
        println!("== {class} with M = {magnitude} ==");
        for report in audit_laws(&ctx, &laws, budget, seed)? {
            println!("  {}", report.summary_line());
        }
        println!();
    }

    // Counterexample search over an explicit grid returns the smallest
    // violating tuple in lexicographic order. On quarters in [0, 2], the
    // first associativity failure of (*) is already at a = 1/4.
    let ctx = ClassContext::parse(ArithClass::Am, "2")?;
    let quarters: Vec<ExactScalar> = (0..=8).map(|i| ExactScalar::ratio(i, 4)).collect();
    let witness = find_counterexample(&ctx, Law::MulAssoc, &quarters)
        .expect("(*) is not associative at M = 2");
    println!("smallest (*)-associativity failure on quarters: {witness}");

    // Saturating addition, by contrast, has no counterexample anywhere.
    assert!(find_counterexample(&ctx, Law::AddAssoc, &quarters).is_none());
    println!("(+) associativity: no counterexample on the same grid");
    Ok(())
}
