//! The expression language: one syntax, three arithmetics.
//!
//! Expressions are built from nonnegative rational literals, the symbol
//! `M` for the top of the carrier, `+`, `*`, unary `-` (signed class
//! only), and parentheses. Both binary operators associate to the left,
//! and in the signed class that choice is observable.
//!
//! Run with: `cargo run --example expressions`

use prearith::{eval_expression, ArithClass, ClassContext, EvalMode, Expr, RunConfig};

fn eval(src: &str, config: &RunConfig) -> prearith::Result<String> {
    let expr: Expr = src.parse()?;
    Ok(eval_expression(&expr, config)?.value_string())
}

fn main() -> prearith::Result<()> {
    // The same source text, evaluated in each class.
    let src = "1/2 + 1/2 * M";
    for (class, magnitude) in [
        (ArithClass::Am, "2"),
        (ArithClass::Amm, "2"),
        (ArithClass::Bm, "2"),
    ] {
        let config = RunConfig::new(ClassContext::parse(class, magnitude)?);
        println!("{src} in {class} (M = {magnitude}): {}", eval(src, &config)?);
    }

    // In the clamped classes 1/2 * M is the ordinary product 1. In the
    // arctan class M is the image of +inf and the carrier point 1/2 sits
    // below the midpoint (its preimage is -1), so 1/2 * M is
    // (-1) * (+inf) = -inf, which lands on the endpoint 0: the answers
    // differ in kind, not just in rounding.

    // Left associativity is part of the meaning. In [-5, 5]:
    let signed = RunConfig::new(ClassContext::parse(ArithClass::Amm, "5")?);
    let flat = eval("4 + 2 + -3", &signed)?;
    let grouped = eval("4 + (2 + -3)", &signed)?;
    println!("\n4 + 2 + -3   = {flat}   (the running sum touches the wall at 5)");
    println!("4 + (2 + -3) = {grouped}   (parentheses keep it inside)");
    assert_ne!(flat, grouped);

    // Parsed expressions print in a canonical form that re-parses to the
    // same tree, parentheses included where they matter.
    let expr: Expr = "4 + (2 + -3)".parse()?;
    println!("\ncanonical form: {expr}");
    assert_eq!(expr.to_string().parse::<Expr>()?, expr);

    // Errors carry byte offsets and say what was expected.
    let err = "1/2 + ".parse::<Expr>().unwrap_err();
    println!("\nparse error demo: {err}");

    // Negation outside the signed class is a class error, not a parse
    // error: the syntax is fine, the carrier has no negatives.
    let unsigned = RunConfig::new(ClassContext::parse(ArithClass::Am, "2")?);
    let err = eval("-1", &unsigned).unwrap_err();
    println!("class error demo: {err}");

    // Strict mode turns the arctan conventions for inf + (-inf) into
    // errors instead of answers.
    let mut strict = RunConfig::new(ClassContext::parse(ArithClass::Bm, "2")?);
    strict.mode = EvalMode::Strict;
    let err = eval("M + 0", &strict).unwrap_err();
    println!("strict mode demo: {err}");
    Ok(())
}
