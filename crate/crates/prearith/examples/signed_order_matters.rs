//! The signed clamped class on `[-M, M]`: addition without associativity.
//!
//! Clamping to both ends of `[-M, M]` destroys associativity of addition
//! itself (not just multiplication): a running sum that touches a wall
//! forgets how far past it the true sum went, and a later term of the
//! opposite sign cannot win that information back. Any fold over this
//! class must therefore fix an order; here it is strictly left to right.
//!
//! Run with: `cargo run --example signed_order_matters`

use prearith::{amm_add, amm_coproject, amm_fold, AmmValue, ExactScalar, Magnitude};

fn v(n: i64, m: &Magnitude) -> AmmValue {
    AmmValue::new(ExactScalar::from(n), m.clone()).expect("value in [-M, M]")
}

fn main() -> prearith::Result<()> {
    let m = Magnitude::from_int(5)?;

    // Associativity of (+) fails: regrouping moves a clamp.
    let (a, b, c) = (v(-2, &m), v(5, &m), v(1, &m));
    let left = amm_add(&amm_add(&a, &b)?, &c)?; // (-2 + 5) + 1 = 4
    let right = amm_add(&a, &amm_add(&b, &c)?)?; // -2 + clamp(6) = 3
    println!("(-2 (+) 5) (+) 1 = {left}");
    println!("-2 (+) (5 (+) 1) = {right}");
    assert_ne!(left, right, "regrouping must move the clamp");

    // Consequently the order of terms in a fold is part of the answer.
    let forward = amm_fold(&[v(4, &m), v(2, &m), v(-3, &m)])?;
    let shuffled = amm_fold(&[v(4, &m), v(-3, &m), v(2, &m)])?;
    println!("\nfold [4, 2, -3] = {forward}   (4 + 2 clamps to 5, then -3)");
    println!("fold [4, -3, 2] = {shuffled}   (no clamp anywhere)");
    assert_eq!(forward.value(), &ExactScalar::from(2));
    assert_eq!(shuffled.value(), &ExactScalar::from(3));

    // Commutativity of a single (+) still holds; it is only regrouping
    // across three or more terms that can differ.
    let ab = amm_add(&a, &b)?;
    let ba = amm_add(&b, &a)?;
    assert_eq!(ab, ba);
    println!("\nsingle additions commute: -2 (+) 5 = 5 (+) -2 = {ab}");

    // The projector t clamps both ways and is total on the extended reals.
    let overflow = amm_coproject(&ExactScalar::from(12).into(), &m);
    let underflow = amm_coproject(&ExactScalar::from(-12).into(), &m);
    println!("t(12) = {overflow},  t(-12) = {underflow}");
    assert_eq!(overflow, AmmValue::top(m.clone()));
    assert_eq!(underflow, AmmValue::bottom(m.clone()));

    // Negation is closed and cancels, one of the laws [0, M] lacks.
    let x = v(4, &m);
    let cancelled = amm_add(&x, &x.neg())?;
    println!("4 (+) -4 = {cancelled}");
    assert_eq!(cancelled, AmmValue::zero(m));
    Ok(())
}
