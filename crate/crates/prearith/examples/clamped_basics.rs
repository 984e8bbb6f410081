//! The clamped class on `[0, M]`: which laws survive the clamp.
//!
//! Addition and multiplication are the usual ones followed by `min(M, .)`.
//! Everything is exact rational arithmetic, so when a law fails below,
//! the failure belongs to the clamp, not to rounding.
//!
//! Run with: `cargo run --example clamped_basics`

use prearith::{am_add, am_coproject, am_mul, AmValue, ExactScalar, ExtendedRational, Magnitude};

fn v(text: &str, m: &Magnitude) -> AmValue {
    AmValue::new(text.parse().unwrap(), m.clone()).expect("value in [0, M]")
}

fn main() -> prearith::Result<()> {
    let m = Magnitude::from_int(2)?;

    // Plain arithmetic under the bound.
    let (a, b) = (v("1/2", &m), v("3/4", &m));
    println!("below the bound:  {a} (+) {b} = {}", am_add(&a, &b)?);
    println!("at the bound:     {a} (*) 2 = {}", am_mul(&a, &v("2", &m))?);

    // Saturating addition stays associative: min(M, .) composes cleanly
    // over sums. Check the clamp-heavy corner explicitly.
    let (x, y, z) = (v("3/2", &m), v("3/2", &m), v("2", &m));
    let left = am_add(&am_add(&x, &y)?, &z)?;
    let right = am_add(&x, &am_add(&y, &z)?)?;
    println!("\n(+) associativity even when clamping: {left} = {right}");
    assert_eq!(left, right);

    // Multiplication is not so lucky. With a = 1/2, b = c = 2 at M = 2:
    // (a (*) b) (*) c keeps every intermediate in range and reaches 2,
    // while b (*) c hits the bound first and shrinks the result to 1.
    let (a, b, c) = (v("1/2", &m), v("2", &m), v("2", &m));
    let grouped_left = am_mul(&am_mul(&a, &b)?, &c)?;
    let grouped_right = am_mul(&a, &am_mul(&b, &c)?)?;
    println!("\n(*) associativity fails once an intermediate clamps:");
    println!("  (1/2 (*) 2) (*) 2 = {grouped_left}");
    println!("  1/2 (*) (2 (*) 2) = {grouped_right}");
    assert_ne!(grouped_left, grouped_right);

    // The same tuple breaks distributivity, in the other direction.
    let distributed = am_add(&am_mul(&a, &b)?, &am_mul(&a, &c)?)?;
    let factored = am_mul(&a, &am_add(&b, &c)?)?;
    println!("  1/2 (*) (2 (+) 2) = {factored}, but 1/2 (*) 2 (+) 1/2 (*) 2 = {distributed}");
    assert_ne!(factored, distributed);

    // The coprojector h(x) = min(M, x) brings any nonnegative extended
    // real into the carrier; +inf lands exactly on M.
    let projected = am_coproject(&ExtendedRational::from(ExactScalar::from(17)), &m)?;
    let infinity = am_coproject(&ExtendedRational::PosInf, &m)?;
    println!("\nh(17) = {projected},  h(+inf) = {infinity}");
    assert_eq!(projected, AmValue::top(m.clone()));
    assert_eq!(infinity, AmValue::top(m.clone()));

    // Negative reals have no image in [0, M]; that is an error, not a 0.
    let err = am_coproject(&ExtendedRational::from(ExactScalar::from(-1)), &m).unwrap_err();
    println!("h(-1) -> {err}");
    Ok(())
}
