//! The arctan class on `[0, M]`: a carrier with infinities inside it.
//!
//! The generator `f(x) = M * (atan(x)/pi + 1/2)` is a bijection from the
//! extended reals onto `[0, M]`: the endpoint `0` is the image of `-inf`,
//! `M` the image of `+inf`, and the midpoint `M/2` the image of `0`.
//! Operations are pulled back through `f`: apply `f^-1`, compute in the
//! extended reals, apply `f`. Endpoints are handled by tag, never by
//! evaluating `tan` near its poles.
//!
//! Run with: `cargo run --example arctan_projective`

use prearith::{
    bm_add, bm_forward, bm_inverse, bm_mul, BmMagnitude, BmValue, EvalMode, Error,
    ExtendedReal,
};

fn main() -> prearith::Result<()> {
    let m = BmMagnitude::new(4.0)?;

    // Anchor points of the generator.
    println!("f(-inf) = {}", bm_forward(ExtendedReal::NegInf, m));
    println!("f(0)    = {}", bm_forward(ExtendedReal::Finite(0.0), m));
    println!("f(1)    = {}", bm_forward(ExtendedReal::Finite(1.0), m));
    println!("f(+inf) = {}", bm_forward(ExtendedReal::PosInf, m));
    assert_eq!(bm_forward(ExtendedReal::Finite(0.0), m).value(), 2.0);
    assert_eq!(bm_forward(ExtendedReal::Finite(1.0), m).value(), 3.0);

    // The inverse returns infinity tags at the endpoints, exactly.
    let bottom = BmValue::new(0.0, m)?;
    let top = BmValue::top(m);
    assert_eq!(bm_inverse(&bottom), ExtendedReal::NegInf);
    assert_eq!(bm_inverse(&top), ExtendedReal::PosInf);
    println!("\nf^-1(0) = {}, f^-1(M) = {}", bm_inverse(&bottom), bm_inverse(&top));

    // Projected addition: 2 (+) 3 at M = 4. Both preimages are finite
    // (f^-1(2) = 0, f^-1(3) = 1), so the sum is f(0 + 1) = 3.
    let two = BmValue::new(2.0, m)?;
    let three = BmValue::new(3.0, m)?;
    let sum = bm_add(&two, &three, EvalMode::Total)?;
    println!("\n2 (+) 3 = {sum}");
    assert_eq!(sum.value(), 3.0);

    // M absorbs addition exactly: +inf plus anything finite is +inf.
    let absorbed = bm_add(&top, &three, EvalMode::Total)?;
    println!("M (+) 3 = {absorbed}");
    assert_eq!(absorbed, top);

    // The midpoint M/2 is the additive identity and the multiplicative
    // annihilator, because it is the image of the real number 0.
    let mid = BmValue::new(2.0, m)?;
    let kept = bm_add(&three, &mid, EvalMode::Total)?;
    let killed = bm_mul(&three, &mid, EvalMode::Total)?;
    println!("3 (+) M/2 = {kept},  3 (*) M/2 = {killed}");
    assert_eq!(kept.value(), 3.0);
    assert_eq!(killed, mid);

    // Indeterminate forms: M (+) 0 is (+inf) + (-inf). Total mode
    // resolves it to +inf so that M stays absorbing; strict mode refuses.
    let total = bm_add(&top, &bottom, EvalMode::Total)?;
    println!("\nM (+) 0 in total mode  = {total}");
    assert_eq!(total, top);
    match bm_add(&top, &bottom, EvalMode::Strict) {
        Err(Error::IndeterminateForm(form)) => {
            println!("M (+) 0 in strict mode -> indeterminate form: {form}");
        }
        other => panic!("expected an indeterminate form, got {other:?}"),
    }

    // 0 (*) M is (-inf) * (+inf) = -inf: determinate in both modes.
    let product = bm_mul(&bottom, &top, EvalMode::Strict)?;
    println!("0 (*) M in strict mode = {product}");
    assert_eq!(product, bottom);

    // Round trips through the generator stay within a relative 1e-9 of M.
    let tol = 1e-9 * m.value();
    for i in 0..=400 {
        let v = BmValue::new(4.0 * f64::from(i) / 400.0, m)?;
        let back = bm_forward(bm_inverse(&v), m);
        assert!((back.value() - v.value()).abs() <= tol, "round trip at {v}");
    }
    println!("\n401 round trips f(f^-1(v)) stayed within {tol:e} of v");
    Ok(())
}
