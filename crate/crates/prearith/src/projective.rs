//! The arctan-generated class on `[0, M]`.
//!
//! The generator `f(x) = M * (arctan(x)/pi + 1/2)` is an order isomorphism
//! from the extended reals onto `[0, M]`, with `f(-inf) = 0` and
//! `f(+inf) = M`. Its inverse is `f^-1(a) = tan(pi/M * (a - M/2))`. The
//! class operations conjugate ordinary extended-real arithmetic through `f`:
//!
//! ```text
//! a (+) b = f(f^-1(a) + f^-1(b))      a (*) b = f(f^-1(a) * f^-1(b))
//! ```
//!
//! Because the whole extended line is squeezed into `[0, M]`, the structure
//! inherits the algebra of the extended reals under the conventions of
//! [`crate::scalar::ext_add`] and [`crate::scalar::ext_mul`]: addition and
//! multiplication are commutative and associative, the neutral elements are
//! `f(0) = M/2` and `f(1) = 3M/4`, `M/2` annihilates multiplication, and `M`
//! absorbs addition (`M (+) a = M` for every `a`, exactly — the endpoint is
//! handled as a tag, never through `tan`).
//!
//! Everything here is binary64. Away from the endpoints the operations are
//! accurate to a few ulp; tests compare with a relative tolerance of `1e-9`
//! (times `M`).

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{ext_add, ext_mul, BmMagnitude, EvalMode, ExtendedReal};

/// An element of `[0, M]` tagged with its magnitude.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BmValue {
    value: f64,
    magnitude: BmMagnitude,
}

impl BmValue {
    pub fn new(value: f64, magnitude: BmMagnitude) -> Result<Self> {
        if !value.is_finite() || value < 0.0 || value > magnitude.value() {
            return Err(Error::Domain(format!(
                "value {value} outside [0, {magnitude}]"
            )));
        }
        Ok(BmValue {
            value: value + 0.0, // canonicalize -0.0
            magnitude,
        })
    }

    pub fn zero(magnitude: BmMagnitude) -> Self {
        BmValue {
            value: 0.0,
            magnitude,
        }
    }

    /// The top element `M`.
    pub fn top(magnitude: BmMagnitude) -> Self {
        BmValue {
            value: magnitude.value(),
            magnitude,
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn magnitude(&self) -> BmMagnitude {
        self.magnitude
    }

    /// Equality up to `1e-9 * M`. Values with different magnitudes are
    /// never approximately equal.
    pub fn approx_eq(&self, other: &BmValue) -> bool {
        self.approx_eq_within(other, 1e-9)
    }

    /// Equality up to `rel_tol * M`.
    pub fn approx_eq_within(&self, other: &BmValue, rel_tol: f64) -> bool {
        self.magnitude == other.magnitude
            && (self.value - other.value).abs() <= rel_tol * self.magnitude.value()
    }
}

impl fmt::Display for BmValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The generator `f`. Infinities map to the endpoints exactly.
pub fn bm_forward(x: ExtendedReal, magnitude: BmMagnitude) -> BmValue {
    let m = magnitude.value();
    let value = match x {
        ExtendedReal::NegInf => 0.0,
        ExtendedReal::PosInf => m,
        // atan stays within the rounded pi/2, so the ratio lands in
        // [-1/2, 1/2] and the product in [0, M]; the clamp only guards
        // against a libm that is off by more than an ulp.
        ExtendedReal::Finite(v) => (m * (v.atan() / PI + 0.5)).clamp(0.0, m),
    };
    BmValue { value, magnitude }
}

/// The inverse generator `f^-1`. The endpoints return the infinity tags
/// without evaluating `tan`.
pub fn bm_inverse(a: &BmValue) -> ExtendedReal {
    let m = a.magnitude.value();
    if a.value == 0.0 {
        ExtendedReal::NegInf
    } else if a.value == m {
        ExtendedReal::PosInf
    } else {
        ExtendedReal::Finite((PI / m * (a.value - m / 2.0)).tan())
    }
}

fn same_magnitude(a: &BmValue, b: &BmValue) -> Result<BmMagnitude> {
    if a.magnitude == b.magnitude {
        Ok(a.magnitude)
    } else {
        Err(Error::MagnitudeMismatch {
            left: a.magnitude.to_string(),
            right: b.magnitude.to_string(),
        })
    }
}

/// `a (+) b = f(f^-1(a) + f^-1(b))`.
pub fn bm_add(a: &BmValue, b: &BmValue, mode: EvalMode) -> Result<BmValue> {
    let magnitude = same_magnitude(a, b)?;
    let sum = ext_add(bm_inverse(a), bm_inverse(b), mode)?;
    Ok(bm_forward(sum, magnitude))
}

/// `a (*) b = f(f^-1(a) * f^-1(b))`.
pub fn bm_mul(a: &BmValue, b: &BmValue, mode: EvalMode) -> Result<BmValue> {
    let magnitude = same_magnitude(a, b)?;
    let product = ext_mul(bm_inverse(a), bm_inverse(b), mode)?;
    Ok(bm_forward(product, magnitude))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mag(m: f64) -> BmMagnitude {
        BmMagnitude::new(m).unwrap()
    }

    fn v(x: f64, m: &BmMagnitude) -> BmValue {
        BmValue::new(x, *m).unwrap()
    }

    #[test]
    fn construction_enforces_carrier() {
        let m = mag(4.0);
        assert!(BmValue::new(0.0, m).is_ok());
        assert!(BmValue::new(4.0, m).is_ok());
        assert!(BmValue::new(-0.1, m).is_err());
        assert!(BmValue::new(4.1, m).is_err());
        assert!(BmValue::new(f64::NAN, m).is_err());
        assert_eq!(BmValue::new(-0.0, m).unwrap().value().to_bits(), 0);
    }

    #[test]
    fn generator_maps_anchors() {
        let m = mag(4.0);
        assert_eq!(bm_forward(ExtendedReal::NegInf, m).value(), 0.0);
        assert_eq!(bm_forward(ExtendedReal::PosInf, m).value(), 4.0);
        // f(0) = M/2 exactly: atan(0) = 0 and M * 0.5 is exact.
        assert_eq!(bm_forward(ExtendedReal::Finite(0.0), m).value(), 2.0);
        // f(1) = 3M/4 since atan(1) = pi/4.
        let f1 = bm_forward(ExtendedReal::Finite(1.0), m).value();
        assert!((f1 - 3.0).abs() <= 1e-12 * 4.0, "f(1) = {f1}");
        // f(-1) = M/4.
        let fm1 = bm_forward(ExtendedReal::Finite(-1.0), m).value();
        assert!((fm1 - 1.0).abs() <= 1e-12 * 4.0, "f(-1) = {fm1}");
    }

    #[test]
    fn inverse_handles_endpoints_as_tags() {
        let m = mag(4.0);
        assert_eq!(bm_inverse(&BmValue::zero(m)), ExtendedReal::NegInf);
        assert_eq!(bm_inverse(&BmValue::top(m)), ExtendedReal::PosInf);
        assert_eq!(bm_inverse(&v(2.0, &m)), ExtendedReal::Finite(0.0));
    }

    #[test]
    fn generator_is_monotone() {
        let m = mag(7.0);
        let xs = [
            ExtendedReal::NegInf,
            ExtendedReal::Finite(-1e12),
            ExtendedReal::Finite(-3.0),
            ExtendedReal::Finite(0.0),
            ExtendedReal::Finite(0.5),
            ExtendedReal::Finite(42.0),
            ExtendedReal::Finite(1e12),
            ExtendedReal::PosInf,
        ];
        for pair in xs.windows(2) {
            assert!(
                bm_forward(pair[0], m).value() < bm_forward(pair[1], m).value(),
                "f not increasing between {} and {}",
                pair[0],
                pair[1]
            );
        }
    }

    #[test]
    fn round_trip_from_carrier() {
        let m = mag(4.0);
        for i in 0..=1000 {
            let a = v(4.0 * i as f64 / 1000.0, &m);
            let back = bm_forward(bm_inverse(&a), m);
            assert!(
                (back.value() - a.value()).abs() <= 1e-9 * 4.0,
                "round trip at {} gave {}",
                a.value(),
                back.value()
            );
        }
    }

    #[test]
    fn round_trip_from_line() {
        let m = mag(4.0);
        for &x in &[-1e6, -17.25, -1.0, -1e-9, 0.0, 1e-9, 0.5, 1.0, 533.0, 1e6] {
            let there = bm_forward(ExtendedReal::Finite(x), m);
            match bm_inverse(&there) {
                ExtendedReal::Finite(back) => {
                    assert!(
                        (back - x).abs() <= 1e-9 * x.abs().max(1.0),
                        "round trip at {x} gave {back}"
                    );
                }
                tag => panic!("round trip at {x} hit endpoint {tag}"),
            }
        }
    }

    #[test]
    fn two_plus_three_is_three_at_magnitude_four() {
        // f^-1(2) = 0 and f^-1(3) = tan(pi/4) = 1, so 2 (+) 3 = f(1) = 3.
        let m = mag(4.0);
        let sum = bm_add(&v(2.0, &m), &v(3.0, &m), EvalMode::Total).unwrap();
        assert!(sum.approx_eq(&v(3.0, &m)), "2 (+) 3 = {sum}");
    }

    #[test]
    fn top_absorbs_addition_exactly() {
        let m = mag(4.0);
        let top = BmValue::top(m);
        for x in [0.0, 0.004, 1.0, 2.0, 3.999, 4.0] {
            let sum = bm_add(&top, &v(x, &m), EvalMode::Total).unwrap();
            assert_eq!(sum.value(), 4.0, "M (+) {x}");
            let sym = bm_add(&v(x, &m), &top, EvalMode::Total).unwrap();
            assert_eq!(sym.value(), 4.0, "{x} (+) M");
        }
    }

    #[test]
    fn zero_times_zero_is_top() {
        // f^-1(0) = -inf and (-inf) * (-inf) = +inf, so 0 (*) 0 = M.
        let m = mag(4.0);
        let zero = BmValue::zero(m);
        let product = bm_mul(&zero, &zero, EvalMode::Total).unwrap();
        assert_eq!(product.value(), 4.0);
    }

    #[test]
    fn midpoint_is_the_additive_identity() {
        let m = mag(4.0);
        let mid = v(2.0, &m);
        for x in [0.0, 0.5, 2.0, 3.75, 4.0] {
            let sum = bm_add(&v(x, &m), &mid, EvalMode::Total).unwrap();
            assert!(sum.approx_eq(&v(x, &m)), "{x} (+) M/2 = {sum}");
        }
    }

    #[test]
    fn midpoint_annihilates_multiplication() {
        let m = mag(4.0);
        let mid = v(2.0, &m);
        // Includes the endpoints: inf * 0 = 0 under the total convention.
        for x in [0.0, 0.5, 2.0, 3.75, 4.0] {
            let product = bm_mul(&v(x, &m), &mid, EvalMode::Total).unwrap();
            assert_eq!(product.value(), 2.0, "{x} (*) M/2");
        }
    }

    #[test]
    fn three_quarters_is_the_multiplicative_identity() {
        let m = mag(4.0);
        let unit = v(3.0, &m); // f(1)
        for x in [0.0, 0.5, 2.0, 3.75, 4.0] {
            let product = bm_mul(&v(x, &m), &unit, EvalMode::Total).unwrap();
            assert!(
                product.approx_eq_within(&v(x, &m), 1e-6),
                "{x} (*) f(1) = {product}"
            );
        }
    }

    #[test]
    fn strict_mode_reports_indeterminate_forms() {
        let m = mag(4.0);
        let zero = BmValue::zero(m);
        let top = BmValue::top(m);
        let mid = v(2.0, &m);
        assert!(matches!(
            bm_add(&top, &zero, EvalMode::Strict),
            Err(Error::IndeterminateForm("inf + -inf"))
        ));
        assert!(matches!(
            bm_mul(&mid, &top, EvalMode::Strict),
            Err(Error::IndeterminateForm("inf * 0"))
        ));
        // In total mode both are defined.
        assert_eq!(bm_add(&top, &zero, EvalMode::Total).unwrap().value(), 4.0);
        assert_eq!(bm_mul(&mid, &top, EvalMode::Total).unwrap().value(), 2.0);
        // 0 (*) M is -inf * +inf = -inf: determinate even in strict mode.
        assert_eq!(bm_mul(&zero, &top, EvalMode::Strict).unwrap().value(), 0.0);
    }

    #[test]
    fn addition_commutes_bit_for_bit() {
        let m = mag(5.0);
        let xs = [0.0, 0.31, 1.7, 2.5, 3.99, 5.0];
        for &a in &xs {
            for &b in &xs {
                let ab = bm_add(&v(a, &m), &v(b, &m), EvalMode::Total).unwrap();
                let ba = bm_add(&v(b, &m), &v(a, &m), EvalMode::Total).unwrap();
                assert_eq!(ab.value().to_bits(), ba.value().to_bits());
                let ab = bm_mul(&v(a, &m), &v(b, &m), EvalMode::Total).unwrap();
                let ba = bm_mul(&v(b, &m), &v(a, &m), EvalMode::Total).unwrap();
                assert_eq!(ab.value().to_bits(), ba.value().to_bits());
            }
        }
    }

    #[test]
    fn addition_associates_within_tolerance_away_from_endpoints() {
        let m = mag(5.0);
        let xs = [0.05, 1.0, 2.49, 2.5, 3.2, 4.95];
        for &a in &xs {
            for &b in &xs {
                for &c in &xs {
                    let lhs = bm_add(
                        &bm_add(&v(a, &m), &v(b, &m), EvalMode::Total).unwrap(),
                        &v(c, &m),
                        EvalMode::Total,
                    )
                    .unwrap();
                    let rhs = bm_add(
                        &v(a, &m),
                        &bm_add(&v(b, &m), &v(c, &m), EvalMode::Total).unwrap(),
                        EvalMode::Total,
                    )
                    .unwrap();
                    assert!(
                        lhs.approx_eq_within(&rhs, 1e-6),
                        "({a} + {b}) + {c}: {} vs {}",
                        lhs.value(),
                        rhs.value()
                    );
                }
            }
        }
    }

    #[test]
    fn magnitude_mismatch_is_reported() {
        let a = BmValue::zero(mag(2.0));
        let b = BmValue::zero(mag(3.0));
        assert!(matches!(
            bm_add(&a, &b, EvalMode::Total),
            Err(Error::MagnitudeMismatch { .. })
        ));
    }
}
