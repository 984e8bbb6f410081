//! Property-based checks of the algebraic claims the library makes.
//!
//! These complement the unit tests: instead of pinning specific values,
//! each property states an invariant — associativity where it is promised,
//! idempotence of the projections, print/parse round trips — and lets the
//! framework hunt for counterexamples.

use proptest::collection::vec;
use proptest::prelude::*;

use prearith::{
    am_add, am_coproject, am_mul, amm_add, amm_coproject, amm_fold, bm_forward, bm_inverse,
    AmValue, AmmValue, BmMagnitude, BmValue, ExactScalar, Expr, ExtendedRational, Magnitude,
    SeriesKind, SeriesSpec,
};

/// Nonnegative rational `p/q` with `p/q <= max_int` and a small denominator.
fn arb_rational(max_int: i64) -> impl Strategy<Value = ExactScalar> {
    (1i64..=64).prop_flat_map(move |q| (0..=max_int * q).prop_map(move |p| ExactScalar::ratio(p, q)))
}

fn arb_signed_rational(max_int: i64) -> impl Strategy<Value = ExactScalar> {
    (arb_rational(max_int), any::<bool>()).prop_map(|(r, neg)| if neg { -r } else { r })
}

/// A magnitude `M` together with three values drawn from `[0, M]`.
fn am_triple() -> impl Strategy<Value = Vec<AmValue>> {
    (1i64..=100).prop_flat_map(|m| {
        let magnitude = Magnitude::from_int(m).unwrap();
        let value = (1i64..=64).prop_flat_map(move |q| {
            let magnitude = magnitude.clone();
            (0..=m * q).prop_map(move |p| {
                AmValue::new(ExactScalar::ratio(p, q), magnitude.clone()).unwrap()
            })
        });
        vec(value, 3)
    })
}

/// A magnitude `M` together with values drawn from `[-M, M]`.
fn amm_values(len: usize) -> impl Strategy<Value = Vec<AmmValue>> {
    (1i64..=20).prop_flat_map(move |m| {
        let magnitude = Magnitude::from_int(m).unwrap();
        let value = (1i64..=16).prop_flat_map(move |q| {
            let magnitude = magnitude.clone();
            (-m * q..=m * q).prop_map(move |p| {
                AmmValue::new(ExactScalar::ratio(p, q), magnitude.clone()).unwrap()
            })
        });
        vec(value, 1..=len)
    })
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..=1000, 1i64..=50).prop_map(|(p, q)| Expr::Literal(ExactScalar::ratio(p, q))),
        Just(Expr::MConst),
    ];
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            inner.prop_map(|e| Expr::Neg(Box::new(e))),
        ]
    })
}

fn arb_series_kind() -> impl Strategy<Value = SeriesKind> {
    prop_oneof![
        (arb_signed_rational(10), arb_signed_rational(3))
            .prop_map(|(first, ratio)| SeriesKind::Geometric { first, ratio }),
        any::<bool>().prop_map(|negated| SeriesKind::Harmonic { negated }),
        Just(SeriesKind::AlternatingHarmonic),
        Just(SeriesKind::Grandi),
        (1i64..=5).prop_map(|p| SeriesKind::PSeries {
            exponent: ExactScalar::ratio(p, 2),
        }),
        vec(arb_signed_rational(10), 1..=8).prop_map(SeriesKind::ExplicitList),
    ]
}

proptest! {
    /// Unlike the signed class, `[0, M]` addition really is associative:
    /// once a sum passes `M` it can never come back down.
    #[test]
    fn saturating_add_is_associative_and_commutative(v in am_triple()) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let left = am_add(&am_add(a, b).unwrap(), c).unwrap();
        let right = am_add(a, &am_add(b, c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(am_add(a, b).unwrap(), am_add(b, a).unwrap());
    }

    #[test]
    fn saturating_mul_is_commutative(v in am_triple()) {
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(am_mul(a, b).unwrap(), am_mul(b, a).unwrap());
    }

    #[test]
    fn saturating_add_is_monotone(v in am_triple()) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let (lo, hi) = if a.value() <= b.value() { (a, b) } else { (b, a) };
        prop_assert!(am_add(lo, c).unwrap().value() <= am_add(hi, c).unwrap().value());
    }

    /// Projecting a second time changes nothing, and the image always lies
    /// inside the carrier — the definition of a projection onto `[0, M]`.
    #[test]
    fn unsigned_coprojection_is_idempotent(m in 1i64..=100, x in arb_rational(200)) {
        let magnitude = Magnitude::from_int(m).unwrap();
        let once = am_coproject(&ExtendedRational::from(x), &magnitude).unwrap();
        let twice =
            am_coproject(&ExtendedRational::from(once.value().clone()), &magnitude).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!(once.value() <= magnitude.value());
    }

    #[test]
    fn signed_coprojection_is_idempotent_and_bounded(
        m in 1i64..=100,
        x in arb_signed_rational(200),
    ) {
        let magnitude = Magnitude::from_int(m).unwrap();
        let once = amm_coproject(&ExtendedRational::from(x), &magnitude);
        let twice = amm_coproject(&ExtendedRational::from(once.value().clone()), &magnitude);
        prop_assert_eq!(&once, &twice);
        prop_assert!(once.value().abs() <= magnitude.value().clone());
    }

    /// Signed addition loses associativity but keeps commutativity:
    /// `t(a + b) = t(b + a)` exactly.
    #[test]
    fn signed_add_commutes(v in amm_values(2)) {
        let a = &v[0];
        let b = v.get(1).unwrap_or(a);
        prop_assert_eq!(amm_add(a, b).unwrap(), amm_add(b, a).unwrap());
    }

    /// A left fold can be checkpointed: folding a prefix and continuing
    /// from the result matches folding everything at once. (Regrouping the
    /// *right* end is what changes answers in this class.)
    #[test]
    fn signed_fold_checkpoints(v in amm_values(12), split in 1usize..=12) {
        let split = split.min(v.len());
        let whole = amm_fold(&v).unwrap();
        let prefix = amm_fold(&v[..split]).unwrap();
        let mut rest = vec![prefix];
        rest.extend_from_slice(&v[split..]);
        prop_assert_eq!(whole, amm_fold(&rest).unwrap());
    }

    /// The generator and its inverse undo each other to within the
    /// documented tolerance, and the inverse preserves order.
    #[test]
    fn generator_round_trip_and_monotonicity(
        m in 0.5f64..1000.0,
        a in 0.0f64..=1.0,
        b in 0.0f64..=1.0,
    ) {
        let magnitude = BmMagnitude::new(m).unwrap();
        let va = BmValue::new(a * m, magnitude).unwrap();
        let vb = BmValue::new(b * m, magnitude).unwrap();
        let back = bm_forward(bm_inverse(&va), magnitude);
        prop_assert!((back.value() - va.value()).abs() <= 1e-9 * m);
        // Strict monotonicity, tested away from float-collision range.
        if vb.value() - va.value() > 1e-6 * m {
            prop_assert!(bm_inverse(&va) < bm_inverse(&vb));
        }
    }

    #[test]
    fn expressions_print_and_reparse(expr in arb_expr()) {
        let printed = expr.to_string();
        let reparsed: Expr = printed.parse().expect("printed form must parse");
        prop_assert_eq!(reparsed, expr);
    }

    #[test]
    fn series_specs_print_and_reparse(kind in arb_series_kind()) {
        let spec = SeriesSpec::new(kind);
        let printed = spec.to_string();
        let reparsed: SeriesSpec = printed.parse().expect("printed form must parse");
        prop_assert_eq!(reparsed.kind, spec.kind);
    }

    /// Prefix sums of a geometric series match the closed form
    /// `a (1 - r^k) / (1 - r)` (or `a k` when `r = 1`), term for term.
    #[test]
    fn geometric_prefix_sums_match_closed_form(
        a in arb_signed_rational(5),
        r in arb_signed_rational(2),
        k in 0usize..=40,
    ) {
        let spec = SeriesSpec::new(SeriesKind::Geometric {
            first: a.clone(),
            ratio: r.clone(),
        });
        let sum = spec.exact_prefix_sum(k).unwrap();
        let one = ExactScalar::one();
        let expected = if r == one {
            a * ExactScalar::from(k as i64)
        } else {
            a * (one.clone() - r.pow(k as u32)) / (one - r)
        };
        prop_assert_eq!(sum, expected);
    }
}
