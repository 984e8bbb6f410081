//! Projecting series into bounded carriers: divergence becomes a value.
//!
//! A series is classified first (exactly where possible), then its value
//! in the extended reals is pushed through the class' projector. A series
//! that diverges to +inf is not an error in `[0, M]`: its projection is
//! simply `M`. Oscillating series are different - they have no value to
//! project, and the engine says so rather than averaging.
//!
//! Run with: `cargo run --example series_projection`

use prearith::{
    classify_series, project_series_am, project_series_amm, project_series_bm,
    split_identity_check, BmMagnitude, Magnitude, SeriesProjection, SeriesSpec,
};

fn main() -> prearith::Result<()> {
    let m10 = Magnitude::from_int(10)?;

    // The harmonic series diverges; in [0, 10] it lands exactly on M.
    let harmonic: SeriesSpec = "harmonic:+".parse()?;
    println!("harmonic series:    {}", classify_series(&harmonic)?);
    println!("  projected into [0, 10]: {}", project_series_am(&harmonic, &m10)?);

    // A convergent geometric series projects to its exact sum.
    let geometric: SeriesSpec = "geom:a=1,r=1/2".parse()?;
    println!("\ngeometric a=1 r=1/2: {}", classify_series(&geometric)?);
    let projected = project_series_am(&geometric, &m10)?;
    println!("  projected into [0, 10]: {projected}");
    assert_eq!(projected.value().to_string(), "2");

    // Powers of two diverge and saturate.
    let doubling: SeriesSpec = "geom:a=1,r=2".parse()?;
    println!("\ngeometric a=1 r=2:  {}", classify_series(&doubling)?);
    println!("  projected into [0, 10]: {}", project_series_am(&doubling, &m10)?);

    // The split identity h(sum) = h(prefix) (+) h(tail) holds for every
    // split point, clamped or not - checked exactly here at k = 3.
    assert!(split_identity_check(&doubling, 3, &m10)?);
    println!("  split identity at k=3: holds (1+2+4 projected, plus tail, still M)");

    // The alternating harmonic series converges to ln 2, strictly inside
    // [-1, 1], so the signed projection keeps the limit itself.
    let m1 = Magnitude::from_int(1)?;
    let alternating: SeriesSpec = "altharmonic".parse()?;
    println!("\nalternating harmonic: {}", classify_series(&alternating)?);
    match project_series_amm(&alternating, &m1)? {
        SeriesProjection::Converges(v) => {
            let ln2 = std::f64::consts::LN_2;
            println!("  projected into [-1, 1]: {v} (ln 2 = {ln2:.6}...)");
            assert!((v.value().to_f64() - ln2).abs() < 1e-4);
        }
        SeriesProjection::NoConvergence => unreachable!("ln 2 lies inside (-1, 1)"),
    }

    // The negated harmonic series pins the other wall.
    let sinking: SeriesSpec = "harmonic:-".parse()?;
    let projection = project_series_amm(&sinking, &m1)?;
    println!("\nnegated harmonic projected into [-1, 1]: {projection}");

    // An oscillating series has no projected value in any class: the
    // partial sums of -1 + 1 - 1 + ... never settle, and the projectors
    // are injective enough to preserve that.
    let grandi: SeriesSpec = "grandi".parse()?;
    println!("\ngrandi:             {}", classify_series(&grandi)?);
    let signed = project_series_amm(&grandi, &Magnitude::from_int(3)?)?;
    let arctan = project_series_bm(&grandi, &BmMagnitude::new(4.0)?)?;
    println!("  projected into [-3, 3]: {signed}");
    println!("  projected through arctan, M=4: {arctan}");
    assert_eq!(signed, SeriesProjection::NoConvergence);
    assert_eq!(arctan, SeriesProjection::NoConvergence);

    // In the arctan class a divergent series lands on an endpoint, which
    // is a legitimate carrier point (the image of +inf).
    let through_arctan = project_series_bm(&harmonic, &BmMagnitude::new(4.0)?)?;
    println!("\nharmonic projected through arctan, M=4: {through_arctan}");
    assert_eq!(through_arctan.converged().unwrap().value(), 4.0);
    Ok(())
}
