//! The sorites ("heap") paradox, dissolved by a largest number.
//!
//! The classical argument: one grain is not a heap, and adding a single
//! grain never turns a non-heap into a heap, so no number of grains is a
//! heap. The induction relies on ordinary arithmetic, where `n + 1` is
//! always a new, larger number. In `[0, M]` with saturating addition
//! there is nowhere past `M` to climb to, and the induction stalls.
//!
//! Run with: `cargo run --example heap_paradox`

use prearith::{am_add, run_demo, AmValue, Demo, ExactScalar, Magnitude};

fn main() -> prearith::Result<()> {
    // A heap is a million grains; make that the top of the carrier.
    let m = Magnitude::from_int(1_000_000)?;
    let heap = AmValue::top(m.clone());
    let grain = AmValue::new(ExactScalar::one(), m.clone())?;

    let still_heap = am_add(&heap, &grain)?;
    println!("one heap plus one grain: {heap} (+) {grain} = {still_heap}");
    assert_eq!(still_heap, heap, "adding a grain must not grow the heap");

    // The inductive step breaks exactly at the bound and nowhere else.
    let below = AmValue::new(ExactScalar::from(999_999), m.clone())?;
    let stepped = am_add(&below, &grain)?;
    println!("just below the bound: {below} (+) {grain} = {stepped}");
    assert_eq!(stepped, heap);

    let far_below = AmValue::new(ExactScalar::from(12), m)?;
    let counted = am_add(&far_below, &grain)?;
    println!("far below the bound:  {far_below} (+) {grain} = {counted}  (ordinary counting)");
    assert_eq!(counted.value(), &ExactScalar::from(13));

    // The same resolution, narrated, including the hardware variant where
    // M is i32::MAX and saturation replaces overflow.
    for demo in [Demo::Sorites, Demo::MachineInfinity] {
        let report = run_demo(demo)?;
        println!("\ndemo {} (M = {})", report.demo, report.magnitude);
        for line in &report.narrative {
            println!("  {line}");
        }
        println!("  {}", report.equation);
    }
    Ok(())
}
