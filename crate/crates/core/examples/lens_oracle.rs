//! Monte-Carlo cross-check of the lens volume.
//!
//! Samples uniform points in the tight bounding box of the intersection of
//! two unit balls in R^8 whose centers sit one radius apart, and compares
//! the hit-rate estimate against the closed form. The sample stream is
//! seeded, so the run is reproducible.

use isoper8::{exact, oracle};

fn main() {
    let closed = exact::lens_quantities().volume;
    println!("closed-form lens volume: {closed:.9}");
    println!();
    println!("{:>10} {:>14} {:>12} {:>8}", "samples", "estimate", "std error", "sigmas");
    for exponent in 4..=6u32 {
        let samples = 10u64.pow(exponent);
        let est = oracle::oracle_lens_volume(samples, 42).unwrap();
        let sigmas = (est.value - closed).abs() / est.std_error;
        println!(
            "{samples:>10} {:>14.9} {:>12.3e} {sigmas:>8.2}",
            est.value, est.std_error
        );
    }
    println!();
    println!("each row should land within a few standard errors of the closed form");
}
