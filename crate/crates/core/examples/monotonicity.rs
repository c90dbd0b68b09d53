//! Density-ratio scan: weighted interface length in a growing annulus,
//! divided by the seventh power of the outer radius.
//!
//! For a partition whose bounded chamber fits inside the base ball this
//! ratio can only grow with the radius, and it converges to the density of
//! the cone the partition resembles from far away. The scan prints three
//! configurations: the bare diagonal cone (exactly constant), the barrel
//! (strictly rising), and a freshly solved partition (rising toward the
//! same limit).

use isoper8::asymptotics::monotonicity_scan;
use isoper8::cmc::{solve_partition, SolverConfig};
use isoper8::reduced::ReducedPartition3;
use std::f64::consts::PI;

fn geometric(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let ratio = (hi / lo).powf(1.0 / (count as f64 - 1.0));
    (0..count).map(|k| lo * ratio.powi(k as i32)).collect()
}

fn main() {
    let vertex_density = PI.powi(4) / 14.0;
    println!("cone density pi^4/14 = {vertex_density:.12}");
    println!();

    let cone = ReducedPartition3::simons(1.0).unwrap();
    let cone_scan = monotonicity_scan(&cone, 0.0, &geometric(0.5, 500.0, 8)).unwrap();
    println!("diagonal cone (ratio is the density itself at every radius):");
    for (rho, ratio) in cone_scan.radii.iter().zip(&cone_scan.ratios) {
        println!("  rho {rho:>10.3}   ratio {ratio:.12}");
    }
    println!();

    let barrel = ReducedPartition3::barrel(1.0).unwrap();
    let base = barrel.region1_max_radius();
    let barrel_scan =
        monotonicity_scan(&barrel, base, &geometric(base * 1.05, base * 1000.0, 8)).unwrap();
    println!("barrel (base radius {base:.4} excises the chamber):");
    for (rho, ratio) in barrel_scan.radii.iter().zip(&barrel_scan.ratios) {
        println!("  rho {rho:>10.3}   ratio {ratio:.12}");
    }
    println!("  extrapolated limit {:.12}", barrel_scan.limit_estimate());
    println!();

    let cfg = SolverConfig {
        step: 2e-3,
        ..SolverConfig::default()
    };
    let (solved, _) = solve_partition(&cfg).unwrap();
    let base = solved.region1_max_radius();
    let scan =
        monotonicity_scan(&solved, base, &geometric(base * 1.05, base * 1000.0, 8)).unwrap();
    println!("solved partition (base radius {base:.4}):");
    for (rho, ratio) in scan.radii.iter().zip(&scan.ratios) {
        println!("  rho {rho:>10.3}   ratio {ratio:.12}");
    }
    println!("  extrapolated limit {:.12}", scan.limit_estimate());
    println!();
    println!("all three tails settle on the cone density above. The barrel and");
    println!("solved tables even match row for row: past the base ball each is");
    println!("pure diagonal, so the ratio depends only on rho divided by base,");
    println!("and both scans use the same multiples");
}
