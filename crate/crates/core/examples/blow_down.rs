//! Blow-down of the solved partition: rescale by 1/r and watch the
//! interfaces collapse onto the diagonal ray.
//!
//! The solved chamber has a definite size, so under rescaling it shrinks
//! toward the origin and the remaining picture is dominated by the
//! diagonal interface. The farthest any interface point strays from the
//! diagonal is the axis intercept, and that distance scales exactly like
//! 1/r.

use isoper8::asymptotics::blow_down;
use isoper8::cmc::{solve_partition, SolverConfig};
use isoper8::reduced::ReducedPartition3;

/// Largest distance from an interface sample point to the ray {x = y}.
fn max_diagonal_distance(p: &ReducedPartition3) -> f64 {
    let mut worst = 0.0_f64;
    for curve in [&p.gamma12, &p.gamma13, &p.gamma23] {
        for q in curve.points() {
            worst = worst.max((q[0] - q[1]).abs() / 2.0_f64.sqrt());
        }
    }
    worst
}

fn main() {
    let cfg = SolverConfig {
        step: 2e-3,
        ..SolverConfig::default()
    };
    let (solved, report) = solve_partition(&cfg).unwrap();
    let d0 = max_diagonal_distance(&solved);
    println!("solved partition: axis intercept {:.6}", report.intercept_a);
    println!("distance of the unscaled interfaces to the diagonal: {d0:.6}");
    println!("(that is the intercept divided by sqrt(2): {:.6})", report.intercept_a / 2.0_f64.sqrt());
    println!();
    println!("{:>8} {:>16} {:>16}", "r", "distance", "distance * r");
    for &r in &[1.0, 10.0, 100.0, 1000.0, 10_000.0] {
        let d = max_diagonal_distance(&blow_down(&solved, r).unwrap());
        println!("{r:>8} {d:>16.9e} {:>16.9e}", d * r);
    }
    println!();
    println!("distance * r stays constant: the blow-down limit is the diagonal cone");
}
