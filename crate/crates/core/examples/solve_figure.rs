//! Solves the three-region partition with a 120-degree junction on the
//! diagonal and renders the quadrant picture.
//!
//! The bounded chamber is enclosed by a constant-weighted-curvature arc
//! from the horizontal axis to the diagonal, its mirror image, and the
//! diagonal interface running outward from where they meet. Outputs land
//! in ./solve-figure-out: an SVG of the three interfaces plus the curve
//! points as CSV.

use isoper8::cmc::{solve_partition, SolverConfig};
use isoper8::report;
use std::path::Path;

fn main() {
    let cfg = SolverConfig {
        // A coarser step than the library default keeps this example quick;
        // the defect still settles to eight digits.
        step: 1e-3,
        ..SolverConfig::default()
    };
    let (partition, report) = solve_partition(&cfg).expect("default bracket contains the root");

    println!("axis intercept a*      {:.10}", report.intercept_a);
    println!(
        "junction               ({:.10}, {:.10})",
        partition.junction[0], partition.junction[1]
    );
    println!("chamber perimeter      {:.6e}", report.perimeter_region1);
    println!("chamber volume         {:.6e}", report.volume_region1);
    println!("replaced cone area     {:.6e}", report.cone_inside);
    println!("defect                 {:.10}", report.defect);

    let dir = Path::new("solve-figure-out");
    std::fs::create_dir_all(dir).expect("output directory");
    report::save_partition_svg(&dir.join("partition.svg"), &partition).unwrap();
    report::write_interfaces_csv(&dir.join("partition.csv"), &partition).unwrap();
    println!();
    println!("wrote {}/partition.svg and partition.csv", dir.display());
}
