//! Density landscape of the diagonal cone: how much cone area a ball
//! captures, as a fraction of rho^7, depending on where the ball sits.
//!
//! A ball centered on the cone at small radius sees an almost-flat sheet,
//! so the ratio starts at the unit 7-ball volume. As the radius grows the
//! ball wraps around the vertex and the ratio climbs to pi^4/14, the
//! density of the full cone. Centers off the cone capture nothing until
//! the ball first touches it. The supremum over everything is the vertex
//! value, which is what makes the vertex special.

use isoper8::asymptotics::{density_sup_estimate, simons_ball_area, CenterSpec, ConeKind};
use isoper8::exact;
use std::f64::consts::PI;

fn main() {
    let omega7 = exact::unit_ball_volume(7).unwrap();
    let vertex = PI.powi(4) / 14.0;
    println!("flat-sheet density (omega_7)  {omega7:.12}");
    println!("vertex density (pi^4/14)      {vertex:.12}");
    println!();

    let on_cone = CenterSpec::Diagonal(1.0 / 2.0_f64.sqrt());
    println!("ball centered ON the cone at distance 1 from the origin:");
    println!("{:>10} {:>18}", "rho", "area / rho^7");
    for &rho in &[0.01, 0.1, 1.0, 3.0, 10.0, 100.0] {
        let ratio = simons_ball_area(on_cone, rho).unwrap() / rho.powi(7);
        println!("{rho:>10} {ratio:>18.12}");
    }
    println!("(rises from omega_7 to pi^4/14 as the ball swallows the vertex)");
    println!();

    let off_cone = CenterSpec::Axis(1.0);
    println!("ball centered OFF the cone, on a block axis at distance 1:");
    println!("{:>10} {:>18}", "rho", "area / rho^7");
    for &rho in &[0.5, 0.707, 0.8, 1.0, 3.0, 30.0] {
        let ratio = simons_ball_area(off_cone, rho).unwrap() / rho.powi(7);
        println!("{rho:>10} {ratio:>18.12}");
    }
    println!("(zero until rho reaches the cone distance 1/sqrt(2), then catches up)");
    println!();

    let centers: Vec<CenterSpec> = (0..8)
        .map(|k| CenterSpec::Diagonal(0.25 * k as f64))
        .chain((1..5).map(|k| CenterSpec::Axis(0.5 * k as f64)))
        .collect();
    let radii: Vec<f64> = (0..12).map(|k| 0.05 * 2.0_f64.powi(k)).collect();
    let sup = density_sup_estimate(ConeKind::Simons, &centers, &radii).unwrap();
    println!("supremum over a {}x{} center/radius grid: {sup:.12}", centers.len(), radii.len());
    println!("which is the vertex density again, as it should be");
}
