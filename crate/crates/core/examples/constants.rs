//! Prints the closed-form reference constants next to their independently
//! computed quadrature oracles.
//!
//! The two columns come from unrelated computations: the closed forms are
//! product formulas, the oracles climb dimension ladders one integral at a
//! time. Agreement to machine precision is the point of the exercise.

use isoper8::{exact, oracle};

fn row(name: &str, closed: f64, oracle_value: f64) {
    let scale = closed.abs().max(oracle_value.abs()).max(f64::MIN_POSITIVE);
    let rel = (closed - oracle_value).abs() / scale;
    println!("{name:<22} {closed:>22.15e} {oracle_value:>22.15e} {rel:>10.2e}");
}

fn main() {
    println!(
        "{:<22} {:>22} {:>22} {:>10}",
        "quantity", "closed form", "oracle", "rel diff"
    );

    let omega = oracle::omega_ladder(8);
    for d in 1..=8u32 {
        row(
            &format!("ball_volume_{d}"),
            exact::unit_ball_volume(d).unwrap(),
            omega[d as usize],
        );
    }

    let lens = exact::lens_quantities();
    let (vol, per, plane) = oracle::oracle_lens_quantities();
    row("lens_volume", lens.volume, vol);
    row("lens_perimeter", lens.perimeter, per);
    row("lens_plane_inside", lens.plane_inside, plane);

    let barrel = exact::barrel_quantities();
    let (bvol, bper, bcone) = oracle::oracle_barrel_quantities();
    row("barrel_volume", barrel.volume, bvol);
    row("barrel_perimeter", barrel.perimeter, bper);
    row("barrel_cone_inside", barrel.cone_inside, bcone);

    println!();
    println!("lens defect    {:.10}", lens.defect);
    println!("barrel defect  {:.10}", barrel.defect);
    println!("ball defect    {:.10}", exact::ball_defect());
    println!("(the barrel beats the lens, and both beat the round ball)");
}
