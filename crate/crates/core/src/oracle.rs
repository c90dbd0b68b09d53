//! Independent numerical checks for the closed-form constants.
//!
//! Nothing in this module reuses the product formulas from [`crate::exact`].
//! Ball volumes and sphere areas are rebuilt from scratch by integral
//! recursions, and the lens quantities are recomputed two more ways
//! (1-d quadrature over slices, and Monte-Carlo rejection sampling), so the
//! three routes validate each other.

use crate::error::{GeomError, Result};
use crate::quad::gauss_panels;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Result of a Monte-Carlo volume estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    /// Estimated measure.
    pub value: f64,
    /// One-sigma standard error of `value` (binomial model).
    pub std_error: f64,
    /// Number of sample points used.
    pub samples: u64,
    /// Seed the point stream was derived from.
    pub seed: u64,
}

/// Unit-ball volumes `[omega_0, ..., omega_{d_max}]` built by quadrature.
///
/// Starts from omega_0 = 1 (the point) and climbs one dimension at a time
/// with the slice recursion
///
/// ```text
///     omega_d = omega_{d-1} * int_{-pi/2}^{pi/2} cos(phi)^d dphi
/// ```
///
/// which is Fubini applied to the ball sliced along its last coordinate,
/// written in the angle variable so the integrand is smooth. No factorial or
/// power-of-pi formulas are involved.
pub fn omega_ladder(d_max: u32) -> Vec<f64> {
    let half = std::f64::consts::FRAC_PI_2;
    let mut ladder = Vec::with_capacity(d_max as usize + 1);
    ladder.push(1.0);
    for d in 1..=d_max {
        let slice = gauss_panels(|phi| phi.cos().powi(d as i32), -half, half, 4);
        ladder.push(ladder[d as usize - 1] * slice);
    }
    ladder
}

/// Sphere areas `[A_0, ..., A_{d_max}]` with A_d the area of the unit
/// d-sphere, built by quadrature.
///
/// Starts from A_0 = 2 (two points with counting measure) and climbs with the
/// polar-slicing recursion A_d = A_{d-1} * int_0^pi sin(theta)^{d-1} dtheta.
pub fn sphere_ladder(d_max: u32) -> Vec<f64> {
    let pi = std::f64::consts::PI;
    let mut ladder = Vec::with_capacity(d_max as usize + 1);
    ladder.push(2.0);
    for d in 1..=d_max {
        let slice = gauss_panels(|theta| theta.sin().powi(d as i32 - 1), 0.0, pi, 4);
        ladder.push(ladder[d as usize - 1] * slice);
    }
    ladder
}

/// Lens quantities recomputed by 1-d quadrature over slices, using ladder
/// constants only.
///
/// Returns `(volume, perimeter, plane_inside)` for the unit-scale lens, the
/// intersection of two unit balls with centers at distance 1:
///
/// * volume: slices perpendicular to the center axis are 7-balls, so
///   `2 omega_7 int_{1/2}^1 (1 - y^2)^{7/2} dy`, evaluated in the angle
///   variable;
/// * perimeter: two spherical caps of polar angle pi/3 on unit 7-spheres,
///   `2 A_6 int_0^{pi/3} sin(t)^6 dt`;
/// * plane_inside: the 7-disk of radius sqrt(3)/2 cut out of the
///   mid-hyperplane.
pub fn oracle_lens_quantities() -> (f64, f64, f64) {
    let pi = std::f64::consts::PI;
    let omega = omega_ladder(7);
    let area = sphere_ladder(6);
    let volume = 2.0
        * omega[7]
        * gauss_panels(|phi| phi.cos().powi(8), pi / 6.0, pi / 2.0, 4);
    let perimeter = 2.0 * area[6] * gauss_panels(|t| t.sin().powi(6), 0.0, pi / 3.0, 4);
    let plane_inside = omega[7] * (3.0_f64.sqrt() / 2.0).powi(7);
    (volume, perimeter, plane_inside)
}

/// Barrel quantities recomputed from ladder constants and a radial integral.
///
/// Returns `(volume, perimeter, cone_inside)` for the unit bidisc
/// B^4 x B^4 in R^4 x R^4: volume omega_4^2, boundary 2 copies of S^3 x B^4,
/// and the portion of the cone {|x| = |y|} with |x| <= 1, whose area element
/// along the profile diagonal is sqrt(2) t^6 dt against A_3^2.
pub fn oracle_barrel_quantities() -> (f64, f64, f64) {
    let omega = omega_ladder(4);
    let area = sphere_ladder(3);
    let volume = omega[4] * omega[4];
    let perimeter = 2.0 * area[3] * omega[4];
    let cone_inside =
        2.0_f64.sqrt() * area[3] * area[3] * gauss_panels(|t| t.powi(6), 0.0, 1.0, 1);
    (volume, perimeter, cone_inside)
}

/// Monte-Carlo measure of `{p in box : inside(p)}`.
///
/// Samples uniform points in the axis-aligned box given by per-coordinate
/// `(lo, hi)` bounds and counts predicate hits. The stream is fully
/// determined by `seed`: points are produced in fixed chunks of 2^16, chunk
/// `i` drawing from an independent ChaCha8 stream `(seed, stream = i)`, and
/// hit counts are summed as integers, so the result is bit-identical for a
/// given seed no matter how many threads run the chunks.
pub fn mc_box_volume<F>(bounds: &[(f64, f64)], inside: F, samples: u64, seed: u64) -> McEstimate
where
    F: Fn(&[f64]) -> bool + Sync,
{
    const CHUNK: u64 = 1 << 16;
    let box_volume: f64 = bounds.iter().map(|&(lo, hi)| hi - lo).product();
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let n = CHUNK.min(samples - chunk * CHUNK);
            let mut point = vec![0.0_f64; bounds.len()];
            let mut local = 0u64;
            for _ in 0..n {
                for (x, &(lo, hi)) in point.iter_mut().zip(bounds) {
                    *x = lo + (hi - lo) * rng.random::<f64>();
                }
                if inside(&point) {
                    local += 1;
                }
            }
            local
        })
        .sum();
    let p = hits as f64 / samples as f64;
    McEstimate {
        value: box_volume * p,
        std_error: box_volume * (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
        seed,
    }
}

/// Monte-Carlo estimate of the lens volume.
///
/// The lens is the intersection of the unit balls centered at +-e_8/2; points
/// are drawn in its tight bounding box `[-sqrt(3)/2, sqrt(3)/2]^7 x
/// [-1/2, 1/2]` (hit rate about 1%). Deterministic per seed; see
/// [`mc_box_volume`].
///
/// # Errors
///
/// Requires `samples >= 10_000` so the reported standard error is meaningful.
pub fn oracle_lens_volume(samples: u64, seed: u64) -> Result<McEstimate> {
    if samples < 10_000 {
        return Err(GeomError::TooFewSamples(samples));
    }
    let r = 3.0_f64.sqrt() / 2.0;
    let mut bounds = [(-r, r); 8];
    bounds[7] = (-0.5, 0.5);
    let inside = |p: &[f64]| {
        let cross: f64 = p[..7].iter().map(|x| x * x).sum();
        let axis = p[7];
        cross + (axis - 0.5) * (axis - 0.5) <= 1.0 && cross + (axis + 0.5) * (axis + 0.5) <= 1.0
    };
    Ok(mc_box_volume(&bounds, inside, samples, seed))
}
