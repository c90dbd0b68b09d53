//! Large-radius behavior of reduced partitions: density scans, blow-downs,
//! and ball-density suprema of the reference cones.
//!
//! For an interface system Sigma and a ball B_rho(p) in R^8, the density
//! ratio is H^7(Sigma inside B_rho(p)) / rho^7. For minimal interfaces this
//! ratio is nondecreasing in rho (after excising a fixed core ball), and its
//! large-rho limit identifies the cone the configuration resembles from far
//! away: the diagonal cone carries ratio pi^4/14 about the origin at every
//! radius, while a hyperplane carries the unit 7-ball volume. Rescaling a
//! partition by 1/r (blow-down) makes that convergence visible at unit
//! scale.

use crate::error::{GeomError, Result};
use crate::exact;
use crate::quad::gauss_panels;
use crate::reduced::{weighted_length_in_annulus, ReducedCurve, ReducedPartition3};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Result of a density scan: perimeter-to-rho^7 ratios over growing radii.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityScan {
    /// Scan center in reduced coordinates.
    pub center: [f64; 2],
    /// Inner radius excised from every annulus.
    pub base_radius: f64,
    /// Outer radii, strictly increasing.
    pub radii: Vec<f64>,
    /// ratios[i] = weighted interface length in the annulus from
    /// `base_radius` to `radii[i]`, divided by `radii[i]^7`.
    pub ratios: Vec<f64>,
}

impl DensityScan {
    /// Extrapolated large-radius limit of the ratios.
    ///
    /// Models the tail as L - c / rho^7 (the exact form whenever the
    /// configuration is conical outside a bounded set) and eliminates c
    /// from the last two samples. A single-sample scan returns its only
    /// ratio; an empty scan returns NaN.
    pub fn limit_estimate(&self) -> f64 {
        match self.ratios.len() {
            0 => f64::NAN,
            1 => self.ratios[0],
            n => {
                let (r1, r0) = (self.radii[n - 1], self.radii[n - 2]);
                let (y1, y0) = (self.ratios[n - 1], self.ratios[n - 2]);
                let (p1, p0) = (r1.powi(7), r0.powi(7));
                (y1 * p1 - y0 * p0) / (p1 - p0)
            }
        }
    }
}

/// Scans the interface density of a partition about the origin.
///
/// For each outer radius rho the ratio sums the weighted lengths of all
/// three interfaces inside the annulus `base_radius <= |p| <= rho` and
/// divides by rho^7. The outgoing diagonal interface is extended along its
/// final segment direction when a requested radius passes its truncation
/// point, so truncation never depresses the tail of the scan.
///
/// # Errors
///
/// The partition must validate; the radii must be nonempty, strictly
/// increasing, and all beyond `base_radius` (which must be finite and
/// nonnegative); the bounded chamber must sit inside the base ball unless
/// it is empty.
pub fn monotonicity_scan(
    partition: &ReducedPartition3,
    base_radius: f64,
    radii: &[f64],
) -> Result<DensityScan> {
    partition.validate()?;
    if radii.is_empty() {
        return Err(GeomError::EmptyScanGrid);
    }
    let increasing = radii.windows(2).all(|w| w[1] > w[0]);
    let all_finite = radii.iter().all(|r| r.is_finite());
    if !(base_radius >= 0.0 && base_radius.is_finite())
        || !increasing
        || !all_finite
        || radii[0] <= base_radius
    {
        return Err(GeomError::BadRadii { base: base_radius });
    }
    if partition.region1_perimeter() > 0.0 {
        let required = partition.region1_max_radius();
        if required > base_radius {
            return Err(GeomError::RegionNotEnclosed {
                required,
                base: base_radius,
            });
        }
    }
    let rho_max = *radii.last().unwrap();
    let center = [0.0, 0.0];
    let gamma23 = extend_outward(&partition.gamma23, rho_max)?;
    let mut ratios = Vec::with_capacity(radii.len());
    for &rho in radii {
        let mut length = 0.0;
        for curve in [&partition.gamma12, &partition.gamma13, &gamma23] {
            length += weighted_length_in_annulus(curve, center, base_radius, rho)?;
        }
        ratios.push(length / rho.powi(7));
    }
    Ok(DensityScan {
        center,
        base_radius,
        radii: radii.to_vec(),
        ratios,
    })
}

/// Continues a curve along its final segment direction until it reaches
/// past distance `rho_max` from the origin. Returns the curve unchanged if
/// it already does.
fn extend_outward(curve: &ReducedCurve, rho_max: f64) -> Result<ReducedCurve> {
    let last = curve.last();
    let last_dist = last[0].hypot(last[1]);
    if last_dist >= rho_max {
        return Ok(curve.clone());
    }
    let points = curve.points();
    let prev = points[points.len() - 2];
    let (dx, dy) = (last[0] - prev[0], last[1] - prev[1]);
    let norm = dx.hypot(dy);
    // Overshooting is free: annulus clipping discards the surplus.
    let t = (rho_max + last_dist + 1.0) / norm;
    let mut extended = points.to_vec();
    extended.push([last[0] + t * dx, last[1] + t * dy]);
    ReducedCurve::new(extended)
}

/// Rescales a partition by 1/r, mapping the ball of radius r onto the unit
/// ball.
///
/// # Errors
///
/// The factor must be positive and finite.
pub fn blow_down(partition: &ReducedPartition3, r: f64) -> Result<ReducedPartition3> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(GeomError::BadBlowDownFactor(r));
    }
    let inv = 1.0 / r;
    ReducedPartition3::new(
        partition.gamma12.scaled(inv)?,
        partition.gamma13.scaled(inv)?,
        partition.gamma23.scaled(inv)?,
        [partition.junction[0] * inv, partition.junction[1] * inv],
        partition.symmetric,
        partition.region_labels,
    )
}

/// Reference cones whose ball densities are available in closed or
/// semi-closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeKind {
    /// The diagonal cone |u| = |v| in R^4 x R^4.
    Simons,
    /// A hyperplane through the origin.
    Hyperplane,
}

/// Ball centers for density evaluation, given by their distance parameter
/// in the reduced quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CenterSpec {
    /// Reduced point (c, c): on the diagonal cone, at distance c sqrt(2)
    /// from the origin.
    Diagonal(f64),
    /// Reduced point (c, 0): on a coordinate block axis, at distance c
    /// from the origin and c / sqrt(2) from the diagonal cone.
    Axis(f64),
}

impl CenterSpec {
    pub fn reduced_point(&self) -> [f64; 2] {
        match *self {
            CenterSpec::Diagonal(c) => [c, c],
            CenterSpec::Axis(c) => [c, 0.0],
        }
    }
}

/// Area under a circular cap: the integral of sqrt(1 - v^2) for v from w
/// to 1, clamped outside [-1, 1].
fn cap(w: f64) -> f64 {
    if w <= -1.0 {
        PI / 2.0
    } else if w >= 1.0 {
        0.0
    } else {
        0.5 * (w.acos() - w * (1.0 - w * w).sqrt())
    }
}

/// Double cap integral: the integral of sqrt(1-u^2) sqrt(1-v^2) over the
/// part of the square [-1,1]^2 with u + v >= tau.
fn double_cap(tau: f64) -> f64 {
    if tau <= -2.0 {
        return (PI / 2.0) * (PI / 2.0);
    }
    if tau >= 2.0 {
        return 0.0;
    }
    // The inner cap integral kinks where tau - u leaves [-1, 1]; split
    // there so every panel sees a smooth integrand. The substitution
    // u = sin(phi) absorbs the square-root vanishing of the outer factor
    // at u = -1 and u = 1.
    let mut cuts = vec![-1.0, 1.0];
    for c in [tau - 1.0, tau + 1.0] {
        if -1.0 < c && c < 1.0 {
            cuts.push(c);
        }
    }
    cuts.sort_by(f64::total_cmp);
    let mut total = 0.0;
    for pair in cuts.windows(2) {
        total += gauss_panels(
            |phi| {
                let (sin_p, cos_p) = phi.sin_cos();
                cos_p * cos_p * cap(tau - sin_p)
            },
            pair[0].asin(),
            pair[1].asin(),
            4,
        );
    }
    total
}

/// H^7 measure of the diagonal cone inside the ball of radius `rho`
/// centered at `center`.
///
/// Fibering the cone over its distance t from the origin trades the
/// spherical factors for the cap integrals above; the t-integral is split
/// at the radii where the cap structure changes, then evaluated by
/// Gauss-Legendre panels. A center at the origin has the closed form
/// pi^4 rho^7 / 14.
///
/// # Errors
///
/// The center parameter must be nonnegative and the radius positive.
pub fn simons_ball_area(center: CenterSpec, rho: f64) -> Result<f64> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(GeomError::BadRadii { base: 0.0 });
    }
    let s2 = 2.0_f64.sqrt();
    match center {
        CenterSpec::Diagonal(c) => {
            if c < 0.0 || !c.is_finite() {
                return Err(GeomError::BadConfig(format!("diagonal center {c}")));
            }
            if c == 0.0 {
                return Ok(PI.powi(4) / 14.0 * rho.powi(7));
            }
            let t_lo = (c - rho / s2).max(0.0);
            let t_hi = c + rho / s2;
            let mut cuts = vec![t_lo, t_hi];
            let t_mid_sq = (rho * rho - 2.0 * c * c) / 2.0;
            if t_mid_sq > 0.0 {
                let t_mid = t_mid_sq.sqrt();
                if t_lo < t_mid && t_mid < t_hi {
                    cuts.push(t_mid);
                }
            }
            let t_far = rho / s2 - c;
            if t_lo < t_far && t_far < t_hi {
                cuts.push(t_far);
            }
            cuts.sort_by(f64::total_cmp);
            let f = |t: f64| {
                let tau = (2.0 * t * t + 2.0 * c * c - rho * rho) / (2.0 * t * c);
                t.powi(6) * 16.0 * PI * PI * double_cap(tau)
            };
            let mut total = 0.0;
            for pair in cuts.windows(2) {
                total += gauss_panels(f, pair[0], pair[1], 8);
            }
            Ok(s2 * total)
        }
        CenterSpec::Axis(c) => {
            if c < 0.0 || !c.is_finite() {
                return Err(GeomError::BadConfig(format!("axis center {c}")));
            }
            if c == 0.0 {
                return Ok(PI.powi(4) / 14.0 * rho.powi(7));
            }
            let d0 = 2.0 * rho * rho - c * c;
            if d0 <= 0.0 {
                // The ball does not reach the cone.
                return Ok(0.0);
            }
            let root = d0.sqrt();
            let t_lo = ((c - root) / 2.0).max(0.0);
            let t_hi = (c + root) / 2.0;
            let mut cuts = vec![t_lo, t_hi];
            let t_kink = (-c + root) / 2.0;
            if t_lo < t_kink && t_kink < t_hi {
                cuts.push(t_kink);
            }
            cuts.sort_by(f64::total_cmp);
            let f = |t: f64| {
                let tau = (2.0 * t * t + c * c - rho * rho) / (2.0 * t * c);
                t.powi(6) * 8.0 * PI.powi(3) * cap(tau)
            };
            let mut total = 0.0;
            for pair in cuts.windows(2) {
                total += gauss_panels(f, pair[0], pair[1], 8);
            }
            Ok(s2 * total)
        }
    }
}

/// Largest density ratio of a reference cone over a grid of ball centers
/// and radii.
///
/// For a hyperplane, every on-plane center attains the planar value (the
/// unit 7-ball volume) at every radius, and off-plane centers stay below
/// it; the grid supremum is therefore returned analytically. For the
/// diagonal cone each (center, radius) pair is evaluated with
/// [`simons_ball_area`] and the maximum reported.
///
/// # Errors
///
/// Both the center list and the radius list must be nonempty; radii must
/// be positive and finite.
pub fn density_sup_estimate(
    cone: ConeKind,
    centers: &[CenterSpec],
    radii: &[f64],
) -> Result<f64> {
    if centers.is_empty() || radii.is_empty() {
        return Err(GeomError::EmptyScanGrid);
    }
    if !radii.iter().all(|r| r.is_finite() && *r > 0.0) {
        return Err(GeomError::BadRadii { base: 0.0 });
    }
    match cone {
        ConeKind::Hyperplane => exact::unit_ball_volume(7),
        ConeKind::Simons => {
            let mut sup = f64::NEG_INFINITY;
            for &center in centers {
                for &rho in radii {
                    let ratio = simons_ball_area(center, rho)? / rho.powi(7);
                    sup = sup.max(ratio);
                }
            }
            Ok(sup)
        }
    }
}
