//! Shooting solver for the constant-weighted-curvature deformed barrel.
//!
//! The boundary of the bounded chamber, seen in the reduced quadrant, is a
//! curve whose revolved hypersurface has constant sum of principal
//! curvatures. Writing the curve by arclength with tangent angle theta and
//! outward normal n = (sin theta, -cos theta), that condition is the planar
//! ODE
//!
//! ```text
//!     x' = cos theta
//!     y' = sin theta
//!     theta' = lambda - 3 sin(theta)/x + 3 cos(theta)/y
//! ```
//!
//! one curvature from the curve itself plus three from each collapsing
//! 3-sphere. The curve leaves the x-axis orthogonally at an intercept
//! (a, 0), where the 3/y term is singular, so integration starts from a
//! series expansion on a small patch and continues with fixed-step RK4 until
//! the diagonal y = x is crossed. A 120-degree junction with the outgoing
//! diagonal interface pins the correct intercept, found by bisection; the
//! solved curve, its mirror image, and the diagonal ray assemble into the
//! deformed-barrel partition, whose defect lands near 6.82, below both the
//! barrel and the lens.

use crate::error::{GeomError, Result};
use crate::exact;
use crate::reduced::{ReducedCurve, ReducedPartition3};
use serde::{Deserialize, Serialize};

/// Integrator state: position, tangent angle, arclength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootState {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub s: f64,
}

/// Parameters of the shooting solver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Prescribed weighted curvature of the chamber boundary (sum
    /// convention: all seven principal curvatures added).
    pub lambda: f64,
    /// RK4 arclength step.
    pub step: f64,
    /// Radius of the series-expansion patch above the x-axis.
    pub axis_eps: f64,
    /// Intercept search interval (a_lo, a_hi).
    pub bracket: (f64, f64),
    /// Accepted junction-angle residual at the solution.
    pub tol_angle: f64,
    /// Bisection tolerance on the intercept.
    pub tol_root: f64,
    /// The outgoing diagonal interface is truncated at this multiple of the
    /// junction distance.
    pub gamma23_factor: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            lambda: 1.0,
            step: 2e-4,
            axis_eps: 1e-3,
            bracket: (3.5, 5.5),
            tol_angle: 1e-9,
            tol_root: 1e-10,
            gamma23_factor: 5.0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.lambda > 0.0
            && self.step > 0.0
            && self.axis_eps > 0.0
            && 0.0 < self.bracket.0
            && self.bracket.0 < self.bracket.1
            && self.tol_angle > 0.0
            && self.tol_root > 0.0
            && self.gamma23_factor >= 1.0;
        if ok {
            Ok(())
        } else {
            Err(GeomError::BadConfig(format!("{self:?}")))
        }
    }
}

/// How a trajectory ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Termination {
    /// Reached y = x; carries the angle between the arriving tangent and
    /// the outgoing diagonal direction (1, 1)/sqrt(2), in [0, pi].
    CrossedDiagonal { angle_to_diagonal: f64 },
    /// Fell back to an axis (or lost finiteness) before the diagonal.
    LeftQuadrant,
    /// Exhausted the arclength budget.
    StepLimit,
}

/// A computed trajectory with its termination.
#[derive(Debug, Clone, PartialEq)]
pub struct Shot {
    pub trajectory: Vec<ShootState>,
    pub termination: Termination,
}

/// Solved quantities of the deformed-barrel chamber, in R^8 units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DefectReport {
    /// Per(region 1): weighted length of the two chamber interfaces.
    pub perimeter_region1: f64,
    /// |region 1|: weighted area of the chamber.
    pub volume_region1: f64,
    /// Weighted length of the diagonal between origin and junction, the
    /// background cone portion the chamber replaces.
    pub cone_inside: f64,
    /// (perimeter_region1 - cone_inside) / volume_region1^{7/8}.
    pub defect: f64,
    /// Curvature the chamber boundary was solved at.
    pub lambda: f64,
    /// Solved x-axis intercept of the chamber boundary.
    pub intercept_a: f64,
}

/// Sum of the seven principal curvatures of the revolved hypersurface at a
/// quadrant point with the given outward unit normal and generating-curve
/// curvature kappa: kappa + 3 (n_x / x + n_y / y).
///
/// # Errors
///
/// Points on a coordinate axis are rejected (the spherical terms are
/// singular there), as are non-unit normals.
pub fn weighted_curvature(point: [f64; 2], unit_normal: [f64; 2], kappa: f64) -> Result<f64> {
    let [x, y] = point;
    if !(x > 0.0 && y > 0.0) {
        return Err(GeomError::OnAxisPoint { x, y });
    }
    let [nx, ny] = unit_normal;
    let norm_deviation = (nx.hypot(ny) - 1.0).abs();
    if norm_deviation.is_nan() || norm_deviation > 1e-9 {
        return Err(GeomError::NonUnitNormal { nx, ny });
    }
    Ok(kappa + 3.0 * (nx / x + ny / y))
}

fn rhs(x: f64, y: f64, theta: f64, lambda: f64) -> (f64, f64, f64) {
    let (sin_t, cos_t) = theta.sin_cos();
    (cos_t, sin_t, lambda - 3.0 * sin_t / x + 3.0 * cos_t / y)
}

fn rk4_step(x: f64, y: f64, theta: f64, h: f64, lambda: f64) -> (f64, f64, f64) {
    let k1 = rhs(x, y, theta, lambda);
    let k2 = rhs(
        x + 0.5 * h * k1.0,
        y + 0.5 * h * k1.1,
        theta + 0.5 * h * k1.2,
        lambda,
    );
    let k3 = rhs(
        x + 0.5 * h * k2.0,
        y + 0.5 * h * k2.1,
        theta + 0.5 * h * k2.2,
        lambda,
    );
    let k4 = rhs(x + h * k3.0, y + h * k3.1, theta + h * k3.2, lambda);
    (
        x + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
        y + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
        theta + h / 6.0 * (k1.2 + 2.0 * k2.2 + 2.0 * k3.2 + k4.2),
    )
}

/// Series start at arclength s above the intercept (a, 0), regularizing the
/// 3/y singularity. Matching powers of s in the ODE with theta(0) = pi/2
/// gives theta = pi/2 + c1 s + c3 s^3 with 4 c1 = lambda - 3/a, and the
/// position expansions below.
fn series_state(a: f64, lambda: f64, s: f64) -> ShootState {
    let c1 = (lambda - 3.0 / a) / 4.0;
    let c3 = (c1 / (4.0 * a)) * (c1 - 1.0 / a);
    ShootState {
        x: a - c1 * s * s / 2.0 - (c3 - c1.powi(3) / 6.0) * s.powi(4) / 4.0,
        y: s - c1 * c1 * s.powi(3) / 6.0,
        theta: std::f64::consts::FRAC_PI_2 + c1 * s + c3 * s.powi(3),
        s,
    }
}

/// Integrates the curvature ODE from the intercept `(a, 0)` until the
/// trajectory crosses the diagonal, falls out of the open quadrant, or
/// exhausts its arclength budget.
///
/// The first diagonal crossing is refined to machine precision by bisecting
/// the final step's fraction, so the last trajectory state sits on the
/// diagonal up to roundoff. All recorded states stay in the closed quadrant
/// with strictly increasing arclength.
///
/// # Errors
///
/// The intercept must lie inside `cfg.bracket` and the configuration must
/// validate.
pub fn shoot(a: f64, cfg: &SolverConfig) -> Result<Shot> {
    cfg.validate()?;
    if !(cfg.bracket.0 <= a && a <= cfg.bracket.1) {
        return Err(GeomError::OutsideBracket {
            a,
            lo: cfg.bracket.0,
            hi: cfg.bracket.1,
        });
    }
    let mut trajectory = vec![ShootState {
        x: a,
        y: 0.0,
        theta: std::f64::consts::FRAC_PI_2,
        s: 0.0,
    }];
    for k in 1..=4 {
        trajectory.push(series_state(a, cfg.lambda, cfg.axis_eps * k as f64 / 4.0));
    }
    let h = cfg.step;
    let s_max = 8.0 * (a + 1.0);
    let (mut x, mut y, mut theta, mut s) = {
        let last = *trajectory.last().unwrap();
        (last.x, last.y, last.theta, last.s)
    };
    while s < s_max {
        let (xn, yn, thn) = rk4_step(x, y, theta, h, cfg.lambda);
        if !(xn.is_finite() && yn.is_finite() && thn.is_finite()) {
            return Ok(Shot {
                trajectory,
                termination: Termination::LeftQuadrant,
            });
        }
        if yn >= xn {
            // Crossed during this step: bisect the step fraction down to the
            // crossing point.
            let (mut lo, mut hi) = (0.0_f64, h);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let (xm, ym, _) = rk4_step(x, y, theta, mid, cfg.lambda);
                if ym >= xm {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let (xc, yc, thc) = rk4_step(x, y, theta, hi, cfg.lambda);
            trajectory.push(ShootState {
                x: xc,
                y: yc,
                theta: thc,
                s: s + hi,
            });
            let (sin_t, cos_t) = thc.sin_cos();
            let cos_angle = ((cos_t + sin_t) / 2.0_f64.sqrt()).clamp(-1.0, 1.0);
            return Ok(Shot {
                trajectory,
                termination: Termination::CrossedDiagonal {
                    angle_to_diagonal: cos_angle.acos(),
                },
            });
        }
        if xn <= 0.0 || yn < 0.0 {
            return Ok(Shot {
                trajectory,
                termination: Termination::LeftQuadrant,
            });
        }
        (x, y, theta) = (xn, yn, thn);
        s += h;
        trajectory.push(ShootState { x, y, theta, s });
    }
    Ok(Shot {
        trajectory,
        termination: Termination::StepLimit,
    })
}

/// Junction-angle residual at intercept `a`: twice the angle between the
/// arriving tangent and the outgoing diagonal direction, minus 120 degrees.
///
/// By mirror symmetry the chamber occupies a sector of twice the
/// tangent-to-diagonal angle at the junction, so this residual vanishes
/// exactly when the three interfaces meet pairwise at 120 degrees. The
/// right-angled barrel corner measures -30 degrees on the same convention.
///
/// # Errors
///
/// A trajectory that never reaches the diagonal reports which way it failed.
pub fn junction_residual(a: f64, cfg: &SolverConfig) -> Result<f64> {
    let shot = shoot(a, cfg)?;
    match shot.termination {
        Termination::CrossedDiagonal { angle_to_diagonal } => {
            Ok(2.0 * angle_to_diagonal - 2.0 * std::f64::consts::FRAC_PI_3)
        }
        Termination::LeftQuadrant => Err(GeomError::NoCrossing {
            a,
            reason: "outside the open quadrant",
        }),
        Termination::StepLimit => Err(GeomError::NoCrossing {
            a,
            reason: "at the arclength budget",
        }),
    }
}

/// Solves for the intercept with a 120-degree junction and assembles the
/// deformed-barrel partition together with its defect report.
///
/// Bisects the junction residual over `cfg.bracket` to `cfg.tol_root`,
/// mirrors the solved curve across the diagonal, and appends the outgoing
/// diagonal interface truncated at `cfg.gamma23_factor` times the junction
/// distance. The report's volume integrates the chamber against the axes;
/// its defect uses the shared defect definition, so the report is
/// internally consistent by construction.
///
/// # Errors
///
/// Both bracket endpoints must produce diagonal crossings with residuals of
/// opposite sign; bisection must converge within the iteration budget and
/// land a residual below `cfg.tol_angle`.
pub fn solve_partition(cfg: &SolverConfig) -> Result<(ReducedPartition3, DefectReport)> {
    cfg.validate()?;
    let (mut lo, mut hi) = cfg.bracket;
    let res_lo = junction_residual(lo, cfg)?;
    let res_hi = junction_residual(hi, cfg)?;
    if res_lo == 0.0 {
        hi = lo;
    } else if res_hi == 0.0 {
        lo = hi;
    } else if res_lo.signum() == res_hi.signum() {
        return Err(GeomError::NoSignChange {
            lo,
            hi,
            res_lo,
            res_hi,
        });
    }
    let mut iterations = 0u32;
    while hi - lo > cfg.tol_root {
        iterations += 1;
        if iterations > 200 {
            return Err(GeomError::RootNotConverged {
                tol: cfg.tol_root,
                iterations,
            });
        }
        let mid = 0.5 * (lo + hi);
        let res_mid = junction_residual(mid, cfg)?;
        if res_mid == 0.0 {
            lo = mid;
            hi = mid;
        } else if res_mid.signum() == res_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let intercept_a = 0.5 * (lo + hi);
    let final_residual = junction_residual(intercept_a, cfg)?;
    if final_residual.abs() > cfg.tol_angle.max(1e3 * cfg.tol_root) {
        return Err(GeomError::RootNotConverged {
            tol: cfg.tol_angle,
            iterations,
        });
    }
    let shot = shoot(intercept_a, cfg)?;
    let mut points: Vec<[f64; 2]> = shot.trajectory.iter().map(|st| [st.x, st.y]).collect();
    // Snap the refined crossing point onto the diagonal so the mirror pair
    // closes exactly at the junction.
    let last = *points.last().unwrap();
    let m = 0.5 * (last[0] + last[1]);
    *points.last_mut().unwrap() = [m, m];
    let gamma12 = ReducedCurve::new(points)?;
    let gamma13 = gamma12.mirrored();
    let junction = [m, m];
    let far = cfg.gamma23_factor;
    let gamma23 = ReducedCurve::segment(junction, [far * m, far * m])?;
    let partition = ReducedPartition3::new(
        gamma12,
        gamma13,
        gamma23,
        junction,
        true,
        [[1, 2], [3, 1], [3, 2]],
    )?;
    let perimeter_region1 = partition.region1_perimeter();
    let volume_region1 = partition.region1_volume()?;
    let cone_inside = partition.cone_inside();
    let defect = exact::defect(perimeter_region1, cone_inside, volume_region1)?;
    let report = DefectReport {
        perimeter_region1,
        volume_region1,
        cone_inside,
        defect,
        lambda: cfg.lambda,
        intercept_a,
    };
    Ok((partition, report))
}

/// Weighted curvature recomputed from a discrete trajectory by central
/// differences of the tangent angle, at interior sample `i`.
///
/// Used to check integrator consistency: along a solved chamber boundary
/// this should equal the configured lambda up to a few multiples of the
/// step size.
pub fn discrete_weighted_curvature(trajectory: &[ShootState], i: usize) -> Result<f64> {
    let (prev, here, next) = (trajectory[i - 1], trajectory[i], trajectory[i + 1]);
    let kappa = (next.theta - prev.theta) / (next.s - prev.s);
    let (sin_t, cos_t) = here.theta.sin_cos();
    weighted_curvature([here.x, here.y], [sin_t, -cos_t], kappa)
}
