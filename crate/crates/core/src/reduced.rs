//! Weighted curves and 3-partitions in the reduced quadrant.
//!
//! An SO(4) x SO(4)-symmetric set in R^8 = R^4 x R^4 is determined by its
//! trace in the quadrant of radius pairs (x, y) = (|u|, |v|). Under this
//! reduction, 7-dimensional surface area and 8-dimensional volume become
//! weighted line and area integrals in the plane:
//!
//! ```text
//!     area_8(revolved curve)  = 4 pi^4 * int_curve  x^3 y^3 ds
//!     vol_8(revolved region)  = 4 pi^4 * int_region x^3 y^3 dx dy
//! ```
//!
//! where 4 pi^4 is the squared area of the 3-sphere. Everything downstream
//! (the shooting solver, density scans, defect reports) works with the two
//! functionals defined here.
//!
//! Curves are stored as polylines. The weight restricted to a straight
//! segment is a polynomial of degree 6 in the parameter, so the 5-point
//! Gauss rule used per segment integrates it exactly; polyline results are
//! exact up to rounding, and resolution questions live entirely in how a
//! smooth curve was sampled into a polyline.

use crate::error::{GeomError, Result};
use crate::quad::gauss5;

/// H^3(S^3)^2 = 4 pi^4, the factor relating reduced-plane integrals to R^8
/// quantities.
pub fn revolution_factor() -> f64 {
    4.0 * std::f64::consts::PI.powi(4)
}

/// The reduction weight x^3 y^3, with domain checking.
///
/// # Errors
///
/// Rejects points outside the closed first quadrant (including NaN).
pub fn weight(x: f64, y: f64) -> Result<f64> {
    if !(x >= 0.0 && y >= 0.0) {
        return Err(GeomError::NegativeCoordinate { x, y });
    }
    Ok(wgt(x, y))
}

#[inline]
fn wgt(x: f64, y: f64) -> f64 {
    (x * x * x) * (y * y * y)
}

#[inline]
fn dist(p: [f64; 2], q: [f64; 2]) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Polyline in the closed first quadrant with cached cumulative arclength.
///
/// Invariants enforced at construction: at least two points, all coordinates
/// nonnegative, no zero-length segment, `cumulative_arclength[0] = 0` with
/// increments equal to the Euclidean segment lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedCurve {
    points: Vec<[f64; 2]>,
    cumulative_arclength: Vec<f64>,
}

impl ReducedCurve {
    /// Builds a curve from ordered vertices, validating the invariants.
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self> {
        if points.len() < 2 {
            return Err(GeomError::TooFewPoints(points.len()));
        }
        for &[x, y] in &points {
            if !(x >= 0.0 && y >= 0.0) {
                return Err(GeomError::NegativeCoordinate { x, y });
            }
        }
        let mut cumulative_arclength = Vec::with_capacity(points.len());
        cumulative_arclength.push(0.0);
        for (i, pair) in points.windows(2).enumerate() {
            let step = dist(pair[0], pair[1]);
            if step <= 0.0 || step.is_nan() {
                return Err(GeomError::ZeroLengthSegment(i));
            }
            cumulative_arclength.push(cumulative_arclength[i] + step);
        }
        Ok(ReducedCurve {
            points,
            cumulative_arclength,
        })
    }

    /// Single straight segment from `p0` to `p1`.
    pub fn segment(p0: [f64; 2], p1: [f64; 2]) -> Result<Self> {
        Self::new(vec![p0, p1])
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.points
    }

    pub fn cumulative_arclength(&self) -> &[f64] {
        &self.cumulative_arclength
    }

    pub fn total_arclength(&self) -> f64 {
        *self.cumulative_arclength.last().unwrap()
    }

    pub fn first(&self) -> [f64; 2] {
        self.points[0]
    }

    pub fn last(&self) -> [f64; 2] {
        *self.points.last().unwrap()
    }

    /// Reflection across the diagonal y = x (coordinates swapped, order kept).
    pub fn mirrored(&self) -> Self {
        let pts = self.points.iter().map(|&[x, y]| [y, x]).collect();
        Self::new(pts).expect("reflection preserves curve invariants")
    }

    /// Same vertices in reverse order.
    pub fn reversed(&self) -> Self {
        let pts = self.points.iter().rev().copied().collect();
        Self::new(pts).expect("reversal preserves curve invariants")
    }

    /// Curve with all coordinates multiplied by `t > 0`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        if t <= 0.0 || t.is_nan() {
            return Err(GeomError::BadScaleFactor(t));
        }
        Self::new(self.points.iter().map(|&[x, y]| [t * x, t * y]).collect())
    }

    /// Largest Euclidean distance from `center` to a vertex.
    pub fn max_distance_from(&self, center: [f64; 2]) -> f64 {
        self.points
            .iter()
            .map(|&p| dist(p, center))
            .fold(0.0, f64::max)
    }
}

/// Weighted length 4 pi^4 int x^3 y^3 ds: the R^8 surface area of the
/// hypersurface of revolution generated by the curve.
///
/// Exact (to rounding) on polylines, since the restricted weight is degree 6
/// per segment and the 5-point Gauss rule is exact through degree 9.
pub fn weighted_length(curve: &ReducedCurve) -> f64 {
    let mut total = 0.0;
    for pair in curve.points().windows(2) {
        let [x0, y0] = pair[0];
        let [dx, dy] = [pair[1][0] - x0, pair[1][1] - y0];
        let ds = dx.hypot(dy);
        total += ds * gauss5(|t| wgt(x0 + t * dx, y0 + t * dy), 0.0, 1.0);
    }
    revolution_factor() * total
}

/// Weighted area 4 pi^4 int int x^3 y^3 dx dy over the region enclosed by a
/// counterclockwise chain of curve pieces: the R^8 volume of the revolved
/// region.
///
/// Evaluated in divergence form as 4 pi^4 times the boundary integral of
/// (x^4/4) y^3 dy, so pieces lying on the coordinate axes contribute zero and
/// may be included or omitted freely as long as the chain closes. The chain
/// is closed when each piece's endpoint coincides with the next piece's start
/// (cyclically); clockwise orientation yields the negated value. An empty
/// chain encloses nothing and returns 0.
///
/// # Errors
///
/// Rejects chains with an endpoint gap exceeding 1e-9 relative to the
/// coordinate scale.
pub fn weighted_area(pieces: &[&ReducedCurve]) -> Result<f64> {
    if pieces.is_empty() {
        return Ok(0.0);
    }
    let scale = pieces
        .iter()
        .flat_map(|c| c.points().iter())
        .map(|&[x, y]| x.abs().max(y.abs()))
        .fold(0.0, f64::max);
    let tol = 1e-9 * (1.0 + scale);
    for (i, piece) in pieces.iter().enumerate() {
        let next = pieces[(i + 1) % pieces.len()];
        let gap = dist(piece.last(), next.first());
        if gap > tol {
            return Err(GeomError::OpenChain { piece: i, gap });
        }
    }
    let mut total = 0.0;
    for piece in pieces {
        for pair in piece.points().windows(2) {
            let [x0, y0] = pair[0];
            let [dx, dy] = [pair[1][0] - x0, pair[1][1] - y0];
            total += dy
                * gauss5(
                    |t| {
                        let x = x0 + t * dx;
                        let y = y0 + t * dy;
                        0.25 * x.powi(4) * y * y * y
                    },
                    0.0,
                    1.0,
                );
        }
    }
    Ok(revolution_factor() * total)
}

/// Portions of `[0, 1]` where the segment quadratic `|p0 - c + t d|^2` is at
/// most `r2` (when `keep_below`) or at least `r2` (otherwise). Returns up to
/// two intervals.
fn clip_segment(a: f64, b: f64, c0: f64, r2: f64, keep_below: bool) -> Vec<(f64, f64)> {
    // a t^2 + b t + c0 - r2, with a = |d|^2 > 0 for valid curve segments.
    let disc = b * b - 4.0 * a * (c0 - r2);
    let below = if disc > 0.0 {
        let root = disc.sqrt();
        // Stable quadratic roots: compute the larger-magnitude one first.
        let q = -0.5 * (b + b.signum() * root);
        let (t0, t1) = {
            let r0 = q / a;
            let r1 = (c0 - r2) / q;
            (r0.min(r1), r0.max(r1))
        };
        Some((t0, t1))
    } else {
        None
    };
    let mut kept = Vec::with_capacity(2);
    match (below, keep_below) {
        (Some((t0, t1)), true) => kept.push((t0.max(0.0), t1.min(1.0))),
        (Some((t0, t1)), false) => {
            kept.push((0.0, t0.min(1.0)));
            kept.push((t1.max(0.0), 1.0));
        }
        (None, true) => {}
        (None, false) => kept.push((0.0, 1.0)),
    }
    kept.retain(|&(lo, hi)| hi - lo > 1e-14);
    kept
}

/// Weighted length of the portion of the curve inside the annulus
/// `r_inner <= |p - center| <= r_outer`.
///
/// Each polyline segment is clipped exactly against both circles (the
/// distance-squared along a segment is a quadratic in the parameter), and the
/// surviving subintervals are integrated by the same per-segment Gauss rule
/// as [`weighted_length`], so the only error is floating-point rounding.
///
/// # Errors
///
/// Rejects annuli without `0 <= r_inner < r_outer`.
pub fn weighted_length_in_annulus(
    curve: &ReducedCurve,
    center: [f64; 2],
    r_inner: f64,
    r_outer: f64,
) -> Result<f64> {
    if !(r_inner >= 0.0 && r_outer > r_inner) {
        return Err(GeomError::BadAnnulus { r_inner, r_outer });
    }
    let mut total = 0.0;
    for pair in curve.points().windows(2) {
        let [x0, y0] = pair[0];
        let [dx, dy] = [pair[1][0] - x0, pair[1][1] - y0];
        let ds = dx.hypot(dy);
        let (ex, ey) = (x0 - center[0], y0 - center[1]);
        let a = dx * dx + dy * dy;
        let b = 2.0 * (ex * dx + ey * dy);
        let c0 = ex * ex + ey * ey;
        for (olo, ohi) in clip_segment(a, b, c0, r_outer * r_outer, true) {
            for (ilo, ihi) in clip_segment(a, b, c0, r_inner * r_inner, false) {
                let (lo, hi) = (olo.max(ilo), ohi.min(ihi));
                if hi - lo > 1e-14 {
                    total += ds * gauss5(|t| wgt(x0 + t * dx, y0 + t * dy), lo, hi);
                }
            }
        }
    }
    Ok(revolution_factor() * total)
}

/// Three-region partition of the quadrant given by interface curves.
///
/// Region 1 is the bounded chamber against the axes, region 2 the unbounded
/// region below the diagonal, region 3 its mirror above. The interfaces are
/// `gamma12` (between 1 and 2, running from the x-axis to the junction),
/// `gamma13` (between 1 and 3, from the y-axis to the junction), and
/// `gamma23` (between 2 and 3, from the junction outward, truncated at a
/// finite radius). `region_labels[k]` records the (left, right) region pair
/// seen when walking interface k in storage order.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedPartition3 {
    pub gamma12: ReducedCurve,
    pub gamma13: ReducedCurve,
    pub gamma23: ReducedCurve,
    /// Meeting point of the three interfaces.
    pub junction: [f64; 2],
    /// Whether the partition claims the x <-> y mirror symmetry.
    pub symmetric: bool,
    /// (left, right) region index per interface, in gamma12/13/23 order.
    pub region_labels: [[u8; 2]; 3],
}

impl ReducedPartition3 {
    /// Validated constructor; see [`ReducedPartition3::validate`].
    pub fn new(
        gamma12: ReducedCurve,
        gamma13: ReducedCurve,
        gamma23: ReducedCurve,
        junction: [f64; 2],
        symmetric: bool,
        region_labels: [[u8; 2]; 3],
    ) -> Result<Self> {
        let p = ReducedPartition3 {
            gamma12,
            gamma13,
            gamma23,
            junction,
            symmetric,
            region_labels,
        };
        p.validate()?;
        Ok(p)
    }

    /// Checks the structural invariants:
    ///
    /// * every endpoint of `gamma12`/`gamma13` lies on a coordinate axis or
    ///   equals the junction (the outer end of `gamma23` is exempt as the
    ///   truncation boundary, but its inner end must hit the junction);
    /// * region labels are in 1..=3 and distinct across each interface;
    /// * when `symmetric` is set, the junction lies on the diagonal and
    ///   `gamma13` is the pointwise mirror image of `gamma12`.
    pub fn validate(&self) -> Result<()> {
        let tol = 1e-9 * (1.0 + self.junction[0].hypot(self.junction[1]));
        for curve in [&self.gamma12, &self.gamma13] {
            for p in [curve.first(), curve.last()] {
                let on_axis = p[0] <= tol || p[1] <= tol;
                if !on_axis && dist(p, self.junction) > tol {
                    return Err(GeomError::DanglingInterface { x: p[0], y: p[1] });
                }
            }
        }
        if dist(self.gamma23.first(), self.junction) > tol
            && dist(self.gamma23.last(), self.junction) > tol
        {
            let p = self.gamma23.first();
            return Err(GeomError::DanglingInterface { x: p[0], y: p[1] });
        }
        for pair in self.region_labels {
            for label in pair {
                if !(1..=3).contains(&label) {
                    return Err(GeomError::BadRegionIndex(label as u16));
                }
            }
            if pair[0] == pair[1] {
                return Err(GeomError::BadRegionIndex(pair[0] as u16));
            }
        }
        if self.symmetric {
            if (self.junction[0] - self.junction[1]).abs() > tol {
                return Err(GeomError::JunctionOffDiagonal {
                    x: self.junction[0],
                    y: self.junction[1],
                });
            }
            let mirror = self.gamma12.mirrored();
            let same_len = mirror.points().len() == self.gamma13.points().len();
            let pointwise = same_len
                && mirror
                    .points()
                    .iter()
                    .zip(self.gamma13.points())
                    .all(|(&p, &q)| dist(p, q) <= tol);
            if !pointwise {
                return Err(GeomError::AsymmetricInterfaces);
            }
        }
        Ok(())
    }

    /// The barrel partition at face position `a`: a square chamber
    /// `[0, a]^2` inserted into the diagonal cone partition, with `gamma23`
    /// truncated at five times the junction distance.
    pub fn barrel(a: f64) -> Result<Self> {
        if a <= 0.0 || a.is_nan() {
            return Err(GeomError::BadScaleFactor(a));
        }
        Self::new(
            ReducedCurve::new(vec![[a, 0.0], [a, a]])?,
            ReducedCurve::new(vec![[0.0, a], [a, a]])?,
            ReducedCurve::new(vec![[a, a], [5.0 * a, 5.0 * a]])?,
            [a, a],
            true,
            [[1, 2], [3, 1], [3, 2]],
        )
    }

    /// The diagonal cone partition truncated at the given quadrant radius:
    /// no bounded chamber, junction at the origin.
    ///
    /// Regions 2 and 3 split along the diagonal; the two chamber interfaces
    /// degenerate to axis stubs of zero weighted length, so region 1 carries
    /// no R^8 volume and contributes nothing to any weighted functional.
    pub fn simons(truncation_radius: f64) -> Result<Self> {
        if truncation_radius <= 0.0 || truncation_radius.is_nan() {
            return Err(GeomError::BadScaleFactor(truncation_radius));
        }
        let far = truncation_radius / 2.0_f64.sqrt();
        Self::new(
            ReducedCurve::new(vec![[truncation_radius, 0.0], [0.0, 0.0]])?,
            ReducedCurve::new(vec![[0.0, truncation_radius], [0.0, 0.0]])?,
            ReducedCurve::new(vec![[0.0, 0.0], [far, far]])?,
            [0.0, 0.0],
            true,
            [[1, 2], [3, 1], [3, 2]],
        )
    }

    pub fn interfaces(&self) -> [&ReducedCurve; 3] {
        [&self.gamma12, &self.gamma13, &self.gamma23]
    }

    /// Largest distance from the origin to a vertex of the two chamber
    /// interfaces; region 1 is contained in the quadrant ball of this radius.
    pub fn region1_max_radius(&self) -> f64 {
        self.gamma12
            .max_distance_from([0.0, 0.0])
            .max(self.gamma13.max_distance_from([0.0, 0.0]))
    }

    /// R^8 perimeter of region 1: the weighted length of its two interfaces.
    pub fn region1_perimeter(&self) -> f64 {
        weighted_length(&self.gamma12) + weighted_length(&self.gamma13)
    }

    /// R^8 volume of region 1, the chamber enclosed by `gamma12`, `gamma13`,
    /// and the axes.
    ///
    /// Assembled as the counterclockwise chain x-axis -> `gamma12` ->
    /// reversed `gamma13` -> y-axis. A partition whose chamber interfaces
    /// carry zero weighted length (the degenerate cone case) has volume 0.
    pub fn region1_volume(&self) -> Result<f64> {
        if self.region1_perimeter() == 0.0 {
            return Ok(0.0);
        }
        let origin = [0.0, 0.0];
        let x_start = self.gamma12.first();
        let y_start = self.gamma13.first();
        let axis_x = ReducedCurve::segment(origin, x_start)?;
        let axis_y = ReducedCurve::segment(y_start, origin)?;
        weighted_area(&[&axis_x, &self.gamma12, &self.gamma13.reversed(), &axis_y])
    }

    /// Weighted length of the diagonal between the origin and the junction:
    /// the background-cone perimeter replaced by the chamber.
    pub fn cone_inside(&self) -> f64 {
        if self.junction[0].hypot(self.junction[1]) == 0.0 {
            return 0.0;
        }
        let diag = ReducedCurve::segment([0.0, 0.0], self.junction)
            .expect("nonzero junction gives a valid segment");
        weighted_length(&diag)
    }
}
