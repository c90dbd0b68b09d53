//! Numerical geometry toolkit for isoperimetric 3-partitions of R^8.
//!
//! The crate compares candidate partitions of R^8 into two unbounded regions
//! and one bounded "chamber" against the Simons-cone background, under the
//! symmetry group SO(4) x SO(4). Under that symmetry every object reduces to
//! curves in the closed quadrant `{(x, y) : x, y >= 0}` carrying the weight
//! `x^3 y^3`, and all areas and volumes become weighted line and area
//! integrals in the plane. The modules provide:
//!
//! * [`exact`]: closed-form constants (ball volumes, sphere areas, the lens
//!   and barrel reference partitions, perimeter defects);
//! * [`oracle`]: independent recomputations of those constants by quadrature
//!   ladders and Monte-Carlo, used to validate `exact`;
//! * [`reduced`]: weighted curves and 3-partitions in the quadrant;
//! * [`grid`]: pixel-grid partitions of a quadrant window with weighted
//!   measures and perimeters;
//! * [`cmc`]: the shooting solver that builds the constant-weighted-curvature
//!   deformed barrel and its defect report;
//! * [`asymptotics`]: blow-down maps, monotonicity-style density scans, and
//!   area densities of reference cones about off-center points;
//! * [`diagnostics`]: glueing-radius selection and mass concentration
//!   profiles for grid partitions;
//! * [`report`]: deterministic CSV/JSON/SVG emission and run manifests;
//! * [`cli`]: the subcommand implementations behind the `isoper8` binary.
//!
//! Angles are radians, all floats are `f64`, and every fallible operation
//! returns [`error::GeomError`] rather than panicking on bad input.

pub mod asymptotics;
pub mod cli;
pub mod cmc;
pub mod diagnostics;
pub mod error;
pub mod exact;
pub mod grid;
pub mod oracle;
pub mod quad;
pub mod reduced;
pub mod report;

pub use error::{GeomError, Result};
