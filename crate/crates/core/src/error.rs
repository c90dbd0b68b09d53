//! Error type shared by all modules, with the process exit-code convention
//! used by the command-line front end.

use thiserror::Error;

/// Errors raised by geometry operations and the CLI.
///
/// Every variant is either a precondition violation (bad input, exit code 2)
/// or a numerical failure (non-convergence, exit code 3); see
/// [`GeomError::exit_code`].
#[derive(Debug, Error)]
pub enum GeomError {
    #[error("invalid dimension {0}: must be at least 1")]
    InvalidDimension(u32),

    #[error("negative coordinates ({x}, {y}): outside the closed first quadrant")]
    NegativeCoordinate { x: f64, y: f64 },

    #[error("volume {0} is not strictly positive")]
    NonPositiveVolume(f64),

    #[error(
        "perimeter {perimeter} is below the background perimeter {background}: \
         inconsistent input pair"
    )]
    NegativeDefectGap { perimeter: f64, background: f64 },

    #[error("{0} samples is below the minimum of 10^4")]
    TooFewSamples(u64),

    #[error("curve must have at least two points, got {0}")]
    TooFewPoints(usize),

    #[error("zero-length segment at index {0}")]
    ZeroLengthSegment(usize),

    #[error("boundary chain is not closed: gap of {gap} between piece {piece} and its successor")]
    OpenChain { piece: usize, gap: f64 },

    #[error("interface endpoint ({x}, {y}) lies on no axis, junction, or truncation boundary")]
    DanglingInterface { x: f64, y: f64 },

    #[error("partition marked symmetric but junction ({x}, {y}) is off the diagonal")]
    JunctionOffDiagonal { x: f64, y: f64 },

    #[error("partition marked symmetric but the two junction interfaces are not mirror images")]
    AsymmetricInterfaces,

    #[error("grid windows or resolutions differ; operands must share a grid")]
    GridMismatch,

    #[error("labels length {got} does not match resolution^2 = {expected}")]
    BadLabelCount { got: usize, expected: usize },

    #[error("label 0 at cell {0}: region indices start at 1")]
    ZeroLabel(usize),

    #[error("window [{x0}, {y0}] x [{x1}, {y1}] is invalid or leaves the first quadrant")]
    BadWindow { x0: f64, y0: f64, x1: f64, y1: f64 },

    #[error("annulus radii ({r_inner}, {r_outer}) must satisfy 0 <= r_inner < r_outer")]
    BadAnnulus { r_inner: f64, r_outer: f64 },

    #[error("annulus of outer radius {r_outer} about ({cx}, {cy}) leaves the grid window")]
    AnnulusOutsideWindow { cx: f64, cy: f64, r_outer: f64 },

    #[error("cube size {cube_size} does not tile the window side {side}")]
    CubeSizeMisaligned { cube_size: f64, side: f64 },

    #[error("point ({x}, {y}) lies on a coordinate axis: weighted curvature is singular there")]
    OnAxisPoint { x: f64, y: f64 },

    #[error("normal ({nx}, {ny}) is not unit length")]
    NonUnitNormal { nx: f64, ny: f64 },

    #[error("intercept {a} outside the configured bracket ({lo}, {hi})")]
    OutsideBracket { a: f64, lo: f64, hi: f64 },

    #[error("solver configuration invalid: {0}")]
    BadConfig(String),

    #[error(
        "trajectory from intercept {a} ended {reason} without crossing the diagonal; \
         the bracket endpoint does not reach a junction"
    )]
    NoCrossing { a: f64, reason: &'static str },

    #[error(
        "no sign change of the junction residual over bracket ({lo}, {hi}): \
         residuals ({res_lo}, {res_hi})"
    )]
    NoSignChange {
        lo: f64,
        hi: f64,
        res_lo: f64,
        res_hi: f64,
    },

    #[error("root finder failed to reach tolerance {tol} within {iterations} iterations")]
    RootNotConverged { tol: f64, iterations: u32 },

    #[error(
        "region 1 extends to radius {required} but the base radius is {base}: \
         enlarge the base radius"
    )]
    RegionNotEnclosed { required: f64, base: f64 },

    #[error("radii must be strictly increasing and exceed the base radius {base}")]
    BadRadii { base: f64 },

    #[error("blow-down factor {0} must be strictly positive")]
    BadBlowDownFactor(f64),

    #[error("scale factor {0} must be strictly positive")]
    BadScaleFactor(f64),

    #[error("empty center or radius grid")]
    EmptyScanGrid,

    #[error(
        "no scanned radius satisfies the slice bound; minimal slice {minimal_slice} \
         exceeds bound {bound}: resolution too coarse"
    )]
    NoAdmissibleRadius { minimal_slice: f64, bound: f64 },

    #[error("region index {0} is not a valid label (labels start at 1)")]
    BadRegionIndex(u16),

    #[error("invalid flag value: {0}")]
    BadFlag(String),

    #[error("grid file is malformed: {0}")]
    BadGridFile(String),

    #[error("partition file is malformed: {0}")]
    BadPartitionFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Process exit codes: 0 success, 2 precondition violation, 3 numerical
/// non-convergence.
impl GeomError {
    pub fn exit_code(&self) -> i32 {
        match self {
            GeomError::NoCrossing { .. }
            | GeomError::NoSignChange { .. }
            | GeomError::RootNotConverged { .. }
            | GeomError::NoAdmissibleRadius { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
