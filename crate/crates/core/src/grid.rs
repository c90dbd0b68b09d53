//! Labeled pixel grids over a quadrant window: discrete partitions with
//! weighted volumes and perimeters.
//!
//! A `GridPartition` assigns one region label to every cell of a uniform
//! grid. Volumes use the midpoint rule (cell measure = weight at the cell
//! center times cell area), and perimeter counts interior edges between
//! cells of different labels, weighted at edge midpoints. Interfaces are
//! therefore Manhattan polylines: axis-aligned configurations are measured
//! exactly, while diagonal interfaces carry the usual staircase anisotropy,
//! which the diagnostics built on top of this module are designed around.

use crate::error::{GeomError, Result};
use crate::reduced::revolution_factor;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Whether cell and edge measures carry the x^3 y^3 revolution weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    /// R^8 units: measures are scaled by 4 pi^4 x^3 y^3.
    Weighted,
    /// Plain planar area and length.
    Unweighted,
}

/// Annulus `r_inner <= |p - center| < r_outer`, the half-open convention
/// used for cell-center membership so that concentric annuli tile a disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    pub center: [f64; 2],
    pub r_inner: f64,
    pub r_outer: f64,
}

impl Annulus {
    pub fn new(center: [f64; 2], r_inner: f64, r_outer: f64) -> Result<Self> {
        if !(r_inner >= 0.0 && r_outer > r_inner) {
            return Err(GeomError::BadAnnulus { r_inner, r_outer });
        }
        Ok(Annulus {
            center,
            r_inner,
            r_outer,
        })
    }

    pub fn contains(&self, p: [f64; 2]) -> bool {
        let d = (p[0] - self.center[0]).hypot(p[1] - self.center[1]);
        self.r_inner <= d && d < self.r_outer
    }
}

/// Uniform grid over `window = [x_min, y_min, x_max, y_max]` with one region
/// label (1-based) per cell.
///
/// Cells are stored row-major from the bottom row: cell `(i, j)` covers
/// `[x_min + i dx, x_min + (i+1) dx] x [y_min + j dy, y_min + (j+1) dy]` and
/// lives at index `j * resolution + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridPartition {
    window: [f64; 4],
    resolution: u32,
    weight_mode: WeightMode,
    labels: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct GridHeader {
    format_version: u32,
    window: [f64; 4],
    resolution: u32,
    weight_mode: WeightMode,
    labels_file: String,
    layout: String,
}

const LAYOUT_NOTE: &str =
    "rows bottom-up: line j holds the comma-separated labels of cell row j (y increasing), \
     each row left to right (x increasing)";

impl GridPartition {
    /// Builds a grid from explicit labels, validating window, label count,
    /// and the 1-based label convention.
    pub fn from_labels(
        window: [f64; 4],
        resolution: u32,
        weight_mode: WeightMode,
        labels: Vec<u8>,
    ) -> Result<Self> {
        let [x0, y0, x1, y1] = window;
        let finite = window.iter().all(|v| v.is_finite());
        let ordered = x1 > x0 && y1 > y0;
        let in_quadrant = weight_mode == WeightMode::Unweighted || (x0 >= 0.0 && y0 >= 0.0);
        if !(finite && ordered && in_quadrant) || resolution == 0 {
            return Err(GeomError::BadWindow { x0, y0, x1, y1 });
        }
        let expected = resolution as usize * resolution as usize;
        if labels.len() != expected {
            return Err(GeomError::BadLabelCount {
                got: labels.len(),
                expected,
            });
        }
        if let Some(idx) = labels.iter().position(|&l| l == 0) {
            return Err(GeomError::ZeroLabel(idx));
        }
        Ok(GridPartition {
            window,
            resolution,
            weight_mode,
            labels,
        })
    }

    /// Builds a grid by sampling a labeling function at cell centers.
    pub fn from_fn<F>(
        window: [f64; 4],
        resolution: u32,
        weight_mode: WeightMode,
        label_of: F,
    ) -> Result<Self>
    where
        F: Fn(f64, f64) -> u8,
    {
        let n = resolution as usize;
        let mut labels = Vec::with_capacity(n * n);
        let [x0, y0, x1, y1] = window;
        let dx = (x1 - x0) / resolution as f64;
        let dy = (y1 - y0) / resolution as f64;
        for j in 0..n {
            let y = y0 + (j as f64 + 0.5) * dy;
            for i in 0..n {
                let x = x0 + (i as f64 + 0.5) * dx;
                labels.push(label_of(x, y));
            }
        }
        Self::from_labels(window, resolution, weight_mode, labels)
    }

    pub fn window(&self) -> [f64; 4] {
        self.window
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn weight_mode(&self) -> WeightMode {
        self.weight_mode
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, i: u32, j: u32) -> u8 {
        self.labels[j as usize * self.resolution as usize + i as usize]
    }

    /// Cell side lengths `(dx, dy)`.
    pub fn cell_size(&self) -> (f64, f64) {
        let [x0, y0, x1, y1] = self.window;
        let n = self.resolution as f64;
        ((x1 - x0) / n, (y1 - y0) / n)
    }

    pub fn cell_center(&self, i: u32, j: u32) -> [f64; 2] {
        let (dx, dy) = self.cell_size();
        [
            self.window[0] + (i as f64 + 0.5) * dx,
            self.window[1] + (j as f64 + 0.5) * dy,
        ]
    }

    /// Measure of one cell: area, weighted by 4 pi^4 x^3 y^3 at the center
    /// in weighted mode.
    pub fn cell_measure(&self, i: u32, j: u32) -> f64 {
        let (dx, dy) = self.cell_size();
        let area = dx * dy;
        match self.weight_mode {
            WeightMode::Unweighted => area,
            WeightMode::Weighted => {
                let [x, y] = self.cell_center(i, j);
                revolution_factor() * (x * x * x) * (y * y * y) * area
            }
        }
    }

    fn edge_weight(&self, x: f64, y: f64) -> f64 {
        match self.weight_mode {
            WeightMode::Unweighted => 1.0,
            WeightMode::Weighted => revolution_factor() * (x * x * x) * (y * y * y),
        }
    }

    /// True when the closed disk of the annulus' outer radius fits inside
    /// the window.
    pub fn annulus_inside_window(&self, annulus: &Annulus) -> bool {
        let [x0, y0, x1, y1] = self.window;
        let [cx, cy] = annulus.center;
        let r = annulus.r_outer;
        cx - r >= x0 && cx + r <= x1 && cy - r >= y0 && cy + r <= y1
    }

    /// Writes the grid as a JSON header plus a CSV label file next to it:
    /// `{stem}.json` and `{stem}.labels.csv` inside `dir`. Returns the two
    /// paths (header first).
    pub fn save(&self, dir: &Path, stem: &str) -> Result<Vec<PathBuf>> {
        let header_path = dir.join(format!("{stem}.json"));
        let labels_name = format!("{stem}.labels.csv");
        let labels_path = dir.join(&labels_name);
        let header = GridHeader {
            format_version: 1,
            window: self.window,
            resolution: self.resolution,
            weight_mode: self.weight_mode,
            labels_file: labels_name,
            layout: LAYOUT_NOTE.to_string(),
        };
        let mut json = serde_json::to_string_pretty(&header)?;
        json.push('\n');
        std::fs::write(&header_path, json)?;
        let n = self.resolution as usize;
        let mut csv = String::with_capacity(self.labels.len() * 2 + n);
        for j in 0..n {
            for i in 0..n {
                if i > 0 {
                    csv.push(',');
                }
                csv.push_str(&self.labels[j * n + i].to_string());
            }
            csv.push('\n');
        }
        std::fs::write(&labels_path, csv)?;
        Ok(vec![header_path, labels_path])
    }

    /// Loads a grid saved by [`GridPartition::save`], resolving the label
    /// file relative to the header's directory.
    pub fn load(header_path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(header_path)?;
        let header: GridHeader = serde_json::from_str(&text)?;
        if header.format_version != 1 {
            return Err(GeomError::BadGridFile(format!(
                "unsupported format_version {}",
                header.format_version
            )));
        }
        let dir = header_path.parent().unwrap_or(Path::new("."));
        let labels_text = std::fs::read_to_string(dir.join(&header.labels_file))?;
        let mut labels = Vec::with_capacity(header.resolution as usize * header.resolution as usize);
        for (lineno, line) in labels_text.lines().enumerate() {
            for field in line.split(',') {
                let v: u8 = field.trim().parse().map_err(|_| {
                    GeomError::BadGridFile(format!(
                        "non-integer label {field:?} on line {}",
                        lineno + 1
                    ))
                })?;
                labels.push(v);
            }
        }
        Self::from_labels(header.window, header.resolution, header.weight_mode, labels)
    }
}

/// Volume and perimeter of one region of a grid partition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionMeasure {
    pub volume: f64,
    pub perimeter: f64,
}

/// Per-region measures plus the half-sum total perimeter of the partition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionMeasures {
    pub per_region: BTreeMap<u8, RegionMeasure>,
    /// Per(partition) = half the sum of the per-region perimeters; each
    /// interface edge separates two regions, so this counts it once.
    pub total_perimeter: f64,
}

/// Computes per-region volumes and perimeters.
///
/// Volume sums cell measures per label. Perimeter sums, over interior edges
/// whose two cells carry different labels, edge length times the weight at
/// the edge midpoint (times 4 pi^4 in weighted mode), credited to both
/// adjacent regions; the returned total is half the per-region sum, making
/// the half-sum identity exact by construction.
pub fn grid_measures(p: &GridPartition) -> RegionMeasures {
    let n = p.resolution();
    let (dx, dy) = p.cell_size();
    let [x0, y0, _, _] = p.window();
    let mut per_region: BTreeMap<u8, RegionMeasure> = BTreeMap::new();
    for j in 0..n {
        for i in 0..n {
            let entry = per_region.entry(p.label(i, j)).or_insert(RegionMeasure {
                volume: 0.0,
                perimeter: 0.0,
            });
            entry.volume += p.cell_measure(i, j);
        }
    }
    let credit = |a: u8, b: u8, contribution: f64, map: &mut BTreeMap<u8, RegionMeasure>| {
        map.get_mut(&a).unwrap().perimeter += contribution;
        map.get_mut(&b).unwrap().perimeter += contribution;
    };
    for j in 0..n {
        for i in 0..n.saturating_sub(1) {
            let (a, b) = (p.label(i, j), p.label(i + 1, j));
            if a != b {
                let mid_x = x0 + (i as f64 + 1.0) * dx;
                let mid_y = y0 + (j as f64 + 0.5) * dy;
                credit(a, b, dy * p.edge_weight(mid_x, mid_y), &mut per_region);
            }
        }
    }
    for j in 0..n.saturating_sub(1) {
        for i in 0..n {
            let (a, b) = (p.label(i, j), p.label(i, j + 1));
            if a != b {
                let mid_x = x0 + (i as f64 + 0.5) * dx;
                let mid_y = y0 + (j as f64 + 1.0) * dy;
                credit(a, b, dx * p.edge_weight(mid_x, mid_y), &mut per_region);
            }
        }
    }
    let total_perimeter = 0.5 * per_region.values().map(|m| m.perimeter).sum::<f64>();
    RegionMeasures {
        per_region,
        total_perimeter,
    }
}

/// l1-over-regions measure of label disagreement inside the annulus:
/// each cell where the two grids disagree contributes twice its measure
/// (once to each of the two regions whose symmetric difference it joins).
///
/// # Errors
///
/// The grids must share window, resolution, and weight mode.
pub fn symmetric_difference_mass(
    p: &GridPartition,
    q: &GridPartition,
    annulus: &Annulus,
) -> Result<f64> {
    if p.window() != q.window()
        || p.resolution() != q.resolution()
        || p.weight_mode() != q.weight_mode()
    {
        return Err(GeomError::GridMismatch);
    }
    let n = p.resolution();
    let mut mass = 0.0;
    for j in 0..n {
        for i in 0..n {
            if p.label(i, j) != q.label(i, j) && annulus.contains(p.cell_center(i, j)) {
                mass += 2.0 * p.cell_measure(i, j);
            }
        }
    }
    Ok(mass)
}

/// Ready-made grid configurations used by the diagnostics, the examples,
/// and the test suite.
pub mod fixtures {
    use super::*;
    use rand::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Barrel partition rasterized on the window `[0, 3]^2` in weighted
    /// mode: region 1 is the unit square chamber, regions 2 and 3 split the
    /// rest along the diagonal.
    pub fn barrel_grid(resolution: u32) -> Result<GridPartition> {
        GridPartition::from_fn([0.0, 0.0, 3.0, 3.0], resolution, WeightMode::Weighted, |x, y| {
            if x < 1.0 && y < 1.0 {
                1
            } else if x > y {
                2
            } else {
                3
            }
        })
    }

    /// Deterministic pseudo-random pair of 3-label partitions of the unit
    /// square (unweighted), for glueing-identity runs. The two grids draw
    /// from independent streams of one seeded generator.
    pub fn random_pair(resolution: u32, seed: u64) -> Result<(GridPartition, GridPartition)> {
        let window = [0.0, 0.0, 1.0, 1.0];
        let cells = resolution as usize * resolution as usize;
        let draw = |stream: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            (0..cells).map(|_| (rng.next_u32() % 3 + 1) as u8).collect::<Vec<_>>()
        };
        let e = GridPartition::from_labels(window, resolution, WeightMode::Unweighted, draw(0))?;
        let f = GridPartition::from_labels(window, resolution, WeightMode::Unweighted, draw(1))?;
        Ok((e, f))
    }

    /// Two equal-mass configurations of region 2 on the unit square
    /// (unweighted): a full-width slab of height `cube_size^2` against a
    /// single full cube of side `cube_size`. Equal areas, maximally
    /// different concentration.
    pub fn slab_and_blob(
        resolution: u32,
        cube_size: f64,
    ) -> Result<(GridPartition, GridPartition)> {
        let window = [0.0, 0.0, 1.0, 1.0];
        let strip_height = cube_size * cube_size;
        let slab = GridPartition::from_fn(window, resolution, WeightMode::Unweighted, |_, y| {
            if y < strip_height {
                2
            } else {
                1
            }
        })?;
        let blob = GridPartition::from_fn(window, resolution, WeightMode::Unweighted, |x, y| {
            if x < cube_size && y < cube_size {
                2
            } else {
                1
            }
        })?;
        Ok((slab, blob))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact;
    use approx::assert_relative_eq;

    #[test]
    fn construction_validates_inputs() {
        let w = [0.0, 0.0, 1.0, 1.0];
        assert!(matches!(
            GridPartition::from_labels(w, 2, WeightMode::Unweighted, vec![1, 1, 1]),
            Err(GeomError::BadLabelCount {
                got: 3,
                expected: 4
            })
        ));
        assert!(matches!(
            GridPartition::from_labels(w, 2, WeightMode::Unweighted, vec![1, 0, 1, 1]),
            Err(GeomError::ZeroLabel(1))
        ));
        assert!(matches!(
            GridPartition::from_labels([-1.0, 0.0, 1.0, 1.0], 2, WeightMode::Weighted, vec![1; 4]),
            Err(GeomError::BadWindow { .. })
        ));
        // Negative windows are fine unweighted.
        assert!(
            GridPartition::from_labels([-1.0, -1.0, 1.0, 1.0], 2, WeightMode::Unweighted, vec![
                1; 4
            ])
            .is_ok()
        );
        assert!(matches!(
            GridPartition::from_labels([0.0, 0.0, 0.0, 1.0], 2, WeightMode::Unweighted, vec![1; 4]),
            Err(GeomError::BadWindow { .. })
        ));
    }

    #[test]
    fn uniform_labels_have_zero_perimeter() {
        let p =
            GridPartition::from_fn([0.0, 0.0, 1.0, 1.0], 16, WeightMode::Unweighted, |_, _| 1)
                .unwrap();
        let m = grid_measures(&p);
        assert_eq!(m.total_perimeter, 0.0);
        assert_eq!(m.per_region[&1].perimeter, 0.0);
        assert_relative_eq!(m.per_region[&1].volume, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn axis_aligned_cut_is_exact_at_any_resolution() {
        for resolution in [8, 64, 67] {
            let p = GridPartition::from_fn(
                [0.0, 0.0, 1.0, 1.0],
                resolution,
                WeightMode::Unweighted,
                |x, _| if x < 0.5 { 1 } else { 2 },
            )
            .unwrap();
            let m = grid_measures(&p);
            assert_relative_eq!(m.total_perimeter, 1.0, max_relative = 1e-12);
            assert_relative_eq!(m.per_region[&1].perimeter, 1.0, max_relative = 1e-12);
            assert_relative_eq!(m.per_region[&2].perimeter, 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn half_sum_identity_is_exact() {
        let p = GridPartition::from_fn([0.0, 0.0, 2.0, 2.0], 37, WeightMode::Weighted, |x, y| {
            1 + (((x * 7.3).floor() + (y * 11.1).floor()) as u64 % 3) as u8
        })
        .unwrap();
        let m = grid_measures(&p);
        let half_sum: f64 = 0.5 * m.per_region.values().map(|r| r.perimeter).sum::<f64>();
        assert_eq!(m.total_perimeter, half_sum);
        assert!(m.total_perimeter > 0.0);
    }

    #[test]
    fn barrel_grid_volume_near_closed_form_when_faces_align() {
        // At resolution 513 on [0, 3], the chamber faces x = 1 and y = 1
        // fall exactly on cell boundaries, so the only volume error is the
        // midpoint rule's, far below the 0.5% bar.
        let p = fixtures::barrel_grid(513).unwrap();
        let m = grid_measures(&p);
        let exact_volume = exact::barrel_quantities().volume;
        let rel = (m.per_region[&1].volume - exact_volume).abs() / exact_volume;
        assert!(rel < 5e-3, "relative volume error {rel}");
        assert!(rel < 1e-4, "aligned-face error should be tiny, got {rel}");
        let exact_perimeter = exact::barrel_quantities().perimeter;
        let rel_p = (m.per_region[&1].perimeter - exact_perimeter).abs() / exact_perimeter;
        assert!(rel_p < 1e-4, "relative perimeter error {rel_p}");
    }

    #[test]
    fn barrel_grid_errors_decay_with_resolution() {
        let exact_q = exact::barrel_quantities();
        let mut vol_errs = Vec::new();
        let mut per_errs = Vec::new();
        for resolution in [128, 256, 512] {
            let m = grid_measures(&fixtures::barrel_grid(resolution).unwrap());
            vol_errs.push((m.per_region[&1].volume - exact_q.volume).abs());
            per_errs.push((m.per_region[&1].perimeter - exact_q.perimeter).abs());
        }
        for errs in [&vol_errs, &per_errs] {
            for pair in errs.windows(2) {
                assert!(
                    pair[1] <= pair[0] * 1.1,
                    "errors should not grow under refinement: {errs:?}"
                );
            }
        }
    }

    #[test]
    fn symmetric_difference_of_equal_grids_is_zero() {
        let (e, _) = fixtures::random_pair(64, 5).unwrap();
        let ann = Annulus::new([0.5, 0.5], 0.1, 0.4).unwrap();
        assert_eq!(symmetric_difference_mass(&e, &e, &ann).unwrap(), 0.0);
    }

    #[test]
    fn swapping_two_labels_doubles_their_annulus_volume() {
        let p = GridPartition::from_fn([0.0, 0.0, 1.0, 1.0], 128, WeightMode::Unweighted, |x, y| {
            if x < 0.3 {
                1
            } else if y < 0.6 {
                2
            } else {
                3
            }
        })
        .unwrap();
        let swapped: Vec<u8> = p
            .labels()
            .iter()
            .map(|&l| match l {
                2 => 3,
                3 => 2,
                other => other,
            })
            .collect();
        let q =
            GridPartition::from_labels(p.window(), p.resolution(), p.weight_mode(), swapped)
                .unwrap();
        // Annulus covering the whole window: centered mid-window with outer
        // radius past the corners.
        let ann = Annulus::new([0.5, 0.5], 0.0, 1.0).unwrap();
        let mass = symmetric_difference_mass(&p, &q, &ann).unwrap();
        let n = p.resolution();
        let mut vol23 = 0.0;
        for j in 0..n {
            for i in 0..n {
                if p.label(i, j) != 1 {
                    vol23 += p.cell_measure(i, j);
                }
            }
        }
        assert_relative_eq!(mass, 2.0 * vol23, max_relative = 1e-12);
    }

    #[test]
    fn label_noise_mass_matches_expectation() {
        use rand::{Rng, SeedableRng};
        let resolution = 128;
        let base =
            GridPartition::from_fn([0.0, 0.0, 1.0, 1.0], resolution, WeightMode::Unweighted, |_, _| 1)
                .unwrap();
        let eps = 0.1;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let noisy: Vec<u8> = base
            .labels()
            .iter()
            .map(|&l| if rng.random::<f64>() < eps { 2 } else { l })
            .collect();
        let q = GridPartition::from_labels(base.window(), resolution, base.weight_mode(), noisy)
            .unwrap();
        let ann = Annulus::new([0.5, 0.5], 0.1, 0.45).unwrap();
        let mass = symmetric_difference_mass(&base, &q, &ann).unwrap();
        // Expected 2 eps |annulus|; allow 3 sigma of the binomial count over
        // the cells the annulus contains.
        let n = resolution;
        let mut cells_in = 0.0;
        for j in 0..n {
            for i in 0..n {
                if ann.contains(base.cell_center(i, j)) {
                    cells_in += 1.0;
                }
            }
        }
        let cell_area = 1.0 / (resolution as f64).powi(2);
        let expect = 2.0 * eps * cells_in * cell_area;
        let sigma = 2.0 * cell_area * (cells_in * eps * (1.0 - eps)).sqrt();
        assert!(
            (mass - expect).abs() < 3.0 * sigma,
            "mass {mass} vs expected {expect} +- {sigma}"
        );
    }

    #[test]
    fn mismatched_grids_are_rejected() {
        let (e, _) = fixtures::random_pair(32, 1).unwrap();
        let (f, _) = fixtures::random_pair(64, 1).unwrap();
        let ann = Annulus::new([0.5, 0.5], 0.1, 0.4).unwrap();
        assert!(matches!(
            symmetric_difference_mass(&e, &f, &ann),
            Err(GeomError::GridMismatch)
        ));
    }

    #[test]
    fn save_load_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let (e, _) = fixtures::random_pair(16, 3).unwrap();
        let paths = e.save(dir.path(), "grid_a").unwrap();
        assert_eq!(paths.len(), 2);
        let back = GridPartition::load(&paths[0]).unwrap();
        assert_eq!(e, back);
    }

    #[test]
    fn load_rejects_malformed_labels() {
        let dir = tempfile::tempdir().unwrap();
        let (e, _) = fixtures::random_pair(4, 3).unwrap();
        let paths = e.save(dir.path(), "grid_bad").unwrap();
        std::fs::write(dir.path().join("grid_bad.labels.csv"), "1,2,x,1\n1,1,1,1\n").unwrap();
        assert!(matches!(
            GridPartition::load(&paths[0]),
            Err(GeomError::BadGridFile(_) | GeomError::BadLabelCount { .. })
        ));
    }

    #[test]
    fn annulus_membership_is_half_open() {
        let ann = Annulus::new([0.0, 0.0], 1.0, 2.0).unwrap();
        assert!(ann.contains([1.0, 0.0]));
        assert!(!ann.contains([2.0, 0.0]));
        assert!(!ann.contains([0.5, 0.0]));
        assert!(Annulus::new([0.0, 0.0], 2.0, 1.0).is_err());
    }

    #[test]
    fn slab_and_blob_have_equal_mass() {
        let (slab, blob) = fixtures::slab_and_blob(256, 0.125).unwrap();
        let ms = grid_measures(&slab);
        let mb = grid_measures(&blob);
        // Dyadic cell areas make both masses exact; compare bitwise.
        assert_eq!(ms.per_region[&2].volume, mb.per_region[&2].volume);
        assert!(ms.per_region[&2].perimeter > mb.per_region[&2].perimeter);
    }
}
