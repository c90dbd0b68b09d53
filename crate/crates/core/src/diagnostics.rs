//! Grid diagnostics: glueing-radius selection and concentration profiles.
//!
//! Both tools quantify how two labelled grids, or one region of a grid,
//! distribute mass across space. The glueing scan finds a radius at which
//! two partitions can be swapped (one inside the ball, the other outside)
//! while paying boundary perimeter no larger than an averaged
//! symmetric-difference budget; the concentration profile sorts a region's
//! mass into cubes to expose whether it is gathered in a few lumps or
//! smeared thin.

use crate::error::{GeomError, Result};
use crate::grid::{grid_measures, symmetric_difference_mass, Annulus, GridPartition};
use serde::{Deserialize, Serialize};

/// Outcome of a glueing-radius scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlueResult {
    /// Selected radius, the midpoint of the best shell.
    pub rho: f64,
    /// Discrete slice perimeter at the selected radius: the mass of
    /// disagreeing cells swept by the circle as it crosses the shell,
    /// divided by the shell width.
    pub slice_perimeter: f64,
    /// Averaged budget: symmetric-difference mass in the annulus divided
    /// by twice its width. The scan average of all slices equals this.
    pub bound: f64,
}

fn check_compatible(e: &GridPartition, f: &GridPartition) -> Result<()> {
    if e.window() != f.window()
        || e.resolution() != f.resolution()
        || e.weight_mode() != f.weight_mode()
    {
        return Err(GeomError::GridMismatch);
    }
    Ok(())
}

/// Slice perimeters of the glued configuration over uniformly spaced
/// shells of the annulus, as `[shell midpoint radius, slice perimeter]`
/// rows.
///
/// The annulus `r_inner <= |p - center| < r_outer` is divided into as many
/// shells as the grid has cells per side. A circle sweeping one shell
/// crosses exactly the cells whose center distance falls in that shell;
/// each such cell where the two partitions disagree contributes its
/// measure divided by the shell width, the discrete form of the length the
/// circle cuts through the disagreement set.
///
/// # Errors
///
/// The grids must share window, resolution, and weight mode; the annulus
/// must be valid and contained in the window.
pub fn glue_slice_profile(
    e: &GridPartition,
    f: &GridPartition,
    center: [f64; 2],
    r_inner: f64,
    r_outer: f64,
) -> Result<Vec<[f64; 2]>> {
    check_compatible(e, f)?;
    let annulus = Annulus::new(center, r_inner, r_outer)?;
    if !e.annulus_inside_window(&annulus) {
        return Err(GeomError::AnnulusOutsideWindow {
            cx: center[0],
            cy: center[1],
            r_outer,
        });
    }
    let bins = e.resolution() as usize;
    let delta = (r_outer - r_inner) / bins as f64;
    let mut slices = vec![0.0_f64; bins];
    for j in 0..e.resolution() {
        for i in 0..e.resolution() {
            if e.label(i, j) == f.label(i, j) {
                continue;
            }
            let [cx, cy] = e.cell_center(i, j);
            let d = (cx - center[0]).hypot(cy - center[1]);
            if d < r_inner || d >= r_outer {
                continue;
            }
            let bin = (((d - r_inner) / delta) as usize).min(bins - 1);
            slices[bin] += e.cell_measure(i, j);
        }
    }
    Ok(slices
        .iter()
        .enumerate()
        .map(|(k, &mass)| [r_inner + (k as f64 + 0.5) * delta, mass / delta])
        .collect())
}

/// Selects a radius in the annulus at which gluing `f` (inside) to `e`
/// (outside) costs the least slice perimeter.
///
/// Averaged over all shells the slice perimeter equals `bound` exactly, so
/// the minimizing shell always satisfies `slice_perimeter <= bound` up to
/// floating-point reassociation; the returned radius is that shell's
/// midpoint. Two equal partitions give a zero bound and a zero slice at
/// every radius.
///
/// # Errors
///
/// Same domain errors as [`glue_slice_profile`]; additionally, a minimal
/// slice exceeding the bound by more than the discretization slack
/// `1 + 5/resolution` is reported with both numbers (a coarseness signal,
/// unreachable when shells and mass use the same cell membership).
pub fn glueing_radius(
    e: &GridPartition,
    f: &GridPartition,
    center: [f64; 2],
    r_inner: f64,
    r_outer: f64,
) -> Result<GlueResult> {
    let profile = glue_slice_profile(e, f, center, r_inner, r_outer)?;
    let annulus = Annulus::new(center, r_inner, r_outer)?;
    let mass = symmetric_difference_mass(e, f, &annulus)?;
    let bound = mass / (2.0 * (r_outer - r_inner));
    let (mut best_rho, mut best_slice) = (profile[0][0], profile[0][1]);
    for row in &profile {
        if row[1] < best_slice {
            best_rho = row[0];
            best_slice = row[1];
        }
    }
    let slack = 1.0 + 5.0 / e.resolution() as f64;
    if best_slice > bound * slack {
        return Err(GeomError::NoAdmissibleRadius {
            minimal_slice: best_slice,
            bound,
        });
    }
    Ok(GlueResult {
        rho: best_rho,
        slice_perimeter: best_slice,
        bound,
    })
}

/// Cube-sorted mass distribution of one region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConcentrationProfile {
    /// Side length of the tiling cubes.
    pub cube_size: f64,
    /// Per-cube masses of the region, sorted nonincreasing.
    pub sorted_masses: Vec<f64>,
    /// tail_sums[n] = sum of sorted_masses[n..]; one entry longer than
    /// sorted_masses, starting at the total mass and ending at zero.
    pub tail_sums: Vec<f64>,
    /// Total region mass; equals tail_sums[0] bit-for-bit.
    pub total_mass: f64,
    /// Grid perimeter of the region.
    pub total_perimeter: f64,
}

/// Tiles the window with cubes, gathers the region's mass per cube, and
/// sorts the cubes by mass.
///
/// Cells are attributed to cubes by their centers, so every cell lands in
/// exactly one cube and the tail sums conserve the region's grid volume.
/// A sharply concentrated region puts all its mass in few cubes and its
/// tail sums vanish early; a smeared region of the same mass keeps its
/// tail sums positive much longer.
///
/// # Errors
///
/// The region index must be nonzero and the cube size must divide both
/// window sides to within 1e-9.
pub fn concentration_profile(
    e: &GridPartition,
    region: u8,
    cube_size: f64,
) -> Result<ConcentrationProfile> {
    if region == 0 {
        return Err(GeomError::BadRegionIndex(0));
    }
    let [x0, y0, x1, y1] = e.window();
    if !(cube_size > 0.0 && cube_size.is_finite()) {
        return Err(GeomError::CubeSizeMisaligned {
            cube_size,
            side: x1 - x0,
        });
    }
    let mut counts = [0usize; 2];
    for (axis, side) in [(0, x1 - x0), (1, y1 - y0)] {
        let ratio = side / cube_size;
        if (ratio - ratio.round()).abs() > 1e-9 || ratio.round() < 1.0 {
            return Err(GeomError::CubeSizeMisaligned { cube_size, side });
        }
        counts[axis] = ratio.round() as usize;
    }
    let (nx, ny) = (counts[0], counts[1]);
    let mut masses = vec![0.0_f64; nx * ny];
    for j in 0..e.resolution() {
        for i in 0..e.resolution() {
            if e.label(i, j) != region {
                continue;
            }
            let [cx, cy] = e.cell_center(i, j);
            let ix = (((cx - x0) / cube_size) as usize).min(nx - 1);
            let iy = (((cy - y0) / cube_size) as usize).min(ny - 1);
            masses[iy * nx + ix] += e.cell_measure(i, j);
        }
    }
    masses.sort_by(|a, b| b.total_cmp(a));
    let mut tail_sums = vec![0.0_f64; masses.len() + 1];
    for k in (0..masses.len()).rev() {
        tail_sums[k] = masses[k] + tail_sums[k + 1];
    }
    let total_mass = tail_sums[0];
    let measures = grid_measures(e);
    let total_perimeter = measures
        .per_region
        .get(&region)
        .map_or(0.0, |m| m.perimeter);
    Ok(ConcentrationProfile {
        cube_size,
        sorted_masses: masses,
        tail_sums,
        total_mass,
        total_perimeter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::fixtures;
    use crate::grid::WeightMode;
    use approx::assert_relative_eq;

    fn uniform_grid(resolution: u32, label: u8) -> GridPartition {
        GridPartition::from_fn(
            [0.0, 0.0, 1.0, 1.0],
            resolution,
            WeightMode::Unweighted,
            |_, _| label,
        )
        .unwrap()
    }

    #[test]
    fn equal_partitions_glue_anywhere_for_free() {
        let e = uniform_grid(64, 1);
        let f = uniform_grid(64, 1);
        let out = glueing_radius(&e, &f, [0.5, 0.5], 0.1, 0.4).unwrap();
        assert_eq!(out.slice_perimeter, 0.0);
        assert_eq!(out.bound, 0.0);
        assert!(out.rho > 0.1 && out.rho < 0.4);
    }

    #[test]
    fn disagreement_inside_core_never_meets_annulus() {
        let e = uniform_grid(64, 1);
        let f = GridPartition::from_fn(
            [0.0, 0.0, 1.0, 1.0],
            64,
            WeightMode::Unweighted,
            |x, y| {
                if (x - 0.5).hypot(y - 0.5) < 0.15 {
                    2
                } else {
                    1
                }
            },
        )
        .unwrap();
        let out = glueing_radius(&e, &f, [0.5, 0.5], 0.2, 0.45).unwrap();
        assert_eq!(out.bound, 0.0);
        assert_eq!(out.slice_perimeter, 0.0);
    }

    #[test]
    fn average_slice_equals_bound() {
        for seed in [7, 99, 2024] {
            let (e, f) = fixtures::random_pair(64, seed).unwrap();
            let profile = glue_slice_profile(&e, &f, [0.5, 0.5], 0.1, 0.45).unwrap();
            let avg: f64 =
                profile.iter().map(|row| row[1]).sum::<f64>() / profile.len() as f64;
            let annulus = Annulus::new([0.5, 0.5], 0.1, 0.45).unwrap();
            let mass = symmetric_difference_mass(&e, &f, &annulus).unwrap();
            let bound = mass / (2.0 * 0.35);
            assert_relative_eq!(avg, bound, max_relative = 1e-12);
        }
    }

    #[test]
    fn returned_slice_respects_bound_with_slack() {
        for seed in [1, 2, 3, 4] {
            let (e, f) = fixtures::random_pair(128, seed).unwrap();
            let out = glueing_radius(&e, &f, [0.5, 0.5], 0.1, 0.45).unwrap();
            assert!(out.slice_perimeter <= out.bound * (1.0 + 5.0 / 128.0));
            assert!(out.rho > 0.1 && out.rho < 0.45);
        }
    }

    #[test]
    fn glue_validation_errors() {
        let e = uniform_grid(64, 1);
        let f = uniform_grid(32, 1);
        assert!(matches!(
            glueing_radius(&e, &f, [0.5, 0.5], 0.1, 0.4),
            Err(GeomError::GridMismatch)
        ));
        let f = uniform_grid(64, 2);
        assert!(matches!(
            glueing_radius(&e, &f, [0.5, 0.5], 0.4, 0.1),
            Err(GeomError::BadAnnulus { .. })
        ));
        assert!(matches!(
            glueing_radius(&e, &f, [0.5, 0.5], 0.1, 0.8),
            Err(GeomError::AnnulusOutsideWindow { .. })
        ));
    }

    #[test]
    fn one_full_cube_profile() {
        let e = GridPartition::from_fn(
            [0.0, 0.0, 1.0, 1.0],
            64,
            WeightMode::Unweighted,
            |x, y| if x < 0.25 && y < 0.25 { 2 } else { 1 },
        )
        .unwrap();
        let profile = concentration_profile(&e, 2, 0.25).unwrap();
        assert_eq!(profile.sorted_masses.len(), 16);
        assert_eq!(profile.sorted_masses[0], 0.0625);
        assert!(profile.sorted_masses[1..].iter().all(|&m| m == 0.0));
        assert_eq!(profile.total_mass, 0.0625);
        assert_eq!(profile.tail_sums[0], profile.total_mass);
        assert_eq!(profile.tail_sums[1], 0.0);
        assert_eq!(*profile.tail_sums.last().unwrap(), 0.0);
    }

    #[test]
    fn identical_disjoint_cubes_share_the_head() {
        // Four corner cubes of a 4 x 4 tiling carry the region.
        let e = GridPartition::from_fn(
            [0.0, 0.0, 1.0, 1.0],
            64,
            WeightMode::Unweighted,
            |x, y| {
                let in_x = !(0.25..0.75).contains(&x);
                let in_y = !(0.25..0.75).contains(&y);
                if in_x && in_y {
                    2
                } else {
                    1
                }
            },
        )
        .unwrap();
        let profile = concentration_profile(&e, 2, 0.25).unwrap();
        for k in 0..4 {
            assert_eq!(profile.sorted_masses[k], 0.0625);
        }
        assert_eq!(profile.tail_sums[4], 0.0);
        assert_eq!(profile.total_mass, 0.25);
    }

    #[test]
    fn slab_tails_decay_slower_than_blob_tails() {
        let cube = 0.125;
        let (slab, blob) = fixtures::slab_and_blob(512, cube).unwrap();
        let ps = concentration_profile(&slab, 2, cube).unwrap();
        let pb = concentration_profile(&blob, 2, cube).unwrap();
        // Equal total mass, bit for bit: both regions hold the same dyadic
        // cell count.
        assert_eq!(ps.total_mass, pb.total_mass);
        // The blob finishes at n = 1; the slab still has mass in every
        // later tail up to its cube count.
        for n in 1..8 {
            assert!(
                ps.tail_sums[n] > pb.tail_sums[n],
                "tail {n}: slab {} vs blob {}",
                ps.tail_sums[n],
                pb.tail_sums[n]
            );
        }
        assert_eq!(pb.tail_sums[1], 0.0);
    }

    #[test]
    fn profile_conserves_region_volume() {
        let e = fixtures::barrel_grid(129).unwrap();
        let profile = concentration_profile(&e, 1, 0.75).unwrap();
        let measures = grid_measures(&e);
        let vol = measures.per_region[&1].volume;
        assert_relative_eq!(profile.total_mass, vol, max_relative = 1e-12);
        assert_eq!(profile.total_mass, profile.tail_sums[0]);
        assert_relative_eq!(
            profile.total_perimeter,
            measures.per_region[&1].perimeter,
            max_relative = 1e-15
        );
    }

    #[test]
    fn sorted_masses_are_nonincreasing_and_a_permutation() {
        let (e, _) = fixtures::random_pair(32, 5).unwrap();
        let profile = concentration_profile(&e, 1, 0.25).unwrap();
        for pair in profile.sorted_masses.windows(2) {
            assert!(pair[0] >= pair[1]);
        }
        // Totals agree with an unsorted accumulation over cells.
        let mut direct = 0.0;
        for j in 0..32 {
            for i in 0..32 {
                if e.label(i, j) == 1 {
                    direct += e.cell_measure(i, j);
                }
            }
        }
        assert_relative_eq!(profile.total_mass, direct, max_relative = 1e-12);
    }

    #[test]
    fn profile_validation_errors() {
        let e = uniform_grid(64, 1);
        assert!(matches!(
            concentration_profile(&e, 0, 0.25),
            Err(GeomError::BadRegionIndex(0))
        ));
        assert!(matches!(
            concentration_profile(&e, 1, 0.3),
            Err(GeomError::CubeSizeMisaligned { .. })
        ));
        assert!(matches!(
            concentration_profile(&e, 1, 0.0),
            Err(GeomError::CubeSizeMisaligned { .. })
        ));
    }

    #[test]
    fn absent_region_yields_empty_profile() {
        let e = uniform_grid(64, 1);
        let profile = concentration_profile(&e, 3, 0.25).unwrap();
        assert_eq!(profile.total_mass, 0.0);
        assert_eq!(profile.total_perimeter, 0.0);
        assert!(profile.sorted_masses.iter().all(|&m| m == 0.0));
    }
}
