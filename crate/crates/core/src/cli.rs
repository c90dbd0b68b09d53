//! Command-line front end: `constants`, `solve`, `monotonicity`, and
//! `diagnostics {glue, profile}`.
//!
//! Every command is deterministic given its flags; file outputs are listed
//! in a `manifest.json` next to them. The default output directory is the
//! `--out` flag, then the `ISOPER8_OUT` environment variable, then
//! `./isoper8-out`. Exit codes: 0 success, 2 precondition or flag
//! violation, 3 numerical non-convergence.

use crate::asymptotics::{monotonicity_scan, DensityScan};
use crate::cmc::{shoot, solve_partition, SolverConfig};
use crate::diagnostics::{concentration_profile, glue_slice_profile, glueing_radius};
use crate::error::{GeomError, Result};
use crate::exact;
use crate::grid::{fixtures, GridPartition};
use crate::oracle;
use crate::reduced::ReducedPartition3;
use crate::report::{self, RunManifest};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "isoper8",
    version,
    about = "Geometry toolkit for three-region isoperimetric partitions of R^8 \
             with block-rotation symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print reference constants with closed-form and oracle columns.
    Constants {
        /// Output format for the table.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Solve the 120-degree junction partition and write report, curves,
    /// and optionally the quadrant figure.
    Solve {
        /// Prescribed weighted curvature.
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Integrator arclength step.
        #[arg(long, default_value_t = 2e-4)]
        step: f64,
        /// Series patch radius above the axis.
        #[arg(long, default_value_t = 1e-3)]
        axis_eps: f64,
        /// Intercept search interval, written lo:hi.
        #[arg(long, default_value = "3.5:5.5")]
        bracket: String,
        /// Accepted junction-angle residual.
        #[arg(long, default_value_t = 1e-9)]
        tol_angle: f64,
        /// Bisection tolerance on the intercept.
        #[arg(long, default_value_t = 1e-10)]
        tol_root: f64,
        /// Also render the figure to this SVG path (relative paths land in
        /// the output directory).
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan interface density ratios over growing radii and print a
    /// monotonicity verdict.
    Monotonicity {
        /// Partition source: "simons", "barrel", or a partition.json path.
        #[arg(long, default_value = "simons")]
        partition: String,
        /// Radius of the ball excised from every annulus; defaults to the
        /// smallest ball enclosing the bounded chamber.
        #[arg(long)]
        base_radius: Option<f64>,
        /// Radii as lo:hi:count, spaced geometrically.
        #[arg(long)]
        radii: Option<String>,
        /// Relative slack allowed on decreasing steps.
        #[arg(long, default_value_t = 1e-6)]
        slack: f64,
        /// Output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grid diagnostics on labelled partitions.
    #[command(subcommand)]
    Diagnostics(DiagCommand),
}

#[derive(Subcommand)]
enum DiagCommand {
    /// Find a radius where two partitions glue with low slice perimeter.
    Glue {
        /// First grid (outside the glueing ball); header JSON path.
        /// Omitting both file flags uses a seeded random pair.
        #[arg(long, requires = "second")]
        first: Option<PathBuf>,
        /// Second grid (inside the glueing ball); header JSON path.
        #[arg(long, requires = "first")]
        second: Option<PathBuf>,
        /// Grid resolution for the generated random pair.
        #[arg(long, default_value_t = 128)]
        resolution: u32,
        /// Seed for the generated random pair.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Annulus center, written x:y; defaults to the window center.
        #[arg(long)]
        center: Option<String>,
        /// Inner annulus radius; defaults to a quarter of the half-window.
        #[arg(long)]
        r_inner: Option<f64>,
        /// Outer annulus radius; defaults to
        /// nine tenths of the half-window.
        #[arg(long)]
        r_outer: Option<f64>,
        /// Output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sort one region's mass into cubes and write its tail sums.
    Profile {
        /// Region source: "slab", "blob", "barrel", or a grid header path.
        #[arg(long, default_value = "blob")]
        input: String,
        /// Region label to profile; defaults to the fixture's marked
        /// region (2 for slab/blob, 1 otherwise).
        #[arg(long)]
        region: Option<u8>,
        /// Cube side length; must divide the window.
        #[arg(long)]
        cube_size: Option<f64>,
        /// Grid resolution for generated fixtures.
        #[arg(long)]
        resolution: Option<u32>,
        /// Output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

/// Writes one line to stdout. A closed pipe (the reader stopped listening,
/// as in `isoper8 constants | head`) ends the process quietly instead of
/// panicking; any other stdout failure is reported and exits 2.
fn emit_line(args: std::fmt::Arguments) {
    use std::io::{ErrorKind, Write};
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let outcome = lock.write_fmt(args).and_then(|()| lock.write_all(b"\n"));
    if let Err(e) = outcome {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

macro_rules! emit {
    ($($arg:tt)*) => { emit_line(format_args!($($arg)*)) };
}

/// Parses flags from the process arguments, runs the selected command, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Constants { format } => cmd_constants(format),
        Command::Solve {
            lambda,
            step,
            axis_eps,
            bracket,
            tol_angle,
            tol_root,
            svg,
            out,
        } => cmd_solve(lambda, step, axis_eps, &bracket, tol_angle, tol_root, svg, out),
        Command::Monotonicity {
            partition,
            base_radius,
            radii,
            slack,
            out,
        } => cmd_monotonicity(&partition, base_radius, radii.as_deref(), slack, out),
        Command::Diagnostics(DiagCommand::Glue {
            first,
            second,
            resolution,
            seed,
            center,
            r_inner,
            r_outer,
            out,
        }) => cmd_glue(
            first,
            second,
            resolution,
            seed,
            center.as_deref(),
            r_inner,
            r_outer,
            out,
        ),
        Command::Diagnostics(DiagCommand::Profile {
            input,
            region,
            cube_size,
            resolution,
            out,
        }) => cmd_profile(&input, region, cube_size, resolution, out),
    }
}

fn resolve_out(flag: Option<PathBuf>) -> Result<PathBuf> {
    let dir = flag
        .or_else(|| std::env::var_os("ISOPER8_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("isoper8-out"));
    std::fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn parse_pair(raw: &str, flag: &str) -> Result<(f64, f64)> {
    let mut it = raw.split(':');
    let parse = |part: Option<&str>| -> Option<f64> { part?.trim().parse().ok() };
    match (parse(it.next()), parse(it.next()), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(GeomError::BadFlag(format!(
            "--{flag} expects two numbers as lo:hi, got {raw:?}"
        ))),
    }
}

fn parse_radii(raw: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = raw.split(':').collect();
    let bad = || GeomError::BadFlag(format!("--radii expects lo:hi:count, got {raw:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if !(lo > 0.0 && hi >= lo && count >= 1) {
        return Err(bad());
    }
    Ok(geometric_radii(lo, hi, count))
}

fn geometric_radii(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let ratio = (hi / lo).powf(1.0 / (count - 1) as f64);
    let mut radii: Vec<f64> = (0..count).map(|k| lo * ratio.powi(k as i32)).collect();
    // Pin the endpoint against accumulated rounding.
    radii[count - 1] = hi;
    radii
}

#[derive(Serialize)]
struct ConstantRow {
    name: &'static str,
    closed_form: f64,
    oracle: f64,
    relative_difference: f64,
}

fn constant_rows() -> Result<Vec<ConstantRow>> {
    let mut rows = Vec::new();
    let mut push = |name: &'static str, closed: f64, oracle: f64| {
        let scale = closed.abs().max(oracle.abs()).max(f64::MIN_POSITIVE);
        rows.push(ConstantRow {
            name,
            closed_form: closed,
            oracle,
            relative_difference: (closed - oracle).abs() / scale,
        });
    };
    let omega = oracle::omega_ladder(8);
    let names = [
        "omega_1", "omega_2", "omega_3", "omega_4", "omega_5", "omega_6", "omega_7", "omega_8",
    ];
    for (d, name) in names.iter().enumerate() {
        push(name, exact::unit_ball_volume(d as u32 + 1)?, omega[d + 1]);
    }
    let sphere = oracle::sphere_ladder(7);
    let sphere_names = [
        "sphere_area_1",
        "sphere_area_2",
        "sphere_area_3",
        "sphere_area_4",
        "sphere_area_5",
        "sphere_area_6",
        "sphere_area_7",
    ];
    for (d, name) in sphere_names.iter().enumerate() {
        push(name, exact::sphere_area(d as u32 + 1)?, sphere[d + 1]);
    }
    let lens = exact::lens_quantities();
    let (o_vol, o_per, o_plane) = oracle::oracle_lens_quantities();
    push("lens_volume", lens.volume, o_vol);
    push("lens_perimeter", lens.perimeter, o_per);
    push("lens_plane_inside", lens.plane_inside, o_plane);
    push(
        "lens_defect",
        lens.defect,
        exact::defect(o_per, o_plane, o_vol)?,
    );
    let barrel = exact::barrel_quantities();
    let (b_vol, b_per, b_cone) = oracle::oracle_barrel_quantities();
    push("barrel_volume", barrel.volume, b_vol);
    push("barrel_perimeter", barrel.perimeter, b_per);
    push("barrel_cone_inside", barrel.cone_inside, b_cone);
    push(
        "barrel_defect",
        barrel.defect,
        exact::defect(b_per, b_cone, b_vol)?,
    );
    push(
        "ball_defect",
        exact::ball_defect(),
        exact::defect(
            oracle::sphere_ladder(7)[7],
            0.0,
            oracle::omega_ladder(8)[8],
        )?,
    );
    Ok(rows)
}

fn cmd_constants(format: Format) -> Result<i32> {
    let rows = constant_rows()?;
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&rows)?;
            emit!("{text}");
        }
        Format::Table => {
            emit!(
                "{:<20} {:>24} {:>24} {:>10}",
                "name", "closed form", "oracle", "rel diff"
            );
            for row in &rows {
                emit!(
                    "{:<20} {:>24.16e} {:>24.16e} {:>10.1e}",
                    row.name, row.closed_form, row.oracle, row.relative_difference
                );
            }
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    lambda: f64,
    step: f64,
    axis_eps: f64,
    bracket: &str,
    tol_angle: f64,
    tol_root: f64,
    svg: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<i32> {
    let dir = resolve_out(out)?;
    let cfg = SolverConfig {
        lambda,
        step,
        axis_eps,
        bracket: parse_pair(bracket, "bracket")?,
        tol_angle,
        tol_root,
        gamma23_factor: 5.0,
    };
    let (partition, defect_report) = solve_partition(&cfg)?;
    let shot = shoot(defect_report.intercept_a, &cfg)?;
    let mut manifest = RunManifest::new("solve");
    manifest.record_param("lambda", lambda);
    manifest.record_param("step", step);
    manifest.record_param("axis_eps", axis_eps);
    manifest.record_param("bracket", bracket);
    manifest.record_param("tol_angle", tol_angle);
    manifest.record_param("tol_root", tol_root);
    let report_path = dir.join("report.json");
    report::write_json(&report_path, &defect_report)?;
    manifest.record_output(&report_path);
    let partition_path = dir.join("partition.json");
    report::save_partition(
        &partition_path,
        &partition,
        Some(lambda),
        Some(defect_report.intercept_a),
    )?;
    manifest.record_output(&partition_path);
    let trajectory_path = dir.join("trajectory.csv");
    report::write_trajectory_csv(&trajectory_path, &shot.trajectory)?;
    manifest.record_output(&trajectory_path);
    let curves_path = dir.join("partition.csv");
    report::write_interfaces_csv(&curves_path, &partition)?;
    manifest.record_output(&curves_path);
    if let Some(svg_flag) = svg {
        let svg_path = if svg_flag.is_absolute() {
            svg_flag.clone()
        } else {
            dir.join(&svg_flag)
        };
        manifest.record_param("svg", svg_flag.display());
        report::save_partition_svg(&svg_path, &partition)?;
        manifest.record_output(&svg_path);
    }
    manifest.save(&dir)?;
    emit!(
        "solved: intercept a = {:.10}, junction ({:.10}, {:.10})",
        defect_report.intercept_a, partition.junction[0], partition.junction[1]
    );
    emit!(
        "perimeter = {:.6e}, volume = {:.6e}, cone inside = {:.6e}",
        defect_report.perimeter_region1, defect_report.volume_region1, defect_report.cone_inside
    );
    emit!("defect = {:.10}", defect_report.defect);
    emit!("outputs in {}", dir.display());
    Ok(0)
}

fn load_partition_source(source: &str) -> Result<ReducedPartition3> {
    match source {
        "simons" => ReducedPartition3::simons(1.0),
        "barrel" => ReducedPartition3::barrel(1.0),
        path => {
            let (partition, _, _) = report::load_partition(Path::new(path))?;
            Ok(partition)
        }
    }
}

fn cmd_monotonicity(
    source: &str,
    base_radius: Option<f64>,
    radii_flag: Option<&str>,
    slack: f64,
    out: Option<PathBuf>,
) -> Result<i32> {
    let dir = resolve_out(out)?;
    let partition = load_partition_source(source)?;
    let base = base_radius.unwrap_or_else(|| {
        if partition.region1_perimeter() > 0.0 {
            partition.region1_max_radius()
        } else {
            0.0
        }
    });
    let radii = match radii_flag {
        Some(raw) => parse_radii(raw)?,
        None => {
            let lo = if base > 0.0 { base * 1.05 } else { 1.0 };
            geometric_radii(lo, lo * 1000.0, 60)
        }
    };
    let scan = monotonicity_scan(&partition, base, &radii)?;
    let verdict = scan_verdict(&scan, slack);
    let mut manifest = RunManifest::new("monotonicity");
    manifest.record_param("partition", source);
    manifest.record_param("base_radius", base);
    manifest.record_param("radii_count", radii.len());
    manifest.record_param("slack", slack);
    let scan_path = dir.join("scan.csv");
    report::write_scan_csv(&scan_path, &scan)?;
    manifest.record_output(&scan_path);
    manifest.save(&dir)?;
    emit!(
        "scanned {} radii from {:.6} to {:.6} (base {:.6})",
        scan.radii.len(),
        scan.radii[0],
        scan.radii[scan.radii.len() - 1],
        base
    );
    emit!("limit estimate = {:.12}", scan.limit_estimate());
    match verdict {
        None => {
            emit!("monotonicity: pass");
            Ok(0)
        }
        Some((i, drop)) => {
            emit!(
                "monotonicity: fail (ratio decreases by {drop:.3e} relative at step {i})"
            );
            Ok(2)
        }
    }
}

/// Returns None when the ratios are nondecreasing within the relative
/// slack, otherwise the first offending step and its relative drop.
fn scan_verdict(scan: &DensityScan, slack: f64) -> Option<(usize, f64)> {
    for i in 0..scan.ratios.len().saturating_sub(1) {
        let (a, b) = (scan.ratios[i], scan.ratios[i + 1]);
        let scale = a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
        let drop = (a - b) / scale;
        if drop > slack {
            return Some((i, drop));
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn cmd_glue(
    first: Option<PathBuf>,
    second: Option<PathBuf>,
    resolution: u32,
    seed: u64,
    center_flag: Option<&str>,
    r_inner: Option<f64>,
    r_outer: Option<f64>,
    out: Option<PathBuf>,
) -> Result<i32> {
    let dir = resolve_out(out)?;
    let mut manifest = RunManifest::new("diagnostics glue");
    let (e, f) = match (first, second) {
        (Some(a), Some(b)) => {
            manifest.record_param("first", a.display());
            manifest.record_param("second", b.display());
            (GridPartition::load(&a)?, GridPartition::load(&b)?)
        }
        _ => {
            manifest.record_param("fixture", "random");
            manifest.record_param("resolution", resolution);
            manifest.record_param("seed", seed);
            fixtures::random_pair(resolution, seed)?
        }
    };
    let [x0, y0, x1, y1] = e.window();
    let center = match center_flag {
        Some(raw) => {
            let (cx, cy) = parse_pair(raw, "center")?;
            [cx, cy]
        }
        None => [0.5 * (x0 + x1), 0.5 * (y0 + y1)],
    };
    let half = 0.5 * (x1 - x0).min(y1 - y0);
    let r = r_inner.unwrap_or(0.25 * half);
    let big_r = r_outer.unwrap_or(0.9 * half);
    manifest.record_param("center", format!("{}:{}", center[0], center[1]));
    manifest.record_param("r_inner", r);
    manifest.record_param("r_outer", big_r);
    let profile = glue_slice_profile(&e, &f, center, r, big_r)?;
    let result = glueing_radius(&e, &f, center, r, big_r)?;
    let csv_path = dir.join("glue.csv");
    report::write_glue_csv(&csv_path, &profile)?;
    manifest.record_output(&csv_path);
    let json_path = dir.join("glue.json");
    report::write_json(&json_path, &result)?;
    manifest.record_output(&json_path);
    manifest.save(&dir)?;
    emit!(
        "glueing radius rho = {:.6}: slice perimeter {:.6e} <= bound {:.6e}",
        result.rho, result.slice_perimeter, result.bound
    );
    emit!("outputs in {}", dir.display());
    Ok(0)
}

fn cmd_profile(
    input: &str,
    region: Option<u8>,
    cube_size: Option<f64>,
    resolution: Option<u32>,
    out: Option<PathBuf>,
) -> Result<i32> {
    let dir = resolve_out(out)?;
    let mut manifest = RunManifest::new("diagnostics profile");
    manifest.record_param("input", input);
    let (grid, default_region, default_cube) = match input {
        "slab" | "blob" => {
            let res = resolution.unwrap_or(512);
            let cube = cube_size.unwrap_or(0.125);
            manifest.record_param("resolution", res);
            let (slab, blob) = fixtures::slab_and_blob(res, cube)?;
            let grid = if input == "slab" { slab } else { blob };
            (grid, 2, cube)
        }
        "barrel" => {
            let res = resolution.unwrap_or(513);
            manifest.record_param("resolution", res);
            (fixtures::barrel_grid(res)?, 1, cube_size.unwrap_or(0.75))
        }
        path => {
            let grid = GridPartition::load(Path::new(path))?;
            let cube = cube_size.ok_or_else(|| {
                GeomError::BadFlag("--cube-size is required for grid file inputs".to_string())
            })?;
            (grid, 1, cube)
        }
    };
    let region = region.unwrap_or(default_region);
    manifest.record_param("region", region);
    manifest.record_param("cube_size", default_cube);
    let profile = concentration_profile(&grid, region, default_cube)?;
    let csv_path = dir.join("profile.csv");
    report::write_profile_csv(&csv_path, &profile)?;
    manifest.record_output(&csv_path);
    manifest.save(&dir)?;
    let occupied = profile.sorted_masses.iter().filter(|&&m| m > 0.0).count();
    emit!(
        "region {} holds mass {:.6e} across {} of {} cubes (perimeter {:.6e})",
        region,
        profile.total_mass,
        occupied,
        profile.sorted_masses.len(),
        profile.total_perimeter
    );
    emit!("outputs in {}", dir.display());
    Ok(0)
}
