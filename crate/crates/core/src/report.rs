//! File emission: run manifests, CSV tables, JSON documents, partition
//! files, and the quadrant SVG figure.
//!
//! Everything written here is deterministic: floats are printed with the
//! shortest representation that round-trips the exact double, map keys are
//! sorted, and the manifest timestamp honors `SOURCE_DATE_EPOCH` so two
//! runs with the same inputs produce byte-identical files.

use crate::asymptotics::DensityScan;
use crate::cmc::ShootState;
use crate::diagnostics::ConcentrationProfile;
use crate::error::{GeomError, Result};
use crate::reduced::{ReducedCurve, ReducedPartition3};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Version stamped into every re-loadable file this crate writes.
pub const FORMAT_VERSION: u32 = 1;

/// Record of one command invocation: what ran, with which parameters, and
/// which files it produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    /// Every file the run emitted, the manifest itself included.
    pub outputs: Vec<String>,
    pub tool_version: String,
    pub format_version: u32,
    /// Unix seconds; taken from `SOURCE_DATE_EPOCH` when set.
    pub timestamp: u64,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            outputs: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            format_version: FORMAT_VERSION,
            timestamp: timestamp_from(std::env::var("SOURCE_DATE_EPOCH").ok()),
        }
    }

    pub fn record_param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn record_output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    /// Writes `manifest.json` into `dir`, listing itself as an output.
    pub fn save(&mut self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join("manifest.json");
        self.record_output(&path);
        write_json(&path, self)?;
        Ok(path)
    }
}

fn timestamp_from(epoch: Option<String>) -> u64 {
    if let Some(raw) = epoch {
        if let Ok(seconds) = raw.trim().parse::<u64>() {
            return seconds;
        }
    }
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Serializes `value` as pretty-printed JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Shortest decimal form that parses back to the identical double.
fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

/// Writes an integrator trajectory as `x,y,theta,s` rows.
pub fn write_trajectory_csv(path: &Path, trajectory: &[ShootState]) -> Result<()> {
    let mut csv = String::from("x,y,theta,s\n");
    for st in trajectory {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            fmt_f64(st.x),
            fmt_f64(st.y),
            fmt_f64(st.theta),
            fmt_f64(st.s)
        );
    }
    std::fs::write(path, csv)?;
    Ok(())
}

/// Writes the three interfaces of a partition as `interface,x,y` rows.
pub fn write_interfaces_csv(path: &Path, partition: &ReducedPartition3) -> Result<()> {
    let mut csv = String::from("interface,x,y\n");
    for (name, curve) in [
        ("gamma12", &partition.gamma12),
        ("gamma13", &partition.gamma13),
        ("gamma23", &partition.gamma23),
    ] {
        for p in curve.points() {
            let _ = writeln!(csv, "{},{},{}", name, fmt_f64(p[0]), fmt_f64(p[1]));
        }
    }
    std::fs::write(path, csv)?;
    Ok(())
}

/// Writes a density scan as `rho,ratio` rows.
pub fn write_scan_csv(path: &Path, scan: &DensityScan) -> Result<()> {
    let mut csv = String::from("rho,ratio\n");
    for (rho, ratio) in scan.radii.iter().zip(&scan.ratios) {
        let _ = writeln!(csv, "{},{}", fmt_f64(*rho), fmt_f64(*ratio));
    }
    std::fs::write(path, csv)?;
    Ok(())
}

/// Writes a concentration profile as `index,mass,tail_sum` rows, where
/// `tail_sum` on row n includes the row's own mass (the sum from n on).
pub fn write_profile_csv(path: &Path, profile: &ConcentrationProfile) -> Result<()> {
    let mut csv = String::from("index,mass,tail_sum\n");
    for (i, mass) in profile.sorted_masses.iter().enumerate() {
        let _ = writeln!(
            csv,
            "{},{},{}",
            i,
            fmt_f64(*mass),
            fmt_f64(profile.tail_sums[i])
        );
    }
    std::fs::write(path, csv)?;
    Ok(())
}

/// Writes a glueing slice profile as `rho,slice_perimeter` rows.
pub fn write_glue_csv(path: &Path, profile: &[[f64; 2]]) -> Result<()> {
    let mut csv = String::from("rho,slice_perimeter\n");
    for row in profile {
        let _ = writeln!(csv, "{},{}", fmt_f64(row[0]), fmt_f64(row[1]));
    }
    std::fs::write(path, csv)?;
    Ok(())
}

/// On-disk form of a three-region partition of the reduced quadrant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionFile {
    pub format_version: u32,
    #[serde(default)]
    pub lambda: Option<f64>,
    #[serde(default)]
    pub intercept_a: Option<f64>,
    pub junction: [f64; 2],
    pub symmetric: bool,
    pub region_labels: [[u8; 2]; 3],
    pub gamma12: Vec<[f64; 2]>,
    pub gamma13: Vec<[f64; 2]>,
    pub gamma23: Vec<[f64; 2]>,
}

/// Saves a partition (optionally with the solver settings that produced
/// it) as JSON.
pub fn save_partition(
    path: &Path,
    partition: &ReducedPartition3,
    lambda: Option<f64>,
    intercept_a: Option<f64>,
) -> Result<()> {
    let file = PartitionFile {
        format_version: FORMAT_VERSION,
        lambda,
        intercept_a,
        junction: partition.junction,
        symmetric: partition.symmetric,
        region_labels: partition.region_labels,
        gamma12: partition.gamma12.points().to_vec(),
        gamma13: partition.gamma13.points().to_vec(),
        gamma23: partition.gamma23.points().to_vec(),
    };
    write_json(path, &file)
}

/// Loads a partition saved by [`save_partition`], revalidating it.
pub fn load_partition(path: &Path) -> Result<(ReducedPartition3, Option<f64>, Option<f64>)> {
    let text = std::fs::read_to_string(path)?;
    let file: PartitionFile = serde_json::from_str(&text)?;
    if file.format_version != FORMAT_VERSION {
        return Err(GeomError::BadPartitionFile(format!(
            "unsupported format version {} (expected {FORMAT_VERSION})",
            file.format_version
        )));
    }
    let partition = ReducedPartition3::new(
        ReducedCurve::new(file.gamma12)?,
        ReducedCurve::new(file.gamma13)?,
        ReducedCurve::new(file.gamma23)?,
        file.junction,
        file.symmetric,
        file.region_labels,
    )?;
    Ok((partition, file.lambda, file.intercept_a))
}

const SVG_SIZE: f64 = 640.0;
const SVG_PAD: f64 = 40.0;
/// Longest polyline emitted per interface; longer curves are decimated
/// with a uniform stride that always keeps the final point.
const SVG_MAX_POINTS: usize = 2000;

fn svg_polyline_points(curve: &ReducedCurve, scale: f64) -> String {
    let points = curve.points();
    let stride = points.len().div_ceil(SVG_MAX_POINTS).max(1);
    let mut out = String::new();
    let mut write_point = |p: [f64; 2]| {
        let sx = SVG_PAD + p[0] * scale;
        let sy = SVG_SIZE - SVG_PAD - p[1] * scale;
        let _ = write!(out, "{sx:.2},{sy:.2} ");
    };
    for p in points.iter().step_by(stride) {
        write_point(*p);
    }
    if !(points.len() - 1).is_multiple_of(stride) {
        write_point(*points.last().unwrap());
    }
    out.trim_end().to_string()
}

/// Renders the reduced quadrant: axes, the dashed diagonal, the three
/// interfaces, and a junction marker. The output is a pure function of the
/// partition, with no timestamps or random ids.
pub fn render_partition_svg(partition: &ReducedPartition3) -> String {
    let mut extent = partition.junction[0].max(partition.junction[1]);
    for curve in [
        &partition.gamma12,
        &partition.gamma13,
        &partition.gamma23,
    ] {
        for p in curve.points() {
            extent = extent.max(p[0]).max(p[1]);
        }
    }
    if extent <= 0.0 {
        extent = 1.0;
    }
    let scale = (SVG_SIZE - 2.0 * SVG_PAD) / (extent * 1.05);
    let origin = SVG_SIZE - SVG_PAD;
    let far = SVG_PAD;
    let jx = SVG_PAD + partition.junction[0] * scale;
    let jy = SVG_SIZE - SVG_PAD - partition.junction[1] * scale;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\" \
         width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\">"
    );
    let _ = writeln!(svg, "<rect width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" fill=\"#ffffff\"/>");
    // Axes of the quadrant.
    let _ = writeln!(
        svg,
        "<line x1=\"{SVG_PAD}\" y1=\"{origin}\" x2=\"{SVG_SIZE}\" y2=\"{origin}\" \
         stroke=\"#333333\" stroke-width=\"1.5\"/>"
    );
    let _ = writeln!(
        svg,
        "<line x1=\"{SVG_PAD}\" y1=\"{origin}\" x2=\"{SVG_PAD}\" y2=\"0\" \
         stroke=\"#333333\" stroke-width=\"1.5\"/>"
    );
    // The diagonal x = y.
    let _ = writeln!(
        svg,
        "<line x1=\"{SVG_PAD}\" y1=\"{origin}\" x2=\"{origin}\" y2=\"{far}\" \
         stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>"
    );
    for (name, color, curve) in [
        ("gamma12", "#1f77b4", &partition.gamma12),
        ("gamma13", "#d62728", &partition.gamma13),
        ("gamma23", "#2ca02c", &partition.gamma23),
    ] {
        let _ = writeln!(
            svg,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\">\
             <title>{name}</title></polyline>",
            svg_polyline_points(curve, scale)
        );
    }
    let _ = writeln!(
        svg,
        "<circle cx=\"{jx:.2}\" cy=\"{jy:.2}\" r=\"4\" fill=\"#ff7f0e\"/>"
    );
    svg.push_str("</svg>\n");
    svg
}

/// Renders and writes the quadrant figure.
pub fn save_partition_svg(path: &Path, partition: &ReducedPartition3) -> Result<()> {
    std::fs::write(path, render_partition_svg(partition))?;
    Ok(())
}
