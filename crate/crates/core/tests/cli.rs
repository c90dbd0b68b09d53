//! Black-box tests of the `isoper8` binary: flag parsing, file layout,
//! manifest completeness, determinism, and exit codes.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Output};

fn isoper8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoper8"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn isoper8_with_epoch(args: &[&str], epoch: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoper8"))
        .args(args)
        .env("SOURCE_DATE_EPOCH", epoch)
        .output()
        .expect("binary should spawn")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process should exit normally")
}

fn file_names(dir: &Path) -> BTreeSet<String> {
    std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect()
}

#[test]
fn constants_table_lists_every_family() {
    let out = isoper8(&["constants"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    for name in [
        "omega_8",
        "sphere_area_7",
        "lens_volume",
        "lens_defect",
        "barrel_defect",
        "ball_defect",
    ] {
        assert!(text.contains(name), "missing row {name} in:\n{text}");
    }
}

#[test]
fn constants_json_rows_agree_with_their_oracles() {
    let out = isoper8(&["constants", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 20, "only {} rows", rows.len());
    for row in rows {
        let name = row["name"].as_str().unwrap();
        let rel = row["relative_difference"].as_f64().unwrap();
        assert!(rel <= 1e-10, "{name}: relative difference {rel:.3e}");
        assert!(row["closed_form"].as_f64().unwrap().is_finite());
        assert!(row["oracle"].as_f64().unwrap().is_finite());
    }
}

#[test]
fn solve_manifest_matches_directory_both_ways() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("run");
    let out = isoper8(&[
        "solve",
        "--step",
        "2e-3",
        "--svg",
        "figure.svg",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("defect = 6.8178"));

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap())
            .unwrap();
    let listed: BTreeSet<String> = manifest["outputs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| {
            Path::new(v.as_str().unwrap())
                .file_name()
                .unwrap()
                .to_string_lossy()
                .into_owned()
        })
        .collect();
    let on_disk = file_names(&dir);
    assert_eq!(listed, on_disk, "manifest outputs and directory disagree");
    assert!(listed.contains("figure.svg"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("report.json")).unwrap())
            .unwrap();
    let defect = report["defect"].as_f64().unwrap();
    assert!((defect - 6.82).abs() <= 0.05, "defect {defect}");

    let (partition, lambda, intercept) =
        isoper8::report::load_partition(&dir.join("partition.json")).unwrap();
    assert_eq!(lambda, Some(1.0));
    assert!(intercept.unwrap() > 4.0);
    assert!(partition.junction[0] > 0.0);
    assert_eq!(partition.junction[0], partition.junction[1]);

    let svg = std::fs::read_to_string(dir.join("figure.svg")).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("polyline"));
}

#[test]
fn solve_outputs_are_byte_identical_under_pinned_epoch() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("run");
    let args = [
        "solve",
        "--step",
        "5e-3",
        "--out",
        dir.to_str().unwrap(),
    ];
    let first = isoper8_with_epoch(&args, "1700000000");
    assert_eq!(exit_code(&first), 0);
    let snapshot: Vec<(String, Vec<u8>)> = file_names(&dir)
        .into_iter()
        .map(|name| {
            let bytes = std::fs::read(dir.join(&name)).unwrap();
            (name, bytes)
        })
        .collect();
    assert!(!snapshot.is_empty());

    let second = isoper8_with_epoch(&args, "1700000000");
    assert_eq!(exit_code(&second), 0);
    for (name, before) in &snapshot {
        let after = std::fs::read(dir.join(name)).unwrap();
        assert_eq!(&after, before, "{name} changed between identical runs");
    }
    let manifest = std::fs::read_to_string(dir.join("manifest.json")).unwrap();
    assert!(manifest.contains("\"timestamp\": 1700000000"));
}

#[test]
fn solve_without_a_sign_change_exits_3() {
    let tmp = tempfile::tempdir().unwrap();
    let out = isoper8(&[
        "solve",
        "--bracket",
        "4.6:5.5",
        "--step",
        "5e-3",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn malformed_bracket_exits_2() {
    let tmp = tempfile::tempdir().unwrap();
    let out = isoper8(&[
        "solve",
        "--bracket",
        "nope",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn monotonicity_passes_on_a_solved_partition_file() {
    let tmp = tempfile::tempdir().unwrap();
    let solve_dir = tmp.path().join("solved");
    let solve = isoper8(&[
        "solve",
        "--step",
        "2e-3",
        "--out",
        solve_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&solve), 0);

    let scan_dir = tmp.path().join("scan");
    let partition = solve_dir.join("partition.json");
    let out = isoper8(&[
        "monotonicity",
        "--partition",
        partition.to_str().unwrap(),
        "--out",
        scan_dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout_of(&out).contains("monotonicity: pass"));

    let csv = std::fs::read_to_string(scan_dir.join("scan.csv")).unwrap();
    let ratios: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|line| line.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(ratios.len() >= 50);
    for pair in ratios.windows(2) {
        assert!(
            pair[1] >= pair[0] * (1.0 - 1e-6),
            "scan.csv ratios decrease: {} -> {}",
            pair[0],
            pair[1]
        );
    }
}

#[test]
fn monotonicity_with_nonenclosing_base_exits_2() {
    let tmp = tempfile::tempdir().unwrap();
    let out = isoper8(&[
        "monotonicity",
        "--partition",
        "barrel",
        "--base-radius",
        "0.5",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));
}

#[test]
fn glue_fixture_run_stays_within_the_bound() {
    let tmp = tempfile::tempdir().unwrap();
    let out = isoper8(&[
        "diagnostics",
        "glue",
        "--resolution",
        "64",
        "--seed",
        "3",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let glue: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(tmp.path().join("glue.json")).unwrap())
            .unwrap();
    let slice = glue["slice_perimeter"].as_f64().unwrap();
    let bound = glue["bound"].as_f64().unwrap();
    assert!(bound > 0.0);
    assert!(slice <= bound * (1.0 + 5.0 / 64.0), "slice {slice} vs bound {bound}");

    let csv = std::fs::read_to_string(tmp.path().join("glue.csv")).unwrap();
    assert_eq!(csv.lines().count(), 65, "one header plus one row per shell");
}

#[test]
fn profile_blob_concentrates_into_one_cube() {
    let tmp = tempfile::tempdir().unwrap();
    let out = isoper8(&[
        "diagnostics",
        "profile",
        "--input",
        "blob",
        "--out",
        tmp.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("across 1 of 64 cubes"));

    let csv = std::fs::read_to_string(tmp.path().join("profile.csv")).unwrap();
    let mut lines = csv.lines().skip(1);
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[1], "0.015625", "top cube should hold the whole region");
    let second: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(second[1], "0.0", "second cube should be empty");
}
