//! End-to-end tests driving the compiled `srocr` binary.

use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn srocr(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srocr"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("spawn srocr")
}

fn assert_success(out: &Output, what: &str) {
    assert!(
        out.status.success(),
        "{what} failed:\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn pipeline_stages_round_trip() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    std::fs::write(d.join("truth.txt"), "Exit codes and errors.\nLine two!\n").unwrap();

    let out = srocr(
        d,
        &["render", "--text", "truth.txt", "--dpi", "200", "--out", "page.png"],
    );
    assert_success(&out, "render");

    let out = srocr(
        d,
        &["degrade", "page.png", "--scale", "0.5", "--out", "low.png"],
    );
    assert_success(&out, "degrade");

    let out = srocr(
        d,
        &[
            "sr", "low.png", "--preset", "bicubic", "--factor", "2", "--out", "up.png",
        ],
    );
    assert_success(&out, "sr");

    let out = srocr(d, &["ocr", "up.png", "--out", "ocr.txt"]);
    assert_success(&out, "ocr");
    let text = std::fs::read_to_string(d.join("ocr.txt")).unwrap();
    assert!(text.contains("Exit codes and errors."), "got: {text:?}");

    let out = srocr(
        d,
        &[
            "score",
            "--restored",
            "up.png",
            "--reference",
            "page.png",
            "--ocr",
            "ocr.txt",
            "--truth",
            "truth.txt",
        ],
    );
    assert_success(&out, "score");
    let json: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("score emits JSON");
    assert_eq!(json["fuzz"], 100);
    assert_eq!(json["levenshtein"], 0);
    assert!(json["psnr_db"].as_f64().unwrap() > 15.0);
}

#[test]
fn bench_run_reports_and_rerun_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("bench.json"),
        r#"{
            "texts": [{"id": "t", "inline": "Benchmark sample text."}],
            "dpis": [100],
            "scales": [0.5],
            "models": [{"preset": "bicubic"}]
        }"#,
    )
    .unwrap();

    let out = srocr(d, &["bench", "run", "bench.json", "--output-dir", "a"]);
    assert_success(&out, "bench run");
    for name in ["records.json", "report.csv", "report.md"] {
        assert!(d.join("a").join(name).exists(), "missing {name}");
    }
    let csv = std::fs::read_to_string(d.join("a/report.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2, "header plus one cell: {csv}");
    assert!(csv.lines().nth(1).unwrap().ends_with("OK"), "csv: {csv}");

    let out = srocr(d, &["bench", "run", "bench.json", "--output-dir", "b"]);
    assert_success(&out, "bench rerun");
    let again = std::fs::read(d.join("b/report.csv")).unwrap();
    assert_eq!(std::fs::read(d.join("a/report.csv")).unwrap(), again);

    // Re-rendering reports from the records file matches the run's output.
    let out = srocr(d, &["bench", "report", "a/records.json", "--format", "csv"]);
    assert_success(&out, "bench report");
    assert_eq!(String::from_utf8_lossy(&out.stdout), csv);
}

#[test]
fn bench_missing_engine_exits_two() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    std::fs::write(
        d.join("bench.json"),
        r#"{
            "texts": [{"id": "t", "inline": "sample"}],
            "dpis": [100],
            "scales": [0.5],
            "models": [{"preset": "bicubic"}],
            "engine": {
                "kind": "external",
                "command_template": "/no/such/engine-xyz {input} {output}"
            }
        }"#,
    )
    .unwrap();
    let out = srocr(d, &["bench", "run", "bench.json", "--output-dir", "out"]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(d.join("out/report.csv")).unwrap();
    assert!(csv.lines().nth(1).unwrap().ends_with("SKIPPED"), "csv: {csv}");
}

#[test]
fn config_failures_exit_one() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();

    std::fs::write(d.join("broken.json"), "{ not json").unwrap();
    let out = srocr(d, &["bench", "run", "broken.json"]);
    assert_eq!(out.status.code(), Some(1));

    std::fs::write(
        d.join("badfield.json"),
        r#"{"texts": [{"id": "t", "inline": "x"}], "scales": [1.5]}"#,
    )
    .unwrap();
    let out = srocr(d, &["bench", "run", "badfield.json"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("scales[0]"), "diagnostic names the field: {err}");

    // Unknown flags are configuration failures, not cell failures.
    let out = srocr(d, &["bench", "run", "badfield.json", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn train_writes_weights_usable_by_sr() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let out = srocr(
        d,
        &[
            "train",
            "--preset",
            "edsr-mini",
            "--factor",
            "2",
            "--steps",
            "5",
            "--out",
            "w.srwt",
            "--losses",
            "losses.csv",
        ],
    );
    assert_success(&out, "train");
    let csv = std::fs::read_to_string(d.join("losses.csv")).unwrap();
    assert!(csv.starts_with("step,g_loss,d_loss,l1\n"));
    assert_eq!(csv.lines().count(), 6, "header + 5 steps: {csv}");

    std::fs::write(d.join("t.txt"), "ab").unwrap();
    let out = srocr(
        d,
        &["render", "--text", "t.txt", "--dpi", "100", "--out", "page.png"],
    );
    assert_success(&out, "render");
    let out = srocr(
        d,
        &["degrade", "page.png", "--scale", "0.5", "--out", "low.png"],
    );
    assert_success(&out, "degrade");
    let out = srocr(
        d,
        &[
            "sr", "low.png", "--preset", "edsr-mini", "--factor", "2", "--weights", "w.srwt",
            "--out", "up.png",
        ],
    );
    assert_success(&out, "sr with trained weights");
    assert!(String::from_utf8_lossy(&out.stdout).contains("850x1100"));
}

#[test]
fn gradcheck_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let out = srocr(d, &["gradcheck", "--preset", "edsr-mini", "--probes", "8"]);
    assert_success(&out, "gradcheck");
    assert!(String::from_utf8_lossy(&out.stdout).contains("max relative error"));

    let out = srocr(d, &["gradcheck", "--preset", "bicubic", "--probes", "8"]);
    assert_eq!(out.status.code(), Some(1), "bicubic has no parameters");
}
