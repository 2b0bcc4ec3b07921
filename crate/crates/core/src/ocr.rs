//! Pluggable OCR: a subprocess client for external engines (Tesseract
//! conventions) and a hermetic built-in mock that template-matches the
//! embedded bitmap font, so the pipeline is testable without external
//! dependencies.
//!
//! Engines are reached only through files and a command line; there are no
//! in-process bindings. Each invocation owns a private temp directory that
//! is removed on every exit path.

use crate::font::{self, FontSpec, PackedGlyph};
use crate::raster::{Image, ImageError};
use crate::render;
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};
use thiserror::Error;

/// Global binarization threshold: pixels strictly below it count as ink.
pub const DEFAULT_BINARIZE_THRESHOLD: u8 = 160;

/// Command template following the Tesseract CLI convention: the engine
/// receives an input image path and an output base path and writes
/// `<output>.txt`.
pub const DEFAULT_COMMAND_TEMPLATE: &str = "tesseract {input} {output} --psm 6";

#[derive(Debug, Error)]
pub enum OcrError {
    #[error("invalid engine spec: {0}")]
    InvalidSpec(String),
    #[error("engine binary not found (exit 127): {0}")]
    NotInstalled(String),
    #[error("engine exited with status {status}: {stderr}")]
    EngineFailed { status: i32, stderr: String },
    #[error("engine exceeded the {seconds}s timeout and was killed")]
    Timeout { seconds: f64 },
    #[error("engine wrote no output file at {0}")]
    NoOutput(String),
    #[error(transparent)]
    Image(#[from] ImageError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Which OCR implementation a benchmark cell should use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OcrEngineKind {
    External,
    Mock,
}

/// How to reach an OCR engine.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OcrEngineSpec {
    pub kind: OcrEngineKind,
    /// Command line with `{input}` and `{output}` placeholders; run through
    /// the shell. Unused by the mock.
    pub command_template: String,
    /// Wall-clock budget for one invocation, in seconds.
    pub timeout: f64,
    /// Pixels strictly below this value are treated as ink.
    pub binarize_threshold: u8,
}

impl Default for OcrEngineSpec {
    fn default() -> OcrEngineSpec {
        OcrEngineSpec {
            kind: OcrEngineKind::Mock,
            command_template: DEFAULT_COMMAND_TEMPLATE.to_string(),
            timeout: 30.0,
            binarize_threshold: DEFAULT_BINARIZE_THRESHOLD,
        }
    }
}

impl OcrEngineSpec {
    pub fn external(command_template: &str) -> OcrEngineSpec {
        OcrEngineSpec {
            kind: OcrEngineKind::External,
            command_template: command_template.to_string(),
            ..OcrEngineSpec::default()
        }
    }

    pub fn validate(&self) -> Result<(), OcrError> {
        if !(self.timeout > 0.0 && self.timeout.is_finite()) {
            return Err(OcrError::InvalidSpec(format!(
                "timeout must be positive and finite, got {}",
                self.timeout
            )));
        }
        if self.kind == OcrEngineKind::External {
            if self.command_template.trim().is_empty() {
                return Err(OcrError::InvalidSpec(
                    "external engine requires a command template".into(),
                ));
            }
            for ph in ["{input}", "{output}"] {
                if !self.command_template.contains(ph) {
                    return Err(OcrError::InvalidSpec(format!(
                        "command template is missing the {ph} placeholder"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Environment variable that substitutes the Tesseract binary path in
/// command templates whose program word is literally `tesseract`.
pub const TESSERACT_ENV: &str = "SROCR_TESSERACT";

/// Applies the [`TESSERACT_ENV`] override to a command template.
fn effective_template(template: &str) -> String {
    let trimmed = template.trim_start();
    if let Some(rest) = trimmed.strip_prefix("tesseract") {
        if rest.is_empty() || rest.starts_with(char::is_whitespace) {
            if let Ok(bin) = std::env::var(TESSERACT_ENV) {
                if !bin.is_empty() {
                    return format!("{bin}{rest}");
                }
            }
        }
    }
    template.to_string()
}

/// Thresholds to a pure black/white single-channel image.
fn binarize(img: &Image, threshold: u8) -> Image {
    let gray = img.to_gray();
    let mut out = gray.clone();
    for v in out.data_mut() {
        *v = if *v < threshold { 0 } else { 255 };
    }
    out
}

/// Runs an external engine on `img` and returns the recognized text with
/// line endings normalized to LF.
///
/// The image is binarized first (external engines assume binary input),
/// written to a fresh temp directory, and the command template is invoked
/// through the shell with `{input}`/`{output}` substituted. The engine may
/// write either `<output>.txt` (Tesseract convention) or `<output>`
/// verbatim. The temp directory is removed on all paths when this returns.
pub fn run_external_ocr(img: &Image, spec: &OcrEngineSpec) -> Result<String, OcrError> {
    spec.validate()?;
    if spec.kind != OcrEngineKind::External {
        return Err(OcrError::InvalidSpec(
            "run_external_ocr requires an external engine spec".into(),
        ));
    }
    let dir = tempfile::TempDir::new()?;
    let input = dir.path().join("input.png");
    let output_base = dir.path().join("out");
    binarize(img, spec.binarize_threshold).save_png(&input)?;

    let cmdline = effective_template(&spec.command_template)
        .replace("{input}", &input.to_string_lossy())
        .replace("{output}", &output_base.to_string_lossy());
    let mut child = Command::new("/bin/sh")
        .arg("-c")
        .arg(&cmdline)
        .stdin(Stdio::null())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()?;

    let deadline = Instant::now() + Duration::from_secs_f64(spec.timeout);
    let status = loop {
        match child.try_wait()? {
            Some(status) => break status,
            None => {
                if Instant::now() >= deadline {
                    child.kill().ok();
                    child.wait().ok();
                    return Err(OcrError::Timeout {
                        seconds: spec.timeout,
                    });
                }
                std::thread::sleep(Duration::from_millis(10));
            }
        }
    };

    let mut stderr = String::new();
    if let Some(mut pipe) = child.stderr.take() {
        pipe.read_to_string(&mut stderr).ok();
    }
    if !status.success() {
        let code = status.code().unwrap_or(-1);
        if code == 127 {
            return Err(OcrError::NotInstalled(cmdline));
        }
        return Err(OcrError::EngineFailed {
            status: code,
            stderr: stderr.trim().to_string(),
        });
    }

    let txt_path = output_base.with_extension("txt");
    let produced = if txt_path.is_file() {
        txt_path
    } else if output_base.is_file() {
        output_base
    } else {
        return Err(OcrError::NoOutput(txt_path.to_string_lossy().into_owned()));
    };
    let raw = std::fs::read(&produced)?;
    let text = String::from_utf8_lossy(&raw)
        .replace("\r\n", "\n")
        .replace('\r', "\n");
    // Tesseract terminates its output with a form feed.
    Ok(text.trim_end_matches('\x0C').to_string())
}

/// Engine availability as reported by [`engine_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineStatus {
    pub available: bool,
    pub version: Option<String>,
}

/// Checks whether the configured engine can run. The mock is always
/// available; an external engine is probed with `--version` on the first
/// word of its command template. Never fails: problems report as
/// unavailable.
pub fn engine_probe(spec: &OcrEngineSpec) -> EngineStatus {
    if spec.kind == OcrEngineKind::Mock {
        return EngineStatus {
            available: true,
            version: Some("builtin-mock".to_string()),
        };
    }
    let template = effective_template(&spec.command_template);
    let Some(program) = template.split_whitespace().next() else {
        return EngineStatus {
            available: false,
            version: None,
        };
    };
    match Command::new(program)
        .arg("--version")
        .stdin(Stdio::null())
        .output()
    {
        Ok(out) if out.status.success() => {
            let text = if out.stdout.is_empty() {
                out.stderr // Tesseract prints its version to stderr.
            } else {
                out.stdout
            };
            let first = String::from_utf8_lossy(&text)
                .lines()
                .next()
                .unwrap_or("")
                .trim()
                .to_string();
            EngineStatus {
                available: true,
                version: (!first.is_empty()).then_some(first),
            }
        }
        _ => EngineStatus {
            available: false,
            version: None,
        },
    }
}

/// Ink bitmap of one glyph cell, packed the same way as [`PackedGlyph`].
fn pack_cell(ink: &[bool], img_w: usize, img_h: usize, x0: i64, y0: i64, cw: usize, ch: usize) -> PackedGlyph {
    let wpr = cw.div_ceil(64);
    let mut words = vec![0u64; ch * wpr];
    let mut count = 0u32;
    for y in 0..ch {
        let sy = y0 + y as i64;
        if sy < 0 || sy >= img_h as i64 {
            continue;
        }
        let row_base = sy as usize * img_w;
        for x in 0..cw {
            let sx = x0 + x as i64;
            if sx < 0 || sx >= img_w as i64 {
                continue;
            }
            if ink[row_base + sx as usize] {
                words[y * wpr + x / 64] |= 1u64 << (x % 64);
                count += 1;
            }
        }
    }
    PackedGlyph {
        width: cw,
        height: ch,
        words,
        ink: count,
    }
}

fn hamming(a: &PackedGlyph, b: &PackedGlyph) -> u32 {
    debug_assert_eq!(a.words.len(), b.words.len());
    a.words
        .iter()
        .zip(&b.words)
        .map(|(x, y)| (x ^ y).count_ones())
        .sum()
}

/// Dice-dissimilarity acceptance bound for mock matches: a cell whose best
/// template match has Hamming distance above this fraction of the combined
/// ink (cell + template) reads as blank. Real engines likewise drop regions
/// they cannot recognize; without the bound, nearest-template matching
/// still "reads" heavily blurred pages that should score as garbage.
pub const MOCK_REJECT_DICE: f64 = 0.30;

/// Hermetic OCR for pages produced by the bundled renderer: binarizes,
/// locates the glyph grid, and classifies every cell by minimum Hamming
/// distance against the embedded font rasterized at the cell size. Ties
/// resolve to the smallest codepoint; matches worse than
/// [`MOCK_REJECT_DICE`] and cells without ink are spaces; rows are joined
/// with newlines. Deterministic. A page with no detectable text yields the
/// empty string.
///
/// Grid geometry comes from the image's dpi tag when present; otherwise
/// the dpi is recovered from the page width (pages are US Letter).
pub fn mock_ocr(img: &Image, spec: &FontSpec) -> String {
    let gray = img.to_gray();
    let dpi = match gray.dpi {
        Some(d) => d,
        None => (gray.width() as f64 / 8.5).round() as u32,
    };
    if !(72..=600).contains(&dpi) {
        return String::new();
    }
    let Ok((cols, rows)) = render::grid_dims(dpi, spec) else {
        return String::new();
    };
    let margin = render::page_margin(dpi) as i64;
    let (cw, ch) = spec.cell_dims(dpi);

    let (w, h) = (gray.width(), gray.height());
    let ink: Vec<bool> = gray
        .data()
        .iter()
        .map(|&v| v < DEFAULT_BINARIZE_THRESHOLD)
        .collect();
    if !ink.iter().any(|&b| b) {
        return String::new();
    }

    let templates = font::pack_charset(spec, cw, ch);
    let mut lines: Vec<String> = Vec::with_capacity(rows);
    for r in 0..rows {
        let y0 = margin + (r * ch) as i64;
        let mut line = String::with_capacity(cols);
        for c in 0..cols {
            let x0 = margin + (c * cw) as i64;
            let cell = pack_cell(&ink, w, h, x0, y0, cw, ch);
            if cell.ink == 0 {
                line.push(' ');
                continue;
            }
            let mut best = u32::MAX;
            let mut best_idx = 0usize;
            for (i, t) in templates.iter().enumerate() {
                let d = hamming(&cell, t);
                if d < best {
                    best = d;
                    best_idx = i;
                }
            }
            let combined_ink = (cell.ink + templates[best_idx].ink) as f64;
            if best as f64 > MOCK_REJECT_DICE * combined_ink {
                line.push(' ');
                continue;
            }
            line.push(char::from_u32(font::FIRST_CHAR as u32 + best_idx as u32).expect("ascii"));
        }
        lines.push(line.trim_end().to_string());
    }
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return String::new();
    }
    lines.join("\n")
}
