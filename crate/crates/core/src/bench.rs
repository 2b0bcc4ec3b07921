//! Benchmark orchestration: runs render → degrade → super-resolve → OCR →
//! score over the full experiment matrix (texts × dpis × scales × models),
//! caches intermediates content-addressed, and emits CSV, markdown, and
//! JSON reports.
//!
//! Every cell is recorded even when a stage fails: failures become ERROR
//! or SKIPPED statuses instead of aborting the run, and the record count
//! is always the full cartesian product.

use crate::degrade::{degrade_pipeline, resample_to, DegradeError, DegradeSpec, ResampleKernel};
use crate::font::FontSpec;
use crate::metrics::{score_images, score_text, MetricsError};
use crate::models::{build_model, forward, init_weights, load_weights, ArchPreset, LayerGraph, ModelError, WeightStore};
use crate::ocr::{engine_probe, mock_ocr, run_external_ocr, OcrEngineKind, OcrEngineSpec, OcrError};
use crate::raster::{Image, ImageError};
use crate::render::{render_text_page, RenderError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config {path}: {detail}")]
    Config { path: String, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Render(#[from] RenderError),
    #[error(transparent)]
    Degrade(#[from] DegradeError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Image(#[from] ImageError),
    #[error(transparent)]
    Ocr(#[from] OcrError),
    #[error("report: {0}")]
    Report(String),
}

fn config_err(path: impl Into<String>, detail: impl Into<String>) -> BenchError {
    BenchError::Config {
        path: path.into(),
        detail: detail.into(),
    }
}

/// One benchmark text: inline content, a file to read, or a bundled
/// corpus text.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TextSpec {
    /// Bare string: path to a UTF-8 text file; the id is the file stem.
    Path(String),
    /// Explicit entry with exactly one of `path`/`inline`/`corpus`.
    Entry {
        #[serde(default)]
        id: Option<String>,
        #[serde(default)]
        path: Option<String>,
        #[serde(default)]
        inline: Option<String>,
        #[serde(default)]
        corpus: Option<String>,
    },
}

/// One model column of the experiment matrix.
///
/// `weights` selects the weight source: a `.srwt` file path, or
/// `untrained:SEED` for freshly initialized weights. The `bicubic` preset
/// takes no weights. `factor` pins the upsample factor; when absent it is
/// derived per cell from the degradation scale (required for file weights,
/// whose container is validated against it).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelChoice {
    pub preset: String,
    #[serde(default)]
    pub factor: Option<u32>,
    #[serde(default)]
    pub weights: Option<String>,
    #[serde(default)]
    pub id: Option<String>,
}

/// Blur/noise applied before downscaling in every cell.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DegradeDefaults {
    pub blur_sigma: f64,
    pub noise_sigma: f64,
}

fn default_dpis() -> Vec<u32> {
    vec![200, 220, 230, 240, 250, 260]
}

fn default_scales() -> Vec<f64> {
    vec![0.1, 0.2, 0.3, 0.35, 0.4, 0.45, 0.5]
}

fn default_models() -> Vec<ModelChoice> {
    vec![ModelChoice {
        preset: "bicubic".into(),
        factor: None,
        weights: None,
        id: None,
    }]
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("bench-out")
}

/// Full experiment description, loadable from JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub texts: Vec<TextSpec>,
    #[serde(default = "default_dpis")]
    pub dpis: Vec<u32>,
    #[serde(default = "default_scales")]
    pub scales: Vec<f64>,
    #[serde(default = "default_models")]
    pub models: Vec<ModelChoice>,
    #[serde(default)]
    pub engine: OcrEngineSpec,
    #[serde(default)]
    pub degrade: DegradeDefaults,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    /// Cache stage outputs under `output_dir` keyed by content digest.
    #[serde(default)]
    pub cache: bool,
    /// Worker threads for the cell pool; 0 picks the CPU count.
    #[serde(default)]
    pub workers: usize,
    #[serde(default)]
    pub seed: u64,
}

impl BenchConfig {
    /// Minimal config over inline texts with all defaults.
    pub fn hermetic(texts: &[(&str, &str)]) -> BenchConfig {
        BenchConfig {
            texts: texts
                .iter()
                .map(|(id, body)| TextSpec::Entry {
                    id: Some(id.to_string()),
                    path: None,
                    inline: Some(body.to_string()),
                    corpus: None,
                })
                .collect(),
            dpis: default_dpis(),
            scales: default_scales(),
            models: default_models(),
            engine: OcrEngineSpec::default(),
            degrade: DegradeDefaults::default(),
            output_dir: default_output_dir(),
            cache: false,
            workers: 0,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.texts.is_empty() {
            return Err(config_err("texts", "at least one text is required"));
        }
        if self.dpis.is_empty() {
            return Err(config_err("dpis", "at least one dpi is required"));
        }
        for (i, &dpi) in self.dpis.iter().enumerate() {
            if !(72..=600).contains(&dpi) {
                return Err(config_err(
                    format!("dpis[{i}]"),
                    format!("dpi {dpi} outside supported range 72..=600"),
                ));
            }
        }
        if self.scales.is_empty() {
            return Err(config_err("scales", "at least one scale is required"));
        }
        for (i, &s) in self.scales.iter().enumerate() {
            if !(s > 0.0 && s <= 1.0) {
                return Err(config_err(
                    format!("scales[{i}]"),
                    format!("scale {s} outside (0, 1]"),
                ));
            }
        }
        if self.models.is_empty() {
            return Err(config_err("models", "at least one model is required"));
        }
        for (i, t) in self.texts.iter().enumerate() {
            if let TextSpec::Entry {
                path,
                inline,
                corpus,
                ..
            } = t
            {
                let given =
                    path.is_some() as u8 + inline.is_some() as u8 + corpus.is_some() as u8;
                if given != 1 {
                    return Err(config_err(
                        format!("texts[{i}]"),
                        "give exactly one of path, inline, or corpus",
                    ));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for (i, m) in self.models.iter().enumerate() {
            let field = format!("models[{i}]");
            let resolved = resolve_model(m).map_err(|e| match e {
                BenchError::Config { path, detail } if path.is_empty() => {
                    config_err(field.clone(), detail)
                }
                other => other,
            })?;
            if !seen.insert(resolved.id.clone()) {
                return Err(config_err(
                    field,
                    format!("duplicate model id `{}`", resolved.id),
                ));
            }
        }
        if !(self.degrade.blur_sigma >= 0.0 && self.degrade.blur_sigma.is_finite()) {
            return Err(config_err("degrade.blur_sigma", "must be finite and >= 0"));
        }
        if !(self.degrade.noise_sigma >= 0.0 && self.degrade.noise_sigma.is_finite()) {
            return Err(config_err("degrade.noise_sigma", "must be finite and >= 0"));
        }
        self.engine
            .validate()
            .map_err(|e| config_err("engine", e.to_string()))?;
        Ok(())
    }
}

/// Parses and validates a JSON config file. Schema violations carry the
/// offending field path.
pub fn load_config(path: &Path) -> Result<BenchConfig, BenchError> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| config_err(path.display().to_string(), e.to_string()))?;
    let mut de = serde_json::Deserializer::from_str(&raw);
    let config: BenchConfig = serde_path_to_error::deserialize(&mut de)
        .map_err(|e| config_err(e.path().to_string(), e.inner().to_string()))?;
    config.validate()?;
    Ok(config)
}

/// How a model's weights are obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
enum WeightSource {
    Bicubic,
    Untrained(u64),
    File(PathBuf),
}

#[derive(Clone, Debug)]
struct ResolvedModel {
    id: String,
    preset: ArchPreset,
    factor: Option<u32>,
    source: WeightSource,
}

fn resolve_model(choice: &ModelChoice) -> Result<ResolvedModel, BenchError> {
    let err = |detail: String| config_err("", detail);
    let preset = ArchPreset::by_id(&choice.preset).map_err(|e| err(e.to_string()))?;
    if preset.is_discriminator() {
        return Err(err(format!(
            "preset `{}` is a discriminator and cannot super-resolve",
            choice.preset
        )));
    }
    if let Some(f) = choice.factor {
        if !matches!(f, 2 | 3 | 4) {
            return Err(err(format!("factor {f} not in {{2, 3, 4}}")));
        }
    }
    let source = if choice.preset == "bicubic" {
        match choice.weights.as_deref() {
            None | Some("bicubic") => WeightSource::Bicubic,
            Some(w) => return Err(err(format!("bicubic takes no weights, got `{w}`"))),
        }
    } else {
        match choice.weights.as_deref() {
            None => {
                return Err(err(format!(
                    "preset `{}` needs weights: a .srwt path or untrained:SEED",
                    choice.preset
                )))
            }
            Some(w) => {
                if let Some(seed) = w.strip_prefix("untrained:") {
                    let seed: u64 = seed.parse().map_err(|_| {
                        err(format!("bad untrained seed in `{w}`: expected untrained:SEED"))
                    })?;
                    WeightSource::Untrained(seed)
                } else {
                    if choice.factor.is_none() {
                        return Err(err(
                            "file-backed weights need an explicit factor matching the container"
                                .to_string(),
                        ));
                    }
                    WeightSource::File(PathBuf::from(w))
                }
            }
        }
    };
    let id = choice.id.clone().unwrap_or_else(|| match choice.factor {
        Some(f) => format!("{}-x{f}", choice.preset),
        None => choice.preset.clone(),
    });
    Ok(ResolvedModel {
        id,
        preset,
        factor: choice.factor,
        source,
    })
}

/// Upsample factor for a degradation scale: `round(1/scale)` clamped to
/// the supported {2, 3, 4}.
pub fn upsample_factor(scale: f64) -> u32 {
    let f = (1.0 / scale).round() as i64;
    f.clamp(2, 4) as u32
}

/// OCR outcome of one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OcrStatus {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "SKIPPED")]
    Skipped,
    #[serde(rename = "ERROR")]
    Error,
}

impl std::fmt::Display for OcrStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OcrStatus::Ok => "OK",
            OcrStatus::Skipped => "SKIPPED",
            OcrStatus::Error => "ERROR",
        })
    }
}

/// Wall-clock milliseconds spent in each stage of a cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTimings {
    pub render_ms: u64,
    pub degrade_ms: u64,
    pub sr_ms: u64,
    pub ocr_ms: u64,
    pub score_ms: u64,
}

fn serialize_psnr<S: serde::Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(x) if x.is_infinite() => s.serialize_str("inf"),
        Some(x) => s.serialize_f64(*x),
    }
}

fn deserialize_psnr<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
    let v = Option::<serde_json::Value>::deserialize(d)?;
    match v {
        None | Some(serde_json::Value::Null) => Ok(None),
        Some(serde_json::Value::String(s)) if s == "inf" => Ok(Some(f64::INFINITY)),
        Some(serde_json::Value::Number(n)) => n
            .as_f64()
            .map(Some)
            .ok_or_else(|| serde::de::Error::custom("psnr_db out of f64 range")),
        Some(other) => Err(serde::de::Error::custom(format!(
            "psnr_db must be a number or \"inf\", got {other}"
        ))),
    }
}

/// One cell of the experiment matrix. Text scores are present iff
/// `ocr_status` is OK; image scores are present when the image pipeline
/// completed, independent of OCR.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScoreRecord {
    pub text_id: String,
    pub dpi: u32,
    pub scale: f64,
    pub model_id: String,
    #[serde(default)]
    pub fuzz: Option<u8>,
    #[serde(default)]
    pub levenshtein: Option<u64>,
    #[serde(
        default,
        serialize_with = "serialize_psnr",
        deserialize_with = "deserialize_psnr"
    )]
    pub psnr_db: Option<f64>,
    #[serde(default)]
    pub ssim: Option<f64>,
    pub ocr_status: OcrStatus,
    #[serde(default)]
    pub detail: Option<String>,
    #[serde(default)]
    pub wall_ms: StageTimings,
}

/// Text and image scores for one completed cell.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CellScores {
    pub fuzz: u8,
    pub levenshtein: u64,
    pub psnr_db: f64,
    pub ssim: f64,
}

/// Scores a restored page against the pristine render and the ground
/// truth text. Dimensions must match exactly.
pub fn score_cell(
    restored: &Image,
    reference: &Image,
    ocr_text: &str,
    truth: &str,
) -> Result<CellScores, BenchError> {
    let text = score_text(truth, ocr_text);
    let image = score_images(restored, reference)?;
    Ok(CellScores {
        fuzz: text.fuzz,
        levenshtein: text.levenshtein,
        psnr_db: image.psnr_db,
        ssim: image.ssim,
    })
}

/// Content-addressed digest over a stage name and its canonical inputs:
/// length-prefixed parts under SHA-256, hex-encoded. Identical inputs give
/// identical keys; any changed part changes the key.
pub fn cache_key(stage: &str, parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    h.update(stage.as_bytes());
    h.update([0xff]);
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        write!(out, "{b:02x}").expect("writing hex to string");
    }
    out
}

fn cell_seed(config_seed: u64, text_id: &str, dpi: u32, scale: f64) -> u64 {
    let key = cache_key(
        "cell-seed",
        &[
            &config_seed.to_le_bytes(),
            text_id.as_bytes(),
            &dpi.to_le_bytes(),
            &scale.to_le_bytes(),
        ],
    );
    u64::from_str_radix(&key[..16], 16).expect("hex digest")
}

struct CachedStage<'a> {
    dir: Option<&'a Path>,
}

impl CachedStage<'_> {
    /// Loads `<key>/<name>.png` on hit; otherwise computes, stores
    /// atomically, and returns the fresh image.
    fn image(
        &self,
        key: &str,
        name: &str,
        compute: impl FnOnce() -> Result<Image, BenchError>,
    ) -> Result<Image, BenchError> {
        let Some(base) = self.dir else {
            return compute();
        };
        let path = base.join(key).join(format!("{name}.png"));
        if path.is_file() {
            if let Ok(img) = Image::load_png(&path) {
                return Ok(img);
            }
        }
        let img = compute()?;
        let parent = path.parent().expect("key dir");
        std::fs::create_dir_all(parent)?;
        let tmp = tempfile::NamedTempFile::new_in(parent)?;
        img.save_png(tmp.path())?;
        tmp.persist(&path).map_err(|e| e.error)?;
        Ok(img)
    }
}

struct RunEnv<'a> {
    config: &'a BenchConfig,
    engine_available: bool,
    engine_detail: Option<String>,
    cache: CachedStage<'a>,
}

struct CellPlan<'a> {
    text_id: &'a str,
    truth: &'a str,
    /// `Err` carries the render failure, recorded per cell.
    reference: Result<&'a Image, &'a str>,
    render_key: &'a str,
    render_ms: u64,
    dpi: u32,
    scale: f64,
    model: &'a ResolvedModel,
}

/// Weight identity for cache keys: stable across runs for the same source.
fn weight_signature(model: &ResolvedModel) -> Result<Vec<u8>, BenchError> {
    Ok(match &model.source {
        WeightSource::Bicubic => b"bicubic".to_vec(),
        WeightSource::Untrained(seed) => format!("untrained:{seed}").into_bytes(),
        WeightSource::File(path) => {
            let bytes = std::fs::read(path)?;
            cache_key("weights", &[&bytes]).into_bytes()
        }
    })
}

fn model_graph_and_weights(
    model: &ResolvedModel,
    factor: u32,
) -> Result<(LayerGraph, WeightStore), BenchError> {
    let graph = build_model(&model.preset, factor)?;
    let weights = match &model.source {
        WeightSource::Bicubic => WeightStore::new(),
        WeightSource::Untrained(seed) => init_weights(&graph, *seed),
        WeightSource::File(path) => load_weights(&graph, path)?,
    };
    Ok((graph, weights))
}

/// Super-resolves `degraded` back to exactly `(ref_w, ref_h)`: model
/// forward at the cell's upsample factor, then a bicubic fix-up for any
/// residual size gap.
fn super_resolve(
    degraded: &Image,
    model: &ResolvedModel,
    factor: u32,
    ref_w: usize,
    ref_h: usize,
) -> Result<Image, BenchError> {
    let (graph, weights) = model_graph_and_weights(model, factor)?;
    let x = degraded.to_rgb().to_tensor();
    let y = forward(&graph, &weights, &x)?;
    let up = Image::from_tensor(&y)?.to_gray();
    Ok(resample_to(&up, ref_w, ref_h, ResampleKernel::Bicubic)?)
}

fn run_cell(plan: &CellPlan, env: &RunEnv) -> ScoreRecord {
    let mut record = ScoreRecord {
        text_id: plan.text_id.to_string(),
        dpi: plan.dpi,
        scale: plan.scale,
        model_id: plan.model.id.to_string(),
        fuzz: None,
        levenshtein: None,
        psnr_db: None,
        ssim: None,
        ocr_status: OcrStatus::Error,
        detail: None,
        wall_ms: StageTimings {
            render_ms: plan.render_ms,
            ..StageTimings::default()
        },
    };
    let fail = |record: &mut ScoreRecord, stage: &str, e: BenchError| {
        record.ocr_status = OcrStatus::Error;
        record.detail = Some(format!("{stage}: {e}"));
    };

    let reference = match plan.reference {
        Ok(img) => img,
        Err(detail) => {
            record.detail = Some(format!("render: {detail}"));
            return record;
        }
    };

    // Degrade.
    let t0 = Instant::now();
    let seed = cell_seed(env.config.seed, plan.text_id, plan.dpi, plan.scale);
    let spec = DegradeSpec {
        scale: plan.scale,
        blur_sigma: env.config.degrade.blur_sigma,
        noise_sigma: env.config.degrade.noise_sigma,
        seed,
    };
    let degrade_key = cache_key(
        "degrade",
        &[
            plan.render_key.as_bytes(),
            &plan.scale.to_le_bytes(),
            &spec.blur_sigma.to_le_bytes(),
            &spec.noise_sigma.to_le_bytes(),
            &seed.to_le_bytes(),
        ],
    );
    let degraded = match env
        .cache
        .image(&degrade_key, "degraded", || Ok(degrade_pipeline(reference, &spec)?))
    {
        Ok(img) => img,
        Err(e) => {
            fail(&mut record, "degrade", e);
            return record;
        }
    };
    record.wall_ms.degrade_ms = t0.elapsed().as_millis() as u64;

    // Super-resolve to reference dimensions.
    let t0 = Instant::now();
    let factor = plan.model.factor.unwrap_or_else(|| upsample_factor(plan.scale));
    let (ref_w, ref_h) = (reference.width(), reference.height());
    let sig = match weight_signature(plan.model) {
        Ok(sig) => sig,
        Err(e) => {
            fail(&mut record, "sr", e);
            return record;
        }
    };
    let sr_key = cache_key(
        "sr",
        &[
            degrade_key.as_bytes(),
            plan.model.preset.id.as_bytes(),
            &factor.to_le_bytes(),
            &sig,
        ],
    );
    let restored = match env.cache.image(&sr_key, "restored", || {
        super_resolve(&degraded, plan.model, factor, ref_w, ref_h)
    }) {
        Ok(mut img) => {
            img.dpi = Some(plan.dpi);
            img
        }
        Err(e) => {
            fail(&mut record, "sr", e);
            return record;
        }
    };
    record.wall_ms.sr_ms = t0.elapsed().as_millis() as u64;

    // OCR.
    let t0 = Instant::now();
    let ocr_text = match env.config.engine.kind {
        OcrEngineKind::Mock => {
            record.ocr_status = OcrStatus::Ok;
            Some(mock_ocr(&restored, &FontSpec::default()))
        }
        OcrEngineKind::External => {
            if !env.engine_available {
                record.ocr_status = OcrStatus::Skipped;
                record.detail = env.engine_detail.clone();
                None
            } else {
                match run_external_ocr(&restored, &env.config.engine) {
                    Ok(text) => {
                        record.ocr_status = OcrStatus::Ok;
                        Some(text)
                    }
                    Err(e @ OcrError::NotInstalled(_)) => {
                        record.ocr_status = OcrStatus::Skipped;
                        record.detail = Some(e.to_string());
                        None
                    }
                    Err(e) => {
                        record.ocr_status = OcrStatus::Error;
                        record.detail = Some(format!("ocr: {e}"));
                        None
                    }
                }
            }
        }
    };
    record.wall_ms.ocr_ms = t0.elapsed().as_millis() as u64;

    // Score. Image fidelity is reported even when OCR was skipped.
    let t0 = Instant::now();
    match ocr_text {
        Some(text) => match score_cell(&restored, reference, &text, plan.truth) {
            Ok(scores) => {
                record.fuzz = Some(scores.fuzz);
                record.levenshtein = Some(scores.levenshtein);
                record.psnr_db = Some(scores.psnr_db);
                record.ssim = Some(scores.ssim);
            }
            Err(e) => fail(&mut record, "score", e),
        },
        None => match score_images(&restored, reference) {
            Ok(image) => {
                record.psnr_db = Some(image.psnr_db);
                record.ssim = Some(image.ssim);
            }
            Err(e) => fail(&mut record, "score", e.into()),
        },
    }
    record.wall_ms.score_ms = t0.elapsed().as_millis() as u64;
    record
}

fn resolve_texts(config: &BenchConfig) -> Result<Vec<(String, String)>, BenchError> {
    let mut out = Vec::with_capacity(config.texts.len());
    for (i, t) in config.texts.iter().enumerate() {
        let field = format!("texts[{i}]");
        let (id, body) = match t {
            TextSpec::Path(p) => {
                let body = std::fs::read_to_string(p)
                    .map_err(|e| config_err(field.clone(), format!("{p}: {e}")))?;
                let id = Path::new(p)
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| format!("text{i}"));
                (id, body)
            }
            TextSpec::Entry {
                id,
                path,
                inline,
                corpus,
            } => {
                let body = match (path, inline, corpus) {
                    (Some(p), None, None) => std::fs::read_to_string(p)
                        .map_err(|e| config_err(field.clone(), format!("{p}: {e}")))?,
                    (None, Some(s), None) => s.clone(),
                    (None, None, Some(c)) => crate::corpus::by_id(c)
                        .ok_or_else(|| {
                            config_err(field.clone(), format!("unknown corpus id `{c}`"))
                        })?
                        .to_string(),
                    _ => {
                        return Err(config_err(
                            field,
                            "give exactly one of path, inline, or corpus",
                        ))
                    }
                };
                let id = id
                    .clone()
                    .or_else(|| corpus.clone())
                    .or_else(|| {
                        path.as_ref().and_then(|p| {
                            Path::new(p)
                                .file_stem()
                                .map(|s| s.to_string_lossy().into_owned())
                        })
                    });
                (id.unwrap_or_else(|| format!("text{i}")), body)
            }
        };
        out.push((id, body));
    }
    let mut seen = BTreeSet::new();
    for (id, _) in &out {
        if !seen.insert(id.clone()) {
            return Err(config_err("texts", format!("duplicate text id `{id}`")));
        }
    }
    Ok(out)
}

/// Runs the full experiment matrix. Always returns exactly
/// `|texts| · |dpis| · |scales| · |models|` records, sorted by
/// `(text_id, dpi, scale, model_id)`; per-cell failures are folded into
/// record statuses.
pub fn run_matrix(config: &BenchConfig) -> Result<Vec<ScoreRecord>, BenchError> {
    config.validate()?;
    let texts = resolve_texts(config)?;
    let models: Vec<ResolvedModel> = config
        .models
        .iter()
        .map(|m| resolve_model(m))
        .collect::<Result<_, _>>()?;
    // Fail fast on unreadable weight files rather than per cell.
    for m in &models {
        if let WeightSource::File(path) = &m.source {
            if !path.is_file() {
                return Err(config_err(
                    "models",
                    format!("weight file not found: {}", path.display()),
                ));
            }
        }
    }

    let (engine_available, engine_detail) = match config.engine.kind {
        OcrEngineKind::Mock => (true, None),
        OcrEngineKind::External => {
            let probe = engine_probe(&config.engine);
            let detail = if probe.available {
                None
            } else {
                Some("engine probe failed: binary unavailable".to_string())
            };
            (probe.available, detail)
        }
    };

    if config.cache {
        std::fs::create_dir_all(&config.output_dir)?;
    }
    let env = RunEnv {
        config,
        engine_available,
        engine_detail,
        cache: CachedStage {
            dir: config.cache.then_some(config.output_dir.as_path()),
        },
    };

    // Render each (text, dpi) page once, up front. Failures are recorded
    // in every cell of that page rather than aborting the run.
    let font = FontSpec::default();
    let mut renders: BTreeMap<(usize, u32), (Result<Image, String>, String, u64)> = BTreeMap::new();
    for (ti, (id, body)) in texts.iter().enumerate() {
        for &dpi in &config.dpis {
            let t0 = Instant::now();
            let page = render_text_page(body, dpi, &font)
                .map(|p| p.image)
                .map_err(|e| e.to_string());
            let ms = t0.elapsed().as_millis() as u64;
            let key = cache_key(
                "render",
                &[id.as_bytes(), body.as_bytes(), &dpi.to_le_bytes()],
            );
            renders.insert((ti, dpi), (page, key, ms));
        }
    }

    let mut plans = Vec::new();
    for (ti, (id, body)) in texts.iter().enumerate() {
        for &dpi in &config.dpis {
            let (reference, render_key, render_ms) = &renders[&(ti, dpi)];
            for &scale in &config.scales {
                for model in &models {
                    plans.push(CellPlan {
                        text_id: id,
                        truth: body,
                        reference: reference.as_ref().map_err(|e| e.as_str()),
                        render_key,
                        render_ms: *render_ms,
                        dpi,
                        scale,
                        model,
                    });
                }
            }
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| config_err("workers", e.to_string()))?;
    let mut records: Vec<ScoreRecord> =
        pool.install(|| plans.par_iter().map(|p| run_cell(p, &env)).collect());

    records.sort_by(|a, b| {
        (&a.text_id, a.dpi, a.scale.to_bits(), &a.model_id).cmp(&(
            &b.text_id,
            b.dpi,
            b.scale.to_bits(),
            &b.model_id,
        ))
    });
    Ok(records)
}

/// Report serialization target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
    Json,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Option<ReportFormat> {
        match s {
            "csv" => Some(ReportFormat::Csv),
            "markdown" | "md" => Some(ReportFormat::Markdown),
            "json" => Some(ReportFormat::Json),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Markdown => "md",
            ReportFormat::Json => "json",
        }
    }
}

fn csv_report(records: &[ScoreRecord]) -> Result<String, BenchError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "text_id",
        "dpi",
        "scale",
        "model",
        "fuzz",
        "levenshtein",
        "psnr_db",
        "ssim",
        "status",
    ])
    .map_err(|e| BenchError::Report(e.to_string()))?;
    for r in records {
        let psnr = match r.psnr_db {
            Some(v) if v.is_infinite() => "inf".to_string(),
            Some(v) => format!("{v:.4}"),
            None => String::new(),
        };
        let ssim = r.ssim.map(|v| format!("{v:.6}")).unwrap_or_default();
        w.write_record([
            r.text_id.clone(),
            r.dpi.to_string(),
            r.scale.to_string(),
            r.model_id.clone(),
            r.fuzz.map(|f| f.to_string()).unwrap_or_default(),
            r.levenshtein.map(|l| l.to_string()).unwrap_or_default(),
            psnr,
            ssim,
            r.ocr_status.to_string(),
        ])
        .map_err(|e| BenchError::Report(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| BenchError::Report(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| BenchError::Report(e.to_string()))
}

fn markdown_report(records: &[ScoreRecord]) -> String {
    let model_ids: BTreeSet<&str> = records.iter().map(|r| r.model_id.as_str()).collect();
    let mut by_dpi: BTreeMap<u32, BTreeMap<u64, BTreeMap<&str, (f64, u32)>>> = BTreeMap::new();
    for r in records {
        if r.ocr_status != OcrStatus::Ok {
            continue;
        }
        let Some(fuzz) = r.fuzz else { continue };
        let cell = by_dpi
            .entry(r.dpi)
            .or_default()
            .entry(r.scale.to_bits())
            .or_default()
            .entry(r.model_id.as_str())
            .or_insert((0.0, 0));
        cell.0 += fuzz as f64;
        cell.1 += 1;
    }
    let mut out = String::new();
    let _ = writeln!(out, "# OCR accuracy by dpi");
    for (&dpi, scales) in &by_dpi {
        let _ = writeln!(out, "\n## {dpi} dpi\n");
        let _ = write!(out, "| scale |");
        for m in &model_ids {
            let _ = write!(out, " {m} |");
        }
        let _ = writeln!(out);
        let _ = write!(out, "| ---: |");
        for _ in &model_ids {
            let _ = write!(out, " ---: |");
        }
        let _ = writeln!(out);
        for (&scale_bits, row) in scales {
            let scale = f64::from_bits(scale_bits);
            let _ = write!(out, "| {scale} |");
            for m in &model_ids {
                match row.get(m) {
                    Some(&(sum, n)) if n > 0 => {
                        let mean = (sum / n as f64).round() as i64;
                        if mean >= 100 {
                            let _ = write!(out, " **{mean}** |");
                        } else {
                            let _ = write!(out, " {mean} |");
                        }
                    }
                    _ => {
                        let _ = write!(out, " — |");
                    }
                }
            }
            let _ = writeln!(out);
        }
    }
    out
}

/// Renders records in the requested format. CSV columns are
/// `text_id,dpi,scale,model,fuzz,levenshtein,psnr_db,ssim,status`;
/// markdown is one table per dpi (rows: scales ascending; columns: models;
/// cells: mean integer fuzz over texts, bold at 100); JSON is the full
/// record array.
pub fn render_report(records: &[ScoreRecord], format: ReportFormat) -> Result<String, BenchError> {
    match format {
        ReportFormat::Csv => csv_report(records),
        ReportFormat::Markdown => Ok(markdown_report(records)),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(records)
                .map_err(|e| BenchError::Report(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

/// Writes one report file per requested format next to each other under
/// `dir`, named `report.{csv,md,json}`. Returns the written paths.
pub fn emit_report(
    records: &[ScoreRecord],
    formats: &[ReportFormat],
    dir: &Path,
) -> Result<Vec<PathBuf>, BenchError> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for &f in formats {
        let content = render_report(records, f)?;
        let path = dir.join(format!("report.{}", f.extension()));
        std::fs::write(&path, content)?;
        written.push(path);
    }
    Ok(written)
}
