//! `srocr`: command-line front end for the text super-resolution OCR
//! benchmark. Single-stage commands (`render`, `degrade`, `sr`, `ocr`,
//! `score`) operate on image files; `bench` drives the full experiment
//! matrix from a JSON config; `train` and `gradcheck` exercise the
//! desk-scale training loop.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use srocr_core::bench::{
    self, load_config, render_report, run_matrix, OcrStatus, ReportFormat, ScoreRecord,
};
use srocr_core::degrade::{degrade_pipeline, resample_to, DegradeSpec, ResampleKernel};
use srocr_core::font::FontSpec;
use srocr_core::models::{
    build_model, fd_test_weights, forward, init_weights, load_weights, save_weights, ArchPreset,
};
use srocr_core::ocr::{mock_ocr, run_external_ocr, OcrEngineSpec};
use srocr_core::raster::Image;
use srocr_core::render::render_text_page;
use srocr_core::tensor::{Shape, Tensor};
use srocr_core::train::{
    grad_check, train_loop, write_loss_csv, LossKind, TrainBatch, TrainConfig, TrainMode,
    TrainState,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "srocr", version, about = "Text super-resolution OCR benchmark")]
struct Cli {
    /// Base RNG seed (degradation noise, untrained weights, training).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for the benchmark pool (0 = CPU count).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output directory for benchmark reports and the stage cache.
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render text to a grayscale page image (PNG or PGM by extension).
    Render {
        /// Text file to render.
        #[arg(long, conflicts_with_all = ["inline", "corpus"])]
        text: Option<PathBuf>,
        /// Literal text to render.
        #[arg(long, conflicts_with = "corpus")]
        inline: Option<String>,
        /// Bundled corpus text id (prose, figures, listing).
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, default_value_t = 200)]
        dpi: u32,
        /// Output image path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Degrade a page image: blur, bicubic downscale, noise.
    Degrade {
        image: PathBuf,
        /// Downscale factor in (0, 1].
        #[arg(long)]
        scale: f64,
        #[arg(long, default_value_t = 0.0)]
        blur: f64,
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Super-resolve an image with a model preset.
    Sr {
        image: PathBuf,
        /// Model preset id: bicubic, edsr, edsr_base, srgan_gen, esrgan_gen,
        /// or any generator's `-mini` variant.
        #[arg(long)]
        preset: String,
        /// Upsample factor: 2, 3, or 4.
        #[arg(long, default_value_t = 2)]
        factor: u32,
        /// Weight container path; omit for bicubic or with --untrained.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Use freshly initialized weights seeded from --seed.
        #[arg(long, conflicts_with = "weights")]
        untrained: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recognize text on a page image (built-in mock unless --command).
    Ocr {
        image: PathBuf,
        /// External engine command template with {input} and {output}.
        #[arg(long)]
        command: Option<String>,
        #[arg(long, default_value_t = 30.0)]
        timeout: f64,
        /// Write the text here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score a restored page against the reference render and truth text.
    Score {
        #[arg(long)]
        restored: PathBuf,
        #[arg(long)]
        reference: PathBuf,
        /// File with the OCR output text.
        #[arg(long)]
        ocr: PathBuf,
        /// File with the ground-truth text.
        #[arg(long)]
        truth: PathBuf,
    },
    /// Run or re-report the benchmark matrix.
    #[command(subcommand)]
    Bench(BenchCmd),
    /// Train a generator preset on synthetic page crops.
    Train {
        #[arg(long, default_value = "edsr-mini")]
        preset: String,
        #[arg(long, default_value_t = 2)]
        factor: u32,
        /// l1_only, gan, or ragan.
        #[arg(long, default_value = "l1_only")]
        mode: String,
        /// Discriminator preset for gan/ragan.
        #[arg(long, default_value = "srgan_disc-mini")]
        disc: String,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long, default_value_t = 1e-3)]
        lr: f64,
        #[arg(long, default_value_t = 1)]
        batch: usize,
        #[arg(long, default_value_t = 50)]
        window: usize,
        #[arg(long, default_value_t = 1e-4)]
        eps: f64,
        /// High-resolution crop side; defaults to the discriminator input
        /// size for gan/ragan and 16·factor/2 for l1_only.
        #[arg(long)]
        hr_side: Option<usize>,
        /// Where to write the trained weight container.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV loss log.
        #[arg(long)]
        losses: Option<PathBuf>,
    },
    /// Verify reverse-mode gradients against finite differences.
    Gradcheck {
        #[arg(long)]
        preset: String,
        #[arg(long, default_value_t = 2)]
        factor: u32,
        #[arg(long, default_value_t = 64)]
        probes: usize,
        /// Maximum acceptable relative error.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        /// Probe at standard Kaiming initialization instead of the
        /// smoothed verification point.
        #[arg(long)]
        standard_init: bool,
    },
}

#[derive(Subcommand)]
enum BenchCmd {
    /// Execute the matrix described by a JSON config file.
    Run { config: PathBuf },
    /// Re-render reports from a records JSON file.
    Report {
        records: PathBuf,
        /// csv, markdown, or json.
        #[arg(long, default_value = "markdown")]
        format: String,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Exit codes: 0 success, 1 configuration or runtime failure, 2 benchmark
    // completed but some cells did not score. Argument errors are
    // configuration failures, so clap's default exit code 2 is remapped.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load_image(path: &Path) -> Result<Image> {
    let img = match path.extension().and_then(|e| e.to_str()) {
        Some("pgm") => Image::load_pgm(path),
        _ => Image::load_png(path),
    };
    img.with_context(|| format!("loading {}", path.display()))
}

fn save_image(img: &Image, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("pgm") => img.save_pgm(path),
        _ => img.save_png(path),
    }
    .with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let seed = cli.seed.unwrap_or(0);
    match cli.command {
        Cmd::Render {
            text,
            inline,
            corpus,
            dpi,
            out,
        } => {
            let body = match (text, inline, corpus) {
                (Some(path), None, None) => std::fs::read_to_string(&path)
                    .with_context(|| format!("reading {}", path.display()))?,
                (None, Some(s), None) => s,
                (None, None, Some(id)) => srocr_core::corpus::by_id(&id)
                    .ok_or_else(|| anyhow!("unknown corpus id `{id}` (prose, figures, listing)"))?
                    .to_string(),
                _ => bail!("give exactly one of --text, --inline, --corpus"),
            };
            let page = render_text_page(&body, dpi, &FontSpec::default())?;
            for w in &page.warnings {
                eprintln!("warning: {w}");
            }
            save_image(&page.image, &out)?;
            println!("wrote {} ({}x{})", out.display(), page.image.width(), page.image.height());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Degrade {
            image,
            scale,
            blur,
            noise,
            out,
        } => {
            let img = load_image(&image)?;
            let spec = DegradeSpec {
                scale,
                blur_sigma: blur,
                noise_sigma: noise,
                seed,
            };
            let low = degrade_pipeline(&img, &spec)?;
            save_image(&low, &out)?;
            println!("wrote {} ({}x{})", out.display(), low.width(), low.height());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Sr {
            image,
            preset,
            factor,
            weights,
            untrained,
            out,
        } => {
            let img = load_image(&image)?;
            let arch = ArchPreset::by_id(&preset)?;
            if arch.is_discriminator() {
                bail!("preset `{preset}` is a discriminator and cannot super-resolve");
            }
            let graph = build_model(&arch, factor)?;
            let store = if graph.resample_only {
                srocr_core::models::WeightStore::new()
            } else if let Some(path) = weights {
                load_weights(&graph, &path)?
            } else if untrained {
                init_weights(&graph, seed)
            } else {
                bail!("preset `{preset}` needs --weights FILE or --untrained");
            };
            let x = img.to_rgb().to_tensor();
            let y = forward(&graph, &store, &x)?;
            let mut up = Image::from_tensor(&y)?;
            if img.channels() == 1 {
                up = up.to_gray();
            }
            up.dpi = img.dpi.map(|d| d.saturating_mul(factor));
            save_image(&up, &out)?;
            println!("wrote {} ({}x{})", out.display(), up.width(), up.height());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Ocr {
            image,
            command,
            timeout,
            out,
        } => {
            let img = load_image(&image)?;
            let text = match command {
                Some(template) => {
                    let mut spec = OcrEngineSpec::external(&template);
                    spec.timeout = timeout;
                    run_external_ocr(&img, &spec)?
                }
                None => mock_ocr(&img, &FontSpec::default()),
            };
            match out {
                Some(path) => std::fs::write(&path, &text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Score {
            restored,
            reference,
            ocr,
            truth,
        } => {
            let restored = load_image(&restored)?;
            let reference = load_image(&reference)?;
            let ocr_text = std::fs::read_to_string(&ocr)?;
            let truth_text = std::fs::read_to_string(&truth)?;
            let s = bench::score_cell(&restored, &reference, &ocr_text, &truth_text)?;
            let psnr = if s.psnr_db.is_infinite() {
                "\"inf\"".to_string()
            } else {
                format!("{:.4}", s.psnr_db)
            };
            println!(
                "{{\"fuzz\": {}, \"levenshtein\": {}, \"psnr_db\": {}, \"ssim\": {:.6}}}",
                s.fuzz, s.levenshtein, psnr, s.ssim
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bench(BenchCmd::Run { config }) => {
            let mut cfg = load_config(&config).map_err(|e| anyhow!(e.to_string()))?;
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            if let Some(w) = cli.workers {
                cfg.workers = w;
            }
            if let Some(dir) = cli.output_dir {
                cfg.output_dir = dir;
            }
            let records = run_matrix(&cfg)?;
            std::fs::create_dir_all(&cfg.output_dir)?;
            let records_path = cfg.output_dir.join("records.json");
            std::fs::write(&records_path, render_report(&records, ReportFormat::Json)?)?;
            println!("wrote {}", records_path.display());
            for format in [ReportFormat::Csv, ReportFormat::Markdown] {
                let path = cfg
                    .output_dir
                    .join(format!("report.{}", format.extension()));
                std::fs::write(&path, render_report(&records, format)?)?;
                println!("wrote {}", path.display());
            }
            let ok = records.iter().filter(|r| r.ocr_status == OcrStatus::Ok).count();
            let skipped = records
                .iter()
                .filter(|r| r.ocr_status == OcrStatus::Skipped)
                .count();
            let errors = records
                .iter()
                .filter(|r| r.ocr_status == OcrStatus::Error)
                .count();
            println!("{} cells: {ok} OK, {skipped} SKIPPED, {errors} ERROR", records.len());
            if skipped + errors > 0 {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Bench(BenchCmd::Report {
            records,
            format,
            out,
        }) => {
            let format = ReportFormat::parse(&format)
                .ok_or_else(|| anyhow!("unknown format `{format}` (csv, markdown, json)"))?;
            let raw = std::fs::read_to_string(&records)
                .with_context(|| format!("reading {}", records.display()))?;
            let records: Vec<ScoreRecord> =
                serde_json::from_str(&raw).context("parsing records JSON")?;
            let content = render_report(&records, format)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, content)?;
                    println!("wrote {}", path.display());
                }
                None => print!("{content}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Train {
            preset,
            factor,
            mode,
            disc,
            steps,
            lr,
            batch,
            window,
            eps,
            hr_side,
            out,
            losses,
        } => {
            let mode = TrainMode::from_str(&mode)?;
            let arch = ArchPreset::by_id(&preset)?;
            if arch.is_discriminator() {
                bail!("--preset must be a generator; `{preset}` is a discriminator");
            }
            let gen = build_model(&arch, factor)?;
            if gen.resample_only {
                bail!("the bicubic pseudo-model has no weights to train");
            }
            let disc_graph = if mode == TrainMode::L1Only {
                None
            } else {
                let d = ArchPreset::by_id(&disc)?;
                if !d.is_discriminator() {
                    bail!("--disc must be a discriminator preset, got `{disc}`");
                }
                Some((build_model(&d, factor)?, d.disc_input))
            };
            let hr = hr_side.unwrap_or_else(|| match &disc_graph {
                Some((_, disc_input)) => *disc_input,
                None => 8 * factor as usize,
            });
            if let Some((_, disc_input)) = &disc_graph {
                if hr != *disc_input {
                    bail!(
                        "gan/ragan crops must match the discriminator input {disc_input}, got {hr}"
                    );
                }
            }
            if hr % factor as usize != 0 || hr / (factor as usize) < 4 {
                bail!("hr side {hr} must be a multiple of factor {factor} with lr side >= 4");
            }
            let config = TrainConfig {
                steps_max: steps,
                batch,
                learning_rate: lr,
                seed,
                convergence_window: window,
                convergence_eps: eps,
                mode,
            };
            let dataset = synthetic_dataset(hr, factor, batch, seed)?;
            let mut state = TrainState::new(gen, disc_graph.map(|(g, _)| g), &config)?;
            let reports = train_loop(&mut state, &dataset, &config)?;
            save_weights(&state.gen, &state.gen_weights, &out)?;
            println!("wrote {} after {} steps", out.display(), reports.len());
            if let Some(first) = reports.first() {
                let last = reports.last().expect("non-empty");
                println!(
                    "l1 {:.6} -> {:.6}, g_loss {:.6}, d_loss {:.6}",
                    first.l1, last.l1, last.g_loss, last.d_loss
                );
            }
            if let Some(path) = losses {
                let mut buf = Vec::new();
                write_loss_csv(&reports, &mut buf)?;
                std::fs::write(&path, buf)?;
                println!("wrote {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gradcheck {
            preset,
            factor,
            probes,
            tol,
            standard_init,
        } => {
            let arch = ArchPreset::by_id(&preset)?;
            let graph = build_model(&arch, factor)?;
            let weights = if standard_init {
                init_weights(&graph, seed)
            } else {
                fd_test_weights(&graph, seed)
            };
            let rel = grad_check(&graph, &weights, LossKind::Mse, probes, seed)?;
            println!(
                "{preset} x{factor}: max relative error {rel:.3e} over {probes} probes (tolerance {tol:.0e})"
            );
            if rel < tol {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("gradient check FAILED");
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Deterministic training data: random page crops from a rendered corpus
/// text, paired with bicubic-downscaled inputs.
fn synthetic_dataset(
    hr_side: usize,
    factor: u32,
    batch: usize,
    seed: u64,
) -> Result<Vec<TrainBatch>> {
    use rand::{Rng, SeedableRng};
    let text = srocr_core::corpus::by_id("prose").expect("bundled corpus");
    let page = render_text_page(text, 100, &FontSpec::default())?.image;
    let lr_side = hr_side / factor as usize;
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed ^ 0x5eed_da7a);
    let margin = 50;
    let max_x = page.width() - margin - hr_side;
    let max_y = page.height() - margin - hr_side;
    let mut dataset = Vec::with_capacity(8);
    for _ in 0..8 {
        let mut hr_crops = Vec::with_capacity(batch);
        let mut lr_crops = Vec::with_capacity(batch);
        for _ in 0..batch {
            let x0 = rng.gen_range(margin..max_x);
            let y0 = rng.gen_range(margin..max_y);
            let mut crop = Image::filled(hr_side, hr_side, 1, 255)
                .expect("crop geometry");
            for y in 0..hr_side {
                for x in 0..hr_side {
                    crop.set_sample(x, y, 0, page.sample(x0 + x, y0 + y, 0));
                }
            }
            let low = resample_to(&crop, lr_side, lr_side, ResampleKernel::Bicubic)?;
            hr_crops.push(crop.to_rgb().to_tensor());
            lr_crops.push(low.to_rgb().to_tensor());
        }
        dataset.push(TrainBatch {
            input: stack_batch(&lr_crops),
            target: stack_batch(&hr_crops),
        });
    }
    Ok(dataset)
}

/// Stacks single-item tensors along the batch axis.
fn stack_batch(items: &[Tensor<f32>]) -> Tensor<f32> {
    let s = items[0].shape();
    Tensor::from_fn(Shape::new(items.len(), s.c, s.h, s.w), |n, c, y, x| {
        items[n].at(0, c, y, x)
    })
}
