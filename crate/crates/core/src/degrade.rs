//! Image degradation: resampling kernels, Gaussian blur, and seeded noise.
//!
//! The pipeline that makes low-resolution variants is blur, then bicubic
//! downscale, then additive Gaussian noise. Everything runs in f64 planes
//! and quantizes once at the end (clamp to [0,255], round half away from
//! zero), so outputs are byte-stable and suitable for golden fixtures.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::raster::{quantize_u8, Image};

#[derive(Debug, Error)]
pub enum DegradeError {
    #[error("resample factor {0} must be positive and finite")]
    InvalidFactor(f64),
    #[error("output dimensions {0}x{1} degenerate")]
    DegenerateOutput(usize, usize),
    #[error("degrade spec invalid: {0}")]
    InvalidSpec(String),
}

/// Interpolation kernel for [`resample`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResampleKernel {
    /// Catmull-Rom-family cubic with a = -0.5; the reference kernel for
    /// degradation and for the baseline restoration model.
    Bicubic,
    Bilinear,
    Nearest,
    Box,
}

impl ResampleKernel {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "bicubic" => Some(ResampleKernel::Bicubic),
            "bilinear" => Some(ResampleKernel::Bilinear),
            "nearest" => Some(ResampleKernel::Nearest),
            "box" => Some(ResampleKernel::Box),
            _ => None,
        }
    }

    fn support(self) -> f64 {
        match self {
            ResampleKernel::Bicubic => 2.0,
            ResampleKernel::Bilinear => 1.0,
            ResampleKernel::Nearest | ResampleKernel::Box => 0.5,
        }
    }

    fn eval(self, t: f64) -> f64 {
        let t = t.abs();
        match self {
            ResampleKernel::Bicubic => cubic(t),
            ResampleKernel::Bilinear => (1.0 - t).max(0.0),
            ResampleKernel::Nearest | ResampleKernel::Box => {
                if t < 0.5 {
                    1.0
                } else if t == 0.5 {
                    0.5
                } else {
                    0.0
                }
            }
        }
    }
}

/// The a = -0.5 cubic: 1 at 0, 0 at every other integer.
fn cubic(t: f64) -> f64 {
    const A: f64 = -0.5;
    if t <= 1.0 {
        (A + 2.0) * t * t * t - (A + 3.0) * t * t + 1.0
    } else if t < 2.0 {
        A * t * t * t - 5.0 * A * t * t + 8.0 * A * t - 4.0 * A
    } else {
        0.0
    }
}

/// One full low-resolution degradation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DegradeSpec {
    /// Downscale factor in (0, 1].
    pub scale: f64,
    pub blur_sigma: f64,
    pub noise_sigma: f64,
    pub seed: u64,
}

impl DegradeSpec {
    pub fn validate(&self) -> Result<(), DegradeError> {
        if !(self.scale > 0.0 && self.scale <= 1.0) {
            return Err(DegradeError::InvalidSpec(format!(
                "scale {} outside (0, 1]",
                self.scale
            )));
        }
        if self.blur_sigma < 0.0 || !self.blur_sigma.is_finite() {
            return Err(DegradeError::InvalidSpec(format!(
                "blur_sigma {} must be finite and non-negative",
                self.blur_sigma
            )));
        }
        if self.noise_sigma < 0.0 || !self.noise_sigma.is_finite() {
            return Err(DegradeError::InvalidSpec(format!(
                "noise_sigma {} must be finite and non-negative",
                self.noise_sigma
            )));
        }
        Ok(())
    }
}

/// Tap plan for one output coordinate: first source index and the
/// normalized weights over consecutive source positions (clamped to the
/// image border at application time).
struct Taps {
    start: isize,
    weights: Vec<f64>,
}

/// Builds resampling taps for one axis. The source position of output
/// pixel `d` is `(d + 0.5)/ratio - 0.5`; when minifying, the kernel is
/// stretched by `1/ratio` so it covers the whole source footprint
/// (anti-aliasing), and the weights are normalized to sum to 1.
fn axis_taps(n_in: usize, n_out: usize, kernel: ResampleKernel) -> Vec<Taps> {
    let ratio = n_out as f64 / n_in as f64;
    let stretch = (1.0 / ratio).max(1.0);
    let support = kernel.support() * stretch;
    (0..n_out)
        .map(|d| {
            let center = (d as f64 + 0.5) / ratio - 0.5;
            let start = (center - support).ceil() as isize;
            let end = (center + support).floor() as isize;
            let mut weights: Vec<f64> = (start..=end)
                .map(|i| kernel.eval((i as f64 - center) / stretch))
                .collect();
            let sum: f64 = weights.iter().sum();
            debug_assert!(sum > 0.0, "kernel window cannot be empty");
            for w in &mut weights {
                *w /= sum;
            }
            Taps { start, weights }
        })
        .collect()
}

fn apply_taps_rows(plane: &[f64], w: usize, h: usize, taps: &[Taps]) -> Vec<f64> {
    let out_w = taps.len();
    let mut out = vec![0.0f64; out_w * h];
    for y in 0..h {
        let row = &plane[y * w..(y + 1) * w];
        for (d, t) in taps.iter().enumerate() {
            let mut acc = 0.0;
            for (k, &wt) in t.weights.iter().enumerate() {
                let i = (t.start + k as isize).clamp(0, w as isize - 1) as usize;
                acc += wt * row[i];
            }
            out[y * out_w + d] = acc;
        }
    }
    out
}

fn apply_taps_cols(plane: &[f64], w: usize, h: usize, taps: &[Taps]) -> Vec<f64> {
    let out_h = taps.len();
    let mut out = vec![0.0f64; w * out_h];
    for (d, t) in taps.iter().enumerate() {
        for x in 0..w {
            let mut acc = 0.0;
            for (k, &wt) in t.weights.iter().enumerate() {
                let i = (t.start + k as isize).clamp(0, h as isize - 1) as usize;
                acc += wt * plane[i as usize * w + x];
            }
            out[d * w + x] = acc;
        }
    }
    out
}

/// Resamples one float plane to new dimensions without quantization.
/// Used by the bicubic pseudo-model, which operates on tensors, not images.
pub(crate) fn resample_plane(
    plane: &[f64],
    w: usize,
    h: usize,
    out_w: usize,
    out_h: usize,
    kernel: ResampleKernel,
) -> Vec<f64> {
    debug_assert_eq!(plane.len(), w * h);
    let h_taps = axis_taps(w, out_w, kernel);
    let v_taps = axis_taps(h, out_h, kernel);
    let tmp = apply_taps_rows(plane, w, h, &h_taps);
    apply_taps_cols(&tmp, out_w, h, &v_taps)
}

fn split_planes(img: &Image) -> Vec<Vec<f64>> {
    let (w, h, c) = (img.width(), img.height(), img.channels());
    let mut planes = vec![vec![0.0f64; w * h]; c];
    for y in 0..h {
        for x in 0..w {
            for (ci, plane) in planes.iter_mut().enumerate() {
                plane[y * w + x] = img.sample(x, y, ci) as f64;
            }
        }
    }
    planes
}

fn join_planes(planes: &[Vec<f64>], w: usize, h: usize) -> Image {
    let c = planes.len();
    let mut data = Vec::with_capacity(w * h * c);
    for i in 0..w * h {
        for plane in planes {
            data.push(quantize_u8(plane[i]));
        }
    }
    Image::new(w, h, c, data).expect("geometry consistent")
}

/// Resizes to exact target dimensions with the given kernel. Separable:
/// horizontal pass then vertical, in f64, quantized once at the end.
pub fn resample_to(
    img: &Image,
    out_w: usize,
    out_h: usize,
    kernel: ResampleKernel,
) -> Result<Image, DegradeError> {
    if out_w == 0 || out_h == 0 {
        return Err(DegradeError::DegenerateOutput(out_w, out_h));
    }
    if out_w == img.width() && out_h == img.height() {
        return Ok(img.clone());
    }
    let (w, h) = (img.width(), img.height());
    if kernel == ResampleKernel::Nearest {
        // Pure index remap; no arithmetic on sample values at all.
        let rx = out_w as f64 / w as f64;
        let ry = out_h as f64 / h as f64;
        let mut out = Image::filled(out_w, out_h, img.channels(), 0).expect("validated dims");
        for y in 0..out_h {
            let sy = (((y as f64 + 0.5) / ry) as usize).min(h - 1);
            for x in 0..out_w {
                let sx = (((x as f64 + 0.5) / rx) as usize).min(w - 1);
                for c in 0..img.channels() {
                    out.set_sample(x, y, c, img.sample(sx, sy, c));
                }
            }
        }
        return Ok(out);
    }

    let h_taps = axis_taps(w, out_w, kernel);
    let v_taps = axis_taps(h, out_h, kernel);
    let planes: Vec<Vec<f64>> = split_planes(img)
        .into_iter()
        .map(|p| {
            let horizontal = apply_taps_rows(&p, w, h, &h_taps);
            apply_taps_cols(&horizontal, out_w, h, &v_taps)
        })
        .collect();
    Ok(join_planes(&planes, out_w, out_h))
}

/// Resizes by a scale factor: output dimensions are `floor(dim * factor)`.
/// Factor 1 is the identity for every kernel.
pub fn resample(img: &Image, factor: f64, kernel: ResampleKernel) -> Result<Image, DegradeError> {
    if !(factor > 0.0 && factor.is_finite()) {
        return Err(DegradeError::InvalidFactor(factor));
    }
    if factor == 1.0 {
        return Ok(img.clone());
    }
    let out_w = (img.width() as f64 * factor).floor() as usize;
    let out_h = (img.height() as f64 * factor).floor() as usize;
    resample_to(img, out_w, out_h, kernel)
}

/// Separable Gaussian blur with kernel radius `ceil(3*sigma)` and
/// edge-clamped sampling. `sigma == 0` is the identity.
pub fn gaussian_blur(img: &Image, sigma: f64) -> Result<Image, DegradeError> {
    if sigma < 0.0 || !sigma.is_finite() {
        return Err(DegradeError::InvalidSpec(format!(
            "blur sigma {sigma} must be finite and non-negative"
        )));
    }
    if sigma == 0.0 {
        return Ok(img.clone());
    }
    let radius = (3.0 * sigma).ceil() as isize;
    let mut weights: Vec<f64> = (-radius..=radius)
        .map(|i| (-(i as f64 * i as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let sum: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= sum;
    }

    let (w, h) = (img.width(), img.height());
    let clamp_w = |i: isize| i.clamp(0, w as isize - 1) as usize;
    let clamp_h = |i: isize| i.clamp(0, h as isize - 1) as usize;
    let planes: Vec<Vec<f64>> = split_planes(img)
        .into_iter()
        .map(|p| {
            let mut tmp = vec![0.0f64; w * h];
            for y in 0..h {
                for x in 0..w {
                    let mut acc = 0.0;
                    for (k, &wt) in weights.iter().enumerate() {
                        let sx = clamp_w(x as isize + k as isize - radius);
                        acc += wt * p[y * w + sx];
                    }
                    tmp[y * w + x] = acc;
                }
            }
            let mut out = vec![0.0f64; w * h];
            for y in 0..h {
                for x in 0..w {
                    let mut acc = 0.0;
                    for (k, &wt) in weights.iter().enumerate() {
                        let sy = clamp_h(y as isize + k as isize - radius);
                        acc += wt * tmp[sy * w + x];
                    }
                    out[y * w + x] = acc;
                }
            }
            out
        })
        .collect();
    let mut out = join_planes(&planes, w, h);
    out.dpi = img.dpi;
    Ok(out)
}

/// Adds zero-mean Gaussian noise from a seeded deterministic generator,
/// then clamps. `sigma == 0` is the identity.
pub fn add_noise(img: &Image, sigma: f64, seed: u64) -> Result<Image, DegradeError> {
    if sigma < 0.0 || !sigma.is_finite() {
        return Err(DegradeError::InvalidSpec(format!(
            "noise sigma {sigma} must be finite and non-negative"
        )));
    }
    if sigma == 0.0 {
        return Ok(img.clone());
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0f64, sigma).expect("sigma validated");
    let mut out = img.clone();
    for v in out.data_mut() {
        let noisy = *v as f64 + normal.sample(&mut rng);
        *v = quantize_u8(noisy);
    }
    Ok(out)
}

/// The full degradation: blur, then bicubic downscale by `spec.scale`,
/// then noise. A unit spec (scale 1, zero sigmas) is the identity.
pub fn degrade_pipeline(img: &Image, spec: &DegradeSpec) -> Result<Image, DegradeError> {
    spec.validate()?;
    let blurred = gaussian_blur(img, spec.blur_sigma)?;
    let small = resample(&blurred, spec.scale, ResampleKernel::Bicubic)?;
    add_noise(&small, spec.noise_sigma, spec.seed)
}
