//! Scoring: image fidelity (PSNR, SSIM) and OCR text similarity
//! (weighted Levenshtein, fuzz ratio) plus the text normalization that
//! makes OCR output comparable to ground truth.

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

use crate::raster::Image;

#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("image dimensions differ: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("channel counts differ: {0} vs {1}")]
    ChannelMismatch(usize, usize),
    #[error("image {0}x{1} too small for the 11x11 ssim window")]
    TooSmall(usize, usize),
}

/// Text-similarity scores for one OCR result. `levenshtein` is the
/// weighted distance (substitution cost 2) that also backs `fuzz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TextScore {
    pub fuzz: u8,
    pub levenshtein: u64,
    pub len_ref: usize,
    pub len_hyp: usize,
}

/// Image-fidelity scores for one restored page. `psnr_db` is infinite when
/// the images are identical.
#[derive(Clone, Debug, PartialEq)]
pub struct ImageScore {
    pub psnr_db: f64,
    pub ssim: f64,
    pub mse: f64,
}

/// Canonical text form: Unicode NFC, CR/LF/TAB turned into spaces,
/// whitespace runs collapsed to a single space, ends trimmed.
pub fn normalize_text(s: &str) -> String {
    let composed: String = s
        .nfc()
        .map(|c| if matches!(c, '\r' | '\n' | '\t') { ' ' } else { c })
        .collect();
    composed.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Weighted edit distance over Unicode scalar values by dynamic
/// programming. Weights must be at least 1.
pub fn levenshtein(a: &str, b: &str, w_ins: u64, w_del: u64, w_sub: u64) -> u64 {
    debug_assert!(w_ins >= 1 && w_del >= 1 && w_sub >= 1);
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    // prev[j] = distance from a[..i] to b[..j]; single rolling row.
    let mut prev: Vec<u64> = (0..=b.len() as u64).map(|j| j * w_ins).collect();
    let mut cur = vec![0u64; b.len() + 1];
    for i in 1..=a.len() {
        cur[0] = i as u64 * w_del;
        for j in 1..=b.len() {
            let sub = prev[j - 1] + if a[i - 1] == b[j - 1] { 0 } else { w_sub };
            let del = prev[j] + w_del;
            let ins = cur[j - 1] + w_ins;
            cur[j] = sub.min(del).min(ins);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Similarity ratio in percent, the fuzzy-matching score used for OCR
/// accuracy: substitutions cost 2, and the result is rounded to a whole
/// percent. Two empty strings are a perfect match.
pub fn fuzz_ratio(a: &str, b: &str) -> u8 {
    let t = a.chars().count() as u64 + b.chars().count() as u64;
    if t == 0 {
        return 100;
    }
    let l = levenshtein(a, b, 1, 1, 2);
    // l <= t always: deleting all of a and inserting all of b costs t.
    let ratio = 100.0 * (t - l) as f64 / t as f64;
    ratio.round() as u8
}

/// Convenience wrapper producing the full text score for a (truth, OCR
/// output) pair after normalizing both sides.
pub fn score_text(truth: &str, hypothesis: &str) -> TextScore {
    let r = normalize_text(truth);
    let h = normalize_text(hypothesis);
    TextScore {
        fuzz: fuzz_ratio(&r, &h),
        levenshtein: levenshtein(&r, &h, 1, 1, 2),
        len_ref: r.chars().count(),
        len_hyp: h.chars().count(),
    }
}

fn check_same_geometry(a: &Image, b: &Image) -> Result<(), MetricsError> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(MetricsError::DimensionMismatch(
            a.width(),
            a.height(),
            b.width(),
            b.height(),
        ));
    }
    if a.channels() != b.channels() {
        return Err(MetricsError::ChannelMismatch(a.channels(), b.channels()));
    }
    Ok(())
}

/// Mean squared error over all samples, in f64.
pub fn mse(a: &Image, b: &Image) -> Result<f64, MetricsError> {
    check_same_geometry(a, b)?;
    let sum: f64 = a
        .data()
        .iter()
        .zip(b.data())
        .map(|(&x, &y)| {
            let d = x as f64 - y as f64;
            d * d
        })
        .sum();
    Ok(sum / a.data().len() as f64)
}

/// Peak signal-to-noise ratio in dB: `10·log10(255² / MSE)`, infinite for
/// identical images.
pub fn psnr(a: &Image, b: &Image) -> Result<f64, MetricsError> {
    let m = mse(a, b)?;
    if m == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Ok(10.0 * (255.0 * 255.0 / m).log10())
    }
}

const SSIM_WINDOW: usize = 11;
const SSIM_SIGMA: f64 = 1.5;
const SSIM_C1: f64 = (0.01 * 255.0) * (0.01 * 255.0);
const SSIM_C2: f64 = (0.03 * 255.0) * (0.03 * 255.0);

fn ssim_kernel() -> [f64; SSIM_WINDOW] {
    let mut k = [0.0; SSIM_WINDOW];
    let mid = (SSIM_WINDOW / 2) as f64;
    let mut sum = 0.0;
    for (i, v) in k.iter_mut().enumerate() {
        let d = i as f64 - mid;
        *v = (-d * d / (2.0 * SSIM_SIGMA * SSIM_SIGMA)).exp();
        sum += *v;
    }
    for v in &mut k {
        *v /= sum;
    }
    k
}

/// Separable windowed mean with edge-clamped sampling. Because index
/// clamping is per-axis, two 1-D passes are algebraically identical to the
/// full 2-D window.
fn windowed_mean(plane: &[f64], w: usize, h: usize, kernel: &[f64]) -> Vec<f64> {
    let r = kernel.len() / 2;
    let mut tmp = vec![0.0f64; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, &kv) in kernel.iter().enumerate() {
                let sx = (x + i).saturating_sub(r).min(w - 1);
                acc += kv * plane[y * w + sx];
            }
            tmp[y * w + x] = acc;
        }
    }
    let mut out = vec![0.0f64; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, &kv) in kernel.iter().enumerate() {
                let sy = (y + i).saturating_sub(r).min(h - 1);
                acc += kv * tmp[sy * w + x];
            }
            out[y * w + x] = acc;
        }
    }
    out
}

/// Structural similarity index: mean of the local SSIM map over every
/// pixel position, computed on luma with an 11x11 Gaussian window
/// (sigma 1.5, edge-clamped) and the standard stabilizing constants.
pub fn ssim(a: &Image, b: &Image) -> Result<f64, MetricsError> {
    check_same_geometry(a, b)?;
    let (w, h) = (a.width(), a.height());
    if w < SSIM_WINDOW || h < SSIM_WINDOW {
        return Err(MetricsError::TooSmall(w, h));
    }
    let ga = a.to_gray();
    let gb = b.to_gray();
    let x: Vec<f64> = ga.data().iter().map(|&v| v as f64).collect();
    let y: Vec<f64> = gb.data().iter().map(|&v| v as f64).collect();
    let xx: Vec<f64> = x.iter().map(|v| v * v).collect();
    let yy: Vec<f64> = y.iter().map(|v| v * v).collect();
    let xy: Vec<f64> = x.iter().zip(&y).map(|(u, v)| u * v).collect();

    let kernel = ssim_kernel();
    let mu_x = windowed_mean(&x, w, h, &kernel);
    let mu_y = windowed_mean(&y, w, h, &kernel);
    let e_xx = windowed_mean(&xx, w, h, &kernel);
    let e_yy = windowed_mean(&yy, w, h, &kernel);
    let e_xy = windowed_mean(&xy, w, h, &kernel);

    let mut total = 0.0f64;
    for i in 0..w * h {
        let var_x = e_xx[i] - mu_x[i] * mu_x[i];
        let var_y = e_yy[i] - mu_y[i] * mu_y[i];
        let cov = e_xy[i] - mu_x[i] * mu_y[i];
        let num = (2.0 * mu_x[i] * mu_y[i] + SSIM_C1) * (2.0 * cov + SSIM_C2);
        let den = (mu_x[i] * mu_x[i] + mu_y[i] * mu_y[i] + SSIM_C1) * (var_x + var_y + SSIM_C2);
        total += num / den;
    }
    Ok(total / (w * h) as f64)
}

/// PSNR, SSIM, and MSE for a restored/reference pair.
pub fn score_images(restored: &Image, reference: &Image) -> Result<ImageScore, MetricsError> {
    Ok(ImageScore {
        psnr_db: psnr(restored, reference)?,
        ssim: ssim(restored, reference)?,
        mse: mse(restored, reference)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_collapses_and_trims() {
        assert_eq!(normalize_text("a\n\nb"), "a b");
        assert_eq!(normalize_text("  x  "), "x");
        assert_eq!(normalize_text("a\tb\r\nc"), "a b c");
        assert_eq!(normalize_text(""), "");
        let once = normalize_text("  a \n b  ");
        assert_eq!(normalize_text(&once), once);
    }

    #[test]
    fn normalize_composes_to_nfc() {
        // 'e' + combining acute composes to a single scalar.
        let decomposed = "caf\u{0065}\u{0301}";
        assert_eq!(normalize_text(decomposed), "caf\u{00e9}");
    }

    /// Brute-force oracle: minimum cost over all edit scripts, found by
    /// exhaustive recursion on the string pair.
    fn lev_oracle(a: &[char], b: &[char], w_ins: u64, w_del: u64, w_sub: u64) -> u64 {
        match (a.first(), b.first()) {
            (None, None) => 0,
            (None, Some(_)) => b.len() as u64 * w_ins,
            (Some(_), None) => a.len() as u64 * w_del,
            (Some(&x), Some(&y)) => {
                let sub = lev_oracle(&a[1..], &b[1..], w_ins, w_del, w_sub)
                    + if x == y { 0 } else { w_sub };
                let del = lev_oracle(&a[1..], b, w_ins, w_del, w_sub) + w_del;
                let ins = lev_oracle(a, &b[1..], w_ins, w_del, w_sub) + w_ins;
                sub.min(del).min(ins)
            }
        }
    }

    #[test]
    fn levenshtein_known_values() {
        assert_eq!(levenshtein("", "abc", 1, 1, 1), 3);
        assert_eq!(levenshtein("kitten", "sitting", 1, 1, 1), 3);
        assert_eq!(levenshtein("kitten", "sitting", 1, 1, 2), 5);
        assert_eq!(levenshtein("same", "same", 3, 5, 7), 0);
        assert_eq!(levenshtein("abc", "", 1, 2, 1), 6);
    }

    #[test]
    fn levenshtein_matches_exhaustive_oracle_on_short_strings() {
        let alphabet = ['a', 'b'];
        let mut strings = vec![String::new()];
        for len in 1..=3 {
            let mut next = Vec::new();
            for s in strings.iter().filter(|s| s.chars().count() == len - 1) {
                for c in alphabet {
                    next.push(format!("{s}{c}"));
                }
            }
            strings.extend(next);
        }
        for a in &strings {
            for b in &strings {
                let ac: Vec<char> = a.chars().collect();
                let bc: Vec<char> = b.chars().collect();
                for (wi, wd, ws) in [(1, 1, 1), (1, 1, 2), (2, 1, 3)] {
                    assert_eq!(
                        levenshtein(a, b, wi, wd, ws),
                        lev_oracle(&ac, &bc, wi, wd, ws),
                        "{a:?} vs {b:?} weights {wi},{wd},{ws}"
                    );
                }
            }
        }
    }

    #[test]
    fn levenshtein_is_symmetric_with_equal_indel_weights() {
        for (a, b) in [("kitten", "sitting"), ("", "xyz"), ("abba", "baab")] {
            assert_eq!(levenshtein(a, b, 1, 1, 2), levenshtein(b, a, 1, 1, 2));
        }
    }

    #[test]
    fn fuzz_known_values() {
        assert_eq!(fuzz_ratio("kitten", "sitting"), 62);
        assert_eq!(fuzz_ratio("same text", "same text"), 100);
        assert_eq!(fuzz_ratio("", ""), 100);
        assert_eq!(fuzz_ratio("", "a"), 0);
        assert_eq!(fuzz_ratio("abcd", "wxyz"), 0);
    }

    #[test]
    fn fuzz_is_symmetric_and_100_only_on_equality() {
        for (a, b) in [("abc", "abd"), ("hello", "help"), ("x", "")] {
            assert_eq!(fuzz_ratio(a, b), fuzz_ratio(b, a));
            if a != b {
                assert!(fuzz_ratio(a, b) < 100);
            }
        }
    }

    #[test]
    fn score_text_normalizes_both_sides() {
        let s = score_text("hello  world\n", "hello world");
        assert_eq!(s.fuzz, 100);
        assert_eq!(s.levenshtein, 0);
        assert_eq!(s.len_ref, 11);
        assert_eq!(s.len_hyp, 11);
    }

    fn img_of(vals: &[u8], w: usize, h: usize) -> Image {
        Image::new(w, h, 1, vals.to_vec()).unwrap()
    }

    fn pseudo_random_img(w: usize, h: usize, seed: u64) -> Image {
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let data: Vec<u8> = (0..w * h)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 56) as u8
            })
            .collect();
        img_of(&data, w, h)
    }

    #[test]
    fn psnr_known_values() {
        let a = pseudo_random_img(16, 16, 5);
        assert_eq!(psnr(&a, &a).unwrap(), f64::INFINITY);

        // Uniform error of exactly 1 everywhere: MSE = 1.
        let mut b = a.clone();
        for v in b.data_mut() {
            *v = if *v == 255 { 254 } else { *v + 1 };
        }
        let got = psnr(&a, &b).unwrap();
        assert!((got - 20.0 * 255.0f64.log10()).abs() < 1e-9);
        assert!((got - 48.131).abs() < 1e-3);

        let black = Image::filled(8, 8, 1, 0).unwrap();
        let white = Image::filled(8, 8, 1, 255).unwrap();
        assert!((psnr(&black, &white).unwrap() - 0.0).abs() < 1e-12);
    }

    #[test]
    fn psnr_decreases_with_uniform_error() {
        let base = Image::filled(8, 8, 1, 100).unwrap();
        let mut last = f64::INFINITY;
        for err in [1u8, 2, 5, 20, 80] {
            let noisy = Image::filled(8, 8, 1, 100 + err).unwrap();
            let p = psnr(&base, &noisy).unwrap();
            assert!(p < last);
            last = p;
        }
    }

    #[test]
    fn psnr_rejects_mismatched_images() {
        let a = Image::filled(4, 4, 1, 0).unwrap();
        let b = Image::filled(4, 5, 1, 0).unwrap();
        assert!(psnr(&a, &b).is_err());
        let c = Image::filled(4, 4, 3, 0).unwrap();
        assert!(psnr(&a, &c).is_err());
    }

    #[test]
    fn ssim_self_is_one() {
        let a = pseudo_random_img(24, 16, 9);
        assert!((ssim(&a, &a).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ssim_constant_pair_matches_closed_form() {
        // Variance and covariance vanish, leaving the luminance term only.
        for (v1, v2) in [(10u8, 200u8), (0, 255), (100, 101)] {
            let a = Image::filled(16, 16, 1, v1).unwrap();
            let b = Image::filled(16, 16, 1, v2).unwrap();
            let (f1, f2) = (v1 as f64, v2 as f64);
            let want = (2.0 * f1 * f2 + SSIM_C1) / (f1 * f1 + f2 * f2 + SSIM_C1);
            assert!((ssim(&a, &b).unwrap() - want).abs() < 1e-9, "{v1} {v2}");
        }
    }

    #[test]
    fn ssim_is_symmetric() {
        let a = pseudo_random_img(32, 32, 1);
        let b = pseudo_random_img(32, 32, 2);
        let ab = ssim(&a, &b).unwrap();
        let ba = ssim(&b, &a).unwrap();
        assert!((ab - ba).abs() < 1e-9);
        assert!(ab < 1.0);
    }

    #[test]
    fn ssim_rejects_small_images() {
        let a = Image::filled(10, 32, 1, 0).unwrap();
        assert!(matches!(ssim(&a, &a), Err(MetricsError::TooSmall(10, 32))));
    }

    /// Direct 2-D oracle: evaluates the windowed statistics with explicit
    /// double loops and per-axis clamped indices.
    fn ssim_oracle(a: &Image, b: &Image) -> f64 {
        let (w, h) = (a.width(), a.height());
        let kernel = ssim_kernel();
        let r = SSIM_WINDOW / 2;
        let x: Vec<f64> = a.to_gray().data().iter().map(|&v| v as f64).collect();
        let y: Vec<f64> = b.to_gray().data().iter().map(|&v| v as f64).collect();
        let mut total = 0.0;
        for py in 0..h {
            for px in 0..w {
                let (mut mx, mut my, mut exx, mut eyy, mut exy) = (0.0, 0.0, 0.0, 0.0, 0.0);
                for (i, &ki) in kernel.iter().enumerate() {
                    let sy = (py + i).saturating_sub(r).min(h - 1);
                    for (j, &kj) in kernel.iter().enumerate() {
                        let sx = (px + j).saturating_sub(r).min(w - 1);
                        let wgt = ki * kj;
                        let (u, v) = (x[sy * w + sx], y[sy * w + sx]);
                        mx += wgt * u;
                        my += wgt * v;
                        exx += wgt * u * u;
                        eyy += wgt * v * v;
                        exy += wgt * u * v;
                    }
                }
                let (vx, vy, cov) = (exx - mx * mx, eyy - my * my, exy - mx * my);
                let num = (2.0 * mx * my + SSIM_C1) * (2.0 * cov + SSIM_C2);
                let den = (mx * mx + my * my + SSIM_C1) * (vx + vy + SSIM_C2);
                total += num / den;
            }
        }
        total / (w * h) as f64
    }

    #[test]
    fn ssim_matches_direct_window_oracle() {
        let a = pseudo_random_img(32, 32, 33);
        let b = pseudo_random_img(32, 32, 44);
        assert!((ssim(&a, &b).unwrap() - ssim_oracle(&a, &b)).abs() < 1e-6);
        // Also on a structured pair: ramp vs slightly shifted ramp.
        let ramp = Image::new(32, 16, 1, (0..32 * 16).map(|i| (i % 256) as u8).collect()).unwrap();
        let mut shifted = ramp.clone();
        for v in shifted.data_mut() {
            *v = v.saturating_add(3);
        }
        assert!((ssim(&ramp, &shifted).unwrap() - ssim_oracle(&ramp, &shifted)).abs() < 1e-6);
    }

    #[test]
    fn rgb_images_are_scored_on_luma() {
        let a = pseudo_random_img(16, 16, 7).to_rgb();
        let b = pseudo_random_img(16, 16, 8).to_rgb();
        let got = ssim(&a, &b).unwrap();
        let gray = ssim(&a.to_gray(), &b.to_gray()).unwrap();
        assert!((got - gray).abs() < 1e-12);
    }
}
