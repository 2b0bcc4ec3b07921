//! 8-bit raster images: the currency of the rendering, degradation, and
//! scoring stages.
//!
//! Images are immutable-after-construction byte buffers in row-major order,
//! grayscale (1 channel) or RGB (3 channels), with an optional dpi tag that
//! rendering attaches and the mock OCR consumes. I/O covers PNG for real
//! fixtures and ASCII PGM for human-inspectable ones.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::tensor::{Shape, Tensor};

#[derive(Debug, Error)]
pub enum ImageError {
    #[error("image geometry invalid: {0}")]
    Geometry(String),
    #[error("channel count {0} unsupported (must be 1 or 3)")]
    Channels(usize),
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("png codec failure on {path}: {source}")]
    Png {
        path: String,
        #[source]
        source: image::ImageError,
    },
    #[error("pgm parse failure on {path}: {detail}")]
    Pgm { path: String, detail: String },
}

fn io_err(path: &Path, source: std::io::Error) -> ImageError {
    ImageError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Rounds half-away-from-zero, the rounding rule used for every float-to-u8
/// quantization in this crate so golden files are portable.
pub fn round_half_away(v: f64) -> f64 {
    if v >= 0.0 {
        (v + 0.5).floor()
    } else {
        (v - 0.5).ceil()
    }
}

/// Clamps to the 8-bit sample range and quantizes with half-away rounding.
pub fn quantize_u8(v: f64) -> u8 {
    round_half_away(v.clamp(0.0, 255.0)) as u8
}

/// 8-bit grayscale or RGB image, row-major, interleaved samples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    channels: usize,
    data: Vec<u8>,
    /// Render resolution tag; survives in-process transforms that preserve
    /// the page geometry, absent on images of unknown provenance.
    pub dpi: Option<u32>,
}

impl Image {
    pub fn new(
        width: usize,
        height: usize,
        channels: usize,
        data: Vec<u8>,
    ) -> Result<Self, ImageError> {
        if channels != 1 && channels != 3 {
            return Err(ImageError::Channels(channels));
        }
        if width == 0 || height == 0 {
            return Err(ImageError::Geometry(format!(
                "dimensions {}x{} must be positive",
                width, height
            )));
        }
        let want = width * height * channels;
        if data.len() != want {
            return Err(ImageError::Geometry(format!(
                "{}x{}x{} needs {} samples, got {}",
                width, height, channels, want, data.len()
            )));
        }
        Ok(Image {
            width,
            height,
            channels,
            data,
            dpi: None,
        })
    }

    pub fn filled(width: usize, height: usize, channels: usize, value: u8) -> Result<Self, ImageError> {
        Image::new(width, height, channels, vec![value; width * height * channels])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    #[inline]
    pub fn sample(&self, x: usize, y: usize, c: usize) -> u8 {
        debug_assert!(x < self.width && y < self.height && c < self.channels);
        self.data[(y * self.width + x) * self.channels + c]
    }

    #[inline]
    pub fn set_sample(&mut self, x: usize, y: usize, c: usize, v: u8) {
        debug_assert!(x < self.width && y < self.height && c < self.channels);
        self.data[(y * self.width + x) * self.channels + c] = v;
    }

    /// Luma conversion with the Rec. 601 weights used by the metrics.
    /// Grayscale images are returned unchanged.
    pub fn to_gray(&self) -> Image {
        if self.channels == 1 {
            return self.clone();
        }
        let mut data = Vec::with_capacity(self.width * self.height);
        for px in self.data.chunks_exact(3) {
            let y = 0.299 * px[0] as f64 + 0.587 * px[1] as f64 + 0.114 * px[2] as f64;
            data.push(quantize_u8(y));
        }
        let mut out = Image::new(self.width, self.height, 1, data).expect("same geometry");
        out.dpi = self.dpi;
        out
    }

    /// Expands grayscale to RGB by sample replication; RGB returned as is.
    pub fn to_rgb(&self) -> Image {
        if self.channels == 3 {
            return self.clone();
        }
        let mut data = Vec::with_capacity(self.width * self.height * 3);
        for &v in &self.data {
            data.extend_from_slice(&[v, v, v]);
        }
        let mut out = Image::new(self.width, self.height, 3, data).expect("same geometry");
        out.dpi = self.dpi;
        out
    }

    /// Packs the image into a `(1, channels, h, w)` tensor with samples
    /// scaled to `[0, 1]`, the input convention of the model graphs.
    pub fn to_tensor(&self) -> Tensor<f32> {
        let shape = Shape::new(1, self.channels, self.height, self.width);
        Tensor::from_fn(shape, |_, c, y, x| self.sample(x, y, c) as f32 / 255.0)
    }

    /// Inverse of [`Image::to_tensor`]: clamps to `[0, 1]`, scales to 255,
    /// and quantizes half-away-from-zero. Takes batch item 0.
    pub fn from_tensor(t: &Tensor<f32>) -> Result<Image, ImageError> {
        let s = t.shape();
        if s.c != 1 && s.c != 3 {
            return Err(ImageError::Channels(s.c));
        }
        let mut img = Image::filled(s.w, s.h, s.c, 0)?;
        for c in 0..s.c {
            for y in 0..s.h {
                for x in 0..s.w {
                    let v = (t.at(0, c, y, x) as f64).clamp(0.0, 1.0) * 255.0;
                    img.set_sample(x, y, c, round_half_away(v) as u8);
                }
            }
        }
        Ok(img)
    }

    pub fn save_png(&self, path: &Path) -> Result<(), ImageError> {
        let color = if self.channels == 1 {
            image::ExtendedColorType::L8
        } else {
            image::ExtendedColorType::Rgb8
        };
        image::save_buffer_with_format(
            path,
            &self.data,
            self.width as u32,
            self.height as u32,
            color,
            image::ImageFormat::Png,
        )
        .map_err(|source| ImageError::Png {
            path: path.display().to_string(),
            source,
        })
    }

    /// Loads an 8-bit PNG. Gray stays single-channel; anything with color
    /// is flattened to RGB. The dpi tag is unknown for loaded files.
    pub fn load_png(path: &Path) -> Result<Image, ImageError> {
        let dynamic = image::open(path).map_err(|source| ImageError::Png {
            path: path.display().to_string(),
            source,
        })?;
        let img = match dynamic {
            image::DynamicImage::ImageLuma8(g) => {
                let (w, h) = g.dimensions();
                Image::new(w as usize, h as usize, 1, g.into_raw())?
            }
            image::DynamicImage::ImageLuma16(_) | image::DynamicImage::ImageLumaA8(_) => {
                let g = dynamic.to_luma8();
                let (w, h) = g.dimensions();
                Image::new(w as usize, h as usize, 1, g.into_raw())?
            }
            other => {
                let rgb = other.to_rgb8();
                let (w, h) = rgb.dimensions();
                Image::new(w as usize, h as usize, 3, rgb.into_raw())?
            }
        };
        Ok(img)
    }

    /// Writes grayscale as ASCII PGM (P2). RGB inputs are luma-converted
    /// first; PGM is a debugging format here, not a fidelity-critical one.
    pub fn save_pgm(&self, path: &Path) -> Result<(), ImageError> {
        let gray = self.to_gray();
        let mut text = format!("P2\n{} {}\n255\n", gray.width, gray.height);
        for row in gray.data.chunks(gray.width) {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            text.push_str(&line.join(" "));
            text.push('\n');
        }
        let mut f = fs::File::create(path).map_err(|e| io_err(path, e))?;
        f.write_all(text.as_bytes()).map_err(|e| io_err(path, e))
    }

    pub fn load_pgm(path: &Path) -> Result<Image, ImageError> {
        let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
        let parse = |detail: &str| ImageError::Pgm {
            path: path.display().to_string(),
            detail: detail.to_string(),
        };
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(|l| l.split_whitespace());
        if tokens.next() != Some("P2") {
            return Err(parse("missing P2 magic"));
        }
        let mut next_num = |what: &str| -> Result<usize, ImageError> {
            tokens
                .next()
                .ok_or_else(|| parse(&format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|_| parse(&format!("bad {what}")))
        };
        let w = next_num("width")?;
        let h = next_num("height")?;
        let maxval = next_num("maxval")?;
        if maxval != 255 {
            return Err(parse("only maxval 255 supported"));
        }
        let mut data = Vec::with_capacity(w * h);
        for _ in 0..w * h {
            let v = next_num("sample")?;
            if v > 255 {
                return Err(parse("sample out of range"));
            }
            data.push(v as u8);
        }
        Image::new(w, h, 1, data)
    }
}
