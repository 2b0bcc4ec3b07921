//! Text super-resolution OCR benchmarking toolkit.
//!
//! The pipeline renders text pages with an embedded bitmap font, degrades
//! them to low resolution, restores them with super-resolution networks (or
//! a bicubic baseline), runs OCR on the result, and scores OCR fidelity with
//! fuzzy string matching plus PSNR/SSIM image metrics.
//!
//! Crates and modules map onto the pipeline stages:
//!
//! - [`tensor`]: dense 4-D tensor kernels (conv, activations, pixel shuffle)
//!   with reference loop semantics precise enough to gradient-check.
//! - [`models`]: builders for the SRGAN/ESRGAN/EDSR architecture presets, a
//!   forward executor, and a portable weight container.
//! - [`train`]: losses (L1, GAN, relativistic-average GAN), SGD training
//!   steps with reverse-mode gradients, and finite-difference verification.
//! - [`raster`] / [`font`] / [`render`]: 8-bit images, the embedded bitmap
//!   font, and deterministic text-page rendering.
//! - [`degrade`]: resampling kernels, Gaussian blur, and seeded noise.
//! - [`metrics`]: PSNR, SSIM, weighted Levenshtein, and fuzz ratio.
//! - [`ocr`]: an external-engine subprocess client and a hermetic mock OCR
//!   that template-matches the embedded font.
//! - [`bench`]: experiment-matrix orchestration, caching, and reports.

pub mod bench;
pub mod corpus;
pub mod degrade;
pub mod font;
pub mod metrics;
pub mod models;
pub mod ocr;
pub mod raster;
pub mod render;
pub mod tensor;
pub mod train;

pub use raster::Image;
pub use tensor::Tensor;
