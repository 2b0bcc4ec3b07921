//! Dense 4-D tensors and the forward kernels used by the model graphs.
//!
//! Everything here is deliberately loop-based. The kernels define reference
//! semantics for the whole crate: per output element the summation order is
//! fixed (kernel window row-major, input channels innermost), so results are
//! bit-identical run to run and independent of worker count. Parallel paths
//! only split work across output elements, never inside one accumulation.
//!
//! Ops are generic over the element type so the same code runs in `f32` for
//! production and in `f64` for gradient checking.

pub mod grad;

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

/// Element type for tensor math: `f32` in production, `f64` for checks.
pub trait Scalar: num_traits::Float + fmt::Debug + Send + Sync + 'static {
    /// Lossy conversion from `f64`, used for hyperparameter constants.
    fn from_f64(v: f64) -> Self {
        num_traits::cast(v).expect("finite f64 converts to any float type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("{op}: shape mismatch: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },
    #[error("{op}: invalid specification: {detail}")]
    InvalidSpec { op: &'static str, detail: String },
    #[error("{op}: non-finite value in input")]
    NonFinite { op: &'static str },
}

fn shape_err(op: &'static str, detail: impl Into<String>) -> TensorError {
    TensorError::ShapeMismatch {
        op,
        detail: detail.into(),
    }
}

fn spec_err(op: &'static str, detail: impl Into<String>) -> TensorError {
    TensorError::InvalidSpec {
        op,
        detail: detail.into(),
    }
}

/// Logical dimensions of a [`Tensor`], in `(batch, channels, height, width)`
/// order. Data is stored row-major with `w` fastest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub n: usize,
    pub c: usize,
    pub h: usize,
    pub w: usize,
}

impl Shape {
    pub fn new(n: usize, c: usize, h: usize, w: usize) -> Self {
        Shape { n, c, h, w }
    }

    pub fn len(&self) -> usize {
        self.n * self.c * self.h * self.w
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.n, self.c, self.h, self.w)
    }
}

/// Dense 4-D tensor in NCHW layout.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T = f32> {
    shape: Shape,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    /// Wraps existing data; `data.len()` must equal the shape volume.
    pub fn new(shape: Shape, data: Vec<T>) -> Result<Self, TensorError> {
        if data.len() != shape.len() {
            return Err(shape_err(
                "Tensor::new",
                format!("shape {} holds {} elements, got {}", shape, shape.len(), data.len()),
            ));
        }
        Ok(Tensor { shape, data })
    }

    pub fn zeros(shape: Shape) -> Self {
        Tensor {
            shape,
            data: vec![T::zero(); shape.len()],
        }
    }

    pub fn filled(shape: Shape, value: T) -> Self {
        Tensor {
            shape,
            data: vec![value; shape.len()],
        }
    }

    /// Builds a tensor by evaluating `f(n, c, y, x)` at every position.
    pub fn from_fn(shape: Shape, mut f: impl FnMut(usize, usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(shape.len());
        for n in 0..shape.n {
            for c in 0..shape.c {
                for y in 0..shape.h {
                    for x in 0..shape.w {
                        data.push(f(n, c, y, x));
                    }
                }
            }
        }
        Tensor { shape, data }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    #[inline]
    fn index(&self, n: usize, c: usize, y: usize, x: usize) -> usize {
        ((n * self.shape.c + c) * self.shape.h + y) * self.shape.w + x
    }

    #[inline]
    pub fn at(&self, n: usize, c: usize, y: usize, x: usize) -> T {
        debug_assert!(n < self.shape.n && c < self.shape.c && y < self.shape.h && x < self.shape.w);
        self.data[self.index(n, c, y, x)]
    }

    #[inline]
    pub fn at_mut(&mut self, n: usize, c: usize, y: usize, x: usize) -> &mut T {
        debug_assert!(n < self.shape.n && c < self.shape.c && y < self.shape.h && x < self.shape.w);
        let i = self.index(n, c, y, x);
        &mut self.data[i]
    }

    /// Reinterprets the buffer under a new shape of equal volume.
    pub fn reshaped(&self, shape: Shape) -> Result<Self, TensorError> {
        if shape.len() != self.data.len() {
            return Err(shape_err(
                "Tensor::reshaped",
                format!("cannot view {} elements as {}", self.data.len(), shape),
            ));
        }
        Ok(Tensor {
            shape,
            data: self.data.clone(),
        })
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Tensor {
            shape: self.shape,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Converts the element type, e.g. `f32` weights to `f64` for checking.
    pub fn cast<U: Scalar>(&self) -> Tensor<U> {
        Tensor {
            shape: self.shape,
            data: self
                .data
                .iter()
                .map(|&v| num_traits::cast(v).expect("float-to-float cast"))
                .collect(),
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// Convolution layer hyperparameters. Square kernels only; same zero
/// padding on all four sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvSpec {
    pub in_channels: usize,
    pub out_channels: usize,
    pub kernel_size: usize,
    pub stride: usize,
    pub padding: usize,
    pub bias: bool,
}

impl ConvSpec {
    pub fn new(
        in_channels: usize,
        out_channels: usize,
        kernel_size: usize,
        stride: usize,
        padding: usize,
        bias: bool,
    ) -> Self {
        ConvSpec {
            in_channels,
            out_channels,
            kernel_size,
            stride,
            padding,
            bias,
        }
    }

    /// Stride-1 convolution that preserves spatial size for odd kernels,
    /// with bias. This is the shape used by nearly every layer in the
    /// model graphs.
    pub fn same(in_channels: usize, out_channels: usize, kernel_size: usize) -> Self {
        ConvSpec::new(in_channels, out_channels, kernel_size, 1, kernel_size / 2, true)
    }

    fn validate(&self) -> Result<(), TensorError> {
        if self.kernel_size == 0 {
            return Err(spec_err("conv2d", "kernel size must be at least 1"));
        }
        if self.stride == 0 {
            return Err(spec_err("conv2d", "stride must be at least 1"));
        }
        if self.in_channels == 0 || self.out_channels == 0 {
            return Err(spec_err("conv2d", "channel counts must be at least 1"));
        }
        Ok(())
    }

    /// Output extent along one axis, or `None` when the padded input is
    /// smaller than the kernel.
    pub fn out_extent(&self, input: usize) -> Option<usize> {
        let padded = input + 2 * self.padding;
        if padded < self.kernel_size {
            None
        } else {
            Some((padded - self.kernel_size) / self.stride + 1)
        }
    }

    /// Weight tensor shape for this layer.
    pub fn weight_shape(&self) -> Shape {
        Shape::new(self.out_channels, self.in_channels, self.kernel_size, self.kernel_size)
    }
}

/// Pointwise nonlinearities. Slopes are fixed hyperparameters of the graph,
/// not trainable weights.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Activation {
    Relu,
    /// LeakyReLU with the given negative-half slope.
    LeakyRelu(f64),
    /// PReLU evaluated at a fixed slope shared across channels.
    PRelu(f64),
    Sigmoid,
}

impl Activation {
    #[inline]
    pub fn eval<T: Scalar>(self, v: T) -> T {
        match self {
            Activation::Relu => {
                if v > T::zero() {
                    v
                } else {
                    T::zero()
                }
            }
            Activation::LeakyRelu(a) | Activation::PRelu(a) => {
                if v > T::zero() {
                    v
                } else {
                    v * T::from_f64(a)
                }
            }
            Activation::Sigmoid => {
                let one = T::one();
                // Evaluate via the sign-split form so large |v| cannot
                // overflow exp.
                if v >= T::zero() {
                    one / (one + (-v).exp())
                } else {
                    let e = v.exp();
                    e / (one + e)
                }
            }
        }
    }

    /// Derivative with respect to the pre-activation input.
    #[inline]
    pub fn derivative<T: Scalar>(self, v: T) -> T {
        match self {
            Activation::Relu => {
                if v > T::zero() {
                    T::one()
                } else {
                    T::zero()
                }
            }
            Activation::LeakyRelu(a) | Activation::PRelu(a) => {
                if v > T::zero() {
                    T::one()
                } else {
                    T::from_f64(a)
                }
            }
            Activation::Sigmoid => {
                let s = self.eval(v);
                s * (T::one() - s)
            }
        }
    }
}

impl fmt::Display for Activation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Activation::Relu => write!(f, "relu"),
            Activation::LeakyRelu(a) => write!(f, "leaky_relu({a})"),
            Activation::PRelu(a) => write!(f, "prelu({a})"),
            Activation::Sigmoid => write!(f, "sigmoid"),
        }
    }
}

/// Direct 2-D convolution (cross-correlation, as is conventional for conv
/// layers) with zero padding.
///
/// - `x`: `(n, c_in, h, w)`
/// - `weights`: `(c_out, c_in, k, k)`
/// - `bias`: length `c_out`, added after accumulation
///
/// Each output element accumulates taps with the kernel window traversed
/// row-major and input channels innermost; the bias is added last. That
/// order is part of the contract: tests compare against an independent
/// loop nest for exact equality.
pub fn conv2d<T: Scalar>(
    x: &Tensor<T>,
    weights: &Tensor<T>,
    bias: Option<&[T]>,
    spec: &ConvSpec,
) -> Result<Tensor<T>, TensorError> {
    spec.validate()?;
    let xs = x.shape();
    let ws = weights.shape();
    if ws != spec.weight_shape() {
        return Err(shape_err(
            "conv2d",
            format!("weights {} do not match spec shape {}", ws, spec.weight_shape()),
        ));
    }
    if xs.c != spec.in_channels {
        return Err(shape_err(
            "conv2d",
            format!("spec expects {} input channels, input has {}", spec.in_channels, xs.c),
        ));
    }
    if bias.is_some() != spec.bias {
        return Err(spec_err(
            "conv2d",
            format!("spec bias flag is {} but bias presence disagrees", spec.bias),
        ));
    }
    if let Some(b) = bias {
        if b.len() != ws.n {
            return Err(shape_err(
                "conv2d",
                format!("bias length {} does not match {} output channels", b.len(), ws.n),
            ));
        }
    }
    let k = spec.kernel_size;
    let (out_h, out_w) = match (spec.out_extent(xs.h), spec.out_extent(xs.w)) {
        (Some(h), Some(w)) => (h, w),
        _ => {
            return Err(shape_err(
                "conv2d",
                format!("input {} smaller than {}x{} kernel after padding", xs, k, k),
            ))
        }
    };

    let out_shape = Shape::new(xs.n, ws.n, out_h, out_w);
    let mut out = vec![T::zero(); out_shape.len()];
    let ckk = xs.c * k * k;
    let xd = x.data();
    let wd = weights.data();

    // Weights repacked so the tap axis runs (ky, kx, ic) — the documented
    // accumulation order — while inner products traverse a contiguous patch
    // matrix. Padded taps contribute exact zeros, which cannot change an
    // IEEE sum, so results are identical to the skip-out-of-bounds loop.
    let mut wmat = vec![T::zero(); ws.n * ckk];
    for oc in 0..ws.n {
        let row = &mut wmat[oc * ckk..][..ckk];
        for ky in 0..k {
            for kx in 0..k {
                for ic in 0..xs.c {
                    row[(ky * k + kx) * xs.c + ic] = wd[((oc * xs.c + ic) * k + ky) * k + kx];
                }
            }
        }
    }

    // Output rows are processed in tiles that bound the patch matrix to a
    // few megabytes regardless of image size.
    let target = (4usize << 20) / std::mem::size_of::<T>();
    let tile_rows = (target / (ckk * out_w).max(1)).clamp(1, out_h);
    let mut col = vec![T::zero(); ckk * tile_rows * out_w];
    let mut tout = vec![T::zero(); ws.n * tile_rows * out_w];

    for n in 0..xs.n {
        let mut ty = 0usize;
        while ty < out_h {
            let rows = tile_rows.min(out_h - ty);
            let cols = rows * out_w;

            // Patch matrix: row q holds tap (ky, kx, ic) for every output
            // position of the tile; out-of-image taps are zero.
            for ky in 0..k {
                for kx in 0..k {
                    for ic in 0..xs.c {
                        let q = (ky * k + kx) * xs.c + ic;
                        for oy in 0..rows {
                            let iy = ((ty + oy) * spec.stride + ky) as isize
                                - spec.padding as isize;
                            let dst = &mut col[q * cols + oy * out_w..][..out_w];
                            if iy < 0 || iy >= xs.h as isize {
                                dst.fill(T::zero());
                                continue;
                            }
                            let src = &xd[((n * xs.c + ic) * xs.h + iy as usize) * xs.w..]
                                [..xs.w];
                            if spec.stride == 1 {
                                // ix = ox + kx - padding must land in [0, w).
                                let lo = spec.padding.saturating_sub(kx).min(out_w);
                                let hi = (xs.w as isize + spec.padding as isize
                                    - kx as isize)
                                    .clamp(0, out_w as isize)
                                    as usize;
                                dst[..lo].fill(T::zero());
                                if lo < hi {
                                    dst[lo..hi].copy_from_slice(
                                        &src[lo + kx - spec.padding..hi + kx - spec.padding],
                                    );
                                }
                                dst[hi.max(lo)..].fill(T::zero());
                            } else {
                                for (ox, d) in dst.iter_mut().enumerate() {
                                    let ix = (ox * spec.stride + kx) as isize
                                        - spec.padding as isize;
                                    *d = if ix < 0 || ix >= xs.w as isize {
                                        T::zero()
                                    } else {
                                        src[ix as usize]
                                    };
                                }
                            }
                        }
                    }
                }
            }

            // One axpy pass per tap: every output element still accumulates
            // its taps in (ky, kx, ic) order with the bias added last, so
            // parallelism over output channels cannot change results.
            tout[..ws.n * cols]
                .par_chunks_mut(cols)
                .enumerate()
                .for_each(|(oc, orow)| {
                    orow.fill(T::zero());
                    let wrow = &wmat[oc * ckk..][..ckk];
                    for (q, &wq) in wrow.iter().enumerate() {
                        let crow = &col[q * cols..][..cols];
                        for (o, &c) in orow.iter_mut().zip(crow) {
                            *o = *o + wq * c;
                        }
                    }
                    if let Some(b) = bias {
                        for o in orow.iter_mut() {
                            *o = *o + b[oc];
                        }
                    }
                });

            for oc in 0..ws.n {
                out[((n * ws.n + oc) * out_h + ty) * out_w..][..cols]
                    .copy_from_slice(&tout[oc * cols..][..cols]);
            }
            ty += rows;
        }
    }

    Tensor::new(out_shape, out)
}

/// Applies a pointwise nonlinearity. Rejects non-finite inputs so NaNs
/// cannot silently travel through a graph.
pub fn activation<T: Scalar>(kind: Activation, x: &Tensor<T>) -> Result<Tensor<T>, TensorError> {
    if !x.all_finite() {
        return Err(TensorError::NonFinite { op: "activation" });
    }
    Ok(x.map(|v| kind.eval(v)))
}

/// Batch normalization in inference form: per-channel affine with fixed
/// statistics. `y = gamma * (x - mean) / sqrt(var + eps) + beta`.
pub fn batch_norm_infer<T: Scalar>(
    x: &Tensor<T>,
    gamma: &[T],
    beta: &[T],
    mean: &[T],
    var: &[T],
    eps: T,
) -> Result<Tensor<T>, TensorError> {
    let c = x.shape().c;
    for (name, v) in [("gamma", gamma), ("beta", beta), ("mean", mean), ("var", var)] {
        if v.len() != c {
            return Err(shape_err(
                "batch_norm_infer",
                format!("{} has length {}, expected {} channels", name, v.len(), c),
            ));
        }
    }
    if var.iter().any(|&v| v + eps <= T::zero()) {
        return Err(spec_err("batch_norm_infer", "var + eps must be positive".to_string()));
    }
    let s = x.shape();
    let mut out = x.clone();
    for n in 0..s.n {
        for ci in 0..s.c {
            let inv_std = T::one() / (var[ci] + eps).sqrt();
            for y in 0..s.h {
                for xx in 0..s.w {
                    let v = (x.at(n, ci, y, xx) - mean[ci]) * inv_std * gamma[ci] + beta[ci];
                    *out.at_mut(n, ci, y, xx) = v;
                }
            }
        }
    }
    Ok(out)
}

/// Rearranges `(n, c*r^2, h, w)` into `(n, c, h*r, w*r)`.
///
/// Output pixel `(co, y, x)` reads input channel
/// `co*r^2 + (y mod r)*r + (x mod r)` at `(y/r, x/r)`: channel blocks of
/// size `r^2` unfold row-major into each output cell.
pub fn pixel_shuffle<T: Scalar>(x: &Tensor<T>, r: usize) -> Result<Tensor<T>, TensorError> {
    if r == 0 {
        return Err(spec_err("pixel_shuffle", "upscale factor must be at least 1"));
    }
    let s = x.shape();
    let r2 = r * r;
    if s.c % r2 != 0 {
        return Err(shape_err(
            "pixel_shuffle",
            format!("{} channels not divisible by r^2 = {}", s.c, r2),
        ));
    }
    let out_shape = Shape::new(s.n, s.c / r2, s.h * r, s.w * r);
    let mut out = Tensor::zeros(out_shape);
    for n in 0..out_shape.n {
        for co in 0..out_shape.c {
            for y in 0..out_shape.h {
                for x_ in 0..out_shape.w {
                    let ci = co * r2 + (y % r) * r + (x_ % r);
                    *out.at_mut(n, co, y, x_) = x.at(n, ci, y / r, x_ / r);
                }
            }
        }
    }
    Ok(out)
}

/// Inverse of [`pixel_shuffle`]: `(n, c, h*r, w*r)` back to `(n, c*r^2, h, w)`.
pub fn space_to_depth<T: Scalar>(x: &Tensor<T>, r: usize) -> Result<Tensor<T>, TensorError> {
    if r == 0 {
        return Err(spec_err("space_to_depth", "factor must be at least 1"));
    }
    let s = x.shape();
    if s.h % r != 0 || s.w % r != 0 {
        return Err(shape_err(
            "space_to_depth",
            format!("spatial dims of {} not divisible by {}", s, r),
        ));
    }
    let out_shape = Shape::new(s.n, s.c * r * r, s.h / r, s.w / r);
    let mut out = Tensor::zeros(out_shape);
    for n in 0..s.n {
        for ci in 0..s.c {
            for y in 0..s.h {
                for x_ in 0..s.w {
                    let co = ci * r * r + (y % r) * r + (x_ % r);
                    *out.at_mut(n, co, y / r, x_ / r) = x.at(n, ci, y, x_);
                }
            }
        }
    }
    Ok(out)
}

/// Elementwise sum of two tensors of identical shape.
pub fn elementwise_add<T: Scalar>(a: &Tensor<T>, b: &Tensor<T>) -> Result<Tensor<T>, TensorError> {
    if a.shape() != b.shape() {
        return Err(shape_err(
            "elementwise_add",
            format!("{} vs {}", a.shape(), b.shape()),
        ));
    }
    let data = a
        .data()
        .iter()
        .zip(b.data())
        .map(|(&x, &y)| x + y)
        .collect();
    Tensor::new(a.shape(), data)
}

/// Multiplies every element by a constant.
pub fn scale<T: Scalar>(x: &Tensor<T>, alpha: T) -> Tensor<T> {
    x.map(|v| v * alpha)
}

/// Fully connected layer. The per-batch input is flattened in storage order
/// to length `m`; `weights` is `(k, m, 1, 1)`, output `(n, k, 1, 1)`.
///
/// Accumulation runs over `m` in storage order, bias added last.
pub fn dense<T: Scalar>(
    x: &Tensor<T>,
    weights: &Tensor<T>,
    bias: Option<&[T]>,
) -> Result<Tensor<T>, TensorError> {
    let xs = x.shape();
    let ws = weights.shape();
    let m = xs.c * xs.h * xs.w;
    if ws.c != m || ws.h != 1 || ws.w != 1 {
        return Err(shape_err(
            "dense",
            format!("weights {} do not match flattened input length {}", ws, m),
        ));
    }
    let k = ws.n;
    if let Some(b) = bias {
        if b.len() != k {
            return Err(shape_err(
                "dense",
                format!("bias length {} does not match {} outputs", b.len(), k),
            ));
        }
    }
    let mut out = Tensor::zeros(Shape::new(xs.n, k, 1, 1));
    for n in 0..xs.n {
        let row = &x.data()[n * m..(n + 1) * m];
        for o in 0..k {
            let wrow = &weights.data()[o * m..(o + 1) * m];
            let mut acc = T::zero();
            for i in 0..m {
                acc = acc + row[i] * wrow[i];
            }
            if let Some(b) = bias {
                acc = acc + b[o];
            }
            *out.at_mut(n, o, 0, 0) = acc;
        }
    }
    Ok(out)
}

/// Concatenates tensors along the channel axis. Batch and spatial dims must
/// agree across all parts.
pub fn concat_channels<T: Scalar>(parts: &[&Tensor<T>]) -> Result<Tensor<T>, TensorError> {
    let first = parts
        .first()
        .ok_or_else(|| spec_err("concat_channels", "needs at least one input"))?;
    let base = first.shape();
    let mut total_c = 0;
    for p in parts {
        let s = p.shape();
        if s.n != base.n || s.h != base.h || s.w != base.w {
            return Err(shape_err(
                "concat_channels",
                format!("{} incompatible with {}", s, base),
            ));
        }
        total_c += s.c;
    }
    let out_shape = Shape::new(base.n, total_c, base.h, base.w);
    let mut data = Vec::with_capacity(out_shape.len());
    let plane = base.h * base.w;
    for n in 0..base.n {
        for p in parts {
            let c = p.shape().c;
            let start = n * c * plane;
            data.extend_from_slice(&p.data()[start..start + c * plane]);
        }
    }
    Tensor::new(out_shape, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(shape: Shape, data: Vec<f32>) -> Tensor {
        Tensor::new(shape, data).unwrap()
    }

    /// Independent convolution oracle: a plain quadruple loop written
    /// separately from the production kernel, with the same mandated
    /// accumulation order (kernel row-major, input channels innermost).
    fn conv2d_oracle(x: &Tensor, w: &Tensor, bias: Option<&[f32]>, spec: &ConvSpec) -> Tensor {
        let xs = x.shape();
        let ws = w.shape();
        let out_h = spec.out_extent(xs.h).unwrap();
        let out_w = spec.out_extent(xs.w).unwrap();
        let mut out = Tensor::zeros(Shape::new(xs.n, ws.n, out_h, out_w));
        for n in 0..xs.n {
            for oc in 0..ws.n {
                for oy in 0..out_h {
                    for ox in 0..out_w {
                        let mut acc = 0.0f32;
                        for ky in 0..spec.kernel_size {
                            for kx in 0..spec.kernel_size {
                                for ic in 0..xs.c {
                                    let iy = (oy * spec.stride + ky) as isize - spec.padding as isize;
                                    let ix = (ox * spec.stride + kx) as isize - spec.padding as isize;
                                    if iy >= 0 && ix >= 0 && (iy as usize) < xs.h && (ix as usize) < xs.w {
                                        acc += x.at(n, ic, iy as usize, ix as usize)
                                            * w.at(oc, ic, ky, kx);
                                    }
                                }
                            }
                        }
                        if let Some(b) = bias {
                            acc += b[oc];
                        }
                        *out.at_mut(n, oc, oy, ox) = acc;
                    }
                }
            }
        }
        out
    }

    fn pseudo_random(shape: Shape, seed: u64) -> Tensor {
        // Tiny LCG; good enough to generate fixed test data.
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        Tensor::from_fn(shape, |_, _, _, _| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as f32 / (1u64 << 31) as f32) - 0.5
        })
    }

    #[test]
    fn conv_identity_kernel_preserves_input() {
        let x = pseudo_random(Shape::new(1, 1, 5, 5), 3);
        let mut w = Tensor::zeros(Shape::new(1, 1, 3, 3));
        *w.at_mut(0, 0, 1, 1) = 1.0;
        let spec = ConvSpec::new(1, 1, 3, 1, 1, false);
        let y = conv2d(&x, &w, None, &spec).unwrap();
        assert_eq!(y, x);
    }

    #[test]
    fn conv_all_ones_sums_window() {
        // 2x2 input [[1,2],[3,4]], 2x2 kernel of ones, no padding: one
        // output element equal to 10.
        let x = t(Shape::new(1, 1, 2, 2), vec![1.0, 2.0, 3.0, 4.0]);
        let w = Tensor::filled(Shape::new(1, 1, 2, 2), 1.0);
        let y = conv2d(&x, &w, None, &ConvSpec::new(1, 1, 2, 1, 0, false)).unwrap();
        assert_eq!(y.shape(), Shape::new(1, 1, 1, 1));
        assert_eq!(y.data(), &[10.0]);
    }

    #[test]
    fn conv_matches_oracle_exactly() {
        for (seed, (cin, cout, k, s, p, h, w)) in [
            (1u64, (1usize, 1usize, 3usize, 1usize, 1usize, 6usize, 6usize)),
            (2, (3, 4, 3, 1, 1, 7, 5)),
            (3, (2, 3, 4, 2, 1, 9, 8)),
            (4, (4, 2, 1, 1, 0, 4, 4)),
            (5, (2, 5, 3, 2, 0, 8, 8)),
            (6, (3, 3, 5, 1, 2, 6, 7)),
        ] {
            let x = pseudo_random(Shape::new(2, cin, h, w), seed);
            let weights = pseudo_random(Shape::new(cout, cin, k, k), seed + 100);
            let bias: Vec<f32> = (0..cout).map(|i| i as f32 * 0.1 - 0.2).collect();
            let spec = ConvSpec::new(cin, cout, k, s, p, true);
            let got = conv2d(&x, &weights, Some(&bias), &spec).unwrap();
            let want = conv2d_oracle(&x, &weights, Some(&bias), &spec);
            // Bit-exact: same element order in both loops.
            assert_eq!(got, want, "config {:?}", (cin, cout, k, s, p, h, w));
        }
    }

    #[test]
    fn conv_is_linear_in_input() {
        let spec = ConvSpec::new(2, 3, 3, 1, 1, false);
        let w = pseudo_random(Shape::new(3, 2, 3, 3), 11);
        let a = pseudo_random(Shape::new(1, 2, 6, 6), 12);
        let b = pseudo_random(Shape::new(1, 2, 6, 6), 13);
        let sum = elementwise_add(&a, &b).unwrap();
        let ya = conv2d(&a, &w, None, &spec).unwrap();
        let yb = conv2d(&b, &w, None, &spec).unwrap();
        let ysum = conv2d(&sum, &w, None, &spec).unwrap();
        let lin = elementwise_add(&ya, &yb).unwrap();
        for (got, want) in ysum.data().iter().zip(lin.data()) {
            assert!((got - want).abs() <= 1e-5, "{got} vs {want}");
        }
    }

    #[test]
    fn conv_rejects_bad_shapes() {
        let x = Tensor::<f32>::zeros(Shape::new(1, 2, 4, 4));
        // Channel mismatch between input and spec.
        let w = Tensor::<f32>::zeros(Shape::new(1, 3, 3, 3));
        assert!(conv2d(&x, &w, None, &ConvSpec::new(3, 1, 3, 1, 1, false)).is_err());
        // Bias length mismatch.
        let w2 = Tensor::<f32>::zeros(Shape::new(1, 2, 3, 3));
        assert!(conv2d(&x, &w2, Some(&[0.0, 0.0]), &ConvSpec::new(2, 1, 3, 1, 1, true)).is_err());
        // Bias flag disagreement.
        assert!(conv2d(&x, &w2, None, &ConvSpec::new(2, 1, 3, 1, 1, true)).is_err());
        // Kernel larger than padded input.
        assert!(conv2d(&x, &w2, None, &ConvSpec::new(2, 1, 3, 1, 0, false)).is_ok());
        let big = Tensor::<f32>::zeros(Shape::new(1, 2, 7, 7));
        assert!(conv2d(&x, &big, None, &ConvSpec::new(2, 1, 7, 1, 0, false)).is_err());
    }

    #[test]
    fn activation_known_values() {
        let x = t(Shape::new(1, 1, 1, 4), vec![-2.0, -0.5, 0.0, 3.0]);
        let relu = activation(Activation::Relu, &x).unwrap();
        assert_eq!(relu.data(), &[0.0, 0.0, 0.0, 3.0]);
        let prelu = activation(Activation::PRelu(0.25), &x).unwrap();
        assert_eq!(prelu.data(), &[-0.5, -0.125, 0.0, 3.0]);
        let leaky = activation(Activation::LeakyRelu(0.2), &x).unwrap();
        assert_eq!(leaky.data(), &[-0.4, -0.1, 0.0, 3.0]);
        let sig = activation(Activation::Sigmoid, &x).unwrap();
        assert!((sig.data()[2] - 0.5).abs() < 1e-9);
        assert!(sig.data().iter().all(|&v| v > 0.0 && v < 1.0));
    }

    #[test]
    fn sigmoid_is_stable_at_extremes() {
        let x = t(Shape::new(1, 1, 1, 2), vec![-1.0e4, 1.0e4]);
        let sig = activation(Activation::Sigmoid, &x).unwrap();
        assert!(sig.data()[0] >= 0.0 && sig.data()[0] < 1e-30);
        assert!((sig.data()[1] - 1.0).abs() < 1e-7);
        assert!(sig.all_finite());
    }

    #[test]
    fn activation_rejects_non_finite() {
        let x = t(Shape::new(1, 1, 1, 2), vec![1.0, f32::NAN]);
        assert!(matches!(
            activation(Activation::Relu, &x),
            Err(TensorError::NonFinite { .. })
        ));
    }

    #[test]
    fn batch_norm_matches_direct_formula() {
        let x = pseudo_random(Shape::new(2, 3, 4, 4), 21);
        let gamma = [1.5f32, 0.5, 2.0];
        let beta = [0.1f32, -0.2, 0.0];
        let mean = [0.3f32, -0.1, 0.05];
        let var = [0.9f32, 1.2, 0.4];
        let eps = 1e-5f32;
        let y = batch_norm_infer(&x, &gamma, &beta, &mean, &var, eps).unwrap();
        for n in 0..2 {
            for c in 0..3 {
                for i in 0..4 {
                    for j in 0..4 {
                        let want =
                            gamma[c] * (x.at(n, c, i, j) - mean[c]) / (var[c] + eps).sqrt() + beta[c];
                        assert!((y.at(n, c, i, j) - want).abs() < 1e-6);
                    }
                }
            }
        }
    }

    #[test]
    fn pixel_shuffle_known_layout() {
        // (1, 4, 1, 1) with r=2: channels [a,b,c,d] become a 2x2 cell
        // [[a, b], [c, d]].
        let x = t(Shape::new(1, 4, 1, 1), vec![1.0, 2.0, 3.0, 4.0]);
        let y = pixel_shuffle(&x, 2).unwrap();
        assert_eq!(y.shape(), Shape::new(1, 1, 2, 2));
        assert_eq!(y.data(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn pixel_shuffle_roundtrips_with_space_to_depth() {
        let x = pseudo_random(Shape::new(2, 9, 3, 5), 31);
        let y = pixel_shuffle(&x, 3).unwrap();
        assert_eq!(y.shape(), Shape::new(2, 1, 9, 15));
        let back = space_to_depth(&y, 3).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn pixel_shuffle_preserves_values_as_multiset() {
        let x = pseudo_random(Shape::new(1, 8, 4, 3), 41);
        let y = pixel_shuffle(&x, 2).unwrap();
        let mut a: Vec<f32> = x.data().to_vec();
        let mut b: Vec<f32> = y.data().to_vec();
        a.sort_by(f32::total_cmp);
        b.sort_by(f32::total_cmp);
        assert_eq!(a, b);
    }

    #[test]
    fn pixel_shuffle_rejects_indivisible_channels() {
        let x = Tensor::<f32>::zeros(Shape::new(1, 6, 2, 2));
        assert!(pixel_shuffle(&x, 2).is_err());
    }

    #[test]
    fn dense_known_value() {
        // [1, 1] . [[2], [3]] + [1] = 6
        let x = t(Shape::new(1, 2, 1, 1), vec![1.0, 1.0]);
        let w = t(Shape::new(1, 2, 1, 1), vec![2.0, 3.0]);
        let y = dense(&x, &w, Some(&[1.0])).unwrap();
        assert_eq!(y.data(), &[6.0]);
    }

    #[test]
    fn dense_matches_dot_product_oracle() {
        let x = pseudo_random(Shape::new(3, 4, 2, 2), 51);
        let w = pseudo_random(Shape::new(5, 16, 1, 1), 52);
        let bias: Vec<f32> = (0..5).map(|i| i as f32).collect();
        let y = dense(&x, &w, Some(&bias)).unwrap();
        assert_eq!(y.shape(), Shape::new(3, 5, 1, 1));
        for n in 0..3 {
            for o in 0..5 {
                let mut want = 0.0f32;
                for i in 0..16 {
                    want += x.data()[n * 16 + i] * w.data()[o * 16 + i];
                }
                want += bias[o];
                assert_eq!(y.at(n, o, 0, 0), want);
            }
        }
    }

    #[test]
    fn concat_channels_stacks_in_order() {
        let a = t(Shape::new(1, 1, 1, 2), vec![1.0, 2.0]);
        let b = t(Shape::new(1, 2, 1, 2), vec![3.0, 4.0, 5.0, 6.0]);
        let y = concat_channels(&[&a, &b]).unwrap();
        assert_eq!(y.shape(), Shape::new(1, 3, 1, 2));
        assert_eq!(y.data(), &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    }

    #[test]
    fn concat_respects_batch_boundaries() {
        let a = pseudo_random(Shape::new(2, 2, 2, 2), 61);
        let b = pseudo_random(Shape::new(2, 1, 2, 2), 62);
        let y = concat_channels(&[&a, &b]).unwrap();
        for n in 0..2 {
            for c in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        assert_eq!(y.at(n, c, i, j), a.at(n, c, i, j));
                    }
                }
            }
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(y.at(n, 2, i, j), b.at(n, 0, i, j));
                }
            }
        }
    }

    #[test]
    fn ops_are_deterministic_across_runs() {
        let x = pseudo_random(Shape::new(2, 3, 12, 12), 71);
        let w = pseudo_random(Shape::new(8, 3, 3, 3), 72);
        let spec = ConvSpec::new(3, 8, 3, 1, 1, false);
        let run = || {
            let y = conv2d(&x, &w, None, &spec).unwrap();
            let y = activation(Activation::LeakyRelu(0.2), &y).unwrap();
            pixel_shuffle(&y, 2).unwrap()
        };
        let a = run();
        let b = run();
        assert_eq!(a.data().len(), b.data().len());
        for (va, vb) in a.data().iter().zip(b.data()) {
            assert_eq!(va.to_bits(), vb.to_bits());
        }
    }

    #[test]
    fn reshape_and_cast_preserve_data() {
        let x = pseudo_random(Shape::new(1, 2, 3, 4), 81);
        let r = x.reshaped(Shape::new(1, 24, 1, 1)).unwrap();
        assert_eq!(r.data(), x.data());
        assert!(x.reshaped(Shape::new(1, 5, 1, 1)).is_err());
        let d: Tensor<f64> = x.cast();
        let back: Tensor<f32> = d.cast();
        assert_eq!(back, x);
    }
}
