//! Vector-Jacobian products for the forward kernels in this module.
//!
//! Each function takes the same inputs as its forward twin plus the gradient
//! of some scalar loss with respect to the forward output, and returns the
//! gradients with respect to inputs and parameters. Buffers that are not
//! trainable (batch-norm running statistics) get no gradient.

use super::{space_to_depth, ConvSpec, Scalar, Shape, Tensor, TensorError};

fn check_shape(
    op: &'static str,
    got: Shape,
    want: Shape,
) -> Result<(), TensorError> {
    if got != want {
        return Err(TensorError::ShapeMismatch {
            op,
            detail: format!("gradient shape {} does not match output {}", got, want),
        });
    }
    Ok(())
}

/// Gradients of `conv2d(x, weights, bias)` with respect to all three.
///
/// Returns `(grad_x, grad_weights, grad_bias)`.
pub fn conv2d_backward<T: Scalar>(
    x: &Tensor<T>,
    weights: &Tensor<T>,
    spec: &ConvSpec,
    grad_out: &Tensor<T>,
) -> Result<(Tensor<T>, Tensor<T>, Vec<T>), TensorError> {
    let xs = x.shape();
    let ws = weights.shape();
    let out_h = spec.out_extent(xs.h).ok_or(TensorError::ShapeMismatch {
        op: "conv2d_backward",
        detail: "input smaller than kernel".into(),
    })?;
    let out_w = spec.out_extent(xs.w).ok_or(TensorError::ShapeMismatch {
        op: "conv2d_backward",
        detail: "input smaller than kernel".into(),
    })?;
    check_shape(
        "conv2d_backward",
        grad_out.shape(),
        Shape::new(xs.n, ws.n, out_h, out_w),
    )?;

    let mut gx = Tensor::zeros(xs);
    let mut gw = Tensor::zeros(ws);
    let mut gb = vec![T::zero(); ws.n];

    // Scatter each output element's gradient back through its taps. One
    // fixed loop order keeps the result deterministic.
    for n in 0..xs.n {
        for oc in 0..ws.n {
            for oy in 0..out_h {
                for ox in 0..out_w {
                    let g = grad_out.at(n, oc, oy, ox);
                    gb[oc] = gb[oc] + g;
                    for ky in 0..spec.kernel_size {
                        let iy = (oy * spec.stride + ky) as isize - spec.padding as isize;
                        if iy < 0 || iy >= xs.h as isize {
                            continue;
                        }
                        for kx in 0..spec.kernel_size {
                            let ix = (ox * spec.stride + kx) as isize - spec.padding as isize;
                            if ix < 0 || ix >= xs.w as isize {
                                continue;
                            }
                            for ic in 0..xs.c {
                                let xv = x.at(n, ic, iy as usize, ix as usize);
                                let wv = weights.at(oc, ic, ky, kx);
                                *gx.at_mut(n, ic, iy as usize, ix as usize) =
                                    gx.at(n, ic, iy as usize, ix as usize) + wv * g;
                                *gw.at_mut(oc, ic, ky, kx) = gw.at(oc, ic, ky, kx) + xv * g;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((gx, gw, gb))
}

/// Gradient of a pointwise nonlinearity with respect to its input.
pub fn activation_backward<T: Scalar>(
    kind: super::Activation,
    x: &Tensor<T>,
    grad_out: &Tensor<T>,
) -> Result<Tensor<T>, TensorError> {
    check_shape("activation_backward", grad_out.shape(), x.shape())?;
    let data = x
        .data()
        .iter()
        .zip(grad_out.data())
        .map(|(&v, &g)| kind.derivative(v) * g)
        .collect();
    Tensor::new(x.shape(), data)
}

/// Gradients of inference batch norm with respect to input, gamma, beta.
/// The running statistics are constants.
pub fn batch_norm_backward<T: Scalar>(
    x: &Tensor<T>,
    gamma: &[T],
    mean: &[T],
    var: &[T],
    eps: T,
    grad_out: &Tensor<T>,
) -> Result<(Tensor<T>, Vec<T>, Vec<T>), TensorError> {
    check_shape("batch_norm_backward", grad_out.shape(), x.shape())?;
    let s = x.shape();
    let mut gx = Tensor::zeros(s);
    let mut ggamma = vec![T::zero(); s.c];
    let mut gbeta = vec![T::zero(); s.c];
    for n in 0..s.n {
        for c in 0..s.c {
            let inv_std = T::one() / (var[c] + eps).sqrt();
            for y in 0..s.h {
                for xx in 0..s.w {
                    let g = grad_out.at(n, c, y, xx);
                    *gx.at_mut(n, c, y, xx) = g * gamma[c] * inv_std;
                    ggamma[c] = ggamma[c] + g * (x.at(n, c, y, xx) - mean[c]) * inv_std;
                    gbeta[c] = gbeta[c] + g;
                }
            }
        }
    }
    Ok((gx, ggamma, gbeta))
}

/// Gradient of pixel shuffle: the inverse rearrangement of the output
/// gradient.
pub fn pixel_shuffle_backward<T: Scalar>(
    grad_out: &Tensor<T>,
    r: usize,
) -> Result<Tensor<T>, TensorError> {
    space_to_depth(grad_out, r)
}

/// Gradients of the dense layer. Returns `(grad_x, grad_weights, grad_bias)`;
/// `grad_x` has the caller's original (unflattened) input shape.
pub fn dense_backward<T: Scalar>(
    x: &Tensor<T>,
    weights: &Tensor<T>,
    grad_out: &Tensor<T>,
) -> Result<(Tensor<T>, Tensor<T>, Vec<T>), TensorError> {
    let xs = x.shape();
    let ws = weights.shape();
    let m = xs.c * xs.h * xs.w;
    let k = ws.n;
    check_shape("dense_backward", grad_out.shape(), Shape::new(xs.n, k, 1, 1))?;
    let mut gx = Tensor::zeros(xs);
    let mut gw = Tensor::zeros(ws);
    let mut gb = vec![T::zero(); k];
    for n in 0..xs.n {
        for o in 0..k {
            let g = grad_out.at(n, o, 0, 0);
            gb[o] = gb[o] + g;
            for i in 0..m {
                let xv = x.data()[n * m + i];
                let wv = weights.data()[o * m + i];
                gx.data_mut()[n * m + i] = gx.data()[n * m + i] + wv * g;
                gw.data_mut()[o * m + i] = gw.data()[o * m + i] + xv * g;
            }
        }
    }
    Ok((gx, gw, gb))
}

/// Splits a channel-concat gradient back into per-part gradients.
pub fn concat_channels_backward<T: Scalar>(
    part_channels: &[usize],
    grad_out: &Tensor<T>,
) -> Result<Vec<Tensor<T>>, TensorError> {
    let s = grad_out.shape();
    let total: usize = part_channels.iter().sum();
    if total != s.c {
        return Err(TensorError::ShapeMismatch {
            op: "concat_channels_backward",
            detail: format!("parts sum to {} channels, gradient has {}", total, s.c),
        });
    }
    let mut outs: Vec<Tensor<T>> = part_channels
        .iter()
        .map(|&c| Tensor::zeros(Shape::new(s.n, c, s.h, s.w)))
        .collect();
    for n in 0..s.n {
        let mut c_base = 0;
        for (pi, &pc) in part_channels.iter().enumerate() {
            for c in 0..pc {
                for y in 0..s.h {
                    for x in 0..s.w {
                        *outs[pi].at_mut(n, c, y, x) = grad_out.at(n, c_base + c, y, x);
                    }
                }
            }
            c_base += pc;
        }
    }
    Ok(outs)
}
