//! Graph execution: forward pass, taped forward, and reverse-mode backward.
//!
//! The forward pass interprets the node list in order. When a tape is
//! requested, each node stores exactly the tensors its backward rule needs.
//! The backward pass walks nodes and tape in reverse, accumulating per-slot
//! weight gradients by name.

use super::{ConvLayer, DenseBlock, LayerGraph, LayerNode, ModelError, Weights};
use crate::degrade::{resample_plane, ResampleKernel};
use crate::tensor::grad::{
    activation_backward, batch_norm_backward, concat_channels_backward, conv2d_backward,
    dense_backward, pixel_shuffle_backward,
};
use crate::tensor::{
    activation, batch_norm_infer, concat_channels, conv2d, dense, elementwise_add, pixel_shuffle,
    scale, Activation, Scalar, Shape, Tensor,
};

/// Per-node saved state for the backward pass.
pub(crate) enum NodeTrace<T: Scalar> {
    Conv { input: Tensor<T> },
    Act { input: Tensor<T> },
    BatchNorm { input: Tensor<T> },
    PixelShuffle,
    Flatten { in_shape: Shape },
    Dense { input: Tensor<T> },
    Residual { body: Vec<NodeTrace<T>> },
    Rrdb { blocks: Vec<DenseBlockTrace<T>> },
}

/// Saved state for one densely connected block.
pub(crate) struct DenseBlockTrace<T: Scalar> {
    /// Concatenated input seen by each of the five convolutions.
    cat_inputs: Vec<Tensor<T>>,
    /// Pre-activation outputs of the first four convolutions.
    preacts: Vec<Tensor<T>>,
}

fn slot<'a, T: Scalar>(weights: &'a Weights<T>, name: &str) -> Result<&'a Tensor<T>, ModelError> {
    weights
        .get(name)
        .ok_or_else(|| ModelError::MissingWeight(name.to_string()))
}

fn conv_forward<T: Scalar>(
    layer: &ConvLayer,
    weights: &Weights<T>,
    x: &Tensor<T>,
) -> Result<Tensor<T>, ModelError> {
    let w = slot(weights, &layer.weight)?;
    let b = match &layer.bias {
        Some(name) => Some(slot(weights, name)?.data()),
        None => None,
    };
    Ok(conv2d(x, w, b, &layer.spec)?)
}

fn dense_block_forward<T: Scalar>(
    db: &DenseBlock,
    weights: &Weights<T>,
    x: &Tensor<T>,
    want_trace: bool,
) -> Result<(Tensor<T>, Option<DenseBlockTrace<T>>), ModelError> {
    let act = Activation::LeakyRelu(db.slope);
    let mut feats: Vec<Tensor<T>> = vec![x.clone()];
    let mut cat_inputs = Vec::new();
    let mut preacts = Vec::new();
    for conv in &db.convs[..4] {
        let refs: Vec<&Tensor<T>> = feats.iter().collect();
        let cat = concat_channels(&refs)?;
        let pre = conv_forward(conv, weights, &cat)?;
        let out = activation(act, &pre)?;
        if want_trace {
            cat_inputs.push(cat);
            preacts.push(pre);
        }
        feats.push(out);
    }
    let refs: Vec<&Tensor<T>> = feats.iter().collect();
    let cat = concat_channels(&refs)?;
    let f5 = conv_forward(&db.convs[4], weights, &cat)?;
    if want_trace {
        cat_inputs.push(cat);
    }
    let out = elementwise_add(x, &scale(&f5, T::from_f64(db.beta)))?;
    let trace = want_trace.then_some(DenseBlockTrace { cat_inputs, preacts });
    Ok((out, trace))
}

fn dense_block_backward<T: Scalar>(
    db: &DenseBlock,
    weights: &Weights<T>,
    trace: &DenseBlockTrace<T>,
    grad_out: &Tensor<T>,
    grads: &mut Weights<T>,
) -> Result<Tensor<T>, ModelError> {
    let act = Activation::LeakyRelu(db.slope);
    let beta = T::from_f64(db.beta);
    let nf = trace.cat_inputs[0].shape().c; // block input channels
    let gc = db.convs[0].spec.out_channels;

    // Gradients flowing into the block input and each intermediate feature.
    let mut g_feats: Vec<Option<Tensor<T>>> = vec![None; 5];

    // Residual tail: out = x + beta * conv5(cat5).
    let g_f5 = scale(grad_out, beta);
    let w5 = slot(weights, &db.convs[4].weight)?;
    let (g_cat5, gw5, gb5) = conv2d_backward(&trace.cat_inputs[4], w5, &db.convs[4].spec, &g_f5)?;
    let channels5: Vec<usize> = (0..5).map(|i| if i == 0 { nf } else { gc }).collect();
    for (i, g) in concat_channels_backward(&channels5, &g_cat5)?.into_iter().enumerate() {
        accumulate_tensor(&mut g_feats[i], g)?;
    }
    grads.accumulate(&db.convs[4].weight, gw5)?;
    if let Some(bname) = &db.convs[4].bias {
        grads.accumulate_vec(bname, gb5)?;
    }

    // Inner convolutions in reverse.
    for i in (0..4).rev() {
        let g_out_i = g_feats[i + 1]
            .take()
            .expect("every dense-block feature receives a gradient");
        let g_pre = activation_backward(act, &trace.preacts[i], &g_out_i)?;
        let w = slot(weights, &db.convs[i].weight)?;
        let (g_cat, gw, gb) = conv2d_backward(&trace.cat_inputs[i], w, &db.convs[i].spec, &g_pre)?;
        let channels: Vec<usize> = (0..=i).map(|j| if j == 0 { nf } else { gc }).collect();
        for (j, g) in concat_channels_backward(&channels, &g_cat)?.into_iter().enumerate() {
            accumulate_tensor(&mut g_feats[j], g)?;
        }
        grads.accumulate(&db.convs[i].weight, gw)?;
        if let Some(bname) = &db.convs[i].bias {
            grads.accumulate_vec(bname, gb)?;
        }
    }

    // Identity branch of the residual plus whatever flowed back to x through
    // the dense connectivity.
    let g_x_dense = g_feats[0].take().expect("block input receives a gradient");
    Ok(elementwise_add(grad_out, &g_x_dense)?)
}

fn accumulate_tensor<T: Scalar>(
    into: &mut Option<Tensor<T>>,
    g: Tensor<T>,
) -> Result<(), ModelError> {
    match into {
        Some(t) => *t = elementwise_add(t, &g)?,
        None => *into = Some(g),
    }
    Ok(())
}

/// Runs `nodes` on `x` in order. When `trace` is given, records the tape.
pub(crate) fn run_nodes<T: Scalar>(
    nodes: &[LayerNode],
    weights: &Weights<T>,
    x: &Tensor<T>,
    mut trace: Option<&mut Vec<NodeTrace<T>>>,
) -> Result<Tensor<T>, ModelError> {
    let mut cur = x.clone();
    for node in nodes {
        cur = match node {
            LayerNode::Conv(c) => {
                let out = conv_forward(c, weights, &cur)?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::Conv { input: cur });
                }
                out
            }
            LayerNode::Act(a) => {
                let out = activation(*a, &cur)?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::Act { input: cur });
                }
                out
            }
            LayerNode::BatchNorm(b) => {
                let gamma = slot(weights, &b.gamma)?.data();
                let beta = slot(weights, &b.beta)?.data();
                let mean = slot(weights, &b.mean)?.data();
                let var = slot(weights, &b.var)?.data();
                let out = batch_norm_infer(&cur, gamma, beta, mean, var, T::from_f64(b.eps))?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::BatchNorm { input: cur });
                }
                out
            }
            LayerNode::PixelShuffle { r } => {
                let out = pixel_shuffle(&cur, *r)?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::PixelShuffle);
                }
                out
            }
            LayerNode::Flatten => {
                let s = cur.shape();
                let out = cur.reshaped(Shape::new(s.n, s.c * s.h * s.w, 1, 1))?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::Flatten { in_shape: s });
                }
                out
            }
            LayerNode::Dense(d) => {
                let w = slot(weights, &d.weight)?;
                let b = slot(weights, &d.bias)?;
                let out = dense(&cur, w, Some(b.data()))?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::Dense { input: cur });
                }
                out
            }
            LayerNode::Residual(r) => {
                let mut body_trace = trace.as_deref_mut().map(|_| Vec::new());
                let body_out = run_nodes(&r.body, weights, &cur, body_trace.as_mut())?;
                let out = elementwise_add(&cur, &scale(&body_out, T::from_f64(r.scale)))?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::Residual {
                        body: body_trace.expect("trace requested for residual body"),
                    });
                }
                out
            }
            LayerNode::Rrdb(r) => {
                let want = trace.is_some();
                let mut chain = cur.clone();
                let mut block_traces = Vec::new();
                for db in &r.blocks {
                    let (next, db_trace) = dense_block_forward(db, weights, &chain, want)?;
                    if let Some(dt) = db_trace {
                        block_traces.push(dt);
                    }
                    chain = next;
                }
                let out = elementwise_add(&cur, &scale(&chain, T::from_f64(r.beta)))?;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(NodeTrace::Rrdb { blocks: block_traces });
                }
                out
            }
        };
    }
    Ok(cur)
}

/// Walks nodes and tape in reverse; returns the gradient w.r.t. the input and
/// accumulates weight gradients into `grads` keyed by slot name.
pub(crate) fn backward_nodes<T: Scalar>(
    nodes: &[LayerNode],
    weights: &Weights<T>,
    traces: &[NodeTrace<T>],
    grad_out: &Tensor<T>,
    grads: &mut Weights<T>,
) -> Result<Tensor<T>, ModelError> {
    assert_eq!(nodes.len(), traces.len(), "tape must match node list");
    let mut g = grad_out.clone();
    for (node, tr) in nodes.iter().zip(traces.iter()).rev() {
        g = match (node, tr) {
            (LayerNode::Conv(c), NodeTrace::Conv { input }) => {
                let w = slot(weights, &c.weight)?;
                let (gx, gw, gb) = conv2d_backward(input, w, &c.spec, &g)?;
                grads.accumulate(&c.weight, gw)?;
                if let Some(bname) = &c.bias {
                    grads.accumulate_vec(bname, gb)?;
                }
                gx
            }
            (LayerNode::Act(a), NodeTrace::Act { input }) => activation_backward(*a, input, &g)?,
            (LayerNode::BatchNorm(b), NodeTrace::BatchNorm { input }) => {
                let gamma = slot(weights, &b.gamma)?.data();
                let mean = slot(weights, &b.mean)?.data();
                let var = slot(weights, &b.var)?.data();
                let (gx, ggamma, gbeta) =
                    batch_norm_backward(input, gamma, mean, var, T::from_f64(b.eps), &g)?;
                grads.accumulate_vec(&b.gamma, ggamma)?;
                grads.accumulate_vec(&b.beta, gbeta)?;
                gx
            }
            (LayerNode::PixelShuffle { r }, NodeTrace::PixelShuffle) => {
                pixel_shuffle_backward(&g, *r)?
            }
            (LayerNode::Flatten, NodeTrace::Flatten { in_shape }) => g.reshaped(*in_shape)?,
            (LayerNode::Dense(d), NodeTrace::Dense { input }) => {
                let w = slot(weights, &d.weight)?;
                let (gx, gw, gb) = dense_backward(input, w, &g)?;
                grads.accumulate(&d.weight, gw)?;
                grads.accumulate_vec(&d.bias, gb)?;
                gx
            }
            (LayerNode::Residual(r), NodeTrace::Residual { body }) => {
                let g_body_out = scale(&g, T::from_f64(r.scale));
                let g_body_in = backward_nodes(&r.body, weights, body, &g_body_out, grads)?;
                elementwise_add(&g, &g_body_in)?
            }
            (LayerNode::Rrdb(r), NodeTrace::Rrdb { blocks }) => {
                let mut g_chain = scale(&g, T::from_f64(r.beta));
                for (db, dt) in r.blocks.iter().zip(blocks.iter()).rev() {
                    g_chain = dense_block_backward(db, weights, dt, &g_chain, grads)?;
                }
                elementwise_add(&g, &g_chain)?
            }
            _ => unreachable!("tape entry does not match node kind"),
        };
    }
    Ok(g)
}

pub(crate) fn validate_weights<T: Scalar>(graph: &LayerGraph, weights: &Weights<T>) -> Result<(), ModelError> {
    for s in graph.slots() {
        let t = weights
            .get(&s.name)
            .ok_or_else(|| ModelError::MissingWeight(s.name.clone()))?;
        if t.shape() != s.shape {
            return Err(ModelError::WeightShape {
                slot: s.name.clone(),
                want: s.shape,
                got: t.shape(),
            });
        }
    }
    if weights.len() != graph.slots().len() {
        let declared: std::collections::BTreeSet<&str> =
            graph.slots().iter().map(|s| s.name.as_str()).collect();
        for name in weights.names() {
            if !declared.contains(name) {
                return Err(ModelError::UnexpectedWeight(name.to_string()));
            }
        }
    }
    Ok(())
}

fn validate_input<T: Scalar>(graph: &LayerGraph, x: &Tensor<T>) -> Result<(), ModelError> {
    let s = x.shape();
    if s.c != graph.input_channels {
        return Err(ModelError::InputChannels {
            want: graph.input_channels,
            got: s.c,
        });
    }
    if s.h < 4 || s.w < 4 {
        return Err(ModelError::InputTooSmall { h: s.h, w: s.w });
    }
    Ok(())
}

/// Upscales a tensor by plain bicubic resampling, channel by channel.
fn bicubic_upscale<T: Scalar>(x: &Tensor<T>, factor: u32) -> Tensor<T> {
    let s = x.shape();
    let (ow, oh) = (s.w * factor as usize, s.h * factor as usize);
    let mut out = Tensor::zeros(Shape::new(s.n, s.c, oh, ow));
    let in_plane = s.h * s.w;
    let out_plane = oh * ow;
    for p in 0..s.n * s.c {
        let src: Vec<f64> = x.data()[p * in_plane..(p + 1) * in_plane]
            .iter()
            .map(|v| v.to_f64().unwrap_or(0.0))
            .collect();
        let res = resample_plane(&src, s.w, s.h, ow, oh, ResampleKernel::Bicubic);
        let dst = &mut out.data_mut()[p * out_plane..(p + 1) * out_plane];
        for (d, v) in dst.iter_mut().zip(res) {
            *d = T::from_f64(v);
        }
    }
    out
}

/// Full forward pass: validates input and weights, then runs the graph.
/// The bicubic pseudo-model ignores `weights` and resamples directly.
pub fn forward<T: Scalar>(
    graph: &LayerGraph,
    weights: &Weights<T>,
    x: &Tensor<T>,
) -> Result<Tensor<T>, ModelError> {
    validate_input(graph, x)?;
    if graph.resample_only {
        return Ok(bicubic_upscale(x, graph.scale));
    }
    validate_weights(graph, weights)?;
    run_nodes(&graph.layers, weights, x, None)
}

/// Forward pass that also returns the tape needed by [`backward_nodes`].
pub(crate) fn forward_with_trace<T: Scalar>(
    graph: &LayerGraph,
    weights: &Weights<T>,
    x: &Tensor<T>,
) -> Result<(Tensor<T>, Vec<NodeTrace<T>>), ModelError> {
    validate_input(graph, x)?;
    if graph.resample_only {
        return Err(ModelError::NoParameters(graph.name.clone()));
    }
    validate_weights(graph, weights)?;
    let mut tape = Vec::new();
    let out = run_nodes(&graph.layers, weights, x, Some(&mut tape))?;
    Ok((out, tape))
}
