//! Super-resolution network definitions.
//!
//! A [`LayerGraph`] is a declarative description of one network: an ordered
//! list of layer nodes plus the weight slots they reference. Graphs are built
//! from named presets ([`ArchPreset`]) and executed by the functions in
//! [`exec`]; weights live in a [`store::Weights`] keyed by slot name.
//!
//! The `bicubic` preset is a pseudo-model: it owns no weights and upscales by
//! plain bicubic resampling, serving as the reference baseline.

mod exec;
mod store;

pub use exec::forward;
pub(crate) use exec::{backward_nodes, forward_with_trace, run_nodes, validate_weights};
pub use store::{fd_test_weights, init_weights, load_weights, save_weights, WeightStore, Weights};

use crate::tensor::{Activation, ConvSpec, Shape, TensorError};
use std::fmt::Write as _;
use thiserror::Error;

/// Errors from graph construction, execution, and weight containers.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unknown architecture preset `{0}`")]
    UnknownPreset(String),
    #[error("unsupported scale factor {0}: expected 2, 3, or 4")]
    UnsupportedScale(u32),
    #[error("duplicate weight slot `{0}` in graph")]
    DuplicateSlot(String),
    #[error("weight store is missing slot `{0}`")]
    MissingWeight(String),
    #[error("weight store has slot `{slot}` with shape {got}, graph expects {want}")]
    WeightShape { slot: String, want: Shape, got: Shape },
    #[error("weight store has slot `{0}` that the graph does not declare")]
    UnexpectedWeight(String),
    #[error("input has {got} channels, graph expects {want}")]
    InputChannels { want: usize, got: usize },
    #[error("input spatial extent {h}x{w} is too small: both sides must be >= 4")]
    InputTooSmall { h: usize, w: usize },
    #[error("graph `{0}` has no trainable parameters")]
    NoParameters(String),
    #[error("weight file is not a valid container: {0}")]
    BadContainer(String),
    #[error("weight file format version {0} is not supported")]
    BadVersion(u32),
    #[error("weight file does not match graph: {0}")]
    HeaderMismatch(String),
    #[error("tensor error: {0}")]
    Tensor(#[from] TensorError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("weight file header is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// What a weight slot holds; drives initialization and trainability.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    /// Convolution kernel; `fan_in` = in_channels * k * k.
    ConvWeight { fan_in: usize },
    /// Fully-connected weight matrix; `fan_in` = input length.
    DenseWeight { fan_in: usize },
    /// Additive bias vector (conv or dense).
    Bias,
    BnGamma,
    BnBeta,
    /// Running mean: a buffer, not a trainable parameter.
    BnMean,
    /// Running variance: a buffer, not a trainable parameter.
    BnVar,
}

impl SlotKind {
    pub fn trainable(self) -> bool {
        !matches!(self, SlotKind::BnMean | SlotKind::BnVar)
    }
}

/// One named weight slot: shape, role, and position in declaration order.
#[derive(Debug, Clone)]
pub struct SlotSpec {
    pub name: String,
    pub shape: Shape,
    pub kind: SlotKind,
}

impl SlotSpec {
    pub fn trainable(&self) -> bool {
        self.kind.trainable()
    }
}

/// Convolution node: spec plus the names of its weight (and optional bias) slots.
#[derive(Debug, Clone)]
pub struct ConvLayer {
    pub spec: ConvSpec,
    pub weight: String,
    pub bias: Option<String>,
}

impl ConvLayer {
    fn new(spec: ConvSpec, prefix: &str) -> ConvLayer {
        ConvLayer {
            bias: spec.bias.then(|| format!("{prefix}.bias")),
            weight: format!("{prefix}.weight"),
            spec,
        }
    }
}

/// Inference-mode batch normalization over channels.
#[derive(Debug, Clone)]
pub struct BnLayer {
    pub channels: usize,
    pub gamma: String,
    pub beta: String,
    pub mean: String,
    pub var: String,
    pub eps: f64,
}

impl BnLayer {
    fn new(channels: usize, prefix: &str) -> BnLayer {
        BnLayer {
            channels,
            gamma: format!("{prefix}.gamma"),
            beta: format!("{prefix}.beta"),
            mean: format!("{prefix}.mean"),
            var: format!("{prefix}.var"),
            eps: 1e-5,
        }
    }
}

/// Fully-connected node acting on the flattened per-sample feature vector.
#[derive(Debug, Clone)]
pub struct DenseLayer {
    pub in_len: usize,
    pub out_len: usize,
    pub weight: String,
    pub bias: String,
}

/// Distinguishes an inner residual block from the long skip around a trunk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualKind {
    Block,
    GlobalSkip,
}

/// Residual wrapper: `out = x + scale * body(x)`.
#[derive(Debug, Clone)]
pub struct ResidualLayer {
    pub body: Vec<LayerNode>,
    pub scale: f64,
    pub kind: ResidualKind,
}

/// Densely connected block: five convolutions where conv `i` sees the
/// concatenation of the block input and all previous conv outputs, the first
/// four followed by LeakyReLU. Output is `x + beta * conv5(...)`.
#[derive(Debug, Clone)]
pub struct DenseBlock {
    pub convs: Vec<ConvLayer>,
    pub beta: f64,
    pub slope: f64,
}

/// Residual-in-residual dense block: three [`DenseBlock`]s chained, wrapped in
/// an outer scaled skip: `out = x + beta * chain(x)`.
#[derive(Debug, Clone)]
pub struct RrdbLayer {
    pub blocks: Vec<DenseBlock>,
    pub beta: f64,
}

/// One node in a layer graph.
#[derive(Debug, Clone)]
pub enum LayerNode {
    Conv(ConvLayer),
    Act(Activation),
    BatchNorm(BnLayer),
    PixelShuffle { r: usize },
    Flatten,
    Dense(DenseLayer),
    Residual(ResidualLayer),
    Rrdb(RrdbLayer),
}

/// A complete network: named preset instantiated at one scale factor.
#[derive(Debug, Clone)]
pub struct LayerGraph {
    pub name: String,
    pub preset_id: String,
    pub scale: u32,
    pub input_channels: usize,
    /// True for the bicubic pseudo-model: no layers, resampling only.
    pub resample_only: bool,
    pub layers: Vec<LayerNode>,
    slots: Vec<SlotSpec>,
}

impl LayerGraph {
    /// Weight slots in declaration (execution) order.
    pub fn slots(&self) -> &[SlotSpec] {
        &self.slots
    }

    /// Number of trainable parameter values (buffers excluded).
    pub fn param_count(&self) -> u64 {
        self.slots
            .iter()
            .filter(|s| s.trainable())
            .map(|s| s.shape.len() as u64)
            .sum()
    }

    /// Number of non-trainable buffer values (batch-norm statistics).
    pub fn buffer_count(&self) -> u64 {
        self.slots
            .iter()
            .filter(|s| !s.trainable())
            .map(|s| s.shape.len() as u64)
            .sum()
    }

    /// Trainable parameter values whose slot name starts with `prefix`.
    pub fn param_count_under(&self, prefix: &str) -> u64 {
        self.slots
            .iter()
            .filter(|s| s.trainable() && s.name.starts_with(prefix))
            .map(|s| s.shape.len() as u64)
            .sum()
    }

    /// Number of inner residual blocks (long skips excluded).
    pub fn residual_block_count(&self) -> usize {
        fn walk(nodes: &[LayerNode]) -> usize {
            nodes
                .iter()
                .map(|n| match n {
                    LayerNode::Residual(r) => {
                        let inner = walk(&r.body);
                        inner + usize::from(r.kind == ResidualKind::Block)
                    }
                    _ => 0,
                })
                .sum()
        }
        walk(&self.layers)
    }

    /// Number of residual-in-residual dense blocks.
    pub fn rrdb_count(&self) -> usize {
        fn walk(nodes: &[LayerNode]) -> usize {
            nodes
                .iter()
                .map(|n| match n {
                    LayerNode::Rrdb(_) => 1,
                    LayerNode::Residual(r) => walk(&r.body),
                    _ => 0,
                })
                .sum()
        }
        walk(&self.layers)
    }

    /// Number of batch-normalization nodes anywhere in the graph.
    pub fn batch_norm_count(&self) -> usize {
        fn walk(nodes: &[LayerNode]) -> usize {
            nodes
                .iter()
                .map(|n| match n {
                    LayerNode::BatchNorm(_) => 1,
                    LayerNode::Residual(r) => walk(&r.body),
                    _ => 0,
                })
                .sum()
        }
        walk(&self.layers)
    }

    /// Human-readable structural summary, one line per node.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "graph {} (preset {}, scale x{})",
            self.name, self.preset_id, self.scale
        );
        if self.resample_only {
            let _ = writeln!(out, "  bicubic_resample x{}", self.scale);
        } else {
            describe_nodes(&self.layers, 1, &mut out);
        }
        let _ = writeln!(
            out,
            "parameters: {} trainable, {} buffer values",
            self.param_count(),
            self.buffer_count()
        );
        out
    }
}

fn describe_nodes(nodes: &[LayerNode], depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for node in nodes {
        match node {
            LayerNode::Conv(c) => {
                let _ = writeln!(
                    out,
                    "{pad}conv {}->{} k{} s{} p{}{}",
                    c.spec.in_channels,
                    c.spec.out_channels,
                    c.spec.kernel_size,
                    c.spec.stride,
                    c.spec.padding,
                    if c.spec.bias { "" } else { " nobias" }
                );
            }
            LayerNode::Act(a) => {
                let _ = writeln!(out, "{pad}{a}");
            }
            LayerNode::BatchNorm(b) => {
                let _ = writeln!(out, "{pad}batch_norm c{}", b.channels);
            }
            LayerNode::PixelShuffle { r } => {
                let _ = writeln!(out, "{pad}pixel_shuffle r{r}");
            }
            LayerNode::Flatten => {
                let _ = writeln!(out, "{pad}flatten");
            }
            LayerNode::Dense(d) => {
                let _ = writeln!(out, "{pad}dense {}->{}", d.in_len, d.out_len);
            }
            LayerNode::Residual(r) => {
                let label = match r.kind {
                    ResidualKind::Block => "residual_block",
                    ResidualKind::GlobalSkip => "global_skip",
                };
                let _ = writeln!(out, "{pad}{label} (scale {}):", r.scale);
                describe_nodes(&r.body, depth + 1, out);
            }
            LayerNode::Rrdb(r) => {
                let _ = writeln!(out, "{pad}rrdb (beta {}):", r.beta);
                for db in &r.blocks {
                    let _ = writeln!(
                        out,
                        "{pad}  dense_block (beta {}, {} convs)",
                        db.beta,
                        db.convs.len()
                    );
                }
            }
        }
    }
}

/// Tunable hyperparameters of one architecture family.
#[derive(Debug, Clone)]
pub struct ArchPreset {
    pub id: String,
    /// Residual blocks (generators) or conv blocks (discriminator).
    pub n_resblocks: usize,
    /// Feature channels in the trunk.
    pub n_features: usize,
    /// Residual-in-residual dense blocks (ESRGAN generator only).
    pub n_rrdb: usize,
    /// Scaling applied to residual branches that use it.
    pub residual_scaling: f64,
    /// Growth channels inside dense blocks (ESRGAN generator only).
    pub growth: usize,
    /// Assumed square input side for the discriminator head.
    pub disc_input: usize,
    pub prelu_slope: f64,
    pub leaky_slope: f64,
}

impl ArchPreset {
    /// Looks up a preset by id. A `-mini` suffix selects a miniature variant
    /// (2 blocks, 8 features) of the same family for fast tests.
    pub fn by_id(id: &str) -> Result<ArchPreset, ModelError> {
        let (base, mini) = match id.strip_suffix("-mini") {
            Some(b) => (b, true),
            None => (id, false),
        };
        let mut p = match base {
            "srgan_gen" => ArchPreset {
                id: id.to_string(),
                n_resblocks: 16,
                n_features: 64,
                n_rrdb: 0,
                residual_scaling: 1.0,
                growth: 0,
                disc_input: 0,
                prelu_slope: 0.25,
                leaky_slope: 0.2,
            },
            "srgan_disc" => ArchPreset {
                id: id.to_string(),
                n_resblocks: 8,
                n_features: 64,
                n_rrdb: 0,
                residual_scaling: 1.0,
                growth: 0,
                disc_input: 96,
                prelu_slope: 0.25,
                leaky_slope: 0.2,
            },
            "esrgan_gen" => ArchPreset {
                id: id.to_string(),
                n_resblocks: 0,
                n_features: 64,
                n_rrdb: 23,
                residual_scaling: 0.2,
                growth: 32,
                disc_input: 0,
                prelu_slope: 0.25,
                leaky_slope: 0.2,
            },
            "edsr" => ArchPreset {
                id: id.to_string(),
                n_resblocks: 16,
                n_features: 64,
                n_rrdb: 0,
                residual_scaling: 0.1,
                growth: 0,
                disc_input: 0,
                prelu_slope: 0.25,
                leaky_slope: 0.2,
            },
            "edsr_base" => ArchPreset {
                id: id.to_string(),
                n_resblocks: 32,
                n_features: 256,
                n_rrdb: 0,
                residual_scaling: 0.1,
                growth: 0,
                disc_input: 0,
                prelu_slope: 0.25,
                leaky_slope: 0.2,
            },
            "bicubic" => {
                if mini {
                    return Err(ModelError::UnknownPreset(id.to_string()));
                }
                ArchPreset {
                    id: id.to_string(),
                    n_resblocks: 0,
                    n_features: 0,
                    n_rrdb: 0,
                    residual_scaling: 1.0,
                    growth: 0,
                    disc_input: 0,
                    prelu_slope: 0.25,
                    leaky_slope: 0.2,
                }
            }
            _ => return Err(ModelError::UnknownPreset(id.to_string())),
        };
        if mini {
            p.n_resblocks = p.n_resblocks.min(2);
            p.n_features = 8;
            if p.n_rrdb > 0 {
                p.n_rrdb = 2;
            }
            if p.growth > 0 {
                p.growth = 4;
            }
            if p.disc_input > 0 {
                p.disc_input = 16;
            }
        }
        Ok(p)
    }

    /// All preset ids, full-size then miniature.
    pub fn known_ids() -> &'static [&'static str] {
        &[
            "srgan_gen",
            "srgan_disc",
            "esrgan_gen",
            "edsr",
            "edsr_base",
            "bicubic",
            "srgan_gen-mini",
            "srgan_disc-mini",
            "esrgan_gen-mini",
            "edsr-mini",
            "edsr_base-mini",
        ]
    }

    pub fn is_discriminator(&self) -> bool {
        self.id.starts_with("srgan_disc")
    }
}

/// Base architecture family of a preset id (mini variants share the family).
fn family(id: &str) -> &str {
    id.strip_suffix("-mini").unwrap_or(id)
}

/// Builds the layer graph for `preset` at integer upscale factor `scale`.
///
/// Scale must be 2, 3, or 4; the discriminator ignores it (its notion of scale
/// only names the graph). Scale 4 is realized as two x2 pixel-shuffle stages,
/// scale 2 and 3 as a single stage.
pub fn build_model(preset: &ArchPreset, scale: u32) -> Result<LayerGraph, ModelError> {
    if !matches!(scale, 2 | 3 | 4) {
        return Err(ModelError::UnsupportedScale(scale));
    }
    let name = format!("{}_x{}", preset.id, scale);
    let layers = match family(&preset.id) {
        "srgan_gen" => build_srgan_gen(preset, scale),
        "srgan_disc" => build_srgan_disc(preset),
        "esrgan_gen" => build_esrgan_gen(preset, scale),
        "edsr" | "edsr_base" => build_edsr(preset, scale),
        "bicubic" => Vec::new(),
        other => return Err(ModelError::UnknownPreset(other.to_string())),
    };
    let slots = derive_slots(&layers)?;
    Ok(LayerGraph {
        name,
        preset_id: preset.id.clone(),
        scale,
        input_channels: 3,
        resample_only: family(&preset.id) == "bicubic",
        layers,
        slots,
    })
}

/// Pixel-shuffle stage factors for one integer scale: x4 = two x2 stages.
fn stage_factors(scale: u32) -> Vec<usize> {
    match scale {
        2 => vec![2],
        3 => vec![3],
        _ => vec![2, 2],
    }
}

fn conv(prefix: &str, in_c: usize, out_c: usize) -> LayerNode {
    LayerNode::Conv(ConvLayer::new(ConvSpec::same(in_c, out_c, 3), prefix))
}

fn build_srgan_gen(p: &ArchPreset, scale: u32) -> Vec<LayerNode> {
    let nf = p.n_features;
    let mut layers = vec![conv("head.conv", 3, nf), LayerNode::Act(Activation::PRelu(p.prelu_slope))];
    let mut trunk = Vec::new();
    for i in 1..=p.n_resblocks {
        let pre = format!("block{i:02}");
        trunk.push(LayerNode::Residual(ResidualLayer {
            body: vec![
                conv(&format!("{pre}.conv1"), nf, nf),
                LayerNode::BatchNorm(BnLayer::new(nf, &format!("{pre}.bn1"))),
                LayerNode::Act(Activation::PRelu(p.prelu_slope)),
                conv(&format!("{pre}.conv2"), nf, nf),
                LayerNode::BatchNorm(BnLayer::new(nf, &format!("{pre}.bn2"))),
            ],
            scale: 1.0,
            kind: ResidualKind::Block,
        }));
    }
    trunk.push(conv("post.conv", nf, nf));
    trunk.push(LayerNode::BatchNorm(BnLayer::new(nf, "post.bn")));
    layers.push(LayerNode::Residual(ResidualLayer {
        body: trunk,
        scale: 1.0,
        kind: ResidualKind::GlobalSkip,
    }));
    for (j, r) in stage_factors(scale).into_iter().enumerate() {
        layers.push(conv(&format!("up{}.conv", j + 1), nf, nf * r * r));
        layers.push(LayerNode::PixelShuffle { r });
        layers.push(LayerNode::Act(Activation::PRelu(p.prelu_slope)));
    }
    layers.push(conv("tail.conv", nf, 3));
    layers
}

fn build_edsr(p: &ArchPreset, scale: u32) -> Vec<LayerNode> {
    let nf = p.n_features;
    let mut layers = vec![conv("head.conv", 3, nf)];
    let mut trunk = Vec::new();
    for i in 1..=p.n_resblocks {
        let pre = format!("block{i:02}");
        trunk.push(LayerNode::Residual(ResidualLayer {
            body: vec![
                conv(&format!("{pre}.conv1"), nf, nf),
                LayerNode::Act(Activation::Relu),
                conv(&format!("{pre}.conv2"), nf, nf),
            ],
            scale: p.residual_scaling,
            kind: ResidualKind::Block,
        }));
    }
    layers.push(LayerNode::Residual(ResidualLayer {
        body: trunk,
        scale: 1.0,
        kind: ResidualKind::GlobalSkip,
    }));
    for (j, r) in stage_factors(scale).into_iter().enumerate() {
        layers.push(conv(&format!("up{}.conv", j + 1), nf, nf * r * r));
        layers.push(LayerNode::PixelShuffle { r });
    }
    layers.push(conv("tail.conv", nf, 3));
    layers
}

fn build_esrgan_gen(p: &ArchPreset, scale: u32) -> Vec<LayerNode> {
    let nf = p.n_features;
    let gc = p.growth;
    let mut layers = vec![conv("head.conv", 3, nf)];
    for i in 1..=p.n_rrdb {
        let mut blocks = Vec::with_capacity(3);
        for d in 1..=3 {
            let mut convs = Vec::with_capacity(5);
            for c in 1..=5 {
                let in_c = nf + (c - 1) * gc;
                let out_c = if c == 5 { nf } else { gc };
                convs.push(ConvLayer::new(
                    ConvSpec::same(in_c, out_c, 3),
                    &format!("rrdb{i:02}.db{d}.conv{c}"),
                ));
            }
            blocks.push(DenseBlock {
                convs,
                beta: p.residual_scaling,
                slope: p.leaky_slope,
            });
        }
        layers.push(LayerNode::Rrdb(RrdbLayer {
            blocks,
            beta: p.residual_scaling,
        }));
    }
    for (j, r) in stage_factors(scale).into_iter().enumerate() {
        layers.push(conv(&format!("up{}.conv", j + 1), nf, nf * r * r));
        layers.push(LayerNode::PixelShuffle { r });
        layers.push(LayerNode::Act(Activation::LeakyRelu(p.leaky_slope)));
    }
    layers.push(conv("tail.conv1", nf, nf));
    layers.push(LayerNode::Act(Activation::LeakyRelu(p.leaky_slope)));
    layers.push(conv("tail.conv2", nf, 3));
    layers
}

fn build_srgan_disc(p: &ArchPreset) -> Vec<LayerNode> {
    let nf = p.n_features;
    // Alternating stride-2/stride-1 blocks; channels double every second block.
    const STRIDES: [usize; 8] = [2, 1, 2, 1, 2, 1, 2, 1];
    const MULT: [usize; 8] = [1, 2, 2, 4, 4, 8, 8, 8];
    let n = p.n_resblocks.min(8);
    let mut layers = vec![
        conv("head.conv", 3, nf),
        LayerNode::Act(Activation::LeakyRelu(p.leaky_slope)),
    ];
    let mut side = p.disc_input;
    let mut in_c = nf;
    for i in 0..n {
        let out_c = nf * MULT[i];
        let stride = STRIDES[i];
        let spec = ConvSpec::new(in_c, out_c, 3, stride, 1, true);
        layers.push(LayerNode::Conv(ConvLayer::new(spec, &format!("block{}.conv", i + 1))));
        layers.push(LayerNode::BatchNorm(BnLayer::new(out_c, &format!("block{}.bn", i + 1))));
        layers.push(LayerNode::Act(Activation::LeakyRelu(p.leaky_slope)));
        if stride == 2 {
            side = side.div_ceil(2);
        }
        in_c = out_c;
    }
    let flat = in_c * side * side;
    layers.push(LayerNode::Flatten);
    layers.push(LayerNode::Dense(DenseLayer {
        in_len: flat,
        out_len: 1024,
        weight: "fc1.weight".into(),
        bias: "fc1.bias".into(),
    }));
    layers.push(LayerNode::Act(Activation::LeakyRelu(p.leaky_slope)));
    layers.push(LayerNode::Dense(DenseLayer {
        in_len: 1024,
        out_len: 1,
        weight: "fc2.weight".into(),
        bias: "fc2.bias".into(),
    }));
    layers.push(LayerNode::Act(Activation::Sigmoid));
    layers
}

/// Walks the node tree and collects every weight slot in declaration order.
fn derive_slots(nodes: &[LayerNode]) -> Result<Vec<SlotSpec>, ModelError> {
    let mut slots = Vec::new();
    collect_slots(nodes, &mut slots);
    let mut seen = std::collections::BTreeSet::new();
    for s in &slots {
        if !seen.insert(s.name.clone()) {
            return Err(ModelError::DuplicateSlot(s.name.clone()));
        }
    }
    Ok(slots)
}

fn push_conv_slots(c: &ConvLayer, slots: &mut Vec<SlotSpec>) {
    let fan_in = c.spec.in_channels * c.spec.kernel_size * c.spec.kernel_size;
    slots.push(SlotSpec {
        name: c.weight.clone(),
        shape: c.spec.weight_shape(),
        kind: SlotKind::ConvWeight { fan_in },
    });
    if let Some(b) = &c.bias {
        slots.push(SlotSpec {
            name: b.clone(),
            shape: Shape::new(c.spec.out_channels, 1, 1, 1),
            kind: SlotKind::Bias,
        });
    }
}

fn collect_slots(nodes: &[LayerNode], slots: &mut Vec<SlotSpec>) {
    for node in nodes {
        match node {
            LayerNode::Conv(c) => push_conv_slots(c, slots),
            LayerNode::BatchNorm(b) => {
                let ch = b.channels;
                let vec_shape = Shape::new(ch, 1, 1, 1);
                slots.push(SlotSpec { name: b.gamma.clone(), shape: vec_shape, kind: SlotKind::BnGamma });
                slots.push(SlotSpec { name: b.beta.clone(), shape: vec_shape, kind: SlotKind::BnBeta });
                slots.push(SlotSpec { name: b.mean.clone(), shape: vec_shape, kind: SlotKind::BnMean });
                slots.push(SlotSpec { name: b.var.clone(), shape: vec_shape, kind: SlotKind::BnVar });
            }
            LayerNode::Dense(d) => {
                slots.push(SlotSpec {
                    name: d.weight.clone(),
                    shape: Shape::new(d.out_len, d.in_len, 1, 1),
                    kind: SlotKind::DenseWeight { fan_in: d.in_len },
                });
                slots.push(SlotSpec {
                    name: d.bias.clone(),
                    shape: Shape::new(d.out_len, 1, 1, 1),
                    kind: SlotKind::Bias,
                });
            }
            LayerNode::Residual(r) => collect_slots(&r.body, slots),
            LayerNode::Rrdb(r) => {
                for db in &r.blocks {
                    for c in &db.convs {
                        push_conv_slots(c, slots);
                    }
                }
            }
            LayerNode::Act(_) | LayerNode::PixelShuffle { .. } | LayerNode::Flatten => {}
        }
    }
}

/// Builds a graph directly from nodes; used by tests and internal tooling.
#[cfg(test)]
pub(crate) fn graph_from_nodes(name: &str, nodes: Vec<LayerNode>) -> Result<LayerGraph, ModelError> {
    let slots = derive_slots(&nodes)?;
    Ok(LayerGraph {
        name: name.to_string(),
        preset_id: name.to_string(),
        scale: 2,
        input_channels: 3,
        resample_only: false,
        layers: nodes,
        slots,
    })
}
