//! Desk-scale training: reconstruction and adversarial losses, alternating
//! generator/discriminator gradient-descent steps, convergence detection, and
//! finite-difference gradient verification.
//!
//! Training runs in f32 like inference; `grad_check` is the one place that
//! executes graphs in f64, because it compares against a numeric oracle.

use crate::models::{
    backward_nodes, forward, forward_with_trace, run_nodes, validate_weights, LayerGraph,
    LayerNode, ModelError, WeightStore, Weights,
};
use crate::tensor::{Activation, Scalar, Shape, Tensor, TensorError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::io::{self, Write};
use std::str::FromStr;
use thiserror::Error;

/// Finite-difference step used by [`grad_check`], in f64.
pub const FD_STEP: f64 = 1e-3;

#[derive(Debug, Error)]
pub enum TrainError {
    #[error("invalid training configuration: {0}")]
    InvalidConfig(String),
    #[error("score/logit input invalid: {0}")]
    Domain(String),
    #[error("mode requires a discriminator but none was provided")]
    MissingDiscriminator,
    #[error("training aborted at step {step}: {detail}")]
    Aborted { step: usize, detail: String },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Pointwise reconstruction loss over equal-shape tensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossKind {
    L1,
    Mse,
}

impl LossKind {
    /// Mean loss value, accumulated in f64.
    pub fn value<T: Scalar>(self, pred: &Tensor<T>, target: &Tensor<T>) -> Result<f64, TrainError> {
        Ok(self.value_and_grad(pred, target)?.0)
    }

    /// Mean loss and its gradient with respect to `pred`.
    pub fn value_and_grad<T: Scalar>(
        self,
        pred: &Tensor<T>,
        target: &Tensor<T>,
    ) -> Result<(f64, Tensor<T>), TrainError> {
        if pred.shape() != target.shape() {
            return Err(TensorError::ShapeMismatch {
                op: "loss",
                detail: format!("pred {} vs target {}", pred.shape(), target.shape()),
            }
            .into());
        }
        let n = pred.len().max(1);
        let inv_n = 1.0 / n as f64;
        let mut acc = 0.0f64;
        let mut grad = Vec::with_capacity(pred.len());
        for (&p, &t) in pred.data().iter().zip(target.data()) {
            let d = (p - t).to_f64().unwrap_or(f64::NAN);
            match self {
                LossKind::L1 => {
                    acc += d.abs();
                    let s = if d == 0.0 { 0.0 } else { d.signum() };
                    grad.push(T::from_f64(s * inv_n));
                }
                LossKind::Mse => {
                    acc += d * d;
                    grad.push(T::from_f64(2.0 * d * inv_n));
                }
            }
        }
        Ok((acc * inv_n, Tensor::new(pred.shape(), grad)?))
    }
}

/// Mean absolute difference between two equal-shape tensors.
pub fn l1_loss<T: Scalar>(pred: &Tensor<T>, target: &Tensor<T>) -> Result<f64, TrainError> {
    LossKind::L1.value(pred, target)
}

fn clamp_prob(p: f64) -> f64 {
    p.clamp(1e-7, 1.0 - 1e-7)
}

fn sigmoid(z: f64) -> f64 {
    Activation::Sigmoid.eval(z)
}

fn check_scores(name: &str, scores: &[f64]) -> Result<(), TrainError> {
    if scores.is_empty() {
        return Err(TrainError::Domain(format!("{name}: empty score batch")));
    }
    for &s in scores {
        if !s.is_finite() || !(0.0..=1.0).contains(&s) {
            return Err(TrainError::Domain(format!(
                "{name}: score {s} outside the probability range"
            )));
        }
    }
    Ok(())
}

/// Binary cross-entropy GAN losses from discriminator probabilities.
///
/// Returns `(g_loss, d_loss)` where `d_loss = -mean(log d_real + log(1 -
/// d_fake))` over paired batches and `g_loss = -mean(log d_fake)`.
/// Probabilities are clamped at 1e-7 from both ends before the logs.
pub fn gan_losses(d_real: &[f64], d_fake: &[f64]) -> Result<(f64, f64), TrainError> {
    check_scores("d_real", d_real)?;
    check_scores("d_fake", d_fake)?;
    if d_real.len() != d_fake.len() {
        return Err(TrainError::Domain(format!(
            "real/fake batches must pair up: {} vs {}",
            d_real.len(),
            d_fake.len()
        )));
    }
    let n = d_real.len() as f64;
    let mut d_loss = 0.0;
    let mut g_loss = 0.0;
    for (&pr, &pf) in d_real.iter().zip(d_fake) {
        d_loss -= clamp_prob(pr).ln() + (1.0 - clamp_prob(pf)).ln();
        g_loss -= clamp_prob(pf).ln();
    }
    Ok((g_loss / n, d_loss / n))
}

fn check_logits(name: &str, logits: &[f64]) -> Result<(), TrainError> {
    if logits.is_empty() {
        return Err(TrainError::Domain(format!("{name}: empty logit batch")));
    }
    if logits.iter().any(|v| !v.is_finite()) {
        return Err(TrainError::Domain(format!("{name}: non-finite logit")));
    }
    Ok(())
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Relativistic-average GAN losses from raw discriminator logits.
///
/// `D_ra(real) = sigmoid(c_real - mean(c_fake))` and symmetrically for fake.
/// Returns `(g_loss, d_loss)`; `g_loss` is `d_loss` with the real/fake roles
/// exchanged. Sigmoid outputs are clamped at 1e-7 before the logs.
pub fn rad_losses(c_real: &[f64], c_fake: &[f64]) -> Result<(f64, f64), TrainError> {
    check_logits("c_real", c_real)?;
    check_logits("c_fake", c_fake)?;
    let mr = mean(c_real);
    let mf = mean(c_fake);
    let d_loss = -c_real.iter().map(|&c| clamp_prob(sigmoid(c - mf)).ln()).sum::<f64>()
        / c_real.len() as f64
        - c_fake
            .iter()
            .map(|&c| (1.0 - clamp_prob(sigmoid(c - mr))).ln())
            .sum::<f64>()
            / c_fake.len() as f64;
    let g_loss = -c_fake.iter().map(|&c| clamp_prob(sigmoid(c - mr)).ln()).sum::<f64>()
        / c_fake.len() as f64
        - c_real
            .iter()
            .map(|&c| (1.0 - clamp_prob(sigmoid(c - mf))).ln())
            .sum::<f64>()
            / c_real.len() as f64;
    Ok((g_loss, d_loss))
}

/// Gradients of the relativistic-average `d_loss` with respect to both logit
/// batches. Derived by differentiating through the batch means.
fn rad_d_grads(c_real: &[f64], c_fake: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mr = mean(c_real);
    let mf = mean(c_fake);
    let n = c_real.len() as f64;
    let m = c_fake.len() as f64;
    let mean_sig_fake = c_fake.iter().map(|&c| sigmoid(c - mr)).sum::<f64>() / m;
    let mean_one_minus_sig_real =
        c_real.iter().map(|&c| 1.0 - sigmoid(c - mf)).sum::<f64>() / n;
    let gr = c_real
        .iter()
        .map(|&c| -((1.0 - sigmoid(c - mf)) + mean_sig_fake) / n)
        .collect();
    let gf = c_fake
        .iter()
        .map(|&c| (sigmoid(c - mr) + mean_one_minus_sig_real) / m)
        .collect();
    (gr, gf)
}

/// Gradient of the relativistic-average `g_loss` with respect to the fake
/// logits (the real logits do not depend on the generator; the fake mean
/// feeding the real-side term does).
fn rad_g_grad_fake(c_real: &[f64], c_fake: &[f64]) -> Vec<f64> {
    let mr = mean(c_real);
    let mf = mean(c_fake);
    let m = c_fake.len() as f64;
    let mean_sig_real = c_real.iter().map(|&c| sigmoid(c - mf)).sum::<f64>() / c_real.len() as f64;
    c_fake
        .iter()
        .map(|&c| -((1.0 - sigmoid(c - mr)) + mean_sig_real) / m)
        .collect()
}

/// What the training step optimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrainMode {
    /// Reconstruction only; the discriminator is unused.
    L1Only,
    /// Standard binary cross-entropy adversarial training.
    Gan,
    /// Relativistic-average adversarial training on logits.
    Ragan,
}

impl FromStr for TrainMode {
    type Err = TrainError;
    fn from_str(s: &str) -> Result<TrainMode, TrainError> {
        match s {
            "l1_only" => Ok(TrainMode::L1Only),
            "gan" => Ok(TrainMode::Gan),
            "ragan" => Ok(TrainMode::Ragan),
            other => Err(TrainError::InvalidConfig(format!(
                "unknown mode `{other}`: expected l1_only, gan, or ragan"
            ))),
        }
    }
}

impl std::fmt::Display for TrainMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TrainMode::L1Only => "l1_only",
            TrainMode::Gan => "gan",
            TrainMode::Ragan => "ragan",
        })
    }
}

/// Hyperparameters of one training run.
#[derive(Debug, Clone)]
pub struct TrainConfig {
    pub steps_max: usize,
    pub batch: usize,
    pub learning_rate: f64,
    pub seed: u64,
    pub convergence_window: usize,
    pub convergence_eps: f64,
    pub mode: TrainMode,
}

impl Default for TrainConfig {
    fn default() -> TrainConfig {
        TrainConfig {
            steps_max: 100,
            batch: 1,
            learning_rate: 1e-3,
            seed: 0,
            convergence_window: 50,
            convergence_eps: 1e-3,
            mode: TrainMode::L1Only,
        }
    }
}

impl TrainConfig {
    /// Rejects configurations that cannot run. A zero learning rate is
    /// permitted (the step is then the identity on weights); negative or
    /// non-finite rates are not.
    pub fn validate(&self) -> Result<(), TrainError> {
        if !self.learning_rate.is_finite() || self.learning_rate < 0.0 {
            return Err(TrainError::InvalidConfig(format!(
                "learning_rate must be finite and non-negative, got {}",
                self.learning_rate
            )));
        }
        if self.convergence_window < 2 {
            return Err(TrainError::InvalidConfig(format!(
                "convergence_window must be at least 2, got {}",
                self.convergence_window
            )));
        }
        if self.batch == 0 {
            return Err(TrainError::InvalidConfig("batch must be at least 1".into()));
        }
        if !(self.convergence_eps > 0.0) {
            return Err(TrainError::InvalidConfig(format!(
                "convergence_eps must be positive, got {}",
                self.convergence_eps
            )));
        }
        Ok(())
    }
}

/// Per-step losses. `l1` is always the reconstruction loss of the generator
/// output, whatever the mode optimizes.
#[derive(Debug, Clone, PartialEq)]
pub struct LossReport {
    pub step: usize,
    pub g_loss: f64,
    pub d_loss: f64,
    pub l1: f64,
}

/// One training example: low-resolution input and high-resolution target.
#[derive(Debug, Clone)]
pub struct TrainBatch {
    pub input: Tensor,
    pub target: Tensor,
}

/// Generator (and optional discriminator) graphs plus their live weights.
#[derive(Debug, Clone)]
pub struct TrainState {
    pub gen: LayerGraph,
    pub gen_weights: WeightStore,
    pub disc: Option<LayerGraph>,
    pub disc_weights: Option<WeightStore>,
    pub step: usize,
}

impl TrainState {
    /// Seeds generator weights from `config.seed` and discriminator weights
    /// from `config.seed + 1`, making the whole run a function of the config.
    pub fn new(
        gen: LayerGraph,
        disc: Option<LayerGraph>,
        config: &TrainConfig,
    ) -> Result<TrainState, TrainError> {
        config.validate()?;
        if gen.resample_only {
            return Err(TrainError::InvalidConfig(
                "the bicubic pseudo-model has no weights to train".into(),
            ));
        }
        if matches!(config.mode, TrainMode::Gan | TrainMode::Ragan) && disc.is_none() {
            return Err(TrainError::MissingDiscriminator);
        }
        let gen_weights = crate::models::init_weights(&gen, config.seed);
        let disc_weights = disc
            .as_ref()
            .map(|d| crate::models::init_weights(d, config.seed.wrapping_add(1)));
        Ok(TrainState {
            gen,
            gen_weights,
            disc,
            disc_weights,
            step: 0,
        })
    }
}

fn sgd_update(graph: &LayerGraph, weights: &mut WeightStore, grads: &Weights<f32>, lr: f64) {
    if lr == 0.0 {
        return; // identity on weights, bit-exactly
    }
    let lr = lr as f32;
    for slot in graph.slots() {
        if !slot.trainable() {
            continue;
        }
        if let Some(g) = grads.get(&slot.name) {
            let w = weights.get_mut(&slot.name).expect("complete store");
            for (wi, gi) in w.data_mut().iter_mut().zip(g.data()) {
                *wi -= lr * gi;
            }
        }
    }
}

fn scores_f64(t: &Tensor<f32>) -> Vec<f64> {
    t.data().iter().map(|&v| v as f64).collect()
}

fn grad_tensor(shape: Shape, values: impl Iterator<Item = f64>) -> Result<Tensor<f32>, TrainError> {
    Ok(Tensor::new(shape, values.map(|v| v as f32).collect())?)
}

/// The discriminator node list with any trailing sigmoid removed, exposing
/// raw logits for the relativistic-average formulation.
fn logit_nodes(disc: &LayerGraph) -> &[LayerNode] {
    match disc.layers.last() {
        Some(LayerNode::Act(Activation::Sigmoid)) => &disc.layers[..disc.layers.len() - 1],
        _ => &disc.layers,
    }
}

/// One optimization step: discriminator update first (gan/ragan), then the
/// generator. Returns the losses measured during the step.
pub fn train_step(
    state: &mut TrainState,
    batch: &TrainBatch,
    config: &TrainConfig,
) -> Result<LossReport, TrainError> {
    let step = state.step;
    let report = train_step_inner(state, batch, config).map_err(|e| match &e {
        TrainError::Tensor(TensorError::NonFinite { .. }) => TrainError::Aborted {
            step,
            detail: e.to_string(),
        },
        TrainError::Model(ModelError::Tensor(TensorError::NonFinite { .. })) => {
            TrainError::Aborted {
                step,
                detail: e.to_string(),
            }
        }
        _ => e,
    })?;
    state.step += 1;
    Ok(report)
}

fn train_step_inner(
    state: &mut TrainState,
    batch: &TrainBatch,
    config: &TrainConfig,
) -> Result<LossReport, TrainError> {
    config.validate()?;
    let step = state.step;
    let lr = config.learning_rate;
    let TrainState {
        gen,
        gen_weights,
        disc,
        disc_weights,
        ..
    } = state;

    // Generator forward, taped: the super-resolved batch is reused as the
    // (detached) fake input of the discriminator phase and for the generator
    // update afterwards.
    let (sr, gen_tape) = forward_with_trace(gen, gen_weights, &batch.input)?;
    let l1 = l1_loss(&sr, &batch.target)?;

    let ensure_finite = |name: &str, v: f64| -> Result<f64, TrainError> {
        if v.is_finite() {
            Ok(v)
        } else {
            Err(TrainError::Aborted {
                step,
                detail: format!("{name} became non-finite ({v})"),
            })
        }
    };
    ensure_finite("l1", l1)?;

    let (g_loss, d_loss) = match config.mode {
        TrainMode::L1Only => {
            let (_, grad) = LossKind::L1.value_and_grad(&sr, &batch.target)?;
            let mut grads = Weights::new();
            backward_nodes(&gen.layers, gen_weights, &gen_tape, &grad, &mut grads)?;
            sgd_update(gen, gen_weights, &grads, lr);
            (l1, 0.0)
        }
        TrainMode::Gan => {
            let (dg, dw) = match (disc.as_ref(), disc_weights.as_mut()) {
                (Some(g), Some(w)) => (g, w),
                _ => return Err(TrainError::MissingDiscriminator),
            };
            // Discriminator update on real targets and detached fakes.
            let (p_real, tape_r) = forward_with_trace(dg, dw, &batch.target)?;
            let (p_fake, tape_f) = forward_with_trace(dg, dw, &sr)?;
            let pr = scores_f64(&p_real);
            let pf = scores_f64(&p_fake);
            let (_, d_loss) = gan_losses(&pr, &pf)?;
            let d_loss = ensure_finite("d_loss", d_loss)?;
            let n = pr.len() as f64;
            let g_real = grad_tensor(p_real.shape(), pr.iter().map(|&p| -1.0 / (n * clamp_prob(p))))?;
            let g_fake =
                grad_tensor(p_fake.shape(), pf.iter().map(|&p| 1.0 / (n * (1.0 - clamp_prob(p)))))?;
            let mut gd = Weights::new();
            backward_nodes(&dg.layers, dw, &tape_r, &g_real, &mut gd)?;
            backward_nodes(&dg.layers, dw, &tape_f, &g_fake, &mut gd)?;
            sgd_update(dg, dw, &gd, lr);

            // Generator update against the freshly updated discriminator.
            let (p_fake2, tape_f2) = forward_with_trace(dg, dw, &sr)?;
            let pf2 = scores_f64(&p_fake2);
            let m = pf2.len() as f64;
            let g_loss = -pf2.iter().map(|&p| clamp_prob(p).ln()).sum::<f64>() / m;
            let g_loss = ensure_finite("g_loss", g_loss)?;
            let g_prob =
                grad_tensor(p_fake2.shape(), pf2.iter().map(|&p| -1.0 / (m * clamp_prob(p))))?;
            let mut sink = Weights::new();
            let g_sr = backward_nodes(&dg.layers, dw, &tape_f2, &g_prob, &mut sink)?;
            let mut gg = Weights::new();
            backward_nodes(&gen.layers, gen_weights, &gen_tape, &g_sr, &mut gg)?;
            sgd_update(gen, gen_weights, &gg, lr);
            (g_loss, d_loss)
        }
        TrainMode::Ragan => {
            let (dg, dw) = match (disc.as_ref(), disc_weights.as_mut()) {
                (Some(g), Some(w)) => (g, w),
                _ => return Err(TrainError::MissingDiscriminator),
            };
            let nodes = logit_nodes(dg);
            validate_weights(dg, dw)?;
            // Discriminator update on raw logits.
            let mut tape_r = Vec::new();
            let c_real_t = run_nodes(nodes, dw, &batch.target, Some(&mut tape_r))?;
            let mut tape_f = Vec::new();
            let c_fake_t = run_nodes(nodes, dw, &sr, Some(&mut tape_f))?;
            let cr = scores_f64(&c_real_t);
            let cf = scores_f64(&c_fake_t);
            let (_, d_loss) = rad_losses(&cr, &cf)?;
            let d_loss = ensure_finite("d_loss", d_loss)?;
            let (gr, gf) = rad_d_grads(&cr, &cf);
            let g_real = grad_tensor(c_real_t.shape(), gr.into_iter())?;
            let g_fake = grad_tensor(c_fake_t.shape(), gf.into_iter())?;
            let mut gd = Weights::new();
            backward_nodes(nodes, dw, &tape_r, &g_real, &mut gd)?;
            backward_nodes(nodes, dw, &tape_f, &g_fake, &mut gd)?;
            sgd_update(dg, dw, &gd, lr);

            // Generator update: real logits are constants, fake logits carry
            // the gradient (including through the fake batch mean).
            let c_real2 = run_nodes(nodes, dw, &batch.target, None)?;
            let mut tape_f2 = Vec::new();
            let c_fake2_t = run_nodes(nodes, dw, &sr, Some(&mut tape_f2))?;
            let cr2 = scores_f64(&c_real2);
            let cf2 = scores_f64(&c_fake2_t);
            let (g_loss, _) = rad_losses(&cr2, &cf2)?;
            let g_loss = ensure_finite("g_loss", g_loss)?;
            let g_logit = grad_tensor(
                c_fake2_t.shape(),
                rad_g_grad_fake(&cr2, &cf2).into_iter(),
            )?;
            let mut sink = Weights::new();
            let g_sr = backward_nodes(nodes, dw, &tape_f2, &g_logit, &mut sink)?;
            let mut gg = Weights::new();
            backward_nodes(&gen.layers, gen_weights, &gen_tape, &g_sr, &mut gg)?;
            sgd_update(gen, gen_weights, &gg, lr);
            (g_loss, d_loss)
        }
    };

    Ok(LossReport {
        step,
        g_loss,
        d_loss,
        l1,
    })
}

/// True when both loss curves have stabilized: the range (max - min) of
/// `g_loss` and of `d_loss` over the last `window` reports is below `eps`.
fn converged(reports: &[LossReport], window: usize, eps: f64) -> bool {
    if reports.len() < window {
        return false;
    }
    let tail = &reports[reports.len() - window..];
    let range = |f: fn(&LossReport) -> f64| -> f64 {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for r in tail {
            lo = lo.min(f(r));
            hi = hi.max(f(r));
        }
        hi - lo
    };
    range(|r| r.g_loss) < eps && range(|r| r.d_loss) < eps
}

/// Runs training steps over `dataset` (cycled in order) until `steps_max`
/// or loss stabilization, whichever comes first.
pub fn train_loop(
    state: &mut TrainState,
    dataset: &[TrainBatch],
    config: &TrainConfig,
) -> Result<Vec<LossReport>, TrainError> {
    config.validate()?;
    if dataset.is_empty() {
        return Err(TrainError::InvalidConfig("dataset must be non-empty".into()));
    }
    let mut reports = Vec::new();
    for i in 0..config.steps_max {
        let batch = &dataset[i % dataset.len()];
        let report = train_step(state, batch, config)?;
        reports.push(report);
        if converged(&reports, config.convergence_window, config.convergence_eps) {
            break;
        }
    }
    Ok(reports)
}

/// Writes loss reports as CSV with header `step,g_loss,d_loss,l1`.
pub fn write_loss_csv<W: Write>(reports: &[LossReport], out: &mut W) -> io::Result<()> {
    writeln!(out, "step,g_loss,d_loss,l1")?;
    for r in reports {
        writeln!(out, "{},{},{},{}", r.step, r.g_loss, r.d_loss, r.l1)?;
    }
    Ok(())
}

/// Index of one probed coordinate: which trainable slot, which element.
fn locate_coordinate<'a>(
    slots: &[(&'a str, usize)],
    mut global: usize,
) -> (&'a str, usize) {
    for (name, len) in slots {
        if global < *len {
            return (name, global);
        }
        global -= len;
    }
    unreachable!("global coordinate within total length");
}

/// Compares the reverse-mode gradient against central finite differences in
/// f64 at `probes` randomly chosen trainable weight coordinates; returns the
/// maximum relative error `|a-b| / max(1e-6, |a|, |b|)`.
///
/// The check input and loss target are generated from `seed`; the
/// discriminator is probed at its declared input size, generators at 16x16.
pub fn grad_check(
    graph: &LayerGraph,
    weights: &WeightStore,
    loss: LossKind,
    probes: usize,
    seed: u64,
) -> Result<f64, TrainError> {
    if probes == 0 {
        return Err(TrainError::InvalidConfig("probes must be at least 1".into()));
    }
    let slots: Vec<(&str, usize)> = graph
        .slots()
        .iter()
        .filter(|s| s.trainable())
        .map(|s| (s.name.as_str(), s.shape.len()))
        .collect();
    let total: usize = slots.iter().map(|(_, l)| l).sum();
    if graph.resample_only || total == 0 {
        return Err(ModelError::NoParameters(graph.name.clone()).into());
    }

    let side = crate::models::ArchPreset::by_id(&graph.preset_id)
        .map(|p| if p.is_discriminator() { p.disc_input } else { 16 })
        .unwrap_or(16);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let x_shape = Shape::new(1, graph.input_channels, side, side);
    let x = Tensor::<f64>::new(x_shape, (0..x_shape.len()).map(|_| rng.gen::<f64>()).collect())?;

    let w = weights.cast::<f64>();
    let (y, tape) = forward_with_trace(graph, &w, &x)?;
    let t_shape = y.shape();
    let target =
        Tensor::<f64>::new(t_shape, (0..t_shape.len()).map(|_| rng.gen::<f64>()).collect())?;
    let (_, loss_grad) = loss.value_and_grad(&y, &target)?;
    let mut grads = Weights::new();
    backward_nodes(&graph.layers, &w, &tape, &loss_grad, &mut grads)?;

    let mut max_rel = 0.0f64;
    for _ in 0..probes {
        let (slot, idx) = locate_coordinate(&slots, rng.gen_range(0..total));
        let analytic = grads.get(slot).map_or(0.0, |t| t.data()[idx]);

        let mut wp = w.clone();
        wp.get_mut(slot).expect("trainable slot").data_mut()[idx] += FD_STEP;
        let lp = loss.value(&forward(graph, &wp, &x)?, &target)?;
        let mut wm = w.clone();
        wm.get_mut(slot).expect("trainable slot").data_mut()[idx] -= FD_STEP;
        let lm = loss.value(&forward(graph, &wm, &x)?, &target)?;
        let numeric = (lp - lm) / (2.0 * FD_STEP);

        let rel = (analytic - numeric).abs() / analytic.abs().max(numeric.abs()).max(1e-6);
        max_rel = max_rel.max(rel);
    }
    Ok(max_rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, fd_test_weights, init_weights, ArchPreset};
    use rand::rngs::StdRng;

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn l1_loss_matches_oracle() {
        let shape = Shape::new(1, 2, 3, 4);
        let a = Tensor::new(shape, (0..24).map(|i| i as f32 / 7.0).collect()).unwrap();
        let b = Tensor::new(shape, (0..24).map(|i| (i * i % 13) as f32 / 5.0).collect()).unwrap();
        assert_eq!(l1_loss(&a, &a).unwrap(), 0.0);
        let c = a.map(|v| v + 0.5);
        assert!(approx(l1_loss(&c, &a).unwrap(), 0.5, 1e-7));
        // Independent scalar loop.
        let mut want = 0.0f64;
        for i in 0..24 {
            want += ((a.data()[i] - b.data()[i]) as f64).abs();
        }
        want /= 24.0;
        assert!(approx(l1_loss(&a, &b).unwrap(), want, 1e-12));
        // Shape mismatch rejected.
        let d = Tensor::zeros(Shape::new(1, 2, 3, 5));
        assert!(l1_loss(&a, &d).is_err());
    }

    #[test]
    fn loss_gradients_match_finite_differences() {
        let shape = Shape::new(1, 1, 2, 3);
        let p64 = Tensor::<f64>::new(shape, vec![0.3, -0.7, 1.2, 0.05, -0.4, 0.9]).unwrap();
        let t64 = Tensor::<f64>::new(shape, vec![0.1, 0.2, 1.0, -0.3, -0.4 + 0.21, 0.8]).unwrap();
        for kind in [LossKind::L1, LossKind::Mse] {
            let (_, grad) = kind.value_and_grad(&p64, &t64).unwrap();
            for i in 0..6 {
                let h = 1e-6;
                let mut pp = p64.clone();
                pp.data_mut()[i] += h;
                let mut pm = p64.clone();
                pm.data_mut()[i] -= h;
                let num = (kind.value(&pp, &t64).unwrap() - kind.value(&pm, &t64).unwrap()) / (2.0 * h);
                assert!(
                    approx(grad.data()[i], num, 1e-6),
                    "{kind:?} coord {i}: {} vs {num}",
                    grad.data()[i]
                );
            }
        }
    }

    #[test]
    fn gan_losses_closed_forms() {
        let (g, d) = gan_losses(&[0.5, 0.5], &[0.5, 0.5]).unwrap();
        assert!(approx(d, 2.0 * std::f64::consts::LN_2, 1e-12));
        assert!(approx(g, std::f64::consts::LN_2, 1e-12));
        // Near-perfect discriminator drives d_loss toward zero.
        let (_, d) = gan_losses(&[0.999_999], &[1e-6]).unwrap();
        assert!(d < 1e-4, "d_loss {d}");
        // Random scores against a direct formula evaluation.
        let pr = [0.3, 0.8, 0.55];
        let pf = [0.2, 0.9, 0.45];
        let (g, d) = gan_losses(&pr, &pf).unwrap();
        let mut dw = 0.0;
        let mut gw = 0.0;
        for i in 0..3 {
            dw -= pr[i].ln() + (1.0 - pf[i]).ln();
            gw -= pf[i].ln();
        }
        assert!(approx(d, dw / 3.0, 1e-12));
        assert!(approx(g, gw / 3.0, 1e-12));
    }

    #[test]
    fn gan_losses_domain_checks() {
        assert!(gan_losses(&[1.5], &[0.5]).is_err());
        assert!(gan_losses(&[0.5], &[-0.1]).is_err());
        assert!(gan_losses(&[f64::NAN], &[0.5]).is_err());
        assert!(gan_losses(&[], &[]).is_err());
        assert!(gan_losses(&[0.5, 0.5], &[0.5]).is_err());
        // Exact 0/1 are clamped, not rejected.
        assert!(gan_losses(&[1.0], &[0.0]).is_ok());
    }

    #[test]
    fn rad_losses_symmetry_and_closed_form() {
        // Constant equal batches: every logit matches the opposing mean, so
        // every relativistic probability is exactly 0.5.
        let (g, d) = rad_losses(&[0.7, 0.7], &[0.7, 0.7]).unwrap();
        assert!(approx(d, 2.0 * std::f64::consts::LN_2, 1e-12));
        assert!(approx(g, 2.0 * std::f64::consts::LN_2, 1e-12));
        // Identical heterogeneous batches still give g == d by symmetry.
        let (g, d) = rad_losses(&[0.7, -0.2], &[0.7, -0.2]).unwrap();
        assert!(approx(g, d, 1e-12));
        // Swapping roles exchanges the two losses.
        let cr = [1.3, -0.4, 0.2];
        let cf = [0.9, 0.1, -1.1];
        let (g1, d1) = rad_losses(&cr, &cf).unwrap();
        let (g2, d2) = rad_losses(&cf, &cr).unwrap();
        assert!(approx(g1, d2, 1e-12));
        assert!(approx(d1, g2, 1e-12));
        assert!(rad_losses(&[f64::INFINITY], &[0.0]).is_err());
    }

    #[test]
    fn sigmoid_reflection_identity() {
        use rand::Rng;
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..100 {
            let a: f64 = rng.gen_range(-20.0..20.0);
            let b: f64 = rng.gen_range(-20.0..20.0);
            let s = sigmoid(a - b) + sigmoid(b - a);
            assert!((s - 1.0).abs() < 1e-9, "sigmoid identity violated: {s}");
        }
    }

    #[test]
    fn rad_gradients_match_finite_differences() {
        let cr = vec![0.8, -0.3, 1.1, 0.0];
        let cf = vec![-0.5, 0.4, 0.9];
        let (gr, gf) = rad_d_grads(&cr, &cf);
        let gg = rad_g_grad_fake(&cr, &cf);
        let h = 1e-6;
        for i in 0..cr.len() {
            let mut p = cr.clone();
            p[i] += h;
            let mut m = cr.clone();
            m[i] -= h;
            let num = (rad_losses(&p, &cf).unwrap().1 - rad_losses(&m, &cf).unwrap().1) / (2.0 * h);
            assert!(approx(gr[i], num, 1e-8), "d_loss/d_real[{i}]: {} vs {num}", gr[i]);
        }
        for j in 0..cf.len() {
            let mut p = cf.clone();
            p[j] += h;
            let mut m = cf.clone();
            m[j] -= h;
            let num = (rad_losses(&cr, &p).unwrap().1 - rad_losses(&cr, &m).unwrap().1) / (2.0 * h);
            assert!(approx(gf[j], num, 1e-8), "d_loss/d_fake[{j}]: {} vs {num}", gf[j]);
            let numg =
                (rad_losses(&cr, &p).unwrap().0 - rad_losses(&cr, &m).unwrap().0) / (2.0 * h);
            assert!(approx(gg[j], numg, 1e-8), "g_loss/d_fake[{j}]: {} vs {numg}", gg[j]);
        }
    }

    fn edsr_mini_state(mode: TrainMode, seed: u64) -> (TrainState, TrainConfig) {
        let gen = build_model(&ArchPreset::by_id("edsr-mini").unwrap(), 2).unwrap();
        let disc = if mode == TrainMode::L1Only {
            None
        } else {
            Some(build_model(&ArchPreset::by_id("srgan_disc-mini").unwrap(), 2).unwrap())
        };
        let config = TrainConfig {
            mode,
            seed,
            ..TrainConfig::default()
        };
        let state = TrainState::new(gen, disc, &config).unwrap();
        (state, config)
    }

    fn synthetic_batch(hr_side: usize, seed: u64) -> TrainBatch {
        use rand::Rng;
        let mut rng = StdRng::seed_from_u64(seed);
        let hr_shape = Shape::new(1, 3, hr_side, hr_side);
        let target = Tensor::new(
            hr_shape,
            (0..hr_shape.len()).map(|_| rng.gen::<f32>()).collect(),
        )
        .unwrap();
        // Box-average 2x2 blocks as the low-resolution input.
        let lr_side = hr_side / 2;
        let input = Tensor::from_fn(Shape::new(1, 3, lr_side, lr_side), |n, c, y, x| {
            let mut acc = 0.0f32;
            for dy in 0..2 {
                for dx in 0..2 {
                    acc += target.at(n, c, 2 * y + dy, 2 * x + dx);
                }
            }
            acc / 4.0
        });
        TrainBatch { input, target }
    }

    #[test]
    fn l1_training_reduces_loss() {
        let (mut state, config) = edsr_mini_state(TrainMode::L1Only, 7);
        let batch = synthetic_batch(16, 11);
        let mut reports = Vec::new();
        for _ in 0..50 {
            reports.push(train_step(&mut state, &batch, &config).unwrap());
        }
        let first = reports.first().unwrap().l1;
        let last = reports.last().unwrap().l1;
        assert!(last < first, "l1 did not decrease: {first} -> {last}");
        assert!(reports.iter().all(|r| r.l1 >= 0.0 && r.l1.is_finite()));
    }

    #[test]
    fn zero_learning_rate_is_identity() {
        let (mut state, mut config) = edsr_mini_state(TrainMode::L1Only, 3);
        config.learning_rate = 0.0;
        let before: Vec<(String, Vec<u32>)> = state
            .gen_weights
            .iter()
            .map(|(k, t)| (k.to_string(), t.data().iter().map(|v| v.to_bits()).collect()))
            .collect();
        let batch = synthetic_batch(16, 2);
        train_step(&mut state, &batch, &config).unwrap();
        for (name, bits) in before {
            let after: Vec<u32> = state
                .gen_weights
                .get(&name)
                .unwrap()
                .data()
                .iter()
                .map(|v| v.to_bits())
                .collect();
            assert_eq!(bits, after, "slot {name} changed under lr=0");
        }
    }

    #[test]
    fn identical_seeds_give_identical_loss_sequences() {
        let run = || {
            let (mut state, config) = edsr_mini_state(TrainMode::Gan, 17);
            let dataset = vec![synthetic_batch(16, 4), synthetic_batch(16, 5)];
            let cfg = TrainConfig {
                steps_max: 6,
                ..config
            };
            train_loop(&mut state, &dataset, &cfg).unwrap()
        };
        let a = run();
        let b = run();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.g_loss.to_bits(), y.g_loss.to_bits());
            assert_eq!(x.d_loss.to_bits(), y.d_loss.to_bits());
            assert_eq!(x.l1.to_bits(), y.l1.to_bits());
        }
    }

    #[test]
    fn gan_and_ragan_steps_produce_finite_losses() {
        for mode in [TrainMode::Gan, TrainMode::Ragan] {
            let (mut state, config) = edsr_mini_state(mode, 23);
            let batch = synthetic_batch(16, 6);
            for _ in 0..5 {
                let r = train_step(&mut state, &batch, &config).unwrap();
                assert!(r.g_loss.is_finite() && r.d_loss.is_finite() && r.l1.is_finite());
                assert!(r.l1 >= 0.0);
            }
            assert_eq!(state.step, 5);
        }
    }

    #[test]
    fn missing_discriminator_is_rejected() {
        let gen = build_model(&ArchPreset::by_id("edsr-mini").unwrap(), 2).unwrap();
        let config = TrainConfig {
            mode: TrainMode::Gan,
            ..TrainConfig::default()
        };
        assert!(matches!(
            TrainState::new(gen, None, &config),
            Err(TrainError::MissingDiscriminator)
        ));
    }

    #[test]
    fn divergent_run_aborts_with_step_diagnostic() {
        let (mut state, mut config) = edsr_mini_state(TrainMode::L1Only, 1);
        config.learning_rate = 1e9; // guaranteed blow-up
        let dataset = vec![synthetic_batch(16, 8)];
        let cfg = TrainConfig {
            steps_max: 50,
            ..config
        };
        let err = train_loop(&mut state, &dataset, &cfg).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("step"), "diagnostic should name the step: {msg}");
    }

    #[test]
    fn loop_respects_steps_max_and_convergence() {
        // steps_max = 0: no steps, weights untouched.
        let (mut state, config) = edsr_mini_state(TrainMode::L1Only, 9);
        let w0: Vec<u32> = state
            .gen_weights
            .get("head.conv.weight")
            .unwrap()
            .data()
            .iter()
            .map(|v| v.to_bits())
            .collect();
        let dataset = vec![synthetic_batch(16, 3)];
        let cfg = TrainConfig {
            steps_max: 0,
            ..config.clone()
        };
        let reports = train_loop(&mut state, &dataset, &cfg).unwrap();
        assert!(reports.is_empty());
        let w1: Vec<u32> = state
            .gen_weights
            .get("head.conv.weight")
            .unwrap()
            .data()
            .iter()
            .map(|v| v.to_bits())
            .collect();
        assert_eq!(w0, w1);

        // Infinite eps: any window qualifies, so the loop stops at window size.
        let cfg = TrainConfig {
            steps_max: 100,
            convergence_window: 5,
            convergence_eps: f64::INFINITY,
            ..config
        };
        let reports = train_loop(&mut state, &dataset, &cfg).unwrap();
        assert_eq!(reports.len(), 5);
    }

    #[test]
    fn config_validation() {
        let mut c = TrainConfig::default();
        c.learning_rate = -1.0;
        assert!(c.validate().is_err());
        let mut c = TrainConfig::default();
        c.convergence_window = 1;
        assert!(c.validate().is_err());
        let mut c = TrainConfig::default();
        c.batch = 0;
        assert!(c.validate().is_err());
        assert!("l1_only".parse::<TrainMode>().is_ok());
        assert!("adam".parse::<TrainMode>().is_err());
    }

    #[test]
    fn loss_csv_format() {
        let reports = vec![
            LossReport { step: 0, g_loss: 0.5, d_loss: 1.25, l1: 0.5 },
            LossReport { step: 1, g_loss: 0.25, d_loss: 1.0, l1: 0.25 },
        ];
        let mut buf = Vec::new();
        write_loss_csv(&reports, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "step,g_loss,d_loss,l1\n0,0.5,1.25,0.5\n1,0.25,1,0.25\n");
    }

    #[test]
    fn grad_check_single_dense_layer_is_nearly_exact() {
        use crate::models::graph_from_nodes;
        use crate::models::LayerNode;
        let nodes = vec![LayerNode::Dense(crate::models::DenseLayer {
            in_len: 3 * 16 * 16,
            out_len: 6,
            weight: "fc.weight".into(),
            bias: "fc.bias".into(),
        })];
        let g = graph_from_nodes("dense_only", nodes).unwrap();
        let w = init_weights(&g, 40);
        let rel = grad_check(&g, &w, LossKind::L1, 16, 71).unwrap();
        assert!(rel < 1e-6, "dense-layer grad_check rel err {rel}");
    }

    #[test]
    fn grad_check_edsr_mini_within_tolerance() {
        let g = build_model(&ArchPreset::by_id("edsr-mini").unwrap(), 2).unwrap();
        let w = fd_test_weights(&g, 12);
        let rel = grad_check(&g, &w, LossKind::Mse, 16, 99).unwrap();
        assert!(rel < 1e-3, "edsr-mini grad_check rel err {rel}");
    }

    #[test]
    fn grad_check_rejects_degenerate_inputs() {
        let g = build_model(&ArchPreset::by_id("bicubic").unwrap(), 2).unwrap();
        assert!(grad_check(&g, &WeightStore::new(), LossKind::Mse, 4, 1).is_err());
        let g = build_model(&ArchPreset::by_id("edsr-mini").unwrap(), 2).unwrap();
        let w = init_weights(&g, 1);
        assert!(matches!(
            grad_check(&g, &w, LossKind::Mse, 0, 1),
            Err(TrainError::InvalidConfig(_))
        ));
    }
}
