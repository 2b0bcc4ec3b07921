//! Weight storage: the in-memory store, seeded initialization, and a binary
//! file container.
//!
//! Container layout: magic `SRWT`, little-endian u32 format version, u32
//! header length, a UTF-8 JSON header describing the graph and every slot,
//! then all slot payloads as little-endian f32 runs, contiguous and in the
//! same order as the graph declares its slots.

use super::{family, LayerGraph, ModelError, SlotKind};
use crate::tensor::{Scalar, Shape, Tensor};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

const MAGIC: &[u8; 4] = b"SRWT";
const VERSION: u32 = 1;

/// Named weight tensors. Also used to accumulate gradients by slot name.
#[derive(Debug, Clone, Default)]
pub struct Weights<T: Scalar = f32> {
    map: BTreeMap<String, Tensor<T>>,
}

/// The canonical f32 store that models train and persist with.
pub type WeightStore = Weights<f32>;

impl<T: Scalar> Weights<T> {
    pub fn new() -> Weights<T> {
        Weights { map: BTreeMap::new() }
    }

    pub fn get(&self, name: &str) -> Option<&Tensor<T>> {
        self.map.get(name)
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut Tensor<T>> {
        self.map.get_mut(name)
    }

    pub fn insert(&mut self, name: String, t: Tensor<T>) {
        self.map.insert(name, t);
    }

    pub fn remove(&mut self, name: &str) -> Option<Tensor<T>> {
        self.map.remove(name)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Tensor<T>)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Adds `t` into the named slot, inserting it if absent.
    pub fn accumulate(&mut self, name: &str, t: Tensor<T>) -> Result<(), ModelError> {
        match self.map.get_mut(name) {
            Some(cur) => {
                *cur = crate::tensor::elementwise_add(cur, &t)?;
            }
            None => {
                self.map.insert(name.to_string(), t);
            }
        }
        Ok(())
    }

    /// Adds a vector-valued gradient (bias, batch-norm affine) into a slot.
    pub fn accumulate_vec(&mut self, name: &str, v: Vec<T>) -> Result<(), ModelError> {
        let shape = Shape::new(v.len(), 1, 1, 1);
        let t = Tensor::new(shape, v)?;
        self.accumulate(name, t)
    }

    /// Converts every tensor to another scalar type.
    pub fn cast<U: Scalar>(&self) -> Weights<U> {
        Weights {
            map: self.map.iter().map(|(k, v)| (k.clone(), v.cast::<U>())).collect(),
        }
    }
}

/// Kaiming-style seeded initialization.
///
/// Weights draw from N(0, 2/fan_in); biases are zero; batch-norm starts as the
/// identity transform (gamma 1, beta 0, mean 0, var 1). ESRGAN convolutions
/// are additionally scaled by 0.1 so residual branches start near identity.
/// One ChaCha20 stream seeded with `seed` is consumed in slot declaration
/// order, which makes initialization reproducible across runs and platforms.
pub fn init_weights(graph: &LayerGraph, seed: u64) -> WeightStore {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let small_conv = family(&graph.preset_id) == "esrgan_gen";
    let mut store = WeightStore::new();
    for slot in graph.slots() {
        let n = slot.shape.len();
        let data: Vec<f32> = match slot.kind {
            SlotKind::ConvWeight { fan_in } => {
                let std = (2.0 / fan_in as f64).sqrt();
                let dist = Normal::new(0.0, std).expect("finite std");
                let factor = if small_conv { 0.1 } else { 1.0 };
                (0..n).map(|_| (dist.sample(&mut rng) * factor) as f32).collect()
            }
            SlotKind::DenseWeight { fan_in } => {
                let std = (2.0 / fan_in as f64).sqrt();
                let dist = Normal::new(0.0, std).expect("finite std");
                (0..n).map(|_| dist.sample(&mut rng) as f32).collect()
            }
            SlotKind::Bias | SlotKind::BnBeta | SlotKind::BnMean => vec![0.0; n],
            SlotKind::BnGamma | SlotKind::BnVar => vec![1.0; n],
        };
        store.insert(slot.name.clone(), Tensor::new(slot.shape, data).expect("slot shape"));
    }
    store
}

/// Initialization for finite-difference gradient verification.
///
/// Central differences are only a meaningful oracle where the network is
/// locally smooth; ReLU-family kinks crossed within the probe step bias the
/// estimate without any gradient bug being present. This variant shrinks all
/// weights by 10x and sets every bias to 0.5, which keeps activation inputs
/// well inside one linear piece for step sizes up to ~1e-2. Negative-branch
/// derivatives are covered separately by the per-op gradient tests.
pub fn fd_test_weights(graph: &LayerGraph, seed: u64) -> WeightStore {
    let mut store = init_weights(graph, seed);
    for slot in graph.slots() {
        match slot.kind {
            SlotKind::ConvWeight { .. } | SlotKind::DenseWeight { .. } => {
                for v in store.get_mut(&slot.name).expect("slot present").data_mut() {
                    *v *= 0.1;
                }
            }
            SlotKind::Bias => {
                for v in store.get_mut(&slot.name).expect("slot present").data_mut() {
                    *v = 0.5;
                }
            }
            _ => {}
        }
    }
    store
}

#[derive(Serialize, Deserialize)]
struct HeaderSlot {
    name: String,
    shape: [usize; 4],
    /// Byte offset of this slot's payload, relative to the payload start.
    offset: u64,
    trainable: bool,
}

#[derive(Serialize, Deserialize)]
struct Header {
    graph: String,
    preset: String,
    scale: u32,
    slots: Vec<HeaderSlot>,
}

/// Writes a complete weight store for `graph` to `path`.
pub fn save_weights(graph: &LayerGraph, weights: &WeightStore, path: &Path) -> Result<(), ModelError> {
    super::exec::validate_weights(graph, weights)?;
    let mut slots = Vec::with_capacity(graph.slots().len());
    let mut offset = 0u64;
    for s in graph.slots() {
        slots.push(HeaderSlot {
            name: s.name.clone(),
            shape: [s.shape.n, s.shape.c, s.shape.h, s.shape.w],
            offset,
            trainable: s.trainable(),
        });
        offset += (s.shape.len() * 4) as u64;
    }
    let header = Header {
        graph: graph.name.clone(),
        preset: graph.preset_id.clone(),
        scale: graph.scale,
        slots,
    };
    let header_bytes = serde_json::to_vec(&header)?;
    let mut out = Vec::with_capacity(12 + header_bytes.len() + offset as usize);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(header_bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&header_bytes);
    for s in graph.slots() {
        let t = weights.get(&s.name).expect("validated above");
        for &v in t.data() {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Reads a weight store from `path`, verifying it matches `graph` exactly:
/// same graph identity, same slots in the same order with the same shapes,
/// and a payload of exactly the declared size.
pub fn load_weights(graph: &LayerGraph, path: &Path) -> Result<WeightStore, ModelError> {
    let bytes = std::fs::read(path)?;
    if bytes.len() < 12 {
        return Err(ModelError::BadContainer("file shorter than fixed header".into()));
    }
    if &bytes[0..4] != MAGIC {
        return Err(ModelError::BadContainer("bad magic bytes".into()));
    }
    let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
    if version != VERSION {
        return Err(ModelError::BadVersion(version));
    }
    let header_len = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
    let payload_start = 12 + header_len;
    if bytes.len() < payload_start {
        return Err(ModelError::BadContainer("header extends past end of file".into()));
    }
    let header: Header = serde_json::from_slice(&bytes[12..payload_start])?;

    if header.graph != graph.name {
        return Err(ModelError::HeaderMismatch(format!(
            "file holds graph `{}`, expected `{}`",
            header.graph, graph.name
        )));
    }
    if header.preset != graph.preset_id || header.scale != graph.scale {
        return Err(ModelError::HeaderMismatch(format!(
            "file holds preset `{}` x{}, expected `{}` x{}",
            header.preset, header.scale, graph.preset_id, graph.scale
        )));
    }
    if header.slots.len() != graph.slots().len() {
        return Err(ModelError::HeaderMismatch(format!(
            "file declares {} slots, graph has {}",
            header.slots.len(),
            graph.slots().len()
        )));
    }

    let mut store = WeightStore::new();
    let mut expected_offset = 0u64;
    for (hs, gs) in header.slots.iter().zip(graph.slots()) {
        if hs.name != gs.name {
            return Err(ModelError::HeaderMismatch(format!(
                "slot `{}` in file where graph declares `{}`",
                hs.name, gs.name
            )));
        }
        let shape = Shape::new(hs.shape[0], hs.shape[1], hs.shape[2], hs.shape[3]);
        if shape != gs.shape {
            return Err(ModelError::HeaderMismatch(format!(
                "slot `{}` has shape {} in file, graph expects {}",
                hs.name, shape, gs.shape
            )));
        }
        if hs.trainable != gs.trainable() {
            return Err(ModelError::HeaderMismatch(format!(
                "slot `{}` trainability disagrees with graph",
                hs.name
            )));
        }
        if hs.offset != expected_offset {
            return Err(ModelError::HeaderMismatch(format!(
                "slot `{}` payload offset {} is not contiguous (expected {})",
                hs.name, hs.offset, expected_offset
            )));
        }
        let n_bytes = gs.shape.len() * 4;
        let start = payload_start + hs.offset as usize;
        let end = start + n_bytes;
        if end > bytes.len() {
            return Err(ModelError::BadContainer(format!(
                "payload truncated: slot `{}` needs bytes up to {}, file has {}",
                hs.name,
                end,
                bytes.len()
            )));
        }
        let data: Vec<f32> = bytes[start..end]
            .chunks_exact(4)
            .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        store.insert(gs.name.clone(), Tensor::new(gs.shape, data)?);
        expected_offset += n_bytes as u64;
    }
    let expected_len = payload_start as u64 + expected_offset;
    if bytes.len() as u64 != expected_len {
        return Err(ModelError::BadContainer(format!(
            "file length {} does not match declared payload end {}",
            bytes.len(),
            expected_len
        )));
    }
    Ok(store)
}

#[cfg(test)]
mod tests {
    use super::super::{build_model, ArchPreset};
    use super::*;
    use tempfile::TempDir;

    fn mini_graph() -> LayerGraph {
        build_model(&ArchPreset::by_id("edsr-mini").unwrap(), 2).unwrap()
    }

    #[test]
    fn init_is_deterministic_per_seed() {
        let g = mini_graph();
        let a = init_weights(&g, 42);
        let b = init_weights(&g, 42);
        let c = init_weights(&g, 43);
        for slot in g.slots() {
            let ta = a.get(&slot.name).unwrap().data();
            let tb = b.get(&slot.name).unwrap().data();
            assert_eq!(
                ta.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                tb.iter().map(|v| v.to_bits()).collect::<Vec<_>>()
            );
        }
        let wa = a.get("head.conv.weight").unwrap().data();
        let wc = c.get("head.conv.weight").unwrap().data();
        assert_ne!(wa, wc);
    }

    #[test]
    fn init_statistics_follow_fan_in() {
        let g = mini_graph();
        let w = init_weights(&g, 7);
        // block conv: 8 channels in, 3x3 kernel -> fan_in 72.
        let t = w.get("block01.conv1.weight").unwrap();
        let data = t.data();
        let mean: f64 = data.iter().map(|&v| v as f64).sum::<f64>() / data.len() as f64;
        let var: f64 =
            data.iter().map(|&v| (v as f64 - mean).powi(2)).sum::<f64>() / data.len() as f64;
        let want_std = (2.0 / 72.0f64).sqrt();
        assert!(mean.abs() < 0.05, "mean {mean}");
        assert!(
            (var.sqrt() - want_std).abs() / want_std < 0.25,
            "std {} vs {}",
            var.sqrt(),
            want_std
        );
        // Bias and batch-norm-free graph: biases all zero.
        assert!(w.get("head.conv.bias").unwrap().data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn esrgan_init_is_scaled_down() {
        let p = ArchPreset::by_id("esrgan_gen-mini").unwrap();
        let g = build_model(&p, 2).unwrap();
        let w = init_weights(&g, 7);
        let t = w.get("rrdb01.db1.conv1.weight").unwrap();
        // fan_in = 8 * 9 = 72; scaled std = 0.1 * sqrt(2/72).
        let want_std = 0.1 * (2.0 / 72.0f64).sqrt();
        let data = t.data();
        let var: f64 = data.iter().map(|&v| (v as f64).powi(2)).sum::<f64>() / data.len() as f64;
        assert!(
            (var.sqrt() - want_std).abs() / want_std < 0.3,
            "std {} vs {}",
            var.sqrt(),
            want_std
        );
    }

    #[test]
    fn batch_norm_slots_initialize_to_identity() {
        let p = ArchPreset::by_id("srgan_gen-mini").unwrap();
        let g = build_model(&p, 2).unwrap();
        let w = init_weights(&g, 1);
        assert!(w.get("block01.bn1.gamma").unwrap().data().iter().all(|&v| v == 1.0));
        assert!(w.get("block01.bn1.beta").unwrap().data().iter().all(|&v| v == 0.0));
        assert!(w.get("block01.bn1.mean").unwrap().data().iter().all(|&v| v == 0.0));
        assert!(w.get("block01.bn1.var").unwrap().data().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn container_round_trip_is_bit_exact() {
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        for id in ["edsr-mini", "srgan_gen-mini", "esrgan_gen-mini", "srgan_disc-mini"] {
            let g = build_model(&ArchPreset::by_id(id).unwrap(), 2).unwrap();
            let w = init_weights(&g, 99);
            save_weights(&g, &w, &path).unwrap();
            let r = load_weights(&g, &path).unwrap();
            assert_eq!(r.len(), w.len());
            for slot in g.slots() {
                let a = w.get(&slot.name).unwrap().data();
                let b = r.get(&slot.name).unwrap().data();
                assert_eq!(
                    a.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                    b.iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                    "{id} slot {}",
                    slot.name
                );
            }
        }
    }

    #[test]
    fn round_trip_preserves_unusual_float_values() {
        let g = mini_graph();
        let mut w = init_weights(&g, 1);
        {
            let t = w.get_mut("head.conv.weight").unwrap();
            let d = t.data_mut();
            d[0] = -0.0;
            d[1] = f32::MIN_POSITIVE / 2.0; // subnormal
            d[2] = f32::MAX;
            d[3] = 1e-45; // smallest subnormal
        }
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        save_weights(&g, &w, &path).unwrap();
        let r = load_weights(&g, &path).unwrap();
        let a = w.get("head.conv.weight").unwrap().data();
        let b = r.get("head.conv.weight").unwrap().data();
        for i in 0..4 {
            assert_eq!(a[i].to_bits(), b[i].to_bits());
        }
    }

    #[test]
    fn bad_magic_is_rejected() {
        let g = mini_graph();
        let w = init_weights(&g, 2);
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        save_weights(&g, &w, &path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[0] = b'X';
        std::fs::write(&path, bytes).unwrap();
        assert!(matches!(
            load_weights(&g, &path),
            Err(ModelError::BadContainer(_))
        ));
    }

    #[test]
    fn future_version_is_rejected() {
        let g = mini_graph();
        let w = init_weights(&g, 2);
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        save_weights(&g, &w, &path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[4..8].copy_from_slice(&2u32.to_le_bytes());
        std::fs::write(&path, bytes).unwrap();
        assert!(matches!(load_weights(&g, &path), Err(ModelError::BadVersion(2))));
    }

    #[test]
    fn edited_header_shape_is_rejected() {
        let g = mini_graph();
        let w = init_weights(&g, 2);
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        save_weights(&g, &w, &path).unwrap();
        // Rewrite the header with one slot's shape altered, keeping payload.
        let bytes = std::fs::read(&path).unwrap();
        let header_len = u32::from_le_bytes(bytes[8..12].try_into().unwrap()) as usize;
        let mut header: Header = serde_json::from_slice(&bytes[12..12 + header_len]).unwrap();
        header.slots[0].shape[0] += 1;
        let new_header = serde_json::to_vec(&header).unwrap();
        let mut out = Vec::new();
        out.extend_from_slice(&bytes[0..8]);
        out.extend_from_slice(&(new_header.len() as u32).to_le_bytes());
        out.extend_from_slice(&new_header);
        out.extend_from_slice(&bytes[12 + header_len..]);
        std::fs::write(&path, out).unwrap();
        assert!(matches!(
            load_weights(&g, &path),
            Err(ModelError::HeaderMismatch(_))
        ));
    }

    #[test]
    fn truncated_payload_is_rejected() {
        let g = mini_graph();
        let w = init_weights(&g, 2);
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        save_weights(&g, &w, &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() - 3]).unwrap();
        assert!(matches!(
            load_weights(&g, &path),
            Err(ModelError::BadContainer(_))
        ));
    }

    #[test]
    fn graph_mismatch_is_rejected() {
        let g = mini_graph();
        let w = init_weights(&g, 2);
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        save_weights(&g, &w, &path).unwrap();
        let other = build_model(&ArchPreset::by_id("edsr-mini").unwrap(), 3).unwrap();
        assert!(matches!(
            load_weights(&other, &path),
            Err(ModelError::HeaderMismatch(_))
        ));
        let srgan = build_model(&ArchPreset::by_id("srgan_gen-mini").unwrap(), 2).unwrap();
        assert!(matches!(
            load_weights(&srgan, &path),
            Err(ModelError::HeaderMismatch(_))
        ));
    }

    #[test]
    fn save_refuses_incomplete_store() {
        let g = mini_graph();
        let mut w = init_weights(&g, 2);
        w.remove("tail.conv.weight");
        let dir = TempDir::new().unwrap();
        let path = dir.path().join("w.srwt");
        assert!(matches!(
            save_weights(&g, &w, &path),
            Err(ModelError::MissingWeight(_))
        ));
    }
}
