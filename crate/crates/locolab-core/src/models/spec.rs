//! Model specifications and their parameter layouts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkit::TensorLayout;

pub const DEFAULT_EMBED_DIM: usize = 16;

fn default_embed_dim() -> usize {
    DEFAULT_EMBED_DIM
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    /// Linear logits from a single context token: a bigram classifier.
    SoftmaxRegression,
    /// Embedding -> concat -> tanh hidden layers -> linear logits.
    MlpCharLm,
}

/// Everything needed to build and address a model's parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub kind: ModelKind,
    pub vocab_size: usize,
    pub context_length: usize,
    #[serde(default = "default_embed_dim")]
    pub embed_dim: usize,
    #[serde(default)]
    pub hidden_dims: Vec<usize>,
    pub init_scale: f64,
    /// Seed for parameter initialization. The CLI derives it from the global
    /// seed when the config leaves it unset.
    #[serde(default)]
    pub init_seed: Option<u64>,
}

impl ModelSpec {
    pub fn validate(&self) -> Result<()> {
        if self.vocab_size < 2 {
            return Err(Error::config("model.vocab_size", "must be at least 2"));
        }
        if !self.init_scale.is_finite() || self.init_scale < 0.0 {
            return Err(Error::config(
                "model.init_scale",
                "must be finite and non-negative",
            ));
        }
        match self.kind {
            ModelKind::SoftmaxRegression => {
                if self.context_length != 1 {
                    return Err(Error::config(
                        "model.context_length",
                        "softmax-regression requires context_length = 1",
                    ));
                }
                if !self.hidden_dims.is_empty() {
                    return Err(Error::config(
                        "model.hidden_dims",
                        "softmax-regression takes no hidden layers",
                    ));
                }
            }
            ModelKind::MlpCharLm => {
                if self.context_length < 2 {
                    return Err(Error::config(
                        "model.context_length",
                        "mlp-char-lm requires context_length >= 2",
                    ));
                }
                if self.hidden_dims.is_empty() {
                    return Err(Error::config(
                        "model.hidden_dims",
                        "mlp-char-lm requires at least one hidden layer",
                    ));
                }
                if self.embed_dim == 0 {
                    return Err(Error::config("model.embed_dim", "must be positive"));
                }
                if self.hidden_dims.iter().any(|&h| h == 0) {
                    return Err(Error::config("model.hidden_dims", "dims must be positive"));
                }
            }
        }
        Ok(())
    }

    /// Parameter layout for this spec.
    ///
    /// softmax-regression: `w [V, V]`, `b [V]`.
    ///
    /// mlp-char-lm: `embed [V, E]`, then per hidden layer `h{i}_w [in, out]`
    /// and `h{i}_b [out]` with `in = C*E` for the first layer, and finally
    /// `out_w [h_last, V]`, `out_b [V]`.
    pub fn layout(&self) -> Result<TensorLayout> {
        let v = self.vocab_size;
        match self.kind {
            ModelKind::SoftmaxRegression => TensorLayout::new(vec![
                ("w".into(), vec![v, v]),
                ("b".into(), vec![v]),
            ]),
            ModelKind::MlpCharLm => {
                let mut tensors = vec![("embed".to_string(), vec![v, self.embed_dim])];
                let mut fan_in = self.context_length * self.embed_dim;
                for (i, &h) in self.hidden_dims.iter().enumerate() {
                    tensors.push((format!("h{i}_w"), vec![fan_in, h]));
                    tensors.push((format!("h{i}_b"), vec![h]));
                    fan_in = h;
                }
                tensors.push(("out_w".into(), vec![fan_in, v]));
                tensors.push(("out_b".into(), vec![v]));
                TensorLayout::new(tensors)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mlp_layout_length_matches_hand_count() {
        // vocab 16, context 4, hidden [32], embed dim 16:
        // 16*16 + (4*16)*32 + 32 + 32*16 + 16
        let spec = ModelSpec {
            kind: ModelKind::MlpCharLm,
            vocab_size: 16,
            context_length: 4,
            embed_dim: 16,
            hidden_dims: vec![32],
            init_scale: 0.1,
            init_seed: Some(1),
        };
        let expected = 16 * 16 + (4 * 16) * 32 + 32 + 32 * 16 + 16;
        assert_eq!(spec.layout().unwrap().total_len(), expected);
    }

    #[test]
    fn softmax_layout_is_square_plus_bias() {
        let spec = ModelSpec {
            kind: ModelKind::SoftmaxRegression,
            vocab_size: 8,
            context_length: 1,
            embed_dim: DEFAULT_EMBED_DIM,
            hidden_dims: vec![],
            init_scale: 0.0,
            init_seed: None,
        };
        assert_eq!(spec.layout().unwrap().total_len(), 8 * 8 + 8);
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let mut spec = ModelSpec {
            kind: ModelKind::SoftmaxRegression,
            vocab_size: 8,
            context_length: 2,
            embed_dim: DEFAULT_EMBED_DIM,
            hidden_dims: vec![],
            init_scale: 0.1,
            init_seed: None,
        };
        assert!(spec.validate().is_err());
        spec.context_length = 1;
        assert!(spec.validate().is_ok());

        let mlp_no_hidden = ModelSpec {
            kind: ModelKind::MlpCharLm,
            vocab_size: 8,
            context_length: 4,
            embed_dim: DEFAULT_EMBED_DIM,
            hidden_dims: vec![],
            init_scale: 0.1,
            init_seed: None,
        };
        assert!(mlp_no_hidden.validate().is_err());
    }
}
