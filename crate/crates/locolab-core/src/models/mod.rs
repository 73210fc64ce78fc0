//! Differentiable loss models with analytic gradients.
//!
//! Two model kinds, both trained with mean cross-entropy over next-token
//! targets: a softmax regression classifier (single-token context, linear
//! logits) and an n-gram MLP language model (learned embeddings for a fixed
//! context window, tanh hidden layers, linear output). Gradients are
//! hand-written backprop, verified against central finite differences.

mod batch;
mod gradcheck;
mod model;
mod spec;

pub use batch::Batch;
pub use model::Model;
pub use spec::{ModelKind, ModelSpec, DEFAULT_EMBED_DIM};
