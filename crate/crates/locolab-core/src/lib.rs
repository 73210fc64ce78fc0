//! locolab-core: a desk-scale laboratory for low-communication data-parallel
//! training.
//!
//! The crate simulates k-worker training of small from-scratch models under
//! three regimes:
//!
//! - fully synchronous data-parallel training (gradient all-reduce every step),
//! - low-communication inner-outer training (each worker takes H local
//!   optimizer steps, then workers average parameter deltas and apply an
//!   outer momentum update),
//! - hybrid schedules that switch regimes between stages.
//!
//! Everything is deterministic given a seed: corpora, sharding, batch order,
//! initialization, and the training loops themselves. Runs produce loss
//! series, a communication ledger, and pre-synchronization drift diagnostics
//! so the regimes can be compared quantitatively.
//!
//! Layout:
//!
//! - [`numkit`]: flat parameter vectors with a named-tensor layout, small
//!   dense matrices, Newton-Schulz orthogonalization, seeded RNG streams.
//! - [`models`]: softmax regression and an n-gram MLP language model with
//!   analytic gradients and a finite-difference checker.
//! - [`optim`]: AdamW, Muon, and SGD inner optimizers; the outer momentum
//!   update applied to averaged deltas.
//! - [`data`]: synthetic token corpora (Markov chain, arithmetic expressions),
//!   sharding, and epoch-shuffled batching.
//! - [`engine`]: the synchronous, low-communication, and hybrid stage runners
//!   with drift and communication accounting.
//! - [`config`] / [`report`]: declarative run descriptions and run artifacts.

pub mod config;
pub mod data;
pub mod engine;
pub mod error;
pub mod models;
pub mod numkit;
pub mod optim;
pub mod report;

pub use error::{Error, Result};
