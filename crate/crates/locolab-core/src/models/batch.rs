//! Training batches of (context, next-token) pairs.

use crate::error::{Error, Result};

/// A batch of fixed-length token contexts with one target token each.
/// Contexts are stored flat, row-major, `batch_size x context_length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Batch {
    vocab_size: usize,
    context_length: usize,
    contexts: Vec<u32>,
    targets: Vec<u32>,
}

impl Batch {
    pub fn new(
        vocab_size: usize,
        context_length: usize,
        contexts: Vec<u32>,
        targets: Vec<u32>,
    ) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::Usage("batch must contain at least one example".into()));
        }
        if context_length == 0 || contexts.len() != targets.len() * context_length {
            return Err(Error::ShapeMismatch(format!(
                "{} context tokens do not tile {} examples of length {}",
                contexts.len(),
                targets.len(),
                context_length
            )));
        }
        let limit = vocab_size as u32;
        if contexts.iter().chain(targets.iter()).any(|&t| t >= limit) {
            return Err(Error::Usage(format!(
                "token id out of range for vocab size {vocab_size}"
            )));
        }
        Ok(Batch {
            vocab_size,
            context_length,
            contexts,
            targets,
        })
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    pub fn context_length(&self) -> usize {
        self.context_length
    }

    pub fn context(&self, example: usize) -> &[u32] {
        let start = example * self.context_length;
        &self.contexts[start..start + self.context_length]
    }

    pub fn target(&self, example: usize) -> u32 {
        self.targets[example]
    }

    /// Concatenation of batches with identical geometry, in argument order.
    pub fn concat(batches: &[Batch]) -> Result<Batch> {
        let first = batches
            .first()
            .ok_or_else(|| Error::Usage("cannot concatenate zero batches".into()))?;
        let mut contexts = Vec::new();
        let mut targets = Vec::new();
        for b in batches {
            if b.vocab_size != first.vocab_size || b.context_length != first.context_length {
                return Err(Error::ShapeMismatch(
                    "batches disagree on vocab or context length".into(),
                ));
            }
            contexts.extend_from_slice(&b.contexts);
            targets.extend_from_slice(&b.targets);
        }
        Batch::new(first.vocab_size, first.context_length, contexts, targets)
    }

    /// Copy with examples reordered by `perm` (a permutation of `0..len`).
    pub fn permuted(&self, perm: &[usize]) -> Batch {
        let mut contexts = Vec::with_capacity(self.contexts.len());
        let mut targets = Vec::with_capacity(self.targets.len());
        for &i in perm {
            contexts.extend_from_slice(self.context(i));
            targets.push(self.target(i));
        }
        Batch {
            vocab_size: self.vocab_size,
            context_length: self.context_length,
            contexts,
            targets,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_tokens() {
        let r = Batch::new(4, 2, vec![0, 4], vec![1]);
        assert!(matches!(r, Err(Error::Usage(_))));
    }

    #[test]
    fn rejects_empty_batch() {
        let r = Batch::new(4, 2, vec![], vec![]);
        assert!(matches!(r, Err(Error::Usage(_))));
    }

    #[test]
    fn rejects_mismatched_context_tiling() {
        let r = Batch::new(4, 2, vec![0, 1, 2], vec![1]);
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn concat_keeps_order() {
        let a = Batch::new(4, 1, vec![0], vec![1]).unwrap();
        let b = Batch::new(4, 1, vec![2], vec![3]).unwrap();
        let c = Batch::concat(&[a, b]).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.context(0), &[0]);
        assert_eq!(c.target(1), 3);
    }
}
