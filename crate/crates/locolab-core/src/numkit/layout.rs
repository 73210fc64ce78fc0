//! Named-tensor layout over flat storage.

use std::ops::Range;

use crate::error::{Error, Result};

/// One named tensor inside a flat parameter vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorEntry {
    pub name: String,
    pub shape: Vec<usize>,
    /// Start index into the flat storage. Entries are contiguous.
    pub offset: usize,
}

impl TensorEntry {
    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn range(&self) -> Range<usize> {
        self.offset..self.offset + self.len()
    }

    /// Rows/cols view of a 2-d entry.
    pub fn as_2d(&self) -> Option<(usize, usize)> {
        match self.shape.as_slice() {
            &[r, c] => Some((r, c)),
            _ => None,
        }
    }
}

/// Ordered, contiguous, non-overlapping named tensors covering a flat vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorLayout {
    entries: Vec<TensorEntry>,
    total_len: usize,
}

impl TensorLayout {
    /// Build a layout from `(name, shape)` pairs; offsets are assigned
    /// contiguously in order. Names must be unique and dimensions positive.
    pub fn new(tensors: Vec<(String, Vec<usize>)>) -> Result<Self> {
        let mut entries = Vec::with_capacity(tensors.len());
        let mut offset = 0usize;
        for (name, shape) in tensors {
            if shape.is_empty() || shape.iter().any(|&d| d == 0) {
                return Err(Error::ShapeMismatch(format!(
                    "tensor `{name}` has invalid shape {shape:?}"
                )));
            }
            if entries.iter().any(|e: &TensorEntry| e.name == name) {
                return Err(Error::Usage(format!("duplicate tensor name `{name}`")));
            }
            let len: usize = shape.iter().product();
            entries.push(TensorEntry {
                name,
                shape,
                offset,
            });
            offset += len;
        }
        Ok(TensorLayout {
            entries,
            total_len: offset,
        })
    }

    pub fn total_len(&self) -> usize {
        self.total_len
    }

    pub fn entries(&self) -> &[TensorEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Option<&TensorEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn range(&self, name: &str) -> Option<Range<usize>> {
        self.entry(name).map(|e| e.range())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_are_contiguous_and_total_matches() {
        let l = TensorLayout::new(vec![
            ("a".into(), vec![2, 3]),
            ("b".into(), vec![4]),
            ("c".into(), vec![1, 1, 5]),
        ])
        .unwrap();
        assert_eq!(l.total_len(), 6 + 4 + 5);
        assert_eq!(l.entry("a").unwrap().offset, 0);
        assert_eq!(l.entry("b").unwrap().offset, 6);
        assert_eq!(l.entry("c").unwrap().offset, 10);
        assert_eq!(l.range("b").unwrap(), 6..10);
    }

    #[test]
    fn duplicate_names_rejected() {
        let r = TensorLayout::new(vec![("a".into(), vec![2]), ("a".into(), vec![3])]);
        assert!(matches!(r, Err(Error::Usage(_))));
    }

    #[test]
    fn zero_dimension_rejected() {
        let r = TensorLayout::new(vec![("a".into(), vec![2, 0])]);
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }
}
