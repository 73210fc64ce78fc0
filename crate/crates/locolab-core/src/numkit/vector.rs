//! Flat parameter vectors and the element-wise operations used by every
//! update rule.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numkit::layout::TensorLayout;
use crate::numkit::matrix::Matrix;
use crate::numkit::rng::fnv1a64;

/// Flat 64-bit parameter storage addressed through a [`TensorLayout`].
///
/// Two vectors are combinable only when their layouts are identical; layout
/// checks compare the `Arc` pointer first and fall back to structural
/// equality.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamVector {
    layout: Arc<TensorLayout>,
    values: Vec<f64>,
}

impl ParamVector {
    pub fn zeros(layout: Arc<TensorLayout>) -> Self {
        let n = layout.total_len();
        ParamVector {
            layout,
            values: vec![0.0; n],
        }
    }

    pub fn from_values(layout: Arc<TensorLayout>, values: Vec<f64>) -> Result<Self> {
        if values.len() != layout.total_len() {
            return Err(Error::LayoutMismatch(format!(
                "layout expects {} values, got {}",
                layout.total_len(),
                values.len()
            )));
        }
        Ok(ParamVector { layout, values })
    }

    pub fn layout(&self) -> &Arc<TensorLayout> {
        &self.layout
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn same_layout(&self, other: &ParamVector) -> bool {
        Arc::ptr_eq(&self.layout, &other.layout) || self.layout == other.layout
    }

    pub fn check_same_layout(&self, other: &ParamVector) -> Result<()> {
        if self.same_layout(other) {
            Ok(())
        } else {
            Err(Error::LayoutMismatch(
                "operands were built from different layouts".into(),
            ))
        }
    }

    /// Slice of one named tensor.
    pub fn tensor(&self, name: &str) -> Result<&[f64]> {
        let range = self
            .layout
            .range(name)
            .ok_or_else(|| Error::Usage(format!("no tensor named `{name}`")))?;
        Ok(&self.values[range])
    }

    pub fn tensor_mut(&mut self, name: &str) -> Result<&mut [f64]> {
        let range = self
            .layout
            .range(name)
            .ok_or_else(|| Error::Usage(format!("no tensor named `{name}`")))?;
        Ok(&mut self.values[range])
    }

    /// Copy of a named 2-d tensor as a matrix. Errors for non-2-d entries.
    pub fn tensor_as_matrix(&self, name: &str) -> Result<Matrix> {
        let entry = self
            .layout
            .entry(name)
            .ok_or_else(|| Error::Usage(format!("no tensor named `{name}`")))?;
        let (rows, cols) = entry.as_2d().ok_or_else(|| Error::NotMatrix {
            name: name.to_string(),
            shape: entry.shape.clone(),
        })?;
        Matrix::from_vec(rows, cols, self.values[entry.range()].to_vec())
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Stable 64-bit content hash of the value bytes (FNV-1a over the
    /// little-endian encoding). Used as the run-report parameter digest.
    pub fn digest(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        for v in &self.values {
            h = fnv1a64(h, &v.to_le_bytes());
        }
        h
    }
}

/// `alpha * x + y`, element-wise. Inputs are unmodified.
pub fn axpy(alpha: f64, x: &ParamVector, y: &ParamVector) -> Result<ParamVector> {
    x.check_same_layout(y)?;
    let values = x
        .values
        .iter()
        .zip(&y.values)
        .map(|(&xi, &yi)| alpha * xi + yi)
        .collect();
    Ok(ParamVector {
        layout: Arc::clone(&x.layout),
        values,
    })
}

/// `alpha * x`, element-wise.
pub fn scale(alpha: f64, x: &ParamVector) -> ParamVector {
    ParamVector {
        layout: Arc::clone(&x.layout),
        values: x.values.iter().map(|&v| alpha * v).collect(),
    }
}

/// `x + y`, element-wise.
pub fn add(x: &ParamVector, y: &ParamVector) -> Result<ParamVector> {
    axpy(1.0, x, y)
}

/// `x - y`, element-wise.
pub fn subtract(x: &ParamVector, y: &ParamVector) -> Result<ParamVector> {
    x.check_same_layout(y)?;
    let values = x
        .values
        .iter()
        .zip(&y.values)
        .map(|(&xi, &yi)| xi - yi)
        .collect();
    Ok(ParamVector {
        layout: Arc::clone(&x.layout),
        values,
    })
}

pub fn dot(x: &ParamVector, y: &ParamVector) -> Result<f64> {
    x.check_same_layout(y)?;
    Ok(x.values
        .iter()
        .zip(&y.values)
        .map(|(&a, &b)| a * b)
        .sum())
}

/// Unweighted mean of a non-empty list, summed in slice order.
pub fn mean(vectors: &[ParamVector]) -> Result<ParamVector> {
    let first = vectors
        .first()
        .ok_or_else(|| Error::Usage("mean of an empty vector list".into()))?;
    let mut acc = first.clone();
    for v in &vectors[1..] {
        acc.check_same_layout(v)?;
        for (a, &b) in acc.values.iter_mut().zip(&v.values) {
            *a += b;
        }
    }
    let inv = 1.0 / vectors.len() as f64;
    for a in acc.values.iter_mut() {
        *a *= inv;
    }
    Ok(acc)
}

/// Pairwise (tree) summation. For a power-of-two count of identical values
/// the result is exact, which the mean-loss contract relies on.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::layout::TensorLayout;

    fn layout(n: usize) -> Arc<TensorLayout> {
        Arc::new(TensorLayout::new(vec![("w".into(), vec![n])]).unwrap())
    }

    fn pv(values: Vec<f64>) -> ParamVector {
        ParamVector::from_values(layout(values.len()), values).unwrap()
    }

    #[test]
    fn axpy_identity_cases() {
        let v = pv(vec![3.0, -1.5, 2.0]);
        let anything = pv(vec![9.0, 9.0, 9.0]);
        let zeros = pv(vec![0.0; 3]);
        // alpha = 0 leaves y untouched.
        assert_eq!(axpy(0.0, &anything, &v).unwrap(), v);
        // alpha = 1 with zero x leaves y untouched.
        assert_eq!(axpy(1.0, &zeros, &v).unwrap(), v);
    }

    #[test]
    fn axpy_forced_values() {
        let x = pv(vec![1.0, 2.0]);
        let y = pv(vec![3.0, 4.0]);
        let r = axpy(2.0, &x, &y).unwrap();
        assert_eq!(r.values(), &[5.0, 8.0]);
        // inputs unmodified
        assert_eq!(x.values(), &[1.0, 2.0]);
        assert_eq!(y.values(), &[3.0, 4.0]);
    }

    #[test]
    fn layout_mismatch_is_structural_error() {
        let x = pv(vec![1.0, 2.0]);
        let y = pv(vec![1.0, 2.0, 3.0]);
        assert!(matches!(axpy(1.0, &x, &y), Err(Error::LayoutMismatch(_))));
    }

    #[test]
    fn mean_of_empty_list_is_usage_error() {
        assert!(matches!(mean(&[]), Err(Error::Usage(_))));
    }

    #[test]
    fn mean_of_identical_vectors_is_identity() {
        let v = pv(vec![1.25, -0.5]);
        let m = mean(&[v.clone(), v.clone(), v.clone(), v.clone()]).unwrap();
        assert_eq!(m, v);
    }

    #[test]
    fn digest_is_content_sensitive() {
        let a = pv(vec![1.0, 2.0]);
        let mut b = a.clone();
        assert_eq!(a.digest(), b.digest());
        b.values_mut()[0] = 1.0000000001;
        assert_ne!(a.digest(), b.digest());
    }

    #[test]
    fn pairwise_sum_of_equal_values_is_exact_for_powers_of_two() {
        let x = (32.0f64).ln();
        let xs = vec![x; 64];
        assert_eq!(pairwise_sum(&xs) / 64.0, x);
    }
}
