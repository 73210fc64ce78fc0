//! Small dense row-major matrices and the Newton-Schulz orthogonalizer.

use crate::error::{Error, Result};

/// Dense row-major matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} values, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        matmul(self, other)
    }
}

/// Standard matrix product. Errors when inner dimensions disagree.
pub fn matmul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = Matrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        let a_row = &a.data[i * a.cols..(i + 1) * a.cols];
        let out_row = &mut out.data[i * b.cols..(i + 1) * b.cols];
        for (k, &aik) in a_row.iter().enumerate() {
            let b_row = &b.data[k * b.cols..(k + 1) * b.cols];
            for (o, &bkj) in out_row.iter_mut().zip(b_row) {
                *o += aik * bkj;
            }
        }
    }
    Ok(out)
}

/// Quintic iteration coefficients with an attracting fixed point at 1:
/// the degree-5 polar-decomposition polynomial `p(s) = (15s - 10s^3 + 3s^5)/8`.
/// Singular values converge to 1 (third-order near the fixed point), so
/// orthogonal inputs are fixed points of the iteration up to rounding.
pub const NS_COEFFS_CONVERGENT: (f64, f64, f64) = (15.0 / 8.0, -10.0 / 8.0, 3.0 / 8.0);

/// The aggressive quintic coefficients used by reference Muon
/// implementations. They maximize slope at zero for fast early progress but
/// have no fixed point at 1: singular values land in a band around 1
/// (roughly [0.7, 1.3]) instead of converging.
pub const NS_COEFFS_FAST: (f64, f64, f64) = (3.4445, -4.7750, 2.0315);

pub const NS_DEFAULT_ITERATIONS: usize = 5;

/// Newton-Schulz orthogonalization with the default convergent coefficients.
///
/// The input is pre-scaled by its Frobenius norm plus 1e-7, then iterated
/// with `X <- aX + b(XX^T)X + c(XX^T)^2 X`. A zero matrix is returned
/// unchanged (the pre-scaling keeps it zero; this is not an error).
pub fn newton_schulz_orthogonalize(m: &Matrix, iterations: usize) -> Result<Matrix> {
    newton_schulz_orthogonalize_with(m, iterations, NS_COEFFS_CONVERGENT)
}

/// Newton-Schulz orthogonalization with explicit quintic coefficients.
pub fn newton_schulz_orthogonalize_with(
    m: &Matrix,
    iterations: usize,
    coeffs: (f64, f64, f64),
) -> Result<Matrix> {
    if iterations == 0 {
        return Err(Error::Usage(
            "newton_schulz_orthogonalize requires at least one iteration".into(),
        ));
    }
    let (a, b, c) = coeffs;
    let norm = m.frobenius_norm();
    let inv = 1.0 / (norm + 1e-7);
    let mut x = Matrix {
        rows: m.rows,
        cols: m.cols,
        data: m.data.iter().map(|&v| v * inv).collect(),
    };
    for _ in 0..iterations {
        let gram = matmul(&x, &x.transpose())?;
        let gx = matmul(&gram, &x)?;
        let ggx = matmul(&gram, &gx)?;
        for ((xi, gxi), ggxi) in x.data.iter_mut().zip(&gx.data).zip(&ggx.data) {
            *xi = a * *xi + b * gxi + c * ggxi;
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_times_anything_is_identity_map() {
        let m = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let i = Matrix::identity(2);
        assert_eq!(matmul(&i, &m).unwrap(), m);
        assert_eq!(matmul(&m, &i).unwrap(), m);
    }

    #[test]
    fn forced_product() {
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = Matrix::from_rows(vec![vec![1.0], vec![1.0]]).unwrap();
        let p = matmul(&a, &b).unwrap();
        assert_eq!(p.data(), &[3.0, 7.0]);
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(matmul(&a, &b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn newton_schulz_zero_matrix_stays_zero() {
        let z = Matrix::zeros(3, 3);
        let r = newton_schulz_orthogonalize(&z, 5).unwrap();
        assert!(r.data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn newton_schulz_zero_iterations_rejected() {
        let m = Matrix::identity(2);
        assert!(matches!(
            newton_schulz_orthogonalize(&m, 0),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn newton_schulz_identity_is_fixed_point() {
        let i = Matrix::identity(8);
        let r = newton_schulz_orthogonalize(&i, 5).unwrap();
        for row in 0..8 {
            for col in 0..8 {
                let want = if row == col { 1.0 } else { 0.0 };
                assert!(
                    (r.get(row, col) - want).abs() < 1e-6,
                    "({row},{col}) = {}",
                    r.get(row, col)
                );
            }
        }
    }
}
