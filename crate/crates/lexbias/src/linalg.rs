//! Small dense linear-algebra kernels used by [`crate::stats`] and the
//! trainer's truncated SVD.
//!
//! Everything here is deterministic: fixed sweep orders, no threading, no
//! architecture-dependent shortcuts. Problem sizes are modest (regression
//! design matrices with a handful of columns, projected co-occurrence blocks
//! of a few hundred columns), so plain row-major loops are adequate.

// Dense kernels read better with explicit index arithmetic.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Mat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `self * other`.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                let orow = other.row(k);
                let out_row = out.row_mut(i);
                for j in 0..other.cols {
                    out_row[j] += a * orow[j];
                }
            }
        }
        out
    }
}

/// Result of solving a least-squares system via Householder QR.
#[derive(Debug, Clone)]
pub struct LstSq {
    pub coefs: Vec<f64>,
    /// Diagonal of `(XᵀX)⁻¹`, needed for classical standard errors.
    pub xtx_inv_diag: Vec<f64>,
}

/// Solve `min ‖X b − y‖₂` by Householder QR.
///
/// Errors with [`Error::RankDeficient`] when a diagonal of `R` collapses
/// relative to the column scale.
pub fn lstsq_qr(x: &Mat, y: &[f64]) -> Result<LstSq> {
    let n = x.rows;
    let p = x.cols;
    assert_eq!(n, y.len(), "y length must match row count");
    assert!(n >= p, "need at least as many rows as columns");

    let mut a = x.clone();
    let mut qty = y.to_vec();

    // Column scale for the rank test.
    let mut col_scale = vec![0.0f64; p];
    for j in 0..p {
        let mut s = 0.0;
        for i in 0..n {
            s += a.get(i, j) * a.get(i, j);
        }
        col_scale[j] = s.sqrt();
    }

    for j in 0..p {
        // Householder vector for column j, rows j..n.
        let mut norm = 0.0;
        for i in j..n {
            norm += a.get(i, j) * a.get(i, j);
        }
        norm = norm.sqrt();
        if norm <= 1e-12 * col_scale[j].max(1e-300) || norm == 0.0 {
            return Err(Error::RankDeficient { column: j });
        }
        let alpha = if a.get(j, j) >= 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (j..n).map(|i| a.get(i, j)).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|t| t * t).sum();
        if vnorm2 > 0.0 {
            // Apply H = I - 2vvᵀ/‖v‖² to trailing columns and to y.
            for k in j..p {
                let mut dot = 0.0;
                for (idx, i) in (j..n).enumerate() {
                    dot += v[idx] * a.get(i, k);
                }
                let f = 2.0 * dot / vnorm2;
                for (idx, i) in (j..n).enumerate() {
                    let cur = a.get(i, k);
                    a.set(i, k, cur - f * v[idx]);
                }
            }
            let mut dot = 0.0;
            for (idx, i) in (j..n).enumerate() {
                dot += v[idx] * qty[i];
            }
            let f = 2.0 * dot / vnorm2;
            for (idx, i) in (j..n).enumerate() {
                qty[i] -= f * v[idx];
            }
        }
        a.set(j, j, alpha);
        for i in j + 1..n {
            a.set(i, j, 0.0);
        }
    }

    // Rank test on the R diagonal.
    for j in 0..p {
        if a.get(j, j).abs() <= 1e-10 * col_scale[j].max(1e-300) {
            return Err(Error::RankDeficient { column: j });
        }
    }

    // Back substitution: R b = (Qᵀy)[..p].
    let mut coefs = vec![0.0f64; p];
    for j in (0..p).rev() {
        let mut s = qty[j];
        for k in j + 1..p {
            s -= a.get(j, k) * coefs[k];
        }
        coefs[j] = s / a.get(j, j);
    }

    // R⁻¹ (upper triangular), then diag((XᵀX)⁻¹) = rows of R⁻¹ dotted with themselves.
    let mut rinv = Mat::zeros(p, p);
    for j in (0..p).rev() {
        rinv.set(j, j, 1.0 / a.get(j, j));
        for i in (0..j).rev() {
            let mut s = 0.0;
            for k in i + 1..=j {
                s += a.get(i, k) * rinv.get(k, j);
            }
            rinv.set(i, j, -s / a.get(i, i));
        }
    }
    let xtx_inv_diag = (0..p)
        .map(|j| (j..p).map(|k| rinv.get(j, k) * rinv.get(j, k)).sum())
        .collect();

    Ok(LstSq { coefs, xtx_inv_diag })
}

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in descending order and the matching eigenvectors as
/// matrix columns. Input must be symmetric; only the given entries are read.
pub fn sym_eigen(a: &Mat) -> (Vec<f64>, Mat) {
    assert_eq!(a.rows, a.cols, "sym_eigen needs a square matrix");
    let n = a.rows;
    let mut m = a.clone();
    let mut vecs = Mat::zeros(n, n);
    for i in 0..n {
        vecs.set(i, i, 1.0);
    }

    let frob: f64 = m.data.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-15 * frob.max(1e-300);

    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += m.get(i, j) * m.get(i, j);
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.get(p, q);
                if apq.abs() <= tol / (n as f64) {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, c * mkp - s * mkq);
                    m.set(k, q, s * mkp + c * mkq);
                }
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, c * mpk - s * mqk);
                    m.set(q, k, s * mpk + c * mqk);
                }
                for k in 0..n {
                    let vkp = vecs.get(k, p);
                    let vkq = vecs.get(k, q);
                    vecs.set(k, p, c * vkp - s * vkq);
                    vecs.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m.get(j, j)
            .partial_cmp(&m.get(i, i))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigvals: Vec<f64> = order.iter().map(|&i| m.get(i, i)).collect();
    let mut sorted_vecs = Mat::zeros(n, n);
    for (new_j, &old_j) in order.iter().enumerate() {
        for i in 0..n {
            sorted_vecs.set(i, new_j, vecs.get(i, old_j));
        }
    }
    (eigvals, sorted_vecs)
}

/// Orthonormalize the columns of `m` in place by modified Gram-Schmidt with a
/// re-orthogonalization pass. Columns that collapse to numerical zero are
/// replaced by zero vectors (callers project onto at most the true rank).
pub fn orthonormalize_columns(m: &mut Mat) {
    let (rows, cols) = (m.rows, m.cols);
    for j in 0..cols {
        for _pass in 0..2 {
            for k in 0..j {
                let mut dot = 0.0;
                for i in 0..rows {
                    dot += m.get(i, k) * m.get(i, j);
                }
                if dot != 0.0 {
                    for i in 0..rows {
                        let v = m.get(i, j) - dot * m.get(i, k);
                        m.set(i, j, v);
                    }
                }
            }
        }
        let mut norm = 0.0;
        for i in 0..rows {
            norm += m.get(i, j) * m.get(i, j);
        }
        norm = norm.sqrt();
        if norm > 1e-300 {
            for i in 0..rows {
                let v = m.get(i, j) / norm;
                m.set(i, j, v);
            }
        } else {
            for i in 0..rows {
                m.set(i, j, 0.0);
            }
        }
    }
}
