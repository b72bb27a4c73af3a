//! Dense row-major f64 matrices, sized for desk-scale group elements
//! (n <= 32).  No sparse storage, no complex entries: unitary and
//! quaternionic groups are realized as real matrices of doubled size.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:>12.6} ", self[(r, c)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    /// Builds a matrix from row-major data.  Rejects NaN/Inf entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Contract(format!(
                "matrix shape {}x{} does not match {} entries",
                rows,
                cols,
                data.len()
            )));
        }
        if !data.iter().all(|x| x.is_finite()) {
            return Err(Error::Contract("matrix entries must be finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diagonal(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i];
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::Contract("matrix needs at least one row".into()));
        }
        let c = rows[0].len();
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Contract("ragged rows".into()));
        }
        Self::new(r, c, rows.iter().flatten().copied().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// max |A - A^t|, the asymmetry residual.
    pub fn symmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.rows {
            for c in (r + 1)..self.cols {
                worst = worst.max((self[(r, c)] - self[(c, r)]).abs());
            }
        }
        worst
    }

    /// Determinant by LU with partial pivoting.
    pub fn det(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::Contract("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = 1.0;
        for k in 0..n {
            let mut piv = k;
            for r in (k + 1)..n {
                if a[(r, k)].abs() > a[(piv, k)].abs() {
                    piv = r;
                }
            }
            if a[(piv, k)] == 0.0 {
                return Ok(0.0);
            }
            if piv != k {
                for c in 0..n {
                    let tmp = a[(k, c)];
                    a[(k, c)] = a[(piv, c)];
                    a[(piv, c)] = tmp;
                }
                det = -det;
            }
            det *= a[(k, k)];
            for r in (k + 1)..n {
                let f = a[(r, k)] / a[(k, k)];
                for c in k..n {
                    a[(r, c)] -= f * a[(k, c)];
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Contract("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for k in 0..n {
            let mut piv = k;
            for r in (k + 1)..n {
                if a[(r, k)].abs() > a[(piv, k)].abs() {
                    piv = r;
                }
            }
            let scale = a.max_abs().max(1.0);
            if a[(piv, k)].abs() < 1e-14 * scale {
                return Err(Error::SingularInput(format!(
                    "pivot {:.3e} below threshold during inversion",
                    a[(piv, k)]
                )));
            }
            if piv != k {
                for c in 0..n {
                    a.data.swap(k * n + c, piv * n + c);
                    inv.data.swap(k * n + c, piv * n + c);
                }
            }
            let d = a[(k, k)];
            for c in 0..n {
                a[(k, c)] /= d;
                inv[(k, c)] /= d;
            }
            for r in 0..n {
                if r == k {
                    continue;
                }
                let f = a[(r, k)];
                if f == 0.0 {
                    continue;
                }
                for c in 0..n {
                    a[(r, c)] -= f * a[(k, c)];
                    inv[(r, c)] -= f * inv[(k, c)];
                }
            }
        }
        Ok(inv)
    }

    /// Extracts the square diagonal block at `offset` of size `size`.
    pub fn diagonal_block(&self, offset: usize, size: usize) -> Result<Matrix> {
        if offset + size > self.rows || offset + size > self.cols {
            return Err(Error::Contract("block exceeds matrix bounds".into()));
        }
        let mut b = Matrix::zeros(size, size);
        for r in 0..size {
            for c in 0..size {
                b[(r, c)] = self[(offset + r, offset + c)];
            }
        }
        Ok(b)
    }

    /// Largest absolute entry outside the listed diagonal blocks.
    pub fn off_block_residual(&self, block_sizes: &[usize]) -> f64 {
        let mut bounds = vec![0usize];
        for s in block_sizes {
            bounds.push(bounds.last().unwrap() + s);
        }
        let block_of = |i: usize| bounds.iter().position(|&b| i < b).unwrap_or(bounds.len()) - 1;
        let mut worst = 0.0f64;
        for r in 0..self.rows {
            for c in 0..self.cols {
                if block_of(r) != block_of(c) {
                    worst = worst.max(self[(r, c)].abs());
                }
            }
        }
        worst
    }

    /// Block-diagonal assembly.
    pub fn block_diagonal(blocks: &[Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(off + r, off + c)] = b[(r, c)];
                }
            }
            off += b.rows;
        }
        out
    }
}

/// Gram matrix `g^t g` of an invertible square matrix; always symmetric
/// positive definite for invertible input.
pub fn gram(g: &Matrix) -> Result<Matrix> {
    if !g.is_square() {
        return Err(Error::Contract("gram of non-square matrix".into()));
    }
    let scale = g.max_abs().max(1.0);
    let d = g.det()?;
    if d.abs() < 1e-12 * scale.powi(g.rows() as i32) {
        return Err(Error::SingularInput(format!(
            "gram: determinant {:.3e} below tolerance",
            d
        )));
    }
    g.transpose().mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_identity_is_identity() {
        let g = gram(&Matrix::identity(3)).unwrap();
        assert!(g.max_abs_diff(&Matrix::identity(3)) == 0.0);
    }

    #[test]
    fn gram_diagonal_squares_entries() {
        let g = gram(&Matrix::diagonal(&[2.0, 0.5])).unwrap();
        assert!(g.max_abs_diff(&Matrix::diagonal(&[4.0, 0.25])) < 1e-15);
    }

    #[test]
    fn gram_of_rotation_is_identity() {
        let th = 0.7f64;
        let rot = Matrix::from_rows(&[
            vec![th.cos(), -th.sin()],
            vec![th.sin(), th.cos()],
        ])
        .unwrap();
        let g = gram(&rot).unwrap();
        assert!(g.max_abs_diff(&Matrix::identity(2)) < 1e-15);
    }

    #[test]
    fn gram_rejects_singular() {
        let s = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert!(matches!(gram(&s), Err(Error::SingularInput(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().max_abs_diff(&Matrix::identity(2)) < 1e-14);
    }

    #[test]
    fn matrix_rejects_nan() {
        assert!(Matrix::new(1, 1, vec![f64::NAN]).is_err());
    }
}
