//! Dense real linear algebra: LU factorization with partial pivoting, solves
//! against crisp and affine right-hand sides, and explicit inverses.
//!
//! Everything is generic over [`Scalar`] so the instrumented counting type
//! can run through the same kernels.

use crate::error::{Error, Result};
use crate::fuzzy::AffineZ;
use crate::scalar::Scalar;

pub type CrispVector = Vec<f64>;
pub type AffineVector = Vec<AffineZ>;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CrispMatrix<T = f64> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> CrispMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.to_f64().is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::from_f64(1.0));
        }
        m
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix addition shape".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix subtraction shape".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| k * v).collect(),
        }
    }

    pub fn matvec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector shape".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self.get(i, j) * x[j];
                }
                acc
            })
            .collect())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("matrix-matrix shape".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                for j in 0..other.cols {
                    out.set(i, j, out.get(i, j) + aik * other.get(k, j));
                }
            }
        }
        Ok(out)
    }
}

impl CrispMatrix<f64> {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(n_rows, n_cols, rows.concat())
    }

    pub fn convert<T: Scalar>(&self) -> CrispMatrix<T> {
        CrispMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| T::from_f64(v)).collect(),
        }
    }
}

/// `PA = LU` with partial row pivoting, stored packed.
#[derive(Debug, Clone)]
pub struct LuFactorization<T = f64> {
    lu: CrispMatrix<T>,
    perm: Vec<usize>,
}

/// Factors a square matrix. A pivot below `n * eps * max|A|` reports
/// [`Error::SingularMatrix`].
pub fn lu_factor<T: Scalar>(a: &CrispMatrix<T>) -> Result<LuFactorization<T>> {
    if !a.is_square() {
        return Err(Error::NonSquareMatrix { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let pivot_tol = n as f64 * f64::EPSILON * a.max_abs();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        let mut pivot_row = k;
        let mut pivot_mag = lu.get(k, k).to_f64().abs();
        for i in k + 1..n {
            let mag = lu.get(i, k).to_f64().abs();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        if pivot_mag <= pivot_tol {
            return Err(Error::SingularMatrix);
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = lu.get(k, j);
                lu.set(k, j, lu.get(pivot_row, j));
                lu.set(pivot_row, j, tmp);
            }
            perm.swap(k, pivot_row);
        }
        let pivot = lu.get(k, k);
        for i in k + 1..n {
            let factor = lu.get(i, k) / pivot;
            lu.set(i, k, factor);
            for j in k + 1..n {
                lu.set(i, j, lu.get(i, j) - factor * lu.get(k, j));
            }
        }
    }
    Ok(LuFactorization { lu, perm })
}

impl<T: Scalar> LuFactorization<T> {
    pub fn n(&self) -> usize {
        self.lu.rows()
    }

    /// Row permutation applied by pivoting: output row `i` came from input
    /// row `perm[i]`.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Unit lower-triangular factor.
    pub fn l(&self) -> CrispMatrix<T> {
        let n = self.n();
        let mut l = CrispMatrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                l.set(i, j, self.lu.get(i, j));
            }
        }
        l
    }

    /// Upper-triangular factor.
    pub fn u(&self) -> CrispMatrix<T> {
        let n = self.n();
        let mut u = CrispMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                u.set(i, j, self.lu.get(i, j));
            }
        }
        u
    }

    /// Solves `A x = b` for a crisp right-hand side.
    pub fn solve_vec(&self, b: &[T]) -> Result<Vec<T>> {
        let n = self.n();
        if b.len() != n {
            return Err(Error::DimensionMismatch("solve right-hand side length".into()));
        }
        // forward substitution on Pb
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                x[i] = x[i] - self.lu.get(i, j) * x[j];
            }
        }
        // back substitution
        for i in (0..n).rev() {
            for j in i + 1..n {
                x[i] = x[i] - self.lu.get(i, j) * x[j];
            }
            x[i] = x[i] / self.lu.get(i, i);
        }
        Ok(x)
    }

    /// Solves `A x(z) = b(z)` for an affine right-hand side by solving the
    /// constant and slope parts independently.
    pub fn solve_affine(&self, b: &[AffineZ<T>]) -> Result<Vec<AffineZ<T>>> {
        let consts: Vec<T> = b.iter().map(|a| a.const_term).collect();
        let slopes: Vec<T> = b.iter().map(|a| a.slope).collect();
        let xc = self.solve_vec(&consts)?;
        let xs = self.solve_vec(&slopes)?;
        Ok(xc.into_iter().zip(xs).map(|(c, s)| AffineZ::new(c, s)).collect())
    }
}

/// Explicit inverse via `n` solves against identity columns.
pub fn inverse<T: Scalar>(a: &CrispMatrix<T>) -> Result<CrispMatrix<T>> {
    let f = lu_factor(a)?;
    let n = f.n();
    let mut inv = CrispMatrix::zeros(n, n);
    let mut e = vec![T::zero(); n];
    for j in 0..n {
        e[j] = T::from_f64(1.0);
        let col = f.solve_vec(&e)?;
        e[j] = T::zero();
        for i in 0..n {
            inv.set(i, j, col[i]);
        }
    }
    Ok(inv)
}
