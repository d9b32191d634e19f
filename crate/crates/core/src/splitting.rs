//! Positive/negative decomposition `A = B - C` and the 2n-by-2n embedding
//! matrix built from it.

use crate::error::{Error, Result};
use crate::linalg::{inverse, CrispMatrix};

/// `A = B - C` with `B` the positive entries of `A` and `C` the magnitudes of
/// the negative entries; supports are disjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct BcSplit {
    pub b: CrispMatrix,
    pub c: CrispMatrix,
}

impl BcSplit {
    pub fn n(&self) -> usize {
        self.b.rows()
    }

    /// `B + C`, elementwise `|A|`.
    pub fn b_plus_c(&self) -> CrispMatrix {
        self.b.add(&self.c).expect("B and C share a shape")
    }

    /// `B - C = A`.
    pub fn reassemble(&self) -> CrispMatrix {
        self.b.sub(&self.c).expect("B and C share a shape")
    }
}

/// Splits `A` into `b_ij = max(a_ij, 0)`, `c_ij = max(-a_ij, 0)`. Zero
/// entries land in neither block.
pub fn split_bc(a: &CrispMatrix) -> Result<BcSplit> {
    if !a.is_square() {
        return Err(Error::NonSquareMatrix { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut b = CrispMatrix::zeros(n, n);
    let mut c = CrispMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = a.get(i, j);
            if v > 0.0 {
                b.set(i, j, v);
            } else if v < 0.0 {
                c.set(i, j, -v);
            }
        }
    }
    Ok(BcSplit { b, c })
}

/// The nonnegative 2n-by-2n block matrix `[[B, C], [C, B]]`.
pub fn build_s(split: &BcSplit) -> CrispMatrix {
    let n = split.n();
    let mut s = CrispMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let b = split.b.get(i, j);
            let c = split.c.get(i, j);
            s.set(i, j, b);
            s.set(i + n, j + n, b);
            s.set(i, j + n, c);
            s.set(i + n, j, c);
        }
    }
    s
}

/// The block structure of the inverse of `build_s(split)`:
/// `D = [(B+C)^-1 + (B-C)^-1] / 2`, `E = [(B+C)^-1 - (B-C)^-1] / 2`, so that
/// `[[D, E], [E, D]]` inverts `[[B, C], [C, B]]`.
///
/// Exposed for verification; the solve path never forms explicit inverses.
pub fn block_inverse(split: &BcSplit) -> Result<(CrispMatrix, CrispMatrix)> {
    let sum_inv = inverse(&split.b_plus_c())?;
    let diff_inv = inverse(&split.reassemble())?;
    let d = sum_inv.add(&diff_inv)?.scale(0.5);
    let e = sum_inv.sub(&diff_inv)?.scale(0.5);
    Ok((d, e))
}
