//! Multiplication-count accounting: closed-form MNMO (maximum number of
//! multiplication operations) formulas per method, and empirical counting of
//! the real LU-based implementation.
//!
//! The formula side reproduces the abstract cost model, which charges
//! `h(n)` per n-by-n inversion and `2n^2` per matrix-times-affine-vector
//! product. The empirical side runs the actual solver on an instrumented
//! scalar. The two are reported side by side and are not expected to agree
//! numerically; the formulas carry the theorem identities, the measurement
//! carries the qualitative ordering.

use crate::error::{Error, Result};
use crate::scalar::{with_mult_count, Counted};
use crate::solver::{solve_generic, FsleProblem, Method, SolveConfig, SolveReport};

/// Cost charged for one n-by-n matrix inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostModel {
    /// `h(n) = n^3`, classical Gauss-Jordan elimination. The default.
    Cubic,
    /// `h(n) = n^3/3 + n^2` (integer division), LU-style elimination.
    LuThirds,
}

impl CostModel {
    pub fn h(&self, n: u64) -> u64 {
        match self {
            CostModel::Cubic => n * n * n,
            CostModel::LuThirds => n * n * n / 3 + n * n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CostModel::Cubic => "cubic",
            CostModel::LuThirds => "lu-thirds",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "cubic" => Some(CostModel::Cubic),
            "lu-thirds" | "lu_thirds" | "lu" => Some(CostModel::LuThirds),
            _ => None,
        }
    }
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel::Cubic
    }
}

/// MNMO totals for one system size under one cost model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpCounts {
    /// Friedman's 2n-by-2n solve.
    pub friedman: u64,
    /// Ezzati's reduction.
    pub ezzati: u64,
    /// Two-crisp-system method, general endpoint functions.
    pub embedding_general: u64,
    /// General method when early rejection fires (only `d` is computed).
    pub embedding_rejected: u64,
    /// Triangular fast path.
    pub embedding_triangular: u64,
    /// Triangular fast path when early rejection fires.
    pub embedding_triangular_rejected: u64,
}

/// Evaluates the closed-form MNMO totals for size `n >= 2`:
/// `F = 2h + 8n^2`, `E = 2h + 6n^2`, `D = 2h + 4n^2` (general),
/// `h + 2n^2` (rejected), `2h + 3n^2 + n` (triangular), `h + n^2`
/// (triangular rejected).
pub fn formula_counts(n: usize, model: CostModel) -> Result<OpCounts> {
    if n < 2 {
        return Err(Error::DimensionMismatch(format!(
            "operation-count formulas require n >= 2, got {n}"
        )));
    }
    let n = n as u64;
    let h = model.h(n);
    let n2 = n * n;
    Ok(OpCounts {
        friedman: 2 * h + 8 * n2,
        ezzati: 2 * h + 6 * n2,
        embedding_general: 2 * h + 4 * n2,
        embedding_rejected: h + 2 * n2,
        embedding_triangular: 2 * h + 3 * n2 + n,
        embedding_triangular_rejected: h + n2,
    })
}

/// Runs `method` on `p` with an instrumented scalar and returns the report
/// plus the number of multiplications/divisions the solve performed.
pub fn counted_solve(
    p: &FsleProblem,
    method: Method,
    cfg: &SolveConfig,
) -> Result<(SolveReport, u64)> {
    let (result, mults) = with_mult_count(|| solve_generic::<Counted>(p, method, cfg));
    let mut report = result?;
    report.diagnostics.multiplications = Some(mults);
    Ok((report, mults))
}
