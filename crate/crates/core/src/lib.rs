//! Solvers for n-by-n fuzzy systems of linear equations (FSLEs) in
//! parametric z-level form.
//!
//! A fuzzy system `A v = w` has a crisp coefficient matrix and fuzzy
//! right-hand side and unknowns, each unknown carried as a pair of endpoint
//! functions of the level `z in [0, 1]`. Three methods are provided:
//!
//! * [`solver::friedman_solve`] — the 2n-by-2n embedding `S v = w`,
//! * [`solver::ezzati_solve`] — the n-by-n reduction via `A g = sum of branches`,
//! * [`solver::embedding_solve`] / [`solver::triangular_embedding_solve`] —
//!   the two-crisp-system method, which can reject unsolvable systems after a
//!   single crisp solve.
//!
//! [`opcount`] evaluates the closed-form multiplication-count formulas for
//! the three methods and measures the real implementation with an
//! instrumented scalar.

pub mod error;
pub mod fuzzy;
pub mod linalg;
pub mod opcount;
pub mod scalar;
pub mod solver;
pub mod splitting;

pub use error::{Error, Result};
pub use fuzzy::{
    eval, fuzzy_add, fuzzy_residual, fuzzy_sub, parametric_to_triangular, scalar_mul,
    triangular_to_parametric, uniform_grid, validate_fuzzy_number, AffineZ, Endpoint,
    FuzzyNumber, FuzzyVector, SampledZ, TriangularFuzzy, ValidityReport, DEFAULT_GRID_POINTS,
    DEFAULT_TOLERANCE,
};
pub use linalg::{inverse, lu_factor, AffineVector, CrispMatrix, CrispVector, LuFactorization};
pub use opcount::{counted_solve, formula_counts, CostModel, OpCounts};
pub use solver::{
    classify, embedding_solve, ezzati_solve, friedman_solve, solve_auto, solve_auto_with,
    solve_with, triangular_embedding_solve, Classification, Diagnostics, FsleProblem, Method,
    SolveConfig, SolveReport, Status, WeakRule,
};
pub use splitting::{block_inverse, build_s, split_bc, BcSplit};
