//! The three solution methods for fuzzy systems of linear equations, the
//! triangular fast path, and strong/weak/non-fuzzy classification.
//!
//! All methods share the positive/negative splitting `A = B - C`:
//!
//! * Friedman: solve the 2n-by-2n system `S v = w` with `S = [[B, C], [C, B]]`.
//! * Ezzati: solve `A g = lower(w) + upper(w)`, then recover each branch from
//!   `(B + C) v = w_branch + C g`.
//! * Two-crisp-system method: solve `(B + C) d = upper(w) - lower(w)` first;
//!   a negative entry of `d` proves there is no fuzzy solution before `A` is
//!   ever touched. Otherwise solve `A g = upper(w) + lower(w)` and
//!   reconstruct `lower = (g - d) / 2`, `upper = (g + d) / 2`.
//! * Triangular fast path: when the right-hand side is triangular, `d` shrinks
//!   to one crisp solve against the spread sums.

use crate::error::{Error, Result};
use crate::fuzzy::{
    fuzzy_residual, parametric_to_triangular, uniform_grid, validate_fuzzy_number, AffineZ,
    Endpoint, FuzzyNumber, FuzzyVector, SampledZ, TriangularFuzzy, DEFAULT_GRID_POINTS,
    DEFAULT_TOLERANCE,
};
use crate::linalg::{lu_factor, CrispMatrix, LuFactorization};
use crate::scalar::Scalar;
use crate::splitting::{build_s, split_bc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Friedman,
    Ezzati,
    Embedding,
    EmbeddingTriangular,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Friedman => "friedman",
            Method::Ezzati => "ezzati",
            Method::Embedding => "embedding",
            Method::EmbeddingTriangular => "embedding-triangular",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Strong,
    Weak,
    NotFuzzy,
    RejectedEarly,
    SingularMatrix,
}

/// Which generator set builds the weak candidate: Friedman's four-element
/// min/max or Ezzati's three-element variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeakRule {
    Friedman,
    Ezzati,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveConfig {
    pub tolerance: f64,
    pub grid_points: usize,
    /// Overrides the per-method default weak-candidate construction.
    pub weak_rule: Option<WeakRule>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self { tolerance: DEFAULT_TOLERANCE, grid_points: DEFAULT_GRID_POINTS, weak_rule: None }
    }
}

/// An n-by-n fuzzy system `A v = w` with crisp `A` and fuzzy `w`.
#[derive(Debug, Clone)]
pub struct FsleProblem {
    pub a: CrispMatrix,
    pub rhs: FuzzyVector,
}

impl FsleProblem {
    pub fn new(a: CrispMatrix, rhs: FuzzyVector) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NonSquareMatrix { rows: a.rows(), cols: a.cols() });
        }
        if a.rows() != rhs.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but right-hand side has {} entries",
                a.rows(),
                a.cols(),
                rhs.len()
            )));
        }
        Ok(Self { a, rhs })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// The right-hand side as triangular numbers, when every entry converts.
    pub fn triangular_rhs(&self, tol: f64) -> Option<Vec<TriangularFuzzy>> {
        self.rhs.entries().iter().map(|e| parametric_to_triangular(e, tol)).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Diagnostics {
    /// The branch-width vector `d = upper(v) - lower(v)` when the method
    /// computed one.
    pub d: Option<Vec<Endpoint>>,
    /// The branch-sum vector `g = upper(v) + lower(v)` when computed.
    pub g: Option<Vec<Endpoint>>,
    /// Max-abs system residual of the raw solution.
    pub residual: Option<f64>,
    /// Instrumented multiplication/division count, when measured.
    pub multiplications: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub method: Method,
    pub status: Status,
    /// The validated solution; present for `Strong`.
    pub solution: Option<FuzzyVector>,
    /// The raw branch pair `(lower, upper)` before classification.
    pub raw: Option<(Vec<Endpoint>, Vec<Endpoint>)>,
    /// The min/max-repaired candidate; present for `Weak`.
    pub weak_solution: Option<FuzzyVector>,
    pub diagnostics: Diagnostics,
}

// ---------------------------------------------------------------------------
// parametric vector carrier shared by the solver kernels

/// A length-n vector of endpoint functions, either exact affine or sampled on
/// a shared grid (`points[k]` holds the whole vector at `grid[k]`).
#[derive(Debug, Clone)]
enum Carrier<T> {
    Affine(Vec<AffineZ<T>>),
    Sampled { grid: Vec<f64>, points: Vec<Vec<T>> },
}

impl Carrier<f64> {
    fn from_endpoints(endpoints: Vec<&Endpoint>) -> Result<Self> {
        if endpoints.iter().all(|e| e.is_affine()) {
            Ok(Carrier::Affine(
                endpoints.iter().map(|e| *e.as_affine().expect("checked affine")).collect(),
            ))
        } else {
            let grid = match endpoints[0] {
                Endpoint::Sampled(s) => s.grid().to_vec(),
                Endpoint::Affine(_) => return Err(Error::MixedRepresentation),
            };
            let mut points = vec![Vec::with_capacity(endpoints.len()); grid.len()];
            for e in &endpoints {
                match e {
                    Endpoint::Sampled(s) if s.grid() == grid.as_slice() => {
                        for (k, v) in s.values().iter().enumerate() {
                            points[k].push(*v);
                        }
                    }
                    _ => return Err(Error::MixedRepresentation),
                }
            }
            Ok(Carrier::Sampled { grid, points })
        }
    }

    fn convert<T: Scalar>(&self) -> Carrier<T> {
        match self {
            Carrier::Affine(v) => Carrier::Affine(v.iter().map(AffineZ::convert).collect()),
            Carrier::Sampled { grid, points } => Carrier::Sampled {
                grid: grid.clone(),
                points: points
                    .iter()
                    .map(|p| p.iter().map(|&v| T::from_f64(v)).collect())
                    .collect(),
            },
        }
    }

    fn to_endpoints(&self) -> Vec<Endpoint> {
        match self {
            Carrier::Affine(v) => v.iter().map(|a| Endpoint::Affine(*a)).collect(),
            Carrier::Sampled { grid, points } => {
                let n = points[0].len();
                (0..n)
                    .map(|i| {
                        let values = points.iter().map(|p| p[i]).collect();
                        Endpoint::Sampled(
                            SampledZ::new(grid.clone(), values)
                                .expect("carrier grid is a valid z-grid"),
                        )
                    })
                    .collect()
            }
        }
    }

    /// True when some entry dips below `-tol` anywhere on [0, 1]. Affine
    /// entries only need their two endpoint values checked.
    fn has_negative(&self, tol: f64) -> bool {
        match self {
            Carrier::Affine(v) => v
                .iter()
                .any(|a| a.at(0.0) < -tol || a.at(1.0) < -tol),
            Carrier::Sampled { points, .. } => {
                points.iter().any(|p| p.iter().any(|&v| v < -tol))
            }
        }
    }
}

impl<T: Scalar> Carrier<T> {
    fn to_f64(&self) -> Carrier<f64> {
        match self {
            Carrier::Affine(v) => Carrier::Affine(
                v.iter().map(|a| AffineZ::new(a.const_term.to_f64(), a.slope.to_f64())).collect(),
            ),
            Carrier::Sampled { grid, points } => Carrier::Sampled {
                grid: grid.clone(),
                points: points.iter().map(|p| p.iter().map(|v| v.to_f64()).collect()).collect(),
            },
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        match (self, other) {
            (Carrier::Affine(x), Carrier::Affine(y)) => Carrier::Affine(
                x.iter()
                    .zip(y)
                    .map(|(a, b)| {
                        AffineZ::new(f(a.const_term, b.const_term), f(a.slope, b.slope))
                    })
                    .collect(),
            ),
            (Carrier::Sampled { grid, points: xp }, Carrier::Sampled { points: yp, .. }) => {
                Carrier::Sampled {
                    grid: grid.clone(),
                    points: xp
                        .iter()
                        .zip(yp)
                        .map(|(pa, pb)| pa.iter().zip(pb).map(|(&a, &b)| f(a, b)).collect())
                        .collect(),
                }
            }
            _ => unreachable!("carriers from one right-hand side share a kind"),
        }
    }

    fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    fn map(&self, f: impl Fn(T) -> T) -> Self {
        match self {
            Carrier::Affine(v) => Carrier::Affine(
                v.iter().map(|a| AffineZ::new(f(a.const_term), f(a.slope))).collect(),
            ),
            Carrier::Sampled { grid, points } => Carrier::Sampled {
                grid: grid.clone(),
                points: points.iter().map(|p| p.iter().map(|&v| f(v)).collect()).collect(),
            },
        }
    }

    fn neg(&self) -> Self {
        self.map(|v| -v)
    }

    fn halve(&self) -> Self {
        let two = T::from_f64(2.0);
        self.map(|v| v / two)
    }

    fn stack(&self, other: &Self) -> Self {
        match (self, other) {
            (Carrier::Affine(x), Carrier::Affine(y)) => {
                let mut v = x.clone();
                v.extend_from_slice(y);
                Carrier::Affine(v)
            }
            (Carrier::Sampled { grid, points: xp }, Carrier::Sampled { points: yp, .. }) => {
                Carrier::Sampled {
                    grid: grid.clone(),
                    points: xp
                        .iter()
                        .zip(yp)
                        .map(|(pa, pb)| {
                            let mut p = pa.clone();
                            p.extend_from_slice(pb);
                            p
                        })
                        .collect(),
                }
            }
            _ => unreachable!("carriers from one right-hand side share a kind"),
        }
    }

    fn unstack(&self) -> (Self, Self) {
        match self {
            Carrier::Affine(v) => {
                let n = v.len() / 2;
                (Carrier::Affine(v[..n].to_vec()), Carrier::Affine(v[n..].to_vec()))
            }
            Carrier::Sampled { grid, points } => {
                let n = points[0].len() / 2;
                let lower = points.iter().map(|p| p[..n].to_vec()).collect();
                let upper = points.iter().map(|p| p[n..].to_vec()).collect();
                (
                    Carrier::Sampled { grid: grid.clone(), points: lower },
                    Carrier::Sampled { grid: grid.clone(), points: upper },
                )
            }
        }
    }

    fn solve(&self, lu: &LuFactorization<T>) -> Result<Self> {
        match self {
            Carrier::Affine(v) => Ok(Carrier::Affine(lu.solve_affine(v)?)),
            Carrier::Sampled { grid, points } => Ok(Carrier::Sampled {
                grid: grid.clone(),
                points: points.iter().map(|p| lu.solve_vec(p)).collect::<Result<_>>()?,
            }),
        }
    }

    fn matvec(&self, m: &CrispMatrix<T>) -> Result<Self> {
        match self {
            Carrier::Affine(v) => {
                let consts: Vec<T> = v.iter().map(|a| a.const_term).collect();
                let slopes: Vec<T> = v.iter().map(|a| a.slope).collect();
                let mc = m.matvec(&consts)?;
                let ms = m.matvec(&slopes)?;
                Ok(Carrier::Affine(
                    mc.into_iter().zip(ms).map(|(c, s)| AffineZ::new(c, s)).collect(),
                ))
            }
            Carrier::Sampled { grid, points } => Ok(Carrier::Sampled {
                grid: grid.clone(),
                points: points.iter().map(|p| m.matvec(p)).collect::<Result<_>>()?,
            }),
        }
    }
}

// ---------------------------------------------------------------------------
// kernels

enum KernelOutcome<T> {
    Solved {
        lower: Carrier<T>,
        upper: Carrier<T>,
        d: Option<Carrier<T>>,
        g: Option<Carrier<T>>,
    },
    Rejected {
        d: Carrier<T>,
    },
    Singular,
}

fn friedman_kernel<T: Scalar>(
    a: &CrispMatrix,
    wl: &Carrier<T>,
    wu: &Carrier<T>,
) -> Result<KernelOutcome<T>> {
    let split = split_bc(a)?;
    let s = build_s(&split).convert::<T>();
    let lu = match lu_factor(&s) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    // stacked right-hand side (lower(w), -upper(w)); the solve yields
    // (lower(v), -upper(v))
    let stacked = wl.stack(&wu.neg());
    let x = stacked.solve(&lu)?;
    let (lower, minus_upper) = x.unstack();
    Ok(KernelOutcome::Solved { lower, upper: minus_upper.neg(), d: None, g: None })
}

fn ezzati_kernel<T: Scalar>(
    a: &CrispMatrix,
    wl: &Carrier<T>,
    wu: &Carrier<T>,
) -> Result<KernelOutcome<T>> {
    let split = split_bc(a)?;
    let lu_a = match lu_factor(&a.convert::<T>()) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    let lu_sum = match lu_factor(&split.b_plus_c().convert::<T>()) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    let g = wl.add(wu).solve(&lu_a)?;
    let cg = g.matvec(&split.c.convert::<T>())?;
    let lower = wl.add(&cg).solve(&lu_sum)?;
    let upper = wu.add(&cg).solve(&lu_sum)?;
    Ok(KernelOutcome::Solved { lower, upper, d: None, g: Some(g) })
}

fn embedding_kernel<T: Scalar>(
    a: &CrispMatrix,
    wl: &Carrier<T>,
    wu: &Carrier<T>,
    tol: f64,
) -> Result<KernelOutcome<T>> {
    let split = split_bc(a)?;
    let lu_sum = match lu_factor(&split.b_plus_c().convert::<T>()) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    let d = wu.sub(wl).solve(&lu_sum)?;
    // Early rejection happens before A is factored, so a singular A still
    // lets the method refute solvability.
    if d.to_f64().has_negative(tol) {
        return Ok(KernelOutcome::Rejected { d });
    }
    let lu_a = match lu_factor(&a.convert::<T>()) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    let g = wu.add(wl).solve(&lu_a)?;
    let lower = g.sub(&d).halve();
    let upper = g.add(&d).halve();
    Ok(KernelOutcome::Solved { lower, upper, d: Some(d), g: Some(g) })
}

fn triangular_kernel<T: Scalar>(
    a: &CrispMatrix,
    tris: &[TriangularFuzzy],
    wl: &Carrier<T>,
    wu: &Carrier<T>,
    tol: f64,
) -> Result<KernelOutcome<T>> {
    let split = split_bc(a)?;
    let lu_sum = match lu_factor(&split.b_plus_c().convert::<T>()) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    // one crisp solve against the right-hand-side spread sums
    let d1: Vec<T> = tris.iter().map(|t| T::from_f64(t.spread_sum())).collect();
    let d_prime = lu_sum.solve_vec(&d1)?;
    // d(z) = d' * (1 - z)
    let d = Carrier::Affine(
        d_prime.iter().map(|&v| AffineZ::new(v, -v)).collect::<Vec<AffineZ<T>>>(),
    );
    if d_prime.iter().any(|v| v.to_f64() < -tol) {
        return Ok(KernelOutcome::Rejected { d });
    }
    let lu_a = match lu_factor(&a.convert::<T>()) {
        Ok(lu) => lu,
        Err(Error::SingularMatrix) => return Ok(KernelOutcome::Singular),
        Err(e) => return Err(e),
    };
    let g = wu.add(wl).solve(&lu_a)?;
    let lower = g.sub(&d).halve();
    let upper = g.add(&d).halve();
    Ok(KernelOutcome::Solved { lower, upper, d: Some(d), g: Some(g) })
}

// ---------------------------------------------------------------------------
// classification

#[derive(Debug, Clone, PartialEq)]
pub enum Classification {
    Strong,
    Weak(FuzzyVector),
    NotFuzzy,
}

/// Classifies a raw branch pair: `Strong` when every component already
/// satisfies the fuzzy-number conditions, otherwise builds the min/max
/// candidate of the selected rule and reports `Weak` if the candidate is a
/// fuzzy vector, `NotFuzzy` if even that fails.
pub fn classify(
    lower: &[Endpoint],
    upper: &[Endpoint],
    grid: &[f64],
    rule: WeakRule,
    tol: f64,
) -> Classification {
    let all_valid = lower.iter().zip(upper).all(|(lo, up)| {
        let p = FuzzyNumber { lower: lo.clone(), upper: up.clone() };
        validate_fuzzy_number(&p, grid, tol).is_valid()
    });
    if all_valid {
        return Classification::Strong;
    }

    let mut candidates = Vec::with_capacity(lower.len());
    for (lo, up) in lower.iter().zip(upper) {
        let lo_core = lo.at(1.0);
        let up_core = up.at(1.0);
        let mut lo_values = Vec::with_capacity(grid.len());
        let mut up_values = Vec::with_capacity(grid.len());
        for &z in grid {
            let (a, b) = (lo.at(z), up.at(z));
            match rule {
                WeakRule::Friedman => {
                    // min/max over four generators
                    lo_values.push(a.min(b).min(lo_core).min(up_core));
                    up_values.push(a.max(b).max(lo_core).max(up_core));
                }
                WeakRule::Ezzati => {
                    lo_values.push(a.min(b).min(lo_core));
                    up_values.push(a.max(b).max(up_core));
                }
            }
        }
        let candidate = FuzzyNumber {
            lower: Endpoint::Sampled(
                SampledZ::new(grid.to_vec(), lo_values).expect("classification grid is valid"),
            ),
            upper: Endpoint::Sampled(
                SampledZ::new(grid.to_vec(), up_values).expect("classification grid is valid"),
            ),
        };
        if !validate_fuzzy_number(&candidate, grid, tol).is_valid() {
            return Classification::NotFuzzy;
        }
        candidates.push(candidate);
    }
    match FuzzyVector::new(candidates) {
        Ok(v) => Classification::Weak(v),
        Err(_) => Classification::NotFuzzy,
    }
}

// ---------------------------------------------------------------------------
// the public solve entry points

fn rhs_carriers(rhs: &FuzzyVector) -> Result<(Carrier<f64>, Carrier<f64>)> {
    let lower = Carrier::from_endpoints(rhs.entries().iter().map(|e| &e.lower).collect())?;
    let upper = Carrier::from_endpoints(rhs.entries().iter().map(|e| &e.upper).collect())?;
    Ok((lower, upper))
}

pub(crate) fn solve_generic<T: Scalar>(
    p: &FsleProblem,
    method: Method,
    cfg: &SolveConfig,
) -> Result<SolveReport> {
    let grid = match p.rhs.sample_grid() {
        Some(g) => g.to_vec(),
        None => uniform_grid(cfg.grid_points),
    };
    let (wl64, wu64) = rhs_carriers(&p.rhs)?;
    let wl = wl64.convert::<T>();
    let wu = wu64.convert::<T>();

    let outcome = match method {
        Method::Friedman => friedman_kernel(&p.a, &wl, &wu)?,
        Method::Ezzati => ezzati_kernel(&p.a, &wl, &wu)?,
        Method::Embedding => embedding_kernel(&p.a, &wl, &wu, cfg.tolerance)?,
        Method::EmbeddingTriangular => {
            let tris = p
                .triangular_rhs(cfg.tolerance)
                .ok_or_else(|| {
                    let first_bad = p
                        .rhs
                        .entries()
                        .iter()
                        .position(|e| parametric_to_triangular(e, cfg.tolerance).is_none())
                        .unwrap_or(0);
                    Error::NotTriangular(first_bad)
                })?;
            triangular_kernel(&p.a, &tris, &wl, &wu, cfg.tolerance)?
        }
    };

    let report = match outcome {
        KernelOutcome::Singular => SolveReport {
            method,
            status: Status::SingularMatrix,
            solution: None,
            raw: None,
            weak_solution: None,
            diagnostics: Diagnostics::default(),
        },
        KernelOutcome::Rejected { d } => SolveReport {
            method,
            status: Status::RejectedEarly,
            solution: None,
            raw: None,
            weak_solution: None,
            diagnostics: Diagnostics {
                d: Some(d.to_f64().to_endpoints()),
                ..Diagnostics::default()
            },
        },
        KernelOutcome::Solved { lower, upper, d, g } => {
            let lower = lower.to_f64().to_endpoints();
            let upper = upper.to_f64().to_endpoints();
            finish_solved(p, method, cfg, &grid, lower, upper, d, g)?
        }
    };
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn finish_solved<T: Scalar>(
    p: &FsleProblem,
    method: Method,
    cfg: &SolveConfig,
    grid: &[f64],
    lower: Vec<Endpoint>,
    upper: Vec<Endpoint>,
    d: Option<Carrier<T>>,
    g: Option<Carrier<T>>,
) -> Result<SolveReport> {
    let raw_vector = FuzzyVector::new(
        lower
            .iter()
            .zip(&upper)
            .map(|(lo, up)| FuzzyNumber { lower: lo.clone(), upper: up.clone() })
            .collect(),
    )?;
    let residual = fuzzy_residual(&p.a, &raw_vector, &p.rhs, grid)?;

    let rule = cfg.weak_rule.unwrap_or(match method {
        Method::Ezzati => WeakRule::Ezzati,
        _ => WeakRule::Friedman,
    });
    let classification = classify(&lower, &upper, grid, rule, cfg.tolerance);

    let mut diagnostics = Diagnostics {
        d: d.map(|c| c.to_f64().to_endpoints()),
        g: g.map(|c| c.to_f64().to_endpoints()),
        residual: Some(residual),
        multiplications: None,
    };

    let (status, solution, weak_solution) = match classification {
        Classification::Strong => {
            if residual <= cfg.tolerance {
                (Status::Strong, Some(raw_vector.clone()), None)
            } else {
                // valid fuzzy vector but not a system solution
                (Status::Weak, None, Some(raw_vector.clone()))
            }
        }
        Classification::Weak(candidate) => match method {
            // the two-crisp-system methods report failure directly
            Method::Embedding | Method::EmbeddingTriangular => (Status::NotFuzzy, None, None),
            _ => (Status::Weak, None, Some(candidate)),
        },
        Classification::NotFuzzy => (Status::NotFuzzy, None, None),
    };
    if status != Status::Strong && status != Status::Weak {
        diagnostics.residual = Some(residual);
    }

    Ok(SolveReport {
        method,
        status,
        solution,
        raw: Some((lower, upper)),
        weak_solution,
        diagnostics,
    })
}

pub fn solve_with(p: &FsleProblem, method: Method, cfg: &SolveConfig) -> Result<SolveReport> {
    solve_generic::<f64>(p, method, cfg)
}

pub fn friedman_solve(p: &FsleProblem) -> Result<SolveReport> {
    solve_with(p, Method::Friedman, &SolveConfig::default())
}

pub fn ezzati_solve(p: &FsleProblem) -> Result<SolveReport> {
    solve_with(p, Method::Ezzati, &SolveConfig::default())
}

pub fn embedding_solve(p: &FsleProblem) -> Result<SolveReport> {
    solve_with(p, Method::Embedding, &SolveConfig::default())
}

pub fn triangular_embedding_solve(p: &FsleProblem) -> Result<SolveReport> {
    solve_with(p, Method::EmbeddingTriangular, &SolveConfig::default())
}

/// Dispatches to the triangular fast path when every right-hand-side entry is
/// triangular, otherwise to the general two-crisp-system method. The chosen
/// path is recorded in the report's `method`.
pub fn solve_auto_with(p: &FsleProblem, cfg: &SolveConfig) -> Result<SolveReport> {
    let method = if p.triangular_rhs(cfg.tolerance).is_some() {
        Method::EmbeddingTriangular
    } else {
        Method::Embedding
    };
    solve_with(p, method, cfg)
}

pub fn solve_auto(p: &FsleProblem) -> Result<SolveReport> {
    solve_auto_with(p, &SolveConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::triangular_to_parametric;

    fn affine_pair(l0: f64, l1: f64, u0: f64, u1: f64) -> FuzzyNumber {
        FuzzyNumber::affine(AffineZ::new(l0, l1), AffineZ::new(u0, u1))
    }

    fn example1() -> FsleProblem {
        let a = CrispMatrix::from_rows(&[vec![1.0, -1.0], vec![1.0, 3.0]]).unwrap();
        let w = FuzzyVector::new(vec![
            affine_pair(0.0, 1.0, 2.0, -1.0),
            affine_pair(4.0, 1.0, 7.0, -2.0),
        ])
        .unwrap();
        FsleProblem::new(a, w).unwrap()
    }

    fn example2() -> FsleProblem {
        let a = CrispMatrix::from_rows(&[
            vec![1.0, 1.0, -1.0],
            vec![1.0, -2.0, 1.0],
            vec![2.0, 1.0, 3.0],
        ])
        .unwrap();
        let w = FuzzyVector::new(vec![
            affine_pair(0.0, 1.0, 2.0, -1.0),
            affine_pair(2.0, 1.0, 3.0, 0.0),
            affine_pair(-2.0, 0.0, -1.0, -1.0),
        ])
        .unwrap();
        FsleProblem::new(a, w).unwrap()
    }

    fn example3() -> FsleProblem {
        let a = CrispMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let w = FuzzyVector::new(vec![
            affine_pair(0.0, 4.0, 6.0, -2.0),
            affine_pair(0.0, 5.0, 8.0, -3.0),
        ])
        .unwrap();
        FsleProblem::new(a, w).unwrap()
    }

    fn assert_affine_close(e: &Endpoint, const_term: f64, slope: f64, tol: f64) {
        let a = e.as_affine().expect("expected affine endpoint");
        assert!(
            (a.const_term - const_term).abs() <= tol && (a.slope - slope).abs() <= tol,
            "expected {const_term}+{slope}z, got {}+{}z",
            a.const_term,
            a.slope
        );
    }

    #[test]
    fn example1_strong_across_methods() {
        let p = example1();
        for method in [
            Method::Friedman,
            Method::Ezzati,
            Method::Embedding,
            Method::EmbeddingTriangular,
        ] {
            let report = solve_with(&p, method, &SolveConfig::default()).unwrap();
            assert_eq!(report.status, Status::Strong, "{method:?}");
            let sol = report.solution.unwrap();
            assert_affine_close(&sol.entries()[0].lower, 1.375, 0.625, 1e-12);
            assert_affine_close(&sol.entries()[0].upper, 2.875, -0.875, 1e-12);
            assert_affine_close(&sol.entries()[1].lower, 0.875, 0.125, 1e-12);
            assert_affine_close(&sol.entries()[1].upper, 1.375, -0.375, 1e-12);
        }
    }

    #[test]
    fn example1_triangular_diagnostics() {
        let p = example1();
        let report = triangular_embedding_solve(&p).unwrap();
        let d = report.diagnostics.d.as_ref().unwrap();
        // d' = (1.5, 0.5), stored as d'(1-z)
        assert_affine_close(&d[0], 1.5, -1.5, 1e-12);
        assert_affine_close(&d[1], 0.5, -0.5, 1e-12);
        let g = report.diagnostics.g.as_ref().unwrap();
        // g = ((17-z)/4, (9-z)/4)
        assert_affine_close(&g[0], 17.0 / 4.0, -0.25, 1e-12);
        assert_affine_close(&g[1], 9.0 / 4.0, -0.25, 1e-12);
    }

    #[test]
    fn example2_rejected_by_embedding_paths() {
        let p = example2();
        for method in [Method::Embedding, Method::EmbeddingTriangular] {
            let report = solve_with(&p, method, &SolveConfig::default()).unwrap();
            assert_eq!(report.status, Status::RejectedEarly, "{method:?}");
            let d = report.diagnostics.d.as_ref().unwrap();
            assert!(d.iter().any(|e| e.at(0.0) < 0.0));
        }
        // d' with the true inverse of B+C is (7, -1, -4)
        let report = triangular_embedding_solve(&p).unwrap();
        let d = report.diagnostics.d.as_ref().unwrap();
        assert_affine_close(&d[0], 7.0, -7.0, 1e-12);
        assert_affine_close(&d[1], -1.0, 1.0, 1e-12);
        assert_affine_close(&d[2], -4.0, 4.0, 1e-12);
    }

    #[test]
    fn example2_not_strong_by_friedman() {
        let report = friedman_solve(&example2()).unwrap();
        assert_ne!(report.status, Status::Strong);
        assert_ne!(report.status, Status::SingularMatrix);
    }

    #[test]
    fn example3_embedding_steps() {
        let report = embedding_solve(&example3()).unwrap();
        assert_eq!(report.status, Status::Strong);
        let d = report.diagnostics.d.as_ref().unwrap();
        assert_affine_close(&d[0], 4.0, -4.0, 1e-12);
        assert_affine_close(&d[1], 2.0, -2.0, 1e-12);
        let g = report.diagnostics.g.as_ref().unwrap();
        assert_affine_close(&g[0], 4.0, 2.0, 1e-12);
        assert_affine_close(&g[1], 2.0, 0.0, 1e-12);
        let sol = report.solution.unwrap();
        assert_affine_close(&sol.entries()[0].lower, 0.0, 3.0, 1e-12);
        assert_affine_close(&sol.entries()[0].upper, 4.0, -1.0, 1e-12);
        assert_affine_close(&sol.entries()[1].lower, 0.0, 1.0, 1e-12);
        assert_affine_close(&sol.entries()[1].upper, 2.0, -1.0, 1e-12);
    }

    #[test]
    fn example3_ezzati_matches() {
        let report = ezzati_solve(&example3()).unwrap();
        assert_eq!(report.status, Status::Strong);
        let sol = report.solution.unwrap();
        assert_affine_close(&sol.entries()[0].lower, 0.0, 3.0, 1e-12);
        assert_affine_close(&sol.entries()[1].upper, 2.0, -1.0, 1e-12);
    }

    #[test]
    fn identity_with_crisp_rhs_is_strong() {
        let a = CrispMatrix::identity(3);
        let w = FuzzyVector::new(vec![
            FuzzyNumber::singleton(2.0),
            FuzzyNumber::singleton(-1.0),
            FuzzyNumber::singleton(0.5),
        ])
        .unwrap();
        let p = FsleProblem::new(a, w.clone()).unwrap();
        let report = friedman_solve(&p).unwrap();
        assert_eq!(report.status, Status::Strong);
        let sol = report.solution.unwrap();
        for (got, want) in sol.entries().iter().zip(w.entries()) {
            assert!((got.lower.at(0.0) - want.lower.at(0.0)).abs() < 1e-12);
            assert!((got.upper.at(0.0) - want.upper.at(0.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn crisp_spreads_reduce_to_crisp_solve() {
        let a = CrispMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        // centers (5, 10) with zero spreads
        let w = FuzzyVector::new(vec![
            triangular_to_parametric(&TriangularFuzzy::new(5.0, 0.0, 0.0).unwrap()),
            triangular_to_parametric(&TriangularFuzzy::new(10.0, 0.0, 0.0).unwrap()),
        ])
        .unwrap();
        let p = FsleProblem::new(a.clone(), w).unwrap();
        let report = triangular_embedding_solve(&p).unwrap();
        assert_eq!(report.status, Status::Strong);
        let d = report.diagnostics.d.as_ref().unwrap();
        assert!(d.iter().all(|e| e.at(0.0).abs() < 1e-12));
        let sol = report.solution.unwrap();
        let x = lu_factor(&a).unwrap().solve_vec(&[5.0, 10.0]).unwrap();
        for (entry, xi) in sol.entries().iter().zip(&x) {
            assert!((entry.lower.at(0.5) - xi).abs() < 1e-12);
            assert!((entry.upper.at(0.5) - xi).abs() < 1e-12);
        }
    }

    #[test]
    fn singular_s_reports_singular_status() {
        let a = CrispMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let w = FuzzyVector::new(vec![
            FuzzyNumber::singleton(1.0),
            FuzzyNumber::singleton(1.0),
        ])
        .unwrap();
        let p = FsleProblem::new(a, w).unwrap();
        for method in [Method::Friedman, Method::Ezzati, Method::Embedding] {
            let report = solve_with(&p, method, &SolveConfig::default()).unwrap();
            assert_eq!(report.status, Status::SingularMatrix, "{method:?}");
        }
    }

    #[test]
    fn classify_examples() {
        let grid = uniform_grid(101);
        // published raw solution is strong
        let lower = vec![
            Endpoint::Affine(AffineZ::new(1.375, 0.625)),
            Endpoint::Affine(AffineZ::new(0.875, 0.125)),
        ];
        let upper = vec![
            Endpoint::Affine(AffineZ::new(2.875, -0.875)),
            Endpoint::Affine(AffineZ::new(1.375, -0.375)),
        ];
        assert_eq!(
            classify(&lower, &upper, &grid, WeakRule::Friedman, 1e-9),
            Classification::Strong
        );

        // swapped monotonicity repairs to (z, 2-z)
        let lower = vec![Endpoint::Affine(AffineZ::new(2.0, -1.0))];
        let upper = vec![Endpoint::Affine(AffineZ::new(0.0, 1.0))];
        match classify(&lower, &upper, &grid, WeakRule::Friedman, 1e-9) {
            Classification::Weak(candidate) => {
                let entry = &candidate.entries()[0];
                for &z in &[0.0, 0.25, 0.5, 1.0] {
                    assert!((entry.lower.at(z) - z).abs() < 1e-12);
                    assert!((entry.upper.at(z) - (2.0 - z)).abs() < 1e-12);
                }
            }
            other => panic!("expected Weak, got {other:?}"),
        }

        // increasing upper branch goes through the candidate path
        let lower = vec![Endpoint::Affine(AffineZ::new(0.0, 1.0))];
        let upper = vec![Endpoint::Affine(AffineZ::new(1.0, 1.0))];
        match classify(&lower, &upper, &grid, WeakRule::Friedman, 1e-9) {
            Classification::Weak(candidate) => {
                let entry = &candidate.entries()[0];
                assert!((entry.upper.at(0.0) - 2.0).abs() < 1e-12);
                assert!((entry.upper.at(1.0) - 2.0).abs() < 1e-12);
            }
            other => panic!("expected Weak, got {other:?}"),
        }
    }

    #[test]
    fn auto_dispatch() {
        // triangular right-hand side takes the fast path
        let report = solve_auto(&example1()).unwrap();
        assert_eq!(report.method, Method::EmbeddingTriangular);

        // Example-3 right-hand side is triangular too; both paths must agree
        let p = example3();
        let auto = solve_auto(&p).unwrap();
        assert_eq!(auto.method, Method::EmbeddingTriangular);
        let general = embedding_solve(&p).unwrap();
        let (al, au) = auto.raw.as_ref().unwrap();
        let (gl, gu) = general.raw.as_ref().unwrap();
        for (x, y) in al.iter().zip(gl).chain(au.iter().zip(gu)) {
            for &z in &[0.0, 0.5, 1.0] {
                assert!((x.at(z) - y.at(z)).abs() < 1e-12);
            }
        }

        // non-affine sampled right-hand side takes the general path
        let grid = vec![0.0, 0.5, 1.0];
        let entry = FuzzyNumber::sampled(
            SampledZ::new(grid.clone(), vec![0.0, 0.8, 1.0]).unwrap(),
            SampledZ::new(grid.clone(), vec![2.0, 1.5, 1.0]).unwrap(),
        )
        .unwrap();
        let p = FsleProblem::new(
            CrispMatrix::identity(1),
            FuzzyVector::new(vec![entry]).unwrap(),
        )
        .unwrap();
        let report = solve_auto(&p).unwrap();
        assert_eq!(report.method, Method::Embedding);
        assert_eq!(report.status, Status::Strong);
    }

    #[test]
    fn identity_with_crisp_spread_is_strong_via_embedding() {
        // upper(w) - lower(w) = 0 gives d = 0 and a crisp strong solution
        let a = CrispMatrix::identity(2);
        let w = FuzzyVector::new(vec![
            FuzzyNumber::singleton(3.0),
            FuzzyNumber::singleton(-2.0),
        ])
        .unwrap();
        let p = FsleProblem::new(a, w).unwrap();
        let report = embedding_solve(&p).unwrap();
        assert_eq!(report.status, Status::Strong);
        let d = report.diagnostics.d.as_ref().unwrap();
        assert!(d.iter().all(|e| e.at(0.0).abs() < 1e-14 && e.at(1.0).abs() < 1e-14));
    }

    #[test]
    fn triangular_method_rejects_non_triangular_rhs() {
        let w = FuzzyVector::new(vec![affine_pair(0.0, 1.0, 2.0, -2.0)]).unwrap();
        let p = FsleProblem::new(CrispMatrix::identity(1), w).unwrap();
        assert_eq!(
            triangular_embedding_solve(&p).unwrap_err(),
            Error::NotTriangular(0)
        );
    }
}
