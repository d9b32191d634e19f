//! Parametric fuzzy numbers, their arithmetic, validity checking, and the
//! triangular specialization.
//!
//! A fuzzy number is carried as a pair of endpoint functions of the level
//! `z in [0, 1]`: a nondecreasing lower branch and a nonincreasing upper
//! branch with `lower(z) <= upper(z)`. Two carriers are supported: an exact
//! affine form `a + b*z` and a sampled form over an explicit z-grid.

use crate::error::{Error, Result};
use crate::linalg::CrispMatrix;
use crate::scalar::Scalar;

/// Default absolute tolerance for validity and residual comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Default number of points for sampled z-grids.
pub const DEFAULT_GRID_POINTS: usize = 101;

/// A function of z of the form `const_term + slope * z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineZ<T = f64> {
    pub const_term: T,
    pub slope: T,
}

impl<T: Scalar> AffineZ<T> {
    pub fn new(const_term: T, slope: T) -> Self {
        Self { const_term, slope }
    }

    pub fn constant(value: T) -> Self {
        Self { const_term: value, slope: T::zero() }
    }

    /// Value at level `z`. No range check; use [`eval`] for the checked form.
    #[inline]
    pub fn at(&self, z: f64) -> T {
        self.const_term + self.slope * T::from_f64(z)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.const_term + other.const_term, self.slope + other.slope)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.const_term - other.const_term, self.slope - other.slope)
    }

    pub fn scale(&self, k: T) -> Self {
        Self::new(k * self.const_term, k * self.slope)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.const_term, -self.slope)
    }
}

impl AffineZ<f64> {
    pub fn convert<T: Scalar>(&self) -> AffineZ<T> {
        AffineZ::new(T::from_f64(self.const_term), T::from_f64(self.slope))
    }
}

/// A uniform z-grid of `points >= 2` values covering `[0, 1]`.
pub fn uniform_grid(points: usize) -> Vec<f64> {
    assert!(points >= 2, "a z-grid needs at least the endpoints 0 and 1");
    let step = 1.0 / (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points).map(|i| i as f64 * step).collect();
    grid[points - 1] = 1.0;
    grid
}

/// An endpoint function given by samples over a strictly increasing z-grid
/// that starts at 0 and ends at 1. Evaluation between grid points is linear.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledZ {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl SampledZ {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() < 2 {
            return Err(Error::InvalidGrid("need at least two grid points".into()));
        }
        if grid.len() != values.len() {
            return Err(Error::InvalidGrid(format!(
                "{} grid points but {} values",
                grid.len(),
                values.len()
            )));
        }
        if grid[0] != 0.0 || *grid.last().unwrap() != 1.0 {
            return Err(Error::InvalidGrid("grid must start at 0 and end at 1".into()));
        }
        if !grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidGrid("grid must be strictly increasing".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at level `z` by linear interpolation. No range check.
    pub fn at(&self, z: f64) -> f64 {
        let idx = self.grid.partition_point(|&g| g < z);
        if idx == 0 {
            return self.values[0];
        }
        if idx >= self.grid.len() {
            return *self.values.last().unwrap();
        }
        let (z0, z1) = (self.grid[idx - 1], self.grid[idx]);
        let (v0, v1) = (self.values[idx - 1], self.values[idx]);
        v0 + (v1 - v0) * (z - z0) / (z1 - z0)
    }
}

/// One endpoint function of a fuzzy number: exact affine or sampled.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    Affine(AffineZ),
    Sampled(SampledZ),
}

impl Endpoint {
    /// Value at level `z`. No range check; use [`eval`] for the checked form.
    pub fn at(&self, z: f64) -> f64 {
        match self {
            Endpoint::Affine(a) => a.at(z),
            Endpoint::Sampled(s) => s.at(z),
        }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, Endpoint::Affine(_))
    }

    pub fn as_affine(&self) -> Option<&AffineZ> {
        match self {
            Endpoint::Affine(a) => Some(a),
            Endpoint::Sampled(_) => None,
        }
    }
}

/// Checked endpoint evaluation; rejects `z` outside `[0, 1]`.
pub fn eval(f: &Endpoint, z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::ZOutOfRange(z));
    }
    Ok(f.at(z))
}

/// A fuzzy number as a pair of endpoint functions.
///
/// Construction does not enforce the fuzzy-number conditions; run
/// [`validate_fuzzy_number`] to check them. Invalid pairs are how weak and
/// non-fuzzy raw solver outputs are represented.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyNumber {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

impl FuzzyNumber {
    pub fn affine(lower: AffineZ, upper: AffineZ) -> Self {
        Self { lower: Endpoint::Affine(lower), upper: Endpoint::Affine(upper) }
    }

    pub fn sampled(lower: SampledZ, upper: SampledZ) -> Result<Self> {
        if lower.grid != upper.grid {
            return Err(Error::MixedRepresentation);
        }
        Ok(Self { lower: Endpoint::Sampled(lower), upper: Endpoint::Sampled(upper) })
    }

    /// The crisp number `k` embedded as a fuzzy number.
    pub fn singleton(k: f64) -> Self {
        Self::affine(AffineZ::constant(k), AffineZ::constant(k))
    }

    pub fn is_affine(&self) -> bool {
        self.lower.is_affine() && self.upper.is_affine()
    }
}

/// A triangular fuzzy number `(c, mu, rho)` with membership sides
/// `lower(z) = c - (1-z)*mu` and `upper(z) = c + (1-z)*rho`.
///
/// Zero spreads are admitted so one-sided and crisp numbers can be expressed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularFuzzy {
    pub center: f64,
    pub left_spread: f64,
    pub right_spread: f64,
}

impl TriangularFuzzy {
    pub fn new(center: f64, left_spread: f64, right_spread: f64) -> Result<Self> {
        if left_spread < 0.0 {
            return Err(Error::NegativeSpread(left_spread));
        }
        if right_spread < 0.0 {
            return Err(Error::NegativeSpread(right_spread));
        }
        if !(center.is_finite() && left_spread.is_finite() && right_spread.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { center, left_spread, right_spread })
    }

    /// Sum of both spreads; `upper(z) - lower(z) = spread_sum * (1-z)`.
    pub fn spread_sum(&self) -> f64 {
        self.left_spread + self.right_spread
    }
}

/// `(c, mu, rho)` -> `(c - mu + mu*z, c + rho - rho*z)`.
pub fn triangular_to_parametric(t: &TriangularFuzzy) -> FuzzyNumber {
    FuzzyNumber::affine(
        AffineZ::new(t.center - t.left_spread, t.left_spread),
        AffineZ::new(t.center + t.right_spread, -t.right_spread),
    )
}

/// Inverse of [`triangular_to_parametric`]. Succeeds iff both endpoints are
/// affine, the branches meet at `z = 1` and both spreads are nonnegative,
/// all within `tol`.
pub fn parametric_to_triangular(p: &FuzzyNumber, tol: f64) -> Option<TriangularFuzzy> {
    let lower = p.lower.as_affine()?;
    let upper = p.upper.as_affine()?;
    if (lower.at(1.0) - upper.at(1.0)).abs() > tol {
        return None;
    }
    let mu = lower.slope;
    let rho = -upper.slope;
    if mu < -tol || rho < -tol {
        return None;
    }
    Some(TriangularFuzzy {
        center: lower.at(1.0),
        left_spread: mu.max(0.0),
        right_spread: rho.max(0.0),
    })
}

/// Outcome of checking the three fuzzy-number conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityReport {
    /// (i) lower branch is nondecreasing in z.
    pub lower_nondecreasing: bool,
    /// (ii) upper branch is nonincreasing in z.
    pub upper_nonincreasing: bool,
    /// (iii) lower(z) <= upper(z) on [0, 1].
    pub ordered: bool,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.lower_nondecreasing && self.upper_nonincreasing && self.ordered
    }
}

fn endpoint_monotone(f: &Endpoint, grid: &[f64], nondecreasing: bool, tol: f64) -> bool {
    match f {
        Endpoint::Affine(a) => {
            if nondecreasing {
                a.slope >= -tol
            } else {
                a.slope <= tol
            }
        }
        Endpoint::Sampled(_) => grid.windows(2).all(|w| {
            let step = f.at(w[1]) - f.at(w[0]);
            if nondecreasing {
                step >= -tol
            } else {
                step <= tol
            }
        }),
    }
}

/// Checks conditions (i)-(iii) for `p`. Affine branches are checked via slope
/// signs and the two endpoints `z = 0, 1`; sampled branches pointwise on
/// `grid`.
pub fn validate_fuzzy_number(p: &FuzzyNumber, grid: &[f64], tol: f64) -> ValidityReport {
    let lower_nondecreasing = endpoint_monotone(&p.lower, grid, true, tol);
    let upper_nonincreasing = endpoint_monotone(&p.upper, grid, false, tol);
    let ordered = if p.is_affine() {
        // An affine difference is nonnegative on [0,1] iff it is at both ends.
        [0.0, 1.0].iter().all(|&z| p.lower.at(z) <= p.upper.at(z) + tol)
    } else {
        grid.iter().all(|&z| p.lower.at(z) <= p.upper.at(z) + tol)
    };
    ValidityReport { lower_nondecreasing, upper_nonincreasing, ordered }
}

fn endpoint_add(a: &Endpoint, b: &Endpoint) -> Result<Endpoint> {
    match (a, b) {
        (Endpoint::Affine(x), Endpoint::Affine(y)) => Ok(Endpoint::Affine(x.add(y))),
        (Endpoint::Sampled(x), Endpoint::Sampled(y)) => {
            if x.grid != y.grid {
                return Err(Error::MixedRepresentation);
            }
            let values = x.values.iter().zip(&y.values).map(|(u, v)| u + v).collect();
            Ok(Endpoint::Sampled(SampledZ { grid: x.grid.clone(), values }))
        }
        _ => Err(Error::MixedRepresentation),
    }
}

fn endpoint_scale(a: &Endpoint, k: f64) -> Endpoint {
    match a {
        Endpoint::Affine(x) => Endpoint::Affine(x.scale(k)),
        Endpoint::Sampled(x) => Endpoint::Sampled(SampledZ {
            grid: x.grid.clone(),
            values: x.values.iter().map(|v| k * v).collect(),
        }),
    }
}

/// Endpoint-wise fuzzy addition.
pub fn fuzzy_add(p: &FuzzyNumber, q: &FuzzyNumber) -> Result<FuzzyNumber> {
    Ok(FuzzyNumber {
        lower: endpoint_add(&p.lower, &q.lower)?,
        upper: endpoint_add(&p.upper, &q.upper)?,
    })
}

/// Fuzzy subtraction: `(p - q)(z) = (lower_p - upper_q, upper_p - lower_q)`.
pub fn fuzzy_sub(p: &FuzzyNumber, q: &FuzzyNumber) -> Result<FuzzyNumber> {
    Ok(FuzzyNumber {
        lower: endpoint_add(&p.lower, &endpoint_scale(&q.upper, -1.0))?,
        upper: endpoint_add(&p.upper, &endpoint_scale(&q.lower, -1.0))?,
    })
}

/// Scalar multiple; a negative scalar swaps the branches.
pub fn scalar_mul(k: f64, p: &FuzzyNumber) -> FuzzyNumber {
    if k >= 0.0 {
        FuzzyNumber { lower: endpoint_scale(&p.lower, k), upper: endpoint_scale(&p.upper, k) }
    } else {
        FuzzyNumber { lower: endpoint_scale(&p.upper, k), upper: endpoint_scale(&p.lower, k) }
    }
}

/// A vector of fuzzy numbers sharing one endpoint representation.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyVector {
    entries: Vec<FuzzyNumber>,
}

impl FuzzyVector {
    pub fn new(entries: Vec<FuzzyNumber>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch("empty fuzzy vector".into()));
        }
        let all_affine = entries.iter().all(|e| e.is_affine());
        if !all_affine {
            let grid = match &entries[0].lower {
                Endpoint::Sampled(s) => s.grid.clone(),
                Endpoint::Affine(_) => return Err(Error::MixedRepresentation),
            };
            for e in &entries {
                for ep in [&e.lower, &e.upper] {
                    match ep {
                        Endpoint::Sampled(s) if s.grid == grid => {}
                        _ => return Err(Error::MixedRepresentation),
                    }
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[FuzzyNumber] {
        &self.entries
    }

    pub fn is_affine(&self) -> bool {
        self.entries.iter().all(|e| e.is_affine())
    }

    /// The shared grid when the entries are sampled.
    pub fn sample_grid(&self) -> Option<&[f64]> {
        match &self.entries[0].lower {
            Endpoint::Sampled(s) => Some(&s.grid),
            Endpoint::Affine(_) => None,
        }
    }
}

/// Max-abs defect of `A * v = w` over grid points and both branches.
///
/// Each row is accumulated with [`scalar_mul`] and [`fuzzy_add`], so negative
/// coefficients swap branches exactly as the fuzzy arithmetic prescribes.
pub fn fuzzy_residual(
    a: &CrispMatrix,
    v: &FuzzyVector,
    w: &FuzzyVector,
    grid: &[f64],
) -> Result<f64> {
    let n = a.rows();
    if a.cols() != v.len() || w.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{}, v has {}, w has {} entries",
            a.rows(),
            a.cols(),
            v.len(),
            w.len()
        )));
    }
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let mut acc = scalar_mul(a.get(i, 0), &v.entries[0]);
        for j in 1..a.cols() {
            acc = fuzzy_add(&acc, &scalar_mul(a.get(i, j), &v.entries[j]))?;
        }
        let wi = &w.entries[i];
        for &z in grid {
            worst = worst.max((acc.lower.at(z) - wi.lower.at(z)).abs());
            worst = worst.max((acc.upper.at(z) - wi.upper.at(z)).abs());
        }
    }
    Ok(worst)
}
