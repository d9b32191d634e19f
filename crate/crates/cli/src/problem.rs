//! Problem files: a JSON schema for an n-by-n system with a fuzzy
//! right-hand side, plus conversion into the solver's problem type.

use std::path::Path;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use fsle::{
    triangular_to_parametric, AffineZ, FsleProblem, FuzzyNumber, FuzzyVector, SampledZ,
    TriangularFuzzy,
};

/// One right-hand-side entry. `affine` endpoints are `[constant, slope-of-z]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RhsEntry {
    Triangular { c: f64, mu: f64, rho: f64 },
    Affine { lower: [f64; 2], upper: [f64; 2] },
    Sampled { grid: Vec<f64>, lower: Vec<f64>, upper: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub n: usize,
    pub matrix: Vec<Vec<f64>>,
    pub rhs: Vec<RhsEntry>,
}

impl ProblemFile {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let file: ProblemFile = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.n == 0 {
            bail!("field 'n' must be positive");
        }
        if self.matrix.len() != self.n {
            bail!("field 'matrix' has {} rows, expected n = {}", self.matrix.len(), self.n);
        }
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != self.n {
                bail!("matrix row {} has {} entries, expected n = {}", i + 1, row.len(), self.n);
            }
        }
        if self.rhs.len() != self.n {
            bail!("field 'rhs' has {} entries, expected n = {}", self.rhs.len(), self.n);
        }
        for (i, entry) in self.rhs.iter().enumerate() {
            match entry {
                RhsEntry::Triangular { mu, rho, .. } => {
                    if *mu < 0.0 || *rho < 0.0 {
                        bail!("rhs entry {}: spreads mu and rho must be nonnegative", i + 1);
                    }
                }
                RhsEntry::Affine { .. } => {}
                RhsEntry::Sampled { grid, lower, upper } => {
                    SampledZ::new(grid.clone(), lower.clone())
                        .with_context(|| format!("rhs entry {} lower branch", i + 1))?;
                    SampledZ::new(grid.clone(), upper.clone())
                        .with_context(|| format!("rhs entry {} upper branch", i + 1))?;
                }
            }
        }
        Ok(())
    }

    pub fn to_problem(&self) -> anyhow::Result<FsleProblem> {
        let matrix = fsle::CrispMatrix::from_rows(&self.matrix)?;
        let entries = self
            .rhs
            .iter()
            .map(|entry| -> anyhow::Result<FuzzyNumber> {
                Ok(match entry {
                    RhsEntry::Triangular { c, mu, rho } => {
                        triangular_to_parametric(&TriangularFuzzy::new(*c, *mu, *rho)?)
                    }
                    RhsEntry::Affine { lower, upper } => FuzzyNumber::affine(
                        AffineZ::new(lower[0], lower[1]),
                        AffineZ::new(upper[0], upper[1]),
                    ),
                    RhsEntry::Sampled { grid, lower, upper } => FuzzyNumber::sampled(
                        SampledZ::new(grid.clone(), lower.clone())?,
                        SampledZ::new(grid.clone(), upper.clone())?,
                    )?,
                })
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(FsleProblem::new(matrix, FuzzyVector::new(entries)?)?)
    }
}
