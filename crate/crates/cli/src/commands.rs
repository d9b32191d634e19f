//! The four subcommands. Each returns a structured outcome plus rendered
//! text so the binary can print and exit while tests inspect fields.

use std::path::{Path, PathBuf};

use anyhow::bail;

use fsle::{
    counted_solve, formula_counts, fuzzy_residual, solve_auto_with, solve_with, uniform_grid,
    CostModel, FsleProblem, FuzzyVector, Method, OpCounts, SolveConfig, SolveReport, Status,
    WeakRule,
};

use crate::csv_out::solution_csv;
use crate::problem::ProblemFile;
use crate::render::{exit_code, render_report, status_message, status_name};
use crate::svg::MembershipPlot;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Friedman,
    Ezzati,
    Embedding,
    EmbeddingTriangular,
    Auto,
}

impl MethodChoice {
    pub fn parse(name: &str) -> anyhow::Result<Self> {
        Ok(match name {
            "friedman" => Self::Friedman,
            "ezzati" => Self::Ezzati,
            "embedding" => Self::Embedding,
            "embedding-triangular" | "triangular" => Self::EmbeddingTriangular,
            "auto" => Self::Auto,
            other => bail!(
                "unknown method '{other}' (expected friedman, ezzati, embedding, \
                 embedding-triangular, or auto)"
            ),
        })
    }
}

pub fn parse_weak_rule(name: &str) -> anyhow::Result<WeakRule> {
    Ok(match name {
        "friedman" => WeakRule::Friedman,
        "ezzati" => WeakRule::Ezzati,
        other => bail!("unknown weak rule '{other}' (expected friedman or ezzati)"),
    })
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub method: MethodChoice,
    pub tolerance: f64,
    pub grid_points: usize,
    pub weak_rule: Option<WeakRule>,
    pub out_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            method: MethodChoice::Auto,
            tolerance: fsle::DEFAULT_TOLERANCE,
            grid_points: fsle::DEFAULT_GRID_POINTS,
            weak_rule: None,
            out_dir: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if !(self.tolerance > 0.0) {
            bail!("--tolerance must be positive");
        }
        if self.grid_points < 2 {
            bail!("--grid must be at least 2");
        }
        Ok(())
    }

    fn solve_config(&self) -> SolveConfig {
        SolveConfig {
            tolerance: self.tolerance,
            grid_points: self.grid_points,
            weak_rule: self.weak_rule,
        }
    }
}

fn load(path: &Path) -> anyhow::Result<FsleProblem> {
    ProblemFile::load(path)?.to_problem()
}

fn render_grid(problem: &FsleProblem, cfg: &RunConfig) -> Vec<f64> {
    problem
        .rhs
        .sample_grid()
        .map(<[f64]>::to_vec)
        .unwrap_or_else(|| uniform_grid(cfg.grid_points))
}

fn run_method(
    problem: &FsleProblem,
    choice: MethodChoice,
    cfg: &RunConfig,
) -> anyhow::Result<SolveReport> {
    let scfg = cfg.solve_config();
    Ok(match choice {
        MethodChoice::Auto => solve_auto_with(problem, &scfg)?,
        MethodChoice::Friedman => solve_with(problem, Method::Friedman, &scfg)?,
        MethodChoice::Ezzati => solve_with(problem, Method::Ezzati, &scfg)?,
        MethodChoice::Embedding => solve_with(problem, Method::Embedding, &scfg)?,
        MethodChoice::EmbeddingTriangular => {
            solve_with(problem, Method::EmbeddingTriangular, &scfg)?
        }
    })
}

fn plottable_vector(report: &SolveReport) -> Option<&FuzzyVector> {
    report.solution.as_ref().or(report.weak_solution.as_ref())
}

#[derive(Debug)]
pub struct SolveOutcome {
    pub report: SolveReport,
    pub rendered: String,
    pub csv_path: Option<PathBuf>,
    pub exit_code: i32,
}

pub fn cmd_solve(path: &Path, cfg: &RunConfig) -> anyhow::Result<SolveOutcome> {
    cfg.validate()?;
    let problem = load(path)?;
    let grid = render_grid(&problem, cfg);
    let report = run_method(&problem, cfg.method, cfg)?;
    let mut rendered = render_report(&report, &grid);
    let mut csv_path = None;
    if let (Some(vector), Some(dir)) = (plottable_vector(&report), cfg.out_dir.as_deref()) {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("solution.csv");
        std::fs::write(&path, solution_csv(vector, &grid))?;
        rendered.push_str(&format!("wrote {}\n", path.display()));
        csv_path = Some(path);
    }
    Ok(SolveOutcome { exit_code: exit_code(report.status), report, rendered, csv_path })
}

#[derive(Debug)]
pub struct CompareRow {
    pub method: Method,
    pub status: Status,
    pub measured_mults: u64,
    pub residual: Option<f64>,
}

#[derive(Debug)]
pub struct CompareOutcome {
    pub n: usize,
    pub rows: Vec<CompareRow>,
    /// Max deviation between raw solutions of any two methods that produced
    /// one, over the evaluation grid.
    pub max_deviation: Option<f64>,
    /// Closed-form counts for this n (absent for n < 2, where the formulas
    /// are not defined).
    pub formulas: Option<OpCounts>,
    pub rendered: String,
}

pub fn cmd_compare(path: &Path, cfg: &RunConfig) -> anyhow::Result<CompareOutcome> {
    cfg.validate()?;
    let problem = load(path)?;
    let grid = render_grid(&problem, cfg);
    let scfg = cfg.solve_config();

    let mut methods = vec![Method::Friedman, Method::Ezzati, Method::Embedding];
    if problem.triangular_rhs(cfg.tolerance).is_some() {
        methods.push(Method::EmbeddingTriangular);
    }

    let mut rows = Vec::new();
    let mut reports = Vec::new();
    for method in methods {
        let (report, mults) = counted_solve(&problem, method, &scfg)?;
        rows.push(CompareRow {
            method,
            status: report.status,
            measured_mults: mults,
            residual: report.diagnostics.residual,
        });
        reports.push(report);
    }

    let raws: Vec<_> = reports.iter().filter_map(|r| r.raw.as_ref()).collect();
    let mut max_deviation = None;
    for i in 0..raws.len() {
        for j in i + 1..raws.len() {
            let mut worst: f64 = 0.0;
            let (al, au) = raws[i];
            let (bl, bu) = raws[j];
            for (x, y) in al.iter().zip(bl).chain(au.iter().zip(bu)) {
                for &z in &grid {
                    worst = worst.max((x.at(z) - y.at(z)).abs());
                }
            }
            max_deviation = Some(max_deviation.map_or(worst, |m: f64| m.max(worst)));
        }
    }

    let formulas = formula_counts(problem.n(), CostModel::Cubic).ok();

    let mut rendered = format!("n = {}\n", problem.n());
    rendered.push_str(&format!(
        "{:<22} {:<15} {:>14}\n",
        "method", "status", "measured mults"
    ));
    for row in &rows {
        rendered.push_str(&format!(
            "{:<22} {:<15} {:>14}\n",
            row.method.name(),
            status_name(row.status),
            row.measured_mults
        ));
    }
    if let Some(dev) = max_deviation {
        rendered.push_str(&format!("max pairwise raw deviation: {dev:.3e}\n"));
    }
    if let Some(f) = &formulas {
        rendered.push_str(&format!(
            "formula counts (h = n^3): friedman {} ezzati {} embedding {} \
             embedding-rejected {} triangular {} triangular-rejected {}\n",
            f.friedman,
            f.ezzati,
            f.embedding_general,
            f.embedding_rejected,
            f.embedding_triangular,
            f.embedding_triangular_rejected
        ));
    }

    Ok(CompareOutcome { n: problem.n(), rows, max_deviation, formulas, rendered })
}

pub fn cmd_opcount(ns: &[usize], model: CostModel) -> anyhow::Result<String> {
    if ns.is_empty() {
        bail!("usage: opcount --n <n1,n2,...> requires at least one n");
    }
    let mut out = format!("cost model: {}\n", model.name());
    out.push_str(&format!(
        "{:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} | {:>8} {:>8} {:>8} {:>8} {:>8}\n",
        "n", "F", "E", "D", "D_rej", "D_tri", "D_tri_rej", "F-E", "E-D", "E-D_rej", "E-D_tri",
        "E-D_t_r"
    ));
    for &n in ns {
        let c = formula_counts(n, model)?;
        out.push_str(&format!(
            "{:>4} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10} | {:>8} {:>8} {:>8} {:>8} {:>8}\n",
            n,
            c.friedman,
            c.ezzati,
            c.embedding_general,
            c.embedding_rejected,
            c.embedding_triangular,
            c.embedding_triangular_rejected,
            c.friedman - c.ezzati,
            c.ezzati - c.embedding_general,
            c.ezzati - c.embedding_rejected,
            c.ezzati - c.embedding_triangular,
            c.ezzati - c.embedding_triangular_rejected,
        ));
    }
    Ok(out)
}

#[derive(Debug)]
pub struct PlotOutcome {
    pub report: SolveReport,
    pub plots: Vec<MembershipPlot>,
    pub files: Vec<PathBuf>,
    pub rendered: String,
    pub exit_code: i32,
}

pub fn cmd_plot(path: &Path, cfg: &RunConfig) -> anyhow::Result<PlotOutcome> {
    cfg.validate()?;
    let problem = load(path)?;
    let grid = render_grid(&problem, cfg);
    let report = run_method(&problem, cfg.method, cfg)?;

    let Some(vector) = plottable_vector(&report) else {
        let message = status_message(report.status).unwrap_or("no solution to plot");
        let rendered = format!("status: {}\n{message}\n", status_name(report.status));
        return Ok(PlotOutcome {
            exit_code: exit_code(report.status),
            report,
            plots: Vec::new(),
            files: Vec::new(),
            rendered,
        });
    };

    let plots: Vec<MembershipPlot> = vector
        .entries()
        .iter()
        .enumerate()
        .map(|(i, entry)| MembershipPlot::from_fuzzy(i + 1, entry, &grid))
        .collect();

    let dir = cfg.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    let mut files = Vec::new();
    let mut rendered = format!("status: {}\n", status_name(report.status));
    for plot in &plots {
        let file = dir.join(format!("component_{}.svg", plot.component));
        std::fs::write(&file, plot.to_svg())?;
        rendered.push_str(&format!("wrote {}\n", file.display()));
        files.push(file);
    }
    let csv_file = dir.join("plot.csv");
    std::fs::write(&csv_file, solution_csv(vector, &grid))?;
    rendered.push_str(&format!("wrote {}\n", csv_file.display()));
    files.push(csv_file);

    Ok(PlotOutcome { exit_code: exit_code(report.status), report, plots, files, rendered })
}

/// Residual of a report's solution against the original problem; used by
/// tests to double-check Strong reports end to end.
pub fn solution_residual(path: &Path, report: &SolveReport, grid: &[f64]) -> anyhow::Result<f64> {
    let problem = load(path)?;
    let solution = report.solution.as_ref().expect("strong report has a solution");
    Ok(fuzzy_residual(&problem.a, solution, &problem.rhs, grid)?)
}
