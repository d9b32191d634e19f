//! Text rendering of solve reports: closed-form affine printing, fallback
//! tables for sampled solutions, and the status-to-exit-code mapping.

use fsle::{AffineZ, Endpoint, FuzzyVector, SolveReport, Status};

/// Formats a number with at most 6 significant digits, trimming trailing
/// zeros, so coefficients print like `1.375` and `0.625` rather than
/// `1.375000`.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let decimals = (5 - v.abs().log10().floor() as i64).clamp(0, 17) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Closed-form printing of `c + m·z`: `1.375+0.625z`, `3z`, `4-z`, `2`.
pub fn fmt_affine(a: &AffineZ) -> String {
    let c = a.const_term;
    let m = a.slope;
    if m == 0.0 {
        return fmt_sig(c);
    }
    let ms = fmt_sig(m);
    let z_part = match ms.as_str() {
        "1" => "z".to_string(),
        "-1" => "-z".to_string(),
        _ => format!("{ms}z"),
    };
    if c == 0.0 {
        return z_part;
    }
    if m > 0.0 {
        format!("{}+{}", fmt_sig(c), z_part)
    } else {
        format!("{}{}", fmt_sig(c), z_part)
    }
}

fn fmt_endpoint_closed(e: &Endpoint) -> Option<String> {
    e.as_affine().map(fmt_affine)
}

/// Renders a fuzzy vector: closed form per component when affine, otherwise
/// a small table sampled over `grid`.
pub fn render_vector(v: &FuzzyVector, grid: &[f64]) -> String {
    let mut out = String::new();
    if v.is_affine() {
        for (i, entry) in v.entries().iter().enumerate() {
            out.push_str(&format!(
                "v{} = ({}, {})\n",
                i + 1,
                fmt_endpoint_closed(&entry.lower).unwrap(),
                fmt_endpoint_closed(&entry.upper).unwrap(),
            ));
        }
        return out;
    }
    // subsample long grids to keep the table readable
    let step = (grid.len() / 11).max(1);
    let rows: Vec<f64> = grid
        .iter()
        .copied()
        .step_by(step)
        .chain(std::iter::once(1.0))
        .collect();
    for (i, entry) in v.entries().iter().enumerate() {
        out.push_str(&format!("v{}:\n  {:>8}  {:>14}  {:>14}\n", i + 1, "z", "lower", "upper"));
        let mut last = f64::NAN;
        for &z in &rows {
            if z == last {
                continue;
            }
            last = z;
            out.push_str(&format!(
                "  {:>8}  {:>14}  {:>14}\n",
                fmt_sig(z),
                fmt_sig(entry.lower.at(z)),
                fmt_sig(entry.upper.at(z)),
            ));
        }
    }
    out
}

/// Exit codes are a total function of the report status.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Strong => 0,
        Status::Weak => 2,
        Status::NotFuzzy | Status::RejectedEarly => 3,
        Status::SingularMatrix => 4,
    }
}

pub const NO_SOLUTION_MESSAGE: &str = "The system does not have fuzzy number vector solution";

/// Human-readable tail line for non-strong outcomes. Singularity gets its
/// own diagnostic: it means the solve never ran, not that the system was
/// classified as unsolvable.
pub fn status_message(status: Status) -> Option<&'static str> {
    match status {
        Status::Strong => None,
        Status::Weak => Some("strong solution does not exist; reporting the weak candidate"),
        Status::NotFuzzy | Status::RejectedEarly => Some(NO_SOLUTION_MESSAGE),
        Status::SingularMatrix => {
            Some("coefficient matrix (or its positive/negative split sum) is singular; cannot solve")
        }
    }
}

pub fn status_name(status: Status) -> &'static str {
    match status {
        Status::Strong => "Strong",
        Status::Weak => "Weak",
        Status::NotFuzzy => "NotFuzzy",
        Status::RejectedEarly => "RejectedEarly",
        Status::SingularMatrix => "SingularMatrix",
    }
}

pub fn render_report(report: &SolveReport, grid: &[f64]) -> String {
    let mut out = String::new();
    out.push_str(&format!("method: {}\n", report.method.name()));
    out.push_str(&format!("status: {}\n", status_name(report.status)));
    if let Some(solution) = &report.solution {
        out.push_str(&render_vector(solution, grid));
    } else if let Some(weak) = &report.weak_solution {
        out.push_str("weak candidate:\n");
        out.push_str(&render_vector(weak, grid));
    }
    if let Some(d) = &report.diagnostics.d {
        let parts: Vec<String> = d
            .iter()
            .map(|e| fmt_endpoint_closed(e).unwrap_or_else(|| "<sampled>".to_string()))
            .collect();
        out.push_str(&format!("d = ({})\n", parts.join(", ")));
    }
    if let Some(g) = &report.diagnostics.g {
        let parts: Vec<String> = g
            .iter()
            .map(|e| fmt_endpoint_closed(e).unwrap_or_else(|| "<sampled>".to_string()))
            .collect();
        out.push_str(&format!("g = ({})\n", parts.join(", ")));
    }
    if let Some(res) = report.diagnostics.residual {
        out.push_str(&format!("residual: {res:.3e}\n"));
    }
    if let Some(message) = status_message(report.status) {
        out.push_str(&format!("{message}\n"));
    }
    out
}
