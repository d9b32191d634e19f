//! Membership-function CSV export: `component,z,lower,upper`, one row per
//! grid point per component. Values use Rust's shortest round-trip float
//! formatting so the file reproduces the in-memory evaluation exactly.

use fsle::FuzzyVector;

pub const CSV_HEADER: &str = "component,z,lower,upper";

pub fn solution_csv(v: &FuzzyVector, grid: &[f64]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (i, entry) in v.entries().iter().enumerate() {
        for &z in grid {
            out.push_str(&format!("{},{},{},{}\n", i + 1, z, entry.lower.at(z), entry.upper.at(z)));
        }
    }
    out
}
