//! Command-line front end for the fuzzy linear system solvers: problem-file
//! parsing, report rendering, CSV export, and SVG membership plots.

pub mod commands;
pub mod csv_out;
pub mod problem;
pub mod render;
pub mod svg;
