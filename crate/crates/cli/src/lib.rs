//! Command-line front end over the `equimatch` library: single
//! coefficients, full class expansions, polytope lattice points, and
//! the verification suites, rendered as plain text, JSON, or LaTeX.

pub mod args;
pub mod output;
pub mod run;
