//! Seeded verification suites and evaluation plumbing for `cob1`.
//!
//! The library half of the harness: deterministic generators, the suite
//! registry, the (optionally parallel) trial runner, and JSON reports.

pub mod eval;
pub mod gen;
pub mod report;
pub mod runner;
pub mod suites;

pub use report::{trial_rng, Failure, Report};
pub use runner::{run_suite, run_suite_sequential};
pub use suites::{default_trials, Params, SUITE_NAMES};
