//! Exact enumeration of Motzkin paths (plain and skew) by their number of
//! peaks (`UD`) and valleys (`DU`).
//!
//! The crate has four layers that check each other:
//!
//! - [`paths`]: path words, classification, pattern statistics, and the
//!   bijection between cornerless excursions and bargraphs.
//! - [`oracle`]: brute-force enumeration of paths and bargraphs, used as
//!   ground truth.
//! - [`automata`]: the layered recognizing automata and an exact dynamic
//!   program over them.
//! - [`series`]: truncated power series over `Q[u, σ, τ]`, and the kernel
//!   method that produces the generating functions in closed form.
//!
//! Throughout, `τ` marks an occurrence of `UD` (a peak) and `σ` marks an
//! occurrence of `DU` (a valley).
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod automata;
pub mod error;
pub mod oracle;
pub mod paths;
pub mod series;

pub use automata::{build_automaton, dp_count, dp_series, run, AutomatonSpec, Layer, State};
pub use error::{OracleError, PathError, SeriesError};
pub use oracle::{count_table, enumerate, enumerate_bargraphs, CountKey, CountTable};
pub use paths::{
    classify, elevate, from_bargraph, pattern_stats, to_bargraph, Bargraph, PathClass, PathWord,
    PatternStats, Step, Variant,
};
pub use series::kernel::{
    boundary_values, closed_form, kernel_r2, kernel_w, BoundaryValues, GeneratingFunctions, Kernel,
};
pub use series::{rat, Assignment, Monomial, Poly, Rat, Series};
