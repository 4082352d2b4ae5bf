//! Asymmetric information geometry on finite sample spaces.
//!
//! The library works with finite positive measures and random variables put
//! in duality by the expectation pairing `<x,y> = E_y{x}`. On top of that
//! pairing it provides:
//!
//! * [`measures`] — sample spaces, measures, random variables, file I/O;
//! * [`bregman`] — the KL divergence and its dual, generalized Bregman
//!   distances for non-differentiable convex integrands, the law of cosines
//!   and cumulant generating functions;
//! * [`polar`] — gauge/support/polar calculus on V- and H-polytopes with the
//!   absorbing/bounded/balanced predicates;
//! * [`asymnorm`] — asymmetric norms and quasimetrics carved out of KL
//!   sublevel sets, Luxemburg norms of the four symmetrized variants, and
//!   separation (T0/T1/T2) reports;
//! * [`expfam`] — exponential-family tilting and divergence-constrained
//!   optimization, including the St. Petersburg lottery and
//!   mutual-information-constrained channels;
//! * [`verify`] — seeded property suites for every invariant the library
//!   promises, runnable from the CLI.
//!
//! Batch workloads (property suites, boundary sampling, acceptance sweeps)
//! run on rayon when the `parallel` feature is enabled (the default) and
//! fall back to plain iterators otherwise. Results are identical either way:
//! every trial derives its RNG stream from the trial index.

pub mod asymnorm;
pub mod bregman;
pub mod config;
pub mod error;
pub mod expfam;
pub mod fmt;
pub mod measures;
pub mod par;
pub mod polar;
pub mod quadrature;
pub mod rootfind;
pub mod sampling;
pub mod simplex;
pub mod verify;

pub use config::SolverConfig;
pub use error::{Error, Result};
pub use measures::{Measure, ProbabilityMeasure, RandomVariable, SampleSpace};
