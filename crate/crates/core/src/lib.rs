//! Exact computation of higher-rank stable pair partition functions of K3
//! surfaces and coefficient-exact verification of the identities they
//! satisfy.
//!
//! Layers, bottom up: [`rings`] (exact scalars), [`series`] (truncated
//! Laurent series over any of them), [`ucomb`] (u-binomial calculus and the
//! matrix families), [`theta`] (theta-function kernels), [`k3`] (the
//! partition functions themselves), [`modularity`] (v-expansions and
//! quasimodular fitting), [`verify`] (named identity suites).

pub mod error;
pub mod k3;
pub mod modularity;
pub mod rings;
pub mod series;
pub mod theta;
pub mod ucomb;
pub mod verify;

#[doc(hidden)]
pub mod cli;

pub use error::{Error, Location, Result};
