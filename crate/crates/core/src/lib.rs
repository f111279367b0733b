//! Degree-based graph entropy toolkit.
//!
//! The first degree-based entropy of a graph with degree sequence `d` and
//! size `m` is `I(G) = -Σ (d_i / 2m) ln(d_i / 2m)`. Minimising it is the same
//! as maximising the potential `h_c(G) = Σ (d_i + c) ln(d_i + c)` at `c = 0`,
//! and the universal-vertex reduction turns the connected `(n, m)` problem
//! into a size-only problem for `h_1`.
//!
//! This crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`numerics`]: the potential and its forward differences, exact
//!   [`LogCombination`] values for integer degrees, and exact rational
//!   polynomials with shift-based positivity certificates.
//! * [`degseq`]: partitions, Erdős–Gallai, majorization, Havel–Hakimi.
//! * [`graph`]: labelled simple graphs, universal-vertex join, threshold
//!   recognition and the explicit extremal `(n, m)` constructions.
//! * [`search`]: exhaustive sequence-level searches used as oracles.
//! * [`verify`]: numeric and certified checks of the inequalities behind
//!   the extremal characterisation.
#![no_std]

extern crate alloc;

pub mod degseq;
mod error;
pub mod graph;
pub mod numerics;
pub mod search;
pub mod verify;

pub use degseq::DegreeSequence;
pub use error::Error;
pub use graph::LabeledGraph;
pub use numerics::{LogCombination, RationalPolynomial};

pub type Result<T> = core::result::Result<T, Error>;
