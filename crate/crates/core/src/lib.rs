//! Exact-arithmetic toolkit for tree-degenerate bipartite graphs: common
//! neighborhoods and r-norm densities, block representations and their
//! realizations, exact homomorphism counting (backtracking and a block-tree
//! dynamic program), recursive i-good sequence classification with verified
//! inequality checks, and a staged random embedder with Monte Carlo
//! estimation.
//!
//! All inequality verdicts are decided in exact big-integer/rational
//! arithmetic; floating point appears only in reports and in the few
//! constants whose definitions involve non-integer exponents (those are
//! evaluated in log2 space with documented accuracy).
//!
//! The hot enumeration kernels are data-parallel via rayon when the
//! `parallel` feature (default) is enabled; every parallel entry point has a
//! `_serial` twin used for determinism cross-checks and benchmarks.

pub mod blocks;
pub mod embedder;
pub mod error;
pub mod exact;
pub mod goodness;
pub mod graph;
pub mod hom;
pub mod report;

mod par;

pub use blocks::{BlockRepresentation, MainTheoremConstants};
pub use error::{BlockError, Error, Result};
pub use goodness::{GoodnessParams, GoodnessTable};
pub use graph::{Graph, GraphKind, VertexSequence, VertexSet};
pub use hom::HomCounts;
