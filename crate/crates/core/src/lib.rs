//! Randomized compression of Vertex Cover Above Maximum Matching into
//! Rank Vertex Cover.
//!
//! The pipeline takes a graph `G` and an integer `k`, asks whether `G` has a
//! vertex cover of size at most `mu(G) + k` (`mu` = maximum matching size),
//! and emits an equivalent *rank vertex cover* instance: a graph paired with
//! a linear matroid on its vertices plus a rank budget. Each reduction step
//! moves a vertex's matroid column into general position on the flat spanned
//! by its neighbours (a Schwartz-Zippel style random combination) and then
//! contracts it, shrinking the matroid rank by two while the answer is
//! preserved with high probability.
//!
//! Module map:
//! - [`exact_linalg`]: exact matrices over Q and GF(q), primality testing
//! - [`matroid`]: column-represented linear matroids, deletion/contraction
//! - [`graph`]: simple graphs, blossom matching, vertex-cover strategies,
//!   DIMACS parsing, G(n,p) generation
//! - [`instance`]: graph/matroid pairs, lifting, brute-force oracles, the
//!   RVC1 text format
//! - [`rank_reduction`]: the randomized vertex rule, batching, modular
//!   bit-size control
//! - [`graph_reduction`]: symmetric-square edge reduction and isolated
//!   vertex cleanup
//! - [`pipeline`]: end-to-end compression with reports
//! - [`cli`]: the `rvc` command-line tool

pub mod cli;
pub mod error;
pub mod exact_linalg;
pub mod graph;
pub mod graph_reduction;
pub mod instance;
pub mod matroid;
pub mod pipeline;
pub mod rank_reduction;

pub use error::{Error, Result};
