//! Exact-arithmetic toolkit for graph addressings.
//!
//! An addressing assigns every vertex of a connected graph a word over
//! `{0, a, b}` so that the graph distance between two vertices equals the
//! number of positions where one word holds `a` and the other holds `b`.
//! The minimum word length equals the biclique partition number of the
//! distance multigraph, and is bounded below by the inertia of the distance
//! matrix.
//!
//! * [`graph`]: graphs, named families, Cartesian products, distances.
//! * [`linalg`]: exact inertia, diamond products, closed-form spectra, bounds.
//! * [`addressing`]: addressings, bicliques, verification and constructions.
//! * [`search`]: exact minimum biclique partition by branch and bound.
//! * [`cli`]: the `gaddr` command-line front end.

pub mod addressing;
pub mod cli;
mod error;
pub mod graph;
pub mod linalg;
pub mod search;

pub use addressing::{Addressing, Biclique, Symbol, Verification};
pub use error::{Error, Result};
pub use graph::{Family, Graph, Multigraph};
pub use linalg::{Inertia, IntSymMatrix, Rational, SpectrumTable};
pub use search::{SearchConfig, SearchResult, SearchStatus};
