//! Enumeration of maximal subgraphs by proximity search.
//!
//! A [`Problem`] describes one family of maximal subgraphs through a
//! membership test, a completion routine and a neighbor function on
//! maximal solutions. [`enumerate_exp`] walks the resulting solution graph
//! with a visited-set dictionary. Problems that also implement
//! [`PspaceProblem`] can be listed by [`pspace::enumerate_pspace`] without
//! storing visited solutions.
//!
//! ```
//! use proxsearch::{collect_exp, problems::trees::Trees, Graph};
//!
//! let k4 = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
//! let (sols, counters) = collect_exp(&Trees::trees(k4).unwrap());
//! assert_eq!(sols.len(), 6);
//! assert_eq!(counters.neighbors_calls, 6);
//! ```

pub mod dict;
pub mod engine;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod orders;
pub mod problems;
pub mod pspace;
pub mod registry;
pub mod unionfind;

pub use dict::SolutionDict;
pub use engine::{collect_exp, enumerate_exp, enumerate_exp_with, Counters, ElementKind, OutputOrder, Problem, Solution};
pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use pspace::{OrderKey, PspaceProblem};
pub use unionfind::DisjointSets;
