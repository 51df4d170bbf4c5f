//! Biclique partitions of split graphs.
//!
//! For a split graph `G` the biclique partition number is
//! `bp(G) = mc(G^c) − 1`, the number of maximal cliques of the complement
//! minus one. This crate recognises and classifies split graphs, evaluates
//! that closed form, builds optimal star partitions, converts between
//! partitions and squashed-cube addressings, and checks all of it against an
//! exhaustive branch-and-bound solver.

pub mod biclique;
pub mod cliques;
pub mod cube;
pub mod error;
pub mod generator;
pub mod graph;
pub mod io;
pub mod solver;
pub mod split;

pub use biclique::{bp_split, verify_partition, Biclique, BicliquePartition, SplitBp, Violation};
pub use cube::{AddressString, Addressing, Symbol};
pub use error::{CubeError, GenError, GraphError, PartitionError, SolverError, SplitError};
pub use generator::{generate, GenKind, GenSpec, Generated, SplitMix64};
pub use graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph, Induced};
pub use solver::{bp_exact, check_theorem, Budget, SolverConfig, SolverResult, TheoremReport};
pub use split::{classify, recognize_split, SplitClass, SplitPartition};
