//! Verification, decision and construction of (i,j)-step competitive
//! orientations of digraphs, with an exhaustive orientation oracle.
//!
//! Two vertices `u`, `v` of a digraph *(i,j)-step compete* when some third
//! vertex is reachable from `u` avoiding `v` within `i` steps and from `v`
//! avoiding `u` within `j` steps (or with the bounds swapped). A digraph is
//! competitive when every pair competes.

mod bits;
pub mod competition;
pub mod digraph;
pub mod error;
pub mod io;
pub mod necessary;
pub mod oracle;
pub mod partition;
pub mod synthesis;

pub use competition::{
    competes, competition_graph, ij_compete, is_competitive, Clause as WitnessClause, CompeteWitness, Competitiveness,
    StepPair,
};
pub use digraph::{Digraph, DistanceMap, Graph};
pub use error::{Error, Result};
pub use necessary::{check_necessary, reduce_degree_two, Condition, Counterexample, NecessaryReport};
pub use partition::{PartitionSpec, PartitionedDigraph};
pub use synthesis::{clone_vertex, construct, decide, grow, seed, Clause, Construction, SeedId, Verdict};
