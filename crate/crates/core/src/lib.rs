//! Edge partitions and covers of graphs by comparability subgraphs.

pub mod budget;
pub mod cliques;
pub mod comparability;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod partition;
pub mod rng;
pub mod shift;
pub mod solver;
pub mod subtree;

pub use budget::{Budget, Timeout};
pub use comparability::{
    find_transitive_orientation, is_comparability, verify_partition, verify_transitive_orientation, EdgePartition,
    Mode, Orientation, PartitionReport,
};
pub use error::{Error, Result};
pub use generators::{Interval, IntervalSystem, Rational, SubtreeFamily};
pub use graph::{make_graph, Bipartition, EdgeId, Graph, Side, Vertex};
pub use solver::{Decision, Exact, GreaterThanTwo};
