//! Dominating sets, connected dominating sets and maximum-leaf spanning trees
//! of the hypercube Q_n.
//!
//! The crate builds perfect dominating sets from Hamming codes, turns
//! dominating sets into connected ones (star connection, doubling and
//! expansion), materializes the resulting spanning trees, and checks
//! everything against counting lower bounds and exact small-n solvers.

pub mod constructions;
pub mod cube;
pub mod domination;
pub mod error;
pub mod exact;
pub mod hamming;
pub mod io;
pub mod table;
pub mod tree;
mod union_find;

pub use constructions::{
    auto_construct, connect_stars, double_set, expand, expand_with_tree, hamming_cds_for_code_dim,
    star_forest, Construction, ConstructionReport, Method, Plan, StarConnection, StarForest,
};
pub use cube::{
    closed_neighborhood, gray_code_path, is_connected, neighbors, CubeEdge, Vertex, VertexSet,
    DEFAULT_NMAX, MAX_DIM,
};
pub use domination::{
    greedy_dominating, is_connected_dominating, is_dominating, lower_bounds, DominationBounds,
};
pub use error::{CubeError, Result};
pub use exact::{exact_gamma, exact_gamma_c, Budget, ExactOptions, ExactResult, Parameter, Status};
pub use hamming::{build_hamming, star_partition, HammingCode, StarPartition};
pub use tree::{max_leaf_bruteforce, tree_from_cds, verify_tree, SpanningTree, TreeReport};
pub use union_find::UnionFind;
