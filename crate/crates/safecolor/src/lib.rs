//! Safe 3-colorings of graphs.
//!
//! A coloring of a graph with colors `{1, 2, 3}` is *safe* when no two
//! vertices jointly hold all three colors and, after removing any two
//! vertices, some connected component still carries all three. The library
//! provides:
//!
//! - graph ingestion (edge-list and DIMACS formats), component
//!   decomposition, vertex removal, and test-corpus generators
//!   ([`graph`], [`formats`], [`generators`]);
//! - the safety verifier for general `(a, k)` with the pair-removal sweep
//!   as the `a = 2`, `k = 3` case ([`verify`]);
//! - detection of independent connected triplets through neighborhood
//!   cardinality tests ([`triplets`]);
//! - the structural decision procedure for minimum-degree-3 graphs, witness
//!   construction, the double-windmill recognizer, and an exhaustive oracle
//!   for small graphs ([`decide`]).

pub mod coloring;
pub mod decide;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod triplets;
pub mod verify;

pub use coloring::{Coloring, ColoringError};
pub use decide::{
    construct_safe_3_coloring, decide_safe_3, decide_safe_3_with, oracle_safe_3,
    rainbow_triplet_coloring, recognize_double_windmill, DecideOptions, Decision, OracleError,
    Reason, Verdict, DEFAULT_ORACLE_LIMIT,
};
pub use formats::{
    parse_coloring, parse_dimacs, parse_edge_list, serialize_coloring, serialize_dimacs,
    serialize_edge_list, ParseError,
};
pub use generators::{gen_double_windmill, gen_random_min_deg3, GenError};
pub use graph::{ComponentPartition, Graph, GraphError, VertexIdMap, VertexSet, WindmillShape};
pub use triplets::{
    find_three_independent_triplets, find_two_independent_triplets, neighborhood_profile,
    three_centers_test, two_centers_test, IndependentTriplets, NeighborhoodProfile, Triplet,
    TripletError,
};
pub use verify::{component_color_sets, verify_safe, VerifyError, VerifyResult, ViolatedCondition};
