//! Detection of boroughs and maximal 2-clubs in simple undirected graphs.
//!
//! A 2-club is a maximal set of nodes whose induced subgraph has diameter
//! at most two, with distances measured inside the subgraph. Every 2-club
//! is one of three types: a coterie (some member is adjacent to all the
//! others), a social circle (no such member, but some adjacent pair
//! jointly covers the club), or a hamlet (neither).
//!
//! Short chordless cycles (lengths three to five) chain together wherever
//! they share an edge; a maximal chained family is a borough. Edges on no
//! such cycle form the outback. Boroughs are where all the interesting
//! 2-club structure lives, so enumeration normally runs once per borough
//! instead of over the whole graph.
//!
//! The crate exposes the pieces individually (graph construction, cycle
//! search, borough detection, club enumeration and classification,
//! reports) plus a [`pipeline`] that runs everything and bundles the
//! results for serialization. The `examples/` directory has a runnable
//! walkthrough per capability.

pub mod borough;
pub mod cycles;
pub mod error;
pub mod export;
pub mod graph;
pub mod io;
pub mod pipeline;
pub mod report;
pub mod two_club;

pub use borough::{
    detect_boroughs, outback, touch_points, Borough, OutbackReport, TouchPoints,
};
pub use cycles::{basic_edges, enumerate_basic_cycles, Cycle, DEFAULT_CYCLE_CAP};
pub use error::{Error, Result};
pub use graph::{build_graph, Edge, Graph, NodeId, UNREACHABLE};
pub use io::{
    parse_bipartite, parse_bipartite_path, parse_edge_list, parse_edge_list_path,
    project_bipartite,
};
pub use pipeline::{analyze, run_pipeline, Analysis, AnalysisBundle, Config, ScopeSelection};
pub use report::{co_membership, membership, render_distribution, type_distribution};
pub use two_club::{
    brute_force_two_clubs, classify, enumerate_two_clubs, is_two_club, ClubType,
    EnumerationConfig, Scope, SeedOrder, TwoClub, DEFAULT_BRANCH_BUDGET,
};
