//! Universal cycles and graph universal cycles for combinatorial families.
//!
//! A universal cycle lists every member of a family through the fixed-length
//! windows of one cyclic string; a graph universal cycle does the same with
//! the induced, relabeled windows of one cyclic labeled graph. This crate
//! builds such cycles for k-subsets, k-multisets, permutations, involutions,
//! and set partitions of [n], and independently verifies the covering
//! property of any host graph or cyclic string.
//!
//! The pieces:
//! - [`graph`]: labeled (multi)graphs, cyclic hosts, window extraction
//! - [`euler`]: payload-carrying arc digraphs and deterministic Eulerian
//!   circuits
//! - [`families`]: the five families with encode/decode to window graphs
//! - [`strings`]: weight-range word cycles and a multi-mode string verifier
//! - [`builder`]: per-family host constructions
//! - [`verifier`]: builder-independent coverage checking
//! - [`format`]: the GUC v1 text format

pub mod builder;
pub mod counting;
pub mod error;
pub mod euler;
pub mod families;
pub mod format;
pub mod graph;
pub mod report;
pub mod strings;
pub mod verifier;

pub use builder::{build_arc_digraph, build_gucycle, host_from_window_sequence, WindowSequence};
pub use error::{BalanceOffender, Error, Result};
pub use euler::ArcDigraph;
pub use families::{
    decode, enumerate, Family, FamilyObject, FamilyParams, Involution, Multiset, Permutation,
    SetPartition, Subset,
};
pub use format::{parse, serialize};
pub use graph::{HostGraph, LabeledGraph, LabeledMultigraph, WindowGraph};
pub use report::VerificationReport;
pub use strings::{build_weight_range, verify_string, CyclicWord, DecodeMode};
pub use verifier::{verify, verify_file, verify_file_jobs, verify_jobs};
