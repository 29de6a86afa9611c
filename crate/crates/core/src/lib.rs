//! Minimum `(s,t)`-cuts under lattice-linear constraints.
//!
//! Cuts of a flow network, ordered by inclusion of their source sides, form
//! a distributive lattice and the minimum cuts form a sublattice. This crate
//! finds the least min-cut satisfying a lattice-linear predicate, computes
//! the join-irreducible elements of a regular slice, enumerates every member
//! of that slice once, and searches a slice for cuts satisfying an arbitrary
//! predicate.

pub mod capacity;
pub mod cut;
pub mod dimacs;
pub mod enumeration;
pub mod error;
pub mod irreducibles;
pub mod llp;
pub mod max_flow;
pub mod network;
pub mod oracle;
pub mod predicate_file;
pub mod predicates;
pub mod slicing;
pub mod vertex_set;

pub use capacity::Capacity;
pub use cut::Cut;
pub use enumeration::{collect_min_cuts_parallel, enumerate_ideals, enumerate_min_cuts, Enumeration, EnumerationStats};
pub use error::{Error, Result};
pub use irreducibles::{compute_irreducibles, is_join_irreducible, IrreduciblePoset};
pub use llp::{least_sat_min_cut, least_sat_min_cut_from, solve_with, Advancement, Outcome, SolveOptions, SolveTrace};
pub use max_flow::{compute_max_flow, Flow};
pub use network::{Edge, FlowNetwork, Normalized, RawNetwork};
pub use slicing::{slice_count, slice_search, slice_search_any, SliceResult};
pub use vertex_set::VertexSet;

/// Network with 64-bit capacities.
pub type Network = FlowNetwork<u64>;
/// Maximum flow over a [`Network`].
pub type MaxFlow = Flow<u64>;
