//! Locally connected spanning trees on strongly chordal graphs and proper
//! circular-arc graphs.
//!
//! A locally connected spanning tree of a graph G is a spanning tree T such
//! that for every vertex v, the neighbors of v in T induce a connected
//! subgraph of G. This crate decides whether one exists and constructs it:
//!
//! - for strongly chordal graphs given a strong elimination order, in linear
//!   time ([`lcst_strongly_chordal`]);
//! - for proper circular-arc graphs given an intersection model, in linear
//!   time ([`lcst_proper_circular_arc`]);
//!
//! and backs both with definitional verifiers, exhaustive oracles, and
//! seeded instance generators for testing at small scale.

mod bits;
pub mod arcs;
pub mod elimination;
mod error;
pub mod gen;
pub mod graph;
pub mod oracle;

pub use arcs::{
    densities, head_order, intersection_graph, lcst_proper_circular_arc,
    lcst_proper_circular_arc_validated, reduce_to_interval, validate_arc_model, CircularArcModel,
    ModelReport, Violation, ViolationCode,
};
pub use elimination::{
    chordal_k_connected, compute_closest_neighbors, ell_bruteforce, find_seo_naive,
    is_perfect_elimination_order, is_strong_elimination_order, lcst_strongly_chordal,
    lcst_strongly_chordal_validated, ClosestNeighborTable, VertexOrder,
};
pub use error::{Error, Result};
pub use gen::{
    arc_model_from_reach, banded_proper_model, banded_strongly_chordal, gen_interval_graph,
    gen_proper_circular_arc_model, gen_strongly_chordal, GenConfig,
};
pub use graph::{
    check_locally_connected, is_locally_connected_spanning_tree, Graph, LcstFailure, NoReason,
    SpanningTree, TreeOutcome,
};
pub use oracle::{
    enumerate_spanning_trees, kirchhoff_tree_count, lcst_bruteforce, lcst_bruteforce_bounded,
    min_vertex_cut_bounded, min_vertex_cut_bruteforce, visit_spanning_trees,
    DEFAULT_ORACLE_BOUND,
};

/// Whether a solver should validate its promised preconditions or trust the
/// caller. Trusting keeps the linear-time contract; validation adds the
/// quadratic definitional checks first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Trust,
    Validate,
}

/// Top-level driver for the strongly chordal solver. Handles the small-graph
/// conventions the core algorithm excludes: a single vertex has the empty
/// tree as its locally connected spanning tree, and two adjacent vertices
/// have their single edge.
pub fn solve_strongly_chordal(
    g: &Graph,
    order: &VertexOrder,
    validation: Validation,
) -> Result<TreeOutcome> {
    if order.len() != g.n() {
        return Err(Error::OrderLengthMismatch {
            order_len: order.len(),
            n: g.n(),
        });
    }
    match g.n() {
        0 => Err(Error::EmptyGraph),
        1 => Ok(TreeOutcome::Tree(SpanningTree::new(1, vec![]))),
        2 => Ok(if g.has_edge(0, 1) {
            TreeOutcome::Tree(SpanningTree::new(2, vec![(0, 1)]))
        } else {
            TreeOutcome::no(NoReason::NotBiconnected, vec![0, 1])
        }),
        _ => match validation {
            Validation::Trust => Ok(lcst_strongly_chordal(g, order)),
            Validation::Validate => lcst_strongly_chordal_validated(g, order),
        },
    }
}

/// Top-level driver for the proper circular-arc solver, with the same
/// small-model conventions as [`solve_strongly_chordal`].
pub fn solve_proper_circular_arc(
    m: &CircularArcModel,
    validation: Validation,
) -> Result<TreeOutcome> {
    match m.n() {
        0 => Err(Error::EmptyGraph),
        1 => {
            arcs::check_basic(m)?;
            Ok(TreeOutcome::Tree(SpanningTree::new(1, vec![])))
        }
        2 => {
            arcs::check_basic(m)?;
            Ok(if m.arcs_overlap(0, 1) {
                TreeOutcome::Tree(SpanningTree::new(2, vec![(0, 1)]))
            } else {
                TreeOutcome::no(NoReason::NotBiconnected, vec![0, 1])
            })
        }
        _ => match validation {
            Validation::Trust => lcst_proper_circular_arc(m),
            Validation::Validate => lcst_proper_circular_arc_validated(m),
        },
    }
}
