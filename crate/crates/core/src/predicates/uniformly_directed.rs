use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

use super::{CutPredicate, FeasibleSet, LatticeLinear};

/// Cuts with no edge directed from the sink side to the source side.
///
/// Searched edge by edge as `head ∈ S ⟹ tail ∈ S`: a violating edge forbids
/// its tail and dual-forbids its head. Edges touching a terminal can never
/// point from the sink side into the source side, so only inner edges are
/// kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformlyDirected {
    universe: usize,
    inner_count: usize,
    edges: Vec<(usize, usize)>,
}

pub fn uniformly_directed<C: Capacity>(net: &FlowNetwork<C>) -> UniformlyDirected {
    let edges = net
        .edges()
        .iter()
        .filter(|e| !net.is_terminal_vertex(e.tail) && !net.is_terminal_vertex(e.head))
        .map(|e| (e.tail, e.head))
        .collect();
    UniformlyDirected {
        universe: net.vertex_count(),
        inner_count: net.inner_count(),
        edges,
    }
}

impl UniformlyDirected {
    fn backward_edges<'a>(&'a self, cut: &'a Cut) -> impl Iterator<Item = (usize, usize)> + 'a {
        self.edges
            .iter()
            .copied()
            .filter(move |&(u, v)| !cut.contains(u) && cut.contains(v))
    }
}

impl CutPredicate for UniformlyDirected {
    fn evaluate(&self, cut: &Cut) -> bool {
        self.backward_edges(cut).next().is_none()
    }
}

impl LatticeLinear for UniformlyDirected {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        FeasibleSet::Forbidden(VertexSet::from_ids(
            self.universe,
            self.backward_edges(cut).map(|(u, _)| u),
        ))
    }

    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        Some(FeasibleSet::Forbidden(VertexSet::from_ids(
            self.universe,
            self.backward_edges(cut).map(|(_, v)| v),
        )))
    }

    fn is_regular(&self) -> bool {
        true
    }

    fn transition_bound(&self) -> Option<usize> {
        Some(self.inner_count)
    }
}
