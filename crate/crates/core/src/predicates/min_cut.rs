//! The min-cut predicate, decided through a precomputed maximum flow.
//!
//! With a maximum flow `f`, a cut is minimum iff every edge from the source
//! side to the sink side is saturated and every edge from the sink side to
//! the source side carries zero flow. Equivalently, no residual arc leaves the
//! source side.

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::Result;
use crate::max_flow::Flow;
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

use super::{CutPredicate, FeasibleSet, LatticeLinear};

/// One scan over the edges: the tail of every sink-to-source edge with
/// positive flow and the head of every unsaturated source-to-sink edge.
///
/// The result is empty exactly when `cut` is a min-cut. When the sink itself
/// would be forbidden (an unsaturated edge into `t` leaves the source side)
/// no refinement can be a min-cut and `Infeasible` is returned.
pub fn min_cut_forbidden<C: Capacity>(net: &FlowNetwork<C>, flow: &Flow<C>, cut: &Cut) -> Result<FeasibleSet> {
    flow.check_against(net)?;
    net.check_cut(cut)?;
    let mut forbidden = VertexSet::new(net.vertex_count());
    for (i, e) in net.edges().iter().enumerate() {
        let tail_in_s = cut.in_source_side(net, e.tail);
        let head_in_s = cut.in_source_side(net, e.head);
        if !tail_in_s && head_in_s && flow.is_positive(i) {
            forbidden.insert(e.tail);
        } else if tail_in_s && !head_in_s && !flow.is_saturated(net, i) {
            if e.head == net.sink() {
                return Ok(FeasibleSet::Infeasible);
            }
            forbidden.insert(e.head);
        }
    }
    Ok(FeasibleSet::Forbidden(forbidden))
}

/// Dual of [`min_cut_forbidden`]: the head of every sink-to-source edge with
/// positive flow and the tail of every unsaturated source-to-sink edge.
/// `Infeasible` when the source would have to leave its side.
pub fn min_cut_dual_forbidden<C: Capacity>(net: &FlowNetwork<C>, flow: &Flow<C>, cut: &Cut) -> Result<FeasibleSet> {
    flow.check_against(net)?;
    net.check_cut(cut)?;
    let mut forbidden = VertexSet::new(net.vertex_count());
    for (i, e) in net.edges().iter().enumerate() {
        let tail_in_s = cut.in_source_side(net, e.tail);
        let head_in_s = cut.in_source_side(net, e.head);
        if !tail_in_s && head_in_s && flow.is_positive(i) {
            forbidden.insert(e.head);
        } else if tail_in_s && !head_in_s && !flow.is_saturated(net, i) {
            if e.tail == net.source() {
                return Ok(FeasibleSet::Infeasible);
            }
            forbidden.insert(e.tail);
        }
    }
    Ok(FeasibleSet::Forbidden(forbidden))
}

/// Every forbidden vertex of `cut`: the least min-cut above `cut` is the
/// residual closure of its source side, so the forbidden set is that closure
/// minus the current side. `Infeasible` when the sink is in the closure.
pub fn min_cut_forbidden_closure<C: Capacity>(net: &FlowNetwork<C>, flow: &Flow<C>, cut: &Cut) -> Result<FeasibleSet> {
    flow.check_against(net)?;
    net.check_cut(cut)?;
    Ok(closure_forbidden(net, flow, cut))
}

fn closure_forbidden<C: Capacity>(net: &FlowNetwork<C>, flow: &Flow<C>, cut: &Cut) -> FeasibleSet {
    let mut seeds = cut.s_side().clone();
    seeds.insert(net.source());
    let mut reach = flow.residual_reachable(net, &seeds);
    if reach.contains(net.sink()) {
        return FeasibleSet::Infeasible;
    }
    reach.difference_with(&seeds);
    FeasibleSet::Forbidden(reach)
}

fn dual_closure_forbidden<C: Capacity>(net: &FlowNetwork<C>, flow: &Flow<C>, cut: &Cut) -> FeasibleSet {
    let outside = VertexSet::from_ids(
        net.vertex_count(),
        (0..net.vertex_count()).filter(|&v| !cut.in_source_side(net, v)),
    );
    let mut leaving = flow.residual_coreachable(net, &outside);
    if leaving.contains(net.source()) {
        return FeasibleSet::Infeasible;
    }
    leaving.difference_with(&outside);
    FeasibleSet::Forbidden(leaving)
}

/// `B_MC` as a [`LatticeLinear`] predicate over a fixed maximum flow.
///
/// Its forbidden search returns the complete set of forbidden vertices (the
/// residual closure), so a single advancement reaches the least min-cut
/// above any cut.
#[derive(Debug, Clone, Copy)]
pub struct MinCutPredicate<'a, C> {
    net: &'a FlowNetwork<C>,
    flow: &'a Flow<C>,
}

impl<'a, C: Capacity> MinCutPredicate<'a, C> {
    /// Fails unless `flow` is a maximum flow of `net`.
    pub fn new(net: &'a FlowNetwork<C>, flow: &'a Flow<C>) -> Result<Self> {
        flow.check_against(net)?;
        Ok(Self { net, flow })
    }

    pub fn network(&self) -> &'a FlowNetwork<C> {
        self.net
    }

    pub fn flow(&self) -> &'a Flow<C> {
        self.flow
    }

    /// The single edge scan, for cuts over this network.
    pub fn edge_scan(&self, cut: &Cut) -> FeasibleSet {
        min_cut_forbidden(self.net, self.flow, cut).expect("cut over a different network")
    }
}

impl<C: Capacity> CutPredicate for MinCutPredicate<'_, C> {
    fn evaluate(&self, cut: &Cut) -> bool {
        self.edge_scan(cut).is_empty()
    }
}

impl<C: Capacity> LatticeLinear for MinCutPredicate<'_, C> {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        closure_forbidden(self.net, self.flow, cut)
    }

    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        Some(dual_closure_forbidden(self.net, self.flow, cut))
    }

    fn is_regular(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::max_flow::compute_max_flow;

    fn ids(f: &FeasibleSet) -> Vec<usize> {
        f.as_forbidden().expect("feasible").iter().collect()
    }

    // s=0 -> v1=1 (2), v1 -> v2=2 (1), v2 -> t=3 (2)
    fn path() -> FlowNetwork<u64> {
        FlowNetwork::new(4, 0, 3, [(0, 1, 2), (1, 2, 1), (2, 3, 2)]).unwrap()
    }

    // s=0 -> a=1 -> b=2 -> t=3, unit capacities
    fn chain() -> FlowNetwork<u64> {
        FlowNetwork::new(4, 0, 3, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn unsaturated_forward_edge_forbids_head() {
        let net = path();
        let flow = compute_max_flow(&net);
        let f = min_cut_forbidden(&net, &flow, &Cut::bottom(&net)).unwrap();
        assert_eq!(ids(&f), vec![1]);
        let f = min_cut_forbidden(&net, &flow, &Cut::from_vertices(&net, [1]).unwrap()).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn positive_backward_edge_forbids_tail() {
        let net = chain();
        let flow = compute_max_flow(&net);
        let cut = Cut::from_vertices(&net, [2]).unwrap();
        assert_eq!(ids(&min_cut_forbidden(&net, &flow, &cut).unwrap()), vec![1]);
        assert_eq!(ids(&min_cut_dual_forbidden(&net, &flow, &cut).unwrap()), vec![2]);
    }

    #[test]
    fn dual_forbidden_on_path() {
        let net = path();
        let flow = compute_max_flow(&net);
        let cut = Cut::from_vertices(&net, [1, 2]).unwrap();
        assert_eq!(ids(&min_cut_dual_forbidden(&net, &flow, &cut).unwrap()), vec![2]);
        let min = Cut::from_vertices(&net, [1]).unwrap();
        assert!(min_cut_dual_forbidden(&net, &flow, &min).unwrap().is_empty());
    }

    #[test]
    fn unsaturated_edge_into_sink_is_infeasible() {
        let net = path();
        let flow = compute_max_flow(&net);
        let cut = Cut::from_vertices(&net, [2]).unwrap();
        assert!(min_cut_forbidden(&net, &flow, &cut).unwrap().is_infeasible());
        assert!(min_cut_forbidden_closure(&net, &flow, &cut).unwrap().is_infeasible());
    }

    #[test]
    fn closure_reaches_least_min_cut_in_one_step() {
        // s -> a (2), a -> b (2), b -> c (1), c -> t (1): the edge scan only
        // sees a, the closure sees a and b.
        let net = FlowNetwork::<u64>::new(5, 0, 4, [(0, 1, 2), (1, 2, 2), (2, 3, 1), (3, 4, 1)]).unwrap();
        let flow = compute_max_flow(&net);
        let bottom = Cut::bottom(&net);
        assert_eq!(ids(&min_cut_forbidden(&net, &flow, &bottom).unwrap()), vec![1]);
        let all = min_cut_forbidden_closure(&net, &flow, &bottom).unwrap();
        assert_eq!(ids(&all), vec![1, 2]);
        let next = bottom.advanced(all.as_forbidden().unwrap());
        assert_eq!(net.cut_capacity(&next).unwrap(), flow.value());
    }

    #[test]
    fn predicate_dual_closure_reaches_greatest_min_cut_below() {
        let net = FlowNetwork::<u64>::new(5, 0, 4, [(0, 1, 1), (1, 2, 2), (2, 3, 2), (3, 4, 2)]).unwrap();
        let flow = compute_max_flow(&net);
        let p = MinCutPredicate::new(&net, &flow).unwrap();
        let top = Cut::top(&net);
        let dual = p.dual_forbidden(&top).unwrap();
        assert_eq!(ids(&dual), vec![1, 2, 3]);
    }

    #[test]
    fn rejects_non_maximum_flow() {
        let net = path();
        let zero = Flow::from_edge_flows(&net, vec![0, 0, 0]).unwrap();
        assert_eq!(
            min_cut_forbidden(&net, &zero, &Cut::bottom(&net)).unwrap_err(),
            Error::NotMaximumFlow
        );
        assert!(MinCutPredicate::new(&net, &zero).is_err());
    }
}
