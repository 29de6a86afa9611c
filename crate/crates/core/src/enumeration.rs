//! Lists every min-cut of a regular slice exactly once by walking the ideals
//! of its irreducible poset.
//!
//! A node of the walk holds an ideal `K` (as the join of its members) and the
//! irreducibles `I` still allowed below it. Its children add a nonempty set
//! `L` of minimal elements of `I` to `K`, and drop both `L` and everything
//! above the minimal elements left out.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::Result;
use crate::irreducibles::{compute_irreducibles, IrreduciblePoset};
use crate::max_flow::Flow;
use crate::network::FlowNetwork;
use crate::predicates::LatticeLinear;
use crate::vertex_set::VertexSet;

/// Work counters. `set_ops` charges every whole-set operation with the
/// size of its universe.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub calls: u64,
    pub set_ops: u64,
    pub max_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration<B> {
    /// Cuts handed to the visitor.
    pub listed: usize,
    /// Set when the visitor stopped the walk.
    pub break_value: Option<B>,
    pub stats: EnumerationStats,
}

/// Enumerates the min-cuts satisfying the regular predicate `pred`, calling
/// `visitor` once per cut in a deterministic order. Stops after `limit`
/// cuts or when the visitor breaks. Nothing is listed when no min-cut
/// satisfies `pred`.
pub fn enumerate_min_cuts<C, P, B, F>(
    net: &FlowNetwork<C>,
    flow: &Flow<C>,
    pred: &P,
    limit: Option<usize>,
    visitor: F,
) -> Result<Enumeration<B>>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
    F: FnMut(&Cut) -> ControlFlow<B>,
{
    Ok(match compute_irreducibles(net, flow, pred)? {
        Some(poset) => enumerate_ideals(&poset, limit, visitor),
        None => Enumeration {
            listed: 0,
            break_value: None,
            stats: EnumerationStats::default(),
        },
    })
}

/// Collects the whole slice, exploring the top of the walk on the rayon
/// pool. The order matches [`enumerate_min_cuts`].
pub fn collect_min_cuts_parallel<C, P>(net: &FlowNetwork<C>, flow: &Flow<C>, pred: &P) -> Result<Vec<Cut>>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
{
    Ok(match compute_irreducibles(net, flow, pred)? {
        Some(poset) => {
            let walk = Walk::new(&poset);
            walk.collect_parallel(
                poset.bottom().s_side().clone(),
                VertexSet::from_ids(poset.len(), 0..poset.len()),
                0,
            )
        }
        None => Vec::new(),
    })
}

const PARALLEL_DEPTH: usize = 3;

/// Walks every ideal of `poset`, listing the join of each.
pub fn enumerate_ideals<B, F>(poset: &IrreduciblePoset, limit: Option<usize>, mut visitor: F) -> Enumeration<B>
where
    F: FnMut(&Cut) -> ControlFlow<B>,
{
    let walk = Walk::new(poset);
    let q = poset.len() as u64;
    let n = poset.bottom().s_side().universe() as u64;
    let mut out = Enumeration {
        listed: 0,
        break_value: None,
        stats: EnumerationStats::default(),
    };
    if limit == Some(0) {
        return out;
    }
    let mut stack: Vec<Frame> = Vec::new();
    let mut pending = Some((
        poset.bottom().s_side().clone(),
        VertexSet::from_ids(poset.len(), 0..poset.len()),
    ));

    loop {
        if let Some((join, avail)) = pending.take() {
            out.stats.calls += 1;
            out.listed += 1;
            if let ControlFlow::Break(b) = visitor(&Cut::from_set_unchecked(join.clone())) {
                out.break_value = Some(b);
                return out;
            }
            if limit.is_some_and(|l| out.listed >= l) {
                return out;
            }
            let minimal = walk.minimal(&avail);
            out.stats.set_ops += avail.len() as u64 * q + minimal.len() as u64 * q;
            if !minimal.is_empty() {
                stack.push(Frame {
                    join,
                    chosen: VertexSet::new(minimal.len()),
                    minimal,
                    avail,
                });
                out.stats.max_depth = out.stats.max_depth.max(stack.len());
            }
        }
        let Some(top) = stack.last_mut() else {
            return out;
        };
        if !top.advance() {
            stack.pop();
            continue;
        }
        let (join, avail, added, left_out) = walk.child(top);
        out.stats.set_ops += added as u64 * n + (left_out as u64 + 1) * q;
        pending = Some((join, avail));
    }
}

struct Frame {
    join: VertexSet,
    avail: VertexSet,
    minimal: Vec<usize>,
    // bits over `minimal`, counted up in binary
    chosen: VertexSet,
}

impl Frame {
    /// Steps to the next nonempty subset; false once all are done.
    fn advance(&mut self) -> bool {
        let k = self.minimal.len();
        match (0..k).find(|&i| !self.chosen.contains(i)) {
            Some(i) => {
                (0..i).for_each(|j| {
                    self.chosen.remove(j);
                });
                self.chosen.insert(i);
                true
            }
            None => false,
        }
    }
}

struct Walk<'a> {
    poset: &'a IrreduciblePoset,
    // down[i] holds every j with elements[j] <= elements[i]
    down: Vec<VertexSet>,
}

impl<'a> Walk<'a> {
    fn new(poset: &'a IrreduciblePoset) -> Self {
        let q = poset.len();
        let down = (0..q)
            .map(|i| VertexSet::from_ids(q, (0..=i).filter(|&j| poset.leq(j, i))))
            .collect();
        Self { poset, down }
    }

    fn minimal(&self, avail: &VertexSet) -> Vec<usize> {
        avail
            .iter()
            .filter(|&i| {
                let mut below = self.down[i].intersection(avail);
                below.remove(i);
                below.is_empty()
            })
            .collect()
    }

    /// Join and available set of the child selected by `frame.chosen`,
    /// plus the sizes of `L` and `X \ L`.
    fn child(&self, frame: &Frame) -> (VertexSet, VertexSet, usize, usize) {
        let mut join = frame.join.clone();
        let mut avail = frame.avail.clone();
        let (mut added, mut left_out) = (0, 0);
        for (b, &x) in frame.minimal.iter().enumerate() {
            if frame.chosen.contains(b) {
                join.union_with(self.poset.elements()[x].s_side());
                avail.remove(x);
                added += 1;
            } else {
                avail.difference_with(self.poset.principal_filter(x));
                left_out += 1;
            }
        }
        (join, avail, added, left_out)
    }

    fn collect_parallel(&self, join: VertexSet, avail: VertexSet, depth: usize) -> Vec<Cut> {
        let minimal = self.minimal(&avail);
        let mut frame = Frame {
            join: join.clone(),
            chosen: VertexSet::new(minimal.len()),
            minimal,
            avail,
        };
        let mut children = Vec::new();
        while frame.advance() {
            let (j, a, _, _) = self.child(&frame);
            children.push((j, a));
        }
        let mut out = vec![Cut::from_set_unchecked(join)];
        if depth < PARALLEL_DEPTH {
            let parts: Vec<Vec<Cut>> = children
                .into_par_iter()
                .map(|(j, a)| self.collect_parallel(j, a, depth + 1))
                .collect();
            out.extend(parts.into_iter().flatten());
        } else {
            for (j, a) in children {
                out.extend(self.collect_parallel(j, a, depth + 1));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::max_flow::compute_max_flow;
    use crate::predicates::{forbid_source_side, require_source_side, Always, Conjunction};

    fn star(n: usize) -> FlowNetwork<u64> {
        FlowNetwork::new(n + 2, 0, n + 1, (1..=n).flat_map(|u| [(0, u, 1), (u, n + 1, 1)])).unwrap()
    }

    fn listed<P: LatticeLinear>(g: &FlowNetwork<u64>, p: &P) -> Vec<Vec<usize>> {
        let f = compute_max_flow(g);
        let mut out = Vec::new();
        let e = enumerate_min_cuts(g, &f, p, None, |c| {
            out.push(c.vertices());
            ControlFlow::<()>::Continue(())
        })
        .unwrap();
        assert_eq!(e.listed, out.len());
        out
    }

    #[test]
    fn single_edge_lists_one() {
        let g = FlowNetwork::<u64>::new(2, 0, 1, [(0, 1, 1)]).unwrap();
        assert_eq!(listed(&g, &Always), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn antichain_of_two_lists_four() {
        let g = star(2);
        assert_eq!(listed(&g, &Always), vec![vec![], vec![1], vec![2], vec![1, 2]]);
    }

    #[test]
    fn chain_lists_three() {
        let g = FlowNetwork::<u64>::new(4, 0, 3, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(listed(&g, &Always), vec![vec![], vec![1], vec![1, 2]]);
    }

    #[test]
    fn star_of_four_lists_every_subset_once() {
        let g = star(4);
        let mut cuts = listed(&g, &Always);
        assert_eq!(cuts.len(), 16);
        cuts.sort();
        cuts.dedup();
        assert_eq!(cuts.len(), 16);
    }

    #[test]
    fn infeasible_lists_nothing() {
        let g = star(2);
        let c = Conjunction::new(vec![
            Box::new(require_source_side(&g, 1).unwrap()),
            Box::new(forbid_source_side(&g, 1).unwrap()),
        ]);
        assert!(listed(&g, &c).is_empty());
    }

    #[test]
    fn limit_and_break() {
        let g = star(3);
        let f = compute_max_flow(&g);
        let e = enumerate_min_cuts(&g, &f, &Always, Some(3), |_| ControlFlow::<()>::Continue(())).unwrap();
        assert_eq!(e.listed, 3);
        let e = enumerate_min_cuts(&g, &f, &Always, None, |c| {
            if c.len() == 2 {
                ControlFlow::Break(c.vertices())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(e.break_value, Some(vec![1, 2]));
        let e = enumerate_min_cuts(&g, &f, &Always, Some(0), |_| ControlFlow::<()>::Continue(())).unwrap();
        assert_eq!(e.listed, 0);
    }

    #[test]
    fn parallel_collection_matches_sequential_order() {
        let g = star(5);
        let f = compute_max_flow(&g);
        let seq = listed(&g, &Always);
        let par: Vec<Vec<usize>> = collect_min_cuts_parallel(&g, &f, &Always)
            .unwrap()
            .iter()
            .map(Cut::vertices)
            .collect();
        assert_eq!(seq, par);
    }
}
