//! Exhaustive reference implementations over all `2^n` cuts of small
//! networks, used as ground truth by the tests.

mod fixtures;
mod flows;
mod random;

pub use fixtures::{
    all_fixtures, blocks, chain, seven_vertex, single_edge, star, transition_chain, unit_path, Expected, Fixture,
};
pub use flows::count_integral_max_flows;
pub use random::{random_general_expr, random_implicational, random_layered, LayeredParams};

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::irreducibles::is_join_irreducible;
use crate::network::FlowNetwork;
use crate::predicates::{CutPredicate, FeasibleSet, LatticeLinear};
use crate::vertex_set::VertexSet;

/// Largest number of non-terminals the exhaustive scans accept.
pub const MAX_INNER: usize = 16;

/// Every cut of `net`, in binary counting order over the non-terminals.
pub fn all_cuts<C: Capacity>(net: &FlowNetwork<C>) -> Result<Vec<Cut>> {
    let inner: Vec<usize> = net.inner_vertices().collect();
    if inner.len() > MAX_INNER {
        return Err(Error::OracleBudget {
            found: inner.len(),
            limit: MAX_INNER,
        });
    }
    Ok((0u32..1 << inner.len())
        .map(|m| {
            let s = VertexSet::from_ids(
                net.vertex_count(),
                inner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &v)| v),
            );
            Cut::from_set_unchecked(s)
        })
        .collect())
}

/// Capacity by a double loop over vertex pairs, independent of the edge
/// scan in [`FlowNetwork::cut_capacity`].
pub fn naive_cut_capacity<C: Capacity>(net: &FlowNetwork<C>, cut: &Cut) -> C {
    let mut cap = vec![vec![C::zero(); net.vertex_count()]; net.vertex_count()];
    for e in net.edges() {
        cap[e.tail][e.head] = cap[e.tail][e.head] + e.capacity;
    }
    let mut total = C::zero();
    for (u, row) in cap.iter().enumerate() {
        for (v, &c) in row.iter().enumerate() {
            if cut.in_source_side(net, u) && !cut.in_source_side(net, v) {
                total = total + c;
            }
        }
    }
    total
}

/// The minimum cut capacity over all cuts.
pub fn min_cut_value<C: Capacity>(net: &FlowNetwork<C>) -> Result<C> {
    Ok(all_cuts(net)?
        .iter()
        .map(|c| naive_cut_capacity(net, c))
        .min()
        .expect("at least one cut"))
}

/// All cuts of minimum capacity.
pub fn all_min_cuts<C: Capacity>(net: &FlowNetwork<C>) -> Result<Vec<Cut>> {
    let cuts = all_cuts(net)?;
    let caps: Vec<C> = cuts.iter().map(|c| naive_cut_capacity(net, c)).collect();
    let best = *caps.iter().min().expect("at least one cut");
    Ok(cuts
        .into_iter()
        .zip(caps)
        .filter(|(_, c)| *c == best)
        .map(|(cut, _)| cut)
        .collect())
}

pub fn filter_cuts<P: CutPredicate + ?Sized>(cuts: &[Cut], pred: &P) -> Vec<Cut> {
    cuts.iter().filter(|c| pred.evaluate(c)).cloned().collect()
}

/// Members of `cuts` that are not the join of two strictly smaller members
/// and not the least member.
pub fn oracle_irreducibles(cuts: &[Cut]) -> Vec<Cut> {
    cuts.iter().filter(|c| is_join_irreducible(c, cuts)).cloned().collect()
}

/// Whether `cuts` is closed under pairwise meet and join.
pub fn sublattice_closed(cuts: &[Cut]) -> bool {
    let set: std::collections::HashSet<&VertexSet> = cuts.iter().map(Cut::s_side).collect();
    cuts.iter().all(|a| {
        cuts.iter()
            .all(|b| set.contains(&a.s_side().union(b.s_side())) && set.contains(&a.s_side().intersection(b.s_side())))
    })
}

/// Whether `cuts` is closed under pairwise meet.
pub fn meet_closed(cuts: &[Cut]) -> bool {
    let set: std::collections::HashSet<&VertexSet> = cuts.iter().map(Cut::s_side).collect();
    cuts.iter()
        .all(|a| cuts.iter().all(|b| set.contains(&a.s_side().intersection(b.s_side()))))
}

/// The member below every other member, if any.
pub fn least_element(cuts: &[Cut]) -> Option<Cut> {
    cuts.iter().find(|c| cuts.iter().all(|d| c.leq(d))).cloned()
}

/// Number of down-closed subsets of `elements` under refinement.
pub fn count_ideals(elements: &[Cut]) -> Result<usize> {
    if elements.len() > MAX_INNER {
        return Err(Error::OracleBudget {
            found: elements.len(),
            limit: MAX_INNER,
        });
    }
    let k = elements.len();
    let below: Vec<u32> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i && elements[j].leq(&elements[i]))
                .fold(0, |m, j| m | 1 << j)
        })
        .collect();
    Ok((0u32..1 << k)
        .filter(|&m| (0..k).all(|i| m >> i & 1 == 0 || below[i] & !m == 0))
        .count())
}

/// Checks the forbidden-vertex contract of `pred` on every cut of `net`
/// against exhaustive search of the cuts above (and, when supported, below).
/// Returns a description of the first violation.
pub fn check_lattice_linear<C, P>(net: &FlowNetwork<C>, pred: &P) -> Result<std::result::Result<(), String>>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
{
    let cuts = all_cuts(net)?;
    let sat: Vec<bool> = cuts.iter().map(|c| pred.evaluate(c)).collect();
    for (g, &holds) in cuts.iter().zip(&sat) {
        let above = || cuts.iter().zip(&sat).filter(move |(h, _)| g.leq(h));
        match pred.forbidden(g) {
            FeasibleSet::Infeasible => {
                if above().any(|(_, &s)| s) {
                    return Ok(Err(format!("{g:?}: infeasible but a cut above satisfies")));
                }
            }
            FeasibleSet::Forbidden(f) => {
                if holds != f.is_empty() {
                    return Ok(Err(format!("{g:?}: evaluate {holds} with forbidden {f:?}")));
                }
                for v in &f {
                    if above().any(|(h, &s)| s && !h.contains(v)) {
                        return Ok(Err(format!("{g:?}: {v} forbidden but avoidable")));
                    }
                }
            }
        }
        let below = || cuts.iter().zip(&sat).filter(move |(h, _)| h.leq(g));
        match pred.dual_forbidden(g) {
            None => {}
            Some(FeasibleSet::Infeasible) => {
                if below().any(|(_, &s)| s) {
                    return Ok(Err(format!("{g:?}: dual infeasible but a cut below satisfies")));
                }
            }
            Some(FeasibleSet::Forbidden(f)) => {
                if holds != f.is_empty() {
                    return Ok(Err(format!("{g:?}: evaluate {holds} with dual forbidden {f:?}")));
                }
                for v in &f {
                    if below().any(|(h, &s)| s && h.contains(v)) {
                        return Ok(Err(format!("{g:?}: {v} dual forbidden but keepable")));
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}
