//! Join-irreducible elements of a regular slice of the min-cut lattice.
//!
//! For a regular predicate `B`, the min-cuts satisfying `B` form a
//! distributive lattice. Its join-irreducibles are exactly the distinct
//! values of `J(u)`, the least satisfying min-cut with `u` on the source
//! side, other than the least satisfying min-cut itself.

use rayon::prelude::*;

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::llp::{least_sat_min_cut, least_sat_min_cut_from, Outcome};
use crate::max_flow::Flow;
use crate::network::FlowNetwork;
use crate::predicates::LatticeLinear;
use crate::vertex_set::VertexSet;

/// The irreducibles of a slice together with its least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreduciblePoset {
    bottom: Cut,
    elements: Vec<Cut>,
    generators: Vec<Vec<usize>>,
    // up[i] holds every j with elements[i] <= elements[j]
    up: Vec<VertexSet>,
}

impl IrreduciblePoset {
    /// Builds the poset from distinct cuts strictly above `bottom`.
    /// Elements are sorted by size, then by vertex set, which makes the
    /// index order a linear extension.
    pub fn from_elements(bottom: Cut, elements: Vec<Cut>) -> Self {
        let with_gens = elements.into_iter().map(|c| (c, Vec::new())).collect();
        Self::build(bottom, with_gens)
    }

    fn build(bottom: Cut, mut elements: Vec<(Cut, Vec<usize>)>) -> Self {
        elements.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.s_side().cmp(b.s_side())));
        elements.dedup_by(|(a, ga), (b, gb)| {
            if a == b {
                gb.append(ga);
                true
            } else {
                false
            }
        });
        let k = elements.len();
        let up = (0..k)
            .map(|i| VertexSet::from_ids(k, (i..k).filter(|&j| elements[i].0.leq(&elements[j].0))))
            .collect();
        let (elements, mut generators): (Vec<_>, Vec<_>) = elements.into_iter().unzip();
        generators.iter_mut().for_each(|g: &mut Vec<usize>| g.sort_unstable());
        Self {
            bottom,
            elements,
            generators,
            up,
        }
    }

    pub fn bottom(&self) -> &Cut {
        &self.bottom
    }

    pub fn elements(&self) -> &[Cut] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Vertices `u` whose least satisfying min-cut containing `u` is element
    /// `i`. Empty for posets built with [`IrreduciblePoset::from_elements`].
    pub fn generators(&self, i: usize) -> &[usize] {
        &self.generators[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Indices of elements at or above element `i`.
    pub fn principal_filter(&self, i: usize) -> &VertexSet {
        &self.up[i]
    }

    /// Join of `bottom` with the given elements.
    pub fn join_of<I: IntoIterator<Item = usize>>(&self, indices: I) -> Cut {
        let mut s = self.bottom.s_side().clone();
        for i in indices {
            s.union_with(self.elements[i].s_side());
        }
        Cut::from_set_unchecked(s)
    }
}

/// Computes the least min-cut satisfying `pred` and the join-irreducibles of
/// the slice above it. `Ok(None)` when no min-cut satisfies `pred`.
///
/// The per-vertex solves share `flow` and run on the rayon pool.
pub fn compute_irreducibles<C, P>(net: &FlowNetwork<C>, flow: &Flow<C>, pred: &P) -> Result<Option<IrreduciblePoset>>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
{
    if !pred.is_regular() {
        return Err(Error::InvalidPredicate("irreducibles need a regular predicate".into()));
    }
    let bottom = match least_sat_min_cut(net, flow, pred)?.outcome {
        Outcome::Found(c) => c,
        Outcome::Infeasible => return Ok(None),
    };
    let inner: Vec<usize> = net.inner_vertices().filter(|&u| !bottom.contains(u)).collect();
    let found: Vec<Option<(Cut, usize)>> = inner
        .par_iter()
        .map(|&u| {
            // a satisfying min-cut containing u refines bottom + u
            let mut start = bottom.s_side().clone();
            start.insert(u);
            let trace = least_sat_min_cut_from(net, flow, pred, &Cut::from_set_unchecked(start))?;
            Ok(trace.found().map(|c| (c.clone(), u)))
        })
        .collect::<Result<_>>()?;
    let elements = found.into_iter().flatten().map(|(c, u)| (c, vec![u])).collect();
    Ok(Some(IrreduciblePoset::build(bottom, elements)))
}

/// Whether `candidate` is join-irreducible in the lattice `all`: it is not
/// the least element and not the join of two members strictly below it.
pub fn is_join_irreducible(candidate: &Cut, all: &[Cut]) -> bool {
    let below: Vec<&Cut> = all.iter().filter(|c| c.lt(candidate)).collect();
    if below.is_empty() {
        return false;
    }
    !below.iter().enumerate().any(|(i, a)| {
        below[i..]
            .iter()
            .any(|b| a.s_side().union(b.s_side()) == *candidate.s_side())
    })
}
