use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

use super::{CutPredicate, FeasibleSet, LatticeLinear};

/// `X ⊆ S ⟹ u ∈ S`.
///
/// Lattice-linear (and a 2-transition predicate) for any premise; regular
/// only when the premise has at most one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implicational {
    premise: VertexSet,
    conclusion: usize,
}

fn check_inner<C: Capacity>(net: &FlowNetwork<C>, v: usize) -> Result<()> {
    if v >= net.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: net.vertex_count(),
        });
    }
    if net.is_terminal_vertex(v) {
        return Err(Error::InvalidPredicate(format!("vertex {v} is a terminal")));
    }
    Ok(())
}

/// Builds `premise ⊆ S ⟹ conclusion ∈ S`.
pub fn implicational<C, I>(net: &FlowNetwork<C>, premise: I, conclusion: usize) -> Result<Implicational>
where
    C: Capacity,
    I: IntoIterator<Item = usize>,
{
    check_inner(net, conclusion)?;
    let mut set = VertexSet::new(net.vertex_count());
    for v in premise {
        check_inner(net, v)?;
        set.insert(v);
    }
    if set.contains(conclusion) {
        return Err(Error::InvalidPredicate(format!(
            "conclusion {conclusion} is part of the premise"
        )));
    }
    Ok(Implicational {
        premise: set,
        conclusion,
    })
}

/// `u ∈ S`, i.e. the implication with an empty premise.
pub fn require_source_side<C: Capacity>(net: &FlowNetwork<C>, u: usize) -> Result<Implicational> {
    implicational(net, std::iter::empty(), u)
}

impl Implicational {
    pub fn premise(&self) -> &VertexSet {
        &self.premise
    }

    pub fn conclusion(&self) -> usize {
        self.conclusion
    }

    fn violated(&self, cut: &Cut) -> bool {
        self.premise.is_subset(cut.s_side()) && !cut.contains(self.conclusion)
    }
}

impl CutPredicate for Implicational {
    fn evaluate(&self, cut: &Cut) -> bool {
        !self.violated(cut)
    }
}

impl LatticeLinear for Implicational {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        let mut f = VertexSet::new(cut.s_side().universe());
        if self.violated(cut) {
            f.insert(self.conclusion);
        }
        FeasibleSet::Forbidden(f)
    }

    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        let universe = cut.s_side().universe();
        if !self.violated(cut) {
            return Some(FeasibleSet::none(universe));
        }
        match self.premise.len() {
            // going down never adds the conclusion
            0 => Some(FeasibleSet::Infeasible),
            1 => Some(FeasibleSet::Forbidden(self.premise.clone())),
            _ => None,
        }
    }

    fn is_regular(&self) -> bool {
        self.premise.len() <= 1
    }

    fn transition_bound(&self) -> Option<usize> {
        Some(2)
    }
}

/// `u ∉ S`. Its satisfying set is an order ideal, so once `u` is on the
/// source side no refinement can satisfy it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbidSourceSide {
    vertex: usize,
}

pub fn forbid_source_side<C: Capacity>(net: &FlowNetwork<C>, u: usize) -> Result<ForbidSourceSide> {
    check_inner(net, u)?;
    Ok(ForbidSourceSide { vertex: u })
}

impl ForbidSourceSide {
    pub fn vertex(&self) -> usize {
        self.vertex
    }
}

impl CutPredicate for ForbidSourceSide {
    fn evaluate(&self, cut: &Cut) -> bool {
        !cut.contains(self.vertex)
    }
}

impl LatticeLinear for ForbidSourceSide {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        if cut.contains(self.vertex) {
            FeasibleSet::Infeasible
        } else {
            FeasibleSet::none(cut.s_side().universe())
        }
    }

    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        let mut f = VertexSet::new(cut.s_side().universe());
        if cut.contains(self.vertex) {
            f.insert(self.vertex);
        }
        Some(FeasibleSet::Forbidden(f))
    }

    fn is_regular(&self) -> bool {
        true
    }

    fn transition_bound(&self) -> Option<usize> {
        Some(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net() -> FlowNetwork<u64> {
        // s=0, a=1, b=2, v=3, t=4
        FlowNetwork::new(5, 0, 4, [(0, 1, 1), (1, 2, 1), (2, 4, 1), (0, 3, 1), (3, 4, 1)]).unwrap()
    }

    fn forbidden_ids<P: LatticeLinear>(p: &P, cut: &Cut) -> Vec<usize> {
        p.forbidden(cut).as_forbidden().unwrap().iter().collect()
    }

    #[test]
    fn empty_premise_requires_source_side() {
        let g = net();
        let p = require_source_side(&g, 3).unwrap();
        assert_eq!(forbidden_ids(&p, &Cut::bottom(&g)), vec![3]);
        assert_eq!(forbidden_ids(&p, &Cut::from_vertices(&g, [1, 2]).unwrap()), vec![3]);
        assert!(p.forbidden(&Cut::from_vertices(&g, [3]).unwrap()).is_empty());
    }

    #[test]
    fn implication_fires_only_when_premise_holds() {
        let g = net();
        let p = implicational(&g, [1], 2).unwrap();
        let with_a = Cut::from_vertices(&g, [1]).unwrap();
        assert!(!p.evaluate(&with_a));
        assert_eq!(forbidden_ids(&p, &with_a), vec![2]);
        let without_a = Cut::from_vertices(&g, [3]).unwrap();
        assert!(p.evaluate(&without_a));
        assert!(p.forbidden(&without_a).is_empty());
    }

    #[test]
    fn construction_errors() {
        let g = net();
        assert!(matches!(implicational(&g, [1], 1), Err(Error::InvalidPredicate(_))));
        assert!(matches!(implicational(&g, [0], 1), Err(Error::InvalidPredicate(_))));
        assert!(matches!(require_source_side(&g, 4), Err(Error::InvalidPredicate(_))));
        assert!(matches!(
            require_source_side(&g, 7),
            Err(Error::VertexOutOfRange { vertex: 7, .. })
        ));
        assert!(forbid_source_side(&g, 0).is_err());
    }

    #[test]
    fn regularity_depends_on_premise_size() {
        let g = net();
        assert!(implicational(&g, [1], 2).unwrap().is_regular());
        assert!(require_source_side(&g, 2).unwrap().is_regular());
        let wide = implicational(&g, [1, 3], 2).unwrap();
        assert!(!wide.is_regular());
        let cut = Cut::from_vertices(&g, [1, 3]).unwrap();
        assert_eq!(wide.dual_forbidden(&cut), None);
    }

    #[test]
    fn forbid_source_side_cases() {
        let g = net();
        let p = forbid_source_side(&g, 1).unwrap();
        assert!(p.evaluate(&Cut::bottom(&g)));
        assert!(p.forbidden(&Cut::bottom(&g)).is_empty());
        let cut = Cut::from_vertices(&g, [1]).unwrap();
        assert!(!p.evaluate(&cut));
        assert!(p.forbidden(&cut).is_infeasible());
    }
}
