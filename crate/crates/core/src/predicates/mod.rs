//! Predicates over the lattice of `(s,t)`-cuts.
//!
//! A predicate is *lattice-linear* when every cut on which it is false has a
//! forbidden vertex: one that must move to the source side in every larger
//! cut satisfying the predicate. Satisfying sets of lattice-linear predicates
//! are closed under meet. A *regular* predicate is additionally lattice-linear
//! in the dual order (dual-forbidden vertices must leave the source side), so
//! its satisfying set is a sublattice.

mod general;
mod implicational;
mod min_cut;
mod uniformly_directed;

pub use general::{general_expression, Expr, GeneralPredicate};
pub use implicational::{forbid_source_side, implicational, require_source_side, ForbidSourceSide, Implicational};
pub use min_cut::{min_cut_dual_forbidden, min_cut_forbidden, min_cut_forbidden_closure, MinCutPredicate};
pub use uniformly_directed::{uniformly_directed, UniformlyDirected};

use crate::cut::Cut;
use crate::vertex_set::VertexSet;

/// Result of a forbidden-vertex search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibleSet {
    /// Vertices that must be advanced. Empty when the predicate holds.
    Forbidden(VertexSet),
    /// No cut at or above (resp. below, for dual searches) the current cut
    /// satisfies the predicate.
    Infeasible,
}

impl FeasibleSet {
    pub fn none(universe: usize) -> Self {
        FeasibleSet::Forbidden(VertexSet::new(universe))
    }

    /// True for an empty forbidden set.
    pub fn is_empty(&self) -> bool {
        matches!(self, FeasibleSet::Forbidden(s) if s.is_empty())
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, FeasibleSet::Infeasible)
    }

    pub fn as_forbidden(&self) -> Option<&VertexSet> {
        match self {
            FeasibleSet::Forbidden(s) => Some(s),
            FeasibleSet::Infeasible => None,
        }
    }

    /// Set union, with `Infeasible` absorbing.
    pub fn merge(self, other: FeasibleSet) -> FeasibleSet {
        match (self, other) {
            (FeasibleSet::Forbidden(mut a), FeasibleSet::Forbidden(b)) => {
                a.union_with(&b);
                FeasibleSet::Forbidden(a)
            }
            _ => FeasibleSet::Infeasible,
        }
    }
}

/// Anything that can be evaluated on a cut.
pub trait CutPredicate: Send + Sync {
    fn evaluate(&self, cut: &Cut) -> bool;
}

/// A predicate with a forbidden-vertex search.
pub trait LatticeLinear: CutPredicate {
    /// All forbidden vertices of `cut`, or `Infeasible` when nothing above
    /// `cut` can satisfy the predicate. Must be empty iff `evaluate` holds.
    fn forbidden(&self, cut: &Cut) -> FeasibleSet;

    /// Dual-forbidden vertices, for regular predicates. `None` when the
    /// predicate has no dual search.
    fn dual_forbidden(&self, _cut: &Cut) -> Option<FeasibleSet> {
        None
    }

    /// Whether the satisfying set is closed under both meet and join.
    fn is_regular(&self) -> bool {
        false
    }

    /// Upper bound on truth-value flips along any chain of cuts, if known.
    fn transition_bound(&self) -> Option<usize> {
        None
    }
}

impl<T: CutPredicate + ?Sized> CutPredicate for &T {
    fn evaluate(&self, cut: &Cut) -> bool {
        (**self).evaluate(cut)
    }
}

impl<T: LatticeLinear + ?Sized> LatticeLinear for &T {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        (**self).forbidden(cut)
    }
    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        (**self).dual_forbidden(cut)
    }
    fn is_regular(&self) -> bool {
        (**self).is_regular()
    }
    fn transition_bound(&self) -> Option<usize> {
        (**self).transition_bound()
    }
}

impl<T: CutPredicate + ?Sized> CutPredicate for Box<T> {
    fn evaluate(&self, cut: &Cut) -> bool {
        (**self).evaluate(cut)
    }
}

impl<T: LatticeLinear + ?Sized> LatticeLinear for Box<T> {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        (**self).forbidden(cut)
    }
    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        (**self).dual_forbidden(cut)
    }
    fn is_regular(&self) -> bool {
        (**self).is_regular()
    }
    fn transition_bound(&self) -> Option<usize> {
        (**self).transition_bound()
    }
}

/// The constantly true predicate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Always;

impl CutPredicate for Always {
    fn evaluate(&self, _cut: &Cut) -> bool {
        true
    }
}

impl LatticeLinear for Always {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        FeasibleSet::none(cut.s_side().universe())
    }
    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        Some(FeasibleSet::none(cut.s_side().universe()))
    }
    fn is_regular(&self) -> bool {
        true
    }
    fn transition_bound(&self) -> Option<usize> {
        Some(0)
    }
}

/// Evaluate-only predicate from a closure.
pub struct FnPredicate<F>(pub F);

impl<F: Fn(&Cut) -> bool + Send + Sync> CutPredicate for FnPredicate<F> {
    fn evaluate(&self, cut: &Cut) -> bool {
        (self.0)(cut)
    }
}

/// Conjunction of lattice-linear predicates.
///
/// Forbidden sets are unioned; transition bounds add.
pub struct Conjunction<'p> {
    parts: Vec<Box<dyn LatticeLinear + 'p>>,
}

impl<'p> Conjunction<'p> {
    pub fn new(parts: Vec<Box<dyn LatticeLinear + 'p>>) -> Self {
        Self { parts }
    }

    pub fn push<P: LatticeLinear + 'p>(&mut self, part: P) {
        self.parts.push(Box::new(part));
    }

    pub fn with<P: LatticeLinear + 'p>(mut self, part: P) -> Self {
        self.push(part);
        self
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Builds the conjunction of `parts`. An empty list behaves as [`Always`].
pub fn conjunction<'p>(parts: Vec<Box<dyn LatticeLinear + 'p>>) -> Conjunction<'p> {
    Conjunction::new(parts)
}

impl CutPredicate for Conjunction<'_> {
    fn evaluate(&self, cut: &Cut) -> bool {
        self.parts.iter().all(|p| p.evaluate(cut))
    }
}

impl LatticeLinear for Conjunction<'_> {
    fn forbidden(&self, cut: &Cut) -> FeasibleSet {
        let mut acc = FeasibleSet::none(cut.s_side().universe());
        for p in &self.parts {
            acc = acc.merge(p.forbidden(cut));
            if acc.is_infeasible() {
                break;
            }
        }
        acc
    }

    fn dual_forbidden(&self, cut: &Cut) -> Option<FeasibleSet> {
        let mut acc = FeasibleSet::none(cut.s_side().universe());
        for p in &self.parts {
            acc = acc.merge(p.dual_forbidden(cut)?);
        }
        Some(acc)
    }

    fn is_regular(&self) -> bool {
        self.parts.iter().all(|p| p.is_regular())
    }

    fn transition_bound(&self) -> Option<usize> {
        self.parts
            .iter()
            .try_fold(0usize, |acc, p| Some(acc + p.transition_bound()?))
    }
}
