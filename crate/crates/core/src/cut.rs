//! `(s,t)`-cuts represented by their source side, ordered by refinement.

use std::fmt;

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

/// An `(s,t)`-cut, stored as the set of non-terminal vertices on the source
/// side. The source is implicitly on the source side and the sink never is.
///
/// Cuts are ordered by refinement: `a <= b` iff `a`'s source side is a subset
/// of `b`'s. Under this order the cuts of a network form a Boolean lattice
/// with union as join and intersection as meet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    s_side: VertexSet,
}

impl Cut {
    /// The least cut, `S = {s}`.
    pub fn bottom<C: Capacity>(net: &FlowNetwork<C>) -> Self {
        Self {
            s_side: VertexSet::new(net.vertex_count()),
        }
    }

    /// The greatest cut, `S = V \ {t}`.
    pub fn top<C: Capacity>(net: &FlowNetwork<C>) -> Self {
        Self {
            s_side: VertexSet::from_ids(net.vertex_count(), net.inner_vertices()),
        }
    }

    pub fn from_vertices<C, I>(net: &FlowNetwork<C>, vertices: I) -> Result<Self>
    where
        C: Capacity,
        I: IntoIterator<Item = usize>,
    {
        let mut s_side = VertexSet::new(net.vertex_count());
        for v in vertices {
            if v >= net.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: net.vertex_count(),
                });
            }
            s_side.insert(v);
        }
        Self::from_set(net, s_side)
    }

    pub fn from_set<C: Capacity>(net: &FlowNetwork<C>, s_side: VertexSet) -> Result<Self> {
        let cut = Self { s_side };
        net.check_cut(&cut)?;
        Ok(cut)
    }

    /// Wraps a set already known to exclude both terminals.
    pub(crate) fn from_set_unchecked(s_side: VertexSet) -> Self {
        Self { s_side }
    }

    /// The non-terminal vertices on the source side.
    pub fn s_side(&self) -> &VertexSet {
        &self.s_side
    }

    pub fn into_s_side(self) -> VertexSet {
        self.s_side
    }

    /// Non-terminal members of the source side, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        self.s_side.iter().collect()
    }

    /// Number of non-terminal vertices on the source side.
    pub fn len(&self) -> usize {
        self.s_side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s_side.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.s_side.contains(v)
    }

    /// Whether `v` lies on the source side, counting the source itself.
    #[inline]
    pub fn in_source_side<C: Capacity>(&self, net: &FlowNetwork<C>, v: usize) -> bool {
        v == net.source() || self.s_side.contains(v)
    }

    /// Refinement order.
    pub fn leq(&self, other: &Self) -> bool {
        self.s_side.universe() == other.s_side.universe() && self.s_side.is_subset(&other.s_side)
    }

    /// Strict refinement order.
    pub fn lt(&self, other: &Self) -> bool {
        self.leq(other) && self != other
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        Ok(Self {
            s_side: self.s_side.intersection(&other.s_side),
        })
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        Ok(Self {
            s_side: self.s_side.union(&other.s_side),
        })
    }

    /// The cut with `vertices` moved onto the source side.
    pub fn advanced(&self, vertices: &VertexSet) -> Self {
        Self {
            s_side: self.s_side.union(vertices),
        }
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.s_side.universe() != other.s_side.universe() {
            return Err(Error::UniverseMismatch {
                expected: self.s_side.universe(),
                found: other.s_side.universe(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cut{:?}", self.s_side)
    }
}
