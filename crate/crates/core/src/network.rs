//! Capacitated directed networks with terminal source and sink.

use std::collections::HashMap;

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::{Error, Result};

/// A directed edge `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge<C> {
    pub tail: usize,
    pub head: usize,
    pub capacity: C,
}

/// Edge list with designated source and sink that need not be terminal yet.
///
/// Parallel edges are merged by summing capacities, keeping the position of
/// the first occurrence. Antiparallel pairs stay distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawNetwork<C> {
    vertex_count: usize,
    source: usize,
    sink: usize,
    edges: Vec<Edge<C>>,
}

impl<C: Capacity> RawNetwork<C> {
    pub fn new<I>(vertex_count: usize, source: usize, sink: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, C)>,
    {
        if vertex_count < 2 {
            return Err(Error::TooFewVertices(vertex_count));
        }
        for v in [source, sink] {
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                });
            }
        }
        if source == sink {
            return Err(Error::SameTerminals(source));
        }
        let mut merged: Vec<Edge<C>> = Vec::new();
        let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
        for (tail, head, capacity) in edges {
            for v in [tail, head] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            if tail == head {
                return Err(Error::SelfLoop(tail));
            }
            match slot.get(&(tail, head)) {
                Some(&i) => {
                    let e = &mut merged[i];
                    e.capacity = e.capacity.checked_add(&capacity).ok_or(Error::CapacityOverflow)?;
                }
                None => {
                    slot.insert((tail, head), merged.len());
                    merged.push(Edge { tail, head, capacity });
                }
            }
        }
        C::checked_sum(merged.iter().map(|e| e.capacity)).ok_or(Error::CapacityOverflow)?;
        Ok(Self {
            vertex_count,
            source,
            sink,
            edges: merged,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn edges(&self) -> &[Edge<C>] {
        &self.edges
    }

    pub fn is_terminal(&self) -> bool {
        self.edges.iter().all(|e| e.head != self.source && e.tail != self.sink)
    }

    /// Makes source and sink terminal.
    ///
    /// When the source has an incoming edge or the sink an outgoing one, a
    /// fresh source `s'` (id `vertex_count`) and sink `t'` (id
    /// `vertex_count + 1`) are appended with edges `s' -> s` and `t -> t'`,
    /// each of capacity one more than the total capacity. Otherwise the
    /// network is returned unchanged.
    pub fn normalize(self) -> Result<Normalized<C>> {
        let original_vertex_count = self.vertex_count;
        let original_source = self.source;
        let original_sink = self.sink;
        let original_edge_count = self.edges.len();
        if self.is_terminal() {
            let network = FlowNetwork::from_raw(self)?;
            return Ok(Normalized {
                network,
                original_vertex_count,
                original_source,
                original_sink,
                original_edge_count,
            });
        }
        let total = C::checked_sum(self.edges.iter().map(|e| e.capacity)).ok_or(Error::CapacityOverflow)?;
        let big = total.checked_add(&C::one()).ok_or(Error::CapacityOverflow)?;
        let new_source = original_vertex_count;
        let new_sink = original_vertex_count + 1;
        let mut edges: Vec<_> = self.edges.iter().map(|e| (e.tail, e.head, e.capacity)).collect();
        edges.push((new_source, original_source, big));
        edges.push((original_sink, new_sink, big));
        let raw = RawNetwork::new(original_vertex_count + 2, new_source, new_sink, edges)?;
        Ok(Normalized {
            network: FlowNetwork::from_raw(raw)?,
            original_vertex_count,
            original_source,
            original_sink,
            original_edge_count,
        })
    }
}

/// Result of [`RawNetwork::normalize`], remembering which vertices and edges
/// are synthetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized<C> {
    pub network: FlowNetwork<C>,
    pub original_vertex_count: usize,
    pub original_source: usize,
    pub original_sink: usize,
    /// Edges `0..original_edge_count` of `network` are the input edges, in
    /// input order.
    pub original_edge_count: usize,
}

impl<C: Capacity> Normalized<C> {
    pub fn was_extended(&self) -> bool {
        self.network.vertex_count() != self.original_vertex_count
    }

    pub fn is_synthetic(&self, vertex: usize) -> bool {
        vertex >= self.original_vertex_count
    }
}

/// Immutable capacitated directed graph whose source has no incoming edges
/// and whose sink has no outgoing edges. At most one edge per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork<C> {
    vertex_count: usize,
    source: usize,
    sink: usize,
    edges: Vec<Edge<C>>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl<C: Capacity> FlowNetwork<C> {
    /// Builds a network that must already be terminal; see
    /// [`RawNetwork::normalize`] otherwise.
    pub fn new<I>(vertex_count: usize, source: usize, sink: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, C)>,
    {
        Self::from_raw(RawNetwork::new(vertex_count, source, sink, edges)?)
    }

    fn from_raw(raw: RawNetwork<C>) -> Result<Self> {
        if !raw.is_terminal() {
            return Err(Error::NotTerminal);
        }
        let mut out_edges = vec![Vec::new(); raw.vertex_count];
        let mut in_edges = vec![Vec::new(); raw.vertex_count];
        for (i, e) in raw.edges.iter().enumerate() {
            out_edges[e.tail].push(i);
            in_edges[e.head].push(i);
        }
        Ok(Self {
            vertex_count: raw.vertex_count,
            source: raw.source,
            sink: raw.sink,
            edges: raw.edges,
            out_edges,
            in_edges,
        })
    }

    /// Total number of vertices, terminals included.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of non-terminal vertices.
    pub fn inner_count(&self) -> usize {
        self.vertex_count - 2
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn is_terminal_vertex(&self, v: usize) -> bool {
        v == self.source || v == self.sink
    }

    /// Non-terminal vertex ids in increasing order.
    pub fn inner_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(move |&v| !self.is_terminal_vertex(v))
    }

    pub fn edges(&self) -> &[Edge<C>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Indices of edges leaving `v`, in input order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// Indices of edges entering `v`, in input order.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn total_capacity(&self) -> C {
        // checked at construction
        self.edges.iter().fold(C::zero(), |acc, e| acc + e.capacity)
    }

    pub fn to_raw(&self) -> RawNetwork<C> {
        RawNetwork {
            vertex_count: self.vertex_count,
            source: self.source,
            sink: self.sink,
            edges: self.edges.clone(),
        }
    }

    /// Sum of capacities of edges leaving the cut's source side.
    pub fn cut_capacity(&self, cut: &Cut) -> Result<C> {
        self.check_cut(cut)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| cut.in_source_side(self, e.tail) && !cut.in_source_side(self, e.head))
            .fold(C::zero(), |acc, e| acc + e.capacity))
    }

    pub(crate) fn check_cut(&self, cut: &Cut) -> Result<()> {
        let found = cut.s_side().universe();
        if found != self.vertex_count {
            return Err(Error::UniverseMismatch {
                expected: self.vertex_count,
                found,
            });
        }
        for v in [self.source, self.sink] {
            if cut.s_side().contains(v) {
                return Err(Error::TerminalInCut(v));
            }
        }
        Ok(())
    }
}
