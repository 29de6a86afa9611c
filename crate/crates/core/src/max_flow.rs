//! Exact integral maximum flow (Dinic's algorithm) and residual queries.

use std::collections::VecDeque;

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

/// A feasible per-edge flow assignment.
///
/// Values are indexed like [`FlowNetwork::edges`]. Construction checks the
/// capacity and conservation constraints and records whether the flow is
/// maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow<C> {
    per_edge: Vec<C>,
    value: C,
    maximum: bool,
}

impl<C: Capacity> Flow<C> {
    /// Validates an externally supplied flow.
    pub fn from_edge_flows(net: &FlowNetwork<C>, per_edge: Vec<C>) -> Result<Self> {
        if per_edge.len() != net.edge_count() {
            return Err(Error::FlowShapeMismatch {
                expected: net.edge_count(),
                found: per_edge.len(),
            });
        }
        for (i, (e, &f)) in net.edges().iter().zip(&per_edge).enumerate() {
            if f > e.capacity {
                return Err(Error::CapacityViolated { edge: i });
            }
        }
        for v in net.inner_vertices() {
            let inflow = net.in_edges(v).iter().fold(C::zero(), |a, &e| a + per_edge[e]);
            let outflow = net.out_edges(v).iter().fold(C::zero(), |a, &e| a + per_edge[e]);
            if inflow != outflow {
                return Err(Error::ConservationViolated(v));
            }
        }
        let value = net
            .out_edges(net.source())
            .iter()
            .fold(C::zero(), |a, &e| a + per_edge[e]);
        let mut flow = Self {
            per_edge,
            value,
            maximum: false,
        };
        let mut seeds = VertexSet::new(net.vertex_count());
        seeds.insert(net.source());
        flow.maximum = !flow.residual_reachable(net, &seeds).contains(net.sink());
        Ok(flow)
    }

    pub fn value(&self) -> C {
        self.value
    }

    pub fn per_edge(&self) -> &[C] {
        &self.per_edge
    }

    pub fn on_edge(&self, edge: usize) -> C {
        self.per_edge[edge]
    }

    /// Whether no augmenting path exists.
    pub fn is_maximum(&self) -> bool {
        self.maximum
    }

    /// `flow(e) == capacity(e)`.
    pub fn is_saturated(&self, net: &FlowNetwork<C>, edge: usize) -> bool {
        self.per_edge[edge] == net.edges()[edge].capacity
    }

    /// `flow(e) > 0`.
    pub fn is_positive(&self, edge: usize) -> bool {
        self.per_edge[edge] > C::zero()
    }

    pub(crate) fn check_against(&self, net: &FlowNetwork<C>) -> Result<()> {
        if self.per_edge.len() != net.edge_count() {
            return Err(Error::FlowShapeMismatch {
                expected: net.edge_count(),
                found: self.per_edge.len(),
            });
        }
        if !self.maximum {
            return Err(Error::NotMaximumFlow);
        }
        Ok(())
    }

    /// Every vertex reachable from `seeds` in the residual graph, seeds
    /// included. An edge `u -> v` yields residual arc `u -> v` while
    /// unsaturated and `v -> u` while carrying positive flow.
    pub fn residual_reachable(&self, net: &FlowNetwork<C>, seeds: &VertexSet) -> VertexSet {
        let mut seen = seeds.clone();
        let mut queue: VecDeque<usize> = seeds.iter().collect();
        while let Some(u) = queue.pop_front() {
            for &e in net.out_edges(u) {
                let head = net.edges()[e].head;
                if self.per_edge[e] < net.edges()[e].capacity && seen.insert(head) {
                    queue.push_back(head);
                }
            }
            for &e in net.in_edges(u) {
                let tail = net.edges()[e].tail;
                if self.per_edge[e] > C::zero() && seen.insert(tail) {
                    queue.push_back(tail);
                }
            }
        }
        seen
    }

    /// Every vertex with a residual path into `targets`, targets included.
    pub fn residual_coreachable(&self, net: &FlowNetwork<C>, targets: &VertexSet) -> VertexSet {
        let mut seen = targets.clone();
        let mut queue: VecDeque<usize> = targets.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &e in net.in_edges(x) {
                let tail = net.edges()[e].tail;
                if self.per_edge[e] < net.edges()[e].capacity && seen.insert(tail) {
                    queue.push_back(tail);
                }
            }
            for &e in net.out_edges(x) {
                let head = net.edges()[e].head;
                if self.per_edge[e] > C::zero() && seen.insert(head) {
                    queue.push_back(head);
                }
            }
        }
        seen
    }
}

/// Computes a maximum flow with Dinic's algorithm.
///
/// Arcs are scanned in edge input order, so the result is deterministic.
pub fn compute_max_flow<C: Capacity>(net: &FlowNetwork<C>) -> Flow<C> {
    let mut dinic = Dinic::new(net);
    let value = dinic.run(net.source(), net.sink());
    let per_edge: Vec<C> = (0..net.edge_count()).map(|e| dinic.residual[2 * e + 1]).collect();
    Flow {
        per_edge,
        value,
        maximum: true,
    }
}

struct Dinic<C> {
    // arc 2e is edge e forward, arc 2e+1 its reverse
    head: Vec<usize>,
    residual: Vec<C>,
    adjacency: Vec<Vec<usize>>,
    level: Vec<usize>,
    cursor: Vec<usize>,
}

const UNSEEN: usize = usize::MAX;

impl<C: Capacity> Dinic<C> {
    fn new(net: &FlowNetwork<C>) -> Self {
        let n = net.vertex_count();
        let mut head = Vec::with_capacity(2 * net.edge_count());
        let mut residual = Vec::with_capacity(2 * net.edge_count());
        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in net.edges().iter().enumerate() {
            head.push(e.head);
            residual.push(e.capacity);
            head.push(e.tail);
            residual.push(C::zero());
            adjacency[e.tail].push(2 * i);
            adjacency[e.head].push(2 * i + 1);
        }
        Self {
            head,
            residual,
            adjacency,
            level: vec![UNSEEN; n],
            cursor: vec![0; n],
        }
    }

    fn run(&mut self, s: usize, t: usize) -> C {
        let mut total = C::zero();
        while self.build_levels(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.augment(s, t, C::max_value());
                if pushed == C::zero() {
                    break;
                }
                total = total + pushed;
            }
        }
        total
    }

    fn build_levels(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = UNSEEN);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adjacency[u] {
                let v = self.head[a];
                if self.residual[a] > C::zero() && self.level[v] == UNSEEN {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != UNSEEN
    }

    fn augment(&mut self, u: usize, t: usize, limit: C) -> C {
        if u == t {
            return limit;
        }
        while self.cursor[u] < self.adjacency[u].len() {
            let a = self.adjacency[u][self.cursor[u]];
            let v = self.head[a];
            if self.residual[a] > C::zero() && self.level[v] == self.level[u].wrapping_add(1) {
                let pushed = self.augment(v, t, limit.min(self.residual[a]));
                if pushed > C::zero() {
                    self.residual[a] = self.residual[a] - pushed;
                    self.residual[a ^ 1] = self.residual[a ^ 1] + pushed;
                    return pushed;
                }
            }
            self.cursor[u] += 1;
        }
        C::zero()
    }
}
