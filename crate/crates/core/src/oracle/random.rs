use rand::seq::SliceRandom;
use rand::Rng;

use crate::network::FlowNetwork;
use crate::predicates::{implicational, Expr, Implicational};

/// Shape of a random layered network: the source feeds every vertex of the
/// first layer, the last layer feeds the sink, and consecutive layers are
/// joined by random forward edges and occasional backward edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayeredParams {
    pub layers: usize,
    pub width: usize,
    pub max_capacity: u64,
    pub edge_probability: f64,
    pub back_edge_probability: f64,
}

impl Default for LayeredParams {
    fn default() -> Self {
        Self {
            layers: 3,
            width: 3,
            max_capacity: 10,
            edge_probability: 0.5,
            back_edge_probability: 0.15,
        }
    }
}

/// Vertex `1 + l * width + w` sits in layer `l` at slot `w`; the source is
/// `0` and the sink `layers * width + 1`.
pub fn random_layered<R: Rng + ?Sized>(rng: &mut R, p: LayeredParams) -> FlowNetwork<u64> {
    assert!(p.layers >= 1 && p.width >= 1 && p.max_capacity >= 1);
    let id = |l: usize, w: usize| 1 + l * p.width + w;
    let t = p.layers * p.width + 1;
    let cap = |rng: &mut R| rng.gen_range(1..=p.max_capacity);
    let mut edges = Vec::new();
    for w in 0..p.width {
        edges.push((0, id(0, w), cap(rng)));
        edges.push((id(p.layers - 1, w), t, cap(rng)));
    }
    for l in 0..p.layers - 1 {
        for a in 0..p.width {
            let forced = rng.gen_range(0..p.width);
            for b in 0..p.width {
                if b == forced || rng.gen_bool(p.edge_probability) {
                    edges.push((id(l, a), id(l + 1, b), cap(rng)));
                }
                if rng.gen_bool(p.back_edge_probability) {
                    edges.push((id(l + 1, b), id(l, a), cap(rng)));
                }
            }
        }
    }
    FlowNetwork::new(t + 1, 0, t, edges).expect("layered network is well formed")
}

/// `X ⊆ S ⟹ u ∈ S` with `u` and up to `max_premise` premise vertices drawn
/// from the non-terminals. Needs at least one non-terminal.
pub fn random_implicational<R: Rng + ?Sized>(rng: &mut R, net: &FlowNetwork<u64>, max_premise: usize) -> Implicational {
    let mut inner: Vec<usize> = net.inner_vertices().collect();
    inner.shuffle(rng);
    let (u, rest) = inner.split_first().expect("a non-terminal vertex");
    let k = rng.gen_range(0..=max_premise.min(rest.len()));
    implicational(net, rest[..k].iter().copied(), *u).expect("valid implication")
}

/// Random expression tree of the given depth over the non-terminals.
pub fn random_general_expr<R: Rng + ?Sized>(rng: &mut R, net: &FlowNetwork<u64>, depth: usize) -> Expr {
    let inner: Vec<usize> = net.inner_vertices().collect();
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..4) {
            0 | 1 if !inner.is_empty() => Expr::InS(*inner.choose(rng).expect("nonempty")),
            2 => Expr::CardLe(rng.gen_range(0..=inner.len())),
            _ => Expr::CardGe(rng.gen_range(0..=inner.len())),
        };
    }
    match rng.gen_range(0..3) {
        0 => Expr::And((0..2).map(|_| random_general_expr(rng, net, depth - 1)).collect()),
        1 => Expr::Or((0..2).map(|_| random_general_expr(rng, net, depth - 1)).collect()),
        _ => Expr::negate(random_general_expr(rng, net, depth - 1)),
    }
}
