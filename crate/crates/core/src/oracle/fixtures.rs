use crate::cut::Cut;
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

/// Known answers for a fixture, where they follow from its construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub max_flow: u64,
    pub min_cuts: usize,
    pub irreducibles: usize,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub network: FlowNetwork<u64>,
    pub expected: Option<Expected>,
}

fn build(vertex_count: usize, s: usize, t: usize, edges: Vec<(usize, usize, u64)>) -> FlowNetwork<u64> {
    FlowNetwork::new(vertex_count, s, t, edges).expect("fixture is well formed")
}

/// `n` blocks `s -> a_i -> c_i`, `s -> b_i -> c_i`, `c_i -> t`, all unit
/// capacity. Ids: `s = 0`, `a_i = 3i - 2`, `b_i = 3i - 1`, `c_i = 3i`,
/// `t = 3n + 1`.
pub fn blocks(n: usize) -> Fixture {
    let t = 3 * n + 1;
    let mut edges = Vec::new();
    for i in 1..=n {
        let (a, b, c) = (3 * i - 2, 3 * i - 1, 3 * i);
        edges.extend([(0, a, 1), (0, b, 1), (a, c, 1), (b, c, 1), (c, t, 1)]);
    }
    Fixture {
        name: format!("blocks-{n}"),
        network: build(3 * n + 2, 0, t, edges),
        expected: Some(Expected {
            max_flow: n as u64,
            min_cuts: 1,
            irreducibles: 0,
        }),
    }
}

/// Seven vertices `s, a, b, c, d, e, t` as ids `0..=6`.
pub fn seven_vertex() -> Fixture {
    let (s, a, b, c, d, e, t) = (0, 1, 2, 3, 4, 5, 6);
    let edges = vec![
        (s, a, 2),
        (s, b, 1),
        (s, c, 1),
        (b, a, 1),
        (a, d, 2),
        (b, d, 1),
        (c, e, 1),
        (d, t, 2),
        (e, t, 1),
    ];
    Fixture {
        name: "seven".into(),
        network: build(7, s, t, edges),
        expected: None,
    }
}

/// `s -> u_i -> t` for `i = 1..=n`, unit capacities; every subset of the
/// `u_i` bounds a min-cut. Ids: `s = 0`, `u_i = i`, `t = n + 1`.
pub fn star(n: usize) -> Fixture {
    let t = n + 1;
    let edges = (1..=n).flat_map(|u| [(0, u, 1), (u, t, 1)]).collect();
    Fixture {
        name: format!("star-{n}"),
        network: build(n + 2, 0, t, edges),
        expected: Some(Expected {
            max_flow: n as u64,
            min_cuts: 1 << n,
            irreducibles: n,
        }),
    }
}

/// `s -> v_1 -> ... -> v_n -> t`, unit capacities. Ids: `s = 0`, `v_i = i`,
/// `t = n + 1`.
pub fn unit_path(n: usize) -> Fixture {
    Fixture {
        name: format!("path-{n}"),
        network: build(n + 2, 0, n + 1, (0..=n).map(|i| (i, i + 1, 1)).collect()),
        expected: Some(Expected {
            max_flow: 1,
            min_cuts: n + 1,
            irreducibles: n,
        }),
    }
}

/// Alias of [`unit_path`], the network carrying [`transition_chain`].
pub fn chain(n: usize) -> Fixture {
    let mut f = unit_path(n);
    f.name = format!("chain-{n}");
    f
}

pub fn single_edge() -> Fixture {
    Fixture {
        name: "single-edge".into(),
        network: build(2, 0, 1, vec![(0, 1, 1)]),
        expected: Some(Expected {
            max_flow: 1,
            min_cuts: 1,
            irreducibles: 0,
        }),
    }
}

/// A strict chain of `n` cuts of [`chain`]`(n)` on which "no edge from the
/// sink side to the source side" alternates, starting false when `n` is even
/// and true when `n` is odd.
///
/// Even steps take the prefix `v_1..v_i`; odd steps `i > 1` take
/// `v_1..v_{i-1}` plus `v_{i+1}`, and step 1 takes `{v_2}`. For odd `n` the
/// last odd step would need `v_{n+1}`, so the chain starts from the bottom
/// cut and stops at step `n - 1`.
pub fn transition_chain(n: usize) -> Vec<Cut> {
    assert!(n >= 2, "chain needs at least two inner vertices");
    let net = chain(n).network;
    let step = |i: usize| -> Cut {
        let ids: Vec<usize> = match i {
            1 => vec![2],
            _ if i.is_multiple_of(2) => (1..=i).collect(),
            _ => (1..i).chain([i + 1]).collect(),
        };
        Cut::from_set(&net, VertexSet::from_ids(net.vertex_count(), ids)).expect("inner ids")
    };
    if n.is_multiple_of(2) {
        (1..=n).map(step).collect()
    } else {
        std::iter::once(Cut::bottom(&net)).chain((1..n).map(step)).collect()
    }
}

fn bottleneck_path() -> Fixture {
    Fixture {
        name: "bottleneck-path".into(),
        network: build(4, 0, 3, vec![(0, 1, 2), (1, 2, 1), (2, 3, 2)]),
        expected: Some(Expected {
            max_flow: 1,
            min_cuts: 1,
            irreducibles: 0,
        }),
    }
}

fn crossed_diamond() -> Fixture {
    // s -> x, s -> y, x <-> y, x -> t, y -> t
    Fixture {
        name: "crossed-diamond".into(),
        network: build(
            4,
            0,
            3,
            vec![(0, 1, 2), (0, 2, 2), (1, 2, 1), (2, 1, 1), (1, 3, 2), (2, 3, 2)],
        ),
        expected: None,
    }
}

/// Every named fixture.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = vec![single_edge(), seven_vertex(), bottleneck_path(), crossed_diamond()];
    out.extend((1..=3).map(blocks));
    out.extend((1..=4).map(star));
    out.extend((1..=5).map(unit_path));
    out
}
