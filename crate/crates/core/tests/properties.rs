use std::collections::HashSet;
use std::ops::ControlFlow;

use lattice_mincut::oracle::{self, random_implicational, random_layered, LayeredParams};
use lattice_mincut::predicates::{uniformly_directed, Always, Conjunction, CutPredicate, LatticeLinear};
use lattice_mincut::{
    compute_irreducibles, compute_max_flow, enumerate_ideals, least_sat_min_cut, solve_with, Advancement, Cut,
    FlowNetwork, RawNetwork, SolveOptions,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn layered(seed: u64) -> FlowNetwork<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_layered(
        &mut rng,
        LayeredParams {
            layers: 3,
            width: 3,
            max_capacity: 6,
            edge_probability: 0.5,
            back_edge_probability: 0.2,
        },
    )
}

fn implications(seed: u64, net: &FlowNetwork<u64>, j: usize, max_premise: usize) -> Conjunction<'static> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37);
    let mut c = Conjunction::new(Vec::new());
    for _ in 0..j {
        c.push(random_implicational(&mut rng, net, max_premise));
    }
    c
}

/// Arbitrary edge list over `n` vertices that may touch the terminals in
/// either direction.
fn raw_network() -> impl Strategy<Value = RawNetwork<u64>> {
    (3usize..7).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n, 1u64..8), 1..14).prop_map(move |edges| {
            let mut seen = HashSet::new();
            let edges: Vec<_> = edges
                .into_iter()
                .filter(|&(u, v, _)| u != v && seen.insert((u, v)))
                .collect();
            RawNetwork::new(n, 0, n - 1, edges).unwrap()
        })
    })
}

fn sides(cuts: &[Cut]) -> HashSet<Vec<usize>> {
    cuts.iter().map(Cut::vertices).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn max_flow_equals_min_cut(seed in any::<u64>()) {
        let net = layered(seed);
        let flow = compute_max_flow(&net);
        prop_assert!(flow.is_maximum());
        prop_assert_eq!(flow.value(), oracle::min_cut_value(&net).unwrap());
        prop_assert_eq!(compute_max_flow(&net), flow);
    }

    #[test]
    fn capacities_agree_with_pairwise_sum(seed in any::<u64>()) {
        let net = layered(seed);
        for cut in oracle::all_cuts(&net).unwrap() {
            prop_assert_eq!(net.cut_capacity(&cut).unwrap(), oracle::naive_cut_capacity(&net, &cut));
        }
    }

    #[test]
    fn normalizing_preserves_flow_and_cut_capacities(raw in raw_network()) {
        let original = raw.clone();
        let norm = raw.normalize().unwrap();
        let net = &norm.network;
        let flow = compute_max_flow(net);
        // Brute force over the original vertices, with the original terminals pinned.
        let n = original.vertex_count();
        let inner: Vec<usize> = (0..n).filter(|&v| v != original.source() && v != original.sink()).collect();
        let mut best = u64::MAX;
        for m in 0u32..1 << inner.len() {
            let mut side = vec![false; n];
            side[original.source()] = true;
            for (i, &v) in inner.iter().enumerate() {
                side[v] = m >> i & 1 == 1;
            }
            let cap: u64 = original.edges().iter().filter(|e| side[e.tail] && !side[e.head]).map(|e| e.capacity).sum();
            best = best.min(cap);
            if norm.was_extended() {
                let ids = (0..n).filter(|&v| side[v]);
                let cut = Cut::from_vertices(net, ids).unwrap();
                prop_assert_eq!(net.cut_capacity(&cut).unwrap(), cap);
            }
        }
        prop_assert_eq!(flow.value(), best);
    }

    #[test]
    fn lattice_linear_predicates_are_meet_closed_and_sound(seed in any::<u64>(), j in 1usize..4) {
        let net = layered(seed);
        let c = implications(seed, &net, j, 2);
        let all = oracle::all_cuts(&net).unwrap();
        prop_assert!(oracle::meet_closed(&oracle::filter_cuts(&all, &c)));
        prop_assert_eq!(oracle::check_lattice_linear(&net, &c).unwrap(), Ok(()));
        let ud = uniformly_directed(&net);
        prop_assert!(oracle::meet_closed(&oracle::filter_cuts(&all, &ud)));
    }

    #[test]
    fn advancement_modes_agree(seed in any::<u64>(), j in 0usize..5) {
        let net = layered(seed);
        let flow = compute_max_flow(&net);
        let c = implications(seed, &net, j, 2);
        let strong = least_sat_min_cut(&net, &flow, &c).unwrap();
        for advancement in [Advancement::EdgeScan, Advancement::Single] {
            let other = solve_with(&net, &flow, &c, &Cut::bottom(&net), SolveOptions { advancement }).unwrap();
            prop_assert_eq!(&other.outcome, &strong.outcome);
        }
    }

    #[test]
    fn every_slice_is_the_ideal_lattice_of_its_irreducibles(seed in any::<u64>(), j in 0usize..4) {
        let net = layered(seed);
        let flow = compute_max_flow(&net);
        // Single-vertex premises keep the conjunction regular.
        let c = implications(seed, &net, j, 1);
        let slice = oracle::filter_cuts(&oracle::all_min_cuts(&net).unwrap(), &c);
        let Some(poset) = compute_irreducibles(&net, &flow, &c).unwrap() else {
            prop_assert!(slice.is_empty());
            return Ok(());
        };
        // Each member is the join of the irreducibles below it.
        for m in &slice {
            let below = (0..poset.len()).filter(|&i| poset.elements()[i].leq(m));
            prop_assert_eq!(&poset.join_of(below), m);
        }
        prop_assert_eq!(oracle::count_ideals(poset.elements()).unwrap(), slice.len());
        let mut listed = Vec::new();
        enumerate_ideals(&poset, None, |c| { listed.push(c.clone()); ControlFlow::<()>::Continue(()) });
        prop_assert_eq!(listed.len(), slice.len());
        prop_assert_eq!(sides(&listed), sides(&slice));
    }
}

/// Walks a random maximal chain bottom to top of the cut lattice.
fn random_maximal_chain(rng: &mut ChaCha8Rng, net: &FlowNetwork<u64>) -> Vec<Cut> {
    let mut order: Vec<usize> = net.inner_vertices().collect();
    order.shuffle(rng);
    let mut cut = Cut::bottom(net);
    let mut chain = vec![cut.clone()];
    for v in order {
        let mut s = cut.s_side().clone();
        s.insert(v);
        cut = Cut::from_set(net, s).unwrap();
        chain.push(cut.clone());
    }
    chain
}

#[test]
fn implications_flip_at_most_twice_on_maximal_chains() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for seed in 0..200u64 {
        let net = layered(seed);
        let p = random_implicational(&mut rng, &net, 3);
        let chain = random_maximal_chain(&mut rng, &net);
        let flips = chain
            .windows(2)
            .filter(|w| p.evaluate(&w[0]) != p.evaluate(&w[1]))
            .count();
        assert!(flips <= 2, "seed {seed}: {flips} flips");
        assert!(p.transition_bound().is_some_and(|b| flips <= b));
    }
}

#[test]
fn unconstrained_least_cut_is_residual_reach() {
    for seed in 0..40u64 {
        let net = layered(seed);
        let flow = compute_max_flow(&net);
        let trace = least_sat_min_cut(&net, &flow, &Always).unwrap();
        let want = oracle::least_element(&oracle::all_min_cuts(&net).unwrap()).unwrap();
        assert_eq!(trace.found(), Some(&want));
        assert!(Always.forbidden(&want).is_empty());
    }
}
