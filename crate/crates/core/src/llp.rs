//! Least min-cut satisfying a lattice-linear predicate, by repeated
//! advancement of forbidden vertices.

use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::max_flow::Flow;
use crate::network::FlowNetwork;
use crate::predicates::{min_cut_forbidden, min_cut_forbidden_closure, FeasibleSet, LatticeLinear};
use crate::vertex_set::VertexSet;

/// How the min-cut half of each round advances.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Advancement {
    /// Searches the predicate first, then advances to the residual closure of
    /// the result. Every forbidden vertex of the conjunction is moved each
    /// round.
    #[default]
    Strong,
    /// Both searches run on the current cut in parallel; the min-cut search
    /// is the one-hop edge scan.
    EdgeScan,
    /// As `EdgeScan`, but only the smallest forbidden vertex moves.
    Single,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub advancement: Advancement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Cut),
    Infeasible,
}

/// Result of a solve with per-round instrumentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveTrace {
    /// Rounds executed, including the final round that finds nothing
    /// forbidden.
    pub rounds: usize,
    /// `(|F_MC|, |F_B|)` for each round.
    pub per_round_forbidden: Vec<(usize, usize)>,
    pub outcome: Outcome,
    /// Truth-value flips of the predicate along the cuts visited, including
    /// the intermediate cuts after predicate advancement.
    pub transitions_observed: usize,
}

impl SolveTrace {
    pub fn found(&self) -> Option<&Cut> {
        match &self.outcome {
            Outcome::Found(c) => Some(c),
            Outcome::Infeasible => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        self.outcome == Outcome::Infeasible
    }
}

/// Least min-cut satisfying `pred`, starting from the bottom cut.
pub fn least_sat_min_cut<C, P>(net: &FlowNetwork<C>, flow: &Flow<C>, pred: &P) -> Result<SolveTrace>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
{
    least_sat_min_cut_from(net, flow, pred, &Cut::bottom(net))
}

/// Least min-cut satisfying `pred` that refines `start`.
pub fn least_sat_min_cut_from<C, P>(net: &FlowNetwork<C>, flow: &Flow<C>, pred: &P, start: &Cut) -> Result<SolveTrace>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
{
    solve_with(net, flow, pred, start, SolveOptions::default())
}

struct Transitions<'p, P: ?Sized> {
    pred: &'p P,
    last: Option<(Cut, bool)>,
    flips: usize,
}

impl<P: LatticeLinear + ?Sized> Transitions<'_, P> {
    fn visit(&mut self, cut: &Cut) {
        match &self.last {
            Some((prev, _)) if prev == cut => {}
            _ => {
                let value = self.pred.evaluate(cut);
                if matches!(self.last, Some((_, v)) if v != value) {
                    self.flips += 1;
                }
                self.last = Some((cut.clone(), value));
            }
        }
    }
}

fn check_forbidden<C: Capacity>(net: &FlowNetwork<C>, set: &VertexSet) -> Result<()> {
    for v in [net.source(), net.sink()] {
        if set.contains(v) {
            return Err(Error::TerminalForbidden(v));
        }
    }
    Ok(())
}

pub fn solve_with<C, P>(
    net: &FlowNetwork<C>,
    flow: &Flow<C>,
    pred: &P,
    start: &Cut,
    options: SolveOptions,
) -> Result<SolveTrace>
where
    C: Capacity,
    P: LatticeLinear + ?Sized,
{
    flow.check_against(net)?;
    net.check_cut(start)?;
    let mut cut = start.clone();
    let mut per_round = Vec::new();
    let mut transitions = Transitions {
        pred,
        last: None,
        flips: 0,
    };
    transitions.visit(&cut);
    let finish = |per_round_forbidden: Vec<(usize, usize)>, outcome, flips| SolveTrace {
        rounds: per_round_forbidden.len(),
        per_round_forbidden,
        outcome,
        transitions_observed: flips,
    };

    loop {
        let (f_mc, f_b) = match options.advancement {
            Advancement::Strong => {
                let f_b = match pred.forbidden(&cut) {
                    FeasibleSet::Forbidden(f) => f,
                    FeasibleSet::Infeasible => {
                        per_round.push((0, 0));
                        return Ok(finish(per_round, Outcome::Infeasible, transitions.flips));
                    }
                };
                check_forbidden(net, &f_b)?;
                let mid = cut.advanced(&f_b);
                transitions.visit(&mid);
                match min_cut_forbidden_closure(net, flow, &mid)? {
                    FeasibleSet::Forbidden(f_mc) => (f_mc, f_b),
                    FeasibleSet::Infeasible => {
                        per_round.push((0, f_b.len()));
                        return Ok(finish(per_round, Outcome::Infeasible, transitions.flips));
                    }
                }
            }
            Advancement::EdgeScan | Advancement::Single => {
                let (mc, b) = rayon::join(|| min_cut_forbidden(net, flow, &cut), || pred.forbidden(&cut));
                match (mc?, b) {
                    (FeasibleSet::Forbidden(f_mc), FeasibleSet::Forbidden(f_b)) => {
                        check_forbidden(net, &f_b)?;
                        (f_mc, f_b)
                    }
                    (_, b) => {
                        let f_b = b.as_forbidden().map_or(0, VertexSet::len);
                        per_round.push((0, f_b));
                        return Ok(finish(per_round, Outcome::Infeasible, transitions.flips));
                    }
                }
            }
        };
        per_round.push((f_mc.len(), f_b.len()));
        if f_mc.is_empty() && f_b.is_empty() {
            if !pred.evaluate(&cut) {
                return Err(Error::InvalidPredicate("predicate is false but forbids nothing".into()));
            }
            return Ok(finish(per_round, Outcome::Found(cut), transitions.flips));
        }
        let mut moved = f_b.union(&f_mc);
        if options.advancement == Advancement::Single {
            let first = moved.first().expect("nonempty");
            moved = VertexSet::from_ids(moved.universe(), [first]);
        }
        let next = cut.advanced(&moved);
        if next == cut {
            return Err(Error::InvalidPredicate(
                "forbidden vertex already on the source side".into(),
            ));
        }
        cut = next;
        transitions.visit(&cut);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::max_flow::compute_max_flow;
    use crate::predicates::{conjunction, forbid_source_side, implicational, require_source_side, Always};

    fn star(n: usize) -> FlowNetwork<u64> {
        FlowNetwork::new(n + 2, 0, n + 1, (1..=n).flat_map(|u| [(0, u, 1), (u, n + 1, 1)])).unwrap()
    }

    // s=0 -> v1=1 (2), v1 -> v2=2 (1), v2 -> t=3 (2)
    fn path() -> FlowNetwork<u64> {
        FlowNetwork::new(4, 0, 3, [(0, 1, 2), (1, 2, 1), (2, 3, 2)]).unwrap()
    }

    #[test]
    fn unconstrained_on_star_is_bottom_in_one_round() {
        let g = star(2);
        let f = compute_max_flow(&g);
        let trace = least_sat_min_cut(&g, &f, &Always).unwrap();
        assert_eq!(trace.found(), Some(&Cut::bottom(&g)));
        assert_eq!(trace.rounds, 1);
    }

    #[test]
    fn require_source_side_on_star() {
        let g = star(2);
        let f = compute_max_flow(&g);
        let p = require_source_side(&g, 1).unwrap();
        let trace = least_sat_min_cut(&g, &f, &p).unwrap();
        assert_eq!(trace.found().unwrap().vertices(), vec![1]);
        assert!(trace.rounds <= 3);
    }

    #[test]
    fn unconstrained_path_reaches_bottleneck() {
        let g = path();
        let f = compute_max_flow(&g);
        let trace = least_sat_min_cut(&g, &f, &Always).unwrap();
        assert_eq!(trace.found().unwrap().vertices(), vec![1]);
        assert_eq!(trace.rounds, 2);
        assert_eq!(trace.per_round_forbidden, vec![(1, 0), (0, 0)]);
    }

    #[test]
    fn nothing_above_a_cut_past_the_only_min_cut() {
        let g = path();
        let f = compute_max_flow(&g);
        let start = Cut::from_vertices(&g, [2]).unwrap();
        assert!(least_sat_min_cut_from(&g, &f, &Always, &start).unwrap().is_infeasible());
        let top = Cut::top(&g);
        assert!(least_sat_min_cut_from(&g, &f, &Always, &top).unwrap().is_infeasible());
    }

    #[test]
    fn fixed_point_start() {
        let g = path();
        let f = compute_max_flow(&g);
        let start = Cut::from_vertices(&g, [1]).unwrap();
        let trace = least_sat_min_cut_from(&g, &f, &Always, &start).unwrap();
        assert_eq!(trace.found(), Some(&start));
        assert_eq!(trace.rounds, 1);
    }

    #[test]
    fn contradiction_is_infeasible() {
        let g = star(2);
        let f = compute_max_flow(&g);
        let c = conjunction(vec![
            Box::new(require_source_side(&g, 1).unwrap()),
            Box::new(forbid_source_side(&g, 1).unwrap()),
        ]);
        assert!(least_sat_min_cut(&g, &f, &c).unwrap().is_infeasible());
    }

    #[test]
    fn all_modes_agree() {
        // s -> a (2), a -> b (2), b -> c (1), c -> t (1), plus x hanging off s
        let g = FlowNetwork::<u64>::new(
            6,
            0,
            5,
            [(0, 1, 2), (1, 2, 2), (2, 3, 1), (3, 5, 1), (0, 4, 1), (4, 5, 1)],
        )
        .unwrap();
        let f = compute_max_flow(&g);
        let p = implicational(&g, [2], 4).unwrap();
        let mut answers = Vec::new();
        let mut rounds = Vec::new();
        for advancement in [Advancement::Strong, Advancement::EdgeScan, Advancement::Single] {
            let t = solve_with(&g, &f, &p, &Cut::bottom(&g), SolveOptions { advancement }).unwrap();
            answers.push(t.found().cloned());
            rounds.push(t.rounds);
        }
        assert!(answers.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(answers[0].as_ref().unwrap().vertices(), vec![1, 2, 4]);
        assert!(rounds[0] <= rounds[1] && rounds[1] <= rounds[2]);
    }

    #[test]
    fn non_maximum_flow_is_rejected() {
        let g = path();
        let zero = Flow::from_edge_flows(&g, vec![0, 0, 0]).unwrap();
        assert_eq!(
            least_sat_min_cut(&g, &zero, &Always).unwrap_err(),
            Error::NotMaximumFlow
        );
    }

    struct ForbidsSink(usize);
    impl crate::predicates::CutPredicate for ForbidsSink {
        fn evaluate(&self, _: &Cut) -> bool {
            false
        }
    }
    impl LatticeLinear for ForbidsSink {
        fn forbidden(&self, cut: &Cut) -> FeasibleSet {
            FeasibleSet::Forbidden(VertexSet::from_ids(cut.s_side().universe(), [self.0]))
        }
    }

    #[test]
    fn terminal_in_forbidden_set_is_a_contract_violation() {
        let g = path();
        let f = compute_max_flow(&g);
        assert_eq!(
            least_sat_min_cut(&g, &f, &ForbidsSink(3)).unwrap_err(),
            Error::TerminalForbidden(3)
        );
    }

    #[test]
    fn transitions_are_counted_along_the_chain() {
        let g = star(2);
        let f = compute_max_flow(&g);
        let p = require_source_side(&g, 2).unwrap();
        let trace = least_sat_min_cut(&g, &f, &p).unwrap();
        assert_eq!(trace.transitions_observed, 1);
    }
}
