use crate::capacity::Capacity;
use crate::cut::Cut;
use crate::error::{Error, Result};
use crate::network::FlowNetwork;
use crate::vertex_set::VertexSet;

use super::CutPredicate;

/// Boolean expression over cuts.
///
/// `CardLe(k)` / `CardGe(k)` compare the number of counted vertices on the
/// source side, where by default every non-terminal vertex is counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    InS(usize),
    CardLe(usize),
    CardGe(usize),
    And(Vec<Expr>),
    Or(Vec<Expr>),
    Not(Box<Expr>),
}

impl Expr {
    pub fn negate(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    fn vertices(&self, out: &mut Vec<usize>) {
        match self {
            Expr::InS(v) => out.push(*v),
            Expr::CardLe(_) | Expr::CardGe(_) => {}
            Expr::And(xs) | Expr::Or(xs) => xs.iter().for_each(|x| x.vertices(out)),
            Expr::Not(x) => x.vertices(out),
        }
    }
}

/// An evaluate-only predicate, used as the general half of a slice search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralPredicate {
    expr: Expr,
    counted: VertexSet,
    source: usize,
}

/// Validates `expr` against `net`. `InS` on the source is constantly true and
/// on the sink constantly false.
pub fn general_expression<C: Capacity>(net: &FlowNetwork<C>, expr: Expr) -> Result<GeneralPredicate> {
    let mut ids = Vec::new();
    expr.vertices(&mut ids);
    if let Some(&v) = ids.iter().find(|&&v| v >= net.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: net.vertex_count(),
        });
    }
    Ok(GeneralPredicate {
        expr,
        counted: VertexSet::from_ids(net.vertex_count(), net.inner_vertices()),
        source: net.source(),
    })
}

impl GeneralPredicate {
    /// Restricts the cardinality atoms to `counted` (e.g. to skip synthetic
    /// vertices).
    pub fn with_counted(mut self, counted: VertexSet) -> Self {
        self.counted = counted;
        self
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }

    fn eval(&self, e: &Expr, cut: &Cut, size: usize) -> bool {
        match e {
            Expr::InS(v) => *v == self.source || cut.contains(*v),
            Expr::CardLe(k) => size <= *k,
            Expr::CardGe(k) => size >= *k,
            Expr::And(xs) => xs.iter().all(|x| self.eval(x, cut, size)),
            Expr::Or(xs) => xs.iter().any(|x| self.eval(x, cut, size)),
            Expr::Not(x) => !self.eval(x, cut, size),
        }
    }
}

impl CutPredicate for GeneralPredicate {
    fn evaluate(&self, cut: &Cut) -> bool {
        let size = cut.s_side().intersection(&self.counted).len();
        self.eval(&self.expr, cut, size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Expr::*;

    fn star(n: usize) -> FlowNetwork<u64> {
        FlowNetwork::new(n + 2, 0, n + 1, (1..=n).flat_map(|u| [(0, u, 1), (u, n + 1, 1)])).unwrap()
    }

    #[test]
    fn atoms() {
        let g = star(3);
        let bottom = Cut::bottom(&g);
        assert!(general_expression(&g, Expr::negate(InS(1))).unwrap().evaluate(&bottom));
        assert!(general_expression(&g, InS(0)).unwrap().evaluate(&bottom));
        assert!(!general_expression(&g, InS(4)).unwrap().evaluate(&Cut::top(&g)));
        let two = Cut::from_vertices(&g, [1, 3]).unwrap();
        assert!(general_expression(&g, CardLe(2)).unwrap().evaluate(&two));
        assert!(!general_expression(&g, CardLe(1)).unwrap().evaluate(&two));
        assert!(general_expression(&g, CardGe(2)).unwrap().evaluate(&two));
    }

    #[test]
    fn combinators() {
        let g = star(2);
        let xor = Or(vec![
            And(vec![InS(1), Expr::negate(InS(2))]),
            And(vec![Expr::negate(InS(1)), InS(2)]),
        ]);
        let p = general_expression(&g, xor).unwrap();
        let hits = [vec![], vec![1], vec![2], vec![1, 2]]
            .into_iter()
            .filter(|s| p.evaluate(&Cut::from_vertices(&g, s.clone()).unwrap()))
            .count();
        assert_eq!(hits, 2);
    }

    #[test]
    fn counted_restriction() {
        let g = star(3);
        let p = general_expression(&g, CardLe(0))
            .unwrap()
            .with_counted(VertexSet::from_ids(5, [1]));
        assert!(p.evaluate(&Cut::from_vertices(&g, [2, 3]).unwrap()));
        assert!(!p.evaluate(&Cut::from_vertices(&g, [1]).unwrap()));
    }

    #[test]
    fn unknown_vertex_is_rejected() {
        let g = star(2);
        assert!(matches!(
            general_expression(&g, And(vec![InS(1), Expr::negate(InS(9))])),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }
}
