//! JSON predicate files.
//!
//! A file holds an array of items, combined by conjunction. Lattice-linear
//! items carry a `type`:
//!
//! ```json
//! [{"type": "implication", "if": [2, 3], "then": 4},
//!  {"type": "require_source", "vertex": 2},
//!  {"type": "forbid_source", "vertex": 5},
//!  {"type": "uniformly_directed"}]
//! ```
//!
//! General expressions nest `{"op": "and" | "or" | "not", "args": [...]}`
//! over leaves `{"atom": "in_s", "vertex": 2}`, `{"atom": "card_le", "k": 1}`
//! and `{"atom": "card_ge", "k": 1}`. Vertex ids are 1-based, as in graph
//! files. A single item may be given without the enclosing array.

use serde::{Deserialize, Serialize};

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::network::FlowNetwork;
use crate::predicates::{
    forbid_source_side, general_expression, implicational, require_source_side, uniformly_directed, Conjunction, Expr,
    GeneralPredicate,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum LatticeItem {
    Implication {
        #[serde(rename = "if")]
        premise: Vec<usize>,
        then: usize,
    },
    RequireSource {
        vertex: usize,
    },
    ForbidSource {
        vertex: usize,
    },
    UniformlyDirected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    And,
    Or,
    Not,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "atom", rename_all = "snake_case", deny_unknown_fields)]
pub enum Atom {
    InS { vertex: usize },
    CardLe { k: usize },
    CardGe { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneralItem {
    Op { op: Op, args: Vec<GeneralItem> },
    Atom(Atom),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PredicateItem {
    Lattice(LatticeItem),
    General(GeneralItem),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    Many(Vec<PredicateItem>),
    One(PredicateItem),
}

/// Parses a predicate file.
pub fn parse_predicates(text: &str) -> Result<Vec<PredicateItem>> {
    let parsed: OneOrMany = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: format!("predicate file: {e}"),
    })?;
    Ok(match parsed {
        OneOrMany::Many(items) => items,
        OneOrMany::One(item) => vec![item],
    })
}

/// The predicates of a file, split by kind.
pub struct Predicates {
    pub lattice: Conjunction<'static>,
    /// Conjunction of the general items, if any.
    pub general: Option<GeneralPredicate>,
}

fn to_internal(id: usize, vertex_count: usize) -> Result<usize> {
    if id == 0 || id > vertex_count {
        return Err(Error::InvalidPredicate(format!(
            "vertex id {id} outside 1..={vertex_count}"
        )));
    }
    Ok(id - 1)
}

/// Builds predicates over `net` from file items whose ids refer to the
/// first `vertex_count` vertices (the original graph before any synthetic
/// terminals were appended).
pub fn build_predicates<C: Capacity>(
    net: &FlowNetwork<C>,
    vertex_count: usize,
    items: &[PredicateItem],
) -> Result<Predicates> {
    let id = |v: usize| to_internal(v, vertex_count);
    let mut lattice = Conjunction::new(Vec::new());
    let mut general = Vec::new();
    for item in items {
        match item {
            PredicateItem::Lattice(LatticeItem::Implication { premise, then }) => {
                let premise = premise.iter().map(|&v| id(v)).collect::<Result<Vec<_>>>()?;
                lattice.push(implicational(net, premise, id(*then)?)?);
            }
            PredicateItem::Lattice(LatticeItem::RequireSource { vertex }) => {
                lattice.push(require_source_side(net, id(*vertex)?)?)
            }
            PredicateItem::Lattice(LatticeItem::ForbidSource { vertex }) => {
                lattice.push(forbid_source_side(net, id(*vertex)?)?)
            }
            PredicateItem::Lattice(LatticeItem::UniformlyDirected) => lattice.push(uniformly_directed(net)),
            PredicateItem::General(g) => general.push(to_expr(g, &id)?),
        }
    }
    let general = match general.len() {
        0 => None,
        1 => Some(general_expression(net, general.pop().expect("one"))?),
        _ => Some(general_expression(net, Expr::And(general))?),
    };
    Ok(Predicates { lattice, general })
}

fn to_expr(item: &GeneralItem, id: &dyn Fn(usize) -> Result<usize>) -> Result<Expr> {
    Ok(match item {
        GeneralItem::Atom(Atom::InS { vertex }) => Expr::InS(id(*vertex)?),
        GeneralItem::Atom(Atom::CardLe { k }) => Expr::CardLe(*k),
        GeneralItem::Atom(Atom::CardGe { k }) => Expr::CardGe(*k),
        GeneralItem::Op { op, args } => {
            let args = args.iter().map(|a| to_expr(a, id)).collect::<Result<Vec<_>>>()?;
            match op {
                Op::And => Expr::And(args),
                Op::Or => Expr::Or(args),
                Op::Not => {
                    let [arg]: [Expr; 1] = args
                        .try_into()
                        .map_err(|_| Error::InvalidPredicate("\"not\" takes exactly one argument".into()))?;
                    Expr::negate(arg)
                }
            }
        }
    })
}
