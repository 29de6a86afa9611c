//! DIMACS max-flow text format.
//!
//! ```text
//! c comment
//! p max <vertices> <arcs>
//! n <id> s
//! n <id> t
//! a <tail> <head> <capacity>
//! ```
//!
//! Ids are 1-based in the file and 0-based in memory.

use std::fmt::Write as _;

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::network::RawNetwork;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn field<T: std::str::FromStr>(line: usize, what: &str, token: Option<&str>) -> Result<T> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {token:?}")))
}

/// Parses a network. Source and sink need not be terminal.
pub fn parse_dimacs<C: Capacity>(text: &str) -> Result<RawNetwork<C>> {
    let mut problem: Option<(usize, usize)> = None;
    let (mut source, mut sink) = (None, None);
    let mut arcs = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        let vertex = |line, token: Option<&str>, n: usize| -> Result<usize> {
            let id: usize = field(line, "vertex id", token)?;
            if id == 0 || id > n {
                return Err(parse_err(line, format!("vertex id {id} outside 1..={n}")));
            }
            Ok(id - 1)
        };
        match kind {
            "c" => continue,
            "p" => {
                if problem.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                if tokens.next() != Some("max") {
                    return Err(parse_err(line, "expected \"p max <n> <m>\""));
                }
                let n = field(line, "vertex count", tokens.next())?;
                let m = field(line, "arc count", tokens.next())?;
                problem = Some((n, m));
            }
            "n" => {
                let (n, _) = problem.ok_or_else(|| parse_err(line, "node line before problem line"))?;
                let v = vertex(line, tokens.next(), n)?;
                let slot = match tokens.next() {
                    Some("s") => &mut source,
                    Some("t") => &mut sink,
                    other => return Err(parse_err(line, format!("expected s or t, found {other:?}"))),
                };
                if slot.replace(v).is_some() {
                    return Err(parse_err(line, "terminal declared twice"));
                }
            }
            "a" => {
                let (n, _) = problem.ok_or_else(|| parse_err(line, "arc line before problem line"))?;
                let tail = vertex(line, tokens.next(), n)?;
                let head = vertex(line, tokens.next(), n)?;
                let cap: C = field(line, "capacity", tokens.next())?;
                if tail == head {
                    return Err(parse_err(line, format!("self-loop on vertex {}", tail + 1)));
                }
                arcs.push((tail, head, cap));
            }
            other => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
        if tokens.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (n, m) = problem.ok_or_else(|| parse_err(last_line, "missing problem line"))?;
    if arcs.len() != m {
        return Err(parse_err(
            last_line,
            format!("problem line declares {m} arcs, found {}", arcs.len()),
        ));
    }
    let source = source.ok_or_else(|| parse_err(last_line, "no source declared"))?;
    let sink = sink.ok_or_else(|| parse_err(last_line, "no sink declared"))?;
    RawNetwork::new(n, source, sink, arcs)
}

/// Prints `net` in the format read by [`parse_dimacs`].
pub fn write_dimacs<C: Capacity>(net: &RawNetwork<C>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p max {} {}", net.vertex_count(), net.edges().len());
    let _ = writeln!(out, "n {} s", net.source() + 1);
    let _ = writeln!(out, "n {} t", net.sink() + 1);
    for e in net.edges() {
        let _ = writeln!(out, "a {} {} {}", e.tail + 1, e.head + 1, e.capacity);
    }
    out
}
