use crate::error::{Error, Result};
use crate::network::FlowNetwork;
use crate::oracle::min_cut_value;

/// Search space limit, as a power of two, for [`count_integral_max_flows`].
const MAX_LOG_SPACE: u32 = 26;

/// Number of distinct integral flows of maximum value, by depth-first
/// assignment of edge values with conservation checked as soon as a vertex
/// has all its edges assigned. Only for tiny networks.
pub fn count_integral_max_flows(net: &FlowNetwork<u64>) -> Result<u64> {
    let log_space: f64 = net.edges().iter().map(|e| ((e.capacity + 1) as f64).log2()).sum();
    if log_space > MAX_LOG_SPACE as f64 {
        return Err(Error::OracleBudget {
            found: log_space.ceil() as usize,
            limit: MAX_LOG_SPACE as usize,
        });
    }
    let target = min_cut_value(net)?;
    // vertices whose last incident edge is e
    let mut closes = vec![Vec::new(); net.edge_count()];
    for v in net.inner_vertices() {
        let last = net.in_edges(v).iter().chain(net.out_edges(v)).max();
        if let Some(&e) = last {
            closes[e].push(v);
        }
    }
    let mut balance = vec![0i128; net.vertex_count()];
    Ok(search(net, &closes, 0, &mut balance, target))
}

fn search(net: &FlowNetwork<u64>, closes: &[Vec<usize>], e: usize, balance: &mut [i128], target: u64) -> u64 {
    if e == net.edge_count() {
        return u64::from(-balance[net.source()] == target as i128);
    }
    let edge = net.edges()[e];
    let mut total = 0;
    for f in 0..=edge.capacity {
        balance[edge.tail] -= f as i128;
        balance[edge.head] += f as i128;
        if closes[e].iter().all(|&v| balance[v] == 0) {
            total += search(net, closes, e + 1, balance, target);
        }
        balance[edge.tail] += f as i128;
        balance[edge.head] -= f as i128;
    }
    total
}
