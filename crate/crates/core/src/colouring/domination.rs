use super::{bits, full_mask};
use crate::{Error, Graph, OracleCaps, Result};

/// Size of a minimum dominating set.
///
/// Branches on the lowest undominated vertex: some member of its closed
/// neighbourhood must be chosen. A counting bound cuts branches that cannot
/// beat the incumbent.
pub fn domination_number(g: &Graph, caps: &OracleCaps) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    caps.check_domination(n)?;
    let closed: Vec<u64> = g.masks()?.iter().enumerate().map(|(v, &m)| m | 1 << v).collect();
    let reach = closed.iter().map(|m| m.count_ones() as usize).max().unwrap();
    let mut best = greedy(&closed, n);
    branch(&closed, full_mask(n), 0, 0, reach, &mut best);
    Ok(best)
}

fn greedy(closed: &[u64], n: usize) -> usize {
    let mut undominated = full_mask(n);
    let mut size = 0;
    while undominated != 0 {
        let v = (0..n).max_by_key(|&v| (closed[v] & undominated).count_ones()).unwrap();
        undominated &= !closed[v];
        size += 1;
    }
    size
}

fn branch(closed: &[u64], full: u64, dominated: u64, size: usize, reach: usize, best: &mut usize) {
    let undominated = full & !dominated;
    if undominated == 0 {
        *best = (*best).min(size);
        return;
    }
    let need = (undominated.count_ones() as usize).div_ceil(reach);
    if size + need >= *best {
        return;
    }
    let u = undominated.trailing_zeros() as usize;
    let mut options: Vec<usize> = bits(closed[u]).collect();
    options.sort_by_key(|&w| std::cmp::Reverse((closed[w] & undominated).count_ones()));
    for w in options {
        branch(closed, full, dominated | closed[w], size + 1, reach, best);
    }
}
