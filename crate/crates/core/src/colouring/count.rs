use std::collections::HashMap;

use crate::{Error, Graph, OracleCaps, Result};

/// Number of proper colourings of `g` with colours from a palette of `k`,
/// i.e. the chromatic polynomial evaluated at `k`.
///
/// Deletion-contraction on sparse graphs, addition-contraction on dense
/// ones, with isolated and pendant vertices peeled off directly and results
/// memoised on the labelled adjacency.
pub fn count_proper_colourings(g: &Graph, k: u64, caps: &OracleCaps) -> Result<u128> {
    caps.check_counting(g.order())?;
    let adj = g.masks()?;
    let mut memo = HashMap::new();
    let value = poly(adj, i128::from(k), &mut memo).ok_or(Error::Overflow("colouring count"))?;
    Ok(u128::try_from(value).expect("colouring counts are non-negative"))
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &m)| (m & low) | ((m >> (v + 1)) << v))
        .collect()
}

/// Merges `v` into `u`.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let mut merged = adj.to_vec();
    let nv = merged[v] & !(1 << u);
    merged[u] |= nv;
    for w in super::bits(nv) {
        merged[w] |= 1 << u;
    }
    remove_vertex(&merged, v)
}

fn poly(adj: Vec<u64>, k: i128, memo: &mut HashMap<Vec<u64>, Option<i128>>) -> Option<i128> {
    let n = adj.len();
    if n == 0 {
        return Some(1);
    }
    if let Some(v) = adj.iter().position(|m| m.count_ones() <= 1) {
        let factor = if adj[v] == 0 { k } else { k - 1 };
        return factor.checked_mul(poly(remove_vertex(&adj, v), k, memo)?);
    }
    let m: usize = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
    let pairs = n * (n - 1) / 2;
    if m == pairs {
        return (0..n as i128).try_fold(1i128, |acc, i| acc.checked_mul(k - i));
    }
    if let Some(&cached) = memo.get(&adj) {
        return cached;
    }
    let value = if 2 * m > pairs {
        // P(G) = P(G + uv) + P(G / uv) for a non-edge uv.
        let u = (0..n).find(|&u| adj[u].count_ones() as usize + 1 < n).unwrap();
        let v = (0..n).find(|&v| v != u && adj[u] >> v & 1 == 0).unwrap();
        let mut added = adj.clone();
        added[u] |= 1 << v;
        added[v] |= 1 << u;
        poly(added, k, memo).and_then(|a| a.checked_add(poly(contract(&adj, u, v), k, memo)?))
    } else {
        // P(G) = P(G - uv) - P(G / uv), with u of minimum degree.
        let u = (0..n).min_by_key(|&u| adj[u].count_ones()).unwrap();
        let v = adj[u].trailing_zeros() as usize;
        let mut deleted = adj.clone();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        poly(deleted, k, memo).and_then(|a| a.checked_sub(poly(contract(&adj, u, v), k, memo)?))
    };
    memo.insert(adj, value);
    value
}
