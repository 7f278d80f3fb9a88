//! Exhaustive generation of small graphs up to isomorphism.

use std::collections::BTreeMap;

use super::Graph;
use crate::{Error, Result};

/// Largest order [`enumerate_graphs`] accepts.
pub const ENUMERATION_LIMIT: usize = 7;

/// One graph per isomorphism class of order `n`, in canonical-code order.
///
/// Classes of order `n` are grown from the classes of order `n - 1` by adding
/// a vertex with every possible neighbourhood, then deduplicated by canonical
/// code. Every graph arises this way since deleting any vertex leaves a graph
/// of order `n - 1`.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::CapExceeded {
            what: "graph enumeration",
            limit: ENUMERATION_LIMIT,
            order: n,
            overridable: false,
        });
    }
    if n == 0 {
        return Ok(if connected_only { vec![] } else { vec![Graph::empty(0)] });
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for m in 2..=n {
        let mut classes = BTreeMap::new();
        for adj in &level {
            for nbrs in 0u64..1 << (m - 1) {
                let mut next = adj.clone();
                for (v, row) in next.iter_mut().enumerate() {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                next.push(nbrs);
                let (code, canon) = canonical(&next);
                classes.entry(code).or_insert(canon);
            }
        }
        level = classes.into_values().collect();
    }
    let mut out: Vec<Graph> = level.iter().map(|a| Graph::from_masks(a)).collect();
    if connected_only {
        out.retain(|g| g.is_connected().unwrap_or(false));
    }
    Ok(out)
}

fn pair_bit(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

fn code_under(adj: &[u64], perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for (u, &row) in adj.iter().enumerate() {
        let mut rest = row & !((1u64 << (u + 1)) - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            code |= 1 << pair_bit(perm[u], perm[v]);
        }
    }
    code
}

/// Smallest upper-triangle code over relabellings that list vertices by
/// decreasing invariant signature, plus the relabelled adjacency.
///
/// The signature (degree, sorted neighbour degrees) is isomorphism-invariant,
/// so restricting to signature-respecting relabellings still yields a
/// canonical form.
pub(crate) fn canonical(adj: &[u64]) -> (u64, Vec<u64>) {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let sig: Vec<(u32, Vec<u32>)> = adj
        .iter()
        .map(|&m| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| m >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (m.count_ones(), nd)
        })
        .collect();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by(|&a, &b| sig[b].cmp(&sig[a]));
    // Consecutive runs of equal signature; each run permutes freely.
    let mut runs: Vec<Vec<usize>> = vec![];
    for &v in &verts {
        match runs.last_mut() {
            Some(run) if sig[run[0]] == sig[v] => run.push(v),
            _ => runs.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut best_perm = vec![0; n];
    let mut perm = vec![0usize; n];
    let mut slots: Vec<Vec<usize>> = vec![];
    let mut base = 0;
    for run in &runs {
        slots.push((base..base + run.len()).collect());
        base += run.len();
    }
    search_runs(adj, &runs, &slots, 0, &mut perm, &mut best, &mut best_perm);
    let mut canon = vec![0u64; n];
    for (u, &row) in adj.iter().enumerate() {
        for v in 0..n {
            if row >> v & 1 == 1 {
                canon[best_perm[u]] |= 1 << best_perm[v];
            }
        }
    }
    (best, canon)
}

fn search_runs(
    adj: &[u64],
    runs: &[Vec<usize>],
    slots: &[Vec<usize>],
    r: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
    best_perm: &mut Vec<usize>,
) {
    if r == runs.len() {
        let code = code_under(adj, perm);
        if code < *best {
            *best = code;
            best_perm.clone_from(perm);
        }
        return;
    }
    let mut order = runs[r].clone();
    permute(&mut order, 0, &mut |o| {
        for (i, &v) in o.iter().enumerate() {
            perm[v] = slots[r][i];
        }
        search_runs(adj, runs, slots, r + 1, perm, best, best_perm);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    /// Brute-force oracle: every labelled graph on `n` vertices, reduced to
    /// classes with the backtracking isomorphism test.
    fn brute_force_classes(n: usize, connected_only: bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut reps: Vec<Graph> = vec![];
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::new(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p),
            )
            .unwrap();
            if connected_only && !g.is_connected().unwrap() {
                continue;
            }
            if !reps.iter().any(|r| are_isomorphic(r, &g).unwrap()) {
                reps.push(g);
            }
        }
        reps.len()
    }

    #[test]
    fn small_counts_match_brute_force() {
        assert_eq!(brute_force_classes(3, true), 2);
        assert_eq!(brute_force_classes(4, true), 6);
        for n in 1..=5 {
            for connected in [false, true] {
                assert_eq!(
                    enumerate_graphs(n, connected).unwrap().len(),
                    brute_force_classes(n, connected),
                    "n={n} connected={connected}"
                );
            }
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(enumerate_graphs(1, true).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(5, true).unwrap().len(), 21);
        assert_eq!(enumerate_graphs(6, false).unwrap().len(), 156);
        assert_eq!(enumerate_graphs(6, true).unwrap().len(), 112);
    }

    #[test]
    fn classes_are_pairwise_distinct() {
        let gs = enumerate_graphs(5, false).unwrap();
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!are_isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn limit() {
        assert!(enumerate_graphs(8, true).is_err());
    }
}
