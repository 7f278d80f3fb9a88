use super::{bits, full_mask, ColourPartition};
use crate::{Error, Graph, Result};

/// Exact chromatic number.
///
/// Edgeless and bipartite graphs are answered directly and may have any
/// order. Everything else goes through the DSATUR search, which needs
/// `n <= 64`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.size() == 0 {
        return Ok(1);
    }
    if g.is_bipartite()? {
        return Ok(2);
    }
    let adj = g.masks()?;
    Ok(chi_within(&adj, full_mask(adj.len())))
}

/// Whether `g` has a proper colouring with at most `k` colours.
pub fn is_colourable(g: &Graph, k: usize) -> Result<bool> {
    if g.order() == 0 {
        return Ok(true);
    }
    let adj = g.masks()?;
    Ok(colour_within(&adj, full_mask(adj.len()), k).is_some())
}

/// Some colouring with exactly `chi(g)` classes.
pub fn chromatic_colouring(g: &Graph) -> Result<ColourPartition> {
    let chi = chromatic_number(g)?;
    let adj = g.masks()?;
    let classes = colour_within(&adj, full_mask(adj.len()), chi).expect("chi colours suffice");
    Ok(ColourPartition::from_masks(&classes))
}

/// Chromatic number of the subgraph induced by `within` (0 when empty).
pub(crate) fn chi_within(adj: &[u64], within: u64) -> usize {
    if within == 0 {
        return 0;
    }
    let lower = greedy_clique(adj, within);
    let upper = dsatur_greedy(adj, within);
    (lower..upper)
        .find(|&k| colour_within(adj, within, k).is_some())
        .unwrap_or(upper)
}

/// Maximal cliques grown greedily from every start vertex; the largest size
/// found bounds the chromatic number from below.
fn greedy_clique(adj: &[u64], within: u64) -> usize {
    bits(within)
        .map(|v| {
            let mut cand = adj[v] & within;
            let mut size = 1;
            while cand != 0 {
                let w = bits(cand).max_by_key(|&w| (adj[w] & cand).count_ones()).unwrap();
                cand &= adj[w];
                size += 1;
            }
            size
        })
        .max()
        .unwrap_or(0)
}

fn pick(adj: &[u64], classes: &[u64], uncoloured: u64) -> (usize, usize) {
    bits(uncoloured)
        .map(|v| {
            let sat = classes.iter().filter(|&&c| c & adj[v] != 0).count();
            let deg = (adj[v] & uncoloured).count_ones() as usize;
            (v, sat, deg)
        })
        .max_by_key(|&(v, sat, deg)| (sat, deg, std::cmp::Reverse(v)))
        .map(|(v, sat, _)| (v, sat))
        .unwrap()
}

/// Number of colours DSATUR uses without backtracking.
fn dsatur_greedy(adj: &[u64], within: u64) -> usize {
    let mut classes: Vec<u64> = vec![];
    let mut uncoloured = within;
    while uncoloured != 0 {
        let (v, _) = pick(adj, &classes, uncoloured);
        match classes.iter_mut().find(|c| **c & adj[v] == 0) {
            Some(c) => *c |= 1 << v,
            None => classes.push(1 << v),
        }
        uncoloured &= !(1 << v);
    }
    classes.len()
}

/// A colouring of `within` with at most `k` classes, found by DSATUR
/// backtracking. A new colour is only ever opened once, which removes the
/// symmetry between unused colours.
pub(crate) fn colour_within(adj: &[u64], within: u64, k: usize) -> Option<Vec<u64>> {
    if within == 0 {
        return Some(vec![]);
    }
    if k == 0 {
        return None;
    }
    let mut classes = Vec::with_capacity(k);
    search(adj, &mut classes, within, k).then_some(classes)
}

fn search(adj: &[u64], classes: &mut Vec<u64>, uncoloured: u64, k: usize) -> bool {
    if uncoloured == 0 {
        return true;
    }
    let (v, sat) = pick(adj, classes, uncoloured);
    if sat >= k {
        return false;
    }
    let rest = uncoloured & !(1 << v);
    for c in 0..classes.len() {
        if classes[c] & adj[v] == 0 {
            classes[c] |= 1 << v;
            if search(adj, classes, rest, k) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    if classes.len() < k {
        classes.push(1 << v);
        if search(adj, classes, rest, k) {
            return true;
        }
        classes.pop();
    }
    false
}
