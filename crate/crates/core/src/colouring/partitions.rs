use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::chromatic::{chi_within, colour_within};
use super::{bits, full_mask, ColourPartition, ConventionCertificate};
use crate::{Error, Graph, OracleCaps, Result};

/// Calls `visit` once per partition of `V(g)` into exactly `chi(g)`
/// independent classes and returns how many there were.
///
/// Classes reach `visit` as vertex masks in no particular order. Each
/// partition is produced once: vertices are placed in a fixed order, and a
/// vertex may only open a new class, never pick among empty ones.
pub fn for_each_chromatic_partition(g: &Graph, caps: &OracleCaps, mut visit: impl FnMut(&[u64])) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    caps.check_partitions(g.order())?;
    let adj = g.masks()?;
    let chi = chi_within(&adj, full_mask(adj.len()));
    let order = placement_order(&adj);
    let mut classes = Vec::with_capacity(chi);
    let mut count = 0;
    place(&adj, &order, 0, chi, &mut classes, &mut |c| {
        count += 1;
        visit(c)
    });
    Ok(count)
}

/// All chromatic partitions, in canonical form and sorted.
pub fn enumerate_chromatic_partitions(g: &Graph, caps: &OracleCaps) -> Result<Vec<ColourPartition>> {
    let mut out = vec![];
    for_each_chromatic_partition(g, caps, |c| out.push(ColourPartition::from_masks(c)))?;
    out.sort();
    Ok(out)
}

/// Each vertex next is the one with most already-placed neighbours, so
/// conflicts surface early.
fn placement_order(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (adj[v] & placed).count_ones(),
                    adj[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(v);
        placed |= 1 << v;
    }
    order
}

fn place(adj: &[u64], order: &[usize], i: usize, chi: usize, classes: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
    if i == order.len() {
        if classes.len() == chi {
            visit(classes);
        }
        return;
    }
    // Too few vertices left to open the missing classes.
    if order.len() - i < chi - classes.len() {
        return;
    }
    let v = order[i];
    for c in 0..classes.len() {
        if classes[c] & adj[v] == 0 {
            classes[c] |= 1 << v;
            place(adj, order, i + 1, chi, classes, visit);
            classes[c] &= !(1 << v);
        }
    }
    if classes.len() < chi {
        classes.push(1 << v);
        place(adj, order, i + 1, chi, classes, visit);
        classes.pop();
    }
}

/// All chromatic partitions whose size vector is lexicographically largest.
///
/// Branch and bound: classes are chosen in canonical order, largest first,
/// and a branch is cut as soon as its size prefix falls below the best
/// complete vector found so far, or when the remaining vertices cannot be
/// coloured with the classes left.
pub fn convention_partitions(g: &Graph, caps: &OracleCaps) -> Result<Vec<ConventionCertificate>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    caps.check_partitions(g.order())?;
    let adj = g.masks()?;
    let mut search = Convention {
        adj: &adj,
        best: vec![],
        found: BTreeSet::new(),
        chosen: vec![],
    };
    let chi = chi_within(&adj, full_mask(adj.len()));
    search.run(full_mask(adj.len()), chi, None);
    let mut out: Vec<ConventionCertificate> = search
        .found
        .iter()
        .map(|c| ConventionCertificate {
            partition: ColourPartition::from_masks(c),
            lex_max: true,
        })
        .collect();
    out.sort_by(|a, b| a.partition.cmp(&b.partition));
    Ok(out)
}

struct Convention<'a> {
    adj: &'a [u64],
    best: Vec<usize>,
    found: BTreeSet<Vec<u64>>,
    chosen: Vec<u64>,
}

impl Convention<'_> {
    fn sizes(&self) -> Vec<usize> {
        self.chosen.iter().map(|c| c.count_ones() as usize).collect()
    }

    /// Compares the chosen prefix extended by `s` with the incumbent.
    fn prefix_cmp(&self, s: usize) -> Ordering {
        if self.best.is_empty() {
            return Ordering::Greater;
        }
        let mut prefix = self.sizes();
        prefix.push(s);
        prefix.as_slice().cmp(&self.best[..prefix.len()])
    }

    fn record(&mut self) {
        let sizes = self.sizes();
        match sizes.cmp(&self.best) {
            Ordering::Less => {}
            Ordering::Greater => {
                self.best = sizes;
                self.found.clear();
                self.found.insert(self.sorted_chosen());
            }
            Ordering::Equal => {
                self.found.insert(self.sorted_chosen());
            }
        }
    }

    fn sorted_chosen(&self) -> Vec<u64> {
        let mut c = self.chosen.clone();
        c.sort_unstable();
        c
    }

    /// `prev` is the size and smallest vertex of the last class chosen.
    fn run(&mut self, remaining: u64, k: usize, prev: Option<(usize, usize)>) {
        if k == 0 {
            if remaining == 0 {
                self.record();
            }
            return;
        }
        let r = remaining.count_ones() as usize;
        if r < k {
            return;
        }
        let hi = prev.map_or(r, |(s, _)| s).min(r + 1 - k);
        let lo = r.div_ceil(k);
        for s in (lo..=hi).rev() {
            if self.prefix_cmp(s) == Ordering::Less {
                break;
            }
            // Equal-sized classes appear in order of their smallest vertex.
            let floor = match prev {
                Some((ps, pmin)) if ps == s => above(pmin),
                _ => u64::MAX,
            };
            let mut candidates = vec![];
            independent_sets(self.adj, remaining & floor, s, 0, &mut |set| candidates.push(set));
            for set in candidates {
                // The incumbent may have improved while this level ran.
                if self.prefix_cmp(s) == Ordering::Less {
                    return;
                }
                let rest = remaining & !set;
                if k > 1 && colour_within(self.adj, rest, k - 1).is_none() {
                    continue;
                }
                if k == 1 && rest != 0 {
                    continue;
                }
                self.chosen.push(set);
                self.run(rest, k - 1, Some((s, set.trailing_zeros() as usize)));
                self.chosen.pop();
            }
        }
    }
}

/// Vertices strictly above `v`.
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

/// Every independent subset of `cand` with exactly `s` vertices, each
/// visited once.
fn independent_sets(adj: &[u64], cand: u64, s: usize, acc: u64, visit: &mut dyn FnMut(u64)) {
    if s == 0 {
        visit(acc);
        return;
    }
    if (cand.count_ones() as usize) < s {
        return;
    }
    for v in bits(cand) {
        let next = cand & above(v) & !adj[v];
        independent_sets(adj, next, s - 1, acc | 1 << v, visit);
        if ((cand & above(v)).count_ones() as usize) < s {
            break;
        }
    }
}
