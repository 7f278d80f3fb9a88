use super::Graph;
use crate::{Error, Result};

/// Largest order accepted by [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 16;

/// Backtracking isomorphism test with degree and neighbour-degree pruning.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISOMORPHISM_LIMIT {
            return Err(Error::CapExceeded {
                what: "isomorphism test",
                limit: ISOMORPHISM_LIMIT,
                order: x.order(),
                overridable: false,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let (ga, ha) = (g.masks()?, h.masks()?);
    let (gs, hs) = (signatures(&ga), signatures(&ha));
    let mut a = gs.clone();
    let mut b = hs.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }
    // Map g's vertices in BFS-ish order of decreasing constraint.
    let n = g.order();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((ga[v] & placed).count_ones(), gs[v].0, std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    let mut map = vec![usize::MAX; n];
    Ok(extend(&ga, &ha, &gs, &hs, &order, 0, &mut map, 0))
}

type Signature = (u32, Vec<u32>);

fn signatures(adj: &[u64]) -> Vec<Signature> {
    adj.iter()
        .map(|&m| {
            let mut nd: Vec<u32> = (0..adj.len())
                .filter(|&w| m >> w & 1 == 1)
                .map(|w| adj[w].count_ones())
                .collect();
            nd.sort_unstable();
            (m.count_ones(), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend(
    ga: &[u64],
    ha: &[u64],
    gs: &[Signature],
    hs: &[Signature],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..ha.len() {
        if used >> w & 1 == 1 || gs[v] != hs[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let gu = ga[v] >> u & 1 == 1;
            let hu = ha[w] >> map[u] & 1 == 1;
            gu == hu
        });
        if consistent {
            map[v] = w;
            if extend(ga, ha, gs, hs, order, depth + 1, map, used | 1 << w) {
                return true;
            }
            map[v] = usize::MAX;
        }
    }
    false
}
