//! Shared helpers for the integration tests: seeded random graphs and
//! brute-force oracles that share no code with the library's searches.

#![allow(dead_code)]

use rainbow_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `p = 1/2`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Rejection-sampled connected `G(n, 1/2)`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n);
        if g.is_connected().unwrap() {
            return g;
        }
    }
}

/// Connected graph of random order in `1..=max_n`.
pub fn random_connected_upto(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    random_connected(rng, n)
}

/// Every map `V -> 0..k` that is a proper colouring, visited in odometer
/// order.
pub fn for_each_proper(g: &Graph, k: usize, mut f: impl FnMut(&[usize])) {
    let n = g.order();
    if n == 0 || k == 0 {
        return;
    }
    let edges = g.edges();
    let mut c = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| c[u] != c[v]) {
            f(&c);
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_chi(g: &Graph) -> usize {
    (1..=g.order())
        .find(|&k| {
            let mut found = false;
            for_each_proper(g, k, |_| found = true);
            found
        })
        .unwrap()
}

pub fn brute_count(g: &Graph, k: usize) -> u128 {
    let mut count = 0;
    for_each_proper(g, k, |_| count += 1);
    count
}

/// Number of vertices whose closed neighbourhood sees all `k` colours.
pub fn brute_yield(g: &Graph, c: &[usize], k: usize) -> usize {
    g.vertices()
        .filter(|&v| {
            let mut seen = vec![false; k];
            seen[c[v]] = true;
            for w in g.neighbours(v).iter() {
                seen[c[w]] = true;
            }
            seen.iter().all(|&s| s)
        })
        .count()
}

/// `(chi, r_conv, r_min, r_max)` from every surjective proper
/// `chi`-colouring. The convention vector is the sorted class-size vector,
/// maximised lexicographically.
pub fn brute_r(g: &Graph) -> (usize, usize, usize, usize) {
    let k = brute_chi(g);
    let mut best_vec: Vec<usize> = vec![];
    let mut conv = usize::MAX;
    let (mut lo, mut hi) = (usize::MAX, 0);
    for_each_proper(g, k, |c| {
        let mut sizes = vec![0usize; k];
        for &x in c {
            sizes[x] += 1;
        }
        if sizes.contains(&0) {
            return;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let r = brute_yield(g, c, k);
        lo = lo.min(r);
        hi = hi.max(r);
        if sizes > best_vec {
            best_vec = sizes;
            conv = r;
        } else if sizes == best_vec {
            conv = conv.min(r);
        }
    });
    (k, conv, lo, hi)
}

pub fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
