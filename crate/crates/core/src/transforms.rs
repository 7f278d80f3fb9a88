//! Graph operators: disjoint union, join, corona, Chithra graphs, line graphs
//! and expanded line graphs.
//!
//! Index layouts:
//! - `disjoint_union(G, H)` and `join(G, H)`: `G` keeps `0..n1`, vertex `j` of
//!   `H` becomes `n1 + j`;
//! - `corona(G, H)`: `G` keeps `0..n1`, vertex `j` of the copy hung on host
//!   `v` is `n1 + v * n2 + j`;
//! - `chithra(G, W)`: new vertex `u_i` is `n + i`;
//! - `line_graph(G)`: line-vertex `i` is edge `i` of [`Graph::edges`];
//! - `expanded_line_graph(G)`: for edge `i = (a, b)` with `a < b`, the vertex
//!   inserted into the `a`-clique is `2i` and the one in the `b`-clique is
//!   `2i + 1`.

use serde::Serialize;

use crate::graph::dot;
use crate::{Error, Graph, Result};

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n1 = g.order();
    let shifted = h.edges().into_iter().map(|(u, v)| (u + n1, v + n1));
    Graph::new(n1 + h.order(), g.edges().into_iter().chain(shifted)).expect("shifted edges stay in range")
}

pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.order(), h.order());
    let cross = (0..n1).flat_map(|u| (0..n2).map(move |j| (u, n1 + j)));
    let union = disjoint_union(g, h);
    Graph::new(n1 + n2, union.edges().into_iter().chain(cross)).expect("cross edges stay in range")
}

/// One copy of `H` per vertex of `G`, each copy joined to its host.
pub fn corona(g: &Graph, h: &Graph) -> Graph {
    let (n1, n2) = (g.order(), h.order());
    let mut edges = g.edges();
    for v in 0..n1 {
        let base = n1 + v * n2;
        edges.extend(h.edges().into_iter().map(|(a, b)| (base + a, base + b)));
        edges.extend((0..n2).map(|j| (v, base + j)));
    }
    Graph::new(n1 * (1 + n2), edges).expect("corona layout stays in range")
}

/// `G` plus one new vertex per subset, adjacent to exactly that subset.
///
/// Subsets must be non-empty and must jointly cover `V(G)`. Repeats are
/// allowed.
pub fn chithra(g: &Graph, subsets: &[Vec<usize>]) -> Result<Graph> {
    let n = g.order();
    let mut covered = vec![false; n];
    let mut edges = g.edges();
    for (i, w) in subsets.iter().enumerate() {
        if w.is_empty() {
            return Err(Error::InvalidSubsets(format!("subset {i} is empty")));
        }
        for &v in w {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            covered[v] = true;
            edges.push((v, n + i));
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(Error::InvalidSubsets(format!("vertex {v} is not covered")));
    }
    Graph::new(n + subsets.len(), edges)
}

/// `L(G)`, with line-vertex `i` standing for edge `i` of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    // Edge indices incident with each vertex, in increasing order.
    let mut incident: Vec<Vec<usize>> = vec![vec![]; g.order()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    let mut line = vec![];
    for inc in &incident {
        for (k, &i) in inc.iter().enumerate() {
            line.extend(inc[k + 1..].iter().map(|&j| (i, j)));
        }
    }
    Graph::new(edges.len(), line)
}

/// The expanded line graph: a `v`-clique on `d(v)` vertices for every vertex
/// `v`, plus one broken edge per original edge linking its two inserted
/// vertices.
///
/// Solid and broken edges live apart, so the solid graph can be handed to the
/// colouring code without broken edges ever counting as adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedGraph {
    solid: Graph,
    broken: Vec<(usize, usize)>,
    cliques: Vec<Vec<usize>>,
    source_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeTag {
    Solid,
    Broken,
}

impl ExpandedGraph {
    /// Graph of the solid (clique) edges only.
    pub fn solid(&self) -> &Graph {
        &self.solid
    }

    /// Broken edges; entry `i` is `(u_{i,1}, u_{i,2}) = (2i, 2i + 1)`.
    pub fn broken(&self) -> &[(usize, usize)] {
        &self.broken
    }

    pub fn edge_pair(&self, i: usize) -> (usize, usize) {
        self.broken[i]
    }

    /// Vertices of the `v`-clique, in increasing order.
    pub fn clique(&self, v: usize) -> &[usize] {
        &self.cliques[v]
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    /// Edges of the original graph, in the order used for the pairs.
    pub fn source_edges(&self) -> &[(usize, usize)] {
        &self.source_edges
    }

    pub fn order(&self) -> usize {
        self.solid.order()
    }

    /// All edges with their tags, sorted by endpoints.
    pub fn tagged_edges(&self) -> Vec<((usize, usize), EdgeTag)> {
        let mut out: Vec<_> = self
            .solid
            .edges()
            .into_iter()
            .map(|e| (e, EdgeTag::Solid))
            .chain(self.broken.iter().map(|&e| (e, EdgeTag::Broken)))
            .collect();
        out.sort();
        out
    }

    /// Checks the structural invariants of the construction.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let eps = self.source_edges.len();
        if self.order() != 2 * eps {
            return Err(format!("{} vertices for {eps} edges", self.order()));
        }
        if self.broken.len() != eps {
            return Err("one broken edge per original edge expected".into());
        }
        let mut owner = vec![usize::MAX; self.order()];
        for (v, clique) in self.cliques.iter().enumerate() {
            for (k, &x) in clique.iter().enumerate() {
                if owner[x] != usize::MAX {
                    return Err(format!("vertex {x} sits in two cliques"));
                }
                owner[x] = v;
                if clique[k + 1..].iter().any(|&y| !self.solid.has_edge(x, y)) {
                    return Err(format!("clique of {v} is not complete"));
                }
            }
        }
        let solid_expected: usize = self
            .cliques
            .iter()
            .map(|c| c.len() * c.len().saturating_sub(1) / 2)
            .sum();
        if self.solid.size() != solid_expected {
            return Err("solid edges leave their cliques".into());
        }
        let mut matched = vec![false; self.order()];
        let mut linked = std::collections::BTreeSet::new();
        for &(x, y) in &self.broken {
            if matched[x] || matched[y] {
                return Err("broken edges are not a matching".into());
            }
            matched[x] = true;
            matched[y] = true;
            let pair = (owner[x].min(owner[y]), owner[x].max(owner[y]));
            if pair.0 == pair.1 || !linked.insert(pair) {
                return Err(format!("cliques {pair:?} linked twice or to themselves"));
            }
        }
        Ok(())
    }

    /// DOT rendering with broken edges dashed.
    pub fn to_dot(&self) -> String {
        dot(
            self.order(),
            self.tagged_edges().into_iter().map(|(e, t)| (e, t == EdgeTag::Broken)),
        )
    }
}

pub fn expanded_line_graph(g: &Graph) -> Result<ExpandedGraph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::Edgeless);
    }
    let mut cliques: Vec<Vec<usize>> = vec![vec![]; g.order()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        cliques[a].push(2 * i);
        cliques[b].push(2 * i + 1);
    }
    let mut solid = vec![];
    for c in &cliques {
        for (k, &x) in c.iter().enumerate() {
            solid.extend(c[k + 1..].iter().map(|&y| (x, y)));
        }
    }
    Ok(ExpandedGraph {
        solid: Graph::new(2 * edges.len(), solid)?,
        broken: (0..edges.len()).map(|i| (2 * i, 2 * i + 1)).collect(),
        cliques,
        source_edges: edges,
    })
}

/// Merges each broken pair `(2i, 2i + 1)` into vertex `i`.
pub fn contract_broken(x: &ExpandedGraph) -> Graph {
    let m = x.broken.len();
    let edges = x.solid.edges().into_iter().map(|(a, b)| (a / 2, b / 2));
    Graph::new(m, edges).expect("contracted endpoints stay in range")
}
