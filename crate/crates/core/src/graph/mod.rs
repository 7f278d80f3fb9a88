//! Simple undirected graphs on vertices `0..n`.
//!
//! Graphs are immutable once built. Every constructor in this crate documents
//! its index layout, so two graphs can be compared label-wise with `==`
//! rather than only up to isomorphism.

mod enumerate;
mod graph6;
mod iso;
mod vset;

use std::collections::VecDeque;
use std::fmt::Write as _;

pub use enumerate::{enumerate_graphs, ENUMERATION_LIMIT};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_LIMIT};
pub use iso::{are_isomorphic, ISOMORPHISM_LIMIT};
pub use vset::VertexSet;

use crate::config::WORD_LIMIT;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Degree statistics used by several bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DegreeProfile {
    pub max: usize,
    pub min: usize,
    /// Common degree when the graph is regular.
    pub regular: Option<usize>,
    /// Number of vertices of maximum degree.
    pub max_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![VertexSet::with_capacity(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { adj })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    /// Builds from single-word adjacency masks. Masks must be symmetric and
    /// loop-free; callers inside the crate guarantee it.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let adj = masks.iter().map(|&m| VertexSet::from_mask(m)).collect();
        let g = Self { adj };
        debug_assert!(g.is_symmetric());
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Edges in canonical order: lexicographic on `(min endpoint, max endpoint)`.
    ///
    /// Line graphs and expanded line graphs number their vertices by position
    /// in this list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// `N(v) ∪ {v}`.
    pub fn closed_neighbourhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.adj[v].clone();
        s.insert(v);
        Ok(s)
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        let degrees = self.degrees();
        let max = *degrees.iter().max().ok_or(Error::EmptyGraph)?;
        let min = *degrees.iter().min().ok_or(Error::EmptyGraph)?;
        Ok(DegreeProfile {
            max,
            min,
            regular: (max == min).then_some(max),
            max_count: degrees.iter().filter(|&&d| d == max).count(),
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|s| s.len() + 1 == n)
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_of(0).len() == self.order())
    }

    pub(crate) fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = vec![];
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for v in self.adj[u].iter() {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        out
    }

    pub fn is_bipartite(&self) -> Result<bool> {
        Ok(self.bipartition()?.is_some())
    }

    /// Two-colouring `(side 0, side 1)` when one exists. In each component
    /// the smallest vertex goes on side 0.
    pub fn bipartition(&self) -> Result<Option<(VertexSet, VertexSet)>> {
        let n = self.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut side = vec![None::<bool>; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in self.adj[u].iter() {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        let left = (0..n).filter(|&v| side[v] == Some(false)).collect();
        let right = (0..n).filter(|&v| side[v] == Some(true)).collect();
        Ok(Some((left, right)))
    }

    /// Complement on the same vertex indices. The complement of `K_1` is `K_1`.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.adj[u].contains(v)).collect())
            .collect();
        Graph { adj }
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&w| pos[w] != usize::MAX)
                    .map(|w| pos[w])
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Adjacency as single-word masks, for the exact search kernels.
    pub fn masks(&self) -> Result<Vec<u64>> {
        if self.order() > WORD_LIMIT {
            return Err(Error::CapExceeded {
                what: "bitmask search",
                limit: WORD_LIMIT,
                order: self.order(),
                overridable: false,
            });
        }
        Ok(self.adj.iter().map(|s| s.as_mask().unwrap()).collect())
    }

    fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, s)| !s.contains(u) && s.iter().all(|v| v < self.order() && self.adj[v].contains(u)))
    }

    /// DOT rendering: every vertex on its own line, then every edge in
    /// canonical order.
    pub fn to_dot(&self) -> String {
        dot(self.order(), self.edges().into_iter().map(|e| (e, false)))
    }
}

/// Shared DOT writer. Edges flagged `true` are drawn dashed.
pub(crate) fn dot(order: usize, edges: impl IntoIterator<Item = ((usize, usize), bool)>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..order {
        let _ = writeln!(out, "  {v};");
    }
    for ((u, v), dashed) in edges {
        if dashed {
            let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
