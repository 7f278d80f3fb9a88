use super::chromatic_number;
use crate::transforms::line_graph;
use crate::{Error, Graph, Result};

/// Chromatic index, as the chromatic number of the line graph.
///
/// Bipartite graphs take the König shortcut (`chi' = Delta`), with a
/// colouring available from [`bipartite_edge_colouring`]; that keeps graphs
/// with more than 64 edges in reach.
pub fn chromatic_index(g: &Graph) -> Result<usize> {
    if g.size() == 0 {
        return Err(Error::Edgeless);
    }
    if g.is_bipartite()? {
        return Ok(g.degree_profile()?.max);
    }
    chromatic_number(&line_graph(g)?)
}

/// A proper edge colouring of a bipartite graph with `Delta` colours.
///
/// Entry `i` is the colour of edge `i` of `g.edges()`. Each edge takes a
/// colour free at its first endpoint; if that colour is busy at the second
/// endpoint, the alternating path through it is flipped first. In a
/// bipartite graph that path cannot come back to the first endpoint.
pub fn bipartite_edge_colouring(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_bipartite()? {
        return Err(Error::NotBipartite);
    }
    let edges = g.edges();
    let delta = g.degrees().into_iter().max().unwrap_or(0);
    // at[v][c]: the edge of colour c at v.
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; delta]; g.order()];
    let mut colour = vec![usize::MAX; edges.len()];
    let free = |at: &[Vec<Option<usize>>], v: usize| at[v].iter().position(Option::is_none).unwrap();
    let other = |e: usize, x: usize| if edges[e].0 == x { edges[e].1 } else { edges[e].0 };
    for (i, &(u, v)) in edges.iter().enumerate() {
        let a = free(&at, u);
        if at[v][a].is_some() {
            let b = free(&at, v);
            let mut path = vec![];
            let (mut x, mut c) = (v, a);
            while let Some(e) = at[x][c] {
                path.push(e);
                x = other(e, x);
                c = if c == a { b } else { a };
            }
            for &e in &path {
                let (p, q) = edges[e];
                at[p][colour[e]] = None;
                at[q][colour[e]] = None;
            }
            for &e in &path {
                let (p, q) = edges[e];
                colour[e] = if colour[e] == a { b } else { a };
                at[p][colour[e]] = Some(e);
                at[q][colour[e]] = Some(e);
            }
            debug_assert!(at[u][a].is_none() && at[v][a].is_none());
        }
        colour[i] = a;
        at[u][a] = Some(i);
        at[v][a] = Some(i);
    }
    Ok(colour)
}
