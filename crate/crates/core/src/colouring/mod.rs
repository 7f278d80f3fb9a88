//! Exact colouring searches on small graphs.
//!
//! The search kernels work on single-word adjacency masks, so every routine
//! here is limited to 64 vertices on top of its configured oracle cap.

mod chromatic;
mod count;
mod domination;
mod edge;
mod partitions;

use serde::Serialize;

pub use chromatic::{chromatic_colouring, chromatic_number, is_colourable};
pub use count::count_proper_colourings;
pub use domination::domination_number;
pub use edge::{bipartite_edge_colouring, chromatic_index};
pub use partitions::{convention_partitions, enumerate_chromatic_partitions, for_each_chromatic_partition};

use crate::{Error, Graph, Result};

/// Vertices of a mask in increasing order.
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A partition of the vertex set into independent colour classes.
///
/// Classes are kept in canonical order: by decreasing size, ties broken by
/// smallest member. Class `i` carries colour `c_{i+1}`. Each class lists its
/// vertices in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ColourPartition {
    classes: Vec<Vec<usize>>,
}

impl ColourPartition {
    /// Validates `classes` against `g` and puts them in canonical order.
    pub fn new(g: &Graph, classes: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.order();
        let mut seen = vec![false; n];
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for (k, &v) in class.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                if let Some(&w) = class[k + 1..].iter().find(|&&w| g.has_edge(v, w)) {
                    return Err(Error::InvalidPartition(format!(
                        "adjacent vertices {v} and {w} share a class"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is uncoloured")));
        }
        Ok(Self::canonical(classes))
    }

    /// Builds from a colour per vertex. Colour labels only need to be
    /// distinct, not contiguous.
    pub fn from_colours(g: &Graph, colours: &[usize]) -> Result<Self> {
        if colours.len() != g.order() {
            return Err(Error::InvalidPartition(format!(
                "{} colours for {} vertices",
                colours.len(),
                g.order()
            )));
        }
        let mut by_colour = std::collections::BTreeMap::<usize, Vec<usize>>::new();
        for (v, &c) in colours.iter().enumerate() {
            by_colour.entry(c).or_default().push(v);
        }
        Self::new(g, by_colour.into_values().collect())
    }

    /// Trusted constructor for classes produced by the search kernels.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        Self::canonical(masks.iter().map(|&m| bits(m).collect()).collect())
    }

    fn canonical(mut classes: Vec<Vec<usize>>) -> Self {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Self { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn size_vector(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Colour index (0-based, in canonical class order) of every vertex.
    pub fn colour_of(&self) -> Vec<usize> {
        let n = self.classes.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v] = c;
            }
        }
        out
    }

    pub(crate) fn masks(&self) -> Vec<u64> {
        self.classes
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }
}

/// A chromatic partition whose size vector was shown to be lexicographically
/// largest by the convention search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConventionCertificate {
    partition: ColourPartition,
    lex_max: bool,
}

impl ConventionCertificate {
    pub fn partition(&self) -> &ColourPartition {
        &self.partition
    }

    /// Always true for certificates returned by [`convention_partitions`].
    pub fn is_lex_max(&self) -> bool {
        self.lex_max
    }
}
