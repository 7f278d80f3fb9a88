//! Named graphs, loaded from `data/catalog.toml` and validated on load.

use std::sync::OnceLock;

use serde::Deserialize;

use super::lcf_graph;
use crate::{Error, Graph, Result};

const BUILTIN: &str = include_str!("../../data/catalog.toml");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    Lcf { pattern: Vec<i64>, exponent: usize },
    Edges(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraphRecord {
    pub name: String,
    pub title: String,
    pub order: usize,
    pub size: usize,
    pub degree: usize,
    pub bipartite: bool,
    pub construction: Construction,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    graph: Vec<RawRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    name: String,
    title: String,
    order: usize,
    size: usize,
    degree: usize,
    bipartite: bool,
    lcf: Option<Vec<i64>>,
    exponent: Option<usize>,
    edges: Option<String>,
}

impl NamedGraphRecord {
    pub fn build(&self) -> Result<Graph> {
        match &self.construction {
            Construction::Lcf { pattern, exponent } => lcf_graph(pattern, *exponent),
            Construction::Edges(edges) => Graph::new(self.order, edges.iter().copied()),
        }
    }

    /// Rebuilds the graph and checks it against the recorded invariants.
    pub fn validate(&self) -> Result<Graph> {
        let fail = |detail: String| Error::Catalog {
            name: self.name.clone(),
            detail,
        };
        let g = self.build().map_err(|e| fail(e.to_string()))?;
        if g.order() != self.order {
            return Err(fail(format!("order {} != recorded {}", g.order(), self.order)));
        }
        if g.size() != self.size {
            return Err(fail(format!("size {} != recorded {}", g.size(), self.size)));
        }
        let profile = g.degree_profile().map_err(|e| fail(e.to_string()))?;
        if profile.regular != Some(self.degree) {
            return Err(fail(format!(
                "degrees span {}..={}, recorded {}-regular",
                profile.min, profile.max, self.degree
            )));
        }
        let bipartite = g.is_bipartite().map_err(|e| fail(e.to_string()))?;
        if bipartite != self.bipartite {
            return Err(fail(format!("bipartite is {bipartite}, recorded {}", self.bipartite)));
        }
        Ok(g)
    }
}

/// Parses and validates a catalog in the `catalog.toml` format.
pub fn load_catalog(text: &str) -> Result<Vec<NamedGraphRecord>> {
    let raw: RawFile = toml::from_str(text).map_err(|e| Error::Catalog {
        name: "<file>".into(),
        detail: e.to_string(),
    })?;
    let mut out: Vec<NamedGraphRecord> = Vec::with_capacity(raw.graph.len());
    for r in raw.graph {
        let fail = |detail: String| Error::Catalog {
            name: r.name.clone(),
            detail,
        };
        if out.iter().any(|o| o.name == r.name) {
            return Err(fail("duplicate name".into()));
        }
        let construction = match (r.lcf, r.exponent, r.edges) {
            (Some(pattern), Some(exponent), None) => Construction::Lcf { pattern, exponent },
            (None, None, Some(text)) => Construction::Edges(parse_edges(&text).map_err(fail)?),
            _ => return Err(fail("needs exactly one of lcf+exponent or edges".into())),
        };
        let record = NamedGraphRecord {
            name: r.name.clone(),
            title: r.title,
            order: r.order,
            size: r.size,
            degree: r.degree,
            bipartite: r.bipartite,
            construction,
        };
        record.validate()?;
        out.push(record);
    }
    Ok(out)
}

fn parse_edges(text: &str) -> std::result::Result<Vec<(usize, usize)>, String> {
    text.split_whitespace()
        .map(|tok| {
            let (a, b) = tok.split_once('-').ok_or_else(|| format!("bad edge token {tok:?}"))?;
            let a = a.parse().map_err(|_| format!("bad edge token {tok:?}"))?;
            let b = b.parse().map_err(|_| format!("bad edge token {tok:?}"))?;
            Ok((a, b))
        })
        .collect()
}

/// The built-in catalog. Panics if the shipped data fails validation.
pub fn catalog() -> &'static [NamedGraphRecord] {
    static CATALOG: OnceLock<Vec<NamedGraphRecord>> = OnceLock::new();
    CATALOG.get_or_init(|| match load_catalog(BUILTIN) {
        Ok(c) => c,
        Err(e) => panic!("built-in graph catalog is invalid: {e}"),
    })
}

pub fn named_graph(name: &str) -> Result<Graph> {
    let key = name.to_ascii_lowercase().replace([' ', '_'], "-");
    catalog()
        .iter()
        .find(|r| r.name == key)
        .ok_or_else(|| Error::UnknownGraph(name.to_string()))?
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_loads() {
        let names: Vec<&str> = catalog().iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names.len(), 20);
        for expected in [
            "petersen",
            "heawood",
            "folkman",
            "cubical",
            "ellingham-horton-54",
            "ellingham-horton-78",
        ] {
            assert!(names.contains(&expected), "{expected} missing");
        }
    }

    #[test]
    fn named_examples() {
        let h = named_graph("heawood").unwrap();
        assert_eq!((h.order(), h.size()), (14, 21));
        assert_eq!(h.degree_profile().unwrap().regular, Some(3));
        let f = named_graph("Folkman").unwrap();
        assert_eq!((f.order(), f.size()), (20, 40));
        assert_eq!(f.degree_profile().unwrap().regular, Some(4));
        let q3 = named_graph("cubical").unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert!(matches!(named_graph("nope"), Err(Error::UnknownGraph(_))));
    }

    #[test]
    fn validation_catches_bad_records() {
        let wrong_size = r#"
            [[graph]]
            name = "k4"
            title = "K4"
            order = 4
            size = 5
            degree = 3
            bipartite = false
            edges = "0-1 0-2 0-3 1-2 1-3 2-3"
        "#;
        assert!(matches!(load_catalog(wrong_size), Err(Error::Catalog { .. })));
        let wrong_bipartite = r#"
            [[graph]]
            name = "heawood"
            title = "Heawood"
            order = 14
            size = 21
            degree = 3
            bipartite = false
            lcf = [5, -5]
            exponent = 7
        "#;
        assert!(matches!(load_catalog(wrong_bipartite), Err(Error::Catalog { .. })));
        let both = r#"
            [[graph]]
            name = "x"
            title = "x"
            order = 4
            size = 6
            degree = 3
            bipartite = false
            lcf = [2]
            exponent = 4
            edges = "0-1"
        "#;
        assert!(load_catalog(both).is_err());
    }
}
