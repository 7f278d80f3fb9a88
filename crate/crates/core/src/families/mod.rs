//! Generators for the parametric families and named graphs.
//!
//! Index layouts:
//! - path and cycle: vertices `0..n` in order along the path or cycle;
//! - star `S(1,k)`: centre 0, leaves `1..=k`;
//! - wheel with rim `n`: rim `0..n` in cyclic order, hub `n`;
//! - ladder `P_n □ P_2`: vertex `(i, j)` is `2i + j`;
//! - complete multipartite: parts occupy consecutive index ranges in the
//!   order given.

mod catalog;

use std::fmt;
use std::str::FromStr;

pub use catalog::{catalog, named_graph, Construction, NamedGraphRecord};

use crate::{Error, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `S(1,leaves)`.
    Star {
        leaves: usize,
    },
    /// `C_rim + K_1`.
    Wheel {
        rim: usize,
    },
    /// `P_n □ P_2`.
    Ladder {
        n: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Petersen,
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match self {
            FamilySpec::Path { n } if *n < 1 => bad("path needs n >= 1".into()),
            FamilySpec::Cycle { n } if *n < 3 => bad("cycle needs n >= 3".into()),
            FamilySpec::Complete { n } if *n < 1 => bad("complete graph needs n >= 1".into()),
            FamilySpec::Star { leaves } if *leaves < 1 => bad("star needs at least one leaf".into()),
            FamilySpec::Wheel { rim } if *rim < 3 => bad("wheel needs rim >= 3".into()),
            FamilySpec::Ladder { n } if *n < 2 => bad("ladder needs n >= 2".into()),
            FamilySpec::CompleteMultipartite { parts } if parts.len() < 2 => {
                bad("complete multipartite graph needs at least two parts".into())
            }
            FamilySpec::CompleteMultipartite { parts } if parts.contains(&0) => {
                bad("complete multipartite parts must be non-empty".into())
            }
            _ => Ok(()),
        }
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => *n,
            FamilySpec::Star { leaves } => leaves + 1,
            FamilySpec::Wheel { rim } => rim + 1,
            FamilySpec::Ladder { n } => 2 * n,
            FamilySpec::CompleteMultipartite { parts } => parts.iter().sum(),
            FamilySpec::Petersen => 10,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Star { leaves } => write!(f, "star:{leaves}"),
            FamilySpec::Wheel { rim } => write!(f, "wheel:{rim}"),
            FamilySpec::Ladder { n } => write!(f, "ladder:{n}"),
            FamilySpec::CompleteMultipartite { parts } => {
                let p: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", p.join(","))
            }
            FamilySpec::Petersen => write!(f, "petersen"),
        }
    }
}

/// Parses `family:param[,param...]`, e.g. `cycle:9`, `wheel:5`,
/// `multipartite:2,2,2`, `petersen`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<usize> = if args.is_empty() {
            vec![]
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| Error::InvalidFamily(format!("bad parameter {a:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let one = || match params.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::InvalidFamily(format!("{name} takes exactly one parameter"))),
        };
        let spec = match name {
            "path" => FamilySpec::Path { n: one()? },
            "cycle" => FamilySpec::Cycle { n: one()? },
            "complete" => FamilySpec::Complete { n: one()? },
            "star" => FamilySpec::Star { leaves: one()? },
            "wheel" => FamilySpec::Wheel { rim: one()? },
            "ladder" => FamilySpec::Ladder { n: one()? },
            "multipartite" | "complete_multipartite" => FamilySpec::CompleteMultipartite { parts: params },
            "petersen" if params.is_empty() => FamilySpec::Petersen,
            _ => return Err(Error::InvalidFamily(format!("unknown family {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Path { n } => path(*n),
        FamilySpec::Cycle { n } => cycle(*n),
        FamilySpec::Complete { n } => complete(*n),
        FamilySpec::Star { leaves } => Graph::new(leaves + 1, (1..=*leaves).map(|v| (0, v))),
        FamilySpec::Wheel { rim } => wheel(*rim),
        FamilySpec::Ladder { n } => ladder(*n),
        FamilySpec::CompleteMultipartite { parts } => complete_multipartite(parts),
        FamilySpec::Petersen => named_graph("petersen"),
    }
}

/// Parses a graph source: `named:<name>`, `g6:<graph6>`, `file:<path>` (first
/// non-empty line read as graph6), or a family spec such as `cycle:9`.
pub fn parse_source(text: &str) -> Result<Graph> {
    let text = text.trim();
    if let Some(name) = text.strip_prefix("named:") {
        named_graph(name)
    } else if let Some(code) = text.strip_prefix("g6:") {
        crate::graph::parse_graph6(code)
    } else if let Some(path) = text.strip_prefix("file:") {
        let body = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        let line = body
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::Graph6(format!("{path} is empty")))?;
        crate::graph::parse_graph6(line.strip_prefix(">>graph6<<").unwrap_or(line))
    } else {
        generate(&text.parse()?)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily("cycle needs n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("complete graph needs n >= 1".into()));
    }
    Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

pub fn wheel(rim: usize) -> Result<Graph> {
    let c = cycle(rim)?;
    Graph::new(rim + 1, c.edges().into_iter().chain((0..rim).map(|v| (v, rim))))
}

pub fn ladder(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidFamily("ladder needs n >= 2".into()));
    }
    let mut edges = vec![];
    for i in 0..n {
        edges.push((2 * i, 2 * i + 1));
        if i + 1 < n {
            edges.push((2 * i, 2 * i + 2));
            edges.push((2 * i + 1, 2 * i + 3));
        }
    }
    Graph::new(2 * n, edges)
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    FamilySpec::CompleteMultipartite { parts: parts.to_vec() }.validate()?;
    let mut part_of = vec![];
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let n = part_of.len();
    let part_of = &part_of;
    Graph::new(
        n,
        (0..n).flat_map(|j| (0..j).filter(move |&i| part_of[i] != part_of[j]).map(move |i| (i, j))),
    )
}

/// Hamiltonian cycle `0..n` plus chords `i -> i + pattern[i mod len]`, with
/// the pattern repeated `exponent` times.
///
/// The result must be simple and cubic: every chord has to be answered by the
/// opposite shift at its far end.
pub fn lcf_graph(pattern: &[i64], exponent: usize) -> Result<Graph> {
    let n = pattern.len() * exponent;
    if pattern.is_empty() || exponent == 0 {
        return Err(Error::Lcf("empty pattern".into()));
    }
    if n % 2 == 1 {
        return Err(Error::Lcf(format!("order {n} is odd")));
    }
    let ni = n as i64;
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let s = pattern[i % pattern.len()];
        if s.abs() <= 1 || s.abs() >= ni {
            return Err(Error::Lcf(format!("shift {s} out of range for order {n}")));
        }
        let j = (i as i64 + s).rem_euclid(ni) as usize;
        edges.push((i, j));
    }
    let g = Graph::new(n, edges)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::Lcf(format!(
            "chords collide: vertex {v} has degree {} instead of 3",
            g.degree(v)
        )));
    }
    Ok(g)
}

/// Cycle `C_n` on `0..n` with `pendants` leaves `n..n+pendants` hung on `host`.
pub fn thorn_cycle(n: usize, host: usize, pendants: usize) -> Result<Graph> {
    let c = cycle(n)?;
    if host >= n {
        return Err(Error::InvalidFamily(format!("host {host} not on the cycle C{n}")));
    }
    if pendants == 0 {
        return Err(Error::InvalidFamily("thorn cycle needs at least one pendant".into()));
    }
    Graph::new(
        n + pendants,
        c.edges().into_iter().chain((n..n + pendants).map(|p| (host, p))),
    )
}

/// `G*_t`: `G` plus `t` new vertices `n..n+t`, each adjacent to every vertex
/// of `G` except vertex 0.
pub fn g_star(g: &Graph, t: usize) -> Result<Graph> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidFamily("G*_t needs a graph of order >= 2".into()));
    }
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let fresh = (n..n + t).flat_map(|w| (1..n).map(move |v| (v, w)));
    Graph::new(n + t, g.edges().into_iter().chain(fresh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn family_sizes() {
        for n in 1..9 {
            assert_eq!(path(n).unwrap().size(), n - 1);
            assert_eq!(complete(n).unwrap().size(), n * (n - 1) / 2);
        }
        for n in 3..9 {
            assert_eq!(cycle(n).unwrap().size(), n);
            assert_eq!(wheel(n).unwrap().size(), 2 * n);
        }
        for n in 2..7 {
            assert_eq!(ladder(n).unwrap().size(), 3 * n - 2);
        }
        let parts = [3, 2, 2, 1];
        let total: usize = parts.iter().sum();
        let squares: usize = parts.iter().map(|r| r * r).sum();
        assert_eq!(
            complete_multipartite(&parts).unwrap().size(),
            (total * total - squares) / 2
        );
    }

    #[test]
    fn wheel_layout() {
        let w = wheel(5).unwrap();
        assert_eq!((w.order(), w.size(), w.degree(5)), (6, 10, 5));
    }

    #[test]
    fn ladder_is_bipartite() {
        let l = ladder(4).unwrap();
        assert_eq!((l.order(), l.size()), (8, 10));
        assert!(l.is_bipartite().unwrap());
        assert!(l.has_edge(2, 3));
    }

    #[test]
    fn octahedron() {
        let g = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!((g.order(), g.size()), (6, 12));
    }

    #[test]
    fn invalid_parameters() {
        assert!(cycle(2).is_err());
        assert!(wheel(2).is_err());
        assert!(ladder(1).is_err());
        assert!(complete_multipartite(&[3]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert!("hypercube:3".parse::<FamilySpec>().is_err());
        assert!("path:x".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "path:7",
            "cycle:9",
            "complete:4",
            "star:3",
            "wheel:5",
            "ladder:4",
            "multipartite:2,2,2",
            "petersen",
        ] {
            let spec: FamilySpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(generate(&spec).unwrap().order(), spec.order());
        }
    }

    #[test]
    fn lcf_examples() {
        let heawood = lcf_graph(&[5, -5], 7).unwrap();
        assert_eq!((heawood.order(), heawood.size()), (14, 21));
        assert!(heawood.is_bipartite().unwrap());
        let franklin = lcf_graph(&[5, -5], 6).unwrap();
        assert_eq!((franklin.order(), franklin.size()), (12, 18));
        let nauru = lcf_graph(&[5, -9, 7, -7, 9, -5], 4).unwrap();
        assert_eq!((nauru.order(), nauru.size()), (24, 36));
    }

    #[test]
    fn lcf_errors() {
        assert!(matches!(lcf_graph(&[3, -3, 3], 1), Err(Error::Lcf(_))));
        // Shift 3 on 4 vertices duplicates the cycle edge i ~ i - 1.
        assert!(matches!(lcf_graph(&[3], 4), Err(Error::Lcf(_))));
        assert_eq!(lcf_graph(&[2], 4).unwrap(), complete(4).unwrap());
        assert!(matches!(lcf_graph(&[1, -1], 2), Err(Error::Lcf(_))));
        // Shift 3 everywhere on 8 vertices gives a 4-regular graph.
        assert!(matches!(lcf_graph(&[3], 8), Err(Error::Lcf(_))));
    }

    #[test]
    fn thorn_cycles() {
        let t = thorn_cycle(5, 0, 3).unwrap();
        assert_eq!((t.order(), t.degree(0)), (8, 5));
        let t = thorn_cycle(5, 0, 1).unwrap();
        assert_eq!((t.order(), t.size()), (6, 6));
        let t = thorn_cycle(3, 2, 2).unwrap();
        assert_eq!((t.order(), t.degree_profile().unwrap().max), (5, 4));
        assert!(thorn_cycle(5, 5, 1).is_err());
        assert!(thorn_cycle(5, 0, 0).is_err());
    }

    #[test]
    fn g_star_examples() {
        let k3 = complete(3).unwrap();
        let g = g_star(&k3, 2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!((g.degree(3), g.degree(4)), (2, 2));
        assert_eq!(g_star(&k3, 0).unwrap(), k3);
        let p3 = g_star(&complete(2).unwrap(), 1).unwrap();
        assert!(are_isomorphic(&p3, &path(3).unwrap()).unwrap());
        let split = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g_star(&split, 1), Err(Error::Disconnected));
    }
}
