//! Nordhaus-Gaddum style bounds on rainbow numbers of a graph, its
//! complement and its line graph, and the domination inequalities.

use num_rational::Ratio;
use serde::Serialize;

use super::r_conv;
use crate::colouring::domination_number;
use crate::transforms::line_graph;
use crate::{Graph, OracleCaps, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    /// `i` complement, `ii` line graph, `iii` regular complement, `iv` domination.
    pub family: &'static str,
    pub statement: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub held: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NGBoundReport {
    pub n: usize,
    pub r: usize,
    pub r_complement: usize,
    pub r_line: Option<usize>,
    pub gamma: Option<usize>,
    pub entries: Vec<BoundEntry>,
    /// Families not evaluated, with the reason.
    pub skipped: Vec<String>,
}

impl NGBoundReport {
    pub fn all_held(&self) -> bool {
        self.entries.iter().all(|e| e.held)
    }

    pub fn family(&self, f: &str) -> impl Iterator<Item = &BoundEntry> {
        let f = f.to_string();
        self.entries.iter().filter(move |e| e.family == f)
    }
}

fn entry(
    family: &'static str,
    statement: &'static str,
    lhs: impl ToString,
    rhs: impl ToString,
    held: bool,
) -> BoundEntry {
    BoundEntry {
        family,
        statement,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        held,
    }
}

/// Evaluates every bound that applies to `g`, using `r_conv` throughout.
///
/// `L(K_1)` is taken to be `K_1`; other edgeless graphs have no line graph
/// and skip family (ii).
pub fn ng_bounds(g: &Graph, caps: &OracleCaps) -> Result<NGBoundReport> {
    let n = g.order();
    let r = r_conv(g, caps)?.value;
    let rc = r_conv(&g.complement(), caps)?.value;
    let profile = g.degree_profile()?;
    let mut entries = vec![];
    let mut skipped = vec![];

    let (sum, prod) = (r + rc, r * rc);
    // 2 sqrt(n) <= s  is  4n <= s^2 for s >= 0.
    entries.push(entry(
        "i",
        "2*sqrt(n) <= r(G) + r(co-G)",
        format!("2*sqrt({n})"),
        sum,
        4 * n <= sum * sum,
    ));
    entries.push(entry("i", "r(G) + r(co-G) <= 2n", sum, 2 * n, sum <= 2 * n));
    entries.push(entry("i", "n <= r(G) * r(co-G)", n, prod, n <= prod));
    entries.push(entry("i", "r(G) * r(co-G) <= n^2", prod, n * n, prod <= n * n));

    let r_line = if n == 1 {
        Some(1)
    } else if g.size() == 0 {
        skipped.push("ii: edgeless graph has no line graph".into());
        None
    } else {
        match r_conv(&line_graph(g)?, caps) {
            Ok(v) => Some(v.value),
            Err(e) if e.is_cap_violation() => {
                skipped.push(format!("ii: {e}"));
                None
            }
            Err(e) => return Err(e),
        }
    };
    if let Some(rl) = r_line {
        let (ell, delta) = (profile.max_count, profile.max);
        let (s, p) = (r + rl, r * rl);
        entries.push(entry("ii", "2 <= r(G) + r(L(G))", 2, s, 2 <= s));
        entries.push(entry(
            "ii",
            "r(G) + r(L(G)) <= n + l*Delta",
            s,
            n + ell * delta,
            s <= n + ell * delta,
        ));
        entries.push(entry("ii", "1 <= r(G) * r(L(G))", 1, p, 1 <= p));
        entries.push(entry(
            "ii",
            "r(G) * r(L(G)) <= n*l*Delta",
            p,
            n * ell * delta,
            p <= n * ell * delta,
        ));
    }

    match profile.regular {
        Some(t) => {
            let denom = ((n - t) * (t + 1)) as i64;
            let n_i = n as i64;
            let lo_sum = Ratio::new(n_i * (n_i + 1), denom);
            let lo_prod = Ratio::new(n_i * n_i, denom);
            let s = Ratio::from_integer(sum as i64);
            let p = Ratio::from_integer(prod as i64);
            entries.push(entry(
                "iii",
                "r(G) + r(co-G) >= n(n+1)/((n-t)(t+1))",
                sum,
                lo_sum,
                s >= lo_sum,
            ));
            entries.push(entry(
                "iii",
                "r(G) * r(co-G) >= n^2/((n-t)(t+1))",
                prod,
                lo_prod,
                p >= lo_prod,
            ));
        }
        None => skipped.push("iii: graph is not regular".into()),
    }

    let gamma = match domination_number(g, caps) {
        Ok(gm) => Some(gm),
        Err(e) if e.is_cap_violation() => {
            skipped.push(format!("iv: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    if let Some(gm) = gamma {
        let delta = profile.max;
        let by_min = (n + 1 - profile.min).div_ceil(2);
        entries.push(entry("iv", "gamma(G) <= n - Delta", gm, n - delta, gm <= n - delta));
        entries.push(entry(
            "iv",
            "r(G) + gamma(G) <= 2n - Delta",
            r + gm,
            2 * n - delta,
            r + gm <= 2 * n - delta,
        ));
        entries.push(entry(
            "iv",
            "r(G) * gamma(G) <= n(n - Delta)",
            r * gm,
            n * (n - delta),
            r * gm <= n * (n - delta),
        ));
        entries.push(entry(
            "iv",
            "gamma(G) <= ceil((n + 1 - delta)/2)",
            gm,
            by_min,
            gm <= by_min,
        ));
        entries.push(entry(
            "iv",
            "r(G) + gamma(G) <= n + ceil((n + 1 - delta)/2)",
            r + gm,
            n + by_min,
            r + gm <= n + by_min,
        ));
        entries.push(entry(
            "iv",
            "r(G) * gamma(G) <= n * ceil((n + 1 - delta)/2)",
            r * gm,
            n * by_min,
            r * gm <= n * by_min,
        ));
    }

    Ok(NGBoundReport {
        n,
        r,
        r_complement: rc,
        r_line,
        gamma,
        entries,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, named_graph};

    #[test]
    fn c5() {
        let rep = ng_bounds(&cycle(5).unwrap(), &OracleCaps::default()).unwrap();
        assert_eq!(
            (rep.r, rep.r_complement, rep.r_line, rep.gamma),
            (3, 3, Some(3), Some(2))
        );
        assert!(rep.all_held());
        assert_eq!(rep.family("iii").count(), 2);
    }

    #[test]
    fn k1_conventions() {
        let rep = ng_bounds(&Graph::empty(1), &OracleCaps::default()).unwrap();
        assert_eq!((rep.r, rep.r_complement, rep.r_line), (1, 1, Some(1)));
    }

    #[test]
    fn complete_graph_has_edgeless_complement() {
        let rep = ng_bounds(&complete(4).unwrap(), &OracleCaps::default()).unwrap();
        assert_eq!(rep.r_complement, 4);
        assert!(rep.family("i").all(|e| e.held));
    }

    #[test]
    fn petersen_line_graph_within_cap() {
        let rep = ng_bounds(
            &named_graph("petersen").unwrap(),
            &OracleCaps::default().with_partition_cap(15),
        )
        .unwrap();
        assert!(rep.r_line.is_some());
    }
}
