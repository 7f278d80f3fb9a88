//! Rainbow neighbourhood counts, closed forms, and the claim auditor.
//!
//! Vertex `v` yields a rainbow neighbourhood under a chromatic partition
//! when `N[v]` meets every class. Three numbers are computed exactly:
//!
//! - `r_conv`: the minimum yield count over all convention partitions (those
//!   with the lexicographically largest class-size vector);
//! - `r_min` and `r_max`: minimum and maximum over all chromatic partitions.

mod audit;
mod bounds;
mod formula;
mod table;

use serde::Serialize;

pub use audit::{audit, audit_with, claim_ids, AuditParams, AuditResult, Quantity, Verdict, Witness};
pub use bounds::{ng_bounds, BoundEntry, NGBoundReport};
pub use formula::{formula_r, Expected, Formula, FormulaValue};
pub use table::{table1_report, table1_rows, TableRow};

use crate::colouring::{chromatic_number, convention_partitions, for_each_chromatic_partition, ColourPartition};
use crate::families::{generate, FamilySpec};
use crate::{Error, Graph, OracleCaps, Result};

/// Yield flags of every vertex under one chromatic partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowReport {
    pub partition: ColourPartition,
    pub yields: Vec<bool>,
    pub count: usize,
}

impl RainbowReport {
    pub fn yielding(&self) -> Vec<usize> {
        (0..self.yields.len()).filter(|&v| self.yields[v]).collect()
    }
}

/// Which vertices yield rainbow neighbourhoods under `partition`.
///
/// The partition is re-validated against `g` and must have exactly `chi(g)`
/// classes.
pub fn rainbow_set(g: &Graph, partition: &ColourPartition) -> Result<RainbowReport> {
    let p = ColourPartition::new(g, partition.classes().to_vec())?;
    let chi = chromatic_number(g)?;
    if p.len() != chi {
        return Err(Error::InvalidPartition(format!(
            "{} classes, but the chromatic number is {chi}",
            p.len()
        )));
    }
    let colour = p.colour_of();
    let mut yields = Vec::with_capacity(g.order());
    let mut seen = vec![usize::MAX; chi];
    for v in g.vertices() {
        let mut distinct = 0;
        for w in std::iter::once(v).chain(g.neighbours(v).iter()) {
            if seen[colour[w]] != v {
                seen[colour[w]] = v;
                distinct += 1;
            }
        }
        yields.push(distinct == chi);
    }
    let count = yields.iter().filter(|&&y| y).count();
    Ok(RainbowReport {
        partition: p,
        yields,
        count,
    })
}

/// Yield count from closed-neighbourhood masks and class masks.
pub(crate) fn count_masks(closed: &[u64], classes: &[u64]) -> usize {
    closed
        .iter()
        .filter(|&&nv| classes.iter().all(|&c| c & nv != 0))
        .count()
}

pub(crate) fn closed_masks(g: &Graph) -> Result<Vec<u64>> {
    Ok(g.masks()?.iter().enumerate().map(|(v, &m)| m | 1 << v).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Exhaustive search over partitions.
    Oracle,
    /// A closed form; no search was run.
    Formula,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Formula => "formula",
        })
    }
}

/// An r-value with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RValue {
    pub value: usize,
    pub chi: usize,
    pub method: Method,
    /// A partition attaining the value; absent on the formula path.
    pub witness: Option<ColourPartition>,
    /// Partitions examined: convention certificates for `r_conv`, all
    /// chromatic partitions for `r_min` and `r_max`.
    pub examined: usize,
}

/// Minimum yield count over the convention partitions.
pub fn r_conv(g: &Graph, caps: &OracleCaps) -> Result<RValue> {
    let certs = convention_partitions(g, caps)?;
    let closed = closed_masks(g)?;
    let (value, witness) = certs
        .iter()
        .map(|c| (count_masks(&closed, &c.partition().masks()), c.partition()))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("every graph has a convention partition");
    Ok(RValue {
        value,
        chi: witness.len(),
        method: Method::Oracle,
        witness: Some(witness.clone()),
        examined: certs.len(),
    })
}

/// `(r_min, r_max)` from one pass over all chromatic partitions.
pub fn r_extremes(g: &Graph, caps: &OracleCaps) -> Result<(RValue, RValue)> {
    let closed = closed_masks(g)?;
    let mut lo: Option<(usize, Vec<u64>)> = None;
    let mut hi: Option<(usize, Vec<u64>)> = None;
    let examined = for_each_chromatic_partition(g, caps, |classes| {
        let r = count_masks(&closed, classes);
        if lo.as_ref().is_none_or(|(best, _)| r < *best) {
            lo = Some((r, classes.to_vec()));
        }
        if hi.as_ref().is_none_or(|(best, _)| r > *best) {
            hi = Some((r, classes.to_vec()));
        }
    })?;
    let wrap = |(value, classes): (usize, Vec<u64>)| RValue {
        value,
        chi: classes.len(),
        method: Method::Oracle,
        witness: Some(ColourPartition::from_masks(&classes)),
        examined,
    };
    Ok((wrap(lo.unwrap()), wrap(hi.unwrap())))
}

pub fn r_min(g: &Graph, caps: &OracleCaps) -> Result<RValue> {
    r_extremes(g, caps).map(|(lo, _)| lo)
}

pub fn r_max(g: &Graph, caps: &OracleCaps) -> Result<RValue> {
    r_extremes(g, caps).map(|(_, hi)| hi)
}

/// `r_conv` of a family member: the oracle when the order is within the
/// partition cap, otherwise the closed form, flagged as such.
pub fn r_conv_family(spec: &FamilySpec, caps: &OracleCaps) -> Result<RValue> {
    let g = generate(spec)?;
    match r_conv(&g, caps) {
        Err(e) if e.is_cap_violation() => {
            let f = formula_r(&Formula::Family(spec.clone()))?;
            let value = f
                .expected
                .as_exact()
                .ok_or_else(|| Error::NoFormula(spec.to_string()))?;
            Ok(RValue {
                value,
                chi: chromatic_number(&g).unwrap_or(0),
                method: Method::Formula,
                witness: None,
                examined: 0,
            })
        }
        other => other,
    }
}
