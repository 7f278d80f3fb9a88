//! Checks each closed-form claim against the exact oracles.
//!
//! Every audit returns an [`AuditResult`]; a refuted claim is a normal
//! outcome, not an error. Claims quantified over all graphs take an `order`
//! parameter and sweep every connected graph up to that order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::bounds::ng_bounds;
use super::formula::{formula_r, Formula};
use super::table::{table1_row_report, table1_rows};
use super::{r_conv, r_extremes, rainbow_set, RValue};
use crate::colouring::{chromatic_index, chromatic_number, convention_partitions, ColourPartition};
use crate::families::{complete, cycle, g_star, parse_source, thorn_cycle, FamilySpec};
use crate::graph::{enumerate_graphs, write_graph6};
use crate::transforms::{chithra, corona, disjoint_union, join, line_graph};
use crate::{Error, Execution, Graph, OracleCaps, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Skipped,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Skipped => "skipped",
        })
    }
}

/// A named number with where it came from: `formula`, `table`, `claim`
/// (the statement itself, for inequalities and predicates) or `oracle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: String,
    pub source: &'static str,
}

fn q(name: impl Into<String>, value: impl ToString, source: &'static str) -> Quantity {
    Quantity {
        name: name.into(),
        value: value.to_string(),
        source,
    }
}

/// A graph (and optionally a partition) backing a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: Option<String>,
    pub order: usize,
    pub size: usize,
    pub partition: Option<ColourPartition>,
    pub note: String,
}

impl Witness {
    fn new(g: &Graph, partition: Option<ColourPartition>, note: impl Into<String>) -> Self {
        Self {
            graph6: write_graph6(g).ok(),
            order: g.order(),
            size: g.size(),
            partition,
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditResult {
    pub claim: String,
    pub instance: String,
    pub expected: Vec<Quantity>,
    pub computed: Vec<Quantity>,
    pub verdict: Verdict,
    /// Why the audit was skipped, if it was.
    pub reason: Option<String>,
    pub witnesses: Vec<Witness>,
    /// Per-instance detail lines, e.g. one per graph in a sweep.
    pub notes: Vec<String>,
}

impl AuditResult {
    fn new(claim: &str, instance: impl Into<String>) -> Self {
        Self {
            claim: claim.to_string(),
            instance: instance.into(),
            expected: vec![],
            computed: vec![],
            verdict: Verdict::Skipped,
            reason: None,
            witnesses: vec![],
            notes: vec![],
        }
    }

    fn skipped(claim: &str, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(claim, instance);
        r.reason = Some(reason.into());
        r
    }

    fn decide(mut self, ok: bool) -> Self {
        self.verdict = if ok { Verdict::Confirmed } else { Verdict::Refuted };
        self
    }

    /// One JSON object on one line.
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("audit results serialise")
    }

    /// Aligned human-readable table of several results.
    pub fn render_table(results: &[AuditResult]) -> String {
        let fmt_q = |qs: &[Quantity]| {
            qs.iter()
                .map(|x| format!("{}={} [{}]", x.name, x.value, x.source))
                .collect::<Vec<_>>()
                .join("; ")
        };
        let rows: Vec<[String; 5]> = results
            .iter()
            .map(|r| {
                let verdict = match &r.reason {
                    Some(why) => format!("{} ({why})", r.verdict),
                    None => r.verdict.to_string(),
                };
                [
                    r.claim.clone(),
                    r.instance.clone(),
                    fmt_q(&r.expected),
                    fmt_q(&r.computed),
                    verdict,
                ]
            })
            .collect();
        let header = ["claim", "instance", "expected", "computed", "verdict"];
        let mut width = header.map(str::len);
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[&str]| {
            let padded: Vec<String> = cells.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
            let _ = writeln!(out, "{}", padded.join(" | ").trim_end());
        };
        line(&mut out, &header);
        let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
        let _ = writeln!(out, "{}", rule.join("-+-"));
        for row in &rows {
            line(&mut out, &row.each_ref().map(String::as_str));
        }
        for r in results {
            for w in &r.witnesses {
                let g6 = w.graph6.as_deref().unwrap_or("-");
                let part = w
                    .partition
                    .as_ref()
                    .map(|p| format!(" partition {:?}", p.classes()))
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  witness [{}] g6:{g6} (n={}, e={}){part}: {}",
                    r.claim, w.order, w.size, w.note
                );
            }
            for n in &r.notes {
                let _ = writeln!(out, "  note [{}] {n}", r.claim);
            }
        }
        out
    }
}

/// `key=value` parameters for an audit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditParams {
    map: BTreeMap<String, String>,
}

impl AuditParams {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `key=value` items.
    pub fn parse<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut p = Self::new();
        for item in items {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidFamily(format!("parameter {item:?} is not key=value")))?;
            p.map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(p)
    }

    pub fn set(mut self, key: &str, value: impl ToString) -> Self {
        self.map.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(String::as_str)
    }

    fn usize(&self, claim: &str, key: &'static str) -> Result<Option<usize>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::InvalidFamily(format!("{claim}: {key}={v} is not a count")))
            })
            .transpose()
    }

    fn need_usize(&self, claim: &str, key: &'static str) -> Result<usize> {
        self.usize(claim, key)?.ok_or_else(|| Error::MissingParameter {
            claim: claim.to_string(),
            param: key,
        })
    }

    fn graph(&self, key: &str) -> Result<Option<(String, Graph)>> {
        self.get(key).map(|s| Ok((s.to_string(), parse_source(s)?))).transpose()
    }

    fn need_graph(&self, claim: &str, key: &'static str) -> Result<(String, Graph)> {
        self.graph(key)?.ok_or_else(|| Error::MissingParameter {
            claim: claim.to_string(),
            param: key,
        })
    }
}

const CLAIMS: &[&str] = &[
    "rainbow-bounds",
    "bipartite-all-rainbow",
    "apex-join",
    "chithra-join",
    "union-rule",
    "join-additivity",
    "corona-rule",
    "corona-chromatic",
    "path-formula",
    "cycle-formula",
    "complete-formula",
    "wheel-formula",
    "multipartite-formula",
    "ladder-formula",
    "path-line-pair",
    "cycle-line-pair",
    "ladder-line-pair",
    "wheel-line-pair",
    "complete-line-pair",
    "multipartite-line-pair",
    "line-clique-yield",
    "line-degree-bound",
    "regular-line-all-rainbow",
    "minimal-rainbow-characterization",
    "minimal-rainbow-chromatic",
    "realizability",
    "complement-bounds",
    "line-pair-bounds",
    "regular-complement-bounds",
    "domination-bounds",
    "petersen",
    "thorn-cycle",
    "convention-minimal",
    "cycle-max-variant",
];

/// Every claim id the auditor accepts, `table:<name>` rows included.
pub fn claim_ids() -> Vec<String> {
    CLAIMS
        .iter()
        .map(|s| s.to_string())
        .chain(table1_rows().iter().map(|r| format!("table:{}", r.name)))
        .collect()
}

pub fn audit(claim: &str, params: &AuditParams, caps: &OracleCaps) -> Result<AuditResult> {
    audit_with(claim, params, caps, Execution::default())
}

/// Runs one audit. Sweeps spread their graphs over `exec`; results come
/// back in enumeration order either way.
pub fn audit_with(claim: &str, params: &AuditParams, caps: &OracleCaps, exec: Execution) -> Result<AuditResult> {
    let ctx = Ctx {
        claim,
        params,
        caps,
        exec,
    };
    let result = match claim {
        "rainbow-bounds" => ctx.per_graph(rainbow_bounds),
        "bipartite-all-rainbow" => ctx.per_graph(bipartite_all_rainbow),
        "apex-join" => ctx.per_graph(apex_join),
        "chithra-join" => chithra_join(&ctx),
        "union-rule" | "join-additivity" | "corona-rule" | "corona-chromatic" => binary(&ctx),
        "path-formula"
        | "cycle-formula"
        | "complete-formula"
        | "wheel-formula"
        | "multipartite-formula"
        | "ladder-formula" => family_formula(&ctx),
        "path-line-pair"
        | "cycle-line-pair"
        | "ladder-line-pair"
        | "wheel-line-pair"
        | "complete-line-pair"
        | "multipartite-line-pair" => family_line_pair(&ctx),
        "line-clique-yield" => ctx.per_graph(line_clique_yield),
        "line-degree-bound" => ctx.per_graph(line_degree_bound),
        "regular-line-all-rainbow" => ctx.per_graph(regular_line),
        "minimal-rainbow-characterization" => ctx.per_graph(minimal_characterization),
        "minimal-rainbow-chromatic" => ctx.per_graph(minimal_chromatic),
        "realizability" => realizability(&ctx),
        "complement-bounds" => ctx.per_graph(|c, g| bound_family(c, g, "i")),
        "line-pair-bounds" => ctx.per_graph(|c, g| bound_family(c, g, "ii")),
        "regular-complement-bounds" => ctx.per_graph(|c, g| bound_family(c, g, "iii")),
        "domination-bounds" => ctx.per_graph(|c, g| bound_family(c, g, "iv")),
        "petersen" => petersen(&ctx),
        "thorn-cycle" => thorn(&ctx),
        "convention-minimal" => ctx.per_graph(convention_minimal),
        "cycle-max-variant" => cycle_max(&ctx),
        _ => match claim.strip_prefix("table:") {
            Some(name) => match table1_rows().iter().find(|r| r.name == name) {
                Some(row) => table1_row_report(row, caps),
                None => Err(Error::UnknownClaim(claim.to_string())),
            },
            None => Err(Error::UnknownClaim(claim.to_string())),
        },
    };
    match result {
        Err(e @ (Error::CapExceeded { .. } | Error::NoFormula(_))) => {
            Ok(AuditResult::skipped(claim, describe(params), e.to_string()))
        }
        other => other,
    }
}

fn describe(params: &AuditParams) -> String {
    params
        .map
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

struct Ctx<'a> {
    claim: &'a str,
    params: &'a AuditParams,
    caps: &'a OracleCaps,
    exec: Execution,
}

/// Outcome of a claim on one graph. `None` means the claim does not apply
/// (precondition unmet) or the graph was out of oracle reach.
struct Check {
    ok: Option<bool>,
    expected: Vec<Quantity>,
    computed: Vec<Quantity>,
    witness: Option<Witness>,
    note: String,
}

impl Check {
    fn not_applicable(note: impl Into<String>) -> Self {
        Self {
            ok: None,
            expected: vec![],
            computed: vec![],
            witness: None,
            note: note.into(),
        }
    }
}

type GraphCheck<'a> = dyn Fn(&Ctx, &Graph) -> Result<Check> + Sync + 'a;

impl Ctx<'_> {
    /// Runs `check` on the graph given as `g=...`, or on every connected
    /// graph of order `min_order..=order` when `order=...` is given.
    fn per_graph(&self, check: impl Fn(&Ctx, &Graph) -> Result<Check> + Sync) -> Result<AuditResult> {
        if let Some((text, g)) = self.params.graph("g")? {
            let c = check(self, &g)?;
            let mut r = AuditResult::new(self.claim, text);
            r.expected = c.expected;
            r.computed = c.computed;
            r.witnesses.extend(c.witness);
            if !c.note.is_empty() {
                r.notes.push(c.note.clone());
            }
            return Ok(match c.ok {
                Some(ok) => r.decide(ok),
                None => {
                    r.reason = Some(c.note);
                    r
                }
            });
        }
        let Some(order) = self.params.usize(self.claim, "order")? else {
            return Err(Error::MissingParameter {
                claim: self.claim.to_string(),
                param: "g or order",
            });
        };
        let min = self.params.usize(self.claim, "min_order")?.unwrap_or(1);
        self.sweep(min, order, &check)
    }

    fn sweep(&self, min: usize, order: usize, check: &GraphCheck) -> Result<AuditResult> {
        let mut graphs = vec![];
        for n in min.max(1)..=order {
            graphs.extend(enumerate_graphs(n, true)?);
        }
        let outcomes = self.exec.map(&graphs, |g| {
            check(self, g).or_else(|e| {
                if e.is_cap_violation() {
                    Ok(Check::not_applicable(format!("out of reach: {e}")))
                } else {
                    Err(e)
                }
            })
        });
        let mut r = AuditResult::new(self.claim, format!("connected graphs, {}<=n<={order}", min.max(1)));
        let (mut evaluated, mut failed, mut not_applicable) = (0usize, 0usize, 0usize);
        for (g, outcome) in graphs.iter().zip(outcomes) {
            let c = outcome?;
            let g6 = write_graph6(g).unwrap_or_default();
            match c.ok {
                Some(true) => evaluated += 1,
                Some(false) => {
                    evaluated += 1;
                    failed += 1;
                    r.witnesses.extend(c.witness);
                }
                None => not_applicable += 1,
            }
            if !c.note.is_empty() {
                let tag = match c.ok {
                    Some(true) => "ok",
                    Some(false) => "FAIL",
                    None => "n/a",
                };
                r.notes.push(format!("g6:{g6} {tag}: {}", c.note));
            }
        }
        r.computed.push(q("graphs", graphs.len(), "oracle"));
        r.computed.push(q("evaluated", evaluated, "oracle"));
        r.computed.push(q("counterexamples", failed, "oracle"));
        r.computed.push(q("not applicable", not_applicable, "oracle"));
        r.expected.push(q("counterexamples", 0, "claim"));
        if evaluated == 0 {
            r.reason = Some("no graph in the sweep meets the claim's preconditions".into());
            return Ok(r);
        }
        Ok(r.decide(failed == 0))
    }
}

fn conv(ctx: &Ctx, g: &Graph) -> Result<RValue> {
    r_conv(g, ctx.caps)
}

fn rainbow_bounds(ctx: &Ctx, g: &Graph) -> Result<Check> {
    let (lo, hi) = r_extremes(g, ctx.caps)?;
    let c = conv(ctx, g)?;
    let n = g.order();
    let ok = c.chi <= lo.value && lo.value <= c.value && c.value <= hi.value && hi.value <= n;
    let witness = (!ok).then(|| Witness::new(g, lo.witness.clone(), "a chromatic partition below chi"));
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("range", format!("{}..={n}", c.chi), "claim")],
        computed: vec![
            q("chi", c.chi, "oracle"),
            q("r_min", lo.value, "oracle"),
            q("r_conv", c.value, "oracle"),
            q("r_max", hi.value, "oracle"),
            q("partitions", lo.examined, "oracle"),
        ],
        witness,
        note: String::new(),
    })
}

fn bipartite_all_rainbow(ctx: &Ctx, g: &Graph) -> Result<Check> {
    if g.order() < 2 || !g.is_connected()? || !g.is_bipartite()? {
        return Ok(Check::not_applicable("needs a connected bipartite graph of order >= 2"));
    }
    let expected = formula_r(&Formula::Bipartite { order: g.order() })?.expected;
    let (lo, _) = r_extremes(g, ctx.caps)?;
    let c = conv(ctx, g)?;
    let ok = expected.admits(c.value) && expected.admits(lo.value);
    let witness = (!ok).then(|| Witness::new(g, lo.witness.clone(), "partition with a non-yielding vertex"));
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("r", &expected, "formula")],
        computed: vec![q("r_conv", c.value, "oracle"), q("r_min", lo.value, "oracle")],
        witness,
        note: String::new(),
    })
}

fn apex_join(ctx: &Ctx, g: &Graph) -> Result<Check> {
    let base = conv(ctx, g)?;
    let apex = join(&Graph::empty(1), g);
    let expected = formula_r(&Formula::Apex { r: base.value })?.expected;
    let got = conv(ctx, &apex)?;
    let ok = expected.admits(got.value);
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("r(K1+G)", &expected, "formula")],
        computed: vec![q("r(G)", base.value, "oracle"), q("r(K1+G)", got.value, "oracle")],
        witness: (!ok).then(|| Witness::new(&apex, got.witness.clone(), "K1 + G")),
        note: String::new(),
    })
}

fn chithra_join(ctx: &Ctx) -> Result<AuditResult> {
    let t = ctx.params.need_usize(ctx.claim, "t")?;
    let (text, g) = ctx.params.need_graph(ctx.claim, "g")?;
    let all: Vec<usize> = g.vertices().collect();
    let h = chithra(&g, &vec![all; t])?;
    let base = conv(ctx, &g)?;
    let got = conv(ctx, &h)?;
    let expected = formula_r(&Formula::ApexJoin { t, r: base.value })?.expected;
    let mut r = AuditResult::new(ctx.claim, format!("{text} t={t}"));
    r.expected.push(q("r(tK1+G)", &expected, "formula"));
    r.computed.push(q("r(G)", base.value, "oracle"));
    r.computed.push(q("r(tK1+G)", got.value, "oracle"));
    let ok = expected.admits(got.value);
    if !ok {
        r.witnesses
            .push(Witness::new(&h, got.witness, "Chithra graph with every W_i = V(G)"));
    }
    Ok(r.decide(ok))
}

fn binary(ctx: &Ctx) -> Result<AuditResult> {
    let (tg, g) = ctx.params.need_graph(ctx.claim, "g")?;
    let (th, h) = ctx.params.need_graph(ctx.claim, "h")?;
    let mut r = AuditResult::new(ctx.claim, format!("G={tg} H={th}"));
    let (chi_g, chi_h) = (chromatic_number(&g)?, chromatic_number(&h)?);
    if ctx.claim == "corona-chromatic" {
        let gh = corona(&g, &h);
        let expected = formula_r(&Formula::CoronaChromatic { chi_g, chi_h })?.expected;
        let got = chromatic_number(&gh)?;
        r.expected.push(q("chi(G o H)", &expected, "formula"));
        r.computed.push(q("chi(G)", chi_g, "oracle"));
        r.computed.push(q("chi(H)", chi_h, "oracle"));
        r.computed.push(q("chi(G o H)", got, "oracle"));
        let ok = expected.admits(got);
        if !ok {
            r.witnesses.push(Witness::new(&gh, None, "corona"));
        }
        return Ok(r.decide(ok));
    }
    let rg = conv(ctx, &g)?;
    let rh = conv(ctx, &h)?;
    r.computed.push(q("r(G)", rg.value, "oracle"));
    r.computed.push(q("r(H)", rh.value, "oracle"));
    r.computed.push(q("chi(G)", chi_g, "oracle"));
    r.computed.push(q("chi(H)", chi_h, "oracle"));
    let (combined, label, formula) = match ctx.claim {
        "union-rule" => (
            disjoint_union(&g, &h),
            "r(G u H)",
            Formula::Union {
                r_g: rg.value,
                r_h: rh.value,
                chi_g,
                chi_h,
            },
        ),
        "join-additivity" => (
            join(&g, &h),
            "r(G + H)",
            Formula::Join {
                r_g: rg.value,
                r_h: rh.value,
            },
        ),
        _ => (
            corona(&g, &h),
            "r(G o H)",
            Formula::Corona {
                n1: g.order(),
                r_g: rg.value,
                r_h: rh.value,
                chi_g,
                chi_h,
            },
        ),
    };
    let expected = formula_r(&formula)?.expected;
    let got = conv(ctx, &combined)?;
    r.expected.push(q(label, &expected, "formula"));
    r.computed.push(q(label, got.value, "oracle"));
    if ctx.claim == "join-additivity" {
        // The same identity one level down, over all chromatic partitions.
        let lo = |x: &Graph| r_extremes(x, ctx.caps).map(|(lo, _)| lo.value);
        let (mg, mh, mgh) = (lo(&g)?, lo(&h)?, lo(&combined)?);
        r.computed.push(q("r_min(G)+r_min(H)", mg + mh, "oracle"));
        r.computed.push(q("r_min(G + H)", mgh, "oracle"));
        if mg + mh != mgh {
            r.notes
                .push(format!("r_min is not additive here: {mg} + {mh} != {mgh}"));
        }
    }
    if ctx.claim == "corona-rule" {
        let branch = if chi_h + 1 >= chi_g {
            "chi(H) >= chi(G) - 1"
        } else {
            "chi(H) < chi(G) - 1"
        };
        r.notes.push(format!("branch: {branch}"));
    }
    let ok = expected.admits(got.value);
    if !ok {
        r.witnesses.push(Witness::new(&combined, got.witness, label));
    }
    Ok(r.decide(ok))
}

fn family_spec(ctx: &Ctx) -> Result<FamilySpec> {
    let key = |k: &'static str| ctx.params.need_usize(ctx.claim, k);
    let family = ctx.claim.split('-').next().unwrap();
    let spec = match family {
        "path" => FamilySpec::Path { n: key("n")? },
        "cycle" => FamilySpec::Cycle { n: key("n")? },
        "complete" => FamilySpec::Complete { n: key("n")? },
        "wheel" => FamilySpec::Wheel { rim: key("rim")? },
        "ladder" => FamilySpec::Ladder { n: key("n")? },
        _ => {
            let parts = ctx.params.get("parts").ok_or_else(|| Error::MissingParameter {
                claim: ctx.claim.to_string(),
                param: "parts",
            })?;
            format!("multipartite:{parts}").parse()?
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn family_formula(ctx: &Ctx) -> Result<AuditResult> {
    let spec = family_spec(ctx)?;
    let f = formula_r(&Formula::Family(spec.clone()))?;
    let g = crate::families::generate(&spec)?;
    let got = conv(ctx, &g)?;
    let mut r = AuditResult::new(ctx.claim, spec.to_string());
    r.expected.push(q("r", &f.expected, "formula"));
    r.computed.push(q("r_conv", got.value, "oracle"));
    r.computed.push(q("chi", got.chi, "oracle"));
    let ok = f.expected.admits(got.value);
    if !ok {
        r.witnesses
            .push(Witness::new(&g, got.witness, "convention partition attaining r_conv"));
    }
    Ok(r.decide(ok))
}

fn family_line_pair(ctx: &Ctx) -> Result<AuditResult> {
    let spec = family_spec(ctx)?;
    let f = formula_r(&Formula::LinePair(spec.clone()))?;
    let g = crate::families::generate(&spec)?;
    let l = line_graph(&g)?;
    let rg = conv(ctx, &g)?;
    let rl = conv(ctx, &l)?;
    let mut r = AuditResult::new(ctx.claim, spec.to_string());
    r.expected.push(q("pair", &f.expected, "formula"));
    r.computed.push(q("r(G)", rg.value, "oracle"));
    r.computed.push(q("r(L(G))", rl.value, "oracle"));
    r.computed.push(q("sum", rg.value + rl.value, "oracle"));
    r.computed.push(q("product", rg.value * rl.value, "oracle"));
    let ok = f.expected.admits_pair(rg.value, rl.value);
    if !ok {
        r.witnesses
            .push(Witness::new(&l, rl.witness, "line graph under its r_conv witness"));
    }
    Ok(r.decide(ok))
}

/// Line-vertices whose edge touches a vertex of maximum degree, i.e. whose
/// inserted vertex lies in a largest v-clique.
fn max_clique_edges(g: &Graph) -> Vec<usize> {
    let delta = g.degrees().into_iter().max().unwrap_or(0);
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| g.degree(a) == delta || g.degree(b) == delta)
        .map(|(i, _)| i)
        .collect()
}

fn line_clique_yield(ctx: &Ctx, g: &Graph) -> Result<Check> {
    let delta = g.degrees().into_iter().max().unwrap_or(0);
    if delta < 3 {
        return Ok(Check::not_applicable(""));
    }
    let l = line_graph(g)?;
    let predicted = max_clique_edges(g);
    let certs = convention_partitions(&l, ctx.caps)?;
    let chi_l = certs[0].partition().len();
    let mut mismatch = None;
    let mut first = None;
    for c in &certs {
        let y = rainbow_set(&l, c.partition())?.yielding();
        first.get_or_insert_with(|| y.clone());
        if y != predicted && mismatch.is_none() {
            mismatch = Some((c.partition().clone(), y));
        }
    }
    let ok = mismatch.is_none();
    let class = if chi_l == delta { "class 1" } else { "class 2" };
    let (shown, yielding) = match &mismatch {
        Some((_, y)) => ("mismatching", y.clone()),
        None => ("all", first.unwrap_or_default()),
    };
    let note = format!(
        "Delta={delta} chi(L)={chi_l} ({class}); max-clique edges {predicted:?}; yielding under {shown} \
         convention partitions {yielding:?} ({} certificates)",
        certs.len()
    );
    let witness = mismatch.map(|(p, _)| Witness::new(&l, Some(p), format!("L(G), {class}")));
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("yielding", format!("{predicted:?}"), "claim")],
        computed: vec![
            q("yielding", format!("{yielding:?}"), "oracle"),
            q("chi(L(G))", chi_l, "oracle"),
        ],
        witness,
        note,
    })
}

fn line_degree_bound(ctx: &Ctx, g: &Graph) -> Result<Check> {
    if g.size() == 0 {
        return Ok(Check::not_applicable("edgeless"));
    }
    let p = g.degree_profile()?;
    let l = line_graph(g)?;
    let rl = conv(ctx, &l)?;
    let bound = p.max_count * p.max;
    let ok = rl.value <= bound;
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("r(L(G)) <=", bound, "claim")],
        computed: vec![q("r(L(G))", rl.value, "oracle")],
        witness: (!ok).then(|| Witness::new(&l, rl.witness.clone(), "line graph")),
        note: String::new(),
    })
}

fn regular_line(ctx: &Ctx, g: &Graph) -> Result<Check> {
    let Some(t) = g.degree_profile()?.regular.filter(|&t| t >= 3) else {
        return Ok(Check::not_applicable(""));
    };
    let expected = formula_r(&Formula::RegularLine {
        degree: t,
        size: g.size(),
    })?
    .expected;
    let l = line_graph(g)?;
    let rl = conv(ctx, &l)?;
    let chi_l = rl.chi;
    let ok = expected.admits(rl.value);
    let class = if chi_l == t { "class 1" } else { "class 2" };
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("r(L(G))", &expected, "formula")],
        computed: vec![q("r(L(G))", rl.value, "oracle"), q("chi(L(G))", chi_l, "oracle")],
        witness: (!ok).then(|| Witness::new(&l, rl.witness.clone(), format!("line graph, {class}"))),
        note: format!("{t}-regular, {class}, r(L(G))={} vs e={}", rl.value, g.size()),
    })
}

fn is_odd_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.order() % 2 == 1 && g.degrees().iter().all(|&d| d == 2) && g.is_connected().unwrap_or(false)
}

fn minimal_characterization(ctx: &Ctx, g: &Graph) -> Result<Check> {
    if g.order() < 3 || !g.is_connected()? {
        return Ok(Check::not_applicable(""));
    }
    let c = conv(ctx, g)?;
    let lhs = c.value == c.chi;
    let rhs = is_odd_cycle(g) || g.is_complete();
    let ok = lhs == rhs;
    let detail = format!("r={} chi={} odd-cycle-or-complete={rhs}", c.value, c.chi);
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("r == chi", rhs, "claim")],
        computed: vec![q("r", c.value, "oracle"), q("chi", c.chi, "oracle")],
        witness: (!ok).then(|| Witness::new(g, c.witness.clone(), detail.clone())),
        note: if ok { String::new() } else { detail },
    })
}

fn minimal_chromatic(ctx: &Ctx, g: &Graph) -> Result<Check> {
    if !g.is_connected()? {
        return Ok(Check::not_applicable(""));
    }
    let c = conv(ctx, g)?;
    if c.value != c.chi {
        return Ok(Check::not_applicable(""));
    }
    let ok = c.chi == 3 || c.chi == g.order();
    let detail = format!("r=chi={} with n={}", c.chi, g.order());
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("chi in", format!("{{3, {}}}", g.order()), "claim")],
        computed: vec![q("chi", c.chi, "oracle")],
        witness: (!ok).then(|| Witness::new(g, c.witness.clone(), detail.clone())),
        note: if ok { String::new() } else { detail },
    })
}

fn realizability(ctx: &Ctx) -> Result<AuditResult> {
    let pairs: Vec<(usize, usize)> = match ctx.params.usize(ctx.claim, "max")? {
        Some(m) => (2..=m).flat_map(|a| (2..=a).map(move |b| (a, b))).collect(),
        None => vec![(
            ctx.params.need_usize(ctx.claim, "a")?,
            ctx.params.need_usize(ctx.claim, "b")?,
        )],
    };
    let instance = match pairs.as_slice() {
        [(a, b)] => format!("a={a} b={b}"),
        _ => format!("2<=b<=a<={}", pairs.last().map_or(0, |p| p.0)),
    };
    let mut r = AuditResult::new(ctx.claim, instance);
    let mut ok = true;
    for &(a, b) in &pairs {
        let expected = formula_r(&Formula::Realizable { a, b })?.expected;
        let g = g_star(&complete(b)?, a - b)?;
        let c = conv(ctx, &g)?;
        let good = expected.admits(c.value) && c.chi == b;
        r.notes.push(format!(
            "a={a} b={b}: chi={} r={} {}",
            c.chi,
            c.value,
            if good { "ok" } else { "FAIL" }
        ));
        if !good {
            ok = false;
            r.witnesses
                .push(Witness::new(&g, c.witness, format!("G*_(a-b) for K_{b}")));
        }
        if pairs.len() == 1 {
            r.expected.push(q("r", &expected, "formula"));
            r.expected.push(q("chi", b, "claim"));
            r.computed.push(q("r", c.value, "oracle"));
            r.computed.push(q("chi", c.chi, "oracle"));
        }
    }
    if pairs.len() > 1 {
        r.computed.push(q("pairs", pairs.len(), "oracle"));
        r.computed.push(q("failures", r.witnesses.len(), "oracle"));
        r.expected.push(q("failures", 0, "claim"));
    }
    Ok(r.decide(ok))
}

fn bound_family(ctx: &Ctx, g: &Graph, family: &'static str) -> Result<Check> {
    let rep = ng_bounds(g, ctx.caps)?;
    let entries: Vec<_> = rep.family(family).cloned().collect();
    if entries.is_empty() {
        let why = rep
            .skipped
            .iter()
            .find(|s| s.starts_with(&format!("{family}:")))
            .cloned()
            .unwrap_or_else(|| "family does not apply".into());
        return Ok(Check::not_applicable(why));
    }
    let ok = entries.iter().all(|e| e.held);
    let failed: Vec<String> = entries
        .iter()
        .filter(|e| !e.held)
        .map(|e| format!("{} ({} vs {})", e.statement, e.lhs, e.rhs))
        .collect();
    Ok(Check {
        ok: Some(ok),
        expected: entries.iter().map(|e| q(e.statement, "holds", "claim")).collect(),
        computed: entries
            .iter()
            .map(|e| {
                q(
                    e.statement,
                    format!("{} vs {}: {}", e.lhs, e.rhs, if e.held { "held" } else { "violated" }),
                    "oracle",
                )
            })
            .collect(),
        witness: (!ok).then(|| Witness::new(g, None, failed.join("; "))),
        note: failed.join("; "),
    })
}

fn petersen(ctx: &Ctx) -> Result<AuditResult> {
    let g = crate::families::named_graph("petersen")?;
    let expected = formula_r(&Formula::Family(FamilySpec::Petersen))?.expected;
    let c = conv(ctx, &g)?;
    let (lo, hi) = r_extremes(&g, ctx.caps)?;
    let vectors: std::collections::BTreeSet<Vec<usize>> = convention_partitions(&g, ctx.caps)?
        .iter()
        .map(|c| c.partition().size_vector())
        .collect();
    let mut r = AuditResult::new(ctx.claim, "named:petersen");
    r.expected.push(q("r", &expected, "formula"));
    r.computed.push(q("r_conv", c.value, "oracle"));
    r.computed
        .push(q("convention vectors", format!("{vectors:?}"), "oracle"));
    r.computed.push(q("certificates", c.examined, "oracle"));
    r.computed.push(q("r_min", lo.value, "oracle"));
    r.computed.push(q("r_max", hi.value, "oracle"));
    r.computed.push(q("chi'", chromatic_index(&g)?, "oracle"));
    r.notes.push(format!(
        "global minimum {} the stated value",
        if expected.admits(lo.value) {
            "matches"
        } else {
            "differs from"
        }
    ));
    let ok = expected.admits(c.value);
    if !ok {
        r.witnesses
            .push(Witness::new(&g, c.witness, "convention partition attaining r_conv"));
    }
    Ok(r.decide(ok))
}

fn thorn(ctx: &Ctx) -> Result<AuditResult> {
    let pendants = ctx.params.usize(ctx.claim, "pendants")?.unwrap_or(3);
    let g = thorn_cycle(5, 0, pendants)?;
    // v1..v5 = 0..4 coloured c1 c2 c1 c2 c3, pendants c2.
    let mut colours = vec![0, 1, 0, 1, 2];
    colours.extend(std::iter::repeat_n(1, pendants));
    let p = ColourPartition::from_colours(&g, &colours)?;
    let rep = rainbow_set(&g, &p)?;
    let mut r = AuditResult::new(ctx.claim, format!("thorn C5, {pendants} pendants on v1"));
    r.expected.push(q("v1 yields", true, "claim"));
    r.expected.push(q("v4 yields", true, "claim"));
    r.expected.push(q("d(v1)", pendants + 2, "claim"));
    r.computed.push(q("v1 yields", rep.yields[0], "oracle"));
    r.computed.push(q("v4 yields", rep.yields[3], "oracle"));
    r.computed.push(q("d(v1)", g.degree(0), "oracle"));
    r.computed.push(q("count under this colouring", rep.count, "oracle"));
    match conv(ctx, &g) {
        Ok(c) => r.computed.push(q("r_conv", c.value, "oracle")),
        Err(e) if e.is_cap_violation() => r.notes.push(format!("r_conv not computed: {e}")),
        Err(e) => return Err(e),
    }
    let ok = rep.yields[0] && rep.yields[3] && g.degree(0) == pendants + 2;
    if !ok {
        r.witnesses.push(Witness::new(&g, Some(p), "stated colouring"));
    }
    Ok(r.decide(ok))
}

fn convention_minimal(ctx: &Ctx, g: &Graph) -> Result<Check> {
    let c = conv(ctx, g)?;
    let (lo, _) = r_extremes(g, ctx.caps)?;
    let ok = c.value == lo.value;
    let detail = format!("r_conv={} r_min={}", c.value, lo.value);
    Ok(Check {
        ok: Some(ok),
        expected: vec![q("r_conv", "= r_min", "claim")],
        computed: vec![q("r_conv", c.value, "oracle"), q("r_min", lo.value, "oracle")],
        witness: (!ok).then(|| {
            Witness::new(
                g,
                lo.witness.clone(),
                format!(
                    "{detail}; convention witness {:?}",
                    c.witness.as_ref().map(|p| p.classes().to_vec())
                ),
            )
        }),
        note: if ok { String::new() } else { detail },
    })
}

fn cycle_max(ctx: &Ctx) -> Result<AuditResult> {
    let n = ctx.params.usize(ctx.claim, "n")?.unwrap_or(9);
    let g = cycle(n)?;
    let mut r = AuditResult::new(ctx.claim, format!("cycle:{n}"));
    let c = conv(ctx, &g)?;
    let (_, hi) = r_extremes(&g, ctx.caps)?;
    let conv_expected = formula_r(&Formula::Family(FamilySpec::Cycle { n }))?.expected;
    r.expected.push(q("r_conv", &conv_expected, "formula"));
    r.expected.push(q("r_max", n, "claim"));
    r.computed.push(q("r_conv", c.value, "oracle"));
    r.computed.push(q("r_max", hi.value, "oracle"));
    let mut ok = conv_expected.admits(c.value) && hi.value == n;
    if n % 3 == 0 {
        let periodic: Vec<usize> = (0..n).map(|v| v % 3).collect();
        let p = ColourPartition::from_colours(&g, &periodic)?;
        let count = rainbow_set(&g, &p)?.count;
        r.expected.push(q("periodic colouring", n, "claim"));
        r.computed.push(q("periodic colouring", count, "oracle"));
        ok &= count == n;
    } else {
        r.notes.push("3-periodic colouring needs 3 | n; not evaluated".into());
    }
    if !ok {
        r.witnesses.push(Witness::new(&g, hi.witness, "maximising partition"));
    }
    Ok(r.decide(ok))
}
