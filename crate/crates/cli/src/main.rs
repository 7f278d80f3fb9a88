//! `rainbow`: rainbow neighbourhood numbers, graph operators and claim audits
//! from the command line.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::rainbow::{self, AuditParams, AuditResult, Formula, RValue};
use rainbow_core::{colouring, families, graph, transforms, Error, Execution, Graph, OracleCaps};
use serde_json::json;

/// Exit status for command-line mistakes and unreadable input.
const EXIT_USAGE: u8 = 2;
/// Exit status when an exact search would exceed its order limit.
const EXIT_CAP: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow neighbourhood numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Order limit for chromatic partition searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    partition_cap: Option<u64>,
    /// Order limit for the minimum dominating set search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    domination_cap: Option<u64>,
    /// Confirm that limits above the defaults are intended.
    #[arg(long, global = true)]
    allow_large: bool,
    /// Run sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

impl CapArgs {
    fn caps(&self) -> OracleCaps {
        let mut caps = OracleCaps::from_env();
        if let Some(n) = self.partition_cap {
            caps.partitions = n as usize;
        }
        if let Some(n) = self.domination_cap {
            caps.domination = n as usize;
        }
        if self.allow_large {
            caps = caps.acknowledge();
        }
        caps
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Conv,
    Min,
    Max,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
    Dot,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Union,
    Join,
    Corona,
    Chithra,
    Linegraph,
    Expand,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chromatic number, chromatic index and a rainbow neighbourhood number.
    Compute {
        /// Graph source: a family such as `cycle:9`, `named:<name>`,
        /// `g6:<code>` or `file:<path>`.
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "conv")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Build a graph with one of the operators.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        graph: String,
        /// Second operand for union, join and corona.
        #[arg(long)]
        with: Option<String>,
        /// Chithra subsets, `/`-separated lists of vertices: `0,1/1,2`.
        #[arg(long)]
        subsets: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Audit one claim; parameters are `key=value` pairs.
    Audit {
        claim: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Rainbow sums and products for the bipartite regular graph table.
    Table1 {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Audit a claim on every connected graph up to an order.
    Sweep {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        claim: String,
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// List the claim ids accepted by `audit` and `sweep`.
    Claims,
    /// List the named graphs.
    Catalog,
}

enum Failure {
    Usage(String),
    Cap(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            Error::Overflow(_) => Failure::Other(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let status = match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Cap(m) => (EXIT_CAP, m),
                Failure::Other(m) => (1, m),
            };
            eprintln!("rainbow: {msg}");
            ExitCode::from(code)
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    status
}

fn run(cli: &Cli, out: &mut String) -> Result<(), Failure> {
    let caps = cli.caps.caps();
    match &cli.command {
        Command::Compute { graph, mode, format } => compute(graph, *mode, *format, &caps, out),
        Command::Transform {
            op,
            graph,
            with,
            subsets,
            format,
        } => transform(*op, graph, with.as_deref(), subsets.as_deref(), *format, out),
        Command::Audit { claim, params, format } => {
            let params = AuditParams::parse(params.iter().map(String::as_str))?;
            let r = rainbow::audit_with(claim, &params, &caps, cli.caps.execution())?;
            emit_audits(&[r], *format, out)
        }
        Command::Table1 { format } => emit_audits(&rainbow::table1_report(&caps)?, *format, out),
        Command::Sweep {
            order,
            claim,
            min_order,
            format,
        } => {
            let params = AuditParams::new().set("order", order).set("min_order", min_order);
            let r = rainbow::audit_with(claim, &params, &caps, cli.caps.execution())?;
            emit_audits(&[r], *format, out)
        }
        Command::Claims => {
            for id in rainbow::claim_ids() {
                out.push_str(&id);
                out.push('\n');
            }
            Ok(())
        }
        Command::Catalog => {
            for r in families::catalog() {
                out.push_str(&format!(
                    "{:<22} {:<28} n={:<4} e={:<4} degree={}\n",
                    r.name, r.title, r.order, r.size, r.degree
                ));
            }
            Ok(())
        }
    }
}

fn emit_audits(results: &[AuditResult], format: Format, out: &mut String) -> Result<(), Failure> {
    match format {
        Format::Table => out.push_str(&AuditResult::render_table(results)),
        Format::Records => {
            for r in results {
                out.push_str(&r.to_record());
                out.push('\n');
            }
        }
        Format::Dot | Format::Graph6 => {
            return Err(Failure::Usage("audit output is `table` or `records`".into()));
        }
    }
    Ok(())
}

fn r_value(g: &Graph, source: &str, mode: Mode, caps: &OracleCaps) -> Result<RValue, Failure> {
    let spec = source.parse::<families::FamilySpec>().ok();
    Ok(match mode {
        Mode::Conv => match &spec {
            Some(s) => rainbow::r_conv_family(s, caps)?,
            None => rainbow::r_conv(g, caps)?,
        },
        Mode::Min => rainbow::r_min(g, caps)?,
        Mode::Max => rainbow::r_max(g, caps)?,
        Mode::Formula => {
            let s = spec.ok_or_else(|| Failure::Usage(format!("no closed form for {source:?}; use a family spec")))?;
            let f = rainbow::formula_r(&Formula::Family(s.clone()))?;
            let value = f.expected.as_exact().ok_or_else(|| Error::NoFormula(s.to_string()))?;
            RValue {
                value,
                chi: colouring::chromatic_number(g)?,
                method: rainbow::Method::Formula,
                witness: None,
                examined: 0,
            }
        }
    })
}

fn compute(source: &str, mode: Mode, format: Format, caps: &OracleCaps, out: &mut String) -> Result<(), Failure> {
    let g = families::parse_source(source)?;
    let chi = colouring::chromatic_number(&g)?;
    // Out of reach only for non-bipartite graphs with more than 64 edges.
    let chi_index = match colouring::chromatic_index(&g) {
        Ok(c) => Some(c),
        Err(Error::Edgeless) | Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let r = r_value(&g, source, mode, caps)?;
    let mode_name = format!("{mode:?}").to_lowercase();
    let r_name = match mode {
        Mode::Conv | Mode::Formula => "r",
        Mode::Min => "r_min",
        Mode::Max => "r_max",
    };
    match format {
        Format::Records => {
            let rec = json!({
                "graph": source,
                "order": g.order(),
                "size": g.size(),
                "chi": {"value": chi, "method": "oracle"},
                "chromatic_index": chi_index.map(|c| json!({"value": c, "method": "oracle"})),
                "mode": mode_name,
                "r": {"value": r.value, "method": r.method, "examined": r.examined},
                "witness": r.witness,
            });
            out.push_str(&rec.to_string());
            out.push('\n');
        }
        Format::Table => {
            let line = |out: &mut String, k: &str, v: String| out.push_str(&format!("{k:<16} {v}\n"));
            line(out, "graph", source.to_string());
            line(out, "order", g.order().to_string());
            line(out, "size", g.size().to_string());
            line(out, "chi", format!("{chi} [oracle]"));
            line(
                out,
                "chi'",
                chi_index.map_or("unavailable".into(), |c| format!("{c} [oracle]")),
            );
            line(out, r_name, format!("{} [{}]", r.value, r.method));
            if r.examined > 0 {
                line(out, "partitions", r.examined.to_string());
            }
            if let Some(p) = &r.witness {
                let classes: Vec<String> = p
                    .classes()
                    .iter()
                    .map(|c| format!("{{{}}}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                line(out, "witness", classes.join(" "));
                let rep = rainbow::rainbow_set(&g, p)?;
                line(out, "yielding", format!("{:?}", rep.yielding()));
            }
        }
        Format::Dot => out.push_str(&g.to_dot()),
        Format::Graph6 => {
            out.push_str(&graph::write_graph6(&g)?);
            out.push('\n');
        }
    }
    Ok(())
}

fn parse_subsets(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    text.split('/')
        .map(|part| {
            part.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| Failure::Usage(format!("bad vertex {s:?} in --subsets")))
                })
                .collect()
        })
        .collect()
}

fn transform(
    op: Op,
    source: &str,
    with: Option<&str>,
    subsets: Option<&str>,
    format: Format,
    out: &mut String,
) -> Result<(), Failure> {
    let g = families::parse_source(source)?;
    let other = || -> Result<Graph, Failure> {
        let text = with.ok_or_else(|| Failure::Usage(format!("--op {op:?} needs --with")))?;
        Ok(families::parse_source(text)?)
    };
    let emit = |out: &mut String, h: &Graph, dot: String| -> Result<(), Failure> {
        match format {
            Format::Dot => out.push_str(&dot),
            Format::Graph6 => {
                out.push_str(&graph::write_graph6(h)?);
                out.push('\n');
            }
            Format::Table | Format::Records => {
                return Err(Failure::Usage("transform output is `graph6` or `dot`".into()));
            }
        }
        Ok(())
    };
    let h = match op {
        Op::Union => transforms::disjoint_union(&g, &other()?),
        Op::Join => transforms::join(&g, &other()?),
        Op::Corona => transforms::corona(&g, &other()?),
        Op::Chithra => {
            let text = subsets.ok_or_else(|| Failure::Usage("--op chithra needs --subsets".into()))?;
            transforms::chithra(&g, &parse_subsets(text)?)?
        }
        Op::Linegraph => transforms::line_graph(&g)?,
        Op::Expand => {
            let x = transforms::expanded_line_graph(&g)?;
            let whole = Graph::new(x.order(), x.tagged_edges().into_iter().map(|(e, _)| e))?;
            return emit(out, &whole, x.to_dot());
        }
    };
    let dot = h.to_dot();
    emit(out, &h, dot)
}
