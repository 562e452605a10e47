//! `stepcomp`: batch front end for deciding, constructing, verifying and
//! brute-forcing (i,j)-step competitive orientations.
//!
//! Exit codes: 0 orientable / competitive / all conditions pass, 1 the
//! negative outcome, 2 usage or input error, 3 steps (1,1) unsupported.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use stepcomp::io::{emit_graph, emit_partitioned, export_dot, export_graph_dot, parse_digraph, parse_graph};
use stepcomp::oracle::{brute_force_orientable, write_audit_csv, AuditRecord, BruteForceOptions, DEFAULT_EDGE_CAP};
use stepcomp::{
    check_necessary, competition_graph, construct, decide, is_competitive, Competitiveness, Construction, Graph,
    PartitionSpec, StepPair, Verdict,
};

const POSITIVE: u8 = 0;
const NEGATIVE: u8 = 1;
const FAILURE: u8 = 2;
const UNSUPPORTED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "stepcomp", version, about = "(i,j)-step competitive orientations of complete multipartite graphs")]
struct Cli {
    /// Output format; not every subcommand supports every format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether K_{n1,...,nk} has an (i,j)-step competitive orientation.
    Decide {
        #[command(flatten)]
        partition: PartitionArg,
        #[command(flatten)]
        steps: StepsArg,
    },
    /// Build a verified competitive orientation and write it as an arc list.
    Construct {
        #[command(flatten)]
        partition: PartitionArg,
        #[command(flatten)]
        steps: StepsArg,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the orientation as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check whether a digraph file is (i,j)-step competitive.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        steps: StepsArg,
    },
    /// Print the (i,j)-step competition graph of a digraph file.
    CompetitionGraph {
        file: PathBuf,
        #[command(flatten)]
        steps: StepsArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search every orientation of a graph for a competitive one.
    BruteForce {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        steps: StepsArg,
        /// Count all competitive orientations instead of stopping at the first.
        #[arg(long)]
        count: bool,
        /// Largest edge count to enumerate.
        #[arg(long, env = "STEPCOMP_EDGE_CAP", default_value_t = DEFAULT_EDGE_CAP)]
        cap: usize,
        /// Worker threads for the mask scan.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Skip enumeration when a necessary condition already fails.
        #[arg(long)]
        quick_reject: bool,
    },
    /// Report the six necessary conditions for orientability.
    Necessary {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        steps: StepsArg,
    },
}

#[derive(Debug, Args)]
struct PartitionArg {
    /// Part sizes, e.g. `10,5`; sorted non-increasing if needed.
    #[arg(long)]
    partition: String,
}

#[derive(Debug, Args)]
struct StepsArg {
    /// Step bounds `i,j`; swapped to i <= j if needed.
    #[arg(long)]
    steps: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Complete multipartite graph given by part sizes.
    #[arg(long)]
    partition: Option<String>,
    /// Graph file (`graph`/`edge` lines) or digraph file, whose underlying graph is used.
    #[arg(long)]
    graph: Option<PathBuf>,
}

impl PartitionArg {
    fn parse(&self) -> Result<PartitionSpec> {
        parse_partition(&self.partition)
    }
}

impl StepsArg {
    fn parse(&self) -> Result<StepPair> {
        let steps: StepPair = self.steps.parse()?;
        if steps.i() > steps.j() {
            eprintln!("note: steps canonicalized to {}", steps.canonical());
        }
        Ok(steps.canonical())
    }
}

impl GraphInput {
    /// The graph and a label for reports.
    fn load(&self) -> Result<(Graph, String)> {
        match (&self.partition, &self.graph) {
            (Some(p), _) => {
                let spec = parse_partition(p)?;
                Ok((spec.complete_graph(), spec.to_string()))
            }
            (None, Some(path)) => Ok((parse_graph(&read(path)?)?, path.display().to_string())),
            (None, None) => bail!("one of --partition or --graph is required"),
        }
    }
}

fn parse_partition(raw: &str) -> Result<PartitionSpec> {
    let spec: PartitionSpec = raw.parse()?;
    let given: Vec<&str> = raw.split(',').map(str::trim).collect();
    if given.join(",") != spec.to_string() {
        eprintln!("note: partition sorted to {spec}");
    }
    Ok(spec)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn csv_text<const N: usize>(header: [&str; N], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn format_of(chosen: Option<Format>, default: Format, allowed: &[Format], command: &str) -> Result<Format> {
    let format = chosen.unwrap_or(default);
    if !allowed.contains(&format) {
        bail!("{command} does not support --format {:?}", format);
    }
    Ok(format)
}

fn run(cli: Cli) -> Result<u8> {
    let format = cli.format;
    match cli.command {
        Command::Decide { partition, steps } => {
            let format = format_of(format, Format::Text, &[Format::Text, Format::Csv], "decide")?;
            cmd_decide(&partition.parse()?, steps.parse()?, format)
        }
        Command::Construct { partition, steps, out, dot } => {
            let format = format_of(format, Format::Text, &[Format::Text, Format::Dot], "construct")?;
            cmd_construct(&partition.parse()?, steps.parse()?, out.as_deref(), dot.as_deref(), format)
        }
        Command::Verify { file, steps } => {
            let format = format_of(format, Format::Text, &[Format::Text, Format::Csv], "verify")?;
            cmd_verify(&file, steps.parse()?, format)
        }
        Command::CompetitionGraph { file, steps, out } => {
            let all = [Format::Text, Format::Csv, Format::Dot];
            let format = format_of(format, Format::Text, &all, "competition-graph")?;
            cmd_competition_graph(&file, steps.parse()?, out.as_deref(), format)
        }
        Command::BruteForce { input, steps, count, cap, jobs, quick_reject } => {
            let format = format_of(format, Format::Csv, &[Format::Text, Format::Csv], "brute-force")?;
            let opts = BruteForceOptions { cap, count, jobs: jobs.max(1), audit: !quick_reject };
            cmd_brute_force(&input, steps.parse()?, &opts, format)
        }
        Command::Necessary { input, steps } => {
            let format = format_of(format, Format::Text, &[Format::Text, Format::Csv], "necessary")?;
            cmd_necessary(&input, steps.parse()?, format)
        }
    }
}

fn cmd_decide(p: &PartitionSpec, steps: StepPair, format: Format) -> Result<u8> {
    let verdict = decide(p, steps)?;
    let code = match verdict {
        Verdict::Orientable { .. } => POSITIVE,
        Verdict::NotOrientable { .. } => NEGATIVE,
        Verdict::Unsupported => UNSUPPORTED,
    };
    if format == Format::Csv {
        let (outcome, clause, seed) = match &verdict {
            Verdict::Orientable { clause, plan } => ("orientable", clause.tag(), plan.seed.to_string()),
            Verdict::NotOrientable { clause } => ("not_orientable", clause.tag(), String::new()),
            Verdict::Unsupported => ("unsupported", "", String::new()),
        };
        let row = vec![p.to_string(), steps.to_string(), outcome.into(), clause.into(), seed];
        print!("{}", csv_text(["partition", "steps", "verdict", "clause", "seed"], [row])?);
    } else {
        println!("{verdict}");
    }
    Ok(code)
}

fn cmd_construct(
    p: &PartitionSpec,
    steps: StepPair,
    out: Option<&Path>,
    dot: Option<&Path>,
    format: Format,
) -> Result<u8> {
    match construct(p, steps)? {
        Construction::Unsupported => {
            println!("{}", Verdict::Unsupported);
            Ok(UNSUPPORTED)
        }
        Construction::NotOrientable { clause } => {
            println!("NotOrientable [{clause}]");
            Ok(NEGATIVE)
        }
        Construction::Built { clause, seed, orientation } => {
            let d = orientation.digraph();
            let body = match format {
                Format::Dot => export_dot(d, Some(orientation.partition())),
                _ => emit_partitioned(&orientation),
            };
            write_output(out, &body)?;
            if let Some(path) = dot {
                write_output(Some(path), &export_dot(d, Some(orientation.partition())))?;
            }
            let summary = format!(
                "Built [{clause}] seed={seed}: {} vertices, {} arcs, verified ({steps})-step competitive",
                d.vertex_count(),
                d.arc_count()
            );
            match out {
                Some(path) => println!("{summary} -> {}", path.display()),
                None => eprintln!("{summary}"),
            }
            Ok(POSITIVE)
        }
    }
}

fn cmd_verify(file: &Path, steps: StepPair, format: Format) -> Result<u8> {
    let parsed = parse_digraph(&read(file)?)?;
    let result = is_competitive(parsed.digraph(), steps)?;
    let (code, pair) = match result {
        Competitiveness::Competitive => (POSITIVE, None),
        Competitiveness::FailingPair(u, v) => (NEGATIVE, Some((u, v))),
    };
    if format == Format::Csv {
        let row = vec![
            file.display().to_string(),
            steps.to_string(),
            pair.is_none().to_string(),
            pair.map(|(u, _)| u.to_string()).unwrap_or_default(),
            pair.map(|(_, v)| v.to_string()).unwrap_or_default(),
        ];
        print!("{}", csv_text(["file", "steps", "competitive", "failing_u", "failing_v"], [row])?);
    } else {
        match pair {
            None => println!("competitive"),
            Some((u, v)) => println!("not competitive: vertices {u} and {v} do not ({steps})-step compete"),
        }
    }
    Ok(code)
}

fn cmd_competition_graph(file: &Path, steps: StepPair, out: Option<&Path>, format: Format) -> Result<u8> {
    let parsed = parse_digraph(&read(file)?)?;
    let g = competition_graph(parsed.digraph(), steps);
    let body = match format {
        Format::Dot => export_graph_dot(&g),
        Format::Csv => csv_text(["u", "v"], g.edges().map(|(u, v)| vec![u.to_string(), v.to_string()]))?,
        Format::Text => emit_graph(&g),
    };
    write_output(out, &body)?;
    Ok(POSITIVE)
}

fn cmd_brute_force(input: &GraphInput, steps: StepPair, opts: &BruteForceOptions, format: Format) -> Result<u8> {
    let (g, label) = input.load()?;
    let result = brute_force_orientable(&g, steps, opts)?;
    if format == Format::Csv {
        let mut buf = Vec::new();
        write_audit_csv(&mut buf, &[AuditRecord::new(label, steps, &result)])?;
        std::io::stdout().write_all(&buf)?;
    } else {
        println!("graph: {label} ({} vertices, {} edges), steps ({steps})", g.vertex_count(), g.edge_count());
        println!("orientable: {}", result.orientable);
        if let Some(mask) = result.witness_mask {
            println!("witness mask: {mask}");
        }
        if let Some(count) = result.competitive_count {
            println!("competitive orientations: {count}");
        }
        println!("orientations checked: {} of {}", result.orientations_checked, 1u128 << g.edge_count());
        if let Some(report) = &result.quick_reject {
            let failed: Vec<String> = report.failed().iter().map(|c| format!("({})", c.number())).collect();
            println!("necessary conditions failing: {}", failed.join(" "));
        }
        println!("elapsed: {:.3?}", result.elapsed);
    }
    Ok(if result.orientable { POSITIVE } else { NEGATIVE })
}

fn cmd_necessary(input: &GraphInput, steps: StepPair, format: Format) -> Result<u8> {
    let (g, label) = input.load()?;
    let report = check_necessary(&g, steps)?;
    if format == Format::Csv {
        let rows = report.outcomes().iter().map(|(c, outcome)| {
            vec![
                c.number().to_string(),
                c.description().to_string(),
                outcome.is_none().to_string(),
                outcome.as_ref().map(ToString::to_string).unwrap_or_default(),
            ]
        });
        print!("{}", csv_text(["condition", "description", "pass", "counterexample"], rows)?);
    } else {
        println!("graph: {label} ({} vertices, {} edges), steps ({steps})", g.vertex_count(), g.edge_count());
        print!("{report}");
        if report.all_pass() {
            println!("all necessary conditions hold");
        } else {
            let failed: Vec<String> = report.failed().iter().map(|c| format!("({})", c.number())).collect();
            println!("failing: {}", failed.join(" "));
        }
    }
    Ok(if report.all_pass() { POSITIVE } else { NEGATIVE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(FAILURE)
        }
    }
}
