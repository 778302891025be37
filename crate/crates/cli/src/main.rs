use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use diadem_core::fixtures::{fixture_about, fixture_names};
use diadem_core::harness::{
    analyze, hunt, render_text, run_suite_with, Conjecture, FileFormat, Filters, Source, StreamSpec, SuiteOptions,
};
use diadem_core::theorems::{parse_claims, ClaimId, Status};
use diadem_core::{fixture, parse_edge_list, parse_graph6, to_dot, to_edge_list, to_graph6, Error, Graph, Limits};

#[derive(Parser)]
#[command(name = "diadem", version, about = "Exact independence structure of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report α, μ, d, core, corona, ker and diadem of one graph (or each graph of a graph6 file).
    Analyze(AnalyzeArgs),
    /// Evaluate the claim table over a graph stream.
    Suite(SuiteArgs),
    /// Search a graph stream for counterexamples to a conjecture.
    Hunt(HuntArgs),
    /// List or export the built-in example graphs.
    Fixture(FixtureArgs),
    /// List claim ids with their statements.
    Claims,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Edgelist,
    Graph6,
    Dot,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Read the graph from a file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// A graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// A built-in fixture.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Format of --input; by default `.g6` files are graph6, anything else an edge list.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct StreamSource {
    /// Every labeled graph on K vertices, or on A..=B vertices with `A-B`.
    #[arg(long, value_name = "K|A-B")]
    n: Option<String>,
    /// Seeded G(n, p) samples.
    #[arg(long, value_name = "n,p,count,seed")]
    random: Option<String>,
    /// A graph6 file (one graph per line) or a single edge-list graph.
    #[arg(long)]
    file: Option<PathBuf>,
    /// The built-in fixtures.
    #[arg(long)]
    fixtures: bool,
}

#[derive(Args)]
struct StreamArgs {
    #[command(flatten)]
    source: StreamSource,
    /// Format of --file; by default `.g6` files are graph6, anything else an edge list.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Keep only connected graphs.
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    min_edges: Option<usize>,
    #[arg(long)]
    max_edges: Option<usize>,
    /// Permit exhaustive streams with n = 8.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct SuiteArgs {
    #[command(flatten)]
    stream: StreamArgs,
    /// `all` or a comma-separated list of claim ids.
    #[arg(long, default_value = "all")]
    claims: String,
    /// Continue past failing claims instead of stopping at the first.
    #[arg(long)]
    keep_going: bool,
    /// Emit every outcome, not only failures.
    #[arg(long)]
    verbose: bool,
    /// Write the first failing outcome to this file.
    #[arg(long)]
    failure_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct HuntArgs {
    /// ker-diadem or diadem-corona-ke.
    #[arg(long)]
    conjecture: String,
    #[command(flatten)]
    stream: StreamArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FixtureSelect {
    #[arg(long)]
    list: bool,
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct FixtureArgs {
    #[command(flatten)]
    select: FixtureSelect,
    #[arg(long, value_enum, default_value = "edgelist")]
    emit: Emit,
}

type CliResult = Result<ExitCode, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Suite(a) => cmd_suite(a),
        Command::Hunt(a) => cmd_hunt(a),
        Command::Fixture(a) => cmd_fixture(a),
        Command::Claims => cmd_claims(),
    };
    match run {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn file_format(path: &Path, format: Option<Format>) -> Format {
    format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::Graph6,
        _ => Format::Edgelist,
    })
}

fn read_graphs(src: &GraphSource, format: Option<Format>) -> Result<Vec<Graph>, Error> {
    if let Some(s) = &src.g6 {
        return Ok(vec![parse_graph6(s.trim())?]);
    }
    if let Some(name) = &src.fixture {
        return Ok(vec![fixture(name)?]);
    }
    let path = src.input.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path)?;
    match file_format(path, format) {
        Format::Edgelist => Ok(vec![parse_edge_list(&text)?]),
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect(),
    }
}

fn cmd_analyze(a: AnalyzeArgs) -> CliResult {
    let limits = Limits::from_env();
    let mut out = io::stdout().lock();
    let graphs = read_graphs(&a.source, a.format)?;
    for (i, g) in graphs.iter().enumerate() {
        let r = analyze(g, &limits)?;
        match a.output {
            Output::Json => writeln!(out, "{}", serde_json::to_string(&r).expect("report serializes"))?,
            Output::Text => {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", render_text(g, &r))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::InvalidSpec(format!("--n expects K or A-B, got `{s}`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once('-') {
        Some((a, b)) => Ok((num(a)?, num(b)?)),
        None => {
            let k = num(s)?;
            Ok((k, k))
        }
    }
}

fn parse_random(s: &str) -> Result<Source, Error> {
    let bad = || Error::InvalidSpec(format!("--random expects n,p,count,seed, got `{s}`"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [n, p, count, seed] = parts[..] else {
        return Err(bad());
    };
    Ok(Source::Random {
        n: n.parse().map_err(|_| bad())?,
        p: p.parse().map_err(|_| bad())?,
        count: count.parse().map_err(|_| bad())?,
        seed: seed.parse().map_err(|_| bad())?,
    })
}

fn stream_spec(a: &StreamArgs) -> Result<StreamSpec, Error> {
    let s = &a.source;
    let source = if let Some(n) = &s.n {
        let (min_n, max_n) = parse_range(n)?;
        Source::Exhaustive { min_n, max_n }
    } else if let Some(r) = &s.random {
        parse_random(r)?
    } else if let Some(path) = &s.file {
        let format = match file_format(path, a.format) {
            Format::Graph6 => FileFormat::Graph6,
            Format::Edgelist => FileFormat::Edgelist,
        };
        Source::File {
            path: path.clone(),
            format,
        }
    } else {
        Source::Fixtures
    };
    let mut spec = StreamSpec::new(source).with_filters(Filters {
        connected_only: a.connected,
        min_edges: a.min_edges,
        max_edges: a.max_edges,
    });
    spec.allow_large = a.allow_large;
    spec.validate()?;
    Ok(spec)
}

fn cmd_suite(a: SuiteArgs) -> CliResult {
    let spec = stream_spec(&a.stream)?;
    let opts = SuiteOptions {
        claims: parse_claims(&a.claims)?,
        stop_on_fail: !a.keep_going,
        limits: Limits::from_env(),
    };
    let mut out = io::stdout().lock();
    let json = a.output == Output::Json;
    let mut write_err = None;
    let report = run_suite_with(&spec, &opts, |o| {
        if json && (a.verbose || o.status == Status::Fails) {
            if let Err(e) = writeln!(out, "{}", serde_json::to_string(o).expect("outcome serializes")) {
                write_err.get_or_insert(e);
            }
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    if let (Some(path), Some(f)) = (&a.failure_out, &report.first_failure) {
        fs::write(path, serde_json::to_string_pretty(f).expect("outcome serializes") + "\n")?;
    }
    if json {
        let mut summary = serde_json::to_value(&report).expect("report serializes");
        summary["summary"] = "suite".into();
        writeln!(out, "{summary}")?;
    } else {
        writeln!(out, "graphs: {}", report.graphs)?;
        writeln!(out, "{:<22}{:>10}{:>8}{:>16}", "claim", "holds", "fails", "not-applicable")?;
        for t in &report.tallies {
            writeln!(out, "{:<22}{:>10}{:>8}{:>16}", t.claim_id, t.holds, t.fails, t.not_applicable)?;
        }
        if let Some(f) = &report.first_failure {
            writeln!(out, "first failure: {}", serde_json::to_string(f).expect("outcome serializes"))?;
        }
        if report.stopped_early {
            writeln!(out, "stopped at the first failure")?;
        }
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_hunt(a: HuntArgs) -> CliResult {
    let conj: Conjecture = a.conjecture.parse()?;
    let spec = stream_spec(&a.stream)?;
    let report = hunt(&spec, conj, &Limits::from_env())?;
    let mut out = io::stdout().lock();
    match a.output {
        Output::Json => write!(out, "{}", report.to_json_lines())?,
        Output::Text => {
            for f in &report.findings {
                writeln!(out, "{}  {}", f.graph_id, f.violated)?;
            }
            writeln!(
                out,
                "{}: {} graphs, {} counterexamples",
                conj, report.summary.graphs, report.summary.findings
            )?;
        }
    }
    Ok(if report.findings.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_fixture(a: FixtureArgs) -> CliResult {
    let mut out = io::stdout().lock();
    if a.select.list {
        for name in fixture_names() {
            writeln!(out, "{name:<10} {}", fixture_about(name).unwrap_or(""))?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let g = fixture(a.select.name.as_deref().expect("clap enforces one selector"))?;
    match a.emit {
        Emit::Edgelist => write!(out, "{}", to_edge_list(&g))?,
        Emit::Graph6 => writeln!(out, "{}", to_graph6(&g)?)?,
        Emit::Dot => write!(out, "{}", to_dot(&g))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_claims() -> CliResult {
    let mut out = io::stdout().lock();
    for c in ClaimId::ALL {
        writeln!(out, "{:<22}{}", c.as_str(), c.statement())?;
    }
    Ok(ExitCode::SUCCESS)
}
