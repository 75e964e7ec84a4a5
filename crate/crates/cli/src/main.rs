//! `shallow`: compute, verify and generate from the command line.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 violation, 2 input error, 3 size cap exceeded.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use shallow_core::corpus::{canonical_form, parse_lines, CANONICAL_MAX};
use shallow_core::generators::{generate, FamilyParams};
use shallow_core::harness::{
    high_girth_suite, run_corpus, self_test, HighGirthReport, Param, ParameterReport, ParameterStore, RunConfig, Suite,
    Summary,
};
use shallow_core::limits::{Limits, DEFAULT_MAX_VERTICES, MAX_VERTICES_ENV};
use shallow_core::linkedness::WellLinkedMode;
use shallow_core::{encode_graph6, par, Depth, Error};

const VIOLATION: u8 = 1;
const INPUT_ERROR: u8 = 2;
const CAP_EXCEEDED: u8 = 3;

#[derive(Parser)]
#[command(name = "shallow", version, about = "Exact bounded-radius graph parameters with certificates")]
struct Cli {
    /// Emit one JSON record per line instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest graph any subset enumeration accepts.
    #[arg(long, global = true, env = MAX_VERTICES_ENV, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run exhaustive searches beyond the default size refusal.
    #[arg(long, global = true)]
    force: bool,
    /// Include per-parameter timings in reports. Makes output run-dependent.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameters for each graph of the input.
    Compute(ComputeArgs),
    /// Like compute, always emitting witnesses.
    Witness(ComputeArgs),
    /// Check the inequality suites on each graph of the input.
    Verify(VerifyArgs),
    /// Generate a graph and print it as graph6.
    Gen(GenArgs),
    /// Re-encode graph6 input in canonical labeling.
    Encode {
        #[arg(long, default_value = "-")]
        input: String,
    },
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    param: ParamArg,
    /// Radius, a natural number or `inf`.
    #[arg(long, default_value = "1")]
    radius: Depth,
    /// `t` for `bnt`, and for `bnt` within `all`.
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// graph6 file, one graph per line; `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Permissive)]
    well_mode: ModeArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest radius checked; for lemma41, the radius of the coloring check.
    #[arg(long, default_value_t = 2)]
    rmax: u32,
    #[arg(long, default_value_t = 3)]
    tmax: usize,
    /// graph6 file, one graph per line; `-` for stdin. Not read by lemma41.
    #[arg(long, default_value = "-")]
    input: String,
    /// Degree for lemma41.
    #[arg(long)]
    d: Option<usize>,
    /// Bramble radius for lemma41.
    #[arg(long)]
    s: Option<u32>,
    /// Report every violation instead of stopping at the first.
    #[arg(long)]
    collect: bool,
    /// Print an aggregate table instead of per-graph reports.
    #[arg(long)]
    summary: bool,
    /// Forge a certificate for each graph and check that it is rejected.
    #[arg(long)]
    self_test: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Permissive)]
    well_mode: ModeArg,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParamArg {
    Scol,
    Bn,
    Bnt,
    Tn,
    Link,
    Well,
    Omega,
    Nabla,
    Grid,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Thm31,
    Thm32,
    Chain,
    Minors,
    Constructions,
    Lemma41,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Permissive,
    Disjoint,
}

impl From<ModeArg> for WellLinkedMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Permissive => WellLinkedMode::Permissive,
            ModeArg::Disjoint => WellLinkedMode::Disjoint,
        }
    }
}

/// A failure carrying its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(INPUT_ERROR, e.to_string())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => CAP_EXCEEDED,
        Error::Invariant(_) => VIOLATION,
        _ => INPUT_ERROR,
    }
}

fn read_input(path: &str) -> io::Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| io::Error::new(e.kind(), format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

struct Out {
    json: bool,
    buf: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let run = || execute(&cli);
    let (out, result) = match cli.threads {
        Some(k) => par::with_threads(k.max(1), run),
        None => run(),
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.buf.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(INPUT_ERROR);
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn execute(cli: &Cli) -> (Out, Result<u8, Failure>) {
    let mut out = Out { json: cli.json, buf: String::new() };
    let limits = Limits { max_vertices: cli.max_vertices, force: cli.force, ..Limits::default() };
    let result = match &cli.command {
        Command::Compute(a) => compute(&mut out, a, &limits, false, cli.timings),
        Command::Witness(a) => compute(&mut out, a, &limits, true, cli.timings),
        Command::Verify(a) => verify(&mut out, a, &limits, cli.timings),
        Command::Gen(a) => gen(&mut out, a),
        Command::Encode { input } => encode(&mut out, input),
    };
    (out, result)
}

fn compute(out: &mut Out, a: &ComputeArgs, limits: &Limits, witnesses: bool, timings: bool) -> Result<u8, Failure> {
    let graphs = parse_lines(&read_input(&a.input)?)?;
    let params: Vec<Param> = match a.param {
        ParamArg::All => Param::all(a.t).to_vec(),
        ParamArg::Bnt => vec![Param::Bnt(a.t)],
        p => vec![param(p)],
    };
    if params.iter().any(|p| matches!(p, Param::Bnt(0))) {
        return Err(Failure(INPUT_ERROR, "--t must be at least 1".into()));
    }
    let mut code = 0;
    for (_, g) in &graphs {
        let mut store = ParameterStore::new(g, *limits, a.well_mode.into());
        for &p in &params {
            if let Err(e) = store.get(p, a.radius) {
                log::warn!("{}: {}: {e}", encode_graph6(g), p.key(a.radius));
                code = code.max(exit_code(&e));
            }
        }
        let rep = ParameterReport::from_store(&store, a.radius, a.t, witnesses, timings);
        if out.json {
            out.line(json(&rep));
        } else {
            plain_values(out, &rep);
        }
    }
    Ok(code)
}

fn param(p: ParamArg) -> Param {
    match p {
        ParamArg::Scol => Param::Scol,
        ParamArg::Bn => Param::Bn,
        ParamArg::Bnt => Param::Bnt(0),
        ParamArg::Tn => Param::Tn,
        ParamArg::Link => Param::Link,
        ParamArg::Well => Param::Well,
        ParamArg::Omega => Param::Omega,
        ParamArg::Nabla => Param::Nabla,
        ParamArg::Grid => Param::Grid,
        ParamArg::All => unreachable!("expanded by the caller"),
    }
}

fn plain_values(out: &mut Out, rep: &ParameterReport) {
    let mut line = rep.graph6.clone();
    for (k, v) in &rep.parameters {
        let _ = write!(line, " {k}={v}");
    }
    out.line(line);
    for (k, w) in rep.witnesses.iter().flatten() {
        out.line(format!("{} witness {k} {}", rep.graph6, json(w)));
    }
    for (k, ms) in rep.timings_ms.iter().flatten() {
        out.line(format!("{} time_ms {k} {ms}", rep.graph6));
    }
}

fn verify(out: &mut Out, a: &VerifyArgs, limits: &Limits, timings: bool) -> Result<u8, Failure> {
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::Thm31 => vec![Suite::Classical],
        SuiteArg::Thm32 => vec![Suite::Shallow],
        SuiteArg::Chain => vec![Suite::Chain],
        SuiteArg::Minors => vec![Suite::Minors],
        SuiteArg::Constructions => vec![Suite::Constructions],
        SuiteArg::Lemma41 => Vec::new(),
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let lemma = a.suite == SuiteArg::Lemma41 || (a.suite == SuiteArg::All && a.d.is_some());
    if a.tmax == 0 {
        return Err(Failure(INPUT_ERROR, "--tmax must be at least 1".into()));
    }
    let mut code = 0;
    if a.self_test {
        return self_test_run(out, a, limits);
    }
    if !suites.is_empty() {
        let cfg = RunConfig {
            suites,
            rmax: a.rmax,
            tmax: a.tmax,
            witnesses: false,
            timings,
            collect: a.collect,
            limits: *limits,
            mode: a.well_mode.into(),
        };
        let outcome = run_corpus(&read_input(&a.input)?, &cfg)?;
        for rep in &outcome.reports {
            for s in &rep.skipped {
                log::warn!("{}: skipped {s}", rep.graph6);
            }
        }
        for v in &outcome.violations {
            eprintln!(
                "violation: line {} {} [{}] {}: {} vs {}{}",
                v.line,
                v.graph6,
                v.item.suite.name(),
                v.item.id,
                v.item.lhs,
                v.item.rhs,
                v.item.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default(),
            );
            for (k, w) in &v.witnesses {
                eprintln!("  witness {k} {}", json(w));
            }
        }
        if !outcome.violations.is_empty() {
            code = VIOLATION;
        }
        if a.summary {
            summary(out, &outcome.summary);
        } else {
            for rep in &outcome.reports {
                if out.json {
                    out.line(json(rep));
                } else {
                    plain_checks(out, rep);
                }
            }
        }
    }
    if lemma {
        let (Some(d), Some(s)) = (a.d, a.s) else {
            return Err(Failure(INPUT_ERROR, "lemma41 needs --d and --s".into()));
        };
        let rep = high_girth_suite(d, a.rmax, s, limits)?;
        if !rep.holds() {
            code = VIOLATION;
        }
        lemma_out(out, &rep);
    }
    Ok(code)
}

fn plain_checks(out: &mut Out, rep: &ParameterReport) {
    let counted = rep.inequalities.iter().filter(|i| !i.informational);
    let checks = counted.clone().count();
    let violations = counted.filter(|i| !i.holds).count();
    out.line(format!(
        "{} n={} m={} checks={checks} violations={violations} skipped={}",
        rep.graph6,
        rep.n,
        rep.m,
        rep.skipped.len()
    ));
}

fn summary(out: &mut Out, s: &Summary) {
    if out.json {
        out.line(json(s));
        return;
    }
    let width = s.items.keys().map(String::len).max().unwrap_or(4).max(4);
    out.line(format!("{:width$}  {:>7}  {:>10}  {:>9}", "item", "checks", "violations", "min_slack"));
    for (k, it) in &s.items {
        let slack = it.min_slack.map(|x| x.to_string()).unwrap_or_else(|| "-".into());
        out.line(format!("{k:width$}  {:>7}  {:>10}  {slack:>9}", it.checks, it.violations));
    }
    out.line(format!(
        "graphs={} checks={} violations={} skipped={} runtime_ms={}",
        s.graphs, s.checks, s.violations, s.skipped, s.runtime_ms
    ));
}

fn lemma_out(out: &mut Out, rep: &HighGirthReport) {
    if out.json {
        out.line(json(rep));
        return;
    }
    out.line(format!(
        "lemma41 graph={} n={} d={} r={} s={} holds={}",
        rep.graph,
        rep.n,
        rep.d,
        rep.r,
        rep.s,
        rep.holds()
    ));
    for c in &rep.checks {
        out.line(format!(
            "  {} value={} bound={} holds={} method={}",
            c.id,
            c.value,
            c.bound,
            c.holds,
            json(&c.method).trim_matches('"')
        ));
    }
}

fn self_test_run(out: &mut Out, a: &VerifyArgs, limits: &Limits) -> Result<u8, Failure> {
    let graphs = parse_lines(&read_input(&a.input)?)?;
    let r = Depth::Finite(a.rmax);
    let mut missed = 0;
    for (line, g) in &graphs {
        let caught = self_test(g, r, limits)?;
        if !caught {
            missed += 1;
            eprintln!("self-test: forged certificate accepted on line {line}");
        }
    }
    out.line(format!("self-test graphs={} rejected={}", graphs.len(), graphs.len() - missed));
    Ok(if missed > 0 { VIOLATION } else { 0 })
}

fn gen(out: &mut Out, a: &GenArgs) -> Result<u8, Failure> {
    let params = FamilyParams { n: a.n, p: a.p, seed: a.seed, t: a.t };
    out.line(encode_graph6(&generate(&a.family, &params)?));
    Ok(0)
}

fn encode(out: &mut Out, input: &str) -> Result<u8, Failure> {
    for (line, g) in parse_lines(&read_input(input)?)? {
        if g.n() > CANONICAL_MAX {
            log::warn!("line {line}: more than {CANONICAL_MAX} vertices, labeling kept");
            out.line(encode_graph6(&g));
        } else {
            out.line(encode_graph6(&canonical_form(&g)?));
        }
    }
    Ok(0)
}
