//! The `floodpoly` command line. [`run`] does all the work and returns the
//! exit code and both output streams, so it can be tested without a process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{facts_from_polynomial, find_equivalent, non_isomorphic_graphs, verify_graph, PolyFacts};
use crate::cascade::trace;
use crate::enumeration::{flood_summary_with, EnumerationConfig, DEFAULT_CAP, MAX_CAP};
use crate::error::FloodError;
use crate::families::parse_family;
use crate::formulas::formula_for;
use crate::graph::{parse_graph6_corpus, Graph, VertexSet};
use crate::poly::IntPolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "floodpoly", version, about = "Exact flood polynomials of threshold-2 cascades")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true, value_name = "K", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Largest vertex count to enumerate.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_CAP,
          value_parser = parse_cap)]
    pub cap: usize,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_CAP).contains(&cap) {
        Ok(cap)
    } else {
        Err(format!("must be between 1 and {MAX_CAP}"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brute-force the flood polynomial of a graph.
    Compute {
        /// Family spec such as `cycle:4`, `path:3 + cycle:3` or `@edges.txt`.
        graph: String,
        /// Also list the minimal flooding sets.
        #[arg(long)]
        minimal: bool,
        /// Also list the free vertices.
        #[arg(long)]
        free: bool,
    },
    /// Evaluate the closed form for a family spec.
    Formula { family: String },
    /// Compare the closed form with brute force and check the coefficient laws.
    Verify { family: String },
    /// Run the cascade from a seed set and print every step.
    Cascade {
        graph: String,
        /// Seed vertices, 1-indexed and comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        seed: Vec<usize>,
    },
    /// Read structural facts off a polynomial such as `x^4 + 4x^3 + 2x^2`.
    Facts { polynomial: String },
    /// Find non-isomorphic graphs with equal flood polynomials.
    Search {
        /// Every graph on N vertices, up to isomorphism.
        #[arg(long, value_name = "N", conflicts_with = "corpus", required_unless_present = "corpus")]
        all_graphs: Option<usize>,
        /// A graph6 file, one graph per line.
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
    },
    /// List the accepted family spec syntax.
    Families,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Flood(FloodError),
}

impl From<FloodError> for Failure {
    fn from(e: FloodError) -> Self {
        Failure::Flood(e)
    }
}

type CmdResult = Result<(i32, String), Failure>;

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Flood(e)) => Outcome {
            code: match e {
                FloodError::TooLarge { .. } => EXIT_TOO_LARGE,
                _ => EXIT_USAGE,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> CmdResult {
    let cfg = EnumerationConfig {
        cap: cli.opts.cap,
        threads: cli.opts.threads.map(|t| t as usize),
    };
    let json = cli.opts.json;
    match &cli.command {
        Command::Compute { graph, minimal, free } => compute(graph, *minimal, *free, &cfg, json),
        Command::Formula { family } => formula(family, json),
        Command::Verify { family } => verify(family, &cfg, json),
        Command::Cascade { graph, seed } => cascade(graph, seed, json),
        Command::Facts { polynomial } => facts(polynomial, json),
        Command::Search { all_graphs, corpus } => search(*all_graphs, corpus.as_ref(), &cfg, json),
        Command::Families => Ok((EXIT_OK, families_help())),
    }
}

fn load_graph(spec: &str) -> Result<Graph, Failure> {
    Ok(parse_family(spec)?.build()?)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn set_list(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|v| v + 1).collect()).collect()
}

fn facts_lines(out: &mut String, f: &PolyFacts) {
    let _ = writeln!(out, "n={}", f.n);
    let _ = writeln!(out, "flooding sets={}", f.flood_count);
    let _ = writeln!(out, "leaves+isolated={}", f.leaves_plus_isolated);
    let _ = writeln!(out, "triggers={}", f.trigger_count);
    let _ = writeln!(out, "free vertices<={}", f.free_vertex_upper_bound);
    let _ = writeln!(out, "c_(n-3)={}", f.c_n_minus_3);
}

fn compute(spec: &str, minimal: bool, free: bool, cfg: &EnumerationConfig, json: bool) -> CmdResult {
    let g = load_graph(spec)?;
    if g.n() == 0 {
        return Err(Failure::Usage("graph has no vertices".into()));
    }
    let summary = flood_summary_with(&g, cfg)?;
    let facts = facts_from_polynomial(&summary.polynomial)?;
    if json {
        let mut v = json!({ "polynomial": summary.polynomial, "facts": facts });
        if minimal {
            v["minimal_sets"] = json!(set_list(&summary.minimal_sets));
        }
        if free {
            v["free_vertices"] = json!(set_list(std::slice::from_ref(&summary.free_vertices))[0]);
        }
        return Ok((EXIT_OK, to_json(&v)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "graph: {} (n={}, m={})", spec.trim(), g.n(), g.edge_count());
    let _ = writeln!(out, "F(x) = {}", summary.polynomial);
    let _ = writeln!(out, "|F(G)| = {}", summary.flood_set_size);
    if minimal {
        let _ = writeln!(out, "minimal flooding sets ({}):", summary.minimal_sets.len());
        for s in &summary.minimal_sets {
            let _ = writeln!(out, "  {s}");
        }
    }
    if free {
        let _ = writeln!(out, "free vertices ({}): {}", summary.free_vertices.len(), summary.free_vertices);
    }
    Ok((EXIT_OK, out))
}

fn closed_form(spec: &str) -> Result<IntPolynomial, Failure> {
    let parsed = parse_family(spec)?;
    match formula_for(&parsed) {
        Some(p) => Ok(p?),
        None => Err(Failure::Usage(format!("no closed form covers `{parsed}`"))),
    }
}

fn formula(spec: &str, json: bool) -> CmdResult {
    let p = closed_form(spec)?;
    if json {
        return Ok((EXIT_OK, to_json(&json!({ "polynomial": p }))));
    }
    Ok((EXIT_OK, format!("F(x) = {p}\n")))
}

fn verify(spec: &str, cfg: &EnumerationConfig, json: bool) -> CmdResult {
    let parsed = parse_family(spec)?;
    let g = parsed.build()?;
    if g.n() == 0 {
        return Err(Failure::Usage("graph has no vertices".into()));
    }
    let expected = formula_for(&parsed).transpose()?;
    let report = verify_graph(&g, cfg)?;
    let formula_ok = expected.as_ref().map(|p| *p == report.polynomial);
    let pass = report.passed() && formula_ok != Some(false);

    if json {
        let v = json!({
            "polynomial": report.polynomial,
            "formula": expected,
            "facts": report.facts,
            "laws": report.checks,
            "verdict": verdict(pass),
        });
        return Ok((if pass { EXIT_OK } else { EXIT_FAIL }, to_json(&v)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "brute force: F(x) = {}", report.polynomial);
    match (&expected, formula_ok) {
        (Some(p), Some(ok)) => {
            let _ = writeln!(out, "formula:     F(x) = {p}");
            let _ = writeln!(out, "formula == brute force: {}", verdict(ok));
        }
        _ => {
            let _ = writeln!(out, "formula: none for this spec");
        }
    }
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{}: polynomial {} / graph {}: {}",
            c.law,
            c.from_polynomial,
            c.from_graph,
            verdict(c.pass)
        );
    }
    let _ = writeln!(out, "verdict: {}", verdict(pass));
    Ok((if pass { EXIT_OK } else { EXIT_FAIL }, out))
}

fn cascade(spec: &str, seed: &[usize], json: bool) -> CmdResult {
    let g = load_graph(spec)?;
    if let Some(&bad) = seed.iter().find(|&&v| v == 0 || v > g.n()) {
        return Err(Failure::Usage(format!("seed vertex {bad} is not in 1..={}", g.n())));
    }
    let c = VertexSet::from_indices(g.n(), seed.iter().map(|v| v - 1)).expect("checked above");
    let t = trace(&g, &c);
    let stuck = t.closure().complement();
    if json {
        let v = json!({
            "steps": set_list(&t.steps),
            "converged_at": t.converged_at,
            "floods": t.floods(),
            "unflooded": set_list(std::slice::from_ref(&stuck))[0],
        });
        return Ok((EXIT_OK, to_json(&v)));
    }
    let mut out = String::new();
    for (i, s) in t.steps.iter().enumerate() {
        let _ = writeln!(out, "C{i} = {s}");
    }
    if t.floods() {
        let _ = writeln!(out, "FLOODS after {} steps", t.converged_at);
    } else {
        let _ = writeln!(out, "STUCK after {} steps; unflooded {stuck}", t.converged_at);
    }
    Ok((EXIT_OK, out))
}

fn facts(text: &str, json: bool) -> CmdResult {
    let p: IntPolynomial = text.parse()?;
    let f = facts_from_polynomial(&p)?;
    if json {
        return Ok((EXIT_OK, to_json(&json!({ "polynomial": p, "facts": f }))));
    }
    let mut out = format!("F(x) = {p}\n");
    facts_lines(&mut out, &f);
    Ok((EXIT_OK, out))
}

fn search(all: Option<usize>, corpus: Option<&PathBuf>, cfg: &EnumerationConfig, json: bool) -> CmdResult {
    let graphs = match (all, corpus) {
        (Some(n), _) => non_isomorphic_graphs(n)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            parse_graph6_corpus(&text)?
        }
        (None, None) => return Err(Failure::Usage("give --all-graphs N or --corpus FILE".into())),
    };
    let report = find_equivalent(graphs, cfg)?;
    if json {
        return Ok((EXIT_OK, to_json(&report)));
    }
    let mut out = String::new();
    for class in &report.classes {
        let _ = writeln!(out, "F(x) = {}", class.polynomial);
        for m in &class.members {
            let _ = writeln!(out, "  {m}");
        }
    }
    let _ = writeln!(
        out,
        "{} classes among {} graphs ({} skipped)",
        report.classes.len(),
        report.examined,
        report.skipped
    );
    Ok((EXIT_OK, out))
}

fn families_help() -> String {
    "\
Graph arguments are disjoint unions of atoms joined by `+` (or `⊕`):

  path:N             path on N vertices
  cycle:N            cycle on N >= 3 vertices
  grid:MxN           M x N grid (formula when min(M, N) <= 2)
  complete:N         complete graph (brute force only)
  triangle:N         strip of N - 2 triangles on N vertices
  centipede:A1,A2,.. path on sum(A) + 1 vertices, 4 leaves after each descent
  tick:A1,A2,..      cycle on sum(A) vertices, 4 leaves at each descent and the last vertex
  empty:N            N isolated vertices
  g6:STRING          one graph in graph6
  @FILE              edge list: header `n m`, then `u v` per line, 1-indexed

example: floodpoly compute 'path:3 + cycle:3'
"
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("floodpoly").chain(args.iter().copied()))
    }

    #[test]
    fn compute_cycle() {
        let o = go(&["compute", "cycle:4"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("F(x) = x^4 + 4x^3 + 2x^2\n"), "{}", o.stdout);
    }

    #[test]
    fn verify_path() {
        let o = go(&["verify", "path:8"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("formula == brute force: PASS"));
    }

    #[test]
    fn facts_two_vertices() {
        let o = go(&["facts", "x^2"]);
        assert_eq!(o.code, 0);
        for line in ["n=2", "leaves+isolated=2", "triggers=0"] {
            assert!(o.stdout.lines().any(|l| l == line), "{line} in {}", o.stdout);
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["compute"]).code, EXIT_USAGE);
        assert_eq!(go(&["compute", "nonsense:3"]).code, EXIT_USAGE);
        assert_eq!(go(&["facts", "2x^2"]).code, EXIT_USAGE);
        assert_eq!(go(&["compute", "path:30"]).code, EXIT_TOO_LARGE);
        assert_eq!(go(&["compute", "path:12", "--cap", "10"]).code, EXIT_TOO_LARGE);
        assert_eq!(go(&["compute", "path:3", "--threads", "0"]).code, EXIT_USAGE);
        assert_eq!(go(&["formula", "complete:4"]).code, EXIT_USAGE);
        assert_eq!(go(&["cascade", "path:3", "--seed", "4"]).code, EXIT_USAGE);
        assert_eq!(go(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn cascade_stuck() {
        let o = go(&["cascade", "path:5", "--seed", "1,3"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("C1 = {1, 2, 3}"), "{}", o.stdout);
        assert!(o.stdout.contains("STUCK after 1 steps; unflooded {4, 5}"), "{}", o.stdout);
    }

    #[test]
    fn json_round_trips() {
        let o = go(&["compute", "cycle:4", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        let p: IntPolynomial = serde_json::from_value(v["polynomial"].clone()).unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[0, 0, 2, 4, 1]));
        assert_eq!(v["facts"]["trigger_count"], 4);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let base = go(&["compute", "grid:3x4", "--minimal", "--free", "--threads", "1"]);
        for t in ["2", "8"] {
            let o = go(&["compute", "grid:3x4", "--minimal", "--free", "--threads", t]);
            assert_eq!(o.stdout, base.stdout);
        }
    }
}
