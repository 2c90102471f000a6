// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `vsdtc`: command-line front end.
//!
//! Exit codes: 0 ok, 1 invalid input, 2 verification failed, 3 timeout.
//! Failures print a single `error: <Kind>: <message>` line on stderr.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vsdtc::coloring::{verify_r_vsdtc, ColoringDocument, VerificationReport};
use vsdtc::constructive::{
    compose_vsdtc, extend_degenerate_vsdtc, forest_vsdtc, tree_vsdtc_r,
};
use vsdtc::experiments::{bounds, evaluate, run_scan, run_table, ExperimentRow, RowOptions, ScanSummary};
use vsdtc::graph::{degeneracy, generate, parse_graph, write_graph, Family};
use vsdtc::solver::{chromatic_number, SearchBudget, SolveStatus};
use vsdtc::{Error, Graph, TotalColoring};

#[derive(Parser, Debug)]
#[command(name = "vsdtc", version, about = "Vertex-strongly-distinguishing total colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from a family such as `cycle(6)` or `random_tree(20)`.
    Gen {
        family: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check a coloring (JSON) against a graph.
    Verify {
        graph: String,
        coloring: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Exact chromatic number with a witness.
    Solve {
        graph: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a polynomial-time construction and verify it.
    Greedy {
        graph: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Known lower and upper bounds.
    Bounds {
        graph: String,
        #[command(flatten)]
        common: Common,
    },
    /// Exact values for complete graphs.
    Table {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Skip the constructive column.
        #[arg(long)]
        no_constructive: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Sample random graphs and measure both conjectures.
    Scan {
        family: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Distinguishing radius.
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Time limit per palette probe.
    #[arg(long)]
    timeout_ms: Option<u64>,
    /// Node limit per palette probe.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    /// Forest or degenerate extension at r=1, tree method at r=2,3,
    /// composition otherwise.
    Auto,
    Compose,
    Extend,
    Forest,
    Tree,
}

/// Everything that ends the program early.
enum Failure {
    Lib(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("bad arguments").trim_start_matches("error: ");
            eprintln!("error: InvalidInput: {first}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: VerificationFailed: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            let kind = e.kind();
            eprintln!("error: {kind}: {}", single_line(&e.to_string()));
            ExitCode::from(if kind == "Timeout" { 3 } else { 1 })
        }
    }
}

fn single_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Gen { family, common } => cmd_gen(&family, &common),
        Command::Verify { graph, coloring, common } => cmd_verify(&graph, &coloring, &common),
        Command::Solve { graph, common } => cmd_solve(&graph, &common),
        Command::Greedy { graph, method, common } => cmd_greedy(&graph, method, &common),
        Command::Bounds { graph, common } => cmd_bounds(&graph, &common),
        Command::Table { min_n, max_n, no_constructive, common } => {
            cmd_table(min_n, max_n, !no_constructive, &common)
        }
        Command::Scan { family, count, common } => cmd_scan(&family, count, &common),
    }
}

impl Common {
    fn budget(&self) -> SearchBudget {
        let d = SearchBudget::default();
        match (self.max_nodes, self.timeout_ms) {
            (None, None) => d,
            (nodes, ms) => SearchBudget::new(
                nodes.unwrap_or(if ms.is_some() { u64::MAX } else { d.max_nodes }),
                ms.map(Duration::from_millis).unwrap_or(d.max_time),
            ),
        }
    }

    fn emit(&self, text: &str) -> Outcome {
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

/// A graph argument is a family such as `path(4)` (generated with
/// `--seed`), `-` for stdin, or a path to a graph file.
fn load_graph(arg: &str, seed: u64) -> Result<Graph, Error> {
    if let Ok(fam) = arg.parse::<Family>() {
        return generate(&fam, seed);
    }
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(arg)
            .map_err(|e| Error::InvalidInput(format!("cannot read graph '{arg}': {e}")))?
    };
    parse_graph(&text)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cmd_gen(family: &str, c: &Common) -> Outcome {
    let fam: Family = family.parse()?;
    let g = generate(&fam, c.seed)?;
    c.emit(&write_graph(&g, Some(&format!("{fam} seed={}", c.seed))))
}

fn report_text(rep: &VerificationReport) -> String {
    let mut s = String::new();
    if rep.is_valid() {
        s.push_str("valid\n");
    } else {
        let _ = writeln!(s, "invalid: {} violations", rep.violations.len());
        for v in &rep.violations {
            let _ = writeln!(s, "{:?} {:?} {:?} distance={:?}", v.kind, v.first, v.second, v.distance);
        }
    }
    s
}

fn cmd_verify(graph: &str, coloring: &PathBuf, c: &Common) -> Outcome {
    let g = load_graph(graph, c.seed)?;
    let text = fs::read_to_string(coloring)
        .map_err(|e| Error::InvalidInput(format!("cannot read coloring: {e}")))?;
    let f = ColoringDocument::from_json(&text)?.to_coloring(&g)?;
    let rep = verify_r_vsdtc(&g, &f, c.r)?;
    let out = match c.format {
        Format::Json => to_json(&ColoringDocument::new(&g, &f, Some(c.r), Some(&rep))),
        Format::Csv => to_csv(&rep.violations)?,
        Format::Text => report_text(&rep),
    };
    c.emit(&out)?;
    if rep.is_valid() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} violations", rep.violations.len())))
    }
}

fn cmd_solve(graph: &str, c: &Common) -> Outcome {
    let g = load_graph(graph, c.seed)?;
    let s = chromatic_number(&g, c.r, c.budget())?;
    if s.status == SolveStatus::Timeout {
        c.emit(&format!("unknown (at least {})\n", s.proven_lower))?;
        return Err(Error::Timeout.into());
    }
    let chi = s.chromatic_number.expect("exact status carries a value");
    let witness = s.witness.expect("exact status carries a witness");
    let out = match c.format {
        Format::Text => format!("{chi}\n"),
        Format::Json => {
            let rep = verify_r_vsdtc(&g, &witness, c.r)?;
            to_json(&ColoringDocument::new(&g, &witness, Some(c.r), Some(&rep)))
        }
        Format::Csv => {
            let opts = RowOptions { budget: c.budget(), exact: true, constructive: false };
            to_csv(&[evaluate(graph, &g, c.r, &opts)?])?
        }
    };
    c.emit(&out)
}

fn construct(g: &Graph, r: usize, method: Method) -> Result<TotalColoring, Error> {
    let k = degeneracy(g).k;
    let method = match method {
        Method::Auto if r == 1 && k <= 1 => Method::Forest,
        Method::Auto if r == 1 => Method::Extend,
        Method::Auto if g.is_tree() && (r == 2 || (r == 3 && g.max_degree() >= 3)) => Method::Tree,
        Method::Auto => Method::Compose,
        m => m,
    };
    Ok(match method {
        Method::Forest => forest_vsdtc(g)?.coloring,
        Method::Extend => {
            if r != 1 {
                return Err(Error::InvalidInput("the degenerate extension works at r=1 only".into()));
            }
            extend_degenerate_vsdtc(g, k)?.coloring
        }
        Method::Tree => tree_vsdtc_r(g, r)?.composition.coloring,
        _ => compose_vsdtc(g, r)?.coloring,
    })
}

fn cmd_greedy(graph: &str, method: Method, c: &Common) -> Outcome {
    let g = load_graph(graph, c.seed)?;
    let f = construct(&g, c.r, method)?;
    let rep = verify_r_vsdtc(&g, &f, c.r)?;
    let out = match c.format {
        Format::Json => to_json(&ColoringDocument::new(&g, &f, Some(c.r), Some(&rep))),
        Format::Csv => {
            let opts = RowOptions { budget: c.budget(), exact: false, constructive: true };
            to_csv(&[evaluate(graph, &g, c.r, &opts)?])?
        }
        Format::Text => format!(
            "colors {} palette {} {}",
            f.colors_used(),
            f.palette_size(),
            report_text(&rep)
        ),
    };
    c.emit(&out)?;
    if rep.is_valid() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} violations", rep.violations.len())))
    }
}

fn cmd_bounds(graph: &str, c: &Common) -> Outcome {
    let g = load_graph(graph, c.seed)?;
    let b = bounds(&g, c.r)?;
    let out = match c.format {
        Format::Json => to_json(&b),
        Format::Csv => {
            let mut rows: Vec<(String, usize)> = Vec::new();
            if let Some(l) = b.lower {
                rows.push(("lower".into(), l.value));
            }
            rows.extend(b.upper.iter().map(|u| (u.kind.to_string(), u.value)));
            let mut s = String::from("bound,value\n");
            s.push_str(&to_csv(&rows)?);
            s
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(l) = b.lower {
                let _ = writeln!(s, "lower {} ({:?})", l.value, l.reason);
            }
            for u in &b.upper {
                let _ = writeln!(s, "upper {} ({})", u.value, u.kind);
            }
            if b.upper.is_empty() {
                s.push_str("upper none known\n");
            }
            s
        }
    };
    c.emit(&out)
}

fn rows_text(rows: &[ExperimentRow]) -> String {
    let mut s = String::from("family\tn\tm\tr\tlower\texact\tconstructive\tbound\n");
    let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    for row in rows {
        let exact = match row.exact {
            Some(x) => x.to_string(),
            None => {
                let (lo, hi) = row.bracket();
                format!("[{lo},{}]", show(hi))
            }
        };
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            row.family,
            row.n,
            row.m,
            row.r,
            row.lower,
            exact,
            show(row.constructive),
            show(row.bound)
        );
    }
    s
}

fn cmd_table(min_n: usize, max_n: usize, constructive: bool, c: &Common) -> Outcome {
    if min_n > max_n {
        return Err(Error::InvalidInput(format!("empty range {min_n}..={max_n}")).into());
    }
    let ns: Vec<usize> = (min_n..=max_n).collect();
    let opts = RowOptions { budget: c.budget(), exact: true, constructive };
    let rows = run_table(&ns, c.r, &opts)?;
    let out = match c.format {
        Format::Json => to_json(&rows),
        Format::Csv => to_csv(&rows)?,
        Format::Text => rows_text(&rows),
    };
    c.emit(&out)
}

fn scan_text(s: &ScanSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family {} r={}", s.family, s.r);
    let _ = writeln!(
        out,
        "graphs {} skipped {} timeouts {}",
        s.records.len(),
        s.skipped.len(),
        s.timeouts
    );
    let show = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
    let _ = writeln!(out, "min margin to n+ceil(log2 n)+1: {}", show(s.min_log_margin));
    let _ = writeln!(out, "max chi-2*delta: {}", show(s.max_degree_excess));
    let _ = writeln!(out, "certified violations: {}", s.log_violations.len());
    for cert in &s.log_violations {
        let _ = writeln!(out, "seed {} exhausted kappa {}\n{}", cert.seed, cert.exhausted_kappa, cert.graph);
    }
    out
}

fn cmd_scan(family: &str, count: usize, c: &Common) -> Outcome {
    let fam: Family = family.parse()?;
    let opts = RowOptions { budget: c.budget(), exact: true, constructive: true };
    let summary = run_scan(&fam, count, c.seed, c.r, &opts)?;
    let out = match c.format {
        Format::Json => to_json(&summary),
        Format::Csv => {
            let rows: Vec<ExperimentRow> = summary.records.iter().map(|r| r.row.clone()).collect();
            to_csv(&rows)?
        }
        Format::Text => scan_text(&summary),
    };
    c.emit(&out)
}
