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

//! Batch experiments: known bounds, exact tables and conjecture scans.

use std::fmt;

use serde::Serialize;

use crate::coloring::{lower_bound_detail, LowerBound};
use crate::constructive::{compose_vsdtc, extend_degenerate_vsdtc, forest_vsdtc, tree_vsdtc_r};
use crate::error::Result;
use crate::graph::{degeneracy, generate, write_graph, Family, Graph};
use crate::par;
use crate::solver::{chromatic_number, exists_coloring, ProbeOutcome, SearchBudget, SolveStatus};

/// Column order of [`ExperimentRow`] in CSV output.
pub const CSV_COLUMNS: [&str; 11] = [
    "family",
    "n",
    "m",
    "delta_max",
    "k_degeneracy",
    "r",
    "lower",
    "exact",
    "status",
    "constructive",
    "bound",
];

/// Where an upper bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperBoundKind {
    /// `4Δ`, from a `3Δ` edge coloring plus `Δ + 1` vertex colors.
    General,
    /// `Δ + 3` for forests.
    Forest,
    /// `kΔ + 3` for `k`-degenerate graphs.
    Degenerate,
    /// `Δ + 3` for trees at radius 2.
    TreeRadius2,
    /// `2Δ + 1` for trees at radius 3.
    TreeRadius3,
}

impl fmt::Display for UpperBoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UpperBoundKind::General => "4*delta",
            UpperBoundKind::Forest => "delta+3 (forest)",
            UpperBoundKind::Degenerate => "k*delta+3 (k-degenerate)",
            UpperBoundKind::TreeRadius2 => "delta+3 (tree, r=2)",
            UpperBoundKind::TreeRadius3 => "2*delta+1 (tree, r=3)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub kind: UpperBoundKind,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub r: usize,
    /// `r` capped at the largest component diameter; the chromatic number
    /// does not change beyond it.
    pub effective_r: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub lower: Option<LowerBound>,
    pub upper: Vec<UpperBound>,
}

impl Bounds {
    pub fn best_upper(&self) -> Option<usize> {
        self.upper.iter().map(|b| b.value).min()
    }
}

/// Known lower and upper bounds for `g` at radius `r`.
pub fn bounds(g: &Graph, r: usize) -> Result<Bounds> {
    let lower = (g.n() > 0).then(|| lower_bound_detail(g, r)).transpose()?;
    let delta = g.max_degree();
    let k = degeneracy(g).k;
    let effective_r = r.min(g.diameter().max(1));
    let mut upper = Vec::new();
    // Without edges every vertex takes one color.
    if delta > 0 {
        match effective_r {
            1 => {
                upper.push(UpperBound { kind: UpperBoundKind::General, value: 4 * delta });
                if k <= 1 {
                    upper.push(UpperBound { kind: UpperBoundKind::Forest, value: delta + 3 });
                } else {
                    upper.push(UpperBound { kind: UpperBoundKind::Degenerate, value: k * delta + 3 });
                }
            }
            2 if g.is_tree() => {
                upper.push(UpperBound { kind: UpperBoundKind::TreeRadius2, value: delta + 3 });
            }
            3 if g.is_tree() && delta >= 3 => {
                upper.push(UpperBound { kind: UpperBoundKind::TreeRadius3, value: 2 * delta + 1 });
            }
            _ => {}
        }
    }
    Ok(Bounds {
        r,
        effective_r,
        max_degree: delta,
        degeneracy: k,
        lower,
        upper,
    })
}

/// Best color count among the applicable constructions.
pub fn constructive_colors(g: &Graph, r: usize) -> Result<usize> {
    if g.m() == 0 {
        return Ok(usize::from(g.n() > 0));
    }
    let effective_r = r.min(g.diameter().max(1));
    let mut best = compose_vsdtc(g, effective_r)?.coloring.colors_used();
    if effective_r == 1 {
        let k = degeneracy(g).k;
        let c = if k <= 1 {
            forest_vsdtc(g)?.coloring.colors_used()
        } else {
            extend_degenerate_vsdtc(g, k)?.coloring.colors_used()
        };
        best = best.min(c);
    } else if g.is_tree() && (effective_r == 2 || (effective_r == 3 && g.max_degree() >= 3)) {
        best = best.min(tree_vsdtc_r(g, effective_r)?.composition.coloring.colors_used());
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Exact,
    Timeout,
    /// Exact search not attempted.
    Skipped,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Exact => "exact",
            RowStatus::Timeout => "timeout",
            RowStatus::Skipped => "skipped",
        })
    }
}

/// One graph at one radius. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub delta_max: usize,
    pub k_degeneracy: usize,
    pub r: usize,
    /// Best proven lower bound: the degree bound, raised by exhausted
    /// searches when the exact value was not reached.
    pub lower: usize,
    pub exact: Option<usize>,
    pub status: RowStatus,
    pub constructive: Option<usize>,
    pub bound: Option<usize>,
}

impl ExperimentRow {
    /// `lower ≤ exact ≤ constructive ≤ bound` over the values present.
    pub fn chain_holds(&self) -> bool {
        let chain: Vec<usize> = [Some(self.lower), self.exact, self.constructive, self.bound]
            .into_iter()
            .flatten()
            .collect();
        chain.windows(2).all(|w| w[0] <= w[1])
    }

    /// `[lower, upper]` bracket on the true value.
    pub fn bracket(&self) -> (usize, Option<usize>) {
        match self.exact {
            Some(x) => (x, Some(x)),
            None => {
                let up = [self.constructive, self.bound].into_iter().flatten().min();
                (self.lower, up)
            }
        }
    }
}

/// What to compute for each row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowOptions {
    pub budget: SearchBudget,
    pub exact: bool,
    pub constructive: bool,
}

impl Default for RowOptions {
    fn default() -> Self {
        RowOptions {
            budget: SearchBudget::default(),
            exact: true,
            constructive: true,
        }
    }
}

/// Solves and bounds a single graph.
pub fn evaluate(family: &str, g: &Graph, r: usize, opts: &RowOptions) -> Result<ExperimentRow> {
    let b = bounds(g, r)?;
    let mut lower = b.lower.map(|l| l.value).unwrap_or(0);
    let (exact, status) = if opts.exact {
        let s = chromatic_number(g, r, opts.budget)?;
        lower = lower.max(s.proven_lower);
        match s.status {
            SolveStatus::Exact => (s.chromatic_number, RowStatus::Exact),
            SolveStatus::Timeout => (None, RowStatus::Timeout),
        }
    } else {
        (None, RowStatus::Skipped)
    };
    let constructive = if opts.constructive { Some(constructive_colors(g, r)?) } else { None };
    Ok(ExperimentRow {
        family: family.to_string(),
        n: g.n(),
        m: g.m(),
        delta_max: b.max_degree,
        k_degeneracy: b.degeneracy,
        r,
        lower,
        exact,
        status,
        constructive,
        bound: b.best_upper(),
    })
}

/// Complete graphs `K_n` for each `n` in `ns` (all at least 3). Rows run
/// concurrently and come back in input order.
pub fn run_table(ns: &[usize], r: usize, opts: &RowOptions) -> Result<Vec<ExperimentRow>> {
    if let Some(&bad) = ns.iter().find(|&&n| n < 3) {
        return Err(crate::Error::InvalidInput(format!("table rows need n >= 3, got {bad}")));
    }
    par::map(ns, |&n| {
        let fam = Family::Complete(n);
        let g = generate(&fam, 0)?;
        evaluate(&fam.to_string(), &g, r, opts)
    })
    .into_iter()
    .collect()
}

/// `n + ⌈log₂ n⌉ + 1`.
pub fn log_limit(n: usize) -> usize {
    let log = if n <= 1 { 0 } else { (usize::BITS - (n - 1).leading_zeros()) as usize };
    n + log + 1
}

/// A graph whose exact value exceeds a conjectured limit, with the
/// exhausted probe that proves it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub seed: u64,
    pub graph: String,
    /// No coloring exists with this many colors.
    pub exhausted_kappa: usize,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub seed: u64,
    pub row: ExperimentRow,
    pub log_limit: usize,
    /// `limit − exact`; negative would refute the conjecture.
    pub log_margin: Option<i64>,
    /// `exact − 2Δ`: the constant this graph needs.
    pub degree_excess: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub family: String,
    pub r: usize,
    pub records: Vec<ScanRecord>,
    /// Seeds skipped because the graph had an isolated edge.
    pub skipped: Vec<u64>,
    pub timeouts: usize,
    pub log_violations: Vec<Certificate>,
    pub min_log_margin: Option<i64>,
    pub max_degree_excess: Option<i64>,
}

/// Samples `count` graphs from `family` with seeds `seed, seed + 1, …` and
/// measures both conjectures on each. Only exhausted searches count against
/// a conjecture; timeouts are tallied separately.
pub fn run_scan(family: &Family, count: usize, seed: u64, r: usize, opts: &RowOptions) -> Result<ScanSummary> {
    if count == 0 {
        return Err(crate::Error::InvalidInput("scan count must be at least 1".into()));
    }
    let seeds: Vec<u64> = (0..count as u64).map(|i| seed.wrapping_add(i)).collect();
    let results = par::map(&seeds, |&s| -> Result<Option<(ScanRecord, Option<Certificate>)>> {
        let g = generate(family, s)?;
        if g.isolated_edge().is_some() {
            return Ok(None);
        }
        let row = evaluate(&family.to_string(), &g, r, opts)?;
        let limit = log_limit(g.n());
        let margin = row.exact.map(|x| limit as i64 - x as i64);
        let cert = match (row.exact, margin) {
            (Some(x), Some(mg)) if mg < 0 => recheck(&g, s, r, x, opts.budget)?,
            _ => None,
        };
        let record = ScanRecord {
            seed: s,
            log_limit: limit,
            log_margin: margin,
            degree_excess: row.exact.map(|x| x as i64 - 2 * row.delta_max as i64),
            row,
        };
        Ok(Some((record, cert)))
    });
    let mut summary = ScanSummary {
        family: family.to_string(),
        r,
        records: Vec::new(),
        skipped: Vec::new(),
        timeouts: 0,
        log_violations: Vec::new(),
        min_log_margin: None,
        max_degree_excess: None,
    };
    for (s, res) in seeds.iter().zip(results) {
        match res? {
            None => summary.skipped.push(*s),
            Some((record, cert)) => {
                if record.row.status == RowStatus::Timeout {
                    summary.timeouts += 1;
                }
                summary.log_violations.extend(cert);
                summary.min_log_margin = min_opt(summary.min_log_margin, record.log_margin);
                summary.max_degree_excess = record
                    .degree_excess
                    .into_iter()
                    .chain(summary.max_degree_excess)
                    .max();
                summary.records.push(record);
            }
        }
    }
    Ok(summary)
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    a.into_iter().chain(b).min()
}

/// Re-runs the probe just below `exact`; only an exhausted search yields a
/// certificate.
fn recheck(g: &Graph, seed: u64, r: usize, exact: usize, budget: SearchBudget) -> Result<Option<Certificate>> {
    let probe = exists_coloring(g, r, exact - 1, budget)?;
    Ok(match probe.outcome {
        ProbeOutcome::None => Some(Certificate {
            seed,
            graph: write_graph(g, Some("conjecture counterexample candidate")),
            exhausted_kappa: exact - 1,
            nodes: probe.nodes,
        }),
        _ => None,
    })
}
