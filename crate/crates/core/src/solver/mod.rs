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

//! Exact chromatic number by iterative deepening over the palette size.
//!
//! Each palette size `κ` is a separate probe: a backtracking search that
//! assigns colors element by element in a fixed order, checks properness on
//! assignment and compares color sets as soon as both vertices of a pair are
//! complete. Colors are introduced canonically (a new color is always the
//! smallest unused one), which removes palette permutations.

mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{lower_bound_detail, LowerBound, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

use search::{Outcome, Plan, Searcher};

/// Limits for a single palette probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> SearchBudget {
        assert!(max_nodes > 0 && !max_time.is_zero(), "budget must be positive");
        SearchBudget {
            max_nodes,
            max_time,
        }
    }

    pub fn unlimited() -> SearchBudget {
        SearchBudget {
            max_nodes: u64::MAX,
            max_time: Duration::MAX,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(10_000_000, Duration::from_secs(60))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementOrder {
    /// All vertices (reverse peeling order), then edges by later endpoint.
    #[default]
    VerticesFirst,
    /// Each vertex followed by its edges back to earlier vertices.
    Interleaved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub order: ElementOrder,
    /// Fail early when a vertex with one open element can no longer be
    /// kept apart from a completed vertex in range.
    pub forward_check: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            order: ElementOrder::VerticesFirst,
            forward_check: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeStatus {
    Found,
    Exhausted,
    Timeout,
}

#[derive(Debug, Clone)]
pub enum ProbeOutcome {
    Found(TotalColoring),
    /// The full search space was exhausted: no coloring exists.
    None,
    Timeout,
}

impl ProbeOutcome {
    pub fn status(&self) -> ProbeStatus {
        match self {
            ProbeOutcome::Found(_) => ProbeStatus::Found,
            ProbeOutcome::None => ProbeStatus::Exhausted,
            ProbeOutcome::Timeout => ProbeStatus::Timeout,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Probe {
    pub outcome: ProbeOutcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Does `g` admit a `kappa`-coloring distinguishing all pairs within `r`?
///
/// Disconnected inputs are probed component by component; pairs in
/// different components are never compared.
pub fn exists_coloring(g: &Graph, r: usize, kappa: usize, budget: SearchBudget) -> Result<Probe> {
    exists_coloring_with(g, r, kappa, budget, &SearchOptions::default())
}

pub fn exists_coloring_with(
    g: &Graph,
    r: usize,
    kappa: usize,
    budget: SearchBudget,
    opts: &SearchOptions,
) -> Result<Probe> {
    check_args(g, r)?;
    if kappa == 0 {
        return Err(Error::InvalidInput("palette size must be at least 1".into()));
    }
    if kappa > crate::coloring::MAX_PALETTE {
        return Err(Error::InvalidInput(format!("palette size {kappa} is too large")));
    }
    if g.is_connected() {
        let plan = Plan::new(g, r, opts.order);
        return Ok(probe(&plan, kappa, budget, opts));
    }
    // Components never constrain each other, so each is probed on its own
    // and the witnesses are merged.
    let start = Instant::now();
    let mut nodes = 0;
    let mut witness = TotalColoring::new(g, kappa);
    for comp in g.components() {
        let plan = Plan::new(&comp.graph, r, opts.order);
        let p = probe(&plan, kappa, budget, opts);
        nodes += p.nodes;
        match p.outcome {
            ProbeOutcome::Found(f) => {
                for (lv, &v) in comp.vertices.iter().enumerate() {
                    witness.set_vertex(v, f.vertex(lv).expect("total"));
                }
                for (le, &e) in comp.edges.iter().enumerate() {
                    witness.set_edge(e, f.edge(le).expect("total"));
                }
            }
            outcome => {
                return Ok(Probe {
                    outcome,
                    nodes,
                    elapsed: start.elapsed(),
                })
            }
        }
    }
    Ok(Probe {
        outcome: ProbeOutcome::Found(witness),
        nodes,
        elapsed: start.elapsed(),
    })
}

fn check_args(g: &Graph, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidInput("radius must be at least 1".into()));
    }
    g.check_no_isolated_edge()
}

fn probe(plan: &Plan, kappa: usize, budget: SearchBudget, opts: &SearchOptions) -> Probe {
    let start = Instant::now();
    let mut searcher = Searcher::new(plan, kappa, budget, opts);
    let outcome = match searcher.run() {
        Outcome::Found(f) => ProbeOutcome::Found(f),
        Outcome::Exhausted => ProbeOutcome::None,
        Outcome::Timeout => ProbeOutcome::Timeout,
    };
    Probe {
        outcome,
        nodes: searcher.nodes,
        elapsed: start.elapsed(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    Timeout,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProbeRecord {
    /// Index of the component (ordered by smallest vertex).
    pub component: usize,
    pub kappa: usize,
    pub status: ProbeStatus,
    pub nodes: u64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed_ms: u128,
    pub probes: Vec<ProbeRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResult {
    /// `None` when some component timed out.
    pub chromatic_number: Option<usize>,
    /// Witness for the whole graph with palette `chromatic_number`.
    pub witness: Option<TotalColoring>,
    pub lower_bound_used: Option<LowerBound>,
    /// Largest palette size proven infeasible plus one; equals
    /// `chromatic_number` on exact results.
    pub proven_lower: usize,
    pub status: SolveStatus,
    pub stats: SolveStats,
}

/// Exact `χ` for radius `r`: the maximum over connected components, each
/// solved upward from its lower bound. Isolated vertices contribute 1.
pub fn chromatic_number(g: &Graph, r: usize, budget: SearchBudget) -> Result<SolveResult> {
    chromatic_number_with(g, r, budget, &SearchOptions::default())
}

pub fn chromatic_number_with(
    g: &Graph,
    r: usize,
    budget: SearchBudget,
    opts: &SearchOptions,
) -> Result<SolveResult> {
    check_args(g, r)?;
    let start = Instant::now();
    let mut stats = SolveStats::default();
    let lower_bound_used = (g.n() > 0).then(|| lower_bound_detail(g, r)).transpose()?;
    let mut best = 0;
    let mut proven_lower = 0;
    let mut timed_out = false;
    let mut pieces = Vec::new();
    for (ci, comp) in g.components().into_iter().enumerate() {
        let cg = &comp.graph;
        if cg.n() == 1 {
            let mut f = TotalColoring::new(cg, 1);
            f.set_vertex(0, 1);
            best = best.max(1);
            proven_lower = proven_lower.max(1);
            pieces.push((comp, f));
            continue;
        }
        let plan = Plan::new(cg, r, opts.order);
        let mut kappa = lower_bound_detail(cg, r)?.value;
        let mut found = None;
        // Every element on its own color always works, so this terminates.
        while kappa <= cg.n() + cg.m() {
            let p = probe(&plan, kappa, budget, opts);
            stats.nodes += p.nodes;
            stats.probes.push(ProbeRecord {
                component: ci,
                kappa,
                status: p.outcome.status(),
                nodes: p.nodes,
            });
            match p.outcome {
                ProbeOutcome::Found(f) => {
                    found = Some(f);
                    break;
                }
                ProbeOutcome::None => kappa += 1,
                ProbeOutcome::Timeout => break,
            }
        }
        proven_lower = proven_lower.max(kappa);
        match found {
            Some(f) => {
                best = best.max(kappa);
                pieces.push((comp, f));
            }
            None => {
                timed_out = true;
                break;
            }
        }
    }
    stats.elapsed_ms = start.elapsed().as_millis();
    if timed_out {
        return Ok(SolveResult {
            chromatic_number: None,
            witness: None,
            lower_bound_used,
            proven_lower,
            status: SolveStatus::Timeout,
            stats,
        });
    }
    let mut witness = TotalColoring::new(g, best);
    for (comp, f) in pieces {
        for (lv, &v) in comp.vertices.iter().enumerate() {
            witness.set_vertex(v, f.vertex(lv).unwrap());
        }
        for (le, &e) in comp.edges.iter().enumerate() {
            witness.set_edge(e, f.edge(le).unwrap());
        }
    }
    Ok(SolveResult {
        chromatic_number: Some(best),
        witness: Some(witness),
        lower_bound_used,
        proven_lower: best,
        status: SolveStatus::Exact,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_r_vsdtc;
    use crate::graph::{generate, Family};

    fn chi(g: &Graph, r: usize) -> usize {
        let res = chromatic_number(g, r, SearchBudget::unlimited()).unwrap();
        let w = res.witness.as_ref().unwrap();
        assert!(verify_r_vsdtc(g, w, r).unwrap().is_valid());
        res.chromatic_number.unwrap()
    }

    #[test]
    fn probe_examples() {
        let p3 = generate(&Family::Path(3), 0).unwrap();
        let b = SearchBudget::unlimited();
        assert!(matches!(exists_coloring(&p3, 1, 4, b).unwrap().outcome, ProbeOutcome::Found(_)));
        assert!(matches!(exists_coloring(&p3, 1, 3, b).unwrap().outcome, ProbeOutcome::None));
        let k3 = generate(&Family::Complete(3), 0).unwrap();
        assert!(matches!(exists_coloring(&k3, 1, 4, b).unwrap().outcome, ProbeOutcome::None));
        assert!(matches!(exists_coloring(&k3, 1, 5, b).unwrap().outcome, ProbeOutcome::Found(_)));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chi(&generate(&Family::Path(4), 0).unwrap(), 1), 5);
        assert_eq!(chi(&generate(&Family::Complete(4), 0).unwrap(), 1), 6);
        let p3 = generate(&Family::Path(3), 0).unwrap();
        let p4 = generate(&Family::Path(4), 0).unwrap();
        assert_eq!(chi(&p3.disjoint_union(&p4), 1), 5);
        assert_eq!(chi(&Graph::empty(3), 2), 1);
    }

    #[test]
    fn isolated_edges_are_rejected() {
        let k2 = generate(&Family::Path(2), 0).unwrap();
        assert!(matches!(
            chromatic_number(&k2, 1, SearchBudget::default()),
            Err(Error::IsolatedEdge(0, 1))
        ));
        assert!(matches!(
            exists_coloring(&k2, 3, 4, SearchBudget::default()),
            Err(Error::IsolatedEdge(..))
        ));
    }

    #[test]
    fn timeout_is_not_none() {
        let k5 = generate(&Family::Complete(5), 0).unwrap();
        let tiny = SearchBudget::new(50, Duration::from_secs(60));
        let p = exists_coloring(&k5, 1, 7, tiny).unwrap();
        assert!(matches!(p.outcome, ProbeOutcome::Timeout));
        let res = chromatic_number(&k5, 1, tiny).unwrap();
        assert_eq!(res.status, SolveStatus::Timeout);
        assert_eq!(res.chromatic_number, None);
        assert!(res.proven_lower >= 6);
    }

    #[test]
    fn orders_and_pruning_agree() {
        let variants = [
            SearchOptions { order: ElementOrder::VerticesFirst, forward_check: false },
            SearchOptions { order: ElementOrder::VerticesFirst, forward_check: true },
            SearchOptions { order: ElementOrder::Interleaved, forward_check: false },
            SearchOptions { order: ElementOrder::Interleaved, forward_check: true },
        ];
        for seed in 0..25 {
            let g = generate(&Family::Gnp { n: 6, p: 0.45 }, seed).unwrap();
            if g.isolated_edge().is_some() {
                continue;
            }
            for r in 1..=2 {
                let values: Vec<_> = variants
                    .iter()
                    .map(|o| {
                        chromatic_number_with(&g, r, SearchBudget::unlimited(), o)
                            .unwrap()
                            .chromatic_number
                    })
                    .collect();
                assert!(values.windows(2).all(|w| w[0] == w[1]), "seed {seed}: {values:?}");
            }
        }
    }
}
