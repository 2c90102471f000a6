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

use serde::{Deserialize, Serialize};

use super::{color_set, ColorSet, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::{Element, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    AdjacentVertices,
    AdjacentEdges,
    Incident,
    SameColorSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub first: Element,
    pub second: Element,
    /// Graph distance, for `SameColorSet`.
    pub distance: Option<usize>,
}

/// Outcome of a verification; `is_valid()` iff there are no violations.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub distinguishing: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.proper && self.distinguishing
    }
}

fn require_total(g: &Graph, f: &TotalColoring) -> Result<()> {
    f.check_shape(g)?;
    if let Some(v) = f.vertex_colors().iter().position(Option::is_none) {
        return Err(Error::IncompleteColoring(format!("vertex {v} is unassigned")));
    }
    if let Some(e) = f.edge_colors().iter().position(Option::is_none) {
        return Err(Error::IncompleteColoring(format!("edge {e} is unassigned")));
    }
    Ok(())
}

/// Properness check; lists every conflicting pair once.
pub fn is_proper_total(g: &Graph, f: &TotalColoring) -> Result<VerificationReport> {
    require_total(g, f)?;
    let mut violations = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let ce = f.edge(e);
        if f.vertex(a) == f.vertex(b) {
            violations.push(Violation {
                kind: ViolationKind::AdjacentVertices,
                first: Element::Vertex(a),
                second: Element::Vertex(b),
                distance: None,
            });
        }
        for x in [a, b] {
            if f.vertex(x) == ce {
                violations.push(Violation {
                    kind: ViolationKind::Incident,
                    first: Element::Vertex(x),
                    second: Element::Edge(e),
                    distance: None,
                });
            }
        }
    }
    for u in 0..g.n() {
        let inc = g.incident(u);
        for (i, &(_, e1)) in inc.iter().enumerate() {
            for &(_, e2) in &inc[i + 1..] {
                if f.edge(e1) == f.edge(e2) {
                    violations.push(Violation {
                        kind: ViolationKind::AdjacentEdges,
                        first: Element::Edge(e1.min(e2)),
                        second: Element::Edge(e1.max(e2)),
                        distance: None,
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        proper: violations.is_empty(),
        distinguishing: true,
        violations,
    })
}

/// Full check: properness plus `C_f⟨u⟩ != C_f⟨v⟩` for `1 <= d(u, v) <= r`.
/// Vertices in different components are never compared.
pub fn verify_r_vsdtc(g: &Graph, f: &TotalColoring, r: usize) -> Result<VerificationReport> {
    if r == 0 {
        return Err(Error::InvalidInput("radius must be at least 1".into()));
    }
    let mut report = is_proper_total(g, f)?;
    let sets: Vec<ColorSet> = (0..g.n())
        .map(|u| color_set(g, f, u))
        .collect::<Result<_>>()?;
    for u in 0..g.n() {
        for (w, d) in g.distance_within(u, r) {
            if w > u && sets[u] == sets[w] {
                report.distinguishing = false;
                report.violations.push(Violation {
                    kind: ViolationKind::SameColorSet,
                    first: Element::Vertex(u),
                    second: Element::Vertex(w),
                    distance: Some(d),
                });
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerBoundReason {
    /// Every vertex needs its own color plus one per incident edge.
    MaxDegreePlusOne,
    /// Two maximum-degree vertices within distance `r` cannot share a
    /// `(Δ+1)`-set.
    TwoMaxDegreeWithinRadius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: usize,
    pub reason: LowerBoundReason,
}

pub fn lower_bound(g: &Graph, r: usize) -> Result<usize> {
    lower_bound_detail(g, r).map(|b| b.value)
}

/// `Δ + 2` when two maximum-degree vertices are within distance `r`,
/// otherwise `Δ + 1`.
pub fn lower_bound_detail(g: &Graph, r: usize) -> Result<LowerBound> {
    if r == 0 {
        return Err(Error::InvalidInput("radius must be at least 1".into()));
    }
    g.check_no_isolated_edge()?;
    let delta = g.max_degree();
    let tops: Vec<usize> = (0..g.n()).filter(|&u| g.degree(u) == delta).collect();
    let close = delta > 0
        && tops.iter().any(|&u| {
            let near = g.distance_within(u, r);
            tops.iter().any(|&w| w != u && near.contains_key(&w))
        });
    Ok(if close {
        LowerBound {
            value: delta + 2,
            reason: LowerBoundReason::TwoMaxDegreeWithinRadius,
        }
    } else {
        LowerBound {
            value: delta + 1,
            reason: LowerBoundReason::MaxDegreePlusOne,
        }
    })
}
