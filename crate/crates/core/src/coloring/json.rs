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

//! JSON document for colorings.
//!
//! Vertex and edge endpoints are 0-based; `null` marks an unassigned element.

use serde::{Deserialize, Serialize};

use super::{Color, TotalColoring, VerificationReport, Violation};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColor {
    pub u: usize,
    pub v: usize,
    pub color: Option<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub valid: bool,
    pub proper: bool,
    pub distinguishing: bool,
    pub colors_used: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub palette_size: usize,
    pub vertices: Vec<Option<Color>>,
    pub edges: Vec<EdgeColor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
}

impl ColoringDocument {
    pub fn new(
        g: &Graph,
        f: &TotalColoring,
        r: Option<usize>,
        report: Option<&VerificationReport>,
    ) -> ColoringDocument {
        ColoringDocument {
            palette_size: f.palette_size(),
            vertices: f.vertex_colors().to_vec(),
            edges: g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| EdgeColor {
                    u,
                    v,
                    color: f.edge(e),
                })
                .collect(),
            r,
            verification: report.map(|rep| VerificationSummary {
                valid: rep.is_valid(),
                proper: rep.proper,
                distinguishing: rep.distinguishing,
                colors_used: f.colors_used(),
                violations: rep.violations.clone(),
            }),
        }
    }

    /// Rebuilds the coloring for `g`; edges are matched by endpoint pair.
    pub fn to_coloring(&self, g: &Graph) -> Result<TotalColoring> {
        if self.vertices.len() != g.n() {
            return Err(Error::InvalidInput(format!(
                "document has {} vertices, graph has {}",
                self.vertices.len(),
                g.n()
            )));
        }
        let mut edges = vec![None; g.m()];
        let mut seen = vec![false; g.m()];
        for ec in &self.edges {
            let e = (ec.u < g.n() && ec.v < g.n())
                .then(|| g.edge_between(ec.u, ec.v))
                .flatten()
                .ok_or_else(|| {
                    Error::InvalidInput(format!("edge ({}, {}) is not in the graph", ec.u, ec.v))
                })?;
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidInput(format!(
                    "edge ({}, {}) listed twice",
                    ec.u, ec.v
                )));
            }
            edges[e] = ec.color;
        }
        TotalColoring::from_parts(self.palette_size, self.vertices.clone(), edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("coloring documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<ColoringDocument> {
        Ok(serde_json::from_str(text)?)
    }
}
