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

//! Total colorings assembled from an edge coloring and a vertex coloring.

use std::collections::VecDeque;

use super::greedy::{greedy_r_sec, greedy_vertex_coloring};
use crate::coloring::{verify_r_vsdtc, Color, TotalColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total coloring built by stacking a vertex palette on top of an edge
/// palette.
#[derive(Debug, Clone)]
pub struct Composition {
    pub coloring: TotalColoring,
    /// Edge colors are `1..=edge_palette`.
    pub edge_palette: usize,
    /// Vertex colors are `edge_palette + 1..=edge_palette + vertex_palette`.
    pub vertex_palette: usize,
    /// Fresh-color repairs the edge coloring needed.
    pub repairs: usize,
}

impl Composition {
    pub fn total(&self) -> usize {
        self.edge_palette + self.vertex_palette
    }
}

fn stack(edges: &[Color], p: usize, vertices: &[Color], q: usize) -> TotalColoring {
    let shifted: Vec<Color> = vertices.iter().map(|&c| c + p as Color).collect();
    TotalColoring::from_total(p + q, &shifted, edges).expect("shapes match the graph")
}

fn checked(g: &Graph, c: Composition, r: usize) -> Result<Composition> {
    let report = verify_r_vsdtc(g, &c.coloring, r)?;
    if !report.is_valid() {
        return Err(Error::InvalidInput(format!(
            "composed coloring failed verification with {} violations",
            report.violations.len()
        )));
    }
    Ok(c)
}

/// Edges keep a greedy `r`-distinguishing edge coloring on `1..=p` and the
/// vertices take a greedy proper coloring shifted to `p+1..=p+q`.
///
/// Since vertex colors never meet edge colors, the color sets of two vertices
/// differ whenever their edge color sets do.
pub fn compose_vsdtc(g: &Graph, r: usize) -> Result<Composition> {
    let sec = greedy_r_sec(g, r)?;
    let (vc, q) = greedy_vertex_coloring(g);
    let coloring = stack(&sec.colors, sec.palette, &vc, q);
    checked(
        g,
        Composition {
            coloring,
            edge_palette: sec.palette,
            vertex_palette: q,
            repairs: sec.repairs,
        },
        r,
    )
}

/// Bipartition colors `1` and `2` by BFS parity; isolated vertices get `1`.
fn two_coloring(g: &Graph) -> Vec<Color> {
    let mut side: Vec<Color> = vec![0; g.n()];
    for s in 0..g.n() {
        if side[s] != 0 {
            continue;
        }
        side[s] = 1;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for w in g.neighbors(x) {
                if side[w] == 0 {
                    side[w] = 3 - side[x];
                    queue.push_back(w);
                }
            }
        }
    }
    side
}

/// Forest specialization of [`compose_vsdtc`] at radius 1: a rooted
/// top-down edge coloring plus a 2-coloring, aiming at `Δ + 3` colors.
pub fn forest_vsdtc(g: &Graph) -> Result<Composition> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    g.check_no_isolated_edge()?;
    let sec = greedy_r_sec(g, 1)?;
    let side = two_coloring(g);
    let q = side.iter().copied().max().unwrap_or(0) as usize;
    let coloring = stack(&sec.colors, sec.palette, &side, q);
    checked(
        g,
        Composition {
            coloring,
            edge_palette: sec.palette,
            vertex_palette: q,
            repairs: sec.repairs,
        },
        1,
    )
}

/// A tree coloring at radius 2 or 3 with its target.
#[derive(Debug, Clone)]
pub struct TreeColoring {
    pub composition: Composition,
    /// `Δ + 3` at radius 2, `2Δ + 1` at radius 3.
    pub target: usize,
}

impl TreeColoring {
    pub fn meets_target(&self) -> bool {
        self.composition.total() <= self.target
    }
}

/// Tree colorings at radius 2 (`Δ ≥ 2`) or 3 (`Δ ≥ 3`), reported against
/// the known targets. The targets are not guaranteed by the greedy.
pub fn tree_vsdtc_r(t: &Graph, r: usize) -> Result<TreeColoring> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let delta = t.max_degree();
    let target = match r {
        2 if delta >= 2 => delta + 3,
        3 if delta >= 3 => 2 * delta + 1,
        2 | 3 => {
            return Err(Error::InvalidInput(format!(
                "radius {r} needs maximum degree at least {}, got {delta}",
                r
            )))
        }
        _ => return Err(Error::InvalidInput(format!("radius must be 2 or 3, got {r}"))),
    };
    let sec = greedy_r_sec(t, r)?;
    let side = two_coloring(t);
    let coloring = stack(&sec.colors, sec.palette, &side, 2);
    let composition = checked(
        t,
        Composition {
            coloring,
            edge_palette: sec.palette,
            vertex_palette: 2,
            repairs: sec.repairs,
        },
        r,
    )?;
    Ok(TreeColoring { composition, target })
}
