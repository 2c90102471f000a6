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

//! Greedy vertex colorings and distinguishing edge colorings.

use std::collections::VecDeque;

use crate::coloring::{Color, ColorSet};
use crate::error::Result;
use crate::graph::{degeneracy, Graph};

/// Proper vertex coloring in reverse peeling order, smallest feasible color
/// first. Uses at most `degeneracy + 1 <= Δ + 1` colors.
pub fn greedy_vertex_coloring(g: &Graph) -> (Vec<Color>, usize) {
    let peel = degeneracy(g);
    let mut colors: Vec<Color> = vec![0; g.n()];
    for &v in peel.order.iter().rev() {
        let taken: ColorSet = g.neighbors(v).filter_map(|w| (colors[w] > 0).then_some(colors[w])).collect();
        colors[v] = taken.first_absent(g.n() + 1).expect("n + 1 colors always suffice");
    }
    let q = colors.iter().copied().max().unwrap_or(0) as usize;
    (colors, q)
}

/// Proper edge coloring whose per-vertex edge color sets differ for all
/// pairs within distance `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    /// Color of each edge, `1..=palette`, every color used.
    pub colors: Vec<Color>,
    pub palette: usize,
    /// Number of fresh-color repairs applied after the greedy pass.
    pub repairs: usize,
}

/// Nodes explored per vertex group before the palette grows.
const GROUP_BUDGET: usize = 20_000;

/// Greedy `r`-distinguishing edge coloring.
///
/// Vertices are visited in BFS order from a maximum-degree root of each
/// component; at each vertex its uncolored edges are colored together by a
/// small backtracking search over the current palette, and the palette grows
/// by one when that search fails. On trees this colors edges top-down. Any
/// conflict left over is removed by recoloring single edges with fresh
/// colors, so the result is always valid.
pub fn greedy_r_sec(g: &Graph, r: usize) -> Result<EdgeColoring> {
    if r == 0 {
        return Err(crate::Error::InvalidInput("radius must be at least 1".into()));
    }
    g.check_no_isolated_edge()?;
    let mut st = SecState::new(g, r);
    for u in bfs_order(g) {
        st.color_group(u);
    }
    let repairs = st.repair();
    Ok(st.finish(repairs))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let (count, label) = g.component_labels();
    let mut roots = vec![usize::MAX; count];
    for (v, &c) in label.iter().enumerate() {
        if roots[c] == usize::MAX || g.degree(v) > g.degree(roots[c]) {
            roots[c] = v;
        }
    }
    let mut seen = vec![false; g.n()];
    let mut out = Vec::with_capacity(g.n());
    for root in roots {
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            out.push(x);
            for w in g.neighbors(x) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

struct SecState<'g> {
    g: &'g Graph,
    near: Vec<Vec<usize>>,
    colors: Vec<Color>,
    open: Vec<usize>,
    palette: usize,
}

impl<'g> SecState<'g> {
    fn new(g: &'g Graph, r: usize) -> Self {
        SecState {
            g,
            near: (0..g.n()).map(|u| g.ball(u, r)).collect(),
            colors: vec![0; g.m()],
            open: (0..g.n()).map(|u| g.degree(u)).collect(),
            palette: g.max_degree(),
        }
    }

    fn set_of(&self, u: usize) -> ColorSet {
        self.g
            .incident(u)
            .iter()
            .filter_map(|&(_, e)| (self.colors[e] > 0).then_some(self.colors[e]))
            .collect()
    }

    fn used_at(&self, u: usize) -> ColorSet {
        self.set_of(u)
    }

    /// A complete vertex must differ from every complete vertex in range.
    fn clashes(&self, u: usize) -> bool {
        let mine = self.set_of(u);
        self.near[u]
            .iter()
            .any(|&w| self.open[w] == 0 && self.set_of(w) == mine)
    }

    fn color_group(&mut self, u: usize) {
        let group: Vec<usize> = self
            .g
            .incident(u)
            .iter()
            .filter(|&&(_, e)| self.colors[e] == 0)
            .map(|&(_, e)| e)
            .collect();
        if group.is_empty() {
            return;
        }
        let limit = self.palette + group.len() + 1;
        loop {
            let mut nodes = 0;
            if self.search(u, &group, 0, &mut nodes) {
                return;
            }
            if self.palette >= limit {
                break;
            }
            self.palette += 1;
        }
        // Could not separate this group; take fresh colors and leave the
        // remaining conflicts to the repair pass.
        for &e in &group {
            self.palette += 1;
            self.assign(e, self.palette as Color);
        }
    }

    fn assign(&mut self, e: usize, c: Color) {
        let (a, b) = self.g.edge(e);
        self.colors[e] = c;
        self.open[a] -= 1;
        self.open[b] -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let (a, b) = self.g.edge(e);
        self.colors[e] = 0;
        self.open[a] += 1;
        self.open[b] += 1;
    }

    fn search(&mut self, u: usize, group: &[usize], i: usize, nodes: &mut usize) -> bool {
        if i == group.len() {
            return true;
        }
        let e = group[i];
        let x = self.g.opposite(e, u);
        let blocked = self.used_at(u).union(&self.used_at(x));
        for c in 1..=self.palette as Color {
            if blocked.contains(c) {
                continue;
            }
            *nodes += 1;
            if *nodes > GROUP_BUDGET {
                return false;
            }
            self.assign(e, c);
            let ok = (self.open[x] > 0 || !self.clashes(x))
                && (self.open[u] > 0 || !self.clashes(u))
                && self.search(u, group, i + 1, nodes);
            if ok {
                return true;
            }
            self.unassign(e);
        }
        false
    }

    fn repair(&mut self) -> usize {
        let g = self.g;
        let mut repairs = 0;
        while let Some((a, b)) = self.find_clash() {
            if repairs > 2 * g.m() {
                // Every edge on its own color separates everything except
                // isolated edges, which were rejected up front.
                for e in 0..g.m() {
                    self.colors[e] = e as Color + 1;
                }
                self.palette = g.m();
                return repairs;
            }
            let pick = |x: usize, y: usize| {
                g.incident(x)
                    .iter()
                    .find(|&&(w, _)| w != y)
                    .map(|&(_, e)| e)
            };
            let e = pick(a, b).or_else(|| pick(b, a)).expect("no isolated edges");
            self.palette += 1;
            self.colors[e] = self.palette as Color;
            repairs += 1;
        }
        repairs
    }

    fn find_clash(&self) -> Option<(usize, usize)> {
        let sets: Vec<ColorSet> = (0..self.g.n()).map(|u| self.set_of(u)).collect();
        (0..self.g.n()).find_map(|u| {
            self.near[u]
                .iter()
                .find(|&&w| w > u && sets[u] == sets[w])
                .map(|&w| (u, w))
        })
    }

    /// Renumbers used colors to `1..=p`.
    fn finish(self, repairs: usize) -> EdgeColoring {
        let used: ColorSet = self.colors.iter().copied().collect();
        let mut map = vec![0; self.palette.max(self.g.m()) + 2];
        for (i, c) in used.iter().enumerate() {
            map[c as usize] = i as Color + 1;
        }
        EdgeColoring {
            colors: self.colors.iter().map(|&c| map[c as usize]).collect(),
            palette: used.len(),
            repairs,
        }
    }
}

/// True when `colors` is a proper edge coloring separating every pair of
/// vertices within distance `r` by their incident color sets.
pub fn is_r_sec(g: &Graph, colors: &[Color], r: usize) -> bool {
    let sets: Vec<ColorSet> = (0..g.n())
        .map(|u| g.incident(u).iter().map(|&(_, e)| colors[e]).collect())
        .collect();
    let proper = (0..g.n()).all(|u| sets[u].len() == g.degree(u));
    proper && (0..g.n()).all(|u| g.ball(u, r).iter().all(|&w| sets[u] != sets[w]))
}
