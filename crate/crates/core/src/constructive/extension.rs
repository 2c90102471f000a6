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

//! Vertex-by-vertex extension for `k`-degenerate graphs with `kΔ + 3`
//! colors.
//!
//! The graph is peeled down to at most four vertices, the base is colored
//! exactly, and the peeled vertices are put back in reverse order. Each
//! returning vertex `v` with earlier neighbors `v_1 < … < v_δ` first gets a
//! vertex color avoiding every color that would make some `v_i` look like one
//! of its neighbors, then its edges `v v_1, …, v v_δ` are colored one at a
//! time with the smallest color outside a forbidden set.

use std::fmt;

use log::{debug, warn};

use super::compose::forest_vsdtc;
use crate::coloring::{
    find_equalizing_color, find_extension_color, verify_r_vsdtc, Color, ColorSet, TotalColoring,
};
use crate::error::{Error, Result};
use crate::graph::{degeneracy, Graph};
use crate::solver::{exists_coloring_with, ElementOrder, ProbeOutcome, SearchBudget, SearchOptions};

/// Which of the three insertion regimes applies, by the number of earlier
/// neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtensionCase {
    Isolated,
    /// One earlier neighbor.
    Single,
    /// Two earlier neighbors.
    Pair,
    /// Three or more.
    Many,
}

impl ExtensionCase {
    pub fn of(delta: usize) -> ExtensionCase {
        match delta {
            0 => ExtensionCase::Isolated,
            1 => ExtensionCase::Single,
            2 => ExtensionCase::Pair,
            _ => ExtensionCase::Many,
        }
    }
}

impl fmt::Display for ExtensionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExtensionCase::Isolated => "isolated",
            ExtensionCase::Single => "single",
            ExtensionCase::Pair => "pair",
            ExtensionCase::Many => "many",
        };
        f.write_str(s)
    }
}

/// Ceiling on the forbidden-set size at `stage` (1-based) for a vertex with
/// `delta` earlier neighbors in a graph of maximum degree `max_degree`.
pub fn stage_bound(max_degree: usize, delta: usize, stage: usize) -> usize {
    let d = max_degree;
    match delta {
        0 => 0,
        1 => 2 * d + 1,
        2 => 2 * d + stage,
        _ if stage == delta => 2 * d + 3 * delta - 4,
        _ if stage == delta - 1 => 2 * d + 2 * delta - 2,
        _ if stage == 1 => 2 * d,
        _ => 2 * d + stage - 1,
    }
}

/// Why a color is forbidden on the current edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenReason {
    /// Clashes with an element the edge touches.
    Properness,
    /// Would make the edge's far endpoint look like one of its neighbors.
    NeighborDistinction,
    /// Would make the new vertex look like one of its neighbors.
    CenterDistinction,
    /// Would leave the new vertex too close to its last neighbor before the
    /// final edge.
    CenterLookahead,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenPart {
    pub reason: ForbiddenReason,
    pub colors: ColorSet,
}

/// Forbidden colors for one edge, by reason, plus colors that are allowed
/// but better avoided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSet {
    pub case: ExtensionCase,
    pub stage: usize,
    pub parts: Vec<ForbiddenPart>,
    pub union: ColorSet,
    /// Colors that keep the current stage valid but make a later stage
    /// tighter. Used only to break ties.
    pub avoid: ColorSet,
    pub bound: usize,
}

impl ForbiddenSet {
    pub fn len(&self) -> usize {
        self.union.len()
    }

    pub fn is_empty(&self) -> bool {
        self.union.is_empty()
    }

    pub fn contains(&self, c: Color) -> bool {
        self.union.contains(c)
    }

    fn push(&mut self, reason: ForbiddenReason, colors: ColorSet) {
        if colors.is_empty() {
            return;
        }
        self.union = self.union.union(&colors);
        self.parts.push(ForbiddenPart { reason, colors });
    }

    /// Smallest color in `1..=palette` outside the union, preferring one
    /// outside `avoid` too.
    pub fn pick(&self, palette: usize) -> Option<Color> {
        self.union
            .union(&self.avoid)
            .first_absent(palette)
            .or_else(|| self.union.first_absent(palette))
    }
}

/// `{c : moving ∪ {c} = fixed}`.
fn colors_making_equal(moving: &ColorSet, fixed: &ColorSet, palette: usize) -> Result<ColorSet> {
    if moving == fixed {
        return Ok(*moving);
    }
    let mut out = ColorSet::new();
    if let Some(c) = find_extension_color(moving, fixed, palette)? {
        if moving.with(c) == *fixed {
            out.insert(c);
        }
    }
    Ok(out)
}

/// `{c : a ∪ {c} = b ∪ {c}}`.
fn colors_equalizing(a: &ColorSet, b: &ColorSet, palette: usize) -> Result<ColorSet> {
    if a == b {
        return Ok(ColorSet::full(palette));
    }
    Ok(find_equalizing_color(a, b, palette)?.into_iter().collect())
}

/// Colors `c` with `|(a ∪ {c}) ⊕ b| < 2`.
fn colors_too_close(a: &ColorSet, b: &ColorSet, palette: usize) -> ColorSet {
    (1..=palette as Color)
        .filter(|&c| a.with(c).xor(b).len() < 2)
        .collect()
}

/// Partial coloring of the vertices inserted so far, together with the
/// vertex being inserted.
#[derive(Debug, Clone)]
pub struct ExtensionState<'g> {
    graph: &'g Graph,
    coloring: TotalColoring,
    active: Vec<bool>,
    vertex: usize,
    neighbors: Vec<usize>,
    edges: Vec<usize>,
    max_degree: usize,
    stage: usize,
}

impl<'g> ExtensionState<'g> {
    /// `active` marks the vertices already inserted; every element among
    /// them must be colored. `vertex` becomes active.
    pub fn new(graph: &'g Graph, coloring: TotalColoring, mut active: Vec<bool>, vertex: usize) -> Result<Self> {
        if active.len() != graph.n() || vertex >= graph.n() {
            return Err(Error::BadVertex(vertex));
        }
        if active[vertex] {
            return Err(Error::PreconditionViolated(format!("vertex {vertex} is already present")));
        }
        coloring.check_shape(graph)?;
        let (neighbors, edges): (Vec<usize>, Vec<usize>) =
            graph.incident(vertex).iter().filter(|&&(w, _)| active[w]).copied().unzip();
        active[vertex] = true;
        Ok(ExtensionState {
            graph,
            coloring,
            active,
            vertex,
            neighbors,
            edges,
            max_degree: graph.max_degree(),
            stage: 0,
        })
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// Earlier neighbors `v_1, …, v_δ`, ascending.
    pub fn neighbors(&self) -> &[usize] {
        &self.neighbors
    }

    /// Pendant edges `v v_1, …, v v_δ`.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn delta(&self) -> usize {
        self.neighbors.len()
    }

    pub fn case(&self) -> ExtensionCase {
        ExtensionCase::of(self.delta())
    }

    pub fn palette(&self) -> usize {
        self.coloring.palette_size()
    }

    /// Number of pendant edges colored so far.
    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn coloring(&self) -> &TotalColoring {
        &self.coloring
    }

    pub fn into_coloring(self) -> TotalColoring {
        self.coloring
    }

    pub fn vertex_color(&self) -> Option<Color> {
        self.coloring.vertex(self.vertex)
    }

    pub fn set_vertex_color(&mut self, c: Color) {
        self.coloring.set_vertex(self.vertex, c);
    }

    /// Colors the next pendant edge.
    pub fn color_next_edge(&mut self, c: Color) {
        self.coloring.set_edge(self.edges[self.stage], c);
        self.stage += 1;
    }

    fn active_neighbors(&self, u: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.incident(u).iter().copied().filter(move |&(w, _)| self.active[w])
    }

    /// Colors currently present on the active part of `N⟨u⟩`.
    pub fn current_set(&self, u: usize) -> ColorSet {
        let f = &self.coloring;
        let mut s: ColorSet = f.vertex(u).into_iter().collect();
        for (w, e) in self.active_neighbors(u) {
            s.extend_opt(f.vertex(w));
            s.extend_opt(f.edge(e));
        }
        s
    }

    /// Every active element of `N⟨u⟩` is colored.
    pub fn is_good(&self, u: usize) -> bool {
        let f = &self.coloring;
        f.vertex(u).is_some()
            && self
                .active_neighbors(u)
                .all(|(w, e)| f.vertex(w).is_some() && f.edge(e).is_some())
    }

    fn active_degree(&self, u: usize) -> usize {
        self.active_neighbors(u).count()
    }

    /// Adjacent `a`, `b` forming a two-vertex component are never compared.
    fn exempt(&self, a: usize, b: usize) -> bool {
        self.active_degree(a) == 1 && self.active_degree(b) == 1
    }

    /// Active neighbors of `v_i` other than the new vertex.
    fn second(&self, vi: usize) -> impl Iterator<Item = usize> + '_ {
        self.active_neighbors(vi).map(|(w, _)| w).filter(move |&w| w != self.vertex)
    }

    fn position(&self, u: usize) -> Option<usize> {
        self.neighbors.iter().position(|&w| w == u)
    }

    /// Pairs touching the new vertex or its neighbors with equal color sets.
    pub fn local_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut around = vec![self.vertex];
        around.extend_from_slice(&self.neighbors);
        for &u in &around {
            let mine = self.current_set(u);
            for (w, _) in self.active_neighbors(u) {
                if !self.exempt(u, w) && self.current_set(w) == mine {
                    out.push((u.min(w), u.max(w)));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn proper_at(&self, e: usize, c: Color) -> bool {
        let (a, b) = self.graph.edge(e);
        let f = &self.coloring;
        if f.vertex(a) == Some(c) || f.vertex(b) == Some(c) {
            return false;
        }
        [a, b].iter().all(|&x| {
            self.active_neighbors(x)
                .all(|(_, d)| d == e || f.edge(d) != Some(c))
        })
    }
}

/// Safe vertex color and the colors it had to avoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafeColor {
    pub color: Color,
    pub forbidden: ColorSet,
}

/// Smallest color `c_0` differing from every `f(v_i)` such that no `v_i`
/// gets the color set of one of its neighbors once `c_0` joins it.
pub fn choose_safe_vertex_color(state: &ExtensionState<'_>) -> Result<SafeColor> {
    let palette = state.palette();
    let mut forbidden = ColorSet::new();
    for &vi in &state.neighbors {
        forbidden.extend_opt(state.coloring.vertex(vi));
        let base = state.current_set(vi);
        for x in state.second(vi) {
            let other = state.current_set(x);
            let bad = if state.position(x).is_some() {
                // Both sets gain the new color.
                if base == other {
                    continue;
                }
                colors_equalizing(&base, &other, palette)?
            } else {
                colors_making_equal(&base, &other, palette)?
            };
            forbidden = forbidden.union(&bad);
        }
    }
    match forbidden.first_absent(palette) {
        Some(color) => Ok(SafeColor { color, forbidden }),
        None => Err(Error::NoSafeColor(state.vertex)),
    }
}

/// Forbidden colors for the pendant edge `v v_i` (`stage = i`, 1-based),
/// given that the vertex color and the first `i − 1` edges are in place.
pub fn forbidden_colors_for_edge(state: &ExtensionState<'_>, stage: usize) -> Result<ForbiddenSet> {
    let delta = state.delta();
    if stage == 0 || stage > delta || state.stage + 1 != stage || state.vertex_color().is_none() {
        return Err(Error::PreconditionViolated(format!(
            "edge {stage} of {delta} is not next for vertex {}",
            state.vertex
        )));
    }
    let palette = state.palette();
    let f = &state.coloring;
    let v = state.vertex;
    let vi = state.neighbors[stage - 1];
    let case = state.case();
    let mut out = ForbiddenSet {
        case,
        stage,
        parts: Vec::new(),
        union: ColorSet::new(),
        avoid: ColorSet::new(),
        bound: stage_bound(state.max_degree, delta, stage),
    };

    let mut proper = ColorSet::new();
    for x in [v, vi] {
        proper.extend_opt(f.vertex(x));
        for (_, e) in state.active_neighbors(x) {
            proper.extend_opt(f.edge(e));
        }
    }
    out.push(ForbiddenReason::Properness, proper);

    // v_i becomes good at this stage.
    let cur_vi = state.current_set(vi);
    let mut neighbor = ColorSet::new();
    for x in state.second(vi) {
        match state.position(x) {
            Some(l) if l >= stage => {
                // Later neighbor: avoid matching its present set, which only
                // grows by one more color.
                let near = colors_making_equal(&cur_vi, &state.current_set(x), palette)?;
                out.avoid = out.avoid.union(&near);
            }
            _ => {
                let bad = colors_making_equal(&cur_vi, &state.current_set(x), palette)?;
                neighbor = neighbor.union(&bad);
            }
        }
    }
    out.push(ForbiddenReason::NeighborDistinction, neighbor);

    let cur_v = state.current_set(v);
    if stage == delta {
        // v becomes good too.
        let mut center = ColorSet::new();
        for &vj in &state.neighbors[..delta - 1] {
            center = center.union(&colors_making_equal(&cur_v, &state.current_set(vj), palette)?);
        }
        let lone = delta == 1 && state.second(vi).next().is_none();
        if !lone {
            center = center.union(&colors_equalizing(&cur_v, &cur_vi, palette)?);
        }
        out.push(ForbiddenReason::CenterDistinction, center);
    } else if stage + 1 == delta {
        let last = state.current_set(state.neighbors[delta - 1]);
        let guard = if delta >= 3 {
            if cur_v == last {
                colors_making_equal(&cur_v, &last, palette)?
            } else {
                colors_too_close(&cur_v, &last, palette)
            }
        } else {
            out.avoid = out.avoid.union(&colors_too_close(&cur_v, &last, palette));
            colors_making_equal(&cur_v, &last, palette)?
        };
        out.push(ForbiddenReason::CenterLookahead, guard);
    }
    Ok(out)
}

/// One colored pendant edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub vertex: usize,
    pub case: ExtensionCase,
    pub stage: usize,
    pub forbidden: usize,
    pub bound: usize,
    pub color: Color,
}

/// One inserted vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRecord {
    pub vertex: usize,
    pub delta: usize,
    pub forbidden: usize,
    /// `δΔ`.
    pub bound: usize,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Backtrack {
    pub vertex: usize,
    pub stage: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtensionLog {
    /// Vertices colored exactly before any insertion.
    pub base: Vec<usize>,
    /// Maximum degree at most 2: colored by exact search instead.
    pub delegated: bool,
    /// `k ≤ 1`: colored as a forest instead.
    pub forest: bool,
    pub vertices: Vec<VertexRecord>,
    pub stages: Vec<StageRecord>,
    pub backtracks: Vec<Backtrack>,
}

impl ExtensionLog {
    /// Stages whose forbidden set outgrew its ceiling.
    pub fn over_bound(&self) -> impl Iterator<Item = &StageRecord> {
        self.stages.iter().filter(|s| s.forbidden > s.bound)
    }
}

#[derive(Debug, Clone)]
pub struct Extension {
    /// Palette size `kΔ + 3`.
    pub coloring: TotalColoring,
    pub log: ExtensionLog,
}

/// Colors a `k`-degenerate graph with palette `kΔ + 3`.
///
/// `k ≤ 1` is handled by [`forest_vsdtc`]. Graphs of maximum degree at most
/// 2 are paths and cycles and are solved exactly, five colors per component.
pub fn extend_degenerate_vsdtc(g: &Graph, k: usize) -> Result<Extension> {
    g.check_no_isolated_edge()?;
    let peel = degeneracy(g);
    if peel.k > k {
        return Err(Error::PreconditionViolated(format!(
            "graph is {}-degenerate, not {k}-degenerate",
            peel.k
        )));
    }
    let delta = g.max_degree();
    if k <= 1 {
        let c = forest_vsdtc(g)?;
        let mut coloring = c.coloring;
        coloring.set_palette_size(coloring.palette_size().max(delta + 3));
        let log = ExtensionLog { forest: true, ..Default::default() };
        return Ok(Extension { coloring, log });
    }
    let lambda = k * delta + 3;
    if lambda > crate::coloring::MAX_PALETTE {
        return Err(Error::InvalidInput(format!("palette {lambda} is too large")));
    }
    let mut log = ExtensionLog::default();
    let mut coloring = TotalColoring::new(g, lambda);
    if delta <= 2 {
        log.delegated = true;
        let all: Vec<usize> = (0..g.n()).collect();
        solve_exactly(g, &all, &mut coloring, 5)?;
        return finish(g, coloring, log);
    }

    let order: Vec<usize> = peel.order.iter().rev().copied().collect();
    let split = order.len().min(4);
    log.base = order[..split].to_vec();
    solve_exactly(g, &log.base, &mut coloring, lambda)?;
    let mut active = vec![false; g.n()];
    for &v in &log.base {
        active[v] = true;
    }
    for &v in &order[split..] {
        let mut state = ExtensionState::new(g, coloring, active, v)?;
        insert(&mut state, &mut log)?;
        active = state.active.clone();
        coloring = state.into_coloring();
    }
    finish(g, coloring, log)
}

fn finish(g: &Graph, coloring: TotalColoring, log: ExtensionLog) -> Result<Extension> {
    let report = verify_r_vsdtc(g, &coloring, 1)?;
    if !report.is_valid() {
        return Err(Error::ExtensionFailure {
            vertex: g.n(),
            detail: format!("final coloring has {} violations", report.violations.len()),
        });
    }
    Ok(Extension { coloring, log })
}

/// Colors the subgraph induced by `vertices` exactly, component by
/// component, with at most `limit` colors, writing into `coloring`.
fn solve_exactly(g: &Graph, vertices: &[usize], coloring: &mut TotalColoring, limit: usize) -> Result<()> {
    let (sub, sub_edges) = g.induced_subgraph(vertices);
    let map = vertices;
    let opts = SearchOptions { order: ElementOrder::Interleaved, ..Default::default() };
    for comp in sub.components() {
        let h = &comp.graph;
        let found = match (h.n(), h.m()) {
            (1, _) => TotalColoring::from_total(1, &[1], &[])?,
            (2, 1) => TotalColoring::from_total(3, &[1, 2], &[3])?,
            _ => {
                let mut hit = None;
                for kappa in h.max_degree() + 1..=limit {
                    let probe = exists_coloring_with(h, 1, kappa, SearchBudget::unlimited(), &opts)?;
                    if let ProbeOutcome::Found(f) = probe.outcome {
                        hit = Some(f);
                        break;
                    }
                }
                hit.ok_or_else(|| Error::ExtensionFailure {
                    vertex: map[comp.vertices[0]],
                    detail: format!("no exact coloring of the base with {limit} colors"),
                })?
            }
        };
        for (i, &sv) in comp.vertices.iter().enumerate() {
            coloring.set_vertex(map[sv], found.vertex(i).expect("total"));
        }
        for (i, &se) in comp.edges.iter().enumerate() {
            coloring.set_edge(sub_edges[se], found.edge(i).expect("total"));
        }
    }
    Ok(())
}

fn insert(state: &mut ExtensionState<'_>, log: &mut ExtensionLog) -> Result<()> {
    let v = state.vertex;
    let delta = state.delta();
    let safe = choose_safe_vertex_color(state)?;
    state.set_vertex_color(safe.color);
    log.vertices.push(VertexRecord {
        vertex: v,
        delta,
        forbidden: safe.forbidden.len(),
        bound: delta * state.max_degree,
        color: safe.color,
    });
    for stage in 1..=delta {
        let fs = forbidden_colors_for_edge(state, stage)?;
        match fs.pick(state.palette()) {
            Some(c) => {
                log.stages.push(StageRecord {
                    vertex: v,
                    case: fs.case,
                    stage,
                    forbidden: fs.len(),
                    bound: fs.bound,
                    color: c,
                });
                state.color_next_edge(c);
            }
            None => {
                let detail = format!("no color left at stage {stage}, forbidden {:?}", fs.union);
                warn!("vertex {v}: {detail}; backtracking");
                log.backtracks.push(Backtrack { vertex: v, stage, detail });
                return backtrack(state);
            }
        }
    }
    let bad = state.local_violations();
    if !bad.is_empty() {
        let detail = format!("pairs {bad:?} left equal");
        warn!("vertex {v}: {detail}; backtracking");
        log.backtracks.push(Backtrack { vertex: v, stage: delta, detail });
        return backtrack(state);
    }
    debug!("inserted vertex {v} with {delta} earlier neighbors");
    Ok(())
}

/// Recolors all pendant edges of the current vertex by exhaustive search.
fn backtrack(state: &mut ExtensionState<'_>) -> Result<()> {
    for &e in &state.edges {
        state.coloring.clear(crate::graph::Element::Edge(e));
    }
    state.stage = 0;
    if search_edges(state) {
        Ok(())
    } else {
        Err(Error::ExtensionFailure {
            vertex: state.vertex,
            detail: "local search over the new edges failed".into(),
        })
    }
}

fn search_edges(state: &mut ExtensionState<'_>) -> bool {
    if state.stage == state.delta() {
        return state.local_violations().is_empty();
    }
    let e = state.edges[state.stage];
    for c in 1..=state.palette() as Color {
        if !state.proper_at(e, c) {
            continue;
        }
        state.color_next_edge(c);
        if search_edges(state) {
            return true;
        }
        state.stage -= 1;
        state.coloring.clear(crate::graph::Element::Edge(e));
    }
    false
}
