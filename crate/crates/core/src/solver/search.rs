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

//! Backtracking over total colorings with a fixed element order.

use std::time::Instant;

use super::{ElementOrder, SearchBudget, SearchOptions};
use crate::coloring::{Color, ColorSet, TotalColoring};
use crate::graph::{degeneracy, Element, Graph};

pub(crate) enum Outcome {
    Found(TotalColoring),
    Exhausted,
    Timeout,
}

/// Static search plan for one `(graph, r)` pair; reusable across palettes.
pub(crate) struct Plan {
    n: usize,
    m: usize,
    elements: Vec<Element>,
    /// Earlier positions whose color must differ from position `s`.
    conflicts: Vec<Vec<usize>>,
    /// Vertices whose incidence set is complete once position `s` is set.
    completes: Vec<Vec<usize>>,
    /// Positions of the elements of `N⟨u⟩`.
    incidence: Vec<Vec<usize>>,
    /// Vertices within distance `r`, excluding `u`.
    near: Vec<Vec<usize>>,
    /// Position at which `u` becomes complete.
    complete_at: Vec<usize>,
    /// Vertices that contain each position in their incidence set.
    watchers: Vec<Vec<usize>>,
}

impl Plan {
    pub(crate) fn new(g: &Graph, r: usize, order: ElementOrder) -> Plan {
        let n = g.n();
        let m = g.m();
        let peel = degeneracy(g);
        let vertex_seq: Vec<usize> = peel.order.iter().rev().copied().collect();
        let mut vpos = vec![0; n];
        for (i, &v) in vertex_seq.iter().enumerate() {
            vpos[v] = i;
        }
        let edge_key = |e: usize| {
            let (a, b) = g.edge(e);
            let (pa, pb) = (vpos[a], vpos[b]);
            (pa.max(pb), pa.min(pb))
        };
        let elements: Vec<Element> = match order {
            ElementOrder::VerticesFirst => {
                let mut edges: Vec<usize> = (0..m).collect();
                edges.sort_by_key(|&e| edge_key(e));
                vertex_seq
                    .iter()
                    .map(|&v| Element::Vertex(v))
                    .chain(edges.into_iter().map(Element::Edge))
                    .collect()
            }
            ElementOrder::Interleaved => {
                let mut out = Vec::with_capacity(n + m);
                for &v in &vertex_seq {
                    out.push(Element::Vertex(v));
                    let mut back: Vec<usize> = g
                        .incident(v)
                        .iter()
                        .filter(|&&(w, _)| vpos[w] < vpos[v])
                        .map(|&(_, e)| e)
                        .collect();
                    back.sort_by_key(|&e| edge_key(e));
                    out.extend(back.into_iter().map(Element::Edge));
                }
                out
            }
        };
        let mut pos_of_vertex = vec![0; n];
        let mut pos_of_edge = vec![0; m];
        for (s, &x) in elements.iter().enumerate() {
            match x {
                Element::Vertex(v) => pos_of_vertex[v] = s,
                Element::Edge(e) => pos_of_edge[e] = s,
            }
        }
        let mut conflicts = vec![Vec::new(); n + m];
        for (s, &x) in elements.iter().enumerate() {
            let mut list = Vec::new();
            match x {
                Element::Vertex(v) => {
                    for &(w, e) in g.incident(v) {
                        list.push(pos_of_vertex[w]);
                        list.push(pos_of_edge[e]);
                    }
                }
                Element::Edge(e) => {
                    let (a, b) = g.edge(e);
                    for x in [a, b] {
                        list.push(pos_of_vertex[x]);
                        for &(_, f) in g.incident(x) {
                            if f != e {
                                list.push(pos_of_edge[f]);
                            }
                        }
                    }
                }
            }
            list.retain(|&p| p < s);
            list.sort_unstable();
            list.dedup();
            conflicts[s] = list;
        }
        let mut incidence = vec![Vec::new(); n];
        let mut complete_at = vec![0; n];
        let mut completes = vec![Vec::new(); n + m];
        let mut watchers = vec![Vec::new(); n + m];
        for u in 0..n {
            let mut list = vec![pos_of_vertex[u]];
            for &(w, e) in g.incident(u) {
                list.push(pos_of_vertex[w]);
                list.push(pos_of_edge[e]);
            }
            list.sort_unstable();
            let last = *list.last().unwrap();
            for &p in &list {
                watchers[p].push(u);
            }
            complete_at[u] = last;
            completes[last].push(u);
            incidence[u] = list;
        }
        let near = (0..n).map(|u| g.ball(u, r)).collect();
        Plan {
            n,
            m,
            elements,
            conflicts,
            completes,
            incidence,
            near,
            complete_at,
            watchers,
        }
    }
}

pub(crate) struct Searcher<'p> {
    plan: &'p Plan,
    kappa: Color,
    colors: Vec<Color>,
    sets: Vec<ColorSet>,
    forward_check: bool,
    budget: SearchBudget,
    start: Instant,
    pub(crate) nodes: u64,
    timed_out: bool,
}

impl<'p> Searcher<'p> {
    pub(crate) fn new(plan: &'p Plan, kappa: usize, budget: SearchBudget, opts: &SearchOptions) -> Self {
        Searcher {
            plan,
            kappa: kappa as Color,
            colors: vec![0; plan.n + plan.m],
            sets: vec![ColorSet::new(); plan.n],
            forward_check: opts.forward_check,
            budget,
            start: Instant::now(),
            nodes: 0,
            timed_out: false,
        }
    }

    pub(crate) fn run(&mut self) -> Outcome {
        let total = self.plan.n + self.plan.m;
        if self.dfs(0, 0) {
            let plan = self.plan;
            let mut f = TotalColoring::blank(plan.n, plan.m, self.kappa as usize);
            for (s, &x) in plan.elements.iter().enumerate() {
                f.set(x, self.colors[s]);
            }
            debug_assert_eq!(total, plan.elements.len());
            Outcome::Found(f)
        } else if self.timed_out {
            Outcome::Timeout
        } else {
            Outcome::Exhausted
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        // The clock is read every 1024 nodes.
        self.timed_out = self.nodes >= self.budget.max_nodes
            || (self.nodes & 0x3ff == 0 && self.start.elapsed() >= self.budget.max_time);
        self.timed_out
    }

    fn dfs(&mut self, s: usize, max_used: Color) -> bool {
        let plan = self.plan;
        if s == plan.elements.len() {
            return true;
        }
        let mut forbidden = ColorSet::new();
        for &p in &plan.conflicts[s] {
            forbidden.insert(self.colors[p]);
        }
        let top = (max_used + 1).min(self.kappa);
        for c in 1..=top {
            if forbidden.contains(c) {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return false;
            }
            self.colors[s] = c;
            if self.consistent(s) && self.dfs(s + 1, max_used.max(c)) {
                return true;
            }
            if self.timed_out {
                self.colors[s] = 0;
                return false;
            }
        }
        self.colors[s] = 0;
        false
    }

    /// Distinguishing checks for vertices completed at `s`, then the optional
    /// forward check on vertices left with one open element.
    fn consistent(&mut self, s: usize) -> bool {
        let plan = self.plan;
        for (i, &u) in plan.completes[s].iter().enumerate() {
            let set: ColorSet = plan.incidence[u].iter().map(|&p| self.colors[p]).collect();
            self.sets[u] = set;
            for &w in &plan.near[u] {
                let done = plan.complete_at[w] < s
                    || (plan.complete_at[w] == s && plan.completes[s][..i].contains(&w));
                if done && self.sets[w] == set {
                    return false;
                }
            }
        }
        if self.forward_check {
            for &w in &plan.watchers[s] {
                if plan.complete_at[w] > s && !self.last_open_has_color(w, s) {
                    return false;
                }
            }
        }
        true
    }

    /// For a vertex `w` whose incidence set has exactly one open position
    /// left, checks that some color for that position keeps it proper and
    /// keeps `C⟨w⟩` apart from every completed vertex within range.
    fn last_open_has_color(&self, w: usize, s: usize) -> bool {
        let plan = self.plan;
        let mut open = plan.incidence[w].iter().filter(|&&p| p > s);
        let (Some(&last), None) = (open.next(), open.next()) else {
            return true;
        };
        let mut partial = ColorSet::new();
        for &p in &plan.incidence[w] {
            if p <= s {
                partial.insert(self.colors[p]);
            }
        }
        let mut blocked = ColorSet::new();
        for &p in &plan.conflicts[last] {
            if p <= s {
                blocked.insert(self.colors[p]);
            }
        }
        for &u in &plan.near[w] {
            if plan.complete_at[u] > s {
                continue;
            }
            let target = self.sets[u];
            if !partial.is_subset(&target) {
                continue;
            }
            let missing = target.difference(&partial);
            match missing.len() {
                0 => blocked = blocked.union(&partial),
                1 => blocked = blocked.union(&missing),
                _ => {}
            }
        }
        (1..=self.kappa).any(|c| !blocked.contains(c))
    }
}
