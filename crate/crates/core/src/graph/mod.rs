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

//! Simple undirected graphs with stable vertex and edge indices.

mod degeneracy;
mod generate;
mod io;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use degeneracy::{degeneracy, PeelingOrder};
pub use generate::{generate, Family};
pub use io::{parse_graph, read_graph, write_graph};

/// A member of `V(G) ∪ E(G)`, the domain of a total coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

/// Finite simple undirected graph.
///
/// Vertices are `0..n`, edges are `0..m` in order of first occurrence in the
/// construction list. Each edge is stored with its smaller endpoint first.
/// Adjacency lists are sorted by neighbor index and carry the edge index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

/// A connected component together with the map from its local vertex
/// indices back to the parent graph.
#[derive(Debug, Clone)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
    /// Parent edge index for each local edge.
    pub edges: Vec<usize>,
}

impl Graph {
    /// Builds a graph, dropping repeated pairs (in either orientation).
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adj[a].iter().any(|&(w, _)| w == b) {
                continue;
            }
            let id = edges.len();
            edges.push((a, b));
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge index)` pairs of `u`, sorted by neighbor.
    pub fn incident(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The other endpoint of edge `e` seen from `u`.
    pub fn opposite(&self, e: usize, u: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == u {
            b
        } else {
            a
        }
    }

    /// BFS distances from `u`; `None` for vertices in other components.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        self.bfs(u, usize::MAX)
    }

    fn bfs(&self, u: usize, limit: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            if d == limit {
                continue;
            }
            for &(w, _) in &self.adj[x] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Every vertex at distance at most `r` from `u`, with its distance.
    pub fn distance_within(&self, u: usize, r: usize) -> BTreeMap<usize, usize> {
        self.bfs(u, r)
            .into_iter()
            .enumerate()
            .filter_map(|(w, d)| d.map(|d| (w, d)))
            .collect()
    }

    /// Vertices `w != u` with `d(u, w) <= r`, in increasing index order.
    pub fn ball(&self, u: usize, r: usize) -> Vec<usize> {
        self.bfs(u, r)
            .into_iter()
            .enumerate()
            .filter_map(|(w, d)| (w != u && d.is_some()).then_some(w))
            .collect()
    }

    /// Largest finite distance between two vertices (0 for edgeless graphs).
    pub fn diameter(&self) -> usize {
        (0..self.n)
            .map(|u| self.distances_from(u).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// `N⟨u⟩`: the vertex, its neighbors and its incident edges.
    pub fn incidence_set(&self, u: usize) -> Vec<Element> {
        let mut out = Vec::with_capacity(2 * self.degree(u) + 1);
        out.push(Element::Vertex(u));
        out.extend(self.adj[u].iter().map(|&(w, _)| Element::Vertex(w)));
        out.extend(self.adj[u].iter().map(|&(_, e)| Element::Edge(e)));
        out.sort_unstable();
        out
    }

    /// Component label per vertex, labels assigned in order of smallest vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(w, _) in &self.adj[x] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().0 <= 1
    }

    /// Maximal connected pieces, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let (count, label) = self.component_labels();
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            groups[c].push(v);
        }
        groups
            .into_iter()
            .map(|vertices| {
                let (graph, edges) = self.induced_subgraph(&vertices);
                Component {
                    graph,
                    vertices,
                    edges,
                }
            })
            .collect()
    }

    /// Subgraph induced by `vertices` (local index = position in the slice)
    /// and the parent index of each local edge.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut list = Vec::new();
        let mut parent_edges = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                list.push((local[a], local[b]));
                parent_edges.push(e);
            }
        }
        let g = Graph::new(vertices.len(), &list).expect("induced subgraph of a simple graph");
        (g, parent_edges)
    }

    /// First K_2 component, if any.
    pub fn isolated_edge(&self) -> Option<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .find(|&(a, b)| self.degree(a) == 1 && self.degree(b) == 1)
    }

    pub fn check_no_isolated_edge(&self) -> Result<()> {
        match self.isolated_edge() {
            Some((a, b)) => Err(Error::IsolatedEdge(a, b)),
            None => Ok(()),
        }
    }

    pub fn is_forest(&self) -> bool {
        let (count, _) = self.component_labels();
        self.m() + count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.m() + 1 == self.n
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let list: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)))
            .collect();
        Graph::new(self.n + other.n, &list).expect("union of simple graphs")
    }
}
