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

use std::collections::BTreeSet;

use super::Graph;

/// Minimum-degree removal sequence.
///
/// `order[i]` has at most `k` neighbors among `order[i + 1..]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelingOrder {
    pub order: Vec<usize>,
    pub k: usize,
}

impl PeelingOrder {
    /// `position[v]` is the index of `v` in `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Replays the removals and checks no step exposes residual degree > `k`.
    pub fn is_witness_for(&self, g: &Graph) -> bool {
        if self.order.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.order {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let pos = self.positions();
        self.order.iter().enumerate().all(|(i, &v)| {
            g.neighbors(v).filter(|&w| pos[w] > i).count() <= self.k
        })
    }
}

/// Degeneracy by repeated removal of a minimum-degree vertex, ties broken by
/// smallest index.
pub fn degeneracy(g: &Graph) -> PeelingOrder {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut order = Vec::with_capacity(n);
    let mut k = 0;
    while let Some((d, v)) = queue.pop_first() {
        k = k.max(d);
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(deg[w], w));
                deg[w] -= 1;
                queue.insert((deg[w], w));
            }
        }
    }
    PeelingOrder { order, k }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn known_degeneracies() {
        let p5 = generate(&Family::Path(5), 0).unwrap();
        assert_eq!(degeneracy(&p5).k, 1);
        let c6 = generate(&Family::Cycle(6), 0).unwrap();
        assert_eq!(degeneracy(&c6).k, 2);
        let k5 = generate(&Family::Complete(5), 0).unwrap();
        assert_eq!(degeneracy(&k5).k, 4);
        assert_eq!(degeneracy(&Graph::empty(3)).k, 0);
    }

    #[test]
    fn ties_break_by_index() {
        let c4 = generate(&Family::Cycle(4), 0).unwrap();
        assert_eq!(degeneracy(&c4).order, vec![0, 1, 2, 3]);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(degeneracy(&star).order, vec![1, 2, 0, 3]);
    }

    #[test]
    fn order_is_a_witness() {
        for seed in 0..20 {
            let g = generate(&Family::RandomKDegenerate { n: 30, k: 3 }, seed).unwrap();
            let p = degeneracy(&g);
            assert!(p.k <= 3);
            assert!(p.is_witness_for(&g));
            let too_tight = PeelingOrder {
                order: p.order.clone(),
                k: p.k.saturating_sub(1),
            };
            if p.k > 0 {
                assert!(!too_tight.is_witness_for(&g));
            }
        }
    }
}
