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

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

use crate::error::{Error, Result};

/// Graph families known to the generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Uniform labelled tree (Prüfer sequence).
    RandomTree(usize),
    /// Each new vertex attaches to `min(k, i)` distinct earlier vertices.
    RandomKDegenerate { n: usize, k: usize },
    /// Complete binary tree with `depth` edge levels.
    CompleteBinaryTree(usize),
    /// Erdős–Rényi `G(n, p)`.
    Gnp { n: usize, p: f64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::RandomTree(_) => "random_tree",
            Family::RandomKDegenerate { .. } => "random_k_degenerate",
            Family::CompleteBinaryTree(_) => "complete_binary_tree",
            Family::Gnp { .. } => "gnp",
        }
    }

    /// Same family with a different vertex count, where that makes sense.
    pub fn with_n(&self, n: usize) -> Family {
        match *self {
            Family::Path(_) => Family::Path(n),
            Family::Cycle(_) => Family::Cycle(n),
            Family::Complete(_) => Family::Complete(n),
            Family::RandomTree(_) => Family::RandomTree(n),
            Family::RandomKDegenerate { k, .. } => Family::RandomKDegenerate { n, k },
            Family::Gnp { p, .. } => Family::Gnp { n, p },
            other => other,
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(
            self,
            Family::RandomTree(_) | Family::RandomKDegenerate { .. } | Family::Gnp { .. }
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) | Family::RandomTree(n) => {
                write!(f, "{}({n})", self.name())
            }
            Family::CompleteBipartite(a, b) => write!(f, "{}({a},{b})", self.name()),
            Family::RandomKDegenerate { n, k } => write!(f, "{}({n},{k})", self.name()),
            Family::CompleteBinaryTree(d) => write!(f, "{}({d})", self.name()),
            Family::Gnp { n, p } => write!(f, "{}({n},{p})", self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `cycle(6)` or
    /// `random_k_degenerate(40,2)`.
    fn from_str(s: &str) -> Result<Family> {
        let bad = || Error::InvalidInput(format!("unknown graph family '{s}'"));
        let s = s.trim();
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args: Vec<&str> = rest.strip_suffix(')').ok_or_else(bad)?.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let fam = match name.trim() {
            "path" => Family::Path(int(0)?),
            "cycle" => Family::Cycle(int(0)?),
            "complete" => Family::Complete(int(0)?),
            "random_tree" => Family::RandomTree(int(0)?),
            "complete_binary_tree" => Family::CompleteBinaryTree(int(0)?),
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(int(0)?, int(1)?)
            }
            "random_k_degenerate" => {
                arity(2)?;
                Family::RandomKDegenerate { n: int(0)?, k: int(1)? }
            }
            "gnp" => {
                arity(2)?;
                let p = args[1].parse().map_err(|_| bad())?;
                Family::Gnp { n: int(0)?, p }
            }
            _ => return Err(bad()),
        };
        if !matches!(fam, Family::CompleteBipartite(..) | Family::RandomKDegenerate { .. } | Family::Gnp { .. }) {
            arity(1)?;
        }
        Ok(fam)
    }
}

/// Deterministic generator: equal `(family, seed)` gives an identical graph.
pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *family {
        Family::Path(n) => {
            let list: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &list)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
            }
            let mut list: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            list.push((n - 1, 0));
            Graph::new(n, &list)
        }
        Family::Complete(n) => {
            let list: Vec<_> = (0..n)
                .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
                .collect();
            Graph::new(n, &list)
        }
        Family::CompleteBipartite(a, b) => {
            let list: Vec<_> = (0..a)
                .flat_map(|x| (0..b).map(move |y| (x, a + y)))
                .collect();
            Graph::new(a + b, &list)
        }
        Family::RandomTree(n) => Graph::new(n, &prufer_tree(n, &mut rng)),
        Family::RandomKDegenerate { n, k } => {
            let mut list = Vec::new();
            for i in 1..n {
                let take = k.min(i);
                let mut picked: Vec<usize> = sample(&mut rng, i, take).into_vec();
                picked.sort_unstable();
                list.extend(picked.into_iter().map(|j| (j, i)));
            }
            Graph::new(n, &list)
        }
        Family::CompleteBinaryTree(depth) => {
            let n = (1usize << (depth + 1)) - 1;
            let list: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
            Graph::new(n, &list)
        }
        Family::Gnp { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInput(format!("edge probability {p} not in [0, 1]")));
            }
            let mut list = Vec::new();
            for a in 0..n {
                for b in (a + 1)..n {
                    if rng.gen_bool(p) {
                        list.push((a, b));
                    }
                }
            }
            Graph::new(n, &list)
        }
    }
}

fn prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut list = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        list.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    list.push((a, b));
    list
}
