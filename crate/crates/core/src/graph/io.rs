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

//! Plain-text graph format.
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <u> <v>      (m lines, 1-based vertex indices)
//! ```
//!
//! `p edge <n> <m>` is accepted on input for DIMACS compatibility.

use std::fs;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut list = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate problem line"));
                }
                let rest: Vec<&str> = tokens.collect();
                let nums = match rest.as_slice() {
                    [n, m] | ["edge", n, m] => (n, m),
                    _ => return Err(err("expected `p <n> <m>`")),
                };
                let n = nums.0.parse().map_err(|_| err("bad vertex count"))?;
                let m = nums.1.parse().map_err(|_| err("bad edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("edge before problem line"))?;
                let mut endpoint = || -> Result<usize> {
                    let x: usize = tokens
                        .next()
                        .ok_or_else(|| err("missing endpoint"))?
                        .parse()
                        .map_err(|_| err("bad endpoint"))?;
                    if x == 0 || x > n {
                        return Err(err("endpoint out of range (indices are 1-based)"));
                    }
                    Ok(x - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens on edge line"));
                }
                if u == v {
                    return Err(err("self-loop"));
                }
                list.push((u, v));
            }
            _ => return Err(err("unknown line type")),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    if list.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", list.len()),
        });
    }
    Graph::new(n, &list)
}

pub fn write_graph(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str("c ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("p {} {}\n", g.n(), g.m()));
    for &(a, b) in g.edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&fs::read_to_string(path)?)
}
