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

//! Vertex-strongly-distinguishing total colorings of simple graphs.
//!
//! A proper total coloring assigns colors to vertices and edges so that
//! adjacent vertices, adjacent edges and incident vertex/edge pairs differ.
//! The coloring is *r-distinguishing* when any two vertices at distance at
//! most `r` see different color sets on their closed neighborhoods plus
//! incident edges. This crate provides:
//!
//! * [`graph`]: the graph model, distances, degeneracy peeling, generators and
//!   the text file format;
//! * [`coloring`]: total colorings, color sets, the verifier, lower bounds and
//!   the single-color extension finders;
//! * [`solver`]: an exact backtracking search for the chromatic number;
//! * [`constructive`]: polynomial constructions (palette composition, the
//!   degenerate-graph extension, tree specializations);
//! * [`experiments`]: batch tables and conjecture scans.
//!
//! Batch work goes through [`par`], which runs on rayon when the `parallel`
//! feature is enabled and falls back to plain iterators otherwise.

pub mod coloring;
pub mod constructive;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod par;
pub mod solver;

pub use coloring::{Color, ColorSet, TotalColoring, VerificationReport};
pub use error::{Error, Result};
pub use graph::{Element, Graph};
