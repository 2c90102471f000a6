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

//! Polynomial-time constructions meeting the known upper bounds.

mod compose;
mod extension;
mod greedy;

pub use compose::{compose_vsdtc, forest_vsdtc, tree_vsdtc_r, Composition, TreeColoring};
pub use extension::{
    choose_safe_vertex_color, extend_degenerate_vsdtc, forbidden_colors_for_edge, stage_bound, Backtrack,
    Extension, ExtensionCase, ExtensionLog, ExtensionState, ForbiddenPart, ForbiddenReason, ForbiddenSet,
    SafeColor, StageRecord, VertexRecord,
};
pub use greedy::{greedy_r_sec, greedy_vertex_coloring, is_r_sec, EdgeColoring};
