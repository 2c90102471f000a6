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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph has an isolated edge component {0}-{1}")]
    IsolatedEdge(usize, usize),
    #[error("coloring is incomplete: {0}")]
    IncompleteColoring(String),
    #[error("vertex {0} has an unassigned element in its incidence set")]
    BadVertex(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a tree")]
    NotATree,
    #[error("no safe color for vertex {0}")]
    NoSafeColor(usize),
    #[error("extension failed at vertex {vertex}: {detail}")]
    ExtensionFailure { vertex: usize, detail: String },
    #[error("search budget exhausted")]
    Timeout,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable identifier used in machine-readable error lines.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) | Error::Parse { .. } | Error::Io(_) | Error::Json(_) => {
                "InvalidInput"
            }
            Error::IsolatedEdge(..) => "IsolatedEdge",
            Error::IncompleteColoring(_) => "IncompleteColoring",
            Error::BadVertex(_) => "BadVertex",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotAForest => "NotAForest",
            Error::NotATree => "NotATree",
            Error::NoSafeColor(_) => "NoSafeColor",
            Error::ExtensionFailure { .. } => "ExtensionFailure",
            Error::Timeout => "Timeout",
        }
    }
}
