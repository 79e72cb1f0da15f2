// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::families::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),

    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },

    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: Family, reason: String },

    #[error("{family} {params} is outside the range of a closed-form result")]
    OutOfTheoremRange { family: Family, params: String },

    #[error("scheme {scheme} not applicable to {params}")]
    SchemeNotApplicable { scheme: String, params: String },

    #[error("scheme index arithmetic is contradictory at {location}")]
    SchemeAmbiguous { location: String },

    #[error("search budget exhausted (bounds {lower}..={upper})")]
    BudgetExceeded { lower: usize, upper: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("color count {k} outside 1..={n}")]
    InvalidColorCount { k: usize, n: usize },

    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SelfLoop(_) => "self_loop",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::DuplicateLabel(_) => "duplicate_label",
            Error::LabelCount { .. } => "label_count",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::InvalidColoring(_) => "invalid_coloring",
            Error::InvalidParams { .. } => "invalid_params",
            Error::OutOfTheoremRange { .. } => "out_of_theorem_range",
            Error::SchemeNotApplicable { .. } => "scheme_not_applicable",
            Error::SchemeAmbiguous { .. } => "scheme_ambiguous",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::EmptyGraph => "empty_graph",
            Error::InvalidColorCount { .. } => "invalid_color_count",
            Error::Parse(_) => "parse",
        }
    }
}
