// SPDX-License-Identifier: Apache-2.0

//! Equitable dominator colorings of line graphs.
//!
//! A coloring is *equitable dominator* when it is proper, its class sizes
//! differ by at most one, and every vertex's closed neighborhood contains some
//! whole color class. This crate provides
//!
//! * [`Graph`] with the line-graph transform and an exact clique search,
//! * generators for the standard families ([`families`]) together with
//!   directly labeled line graphs,
//! * validators ([`coloring`]),
//! * an exact backtracking solver for the minimum number of colors
//!   ([`solver`]),
//! * explicit colorings with closed-form color counts for each family, and a
//!   harness that checks them against the solver ([`constructive`]).

pub mod coloring;
pub mod constructive;
pub mod error;
pub mod families;
pub mod graph;
pub mod solver;

pub use coloring::{validate_edc, Coloring, ValidationReport};
pub use constructive::{
    construct, formula_edcn, verify_theorem, Ambiguity, Construction, Scheme, SchemeId,
    TheoremVerdict,
};
pub use error::{Error, Result};
pub use families::{Family, FamilyInstance, Params};
pub use graph::{clique_number, max_clique, Graph, Tag, VertexLabel};
pub use solver::{chromatic_number, edcn_decision, edcn_exact, SolverBudget, SolverResult};
