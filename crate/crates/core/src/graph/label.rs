// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::{Deserialize, Serialize};

/// Role of a line-graph vertex inside a generated family.
///
/// The tags follow the edge symbols used for each family: `Spoke` is `e_i`,
/// `Rim` is `e_i'`, `Pendant` is `e_i''`. The four-symbol families (flower and
/// double wheel) use `InnerRim` for `e_i''` and `OuterRim` for `e_i'''`.
/// `Bridge` is the bi-star's central edge `e` and `GridCell` is the vertex
/// `(i, j)` of `L(K_{a,b})`. `Edge` is used by the generic line-graph
/// transform and records the endpoints of the originating edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    Spoke,
    Rim,
    Pendant,
    InnerRim,
    OuterRim,
    Bridge,
    GridCell,
    Edge,
}

impl Tag {
    /// Tags that carry a secondary index.
    pub fn has_secondary(self) -> bool {
        matches!(self, Tag::GridCell | Tag::Edge)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexLabel {
    pub tag: Tag,
    pub i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
}

impl VertexLabel {
    pub const fn new(tag: Tag, i: usize) -> Self {
        VertexLabel { tag, i, j: None }
    }

    pub const fn spoke(i: usize) -> Self {
        Self::new(Tag::Spoke, i)
    }

    pub const fn rim(i: usize) -> Self {
        Self::new(Tag::Rim, i)
    }

    pub const fn pendant(i: usize) -> Self {
        Self::new(Tag::Pendant, i)
    }

    pub const fn inner_rim(i: usize) -> Self {
        Self::new(Tag::InnerRim, i)
    }

    pub const fn outer_rim(i: usize) -> Self {
        Self::new(Tag::OuterRim, i)
    }

    pub const fn bridge() -> Self {
        Self::new(Tag::Bridge, 1)
    }

    pub const fn cell(i: usize, j: usize) -> Self {
        VertexLabel {
            tag: Tag::GridCell,
            i,
            j: Some(j),
        }
    }

    pub const fn edge(u: usize, v: usize) -> Self {
        VertexLabel {
            tag: Tag::Edge,
            i: u,
            j: Some(v),
        }
    }

    /// Checks the shape rule: only `GridCell` and `Edge` carry `j`.
    pub fn is_well_formed(&self) -> bool {
        self.tag.has_secondary() == self.j.is_some()
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.i;
        match self.tag {
            Tag::Spoke => write!(f, "e_{i}"),
            Tag::Rim => write!(f, "e_{i}'"),
            Tag::Pendant | Tag::InnerRim => write!(f, "e_{i}''"),
            Tag::OuterRim => write!(f, "e_{i}'''"),
            Tag::Bridge => write!(f, "e"),
            Tag::GridCell => write!(f, "({i},{})", self.j.unwrap_or(0)),
            Tag::Edge => write!(f, "{i}-{}", self.j.unwrap_or(0)),
        }
    }
}
