// SPDX-License-Identifier: Apache-2.0

//! Deterministic generators for the graph families and their line graphs.
//!
//! Every family is described once as a list of base-graph edges, each tagged
//! with its edge symbol. [`FamilyInstance::generate`] builds the base graph
//! from that list. [`FamilyInstance::generate_line`] builds the line graph
//! directly from per-family adjacency rules on the symbols, with vertices in
//! the same canonical order as `generate().line_graph()` (lexicographic order
//! of the underlying edge's endpoints).
//!
//! Cyclic indices are 1-based and wrap from `t + 1` back to `1`.
//!
//! Base-graph vertex numbering (center first where there is one):
//!
//! | family | vertices |
//! |---|---|
//! | path, cycle | `0..n` |
//! | star | center `0`, leaves `1..=t` |
//! | bistar | `u = 0`, `v = 1`, `u_i = 1 + i`, `v_i = 1 + a + i` |
//! | kab | `a_i = i - 1`, `b_j = a + j - 1` |
//! | wheel, helm, flower, doublewheel | `v = 0`, `v_i = i`, `u_i = t + i` |
//! | gear | `v = 0`, `v_i = i`, subdivision vertex `v_i' = t + i` |
//! | sunlet | `v_i = i - 1`, `u_i = t + i - 1` |
//! | friendship | `v = 0`, `u_i = 2i - 1`, `v_i = 2i` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Tag, VertexLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "path")]
    Path,
    #[serde(rename = "cycle")]
    Cycle,
    #[serde(rename = "star")]
    Star,
    #[serde(rename = "bistar")]
    BiStar,
    #[serde(rename = "kab")]
    CompleteBipartite,
    #[serde(rename = "wheel")]
    Wheel,
    #[serde(rename = "helm")]
    Helm,
    #[serde(rename = "gear")]
    Gear,
    #[serde(rename = "sunlet")]
    Sunlet,
    #[serde(rename = "friendship")]
    Friendship,
    #[serde(rename = "flower")]
    Flower,
    #[serde(rename = "doublewheel")]
    DoubleWheel,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::BiStar,
        Family::CompleteBipartite,
        Family::Wheel,
        Family::Helm,
        Family::Gear,
        Family::Sunlet,
        Family::Friendship,
        Family::Flower,
        Family::DoubleWheel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::BiStar => "bistar",
            Family::CompleteBipartite => "kab",
            Family::Wheel => "wheel",
            Family::Helm => "helm",
            Family::Gear => "gear",
            Family::Sunlet => "sunlet",
            Family::Friendship => "friendship",
            Family::Flower => "flower",
            Family::DoubleWheel => "doublewheel",
        }
    }

    /// Families parameterized by a pair `(a, b)`.
    pub fn is_two_parameter(self) -> bool {
        matches!(self, Family::BiStar | Family::CompleteBipartite)
    }

    /// Smallest parameter accepted by the generator.
    pub fn min_param(self) -> usize {
        match self {
            Family::Path | Family::Star | Family::Friendship | Family::CompleteBipartite => 1,
            Family::BiStar => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Params {
    /// `n` for paths and cycles, `t` for everything else.
    Single(usize),
    Pair(usize, usize),
}

/// A family together with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyInstance {
    family: Family,
    params: Params,
}

impl FamilyInstance {
    pub fn new(family: Family, params: Params) -> Result<FamilyInstance> {
        let invalid = |reason: String| Err(Error::InvalidParams { family, reason });
        let min = family.min_param();
        match (family.is_two_parameter(), params) {
            (true, Params::Pair(a, b)) => {
                if a < min || b < min {
                    return invalid(format!("a and b must be at least {min}, got a={a}, b={b}"));
                }
            }
            (false, Params::Single(t)) => {
                if t < min {
                    let name = if matches!(family, Family::Path | Family::Cycle) {
                        "n"
                    } else {
                        "t"
                    };
                    return invalid(format!("{name} must be at least {min}, got {t}"));
                }
            }
            (true, _) => return invalid("expects two parameters a and b".into()),
            (false, _) => return invalid("expects a single parameter".into()),
        }
        Ok(FamilyInstance { family, params })
    }

    pub fn single(family: Family, t: usize) -> Result<FamilyInstance> {
        FamilyInstance::new(family, Params::Single(t))
    }

    pub fn pair(family: Family, a: usize, b: usize) -> Result<FamilyInstance> {
        FamilyInstance::new(family, Params::Pair(a, b))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// The single parameter (`t` or `n`); zero for two-parameter families.
    pub fn t(&self) -> usize {
        match self.params {
            Params::Single(t) => t,
            Params::Pair(..) => 0,
        }
    }

    /// The pair `(a, b)`; `(0, 0)` for single-parameter families.
    pub fn ab(&self) -> (usize, usize) {
        match self.params {
            Params::Pair(a, b) => (a, b),
            Params::Single(_) => (0, 0),
        }
    }

    /// Parameters rendered as `t=5`, `n=4` or `a=2;b=3`.
    pub fn params_string(&self) -> String {
        match (self.family, self.params) {
            (_, Params::Pair(a, b)) => format!("a={a};b={b}"),
            (Family::Path | Family::Cycle, Params::Single(n)) => format!("n={n}"),
            (_, Params::Single(t)) => format!("t={t}"),
        }
    }

    /// Number of vertices of the base graph.
    pub fn base_order(&self) -> usize {
        let t = self.t();
        let (a, b) = self.ab();
        match self.family {
            Family::Path | Family::Cycle => t,
            Family::Star | Family::Wheel => t + 1,
            Family::BiStar => a + b + 2,
            Family::CompleteBipartite => a + b,
            Family::Helm
            | Family::Gear
            | Family::Flower
            | Family::DoubleWheel
            | Family::Friendship => 2 * t + 1,
            Family::Sunlet => 2 * t,
        }
    }

    /// Number of vertices of the line graph (= edges of the base graph).
    pub fn line_order(&self) -> usize {
        let t = self.t();
        let (a, b) = self.ab();
        match self.family {
            Family::Path => t - 1,
            Family::Cycle | Family::Star => t,
            Family::BiStar => a + b + 1,
            Family::CompleteBipartite => a * b,
            Family::Wheel | Family::Sunlet => 2 * t,
            Family::Helm | Family::Gear | Family::Friendship => 3 * t,
            Family::Flower | Family::DoubleWheel => 4 * t,
        }
    }

    /// The base graph.
    pub fn generate(&self) -> Graph {
        let edges = self.symbol_edges().into_iter().map(|(_, e)| e);
        Graph::build(self.base_order(), edges).expect("family edges are in range")
    }

    /// The labeled line graph, built from the symbol adjacency rules.
    pub fn generate_line(&self) -> Graph {
        let mut symbols = self.symbol_edges();
        symbols.sort_by_key(|&(_, (u, v))| (u.min(v), u.max(v)));
        let labels: Vec<VertexLabel> = symbols.into_iter().map(|(l, _)| l).collect();
        let mut edges = Vec::new();
        for (p, a) in labels.iter().enumerate() {
            for (q, b) in labels.iter().enumerate().skip(p + 1) {
                if self.lines_adjacent(a, b) || self.lines_adjacent(b, a) {
                    edges.push((p, q));
                }
            }
        }
        Graph::build(labels.len(), edges)
            .expect("line graph edges are in range")
            .with_labels(labels)
            .expect("family symbols are distinct")
    }

    fn wrap(&self, i: i64, modulus: usize) -> usize {
        (i - 1).rem_euclid(modulus as i64) as usize + 1
    }

    /// Base-graph edges paired with their symbols.
    fn symbol_edges(&self) -> Vec<(VertexLabel, (usize, usize))> {
        use VertexLabel as L;
        let t = self.t();
        let (a, b) = self.ab();
        let next = |i: usize| self.wrap(i as i64 + 1, t);
        let mut out = Vec::new();
        match self.family {
            Family::Path => {
                out.extend((1..t).map(|i| (L::rim(i), (i - 1, i))));
            }
            Family::Cycle => {
                out.extend((1..=t).map(|i| (L::rim(i), (i - 1, i % t))));
            }
            Family::Star => {
                out.extend((1..=t).map(|i| (L::spoke(i), (0, i))));
            }
            Family::BiStar => {
                out.push((L::bridge(), (0, 1)));
                out.extend((1..=a).map(|i| (L::spoke(i), (0, 1 + i))));
                out.extend((1..=b).map(|i| (L::rim(i), (1, 1 + a + i))));
            }
            Family::CompleteBipartite => {
                for i in 1..=a {
                    out.extend((1..=b).map(|j| (L::cell(i, j), (i - 1, a + j - 1))));
                }
            }
            Family::Wheel | Family::Helm => {
                for i in 1..=t {
                    out.push((L::spoke(i), (0, i)));
                    out.push((L::rim(i), (i, next(i))));
                    if self.family == Family::Helm {
                        out.push((L::pendant(i), (i, t + i)));
                    }
                }
            }
            Family::Gear => {
                for k in 1..=t {
                    out.push((L::spoke(k), (0, k)));
                    out.push((L::rim(2 * k - 1), (k, t + k)));
                    out.push((L::rim(2 * k), (t + k, next(k))));
                }
            }
            Family::Sunlet => {
                // e_i = v_i v_{i+1}; the pendant e_i' hangs off v_{i+1}, the
                // vertex shared by e_i and e_{i+1}
                for i in 1..=t {
                    out.push((L::spoke(i), (i - 1, next(i) - 1)));
                    out.push((L::rim(i), (next(i) - 1, t + next(i) - 1)));
                }
            }
            Family::Friendship => {
                for i in 1..=t {
                    out.push((L::spoke(i), (0, 2 * i - 1)));
                    out.push((L::rim(i), (2 * i - 1, 2 * i)));
                    out.push((L::pendant(i), (0, 2 * i)));
                }
            }
            Family::Flower => {
                for i in 1..=t {
                    out.push((L::spoke(i), (0, i)));
                    out.push((L::rim(i), (0, t + i)));
                    out.push((L::inner_rim(i), (i, next(i))));
                    out.push((L::outer_rim(i), (i, t + i)));
                }
            }
            Family::DoubleWheel => {
                for i in 1..=t {
                    out.push((L::spoke(i), (0, i)));
                    out.push((L::rim(i), (0, t + i)));
                    out.push((L::inner_rim(i), (i, next(i))));
                    out.push((L::outer_rim(i), (t + i, t + next(i))));
                }
            }
        }
        out
    }

    /// One orientation of the symbol adjacency relation; the line graph joins
    /// `a` and `b` when either orientation holds.
    fn lines_adjacent(&self, a: &VertexLabel, b: &VertexLabel) -> bool {
        use Tag::*;
        let t = self.t();
        let (i, j) = (a.i as i64, b.i as i64);
        let at = |k: i64| self.wrap(k, t) == b.i;
        // neighbors on a cycle of the given length
        let cyclic = |len: usize| {
            let d = (i - j).rem_euclid(len as i64);
            d == 1 || d == len as i64 - 1
        };
        match self.family {
            Family::Path => (i - j).abs() == 1,
            Family::Cycle => cyclic(t),
            Family::Star => true,
            Family::BiStar => match (a.tag, b.tag) {
                (Bridge, _) => true,
                (x, y) => x == y,
            },
            Family::CompleteBipartite => {
                let same_row = a.i == b.i;
                let same_col = a.j == b.j;
                same_row != same_col
            }
            Family::Wheel | Family::Helm => match (a.tag, b.tag) {
                (Spoke, Spoke) => true,
                (Spoke, Rim) => at(i) || at(i - 1),
                (Rim, Rim) => cyclic(t),
                (Pendant, Spoke) => a.i == b.i,
                (Pendant, Rim) => at(i) || at(i - 1),
                _ => false,
            },
            Family::Gear => match (a.tag, b.tag) {
                (Spoke, Spoke) => true,
                (Spoke, Rim) => {
                    let rim = |k: i64| self.wrap(k, 2 * t) == b.i;
                    rim(2 * i - 1) || rim(2 * i - 2)
                }
                (Rim, Rim) => cyclic(2 * t),
                _ => false,
            },
            Family::Sunlet => match (a.tag, b.tag) {
                (Spoke, Spoke) => cyclic(t),
                (Rim, Spoke) => at(i) || at(i + 1),
                _ => false,
            },
            Family::Friendship => match (a.tag, b.tag) {
                (Spoke | Pendant, Spoke | Pendant) => true,
                (Rim, Spoke | Pendant) => a.i == b.i,
                _ => false,
            },
            Family::Flower => match (a.tag, b.tag) {
                (Spoke | Rim, Spoke | Rim) => true,
                (InnerRim, Spoke) => at(i) || at(i + 1),
                (InnerRim, InnerRim) => cyclic(t),
                (InnerRim, OuterRim) => at(i) || at(i + 1),
                (OuterRim, Spoke | Rim) => a.i == b.i,
                _ => false,
            },
            Family::DoubleWheel => match (a.tag, b.tag) {
                (Spoke | Rim, Spoke | Rim) => true,
                (InnerRim, Spoke) | (OuterRim, Rim) => at(i) || at(i + 1),
                (InnerRim, InnerRim) | (OuterRim, OuterRim) => cyclic(t),
                _ => false,
            },
        }
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.params_string())
    }
}
