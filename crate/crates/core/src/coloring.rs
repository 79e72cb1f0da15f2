// SPDX-License-Identifier: Apache-2.0

//! Colorings and the proper / equitable / dominator validators.
//!
//! A vertex dominates a color class when the whole class lies inside its
//! closed neighborhood, so a vertex always dominates its own class when that
//! class is a singleton.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total vertex coloring with colors `1..=k`, every color used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoringJson")]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct ColoringJson {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = Error;

    fn try_from(j: ColoringJson) -> Result<Coloring> {
        let c = Coloring::new(j.colors)?;
        if c.k != j.k {
            return Err(Error::InvalidColoring(format!(
                "k = {} but colors use {} distinct values",
                j.k, c.k
            )));
        }
        Ok(c)
    }
}

impl Coloring {
    /// Takes 1-based colors. `k` is the largest color; every color in `1..=k`
    /// must occur.
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        if colors.contains(&0) {
            return Err(Error::InvalidColoring(
                "color 0 is not allowed; colors start at 1".into(),
            ));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c - 1] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::InvalidColoring(format!(
                "color {} has an empty class",
                missing + 1
            )));
        }
        Ok(Coloring { k, colors })
    }

    /// Relabels arbitrary color values to `1..=k` in order of first use.
    pub fn from_raw(raw: &[usize]) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = map.len() + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring {
            k: map.len(),
            colors,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Members of each class; entry `j - 1` lists the vertices of color `j`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    /// `|V_1|, ..., |V_k|` in color order.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.k];
        for &c in &self.colors {
            out[c - 1] += 1;
        }
        out
    }

    pub fn is_equitable(&self) -> bool {
        let sizes = self.class_sizes();
        match (sizes.iter().min(), sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                coloring: self.len(),
                graph: g.n(),
            })
        }
    }

    /// Monochromatic edges, empty when the coloring is proper.
    pub fn monochromatic_edges(&self, g: &Graph) -> Result<Vec<(usize, usize)>> {
        self.check_size(g)?;
        Ok(g.edges()
            .filter(|&(u, v)| self.colors[u] == self.colors[v])
            .collect())
    }

    pub fn is_proper(&self, g: &Graph) -> Result<bool> {
        Ok(self.monochromatic_edges(g)?.is_empty())
    }

    /// Colors `j` whose class lies inside `N[v]`, ascending.
    pub fn dominated_classes(&self, g: &Graph, v: usize) -> Result<Vec<usize>> {
        self.check_size(g)?;
        let sizes = self.class_sizes();
        Ok(self.dominated_with(g, v, &sizes))
    }

    fn dominated_with(&self, g: &Graph, v: usize, sizes: &[usize]) -> Vec<usize> {
        let mut inside = vec![0; self.k];
        inside[self.colors[v] - 1] += 1;
        for &u in g.neighbors(v) {
            inside[self.colors[u] - 1] += 1;
        }
        (1..=self.k)
            .filter(|&j| inside[j - 1] == sizes[j - 1])
            .collect()
    }
}

/// Outcome of the equitable dominator check with witnesses for each failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub proper: bool,
    pub monochromatic_edges: Vec<(usize, usize)>,
    pub equitable: bool,
    pub class_sizes: Vec<usize>,
    pub dominator: bool,
    /// Vertices whose closed neighborhood contains no whole class.
    pub non_dominating: Vec<usize>,
    pub overall: bool,
}

/// Checks that `c` is an equitable dominator coloring of `g`.
pub fn validate_edc(g: &Graph, c: &Coloring) -> Result<ValidationReport> {
    let monochromatic_edges = c.monochromatic_edges(g)?;
    let class_sizes = c.class_sizes();
    let equitable = c.is_equitable();
    let non_dominating: Vec<usize> = (0..g.n())
        .filter(|&v| c.dominated_with(g, v, &class_sizes).is_empty())
        .collect();
    let proper = monochromatic_edges.is_empty();
    let dominator = non_dominating.is_empty();
    Ok(ValidationReport {
        proper,
        monochromatic_edges,
        equitable,
        class_sizes,
        dominator,
        non_dominating,
        overall: proper && equitable && dominator,
    })
}
