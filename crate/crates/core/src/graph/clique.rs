// SPDX-License-Identifier: Apache-2.0

//! Exact maximum clique by branch and bound.
//!
//! Candidates are greedily colored at every node; a vertex whose color index
//! plus the current clique size cannot beat the incumbent is pruned together
//! with everything colored before it.

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::error::{Error, Result};

/// Size of a maximum clique. `max_nodes` bounds the number of search nodes.
pub fn clique_number(g: &Graph, max_nodes: u64) -> Result<usize> {
    max_clique(g, max_nodes).map(|c| c.len())
}

/// A maximum clique, sorted. On budget exhaustion the error carries the best
/// clique size found so far as its lower bound.
pub fn max_clique(g: &Graph, max_nodes: u64) -> Result<Vec<usize>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();
    let adj: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            s.extend(g.neighbors(v).iter().copied());
            s
        })
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    let mut search = Search {
        adj: &adj,
        current: Vec::new(),
        best: vec![order[0]],
        nodes: 0,
        max_nodes,
    };
    match search.expand(order) {
        Ok(()) => {
            let mut best = search.best;
            best.sort_unstable();
            Ok(best)
        }
        Err(()) => Err(Error::BudgetExceeded {
            lower: search.best.len(),
            upper: n,
        }),
    }
}

struct Search<'a> {
    adj: &'a [FixedBitSet],
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn expand(&mut self, candidates: Vec<usize>) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(());
        }
        let (order, bounds) = self.color_sort(&candidates);
        for idx in (0..order.len()).rev() {
            if self.current.len() + bounds[idx] <= self.best.len() {
                return Ok(());
            }
            let v = order[idx];
            let next: Vec<usize> = order[..idx]
                .iter()
                .copied()
                .filter(|&u| self.adj[v].contains(u))
                .collect();
            self.current.push(v);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
        }
        Ok(())
    }

    /// Greedy sequential coloring; returns the vertices grouped by color and
    /// the (1-based) color of each position.
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            let slot = classes
                .iter()
                .position(|class| class.iter().all(|&u| !self.adj[v].contains(u)));
            match slot {
                Some(c) => classes[c].push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (c, class) in classes.into_iter().enumerate() {
            bounds.extend(std::iter::repeat_n(c + 1, class.len()));
            order.extend(class);
        }
        (order, bounds)
    }
}
