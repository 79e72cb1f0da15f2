// SPDX-License-Identifier: Apache-2.0

//! Undirected simple graphs, the line-graph transform and clique search.
//!
//! A [`Graph`] is immutable once built. Adjacency lists are sorted, there are
//! no self-loops, and every edge is stored in both directions. Vertices may
//! carry a [`VertexLabel`]; when present the labels are total and distinct.

mod clique;
mod label;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

pub use clique::{clique_number, max_clique};
pub use label::{Tag, VertexLabel};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Repeated pairs (in either orientation)
    /// collapse to a single edge.
    pub fn build<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            adj,
            edge_count,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::build(n, edges).expect("complete graph edges are in range")
    }

    /// Attaches labels, replacing any existing ones.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(*l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Graph {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<VertexLabel> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Map from label to vertex index; empty when the graph is unlabeled.
    pub fn label_index(&self) -> HashMap<VertexLabel, usize> {
        self.labels
            .iter()
            .flatten()
            .enumerate()
            .map(|(v, l)| (*l, v))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// `N[v]`: the vertex together with its neighbors, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out = Vec::with_capacity(self.degree(v) + 1);
        let nb = &self.adj[v];
        let split = nb.partition_point(|&u| u < v);
        out.extend_from_slice(&nb[..split]);
        out.push(v);
        out.extend_from_slice(&nb[split..]);
        Ok(out)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|nb| nb.len() + 1 == n)
    }

    /// The line graph. Vertex `k` corresponds to the `k`-th edge of `self` in
    /// lexicographic endpoint order and is labeled `Edge(u, v)`. Two vertices
    /// are adjacent when their edges share an endpoint; in a simple graph two
    /// distinct edges share at most one.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let index: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };

        // every pair of edges through a common vertex becomes a line-graph edge
        let mut out = Vec::new();
        for (w, nb) in self.adj.iter().enumerate() {
            let incident: Vec<usize> = nb.iter().map(|&x| index[&key(w, x)]).collect();
            for (x, &p) in incident.iter().enumerate() {
                for &q in &incident[x + 1..] {
                    out.push((p, q));
                }
            }
        }
        let labels = edges
            .iter()
            .map(|&(u, v)| VertexLabel::edge(u, v))
            .collect();
        Graph::build(edges.len(), out)
            .expect("line graph edges are in range")
            .with_labels(labels)
            .expect("edge labels are distinct")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<VertexLabel>>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let g = Graph::build(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))?;
        match j.labels {
            Some(labels) => {
                if let Some(bad) = labels.iter().find(|l| !l.is_well_formed()) {
                    return Err(Error::Parse(format!(
                        "label {bad:?} has the wrong index shape"
                    )));
                }
                g.with_labels(labels)
            }
            None => Ok(g),
        }
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::build(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn build_path() {
        let g = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::build(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_dedups_edges() {
        let g = Graph::build(4, [(0, 1), (0, 1), (2, 3), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(Graph::build(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn line_graph_of_path_and_cycle() {
        let l = path(3).line_graph();
        assert_eq!((l.n(), l.edge_count()), (2, 1));

        let l = Graph::complete(2).line_graph();
        assert_eq!((l.n(), l.edge_count()), (1, 0));

        let l = cycle(5).line_graph();
        assert_eq!((l.n(), l.edge_count()), (5, 5));
        assert!((0..5).all(|v| l.degree(v) == 2));
    }

    #[test]
    fn line_graph_of_edgeless_graph_is_empty() {
        let l = Graph::empty(4).line_graph();
        assert!(l.is_empty());
    }

    #[test]
    fn line_graph_labels_carry_endpoints() {
        let l = path(4).line_graph();
        assert_eq!(l.label(0), Some(VertexLabel::edge(0, 1)));
        assert_eq!(l.label(2), Some(VertexLabel::edge(2, 3)));
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(Graph::empty(1).closed_neighborhood(0).unwrap(), vec![0]);
        assert_eq!(path(3).closed_neighborhood(1).unwrap(), vec![0, 1, 2]);
        assert_eq!(cycle(5).closed_neighborhood(0).unwrap(), vec![0, 1, 4]);
        assert!(matches!(
            path(3).closed_neighborhood(3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn labels_must_be_distinct_and_total() {
        let g = path(2);
        assert!(matches!(
            g.clone().with_labels(vec![VertexLabel::spoke(1)]),
            Err(Error::LabelCount { .. })
        ));
        assert!(matches!(
            g.with_labels(vec![VertexLabel::spoke(1), VertexLabel::spoke(1)]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn json_layout() {
        let g = Graph::build(3, [(1, 2), (0, 1)]).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"n":3,"edges":[[0,1],[1,2]]}"#
        );
        let g = g.with_labels(vec![
            VertexLabel::spoke(1),
            VertexLabel::rim(1),
            VertexLabel::cell(1, 2),
        ]);
        let s = serde_json::to_string(&g.unwrap()).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"edges":[[0,1],[1,2]],"labels":[{"tag":"Spoke","i":1},{"tag":"Rim","i":1},{"tag":"GridCell","i":1,"j":2}]}"#
        );
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn json_rejects_invalid_graphs() {
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(
            r#"{"n":1,"edges":[],"labels":[{"tag":"Spoke","i":1,"j":1}]}"#
        )
        .is_err());
    }
}
