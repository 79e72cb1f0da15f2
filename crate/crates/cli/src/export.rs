// SPDX-License-Identifier: Apache-2.0

//! DOT and CSV renderings of a graph with an optional coloring.

use std::fmt::Write as _;

use edcolor::{Coloring, Graph};

use crate::CliError;

/// Fill colors by color index, cycling after twenty. Purely cosmetic.
pub const PALETTE: [&str; 20] = [
    "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78", "#2ca02c", "#98df8a", "#d62728", "#ff9896",
    "#9467bd", "#c5b0d5", "#8c564b", "#c49c94", "#e377c2", "#f7b6d2", "#7f7f7f", "#c7c7c7",
    "#bcbd22", "#dbdb8d", "#17becf", "#9edae5",
];

pub fn palette_color(color: usize) -> &'static str {
    PALETTE[(color - 1) % PALETTE.len()]
}

fn vertex_name(g: &Graph, v: usize) -> String {
    g.label(v).map_or_else(|| v.to_string(), |l| l.to_string())
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT graph. Each vertex carries its label, and with a coloring
/// also `colorclass` and a palette fill.
pub fn to_dot(g: &Graph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    if coloring.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in 0..g.n() {
        let name = escape(&vertex_name(g, v));
        match coloring {
            Some(c) => {
                let k = c.color(v);
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{name}\\nc{k}\", colorclass={k}, fillcolor=\"{}\"];",
                    palette_color(k)
                );
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{name}\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// One row per vertex: `vertex,label,color,neighbors`, with neighbors
/// space-separated and the color column empty when no coloring is given.
pub fn to_csv(g: &Graph, coloring: Option<&Coloring>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["vertex", "label", "color", "neighbors"])
        .map_err(csv_error)?;
    for v in 0..g.n() {
        let neighbors: Vec<String> = g.neighbors(v).iter().map(usize::to_string).collect();
        let color = coloring.map(|c| c.color(v).to_string()).unwrap_or_default();
        w.write_record([v.to_string(), vertex_name(g, v), color, neighbors.join(" ")])
            .map_err(csv_error)?;
    }
    finish_csv(w)
}

pub fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(e.to_string())
}

pub fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}
