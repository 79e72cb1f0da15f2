// SPDX-License-Identifier: Apache-2.0

//! The drawn example colorings, stored in drawing order with the edge symbol
//! of every drawn vertex.

mod common;

use std::collections::HashMap;

use edcolor::{
    construct, validate_edc, Coloring, FamilyInstance, Graph, SchemeId, Tag, VertexLabel,
};
use serde::Deserialize;

#[derive(Deserialize)]
struct Fixture {
    family: String,
    params: String,
    graph: Graph,
    coloring: Coloring,
}

fn load(name: &str) -> Fixture {
    let text = std::fs::read_to_string(common::fixture(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn instance(f: &Fixture) -> FamilyInstance {
    let t: usize = f.params.strip_prefix("t=").unwrap().parse().unwrap();
    FamilyInstance::single(f.family.parse().unwrap(), t).unwrap()
}

/// The fixture coloring moved onto the canonical vertex order of
/// `generate_line`.
fn transported(f: &Fixture, line: &Graph) -> Coloring {
    let by_label: HashMap<VertexLabel, usize> = f
        .graph
        .labels()
        .unwrap()
        .iter()
        .copied()
        .zip(f.coloring.colors().iter().copied())
        .collect();
    let colors = line.labels().unwrap().iter().map(|l| by_label[l]).collect();
    Coloring::new(colors).unwrap()
}

/// Line-graph edges missing from the drawing, as label pairs.
fn missing_edges(f: &Fixture, line: &Graph) -> Vec<(VertexLabel, VertexLabel)> {
    let drawn = f.graph.labels().unwrap();
    let drawn_index: HashMap<VertexLabel, usize> = drawn
        .iter()
        .copied()
        .enumerate()
        .map(|(v, l)| (l, v))
        .collect();
    let labels = line.labels().unwrap();
    for (u, v) in f.graph.edges() {
        let (a, b) = (line.label_index()[&drawn[u]], line.label_index()[&drawn[v]]);
        assert!(
            line.has_edge(a, b),
            "drawn edge {}-{} is not a line-graph edge",
            drawn[u],
            drawn[v]
        );
    }
    line.edges()
        .filter(|&(a, b)| {
            !f.graph
                .has_edge(drawn_index[&labels[a]], drawn_index[&labels[b]])
        })
        .map(|(a, b)| (labels[a], labels[b]))
        .collect()
}

fn check_drawing(name: &str, k: usize) {
    let f = load(name);
    let inst = instance(&f);
    let line = inst.generate_line();
    assert_eq!(f.graph.n(), line.n(), "{name}: vertex count");
    assert_eq!(f.coloring.k(), k, "{name}: color count");

    let on_line = transported(&f, &line);
    let report = validate_edc(&line, &on_line).unwrap();
    assert!(report.overall, "{name}: {report:?}");

    let main = construct(&inst, &SchemeId::main(inst.family())).unwrap();
    assert_eq!(
        main.coloring, on_line,
        "{name}: main scheme differs from the drawing"
    );
}

#[test]
fn drawn_wheel() {
    check_drawing("drawn_wheel5.json", 5);
    let f = load("drawn_wheel5.json");
    assert!(missing_edges(&f, &instance(&f).generate_line()).is_empty());
    assert_eq!(f.coloring.class_sizes(), vec![2; 5]);
}

#[test]
fn drawn_helm() {
    check_drawing("drawn_helm6.json", 11);
    // the drawing leaves out the six rim-to-rim adjacencies
    let f = load("drawn_helm6.json");
    let missing = missing_edges(&f, &instance(&f).generate_line());
    assert_eq!(missing.len(), 6);
    assert!(missing
        .iter()
        .all(|(a, b)| a.tag == Tag::Rim && b.tag == Tag::Rim));
}

#[test]
fn drawn_gear() {
    check_drawing("drawn_gear9.json", 16);
    let f = load("drawn_gear9.json");
    assert!(missing_edges(&f, &instance(&f).generate_line()).is_empty());
}

#[test]
fn drawn_sunlet() {
    check_drawing("drawn_sunlet5.json", 7);
    let f = load("drawn_sunlet5.json");
    assert!(missing_edges(&f, &instance(&f).generate_line()).is_empty());
}

#[test]
fn drawn_friendship() {
    check_drawing("drawn_friendship4.json", 8);
    let f = load("drawn_friendship4.json");
    assert!(missing_edges(&f, &instance(&f).generate_line()).is_empty());
    let report = validate_edc(&f.graph, &f.coloring).unwrap();
    assert!(report.overall);
}

#[test]
fn drawn_flower() {
    check_drawing("drawn_flower4.json", 8);
    let f = load("drawn_flower4.json");
    assert!(missing_edges(&f, &instance(&f).generate_line()).is_empty());
}

#[test]
fn drawn_double_wheel() {
    check_drawing("drawn_doublewheel5.json", 10);
    let f = load("drawn_doublewheel5.json");
    assert!(missing_edges(&f, &instance(&f).generate_line()).is_empty());
}

#[test]
fn complete_drawings_validate_as_drawn() {
    for name in [
        "drawn_wheel5.json",
        "drawn_gear9.json",
        "drawn_sunlet5.json",
        "drawn_friendship4.json",
        "drawn_flower4.json",
        "drawn_doublewheel5.json",
    ] {
        let f = load(name);
        assert!(
            validate_edc(&f.graph, &f.coloring).unwrap().overall,
            "{name}"
        );
    }
}
