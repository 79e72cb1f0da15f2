// SPDX-License-Identifier: Apache-2.0

//! Shared corpus and brute-force reference implementations for the
//! integration tests. Nothing here calls into the solver or the validators,
//! so agreement with the library is a genuine second opinion.

#![allow(dead_code)]

use edcolor::{Family, FamilyInstance, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn cycle(n: usize) -> Graph {
    Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::build(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, edges).unwrap()
}

fn family_lines(max_vertices: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        if f.is_two_parameter() {
            for a in f.min_param()..=9 {
                for b in a..=9 {
                    let instance = FamilyInstance::pair(f, a, b).unwrap();
                    if instance.line_order() <= max_vertices && instance.line_order() > 0 {
                        out.push((instance.to_string(), instance.generate_line()));
                    }
                }
            }
        } else {
            for t in f.min_param()..=12 {
                let instance = FamilyInstance::single(f, t).unwrap();
                if instance.line_order() <= max_vertices && instance.line_order() > 0 {
                    out.push((instance.to_string(), instance.generate_line()));
                }
            }
        }
    }
    out
}

/// Family line graphs, hand-picked graphs and seeded random graphs, all with
/// at most nine vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = family_lines(9);
    out.push(("K1".into(), Graph::empty(1)));
    out.push(("K2".into(), Graph::complete(2)));
    out.push(("K4".into(), Graph::complete(4)));
    out.push(("P3".into(), path(3)));
    out.push(("C5".into(), cycle(5)));
    out.push(("C6".into(), cycle(6)));
    out.push(("3 isolated".into(), Graph::empty(3)));
    out.push(("2K2".into(), Graph::build(4, [(0, 1), (2, 3)]).unwrap()));
    out.push((
        "K_{2,3}".into(),
        Graph::build(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
    ));
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..24 {
        let n = rng.gen_range(1..=9);
        let p = [0.25, 0.45, 0.7][i % 3];
        out.push((
            format!("random #{i} n={n} p={p}"),
            random_graph(&mut rng, n, p),
        ));
    }
    out
}

/// Checks the three conditions directly from their definitions.
pub fn is_edc_reference(g: &Graph, colors: &[usize]) -> bool {
    let n = g.n();
    let k = colors.iter().copied().max().unwrap_or(0);
    for (u, v) in g.edges() {
        if colors[u] == colors[v] {
            return false;
        }
    }
    let classes: Vec<Vec<usize>> = (1..=k)
        .map(|c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    if classes.iter().any(Vec::is_empty) {
        return false;
    }
    let lo = classes.iter().map(Vec::len).min().unwrap();
    let hi = classes.iter().map(Vec::len).max().unwrap();
    if hi - lo > 1 {
        return false;
    }
    (0..n).all(|v| {
        classes
            .iter()
            .any(|class| class.iter().all(|&u| u == v || g.has_edge(u, v)))
    })
}

/// Calls `visit` with every restricted growth string of length `n` (each set
/// partition exactly once), as 1-based colors.
pub fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(colors: &mut Vec<usize>, n: usize, max: usize, visit: &mut dyn FnMut(&[usize])) {
        if colors.len() == n {
            visit(colors);
            return;
        }
        for c in 1..=max + 1 {
            colors.push(c);
            rec(colors, n, max.max(c), visit);
            colors.pop();
        }
    }
    rec(&mut Vec::with_capacity(n), n, 0, &mut visit);
}

/// Minimum color count over all set partitions passing the reference check.
pub fn edcn_brute_force(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_partition(g.n(), |colors| {
        let k = colors.iter().copied().max().unwrap_or(0);
        if k < best && is_edc_reference(g, colors) {
            best = k;
        }
    });
    best
}

/// Whether some partition into exactly `k` classes passes the reference check.
pub fn edc_exists_brute_force(g: &Graph, k: usize) -> bool {
    let mut found = false;
    for_each_partition(g.n(), |colors| {
        if !found && colors.iter().copied().max() == Some(k) && is_edc_reference(g, colors) {
            found = true;
        }
    });
    found
}

/// Largest clique by checking every vertex subset.
pub fn clique_brute_force(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if members.len() <= best {
            continue;
        }
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if is_clique {
            best = members.len();
        }
    }
    best
}

/// Path to a fixture file under `tests/fixtures`.
pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}
