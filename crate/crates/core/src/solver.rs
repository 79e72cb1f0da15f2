// SPDX-License-Identifier: Apache-2.0

//! Exact chromatic number and equitable dominator chromatic number.
//!
//! Both searches scan the color count `k` upward from the clique number and
//! stop at the first `k` that admits a coloring. Equitable dominator
//! feasibility is not monotone in `k`, so every `k` below the answer is
//! refuted explicitly.
//!
//! For a fixed `k` the search assigns vertices in descending-degree order
//! (ties by index) and tries colors in ascending order. Color `j + 1` may only
//! appear after color `j` has been used, which removes relabelings of the same
//! partition. Class sizes are capped at `⌈n/k⌉`, at most `n mod k` classes may
//! reach the cap, and a branch is cut when the uncolored vertices cannot bring
//! every class up to `⌊n/k⌋`. The optional dominator rule cuts a branch when
//! some vertex can no longer end up containing a whole class in its closed
//! neighborhood. Complete assignments are checked with [`validate_edc`].

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::coloring::{validate_edc, Coloring};
use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(120),
        }
    }
}

impl SolverBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SolverBudget {
            max_nodes,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Enables the partial dominator rule. Disabling it only slows the
    /// search down; results are identical.
    pub dominator_pruning: bool,
    /// Worker threads for the `k` scan. With more than one worker the value
    /// is unchanged but the witness may differ between runs.
    pub jobs: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            dominator_pruning: true,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverResult {
    pub value: usize,
    pub witness: Coloring,
    pub nodes_explored: u64,
    pub lower_bound_used: usize,
    pub time_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Proper,
    Equitable,
}

/// Shared node and time accounting; several searches may draw from one meter.
struct Meter {
    nodes: AtomicU64,
    max_nodes: u64,
    start: Instant,
    max_time: Duration,
    expired: AtomicBool,
}

struct Exhausted;

impl Meter {
    fn new(budget: SolverBudget) -> Meter {
        Meter {
            nodes: AtomicU64::new(0),
            max_nodes: budget.max_nodes,
            start: Instant::now(),
            max_time: budget.max_time,
            expired: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> Result<(), Exhausted> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes || self.expired.load(Ordering::Relaxed) {
            return Err(Exhausted);
        }
        if n.is_multiple_of(1024) && self.start.elapsed() > self.max_time {
            self.expired.store(true, Ordering::Relaxed);
            return Err(Exhausted);
        }
        Ok(())
    }

    fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed).min(self.max_nodes)
    }

    fn elapsed_ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

struct Search<'a> {
    g: &'a Graph,
    mode: Mode,
    k: usize,
    cap: usize,
    floor: usize,
    /// Classes allowed to reach `cap` when `cap > floor`.
    big: usize,
    order: Vec<usize>,
    closed: Vec<FixedBitSet>,
    members: Vec<FixedBitSet>,
    sizes: Vec<usize>,
    at_cap: usize,
    color: Vec<usize>,
    uncolored: FixedBitSet,
    used: usize,
    prune_dominator: bool,
    meter: &'a Meter,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, mode: Mode, prune_dominator: bool, meter: &'a Meter) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        let closed = (0..n)
            .map(|v| {
                let mut s = FixedBitSet::with_capacity(n);
                s.insert(v);
                s.extend(g.neighbors(v).iter().copied());
                s
            })
            .collect();
        let mut uncolored = FixedBitSet::with_capacity(n);
        uncolored.insert_range(..);
        let (cap, floor, big) = match mode {
            Mode::Equitable => (n.div_ceil(k), n / k, n % k),
            Mode::Proper => (n, 1, 0),
        };
        Search {
            g,
            mode,
            k,
            cap,
            floor,
            big,
            order,
            closed,
            members: vec![FixedBitSet::with_capacity(n); k],
            sizes: vec![0; k],
            at_cap: 0,
            color: vec![0; n],
            uncolored,
            used: 0,
            prune_dominator: prune_dominator && mode == Mode::Equitable,
            meter,
        }
    }

    fn run(mut self) -> Result<Option<Coloring>, Exhausted> {
        if self.assign(0)? {
            Ok(Some(
                Coloring::new(self.color).expect("search colorings are surjective"),
            ))
        } else {
            Ok(None)
        }
    }

    fn assign(&mut self, depth: usize) -> Result<bool, Exhausted> {
        let n = self.g.n();
        if depth == n {
            return Ok(self.leaf_ok());
        }
        let v = self.order[depth];
        let limit = (self.used + 1).min(self.k);
        for c in 1..=limit {
            let j = c - 1;
            if self.sizes[j] == self.cap {
                continue;
            }
            let grows_to_cap = self.sizes[j] + 1 == self.cap && self.cap > self.floor;
            if self.mode == Mode::Equitable && grows_to_cap && self.at_cap == self.big {
                continue;
            }
            if self.g.neighbors(v).iter().any(|&u| self.color[u] == c) {
                continue;
            }
            self.meter.tick()?;
            self.place(v, c, grows_to_cap);
            if self.counts_feasible(n - depth - 1)
                && (!self.prune_dominator || self.dominator_feasible())
                && self.assign(depth + 1)?
            {
                return Ok(true);
            }
            self.unplace(v, c, grows_to_cap);
        }
        Ok(false)
    }

    fn place(&mut self, v: usize, c: usize, grows_to_cap: bool) {
        let j = c - 1;
        if self.sizes[j] == 0 {
            self.used += 1;
        }
        self.sizes[j] += 1;
        if grows_to_cap {
            self.at_cap += 1;
        }
        self.members[j].insert(v);
        self.color[v] = c;
        self.uncolored.set(v, false);
    }

    fn unplace(&mut self, v: usize, c: usize, grows_to_cap: bool) {
        let j = c - 1;
        self.sizes[j] -= 1;
        if self.sizes[j] == 0 {
            self.used -= 1;
        }
        if grows_to_cap {
            self.at_cap -= 1;
        }
        self.members[j].set(v, false);
        self.color[v] = 0;
        self.uncolored.insert(v);
    }

    /// The remaining vertices must be able to lift every class to its floor.
    fn counts_feasible(&self, remaining: usize) -> bool {
        let short: usize = self
            .sizes
            .iter()
            .map(|&s| self.floor.saturating_sub(s))
            .sum();
        short <= remaining
    }

    /// Every vertex must still be able to contain a whole final class in its
    /// closed neighborhood: either an existing class already inside `N[v]`
    /// that can still reach the floor from vertices of `N[v]`, or a fresh
    /// class built only from uncolored vertices of `N[v]`.
    fn dominator_feasible(&self) -> bool {
        (0..self.g.n()).all(|v| {
            let free = self.uncolored.intersection_count(&self.closed[v]);
            if self.used < self.k && free >= self.floor {
                return true;
            }
            (0..self.k).any(|j| {
                self.sizes[j] > 0
                    && self.sizes[j] + free >= self.floor
                    && self.members[j].is_subset(&self.closed[v])
            })
        })
    }

    fn leaf_ok(&self) -> bool {
        if self.used != self.k {
            return false;
        }
        match self.mode {
            Mode::Proper => true,
            Mode::Equitable => {
                let c = Coloring::new(self.color.clone()).expect("all colors used");
                validate_edc(self.g, &c).map(|r| r.overall).unwrap_or(false)
            }
        }
    }
}

fn lower_bound(g: &Graph, budget: SolverBudget) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    match clique_number(g, budget.max_nodes) {
        Ok(w) => Ok(w),
        Err(Error::BudgetExceeded { lower, .. }) => Ok(lower),
        Err(e) => Err(e),
    }
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.n() {
        Err(Error::InvalidColorCount { k, n: g.n() })
    } else {
        Ok(())
    }
}

/// Exact chromatic number with a proper witness.
pub fn chromatic_number(g: &Graph, budget: SolverBudget) -> Result<SolverResult> {
    let omega = lower_bound(g, budget)?;
    let meter = Meter::new(budget);
    for k in omega..=g.n() {
        match Search::new(g, k, Mode::Proper, false, &meter).run() {
            Ok(Some(witness)) => {
                return Ok(SolverResult {
                    value: k,
                    witness,
                    nodes_explored: meter.nodes(),
                    lower_bound_used: omega,
                    time_ms: meter.elapsed_ms(),
                })
            }
            Ok(None) => {}
            Err(Exhausted) => {
                return Err(Error::BudgetExceeded {
                    lower: k,
                    upper: g.n(),
                })
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// An equitable dominator `k`-coloring, or `None` when there is none.
pub fn edcn_decision(g: &Graph, k: usize, budget: SolverBudget) -> Result<Option<Coloring>> {
    check_k(g, k)?;
    let meter = Meter::new(budget);
    Search::new(g, k, Mode::Equitable, true, &meter)
        .run()
        .map_err(|Exhausted| Error::BudgetExceeded {
            lower: k,
            upper: g.n(),
        })
}

/// Exact equitable dominator chromatic number with default options.
pub fn edcn_exact(g: &Graph, budget: SolverBudget) -> Result<SolverResult> {
    edcn_exact_with(g, budget, SolverOptions::default())
}

/// Exact equitable dominator chromatic number.
///
/// On budget exhaustion the error's `lower` is the smallest `k` not yet
/// refuted and `upper` is `n` (all-singleton classes always qualify).
pub fn edcn_exact_with(
    g: &Graph,
    budget: SolverBudget,
    opts: SolverOptions,
) -> Result<SolverResult> {
    let omega = lower_bound(g, budget)?;
    let meter = Meter::new(budget);
    let (value, witness) = if opts.jobs > 1 {
        scan_parallel(g, omega, opts, &meter)?
    } else {
        scan_sequential(g, omega, opts, &meter)?
    };
    Ok(SolverResult {
        value,
        witness,
        nodes_explored: meter.nodes(),
        lower_bound_used: omega,
        time_ms: meter.elapsed_ms(),
    })
}

fn scan_sequential(
    g: &Graph,
    from: usize,
    opts: SolverOptions,
    meter: &Meter,
) -> Result<(usize, Coloring)> {
    for k in from..=g.n() {
        match Search::new(g, k, Mode::Equitable, opts.dominator_pruning, meter).run() {
            Ok(Some(c)) => return Ok((k, c)),
            Ok(None) => {}
            Err(Exhausted) => {
                return Err(Error::BudgetExceeded {
                    lower: k,
                    upper: g.n(),
                })
            }
        }
    }
    unreachable!("singleton classes always form an equitable dominator coloring")
}

#[derive(Clone)]
enum Outcome {
    Pending,
    None,
    Found(Coloring),
    Exhausted,
}

/// Workers claim values of `k` in increasing order. A worker skips any `k`
/// above the smallest feasible one found so far, so the answer is the first
/// feasible `k` once every smaller `k` has been refuted.
fn scan_parallel(
    g: &Graph,
    from: usize,
    opts: SolverOptions,
    meter: &Meter,
) -> Result<(usize, Coloring)> {
    let n = g.n();
    let next = AtomicUsize::new(from);
    let best = AtomicUsize::new(n + 1);
    let outcomes = Mutex::new(vec![Outcome::Pending; n + 1]);
    std::thread::scope(|s| {
        for _ in 0..opts.jobs {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                if k > n || k > best.load(Ordering::SeqCst) {
                    break;
                }
                let out =
                    match Search::new(g, k, Mode::Equitable, opts.dominator_pruning, meter).run() {
                        Ok(Some(c)) => {
                            best.fetch_min(k, Ordering::SeqCst);
                            Outcome::Found(c)
                        }
                        Ok(None) => Outcome::None,
                        Err(Exhausted) => Outcome::Exhausted,
                    };
                outcomes.lock().expect("worker panicked")[k] = out;
            });
        }
    });
    let outcomes = outcomes.into_inner().expect("worker panicked");
    for (k, out) in outcomes.into_iter().enumerate().skip(from) {
        match out {
            Outcome::None => {}
            Outcome::Found(c) => return Ok((k, c)),
            Outcome::Exhausted | Outcome::Pending => {
                return Err(Error::BudgetExceeded { lower: k, upper: n })
            }
        }
    }
    unreachable!("singleton classes always form an equitable dominator coloring")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn budget() -> SolverBudget {
        SolverBudget::nodes(10_000_000)
    }

    #[test]
    fn single_vertex() {
        let r = edcn_exact(&Graph::empty(1), budget()).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.colors(), &[1]);
        assert_eq!(
            chromatic_number(&Graph::empty(1), budget()).unwrap().value,
            1
        );
    }

    #[test]
    fn empty_graph_is_rejected() {
        assert_eq!(
            edcn_exact(&Graph::empty(0), budget()),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn decision_on_small_graphs() {
        assert_eq!(
            edcn_decision(&Graph::complete(2), 1, budget()).unwrap(),
            None
        );
        assert_eq!(edcn_decision(&cycle(6), 3, budget()).unwrap(), None);
        let w = edcn_decision(&cycle(6), 4, budget()).unwrap().unwrap();
        assert!(validate_edc(&cycle(6), &w).unwrap().overall);
        assert!(matches!(
            edcn_decision(&cycle(6), 7, budget()),
            Err(Error::InvalidColorCount { k: 7, n: 6 })
        ));
    }

    #[test]
    fn chromatic_of_odd_cycle() {
        let r = chromatic_number(&cycle(5), budget()).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.witness.is_proper(&cycle(5)).unwrap());
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        match edcn_exact(&cycle(9), SolverBudget::nodes(3)) {
            Err(Error::BudgetExceeded { lower, upper }) => {
                assert!(lower >= 2);
                assert_eq!(upper, 9);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn parallel_matches_sequential_value() {
        for n in 4..9 {
            let g = cycle(n);
            let seq = edcn_exact(&g, budget()).unwrap();
            let par = edcn_exact_with(
                &g,
                budget(),
                SolverOptions {
                    jobs: 3,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(seq.value, par.value);
            assert!(validate_edc(&g, &par.witness).unwrap().overall);
        }
    }

    #[test]
    fn result_json_fields() {
        let r = edcn_exact(&Graph::empty(1), budget()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in [
            "value",
            "witness",
            "nodes_explored",
            "lower_bound_used",
            "time_ms",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["witness"], serde_json::json!({"k": 1, "colors": [1]}));
    }
}
