//! Exhaustive S-colorability and packing chromatic number for small graphs.
//!
//! Independent of the constructive colorer: plain backtracking over classes
//! with fail-first vertex choice. Classes with equal separation are
//! interchangeable, so among the unused classes of such a group only the
//! lowest index is tried.

use crate::coloring::{Coloring, SSpec};
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleStatus {
    /// Witness with classes numbered from 1.
    Colorable(Coloring<usize>),
    NotColorable,
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub status: OracleStatus,
    pub nodes_explored: u64,
}

struct Search<'a> {
    k: usize,
    sep: &'a [u32],
    /// `near[v][i]`: vertices within distance `sep[i]` of `v`, excluding `v`.
    near: Vec<Vec<Vec<usize>>>,
    /// Number of colored vertices that forbid class `i` at `v`.
    blocked: Vec<Vec<u32>>,
    color: Vec<Option<usize>>,
    used: Vec<u32>,
    order_key: Vec<(std::cmp::Reverse<usize>, usize)>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn allowed(&self, v: usize, i: usize) -> bool {
        if self.blocked[v][i] != 0 {
            return false;
        }
        // Symmetry: an unused class is tried only if the previous class of
        // equal separation is already in use.
        !(self.used[i] == 0 && i > 0 && self.sep[i - 1] == self.sep[i] && self.used[i - 1] == 0)
    }

    fn options(&self, v: usize) -> usize {
        (0..self.k).filter(|&i| self.allowed(v, i)).count()
    }

    fn set(&mut self, v: usize, i: usize, on: bool) {
        for idx in 0..self.near[v][i].len() {
            let u = self.near[v][i][idx];
            if on {
                self.blocked[u][i] += 1;
            } else {
                self.blocked[u][i] -= 1;
            }
        }
        if on {
            self.used[i] += 1;
            self.color[v] = Some(i);
        } else {
            self.used[i] -= 1;
            self.color[v] = None;
        }
    }

    /// `Some(true)` on success, `Some(false)` on exhaustion, `None` when the
    /// budget runs out.
    fn solve(&mut self) -> Option<bool> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.color.len() {
            if self.color[v].is_some() {
                continue;
            }
            let opts = self.options(v);
            let better = match best {
                None => true,
                Some((b, bo)) => opts < bo || (opts == bo && self.order_key[v] < self.order_key[b]),
            };
            if better {
                best = Some((v, opts));
            }
        }
        let Some((v, opts)) = best else { return Some(true) };
        if opts == 0 {
            return Some(false);
        }
        for i in 0..self.k {
            if !self.allowed(v, i) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            self.set(v, i, true);
            match self.solve() {
                Some(true) => return Some(true),
                Some(false) => self.set(v, i, false),
                None => return None,
            }
        }
        Some(false)
    }
}

/// Decides whether `g` has an `s`-coloring, exploring at most `budget`
/// search nodes.
pub fn exact_s_coloring(g: &Graph, s: &SSpec, budget: u64) -> OracleResult {
    let n = g.n();
    let sep = s.as_slice();
    let k = sep.len();
    let dist = g.distances();
    let near: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| sep.iter().map(|&si| (0..n).filter(|&u| u != v && dist.get(u, v) <= si).collect()).collect())
        .collect();
    let mut search = Search {
        k,
        sep,
        near,
        blocked: vec![vec![0; k]; n],
        color: vec![None; n],
        used: vec![0; k],
        order_key: (0..n).map(|v| (std::cmp::Reverse(g.degree(v)), v)).collect(),
        nodes: 0,
        budget,
    };
    let status = match search.solve() {
        Some(true) => {
            OracleStatus::Colorable(Coloring::new(search.color.iter().map(|c| c.expect("solved") + 1).collect()))
        }
        Some(false) => OracleStatus::NotColorable,
        None => OracleStatus::Aborted,
    };
    OracleResult { status, nodes_explored: search.nodes }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiP {
    Value {
        k: u32,
        witness: Coloring<u32>,
    },
    AboveBound(u32),
    /// The search for packing `k`-colorings ran out of budget.
    Aborted {
        k: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiPResult {
    pub chi: ChiP,
    pub nodes_explored: u64,
}

/// Least `k <= k_max` such that `g` has a packing `k`-coloring. The budget
/// applies to each value of `k` separately. The empty graph has value 0.
pub fn chi_p_exact(g: &Graph, k_max: u32, budget: u64) -> ChiPResult {
    let mut nodes = 0;
    if g.n() == 0 {
        return ChiPResult { chi: ChiP::Value { k: 0, witness: Coloring::new(vec![]) }, nodes_explored: 0 };
    }
    for k in 1..=k_max {
        let r = exact_s_coloring(g, &SSpec::packing(k), budget);
        nodes += r.nodes_explored;
        match r.status {
            OracleStatus::Colorable(witness) => {
                let witness = witness.map(|c| c as u32);
                return ChiPResult { chi: ChiP::Value { k, witness }, nodes_explored: nodes };
            }
            OracleStatus::NotColorable => {}
            OracleStatus::Aborted => return ChiPResult { chi: ChiP::Aborted { k }, nodes_explored: nodes },
        }
    }
    ChiPResult { chi: ChiP::AboveBound(k_max), nodes_explored: nodes }
}
