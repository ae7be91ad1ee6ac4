//! Ordered guarded-rewrite driver shared by the recoloring procedures.
//!
//! A procedure body is written once in a normalized frame and run under each
//! symmetry variant. Every "recolor these vertices" step becomes a candidate
//! tagged with its source line, so candidates from all variants can be tried
//! rule by rule in textual order. A candidate fires when its guard accepts the
//! rewritten coloring. Restart candidates replace the working coloring and
//! rerun the body.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::coloring::{ones_component, SixColor};
use crate::graph::Graph;

/// Relabeling of the six colors (independent a/b swaps per level) together
/// with an exchange of the two distinguished vertices of a procedure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub(crate) struct Variant {
    pub swap: [bool; 3],
    pub flip: bool,
}

impl Variant {
    /// Maps a color between the actual and the normalized frame, in either
    /// direction.
    pub fn map(self, c: SixColor) -> SixColor {
        if self.swap[c.level() as usize - 1] {
            c.partner()
        } else {
            c
        }
    }

    /// All variants whose swapped levels and flip lie in the allowed sets.
    pub fn enumerate(levels: [bool; 3], flip: bool) -> Vec<Variant> {
        let mut out = Vec::new();
        for mask in 0..16u8 {
            let swap = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
            let fl = mask & 8 != 0;
            if (0..3).any(|i| swap[i] && !levels[i]) || (fl && !flip) {
                continue;
            }
            out.push(Variant { swap, flip: fl });
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Kind {
    Finish,
    Restart,
}

#[derive(Debug, Clone)]
pub(crate) struct Candidate {
    pub ord: u32,
    pub case: &'static str,
    pub kind: Kind,
    pub kempe: bool,
    pub changes: Vec<(usize, SixColor)>,
}

/// View of the working coloring in a variant's normalized frame, collecting
/// candidates with colors translated back to the actual frame.
pub(crate) struct Ctx<'a> {
    g: &'a Graph,
    f: &'a [Option<SixColor>],
    var: Variant,
    out: &'a mut Vec<Candidate>,
}

impl<'a> Ctx<'a> {
    pub fn flip(&self) -> bool {
        self.var.flip
    }

    pub fn col(&self, v: usize) -> Option<SixColor> {
        self.f[v].map(|c| self.var.map(c))
    }

    pub fn is(&self, v: usize, c: SixColor) -> bool {
        self.col(v) == Some(c)
    }

    /// Whether `v` exists and has color `c`.
    pub fn has(&self, v: Option<usize>, c: SixColor) -> bool {
        v.is_some_and(|v| self.is(v, c))
    }

    pub fn nbrs(&self, v: usize) -> &'a [usize] {
        self.g.neighbors(v)
    }

    pub fn adj(&self, a: usize, b: usize) -> bool {
        self.g.has_edge(a, b)
    }

    /// Lowest neighbor of `v` outside `excl` with color `c`.
    pub fn nbr_with(&self, v: usize, c: SixColor, excl: &[usize]) -> Option<usize> {
        self.nbrs(v).iter().copied().find(|x| !excl.contains(x) && self.is(*x, c))
    }

    /// Lowest neighbor of `v` outside `excl`.
    pub fn nbr_except(&self, v: usize, excl: &[usize]) -> Option<usize> {
        self.nbrs(v).iter().copied().find(|x| !excl.contains(x))
    }

    /// Whether `u` and `v` share a component of the `1a`/`1b` subgraph.
    pub fn ones_connected(&self, u: usize, v: usize) -> bool {
        ones_component(self.g, |x| self.f[x].is_some_and(|c| c.is_one()), u).binary_search(&v).is_ok()
    }

    pub fn push(&mut self, ord: u32, case: &'static str, kind: Kind, changes: &[(usize, SixColor)]) {
        let changes = changes.iter().map(|&(v, c)| (v, self.var.map(c))).collect();
        self.out.push(Candidate { ord, case, kind, kempe: false, changes });
    }

    /// Restart that exchanges `1a`/`1b` on the component of `v`.
    pub fn kempe(&mut self, ord: u32, case: &'static str, v: usize) {
        let f = self.f;
        let changes = ones_component(self.g, |x| f[x].is_some_and(|c| c.is_one()), v)
            .into_iter()
            .map(|x| (x, f[x].expect("component vertices are colored").partner()))
            .collect();
        self.out.push(Candidate { ord, case, kind: Kind::Restart, kempe: true, changes });
    }
}

/// Finishing rewrite.
macro_rules! fin {
    ($cx:expr, $case:expr, [$(($v:expr, $c:expr)),* $(,)?]) => {
        $cx.push(line!(), $case, $crate::lemmas::engine::Kind::Finish, &[$(($v, $c)),*])
    };
}

/// Rewrite that changes the working coloring and reruns the procedure.
macro_rules! restart {
    ($cx:expr, $case:expr, [$(($v:expr, $c:expr)),* $(,)?]) => {
        $cx.push(line!(), $case, $crate::lemmas::engine::Kind::Restart, &[$(($v, $c)),*])
    };
}

pub(crate) use {fin, restart};

pub(crate) trait Procedure {
    fn graph(&self) -> &Graph;
    fn variants(&self) -> &[Variant];
    fn generate(&self, cx: &mut Ctx<'_>);
    /// Guard for a finishing rewrite; `changed` lists vertices whose color
    /// differs from the working coloring.
    fn accept_finish(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool;
    /// Guard for a restart; restarts must keep the target vertices.
    fn accept_restart(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool;
    /// Full check used in every-step verification mode.
    fn verify(&self, f: &[Option<SixColor>]) -> bool;
}

#[derive(Debug, Clone)]
pub(crate) struct Trace {
    pub coloring: Vec<Option<SixColor>>,
    pub case: &'static str,
    pub restarts: Vec<&'static str>,
    /// Vertices recolored by component swaps.
    pub swapped: BTreeSet<usize>,
    /// Vertices recolored by restarts and the final rewrite.
    pub rewritten: BTreeSet<usize>,
    /// Changes of the rewrite that fired last.
    pub last: Vec<(usize, SixColor)>,
    /// Largest source ordinal among the fired rewrites.
    pub rank: u32,
    /// Largest source ordinal among all generated rewrites.
    pub reach: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct Evaluation {
    pub case: &'static str,
    pub kind: Kind,
    pub changes: Vec<(usize, SixColor)>,
    pub accepted: bool,
}

#[derive(Debug, Clone)]
pub(crate) enum Failure {
    Stuck { coloring: Vec<Option<SixColor>>, evaluations: Vec<Evaluation> },
    InvalidStep { case: &'static str },
}

pub(crate) fn run<P: Procedure>(
    p: &P,
    start: Vec<Option<SixColor>>,
    max_restarts: usize,
    verify_steps: bool,
) -> Result<Trace, Failure> {
    let mut current = start;
    let mut visited: HashSet<Vec<Option<SixColor>>> = HashSet::new();
    visited.insert(current.clone());
    let mut restarts = Vec::new();
    let mut swapped = BTreeSet::new();
    let mut rewritten = BTreeSet::new();
    let mut rank = 0;
    let mut reach = 0;

    'outer: loop {
        let mut cands = Vec::new();
        for &var in p.variants() {
            let mut cx = Ctx { g: p.graph(), f: &current, var, out: &mut cands };
            p.generate(&mut cx);
        }
        cands.sort_by_key(|c| c.ord);
        reach = cands.last().map_or(reach, |c| reach.max(c.ord));
        let mut seen = HashSet::new();
        cands.retain(|c| seen.insert((c.kind, c.changes.clone())));

        let mut evaluations = Vec::with_capacity(cands.len());
        for cand in cands {
            let mut next = current.clone();
            for &(v, c) in &cand.changes {
                next[v] = Some(c);
            }
            let mut changed: Vec<usize> =
                cand.changes.iter().map(|&(v, _)| v).filter(|&v| next[v] != current[v]).collect();
            changed.sort_unstable();
            changed.dedup();
            let accepted = match cand.kind {
                Kind::Finish => p.accept_finish(&next, &changed),
                Kind::Restart => {
                    restarts.len() < max_restarts
                        && !changed.is_empty()
                        && !visited.contains(&next)
                        && p.accept_restart(&next, &changed)
                }
            };
            if !accepted {
                evaluations.push(Evaluation { case: cand.case, kind: cand.kind, changes: cand.changes, accepted });
                continue;
            }
            if verify_steps && !p.verify(&next) {
                return Err(Failure::InvalidStep { case: cand.case });
            }
            rank = rank.max(cand.ord);
            if cand.kempe {
                swapped.extend(changed.iter().copied());
            } else {
                rewritten.extend(changed.iter().copied());
            }
            match cand.kind {
                Kind::Finish => {
                    return Ok(Trace {
                        coloring: next,
                        case: cand.case,
                        restarts,
                        swapped,
                        rewritten,
                        last: cand.changes,
                        rank,
                        reach,
                    });
                }
                Kind::Restart => {
                    restarts.push(cand.case);
                    visited.insert(next.clone());
                    current = next;
                    continue 'outer;
                }
            }
        }
        return Err(Failure::Stuck { coloring: current, evaluations });
    }
}

/// Repro text for a stuck procedure: edge list, coloring lines, a target
/// line and one line per evaluated rule.
pub(crate) fn dump(g: &Graph, f: &[Option<SixColor>], target: &[usize], evaluations: &[Evaluation]) -> String {
    let mut s = crate::io::write_edge_list(g);
    for (v, c) in f.iter().enumerate() {
        if let Some(c) = c {
            let _ = writeln!(s, "{v} {c}");
        }
    }
    let targets: Vec<String> = target.iter().map(|t| t.to_string()).collect();
    let _ = writeln!(s, "target {}", targets.join(" "));
    for e in evaluations {
        let changes: Vec<String> = e.changes.iter().map(|(v, c)| format!("{v}->{c}")).collect();
        let kind = match e.kind {
            Kind::Finish => "finish",
            Kind::Restart => "restart",
        };
        let _ = writeln!(
            s,
            "{} {} {} [{}]",
            e.case,
            if e.accepted { "accepted" } else { "rejected" },
            kind,
            changes.join(" ")
        );
    }
    s
}
