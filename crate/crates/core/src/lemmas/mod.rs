//! The two recoloring procedures on feasible colorings of subcubic graphs,
//! run as ordered guarded-rewrite engines.
//!
//! [`apply_lemma_c1`] handles two 2-vertices sharing a level-2 color and
//! [`apply_lemma_c2`] moves a 2-vertex off level 3. Each returns the case
//! label of the rule that fired. A rule only fires when the rewritten coloring
//! is feasible and satisfies the procedure's promise, so every returned
//! coloring is already checked.

pub(crate) mod engine;
mod pair;
mod three;

use thiserror::Error;

use crate::coloring::{partial_feasible, Coloring, SixColor};
use crate::graph::Graph;

use engine::{Failure, Trace};
pub(crate) use three::check_clauses;

pub use pair::CASES as C1_CASES;
pub use three::CASES as C2_CASES;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaOptions {
    /// Re-verify the whole coloring after every fired rewrite.
    pub verify_every_step: bool,
    /// Bound on restarts before the engine gives up on restart rules.
    pub max_restarts: usize,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions { verify_every_step: false, max_restarts: 64 }
    }
}

/// Which promise of the two-vertex procedure holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum C1Outcome {
    /// One vertex keeps the shared color, the other moved to level 1.
    A,
    /// The two vertices carry both level-2 colors.
    B,
    /// One keeps the shared color, the other moved to level 3, and both have
    /// neighborhoods colored `{1a, 1b}`.
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub coloring: Coloring<SixColor>,
    pub case_label: &'static str,
    pub c1_outcome: Option<C1Outcome>,
    /// Case labels of the restarts taken, in order.
    pub restarts: Vec<&'static str>,
    /// Vertices recolored by `1a`/`1b` component swaps.
    pub swapped: Vec<usize>,
    /// Vertices recolored by restarts and the final rewrite.
    pub rewritten: Vec<usize>,
    /// The rewrite that fired last.
    pub last_rewrite: Vec<(usize, SixColor)>,
    /// Position of the deepest fired rule in procedure order; only
    /// meaningful for comparing runs of the same procedure.
    pub rule_rank: u32,
    /// Position of the deepest rule the case analysis generated, fired or
    /// not.
    pub rule_reach: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no case applies\n{dump}")]
    NoCaseApplies { dump: String },
    #[error("rewrite in {case} produced an infeasible coloring")]
    InvalidStep { case: &'static str },
}

/// Result on a working coloring that may leave isolated vertices uncolored.
#[derive(Debug, Clone)]
pub(crate) struct PartialOutcome {
    pub coloring: Vec<Option<SixColor>>,
    pub case_label: &'static str,
    pub c1_outcome: Option<C1Outcome>,
    pub restarts: Vec<&'static str>,
    pub swapped: Vec<usize>,
    pub rewritten: Vec<usize>,
    pub last_rewrite: Vec<(usize, SixColor)>,
    pub rule_rank: u32,
    pub rule_reach: u32,
}

impl PartialOutcome {
    fn from_trace(t: Trace, c1_outcome: Option<C1Outcome>) -> Self {
        PartialOutcome {
            coloring: t.coloring,
            case_label: t.case,
            c1_outcome,
            restarts: t.restarts,
            swapped: t.swapped.into_iter().collect(),
            rewritten: t.rewritten.into_iter().collect(),
            last_rewrite: t.last,
            rule_rank: t.rank,
            rule_reach: t.reach,
        }
    }

    fn into_total(self) -> LemmaOutcome {
        LemmaOutcome {
            coloring: Coloring::new(self.coloring.into_iter().map(|c| c.expect("total input stays total")).collect()),
            case_label: self.case_label,
            c1_outcome: self.c1_outcome,
            restarts: self.restarts,
            swapped: self.swapped,
            rewritten: self.rewritten,
            last_rewrite: self.last_rewrite,
            rule_rank: self.rule_rank,
            rule_reach: self.rule_reach,
        }
    }
}

fn check_common(g: &Graph, f: &[Option<SixColor>], targets: &[usize]) -> Result<(), LemmaError> {
    let bad = |m: String| Err(LemmaError::PreconditionViolated(m));
    if f.len() != g.n() {
        return bad(format!("coloring has {} entries for {} vertices", f.len(), g.n()));
    }
    if g.max_degree() > 3 {
        return bad("graph is not subcubic".into());
    }
    for &t in targets {
        if t >= g.n() {
            return bad(format!("vertex {t} out of range"));
        }
        if g.degree(t) != 2 {
            return bad(format!("vertex {t} has degree {}, expected 2", g.degree(t)));
        }
    }
    if (0..g.n()).any(|v| f[v].is_none() && g.degree(v) > 0) {
        return bad("uncolored vertices must be isolated".into());
    }
    if !partial_feasible(g, f) {
        return bad("input coloring is not feasible".into());
    }
    Ok(())
}

fn fail(g: &Graph, targets: &[usize], failure: Failure) -> LemmaError {
    match failure {
        Failure::Stuck { coloring, evaluations } => {
            LemmaError::NoCaseApplies { dump: engine::dump(g, &coloring, targets, &evaluations) }
        }
        Failure::InvalidStep { case } => LemmaError::InvalidStep { case },
    }
}

pub(crate) fn lemma_c1_partial(
    g: &Graph,
    f: &[Option<SixColor>],
    u: usize,
    v: usize,
    opts: &LemmaOptions,
) -> Result<PartialOutcome, LemmaError> {
    check_common(g, f, &[u, v])?;
    if u == v {
        return Err(LemmaError::PreconditionViolated("u and v must differ".into()));
    }
    let common = match (f[u], f[v]) {
        (Some(a), Some(b)) if a == b && a.level() == 2 => a,
        _ => return Err(LemmaError::PreconditionViolated("u and v must share color 2a or 2b".into())),
    };
    let p = pair::PairProc::new(g, u, v, common);
    let t = engine::run(&p, f.to_vec(), opts.max_restarts, opts.verify_every_step).map_err(|e| fail(g, &[u, v], e))?;
    let outcome = p.outcome(&t.coloring);
    Ok(PartialOutcome::from_trace(t, outcome))
}

pub(crate) fn lemma_c2_partial(
    g: &Graph,
    f: &[Option<SixColor>],
    u: usize,
    opts: &LemmaOptions,
) -> Result<PartialOutcome, LemmaError> {
    check_common(g, f, &[u])?;
    if !f[u].is_some_and(|c| c.is_three()) {
        return Err(LemmaError::PreconditionViolated(format!("vertex {u} is not colored 3a or 3b")));
    }
    let p = three::ThreeProc::new(g, f, u);
    let t = engine::run(&p, f.to_vec(), opts.max_restarts, opts.verify_every_step).map_err(|e| fail(g, &[u], e))?;
    Ok(PartialOutcome::from_trace(t, None))
}

/// Two 2-vertices `u`, `v` sharing color `2a` or `2b`; the `2b` input is
/// handled through the a/b symmetry.
pub fn apply_lemma_c1(g: &Graph, f: &Coloring<SixColor>, u: usize, v: usize) -> Result<LemmaOutcome, LemmaError> {
    apply_lemma_c1_with(g, f, u, v, &LemmaOptions::default())
}

pub fn apply_lemma_c1_with(
    g: &Graph,
    f: &Coloring<SixColor>,
    u: usize,
    v: usize,
    opts: &LemmaOptions,
) -> Result<LemmaOutcome, LemmaError> {
    let partial: Vec<_> = f.iter().map(Some).collect();
    lemma_c1_partial(g, &partial, u, v, opts).map(PartialOutcome::into_total)
}

/// A 2-vertex `u` colored `3a` or `3b`.
pub fn apply_lemma_c2(g: &Graph, f: &Coloring<SixColor>, u: usize) -> Result<LemmaOutcome, LemmaError> {
    apply_lemma_c2_with(g, f, u, &LemmaOptions::default())
}

pub fn apply_lemma_c2_with(
    g: &Graph,
    f: &Coloring<SixColor>,
    u: usize,
    opts: &LemmaOptions,
) -> Result<LemmaOutcome, LemmaError> {
    let partial: Vec<_> = f.iter().map(Some).collect();
    lemma_c2_partial(g, &partial, u, opts).map(PartialOutcome::into_total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_feasible;
    use SixColor::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn c2_on_a_path_recolors_only_the_target() {
        let g = path(3);
        let f = Coloring::new(vec![OneA, ThreeA, OneA]);
        let out = apply_lemma_c2(&g, &f, 1).unwrap();
        assert_eq!(out.coloring.as_slice(), &[OneA, OneB, OneA]);
        assert_eq!(out.case_label, "C2-Start");
    }

    #[test]
    fn c2_triangle_moves_target_to_level_two() {
        // Triangle 0-1-2 with target 0; pendant vertices keep level 2 away.
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap();
        let f = Coloring::new(vec![ThreeA, OneA, OneB, OneB, OneA]);
        let out = apply_lemma_c2(&g, &f, 0).unwrap();
        assert!(out.coloring[0].level() == 2);
        assert!(verify_feasible(&g, &out.coloring).unwrap().is_empty());
    }

    #[test]
    fn c1_start_rule_on_joined_paths() {
        // x-u-y and x'-v-y' joined through a path y - p - x'.
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let f = Coloring::new(vec![OneA, TwoA, OneA, OneB, OneA, TwoA, OneB]);
        assert!(verify_feasible(&g, &f).unwrap().is_empty());
        let out = apply_lemma_c1(&g, &f, 1, 5).unwrap();
        assert_eq!(out.case_label, "C1-Start");
        assert_eq!(out.c1_outcome, Some(C1Outcome::A));
        assert_eq!(out.coloring[1], OneB);
    }

    #[test]
    fn preconditions_are_checked() {
        let g = path(3);
        let f = Coloring::new(vec![OneA, TwoA, OneA]);
        assert!(matches!(apply_lemma_c2(&g, &f, 1), Err(LemmaError::PreconditionViolated(_))));
        assert!(matches!(apply_lemma_c2(&g, &f, 0), Err(LemmaError::PreconditionViolated(_))));
        let bad = Coloring::new(vec![OneA, ThreeA, ThreeA]);
        assert!(matches!(apply_lemma_c2(&g, &bad, 1), Err(LemmaError::PreconditionViolated(_))));
    }
}
