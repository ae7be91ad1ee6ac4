//! Constructive colorings: feasible colorings of 2-degenerate subcubic
//! graphs, good colorings of connected cubic graphs, and their lift to
//! packing colorings of the subdivision.
//!
//! A connected subcubic graph that is not cubic is 2-degenerate: a subgraph
//! of minimum degree 3 would have all its edges already saturated, so by
//! connectivity it would be the whole graph. [`color_connected_subcubic`]
//! dispatches on that fact.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::SixColor::{self, *};
use crate::coloring::{locally_feasible, partial_feasible, verify_good, Coloring, GoodColor};
use crate::graph::{Graph, GraphError, SubdivisionResult};
use crate::lemmas::engine::{self, fin, Ctx, Procedure, Variant};
use crate::lemmas::{lemma_c1_partial, lemma_c2_partial, C1Outcome, LemmaError, LemmaOptions, PartialOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is not 2-degenerate; core {0:?}")]
    NotTwoDegenerate(Vec<usize>),
    #[error("vertex {vertex} has degree {degree}; graph is not subcubic")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("graph is not cubic with at least 4 vertices")]
    NotCubic,
    #[error("graph is not connected")]
    NotConnected,
    #[error("no case applies in {context}\n{dump}")]
    InternalCaseExhaustion { context: String, dump: String },
    #[error("input coloring is not a good coloring: {0}")]
    InvalidInputColoring(String),
}

impl From<LemmaError> for ColorError {
    fn from(e: LemmaError) -> Self {
        let dump = match &e {
            LemmaError::NoCaseApplies { dump } => dump.clone(),
            other => other.to_string(),
        };
        ColorError::InternalCaseExhaustion { context: "recoloring lemma".into(), dump }
    }
}

/// Counts of the case labels fired during a run, lemma labels included.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CaseLog {
    pub counts: BTreeMap<&'static str, usize>,
}

impl CaseLog {
    pub fn record(&mut self, label: &'static str) {
        *self.counts.entry(label).or_default() += 1;
    }

    pub fn merge(&mut self, other: &CaseLog) {
        for (k, v) in &other.counts {
            *self.counts.entry(k).or_default() += v;
        }
    }

    fn lemma(&mut self, out: &PartialOutcome) {
        for &r in &out.restarts {
            self.record(r);
        }
        self.record(out.case_label);
    }
}

/// The packing coloring of a subdivision produced by [`lift_to_subdivision`].
#[derive(Debug, Clone)]
pub struct Packing {
    pub subdivision: SubdivisionResult,
    pub coloring: Coloring<u32>,
}

fn check_subcubic(g: &Graph) -> Result<(), ColorError> {
    match (0..g.n()).find(|&v| g.degree(v) > 3) {
        Some(v) => Err(ColorError::NotSubcubic { vertex: v, degree: g.degree(v) }),
        None => Ok(()),
    }
}

fn exhausted(
    context: &str,
    g: &Graph,
    f: &[Option<SixColor>],
    target: &[usize],
    ev: &[engine::Evaluation],
) -> ColorError {
    ColorError::InternalCaseExhaustion { context: context.into(), dump: engine::dump(g, f, target, ev) }
}

pub fn feasible_color_2degenerate(g: &Graph) -> Result<Coloring<SixColor>, ColorError> {
    feasible_color_2degenerate_with(g, &LemmaOptions::default(), &mut CaseLog::default())
}

/// Feasible coloring by replaying an elimination order backwards. Each
/// vertex joins at most two colored neighbors; the two-neighbor step first
/// clears level 3 off both neighbors, then resolves a shared level-2 color,
/// and finally extends the coloring by an ordered list of local rewrites.
pub fn feasible_color_2degenerate_with(
    g: &Graph,
    opts: &LemmaOptions,
    log: &mut CaseLog,
) -> Result<Coloring<SixColor>, ColorError> {
    check_subcubic(g)?;
    let order = match g.degeneracy_order() {
        Ok(o) => o.order,
        Err(GraphError::NotTwoDegenerate(core)) => return Err(ColorError::NotTwoDegenerate(core)),
        Err(e) => unreachable!("degeneracy order only fails on a core: {e}"),
    };
    let n = g.n();
    let mut inserted = vec![false; n];
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(g.edge_count());
    let mut f: Vec<Option<SixColor>> = vec![None; n];
    for &w in order.iter().rev() {
        let nbrs: Vec<usize> = g.neighbors(w).iter().copied().filter(|&x| inserted[x]).collect();
        match nbrs[..] {
            [] => {
                log.record("T2-Isolated");
                f[w] = Some(OneA);
            }
            [x] => {
                log.record("T2-Case1");
                f[w] = Some(if f[x] == Some(OneA) { OneB } else { OneA });
            }
            [w1, w2] => {
                f = extend_two(n, &edges, f, w, w1, w2, opts, log)?;
            }
            _ => unreachable!("elimination order leaves at most two later neighbors"),
        }
        inserted[w] = true;
        edges.extend(nbrs.iter().map(|&x| (x.min(w), x.max(w))));
        if opts.verify_every_step {
            let cur = Graph::new(n, &edges).expect("subgraph of a simple graph");
            if !partial_feasible(&cur, &f) {
                let dump = engine::dump(&cur, &f, &[w], &[]);
                return Err(ColorError::InternalCaseExhaustion { context: "step verification".into(), dump });
            }
        }
    }
    Ok(Coloring::new(f.into_iter().map(|c| c.expect("every vertex inserted")).collect()))
}

/// Inserts `w` adjacent to the colored vertices `w1`, `w2`. Working vertices
/// past `n` are temporary leaves that give both neighbors degree 2.
#[allow(clippy::too_many_arguments)]
fn extend_two(
    n: usize,
    edges: &[(usize, usize)],
    mut f: Vec<Option<SixColor>>,
    w: usize,
    w1: usize,
    w2: usize,
    opts: &LemmaOptions,
    log: &mut CaseLog,
) -> Result<Vec<Option<SixColor>>, ColorError> {
    let mut h_edges = edges.to_vec();
    let mut deg = vec![0usize; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut total = n;
    for x in [w1, w2] {
        for _ in deg[x]..2 {
            h_edges.push((x, total));
            let c = if f[x] == Some(OneA) { OneB } else { OneA };
            f.push(Some(c));
            total += 1;
        }
    }
    let h = Graph::new(total, &h_edges).expect("leaves keep the graph simple");
    for x in [w1, w2] {
        if f[x].is_some_and(|c| c.is_three()) {
            let out = lemma_c2_partial(&h, &f, x, opts)?;
            log.lemma(&out);
            f = out.coloring;
        }
    }
    let mut g_edges = h_edges;
    g_edges.push((w.min(w1), w.max(w1)));
    g_edges.push((w.min(w2), w.max(w2)));
    let gp = Graph::new(total, &g_edges).expect("w joins two distinct vertices");

    if f[w1] == f[w2] && f[w1].is_some_and(|c| c.level() == 2) {
        log.record("T2-Case2.2");
        let common = f[w1].expect("checked");
        let out = lemma_c1_partial(&h, &f, w1, w2, opts)?;
        log.lemma(&out);
        f = out.coloring;
        if out.c1_outcome == Some(C1Outcome::C) {
            let mut next = f.clone();
            next[w] = Some(common.partner());
            if accept_extension(&gp, &next, w) {
                next.truncate(n);
                return Ok(next);
            }
        }
    }

    let p = ExtendProc { g: &gp, w, w1, w2, variants: Variant::enumerate([true, true, true], true) };
    match engine::run(&p, f, opts.max_restarts, opts.verify_every_step) {
        Ok(t) => {
            for &r in &t.restarts {
                log.record(r);
            }
            log.record(t.case);
            let mut out = t.coloring;
            out.truncate(n);
            Ok(out)
        }
        Err(engine::Failure::Stuck { coloring, evaluations }) => {
            Err(exhausted("two-neighbor extension", &gp, &coloring, &[w, w1, w2], &evaluations))
        }
        Err(engine::Failure::InvalidStep { case }) => Err(ColorError::InternalCaseExhaustion {
            context: "two-neighbor extension".into(),
            dump: format!("rewrite in {case} produced an infeasible coloring"),
        }),
    }
}

/// Adding `w` shortens only paths through `w`, so pairs that can newly
/// conflict lie within distance 3 of `w`.
fn accept_extension(gp: &Graph, next: &[Option<SixColor>], w: usize) -> bool {
    let mut near = Vec::new();
    gp.for_each_within(w, 3, |x, _| near.push(x));
    next[w].is_some() && locally_feasible(gp, next, &near)
}

pub const T2_CASES: &[&str] =
    &["T2-Isolated", "T2-Case1", "T2-Case2.1", "T2-Kempe", "T2-Case2.1.1", "T2-Case2.1.2", "T2-Case2.2"];

struct ExtendProc<'a> {
    g: &'a Graph,
    w: usize,
    w1: usize,
    w2: usize,
    variants: Vec<Variant>,
}

impl Procedure for ExtendProc<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn variants(&self) -> &[Variant] {
        &self.variants
    }

    fn generate(&self, cx: &mut Ctx<'_>) {
        let (a, b) = if cx.flip() { (self.w2, self.w1) } else { (self.w1, self.w2) };
        extend_rules(cx, self.w, a, b);
    }

    fn accept_finish(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool {
        accept_extension(self.g, next, self.w) && locally_feasible(self.g, next, changed)
    }

    fn accept_restart(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool {
        !changed.contains(&self.w) && locally_feasible(self.g, next, changed)
    }

    fn verify(&self, f: &[Option<SixColor>]) -> bool {
        partial_feasible(self.g, f)
    }
}

fn extend_rules(cx: &mut Ctx<'_>, w: usize, w1: usize, w2: usize) {
    fin!(cx, "T2-Case2.1", [(w, OneA)]);
    if !(cx.is(w1, OneA) && cx.is(w2, OneB)) {
        return;
    }
    if !cx.ones_connected(w1, w2) {
        cx.kempe(line!(), "T2-Kempe", w2);
        return;
    }
    fin!(cx, "T2-Case2.1", [(w, TwoA)]);
    let w4 = cx.nbr_with(w1, TwoA, &[w]);
    if let Some(w4) = w4 {
        fin!(cx, "T2-Case2.1", [(w4, OneB), (w, TwoA)]);
    }
    if cx.adj(w1, w2) {
        if let Some(w4) = w4 {
            fin!(cx, "T2-Case2.1.1", [(w1, TwoA), (w4, OneA), (w, OneA)]);
        }
        fin!(cx, "T2-Case2.1.1", [(w, ThreeA)]);
    } else {
        fin!(cx, "T2-Case2.1.2", [(w1, TwoB), (w, OneA)]);
        if let Some(w4) = w4 {
            fin!(cx, "T2-Case2.1.2", [(w1, TwoA), (w4, OneA), (w, OneA)]);
        }
        fin!(cx, "T2-Case2.1.2", [(w, ThreeA)]);
    }
}

pub const T5_CASES: &[&str] =
    &["T5-Case1", "T5-Case1.1.1", "T5-Case1.1.2.1", "T5-Case1.1.2.2", "T5-Case1.2", "T5-Case2", "T5-Case3"];

pub fn good_color_cubic(g: &Graph) -> Result<Coloring<GoodColor>, ColorError> {
    good_color_cubic_with(g, &LemmaOptions::default(), &mut CaseLog::default())
}

/// Good coloring of a connected cubic graph: color the graph without a
/// non-cut vertex `w`, then repair the few conflicts that `w` creates with
/// the single color 4.
pub fn good_color_cubic_with(
    g: &Graph,
    opts: &LemmaOptions,
    log: &mut CaseLog,
) -> Result<Coloring<GoodColor>, ColorError> {
    good_color_cubic_from(g, opts, log, None)
}

/// Start coloring of the graph with `w` removed, used by the repair step.
/// Arguments are that graph, `w` and the labeled neighbors `w1, w2, w3`.
pub(crate) type StartFn<'a> = &'a dyn Fn(&Graph, usize, [usize; 3]) -> Option<Coloring<SixColor>>;

/// [`good_color_cubic_with`] with the coloring of `G - w` optionally taken
/// from `start` instead of the 2-degenerate colorer.
pub(crate) fn good_color_cubic_from(
    g: &Graph,
    opts: &LemmaOptions,
    log: &mut CaseLog,
    start: Option<StartFn<'_>>,
) -> Result<Coloring<GoodColor>, ColorError> {
    if g.n() < 4 || (0..g.n()).any(|v| g.degree(v) != 3) {
        return Err(ColorError::NotCubic);
    }
    if !g.is_connected() {
        return Err(ColorError::NotConnected);
    }
    let w = g.non_cut_vertex().map_err(|_| ColorError::NotConnected)?;
    let nw = g.neighbors(w).to_vec();
    let inner: Vec<(usize, usize)> =
        [(0, 1), (0, 2), (1, 2)].iter().map(|&(i, j)| (nw[i], nw[j])).filter(|&(a, b)| g.has_edge(a, b)).collect();
    let total = |f: Vec<Option<GoodColor>>| Coloring::new(f.into_iter().map(|c| c.expect("all colored")).collect());

    match inner.len() {
        3 => {
            log.record("T5-Case3");
            let palette = [OneA, OneB, TwoA, TwoB];
            Ok(Coloring::new((0..4).map(|v| GoodColor::Six(palette[v])).collect()))
        }
        2 => {
            log.record("T5-Case2");
            let f = feasible_color_2degenerate_with(&g.without_vertex(w), opts, log)?;
            let mut out: Vec<Option<GoodColor>> = f.iter().map(|c| Some(GoodColor::Six(c))).collect();
            out[w] = Some(GoodColor::Four);
            Ok(total(out))
        }
        k => {
            let (w1, w2, w3) = match k {
                1 => {
                    let (a, b) = inner[0];
                    (nw.iter().copied().find(|&x| x != a && x != b).expect("three neighbors"), a, b)
                }
                _ => (nw[0], nw[1], nw[2]),
            };
            let f = cubic_case1(g, w, [w1, w2, w3], opts, log, start)?;
            Ok(total(f))
        }
    }
}

type Candidate = (&'static str, Vec<Option<SixColor>>, Vec<(usize, GoodColor)>);

struct Repair<'a> {
    g: &'a Graph,
    near: Vec<usize>,
    w: usize,
    candidates: Vec<Candidate>,
}

impl Repair<'_> {
    fn push(&mut self, case: &'static str, base: &[Option<SixColor>], changes: &[(usize, GoodColor)]) {
        self.candidates.push((case, base.to_vec(), changes.to_vec()));
    }

    /// `base` is feasible on `G - w`, so only vertices near `w` and the
    /// recolored ones need checking in `G`.
    fn first_valid(&self, log: &mut CaseLog) -> Option<Vec<Option<GoodColor>>> {
        for (case, base, changes) in &self.candidates {
            let mut next: Vec<Option<GoodColor>> = base.iter().map(|c| c.map(GoodColor::Six)).collect();
            for &(v, c) in changes {
                next[v] = Some(c);
            }
            if next[self.w].is_none() || next.iter().filter(|c| **c == Some(GoodColor::Four)).count() > 1 {
                continue;
            }
            let mut check = self.near.clone();
            check.extend(changes.iter().map(|c| c.0));
            if locally_feasible(self.g, &next, &check) {
                log.record(case);
                return Some(next);
            }
        }
        None
    }

    fn dump(&self) -> String {
        let mut s = String::new();
        for (case, _, changes) in &self.candidates {
            let ch: Vec<String> = changes.iter().map(|(v, c)| format!("{v}->{c}")).collect();
            let _ = writeln!(s, "{case} rejected finish [{}]", ch.join(" "));
        }
        s
    }
}

/// Same-class pairs of `f` (restricted to `G - w`) that are too close in `G`.
fn conflicts_in(g: &Graph, f: &[Option<SixColor>], w: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &x in g.neighbors(w) {
        let Some(c) = f[x] else { continue };
        g.for_each_within(x, c.level() as u32, |y, _| {
            if y != x && y != w && f[y] == Some(c) {
                out.push((x.min(y), x.max(y)));
            }
        });
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn cubic_case1(
    g: &Graph,
    w: usize,
    [w1, w2, w3]: [usize; 3],
    opts: &LemmaOptions,
    log: &mut CaseLog,
    start: Option<StartFn<'_>>,
) -> Result<Vec<Option<GoodColor>>, ColorError> {
    let mut gp_edges: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| a != w && b != w).collect();
    if !g.has_edge(w2, w3) {
        gp_edges.push((w2.min(w3), w2.max(w3)));
    }
    let gp = Graph::new(g.n(), &gp_edges).expect("w2w3 was not an edge");
    let gw = g.without_vertex(w);
    let base = match start.and_then(|st| st(&gp, w, [w1, w2, w3])) {
        Some(c) => c,
        None => feasible_color_2degenerate_with(&gp, opts, log)?,
    };
    let mut f: Vec<Option<SixColor>> = base.iter().map(Some).collect();
    f[w] = None;
    if f[w1].is_some_and(|c| c.is_three()) {
        let out = lemma_c2_partial(&gp, &f, w1, opts)?;
        log.lemma(&out);
        f = out.coloring;
    }
    let mut near = Vec::new();
    g.for_each_within(w, 3, |x, _| near.push(x));
    let mut rep = Repair { g, near, w, candidates: Vec::new() };
    let four = GoodColor::Four;
    let six = GoodColor::Six;
    rep.push("T5-Case1", &f, &[(w, four)]);

    let pair_in = |x: usize| [w2, w3].contains(&x);
    if f[w1].is_some_and(|c| c.level() == 2) {
        // Move w1 to level 1 when its neighbors leave room, and fall into
        // the level-1 branch.
        let ones: Vec<SixColor> =
            [OneA, OneB].into_iter().filter(|&c| gp.neighbors(w1).iter().all(|&y| f[y] != Some(c))).collect();
        if let Some(&c) = ones.first() {
            f[w1] = Some(c);
            rep.push("T5-Case1.2", &f, &[(w, four)]);
        } else {
            for &y in &[w2, w3] {
                if f[y] == f[w1] {
                    for a in [OneA, OneB] {
                        rep.push("T5-Case1.2", &f, &[(w1, four), (w, six(a))]);
                    }
                }
            }
        }
    }

    if f[w1].is_some_and(|c| c.is_one()) {
        let conflicts = conflicts_in(g, &f, w);
        let oriented: Vec<(usize, usize)> = conflicts
            .iter()
            .map(|&(x, y)| if pair_in(y) { (x, y) } else { (y, x) })
            .filter(|&(x, y)| pair_in(y) && !pair_in(x))
            .collect();
        let one_of = |c: SixColor| if c == OneA { OneB } else { OneA };
        match oriented[..] {
            [(p, q)] => {
                let r = if q == w2 { w3 } else { w2 };
                let alpha = f[w1].expect("colored");
                for x in [OneA, OneB] {
                    rep.push("T5-Case1.1.1", &f, &[(q, six(x)), (w, four)]);
                }
                rep.push("T5-Case1.1.1", &f, &[(p, four), (w, six(one_of(alpha)))]);
                for a in [OneA, OneB] {
                    rep.push("T5-Case1.1.1", &f, &[(w1, six(a)), (r, six(a)), (p, four), (w, six(one_of(a)))]);
                }
                for c in [TwoA, TwoB] {
                    rep.push("T5-Case1.1.1", &f, &[(p, four), (w, six(c))]);
                }
            }
            [(p1, q1), (p2, q2)] => {
                for (pa, qa, pb, qb) in [(p1, q1, p2, q2), (p2, q2, p1, q1)] {
                    cubic_case112(&mut rep, &gw, &f, w, w1, (pa, qa), (pb, qb), opts, log)?;
                }
            }
            _ => {}
        }
    }

    rep.first_valid(log).ok_or_else(|| {
        let dump = engine::dump(g, &f, &[w, w1, w2, w3], &[]) + &rep.dump();
        ColorError::InternalCaseExhaustion { context: "cubic repair".into(), dump }
    })
}

/// Two conflicts `(p, q)` and `(pb, qb)`: clear level 3 off `q` in `G - w`
/// and give `qb` the color 4.
#[allow(clippy::too_many_arguments)]
fn cubic_case112(
    rep: &mut Repair<'_>,
    gw: &Graph,
    f: &[Option<SixColor>],
    w: usize,
    w1: usize,
    (p, q): (usize, usize),
    (pb, qb): (usize, usize),
    opts: &LemmaOptions,
    log: &mut CaseLog,
) -> Result<(), ColorError> {
    let four = GoodColor::Four;
    let six = GoodColor::Six;
    let out = lemma_c2_partial(gw, f, q, opts)?;
    log.lemma(&out);
    let g2 = out.coloring;
    let gamma = g2[q].expect("colored");
    let ones = [OneA, OneB];
    let p_changed = g2[p] != f[p];
    let pb_changed = g2[pb] != f[pb];
    if !p_changed && !pb_changed {
        for b in ones.into_iter().filter(|&b| b != gamma) {
            for a in ones.into_iter().filter(|&a| a != b) {
                rep.push("T5-Case1.1.2.1", &g2, &[(qb, four), (w, six(b)), (w1, six(a))]);
            }
        }
    }
    for a in ones {
        for m in ones.into_iter().filter(|&m| m != a) {
            rep.push("T5-Case1.1.2.2", &g2, &[(w1, six(a)), (w, six(m)), (qb, four)]);
            for d in ones {
                rep.push("T5-Case1.1.2.2", &g2, &[(q, six(d)), (w1, six(a)), (w, six(m)), (qb, four)]);
            }
        }
    }
    for m in ones {
        rep.push("T5-Case1.1.2.2", &g2, &[(qb, six(m)), (w, four)]);
        rep.push("T5-Case1.1.2.2", f, &[(qb, six(m)), (w, four)]);
    }
    for a in ones {
        for l in [TwoA, TwoB] {
            rep.push("T5-Case1.1.2.2", &g2, &[(w1, six(a)), (qb, four), (w, six(l))]);
        }
    }
    rep.push("T5-Case1.1.2.2", &g2, &[(w, four)]);
    Ok(())
}

pub fn color_connected_subcubic(g: &Graph) -> Result<Coloring<GoodColor>, ColorError> {
    color_connected_subcubic_with(g, &LemmaOptions::default(), &mut CaseLog::default())
}

/// Cubic graphs get a good coloring; all other connected subcubic graphs
/// are 2-degenerate and get a feasible coloring without color 4.
pub fn color_connected_subcubic_with(
    g: &Graph,
    opts: &LemmaOptions,
    log: &mut CaseLog,
) -> Result<Coloring<GoodColor>, ColorError> {
    check_subcubic(g)?;
    if !g.is_connected() {
        return Err(ColorError::NotConnected);
    }
    if g.n() > 0 && (0..g.n()).all(|v| g.degree(v) == 3) {
        return good_color_cubic_with(g, opts, log);
    }
    Ok(feasible_color_2degenerate_with(g, opts, log)?.map(GoodColor::Six))
}

/// Packing color of an original vertex; subdivision vertices get 1.
pub fn lift_color(c: GoodColor) -> u32 {
    match c {
        GoodColor::Six(s) => 2 + s.index() as u32,
        GoodColor::Four => 8,
    }
}

/// Subdivides `g` and colors it: subdivision vertices 1, original vertices
/// by [`lift_color`]. A class at separation `s` in `g` is at distance at
/// least `2s + 2` in the subdivision, which suffices for packing color
/// `2s + 1` or lower.
pub fn lift_to_subdivision(g: &Graph, f: &Coloring<GoodColor>) -> Result<Packing, ColorError> {
    let report = verify_good(g, f).map_err(|e| ColorError::InvalidInputColoring(e.to_string()))?;
    if !report.is_valid() {
        let msg = match report.conflicts.first() {
            Some(c) => format!("{} conflicts, first {:?}", report.conflicts.len(), c),
            None => format!("color 4 used {} times", report.four_count),
        };
        return Err(ColorError::InvalidInputColoring(msg));
    }
    let subdivision = g.subdivide();
    let colors = (0..subdivision.dgraph.n()).map(|v| if v < g.n() { lift_color(f[v]) } else { 1 }).collect();
    Ok(Packing { subdivision, coloring: Coloring::new(colors) })
}

/// The full pipeline for a connected subcubic graph: at most 8 colors with
/// color 8 used at most once, and at most 7 colors unless `g` is cubic.
pub fn pack_subdivision(g: &Graph) -> Result<Packing, ColorError> {
    let f = color_connected_subcubic(g)?;
    lift_to_subdivision(g, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify_feasible, verify_packing};
    use crate::gen;

    #[test]
    fn small_two_degenerate_graphs() {
        let single = Graph::empty(1);
        assert_eq!(feasible_color_2degenerate(&single).unwrap().as_slice(), &[OneA]);
        let p2 = gen::path(2);
        let f = feasible_color_2degenerate(&p2).unwrap();
        assert!(verify_feasible(&p2, &f).unwrap().is_empty());
        for g in [gen::cycle(6), gen::cycle(5), gen::path(9), Graph::empty(3)] {
            let f = feasible_color_2degenerate(&g).unwrap();
            assert!(verify_feasible(&g, &f).unwrap().is_empty());
        }
    }

    #[test]
    fn rejects_wrong_inputs() {
        let k5 = gen::complete(5);
        assert!(matches!(feasible_color_2degenerate(&k5), Err(ColorError::NotSubcubic { .. })));
        let k4 = gen::complete(4);
        assert!(matches!(feasible_color_2degenerate(&k4), Err(ColorError::NotTwoDegenerate(_))));
        assert_eq!(good_color_cubic(&gen::cycle(5)).unwrap_err(), ColorError::NotCubic);
        let two_k4 =
            Graph::new(8, &k4.edges().chain(k4.edges().map(|(a, b)| (a + 4, b + 4))).collect::<Vec<_>>()).unwrap();
        assert_eq!(good_color_cubic(&two_k4).unwrap_err(), ColorError::NotConnected);
        assert_eq!(color_connected_subcubic(&Graph::empty(2)).unwrap_err(), ColorError::NotConnected);
    }

    #[test]
    fn k4_gets_four_distinct_colors() {
        let f = good_color_cubic(&gen::complete(4)).unwrap();
        let six: Vec<_> = f.iter().map(|c| c.six().unwrap()).collect();
        assert_eq!(six, vec![OneA, OneB, TwoA, TwoB]);
    }

    #[test]
    fn lift_examples() {
        let p2 = gen::path(2);
        let f = Coloring::new(vec![GoodColor::Six(OneA), GoodColor::Six(OneB)]);
        let p = lift_to_subdivision(&p2, &f).unwrap();
        assert_eq!(p.coloring.as_slice(), &[2, 3, 1]);
        let bad = Coloring::new(vec![GoodColor::Six(OneA), GoodColor::Six(OneA)]);
        assert!(matches!(lift_to_subdivision(&p2, &bad), Err(ColorError::InvalidInputColoring(_))));

        let k4 = gen::complete(4);
        let p = pack_subdivision(&k4).unwrap();
        assert!(verify_packing(&p.subdivision.dgraph, &p.coloring).unwrap().is_empty());
        let mut used: Vec<u32> = p.coloring.iter().collect();
        used.sort_unstable();
        used.dedup();
        assert_eq!(used, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn petersen_and_c5_pack() {
        let p = pack_subdivision(&gen::petersen()).unwrap();
        assert!(verify_packing(&p.subdivision.dgraph, &p.coloring).unwrap().is_empty());
        assert!(p.coloring.iter().max().unwrap() <= 8);
        assert!(p.coloring.iter().filter(|&c| c == 8).count() <= 1);
        let p = pack_subdivision(&gen::cycle(5)).unwrap();
        assert_eq!(p.subdivision.dgraph.n(), 10);
        assert!(p.coloring.iter().max().unwrap() <= 7);
        assert!(verify_packing(&p.subdivision.dgraph, &p.coloring).unwrap().is_empty());
    }
}
