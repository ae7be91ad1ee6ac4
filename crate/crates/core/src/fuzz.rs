//! Randomized campaigns: lemma instances with planted local configurations
//! deepened by hill climbing, and end-to-end runs of the coloring pipeline.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::colorer::{color_connected_subcubic_with, feasible_color_2degenerate_with, lift_to_subdivision, CaseLog};
use crate::coloring::SixColor::{self, *};
use crate::coloring::{free_color_at, partial_feasible, verify_good, verify_packing, Coloring, GoodColor};
use crate::gen::{random_2degenerate_subcubic, random_cubic, random_feasible_coloring};
use crate::graph::Graph;
use crate::lemmas::{
    apply_lemma_c1, apply_lemma_c2, check_clauses, C1Outcome, LemmaError, LemmaOptions, LemmaOutcome, C1_CASES,
    C2_CASES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaKind {
    /// Two 2-vertices sharing a level-2 color.
    Pair,
    /// A 2-vertex at level 3.
    Three,
}

impl LemmaKind {
    pub fn cases(self) -> &'static [&'static str] {
        match self {
            LemmaKind::Pair => C1_CASES,
            LemmaKind::Three => C2_CASES,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LemmaInstance {
    pub graph: Graph,
    pub coloring: Coloring<SixColor>,
    pub u: usize,
    /// Second target for [`LemmaKind::Pair`].
    pub v: Option<usize>,
}

impl LemmaInstance {
    pub fn run(&self) -> Result<LemmaOutcome, LemmaError> {
        match self.v {
            Some(v) => apply_lemma_c1(&self.graph, &self.coloring, self.u, v),
            None => apply_lemma_c2(&self.graph, &self.coloring, self.u),
        }
    }

    fn targets(&self) -> Vec<usize> {
        std::iter::once(self.u).chain(self.v).collect()
    }
}

/// A planted configuration: entry `i` is role `i + roots`, a neighbor of role
/// `parent` (distinct from every other role) colored `color`.
type Pattern = &'static [(usize, SixColor)];

const THREE_PATTERNS: &[Pattern] = &[
    &[(0, OneA), (0, OneB)],
    &[(0, OneA), (0, OneB), (1, TwoA), (1, OneB), (2, OneA), (2, TwoB)],
    &[(0, OneA), (0, OneB), (1, TwoA), (1, OneB), (2, OneA), (2, TwoB), (3, OneB), (3, TwoB), (4, OneA), (4, TwoA)],
    &[(0, OneA), (0, OneB), (1, TwoA), (1, OneB), (2, OneA), (2, TwoB), (3, OneB), (3, OneA), (4, OneA), (4, TwoB)],
    &[
        (0, OneA),
        (0, OneB),
        (1, TwoA),
        (1, OneB),
        (2, OneA),
        (2, TwoB),
        (3, OneB),
        (3, OneA),
        (4, OneA),
        (4, TwoB),
        (8, OneB),
        (8, TwoB),
        (7, OneA),
        (7, ThreeA),
    ],
    &[
        (0, OneA),
        (0, OneB),
        (1, TwoA),
        (1, OneB),
        (2, OneA),
        (2, TwoB),
        (3, OneB),
        (3, OneA),
        (4, OneA),
        (4, TwoB),
        (8, OneB),
        (8, ThreeA),
        (7, OneA),
        (7, TwoB),
    ],
    &[
        (0, OneA),
        (0, OneB),
        (1, TwoA),
        (1, OneB),
        (2, OneA),
        (2, TwoB),
        (3, OneB),
        (3, OneA),
        (4, OneA),
        (4, TwoB),
        (8, OneB),
        (8, TwoB),
        (7, OneA),
        (7, ThreeA),
        (13, OneB),
        (14, OneA),
    ],
];

const PAIR_PATTERNS: &[Pattern] = &[
    &[(0, OneA), (0, OneB), (1, OneA), (1, OneB)],
    &[(0, OneA), (0, OneB), (1, OneA), (1, OneB), (2, TwoB)],
    &[(0, OneA), (0, OneB), (1, OneA), (1, OneB), (2, TwoB), (6, TwoA)],
    &[(0, OneA), (0, OneB), (1, OneA), (1, OneB), (2, OneB), (2, TwoB), (3, OneA)],
    &[(0, OneA), (0, OneB), (1, OneA), (1, OneB), (2, OneB), (2, TwoB), (3, OneA), (3, TwoB)],
];

fn sample_graph(rng: &mut ChaCha8Rng) -> Graph {
    if rng.gen_bool(0.3) {
        let n = rng.gen_range(6..=40);
        return random_2degenerate_subcubic(n, rng.gen());
    }
    let n = 2 * rng.gen_range(4..=13);
    let g = random_cubic(n, rng.gen()).expect("even n >= 8 always samples");
    let mut edges: Vec<_> = g.edges().collect();
    edges.shuffle(rng);
    let drop = rng.gen_range(1..=3);
    Graph::new(n, &edges[drop..]).expect("subgraph of a simple graph")
}

fn relabel(c: SixColor, swap: [bool; 3]) -> SixColor {
    if swap[c.level() as usize - 1] {
        c.partner()
    } else {
        c
    }
}

/// Assigns pattern roles to vertices. Fails when some role has no free
/// neighbor to take.
fn plant(
    g: &Graph,
    rng: &mut ChaCha8Rng,
    roots: &[(usize, SixColor)],
    pattern: Pattern,
    swap: [bool; 3],
) -> Option<Vec<(usize, SixColor)>> {
    let mut roles: Vec<(usize, SixColor)> = roots.to_vec();
    for &(parent, c) in pattern {
        let p = roles.get(parent)?.0;
        let free: Vec<usize> = g.neighbors(p).iter().copied().filter(|x| roles.iter().all(|r| r.0 != *x)).collect();
        let &x = free.choose(rng)?;
        roles.push((x, relabel(c, swap)));
    }
    Some(roles)
}

/// Extends `fixed` by a path of alternating `1a`/`1b` vertices joining the
/// level-1 vertices `a` and `b` without passing through `avoid`.
fn bridge(g: &Graph, fixed: &mut Vec<(usize, SixColor)>, a: usize, b: usize, avoid: usize) -> Option<()> {
    let color_of = |fixed: &[(usize, SixColor)], x: usize| fixed.iter().find(|r| r.0 == x).map(|r| r.1);
    let start = color_of(fixed, a)?;
    let goal = color_of(fixed, b)?;
    let key = |x: usize, c: SixColor| 2 * x + (c == OneB) as usize;
    let mut prev = vec![usize::MAX; 2 * g.n()];
    prev[key(a, start)] = key(a, start);
    let mut queue = std::collections::VecDeque::from([(a, start)]);
    while let Some((x, c)) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            let cy = c.partner();
            if y == avoid || prev[key(y, cy)] != usize::MAX {
                continue;
            }
            match color_of(fixed, y) {
                Some(f) if f != cy => continue,
                Some(_) if y != b => continue,
                _ => {}
            }
            prev[key(y, cy)] = key(x, c);
            queue.push_back((y, cy));
        }
    }
    let mut k = key(b, goal);
    if prev[k] == usize::MAX {
        return None;
    }
    let mut path = Vec::new();
    while prev[k] != k {
        k = prev[k];
        path.push((k / 2, if k % 2 == 1 { OneB } else { OneA }));
    }
    path.retain(|&(x, _)| x != a);
    let mut seen: Vec<usize> = path.iter().map(|p| p.0).collect();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != path.len() {
        return None;
    }
    fixed.extend(path);
    Some(())
}

/// Samples an instance satisfying the lemma preconditions. The local
/// configuration around the targets is planted from a random pattern, the
/// rest is colored greedily.
pub fn sample_lemma_instance(kind: LemmaKind, seed: u64) -> Option<LemmaInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = sample_graph(&mut rng);
    let twos: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    let patterns = match kind {
        LemmaKind::Pair => PAIR_PATTERNS,
        LemmaKind::Three => THREE_PATTERNS,
    };
    let pattern = patterns.choose(&mut rng).expect("pattern lists are nonempty");
    for _ in 0..PLANT_ATTEMPTS {
        if let Some(inst) = try_plant(kind, &g, &twos, pattern, &mut rng) {
            return Some(inst);
        }
    }
    None
}

const PLANT_ATTEMPTS: usize = 40;

fn try_plant(
    kind: LemmaKind,
    g: &Graph,
    twos: &[usize],
    pattern: Pattern,
    rng: &mut ChaCha8Rng,
) -> Option<LemmaInstance> {
    let &u = twos.choose(rng)?;
    let swap = [rng.gen(), rng.gen(), rng.gen()];
    let (roots, v) = match kind {
        LemmaKind::Three => (vec![(u, relabel(ThreeA, swap))], None),
        LemmaKind::Pair => {
            let far: Vec<usize> =
                twos.iter().copied().filter(|&x| g.distance(u, x).ok().flatten().is_none_or(|d| d >= 3)).collect();
            let &v = far.choose(rng)?;
            let c = relabel(TwoA, swap);
            let roots = if rng.gen() { vec![(u, c), (v, c)] } else { vec![(v, c), (u, c)] };
            (roots, Some(v))
        }
    };
    let mut fixed = plant(g, rng, &roots, pattern, swap)?;
    if fixed.len() > roots.len() + 1 && rng.gen_bool(0.8) {
        let (r, u1, u2) = (roots[0].0, fixed[roots.len()].0, fixed[roots.len() + 1].0);
        bridge(g, &mut fixed, u1, u2, r)?;
    }
    let coloring = random_feasible_coloring(g, rng.gen(), u, &fixed)?;
    Some(LemmaInstance { graph: g.clone(), coloring, u, v })
}

fn depth(res: &Result<LemmaOutcome, LemmaError>) -> usize {
    match res {
        Ok(o) => 16 * (o.rule_rank + o.rule_reach) as usize + o.restarts.len().min(15),
        Err(_) => usize::MAX,
    }
}

/// Hill climbing on the coloring away from the targets, keeping moves that
/// do not make the fired case shallower. Stops early on an error.
pub fn deepen(inst: LemmaInstance, steps: usize, seed: u64) -> (LemmaInstance, Result<LemmaOutcome, LemmaError>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_c0de);
    let targets = inst.targets();
    let near = inst.graph.ball(inst.u, 6).expect("target in range");
    let mut best = inst;
    let mut res = best.run();
    let mut d = depth(&res);
    for _ in 0..steps {
        if res.is_err() {
            break;
        }
        let x = if rng.gen_bool(0.8) { near[rng.gen_range(0..near.len())] } else { rng.gen_range(0..best.graph.n()) };
        if targets.contains(&x) {
            continue;
        }
        let Some(cand) = kick(&best, x, &targets, &mut rng) else { continue };
        let r = cand.run();
        let dd = depth(&r);
        if dd >= d {
            best = cand;
            res = r;
            d = dd;
        }
    }
    (best, res)
}

/// Forces a random new color on `x` and recolors the vertices it then
/// conflicts with from their free colors.
fn kick(inst: &LemmaInstance, x: usize, targets: &[usize], rng: &mut ChaCha8Rng) -> Option<LemmaInstance> {
    let g = &inst.graph;
    let old = inst.coloring[x];
    let others: Vec<SixColor> = SixColor::ALL.into_iter().filter(|&c| c != old).collect();
    let c = *others.choose(rng)?;
    let mut part: Vec<Option<SixColor>> = inst.coloring.iter().map(Some).collect();
    part[x] = Some(c);
    let mut displaced = Vec::new();
    g.for_each_within(x, c.level() as u32, |y, d| {
        if d > 0 && part[y] == Some(c) {
            displaced.push(y);
        }
    });
    if displaced.iter().any(|y| targets.contains(y)) {
        return None;
    }
    for &y in &displaced {
        part[y] = None;
    }
    displaced.shuffle(rng);
    for &y in &displaced {
        part[y] = Some(*free_color_at(g, &part, y, &SixColor::ALL).choose(rng)?);
    }
    let mut out = inst.clone();
    out.coloring = Coloring::new(part.into_iter().map(|c| c.expect("all recolored")).collect());
    Some(out)
}

/// Postcondition of a lemma outcome, checked from scratch against the input.
pub fn check_lemma_outcome(inst: &LemmaInstance, out: &LemmaOutcome) -> Result<(), String> {
    let g = &inst.graph;
    let next: Vec<Option<SixColor>> = out.coloring.iter().map(Some).collect();
    if !partial_feasible(g, &next) {
        return Err("result is not feasible".into());
    }
    match inst.v {
        Some(v) => {
            let common = inst.coloring[inst.u];
            let (cu, cv) = (out.coloring[inst.u], out.coloring[v]);
            let ones = |x: usize| {
                let mut cs: Vec<SixColor> = g.neighbors(x).iter().map(|&y| out.coloring[y]).collect();
                cs.sort();
                cs == [OneA, OneB]
            };
            let one_keeps = |pred: &dyn Fn(SixColor) -> bool| (cu == common && pred(cv)) || (cv == common && pred(cu));
            let a = one_keeps(&|c| c.is_one());
            let b = one_keeps(&|c| c == common.partner());
            let c = one_keeps(&|c| c.is_three()) && ones(inst.u) && ones(v);
            let expected = match (a, b, c) {
                (true, false, false) => C1Outcome::A,
                (false, true, false) => C1Outcome::B,
                (false, false, true) => C1Outcome::C,
                _ => return Err(format!("outcome flags A={a} B={b} C={c}")),
            };
            if out.c1_outcome != Some(expected) {
                return Err(format!("reported {:?}, observed {expected:?}", out.c1_outcome));
            }
        }
        None => {
            let orig: Vec<Option<SixColor>> = inst.coloring.iter().map(Some).collect();
            check_clauses(g, &orig, &next, inst.u, true).map_err(|e| format!("clause violated: {e:?}"))?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub instances: usize,
    pub stuck: usize,
    pub invalid: usize,
    /// How often each case label fired, restarts included.
    pub coverage: BTreeMap<&'static str, usize>,
    /// Repro dumps and messages of the first failures.
    pub failures: Vec<String>,
}

const KEPT_FAILURES: usize = 5;

/// Runs `count` sampled and deepened instances in parallel. Results are
/// aggregated in seed order, so the report depends only on the arguments.
pub fn lemma_campaign(kind: LemmaKind, count: usize, seed: u64, steps: usize) -> LemmaReport {
    type Run = (u64, Result<Vec<&'static str>, String>, bool);
    let results: Vec<Run> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i);
            let inst = loop {
                if let Some(inst) = sample_lemma_instance(kind, s) {
                    break inst;
                }
                s = s.wrapping_add(1 << 40);
            };
            let (inst, res) = deepen(inst, steps, s);
            match res {
                Ok(out) => match check_lemma_outcome(&inst, &out) {
                    Ok(()) => {
                        let mut labels = out.restarts.clone();
                        labels.push(out.case_label);
                        (s, Ok(labels), false)
                    }
                    Err(e) => (s, Err(e), false),
                },
                Err(LemmaError::NoCaseApplies { dump }) => (s, Err(dump), true),
                Err(e) => (s, Err(e.to_string()), false),
            }
        })
        .collect();
    let mut report = LemmaReport { instances: count, ..Default::default() };
    for (s, r, stuck) in results {
        match r {
            Ok(labels) => {
                for l in labels {
                    *report.coverage.entry(l).or_default() += 1;
                }
            }
            Err(msg) => {
                if stuck {
                    report.stuck += 1;
                } else {
                    report.invalid += 1;
                }
                if report.failures.len() < KEPT_FAILURES {
                    report.failures.push(format!("seed {s}\n{msg}"));
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cubic,
    TwoDegenerate,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cubic" => Ok(Family::Cubic),
            "2deg" | "2-degenerate" => Ok(Family::TwoDegenerate),
            _ => Err(format!("unknown family {s:?}; expected cubic or 2deg")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PipelineReport {
    pub instances: usize,
    pub failed: usize,
    pub coverage: BTreeMap<&'static str, usize>,
    pub failures: Vec<String>,
}

/// Graph of the pipeline campaign for instance seed `s`. Cubic graphs need
/// an even order, so odd orders are rounded up.
pub fn pipeline_graph(family: Family, n_range: (usize, usize), s: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let n = rng.gen_range(n_range.0..=n_range.1.max(n_range.0));
    match family {
        Family::Cubic => {
            let n = (n.max(4) + 1) & !1;
            random_cubic(n, rng.gen()).expect("even order at least 4")
        }
        Family::TwoDegenerate => random_2degenerate_subcubic(n.max(1), rng.gen()),
    }
}

/// Colors one graph, checks the good coloring, and for connected graphs
/// also checks the lifted packing coloring.
pub fn check_pipeline(g: &Graph, opts: &LemmaOptions, log: &mut CaseLog) -> Result<(), String> {
    let f = if g.is_connected() {
        color_connected_subcubic_with(g, opts, log).map_err(|e| e.to_string())?
    } else {
        feasible_color_2degenerate_with(g, opts, log).map_err(|e| e.to_string())?.map(GoodColor::Six)
    };
    let report = verify_good(g, &f).map_err(|e| e.to_string())?;
    if !report.is_valid() {
        return Err(format!("invalid good coloring: {:?}", report.conflicts.first()));
    }
    if g.is_connected() {
        let p = lift_to_subdivision(g, &f).map_err(|e| e.to_string())?;
        let bad = verify_packing(&p.subdivision.dgraph, &p.coloring).map_err(|e| e.to_string())?;
        if let Some(c) = bad.first() {
            return Err(format!("invalid packing coloring: {c}"));
        }
    }
    Ok(())
}

/// Runs the pipeline on `count` random graphs of `family` with orders in
/// `n_range`. Deterministic in its arguments.
pub fn pipeline_campaign(
    family: Family,
    n_range: (usize, usize),
    count: usize,
    seed: u64,
    opts: &LemmaOptions,
) -> PipelineReport {
    let results: Vec<(u64, CaseLog, Result<(), String>)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i);
            let g = pipeline_graph(family, n_range, s);
            let mut log = CaseLog::default();
            let r = check_pipeline(&g, opts, &mut log).map_err(|e| format!("{}{e}", crate::io::write_edge_list(&g)));
            (s, log, r)
        })
        .collect();
    let mut report = PipelineReport { instances: count, ..Default::default() };
    let mut all = CaseLog::default();
    for (s, log, r) in results {
        all.merge(&log);
        if let Err(msg) = r {
            report.failed += 1;
            if report.failures.len() < KEPT_FAILURES {
                report.failures.push(format!("seed {s}\n{msg}"));
            }
        }
    }
    report.coverage = all.counts;
    report
}

/// Cubic repair campaign: the coloring of `G - w` is a greedy coloring with
/// planted level-3 conflicts around `w` instead of the 2-degenerate
/// colorer's output, which rarely produces them.
pub fn cubic_repair_campaign(n_range: (usize, usize), count: usize, seed: u64, opts: &LemmaOptions) -> PipelineReport {
    let results: Vec<(u64, CaseLog, Result<(), String>)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i);
            let g = pipeline_graph(Family::Cubic, n_range, s);
            let start = |gp: &Graph, _w: usize, [w1, w2, w3]: [usize; 3]| planted_start(gp, [w1, w2, w3], s);
            let mut log = CaseLog::default();
            let r = crate::colorer::good_color_cubic_from(&g, opts, &mut log, Some(&start))
                .map_err(|e| e.to_string())
                .and_then(|f| {
                    let rep = verify_good(&g, &f).map_err(|e| e.to_string())?;
                    if rep.is_valid() {
                        Ok(())
                    } else {
                        Err(format!("invalid good coloring: {:?} four {}", rep.conflicts.first(), rep.four_count))
                    }
                })
                .map_err(|e| format!("{}{e}", crate::io::write_edge_list(&g)));
            (s, log, r)
        })
        .collect();
    let mut report = PipelineReport { instances: count, ..Default::default() };
    let mut all = CaseLog::default();
    for (s, log, r) in results {
        all.merge(&log);
        if let Err(msg) = r {
            report.failed += 1;
            if report.failures.len() < KEPT_FAILURES {
                report.failures.push(format!("seed {s}\n{msg}"));
            }
        }
    }
    report.coverage = all.counts;
    report
}

/// Greedy coloring of `gp` with one of a few random configurations forced
/// on `w1`, its two other neighbors, and `w2`, `w3`.
fn planted_start(gp: &Graph, [w1, w2, w3]: [usize; 3], s: u64) -> Option<Coloring<SixColor>> {
    let mut rng = ChaCha8Rng::seed_from_u64(s ^ 0x5eed);
    let outer: Vec<usize> = gp.neighbors(w1).to_vec();
    let (w4, w5) = (*outer.first()?, *outer.get(1)?);
    let one = *[OneA, OneB].choose(&mut rng)?;
    let (q, r) = if rng.gen_bool(0.5) { (w2, w3) } else { (w3, w2) };
    let (p, pb) = if rng.gen_bool(0.5) { (w4, w5) } else { (w5, w4) };
    let three = *[ThreeA, ThreeB].choose(&mut rng)?;
    let fixed: Vec<(usize, SixColor)> = match rng.gen_range(0..5) {
        0 => vec![(w1, one), (p, three), (q, three)],
        1 => vec![(w1, one), (p, three), (q, three), (pb, three.partner()), (r, three.partner())],
        2 => vec![(w1, TwoA), (w4, OneA), (w5, OneB), (q, TwoA)],
        3 => vec![(w1, three)],
        _ => vec![],
    };
    for attempt in 0..8 {
        if let Some(c) = random_feasible_coloring(gp, rng.gen::<u64>() ^ attempt, w1, &fixed) {
            return Some(c);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_instances_meet_preconditions() {
        for kind in [LemmaKind::Pair, LemmaKind::Three] {
            let mut found = 0;
            for seed in 0..200 {
                let Some(inst) = sample_lemma_instance(kind, seed) else { continue };
                found += 1;
                let part: Vec<_> = inst.coloring.iter().map(Some).collect();
                assert!(partial_feasible(&inst.graph, &part));
                assert_eq!(inst.graph.degree(inst.u), 2);
                match kind {
                    LemmaKind::Three => assert!(inst.coloring[inst.u].is_three()),
                    LemmaKind::Pair => {
                        let v = inst.v.unwrap();
                        assert_eq!(inst.coloring[inst.u], inst.coloring[v]);
                        assert_eq!(inst.coloring[v].level(), 2);
                    }
                }
            }
            assert!(found > 50, "{kind:?}: {found}");
        }
    }

    #[test]
    fn small_campaign_is_deterministic() {
        let a = lemma_campaign(LemmaKind::Three, 40, 3, 10);
        let b = lemma_campaign(LemmaKind::Three, 40, 3, 10);
        assert_eq!(a, b);
        assert_eq!(a.stuck + a.invalid, 0, "{:?}", a.failures);
    }

    #[test]
    fn small_pipeline_campaigns_pass() {
        let opts = LemmaOptions::default();
        for family in [Family::Cubic, Family::TwoDegenerate] {
            let r = pipeline_campaign(family, (4, 30), 60, 5, &opts);
            assert_eq!(r.failed, 0, "{:?}", r.failures);
            assert_eq!(r, pipeline_campaign(family, (4, 30), 60, 5, &opts));
        }
    }

    #[test]
    fn small_repair_campaign_passes() {
        let r = cubic_repair_campaign((4, 24), 80, 2, &LemmaOptions::default());
        assert_eq!(r.failed, 0, "{:?}", r.failures);
    }
}
