mod common;

use rayon::prelude::*;

use subcubic_packing::coloring::{Coloring, SixColor};
use subcubic_packing::fuzz::{deepen, sample_lemma_instance, LemmaInstance, LemmaKind};
use subcubic_packing::gen::random_cubic;
use subcubic_packing::graph::Graph;
use subcubic_packing::lemmas::{apply_lemma_c1, apply_lemma_c2, LemmaOutcome};

const SAMPLES: u64 = 3000;
const MAX_FINAL_REWRITE: usize = 5;

fn names(c: &Coloring<SixColor>) -> Vec<String> {
    c.iter().map(|x| x.to_string()).collect()
}

fn instances(kind: LemmaKind) -> Vec<(LemmaInstance, LemmaOutcome)> {
    (0..SAMPLES)
        .into_par_iter()
        .filter_map(|s| {
            let inst = sample_lemma_instance(kind, s)?;
            let (inst, res) = deepen(inst, 20, s);
            Some((inst, res.unwrap_or_else(|e| panic!("seed {s}: {e}"))))
        })
        .collect()
}

/// Every change is explained by the trace, every direct rewrite stays near
/// the targets, and only component swaps reach further.
fn check_trace(inst: &LemmaInstance, out: &LemmaOutcome) {
    let adj = common::adjacency(&inst.graph);
    let du = common::bfs(&adj, inst.u);
    let dv = inst.v.map(|v| common::bfs(&adj, v));
    let near = |x: usize| du[x].is_some_and(|d| d <= 3) || dv.as_ref().is_some_and(|dv| dv[x].is_some_and(|d| d <= 3));
    let (before, after) = (names(&inst.coloring), names(&out.coloring));
    for x in 0..before.len() {
        if before[x] != after[x] {
            assert!(out.swapped.contains(&x) || out.rewritten.contains(&x), "unexplained change at {x}");
        }
    }
    for &x in &out.rewritten {
        assert!(near(x), "rewrite at {x} is beyond distance 3");
    }
    assert!(out.last_rewrite.len() <= MAX_FINAL_REWRITE, "final rewrite of {} vertices", out.last_rewrite.len());
}

#[test]
fn level_three_lemma_traces() {
    for (inst, out) in instances(LemmaKind::Three) {
        let err = common::three_lemma_violation(&inst.graph, &names(&inst.coloring), &names(&out.coloring), inst.u);
        assert_eq!(err, None);
        check_trace(&inst, &out);
    }
}

#[test]
fn pair_lemma_traces() {
    for (inst, out) in instances(LemmaKind::Pair) {
        let v = inst.v.unwrap();
        let seen =
            common::pair_lemma_outcome(&inst.graph, &names(&inst.coloring), &names(&out.coloring), inst.u, v).unwrap();
        assert_eq!(format!("{:?}", out.c1_outcome.unwrap()), seen.to_string());
        check_trace(&inst, &out);
    }
}

#[test]
fn lemmas_are_deterministic() {
    for kind in [LemmaKind::Pair, LemmaKind::Three] {
        for s in 0..100 {
            let Some(inst) = sample_lemma_instance(kind, s) else { continue };
            let a = inst.run().unwrap();
            let b = inst.run().unwrap();
            assert_eq!(a.coloring, b.coloring);
            assert_eq!(a.case_label, b.case_label);
        }
    }
}

/// All feasible colorings of `g` extending `fixed`, by plain backtracking
/// in vertex order with the reference conflict check.
fn all_feasible(g: &Graph, fixed: &[(usize, SixColor)], cap: usize) -> Vec<Vec<SixColor>> {
    let adj = common::adjacency(g);
    let dist = common::all_distances(&adj);
    let n = g.n();
    let mut out = Vec::new();
    let mut cur: Vec<Option<SixColor>> = vec![None; n];
    for &(v, c) in fixed {
        cur[v] = Some(c);
    }
    fn go(
        v: usize,
        cur: &mut Vec<Option<SixColor>>,
        dist: &[Vec<Option<u32>>],
        out: &mut Vec<Vec<SixColor>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        let n = cur.len();
        if v == n {
            out.push(cur.iter().map(|c| c.unwrap()).collect());
            return;
        }
        let fits = |cur: &[Option<SixColor>], c: SixColor| {
            let level = common::level_of(&c.to_string());
            (0..n).all(|y| y == v || cur[y] != Some(c) || !dist[v][y].is_some_and(|d| d <= level))
        };
        if let Some(c) = cur[v] {
            if fits(cur, c) {
                go(v + 1, cur, dist, out, cap);
            }
            return;
        }
        for c in SixColor::ALL {
            if fits(cur, c) {
                cur[v] = Some(c);
                go(v + 1, cur, dist, out, cap);
                cur[v] = None;
            }
        }
    }
    go(0, &mut cur, &dist, &mut out, cap);
    out
}

fn minus_edges(g: &Graph, drop: &[(usize, usize)]) -> Graph {
    let edges: Vec<_> = g.edges().filter(|e| !drop.contains(e)).collect();
    Graph::new(g.n(), &edges).unwrap()
}

#[test]
fn level_three_lemma_on_every_coloring_of_a_small_graph() {
    let base = random_cubic(10, 1).unwrap();
    let e = base.edges().next().unwrap();
    let g = minus_edges(&base, &[e]);
    let u = e.0;
    let colorings = all_feasible(&g, &[(u, SixColor::ThreeA)], 200_000);
    assert!(colorings.len() > 100, "{}", colorings.len());
    colorings.par_iter().for_each(|f| {
        let f = Coloring::new(f.clone());
        let out = apply_lemma_c2(&g, &f, u).unwrap();
        assert_eq!(common::three_lemma_violation(&g, &names(&f), &names(&out.coloring), u), None);
    });
}

#[test]
fn pair_lemma_on_every_coloring_of_a_small_graph() {
    let base = random_cubic(12, 2).unwrap();
    let adj = common::adjacency(&base);
    let e1 = base.edges().next().unwrap();
    let d = common::bfs(&adj, e1.0);
    let e2 =
        base.edges().find(|&(a, b)| d[a].is_some_and(|x| x >= 3) && d[b].is_some_and(|x| x >= 3)).expect("a far edge");
    let g = minus_edges(&base, &[e1, e2]);
    let (u, v) = (e1.0, e2.0);
    let colorings = all_feasible(&g, &[(u, SixColor::TwoA), (v, SixColor::TwoA)], 100_000);
    assert!(colorings.len() > 100, "{}", colorings.len());
    colorings.par_iter().for_each(|f| {
        let f = Coloring::new(f.clone());
        let out = apply_lemma_c1(&g, &f, u, v).unwrap();
        let seen = common::pair_lemma_outcome(&g, &names(&f), &names(&out.coloring), u, v).unwrap();
        assert_eq!(format!("{:?}", out.c1_outcome.unwrap()), seen.to_string());
    });
}
