//! Two 2-vertices sharing color `2a`: recolor so that one keeps `2a` and the
//! other leaves it (outcome A), the pair becomes `{2a, 2b}` (outcome B), or
//! one moves to level 3 with both neighborhoods colored `{1a, 1b}` (outcome C).

use crate::coloring::SixColor::{self, *};
use crate::coloring::{locally_feasible, partial_feasible};
use crate::graph::Graph;

use super::engine::{fin, restart, Ctx, Procedure, Variant};
use super::C1Outcome;

pub const CASES: &[&str] = &[
    "C1-Start",
    "C1-Kempe",
    "C1-Case1",
    "C1-Case1.1",
    "C1-Case1.2",
    "C1-Case1.2.1",
    "C1-Case1.2.2",
    "C1-Case2",
    "C1-Case2.1",
    "C1-Case2.2",
];

pub(crate) struct PairProc<'a> {
    pub g: &'a Graph,
    pub u: usize,
    pub v: usize,
    /// The shared color of `u` and `v` in the input, `2a` or `2b`.
    pub common: SixColor,
    pub variants: Vec<Variant>,
}

impl<'a> PairProc<'a> {
    pub fn new(g: &'a Graph, u: usize, v: usize, common: SixColor) -> Self {
        let variants = Variant::enumerate([true, true, true], true)
            .into_iter()
            .filter(|var| var.swap[1] == (common == TwoB))
            .collect();
        PairProc { g, u, v, common, variants }
    }

    pub fn outcome(&self, f: &[Option<SixColor>]) -> Option<C1Outcome> {
        let (cu, cv) = (f[self.u]?, f[self.v]?);
        let keep = self.common;
        if (cu == keep && cv.is_one()) || (cv == keep && cu.is_one()) {
            return Some(C1Outcome::A);
        }
        if (cu == keep && cv == keep.partner()) || (cv == keep && cu == keep.partner()) {
            return Some(C1Outcome::B);
        }
        let ones_around = |x: usize| {
            let mut cs: Vec<_> = self.g.neighbors(x).iter().map(|&y| f[y]).collect();
            cs.sort();
            cs == [Some(OneA), Some(OneB)]
        };
        if ((cu == keep && cv.is_three()) || (cv == keep && cu.is_three()))
            && ones_around(self.u)
            && ones_around(self.v)
        {
            return Some(C1Outcome::C);
        }
        None
    }
}

impl Procedure for PairProc<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn variants(&self) -> &[Variant] {
        &self.variants
    }

    fn generate(&self, cx: &mut Ctx<'_>) {
        let u = if cx.flip() { self.v } else { self.u };
        generate(cx, u);
    }

    fn accept_finish(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool {
        locally_feasible(self.g, next, changed) && self.outcome(next).is_some()
    }

    fn accept_restart(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool {
        !changed.contains(&self.u) && !changed.contains(&self.v) && locally_feasible(self.g, next, changed)
    }

    fn verify(&self, f: &[Option<SixColor>]) -> bool {
        partial_feasible(self.g, f)
    }
}

fn generate(cx: &mut Ctx<'_>, u: usize) {
    for x in [OneA, OneB] {
        fin!(cx, "C1-Start", [(u, x)]);
    }
    let (Some(u1), Some(u2)) = (cx.nbr_with(u, OneA, &[]), cx.nbr_with(u, OneB, &[])) else {
        return;
    };
    if !cx.ones_connected(u1, u2) {
        cx.kempe(line!(), "C1-Kempe", u2);
        return;
    }

    if cx.adj(u1, u2) {
        fin!(cx, "C1-Case1", [(u, TwoB)]);
        let Some(u3) = cx.nbr_except(u1, &[u, u2]) else { return };
        if !cx.is(u3, TwoB) {
            return;
        }
        let u4 = cx.nbr_except(u2, &[u, u1]);
        fin!(cx, "C1-Case1", [(u, OneA), (u1, TwoA)]);
        let Some(u5) = cx.nbr_with(u3, TwoA, &[u1]) else { return };
        let u6 = cx.nbr_except(u3, &[u1, u5]);

        if !cx.has(u4, TwoB) {
            fin!(cx, "C1-Case1.1", [(u3, OneB), (u, TwoB)]);
            fin!(cx, "C1-Case1.1", [(u, OneA), (u3, OneA), (u1, TwoB)]);
            return;
        }
        let u4 = u4.expect("bound above");
        if u4 == u3 {
            fin!(cx, "C1-Case1.2", [(u, ThreeA)]);
            fin!(cx, "C1-Case1.2", [(u, ThreeB)]);
            return;
        }
        if !cx.has(u6, OneB) {
            fin!(cx, "C1-Case1.2.1", [(u3, OneB), (u2, TwoA), (u, OneB)]);
            fin!(cx, "C1-Case1.2.1", [(u3, OneB), (u4, OneA), (u2, TwoB), (u, OneB)]);
            fin!(cx, "C1-Case1.2.1", [(u3, OneB), (u4, OneB), (u2, TwoB), (u, OneB)]);
        } else {
            fin!(cx, "C1-Case1.2.2", [(u3, OneA), (u1, OneB), (u2, TwoA), (u, OneA)]);
            fin!(cx, "C1-Case1.2.2", [(u3, OneA), (u2, OneA), (u1, OneB), (u4, OneB), (u, TwoB)]);
            fin!(cx, "C1-Case1.2.2", [(u3, OneA), (u1, OneB), (u4, OneA), (u2, TwoB), (u, OneA)]);
        }
        return;
    }

    let Some(u3) = cx.nbr_with(u1, OneB, &[u]) else { return };
    let u5 = cx.nbr_except(u1, &[u, u3]);
    let Some(u4) = cx.nbr_with(u2, OneA, &[u]) else { return };
    let u6 = cx.nbr_except(u2, &[u, u4]);
    fin!(cx, "C1-Case2", [(u, TwoB)]);
    let Some(u5) = u5.filter(|&x| cx.is(x, TwoB)) else { return };

    if !cx.has(u6, TwoB) {
        fin!(cx, "C1-Case2.1", [(u5, OneB), (u, TwoB)]);
        fin!(cx, "C1-Case2.1", [(u, OneA), (u1, TwoA)]);
        fin!(cx, "C1-Case2.1", [(u1, TwoB), (u5, OneA), (u, OneA)]);
        let Some(u6) = u6 else {
            fin!(cx, "C1-Case2.1", [(u, ThreeA)]);
            fin!(cx, "C1-Case2.1", [(u, ThreeB)]);
            return;
        };
        restart!(cx, "C1-Case2.1", [(u6, OneA)]);
        fin!(cx, "C1-Case2.1", [(u2, TwoA), (u, OneB)]);
        fin!(cx, "C1-Case2.1", [(u2, TwoB), (u, OneB)]);
        fin!(cx, "C1-Case2.1", [(u, ThreeA)]);
        fin!(cx, "C1-Case2.1", [(u, ThreeB)]);
        return;
    }

    let u6 = u6.expect("bound above");
    if u6 == u5 {
        fin!(cx, "C1-Case2.2", [(u1, TwoB), (u5, OneA), (u, OneA)]);
        fin!(cx, "C1-Case2.2", [(u2, TwoB), (u5, OneB), (u, OneB)]);
        fin!(cx, "C1-Case2.2", [(u, ThreeA)]);
        fin!(cx, "C1-Case2.2", [(u, ThreeB)]);
        return;
    }
    restart!(cx, "C1-Case2.2", [(u6, OneA)]);
    fin!(cx, "C1-Case2.2", [(u, OneB), (u2, TwoA)]);
    fin!(cx, "C1-Case2.2", [(u2, TwoB), (u6, OneB), (u, OneB)]);
    fin!(cx, "C1-Case2.2", [(u, OneA), (u1, TwoA)]);
    fin!(cx, "C1-Case2.2", [(u1, TwoB), (u5, OneA), (u, OneA)]);
    fin!(cx, "C1-Case2.2", [(u, ThreeA)]);
    fin!(cx, "C1-Case2.2", [(u, ThreeB)]);
}
