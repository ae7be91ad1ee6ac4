//! A 2-vertex colored at level 3: move it off level 3 while recoloring at
//! most one vertex into level 3 (of degree 3, within distance 3) and at most
//! one other level-3 vertex out of it (into `1a`/`1b`).

use crate::coloring::SixColor::{self, *};
use crate::coloring::{locally_feasible, partial_feasible};
use crate::graph::Graph;

use super::engine::{fin, restart, Ctx, Procedure, Variant};

pub const CASES: &[&str] = &[
    "C2-Start",
    "C2-Kempe",
    "C2-Case1",
    "C2-Case1.1",
    "C2-Case1.2",
    "C2-Case1.3",
    "C2-Case2",
    "C2-Case2.1",
    "C2-Case2.2",
    "C2-Case2.2.1",
    "C2-Case2.2.2",
    "C2-Case2.2.3",
    "C2-Case2.2.4",
    "C2-Case2.2.5",
    "C2-Case2.2.6",
    "C2-Case2.2.6.1",
    "C2-Case2.2.6.2",
];

pub(crate) struct ThreeProc<'a> {
    pub g: &'a Graph,
    pub orig: &'a [Option<SixColor>],
    pub u: usize,
    pub variants: Vec<Variant>,
}

/// Which of the level-3 clauses a recoloring `orig -> next` violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ClauseViolation {
    TargetStillThree,
    SeveralIntoThree,
    IntoThreeTooFar,
    IntoThreeNotCubic,
    SeveralOutOfThree,
    OutOfThreeNotOne,
}

pub(crate) fn check_clauses(
    g: &Graph,
    orig: &[Option<SixColor>],
    next: &[Option<SixColor>],
    u: usize,
    require_target_moved: bool,
) -> Result<(), ClauseViolation> {
    if require_target_moved && next[u].is_some_and(|c| c.is_three()) {
        return Err(ClauseViolation::TargetStillThree);
    }
    let changed = (0..g.n()).filter(|&x| orig[x] != next[x]);
    let into: Vec<usize> = changed.clone().filter(|&x| next[x].is_some_and(|c| c.is_three())).collect();
    let out: Vec<usize> = changed.filter(|&x| x != u && orig[x].is_some_and(|c| c.is_three())).collect();
    if into.len() > 1 {
        return Err(ClauseViolation::SeveralIntoThree);
    }
    if let Some(&x) = into.first() {
        if g.degree(x) != 3 {
            return Err(ClauseViolation::IntoThreeNotCubic);
        }
        let mut near = false;
        g.for_each_within(u, 3, |y, _| near |= y == x);
        if !near {
            return Err(ClauseViolation::IntoThreeTooFar);
        }
    }
    if out.len() > 1 {
        return Err(ClauseViolation::SeveralOutOfThree);
    }
    if out.iter().any(|&x| !next[x].is_some_and(|c| c.is_one())) {
        return Err(ClauseViolation::OutOfThreeNotOne);
    }
    Ok(())
}

impl<'a> ThreeProc<'a> {
    pub fn new(g: &'a Graph, orig: &'a [Option<SixColor>], u: usize) -> Self {
        ThreeProc { g, orig, u, variants: Variant::enumerate([true, true, true], false) }
    }
}

impl Procedure for ThreeProc<'_> {
    fn graph(&self) -> &Graph {
        self.g
    }

    fn variants(&self) -> &[Variant] {
        &self.variants
    }

    fn generate(&self, cx: &mut Ctx<'_>) {
        generate(cx, self.u);
    }

    fn accept_finish(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool {
        locally_feasible(self.g, next, changed) && check_clauses(self.g, self.orig, next, self.u, true).is_ok()
    }

    fn accept_restart(&self, next: &[Option<SixColor>], changed: &[usize]) -> bool {
        !changed.contains(&self.u)
            && locally_feasible(self.g, next, changed)
            && check_clauses(self.g, self.orig, next, self.u, false).is_ok()
    }

    fn verify(&self, f: &[Option<SixColor>]) -> bool {
        partial_feasible(self.g, f)
    }
}

fn generate(cx: &mut Ctx<'_>, u: usize) {
    for x in [OneA, OneB] {
        fin!(cx, "C2-Start", [(u, x)]);
    }
    let (Some(u1), Some(u2)) = (cx.nbr_with(u, OneA, &[]), cx.nbr_with(u, OneB, &[])) else {
        return;
    };
    if !cx.ones_connected(u1, u2) {
        cx.kempe(line!(), "C2-Kempe", u2);
        return;
    }
    if cx.adj(u1, u2) {
        case1(cx, u, u1, u2);
    } else {
        case2(cx, u, u1, u2);
    }
}

fn case1(cx: &mut Ctx<'_>, u: usize, u1: usize, u2: usize) {
    for x in [TwoA, TwoB] {
        fin!(cx, "C2-Case1", [(u, x)]);
    }
    let Some(u3) = cx.nbr_except(u1, &[u, u2]).filter(|&x| cx.is(x, TwoA)) else { return };
    let Some(u4) = cx.nbr_except(u2, &[u, u1]).filter(|&x| cx.is(x, TwoB)) else { return };
    fin!(cx, "C2-Case1", [(u3, OneB), (u, TwoA)]);
    fin!(cx, "C2-Case1", [(u4, OneA), (u, TwoB)]);
    fin!(cx, "C2-Case1", [(u3, OneA), (u1, TwoA), (u, OneA)]);
    fin!(cx, "C2-Case1", [(u4, OneB), (u2, TwoB), (u, OneB)]);
    let (Some(u5), Some(u6)) = (cx.nbr_with(u3, OneA, &[u1]), cx.nbr_with(u3, OneB, &[u1])) else {
        return;
    };
    let (Some(u7), Some(u8)) = (cx.nbr_with(u4, OneA, &[u2]), cx.nbr_with(u4, OneB, &[u2])) else {
        return;
    };

    let case = if u5 == u7 && u6 == u8 {
        "C2-Case1.1"
    } else if u5 == u7 || u6 == u8 {
        "C2-Case1.2"
    } else {
        "C2-Case1.3"
    };
    fin!(cx, case, [(u5, OneB), (u3, OneA), (u1, TwoA), (u, OneA)]);
    fin!(cx, case, [(u6, OneA), (u4, OneB), (u2, TwoB), (u, OneB)]);
    fin!(cx, case, [(u6, OneA), (u3, OneB), (u1, TwoA), (u, OneA)]);
    fin!(cx, case, [(u7, OneB), (u4, OneA), (u2, TwoB), (u, OneB)]);
    fin!(cx, case, [(u8, OneA), (u4, OneB), (u2, TwoB), (u, OneB)]);
    fin!(cx, case, [(u1, ThreeA), (u, OneA)]);
    fin!(cx, case, [(u1, ThreeB), (u, OneA)]);
    fin!(cx, case, [(u2, ThreeA), (u, OneB)]);
    fin!(cx, case, [(u2, ThreeB), (u, OneB)]);
    fin!(cx, case, [(u3, TwoB), (u, TwoA)]);
    fin!(cx, case, [(u4, TwoA), (u, TwoB)]);
}

fn case2(cx: &mut Ctx<'_>, u: usize, u1: usize, u2: usize) {
    for x in [TwoA, TwoB] {
        fin!(cx, "C2-Case2", [(u, x)]);
    }
    let Some(u4) = cx.nbr_with(u1, OneB, &[u]) else { return };
    let Some(u3) = cx.nbr_with(u1, TwoA, &[u, u4]) else { return };
    let Some(u5) = cx.nbr_with(u2, OneA, &[u]) else { return };
    let Some(u6) = cx.nbr_with(u2, TwoB, &[u, u5]) else { return };

    if cx.adj(u3, u4) {
        fin!(cx, "C2-Case2", [(u1, TwoB), (u, OneA)]);
        fin!(cx, "C2-Case2", [(u1, TwoA), (u3, OneA), (u, OneA)]);
        return;
    }
    fin!(cx, "C2-Case2", [(u3, OneB), (u, TwoA)]);
    fin!(cx, "C2-Case2", [(u1, TwoB), (u, OneA)]);
    fin!(cx, "C2-Case2", [(u3, OneA), (u1, TwoA), (u, OneA)]);

    let Some(u8) = cx.nbr_with(u3, OneB, &[u1]) else { return };
    let Some(u7) = cx.nbr_except(u3, &[u1, u8]) else { return };
    let Some(u9) = cx.nbr_with(u4, OneA, &[u1]) else { return };
    let Some(u10) = cx.nbr_except(u4, &[u1, u9]) else { return };

    fin!(cx, "C2-Case2", [(u1, ThreeA), (u, OneA)]);
    fin!(cx, "C2-Case2", [(u1, ThreeB), (u, OneA)]);

    let v = Vars { u, u1, u2, u3, u4, u5, u6, u7, u8, u9, u10 };
    if cx.is(u7, TwoB) && cx.is(u10, TwoA) {
        case2_1(cx, &v);
    } else if cx.is(u7, OneA) && cx.is(u10, TwoB) {
        case2_2(cx, &v);
    }
}

struct Vars {
    u: usize,
    u1: usize,
    u2: usize,
    u3: usize,
    u4: usize,
    u5: usize,
    u6: usize,
    u7: usize,
    u8: usize,
    u9: usize,
    u10: usize,
}

fn case2_1(cx: &mut Ctx<'_>, v: &Vars) {
    let Vars { u, u1, u3, u4, u7, u8, u10, .. } = *v;
    fin!(cx, "C2-Case2.1", [(u4, TwoB), (u1, OneB), (u, OneA)]);
    restart!(cx, "C2-Case2.1", [(u10, OneA)]);
    restart!(cx, "C2-Case2.1", [(u7, OneA)]);
    restart!(cx, "C2-Case2.1", [(u7, OneB)]);
    fin!(cx, "C2-Case2.1", [(u8, OneA), (u3, OneB), (u, TwoA)]);
    fin!(cx, "C2-Case2.1", [(u10, OneB), (u4, TwoA), (u3, OneA), (u1, OneB), (u, OneA)]);
}

fn case2_2(cx: &mut Ctx<'_>, v: &Vars) {
    let Vars { u, u1, u2, u3, u4, u5, u6, u7, u8, u9, u10 } = *v;
    fin!(cx, "C2-Case2.2", [(u6, OneA), (u, TwoB)]);

    if u7 == u5 {
        restart!(cx, "C2-Case2.2.1", [(u10, OneA)]);
        fin!(cx, "C2-Case2.2.1", [(u8, OneA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.1", [(u3, TwoB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.1", [(u10, OneB), (u4, TwoB), (u1, OneB), (u, OneA)]);
        return;
    }
    if cx.adj(u4, u6) {
        return;
    }
    if u9 == u5 {
        fin!(cx, "C2-Case2.2.2", [(u2, TwoA), (u, OneB)]);
        fin!(cx, "C2-Case2.2.2", [(u6, OneB), (u2, TwoB), (u, OneB)]);
        fin!(cx, "C2-Case2.2.2", [(u5, TwoA), (u2, OneA), (u, OneB)]);
        restart!(cx, "C2-Case2.2.2", [(u7, OneB)]);
        restart!(cx, "C2-Case2.2.2", [(u8, OneA)]);
        restart!(cx, "C2-Case2.2.2", [(u10, OneA)]);
        fin!(cx, "C2-Case2.2.2", [(u3, TwoB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.2", [(u10, OneB), (u4, TwoB), (u1, OneB), (u, OneA)]);
        return;
    }
    if u7 == u9 {
        fin!(cx, "C2-Case2.2.3", [(u8, OneA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.3", [(u10, OneA), (u1, TwoB), (u, OneA)]);
        fin!(cx, "C2-Case2.2.3", [(u3, TwoB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.3", [(u7, OneB), (u4, OneA), (u1, OneB), (u, OneA)]);
        return;
    }
    if cx.adj(u7, u8) {
        case2_2_4(cx, v);
        return;
    }
    if cx.adj(u8, u9) {
        restart!(cx, "C2-Case2.2.5", [(u10, OneA)]);
        restart!(cx, "C2-Case2.2.5", [(u7, OneB)]);
        fin!(cx, "C2-Case2.2.5", [(u3, TwoB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.5", [(u10, OneB), (u4, TwoB), (u1, OneB), (u, OneA)]);
        return;
    }
    case2_2_6(cx, v);
}

fn case2_2_4(cx: &mut Ctx<'_>, v: &Vars) {
    let Vars { u, u1, u3, u4, u7, u8, u10, .. } = *v;
    fin!(cx, "C2-Case2.2.4", [(u10, OneA), (u1, TwoB), (u, OneA)]);
    fin!(cx, "C2-Case2.2.4", [(u10, OneB), (u4, TwoB), (u1, OneB), (u, OneA)]);
    fin!(cx, "C2-Case2.2.4", [(u3, TwoB), (u, TwoA)]);
    let Some(u11) = cx.nbr_except(u7, &[u3, u8]) else { return };
    let Some(u12) = cx.nbr_except(u8, &[u3, u7]) else { return };
    if cx.is(u11, TwoB) && cx.is(u12, ThreeA) {
        fin!(cx, "C2-Case2.2.4", [(u12, OneA), (u1, ThreeA), (u, OneA)]);
        fin!(cx, "C2-Case2.2.4", [(u12, OneB), (u8, OneA), (u7, OneB), (u1, ThreeA), (u, OneA)]);
        fin!(cx, "C2-Case2.2.4", [(u11, OneB), (u3, TwoB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.4", [(u8, TwoA), (u3, OneB), (u, TwoA)]);
    } else if cx.is(u11, ThreeA) && cx.is(u12, TwoB) {
        fin!(cx, "C2-Case2.2.4", [(u11, OneB), (u1, ThreeA), (u, OneA)]);
        fin!(cx, "C2-Case2.2.4", [(u11, OneA), (u7, OneB), (u8, OneA), (u1, ThreeA), (u, OneA)]);
        fin!(cx, "C2-Case2.2.4", [(u12, OneA), (u3, TwoB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.4", [(u8, TwoA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.4", [(u7, TwoA), (u8, OneA), (u3, OneB), (u, TwoA)]);
    }
}

fn case2_2_6(cx: &mut Ctx<'_>, v: &Vars) {
    let Vars { u, u1, u3, u4, u7, u8, u10, .. } = *v;
    restart!(cx, "C2-Case2.2.6", [(u10, OneA)]);
    restart!(cx, "C2-Case2.2.6", [(u7, OneB)]);
    restart!(cx, "C2-Case2.2.6", [(u8, OneA)]);
    fin!(cx, "C2-Case2.2.6", [(u8, OneA), (u3, OneB), (u, TwoA)]);
    fin!(cx, "C2-Case2.2.6", [(u3, TwoB), (u, TwoA)]);
    fin!(cx, "C2-Case2.2.6", [(u10, OneB), (u4, TwoB), (u1, OneB), (u, OneA)]);

    let Some(u12) = cx.nbr_with(u7, OneB, &[u3]) else { return };
    let Some(u11) = cx.nbr_except(u7, &[u3, u12]) else { return };
    let Some(u13) = cx.nbr_with(u8, OneA, &[u3]) else { return };
    let Some(u14) = cx.nbr_except(u8, &[u3, u13]) else { return };

    if cx.is(u11, TwoB) && cx.is(u14, ThreeA) {
        fin!(cx, "C2-Case2.2.6.1", [(u13, OneB), (u8, OneA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.1", [(u8, TwoB), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.1", [(u8, TwoA), (u3, OneB), (u, TwoA)]);
        restart!(cx, "C2-Case2.2.6.1", [(u11, OneB)]);
        restart!(cx, "C2-Case2.2.6.1", [(u14, OneA)]);
        restart!(cx, "C2-Case2.2.6.1", [(u12, OneA), (u7, OneB)]);
        restart!(cx, "C2-Case2.2.6.1", [(u13, OneB), (u8, OneA)]);
        let Some(u24) = cx.nbr_with(u13, OneB, &[u8]) else { return };
        let Some(u23) = cx.nbr_except(u13, &[u8, u24]) else { return };
        let Some(u25) = cx.nbr_with(u14, OneA, &[u8]) else { return };
        let Some(u26) = cx.nbr_except(u14, &[u8, u25]) else { return };
        for x in [OneA, OneB] {
            fin!(cx, "C2-Case2.2.6.1", [(u26, x), (u8, TwoB), (u3, OneB), (u, TwoA)]);
            fin!(cx, "C2-Case2.2.6.1", [(u23, x), (u8, TwoB), (u3, OneB), (u, TwoA)]);
            fin!(cx, "C2-Case2.2.6.1", [(u26, x), (u8, TwoA), (u3, OneB), (u, TwoA)]);
            fin!(cx, "C2-Case2.2.6.1", [(u23, x), (u8, TwoA), (u3, OneB), (u, TwoA)]);
        }
        restart!(cx, "C2-Case2.2.6.1", [(u25, OneB), (u14, OneA)]);
        fin!(cx, "C2-Case2.2.6.1", [(u11, OneA), (u7, TwoB), (u3, OneA), (u1, TwoA), (u, OneA)]);
        fin!(cx, "C2-Case2.2.6.1", [(u3, ThreeB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.1", [(u14, TwoA), (u3, ThreeA), (u, TwoA)]);
        restart!(cx, "C2-Case2.2.6.1", [(u24, OneA), (u13, OneB)]);
        restart!(cx, "C2-Case2.2.6.1", [(u23, OneB)]);
        for x in [ThreeA, ThreeB] {
            fin!(cx, "C2-Case2.2.6.1", [(u8, x), (u14, OneB), (u3, OneB), (u, TwoA)]);
        }
        fin!(cx, "C2-Case2.2.6.1", [(u13, TwoB), (u8, OneA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.1", [(u13, TwoA), (u8, OneA), (u3, OneB), (u, TwoA)]);
    } else if cx.is(u11, ThreeA) && cx.is(u14, TwoB) {
        restart!(cx, "C2-Case2.2.6.2", [(u11, OneB)]);
        restart!(cx, "C2-Case2.2.6.2", [(u14, OneA)]);
        restart!(cx, "C2-Case2.2.6.2", [(u12, OneA), (u7, OneB)]);
        restart!(cx, "C2-Case2.2.6.2", [(u13, OneB), (u8, OneA)]);
        fin!(cx, "C2-Case2.2.6.2", [(u13, OneB), (u8, OneA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.2", [(u8, TwoA), (u3, OneB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.2", [(u8, TwoB), (u14, OneB), (u3, OneB), (u, TwoA)]);
        restart!(cx, "C2-Case2.2.6.2", [(u7, TwoB)]);
        fin!(cx, "C2-Case2.2.6.2", [(u3, ThreeB), (u, TwoA)]);
        fin!(cx, "C2-Case2.2.6.2", [(u11, OneA), (u7, TwoA), (u3, ThreeA), (u, TwoA)]);
    }
}
