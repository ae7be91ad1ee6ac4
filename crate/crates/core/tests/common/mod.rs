//! Reference checks for the integration tests. Everything here works from
//! raw adjacency lists and color names and shares no code with the library
//! verifiers.

#![allow(dead_code)]

use std::collections::VecDeque;

use subcubic_packing::graph::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<u32>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        let dx = d[x].unwrap();
        for &y in &adj[x] {
            if d[y].is_none() {
                d[y] = Some(dx + 1);
                q.push_back(y);
            }
        }
    }
    d
}

pub fn all_distances(adj: &[Vec<usize>]) -> Vec<Vec<Option<u32>>> {
    (0..adj.len()).map(|s| bfs(adj, s)).collect()
}

/// Same-class pairs closer than allowed. `class[v] = (name, separation)`.
pub fn separation_violations(adj: &[Vec<usize>], class: &[(String, u32)]) -> Vec<(usize, usize)> {
    let dist = all_distances(adj);
    let mut out = Vec::new();
    for x in 0..adj.len() {
        for y in x + 1..adj.len() {
            if class[x].0 == class[y].0 {
                if let Some(d) = dist[x][y] {
                    if d <= class[x].1 {
                        out.push((x, y));
                    }
                }
            }
        }
    }
    out
}

/// Level of a color written as `1a` ... `3b`, or `4`.
pub fn level_of(name: &str) -> u32 {
    name[..1].parse().expect("color names start with their level")
}

pub fn named_classes<C: ToString>(colors: impl Iterator<Item = C>) -> Vec<(String, u32)> {
    colors
        .map(|c| {
            let name = c.to_string();
            let level = level_of(&name);
            (name, level)
        })
        .collect()
}

pub fn feasible_violations<C: ToString>(g: &Graph, colors: impl Iterator<Item = C>) -> Vec<(usize, usize)> {
    let classes = named_classes(colors);
    assert!(classes.iter().all(|(n, _)| ["1a", "1b", "2a", "2b", "3a", "3b"].contains(&n.as_str())));
    separation_violations(&adjacency(g), &classes)
}

/// Violations of a good coloring, with an extra pseudo-pair when color 4
/// appears more than once.
pub fn good_violations<C: ToString>(g: &Graph, colors: impl Iterator<Item = C>) -> (Vec<(usize, usize)>, usize) {
    let classes = named_classes(colors);
    let fours = classes.iter().filter(|(n, _)| n == "4").count();
    (separation_violations(&adjacency(g), &classes), fours)
}

pub fn packing_violations(g: &Graph, colors: &[u32]) -> Vec<(usize, usize)> {
    assert!(colors.iter().all(|&c| c >= 1));
    let classes: Vec<(String, u32)> = colors.iter().map(|&c| (c.to_string(), c)).collect();
    separation_violations(&adjacency(g), &classes)
}

/// The four clauses on the diff between `before` and `after` for the
/// level-3 lemma at `u`, plus feasibility of `after`.
pub fn three_lemma_violation(g: &Graph, before: &[String], after: &[String], u: usize) -> Option<String> {
    if !feasible_violations(g, after.iter()).is_empty() {
        return Some("result not feasible".into());
    }
    if level_of(&after[u]) == 3 {
        return Some("u still at level 3".into());
    }
    let adj = adjacency(g);
    let du = bfs(&adj, u);
    let changed: Vec<usize> = (0..g.n()).filter(|&x| before[x] != after[x]).collect();
    let into: Vec<usize> = changed.iter().copied().filter(|&x| level_of(&after[x]) == 3).collect();
    if into.len() > 1 {
        return Some(format!("{} vertices moved into level 3", into.len()));
    }
    if let Some(&x) = into.first() {
        if adj[x].len() != 3 {
            return Some(format!("vertex {x} moved into level 3 with degree {}", adj[x].len()));
        }
        if !du[x].is_some_and(|d| d <= 3) {
            return Some(format!("vertex {x} moved into level 3 at distance {:?}", du[x]));
        }
    }
    let out: Vec<usize> = changed.iter().copied().filter(|&x| x != u && level_of(&before[x]) == 3).collect();
    if out.len() > 1 {
        return Some(format!("{} vertices other than u left level 3", out.len()));
    }
    if let Some(&x) = out.first() {
        if level_of(&after[x]) != 1 {
            return Some(format!("vertex {x} left level 3 for {}", after[x]));
        }
    }
    None
}

/// Which of the three promises of the pair lemma holds, or an error when
/// not exactly one does.
pub fn pair_lemma_outcome(g: &Graph, before: &[String], after: &[String], u: usize, v: usize) -> Result<char, String> {
    if !feasible_violations(g, after.iter()).is_empty() {
        return Err("result not feasible".into());
    }
    let common = &before[u];
    let partner = if common.ends_with('a') { common.replace('a', "b") } else { common.replace('b', "a") };
    let adj = adjacency(g);
    let ones_around = |x: usize| {
        let mut cs: Vec<&str> = adj[x].iter().map(|&y| after[y].as_str()).collect();
        cs.sort();
        cs == ["1a", "1b"]
    };
    let keeps =
        |p: &dyn Fn(&str) -> bool| (&after[u] == common && p(&after[v])) || (&after[v] == common && p(&after[u]));
    let a = keeps(&|c| level_of(c) == 1);
    let b = keeps(&|c| c == partner);
    let c = keeps(&|c| level_of(c) == 3) && ones_around(u) && ones_around(v);
    match (a, b, c) {
        (true, false, false) => Ok('A'),
        (false, true, false) => Ok('B'),
        (false, false, true) => Ok('C'),
        _ => Err(format!("promises A={a} B={b} C={c}")),
    }
}
