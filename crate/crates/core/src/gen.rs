//! Seeded generators: named graphs, random cubic graphs, random 2-degenerate
//! subcubic graphs and random feasible colorings.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{color_fits, Coloring, SixColor};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("invalid vertex count {0}")]
    InvalidN(usize),
    #[error("no connected sample after {0} attempts")]
    RetriesExhausted(usize),
}

/// Standard graphs by name: `K4`, `petersen`, `prism_<n>`, `cycle_<n>`,
/// `path_<n>`.
pub fn named(name: &str) -> Result<Graph, GenError> {
    let unknown = || GenError::UnknownName(name.to_string());
    let sized = |prefix: &str, min: usize| -> Result<Option<usize>, GenError> {
        match name.strip_prefix(prefix) {
            None => Ok(None),
            Some(rest) => {
                let k: usize = rest.parse().map_err(|_| unknown())?;
                if k < min {
                    Err(GenError::InvalidN(k))
                } else {
                    Ok(Some(k))
                }
            }
        }
    };
    let g = if name.eq_ignore_ascii_case("k4") {
        complete(4)
    } else if name == "petersen" {
        petersen()
    } else if let Some(k) = sized("prism_", 3)? {
        prism(k)
    } else if let Some(k) = sized("cycle_", 3)? {
        cycle(k)
    } else if let Some(k) = sized("path_", 1)? {
        path(k)
    } else {
        return Err(unknown());
    };
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).expect("complete graph is simple")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycles need n >= 3")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path is simple")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).expect("petersen is simple")
}

/// `C_k x K_2`: cycles `0..k` and `k..2k` with rungs `i -- i+k`.
pub fn prism(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    Graph::new(2 * k, &edges).expect("prism is simple")
}

const CUBIC_ATTEMPTS: usize = 100_000;

/// Connected simple cubic graph from the pairing model, resampling until the
/// pairing is simple and connected.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 4 || n % 2 == 1 {
        return Err(GenError::InvalidN(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..CUBIC_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        if edges.iter().any(|&(a, b)| a == b) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = Graph::new(n, &edges).expect("checked simple");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::RetriesExhausted(CUBIC_ATTEMPTS))
}

/// Each new vertex joins up to two earlier vertices of degree below 3, so
/// the reverse construction order witnesses 2-degeneracy.
pub fn random_2degenerate_subcubic(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n.max(1) {
        let mut open: Vec<usize> = (0..v).filter(|&x| degree[x] < 3).collect();
        open.shuffle(&mut rng);
        let want = if rng.gen_bool(0.6) { 2 } else { 1 };
        for &x in open.iter().take(want) {
            edges.push((x, v));
            degree[x] += 1;
            degree[v] += 1;
        }
    }
    Graph::new(n, &edges).expect("construction keeps the graph simple")
}

/// Greedy feasible coloring in randomized breadth-first order from `root`,
/// with `fixed` colors assigned first. Lower levels are preferred, so level 3
/// appears where the neighborhood forces it. Returns `None` when the greedy
/// pass gets stuck.
pub fn random_feasible_coloring(
    g: &Graph,
    seed: u64,
    root: usize,
    fixed: &[(usize, SixColor)],
) -> Option<Coloring<SixColor>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let mut f: Vec<Option<SixColor>> = vec![None; n];
    for &(v, c) in fixed {
        if !color_fits(g, &f, v, c) {
            return None;
        }
        f[v] = Some(c);
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in std::iter::once(root).chain(0..n) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let mut nb = g.neighbors(order[i]).to_vec();
            nb.shuffle(&mut rng);
            for y in nb {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
            i += 1;
        }
    }
    let weights = [8u32, 8, 3, 3, 1, 1];
    for v in order {
        if f[v].is_some() {
            continue;
        }
        let free: Vec<SixColor> = SixColor::ALL.into_iter().filter(|&c| color_fits(g, &f, v, c)).collect();
        let total: u32 = free.iter().map(|c| weights[c.index()]).sum();
        if total == 0 {
            return None;
        }
        let mut pick = rng.gen_range(0..total);
        for c in free {
            let w = weights[c.index()];
            if pick < w {
                f[v] = Some(c);
                break;
            }
            pick -= w;
        }
    }
    Some(Coloring::new(f.into_iter().map(|c| c.expect("all vertices visited")).collect()))
}
