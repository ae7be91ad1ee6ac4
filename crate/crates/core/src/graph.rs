//! Simple undirected graphs with dense vertex ids, distance queries,
//! subdivision, and the degeneracy / connectivity structure used by the
//! colorers.

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

/// Distance value used for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not 2-degenerate; stuck on core {0:?}")]
    NotTwoDegenerate(Vec<usize>),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
}

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
///
/// Graphs are immutable once built. The all-pairs distance table is computed
/// lazily on first use and then shared.
#[derive(Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    distances: OnceLock<DistanceTable>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph { adj: self.adj.clone(), edge_count: self.edge_count, distances: OnceLock::new() }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edge_count: seen.len(), distances: OnceLock::new() })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0, distances: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Shortest-path length between `u` and `v`, or `None` when they lie in
    /// different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<u32>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        let dist = self.bfs(u, None);
        Ok((dist[v] != UNREACHABLE).then_some(dist[v]))
    }

    /// All vertices within distance `radius` of `center`, ascending.
    pub fn ball(&self, center: usize, radius: u32) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(center)?;
        let mut out = Vec::new();
        self.for_each_within(center, radius, |v, _| out.push(v));
        out.sort_unstable();
        Ok(out)
    }

    /// Calls `visit(v, d)` for every vertex `v` at distance `d <= radius` from
    /// `center`, including `center` itself, in BFS order.
    pub fn for_each_within(&self, center: usize, radius: u32, mut visit: impl FnMut(usize, u32)) {
        // Balls in subcubic graphs are tiny, so a linear scan of the frontier
        // beats allocating a full distance vector.
        let mut seen: Vec<usize> = vec![center];
        let mut frontier: Vec<usize> = vec![center];
        visit(center, 0);
        for d in 1..=radius {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if !seen.contains(&y) {
                        seen.push(y);
                        next.push(y);
                        visit(y, d);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
    }

    /// Full BFS distances from `source`, optionally ignoring one vertex.
    fn bfs(&self, source: usize, removed: Option<usize>) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if Some(y) != removed && dist[y] == UNREACHABLE {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Cached all-pairs distance table.
    pub fn distances(&self) -> &DistanceTable {
        self.distances.get_or_init(|| DistanceTable::compute(self))
    }

    /// Subdivides every edge once. Original vertices keep their ids; the
    /// vertex subdividing the `i`-th edge (lexicographic order) gets id `n + i`.
    pub fn subdivide(&self) -> SubdivisionResult {
        let n = self.n();
        let mut edges = Vec::with_capacity(2 * self.edge_count);
        let mut original_of: Vec<Origin> = (0..n).map(Origin::Vertex).collect();
        for (i, (u, v)) in self.edges().enumerate() {
            let s = n + i;
            edges.push((u, s));
            edges.push((s, v));
            original_of.push(Origin::Edge(u, v));
        }
        let dgraph = Graph::new(n + self.edge_count, &edges).expect("subdivision of a simple graph is simple");
        SubdivisionResult { dgraph, original_of }
    }

    /// Elimination order by repeatedly deleting a minimum-degree vertex
    /// (lowest id on ties). Fails with the remaining core as soon as every
    /// remaining vertex has degree at least 3.
    pub fn degeneracy_order(&self) -> Result<EliminationOrder, GraphError> {
        let n = self.n();
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        // Buckets keyed by degree; degrees here are small so a BTreeSet per
        // bucket keeps the lowest-id tie-break cheap.
        let max_deg = deg.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); max_deg + 1];
        for v in 0..n {
            buckets[deg[v]].insert(v);
        }
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let (d, v) =
                buckets.iter().enumerate().find_map(|(d, b)| b.first().map(|&v| (d, v))).expect("a vertex remains");
            if d > 2 {
                let core: Vec<usize> = (0..n).filter(|&x| !removed[x]).collect();
                return Err(GraphError::NotTwoDegenerate(core));
            }
            buckets[d].remove(&v);
            removed[v] = true;
            order.push(v);
            for &y in &self.adj[v] {
                if !removed[y] {
                    buckets[deg[y]].remove(&y);
                    deg[y] -= 1;
                    buckets[deg[y]].insert(y);
                }
            }
        }
        Ok(EliminationOrder { order })
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs(0, None).iter().all(|&d| d != UNREACHABLE)
    }

    /// A vertex whose deletion leaves the graph connected: the lowest-id leaf
    /// of the depth-first spanning tree rooted at vertex 0.
    pub fn non_cut_vertex(&self) -> Result<usize, GraphError> {
        if self.n() < 2 {
            return Err(GraphError::TooSmall(2));
        }
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let n = self.n();
        let mut visited = vec![false; n];
        let mut children = vec![0usize; n];
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        visited[0] = true;
        while let Some(top) = stack.last_mut() {
            let (x, next) = *top;
            if let Some(&y) = self.adj[x].get(next) {
                top.1 += 1;
                if !visited[y] {
                    visited[y] = true;
                    children[x] += 1;
                    stack.push((y, 0));
                }
            } else {
                stack.pop();
            }
        }
        // The root is a leaf of the tree exactly when it has one child.
        let leaf = if children[0] == 1 {
            0
        } else {
            (1..n).find(|&v| children[v] == 0).expect("a spanning tree on >= 2 vertices has a leaf")
        };
        Ok(leaf)
    }

    /// Copy of the graph with `v` isolated (ids preserved).
    pub fn without_vertex(&self, v: usize) -> Graph {
        let edges: Vec<_> = self.edges().filter(|&(a, b)| a != v && b != v).collect();
        Graph::new(self.n(), &edges).expect("subgraph of a simple graph is simple")
    }

    /// Copy of the graph with `v` removed and ids above `v` shifted down.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<_> =
            self.edges().filter(|&(a, b)| a != v && b != v).map(|(a, b)| (shift(a), shift(b))).collect();
        Graph::new(self.n() - 1, &edges).expect("subgraph of a simple graph is simple")
    }

    pub fn profile(&self) -> Profile {
        let max_degree = self.max_degree();
        Profile {
            max_degree,
            is_subcubic: max_degree <= 3,
            is_cubic: self.n() > 0 && self.adj.iter().all(|l| l.len() == 3),
            is_connected: self.is_connected(),
        }
    }
}

/// All-pairs shortest-path lengths, `UNREACHABLE` across components.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(g.bfs(s, None));
        }
        DistanceTable { n, dist }
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// What a vertex of a subdivision stands for in the original graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug, Clone)]
pub struct SubdivisionResult {
    pub dgraph: Graph,
    pub original_of: Vec<Origin>,
}

impl SubdivisionResult {
    pub fn is_subdivision_vertex(&self, v: usize) -> bool {
        matches!(self.original_of[v], Origin::Edge(..))
    }
}

/// Vertex sequence in which each vertex has at most two neighbours later in
/// the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Profile {
    pub max_degree: usize,
    pub is_subcubic: bool,
    pub is_cubic: bool,
    pub is_connected: bool,
}
