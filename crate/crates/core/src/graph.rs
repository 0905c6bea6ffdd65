//! Simple undirected graphs, separating sets, biconnectivity, and the
//! definitional verifier for locally connected spanning trees.

use crate::error::{Error, Result};

/// Simple undirected graph over vertex ids `0..n`, stored as one flat
/// adjacency arena with per-vertex offsets.
///
/// Neighbor slices are sorted, so iteration is deterministic and edge tests
/// are binary searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    nbrs: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range ids are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        let mut counts = vec![0usize; n + 1];
        for &(u, v) in edges {
            counts[u + 1] += 1;
            counts[v + 1] += 1;
        }
        for v in 0..n {
            counts[v + 1] += counts[v];
        }
        let mut raw = vec![0usize; counts[n]];
        let mut cursor = counts.clone();
        for &(u, v) in edges {
            raw[cursor[u]] = v;
            cursor[u] += 1;
            raw[cursor[v]] = u;
            cursor[v] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        let mut nbrs = Vec::with_capacity(raw.len());
        for v in 0..n {
            let slice = &mut raw[counts[v]..counts[v + 1]];
            slice.sort_unstable();
            let mut prev = usize::MAX;
            for &x in slice.iter() {
                if x != prev {
                    nbrs.push(x);
                    prev = x;
                }
            }
            offsets[v + 1] = nbrs.len();
        }
        Ok(Graph { n, offsets, nbrs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.nbrs.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_count_excluding(&vec![false; self.n]) == 1
    }

    fn component_count_excluding(&self, removed: &[bool]) -> usize {
        let mut seen = removed.to_vec();
        let mut stack = Vec::new();
        let mut components = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        components
    }

    /// True iff removing `s` leaves at least two components.
    pub fn is_separating_set(&self, s: &[usize]) -> Result<bool> {
        let mut removed = vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { id: v, n: self.n });
            }
            removed[v] = true;
        }
        Ok(self.component_count_excluding(&removed) >= 2)
    }

    /// True iff the graph is 2-connected: at least 3 vertices, connected, and
    /// free of cut vertices. Graphs on fewer than 3 vertices are never
    /// considered biconnected here; callers wanting the small-graph
    /// conventions should use the solve drivers.
    pub fn is_biconnected(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        // Iterative articulation-point DFS from vertex 0.
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![UNSEEN; n];
        let mut next = vec![0usize; n];
        let mut stack = Vec::with_capacity(n);
        let mut timer = 0usize;
        let mut root_children = 0usize;

        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        stack.push(0usize);
        while let Some(&v) = stack.last() {
            if next[v] < self.degree(v) {
                let w = self.neighbors(v)[next[v]];
                next[v] += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    if v == 0 {
                        root_children += 1;
                    }
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push(w);
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&u) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if u != 0 && low[v] >= disc[u] {
                        return false;
                    }
                }
            }
        }
        timer == n && root_children <= 1
    }

    /// Any cut vertex, if one exists. Quadratic; used for witnesses, not on
    /// the fast paths.
    pub fn find_cut_vertex(&self) -> Option<usize> {
        let mut removed = vec![false; self.n];
        (0..self.n).find(|&v| {
            removed[v] = true;
            let cut = self.component_count_excluding(&removed) >= 2;
            removed[v] = false;
            cut
        })
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    #[cfg(test)]
    pub(crate) fn relabeled(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("relabeling preserves validity")
    }
}

/// A candidate spanning tree: `n` vertices plus an edge sequence.
///
/// The constructor does not validate; [`check_locally_connected`] and
/// [`is_locally_connected_spanning_tree`] judge candidates against a host
/// graph. The edge sequence preserves construction order, so solver outputs
/// expose their intermediate trees as prefixes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> SpanningTree {
        SpanningTree { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Reasons a solver or oracle can answer "no tree exists".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// The graph is not 2-connected.
    NotBiconnected,
    /// At least four arcs of the model have density at most 2.
    FourLowDensityArcs,
    /// A single arc covers the heads of two low-density arcs.
    CutVertex,
    /// A required edge between special vertices is absent.
    MissingEdge,
    /// The two coverers have no common neighbor beyond the second of them.
    NoCommonNeighbor,
    /// All three coverer pairs separate the graph.
    AllPairsSeparating,
    /// Exhaustive search found no locally connected spanning tree.
    Exhausted,
}

impl NoReason {
    pub fn code(self) -> &'static str {
        match self {
            NoReason::NotBiconnected => "not-biconnected",
            NoReason::FourLowDensityArcs => "four-low-density-arcs",
            NoReason::CutVertex => "cut-vertex",
            NoReason::MissingEdge => "missing-edge",
            NoReason::NoCommonNeighbor => "no-common-neighbor",
            NoReason::AllPairsSeparating => "all-pairs-separating",
            NoReason::Exhausted => "exhausted",
        }
    }
}

impl std::fmt::Display for NoReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

/// Either a spanning tree or a refusal with a machine-readable reason and a
/// nonempty witness (vertex or arc ids, depending on the producer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeOutcome {
    Tree(SpanningTree),
    No {
        reason: NoReason,
        witness: Vec<usize>,
    },
}

impl TreeOutcome {
    pub fn no(reason: NoReason, witness: Vec<usize>) -> TreeOutcome {
        debug_assert!(!witness.is_empty(), "refusals carry a witness");
        TreeOutcome::No { reason, witness }
    }

    pub fn is_tree(&self) -> bool {
        matches!(self, TreeOutcome::Tree(_))
    }

    pub fn tree(&self) -> Option<&SpanningTree> {
        match self {
            TreeOutcome::Tree(t) => Some(t),
            TreeOutcome::No { .. } => None,
        }
    }
}

/// Why a candidate tree failed verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LcstFailure {
    VertexCountMismatch { graph_n: usize, tree_n: usize },
    WrongEdgeCount { expected: usize, actual: usize },
    EdgeOutOfRange { edge: (usize, usize) },
    EdgeNotInGraph { edge: (usize, usize) },
    /// The edge set contains a cycle (with n-1 edges this also means some
    /// vertex is unreachable).
    NotSpanning,
    /// The tree neighbors of `vertex` induce a disconnected subgraph.
    NeighborhoodNotConnected { vertex: usize },
}

impl std::fmt::Display for LcstFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LcstFailure::VertexCountMismatch { graph_n, tree_n } => {
                write!(f, "tree is over {tree_n} vertices, graph over {graph_n}")
            }
            LcstFailure::WrongEdgeCount { expected, actual } => {
                write!(f, "tree has {actual} edges, expected {expected}")
            }
            LcstFailure::EdgeOutOfRange { edge } => {
                write!(f, "tree edge ({}, {}) is out of range", edge.0, edge.1)
            }
            LcstFailure::EdgeNotInGraph { edge } => {
                write!(f, "tree edge ({}, {}) is not a graph edge", edge.0, edge.1)
            }
            LcstFailure::NotSpanning => write!(f, "edge set is not a spanning tree"),
            LcstFailure::NeighborhoodNotConnected { vertex } => {
                write!(
                    f,
                    "tree neighbors of vertex {vertex} induce a disconnected subgraph"
                )
            }
        }
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `x` and `y` were already joined.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// Full verification of the locally-connected-spanning-tree definition,
/// reporting the first failure found. `Ok(())` means: every tree edge is a
/// graph edge, the edges form a spanning tree, and for every vertex the tree
/// neighbors induce a connected subgraph of the graph.
pub fn check_locally_connected(g: &Graph, t: &SpanningTree) -> std::result::Result<(), LcstFailure> {
    let n = g.n();
    if t.n() != n {
        return Err(LcstFailure::VertexCountMismatch {
            graph_n: n,
            tree_n: t.n(),
        });
    }
    let expected = n.saturating_sub(1);
    if t.edges().len() != expected {
        return Err(LcstFailure::WrongEdgeCount {
            expected,
            actual: t.edges().len(),
        });
    }
    let mut sets = DisjointSets::new(n);
    let mut tree_adj = vec![Vec::new(); n];
    for &(u, v) in t.edges() {
        if u >= n || v >= n || u == v {
            return Err(LcstFailure::EdgeOutOfRange { edge: (u, v) });
        }
        if !g.has_edge(u, v) {
            return Err(LcstFailure::EdgeNotInGraph { edge: (u, v) });
        }
        if !sets.union(u, v) {
            return Err(LcstFailure::NotSpanning);
        }
        tree_adj[u].push(v);
        tree_adj[v].push(u);
    }
    // n-1 edges and no cycle already force connectivity.

    // Local connectivity: BFS inside each induced neighborhood, with stamped
    // membership/visited marks so no per-vertex allocation happens.
    const NONE: usize = usize::MAX;
    let mut member = vec![NONE; n];
    let mut visited = vec![NONE; n];
    let mut queue = Vec::new();
    for v in 0..n {
        let nbrs = &tree_adj[v];
        if nbrs.len() <= 1 {
            continue;
        }
        for &x in nbrs {
            member[x] = v;
        }
        queue.clear();
        queue.push(nbrs[0]);
        visited[nbrs[0]] = v;
        let mut reached = 1;
        while let Some(x) = queue.pop() {
            for &y in g.neighbors(x) {
                if member[y] == v && visited[y] != v {
                    visited[y] = v;
                    reached += 1;
                    queue.push(y);
                }
            }
        }
        if reached < nbrs.len() {
            return Err(LcstFailure::NeighborhoodNotConnected { vertex: v });
        }
    }
    Ok(())
}

/// Boolean form of [`check_locally_connected`]; this is the truth contract,
/// the failure report is diagnostic only.
pub fn is_locally_connected_spanning_tree(g: &Graph, t: &SpanningTree) -> bool {
    check_locally_connected(g, t).is_ok()
}
