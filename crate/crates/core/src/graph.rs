//! Undirected simple graphs on the vertex ids `1..=n`, stored as bitset rows.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::GraphError;

/// An undirected simple graph with vertices `1..=n`.
///
/// Adjacency is kept as one bitset row per vertex (bit `v - 1` of row `u - 1`
/// is set iff `{u, v}` is an edge). Graphs are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from 1-based edge pairs. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    pub(crate) fn insert(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v));
        if self.rows[u - 1].contains(v - 1) {
            return false;
        }
        self.rows[u - 1].insert(v - 1);
        self.rows[v - 1].insert(u - 1);
        self.m += 1;
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Iterates over the vertex ids `1..=n`.
    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Whether `{u, v}` is an edge. Out-of-range ids are never adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.contains_vertex(u) && self.contains_vertex(v) && self.rows[u - 1].contains(v - 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v - 1].count_ones(..)
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v - 1].ones().map(|i| i + 1)
    }

    /// Zero-based adjacency row of `v`.
    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v - 1]
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Adjacency rows packed into single words, for graphs with at most 64 vertices.
    pub(crate) fn word_rows(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.vertices()
                .map(|u| self.neighbors(u).fold(0u64, |acc, v| acc | 1 << (v - 1)))
                .collect(),
        )
    }

    /// Whether the listed vertices are pairwise adjacent.
    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Whether the listed vertices are pairwise non-adjacent.
    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// The complement graph: `{u, v}` is an edge iff it is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            let mut c = row.clone();
            c.toggle_range(..);
            c.set(i, false);
            rows.push(c);
        }
        Graph {
            n: self.n,
            m: self.n * self.n.saturating_sub(1) / 2 - self.m,
            rows,
        }
    }

    /// The subgraph induced by `vertices`, relabelled `1..=k` in ascending
    /// order of the original ids.
    pub fn induced(&self, vertices: &[usize]) -> Result<Induced, GraphError> {
        let mut labels: Vec<usize> = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if let Some(&bad) = labels.iter().find(|&&v| !self.contains_vertex(v)) {
            return Err(GraphError::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut graph = Graph::empty(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    graph.insert(i + 1, j + 1);
                }
            }
        }
        Ok(Induced { graph, labels })
    }

    /// Renames every vertex `v` to `perm[v - 1]`. `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || !perm
                .iter()
                .all(|&p| (1..=self.n).contains(&p) && !std::mem::replace(&mut seen[p - 1], true))
        {
            return Err(GraphError::NotAPermutation);
        }
        Graph::from_edges(
            self.n,
            self.edges().map(|(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// An induced subgraph together with the original id of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `labels[i]` is the original id of new vertex `i + 1`.
    pub labels: Vec<usize>,
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph("complete graph"));
    }
    let mut g = Graph::empty(n);
    for u in 1..=n {
        for v in u + 1..=n {
            g.insert(u, v);
        }
    }
    Ok(g)
}

/// The path `1 - 2 - ... - n`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyGraph("path"));
    }
    Graph::from_edges(n, (1..n).map(|u| (u, u + 1)))
}

/// The cycle `1 - 2 - ... - n - 1`; needs `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall {
            what: "cycle",
            min: 3,
            got: n,
        });
    }
    Graph::from_edges(n, (1..=n).map(|u| (u, u % n + 1)))
}

/// The star `K_{1,leaves}` with centre 1 and leaves `2..=leaves + 1`.
pub fn star_graph(leaves: usize) -> Result<Graph, GraphError> {
    if leaves == 0 {
        return Err(GraphError::TooSmall {
            what: "star",
            min: 1,
            got: 0,
        });
    }
    Graph::from_edges(leaves + 1, (2..=leaves + 1).map(|v| (1, v)))
}
