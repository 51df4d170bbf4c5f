//! Maximal clique enumeration (Bron–Kerbosch with pivoting).
//!
//! This is exponential in the worst case and is used as an independent
//! oracle for the closed-form counts in [`crate::split`].

use fixedbitset::FixedBitSet;

use crate::error::GraphError;
use crate::graph::Graph;

/// Default vertex limit for the enumeration oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 64;

/// All maximal cliques of `g`, each sorted ascending, the list sorted
/// lexicographically. Graphs with more than [`DEFAULT_ORACLE_LIMIT`] vertices
/// are rejected.
pub fn enumerate_maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    enumerate_maximal_cliques_limited(g, DEFAULT_ORACLE_LIMIT)
}

pub fn enumerate_maximal_cliques_limited(
    g: &Graph,
    limit: usize,
) -> Result<Vec<Vec<usize>>, GraphError> {
    if g.n() > limit {
        return Err(GraphError::TooLarge { n: g.n(), limit });
    }
    let mut out = Vec::new();
    if g.n() == 0 {
        return Ok(out);
    }
    let mut p = FixedBitSet::with_capacity(g.n());
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(g.n());
    let mut r = Vec::new();
    expand(g, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

/// Number of maximal cliques of `g`.
pub fn count_maximal_cliques(g: &Graph) -> Result<usize, GraphError> {
    enumerate_maximal_cliques(g).map(|c| c.len())
}

fn expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    // greedy pivot: the vertex of P ∪ X with the most neighbours in P
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (g.row(u + 1).intersection(&p).count(), std::cmp::Reverse(u)))
        .expect("P is non-empty");
    let mut candidates = p.clone();
    candidates.difference_with(g.row(pivot + 1));
    for v in candidates.ones() {
        let row = g.row(v + 1);
        let mut np = p.clone();
        np.intersect_with(row);
        let mut nx = x.clone();
        nx.intersect_with(row);
        r.push(v + 1);
        expand(g, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// Clique number ω(g) by exhaustive enumeration.
pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    Ok(enumerate_maximal_cliques(g)?
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0))
}

/// Independence number α(g) by exhaustive enumeration on the complement.
pub fn independence_number(g: &Graph) -> Result<usize, GraphError> {
    clique_number(&g.complement())
}
