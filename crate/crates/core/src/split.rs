//! Split graph recognition and the Hammer–Simeone classification of split
//! partitions.
//!
//! For a split partition `V = K ∪ S` (K a clique, S independent) every clique
//! meets S in at most one vertex and every independent set meets K in at most
//! one vertex, so
//!
//! * ω = |K| + 1 if some `s ∈ S` is adjacent to all of K, else |K|;
//! * α = |S| + 1 if some `k ∈ K` has no neighbour in S, else |S|.
//!
//! The two extensions cannot both exist (such an `s` would be adjacent to such
//! a `k`), which yields exactly one of the three classes below.

use std::fmt;

use serde::Serialize;

use crate::error::SplitError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitClass {
    /// |K| = ω and |S| = α.
    Balanced,
    /// |K| = ω − 1 and |S| = α.
    UnbalancedSMax,
    /// |K| = ω and |S| = α − 1.
    UnbalancedKMax,
}

impl SplitClass {
    pub fn name(self) -> &'static str {
        match self {
            SplitClass::Balanced => "balanced",
            SplitClass::UnbalancedSMax => "unbalanced-s-max",
            SplitClass::UnbalancedKMax => "unbalanced-k-max",
        }
    }

    pub fn is_balanced(self) -> bool {
        self == SplitClass::Balanced
    }
}

impl fmt::Display for SplitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A classified split partition of some graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    clique: Vec<usize>,
    independent: Vec<usize>,
    class: SplitClass,
    omega: usize,
    alpha: usize,
    s_witness: Option<usize>,
    k_witness: Option<usize>,
}

impl SplitPartition {
    /// The clique side K, ascending.
    pub fn clique_side(&self) -> &[usize] {
        &self.clique
    }

    /// The independent side S, ascending.
    pub fn independent_side(&self) -> &[usize] {
        &self.independent
    }

    pub fn class(&self) -> SplitClass {
        self.class
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// For [`SplitClass::UnbalancedSMax`]: the smallest `s ∈ S` with `K ∪ {s}` a clique.
    pub fn s_witness(&self) -> Option<usize> {
        self.s_witness
    }

    /// For [`SplitClass::UnbalancedKMax`]: the largest `k ∈ K` with `S ∪ {k}` independent.
    pub fn k_witness(&self) -> Option<usize> {
        self.k_witness
    }

    /// Whether `v` is on the independent side.
    pub fn in_independent_side(&self, v: usize) -> bool {
        self.independent.binary_search(&v).is_ok()
    }
}

/// Classifies the split partition `(k, s)` of `g`.
///
/// Fails if `(k, s)` does not partition the vertex set into a clique and an
/// independent set.
pub fn classify(g: &Graph, k: &[usize], s: &[usize]) -> Result<SplitPartition, SplitError> {
    let mut clique = k.to_vec();
    clique.sort_unstable();
    let mut independent = s.to_vec();
    independent.sort_unstable();

    let mut seen = vec![false; g.n()];
    for &v in clique.iter().chain(&independent) {
        if !g.contains_vertex(v) {
            return Err(SplitError::NotSplitPartition(format!(
                "vertex {v} is not in the graph"
            )));
        }
        if std::mem::replace(&mut seen[v - 1], true) {
            return Err(SplitError::NotSplitPartition(format!(
                "vertex {v} listed twice"
            )));
        }
    }
    if let Some(missing) = seen.iter().position(|&b| !b) {
        return Err(SplitError::NotSplitPartition(format!(
            "vertex {} is on neither side",
            missing + 1
        )));
    }
    if !g.is_clique(&clique) {
        return Err(SplitError::NotSplitPartition("K is not a clique".into()));
    }
    if !g.is_independent(&independent) {
        return Err(SplitError::NotSplitPartition("S is not independent".into()));
    }

    let s_witness = independent
        .iter()
        .copied()
        .find(|&sv| clique.iter().all(|&kv| g.has_edge(sv, kv)));
    let k_witness = clique
        .iter()
        .rev()
        .copied()
        .find(|&kv| independent.iter().all(|&sv| !g.has_edge(sv, kv)));

    let (class, omega, alpha) = match (s_witness, k_witness) {
        (None, None) => (SplitClass::Balanced, clique.len(), independent.len()),
        (Some(_), None) => (
            SplitClass::UnbalancedSMax,
            clique.len() + 1,
            independent.len(),
        ),
        (None, Some(_)) => (
            SplitClass::UnbalancedKMax,
            clique.len(),
            independent.len() + 1,
        ),
        (Some(sv), Some(kv)) => unreachable!("{sv} would be adjacent to {kv}"),
    };

    Ok(SplitPartition {
        clique,
        independent,
        class,
        omega,
        alpha,
        s_witness,
        k_witness,
    })
}

/// Moves the K-max witness into S, turning an [`SplitClass::UnbalancedKMax`]
/// partition into an [`SplitClass::UnbalancedSMax`] partition of the same
/// graph. Other classes are returned unchanged.
pub fn normalize_s_max(g: &Graph, p: &SplitPartition) -> Result<SplitPartition, SplitError> {
    let Some(kv) = p.k_witness else {
        return Ok(p.clone());
    };
    let k: Vec<usize> = p.clique.iter().copied().filter(|&v| v != kv).collect();
    let mut s = p.independent.clone();
    s.push(kv);
    classify(g, &k, &s)
}

/// Recognises split graphs with the degree-sequence splittance criterion.
///
/// Sort degrees `d_1 ≥ … ≥ d_n` (ties by ascending id) and let
/// `m = max{i : d_i ≥ i − 1}`. The graph is split iff
/// `Σ_{i≤m} d_i = m(m − 1) + Σ_{i>m} d_i`, in which case the first `m`
/// vertices form a clique and the rest an independent set. The result is
/// normalised so that |S| = α.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    let m = degs
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }

    let p = classify(g, &order[..m], &order[m..])
        .expect("splittance equality implies a split partition");
    Some(normalize_s_max(g, &p).expect("moving the K-max witness keeps the partition split"))
}

/// mc(G^c) from the classification alone: ω + 1 for balanced partitions, ω otherwise.
/// The graph with no vertices has no cliques at all.
pub fn mc_complement_closed_form(p: &SplitPartition) -> usize {
    if p.clique.is_empty() && p.independent.is_empty() {
        return 0;
    }
    match p.class {
        SplitClass::Balanced => p.omega + 1,
        SplitClass::UnbalancedSMax | SplitClass::UnbalancedKMax => p.omega,
    }
}

/// Exhaustive search for any split partition; exponential, used as an oracle.
pub fn brute_force_split(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    assert!(
        g.n() < 32,
        "brute-force split search is limited to small graphs"
    );
    (0u32..1 << g.n()).find_map(|mask| {
        let (k, s): (Vec<usize>, Vec<usize>) =
            g.vertices().partition(|&v| mask & (1 << (v - 1)) != 0);
        (g.is_clique(&k) && g.is_independent(&s)).then_some((k, s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::{clique_number, count_maximal_cliques, independence_number};
    use crate::graph::{complete_graph, cycle_graph, star_graph};

    fn p4() -> Graph {
        Graph::from_edges(4, [(1, 3), (1, 2), (2, 4)]).unwrap()
    }

    #[test]
    fn five_cycle_is_not_split() {
        let c5 = cycle_graph(5).unwrap();
        assert!(recognize_split(&c5).is_none());
        assert!(brute_force_split(&c5).is_none());
    }

    #[test]
    fn star_is_s_max() {
        let g = star_graph(3).unwrap();
        let p = recognize_split(&g).unwrap();
        assert_eq!(p.clique_side(), &[1]);
        assert_eq!(p.independent_side(), &[2, 3, 4]);
        assert_eq!(p.class(), SplitClass::UnbalancedSMax);
        assert_eq!((p.omega(), p.alpha()), (2, 3));
        assert_eq!(
            (clique_number(&g).unwrap(), independence_number(&g).unwrap()),
            (2, 3)
        );
        assert_eq!(mc_complement_closed_form(&p), 2);
    }

    #[test]
    fn p4_is_balanced() {
        let p = recognize_split(&p4()).unwrap();
        assert_eq!(p.clique_side(), &[1, 2]);
        assert_eq!(p.independent_side(), &[3, 4]);
        assert_eq!(p.class(), SplitClass::Balanced);
        assert_eq!((p.omega(), p.alpha()), (2, 2));
        assert_eq!(mc_complement_closed_form(&p), 3);
        assert_eq!(count_maximal_cliques(&p4().complement()).unwrap(), 3);
    }

    #[test]
    fn classify_single_edge() {
        let g = Graph::from_edges(2, [(1, 2)]).unwrap();
        let p = classify(&g, &[1], &[2]).unwrap();
        assert_eq!(p.class(), SplitClass::UnbalancedSMax);
        assert_eq!((p.omega(), p.alpha()), (2, 1));
        assert_eq!(p.s_witness(), Some(2));
    }

    #[test]
    fn classify_edge_plus_isolated_vertex() {
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let p = classify(&g, &[1, 2], &[3]).unwrap();
        assert_eq!(p.class(), SplitClass::UnbalancedKMax);
        assert_eq!((p.omega(), p.alpha()), (2, 2));
        assert!(matches!(p.k_witness(), Some(1 | 2)));
        assert_eq!(mc_complement_closed_form(&p), 2);
        // complement: path 1-3-2
        assert_eq!(count_maximal_cliques(&g.complement()).unwrap(), 2);

        let q = normalize_s_max(&g, &p).unwrap();
        assert_eq!(q.class(), SplitClass::UnbalancedSMax);
        assert_eq!(q.clique_side().len(), q.omega() - 1);
        assert_eq!((q.omega(), q.alpha()), (2, 2));
    }

    #[test]
    fn classify_p4_balanced() {
        let p = classify(&p4(), &[1, 2], &[3, 4]).unwrap();
        assert_eq!(p.class(), SplitClass::Balanced);
        assert_eq!(p.s_witness(), None);
        assert_eq!(p.k_witness(), None);
    }

    #[test]
    fn classify_rejects_non_partitions() {
        let g = p4();
        assert!(classify(&g, &[1, 3], &[2, 4]).is_err());
        assert!(classify(&g, &[1, 2], &[3]).is_err());
        assert!(classify(&g, &[1, 2], &[3, 4, 4]).is_err());
        assert!(classify(&g, &[1, 2], &[3, 4, 5]).is_err());
        assert!(classify(&g, &[3, 4], &[1, 2]).is_err());
    }

    #[test]
    fn complete_graph_normalises_last_vertex_into_s() {
        let k4 = complete_graph(4).unwrap();
        let p = recognize_split(&k4).unwrap();
        assert_eq!(p.clique_side(), &[1, 2, 3]);
        assert_eq!(p.independent_side(), &[4]);
        assert_eq!(p.class(), SplitClass::UnbalancedSMax);
        assert_eq!((p.omega(), p.alpha()), (4, 1));
        assert_eq!(p.s_witness(), Some(4));
    }

    #[test]
    fn degenerate_graphs() {
        let single = Graph::empty(1);
        let p = recognize_split(&single).unwrap();
        assert_eq!(
            (p.omega(), p.alpha(), p.class()),
            (1, 1, SplitClass::UnbalancedSMax)
        );
        assert_eq!(mc_complement_closed_form(&p), 1);

        let empty3 = Graph::empty(3);
        let p = recognize_split(&empty3).unwrap();
        assert!(p.clique_side().is_empty());
        assert_eq!(mc_complement_closed_form(&p), 1);

        let none = Graph::empty(0);
        let p = recognize_split(&none).unwrap();
        assert_eq!((p.omega(), p.alpha()), (0, 0));
        assert_eq!(p.class(), SplitClass::Balanced);
        assert_eq!(mc_complement_closed_form(&p), 0);
    }
}
