//! Exact minimum biclique partition by branch and bound.
//!
//! The search repeatedly takes the lowest uncovered edge `{u, v}` (in
//! lexicographic order) and either places it into one of the bicliques opened
//! so far, adding `u` and/or `v` to a part, or opens a new biclique
//! `({u}, {v})`. Adding a vertex to one part covers all its edges to the
//! other part at once, so those edges must all still be uncovered. Every
//! partition is reached along exactly one branch, and a branch is cut as soon
//! as it cannot beat the incumbent.
//!
//! The only lower bound used is combinatorial: uncovered edges that no open
//! biclique can absorb need new bicliques, and pairwise incompatible ones
//! need one each.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::biclique::{self, verify_partition, Biclique, BicliquePartition};
use crate::cliques;
use crate::error::SolverError;
use crate::graph::Graph;

/// Default limit on the number of edges accepted by [`bp_exact`].
pub const DEFAULT_MAX_EDGES: usize = 45;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_edges: usize,
    pub budget: Budget,
    /// Worker threads; 1 keeps the search (and its witness) deterministic.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_edges: DEFAULT_MAX_EDGES,
            budget: Budget::unlimited(),
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    /// bp(G).
    pub optimum: usize,
    pub witness: BicliquePartition,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

type Word = u64;

#[inline]
fn bit(v: usize) -> Word {
    1 << v
}

fn bits(mut w: Word) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (w != 0).then(|| {
            let i = w.trailing_zeros() as usize;
            w &= w - 1;
            i
        })
    })
}

/// Shared incumbent and limits; shared across workers in parallel mode.
struct Shared {
    best: AtomicUsize,
    witness: Mutex<Option<Vec<(Word, Word)>>>,
    nodes: AtomicU64,
    stop: AtomicBool,
    budget: Budget,
    start: Instant,
    /// Nodes between budget checks; small node budgets are checked more often.
    stride: u64,
}

impl Shared {
    fn offer(&self, bicliques: &[(Word, Word)]) {
        let mut w = self.witness.lock().unwrap();
        if bicliques.len() < self.best.load(Ordering::SeqCst) {
            self.best.store(bicliques.len(), Ordering::SeqCst);
            *w = Some(bicliques.to_vec());
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Side {
    A,
    B,
}

/// One way of placing the branching edge.
#[derive(Clone, Copy, Debug)]
enum Move {
    /// Add the vertex to a side of an existing biclique.
    Add {
        index: usize,
        vertex: usize,
        side: Side,
    },
    /// Add both endpoints: the first to `A`, the second to `B`.
    AddPair {
        index: usize,
        to_a: usize,
        to_b: usize,
    },
    Open {
        u: usize,
        v: usize,
    },
}

struct Search<'s> {
    uncovered: Vec<Word>,
    bicliques: Vec<(Word, Word)>,
    local_nodes: u64,
    shared: &'s Shared,
}

impl<'s> Search<'s> {
    fn lowest_uncovered(&self) -> Option<(usize, usize)> {
        self.uncovered
            .iter()
            .position(|&w| w != 0)
            .map(|u| (u, self.uncovered[u].trailing_zeros() as usize))
    }

    fn add_vertex(&mut self, index: usize, x: usize, side: Side) {
        let (a, b) = &mut self.bicliques[index];
        let other = match side {
            Side::A => {
                *a |= bit(x);
                *b
            }
            Side::B => {
                *b |= bit(x);
                *a
            }
        };
        debug_assert_eq!(self.uncovered[x] & other, other);
        self.uncovered[x] &= !other;
        for y in bits(other) {
            self.uncovered[y] &= !bit(x);
        }
    }

    fn remove_vertex(&mut self, index: usize, x: usize, side: Side) {
        let (a, b) = &mut self.bicliques[index];
        let other = match side {
            Side::A => {
                *a &= !bit(x);
                *b
            }
            Side::B => {
                *b &= !bit(x);
                *a
            }
        };
        self.uncovered[x] |= other;
        for y in bits(other) {
            self.uncovered[y] |= bit(x);
        }
    }

    fn apply(&mut self, m: Move) {
        match m {
            Move::Add {
                index,
                vertex,
                side,
            } => self.add_vertex(index, vertex, side),
            Move::AddPair { index, to_a, to_b } => {
                self.add_vertex(index, to_a, Side::A);
                self.add_vertex(index, to_b, Side::B);
            }
            Move::Open { u, v } => {
                self.bicliques.push((0, 0));
                let index = self.bicliques.len() - 1;
                self.add_vertex(index, u, Side::A);
                self.add_vertex(index, v, Side::B);
            }
        }
    }

    fn undo(&mut self, m: Move) {
        match m {
            Move::Add {
                index,
                vertex,
                side,
            } => self.remove_vertex(index, vertex, side),
            Move::AddPair { index, to_a, to_b } => {
                self.remove_vertex(index, to_b, Side::B);
                self.remove_vertex(index, to_a, Side::A);
            }
            Move::Open { u, v } => {
                let index = self.bicliques.len() - 1;
                self.remove_vertex(index, v, Side::B);
                self.remove_vertex(index, u, Side::A);
                self.bicliques.pop();
            }
        }
    }

    /// Ways to put the uncovered edge `{u, v}` into biclique `index`.
    fn placements(&self, index: usize, u: usize, v: usize, out: &mut Vec<Move>) {
        let (a, b) = self.bicliques[index];
        let unc = &self.uncovered;
        let fits = |x: usize, other: Word| unc[x] & other == other;
        let side_of = |x: usize| {
            if a & bit(x) != 0 {
                Some(Side::A)
            } else if b & bit(x) != 0 {
                Some(Side::B)
            } else {
                None
            }
        };
        match (side_of(u), side_of(v)) {
            (Some(_), Some(_)) => {}
            (Some(Side::A), None) if fits(v, a) => out.push(Move::Add {
                index,
                vertex: v,
                side: Side::B,
            }),
            (Some(Side::B), None) if fits(v, b) => out.push(Move::Add {
                index,
                vertex: v,
                side: Side::A,
            }),
            (None, Some(Side::A)) if fits(u, a) => out.push(Move::Add {
                index,
                vertex: u,
                side: Side::B,
            }),
            (None, Some(Side::B)) if fits(u, b) => out.push(Move::Add {
                index,
                vertex: u,
                side: Side::A,
            }),
            (None, None) => {
                if fits(u, b) && fits(v, a) {
                    out.push(Move::AddPair {
                        index,
                        to_a: u,
                        to_b: v,
                    });
                }
                if fits(u, a) && fits(v, b) {
                    out.push(Move::AddPair {
                        index,
                        to_a: v,
                        to_b: u,
                    });
                }
            }
            _ => {}
        }
    }

    /// Whether some open biclique could still take the uncovered edge `{x, y}`.
    fn absorbable(&self, x: usize, y: usize) -> bool {
        let unc = &self.uncovered;
        let fits = |z: usize, other: Word| unc[z] & other == other;
        self.bicliques.iter().any(|&(a, b)| {
            let (xa, xb, ya, yb) = (
                a & bit(x) != 0,
                b & bit(x) != 0,
                a & bit(y) != 0,
                b & bit(y) != 0,
            );
            match (xa || xb, ya || yb) {
                (true, true) => false,
                (true, false) => fits(y, if xa { a } else { b }),
                (false, true) => fits(x, if ya { a } else { b }),
                (false, false) => (fits(x, b) && fits(y, a)) || (fits(x, a) && fits(y, b)),
            }
        })
    }

    /// Lower bound on the number of bicliques still to be opened: a greedy
    /// set of non-absorbable edges, no two of which fit in one biclique.
    fn new_biclique_bound(&self, limit: usize) -> usize {
        let unc = &self.uncovered;
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        for (x, &row) in unc.iter().enumerate() {
            for y in bits(row) {
                if y <= x || self.absorbable(x, y) {
                    continue;
                }
                // edges sharing a vertex always fit in a star
                let compatible = chosen.iter().any(|&(c, d)| {
                    c == x
                        || c == y
                        || d == x
                        || d == y
                        || (unc[x] & bit(d) != 0 && unc[y] & bit(c) != 0)
                        || (unc[x] & bit(c) != 0 && unc[y] & bit(d) != 0)
                });
                if !compatible {
                    chosen.push((x, y));
                    if chosen.len() >= limit {
                        return chosen.len();
                    }
                }
            }
        }
        chosen.len()
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        let stride = self.shared.stride;
        if self.local_nodes.is_multiple_of(stride) {
            let total = self.shared.nodes.fetch_add(stride, Ordering::Relaxed) + stride;
            let over_nodes = self.shared.budget.max_nodes.is_some_and(|m| total > m);
            let over_time = self
                .shared
                .budget
                .max_time
                .is_some_and(|t| self.shared.start.elapsed() > t);
            if over_nodes || over_time {
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush_nodes(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes % self.shared.stride, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    fn moves_at(&self, u: usize, v: usize, best: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        for index in 0..self.bicliques.len() {
            self.placements(index, u, v, &mut moves);
        }
        if self.bicliques.len() + 1 < best {
            moves.push(Move::Open { u, v });
        }
        moves
    }

    fn run(&mut self) {
        if !self.tick() {
            return;
        }
        let best = self.shared.best.load(Ordering::Relaxed);
        let count = self.bicliques.len();
        let Some((u, v)) = self.lowest_uncovered() else {
            if count < best {
                self.shared.offer(&self.bicliques);
            }
            return;
        };
        if count >= best {
            return;
        }
        let room = best - count - 1;
        if self.new_biclique_bound(room + 1) > room {
            return;
        }
        for m in self.moves_at(u, v, best) {
            if let Move::Open { .. } = m {
                if self.bicliques.len() + 1 >= self.shared.best.load(Ordering::Relaxed) {
                    continue;
                }
            }
            self.apply(m);
            self.run();
            self.undo(m);
        }
    }
}

fn to_partition(bicliques: &[(Word, Word)]) -> BicliquePartition {
    bicliques
        .iter()
        .map(|&(a, b)| {
            Biclique::canonical(
                bits(a).map(|v| v + 1).collect::<Vec<_>>(),
                bits(b).map(|v| v + 1).collect::<Vec<_>>(),
            )
        })
        .collect()
}

/// Repeatedly takes the star of all remaining edges at a vertex of maximum
/// remaining degree (lowest id on ties).
pub fn greedy_star_partition(g: &Graph) -> BicliquePartition {
    let mut remaining: Vec<Vec<usize>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut out = Vec::new();
    loop {
        let (center, deg) = remaining
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.len()))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .unwrap_or((0, 0));
        if deg == 0 {
            break;
        }
        let leaves = std::mem::take(&mut remaining[center - 1]);
        for &l in &leaves {
            remaining[l - 1].retain(|&x| x != center);
        }
        out.push(Biclique::new(vec![center], leaves));
    }
    BicliquePartition::new(out)
}

/// Initial incumbent: the star construction for split graphs, else the
/// greedy star partition.
fn initial_partition(g: &Graph) -> BicliquePartition {
    match biclique::bp_split(g) {
        Ok(r) => r.witness,
        Err(_) => greedy_star_partition(g),
    }
}

fn check_limits(g: &Graph, config: &SolverConfig) -> Result<(), SolverError> {
    if g.n() > 64 {
        return Err(SolverError::TooManyVertices { n: g.n() });
    }
    if g.edge_count() > config.max_edges {
        return Err(SolverError::TooManyEdges {
            m: g.edge_count(),
            limit: config.max_edges,
        });
    }
    Ok(())
}

/// Runs the search with incumbent bound `bound` (solutions must use fewer
/// bicliques). Returns the best partition found below the bound, the node
/// count, and whether the search was exhausted.
fn search(
    g: &Graph,
    bound: usize,
    config: &SolverConfig,
) -> (Option<Vec<(Word, Word)>>, u64, bool) {
    let rows = g.word_rows().expect("vertex limit checked");
    let shared = Shared {
        best: AtomicUsize::new(bound),
        witness: Mutex::new(None),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        budget: config.budget,
        start: Instant::now(),
        stride: config
            .budget
            .max_nodes
            .map_or(1024, |m| (m / 64).clamp(1, 1024)),
    };
    let root = Search {
        uncovered: rows,
        bicliques: Vec::new(),
        local_nodes: 0,
        shared: &shared,
    };

    if config.threads <= 1 {
        let mut s = root;
        s.run();
        s.flush_nodes();
    } else {
        let frontier = split_frontier(root, config.threads * 8);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            frontier.into_par_iter().for_each(|(uncovered, bicliques)| {
                let mut s = Search {
                    uncovered,
                    bicliques,
                    local_nodes: 0,
                    shared: &shared,
                };
                s.run();
                s.flush_nodes();
            })
        });
    }

    let exhausted = !shared.stop.load(Ordering::SeqCst);
    let nodes = shared.nodes.load(Ordering::SeqCst);
    let witness = shared.witness.into_inner().unwrap();
    (witness, nodes, exhausted)
}

type Subproblem = (Vec<Word>, Vec<(Word, Word)>);

/// Expands the search tree breadth-first until it has at least `target`
/// open subproblems (or the tree runs out).
fn split_frontier(root: Search<'_>, target: usize) -> Vec<Subproblem> {
    let shared = root.shared;
    let mut layer: Vec<Subproblem> = vec![(root.uncovered, root.bicliques)];
    for _ in 0..64 {
        if layer.len() >= target {
            break;
        }
        let mut next = Vec::new();
        let mut grew = false;
        for (uncovered, bicliques) in layer {
            let mut s = Search {
                uncovered,
                bicliques,
                local_nodes: 0,
                shared,
            };
            let best = shared.best.load(Ordering::SeqCst);
            match s.lowest_uncovered() {
                None => {
                    if s.bicliques.len() < best {
                        shared.offer(&s.bicliques);
                    }
                }
                Some((u, v)) if s.bicliques.len() < best => {
                    grew = true;
                    for m in s.moves_at(u, v, best) {
                        s.apply(m);
                        next.push((s.uncovered.clone(), s.bicliques.clone()));
                        s.undo(m);
                    }
                }
                Some(_) => {}
            }
        }
        layer = next;
        if !grew {
            break;
        }
    }
    layer
}

/// Exact biclique partition number of `g` with an optimal witness.
pub fn bp_exact(g: &Graph, config: &SolverConfig) -> Result<SolverResult, SolverError> {
    check_limits(g, config)?;
    let start = Instant::now();
    let initial = initial_partition(g);
    debug_assert!(verify_partition(g, &initial).unwrap().is_ok());

    let (found, nodes, exhausted) = search(g, initial.len(), config);
    let witness = found.map_or(initial, |w| to_partition(&w));
    if !exhausted {
        return Err(SolverError::BudgetExceeded {
            upper_bound: witness.len(),
            witness,
            nodes_explored: nodes,
        });
    }
    Ok(SolverResult {
        optimum: witness.len(),
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Decides whether `g` has a biclique partition with at most `r` bicliques.
/// `Ok(None)` certifies by exhausted search that none exists.
pub fn partition_with_at_most(
    g: &Graph,
    r: usize,
    config: &SolverConfig,
) -> Result<Option<BicliquePartition>, SolverError> {
    check_limits(g, config)?;
    let (found, nodes, exhausted) = search(g, r + 1, config);
    match found {
        Some(w) => Ok(Some(to_partition(&w))),
        None if exhausted => Ok(None),
        None => {
            let witness = initial_partition(g);
            Err(SolverError::BudgetExceeded {
                upper_bound: witness.len(),
                witness,
                nodes_explored: nodes,
            })
        }
    }
}

/// Three independent computations of bp(G) for a split graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub exact: usize,
    pub closed_form: usize,
    /// mc(G^c) by explicit enumeration.
    pub mc_complement: usize,
    pub pass: bool,
    pub nodes_explored: u64,
}

impl TheoremReport {
    pub fn mc_minus_one(&self) -> usize {
        self.mc_complement.saturating_sub(1)
    }
}

/// Compares the exact solver, the closed form and mc(G^c) − 1 on a split graph.
pub fn check_theorem(g: &Graph, config: &SolverConfig) -> Result<TheoremReport, SolverError> {
    let closed = biclique::bp_split(g)?;
    let mc_complement = cliques::count_maximal_cliques(&g.complement())?;
    let exact = bp_exact(g, config)?;
    let pass = exact.optimum == closed.value && closed.value == mc_complement.saturating_sub(1);
    Ok(TheoremReport {
        exact: exact.optimum,
        closed_form: closed.value,
        mc_complement,
        pass,
        nodes_explored: exact.nodes_explored,
    })
}
