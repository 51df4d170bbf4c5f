//! Biclique partitions: the data model, verification, the star constructions
//! for split graphs and the closed-form biclique partition number.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use log::warn;
use serde::Serialize;

use crate::error::{PartitionError, SplitError};
use crate::graph::Graph;
use crate::split::{self, SplitClass, SplitPartition};

/// A complete bipartite subgraph given by its two parts.
///
/// The biclique's edges are exactly the pairs with one end in each part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Biclique {
    part_a: Vec<usize>,
    part_b: Vec<usize>,
}

impl Biclique {
    /// Keeps the given orientation; parts are sorted and deduplicated.
    pub fn new(part_a: impl Into<Vec<usize>>, part_b: impl Into<Vec<usize>>) -> Self {
        let mut part_a = part_a.into();
        let mut part_b = part_b.into();
        part_a.sort_unstable();
        part_a.dedup();
        part_b.sort_unstable();
        part_b.dedup();
        Biclique { part_a, part_b }
    }

    /// Canonical orientation: `part_a` holds the smaller minimum vertex id.
    pub fn canonical(part_a: impl Into<Vec<usize>>, part_b: impl Into<Vec<usize>>) -> Self {
        let b = Biclique::new(part_a, part_b);
        match (b.part_a.first(), b.part_b.first()) {
            (Some(x), Some(y)) if y < x => b.flipped(),
            (None, Some(_)) => b.flipped(),
            _ => b,
        }
    }

    pub fn part_a(&self) -> &[usize] {
        &self.part_a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.part_b
    }

    pub fn flipped(&self) -> Self {
        Biclique {
            part_a: self.part_b.clone(),
            part_b: self.part_a.clone(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.part_a.len() * self.part_b.len()
    }

    /// Edges `(min, max)` across the two parts.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.part_a
            .iter()
            .flat_map(move |&a| self.part_b.iter().map(move |&b| (a.min(b), a.max(b))))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.part_a.binary_search(&v).is_ok() || self.part_b.binary_search(&v).is_ok()
    }

    /// The star centre: the singleton part, preferring `part_a` when both
    /// parts are singletons.
    pub fn star_center(&self) -> Option<usize> {
        match (self.part_a.as_slice(), self.part_b.as_slice()) {
            ([c], _) => Some(*c),
            (_, [c]) => Some(*c),
            _ => None,
        }
    }
}

/// An ordered list of bicliques `B_1, …, B_r`, claimed to partition the edges of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BicliquePartition {
    bicliques: Vec<Biclique>,
}

impl BicliquePartition {
    pub fn new(bicliques: Vec<Biclique>) -> Self {
        BicliquePartition { bicliques }
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Biclique> {
        self.bicliques.iter()
    }

    /// Total number of edges claimed, counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.bicliques.iter().map(Biclique::edge_count).sum()
    }

    /// Maps every claimed edge to the 1-based index of the first biclique claiming it.
    pub fn edge_assignment(&self) -> BTreeMap<(usize, usize), usize> {
        let mut map = BTreeMap::new();
        for (i, b) in self.bicliques.iter().enumerate() {
            for e in b.edges() {
                map.entry(e).or_insert(i + 1);
            }
        }
        map
    }

    /// Reorients every biclique so that no vertex of `independent` lies in
    /// `part_a`. In a valid partition of a split graph the vertices of S in a
    /// single biclique always share a part, so this is always possible there.
    pub fn oriented_for_independent_side(&self, independent: &[usize]) -> Self {
        let bicliques = self
            .bicliques
            .iter()
            .map(|b| {
                if b.part_a.iter().any(|v| independent.contains(v)) {
                    b.flipped()
                } else {
                    b.clone()
                }
            })
            .collect();
        BicliquePartition { bicliques }
    }

    /// Every biclique in canonical orientation.
    pub fn canonicalized(&self) -> Self {
        BicliquePartition {
            bicliques: self
                .bicliques
                .iter()
                .map(|b| Biclique::canonical(b.part_a.clone(), b.part_b.clone()))
                .collect(),
        }
    }
}

impl<'a> IntoIterator for &'a BicliquePartition {
    type Item = &'a Biclique;
    type IntoIter = std::slice::Iter<'a, Biclique>;

    fn into_iter(self) -> Self::IntoIter {
        self.bicliques.iter()
    }
}

impl FromIterator<Biclique> for BicliquePartition {
    fn from_iter<I: IntoIterator<Item = Biclique>>(iter: I) -> Self {
        BicliquePartition::new(iter.into_iter().collect())
    }
}

/// Why a claimed partition is not a biclique partition. Biclique indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    EmptyPart {
        index: usize,
    },
    SharedVertex {
        index: usize,
        vertex: usize,
    },
    NotAnEdge {
        index: usize,
        u: usize,
        v: usize,
    },
    CoveredTwice {
        u: usize,
        v: usize,
        first: usize,
        second: usize,
    },
    Uncovered {
        u: usize,
        v: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::EmptyPart { index } => write!(f, "biclique {index} has an empty part"),
            Violation::SharedVertex { index, vertex } => {
                write!(f, "biclique {index} has vertex {vertex} in both parts")
            }
            Violation::NotAnEdge { index, u, v } => {
                write!(
                    f,
                    "biclique {index} claims {{{u}, {v}}}, which is not an edge"
                )
            }
            Violation::CoveredTwice {
                u,
                v,
                first,
                second,
            } => {
                write!(
                    f,
                    "edge {{{u}, {v}}} is covered by bicliques {first} and {second}"
                )
            }
            Violation::Uncovered { u, v } => write!(f, "edge {{{u}, {v}}} is not covered"),
        }
    }
}

/// Checks that `p` partitions the edge set of `g` into bicliques.
///
/// Bicliques are scanned in order (each one's claimed edges in sorted order),
/// then the edges of `g` in sorted order; the first problem found is returned.
pub fn verify_partition(
    g: &Graph,
    p: &BicliquePartition,
) -> Result<Result<(), Violation>, PartitionError> {
    for (i, b) in p.iter().enumerate() {
        if let Some(&vertex) = b
            .part_a
            .iter()
            .chain(&b.part_b)
            .find(|&&v| !g.contains_vertex(v))
        {
            return Err(PartitionError::UnknownVertex {
                index: i + 1,
                vertex,
            });
        }
    }

    let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (i, b) in p.iter().enumerate() {
        let index = i + 1;
        if b.part_a.is_empty() || b.part_b.is_empty() {
            return Ok(Err(Violation::EmptyPart { index }));
        }
        if let Some(&vertex) = b.part_a.iter().find(|v| b.part_b.binary_search(v).is_ok()) {
            return Ok(Err(Violation::SharedVertex { index, vertex }));
        }
        let mut edges: Vec<_> = b.edges().collect();
        edges.sort_unstable();
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Ok(Err(Violation::NotAnEdge { index, u, v }));
            }
            if let Some(&first) = owner.get(&(u, v)) {
                return Ok(Err(Violation::CoveredTwice {
                    u,
                    v,
                    first,
                    second: index,
                }));
            }
            owner.insert((u, v), index);
        }
    }
    if let Some((u, v)) = g.edges().find(|e| !owner.contains_key(e)) {
        return Ok(Err(Violation::Uncovered { u, v }));
    }
    Ok(Ok(()))
}

/// Stars centred at `centers`, in the given order. Each star takes the
/// centre's edges not already taken by an earlier star; empty stars are
/// dropped. Centres are placed in `part_a`.
pub fn star_partition_with_order(g: &Graph, centers: &[usize]) -> BicliquePartition {
    let mut done = vec![false; g.n() + 1];
    let mut out = Vec::with_capacity(centers.len());
    for &c in centers {
        let leaves: Vec<usize> = g.neighbors(c).filter(|&v| !done[v]).collect();
        done[c] = true;
        if leaves.is_empty() {
            warn!("star centred at {c} is empty and was dropped");
            continue;
        }
        out.push(Biclique::new(vec![c], leaves));
    }
    BicliquePartition::new(out)
}

fn expect_class(p: &SplitPartition, expected: SplitClass) -> Result<(), SplitError> {
    if p.class() == expected {
        Ok(())
    } else {
        Err(SplitError::WrongClass {
            expected: expected.name(),
            got: p.class().name(),
        })
    }
}

/// ω − 1 stars centred at the clique side of an S-max unbalanced partition,
/// in ascending id order.
pub fn star_partition_unbalanced(
    g: &Graph,
    p: &SplitPartition,
) -> Result<BicliquePartition, SplitError> {
    expect_class(p, SplitClass::UnbalancedSMax)?;
    Ok(star_partition_with_order(g, p.clique_side()))
}

/// ω stars centred at the clique side of a balanced partition, in ascending id order.
pub fn star_partition_balanced(
    g: &Graph,
    p: &SplitPartition,
) -> Result<BicliquePartition, SplitError> {
    expect_class(p, SplitClass::Balanced)?;
    Ok(star_partition_with_order(g, p.clique_side()))
}

/// The biclique partition number of a split graph together with an optimal partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitBp {
    pub value: usize,
    pub partition: SplitPartition,
    pub witness: BicliquePartition,
}

/// bp(G) = mc(G^c) − 1 for split `g`, with the matching star construction as witness.
pub fn bp_split(g: &Graph) -> Result<SplitBp, SplitError> {
    let p = split::recognize_split(g).ok_or(SplitError::NotSplit)?;
    bp_split_with(g, &p)
}

/// As [`bp_split`], starting from a caller-supplied split partition of `g`.
pub fn bp_split_with(g: &Graph, p: &SplitPartition) -> Result<SplitBp, SplitError> {
    let p = split::normalize_s_max(g, p)?;
    let value = split::mc_complement_closed_form(&p).saturating_sub(1);
    let witness = match p.class() {
        SplitClass::Balanced => star_partition_balanced(g, &p)?,
        _ => star_partition_unbalanced(g, &p)?,
    };
    if witness.len() != value {
        warn!(
            "star witness has {} bicliques but the closed form gives {value}",
            witness.len()
        );
    }
    Ok(SplitBp {
        value,
        partition: p,
        witness,
    })
}

/// 1-based indices of bicliques that are stars centred at a vertex of `s`.
pub fn audit_star_in_s(p: &BicliquePartition, s: &[usize]) -> Vec<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, b)| b.star_center().is_some_and(|c| s.contains(&c)))
        .map(|(i, _)| i + 1)
        .collect()
}

/// 1-based indices of bicliques with a part entirely inside `s`.
pub fn audit_part_in_s(p: &BicliquePartition, s: &[usize]) -> Vec<usize> {
    let inside = |part: &[usize]| part.iter().all(|v| s.contains(v));
    p.iter()
        .enumerate()
        .filter(|(_, b)| inside(&b.part_a) || inside(&b.part_b))
        .map(|(i, _)| i + 1)
        .collect()
}

/// One line per biclique: `B <i> : a1 a2 ... | b1 b2 ...`.
pub fn write_partition(p: &BicliquePartition) -> String {
    let join = |vs: &[usize]| {
        vs.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    for (i, b) in p.iter().enumerate() {
        writeln!(
            out,
            "B {} : {} | {}",
            i + 1,
            join(&b.part_a),
            join(&b.part_b)
        )
        .unwrap();
    }
    out
}

/// Parses the format produced by [`write_partition`]. Blank lines and lines
/// starting with `c` or `#` are skipped; indices must run 1, 2, 3, …
pub fn parse_partition(text: &str) -> Result<BicliquePartition, PartitionError> {
    let mut bicliques = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| PartitionError::Parse { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('#') {
            continue;
        }
        let rest = trimmed
            .strip_prefix('B')
            .ok_or_else(|| err("expected a line starting with B".into()))?;
        let (head, body) = rest
            .split_once(':')
            .ok_or_else(|| err("missing ':'".into()))?;
        let index: usize = head
            .trim()
            .parse()
            .map_err(|_| err(format!("invalid biclique index {:?}", head.trim())))?;
        if index != bicliques.len() + 1 {
            return Err(err(format!(
                "expected biclique {}, got {index}",
                bicliques.len() + 1
            )));
        }
        let (a, b) = body
            .split_once('|')
            .ok_or_else(|| err("missing '|'".into()))?;
        let parse_part = |s: &str| -> Result<Vec<usize>, PartitionError> {
            s.split_whitespace()
                .map(|t| t.parse().map_err(|_| err(format!("invalid vertex {t:?}"))))
                .collect()
        };
        bicliques.push(Biclique::new(parse_part(a)?, parse_part(b)?));
    }
    Ok(BicliquePartition::new(bicliques))
}
