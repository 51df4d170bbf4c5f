//! Seeded instance generators.
//!
//! Randomness comes from SplitMix64 (Steele, Lea and Flood), implemented here
//! so that corpora are reproducible independently of any library's RNG.

use serde::Serialize;

use crate::error::GenError;
use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph};
use crate::split::{classify, SplitPartition};

/// The SplitMix64 generator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// True with probability `p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GenKind {
    /// Clique `1..=k`, independent set `k+1..=k+s`, each cross edge kept with
    /// probability `edge_prob`.
    Split {
        k: usize,
        s: usize,
        edge_prob: f64,
    },
    Complete {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,leaves}`.
    Star {
        leaves: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub graph: Graph,
    /// For split instances, the construction's (K, S), classified from the
    /// graph itself.
    pub intended: Option<SplitPartition>,
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    let graph = match spec.kind {
        GenKind::Split { k, s, edge_prob } => return random_split(k, s, edge_prob, spec.seed),
        GenKind::Complete { n } => complete_graph(n)?,
        GenKind::Path { n } => path_graph(n)?,
        GenKind::Cycle { n } => cycle_graph(n)?,
        GenKind::Star { leaves } => star_graph(leaves)?,
    };
    Ok(Generated {
        graph,
        intended: None,
    })
}

fn random_split(k: usize, s: usize, edge_prob: f64, seed: u64) -> Result<Generated, GenError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(GenError::BadProbability(edge_prob));
    }
    if k + s == 0 {
        return Err(GenError::EmptySplit);
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 1..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    // one draw per cross pair, (k, s) in lexicographic order
    for u in 1..=k {
        for v in k + 1..=k + s {
            if rng.bernoulli(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(k + s, edges)?;
    let clique: Vec<usize> = (1..=k).collect();
    let independent: Vec<usize> = (k + 1..=k + s).collect();
    let intended = classify(&graph, &clique, &independent)
        .expect("generated sides are a clique and an independent set");
    Ok(Generated {
        graph,
        intended: Some(intended),
    })
}
