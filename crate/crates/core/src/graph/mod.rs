//! Simple undirected graphs with stable integer vertex ids.
//!
//! Ids are dense (1..=n) when a graph is built from DIMACS or a generator;
//! deletions leave gaps and ids are never reused, so a vertex keeps its
//! identity through the whole reduction pipeline. Iteration everywhere is in
//! sorted order, which keeps the pipeline deterministic.

mod cover;
mod dimacs;
mod matching;

pub use cover::{vertex_cover, CoverOutcome, CoverStrategy};
pub use dimacs::{emit_dimacs, parse_dimacs};
pub use matching::maximum_matching;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    verts: BTreeSet<u32>,
    edges: BTreeSet<(u32, u32)>, // normalized: u < v
}

fn norm(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Vertices 1..=n, no edges.
    pub fn with_vertices(n: u32) -> Graph {
        Graph {
            verts: (1..=n).collect(),
            edges: BTreeSet::new(),
        }
    }

    pub fn add_vertex(&mut self, v: u32) {
        self.verts.insert(v);
    }

    pub fn add_edge(&mut self, u: u32, v: u32) -> Result<()> {
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        for w in [u, v] {
            if !self.verts.contains(&w) {
                return Err(Error::Input(format!("edge endpoint {w} is not a vertex")));
            }
        }
        if !self.edges.insert(norm(u, v)) {
            return Err(Error::Input(format!("duplicate edge {u}-{v}")));
        }
        Ok(())
    }

    /// Removes a vertex together with its incident edges. Unknown ids are a
    /// no-op.
    pub fn remove_vertex(&mut self, v: u32) {
        self.verts.remove(&v);
        self.edges.retain(|&(a, b)| a != v && b != v);
    }

    pub fn remove_edge(&mut self, u: u32, v: u32) {
        self.edges.remove(&norm(u, v));
    }

    pub fn has_vertex(&self, v: u32) -> bool {
        self.verts.contains(&v)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&norm(u, v))
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.verts.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }
}

/// Erdos-Renyi G(n, p) on vertices 1..=n. The inclusion probability is an
/// exact rational in [0, 1]; each pair (u, v) in lexicographic order draws
/// one 64-bit word, so the graph is a pure function of (n, p, seed).
pub fn gen_gnp(n: u32, p: &BigRational, seed: u64) -> Result<Graph> {
    if p.is_negative() || p > &BigRational::one() {
        return Err(Error::Input(format!("edge probability {p} outside [0,1]")));
    }
    // include a pair iff draw < floor(p * 2^64)
    let scale = BigRational::from_integer(num_bigint::BigInt::from(1u128 << 64));
    let threshold = (p * scale).floor().to_integer();
    let threshold: BigUint = threshold.try_into().expect("non-negative");
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut g = Graph::with_vertices(n);
    for u in 1..=n {
        for v in u + 1..=n {
            let draw = BigUint::from(rng.next_u64());
            if draw < threshold {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}
