//! Vertex cover strategies.
//!
//! `Exact` is a branch-and-bound search over uncovered edges with a greedy
//! matching lower bound; it either returns a true minimum cover or reports
//! that the cover number exceeds the bound. `MatchingApprox` takes both
//! endpoints of a greedy maximal matching (a 2-approximation).
//! `Provided` validates a caller-supplied cover. All three are
//! deterministic.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum CoverStrategy {
    /// Minimum vertex cover, or `Exceeded` if it is larger than `bound`.
    Exact { bound: usize },
    /// Endpoints of a greedy maximal matching; size <= 2 * mu(G).
    MatchingApprox,
    /// A cover supplied by the caller, validated against the graph.
    Provided(BTreeSet<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverOutcome {
    Cover(BTreeSet<u32>),
    /// Exact search proved the cover number exceeds the requested bound.
    Exceeded,
}

pub fn vertex_cover(g: &Graph, strategy: &CoverStrategy) -> Result<CoverOutcome> {
    match strategy {
        CoverStrategy::Exact { bound } => Ok(match exact_min_cover(g, *bound) {
            Some(c) => CoverOutcome::Cover(c),
            None => CoverOutcome::Exceeded,
        }),
        CoverStrategy::MatchingApprox => {
            let mut cover = BTreeSet::new();
            for (u, v) in g.edges() {
                if !cover.contains(&u) && !cover.contains(&v) {
                    cover.insert(u);
                    cover.insert(v);
                }
            }
            Ok(CoverOutcome::Cover(cover))
        }
        CoverStrategy::Provided(set) => {
            for v in set {
                if !g.has_vertex(*v) {
                    return Err(Error::Input(format!("cover vertex {v} is not in the graph")));
                }
            }
            for (u, v) in g.edges() {
                if !set.contains(&u) && !set.contains(&v) {
                    return Err(Error::Input(format!(
                        "provided set does not cover edge {u}-{v}"
                    )));
                }
            }
            Ok(CoverOutcome::Cover(set.clone()))
        }
    }
}

/// Size of a greedy maximal matching restricted to `edges`; a lower bound on
/// any vertex cover of those edges.
fn greedy_matching_bound(edges: &[(u32, u32)]) -> usize {
    let mut used = BTreeSet::new();
    let mut count = 0;
    for &(u, v) in edges {
        if !used.contains(&u) && !used.contains(&v) {
            used.insert(u);
            used.insert(v);
            count += 1;
        }
    }
    count
}

fn exact_min_cover(g: &Graph, bound: usize) -> Option<BTreeSet<u32>> {
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let mut best: Option<BTreeSet<u32>> = None;
    let mut current = BTreeSet::new();
    search(&edges, &mut current, &mut best, bound);
    best
}

fn search(
    edges: &[(u32, u32)],
    current: &mut BTreeSet<u32>,
    best: &mut Option<BTreeSet<u32>>,
    bound: usize,
) {
    let uncovered: Vec<(u32, u32)> = edges
        .iter()
        .copied()
        .filter(|(u, v)| !current.contains(u) && !current.contains(v))
        .collect();
    // strictly improve on the best so far, and never exceed the bound
    let ceiling = best.as_ref().map_or(bound + 1, |b| b.len());
    if uncovered.is_empty() {
        if current.len() < ceiling {
            *best = Some(current.clone());
        }
        return;
    }
    if current.len() + greedy_matching_bound(&uncovered) >= ceiling {
        return;
    }
    let (u, v) = uncovered[0];
    for w in [u, v] {
        current.insert(w);
        search(edges, current, best, bound);
        current.remove(&w);
    }
}
