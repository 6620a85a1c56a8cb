//! Brute-force reference answers for small instances.
//!
//! These are deliberately naive — subset enumeration over bitmasks — and
//! refuse anything with more than [`ORACLE_LIMIT`] elements. They exist so
//! the randomized reduction machinery has something unimpeachable to be
//! checked against.

use crate::error::{Error, Result};
use crate::exact_linalg::Scalar;
use crate::instance::RvcInstance;
use crate::matroid::LinearMatroid;

pub const ORACLE_LIMIT: usize = 16;

/// Minimum matroid rank over all vertex covers of the instance's graph.
///
/// A set covers every edge exactly when its complement is independent in
/// the graph, and rank is monotone, so it suffices to scan complements of
/// maximal independent sets.
pub fn tau_bruteforce(inst: &RvcInstance) -> Result<usize> {
    let verts: Vec<u32> = inst.graph().vertices().collect();
    let n = verts.len();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimit { size: n, limit: ORACLE_LIMIT });
    }
    let mut adj = vec![0u32; n];
    for (u, v) in inst.graph().edges() {
        let iu = verts.binary_search(&u).unwrap();
        let iv = verts.binary_search(&v).unwrap();
        adj[iu] |= 1 << iv;
        adj[iv] |= 1 << iu;
    }
    let mut best = usize::MAX;
    for mask in 0u32..1 << n {
        let independent = (0..n).all(|i| mask & (1 << i) == 0 || adj[i] & mask == 0);
        if !independent {
            continue;
        }
        let maximal = (0..n).all(|j| mask & (1 << j) != 0 || adj[j] & mask != 0);
        if !maximal {
            continue;
        }
        let cover: Vec<u32> = (0..n)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| verts[i])
            .collect();
        best = best.min(inst.matroid().rank_subset(&cover)?);
    }
    Ok(best)
}

/// YES iff some vertex cover has rank at most the budget.
pub fn decide_bruteforce(inst: &RvcInstance) -> Result<bool> {
    Ok((tau_bruteforce(inst)? as i64) <= inst.budget())
}

/// Check that `g` lies on the flat spanned by `flat` and is in general
/// position there: no subset of the ground set whose span misses part of
/// the flat can see `g` in its span.
pub fn verify_general_position(m: &LinearMatroid, flat: &[u32], g: &[Scalar]) -> Result<bool> {
    let labels = m.labels().to_vec();
    let n = labels.len();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimit { size: n, limit: ORACLE_LIMIT });
    }
    if !m.in_span_of(flat, g)? {
        return Ok(false);
    }
    let mut with_flat = flat.to_vec();
    let base = with_flat.len();
    for mask in 0u32..1 << n {
        let subset: Vec<u32> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| labels[i])
            .collect();
        let r_x = m.rank_subset(&subset)?;
        if r_x < subset.len() {
            continue; // dependent; its span is already covered by a basis
        }
        with_flat.truncate(base);
        with_flat.extend_from_slice(&subset);
        if m.rank_subset(&with_flat)? == r_x {
            continue; // subset spans the whole flat, g is allowed in
        }
        if m.in_span_of(&subset, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
