//! Deterministic edge-count compression.
//!
//! Each edge `uv` is encoded as the symmetrized outer product of the
//! endpoint columns, a vector with one slot per unordered row pair. An
//! edge whose encoding is a linear combination of the other edges'
//! encodings is covered by every low-rank set that covers those edges, so
//! it can be dropped without changing the answer — no randomness involved.
//! A greedy pass in sorted edge order keeps an independent family, which
//! caps the surviving edge count at `r(r+1)/2` for an `r`-row matroid.
//! Vertices isolated by the deletions are removed afterwards.

use crate::error::{Error, Result};
use crate::exact_linalg::{Domain, Eliminator, Scalar};
use crate::instance::RvcInstance;

/// Symmetrized outer product of two columns of length `r`, laid out
/// row-major over the upper triangle: slots `(0,0), (0,1), ..., (0,r-1),
/// (1,1), ..., (r-1,r-1)`. The diagonal slot `(i,i)` holds `2*u_i*v_i`,
/// the off-diagonal slot `(i,j)` holds `u_i*v_j + u_j*v_i`.
pub fn sym_square(domain: &Domain, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    let r = u.len();
    let mut out = Vec::with_capacity(r * (r + 1) / 2);
    for i in 0..r {
        for j in i..r {
            let a = domain.mul(&u[i], &v[j]);
            let b = domain.mul(&u[j], &v[i]);
            out.push(domain.add(&a, &b));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct EdgeReduceReport {
    pub kept: usize,
    pub deleted: Vec<(u32, u32)>,
    /// The `r(r+1)/2` ceiling the kept count is guaranteed to respect.
    pub slot_cap: usize,
}

/// Drop every edge whose symmetric-square encoding depends on the edges
/// already kept, scanning in sorted edge order.
pub fn reduce_edges(inst: &mut RvcInstance) -> Result<EdgeReduceReport> {
    let domain = inst.domain().clone();
    let r = inst.matroid().rep().rows();
    let dim = r * (r + 1) / 2;
    let edges: Vec<(u32, u32)> = inst.graph().edges().collect();
    let mut elim = Eliminator::new(&domain, dim);
    let mut deleted = Vec::new();
    for &(u, v) in &edges {
        let cu = inst.matroid().column(u)?.to_vec();
        let cv = inst.matroid().column(v)?.to_vec();
        let enc = sym_square(&domain, &cu, &cv)?;
        if !elim.insert(enc) {
            deleted.push((u, v));
        }
    }
    for &(u, v) in &deleted {
        inst.remove_edge(u, v);
    }
    Ok(EdgeReduceReport {
        kept: edges.len() - deleted.len(),
        deleted,
        slot_cap: dim,
    })
}

/// Delete all isolated vertices from graph and matroid alike. They can
/// never be required by a cover, so the minimum cover rank is unchanged.
pub fn remove_isolated(inst: &mut RvcInstance) -> Result<Vec<u32>> {
    let isolated = inst.graph().isolated_vertices();
    for &v in &isolated {
        inst.delete_vertex(v)?;
    }
    Ok(isolated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;
    use std::collections::BTreeSet;

    use crate::exact_linalg::ExactMatrix;
    use crate::graph::{gen_gnp, vertex_cover, CoverOutcome, CoverStrategy, Graph};
    use crate::instance::oracle::tau_bruteforce;
    use crate::matroid::LinearMatroid;
    use crate::rank_reduction::{batch_reduce, Mode, RandomnessBudget};

    const M61: u64 = (1 << 61) - 1;

    fn gf(q: u64) -> Domain {
        Domain::prime_field(BigUint::from(q)).unwrap()
    }

    fn fmt_all(domain: &Domain, v: &[Scalar]) -> Vec<String> {
        v.iter().map(|s| domain.format(s)).collect()
    }

    #[test]
    fn sym_square_slot_order_and_values() {
        let d = Domain::Rational;
        let u: Vec<Scalar> = [1, 2].iter().map(|&x| d.from_i64(x)).collect();
        let v: Vec<Scalar> = [3, 4].iter().map(|&x| d.from_i64(x)).collect();
        assert_eq!(fmt_all(&d, &sym_square(&d, &u, &v).unwrap()), ["6/1", "10/1", "16/1"]);
        // symmetric in the arguments
        assert_eq!(fmt_all(&d, &sym_square(&d, &v, &u).unwrap()), ["6/1", "10/1", "16/1"]);
        let d7 = gf(7);
        let u: Vec<Scalar> = [1, 2].iter().map(|&x| d7.from_i64(x)).collect();
        let v: Vec<Scalar> = [3, 4].iter().map(|&x| d7.from_i64(x)).collect();
        assert_eq!(fmt_all(&d7, &sym_square(&d7, &u, &v).unwrap()), ["6", "3", "2"]);
        let mismatched = vec![d7.one()];
        assert!(sym_square(&d7, &u, &mismatched).is_err());
    }

    #[test]
    fn parallel_encodings_get_deleted_and_tau_survives() {
        // path 1-2-3 where vertices 1 and 3 share a representative: both
        // edges encode to the same vector, so the second one goes
        let mut g = Graph::with_vertices(3);
        g.add_edge(1, 2).unwrap();
        g.add_edge(2, 3).unwrap();
        let d = gf(101);
        let cols = vec![
            vec![d.one(), d.zero()],
            vec![d.zero(), d.one()],
            vec![d.one(), d.zero()],
        ];
        let rep = ExactMatrix::from_columns(d, 2, cols).unwrap();
        let m = LinearMatroid::from_matrix(rep, vec![1, 2, 3]).unwrap();
        let mut inst = RvcInstance::new(g, m, 1).unwrap();
        let tau_before = tau_bruteforce(&inst).unwrap();
        let report = reduce_edges(&mut inst).unwrap();
        assert_eq!(report.kept, 1);
        assert_eq!(report.deleted, vec![(2, 3)]);
        assert_eq!(inst.graph().m(), 1);
        assert_eq!(tau_bruteforce(&inst).unwrap(), tau_before);
        let dropped = remove_isolated(&mut inst).unwrap();
        assert_eq!(dropped, vec![3]);
        assert_eq!(tau_bruteforce(&inst).unwrap(), tau_before);
    }

    #[test]
    fn independent_triangle_is_untouched() {
        let mut g = Graph::with_vertices(3);
        for (u, v) in [(1, 2), (1, 3), (2, 3)] {
            g.add_edge(u, v).unwrap();
        }
        let (mut inst, _) = RvcInstance::lift_from_vc_above_mm(g, 0, gf(101)).unwrap();
        let report = reduce_edges(&mut inst).unwrap();
        assert_eq!(report.kept, 3);
        assert!(report.deleted.is_empty());
        assert_eq!(report.slot_cap, 6);
    }

    #[test]
    fn kept_edges_respect_the_slot_cap() {
        // rank-1 matroid: every vertex maps to the same nonzero vector;
        // the cap is 1(2)/2 = 1, so one edge survives from K5
        let mut g = Graph::with_vertices(5);
        for u in 1..=5u32 {
            for v in u + 1..=5 {
                g.add_edge(u, v).unwrap();
            }
        }
        let d = gf(101);
        let cols = vec![vec![d.one()]; 5];
        let rep = ExactMatrix::from_columns(d, 1, cols).unwrap();
        let m = LinearMatroid::from_matrix(rep, vec![1, 2, 3, 4, 5]).unwrap();
        let mut inst = RvcInstance::new(g, m, 1).unwrap();
        let tau_before = tau_bruteforce(&inst).unwrap();
        assert_eq!(tau_before, 1);
        let report = reduce_edges(&mut inst).unwrap();
        assert_eq!(report.slot_cap, 1);
        assert_eq!(report.kept, 1);
        assert_eq!(inst.graph().m(), 1);
        assert_eq!(tau_bruteforce(&inst).unwrap(), 1);
        remove_isolated(&mut inst).unwrap();
        assert_eq!(inst.graph().n(), 2);
        assert_eq!(tau_bruteforce(&inst).unwrap(), 1);
    }

    #[test]
    fn zero_column_edges_are_always_redundant() {
        // an edge between two matroid loops encodes to zero
        let mut g = Graph::with_vertices(2);
        g.add_edge(1, 2).unwrap();
        let d = gf(101);
        let cols = vec![vec![d.zero()], vec![d.zero()]];
        let rep = ExactMatrix::from_columns(d, 1, cols).unwrap();
        let m = LinearMatroid::from_matrix(rep, vec![1, 2]).unwrap();
        let mut inst = RvcInstance::new(g, m, 0).unwrap();
        let tau_before = tau_bruteforce(&inst).unwrap();
        assert_eq!(tau_before, 0);
        let report = reduce_edges(&mut inst).unwrap();
        assert_eq!(report.kept, 0);
        assert_eq!(inst.graph().m(), 0);
        remove_isolated(&mut inst).unwrap();
        assert_eq!(inst.graph().n(), 0);
        assert_eq!(tau_bruteforce(&inst).unwrap(), 0);
    }

    #[test]
    fn tau_is_preserved_on_random_reduced_instances() {
        // end-to-end: batch-reduce a random instance, then compress edges
        // and drop isolated vertices; tau must not move at either stage
        let p = BigRational::new(1.into(), 2.into());
        for n in [5u32, 6, 7] {
            for seed in 0..5u64 {
                let g = gen_gnp(n, &p, 60_000 + 17 * n as u64 + seed).unwrap();
                let cover = match vertex_cover(&g, &CoverStrategy::Exact { bound: g.n() }).unwrap()
                {
                    CoverOutcome::Cover(c) => c,
                    CoverOutcome::Exceeded => unreachable!(),
                };
                let (inst, _) = RvcInstance::lift_from_vc_above_mm(g, 1, gf(M61)).unwrap();
                let eps = BigRational::new(1.into(), 20.into());
                let budget = RandomnessBudget::split(&eps, n as usize, false).unwrap();
                let mut rng = ChaCha20Rng::seed_from_u64(77_000 + 31 * n as u64 + seed);
                let (mut out, _) = batch_reduce(inst, &cover, Mode::Fast, &budget, &mut rng).unwrap();
                let tau_mid = tau_bruteforce(&out).unwrap();
                let report = reduce_edges(&mut out).unwrap();
                assert!(report.kept <= report.slot_cap);
                assert_eq!(tau_bruteforce(&out).unwrap(), tau_mid, "n {n} seed {seed}");
                remove_isolated(&mut out).unwrap();
                assert_eq!(tau_bruteforce(&out).unwrap(), tau_mid, "n {n} seed {seed}");
            }
        }
    }

    #[test]
    fn reduction_is_deterministic() {
        let p = BigRational::new(3.into(), 5.into());
        let g = gen_gnp(8, &p, 424_242).unwrap();
        let (inst, _) = RvcInstance::lift_from_vc_above_mm(g, 0, gf(M61)).unwrap();
        let run = || {
            let mut copy = inst.clone();
            let rep = reduce_edges(&mut copy).unwrap();
            (crate::instance::serialize_instance(&copy), rep.deleted.clone())
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn provided_cover_still_covers_after_reduction() {
        // deleting redundant edges can only shrink the covering burden
        let p = BigRational::new(1.into(), 2.into());
        let g = gen_gnp(7, &p, 99_999).unwrap();
        let cover: BTreeSet<u32> = match vertex_cover(&g, &CoverStrategy::MatchingApprox).unwrap() {
            CoverOutcome::Cover(c) => c,
            CoverOutcome::Exceeded => unreachable!(),
        };
        let (mut inst, _) = RvcInstance::lift_from_vc_above_mm(g, 0, gf(M61)).unwrap();
        reduce_edges(&mut inst).unwrap();
        for (u, v) in inst.graph().edges() {
            assert!(cover.contains(&u) || cover.contains(&v));
        }
    }
}
