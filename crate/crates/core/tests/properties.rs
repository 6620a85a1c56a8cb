//! Randomized structural invariants, shrunk to minimal counterexamples on
//! failure. These complement the seeded oracle suites: anything here must
//! hold for *every* input, not just with high probability.

use num_bigint::BigUint;
use proptest::prelude::*;

use rvc_core::exact_linalg::{Domain, ExactMatrix, Scalar};
use rvc_core::graph::{emit_dimacs, parse_dimacs, Graph};
use rvc_core::graph_reduction::sym_square;
use rvc_core::instance::{parse_instance, serialize_instance, RvcInstance};
use rvc_core::matroid::LinearMatroid;

fn gf101() -> Domain {
    Domain::prime_field(BigUint::from(101u32)).unwrap()
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1..=6u32).prop_flat_map(|n| {
        let pairs = (n * n.saturating_sub(1) / 2) as usize;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut g = Graph::with_vertices(n);
            let mut idx = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if mask[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

fn columns(domain: &Domain, rows: usize, entries: &[(i8, i8)]) -> Vec<Vec<Scalar>> {
    entries
        .chunks(rows)
        .map(|chunk| {
            chunk
                .iter()
                .map(|(num, den)| match domain {
                    Domain::Rational => domain.parse(&format!("{num}/{den}")).unwrap(),
                    _ => domain.from_i64(*num as i64),
                })
                .collect()
        })
        .collect()
}

proptest! {
    #[test]
    fn dimacs_roundtrip_is_identity(g in graph_strategy()) {
        let reparsed = parse_dimacs(&emit_dimacs(&g)).unwrap();
        prop_assert_eq!(reparsed, g);
    }

    #[test]
    fn instance_serialization_reaches_a_fixed_point(
        g in graph_strategy(),
        rational in any::<bool>(),
        budget in -50i64..=50,
        raw in proptest::collection::vec((-9i8..=9, 1i8..=9), 4 * 6),
    ) {
        let domain = if rational { Domain::Rational } else { gf101() };
        let n = g.n();
        let rows = 4;
        let cols = columns(&domain, rows, &raw[..rows * n]);
        let rep = ExactMatrix::from_columns(domain, rows, cols).unwrap();
        let m = LinearMatroid::from_matrix(rep, g.vertices().collect()).unwrap();
        let inst = RvcInstance::new(g.clone(), m, budget).unwrap();

        let once = serialize_instance(&inst);
        let back = parse_instance(&once).unwrap();
        prop_assert_eq!(&serialize_instance(&back), &once);
        prop_assert_eq!(back.budget(), budget);
        prop_assert_eq!(back.graph(), &g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_ranks_satisfy_the_matroid_axioms(
        raw in proptest::collection::vec((-9i8..=9, 1i8..=9), 3 * 4),
    ) {
        let domain = gf101();
        let cols = columns(&domain, 3, &raw);
        let rep = ExactMatrix::from_columns(domain, 3, cols).unwrap();
        let labels: Vec<u32> = (1..=4).collect();
        let m = LinearMatroid::from_matrix(rep, labels.clone()).unwrap();

        let rank_of = |mask: usize| {
            let subset: Vec<u32> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| labels[i]).collect();
            m.rank_subset(&subset).unwrap()
        };
        let ranks: Vec<usize> = (0..16).map(rank_of).collect();

        prop_assert_eq!(ranks[0], 0);
        for a in 0..16usize {
            prop_assert!(ranks[a] <= a.count_ones() as usize);
            for b in 0..16usize {
                if a & b == a {
                    prop_assert!(ranks[a] <= ranks[b], "monotonicity at {a:04b} <= {b:04b}");
                }
                prop_assert!(
                    ranks[a | b] + ranks[a & b] <= ranks[a] + ranks[b],
                    "submodularity at {a:04b}, {b:04b}"
                );
            }
        }
    }

    #[test]
    fn symmetric_square_is_a_symmetric_bilinear_encoding(
        rational in any::<bool>(),
        raw in proptest::collection::vec((-9i8..=9, 1i8..=9), 3 * 3),
    ) {
        let domain = if rational { Domain::Rational } else { gf101() };
        let vecs = columns(&domain, 3, &raw);
        let (u, v, w) = (&vecs[0], &vecs[1], &vecs[2]);

        prop_assert_eq!(
            sym_square(&domain, u, v).unwrap(),
            sym_square(&domain, v, u).unwrap()
        );

        let sum: Vec<Scalar> = u.iter().zip(w).map(|(a, b)| domain.add(a, b)).collect();
        let lhs = sym_square(&domain, &sum, v).unwrap();
        let rhs: Vec<Scalar> = sym_square(&domain, u, v)
            .unwrap()
            .iter()
            .zip(&sym_square(&domain, w, v).unwrap())
            .map(|(a, b)| domain.add(a, b))
            .collect();
        prop_assert_eq!(lhs, rhs);
    }
}
