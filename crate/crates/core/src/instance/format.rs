//! The on-disk instance format.
//!
//! ```text
//! RVC1
//! domain rational              -- or: domain gfp <q>
//! n <V> m <E> r <rows> l <budget>
//! v <id>                       -- V lines, strictly ascending
//! e <u> <v>                    -- E lines, u < v, sorted
//! <label> <c0> ... <c(r-1)>    -- V column lines, ascending label
//! ```
//!
//! Rational entries are always written `num/den`, field entries as plain
//! residues. The budget may be negative. Parsing is strict: counts, label
//! order, and entry ranges are all enforced, and trailing junk is an error.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact_linalg::{Domain, ExactMatrix};
use crate::graph::Graph;
use crate::instance::RvcInstance;
use crate::matroid::LinearMatroid;

pub fn serialize_instance(inst: &RvcInstance) -> String {
    let g = inst.graph();
    let m = inst.matroid();
    let rows = m.rep().rows();
    let mut out = String::new();
    out.push_str("RVC1\n");
    let _ = writeln!(out, "domain {}", m.domain());
    let _ = writeln!(out, "n {} m {} r {} l {}", g.n(), g.m(), rows, inst.budget());
    for v in g.vertices() {
        let _ = writeln!(out, "v {v}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    for v in g.vertices() {
        let _ = write!(out, "{v}");
        let col = m.column(v).expect("binding invariant");
        for entry in col {
            let _ = write!(out, " {}", m.domain().format(entry));
        }
        out.push('\n');
    }
    out
}

pub fn parse_instance(text: &str) -> Result<RvcInstance> {
    let mut lines = text.lines().enumerate();
    let mut next = |what: &str| -> Result<(usize, &str)> {
        lines
            .next()
            .map(|(i, l)| (i + 1, l))
            .ok_or_else(|| Error::Input(format!("unexpected end of input, wanted {what}")))
    };

    let (ln, magic) = next("the RVC1 magic line")?;
    if magic.trim_end() != "RVC1" {
        return Err(Error::Input(format!("line {ln}: not an RVC1 file")));
    }

    let (ln, domain_line) = next("the domain line")?;
    let df: Vec<&str> = domain_line.split_whitespace().collect();
    let domain = match df.as_slice() {
        ["domain", "rational"] => Domain::Rational,
        ["domain", "gfp", q] => {
            let q: BigUint = q
                .parse()
                .map_err(|_| Error::Input(format!("line {ln}: bad field modulus")))?;
            Domain::prime_field(q)?
        }
        _ => return Err(Error::Input(format!("line {ln}: bad domain line"))),
    };

    let (ln, header) = next("the size header")?;
    let hf: Vec<&str> = header.split_whitespace().collect();
    let (n, m, rows, budget): (usize, usize, usize, i64) = match hf.as_slice() {
        ["n", n, "m", m, "r", r, "l", l] => (
            n.parse()
                .map_err(|_| Error::Input(format!("line {ln}: bad vertex count")))?,
            m.parse()
                .map_err(|_| Error::Input(format!("line {ln}: bad edge count")))?,
            r.parse()
                .map_err(|_| Error::Input(format!("line {ln}: bad row count")))?,
            l.parse()
                .map_err(|_| Error::Input(format!("line {ln}: bad budget")))?,
        ),
        _ => return Err(Error::Input(format!("line {ln}: bad size header"))),
    };

    let mut graph = Graph::new();
    let mut verts = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = next("a vertex line")?;
        let f: Vec<&str> = line.split_whitespace().collect();
        let id: u32 = match f.as_slice() {
            ["v", id] => id
                .parse()
                .map_err(|_| Error::Input(format!("line {ln}: bad vertex id")))?,
            _ => return Err(Error::Input(format!("line {ln}: bad vertex line"))),
        };
        if verts.last().is_some_and(|&last| last >= id) {
            return Err(Error::Input(format!(
                "line {ln}: vertex ids must be strictly ascending"
            )));
        }
        verts.push(id);
        graph.add_vertex(id);
    }

    for _ in 0..m {
        let (ln, line) = next("an edge line")?;
        let f: Vec<&str> = line.split_whitespace().collect();
        let (u, v): (u32, u32) = match f.as_slice() {
            ["e", u, v] => (
                u.parse()
                    .map_err(|_| Error::Input(format!("line {ln}: bad endpoint")))?,
                v.parse()
                    .map_err(|_| Error::Input(format!("line {ln}: bad endpoint")))?,
            ),
            _ => return Err(Error::Input(format!("line {ln}: bad edge line"))),
        };
        graph.add_edge(u, v).map_err(|e| match e {
            Error::Input(msg) => Error::Input(format!("line {ln}: {msg}")),
            other => other,
        })?;
    }

    let mut cols = Vec::with_capacity(n);
    for expected in &verts {
        let (ln, line) = next("a column line")?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != rows + 1 {
            return Err(Error::Input(format!(
                "line {ln}: expected a label and {rows} entries, got {} fields",
                f.len()
            )));
        }
        let label: u32 = f[0]
            .parse()
            .map_err(|_| Error::Input(format!("line {ln}: bad column label")))?;
        if label != *expected {
            return Err(Error::Input(format!(
                "line {ln}: column label {label} out of order, expected {expected}"
            )));
        }
        let col = f[1..]
            .iter()
            .map(|tok| {
                domain.parse(tok).map_err(|e| match e {
                    Error::Input(msg) => Error::Input(format!("line {ln}: {msg}")),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        cols.push(col);
    }

    if let Some((i, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::Input(format!(
            "line {}: trailing content `{line}`",
            i + 1
        )));
    }

    let rep = ExactMatrix::from_columns(domain, rows, cols)?;
    let matroid = LinearMatroid::from_matrix(rep, verts)?;
    RvcInstance::new(graph, matroid, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::Scalar;

    fn sample_rational() -> RvcInstance {
        let mut g = Graph::with_vertices(3);
        g.add_edge(1, 2).unwrap();
        g.add_edge(2, 3).unwrap();
        let (mut inst, _) = RvcInstance::lift_from_vc_above_mm(g, 1, Domain::Rational).unwrap();
        let col: Vec<Scalar> = ["-2/3", "7/1", "0/1"]
            .iter()
            .map(|s| Domain::Rational.parse(s).unwrap())
            .collect();
        inst.set_matroid_column(2, col).unwrap();
        inst
    }

    #[test]
    fn rational_instance_round_trips_exactly() {
        let inst = sample_rational();
        let text = serialize_instance(&inst);
        let back = parse_instance(&text).unwrap();
        assert_eq!(serialize_instance(&back), text);
        assert_eq!(back.budget(), inst.budget());
        assert_eq!(back.graph().m(), 2);
        assert_eq!(
            back.matroid().domain().format(&back.matroid().column(2).unwrap()[0]),
            "-2/3"
        );
    }

    #[test]
    fn field_instance_round_trips_exactly() {
        let q = BigUint::from(101u32);
        let inst = sample_rational().mod_reduce(&q).unwrap();
        let text = serialize_instance(&inst);
        assert!(text.contains("domain gfp 101"));
        let back = parse_instance(&text).unwrap();
        assert_eq!(serialize_instance(&back), text);
    }

    #[test]
    fn serialized_layout_is_frozen() {
        let mut g = Graph::new();
        g.add_vertex(2);
        g.add_vertex(5);
        g.add_edge(5, 2).unwrap();
        let m = LinearMatroid::identity(Domain::Rational, vec![2, 5]).unwrap();
        let mut inst = RvcInstance::new(g, m, -1).unwrap();
        inst.set_budget(-1);
        assert_eq!(
            serialize_instance(&inst),
            "RVC1\ndomain rational\nn 2 m 1 r 2 l -1\nv 2\nv 5\ne 2 5\n2 1/1 0/1\n5 0/1 1/1\n"
        );
    }

    #[test]
    fn negative_budget_survives_round_trip() {
        let text = "RVC1\ndomain gfp 7\nn 1 m 0 r 1 l -4\nv 9\n9 3\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.budget(), -4);
        assert_eq!(serialize_instance(&inst), text);
    }

    #[test]
    fn zero_row_matroid_is_expressible() {
        let text = "RVC1\ndomain rational\nn 2 m 1 r 0 l 1\nv 1\nv 2\ne 1 2\n1\n2\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.matroid().full_rank(), 0);
        assert_eq!(serialize_instance(&inst), text);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let cases: &[(&str, &str)] = &[
            ("RVC2\n", "not an RVC1"),
            ("RVC1\ndomain real\n", "bad domain"),
            ("RVC1\ndomain gfp 6\n", "prime"),
            ("RVC1\ndomain rational\nn 1 m 0\n", "bad size header"),
            ("RVC1\ndomain rational\nn 1 m 0 r 1 l 0\n", "end of input"),
            (
                "RVC1\ndomain rational\nn 2 m 0 r 1 l 0\nv 3\nv 3\n3 1/1\n3 1/1\n",
                "ascending",
            ),
            (
                "RVC1\ndomain rational\nn 2 m 1 r 1 l 0\nv 1\nv 2\ne 1 3\n1 1/1\n2 1/1\n",
                "not a vertex",
            ),
            (
                "RVC1\ndomain rational\nn 2 m 1 r 1 l 0\nv 1\nv 2\ne 1 2\n1 1/1\n3 1/1\n",
                "out of order",
            ),
            (
                "RVC1\ndomain rational\nn 1 m 0 r 2 l 0\nv 1\n1 1/1\n",
                "2 entries",
            ),
            ("RVC1\ndomain gfp 5\nn 1 m 0 r 1 l 0\nv 1\n1 7\n", "residue"),
            (
                "RVC1\ndomain rational\nn 1 m 0 r 1 l 0\nv 1\n1 1/1\nextra\n",
                "trailing",
            ),
        ];
        for (text, needle) in cases {
            let err = parse_instance(text).unwrap_err().to_string();
            assert!(err.contains(needle), "`{text}` gave `{err}`");
        }
    }
}
