//! Problem instances: a graph bound to a linear matroid over its vertex
//! set, together with a rank budget.
//!
//! The question an instance poses is whether some vertex cover `S` of the
//! graph satisfies `rank(S) <= budget` in the matroid. The binding invariant
//! — matroid ground set equals graph vertex set, element labels are vertex
//! ids — is enforced on construction and preserved by every mutation here.
//! The budget is signed because reduction bookkeeping can legitimately push
//! it below zero on instances that will be answered NO.

pub mod format;
pub mod oracle;

pub use format::{parse_instance, serialize_instance};
pub use oracle::{decide_bruteforce, tau_bruteforce, verify_general_position};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact_linalg::{Domain, Scalar};
use crate::graph::{maximum_matching, Graph};
use crate::matroid::LinearMatroid;

#[derive(Clone, Debug)]
pub struct RvcInstance {
    graph: Graph,
    matroid: LinearMatroid,
    budget: i64,
}

impl RvcInstance {
    pub fn new(graph: Graph, matroid: LinearMatroid, budget: i64) -> Result<RvcInstance> {
        let verts: Vec<u32> = graph.vertices().collect();
        let mut labels: Vec<u32> = matroid.labels().to_vec();
        labels.sort_unstable();
        if verts != labels {
            return Err(Error::Input(format!(
                "matroid ground set {labels:?} does not match vertex set {verts:?}"
            )));
        }
        Ok(RvcInstance { graph, matroid, budget })
    }

    /// Embed a vertex-cover-above-matching instance `(G, k)`: pair `G` with
    /// the free matroid on its vertices, so subset rank is cardinality, and
    /// set the budget to `mu(G) + k`. Also returns the matching size.
    pub fn lift_from_vc_above_mm(
        graph: Graph,
        k: u64,
        domain: Domain,
    ) -> Result<(RvcInstance, usize)> {
        let mu = maximum_matching(&graph).len();
        let labels: Vec<u32> = graph.vertices().collect();
        let matroid = LinearMatroid::identity(domain, labels)?;
        let budget = mu as i64 + k as i64;
        Ok((RvcInstance { graph, matroid, budget }, mu))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn matroid(&self) -> &LinearMatroid {
        &self.matroid
    }

    pub fn domain(&self) -> &Domain {
        self.matroid.domain()
    }

    pub fn budget(&self) -> i64 {
        self.budget
    }

    pub fn set_budget(&mut self, budget: i64) {
        self.budget = budget;
    }

    /// Overwrite the matroid column of `v`. The caller is mid-move; the
    /// binding invariant still holds because the label set is untouched.
    pub fn set_matroid_column(&mut self, v: u32, col: Vec<Scalar>) -> Result<()> {
        self.matroid.set_column(v, col)
    }

    /// Remove one edge. The matroid is untouched; the ground set still
    /// matches the vertex set.
    pub fn remove_edge(&mut self, u: u32, v: u32) {
        self.graph.remove_edge(u, v);
    }

    /// Remove `v` from the graph and delete it from the matroid.
    pub fn delete_vertex(&mut self, v: u32) -> Result<()> {
        if !self.graph.has_vertex(v) {
            return Err(Error::UnknownElement(v));
        }
        self.matroid.delete(v)?;
        self.graph.remove_vertex(v);
        Ok(())
    }

    /// Remove `v` from the graph and contract it in the matroid. Fails if
    /// `v`'s column is zero, leaving the instance unchanged.
    pub fn contract_vertex(&mut self, v: u32) -> Result<()> {
        if !self.graph.has_vertex(v) {
            return Err(Error::UnknownElement(v));
        }
        self.matroid.contract(v)?;
        self.graph.remove_vertex(v);
        Ok(())
    }

    pub fn lift_to_rational(&self) -> Result<RvcInstance> {
        Ok(RvcInstance {
            graph: self.graph.clone(),
            matroid: self.matroid.lift_to_rational()?,
            budget: self.budget,
        })
    }

    pub fn mod_reduce(&self, q: &BigUint) -> Result<RvcInstance> {
        Ok(RvcInstance {
            graph: self.graph.clone(),
            matroid: self.matroid.mod_reduce(q)?,
            budget: self.budget,
        })
    }
}

/// Key=value summary of an instance, one entry per line. The layout is
/// frozen; both the CLI `stats` command and the C API expose it verbatim.
pub fn stats_text(inst: &RvcInstance) -> Result<String> {
    let m = inst.matroid();
    let mut loops = 0;
    let mut coloops = 0;
    for &v in m.labels() {
        if m.is_loop(v)? {
            loops += 1;
        }
        if m.is_coloop(v)? {
            coloops += 1;
        }
    }
    Ok(format!(
        "domain={}\nn={}\nm={}\nr={}\nl={}\nrank={}\nloops={loops}\ncoloops={coloops}\n",
        m.domain(),
        inst.graph().n(),
        inst.graph().m(),
        m.rep().rows(),
        inst.budget(),
        m.full_rank(),
    ))
}
