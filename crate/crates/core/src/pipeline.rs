//! End-to-end compression: graph + slack parameter in, reduced instance +
//! report out.
//!
//! The stages, in order: validate the failure budget, size up the graph,
//! fix the arithmetic domain (one random ~62-bit prime for the fast mode,
//! rationals for the faithful mode), lift the graph into a free-matroid
//! instance with budget `mu + k`, then either answer outright — small `k`
//! admits an exact decision, and an exceeded cover bound proves NO — or
//! run the batch rank reduction followed by the deterministic edge
//! compression. Every stage draws randomness from its own fixed stream of
//! a seeded generator, so a run is reproducible from `(input, seed,
//! config)` alone.
//!
//! If the batch fails internally the pipeline does not guess: it emits the
//! trivial YES instance and raises the `fallback` flag so callers can
//! refuse to trust the output.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::exact_linalg::{random_prime, Domain};
use crate::graph::{maximum_matching, vertex_cover, CoverOutcome, CoverStrategy, Graph};
use crate::graph_reduction::{reduce_edges, remove_isolated, EdgeReduceReport};
use crate::instance::oracle::{decide_bruteforce, ORACLE_LIMIT};
use crate::instance::RvcInstance;
use crate::matroid::LinearMatroid;
use crate::rank_reduction::{batch_reduce, BatchReport, Mode, RandomnessBudget};

/// Randomness stream assignments for [`stage_rng`].
pub const STREAM_GENERATE: u64 = 0;
pub const STREAM_FIELD_PRIME: u64 = 1;
pub const STREAM_COVER: u64 = 2;
pub const STREAM_REDUCTION: u64 = 3;

/// A seeded generator pinned to one pipeline stage, so adding draws to one
/// stage never shifts another stage's sequence.
pub fn stage_rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Clone, Debug)]
pub enum CoverChoice {
    /// Exact minimum cover, bounded by the instance budget; exceeding the
    /// bound proves the instance is a NO.
    Exact,
    /// Endpoints of a greedy maximal matching.
    MatchingApprox,
    Provided(BTreeSet<u32>),
}

impl CoverChoice {
    fn name(&self) -> &'static str {
        match self {
            CoverChoice::Exact => "exact",
            CoverChoice::MatchingApprox => "approx",
            CoverChoice::Provided(_) => "provided",
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub epsilon: BigRational,
    pub mode: Mode,
    pub cover: CoverChoice,
    pub seed: u64,
    /// Brute-force check that the output decides like the input.
    pub oracle_verify: bool,
    /// Decide tiny-parameter instances outright instead of compressing.
    pub use_shortcut: bool,
    /// Cap for the brute-force oracles (hard ceiling 16 regardless).
    pub oracle_limit: usize,
}

impl PipelineConfig {
    pub fn new(seed: u64) -> PipelineConfig {
        PipelineConfig {
            epsilon: BigRational::new(1.into(), 20.into()),
            mode: Mode::Fast,
            cover: CoverChoice::Exact,
            seed,
            oracle_verify: false,
            use_shortcut: true,
            oracle_limit: ORACLE_LIMIT,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CompressionReport {
    pub seed: u64,
    pub mode: Mode,
    pub epsilon: BigRational,
    pub n_in: usize,
    pub m_in: usize,
    pub mu: usize,
    pub k: u64,
    pub budget_in: i64,
    pub strategy: &'static str,
    pub cover_size: Option<usize>,
    pub cover_exceeded: bool,
    pub shortcut: bool,
    pub fallback: bool,
    pub fallback_reason: Option<String>,
    pub q_field: Option<BigUint>,
    pub batch: Option<BatchReport>,
    pub edge: Option<EdgeReduceReport>,
    pub isolated_removed: usize,
    pub n_out: usize,
    pub m_out: usize,
    pub rank_out: usize,
    pub budget_out: i64,
    pub verified: Option<bool>,
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl CompressionReport {
    /// Stable line-per-key rendering; golden tests pin this layout.
    pub fn to_text(&self) -> String {
        let mut s = String::from("rvc-report v1\n");
        let mut kv = |k: &str, v: String| {
            s.push_str(k);
            s.push('=');
            s.push_str(&v);
            s.push('\n');
        };
        kv("seed", self.seed.to_string());
        kv(
            "mode",
            match self.mode {
                Mode::Fast => "fast".into(),
                Mode::Faithful => "faithful".into(),
            },
        );
        kv("epsilon", self.epsilon.to_string());
        kv("n_in", self.n_in.to_string());
        kv("m_in", self.m_in.to_string());
        kv("mu", self.mu.to_string());
        kv("k", self.k.to_string());
        kv("budget_in", self.budget_in.to_string());
        kv("strategy", self.strategy.to_string());
        kv(
            "cover_size",
            self.cover_size.map_or("-".into(), |c| c.to_string()),
        );
        kv("cover_exceeded", yn(self.cover_exceeded).into());
        kv("shortcut", yn(self.shortcut).into());
        kv("fallback", yn(self.fallback).into());
        kv(
            "fallback_reason",
            self.fallback_reason.clone().unwrap_or_else(|| "-".into()),
        );
        kv(
            "q_field",
            self.q_field.as_ref().map_or("-".into(), |q| q.to_string()),
        );
        let (total, genuine, clean, q_last) = match &self.batch {
            Some(b) => (
                b.planned.to_string(),
                b.genuine.to_string(),
                yn(b.clean).into(),
                b.q_last.as_ref().map_or("-".into(), |q| q.to_string()),
            ),
            None => ("-".into(), "-".into(), String::from("-"), "-".into()),
        };
        kv("steps_total", total);
        kv("steps_genuine", genuine);
        kv("clean", clean);
        kv("q_last", q_last);
        let (kept, dropped, cap) = match &self.edge {
            Some(e) => (
                e.kept.to_string(),
                e.deleted.len().to_string(),
                e.slot_cap.to_string(),
            ),
            None => ("-".into(), "-".into(), "-".into()),
        };
        kv("edges_kept", kept);
        kv("edges_deleted", dropped);
        kv("slot_cap", cap);
        kv("isolated_removed", self.isolated_removed.to_string());
        kv("n_out", self.n_out.to_string());
        kv("m_out", self.m_out.to_string());
        kv("rank_out", self.rank_out.to_string());
        kv("budget_out", self.budget_out.to_string());
        kv("verified", self.verified.map_or("-", yn).into());
        if let Some(b) = &self.batch {
            for step in &b.steps {
                let route = match &step.route {
                    crate::rank_reduction::StepRoute::Genuine => "genuine".to_string(),
                    crate::rank_reduction::StepRoute::Isolated => "isolated".to_string(),
                    crate::rank_reduction::StepRoute::LoopNeighborhood { eliminated } => {
                        let ids: Vec<String> =
                            eliminated.iter().map(|v| v.to_string()).collect();
                        format!("loops[{}]", ids.join(","))
                    }
                };
                let q = step.modulus.as_ref().map_or("-".into(), |q| q.to_string());
                s.push_str(&format!(
                    "step v={} route={} rank={} budget={} q={}\n",
                    step.vertex, route, step.rank_after, step.budget_after, q
                ));
            }
        }
        s
    }
}

/// The single-vertex YES instance over `domain` (budget 0 covers the
/// empty edge set for free).
pub fn constant_yes(domain: Domain) -> RvcInstance {
    let mut g = Graph::new();
    g.add_vertex(1);
    let m = LinearMatroid::identity(domain, vec![1]).expect("static instance");
    RvcInstance::new(g, m, 0).expect("static instance")
}

/// The single-edge NO instance over `domain`: every cover has rank at
/// least 1 against a budget of 0.
pub fn constant_no(domain: Domain) -> RvcInstance {
    let mut g = Graph::with_vertices(2);
    g.add_edge(1, 2).expect("static instance");
    let m = LinearMatroid::identity(domain, vec![1, 2]).expect("static instance");
    RvcInstance::new(g, m, 0).expect("static instance")
}

fn shortcut_applies(k: u64, n: usize) -> bool {
    k < 64 && (1u128 << k) <= n as u128
}

/// Brute-force both instances and compare answers. Refuses instances
/// beyond `limit` vertices (and 16 no matter what).
pub fn verify_equivalence(a: &RvcInstance, b: &RvcInstance, limit: usize) -> Result<bool> {
    let cap = limit.min(ORACLE_LIMIT);
    for inst in [a, b] {
        let n = inst.graph().n();
        if n > cap {
            return Err(Error::OracleLimit { size: n, limit: cap });
        }
    }
    Ok(decide_bruteforce(a)? == decide_bruteforce(b)?)
}

pub fn compress(
    graph: &Graph,
    k: u64,
    config: &PipelineConfig,
) -> Result<(RvcInstance, CompressionReport)> {
    // also revalidated by the split below; fail early with a clear message
    let n = graph.n();
    let split = RandomnessBudget::split(&config.epsilon, n.max(1), false)?;

    let mu = maximum_matching(graph).len();
    let (domain, q_field) = match config.mode {
        Mode::Fast => {
            let lower = BigUint::from(1u128 << 61);
            let upper = BigUint::from((1u128 << 62) - 1);
            let mut rng = stage_rng(config.seed, STREAM_FIELD_PRIME);
            let q = random_prime(&lower, &upper, &mut rng)?;
            (Domain::prime_field(q.clone())?, Some(q))
        }
        Mode::Faithful => (Domain::Rational, None),
    };
    let (inst, _) = RvcInstance::lift_from_vc_above_mm(graph.clone(), k, domain.clone())?;
    let budget_in = inst.budget();

    let mut report = CompressionReport {
        seed: config.seed,
        mode: config.mode,
        epsilon: config.epsilon.clone(),
        n_in: n,
        m_in: graph.m(),
        mu,
        k,
        budget_in,
        strategy: config.cover.name(),
        cover_size: None,
        cover_exceeded: false,
        shortcut: false,
        fallback: false,
        fallback_reason: None,
        q_field,
        batch: None,
        edge: None,
        isolated_removed: 0,
        n_out: 0,
        m_out: 0,
        rank_out: 0,
        budget_out: 0,
        verified: None,
    };

    let finish = |mut report: CompressionReport, out: RvcInstance| -> Result<(RvcInstance, CompressionReport)> {
        report.n_out = out.graph().n();
        report.m_out = out.graph().m();
        report.rank_out = out.matroid().full_rank();
        report.budget_out = out.budget();
        if config.oracle_verify {
            report.verified = Some(verify_equivalence(&inst, &out, config.oracle_limit)?);
        }
        Ok((out, report))
    };

    if config.use_shortcut && shortcut_applies(k, n) {
        // the parameter is tiny: decide the instance exactly and hand back
        // a constant of the right polarity
        report.shortcut = true;
        let bound = budget_in.max(0) as usize;
        let out = match vertex_cover(graph, &CoverStrategy::Exact { bound })? {
            CoverOutcome::Cover(_) => constant_yes(domain),
            CoverOutcome::Exceeded => constant_no(domain),
        };
        return finish(report, out);
    }

    let strategy = match &config.cover {
        CoverChoice::Exact => CoverStrategy::Exact {
            bound: budget_in.max(0) as usize,
        },
        CoverChoice::MatchingApprox => CoverStrategy::MatchingApprox,
        CoverChoice::Provided(set) => CoverStrategy::Provided(set.clone()),
    };
    let cover = match vertex_cover(graph, &strategy)? {
        CoverOutcome::Cover(c) => c,
        CoverOutcome::Exceeded => {
            // minimum cover exceeds the budget, so no cover can have rank
            // within it either
            report.cover_exceeded = true;
            return finish(report, constant_no(domain));
        }
    };
    report.cover_size = Some(cover.len());

    let mut rng = stage_rng(config.seed, STREAM_REDUCTION);
    match batch_reduce(inst.clone(), &cover, config.mode, &split, &mut rng) {
        Ok((mut out, batch)) => {
            report.batch = Some(batch);
            let edge = reduce_edges(&mut out)?;
            report.edge = Some(edge);
            report.isolated_removed = remove_isolated(&mut out)?.len();
            finish(report, out)
        }
        Err(e) => {
            report.fallback = true;
            report.fallback_reason = Some(e.to_string());
            finish(report, constant_yes(domain))
        }
    }
}
