//! The randomized rank-lowering engine.
//!
//! One genuine step takes a vertex `v` outside the working cover, replaces
//! its matroid column by a random vector on the flat spanned by its
//! neighbourhood, and contracts it. If the random vector lands in general
//! position — overwhelmingly likely for the coefficient ranges used — the
//! minimum cover rank drops by exactly one, so the budget is decremented in
//! lock-step. The matrix rank drops by exactly two regardless, which is
//! checked on every step.
//!
//! Vertices that cannot take the rule go through one of two degenerate
//! routes that preserve the answer without spending budget: isolated
//! vertices are simply deleted, and a vertex whose neighbours are all
//! matroid loops loses those neighbours first (a loop joins any cover for
//! free) and is then isolated itself.
//!
//! Two arithmetic regimes are supported. `Fast` works in a fixed prime
//! field and needs no intermediate care. `Faithful` works over the
//! rationals and re-encodes the matrix after every genuine step modulo a
//! fresh random prime — the bit-control pass — so entry sizes stay bounded
//! by the prime bound instead of compounding.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::RngCore;

use crate::error::{Error, Result};
use crate::exact_linalg::{random_prime, Domain, Scalar};
use crate::instance::RvcInstance;
use crate::matroid::LinearMatroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// One prime field for the whole run.
    Fast,
    /// Rational arithmetic with a bit-control pass after every genuine step.
    Faithful,
}

/// Failure probability accounting. The caller splits a total budget
/// `epsilon` into a per-step share; the share sizes both the coefficient
/// range for general-position draws and the prime bound for bit control.
#[derive(Clone, Debug)]
pub struct RandomnessBudget {
    epsilon: BigRational,
    epsilon_step: BigRational,
}

impl RandomnessBudget {
    /// `steps` is the number of reduction steps the budget must stretch
    /// over (the vertex count is a safe choice). A randomized cover
    /// strategy reserves half of `epsilon` for itself; the deterministic
    /// strategies hand the whole budget to the reduction.
    pub fn split(epsilon: &BigRational, steps: usize, randomized_strategy: bool) -> Result<RandomnessBudget> {
        if !epsilon.is_positive() || *epsilon >= BigRational::one() {
            return Err(Error::Input(format!(
                "failure budget {epsilon} must lie strictly between 0 and 1"
            )));
        }
        let share = if randomized_strategy {
            epsilon / BigRational::from_integer(2.into())
        } else {
            epsilon.clone()
        };
        let denom = BigRational::from_integer(steps.max(1).into());
        Ok(RandomnessBudget {
            epsilon: epsilon.clone(),
            epsilon_step: share / denom,
        })
    }

    pub fn epsilon(&self) -> &BigRational {
        &self.epsilon
    }

    pub fn epsilon_step(&self) -> &BigRational {
        &self.epsilon_step
    }
}

/// Ceiling of log2, as an integer; `il2(1) == 0`, `il2(5) == 3`.
pub(crate) fn il2(x: &BigUint) -> u64 {
    if x.is_zero() || x.is_one() {
        return 0;
    }
    let bits = x.bits();
    if x.count_ones() == 1 {
        bits - 1
    } else {
        bits
    }
}

/// Ceiling of `1 / eps` for a positive rational.
fn inv_ceil(eps: &BigRational) -> BigUint {
    let num = eps.numer().magnitude();
    let den = eps.denom().magnitude();
    (den + num - BigUint::one()).div_floor(num)
}

/// Coefficient range for faithful general-position draws: coefficients are
/// drawn from `1..=p` with `p = 2^n * 2n / eps_step` (rounded up), which
/// keeps the union-bounded failure probability of one step under
/// `eps_step`.
pub fn coefficient_bound(n: usize, eps_step: &BigRational) -> BigUint {
    let pow = BigUint::one() << n;
    let p = pow * BigUint::from(2 * n.max(1)) * inv_ceil(eps_step);
    p.max(BigUint::from(2u32))
}

/// Upper bound for the bit-control prime: comfortably more primes below it
/// than the rank-determining minors can have divisors, so a uniform draw
/// misses all of them except with probability `eps_step`. Grows with the
/// row count `r`, so it is largest at the start of a run.
pub fn modulus_bound(n: usize, r: usize, eps_step: &BigRational) -> BigUint {
    let inv = inv_ceil(eps_step);
    let c = BigUint::from(2u32).max(BigUint::from(il2(&inv)));
    let n = n.max(1) as u64;
    let nb = BigUint::from(n);
    let logs = BigUint::from(n * il2(&nb) + il2(&inv));
    let b = c * nb.pow(2 * r as u32 + 3) * (&logs * &logs).max(BigUint::one()) * inv;
    b.max(BigUint::from(3u32))
}

const RESAMPLE_LIMIT: usize = 64;
const BIT_CONTROL_ATTEMPTS: usize = 16;

/// Draw a random vector on the flat spanned by `flat`: a random
/// combination of the flat's columns. Coefficients come from the whole
/// field when the matroid is over GF(q) (`coeff_bound` must be `None`),
/// or from `1..=p` over the rationals (`coeff_bound` must give `p`).
/// Resamples the rare all-zero draw; a flat with no independent element
/// cannot host a useful vector and is rejected up front.
pub fn general_position_vector(
    m: &LinearMatroid,
    flat: &[u32],
    coeff_bound: Option<&BigUint>,
    rng: &mut dyn RngCore,
) -> Result<Vec<Scalar>> {
    if flat.is_empty() || m.rank_subset(flat)? == 0 {
        return Err(Error::DegenerateFlat);
    }
    let domain = m.domain().clone();
    match (&domain, coeff_bound) {
        (Domain::PrimeField(_), None) | (Domain::Rational, Some(_)) => {}
        _ => return Err(Error::DomainMismatch),
    }
    let rows = m.rep().rows();
    for _ in 0..RESAMPLE_LIMIT {
        let mut acc = vec![domain.zero(); rows];
        for h in flat {
            let coeff = match (&domain, coeff_bound) {
                (Domain::PrimeField(q), None) => {
                    domain.from_bigint(&BigInt::from(rng.gen_biguint_below(q)))
                }
                (Domain::Rational, Some(p)) => {
                    domain.from_bigint(&BigInt::from(rng.gen_biguint_below(p) + BigUint::one()))
                }
                _ => unreachable!(),
            };
            let col = m.column(*h)?;
            for (slot, entry) in acc.iter_mut().zip(col) {
                *slot = domain.add(slot, &domain.mul(&coeff, entry));
            }
        }
        if acc.iter().any(|s| !domain.is_zero(s)) {
            return Ok(acc);
        }
    }
    Err(Error::StepFailed(
        "general-position resampling exhausted".into(),
    ))
}

/// One genuine reduction step on vertex `v`: move `v`'s column to a random
/// vector on its neighbourhood flat, contract it, and spend one unit of
/// budget. `v` must be a co-loop with at least one non-loop neighbour.
/// The matrix rank must fall by exactly two; anything else means the
/// instance was not in the state the rule assumes, and is reported rather
/// than absorbed.
pub fn apply_vertex_rule(
    inst: &mut RvcInstance,
    v: u32,
    coeff_bound: Option<&BigUint>,
    rng: &mut dyn RngCore,
) -> Result<()> {
    if !inst.graph().has_vertex(v) {
        return Err(Error::UnknownElement(v));
    }
    let neighbors = inst.graph().neighbors(v);
    if neighbors.is_empty() {
        return Err(Error::DegenerateFlat);
    }
    if !inst.matroid().is_coloop(v)? {
        return Err(Error::NotColoop(v));
    }
    let rank_before = inst.matroid().full_rank();
    let g = general_position_vector(inst.matroid(), &neighbors, coeff_bound, rng)?;
    inst.set_matroid_column(v, g)?;
    inst.contract_vertex(v)?;
    let rank_after = inst.matroid().full_rank();
    if rank_after + 2 != rank_before {
        return Err(Error::StepFailed(format!(
            "rank moved {rank_before} -> {rank_after} on vertex {v}, expected a drop of 2"
        )));
    }
    inst.set_budget(inst.budget() - 1);
    Ok(())
}

/// Delete an isolated vertex. Covers never need it, so nothing changes.
pub fn delete_isolated(inst: &mut RvcInstance, v: u32) -> Result<()> {
    if !inst.graph().has_vertex(v) {
        return Err(Error::UnknownElement(v));
    }
    if inst.graph().degree(v) != 0 {
        return Err(Error::StepFailed(format!("vertex {v} is not isolated")));
    }
    inst.delete_vertex(v)
}

/// Remove a matroid loop from the instance. A loop adds nothing to any
/// cover's rank, so it can be assumed into the cover and its edges
/// discarded.
pub fn eliminate_loop_vertex(inst: &mut RvcInstance, v: u32) -> Result<()> {
    if !inst.graph().has_vertex(v) {
        return Err(Error::UnknownElement(v));
    }
    if !inst.matroid().is_loop(v)? {
        return Err(Error::StepFailed(format!("vertex {v} is not a matroid loop")));
    }
    inst.delete_vertex(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepRoute {
    Genuine,
    Isolated,
    LoopNeighborhood { eliminated: Vec<u32> },
}

#[derive(Clone, Debug)]
pub struct StepTrace {
    pub vertex: u32,
    pub route: StepRoute,
    pub rank_after: usize,
    pub budget_after: i64,
    /// Bit-control prime chosen after this step (faithful mode only).
    pub modulus: Option<BigUint>,
}

#[derive(Clone, Debug)]
pub struct BatchReport {
    pub planned: usize,
    pub genuine: usize,
    /// Every planned step took the genuine route.
    pub clean: bool,
    pub rank_before: usize,
    pub rank_after: usize,
    pub budget_before: i64,
    pub budget_after: i64,
    pub q_last: Option<BigUint>,
    pub steps: Vec<StepTrace>,
}

fn bit_control(
    inst: &RvcInstance,
    n0: usize,
    eps_step: &BigRational,
    rng: &mut dyn RngCore,
) -> Result<(RvcInstance, BigUint)> {
    let r = inst.matroid().rep().rows();
    let upper = modulus_bound(n0, r, eps_step);
    let lower = BigUint::from(3u32);
    for _ in 0..BIT_CONTROL_ATTEMPTS {
        let q = random_prime(&lower, &upper, rng)?;
        match inst.mod_reduce(&q) {
            Ok(reduced) => return Ok((reduced, q)),
            Err(e) if e.is_retryable() => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::BitControlExhausted(BIT_CONTROL_ATTEMPTS))
}

/// Run the reduction over every vertex outside `cover`, in ascending
/// order. Returns the reduced instance and a full trace. In faithful mode
/// the result is re-encoded modulo the last bit-control prime — by then
/// every entry is already an integer below it, so the re-encoding loses
/// nothing.
pub fn batch_reduce(
    inst: RvcInstance,
    cover: &BTreeSet<u32>,
    mode: Mode,
    budget: &RandomnessBudget,
    rng: &mut dyn RngCore,
) -> Result<(RvcInstance, BatchReport)> {
    for v in cover {
        if !inst.graph().has_vertex(*v) {
            return Err(Error::Input(format!("cover vertex {v} is not in the graph")));
        }
    }
    for (u, v) in inst.graph().edges() {
        if !cover.contains(&u) && !cover.contains(&v) {
            return Err(Error::Input(format!("edge {u}-{v} is not covered")));
        }
    }
    let n0 = inst.graph().n();
    let coeff_bound = match mode {
        Mode::Fast => {
            if inst.domain().is_rational() {
                return Err(Error::DomainMismatch);
            }
            None
        }
        Mode::Faithful => {
            if !inst.domain().is_rational() {
                return Err(Error::DomainMismatch);
            }
            Some(coefficient_bound(n0, budget.epsilon_step()))
        }
    };

    let outside: Vec<u32> = inst.graph().vertices().filter(|v| !cover.contains(v)).collect();
    let mut current = inst;
    let mut report = BatchReport {
        planned: outside.len(),
        genuine: 0,
        clean: false,
        rank_before: current.matroid().full_rank(),
        rank_after: 0,
        budget_before: current.budget(),
        budget_after: 0,
        q_last: None,
        steps: Vec::with_capacity(outside.len()),
    };

    for s in outside {
        let neighbors = current.graph().neighbors(s);
        let route = if neighbors.is_empty() {
            delete_isolated(&mut current, s)?;
            StepRoute::Isolated
        } else {
            let mut all_loops = true;
            for h in &neighbors {
                if !current.matroid().is_loop(*h)? {
                    all_loops = false;
                    break;
                }
            }
            if all_loops {
                for h in &neighbors {
                    eliminate_loop_vertex(&mut current, *h)?;
                }
                delete_isolated(&mut current, s)?;
                StepRoute::LoopNeighborhood { eliminated: neighbors }
            } else {
                apply_vertex_rule(&mut current, s, coeff_bound.as_ref(), rng)?;
                report.genuine += 1;
                StepRoute::Genuine
            }
        };
        let mut modulus = None;
        if route == StepRoute::Genuine && mode == Mode::Faithful {
            let (reduced, q) = bit_control(&current, n0, budget.epsilon_step(), rng)?;
            let budget_now = current.budget();
            current = reduced.lift_to_rational()?;
            current.set_budget(budget_now);
            report.q_last = Some(q.clone());
            modulus = Some(q);
        }
        report.steps.push(StepTrace {
            vertex: s,
            route,
            rank_after: current.matroid().full_rank(),
            budget_after: current.budget(),
            modulus,
        });
    }

    if let Some(q) = &report.q_last {
        // entries are integers below q after the last bit-control pass;
        // this is a change of representation, not of content
        let budget_now = current.budget();
        current = current.mod_reduce(q)?;
        current.set_budget(budget_now);
    }
    report.rank_after = current.matroid().full_rank();
    report.budget_after = current.budget();
    report.clean = report.genuine == report.planned;
    Ok((current, report))
}
