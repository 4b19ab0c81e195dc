//! Exact branch-and-bound solvers for γ(Q_n) and γ_c(Q_n) on small cubes.
//!
//! Vertex sets are single `u64` masks, so n is limited to 6. Both solvers
//! deepen the target size from the counting lower bound, and by default use
//! translation symmetry (x -> x ^ w is an automorphism) to assume vertex 0 is
//! a member.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cube::{order, Vertex, VertexSet};
use crate::domination::{greedy_dominating, is_connected_dominating, is_dominating, lower_bounds};
use crate::error::{CubeError, Result};

pub const EXACT_MAX_DIM: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parameter {
    Gamma,
    GammaC,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Proven,
    BudgetExhausted,
}

#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 100_000_000, max_time: Duration::from_secs(300) }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    pub budget: Budget,
    pub translation_symmetry: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { budget: Budget::default(), translation_symmetry: true }
    }
}

/// Outcome of an exact search. When `status` is `BudgetExhausted`, `value`
/// is the size of the best set found, which is only an upper bound.
#[derive(Debug, Clone)]
pub struct ExactResult {
    pub n: u32,
    pub parameter: Parameter,
    pub value: u64,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub status: Status,
}

struct Search {
    n: u32,
    full: u64,
    closed: Vec<u64>,
    open: Vec<u64>,
    nodes: u64,
    started: Instant,
    budget: Budget,
    exhausted: bool,
}

fn bits(mut m: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros();
        m &= m - 1;
        Some(b)
    })
}

impl Search {
    fn new(n: u32, budget: Budget) -> Search {
        let v = order(n);
        let full = if v == 64 { !0 } else { (1u64 << v) - 1 };
        let open: Vec<u64> = (0..v as u32)
            .map(|x| (0..n).fold(0u64, |m, i| m | 1 << (x ^ (1 << i))))
            .collect();
        let closed = open.iter().enumerate().map(|(x, m)| m | 1 << x).collect();
        Search { n, full, closed, open, nodes: 0, started: Instant::now(), budget, exhausted: false }
    }

    /// Counts a node; false once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes & 0xfff == 0 && self.started.elapsed() > self.budget.max_time)
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn dominate(&mut self, covered: u64, chosen: u64, excluded: u64, remaining: u32) -> Option<u64> {
        if !self.tick() {
            return None;
        }
        if covered == self.full {
            return Some(chosen);
        }
        if remaining == 0 {
            return None;
        }
        let uncovered = self.full & !covered;
        if uncovered.count_ones() > remaining * (self.n + 1) {
            return None;
        }
        let (mut best, mut best_count) = (0u64, u32::MAX);
        for u in bits(uncovered) {
            let c = self.closed[u as usize] & !excluded;
            if c.count_ones() < best_count {
                best = c;
                best_count = c.count_ones();
            }
        }
        if best_count == 0 {
            return None;
        }
        let mut excluded = excluded;
        for w in bits(best) {
            let found = self.dominate(
                covered | self.closed[w as usize],
                chosen | 1 << w,
                excluded,
                remaining - 1,
            );
            if found.is_some() || self.exhausted {
                return found;
            }
            excluded |= 1 << w;
        }
        None
    }

    fn connected(
        &mut self,
        chosen: u64,
        covered: u64,
        frontier: u64,
        excluded: u64,
        remaining: u32,
    ) -> Option<u64> {
        if !self.tick() {
            return None;
        }
        if covered == self.full {
            return Some(chosen);
        }
        if remaining == 0 {
            return None;
        }
        let uncovered = self.full & !covered;
        // a vertex added next to the set is already covered, as is its
        // neighbour in the set, so it covers at most n - 1 new vertices
        if uncovered.count_ones() > remaining * self.n.saturating_sub(1) {
            return None;
        }
        if bits(uncovered).any(|u| self.closed[u as usize] & !excluded == 0) {
            return None;
        }
        let candidates = frontier & !excluded;
        if candidates == 0 {
            return None;
        }
        let v = candidates.trailing_zeros();
        let with = chosen | 1 << v;
        let found = self.connected(
            with,
            covered | self.closed[v as usize],
            (frontier | self.open[v as usize]) & !with,
            excluded,
            remaining - 1,
        );
        if found.is_some() || self.exhausted {
            return found;
        }
        self.connected(chosen, covered, frontier, excluded | 1 << v, remaining)
    }
}

fn check_exact_dim(n: u32) -> Result<()> {
    if (1..=EXACT_MAX_DIM).contains(&n) {
        Ok(())
    } else {
        Err(CubeError::Dimension { n, min: 1, max: EXACT_MAX_DIM })
    }
}

fn mask_to_set(n: u32, mask: u64) -> Result<VertexSet> {
    VertexSet::from_bits(n, bits(mask))
}

fn set_to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v.bits())
}

/// The domination number γ(Q_n).
pub fn exact_gamma(n: u32, opts: ExactOptions) -> Result<ExactResult> {
    check_exact_dim(n)?;
    let mut search = Search::new(n, opts.budget);
    let incumbent = set_to_mask(&greedy_dominating(n)?);
    let lower = lower_bounds(n)?.gamma_lower as u32;

    let mut best = incumbent;
    let mut status = Status::Proven;
    for target in lower..incumbent.count_ones() {
        let found = if opts.translation_symmetry {
            search.dominate(search.closed[0], 1, 0, target - 1)
        } else {
            search.dominate(0, 0, 0, target)
        };
        if let Some(found) = found {
            best = found;
            break;
        }
        if search.exhausted {
            status = Status::BudgetExhausted;
            break;
        }
    }
    let witness = mask_to_set(n, best)?;
    if !is_dominating(&witness) {
        return Err(CubeError::Integrity("exact_gamma witness is not dominating".into()));
    }
    Ok(ExactResult {
        n,
        parameter: Parameter::Gamma,
        value: best.count_ones() as u64,
        witness,
        nodes_explored: search.nodes,
        status,
    })
}

/// The connected domination number γ_c(Q_n), searching connected sets only.
pub fn exact_gamma_c(n: u32, opts: ExactOptions) -> Result<ExactResult> {
    check_exact_dim(n)?;
    let mut search = Search::new(n, opts.budget);
    let lower = lower_bounds(n)?.gamma_c_lower.unwrap_or(1) as u32;
    let full = search.full;

    let mut best = full;
    let mut status = Status::Proven;
    'deepen: for target in lower..full.count_ones() {
        // grow from a seed that is the smallest member of the set
        let seeds = if opts.translation_symmetry { 0..1 } else { 0..order(n) as u32 };
        for s in seeds {
            let below = (1u64 << s) - 1;
            let found = search.connected(
                1 << s,
                search.closed[s as usize],
                search.open[s as usize] & !below,
                below,
                target - 1,
            );
            if let Some(found) = found {
                best = found;
                break 'deepen;
            }
            if search.exhausted {
                status = Status::BudgetExhausted;
                break 'deepen;
            }
        }
    }
    let witness = mask_to_set(n, best)?;
    if !is_connected_dominating(&witness) {
        return Err(CubeError::Integrity("exact_gamma_c witness is not connected dominating".into()));
    }
    Ok(ExactResult {
        n,
        parameter: Parameter::GammaC,
        value: best.count_ones() as u64,
        witness,
        nodes_explored: search.nodes,
        status,
    })
}

impl ExactResult {
    pub fn is_proven(&self) -> bool {
        self.status == Status::Proven
    }

    pub fn witness_vertices(&self) -> Vec<Vertex> {
        self.witness.iter().collect()
    }
}
