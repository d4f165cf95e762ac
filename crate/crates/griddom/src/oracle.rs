//! Brute-force minimum (k-)dominating set solver for small grids.
//!
//! Iterative deepening on the target size with branch-and-bound: branch on
//! the lexicographically first uncovered vertex over its closed k-ball, and
//! prune with the packing bound (each chosen vertex covers at most
//! `2k^2+2k+1` cells). Exhausting size `t` before trying `t+1` certifies
//! optimality.

use crate::error::{Error, Result};
use crate::grid::{k_ball_size, manhattan_distance, power_graph_edges, GridSpec, Vertex, VertexSet};
use std::time::{Duration, Instant};

const MAX_VERTICES: u64 = 64;

/// Optional limits on the exact search.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

/// Certified-optimal result.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub optimum: VertexSet,
    pub gamma: u64,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

struct Search<'a> {
    closed: &'a [u64],
    full: u64,
    max_cover: u32,
    budget: Budget,
    nodes: u64,
    started: Instant,
}

impl Search<'_> {
    fn check_budget(&self) -> Result<()> {
        if self.budget.max_nodes.is_some_and(|cap| self.nodes > cap) {
            return Err(Error::BudgetExhausted { nodes: self.nodes, best_upper: None });
        }
        if self.nodes % 1024 == 0
            && self.budget.max_time.is_some_and(|cap| self.started.elapsed() > cap)
        {
            return Err(Error::BudgetExhausted { nodes: self.nodes, best_upper: None });
        }
        Ok(())
    }

    /// Depth-first search for a dominating set of exactly `remaining` more
    /// vertices. Returns the chosen indices (in pick order) of the first
    /// solution under lexicographic branching, or None when exhausted.
    fn dfs(&mut self, covered: u64, remaining: u64, chosen: &mut Vec<usize>) -> Result<Option<()>> {
        self.nodes += 1;
        self.check_budget()?;
        if covered == self.full {
            return Ok(Some(()));
        }
        if remaining == 0 {
            return Ok(None);
        }
        let uncovered = (self.full & !covered).count_ones() as u64;
        if remaining * u64::from(self.max_cover) < uncovered {
            return Ok(None);
        }
        let first = (self.full & !covered).trailing_zeros() as usize;
        // any dominator of `first` lies in its closed ball
        let mut cands = self.closed[first];
        while cands != 0 {
            let idx = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            chosen.push(idx);
            if self.dfs(covered | self.closed[idx], remaining - 1, chosen)?.is_some() {
                return Ok(Some(()));
            }
            chosen.pop();
        }
        Ok(None)
    }
}

/// Exact minimum over closed-neighbourhood masks; shared by the grid solver
/// and the generic power-graph variant.
fn solve_masks(closed: &[u64], start: u64, budget: Budget) -> Result<(Vec<usize>, u64, Duration)> {
    let n = closed.len();
    assert!(n as u64 <= MAX_VERTICES);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let max_cover = closed.iter().map(|m| m.count_ones()).max().unwrap_or(1);
    let mut search =
        Search { closed, full, max_cover, budget, nodes: 0, started: Instant::now() };
    for target in start..=n as u64 {
        let mut chosen = Vec::new();
        if search.dfs(0, target, &mut chosen)?.is_some() {
            return Ok((chosen, search.nodes, search.started.elapsed()));
        }
    }
    unreachable!("the full vertex set always dominates")
}

fn grid_index(g: GridSpec, u: Vertex) -> usize {
    (u.x as usize - 1) * g.n as usize + (u.y as usize - 1)
}

fn grid_vertex(g: GridSpec, idx: usize) -> Vertex {
    Vertex::new((idx / g.n as usize) as i32 + 1, (idx % g.n as usize) as i32 + 1)
}

/// Certified minimum k-distance dominating set.
pub fn exact_min_dominating(g: GridSpec, k: u32, budget: Option<Budget>) -> Result<OracleResult> {
    let modulus = k_ball_size(k)? as u64;
    if g.vertex_count() > MAX_VERTICES {
        return Err(Error::InstanceTooLarge { vertices: g.vertex_count(), limit: MAX_VERTICES });
    }
    let n = g.vertex_count() as usize;
    let mut closed = vec![0u64; n];
    for u in g.vertices() {
        for w in g.vertices() {
            if manhattan_distance(u, w) <= k {
                closed[grid_index(g, u)] |= 1 << grid_index(g, w);
            }
        }
    }
    let start = g.vertex_count().div_ceil(modulus);
    let (chosen, nodes_explored, elapsed) = solve_masks(&closed, start, budget.unwrap_or_default())
        .map_err(|e| match e {
            Error::BudgetExhausted { nodes, .. } => Error::BudgetExhausted {
                nodes,
                best_upper: crate::constructor::bounds(g, k)
                    .ok()
                    .map(|b| b.construction_upper),
            },
            other => other,
        })?;
    let optimum: VertexSet = chosen.iter().map(|&i| grid_vertex(g, i)).collect();
    Ok(OracleResult { gamma: optimum.len() as u64, optimum, nodes_explored, elapsed })
}

/// Convenience wrapper returning only the k-distance domination number.
pub fn exact_gamma_k(g: GridSpec, k: u32) -> Result<u64> {
    Ok(exact_min_dominating(g, k, None)?.gamma)
}

/// Check `gamma(G^k) == gamma^k(G)`: solve the grid instance directly and
/// solve ordinary domination on the k-th power graph built from its edge
/// list, then compare.
pub fn cross_check_power(g: GridSpec, k: u32) -> Result<bool> {
    let direct = exact_min_dominating(g, k, None)?;

    if g.vertex_count() > MAX_VERTICES {
        return Err(Error::InstanceTooLarge { vertices: g.vertex_count(), limit: MAX_VERTICES });
    }
    let n = g.vertex_count() as usize;
    let mut closed: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for (u, w) in power_graph_edges(g, k) {
        let (i, j) = (grid_index(g, u), grid_index(g, w));
        closed[i] |= 1 << j;
        closed[j] |= 1 << i;
    }
    let (chosen, _, _) = solve_masks(&closed, 1, Budget::default())?;
    Ok(chosen.len() as u64 == direct.gamma)
}
