//! Greedy domination baseline with pluggable tie-breaking, plus the
//! adversarial spacing-3 construction showing how far greedy can land from a
//! diagonalization.
//!
//! Greedy is defined here for ordinary (k = 1) domination only.

use crate::grid::{manhattan_distance, GridSpec, Vertex, VertexSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Tie-breaking policy among maximal-gain candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Smallest `(x, y)`.
    Lex,
    /// Uniform choice from the given seed.
    Random(u64),
    /// Prefer the spacing-3 lattice of `adversarial_pattern`, realizing the
    /// worst-case growth.
    Adversarial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyConfig {
    pub tie_break: TieBreak,
}

/// `ceil(m/3)*ceil(n/3) + 2*floor(m/3)*floor(n/3)` — the worst-case greedy
/// size.
pub fn greedy_worst_case_formula(m: u32, n: u32) -> u64 {
    let (m, n) = (m as u64, n as u64);
    m.div_ceil(3) * n.div_ceil(3) + 2 * (m / 3) * (n / 3)
}

/// The spacing-3 lattice anchored at (1,1) plus two repairs per interior
/// 2x2 pocket, topped up with greedy repairs on grids whose dimensions are
/// not multiples of three. Dominating by construction.
pub fn adversarial_pattern(g: GridSpec) -> VertexSet {
    let (greens, repairs) = adversarial_parts(g);
    let mut set: VertexSet = greens.union(&repairs).copied().collect();
    // top-up for leftover rows/columns beyond the last pocket
    loop {
        let Some(target) = g
            .vertices()
            .find(|&u| set.iter().all(|&w| manhattan_distance(u, w) > 1))
        else {
            break;
        };
        let mut cands: Vec<Vertex> = std::iter::once(target)
            .chain(crate::grid::neighbors(g, target).unwrap())
            .collect();
        cands.sort();
        let chosen = cands
            .into_iter()
            .max_by_key(|&c| {
                let gain = g
                    .vertices()
                    .filter(|&u| {
                        manhattan_distance(u, c) <= 1
                            && set.iter().all(|&w| manhattan_distance(u, w) > 1)
                    })
                    .count();
                (gain, std::cmp::Reverse(c))
            })
            .unwrap();
        set.insert(chosen);
    }
    set
}

fn adversarial_parts(g: GridSpec) -> (VertexSet, VertexSet) {
    let mut greens = VertexSet::new();
    for a in 0..g.m.div_ceil(3) {
        for b in 0..g.n.div_ceil(3) {
            greens.insert(Vertex::new(1 + 3 * a as i32, 1 + 3 * b as i32));
        }
    }
    // each interior pocket {3a+2,3a+3} x {3b+2,3b+3} takes the two
    // anti-diagonal cells, which dominate the whole pocket
    let mut repairs = VertexSet::new();
    for a in 0..g.m / 3 {
        for b in 0..g.n / 3 {
            repairs.insert(Vertex::new(3 * a as i32 + 2, 3 * b as i32 + 3));
            repairs.insert(Vertex::new(3 * a as i32 + 3, 3 * b as i32 + 2));
        }
    }
    (greens, repairs)
}

/// The coloring greedy: repeatedly pick a white vertex with the maximum
/// number of white neighbours (ties per config), blacken it and gray its
/// neighbours, until no white vertex remains.
pub fn greedy_dominate(g: GridSpec, cfg: &GreedyConfig) -> VertexSet {
    let mut rng = match cfg.tie_break {
        TieBreak::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let (greens, repairs) = match cfg.tie_break {
        TieBreak::Adversarial => adversarial_parts(g),
        _ => (VertexSet::new(), VertexSet::new()),
    };
    let pattern_rank = |u: &Vertex| {
        if greens.contains(u) {
            0u8
        } else if repairs.contains(u) {
            1
        } else {
            2
        }
    };

    let mut white: VertexSet = g.vertices().collect();
    let mut black = VertexSet::new();
    while !white.is_empty() {
        let gain = |u: &Vertex| {
            1 + crate::grid::neighbors(g, *u)
                .unwrap()
                .iter()
                .filter(|w| white.contains(w))
                .count()
        };
        let best_gain = white.iter().map(gain).max().unwrap();
        let mut ties: Vec<Vertex> = white.iter().copied().filter(|u| gain(u) == best_gain).collect();
        let chosen = match cfg.tie_break {
            TieBreak::Lex => ties[0],
            TieBreak::Random(_) => *ties.choose(rng.as_mut().unwrap()).unwrap(),
            TieBreak::Adversarial => {
                ties.sort_by_key(|u| (pattern_rank(u), *u));
                ties[0]
            }
        };
        white.remove(&chosen);
        for w in crate::grid::neighbors(g, chosen).unwrap() {
            white.remove(&w);
        }
        black.insert(chosen);
    }
    black
}
