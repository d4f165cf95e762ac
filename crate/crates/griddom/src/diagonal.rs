//! Diagonal patterns, (k-)diagonalization, orphan detection and
//! (k-)projection.
//!
//! A k-diagonal pattern is the congruence class `k*y - (k+1)*x = r
//! (mod 2k^2+2k+1)`; diagonalizing a grid means taking the whole class, which
//! is maximal by construction.

use crate::error::{Error, Result};
use crate::grid::{k_ball_size, manhattan_distance, GridSpec, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

/// Axis orientation of a diagonal pattern. `Swapped` exchanges the roles of
/// x and y, doubling the candidate pattern family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Xy,
    Swapped,
}

/// Parameters selecting one k-diagonal pattern: radius `k`, residue
/// `r in [0, 2k^2+2k+1)` and axis orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalParams {
    pub k: u32,
    pub r: u32,
    pub orientation: Orientation,
}

impl DiagonalParams {
    pub fn new(k: u32, r: u32, orientation: Orientation) -> Result<Self> {
        let modulus = k_ball_size(k)?;
        if r >= modulus {
            return Err(Error::InvalidResidue { r, modulus });
        }
        Ok(DiagonalParams { k, r, orientation })
    }
}

/// Outcome of projecting a super-grid vertex set into the grid, all fields in
/// grid coordinates except `dropped`, which keeps super-grid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionResult {
    /// `kept ∪ added` — the in-grid image of the super-grid set.
    pub projected: VertexSet,
    /// Vertices of the super-grid set that already lie in the grid.
    pub kept: VertexSet,
    /// Friend images of super-grid vertices outside the grid.
    pub added: VertexSet,
    /// Super-grid vertices with no in-grid vertex within distance k.
    pub dropped: VertexSet,
}

/// `(k*y - (k+1)*x) mod (2k^2+2k+1)`, with x and y exchanged under the
/// swapped orientation. Result is reduced to `[0, modulus)`.
pub fn residue(vtx: Vertex, k: u32, orientation: Orientation) -> u32 {
    let modulus = 2 * k as i64 * k as i64 + 2 * k as i64 + 1;
    let (x, y) = match orientation {
        Orientation::Xy => (vtx.x as i64, vtx.y as i64),
        Orientation::Swapped => (vtx.y as i64, vtx.x as i64),
    };
    let val = k as i64 * y - (k as i64 + 1) * x;
    val.rem_euclid(modulus) as u32
}

/// The full residue class of `p` within `g`: the unique k-diagonalization of
/// `g` with those parameters.
pub fn diagonalize(g: GridSpec, p: &DiagonalParams) -> VertexSet {
    g.vertices().filter(|&u| residue(u, p.k, p.orientation) == p.r).collect()
}

/// Nearest in-grid vertex within distance k of a super-grid vertex, ties
/// broken lexicographically. `sv` is in super-grid coordinates; the result is
/// in grid coordinates.
pub fn friend_k(g: GridSpec, sv: Vertex, k: u32) -> Option<Vertex> {
    let off = k as i32;
    let mut best: Option<(u32, Vertex)> = None;
    for dx in -off..=off {
        let rem = off - dx.abs();
        for dy in -rem..=rem {
            let cand = Vertex::new(sv.x + dx - off, sv.y + dy - off);
            if !g.contains(cand) {
                continue;
            }
            let d = manhattan_distance(Vertex::new(sv.x - off, sv.y - off), cand);
            match best {
                Some((bd, bv)) if (d, cand) >= (bd, bv) => {}
                _ => best = Some((d, cand)),
            }
        }
    }
    best.map(|(_, u)| u)
}

/// In-grid vertices left k-uncovered by the in-grid part of the super-grid
/// diagonalization of `p`. Returned in grid coordinates.
pub fn orphans(g: GridSpec, p: &DiagonalParams) -> VertexSet {
    let (sg, off) = crate::grid::super_grid(g, p.k);
    let kept: VertexSet = diagonalize(sg, p)
        .into_iter()
        .filter_map(|sv| {
            let u = Vertex::new(sv.x - off as i32, sv.y - off as i32);
            g.contains(u).then_some(u)
        })
        .collect();
    g.vertices()
        .filter(|&u| kept.iter().all(|&w| manhattan_distance(u, w) > p.k))
        .collect()
}

/// Project a super-grid vertex set into the grid: keep in-grid members,
/// map each remaining vertex to its friend (nearest in-grid vertex within
/// distance k), and drop vertices with no friend.
pub fn project(g: GridSpec, super_set: &VertexSet, k: u32) -> Result<ProjectionResult> {
    let (sg, off) = crate::grid::super_grid(g, k);
    let mut kept = VertexSet::new();
    let mut added = VertexSet::new();
    let mut dropped = VertexSet::new();
    for &sv in super_set {
        sg.check_contains(sv)?;
        let u = Vertex::new(sv.x - off as i32, sv.y - off as i32);
        if g.contains(u) {
            kept.insert(u);
        } else if let Some(f) = friend_k(g, sv, k) {
            added.insert(f);
        } else {
            dropped.insert(sv);
        }
    }
    let projected: VertexSet = kept.union(&added).copied().collect();
    Ok(ProjectionResult { projected, kept, added, dropped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::v;

    #[test]
    fn residue_examples() {
        assert_eq!(residue(v(1, 2), 1, Orientation::Xy), 0);
        assert_eq!(residue(v(3, 3), 2, Orientation::Xy), 10);
        assert_eq!(residue(v(2, 4), 1, Orientation::Xy), 0);
    }

    #[test]
    fn residue_swapped_exchanges_axes() {
        for k in 1..=3 {
            assert_eq!(
                residue(v(2, 7), k, Orientation::Swapped),
                residue(v(7, 2), k, Orientation::Xy)
            );
        }
    }

    #[test]
    fn params_validate_residue_range() {
        assert!(DiagonalParams::new(1, 4, Orientation::Xy).is_ok());
        assert!(DiagonalParams::new(1, 5, Orientation::Xy).is_err());
        assert!(DiagonalParams::new(2, 12, Orientation::Xy).is_ok());
        assert!(DiagonalParams::new(0, 0, Orientation::Xy).is_err());
    }

    #[test]
    fn diagonalize_5x5_r0() {
        let g = GridSpec::new(5, 5);
        let p = DiagonalParams::new(1, 0, Orientation::Xy).unwrap();
        let expected: VertexSet =
            [v(1, 2), v(2, 4), v(3, 1), v(4, 3), v(5, 5)].into_iter().collect();
        assert_eq!(diagonalize(g, &p), expected);
    }

    #[test]
    fn diagonalize_12x12_attains_28() {
        // the 12x12 super-grid of a 10x10 grid is diagonalized by 28 vertices
        // for exactly one residue
        let g = GridSpec::new(12, 12);
        let sizes: Vec<usize> = (0..5)
            .map(|r| diagonalize(g, &DiagonalParams::new(1, r, Orientation::Xy).unwrap()).len())
            .collect();
        assert_eq!(sizes.iter().min(), Some(&28));
        assert_eq!(sizes[1], 28);
    }

    #[test]
    fn diagonalize_singleton() {
        let g = GridSpec::new(1, 1);
        let r = residue(v(1, 1), 1, Orientation::Xy);
        let p = DiagonalParams::new(1, r, Orientation::Xy).unwrap();
        assert_eq!(diagonalize(g, &p), [v(1, 1)].into_iter().collect());
    }

    #[test]
    fn orphans_6x6_r0() {
        // frozen from an exhaustive residue + coverage scan
        let g = GridSpec::new(6, 6);
        let p = DiagonalParams::new(1, 0, Orientation::Xy).unwrap();
        let expected: VertexSet =
            [v(1, 1), v(1, 6), v(2, 1), v(3, 6), v(6, 5)].into_iter().collect();
        assert_eq!(orphans(g, &p), expected);
    }

    #[test]
    fn orphans_lie_on_boundary_for_k1() {
        let b = crate::grid::boundary(GridSpec::new(10, 10));
        for r in 0..5 {
            let p = DiagonalParams::new(1, r, Orientation::Xy).unwrap();
            for o in orphans(GridSpec::new(10, 10), &p) {
                assert!(b.contains(&o));
            }
        }
    }

    #[test]
    fn orphans_singleton_grid() {
        // choose r so that the centre (2,2) of the 3x3 super-grid is in U'
        let g = GridSpec::new(1, 1);
        let r = residue(v(2, 2), 1, Orientation::Xy);
        let p = DiagonalParams::new(1, r, Orientation::Xy).unwrap();
        assert!(orphans(g, &p).is_empty());
    }

    #[test]
    fn project_identity_when_inside() {
        let g = GridSpec::new(5, 5);
        // super-grid coordinates of in-grid vertices are shifted by one
        let super_set: VertexSet = [v(2, 2), v(4, 5)].into_iter().collect();
        let res = project(g, &super_set, 1).unwrap();
        assert_eq!(res.projected, [v(1, 1), v(3, 4)].into_iter().collect());
        assert!(res.added.is_empty());
        assert!(res.dropped.is_empty());
    }

    #[test]
    fn project_drops_super_grid_corner() {
        let g = GridSpec::new(4, 4);
        let super_set: VertexSet = [v(1, 1)].into_iter().collect();
        let res = project(g, &super_set, 1).unwrap();
        assert!(res.projected.is_empty());
        assert_eq!(res.dropped, super_set);
    }

    #[test]
    fn project_fig1_sizes() {
        // 28-vertex diagonalization of the 12x12 super-grid projects into
        // between 24 and 28 vertices of the 10x10 grid
        let g = GridSpec::new(10, 10);
        let p = DiagonalParams::new(1, 1, Orientation::Xy).unwrap();
        let u = diagonalize(GridSpec::new(12, 12), &p);
        assert_eq!(u.len(), 28);
        let res = project(g, &u, 1).unwrap();
        assert!(res.projected.len() >= 24 && res.projected.len() <= 28);
    }

    #[test]
    fn project_rejects_out_of_super_grid() {
        let g = GridSpec::new(4, 4);
        let super_set: VertexSet = [v(0, 3)].into_iter().collect();
        assert!(project(g, &super_set, 1).is_err());
    }
}
