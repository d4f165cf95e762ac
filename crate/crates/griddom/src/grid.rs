//! Lattice geometry: coordinates, distances, neighbourhoods, boundary,
//! super-grid embedding and the k-th power graph.
//!
//! Vertices are 1-based: an `m x n` grid has vertices `(x, y)` with
//! `1 <= x <= m` and `1 <= y <= n`, `(1,1)` being the lower-left corner.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Dimensions of an m x n grid graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub m: u32,
    pub n: u32,
}

/// A lattice coordinate. Field order gives lexicographic `(x, y)` ordering.
/// Serializes as a `[x, y]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i32, i32)", into = "(i32, i32)")]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl From<(i32, i32)> for Vertex {
    fn from((x, y): (i32, i32)) -> Self {
        Vertex { x, y }
    }
}

impl From<Vertex> for (i32, i32) {
    fn from(v: Vertex) -> Self {
        (v.x, v.y)
    }
}

/// Canonically ordered set of vertices (lexicographic by `(x, y)`).
pub type VertexSet = BTreeSet<Vertex>;

impl Vertex {
    pub fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }
}

pub fn v(x: i32, y: i32) -> Vertex {
    Vertex { x, y }
}

impl GridSpec {
    pub fn new(m: u32, n: u32) -> Self {
        assert!(m >= 1 && n >= 1, "grid dimensions must be positive");
        GridSpec { m, n }
    }

    pub fn vertex_count(&self) -> u64 {
        self.m as u64 * self.n as u64
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.x >= 1 && v.x <= self.m as i32 && v.y >= 1 && v.y <= self.n as i32
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.m as i32).flat_map(move |x| (1..=self.n as i32).map(move |y| Vertex { x, y }))
    }

    pub(crate) fn check_contains(&self, vtx: Vertex) -> Result<()> {
        if self.contains(vtx) {
            Ok(())
        } else {
            Err(Error::OutOfBounds { v: vtx, m: self.m, n: self.n })
        }
    }
}

/// Shortest-path distance in the grid graph: `|dx| + |dy|`.
pub fn manhattan_distance(u: Vertex, w: Vertex) -> u32 {
    u.x.abs_diff(w.x) + u.y.abs_diff(w.y)
}

/// In-bounds vertices at distance exactly 1 from `vtx`.
pub fn neighbors(g: GridSpec, vtx: Vertex) -> Result<VertexSet> {
    g.check_contains(vtx)?;
    let mut out = VertexSet::new();
    for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
        let u = Vertex::new(vtx.x + dx, vtx.y + dy);
        if g.contains(u) {
            out.insert(u);
        }
    }
    Ok(out)
}

/// In-bounds vertices `u != vtx` with `d(u, vtx) <= k`.
pub fn k_neighbors(g: GridSpec, vtx: Vertex, k: u32) -> Result<VertexSet> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    g.check_contains(vtx)?;
    let k = k as i32;
    let mut out = VertexSet::new();
    for dx in -k..=k {
        let rem = k - dx.abs();
        for dy in -rem..=rem {
            if dx == 0 && dy == 0 {
                continue;
            }
            let u = Vertex::new(vtx.x + dx, vtx.y + dy);
            if g.contains(u) {
                out.insert(u);
            }
        }
    }
    Ok(out)
}

/// Vertices with fewer than 4 neighbours. For degenerate 1-wide grids this is
/// every vertex.
pub fn boundary(g: GridSpec) -> VertexSet {
    g.vertices()
        .filter(|v| v.x == 1 || v.x == g.m as i32 || v.y == 1 || v.y == g.n as i32)
        .collect()
}

/// The k-super-grid of `g` and the embedding offset: vertex `(x, y)` of `g`
/// corresponds to `(x + offset, y + offset)` of the super-grid.
pub fn super_grid(g: GridSpec, k: u32) -> (GridSpec, u32) {
    (GridSpec::new(g.m + 2 * k, g.n + 2 * k), k)
}

/// Closed k-ball cell count, `2k^2 + 2k + 1`. This is the modulus of
/// k-diagonal patterns.
pub fn k_ball_size(k: u32) -> Result<u32> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    Ok(2 * k * k + 2 * k + 1)
}

/// All unordered pairs `{u, w}` with `0 < d(u, w) <= k`, i.e. the edges of the
/// k-th power of the grid.
pub fn power_graph_edges(g: GridSpec, k: u32) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for u in g.vertices() {
        // enumerate only w > u lexicographically to keep pairs unordered
        let k = k as i32;
        for dx in 0..=k {
            let rem = k - dx;
            let lo = if dx == 0 { 1 } else { -rem };
            for dy in lo..=rem {
                let w = Vertex::new(u.x + dx, u.y + dy);
                if g.contains(w) {
                    edges.push((u, w));
                }
            }
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manhattan_examples() {
        assert_eq!(manhattan_distance(v(1, 1), v(1, 1)), 0);
        assert_eq!(manhattan_distance(v(1, 1), v(3, 4)), 5);
        assert_eq!(manhattan_distance(v(2, 5), v(5, 2)), 6);
    }

    #[test]
    fn neighbors_examples() {
        let g = GridSpec::new(3, 3);
        let mid: VertexSet = [v(1, 2), v(3, 2), v(2, 1), v(2, 3)].into_iter().collect();
        assert_eq!(neighbors(g, v(2, 2)).unwrap(), mid);
        let corner: VertexSet = [v(2, 1), v(1, 2)].into_iter().collect();
        assert_eq!(neighbors(g, v(1, 1)).unwrap(), corner);
        assert!(neighbors(GridSpec::new(1, 1), v(1, 1)).unwrap().is_empty());
        assert!(neighbors(g, v(0, 2)).is_err());
    }

    #[test]
    fn k_neighbors_examples() {
        let g = GridSpec::new(9, 9);
        assert_eq!(k_neighbors(g, v(5, 5), 1).unwrap().len(), 4);
        // radius-2 diamond has 13 cells, minus the centre
        assert_eq!(k_neighbors(g, v(5, 5), 2).unwrap().len(), 12);
        let expected: VertexSet =
            [v(2, 1), v(3, 1), v(1, 2), v(1, 3), v(2, 2)].into_iter().collect();
        assert_eq!(k_neighbors(GridSpec::new(3, 3), v(1, 1), 2).unwrap(), expected);
    }

    // independent oracle: distance scan over the whole grid
    fn k_neighbors_bruteforce(g: GridSpec, c: Vertex, k: u32) -> VertexSet {
        g.vertices()
            .filter(|&u| u != c && manhattan_distance(u, c) <= k)
            .collect()
    }

    #[test]
    fn k_neighbors_matches_bruteforce() {
        for (m, n) in [(1, 1), (3, 4), (6, 5), (9, 9)] {
            let g = GridSpec::new(m, n);
            for k in 1..=3 {
                for c in g.vertices() {
                    assert_eq!(k_neighbors(g, c, k).unwrap(), k_neighbors_bruteforce(g, c, k));
                }
            }
        }
    }

    #[test]
    fn boundary_examples() {
        let g = GridSpec::new(3, 3);
        let b = boundary(g);
        assert_eq!(b.len(), 8);
        assert!(!b.contains(&v(2, 2)));
        assert_eq!(boundary(GridSpec::new(2, 2)).len(), 4);
        assert_eq!(boundary(GridSpec::new(1, 5)).len(), 5);
    }

    #[test]
    fn boundary_is_low_degree_vertices() {
        for (m, n) in [(1, 1), (1, 7), (2, 2), (4, 6), (5, 5)] {
            let g = GridSpec::new(m, n);
            let by_degree: VertexSet =
                g.vertices().filter(|&u| neighbors(g, u).unwrap().len() < 4).collect();
            assert_eq!(boundary(g), by_degree);
        }
    }

    #[test]
    fn super_grid_examples() {
        assert_eq!(super_grid(GridSpec::new(10, 10), 1), (GridSpec::new(12, 12), 1));
        assert_eq!(super_grid(GridSpec::new(16, 16), 2), (GridSpec::new(20, 20), 2));
        assert_eq!(super_grid(GridSpec::new(1, 1), 1), (GridSpec::new(3, 3), 1));
    }

    #[test]
    fn k_ball_size_formula() {
        assert_eq!(k_ball_size(1).unwrap(), 5);
        assert_eq!(k_ball_size(2).unwrap(), 13);
        assert_eq!(k_ball_size(3).unwrap(), 25);
        assert!(k_ball_size(0).is_err());
    }

    #[test]
    fn power_graph_examples() {
        assert_eq!(power_graph_edges(GridSpec::new(2, 2), 1).len(), 4);
        assert_eq!(power_graph_edges(GridSpec::new(1, 3), 2).len(), 3);
        // second power of 3x3: every pair within distance two is adjacent
        let g = GridSpec::new(3, 3);
        let edges = power_graph_edges(g, 2);
        let expected = g
            .vertices()
            .flat_map(|u| g.vertices().map(move |w| (u, w)))
            .filter(|&(u, w)| u < w && manhattan_distance(u, w) <= 2)
            .count();
        assert_eq!(edges.len(), expected);
    }
}
