//! Serialized vertex-set artifacts and their ASCII / SVG renderings.

use crate::constructor::verify_k_domination;
use crate::error::{Error, Result};
use crate::grid::{GridSpec, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

/// A dominating (or candidate) set on an m×n grid, as written to and read
/// from disk. Vertices are stored as `[x, y]` pairs, deduplicated and
/// lexicographically sorted on write.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetDocument {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub vertices: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl SetDocument {
    pub fn new(g: GridSpec, k: u32, vertices: &VertexSet, meta: Option<Meta>) -> Self {
        // BTreeSet iteration already yields lexicographic order
        SetDocument { m: g.m, n: g.n, k, vertices: vertices.iter().copied().collect(), meta }
    }

    pub fn grid(&self) -> GridSpec {
        GridSpec::new(self.m, self.n)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Check the document is internally consistent: grid dimensions positive
    /// and all vertices in bounds.
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 || self.n == 0 {
            return Err(Error::DocumentMismatch {
                m: self.m,
                n: self.n,
                reason: "grid dimensions must be positive".into(),
            });
        }
        let g = self.grid();
        for &u in &self.vertices {
            if !g.contains(u) {
                return Err(Error::DocumentMismatch {
                    m: self.m,
                    n: self.n,
                    reason: format!("vertex ({},{}) out of bounds", u.x, u.y),
                });
            }
        }
        Ok(())
    }

    /// Orphan vertices recorded by the producer, if any.
    pub fn orphans(&self) -> VertexSet {
        self.meta
            .as_ref()
            .and_then(|m| m.params.as_ref())
            .and_then(|p| p.get("orphans"))
            .and_then(|o| serde_json::from_value::<Vec<Vertex>>(o.clone()).ok())
            .map(|vs| vs.into_iter().collect())
            .unwrap_or_default()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut doc = self.clone();
        doc.vertices = self.vertex_set().into_iter().collect();
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SetDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    Ascii,
    Svg,
}

/// Render a document. ASCII prints rows from y = n down to y = 1 with glyphs
/// `D` (member), `O` (orphan member), `.` (dominated non-member) and `!`
/// (undominated). SVG draws one circle per vertex with matching roles.
pub fn render(doc: &SetDocument, style: RenderStyle) -> Result<String> {
    doc.validate()?;
    let g = doc.grid();
    let members = doc.vertex_set();
    let orphans = doc.orphans();
    let report = verify_k_domination(g, &members, doc.k)?;
    match style {
        RenderStyle::Ascii => Ok(render_ascii(g, &members, &orphans, &report.uncovered)),
        RenderStyle::Svg => Ok(render_svg(g, &members, &orphans, &report.uncovered)),
    }
}

fn render_ascii(g: GridSpec, members: &VertexSet, orphans: &VertexSet, bad: &VertexSet) -> String {
    let mut out = String::new();
    for y in (1..=g.n as i32).rev() {
        for x in 1..=g.m as i32 {
            let u = Vertex::new(x, y);
            let glyph = if orphans.contains(&u) {
                'O'
            } else if members.contains(&u) {
                'D'
            } else if bad.contains(&u) {
                '!'
            } else {
                '.'
            };
            out.push(glyph);
        }
        out.push('\n');
    }
    out
}

fn render_svg(g: GridSpec, members: &VertexSet, orphans: &VertexSet, bad: &VertexSet) -> String {
    const CELL: i32 = 20;
    const PAD: i32 = 20;
    let width = (g.m as i32 - 1) * CELL + 2 * PAD;
    let height = (g.n as i32 - 1) * CELL + 2 * PAD;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    // vertices in lexicographic order keep the output deterministic
    for u in g.vertices() {
        let cx = PAD + (u.x - 1) * CELL;
        let cy = PAD + (g.n as i32 - u.y) * CELL; // y grows upward
        let (fill, stroke) = if orphans.contains(&u) {
            ("#e07b39", "#000")
        } else if members.contains(&u) {
            ("#2b6cb0", "#000")
        } else if bad.contains(&u) {
            ("#fff", "#c00")
        } else {
            ("#ddd", "#888")
        };
        out.push_str(&format!(
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"7\" fill=\"{fill}\" stroke=\"{stroke}\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
