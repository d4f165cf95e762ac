//! Near-optimal k-distance dominating sets on grid graphs.
//!
//! The crate provides:
//! - lattice geometry primitives ([`grid`]),
//! - diagonal-pattern arithmetic and the projection step ([`diagonal`]),
//! - centralized set construction with bound reporting ([`constructor`]),
//! - an exact branch-and-bound solver for small instances ([`oracle`]),
//! - a greedy baseline with adversarial tie-breaking ([`greedy`]),
//! - a deterministic multi-agent simulator of the distributed protocol
//!   ([`sim`]),
//! - serialized artifacts and ASCII/SVG rendering ([`document`]).

pub mod constructor;
pub mod diagonal;
pub mod document;
pub mod error;
pub mod greedy;
pub mod grid;
pub mod oracle;
pub mod sim;

pub use constructor::{construct, construct_best, verify_k_domination, BoundsReport};
pub use diagonal::{diagonalize, orphans, project, DiagonalParams, Orientation};
pub use document::{render, RenderStyle, SetDocument};
pub use error::{Error, Result};
pub use grid::{manhattan_distance, GridSpec, Vertex, VertexSet};
