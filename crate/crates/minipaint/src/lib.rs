//! Exact solving for template painting on graphs, and for the equivalent
//! Free Flood-It game.
//!
//! An instance is a graph together with a template assigning a color to
//! every vertex. A paint plan is a sequence of strokes, each overwriting a
//! connected vertex set with one color, that reproduces the template from a
//! blank start; the goal is a shortest plan. Painting a template in s
//! strokes is equivalent to flooding the template-painted graph
//! monochromatic in s−1 moves, and the [`equivalence`] module converts
//! witnesses both ways.
//!
//! [`solver`] finds provably optimal plans on co-gem-free graphs (cographs
//! included), [`oracle`] provides exhaustive-search ground truth at small
//! scale, [`gen`] builds seeded random instances, and [`io`] reads and
//! writes the JSON documents the CLI exchanges.

#![forbid(unsafe_code)]

pub mod equivalence;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod paint;
mod set;
pub mod solver;

#[cfg(test)]
pub(crate) mod testfix;

pub use error::{Error, ErrorKind, Result};
pub use graph::Graph;
pub use paint::{
    ColorId, ColorOrder, FloodMove, FloodSequence, PaintPlan, Painting, Stroke, Template,
};
pub use set::VertexSet;
