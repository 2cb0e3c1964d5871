//! Multigraphs and the combinatorial machinery built on them: canonical
//! forms, text formats, exhaustive and inductive generators, and planar
//! embeddings.

pub mod canon;
pub mod gen;
pub mod graph6;
pub mod multigraph;
pub mod planar;

pub use canon::{canonical_key, canonical_key_colored, CanonKey};
pub use multigraph::{EdgeId, MultiGraph, VertexId};
pub use planar::{planar_embedding, RotationSystem};
