//! Exact combinatorics of toric spaces over wedged simplicial spheres.
//!
//! Given a simplicial sphere `K` and multiplicities `J`, the crate lists
//! the Davis–Januszkiewicz classes of characteristic maps over `K`, builds
//! the colored pre-diagram and the diagram of realizable squares, and
//! enumerates realizable puzzles on the board `G(J)`. Realizable puzzles
//! are in bijection with the D-J classes over `K(J)`.

pub mod charmap;
pub mod diagram;
pub mod error;
pub mod json;
pub mod linalg;
pub mod puzzle;
pub mod simplicial;

pub use charmap::{CharMatrix, DjClass, Ring};
pub use diagram::{Diagram, MarkedRow, PreDiagram};
pub use error::{Error, Result};
pub use puzzle::{Board, Puzzle};
pub use simplicial::{SimplicialComplex, VertexSet, WedgeVector};
