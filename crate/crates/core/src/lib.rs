//! Dominating sets in intersection graphs of L-frames.
//!
//! Frames are integer L-shapes (a corner and two arms). The crate builds
//! their intersection graphs under the usual point model or the edge model
//! (sharing a unit grid edge), solves minimum dominating set exactly, greedily,
//! by bounded local search and by a scan over permutation diagrams, and ships
//! the constructions that relate these graph classes to circle graphs,
//! monotone 3SAT, vertex cover and edge dominating set.

pub mod epg;
pub mod exchange;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod instance;
pub mod io;
pub mod local_search;
pub mod permutation;
pub mod reductions;

pub use geometry::{Diagonal, LFrame, Model, Point, Rect, Side};
pub use graph::{DominatingSet, IntersectionGraph};
pub use instance::{GeomInstance, Objects};
