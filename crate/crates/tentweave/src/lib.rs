//! Symbolic dynamics of tent-map inverse limit spaces and their planar
//! embeddings: admissibility, basic-arc geometry, embedding coordinates,
//! cylinder extrema, accessibility classification, and kneading-sequence
//! height, cross-checkable against a numeric interval oracle.

pub mod arcs;
pub mod error;
pub mod epseq;
pub mod kneading;
pub mod numeric;
pub mod word;

pub use arcs::{BasicArc, PointItinerary, ProjEnd, Tau};
pub use epseq::{Direction, EPSeq};
pub use error::{Error, Result};
pub use kneading::Kneading;
pub use word::Word;

/// Concrete scalar used by the command-line tools and defaults.
pub type Real = f64;
/// Tent map with `f64` coordinates.
pub type TentMap = numeric::TentParams<f64>;
