//! Rectilinear chains realizing turn sequences: constructions, reachability,
//! closest axis points and an exhaustive oracle.

pub mod bounds;
pub mod construct;
pub mod error;
pub mod geom;
pub mod oracle;
pub mod reach;
pub mod turnseq;

pub use error::{Error, Result};
pub use geom::{BoundingBox, Chain, Point};
pub use turnseq::{Dir, Hook, HookKind, Measures, PrefixProfile, Turn, TurnSequence};
