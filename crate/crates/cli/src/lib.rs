//! Report building, SVG rendering and verification sweeps behind the
//! `turnreach` binary.

pub mod report;
pub mod svg;
pub mod sweep;
