//! Exact combinatorial toolkit for mapping class groups of punctured surfaces.
//!
//! Surfaces are polygon complexes with marked vertices, curves are cyclic
//! words of edge crossings, and mapping classes are words in Dehn twists
//! acting on curves. The `structure` layer turns subsurface data into
//! symbolic group descriptions.

pub mod cell_surface;
pub mod cli;
pub mod curve_engine;
pub mod error;
pub mod fixtures;
pub mod mcg_algebra;
pub mod structure;

pub use cell_surface::{CellSurface, SurfaceSpec};
pub use curve_engine::{Crossing, Curve};
pub use error::{Error, Result};
