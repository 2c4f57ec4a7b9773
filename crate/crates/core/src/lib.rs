//! Exact classification of biharmonic hypersurfaces with constant principal
//! curvatures in spheres and in complex and quaternionic projective spaces,
//! with symbolic checks of a biharmonic polynomial map and of the pointwise
//! algebra behind bi-Yang–Mills isolation results.

pub mod error;
pub mod lie_forms;
pub mod catalog;
pub mod classify;
pub mod poly;
pub mod quartic_map;
pub mod report;

pub use error::{Error, Result};
