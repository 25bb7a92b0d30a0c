//! Exact tools for rational realizability of small point-line configurations.

pub mod applications;
pub mod cli;
pub mod constructions;
pub mod engine;
pub mod enumeration;
pub mod field;
pub mod incidence;
pub mod poly;
pub mod projective;
pub mod render;

pub use field::{QuadraticNumber, Rational};
pub use incidence::{IncidenceStructure, PointId, Realization};
pub use projective::{ProjectiveMap, ProjectivePoint};
