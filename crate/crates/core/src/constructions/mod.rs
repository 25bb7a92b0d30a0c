//! Named configurations and their exact witnesses.

pub mod curve;
pub mod elkies;
pub mod named;
pub mod witnesses;

pub use curve::{curve_rational_points, EllipticCurveEquation};
pub use elkies::{
    elkies_b_quadratic, elkies_point6_first, elkies_point6_second, elkies_realize,
    rationality_obstruction, Branch, ElkiesError,
};
pub use named::{
    eight_three, fano, named_structure, square7_witness, square8_witness, UnknownName,
};
pub use witnesses::quadratic_witness;
