//! Frozen realizations over quadratic fields.
//!
//! Each was produced once with [`find_quadratic_witness`] on a
//! one-parameter plan, at a root of the forced minimal polynomial, and is
//! checked against a fresh run in the tests.
//!
//! [`find_quadratic_witness`]: crate::engine::residual::find_quadratic_witness

use crate::field::QuadraticNumber;
use crate::incidence::format::{parse_real, AnyRealization};
use crate::incidence::realization::Realization;
use crate::poly::UniPoly;

use super::named::UnknownName;

pub const PERLES_REAL: &str = include_str!("../../assets/perles.real");
pub const MACLANE_REAL: &str = include_str!("../../assets/maclane.real");

/// The minimal polynomial a realization of `name` is forced to use.
pub fn forced_polynomial(name: &str) -> Result<UniPoly, UnknownName> {
    match name {
        "perles" => Ok(UniPoly::from_ints(&[-1, -1, 1])),
        "maclane" => Ok(UniPoly::from_ints(&[-2, 0, 1])),
        _ => Err(UnknownName(name.to_string())),
    }
}

pub fn quadratic_witness(name: &str) -> Result<Realization<QuadraticNumber>, UnknownName> {
    let text = match name {
        "perles" => PERLES_REAL,
        "maclane" => MACLANE_REAL,
        _ => return Err(UnknownName(name.to_string())),
    };
    match parse_real(text).expect("bundled assets parse") {
        AnyRealization::Quadratic { realization, .. } => Ok(realization),
        AnyRealization::Rational(_) => unreachable!("bundled witnesses are quadratic"),
    }
}
