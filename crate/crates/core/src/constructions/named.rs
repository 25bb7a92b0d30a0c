//! The named structures, shipped as `.inc` assets.

use crate::field::{int, rat, Rational};
use crate::incidence::format::parse_inc;
use crate::incidence::realization::Realization;
use crate::incidence::structure::IncidenceStructure;
use crate::projective::ProjectivePoint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown structure `{0}`; known: {list}", list = NAMES.join(", "))]
pub struct UnknownName(pub String);

pub const NAMES: [&str; 7] = [
    "fano",
    "eight_three",
    "square7",
    "square8",
    "perles",
    "maclane",
    "elkies",
];

pub const FANO_INC: &str = include_str!("../../assets/fano.inc");
pub const EIGHT3_INC: &str = include_str!("../../assets/eight3.inc");
pub const SQUARE7_INC: &str = include_str!("../../assets/square7.inc");
pub const SQUARE8_INC: &str = include_str!("../../assets/square8.inc");
pub const PERLES_INC: &str = include_str!("../../assets/perles.inc");
pub const MACLANE_INC: &str = include_str!("../../assets/maclane.inc");
pub const ELKIES_INC: &str = include_str!("../../assets/elkies.inc");

pub fn named_structure(name: &str) -> Result<IncidenceStructure, UnknownName> {
    let text = match name {
        "fano" => FANO_INC,
        "eight_three" | "eight3" | "8_3" => EIGHT3_INC,
        "square7" => SQUARE7_INC,
        "square8" => SQUARE8_INC,
        "perles" => PERLES_INC,
        "maclane" => MACLANE_INC,
        "elkies" => ELKIES_INC,
        _ => return Err(UnknownName(name.to_string())),
    };
    Ok(parse_inc(text).expect("bundled assets parse"))
}

/// Lines `{i, i+1, i+3}` mod 7.
pub fn fano() -> IncidenceStructure {
    cyclic(7)
}

/// Lines `{i, i+1, i+3}` mod 8: the Möbius-Kantor configuration.
pub fn eight_three() -> IncidenceStructure {
    cyclic(8)
}

/// The unit square with its center and the two ideal points of its sides:
/// `(1/2, 1/2, 1)`, `(1, 0, 0)` and `(0, 1, 0)` with the four vertices.
pub fn square7_witness() -> Realization<Rational> {
    let p = |x, y, w| ProjectivePoint::new(x, y, w).expect("nonzero");
    let coords = vec![
        p(int(0), int(0), int(1)),
        p(int(0), int(1), int(1)),
        p(int(1), int(0), int(1)),
        p(int(1), int(1), int(1)),
        p(rat(1, 2), rat(1, 2), int(1)),
        p(int(1), int(0), int(0)),
        p(int(0), int(1), int(0)),
    ];
    Realization::new(named_structure("square7").expect("bundled"), coords).expect("seven points")
}

/// The square `(+-1, +-1)` with the ideal points of its sides and diagonals,
/// which lie on the line at infinity.
pub fn square8_witness() -> Realization<Rational> {
    let p = |x, y, w| ProjectivePoint::from_ints(x, y, w).expect("nonzero");
    let coords = vec![
        p(1, 0, 0),
        p(0, 1, 0),
        p(1, 1, 0),
        p(1, -1, 0),
        p(1, 1, 1),
        p(1, -1, 1),
        p(-1, 1, 1),
        p(-1, -1, 1),
    ];
    Realization::new(named_structure("square8").expect("bundled"), coords).expect("eight points")
}

fn cyclic(n: usize) -> IncidenceStructure {
    IncidenceStructure::new(
        n,
        (0..n).map(|i| vec![i, (i + 1) % n, (i + 3) % n]).collect(),
    )
    .expect("cyclic difference set")
}
