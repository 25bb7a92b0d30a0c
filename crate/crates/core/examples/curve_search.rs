//! Rational points of small height on 2y^2 = x^3 + x^2 - x + 1.

use projconf::constructions::curve::{
    closed_under_negation, curve_rational_points, EllipticCurveEquation,
};

fn main() {
    let curve = EllipticCurveEquation::elkies();
    for bound in [10, 100, 1000] {
        let pts = curve_rational_points(&curve, bound);
        println!(
            "bound {bound}: {} points, symmetric {}",
            pts.len(),
            closed_under_negation(&pts)
        );
        for (x, y) in &pts {
            println!("  ({x}, {y})");
        }
    }
}
