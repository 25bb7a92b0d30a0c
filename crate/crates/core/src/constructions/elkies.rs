//! The ten-point configuration with no rational realization, and the
//! symbolic computation behind it.
//!
//! Labels `(1)..(10)` are point ids `0..9`. After a projectivity
//!
//! ```text
//! (4) -> (1, 1)   (10) -> (1, -1)   (7) -> (-1, 1)   (1) -> (-1, -1)
//! ```
//!
//! the points `(8) = (1, a)` and `(3) = (-1, a)` share the height `a`, and
//! `(2)`, `(9)` lie on the horizontal line `y = b`. Point `(6)` is on the
//! diagonal `x = y` and can be computed two ways; equating them gives a
//! quadratic in `b` whose discriminant is `8 (a+1)^2 (-a^3 + a^2 + a + 1)`.

use num::{BigInt, One, Signed, Zero};

use crate::field::{int, rational_sqrt_exact, squarefree_split, QuadraticNumber, Rational};
use crate::incidence::realization::{verify_realization, Realization};
use crate::incidence::structure::IncidenceStructure;
use crate::poly::{BivariatePolynomial as P, BivariateRationalFunction as F, UniPoly};
use crate::projective::ProjectivePoint;

use super::named::named_structure;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElkiesError {
    #[error("a = {a} is excluded: {reason}")]
    DegenerateParameter { a: Rational, reason: &'static str },
    #[error("symbolic identity failed: {0}")]
    AlgebraMismatch(String),
}

/// Which root of the `b` quadratic to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            _ => Err(format!("branch must be `+` or `-`, got `{s}`")),
        }
    }
}

type Hom = [F; 3];

fn c(v: i64) -> F {
    F::from_poly(P::from_int(v))
}

fn pt(x: F, y: F) -> Hom {
    [x, y, c(1)]
}

fn cross(p: &Hom, q: &Hom) -> Hom {
    [
        p[1].mul(&q[2]).sub(&p[2].mul(&q[1])),
        p[2].mul(&q[0]).sub(&p[0].mul(&q[2])),
        p[0].mul(&q[1]).sub(&p[1].mul(&q[0])),
    ]
}

fn meet(p: &Hom, q: &Hom, r: &Hom, s: &Hom) -> Hom {
    cross(&cross(p, q), &cross(r, s))
}

fn affine(h: &Hom) -> (F, F) {
    let x = h[0].div(&h[2]).expect("finite point");
    let y = h[1].div(&h[2]).expect("finite point");
    (x, y)
}

fn a() -> F {
    F::from_poly(P::a())
}

fn b() -> F {
    F::from_poly(P::b())
}

/// Affine coordinates of the points fixed by the frame and the two
/// parameters: labels 1, 2, 3, 4, 7, 8, 9, 10.
pub fn elkies_base_point(label: u8) -> Option<(F, F)> {
    let frame = |x: i64, y: i64| (c(x), c(y));
    match label {
        1 => Some(frame(-1, -1)),
        4 => Some(frame(1, 1)),
        7 => Some(frame(-1, 1)),
        10 => Some(frame(1, -1)),
        8 => Some((c(1), a())),
        3 => Some((c(-1), a())),
        2 | 9 => {
            // (2) on l(1,8), (9) on l(10,3), both at height b
            let (p, q) = if label == 2 { (1, 8) } else { (10, 3) };
            let h = |l| {
                let (x, y) = elkies_base_point(l).unwrap();
                pt(x, y)
            };
            let horizontal = [pt(c(0), b()), pt(c(1), b())];
            Some(affine(&meet(&h(p), &h(q), &horizontal[0], &horizontal[1])))
        }
        _ => None,
    }
}

fn hom(label: u8) -> Hom {
    let (x, y) = elkies_base_point(label).expect("base label");
    pt(x, y)
}

/// Point (6) as `l(2,3)` meet `l(1,4)`.
pub fn elkies_point6_first() -> (F, F) {
    affine(&meet(&hom(2), &hom(3), &hom(1), &hom(4)))
}

/// Point (6) as `l(7,9)` meet `l(1,4)`; both coordinates agree.
pub fn elkies_point6_second() -> F {
    let (x, y) = affine(&meet(&hom(7), &hom(9), &hom(1), &hom(4)));
    debug_assert!(x == y);
    x
}

/// `-a^3 + a^2 + a + 1`.
pub fn elkies_radicand() -> UniPoly {
    UniPoly::from_ints(&[1, 1, 1, -1])
}

/// `(q2, q1, q0)` with `q2 b^2 + q1 b + q0 = 0` exactly when the two
/// computations of point (6) agree.
pub fn elkies_b_quadratic() -> Result<(UniPoly, UniPoly, UniPoly), ElkiesError> {
    let (x1, _) = elkies_point6_first();
    let x2 = elkies_point6_second();
    let diff = &(x1.numerator() * x2.denominator()) - &(x2.numerator() * x1.denominator());
    if diff.degree_b() != 2 {
        return Err(ElkiesError::AlgebraMismatch(format!(
            "cross-multiplied difference {diff} is not quadratic in b"
        )));
    }
    let mut q = [diff.coeff_b(2), diff.coeff_b(1), diff.coeff_b(0)];
    // divide out the factor shared by all three coefficients
    let g = q.iter().fold(UniPoly::zero(), |g, p| g.gcd(p));
    q = q.map(|p| p.div_rem(&g).0);
    let lead = q[0].leading().expect("nonzero").clone();
    let [q2, q1, q0] = q.map(|p| p.scale(&(Rational::one() / &lead)));
    let disc = &(&q1 * &q1) - &(&UniPoly::constant(int(4)) * &(&q2 * &q0));
    let a_plus_1 = UniPoly::from_ints(&[1, 1]);
    let expected = &UniPoly::constant(int(8)) * &(&(&a_plus_1 * &a_plus_1) * &elkies_radicand());
    if disc != expected {
        return Err(ElkiesError::AlgebraMismatch(format!(
            "discriminant {disc}, expected {expected}"
        )));
    }
    Ok((q2, q1, q0))
}

fn degenerate(a: &Rational, reason: &'static str) -> ElkiesError {
    ElkiesError::DegenerateParameter {
        a: a.clone(),
        reason,
    }
}

/// The configuration at height `a`, over `Q(sqrt d)` with `d` the
/// square-free part of `2(-a^3 + a^2 + a + 1)`.
pub fn elkies_realize(
    a: &Rational,
    branch: Branch,
) -> Result<Realization<QuadraticNumber>, ElkiesError> {
    if a.abs().is_one() {
        return Err(degenerate(
            a,
            "a = 1 or a = -1 makes two pairs of points coincide",
        ));
    }
    let q2 = UniPoly::from_ints(&[1, 6, 1]).eval(a);
    if q2.is_zero() {
        return Err(degenerate(a, "a^2 + 6a + 1 vanishes"));
    }
    let radicand = elkies_radicand().eval(a);
    if !radicand.is_positive() {
        return Err(degenerate(
            a,
            "-a^3 + a^2 + a + 1 is not positive, so b is not real",
        ));
    }
    let two_r = int(2) * &radicand;
    if rational_sqrt_exact(&two_r).is_some() {
        return Err(degenerate(a, "2(-a^3 + a^2 + a + 1) is a rational square"));
    }
    let (k, d) = squarefree_split(&two_r);
    let q = |r: Rational| QuadraticNumber::from_rational(&d, r);
    // b = (3a^2 + 1 +- (a+1) sqrt(2R)) / (a^2 + 6a + 1)
    let bq = QuadraticNumber::new(
        d.clone(),
        (int(3) * a * a + int(1)) / &q2,
        int(branch.sign()) * (a + int(1)) * &k / &q2,
    )
    .expect("d is square-free and not 1");
    let aq = q(a.clone());
    let eval = |f: &F| {
        f.eval(&aq, &bq)
            .ok_or_else(|| degenerate(a, "a coordinate has a vanishing denominator"))
    };
    let mut coords = Vec::with_capacity(10);
    for label in 1..=10u8 {
        let p = match label {
            5 => ProjectivePoint::new(q(int(1)), q(int(0)), q(int(0))),
            6 => {
                let t = eval(&elkies_point6_first().0)?;
                ProjectivePoint::new(t.clone(), t, q(int(1)))
            }
            _ => {
                let (x, y) = elkies_base_point(label).expect("base label");
                ProjectivePoint::new(eval(&x)?, eval(&y)?, q(int(1)))
            }
        };
        coords.push(p.expect("w = 1 or x = 1"));
    }
    let r = Realization::new(elkies_structure(), coords).expect("ten points");
    if !verify_realization(&r) {
        return Err(degenerate(a, "the points acquire extra collinearities"));
    }
    Ok(r)
}

fn elkies_structure() -> IncidenceStructure {
    named_structure("elkies").expect("bundled")
}

/// Whether `b(a)` is rational, which is what a rational realization with
/// this `a` would need: `a = -1`, or `2(-a^3 + a^2 + a + 1)` a rational
/// square. With `x = -a` the radicand condition reads `2y^2 = x^3 + x^2 - x + 1`.
pub fn rationality_obstruction(a: &Rational) -> bool {
    if (a + int(1)).is_zero() {
        return true;
    }
    let two_r = int(2) * elkies_radicand().eval(a);
    !two_r.is_negative() && rational_sqrt_exact(&two_r).is_some()
}

/// `d` of the field `elkies_realize(a, _)` lands in.
pub fn elkies_field(a: &Rational) -> Option<BigInt> {
    let two_r = int(2) * elkies_radicand().eval(a);
    if !two_r.is_positive() {
        return None;
    }
    let (_, d) = squarefree_split(&two_r);
    (!d.is_one()).then_some(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Field};

    fn f(num: &[(i64, u32, u32)], den: &[(i64, u32, u32)]) -> F {
        F::new(P::from_terms(num), P::from_terms(den)).unwrap()
    }

    #[test]
    fn point2_and_point9() {
        let x2 = f(&[(2, 0, 1), (-1, 1, 0), (1, 0, 0)], &[(1, 1, 0), (1, 0, 0)]);
        assert_eq!(elkies_base_point(2).unwrap(), (x2.clone(), b()));
        assert_eq!(elkies_base_point(9).unwrap(), (x2.neg(), b()));
    }

    #[test]
    fn point6_displayed_fractions() {
        let first = f(
            &[(-1, 2, 0), (3, 1, 1), (1, 1, 0), (1, 0, 1)],
            &[(1, 2, 0), (-1, 1, 1), (1, 1, 0), (1, 0, 1), (2, 0, 0)],
        );
        let (x, y) = elkies_point6_first();
        assert_eq!(x, first);
        assert_eq!(y, first);
        // -(a-1)(b+1) / (a(b-3) + 3b - 1)
        let second = f(
            &[(-1, 1, 1), (-1, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(1, 1, 1), (-3, 1, 0), (3, 0, 1), (-1, 0, 0)],
        );
        assert_eq!(elkies_point6_second(), second);
        assert_ne!(first, second);
        // factor (a - 1) in the numerator
        assert!(second.eval(&int(1), &int(5)).unwrap().is_zero());
    }

    #[test]
    fn quadratic_in_b() {
        let (q2, q1, q0) = elkies_b_quadratic().unwrap();
        assert_eq!(q2, UniPoly::from_ints(&[1, 6, 1]));
        assert_eq!(q1, UniPoly::from_ints(&[-2, 0, -6]));
        // oracle: ((3a^2+1)^2 - 2(a+1)^2 R) / q2 by exact division
        let s = UniPoly::from_ints(&[1, 0, 3]);
        let ap1 = UniPoly::from_ints(&[1, 1]);
        let top =
            &(&s * &s) - &(&UniPoly::constant(int(2)) * &(&(&ap1 * &ap1) * &elkies_radicand()));
        let (quo, rem) = top.div_rem(&q2);
        assert!(rem.is_zero());
        assert_eq!(q0, quo);
        assert_eq!(q0, UniPoly::from_ints(&[-1, 0, -1, 2]));
    }

    #[test]
    fn first_equals_second_on_the_quadratic() {
        // the cross-multiplied difference is a polynomial multiple of the quadratic
        let (x1, _) = elkies_point6_first();
        let x2 = elkies_point6_second();
        let diff = &(x1.numerator() * x2.denominator()) - &(x2.numerator() * x1.denominator());
        let (q2, q1, q0) = elkies_b_quadratic().unwrap();
        let quad = &(&(&P::from_uni_a(&q2) * &(&P::b() * &P::b()))
            + &(&P::from_uni_a(&q1) * &P::b()))
            + &P::from_uni_a(&q0);
        assert!(diff.div_exact(&quad).is_some());
    }

    #[test]
    fn a_zero() {
        let r = elkies_realize(&int(0), Branch::Plus).unwrap();
        let two = BigInt::from(2);
        let b = QuadraticNumber::new(two.clone(), int(1), int(1)).unwrap();
        assert_eq!(r.point(1).y(), &b);
        let six = QuadraticNumber::new(two, rat(1, 7), rat(2, 7)).unwrap();
        assert_eq!(r.point(5).x(), &six);
        assert_eq!(r.point(5).y(), &six);
        let a0 = QuadraticNumber::from_rational(&BigInt::from(2), int(0));
        assert_eq!(elkies_point6_second().eval(&a0, &b), Some(six));
        // (5) is the ideal point of horizontal lines
        assert!(r.point(4).w().vanishes());
    }

    #[test]
    fn both_branches_and_exclusions() {
        for a in [rat(1, 2), rat(-1, 3), int(-3)] {
            for br in [Branch::Plus, Branch::Minus] {
                assert!(
                    verify_realization(&elkies_realize(&a, br).unwrap()),
                    "{a} {br:?}"
                );
            }
        }
        assert!(matches!(
            elkies_realize(&int(1), Branch::Plus),
            Err(ElkiesError::DegenerateParameter { .. })
        ));
        assert!(matches!(
            elkies_realize(&int(-1), Branch::Minus),
            Err(ElkiesError::DegenerateParameter { .. })
        ));
        assert!(matches!(
            elkies_realize(&int(2), Branch::Plus),
            Err(ElkiesError::DegenerateParameter { .. })
        ));
    }

    #[test]
    fn obstruction() {
        assert!(rationality_obstruction(&int(-1)));
        assert!(rationality_obstruction(&int(1)));
        assert!(!rationality_obstruction(&int(2)));
        assert!(!rationality_obstruction(&int(0)));
        assert_eq!(elkies_field(&int(0)), Some(BigInt::from(2)));
    }
}
