//! Bounded search for rational points on `c y^2 = x^3 + p x^2 + q x + r`.

use num::integer::Roots;
use num::{BigInt, Integer, One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::field::{int, integer_sqrt_exact, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("leading coefficient c must be nonzero")]
pub struct ZeroLeading;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticCurveEquation {
    c: Rational,
    p: Rational,
    q: Rational,
    r: Rational,
}

impl EllipticCurveEquation {
    pub fn new(c: Rational, p: Rational, q: Rational, r: Rational) -> Result<Self, ZeroLeading> {
        if c.is_zero() {
            return Err(ZeroLeading);
        }
        Ok(Self { c, p, q, r })
    }

    /// `2y^2 = x^3 + x^2 - x + 1`.
    pub fn elkies() -> Self {
        Self::new(int(2), int(1), int(-1), int(1)).expect("c = 2")
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.c, &self.p, &self.q, &self.r]
    }

    /// `x^3 + p x^2 + q x + r`.
    pub fn rhs(&self, x: &Rational) -> Rational {
        ((x + &self.p) * x + &self.q) * x + &self.r
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        &self.c * y * y == self.rhs(x)
    }

    /// Integer cubic `A x^3 + B x^2 + C x + E` and `D > 0` with
    /// `y^2 = (A x^3 + ...) / D`.
    fn integral(&self) -> ([BigInt; 4], BigInt) {
        let coeffs = [int(1), self.p.clone(), self.q.clone(), self.r.clone()].map(|k| k / &self.c);
        let d = coeffs
            .iter()
            .fold(BigInt::one(), |acc, k| acc.lcm(k.denom()));
        let ints = coeffs.map(|k| (k * Rational::from_integer(d.clone())).to_integer());
        (ints, d)
    }
}

/// Precomputed integer form, with an `i128` copy when it fits.
struct Search {
    big: [BigInt; 4],
    d: BigInt,
    small: Option<([i128; 4], i128)>,
}

impl Search {
    fn new(curve: &EllipticCurveEquation) -> Self {
        let (big, d) = curve.integral();
        let small = (|| {
            let c = [
                big[0].to_i128()?,
                big[1].to_i128()?,
                big[2].to_i128()?,
                big[3].to_i128()?,
            ];
            Some((c, d.to_i128()?))
        })();
        Self { big, d, small }
    }

    /// For `x = p/q` in lowest terms, `y^2 = M / (D q^3)` with
    /// `M = A p^3 + B p^2 q + C p q^2 + E q^3`, so `y = s / (D q^2)` where
    /// `s^2 = M D q`.
    fn y_numerator(&self, p: i64, q: i64) -> Option<BigInt> {
        if let Some(s) = self
            .small
            .and_then(|(c, d)| Self::small_square(c, d, p as i128, q as i128))
        {
            return s;
        }
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        let [a, b, c, e] = &self.big;
        let m = a * &p * &p * &p + b * &p * &p * &q + c * &p * &q * &q + e * &q * &q * &q;
        integer_sqrt_exact(&(m * &self.d * q))
    }

    /// `None` on overflow, else the exact answer.
    fn small_square(c: [i128; 4], d: i128, p: i128, q: i128) -> Option<Option<BigInt>> {
        let (p2, q2) = (p.checked_mul(p)?, q.checked_mul(q)?);
        let m = c[0]
            .checked_mul(p2.checked_mul(p)?)?
            .checked_add(c[1].checked_mul(p2.checked_mul(q)?)?)?
            .checked_add(c[2].checked_mul(p.checked_mul(q2)?)?)?
            .checked_add(c[3].checked_mul(q2.checked_mul(q)?)?)?;
        let v = m.checked_mul(d)?.checked_mul(q)?;
        if v < 0 {
            return Some(None);
        }
        let v = v as u128;
        let s = v.sqrt();
        Some((s * s == v).then(|| BigInt::from(s)))
    }
}

/// All points with `x` of height at most `height_bound`, sorted by `x` then `y`.
pub fn curve_rational_points(
    curve: &EllipticCurveEquation,
    height_bound: u64,
) -> Vec<(Rational, Rational)> {
    let bound = height_bound as i64;
    let search = Search::new(curve);
    let mut out: Vec<(Rational, Rational)> = (1..=bound)
        .into_par_iter()
        .flat_map_iter(|q| {
            let search = &search;
            (-bound..=bound)
                .filter(move |p| p.gcd(&q) == 1)
                .flat_map(move |p| {
                    let s = search.y_numerator(p, q);
                    let x = Rational::new(p.into(), q.into());
                    s.into_iter().flat_map(move |s| {
                        let y = Rational::new(s, &search.d * BigInt::from(q * q));
                        let pair = if y.is_zero() {
                            vec![y]
                        } else {
                            vec![-y.clone(), y]
                        };
                        let x = x.clone();
                        pair.into_iter().map(move |y| (x.clone(), y))
                    })
                })
        })
        .collect();
    out.sort();
    debug_assert!(out.iter().all(|(x, y)| curve.contains(x, y)));
    out
}

/// Whether every `(x, y)` in `points` comes with `(x, -y)`.
pub fn closed_under_negation(points: &[(Rational, Rational)]) -> bool {
    points
        .iter()
        .all(|(x, y)| points.contains(&(x.clone(), -y.clone())))
}
