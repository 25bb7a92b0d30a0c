//! Exact scalar fields: the rationals and real quadratic extensions `Q(sqrt d)`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Height of a rational: `max(|numerator|, denominator)` in lowest terms.
pub fn height(r: &Rational) -> BigInt {
    let n = r.numer().abs();
    let d = r.denom().clone();
    if n > d {
        n
    } else {
        d
    }
}

/// All rationals of height at most `bound`, ordered by increasing height;
/// within one height the positive values come first (ascending), then their
/// negatives. Zero leads the list.
pub fn rationals_by_height(bound: u64) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for h in 1..=bound as i64 {
        let mut shell: Vec<Rational> = Vec::new();
        for other in 1..=h {
            // max(p, q) == h with gcd 1
            if other.gcd(&h) != 1 {
                continue;
            }
            shell.push(rat(h, other));
            if other != h {
                shell.push(rat(other, h));
            }
        }
        shell.sort();
        shell.dedup();
        let negatives: Vec<Rational> = shell.iter().map(|r| -r).collect();
        out.extend(shell);
        out.extend(negatives);
    }
    out
}

/// Exact integer square root, if `n` is a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Non-negative rational square root, if `r` is the square of a rational.
///
/// `p/q` in lowest terms is a square iff both `p` and `q` are.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    let p = integer_sqrt_exact(r.numer())?;
    let q = integer_sqrt_exact(r.denom())?;
    Some(Rational::new(p, q))
}

/// Split a nonzero integer as `k^2 * d` with `d` square-free (sign kept in `d`).
/// Uses trial division.
pub fn squarefree_split_integer(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free split of zero");
    let mut rest = n.abs();
    let mut k = BigInt::one();
    let mut d = if n.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            k *= &p;
        }
        if e % 2 == 1 {
            d *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    d *= rest;
    (k, d)
}

/// Split a nonzero rational as `k^2 * d` with rational `k > 0` and square-free
/// integer `d`.
pub fn squarefree_split(r: &Rational) -> (Rational, BigInt) {
    // p/q = p*q / q^2
    let pq = r.numer() * r.denom();
    let (k, d) = squarefree_split_integer(&pq);
    (Rational::new(k, r.denom().clone()), d)
}

/// Exact scalar field used for homogeneous coordinates.
///
/// Elements of `Q(sqrt d)` carry their `d`; combining elements of different
/// extensions is an invariant violation (checked by [`Field::same_field`]
/// at API boundaries, and by a panic inside arithmetic).
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn rational_like(&self, r: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn same_field(&self, other: &Self) -> bool;
    /// Approximate real value, for drawing only.
    fn to_f64(&self) -> f64;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn same_field(&self, _other: &Self) -> bool {
        true
    }
    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// An element `a + b*sqrt(d)` of the real quadratic field `Q(sqrt d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    d: BigInt,
    a: Rational,
    b: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuadraticError {
    #[error("discriminant {0} is not a square-free integer greater than 1")]
    BadDiscriminant(BigInt),
}

impl QuadraticNumber {
    pub fn new(d: BigInt, a: Rational, b: Rational) -> Result<Self, QuadraticError> {
        if d <= BigInt::one() {
            return Err(QuadraticError::BadDiscriminant(d));
        }
        let (k, _) = squarefree_split_integer(&d);
        if !k.is_one() {
            return Err(QuadraticError::BadDiscriminant(d));
        }
        Ok(Self { d, a, b })
    }

    /// `r` embedded in `Q(sqrt d)`; `d` is assumed already validated.
    pub fn from_rational(d: &BigInt, r: Rational) -> Self {
        Self {
            d: d.clone(),
            a: r,
            b: Rational::zero(),
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_d(d: &BigInt) -> Self {
        Self {
            d: d.clone(),
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }
    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        Self {
            d: self.d.clone(),
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.clone()) * &self.b * &self.b
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.d, other.d,
            "mixed quadratic fields Q(sqrt {}) and Q(sqrt {})",
            self.d, other.d
        );
    }

    /// Exact sign comparison against zero.
    pub fn signum(&self) -> i32 {
        // sign of a + b sqrt(d)
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a^2 with d b^2
        let lhs = &self.a * &self.a;
        let rhs = Rational::from_integer(self.d.clone()) * &self.b * &self.b;
        if lhs > rhs {
            sa
        } else if lhs < rhs {
            sb
        } else {
            0
        }
    }
}

fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for QuadraticNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            d: self.d,
        }
    }
}

impl Sub for QuadraticNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            d: self.d,
        }
    }
}

impl Mul for QuadraticNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        let dq = Rational::from_integer(self.d.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dq;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Self { a, b, d: self.d }
    }
}

impl Div for QuadraticNumber {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.check(&rhs);
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt {})", self.d);
        let num = self * rhs.conjugate();
        Self {
            a: num.a / &n,
            b: num.b / &n,
            d: num.d,
        }
    }
}

impl Neg for QuadraticNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Field for QuadraticNumber {
    fn zero_like(&self) -> Self {
        Self::from_rational(&self.d, Rational::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_rational(&self.d, Rational::one())
    }
    fn rational_like(&self, r: &Rational) -> Self {
        Self::from_rational(&self.d, r.clone())
    }
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn same_field(&self, other: &Self) -> bool {
        self.d == other.d
    }
    fn to_f64(&self) -> f64 {
        let d = num::ToPrimitive::to_f64(&self.d).unwrap_or(f64::NAN);
        self.a.to_f64() + self.b.to_f64() * d.sqrt()
    }
}

/// Canonical text form of a rational: `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QuadraticNumber {
    /// `a` when rational, else `a+b*sqrt(d)` / `a-b*sqrt(d)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*sqrt({})",
            format_rational(&self.a),
            op,
            format_rational(&self.b.abs()),
            self.d
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed number `{0}`")]
pub struct NumberParseError(pub String);

/// Parse `p`, `-p`, `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational, NumberParseError> {
    let err = || NumberParseError(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid_int = |t: &str, allow_sign: bool| {
        let digits = if allow_sign {
            t.strip_prefix('-').unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(n, true) || !valid_int(d, false) {
        return Err(err());
    }
    let n = BigInt::from_str(n).map_err(|_| err())?;
    let d = BigInt::from_str(d).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Parse `a`, `a+b*sqrt(d)` or `a-b*sqrt(d)`; returns `(a, b, d)` with
/// `d = None` for a plain rational.
pub fn parse_quadratic(s: &str) -> Result<(Rational, Rational, Option<BigInt>), NumberParseError> {
    let err = || NumberParseError(s.to_string());
    let Some(body) = s.strip_suffix(')') else {
        return Ok((parse_rational(s)?, Rational::zero(), None));
    };
    let (head, d) = body.rsplit_once("*sqrt(").ok_or_else(err)?;
    let d = BigInt::from_str(d).map_err(|_| err())?;
    // split head at the sign that separates the rational and irrational parts
    let split = head
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last()
        .ok_or_else(err)?;
    let a = parse_rational(&head[..split])?;
    let sign = &head[split..split + 1];
    let mag = &head[split + 1..];
    if mag.starts_with('-') || mag.starts_with('+') {
        return Err(err());
    }
    let mut b = parse_rational(mag)?;
    if sign == "-" {
        b = -b;
    }
    Ok((a, b, Some(d)))
}
