//! Exact polynomials over the rationals: univariate (for residual systems)
//! and bivariate in `a`, `b` (for the Elkies algebra).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::field::{Field, Rational};

/// `c[0] + c[1] x + ...`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    c: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self { c }
    }

    pub fn zero() -> Self {
        Self { c: vec![] }
    }

    pub fn constant(r: Rational) -> Self {
        Self::new(vec![r])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(
            c.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.c.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.c
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, k| acc * x + k)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.c.iter().map(|v| v * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => Self::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d
            .leading()
            .expect("division by the zero polynomial")
            .clone();
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let k = &r[i] / &dl;
            if k.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[i - dd + j] -= &k * dj;
            }
            q[i - dd] = k;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            // keep coefficients small
            b = r.primitive();
        }
        a.monic()
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let ints = self.integer_coeffs();
        Self::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    fn integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = self
            .c
            .iter()
            .fold(BigInt::one(), |acc, k| acc.lcm(k.denom()));
        let mut ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|k| (k * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, k| acc.gcd(k));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for v in &mut ints {
            *v = &*v / &g * &sign;
        }
        ints
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// All rational roots, ascending, by the rational root theorem.
    /// `None` if a coefficient is too large to factor by trial division.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return None;
        }
        let mut ints = self.integer_coeffs();
        let mut roots = Vec::new();
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            let z = ints.iter().position(|v| !v.is_zero()).unwrap();
            ints.drain(..z);
        }
        if ints.len() > 1 {
            let ps = divisors(&ints[0])?;
            let qs = divisors(ints.last().unwrap())?;
            let reduced = Self::new(ints.iter().cloned().map(Rational::from_integer).collect());
            for p in &ps {
                for q in &qs {
                    if p.gcd(q) != BigInt::one() {
                        continue;
                    }
                    for s in [
                        Rational::new(p.clone(), q.clone()),
                        Rational::new(-p.clone(), q.clone()),
                    ] {
                        if reduced.eval(&s).is_zero() {
                            roots.push(s);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

const TRIAL_LIMIT: u64 = 1 << 40;

/// Positive divisors of a nonzero integer, if small enough to factor.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= TRIAL_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.c.len().max(o.c.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.c.get(i).cloned().unwrap_or_default()
                        + o.c.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        self + &(-o)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            c: self.c.iter().map(|v| -v).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (k, mono) in terms {
        let neg = k.is_negative();
        let mag = k.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        match (mag.is_one(), mono.is_empty()) {
            (true, false) => write!(f, "{mono}")?,
            (_, true) => write!(f, "{mag}")?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, k)| !k.is_zero())
            .map(|(i, k)| {
                let mono = match i {
                    0 => String::new(),
                    1 => "x".to_string(),
                    _ => format!("x^{i}"),
                };
                (k, mono)
            });
        write_terms(f, terms)
    }
}

/// Sum of `c * a^i * b^j`, keyed by `(i, j)`, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(r: Rational) -> Self {
        Self::monomial(r, 0, 0)
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(Rational::from_integer(v.into()))
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn a() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// Build from `(coefficient, i, j)` triples.
    pub fn from_terms(t: &[(i64, u32, u32)]) -> Self {
        t.iter().fold(Self::zero(), |acc, &(c, i, j)| {
            &acc + &Self::monomial(Rational::from_integer(c.into()), i, j)
        })
    }

    /// Univariate polynomial in `a`, as a bivariate polynomial.
    pub fn from_uni_a(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (i, k) in p.coeffs().iter().enumerate() {
            out = &out + &Self::monomial(k.clone(), i as u32, 0);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_b(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Coefficient of `b^j`, as a polynomial in `a`.
    pub fn coeff_b(&self, j: u32) -> UniPoly {
        let deg = self.terms.keys().filter(|k| k.1 == j).map(|k| k.0).max();
        let Some(deg) = deg else {
            return UniPoly::zero();
        };
        let mut c = vec![Rational::zero(); deg as usize + 1];
        for (&(i, jj), k) in &self.terms {
            if jj == j {
                c[i as usize] = k.clone();
            }
        }
        UniPoly::new(c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn eval<F: Field>(&self, a: &F, b: &F) -> F {
        let pow = |x: &F, e: u32| (0..e).fold(x.one_like(), |acc, _| acc * x.clone());
        self.terms.iter().fold(a.zero_like(), |acc, (&(i, j), c)| {
            acc + a.rational_like(c) * pow(a, i) * pow(b, j)
        })
    }

    pub fn eval_rational(&self, a: &Rational, b: &Rational) -> Rational {
        self.eval(a, b)
    }

    /// Substitute a rational for `a`, leaving a polynomial in `b` (as `x`).
    pub fn at_a(&self, a: &Rational) -> UniPoly {
        let deg = self.degree_b() as usize;
        let mut c = vec![Rational::zero(); deg + 1];
        for (&(i, j), k) in &self.terms {
            c[j as usize] += k * num::pow(a.clone(), i as usize);
        }
        UniPoly::new(c)
    }

    /// Leading term in lex order (`a` before `b`).
    fn leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let ((di, dj), dc) = d.leading()?;
        let dc = dc.clone();
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(((ri, rj), rc)) = r.leading() {
            if ri < di || rj < dj {
                return None;
            }
            let t = Self::monomial(rc / &dc, ri - di, rj - dj);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Gcd of the coefficients' numerators over lcm of denominators, with
    /// the sign of the leading term, so `self / content` is primitive.
    pub fn content(&self) -> Rational {
        let Some((_, lead)) = self.leading() else {
            return Rational::one();
        };
        let num = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, k| acc.gcd(k.numer()));
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, k| acc.lcm(k.denom()));
        let c = Rational::new(num, den);
        if lead.is_negative() {
            -c
        } else {
            c
        }
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, o: &BivariatePolynomial) -> BivariatePolynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let e = terms.entry(*m).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        BivariatePolynomial { terms }
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, o: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-o)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, o: &BivariatePolynomial) -> BivariatePolynomial {
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &o.terms {
                *terms.entry((i + k, j + l)).or_insert_with(Rational::zero) += c * d;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivariatePolynomial { terms }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
owned_ops!(UniPoly);
owned_ops!(BivariatePolynomial);

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |v: &str, e: u32| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        let terms = self.terms.iter().rev().map(|(&(i, j), c)| {
            let mono = [var("a", i), var("b", j)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            (c, mono)
        });
        write_terms(f, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("denominator is identically zero")]
pub struct ZeroDenominator;

/// `num / den` with a nonzero denominator, normalized by content and by
/// trial division against a small catalog of linear factors.
#[derive(Clone, Debug)]
pub struct BivariateRationalFunction {
    num: BivariatePolynomial,
    den: BivariatePolynomial,
}

impl BivariateRationalFunction {
    pub fn new(
        num: BivariatePolynomial,
        den: BivariatePolynomial,
    ) -> Result<Self, ZeroDenominator> {
        if den.is_zero() {
            return Err(ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: BivariatePolynomial) -> Self {
        Self {
            num: p,
            den: BivariatePolynomial::from_int(1),
        }
    }

    pub fn numerator(&self) -> &BivariatePolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BivariatePolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(mut num: BivariatePolynomial, mut den: BivariatePolynomial) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: BivariatePolynomial::from_int(1),
            };
        }
        let one = BivariatePolynomial::from_int(1);
        let a = BivariatePolynomial::a;
        let b = BivariatePolynomial::b;
        let catalog = [&a() - &one, &a() + &one, &b() - &one, &b() + &one, a(), b()];
        for f in &catalog {
            while let (Some(n), Some(d)) = (num.div_exact(f), den.div_exact(f)) {
                num = n;
                den = d;
            }
        }
        let k = den.content();
        let k = Rational::one() / k;
        Self {
            num: num.scale(&k),
            den: den.scale(&k),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::normalized(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::normalized(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalized(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self, ZeroDenominator> {
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Value at a point; `None` where the denominator vanishes.
    pub fn eval<F: Field>(&self, a: &F, b: &F) -> Option<F> {
        let d = self.den.eval(a, b);
        if d.vanishes() {
            return None;
        }
        Some(self.num.eval(a, b) / d)
    }
}

impl PartialEq for BivariateRationalFunction {
    /// Cross-multiplication.
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for BivariateRationalFunction {}

impl fmt::Display for BivariateRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let p = UniPoly::from_ints(&[-2, 1, 1]);
        let q = UniPoly::from_ints(&[3, -4, 1]);
        assert_eq!(p.gcd(&q), UniPoly::from_ints(&[-1, 1]));
        let (quo, rem) = (&p * &q).div_rem(&p);
        assert_eq!(quo, q);
        assert!(rem.is_zero());
    }

    #[test]
    fn rational_roots_found() {
        // 6x^3 - 5x^2 - 2x + 1 = (x-1)(2x-1)(3x+1)... check by oracle: evaluate
        let p = &(&UniPoly::from_ints(&[-1, 1]) * &UniPoly::from_ints(&[-1, 2]))
            * &UniPoly::from_ints(&[1, 3]);
        assert_eq!(
            p.rational_roots(),
            Some(vec![rat(-1, 3), rat(1, 2), int(1)])
        );
        assert_eq!(
            UniPoly::from_ints(&[-1, -1, 1]).rational_roots(),
            Some(vec![])
        );
        assert_eq!(
            UniPoly::from_ints(&[0, 0, -2, 0, 1]).rational_roots(),
            Some(vec![int(0)])
        );
    }

    #[test]
    fn division_by_golden_polynomial() {
        let g = UniPoly::from_ints(&[-1, -1, 1]);
        let p = &g * &UniPoly::from_ints(&[5, 0, 7]);
        assert!(g.divides(&p));
        assert!(!g.divides(&UniPoly::from_ints(&[-2, 0, 1])));
    }

    #[test]
    fn bivariate_exact_division() {
        let a = BivariatePolynomial::a;
        let b = BivariatePolynomial::b;
        let one = BivariatePolynomial::from_int(1);
        let f = &(&a() - &one) * &(&b() + &one);
        let g = &f * &(&(&a() * &b()) + &BivariatePolynomial::from_int(3));
        assert_eq!(
            g.div_exact(&f),
            Some(&(&a() * &b()) + &BivariatePolynomial::from_int(3))
        );
        assert_eq!(g.div_exact(&(&a() + &b())), None);
    }

    #[test]
    fn rational_function_equality_and_reduction() {
        let a = BivariatePolynomial::a;
        let b = BivariatePolynomial::b;
        let one = BivariatePolynomial::from_int(1);
        let f =
            BivariateRationalFunction::new(&(&a() - &one) * &b(), &(&a() - &one) * &(&b() + &one))
                .unwrap();
        assert_eq!(f.numerator(), &b());
        assert_eq!(
            f,
            BivariateRationalFunction::new(b().scale(&int(2)), (&b() + &one).scale(&int(2)))
                .unwrap()
        );
        assert!(BivariateRationalFunction::new(one.clone(), BivariatePolynomial::zero()).is_err());
        assert_eq!(f.eval_at(int(3), int(1)), Some(rat(1, 2)));
    }

    impl BivariateRationalFunction {
        fn eval_at(&self, a: Rational, b: Rational) -> Option<Rational> {
            self.eval(&a, &b)
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(UniPoly::from_ints(&[-1, -1, 1]).to_string(), "x^2 - x - 1");
        assert_eq!(
            BivariatePolynomial::from_terms(&[(1, 2, 0), (-3, 1, 1), (2, 0, 0)]).to_string(),
            "a^2 - 3*a*b + 2"
        );
    }
}
