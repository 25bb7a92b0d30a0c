//! Homogeneous coordinates, lines, and rational projective maps of the plane.

use std::fmt;

use num::{BigInt, One, Zero};

use crate::field::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("all three homogeneous coordinates are zero")]
    ZeroPoint,
    #[error("coordinates come from different fields")]
    MixedField,
    #[error("projective map has zero determinant")]
    SingularMap,
    #[error("frame points are degenerate: {0}")]
    DegenerateFrame(&'static str),
}

/// Scale so that the last nonzero entry is one. `None` for the zero vector.
pub(crate) fn canonicalize<F: Field>(v: [F; 3]) -> Option<[F; 3]> {
    let pivot = v.iter().rposition(|c| !c.vanishes())?;
    let s = v[pivot].clone();
    if s == s.one_like() {
        return Some(v);
    }
    Some(v.map(|c| c / s.clone()))
}

pub(crate) fn cross<F: Field>(p: &[F; 3], q: &[F; 3]) -> [F; 3] {
    [
        p[1].clone() * q[2].clone() - p[2].clone() * q[1].clone(),
        p[2].clone() * q[0].clone() - p[0].clone() * q[2].clone(),
        p[0].clone() * q[1].clone() - p[1].clone() * q[0].clone(),
    ]
}

pub(crate) fn dot<F: Field>(p: &[F; 3], q: &[F; 3]) -> F {
    p[0].clone() * q[0].clone() + p[1].clone() * q[1].clone() + p[2].clone() * q[2].clone()
}

pub(crate) fn det3<F: Field>(p: &[F; 3], q: &[F; 3], r: &[F; 3]) -> F {
    dot(p, &cross(q, r))
}

/// A point of the projective plane, stored in canonical form (last nonzero
/// coordinate equal to one), so structural equality is projective equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint<F> {
    c: [F; 3],
}

impl<F: Field> ProjectivePoint<F> {
    pub fn new(x: F, y: F, w: F) -> Result<Self, GeometryError> {
        if !x.same_field(&y) || !x.same_field(&w) {
            return Err(GeometryError::MixedField);
        }
        Self::from_array([x, y, w])
    }

    pub(crate) fn from_array(v: [F; 3]) -> Result<Self, GeometryError> {
        canonicalize(v)
            .map(|c| Self { c })
            .ok_or(GeometryError::ZeroPoint)
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.c
    }
    pub fn x(&self) -> &F {
        &self.c[0]
    }
    pub fn y(&self) -> &F {
        &self.c[1]
    }
    pub fn w(&self) -> &F {
        &self.c[2]
    }

    /// True for points off the line at infinity.
    pub fn is_finite(&self) -> bool {
        !self.c[2].vanishes()
    }

    pub fn same_field(&self, other: &Self) -> bool {
        self.c[0].same_field(&other.c[0])
    }

    /// The line through two distinct points.
    pub fn join(&self, other: &Self) -> Option<Line<F>> {
        canonicalize(cross(&self.c, &other.c)).map(|c| Line { c })
    }

    /// Apply a coordinatewise map, e.g. a field automorphism.
    pub fn map_coords(&self, f: impl Fn(&F) -> F) -> Result<Self, GeometryError> {
        Self::from_array([f(&self.c[0]), f(&self.c[1]), f(&self.c[2])])
    }
}

impl ProjectivePoint<Rational> {
    /// Convenience constructor from small integers.
    pub fn from_ints(x: i64, y: i64, w: i64) -> Result<Self, GeometryError> {
        Self::new(
            Rational::from(BigInt::from(x)),
            Rational::from(BigInt::from(y)),
            Rational::from(BigInt::from(w)),
        )
    }
}

impl<F: Field> fmt::Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

/// A line `a*x + b*y + c*w = 0`, canonical like points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line<F> {
    c: [F; 3],
}

impl<F: Field> Line<F> {
    pub fn coeffs(&self) -> &[F; 3] {
        &self.c
    }

    pub fn contains(&self, p: &ProjectivePoint<F>) -> bool {
        dot(&self.c, p.coords()).vanishes()
    }

    /// Intersection point; `None` when the lines coincide.
    pub fn meet(&self, other: &Self) -> Option<ProjectivePoint<F>> {
        ProjectivePoint::from_array(cross(&self.c, &other.c)).ok()
    }
}

/// Determinant test. Errors when the points live in different fields.
pub fn collinear<F: Field>(
    p: &ProjectivePoint<F>,
    q: &ProjectivePoint<F>,
    r: &ProjectivePoint<F>,
) -> Result<bool, GeometryError> {
    if !p.same_field(q) || !p.same_field(r) {
        return Err(GeometryError::MixedField);
    }
    Ok(det3(p.coords(), q.coords(), r.coords()).vanishes())
}

/// Collinearity for points already known to share a field.
pub(crate) fn collinear_unchecked<F: Field>(
    p: &ProjectivePoint<F>,
    q: &ProjectivePoint<F>,
    r: &ProjectivePoint<F>,
) -> bool {
    det3(p.coords(), q.coords(), r.coords()).vanishes()
}

/// Invertible 3x3 rational matrix acting on homogeneous column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveMap {
    m: [[Rational; 3]; 3],
}

fn det_matrix(m: &[[Rational; 3]; 3]) -> Rational {
    let r = |i: usize| [m[i][0].clone(), m[i][1].clone(), m[i][2].clone()];
    det3(&r(0), &r(1), &r(2))
}

impl ProjectiveMap {
    pub fn new(m: [[Rational; 3]; 3]) -> Result<Self, GeometryError> {
        if det_matrix(&m).is_zero() {
            return Err(GeometryError::SingularMap);
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        let z = Rational::zero;
        let o = Rational::one;
        Self {
            m: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    /// `T = [[1,0,0],[0,1,0],[a,b,c]]`, sending the line `a x + b y + c w = 0`
    /// to infinity.
    pub fn relocation(a: Rational, b: Rational, c: Rational) -> Result<Self, GeometryError> {
        let z = Rational::zero;
        let o = Rational::one;
        Self::new([[o(), z(), z()], [z(), o(), z()], [a, b, c]])
    }

    pub fn matrix(&self) -> &[[Rational; 3]; 3] {
        &self.m
    }

    pub fn determinant(&self) -> Rational {
        det_matrix(&self.m)
    }

    pub fn inverse(&self) -> Self {
        let m = &self.m;
        let det = self.determinant();
        let mut inv: [[Rational; 3]; 3] = Default::default();
        for (i, row) in inv.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // adjugate: cofactor of (j, i)
                let (r0, r1) = others(j);
                let (c0, c1) = others(i);
                let minor = &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
                let sign = if (i + j) % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                *cell = sign * minor / &det;
            }
        }
        Self { m: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out: [[Rational; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| &self.m[i][k] * &other.m[k][j]).sum();
            }
        }
        Self { m: out }
    }

    pub fn apply<F: Field>(&self, p: &ProjectivePoint<F>) -> ProjectivePoint<F> {
        apply_map(self, p)
    }
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Matrix-vector product followed by canonicalization.
pub fn apply_map<F: Field>(m: &ProjectiveMap, p: &ProjectivePoint<F>) -> ProjectivePoint<F> {
    let c = p.coords();
    let lift = |r: &Rational| c[0].rational_like(r);
    let row = |i: usize| {
        lift(&m.m[i][0]) * c[0].clone()
            + lift(&m.m[i][1]) * c[1].clone()
            + lift(&m.m[i][2]) * c[2].clone()
    };
    ProjectivePoint::from_array([row(0), row(1), row(2)])
        .expect("invertible map sends nonzero vectors to nonzero vectors")
}

/// Whether a frame's third point was collinear with the first two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameKind {
    /// Targets `(1,0,0), (0,1,0), (1,1,1), (0,0,1)`.
    General,
    /// Targets `(1,0,0), (0,1,0), (1,1,0), (0,0,1)`: the first three points
    /// are collinear, the fourth is off their line.
    Collinear,
}

impl FrameKind {
    /// Standard images of the four frame points.
    pub fn targets(self) -> [ProjectivePoint<Rational>; 4] {
        let p = |x, y, w| ProjectivePoint::from_ints(x, y, w).unwrap();
        let third = match self {
            FrameKind::General => p(1, 1, 1),
            FrameKind::Collinear => p(1, 1, 0),
        };
        [p(1, 0, 0), p(0, 1, 0), third, p(0, 0, 1)]
    }
}

/// Projective map sending `p1, p2, p4` to `(1,0,0), (0,1,0), (0,0,1)` and
/// `p3` to `(1,1,0)` when `p3` lies on line `p1 p2`, else to `(1,1,1)`.
///
/// Writes `p3 = α p1 + β p2 + γ p4`; the inverse map has columns
/// `α p1, β p2, γ p4` (with `γ` replaced by 1 in the collinear case).
pub fn frame_map(
    p1: &ProjectivePoint<Rational>,
    p2: &ProjectivePoint<Rational>,
    p3: &ProjectivePoint<Rational>,
    p4: &ProjectivePoint<Rational>,
) -> Result<ProjectiveMap, GeometryError> {
    frame_map_with_kind(p1, p2, p3, p4).map(|(m, _)| m)
}

pub fn frame_map_with_kind(
    p1: &ProjectivePoint<Rational>,
    p2: &ProjectivePoint<Rational>,
    p3: &ProjectivePoint<Rational>,
    p4: &ProjectivePoint<Rational>,
) -> Result<(ProjectiveMap, FrameKind), GeometryError> {
    let (a, b, d) = (p1.coords(), p2.coords(), p4.coords());
    let det = det3(a, b, d);
    if det.is_zero() {
        return Err(GeometryError::DegenerateFrame(
            "p1, p2, p4 do not span the plane",
        ));
    }
    // Cramer's rule on the columns a, b, d
    let t = p3.coords();
    let alpha = det3(t, b, d) / &det;
    let beta = det3(a, t, d) / &det;
    let gamma = det3(a, b, t) / &det;
    if alpha.is_zero() || beta.is_zero() {
        return Err(GeometryError::DegenerateFrame(
            "p3 coincides with a frame point or lies on a line through p4",
        ));
    }
    let (gamma, kind) = if gamma.is_zero() {
        (Rational::one(), FrameKind::Collinear)
    } else {
        (gamma, FrameKind::General)
    };
    let col = |v: &[Rational; 3], s: &Rational| [&v[0] * s, &v[1] * s, &v[2] * s];
    let (c0, c1, c2) = (col(a, &alpha), col(b, &beta), col(d, &gamma));
    let inv = ProjectiveMap::new([
        [c0[0].clone(), c1[0].clone(), c2[0].clone()],
        [c0[1].clone(), c1[1].clone(), c2[1].clone()],
        [c0[2].clone(), c1[2].clone(), c2[2].clone()],
    ])?;
    Ok((inv.inverse(), kind))
}

/// Search integer triples `(a, b, c)` with `c != 0` in increasing height
/// (`max(|a|,|b|,|c|)`) for a line avoiding every point, and return the map
/// `T` that sends that line to infinity.
pub fn euclidean_relocation(points: &[ProjectivePoint<Rational>]) -> ProjectiveMap {
    let (a, b, c) = avoiding_line(points);
    ProjectiveMap::relocation(a, b, c).expect("c is nonzero")
}

/// The `(a, b, c)` used by [`euclidean_relocation`].
pub fn avoiding_line(points: &[ProjectivePoint<Rational>]) -> (Rational, Rational, Rational) {
    let signed = |h: i64| -> Vec<i64> {
        let mut v = vec![0];
        for k in 1..=h {
            v.push(k);
            v.push(-k);
        }
        v
    };
    for h in 1i64.. {
        let vals = signed(h);
        for &c in vals.iter().filter(|&&c| c != 0) {
            for &a in &vals {
                for &b in &vals {
                    if a.abs().max(b.abs()).max(c.abs()) != h {
                        continue;
                    }
                    let l = [
                        Rational::from(BigInt::from(a)),
                        Rational::from(BigInt::from(b)),
                        Rational::from(BigInt::from(c)),
                    ];
                    if points.iter().all(|p| !dot(&l, p.coords()).is_zero()) {
                        let [a, b, c] = l;
                        return (a, b, c);
                    }
                }
            }
        }
    }
    unreachable!("a finite point set always misses some line")
}
