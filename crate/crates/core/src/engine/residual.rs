//! Symbolic propagation along a one-parameter plan.
//!
//! With the frame fixed and a single point free on a spanned line
//! (`A + t B`), every other point is a meet and so a polynomial vector in
//! `t`. Each residual line gives a polynomial that must vanish. In any
//! rational realization the frame can be moved to the standard one by a
//! rational map, after which `t` is rational, so it must be a rational root
//! of the gcd of the residual polynomials. When no rational root yields a
//! realization, the structure has none over `Q`.

use std::ops::ControlFlow;

use num::{BigInt, One, Signed, Zero};

use crate::engine::plan::{for_each_plan, ConstraintPlan};
use crate::engine::search::Placement;
use crate::field::{squarefree_split, Field, QuadraticNumber, Rational};
use crate::incidence::realization::{verify_realization, Realization};
use crate::incidence::structure::IncidenceStructure;
use crate::poly::UniPoly;
use crate::projective::ProjectivePoint;

type PolyVec = [UniPoly; 3];

fn cross(p: &PolyVec, q: &PolyVec) -> PolyVec {
    [
        &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
        &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
        &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
    ]
}

fn det(p: &PolyVec, q: &PolyVec, r: &PolyVec) -> UniPoly {
    let c = cross(q, r);
    &(&(&p[0] * &c[0]) + &(&p[1] * &c[1])) + &(&p[2] * &c[2])
}

/// Divide out the common polynomial factor, leaving primitive coordinates.
fn reduce_vec(v: PolyVec) -> PolyVec {
    let g = v.iter().fold(UniPoly::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v;
    }
    let v = v.map(|c| c.div_rem(&g).0);
    let coeffs = || v.iter().flat_map(|c| c.coeffs().iter());
    let num = coeffs().fold(BigInt::zero(), |acc, k| num::Integer::gcd(&acc, k.numer()));
    let den = coeffs().fold(BigInt::one(), |acc, k| num::Integer::lcm(&acc, k.denom()));
    let scale = Rational::new(den, num);
    v.map(|c| c.scale(&scale))
}

/// The polynomial coordinates and residual equations of a plan with one
/// free parameter on a line.
#[derive(Clone, Debug)]
pub struct ResidualSystem {
    plan: ConstraintPlan,
    coords: Vec<PolyVec>,
    equations: Vec<UniPoly>,
}

impl ResidualSystem {
    /// `None` unless the plan has exactly one free point, on a line.
    pub fn new(s: &IncidenceStructure, plan: &ConstraintPlan) -> Option<Self> {
        let free = plan.free();
        if free.len() != 1 || free[0].1.is_none() {
            return None;
        }
        let mut coords: Vec<Option<PolyVec>> = vec![None; s.n()];
        for (p, t) in plan.frame().iter().zip(plan.frame_coords()) {
            coords[*p] = Some(t.coords().clone().map(UniPoly::constant));
        }
        let get = |c: &Vec<Option<PolyVec>>, p: usize| c[p].clone().expect("plan order");
        let mut equations = Vec::new();
        for step in plan.steps() {
            let v = match &step.placement {
                Placement::OnLine(a, b) => {
                    let (a, b) = (get(&coords, *a), get(&coords, *b));
                    [0, 1, 2].map(|i| &a[i] + &(&UniPoly::x() * &b[i]))
                }
                Placement::Meet([(a, b), (c, d)]) => {
                    let l1 = cross(&get(&coords, *a), &get(&coords, *b));
                    let l2 = cross(&get(&coords, *c), &get(&coords, *d));
                    reduce_vec(cross(&l1, &l2))
                }
                Placement::Plane => unreachable!("checked above"),
            };
            for (e, f) in &step.extra {
                equations.push(det(&v, &get(&coords, *e), &get(&coords, *f)).primitive());
            }
            coords[step.point] = Some(v);
        }
        Some(Self {
            plan: plan.clone(),
            coords: coords.into_iter().map(Option::unwrap).collect(),
            equations,
        })
    }

    pub fn plan(&self) -> &ConstraintPlan {
        &self.plan
    }

    pub fn coords(&self) -> &[[UniPoly; 3]] {
        &self.coords
    }

    pub fn equations(&self) -> &[UniPoly] {
        &self.equations
    }

    /// Monic gcd of the residual equations (zero when there are none or all vanish).
    pub fn gcd(&self) -> UniPoly {
        self.equations.iter().fold(UniPoly::zero(), |g, e| g.gcd(e))
    }

    /// Coordinates at a rational parameter, if every point is defined there.
    pub fn at_rational(
        &self,
        s: &IncidenceStructure,
        t: &Rational,
    ) -> Option<Realization<Rational>> {
        let coords = self
            .coords
            .iter()
            .map(|v| ProjectivePoint::new(v[0].eval(t), v[1].eval(t), v[2].eval(t)).ok())
            .collect::<Option<Vec<_>>>()?;
        Realization::new(s.clone(), coords).ok()
    }

    /// Coordinates at `t` in a quadratic field.
    pub fn at_quadratic(
        &self,
        s: &IncidenceStructure,
        t: &QuadraticNumber,
    ) -> Option<Realization<QuadraticNumber>> {
        let eval = |p: &UniPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(t.zero_like(), |acc, k| acc * t.clone() + t.rational_like(k))
        };
        let coords = self
            .coords
            .iter()
            .map(|v| ProjectivePoint::new(eval(&v[0]), eval(&v[1]), eval(&v[2])).ok())
            .collect::<Option<Vec<_>>>()?;
        Realization::new(s.clone(), coords).ok()
    }
}

/// Proof that a structure has no rational realization.
#[derive(Clone, Debug)]
pub struct NonRationalCertificate {
    pub system: ResidualSystem,
    /// Gcd of the residual equations; nonzero.
    pub gcd: UniPoly,
    /// Its rational roots, none of which yields a realization.
    pub rejected_roots: Vec<Rational>,
}

/// Outcome of trying to certify a structure.
#[derive(Clone, Debug)]
pub enum Certification {
    NotRational(NonRationalCertificate),
    /// A rational root produced a rational realization.
    Rational(Realization<Rational>),
    /// No one-parameter plan gave a usable gcd.
    Inconclusive,
}

/// Check one residual system; `None` if its gcd vanishes or cannot be factored.
pub fn certify_with(s: &IncidenceStructure, system: ResidualSystem) -> Option<Certification> {
    let gcd = system.gcd();
    if gcd.is_zero() {
        return None;
    }
    let roots = gcd.rational_roots()?;
    for t in &roots {
        if let Some(r) = system.at_rational(s, t) {
            if verify_realization(&r) {
                return Some(Certification::Rational(r));
            }
        }
    }
    Some(Certification::NotRational(NonRationalCertificate {
        system,
        gcd,
        rejected_roots: roots,
    }))
}

/// Try every one-parameter plan until one settles the question.
pub fn certify_not_rational(s: &IncidenceStructure) -> Certification {
    let mut out = Certification::Inconclusive;
    for_each_plan(s, 1, |plan| {
        let Some(system) = ResidualSystem::new(s, plan) else {
            return ControlFlow::Continue(1);
        };
        match certify_with(s, system) {
            Some(c) => {
                out = c;
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(1),
        }
    });
    out
}

/// Roots of an irreducible rational quadratic, as elements of `Q(sqrt d)`.
pub fn quadratic_roots(q: &UniPoly) -> Option<(BigInt, [QuadraticNumber; 2])> {
    if q.degree() != Some(2) {
        return None;
    }
    let c = q.monic();
    let (p, r) = (&c.coeffs()[1], &c.coeffs()[0]);
    // x = -p/2 +- sqrt(p^2/4 - r)
    let disc = p * p / Rational::from_integer(4.into()) - r;
    if !disc.is_positive() {
        return None;
    }
    let (k, d) = squarefree_split(&disc);
    if d.is_one() {
        return None;
    }
    let half = -p / Rational::from_integer(2.into());
    let plus = QuadraticNumber::new(d.clone(), half.clone(), k.clone()).ok()?;
    let minus = QuadraticNumber::new(d.clone(), half, -k).ok()?;
    Some((d, [plus, minus]))
}

/// A realization over `Q(sqrt d)` from a plan whose residual gcd has an
/// irreducible quadratic factor `q`.
pub fn quadratic_witness_from(
    s: &IncidenceStructure,
    system: &ResidualSystem,
    q: &UniPoly,
) -> Option<(BigInt, Realization<QuadraticNumber>)> {
    if !q.divides(&system.gcd()) {
        return None;
    }
    let (d, roots) = quadratic_roots(q)?;
    roots.into_iter().find_map(|t| {
        let r = system.at_quadratic(s, &t)?;
        verify_realization(&r).then(|| (d.clone(), r))
    })
}

/// Search one-parameter plans for one whose gcd is divisible by `q` and
/// that yields a verified realization at a root of `q`.
pub fn find_quadratic_witness(
    s: &IncidenceStructure,
    q: &UniPoly,
) -> Option<(ConstraintPlan, BigInt, Realization<QuadraticNumber>)> {
    let mut out = None;
    for_each_plan(s, 1, |plan| {
        if let Some(system) = ResidualSystem::new(s, plan) {
            if let Some((d, r)) = quadratic_witness_from(s, &system, q) {
                out = Some((plan.clone(), d, r));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(1)
    });
    out
}
