//! Property tests over random inputs.

mod common;

use num::BigInt;
use projconf::constructions::curve::{
    closed_under_negation, curve_rational_points, EllipticCurveEquation,
};
use projconf::constructions::elkies::{elkies_realize, Branch};
use projconf::constructions::witnesses::quadratic_witness;
use projconf::engine::{solve, SolveOutcome};
use projconf::field::{rat, Field, QuadraticNumber, Rational};
use projconf::incidence::{
    canonical_form, extend, format_real, maximal_collinear_sets, parse_inc, parse_real, reduce,
    verify_realization, AnyRealization,
};
use projconf::projective::{collinear, frame_map, FrameKind};
use projconf::{ProjectiveMap, ProjectivePoint};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn point() -> impl Strategy<Value = ProjectivePoint<Rational>> {
    (small_rat(), small_rat(), small_rat())
        .prop_filter_map("nonzero", |(x, y, w)| ProjectivePoint::new(x, y, w).ok())
}

fn quad() -> impl Strategy<Value = QuadraticNumber> {
    (small_rat(), small_rat())
        .prop_map(|(a, b)| QuadraticNumber::new(BigInt::from(5), a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn inc_round_trip(seed in any::<u64>(), n in 0usize..=9) {
        let s = common::random_structure(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let printed = s.to_string();
        prop_assert_eq!(parse_inc(&printed).unwrap(), s);
        prop_assert_eq!(parse_inc(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>(), n in 3usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = common::random_structure(&mut rng, n);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        prop_assert_eq!(canonical_form(&s), canonical_form(&s.relabel(&perm)));
    }

    #[test]
    fn reduce_solve_extend(seed in any::<u64>(), n in 3usize..=8) {
        let s = common::random_structure(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let (red, trace) = reduce(&s);
        prop_assert!(red.is_reduced());
        prop_assert_eq!(trace.replay(&s), red.clone());
        if let SolveOutcome::RationalWitness(w) = solve(&red, 64) {
            let r = extend(&w, &trace).unwrap();
            prop_assert_eq!(maximal_collinear_sets(r.coords()), s.lines().to_vec());
            let any = AnyRealization::from(r);
            let printed = format_real(&any);
            prop_assert_eq!(parse_real(&printed).unwrap(), any);
        }
    }

    #[test]
    fn maps_preserve_collinearity(p in point(), q in point(), t in small_rat(), u in small_rat()) {
        // r = t p + u q is on the line pq
        let c = |i: usize| &t * &p.coords()[i] + &u * &q.coords()[i];
        prop_assume!(p != q);
        let Ok(r) = ProjectivePoint::new(c(0), c(1), c(2)) else { return Ok(()) };
        let m = ProjectiveMap::new([[rat(2, 1), rat(1, 3), rat(0, 1)], [rat(-1, 1), rat(1, 1), rat(5, 2)], [rat(1, 1), rat(0, 1), rat(1, 1)]]).unwrap();
        prop_assert!(collinear(&m.apply(&p), &m.apply(&q), &m.apply(&r)).unwrap());
        prop_assert_eq!(m.inverse().apply(&m.apply(&p)), p);
    }

    #[test]
    fn frame_maps_hit_targets(a in point(), b in point(), c in point(), d in point()) {
        if let Ok(m) = frame_map(&a, &b, &c, &d) {
            let got = [&a, &b, &c, &d].map(|p| m.apply(p));
            let general = FrameKind::General.targets();
            let coll = FrameKind::Collinear.targets();
            prop_assert!(got == general || got == coll);
        }
    }

    #[test]
    fn quadratic_field_laws(x in quad(), y in quad()) {
        prop_assert_eq!((x.clone() * y.clone()).conjugate(), x.conjugate() * y.conjugate());
        prop_assert_eq!((x.clone() * y.clone()).norm(), x.norm() * y.norm());
        if !y.vanishes() {
            prop_assert_eq!(x.clone() * y.clone() / y.clone(), x);
        }
    }

    #[test]
    fn elkies_conjugates(p in -9i64..=9, q in 1i64..=9) {
        let a = rat(p, q);
        if let Ok(r) = elkies_realize(&a, Branch::Plus) {
            prop_assert!(verify_realization(&r.map_field(QuadraticNumber::conjugate).unwrap()));
            // conjugation swaps the two branches
            let minus = elkies_realize(&a, Branch::Minus).unwrap();
            prop_assert_eq!(r.map_field(QuadraticNumber::conjugate).unwrap(), minus);
        }
    }
}

#[test]
fn stored_witness_conjugates() {
    for name in ["perles", "maclane"] {
        let r = quadratic_witness(name).unwrap();
        assert!(verify_realization(
            &r.map_field(QuadraticNumber::conjugate).unwrap()
        ));
    }
}

#[test]
fn curve_search_stable_under_larger_bound() {
    let c = EllipticCurveEquation::elkies();
    let small = curve_rational_points(&c, 100);
    assert!(closed_under_negation(&small));
    assert_eq!(small, curve_rational_points(&c, 1000));
}
