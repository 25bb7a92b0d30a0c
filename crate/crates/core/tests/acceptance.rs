//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num::BigInt;
use projconf::applications::{
    build_grid, cube_root_ceil, find_subconfiguration, incidence_count, st_bound_check,
};
use projconf::cli::cmd_curve_search;
use projconf::constructions::elkies::{
    elkies_b_quadratic, elkies_point6_first, elkies_point6_second, elkies_radicand, elkies_realize,
    rationality_obstruction, Branch,
};
use projconf::constructions::named::{named_structure, square7_witness, square8_witness};
use projconf::constructions::witnesses::{forced_polynomial, quadratic_witness};
use projconf::engine::residual::{find_quadratic_witness, ResidualSystem};
use projconf::engine::{count_identity_check, rich_triple_count, solve, SolveOutcome};
use projconf::enumeration::{enumerate_reduced, ordinary_line_audit};
use projconf::field::{int, rat, rational_sqrt_exact, Rational};
use projconf::incidence::{
    extend, format_real, maximal_collinear_sets, parse_inc, parse_real, reduce, verify_realization,
    AnyRealization,
};
use projconf::poly::{BivariatePolynomial as P, BivariateRationalFunction as F, UniPoly};
use projconf::{ProjectivePoint, Realization};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Rational witnesses, and the classes known not to be real.
type Census = (Vec<Realization<Rational>>, Vec<(usize, &'static str)>);

fn census_witnesses() -> Result<Census, String> {
    let mut witnesses = Vec::new();
    let mut not_real = Vec::new();
    for n in 4..=8 {
        for s in enumerate_reduced(n).map_err(|e| e.to_string())? {
            match solve(&s, 64) {
                SolveOutcome::RationalWitness(w) => {
                    ensure(verify_realization(&w), format!("inexact witness for\n{s}"))?;
                    witnesses.push(w);
                }
                SolveOutcome::KnownNotReal(name) => not_real.push((n, name)),
                SolveOutcome::NoWitnessFound(_) => {
                    return Err(format!("no witness at height 64 for\n{s}"))
                }
            }
        }
    }
    Ok((witnesses, not_real))
}

fn criterion_1() -> Result<String, String> {
    let (w, not_real) = census_witnesses()?;
    ensure(
        not_real == vec![(7, "Fano"), (8, "8_3")],
        format!("not-real classes {not_real:?}"),
    )?;
    Ok(format!(
        "{} reduced structures on 4..8 points realized, not real: Fano (n=7), 8_3 (n=8)",
        w.len()
    ))
}

fn criterion_2() -> Result<String, String> {
    ensure(count_identity_check(8, 7) == Ok(5), "a(8,7)")?;
    ensure(count_identity_check(7, 7) == Ok(7), "a(7,7)")?;
    ensure(rich_triple_count(5, 7) == Ok(1), "x(5,7)")?;
    ensure((3 * 8usize).div_ceil(7) == 4, "ordinary bound at n=8")?;
    let (w, _) = census_witnesses()?;
    for r in &w {
        let audit = ordinary_line_audit(r).map_err(|e| e.to_string())?;
        ensure(
            audit.pass,
            format!(
                "ordinary lines {} < {} for\n{}",
                audit.ordinary,
                audit.bound,
                r.structure()
            ),
        )?;
    }
    Ok(format!(
        "a(8,7)=5 a(7,7)=7 x(5,7)=1 bound(8)=4; {} witnesses pass the ordinary-line audit",
        w.len()
    ))
}

fn criterion_3() -> Result<String, String> {
    let s7 = square7_witness();
    let needed = [
        (rat(1, 2), rat(1, 2), int(1)),
        (int(1), int(0), int(0)),
        (int(0), int(1), int(0)),
    ];
    for (x, y, w) in needed {
        let p = ProjectivePoint::new(x, y, w).unwrap();
        ensure(
            s7.coords().contains(&p),
            format!("square7 witness lacks {p}"),
        )?;
    }
    ensure(verify_realization(&s7), "square7 witness")?;
    ensure(verify_realization(&square8_witness()), "square8 witness")?;
    Ok("7-point and 8-point square witnesses verify exactly".into())
}

fn criterion_4() -> Result<String, String> {
    let f = |num: &[(i64, u32, u32)], den: &[(i64, u32, u32)]| {
        F::new(P::from_terms(num), P::from_terms(den)).unwrap()
    };
    let first = f(
        &[(-1, 2, 0), (3, 1, 1), (1, 1, 0), (1, 0, 1)],
        &[(1, 2, 0), (-1, 1, 1), (1, 1, 0), (1, 0, 1), (2, 0, 0)],
    );
    let second = f(
        &[(-1, 1, 1), (-1, 1, 0), (1, 0, 1), (1, 0, 0)],
        &[(1, 1, 1), (-3, 1, 0), (3, 0, 1), (-1, 0, 0)],
    );
    let (x, y) = elkies_point6_first();
    ensure(
        x == first && y == first,
        format!("point (6), first way: {x}"),
    )?;
    ensure(elkies_point6_second() == second, "point (6), second way")?;
    let (q2, q1, q0) = elkies_b_quadratic().map_err(|e| e.to_string())?;
    ensure(q2 == UniPoly::from_ints(&[1, 6, 1]), format!("q2 = {q2}"))?;
    ensure(q1 == UniPoly::from_ints(&[-2, 0, -6]), format!("q1 = {q1}"))?;
    let s = UniPoly::from_ints(&[1, 0, 3]);
    let ap1 = UniPoly::from_ints(&[1, 1]);
    let top = &(&s * &s) - &(&UniPoly::constant(int(2)) * &(&(&ap1 * &ap1) * &elkies_radicand()));
    let (quo, rem) = top.div_rem(&q2);
    ensure(rem.is_zero() && quo == q0, format!("q0 = {q0}"))?;
    Ok(format!(
        "point (6) both ways, q2 = {q2}, q1 = {q1}, q0 = {q0}, discriminant 8(a+1)^2(-a^3+a^2+a+1)"
    ))
}

fn criterion_5() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 50 {
        let a = rat(rng.gen_range(-20..=20), rng.gen_range(1..=20));
        let two_r = int(2) * elkies_radicand().eval(&a);
        let admissible =
            a != int(1) && a != int(-1) && two_r > int(0) && rational_sqrt_exact(&two_r).is_none();
        if !admissible {
            continue;
        }
        let branch = if done % 2 == 0 {
            Branch::Plus
        } else {
            Branch::Minus
        };
        let r = elkies_realize(&a, branch).map_err(|e| e.to_string())?;
        ensure(verify_realization(&r), format!("a = {a}"))?;
        ensure(
            !rationality_obstruction(&a),
            format!("obstruction claimed at a = {a}"),
        )?;
        done += 1;
    }
    ensure(
        rationality_obstruction(&int(1)) && rationality_obstruction(&int(-1)),
        "a = +-1",
    )?;
    Ok("50 random admissible a realize over Q(sqrt d); obstruction only at a = +-1".into())
}

fn criterion_6() -> Result<String, String> {
    let out = cmd_curve_search(1000);
    let pts: Vec<&str> = out
        .stdout
        .lines()
        .filter(|l| !l.starts_with("curve"))
        .collect();
    ensure(
        out.code == 0 && pts == ["-1 -1", "-1 1", "1 -1", "1 1"],
        format!("points {pts:?}"),
    )?;
    Ok("bound 1000: exactly (+-1, +-1)".into())
}

fn criterion_7() -> Result<String, String> {
    for (name, d) in [("perles", 5), ("maclane", 2)] {
        let s = named_structure(name).unwrap();
        let r = quadratic_witness(name).unwrap();
        ensure(
            verify_realization(&r) && r.point(0).x().d() == &BigInt::from(d),
            format!("{name} witness"),
        )?;
        let q = forced_polynomial(name).unwrap();
        let (plan, _, _) =
            find_quadratic_witness(&s, &q).ok_or(format!("{name}: no plan divisible by {q}"))?;
        let sys = ResidualSystem::new(&s, &plan).unwrap();
        ensure(
            sys.equations().iter().all(|e| q.divides(e)),
            format!("{name}: {q} does not divide residuals"),
        )?;
        ensure(
            matches!(solve(&s, 64), SolveOutcome::NoWitnessFound(64)),
            format!("{name}: rational search"),
        )?;
    }
    Ok("perles over Q(sqrt 5), maclane over Q(sqrt 2); x^2-x-1 and x^2-2 divide the residuals; no rational witness at height 64".into())
}

fn criterion_8() -> Result<String, String> {
    let perles = named_structure("perles").unwrap();
    let maclane = named_structure("maclane").unwrap();
    ensure(incidence_count(&build_grid(9), 3, 9) == (8, 24), "3x3 grid")?;
    for m in 3..=30usize {
        let n = m * m;
        let g = build_grid(n);
        let host = g.realization();
        ensure(
            find_subconfiguration(&host, &perles).is_none(),
            format!("perles in {m}x{m}"),
        )?;
        ensure(
            find_subconfiguration(&host, &maclane).is_none(),
            format!("maclane in {m}x{m}"),
        )?;
        let (_, inc) = incidence_count(&g, cube_root_ceil(n as u64) as usize, n);
        ensure(
            st_bound_check(n as u64, n as u64, inc as u64),
            format!("incidence bound at m={m}"),
        )?;
    }
    Ok(
        "grids 3..30: no perles, no maclane, incidences within 2.5 n^(4/3); 3x3 gives (8, 24)"
            .into(),
    )
}

fn criterion_9() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut realized, mut not_real) = (0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let s = common::random_structure(&mut rng, n);
        let (red, trace) = reduce(&s);
        match solve(&red, 64) {
            SolveOutcome::RationalWitness(w) => {
                let r = extend(&w, &trace).map_err(|e| format!("{e} for\n{s}"))?;
                ensure(
                    maximal_collinear_sets(r.coords()) == s.lines(),
                    format!("lines differ for\n{s}"),
                )?;
                realized += 1;
            }
            SolveOutcome::KnownNotReal(_) => not_real += 1,
            SolveOutcome::NoWitnessFound(_) => return Err(format!("no witness for\n{red}")),
        }
    }
    let mut files = 0;
    for name in [
        "fano",
        "eight_three",
        "square7",
        "square8",
        "perles",
        "maclane",
        "elkies",
    ] {
        let printed = named_structure(name).unwrap().to_string();
        ensure(
            parse_inc(&printed).unwrap().to_string() == printed,
            format!("{name}.inc"),
        )?;
        files += 1;
    }
    let reals: Vec<AnyRealization> = vec![
        square7_witness().into(),
        square8_witness().into(),
        parse_real(projconf::constructions::witnesses::PERLES_REAL).unwrap(),
        parse_real(projconf::constructions::witnesses::MACLANE_REAL).unwrap(),
    ];
    for r in &reals {
        let printed = format_real(r);
        ensure(
            format_real(&parse_real(&printed).unwrap()) == printed,
            "real round trip",
        )?;
        files += 1;
    }
    Ok(format!("200 random structures: {realized} realized with exact line sets, {not_real} not real; {files} files round-trip"))
}

fn main() -> ExitCode {
    let checks: [(&str, Check); 9] = [
        ("grunbaum census", criterion_1),
        ("counting identities", criterion_2),
        ("explicit witnesses", criterion_3),
        ("symbolic algebra", criterion_4),
        ("parametric realizations", criterion_5),
        ("curve search", criterion_6),
        ("quadratic witnesses", criterion_7),
        ("grid application", criterion_8),
        ("round trips", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
