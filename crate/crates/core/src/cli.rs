//! Subcommand bodies. Each takes file contents and flags and returns what
//! to print and the exit code, so the binary only does I/O.
//!
//! Exit codes: 0 success or witness, 1 bad input, 2 not realizable over
//! the reals, 3 no witness found within the height bound.

use std::fmt::Write as _;

use crate::applications::{
    build_grid, cube_root_ceil, find_subconfiguration, find_subconfiguration_exhaustive,
    incidence_count, st_bound_check,
};
use crate::constructions::curve::{curve_rational_points, EllipticCurveEquation};
use crate::constructions::elkies::{elkies_realize, Branch};
use crate::engine::solve::{solve, SolveOutcome};
use crate::enumeration::{census_text, enumerate_reduced};
use crate::field::{format_rational, Rational};
use crate::incidence::format::{parse_inc, parse_real, AnyRealization};
use crate::incidence::reduce::{extend, reduce, ReductionStep};
use crate::render::{render_svg, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_REAL: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CmdOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn cmd_realize(input: &str, height: u64) -> CmdOutput {
    let s = match parse_inc(input) {
        Ok(s) => s,
        Err(e) => return CmdOutput::fail(e),
    };
    let (reduced, trace) = reduce(&s);
    match solve(&reduced, height) {
        SolveOutcome::RationalWitness(w) => match extend(&w, &trace) {
            Ok(r) => CmdOutput::ok(AnyRealization::from(r).to_string()),
            Err(_) => CmdOutput::with_code(EXIT_UNKNOWN, format!("UNKNOWN height={height}\n")),
        },
        SolveOutcome::KnownNotReal(name) => {
            CmdOutput::with_code(EXIT_NOT_REAL, format!("NOT_REAL {name}\n"))
        }
        SolveOutcome::NoWitnessFound(h) => {
            CmdOutput::with_code(EXIT_UNKNOWN, format!("UNKNOWN height={h}\n"))
        }
    }
}

pub fn cmd_enumerate(n: usize) -> CmdOutput {
    match enumerate_reduced(n) {
        Ok(list) => CmdOutput::ok(census_text(n, &list)),
        Err(e) => CmdOutput::fail(e),
    }
}

fn parse_valid_real(input: &str) -> Result<AnyRealization, CmdOutput> {
    let r = parse_real(input).map_err(CmdOutput::fail)?;
    if !r.verify() {
        return Err(CmdOutput::fail(
            "coordinates do not realize the listed lines exactly",
        ));
    }
    Ok(r)
}

pub fn cmd_render(input: &str, spec: &RenderSpec) -> CmdOutput {
    let r = match parse_valid_real(input) {
        Ok(r) => r,
        Err(e) => return e,
    };
    match render_svg(&r, spec) {
        Ok(svg) => CmdOutput::ok(svg),
        Err(e) => CmdOutput::fail(e),
    }
}

pub fn cmd_verify(input: &str) -> CmdOutput {
    match parse_real(input) {
        Ok(r) if r.verify() => CmdOutput::ok("VALID\n".to_string()),
        Ok(_) => CmdOutput {
            code: EXIT_USAGE,
            stdout: "INVALID\n".to_string(),
            stderr: String::new(),
        },
        Err(e) => CmdOutput::fail(e),
    }
}

fn ids(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// The reduced structure, preceded by the removal steps as comments.
pub fn cmd_reduce(input: &str) -> CmdOutput {
    let s = match parse_inc(input) {
        Ok(s) => s,
        Err(e) => return CmdOutput::fail(e),
    };
    let (reduced, trace) = reduce(&s);
    let mut out = String::new();
    for step in trace.steps() {
        match step {
            ReductionStep::RemovePoint { point, .. } => writeln!(out, "# remove point {point}"),
            ReductionStep::RemoveLine { line, removed, .. } => {
                writeln!(
                    out,
                    "# remove line {} with points {}",
                    ids(line),
                    ids(removed)
                )
            }
        }
        .unwrap();
    }
    writeln!(out, "# kept {}", ids(trace.kept())).unwrap();
    out.push_str(&reduced.to_string());
    CmdOutput::ok(out)
}

pub fn cmd_elkies(a: &Rational, branch: Branch) -> CmdOutput {
    match elkies_realize(a, branch) {
        Ok(r) => {
            let d = r.point(0).x().d().clone();
            CmdOutput::ok(AnyRealization::Quadratic { d, realization: r }.to_string())
        }
        Err(e) => CmdOutput::fail(e),
    }
}

/// Points on `2y^2 = x^3 + x^2 - x + 1` with `x` of height at most `bound`.
pub fn cmd_curve_search(bound: u64) -> CmdOutput {
    if bound == 0 {
        return CmdOutput::fail("bound must be at least 1");
    }
    let pts = curve_rational_points(&EllipticCurveEquation::elkies(), bound);
    let mut out = String::new();
    for (x, y) in &pts {
        writeln!(out, "{} {}", format_rational(x), format_rational(y)).unwrap();
    }
    writeln!(
        out,
        "curve 2y^2=x^3+x^2-x+1 bound={bound} points={}",
        pts.len()
    )
    .unwrap();
    CmdOutput::ok(out)
}

/// Grid of `n` points, lines with at least `threshold` points (default
/// `ceil(n^(1/3))`), at most `n` lines.
pub fn cmd_grid(n: usize, threshold: Option<usize>) -> CmdOutput {
    if n < 4 {
        return CmdOutput::fail("n must be at least 4");
    }
    let t = threshold
        .unwrap_or(cube_root_ceil(n as u64) as usize)
        .max(2);
    let g = build_grid(n);
    let (lines, inc) = incidence_count(&g, t, n);
    let ok = st_bound_check(n as u64, n as u64, inc as u64);
    CmdOutput::ok(format!(
        "grid n={n} threshold={t} lines={lines} incidences={inc} st_ok={ok}\n"
    ))
}

pub fn cmd_find(host: &str, pattern: &str) -> CmdOutput {
    let host = match parse_valid_real(host) {
        Ok(h) => h,
        Err(e) => return e,
    };
    let pattern = match parse_inc(pattern) {
        Ok(p) => p,
        Err(e) => return CmdOutput::fail(e),
    };
    let found = match &host {
        AnyRealization::Rational(r) => find_subconfiguration(r, &pattern),
        AnyRealization::Quadratic { realization, .. } => {
            find_subconfiguration_exhaustive(realization, &pattern)
        }
    };
    match found {
        Some(e) => {
            let pairs: Vec<String> = e
                .iter()
                .enumerate()
                .map(|(p, c)| format!("{p}->{c}"))
                .collect();
            CmdOutput::ok(format!("embedding {}\n", pairs.join(" ")))
        }
        None => CmdOutput::ok("none\n".to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::{FANO_INC, SQUARE7_INC};

    #[test]
    fn realize_exit_codes() {
        let out = cmd_realize(SQUARE7_INC, 64);
        assert_eq!(out.code, EXIT_OK);
        assert!(parse_real(&out.stdout).unwrap().verify());
        assert_eq!(
            cmd_realize(FANO_INC, 64),
            CmdOutput::with_code(EXIT_NOT_REAL, "NOT_REAL Fano\n".into())
        );
        let dup = "points 4\nline 0 1 2\nline 0 1 3\n";
        let out = cmd_realize(dup, 64);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("line 3"), "{}", out.stderr);
    }

    #[test]
    fn grid_report() {
        assert_eq!(
            cmd_grid(9, Some(3)).stdout,
            "grid n=9 threshold=3 lines=8 incidences=24 st_ok=true\n"
        );
        assert_eq!(cmd_grid(3, None).code, EXIT_USAGE);
    }

    #[test]
    fn reduce_output_parses() {
        let out = cmd_reduce("points 4\nline 0 1 2\n");
        let s = parse_inc(&out.stdout).unwrap();
        assert_eq!(s.n(), 0);
    }

    #[test]
    fn enumerate_range() {
        assert_eq!(cmd_enumerate(9).code, EXIT_USAGE);
        assert_eq!(cmd_enumerate(3).stdout.lines().count(), 1);
    }
}
