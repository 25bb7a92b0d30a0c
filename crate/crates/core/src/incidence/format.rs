//! `.inc` and `.real` text formats.
//!
//! ```text
//! points 7
//! line 0 1 3
//! ```
//!
//! A `.real` file starts with a field header, repeats the `.inc` body, and
//! then lists one `point <id> <x> <y> <w>` record per point:
//!
//! ```text
//! field Q(sqrt 5)
//! points 3
//! point 0 0 0 1
//! point 1 1/2+1/2*sqrt(5) 1 1
//! point 2 1 0 0
//! ```
//!
//! `#` starts a comment. Printing always produces the canonical layout, so
//! parse followed by print is the identity on printed files.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num::BigInt;

use crate::field::{format_rational, parse_quadratic, parse_rational, QuadraticNumber, Rational};
use crate::incidence::realization::{verify_realization, Realization};
use crate::incidence::structure::{IncidenceStructure, StructureError};
use crate::projective::ProjectivePoint;

/// A parse failure at a 1-based line of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn parse_id(line: usize, w: &str) -> Result<usize, FormatError> {
    if w.is_empty() || !w.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, format!("expected a point id, found `{w}`")));
    }
    usize::from_str(w).map_err(|_| err(line, format!("point id `{w}` too large")))
}

/// Largest `points` header accepted; pair tables are quadratic in it.
pub const MAX_POINTS: usize = 4096;

/// Incremental builder for the `.inc` part, shared by both formats.
#[derive(Default)]
struct IncBuilder {
    n: Option<(usize, usize)>,
    lines: Vec<Vec<usize>>,
    positions: Vec<usize>,
}

impl IncBuilder {
    /// Returns `Ok(false)` if the record is not part of the `.inc` grammar.
    fn feed(&mut self, line: usize, words: &[&str]) -> Result<bool, FormatError> {
        match words[0] {
            "points" => {
                if self.n.is_some() {
                    return Err(err(line, "duplicate `points` header"));
                }
                if words.len() != 2 {
                    return Err(err(line, "expected `points <n>`"));
                }
                let n = parse_id(line, words[1])?;
                if n > MAX_POINTS {
                    return Err(err(
                        line,
                        format!("at most {MAX_POINTS} points supported, got {n}"),
                    ));
                }
                self.n = Some((n, line));
                Ok(true)
            }
            "line" => {
                if self.n.is_none() {
                    return Err(err(line, "`line` before `points` header"));
                }
                let ids = words[1..]
                    .iter()
                    .map(|w| parse_id(line, w))
                    .collect::<Result<Vec<_>, _>>()?;
                if ids.windows(2).any(|w| w[0] > w[1]) {
                    return Err(err(line, "point ids must be ascending"));
                }
                self.lines.push(ids);
                self.positions.push(line);
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    fn finish(self, last_line: usize) -> Result<IncidenceStructure, FormatError> {
        let Some((n, _)) = self.n else {
            return Err(err(last_line.max(1), "missing `points <n>` header"));
        };
        let positions = self.positions;
        let lines = self.lines;
        IncidenceStructure::new(n, lines.clone()).map_err(|e| {
            let at = match &e {
                StructureError::LineTooSmall { line, .. }
                | StructureError::PointOutOfRange { line, .. }
                | StructureError::RepeatedPoint { line, .. } => positions[*line],
                StructureError::PairCoveredTwice(p, q) => {
                    let second = lines
                        .iter()
                        .enumerate()
                        .filter(|(_, l)| l.contains(p) && l.contains(q))
                        .nth(1);
                    second.map_or(last_line, |(i, _)| positions[i])
                }
                StructureError::NoSuchPoint { .. } => last_line,
            };
            err(at, e.to_string())
        })
    }
}

pub fn parse_inc(text: &str) -> Result<IncidenceStructure, FormatError> {
    let mut b = IncBuilder::default();
    let mut last = 0;
    for (line, words) in content_lines(text) {
        last = line;
        if !b.feed(line, &words)? {
            return Err(err(line, format!("unexpected record `{}`", words[0])));
        }
    }
    b.finish(last)
}

pub fn format_inc(s: &IncidenceStructure) -> String {
    s.to_string()
}

/// A realization over `Q` or over one fixed `Q(sqrt d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyRealization {
    Rational(Realization<Rational>),
    Quadratic {
        d: BigInt,
        realization: Realization<QuadraticNumber>,
    },
}

impl AnyRealization {
    pub fn structure(&self) -> &IncidenceStructure {
        match self {
            AnyRealization::Rational(r) => r.structure(),
            AnyRealization::Quadratic { realization, .. } => realization.structure(),
        }
    }

    pub fn verify(&self) -> bool {
        match self {
            AnyRealization::Rational(r) => verify_realization(r),
            AnyRealization::Quadratic { realization, .. } => verify_realization(realization),
        }
    }

    /// Approximate affine-or-ideal coordinates for drawing.
    pub fn approx_coords(&self) -> Vec<[f64; 3]> {
        use crate::field::Field;
        fn go<F: Field>(r: &Realization<F>) -> Vec<[f64; 3]> {
            r.coords()
                .iter()
                .map(|p| [p.x().to_f64(), p.y().to_f64(), p.w().to_f64()])
                .collect()
        }
        match self {
            AnyRealization::Rational(r) => go(r),
            AnyRealization::Quadratic { realization, .. } => go(realization),
        }
    }
}

impl From<Realization<Rational>> for AnyRealization {
    fn from(r: Realization<Rational>) -> Self {
        AnyRealization::Rational(r)
    }
}

impl fmt::Display for AnyRealization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyRealization::Rational(r) => {
                writeln!(f, "field Q")?;
                write!(f, "{}", r.structure())?;
                for (i, p) in r.coords().iter().enumerate() {
                    writeln!(
                        f,
                        "point {i} {} {} {}",
                        format_rational(p.x()),
                        format_rational(p.y()),
                        format_rational(p.w())
                    )?;
                }
            }
            AnyRealization::Quadratic { d, realization } => {
                writeln!(f, "field Q(sqrt {d})")?;
                write!(f, "{}", realization.structure())?;
                for (i, p) in realization.coords().iter().enumerate() {
                    writeln!(f, "point {i} {} {} {}", p.x(), p.y(), p.w())?;
                }
            }
        }
        Ok(())
    }
}

pub fn format_real(r: &AnyRealization) -> String {
    let mut s = String::new();
    write!(s, "{r}").expect("writing to a String");
    s
}

enum Header {
    Q,
    Sqrt(BigInt),
}

fn parse_header(line: usize, words: &[&str]) -> Result<Header, FormatError> {
    let joined = words[1..].join(" ");
    if joined == "Q" {
        return Ok(Header::Q);
    }
    let d = joined
        .strip_prefix("Q(sqrt ")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|d| BigInt::from_str(d.trim()).ok())
        .ok_or_else(|| err(line, format!("unknown field `{joined}`")))?;
    QuadraticNumber::new(
        d.clone(),
        Rational::from_integer(0.into()),
        Rational::from_integer(0.into()),
    )
    .map_err(|e| err(line, e.to_string()))?;
    Ok(Header::Sqrt(d))
}

pub fn parse_real(text: &str) -> Result<AnyRealization, FormatError> {
    let mut header = None;
    let mut inc = IncBuilder::default();
    let mut records: Vec<(usize, usize, [String; 3])> = Vec::new();
    let mut last = 0;
    for (line, words) in content_lines(text) {
        last = line;
        if words[0] == "field" {
            if header.is_some() {
                return Err(err(line, "duplicate `field` header"));
            }
            header = Some(parse_header(line, &words)?);
            continue;
        }
        if header.is_none() {
            return Err(err(line, "expected `field` header first"));
        }
        if inc.feed(line, &words)? {
            continue;
        }
        if words[0] != "point" {
            return Err(err(line, format!("unexpected record `{}`", words[0])));
        }
        if words.len() != 5 {
            return Err(err(line, "expected `point <id> <x> <y> <w>`"));
        }
        let id = parse_id(line, words[1])?;
        records.push((
            line,
            id,
            [
                words[2].to_string(),
                words[3].to_string(),
                words[4].to_string(),
            ],
        ));
    }
    let header = header.ok_or_else(|| err(last.max(1), "missing `field` header"))?;
    let structure = inc.finish(last)?;
    let n = structure.n();
    let mut slots: Vec<Option<(usize, [String; 3])>> = vec![None; n];
    for (line, id, c) in records {
        if id >= n {
            return Err(err(line, format!("point {id} out of range 0..{n}")));
        }
        if slots[id].is_some() {
            return Err(err(line, format!("point {id} given twice")));
        }
        slots[id] = Some((line, c));
    }
    if let Some(missing) = slots.iter().position(Option::is_none) {
        return Err(err(
            last.max(1),
            format!("no coordinates for point {missing}"),
        ));
    }
    let slots: Vec<(usize, [String; 3])> = slots.into_iter().map(Option::unwrap).collect();
    match header {
        Header::Q => {
            let mut coords = Vec::with_capacity(n);
            for (line, c) in &slots {
                let v = c
                    .iter()
                    .map(|s| parse_rational(s).map_err(|e| err(*line, e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                let [x, y, w]: [Rational; 3] = v.try_into().expect("three coordinates");
                coords.push(ProjectivePoint::new(x, y, w).map_err(|e| err(*line, e.to_string()))?);
            }
            Ok(AnyRealization::Rational(
                Realization::new(structure, coords).expect("shape checked"),
            ))
        }
        Header::Sqrt(d) => {
            let mut coords = Vec::with_capacity(n);
            for (line, c) in &slots {
                let mut v = Vec::with_capacity(3);
                for s in c {
                    let (a, b, dd) = parse_quadratic(s).map_err(|e| err(*line, e.to_string()))?;
                    if dd.as_ref().is_some_and(|dd| *dd != d) {
                        return Err(err(*line, format!("`{s}` is not in Q(sqrt {d})")));
                    }
                    v.push(QuadraticNumber::new(d.clone(), a, b).expect("header validated d"));
                }
                let [x, y, w]: [QuadraticNumber; 3] = v.try_into().expect("three coordinates");
                coords.push(ProjectivePoint::new(x, y, w).map_err(|e| err(*line, e.to_string()))?);
            }
            Ok(AnyRealization::Quadratic {
                d,
                realization: Realization::new(structure, coords).expect("shape checked"),
            })
        }
    }
}
