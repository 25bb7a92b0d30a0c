//! Exhaustive generation of reduced structures on at most 8 points, the
//! case split of the n <= 8 argument, and the ordinary-line audit.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::field::Rational;
use crate::incidence::canonical::canonical_form;
use crate::incidence::realization::{maximal_collinear_sets, Realization};
use crate::incidence::structure::{IncidenceStructure, PointId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    N8NoQuad8T,
    N8NoQuad7T,
    N8NoQuadLe6T,
    N8Quad,
    N7,
    NLe6,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 6] = [
        CaseLabel::N8NoQuad8T,
        CaseLabel::N8NoQuad7T,
        CaseLabel::N8NoQuadLe6T,
        CaseLabel::N8Quad,
        CaseLabel::N7,
        CaseLabel::NLe6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::N8NoQuad8T => "N8_NoQuad_8T",
            CaseLabel::N8NoQuad7T => "N8_NoQuad_7T",
            CaseLabel::N8NoQuadLe6T => "N8_NoQuad_le6T",
            CaseLabel::N8Quad => "N8_Quad",
            CaseLabel::N7 => "N7",
            CaseLabel::NLe6 => "N_le6",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("structure is not reduced")]
    UnclassifiableInput,
    #[error("enumeration covers 3 <= n <= 8, got {0}")]
    OutOfRange(usize),
    #[error("all points are collinear")]
    AllCollinear,
}

/// Case of a reduced structure, from `n`, the largest line and the triple count.
pub fn classify(s: &IncidenceStructure) -> Result<CaseLabel, EnumerationError> {
    if !s.is_reduced() || s.n() > 8 {
        return Err(EnumerationError::UnclassifiableInput);
    }
    Ok(match (s.n(), s.max_line_size(), s.triple_count()) {
        (8, m, _) if m >= 4 => CaseLabel::N8Quad,
        (8, _, 8) => CaseLabel::N8NoQuad8T,
        (8, _, 7) => CaseLabel::N8NoQuad7T,
        (8, _, t) if t <= 6 => {
            // with t <= 6 triples at most 3t - 16 <= 2 points have degree 3,
            // too few to give every line two of them
            let rich = s.degrees().iter().filter(|&&d| d >= 3).count();
            assert!(
                rich <= 2
                    && s.lines()
                        .iter()
                        .any(|l| l.iter().filter(|&&p| s.degrees()[p] >= 3).count() < 2)
            );
            CaseLabel::N8NoQuadLe6T
        }
        (8, _, _) => return Err(EnumerationError::UnclassifiableInput),
        (7, _, _) => CaseLabel::N7,
        _ => CaseLabel::NLe6,
    })
}

/// Subsets of `0..n` of size at least 3, as sorted vectors.
fn candidate_lines(n: usize) -> Vec<Vec<PointId>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() >= 3 {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out.sort_by(|a: &Vec<PointId>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn covered_pairs(s: &IncidenceStructure) -> Vec<bool> {
    let n = s.n();
    let mut c = vec![false; n * n];
    for l in s.lines() {
        for &p in l {
            for &q in l {
                c[p * n + q] = true;
            }
        }
    }
    c
}

fn compatible(n: usize, covered: &[bool], l: &[PointId]) -> bool {
    l.iter()
        .enumerate()
        .all(|(i, &p)| l[i + 1..].iter().all(|&q| !covered[p * n + q]))
}

/// Every partial linear space on `n` points, up to isomorphism, grown one
/// line at a time with canonical deduplication per level.
pub fn enumerate_all(n: usize) -> Vec<IncidenceStructure> {
    let cands = candidate_lines(n);
    let mut level: Vec<IncidenceStructure> = vec![IncidenceStructure::empty(n)];
    let mut all = level.clone();
    while !level.is_empty() {
        let next: HashSet<IncidenceStructure> = level
            .par_iter()
            .flat_map_iter(|s| {
                let covered = covered_pairs(s);
                cands
                    .iter()
                    .filter(|l| compatible(n, &covered, l))
                    .map(|l| {
                        let mut lines = s.lines().to_vec();
                        lines.push(l.clone());
                        canonical_form(&IncidenceStructure::from_sorted_unchecked(n, lines))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut next: Vec<IncidenceStructure> = next.into_iter().collect();
        next.sort();
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort();
    all
}

/// All reduced structures on `n` points up to isomorphism, in canonical order.
///
/// Panics (with the offending structure) if a reduced structure has a line
/// of five or more points, or if `n = 8` without a quadruple and some point
/// has degree at least 4.
pub fn enumerate_reduced(n: usize) -> Result<Vec<IncidenceStructure>, EnumerationError> {
    if !(3..=8).contains(&n) {
        return Err(EnumerationError::OutOfRange(n));
    }
    let out: Vec<IncidenceStructure> = enumerate_all(n)
        .into_iter()
        .filter(IncidenceStructure::is_reduced)
        .collect();
    for s in &out {
        assert!(
            s.max_line_size() <= 4,
            "reduced structure with a line of 5 or more points:\n{s}"
        );
        if n == 8 && s.max_line_size() == 3 {
            assert!(
                s.degrees().iter().all(|&d| d <= 3),
                "degree-4 point without a quadruple:\n{s}"
            );
        }
    }
    Ok(out)
}

/// Marks or clears the pairs covered by a line.
type Toggle<'a> = dyn Fn(&mut Vec<bool>, &[PointId], bool) + 'a;

/// Independent oracle: depth-first over labeled line sets (each line larger
/// in candidate order than the last), canonicalizing every reduced leaf.
/// `fixed` lines are forced in first. Practical for n <= 7, or n = 8 with a
/// fixed line.
pub fn naive_reduced(n: usize, fixed: &[Vec<PointId>]) -> BTreeSet<IncidenceStructure> {
    let cands = candidate_lines(n);
    let mut out = BTreeSet::new();
    let mut covered = vec![false; n * n];
    let mut lines: Vec<Vec<PointId>> = Vec::new();
    let toggle = |covered: &mut Vec<bool>, l: &[PointId], v: bool| {
        for &p in l {
            for &q in l {
                if p != q {
                    covered[p * n + q] = v;
                }
            }
        }
    };
    for l in fixed {
        toggle(&mut covered, l, true);
        lines.push(l.clone());
    }
    fn go(
        n: usize,
        cands: &[Vec<PointId>],
        start: usize,
        covered: &mut Vec<bool>,
        lines: &mut Vec<Vec<PointId>>,
        out: &mut BTreeSet<IncidenceStructure>,
        toggle: &Toggle<'_>,
    ) {
        let s = IncidenceStructure::from_sorted_unchecked(n, lines.clone());
        if s.is_reduced() {
            out.insert(canonical_form(&s));
        }
        for i in start..cands.len() {
            let l = &cands[i];
            if lines.contains(l) || !compatible(n, covered, l) {
                continue;
            }
            toggle(covered, l, true);
            lines.push(l.clone());
            go(n, cands, i + 1, covered, lines, out, toggle);
            lines.pop();
            toggle(covered, l, false);
        }
    }
    go(n, &cands, 0, &mut covered, &mut lines, &mut out, &toggle);
    out
}

/// Counts per case, in [`CaseLabel::ALL`] order.
pub fn case_counts(structures: &[IncidenceStructure]) -> Vec<(CaseLabel, usize)> {
    CaseLabel::ALL
        .iter()
        .map(|&c| {
            (
                c,
                structures
                    .iter()
                    .filter(|s| classify(s).ok() == Some(c))
                    .count(),
            )
        })
        .collect()
}

/// `.inc` blocks separated by blank lines, then the summary line.
pub fn census_text(n: usize, structures: &[IncidenceStructure]) -> String {
    let mut out = String::new();
    for s in structures {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out.push_str(&census_summary(n, structures));
    out.push('\n');
    out
}

pub fn census_summary(n: usize, structures: &[IncidenceStructure]) -> String {
    let cases: Vec<String> = case_counts(structures)
        .iter()
        .map(|(c, k)| format!("{c}={k}"))
        .collect();
    format!("census n={n} cases: {}", cases.join(" "))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrdinaryLineAudit {
    pub ordinary: usize,
    pub bound: usize,
    pub pass: bool,
}

/// Ordinary lines (exactly two points) spanned by a rational point set,
/// against the bound `ceil(3n/7)`.
pub fn ordinary_line_audit(
    r: &Realization<Rational>,
) -> Result<OrdinaryLineAudit, EnumerationError> {
    let pts = r.coords();
    let n = pts.len();
    let sets = maximal_collinear_sets(pts);
    if n < 3 || sets.iter().any(|s| s.len() == n) {
        return Err(EnumerationError::AllCollinear);
    }
    let rich_pairs: usize = sets.iter().map(|s| s.len() * (s.len() - 1) / 2).sum();
    let ordinary = n * (n - 1) / 2 - rich_pairs;
    let bound = (3 * n).div_ceil(7);
    Ok(OrdinaryLineAudit {
        ordinary,
        bound,
        pass: ordinary >= bound,
    })
}
