//! Integer grids, incidence counts, and embedding search for forbidden
//! patterns.
//!
//! A rational host can only contain a pattern that has a rational
//! realization, so a pattern certified non-rational never embeds in a grid.

use num::integer::{Integer, Roots};
use num::BigInt;
use rayon::prelude::*;

use crate::engine::residual::{certify_not_rational, Certification};
use crate::field::{Field, Rational};
use crate::incidence::realization::Realization;
use crate::incidence::structure::{IncidenceStructure, PairTable, PointId};
use crate::projective::ProjectivePoint;

/// The `m x m` grid `{0..m}^2` and every line spanned by two of its points.
#[derive(Clone, Debug)]
pub struct GridArrangement {
    m: usize,
    points: Vec<ProjectivePoint<Rational>>,
    /// Point ids on each spanned line, in walking order.
    lines: Vec<Vec<PointId>>,
}

impl GridArrangement {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &[ProjectivePoint<Rational>] {
        &self.points
    }

    pub fn lines(&self) -> &[Vec<PointId>] {
        &self.lines
    }

    pub fn id(&self, x: usize, y: usize) -> PointId {
        y * self.m + x
    }

    /// Number of lines with at least `k` points.
    pub fn rich_lines(&self, k: usize) -> usize {
        self.lines.iter().filter(|l| l.len() >= k).count()
    }

    /// The grid as an exact realization; its lines are the spanned lines
    /// with three or more points.
    pub fn realization(&self) -> Realization<Rational> {
        let lines = self
            .lines
            .iter()
            .filter(|l| l.len() >= 3)
            .cloned()
            .collect();
        let s = IncidenceStructure::new(self.points.len(), lines)
            .expect("grid lines meet at most once");
        Realization::new(s, self.points.clone()).expect("one point per id")
    }
}

/// The `floor(sqrt n)`-sided grid with its spanned lines, found by walking
/// every primitive direction from each point that starts a run.
pub fn build_grid(n: usize) -> GridArrangement {
    let m = n.sqrt();
    let points = (0..m * m)
        .map(|i| ProjectivePoint::from_ints((i % m) as i64, (i / m) as i64, 1).expect("w = 1"))
        .collect();
    let side = m as i64;
    let inside = |x: i64, y: i64| (0..side).contains(&x) && (0..side).contains(&y);
    let mut dirs = Vec::new();
    for dx in 0..side {
        for dy in -(side - 1)..side {
            // one representative per direction: dx > 0, or (0, 1)
            if (dx == 0 && dy != 1) || dx.gcd(&dy) != 1 {
                continue;
            }
            dirs.push((dx, dy));
        }
    }
    let mut lines = Vec::new();
    for (dx, dy) in dirs {
        for y in 0..side {
            for x in 0..side {
                if inside(x - dx, y - dy) {
                    continue;
                }
                let run: Vec<PointId> = (0..)
                    .map(|k| (x + k * dx, y + k * dy))
                    .take_while(|&(a, b)| inside(a, b))
                    .map(|(a, b)| (b * side + a) as PointId)
                    .collect();
                if run.len() >= 2 {
                    lines.push(run);
                }
            }
        }
    }
    GridArrangement { m, points, lines }
}

/// Lines with at least `line_threshold` points, richest first, at most
/// `max_lines` of them: how many were used and their total incidences.
pub fn incidence_count(
    g: &GridArrangement,
    line_threshold: usize,
    max_lines: usize,
) -> (usize, usize) {
    let mut sizes: Vec<usize> = g
        .lines
        .iter()
        .map(Vec::len)
        .filter(|&k| k >= line_threshold)
        .collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes.truncate(max_lines);
    (sizes.len(), sizes.iter().sum())
}

/// `incidences <= 2.5 n^(4/3)` with `n = max(points, lines)`, compared as
/// `8 I^3 <= 125 n^4`; also `I <= points * lines`, which no arrangement
/// can exceed.
pub fn st_bound_check(points: u64, lines: u64, incidences: u64) -> bool {
    if incidences > points * lines {
        return false;
    }
    let n = BigInt::from(points.max(lines));
    let i = BigInt::from(incidences);
    BigInt::from(8) * &i * &i * &i <= BigInt::from(125) * &n * &n * &n * &n
}

/// `ceil(n^(1/3))`, the line threshold used with `n`-point grids.
pub fn cube_root_ceil(n: u64) -> u64 {
    let r = n.cbrt();
    if r * r * r == n {
        r
    } else {
        r + 1
    }
}

/// An injection of pattern points into host points under which three
/// pattern points are collinear exactly when their images are, or `None`.
///
/// Patterns with a certificate of non-rationality are rejected without
/// search.
pub fn find_subconfiguration(
    host: &Realization<Rational>,
    pattern: &IncidenceStructure,
) -> Option<Vec<PointId>> {
    if pattern.n() > host.structure().n()
        || pattern.max_line_size() > host.structure().max_line_size()
    {
        return None;
    }
    if matches!(certify_not_rational(pattern), Certification::NotRational(_)) {
        return None;
    }
    find_subconfiguration_exhaustive(host, pattern)
}

/// [`find_subconfiguration`] without the certificate shortcut, for any field.
pub fn find_subconfiguration_exhaustive<F: Field>(
    host: &Realization<F>,
    pattern: &IncidenceStructure,
) -> Option<Vec<PointId>> {
    let h = host.structure();
    if pattern.n() == 0 {
        return Some(Vec::new());
    }
    if pattern.n() > h.n() {
        return None;
    }
    let m = Matcher::new(h, pattern);
    let first = m.order[0];
    let roots: Vec<PointId> = (0..h.n()).filter(|&c| m.compatible(first, c)).collect();
    roots.par_iter().find_map_first(|&c| {
        let mut image = vec![usize::MAX; pattern.n()];
        let mut used = vec![false; h.n()];
        image[first] = c;
        used[c] = true;
        m.extend(1, &mut image, &mut used).then_some(image)
    })
}

struct Matcher<'a> {
    host: &'a IncidenceStructure,
    ht: PairTable,
    pt: PairTable,
    order: Vec<PointId>,
    /// Line sizes through each point, largest first.
    host_sizes: Vec<Vec<usize>>,
    pattern_sizes: Vec<Vec<usize>>,
}

fn sizes_through(s: &IncidenceStructure) -> Vec<Vec<usize>> {
    (0..s.n())
        .map(|p| {
            let mut v: Vec<usize> = s.lines_through(p).map(|l| s.lines()[l].len()).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .collect()
}

impl<'a> Matcher<'a> {
    fn new(host: &'a IncidenceStructure, pattern: &'a IncidenceStructure) -> Self {
        let pt = pattern.pair_table();
        // start at the richest point, then always take the point sharing
        // the most lines with those already placed
        let mut order = Vec::with_capacity(pattern.n());
        let mut placed = vec![false; pattern.n()];
        let degrees = pattern.degrees();
        while order.len() < pattern.n() {
            let score = |p: PointId| {
                let shared = order
                    .iter()
                    .filter(|&&q| pt.line_of(p, q).is_some())
                    .count();
                (shared, degrees[p], std::cmp::Reverse(p))
            };
            let next = (0..pattern.n())
                .filter(|&p| !placed[p])
                .max_by_key(|&p| score(p))
                .expect("unplaced point");
            placed[next] = true;
            order.push(next);
        }
        Self {
            host,
            ht: host.pair_table(),
            pt,
            order,
            host_sizes: sizes_through(host),
            pattern_sizes: sizes_through(pattern),
        }
    }

    /// Host point `c` has room for the lines through pattern point `p`.
    fn compatible(&self, p: PointId, c: PointId) -> bool {
        let (ps, hs) = (&self.pattern_sizes[p], &self.host_sizes[c]);
        ps.len() <= hs.len() && ps.iter().zip(hs).all(|(a, b)| a <= b)
    }

    fn extend(&self, depth: usize, image: &mut [PointId], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let earlier = &self.order[..depth];
        // a pattern line of p with two placed points pins p to a host line
        let pinned = earlier.iter().enumerate().find_map(|(i, &q)| {
            let l = self.pt.line_of(p, q)?;
            let r = earlier[i + 1..]
                .iter()
                .find(|&&r| self.pt.line_of(p, r) == Some(l))?;
            Some(self.ht.line_of(image[q], image[*r]))
        });
        let candidates: Box<dyn Iterator<Item = PointId>> = match pinned {
            Some(Some(hl)) => Box::new(self.host.lines()[hl].iter().copied()),
            // the two images span no rich host line
            Some(None) => return false,
            None => Box::new(0..self.host.n()),
        };
        for c in candidates {
            if used[c] || !self.compatible(p, c) || !self.consistent(p, c, earlier, image) {
                continue;
            }
            image[p] = c;
            used[c] = true;
            if self.extend(depth + 1, image, used) {
                return true;
            }
            used[c] = false;
            image[p] = usize::MAX;
        }
        false
    }

    fn consistent(&self, p: PointId, c: PointId, earlier: &[PointId], image: &[PointId]) -> bool {
        for (i, &q) in earlier.iter().enumerate() {
            for &r in &earlier[i + 1..] {
                if self.pt.together(p, q, r) != self.ht.together(c, image[q], image[r]) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named::named_structure;
    use crate::incidence::realization::maximal_collinear_sets;
    use crate::projective::collinear;

    /// Oracle: every triple of grid points, grouped by the line they span.
    fn triple_scan_lines(m: usize) -> Vec<Vec<PointId>> {
        let g = build_grid(m * m);
        maximal_collinear_sets(g.points())
    }

    #[test]
    fn grid_lines_match_triple_scan() {
        for m in 2..=6 {
            let g = build_grid(m * m);
            let mut ours: Vec<Vec<PointId>> = g
                .lines()
                .iter()
                .filter(|l| l.len() >= 3)
                .map(|l| {
                    let mut l = l.clone();
                    l.sort_unstable();
                    l
                })
                .collect();
            ours.sort();
            assert_eq!(ours, triple_scan_lines(m), "m = {m}");
            // every pair spans exactly one listed line
            let pairs: usize = g.lines().iter().map(|l| l.len() * (l.len() - 1) / 2).sum();
            assert_eq!(pairs, m * m * (m * m - 1) / 2);
        }
    }

    #[test]
    fn small_grids() {
        let g = build_grid(9);
        assert_eq!(g.rich_lines(3), 8);
        assert_eq!(incidence_count(&g, 3, 9), (8, 24));
        assert_eq!(incidence_count(&g, 4, 9), (0, 0));
        assert_eq!(build_grid(4).rich_lines(3), 0);
        let g4 = build_grid(16);
        assert_eq!(g4.rich_lines(4), 10);
        assert!(g4.lines().iter().all(|l| l.len() <= 4));
        assert!(g4
            .points()
            .iter()
            .zip(g4.points().iter().skip(1))
            .all(|(a, b)| a != b));
        let [a, b, c] = [0, 5, 10].map(|i| g4.points()[i].clone());
        assert!(collinear(&a, &b, &c).unwrap());
    }

    #[test]
    fn st_check_examples() {
        assert!(st_bound_check(9, 9, 24));
        assert!(st_bound_check(7, 7, 0));
        assert!(!st_bound_check(1, 1, 2));
        // 125 * 9^4 = 820125 lies between 8 * 46^3 and 8 * 47^3
        assert!(st_bound_check(9, 9, 46));
        assert!(!st_bound_check(9, 9, 47));
        assert_eq!(cube_root_ceil(100), 5);
        assert_eq!(cube_root_ceil(27), 3);
    }

    #[test]
    fn triple_embeds_in_3x3() {
        let host = build_grid(9).realization();
        let triple = IncidenceStructure::new(3, vec![vec![0, 1, 2]]).unwrap();
        let e = find_subconfiguration(&host, &triple).unwrap();
        assert!(host.structure().pair_table().together(e[0], e[1], e[2]));
    }

    #[test]
    fn perles_not_in_5x5_by_exhaustion() {
        let host = build_grid(25).realization();
        let perles = named_structure("perles").unwrap();
        assert_eq!(find_subconfiguration_exhaustive(&host, &perles), None);
        assert_eq!(find_subconfiguration(&host, &perles), None);
    }

    #[test]
    fn square7_embeds_in_a_grid() {
        let s = named_structure("square7").unwrap();
        let host = build_grid(36).realization();
        let e = find_subconfiguration(&host, &s).expect("square7 is rational");
        // oracle: the image points have exactly the pattern's collinear triples
        let image: Vec<_> = e.iter().map(|&c| host.point(c).clone()).collect();
        assert_eq!(maximal_collinear_sets(&image), s.lines());
    }
}
