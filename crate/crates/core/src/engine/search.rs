//! Depth-first placement of points with exact incremental checks.
//!
//! Each point is placed by one of three rules, decided combinatorially from
//! which of its lines already carry two placed points: a free point of the
//! affine chart, a free point on one line, or the meet of two lines. Free
//! coordinates are drawn from a height-ordered list of rationals.

use crate::field::Rational;
use crate::incidence::structure::{PairTable, PointId};
use crate::projective::{collinear_unchecked, ProjectivePoint};

/// How a point gets its coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Placement {
    /// Any point `(x, y, 1)` of the affine chart.
    Plane,
    /// `A + t*B` on the line through the placed points `A` and `B`.
    OnLine(PointId, PointId),
    /// Intersection of the two lines, each given by two placed points.
    Meet([(PointId, PointId); 2]),
}

impl Placement {
    pub fn free_parameters(&self) -> usize {
        match self {
            Placement::Plane => 2,
            Placement::OnLine(..) => 1,
            Placement::Meet(..) => 0,
        }
    }
}

/// Result of classifying one point against the placed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classified {
    pub placement: Placement,
    /// Lines with two placed points beyond the two used for a meet; each is
    /// an extra equation the coordinates must satisfy.
    pub extra: Vec<(PointId, PointId)>,
}

/// Tracks, per line, which of its points are placed (in placement order).
#[derive(Clone, Debug)]
pub(crate) struct LineTracker<'a> {
    lines: &'a [Vec<PointId>],
    placed_on: Vec<Vec<PointId>>,
    through: Vec<Vec<usize>>,
}

impl<'a> LineTracker<'a> {
    pub fn new(n: usize, lines: &'a [Vec<PointId>]) -> Self {
        let mut through = vec![Vec::new(); n];
        for (i, l) in lines.iter().enumerate() {
            for &p in l {
                through[p].push(i);
            }
        }
        Self {
            lines,
            placed_on: vec![Vec::new(); lines.len()],
            through,
        }
    }

    /// Number of lines through `p` that already carry two placed points.
    pub fn constraint_count(&self, p: PointId) -> usize {
        self.through[p]
            .iter()
            .filter(|&&l| self.placed_on[l].len() >= 2)
            .count()
    }

    pub fn classify(&self, p: PointId) -> Classified {
        let mut spans: Vec<(PointId, PointId)> = self.through[p]
            .iter()
            .filter(|&&l| self.placed_on[l].len() >= 2)
            .map(|&l| (self.placed_on[l][0], self.placed_on[l][1]))
            .collect();
        match spans.len() {
            0 => Classified {
                placement: Placement::Plane,
                extra: vec![],
            },
            1 => Classified {
                placement: Placement::OnLine(spans[0].0, spans[0].1),
                extra: vec![],
            },
            _ => {
                let extra = spans.split_off(2);
                Classified {
                    placement: Placement::Meet([spans[0], spans[1]]),
                    extra,
                }
            }
        }
    }

    pub fn place(&mut self, p: PointId) {
        for &l in &self.through[p] {
            self.placed_on[l].push(p);
        }
    }

    #[allow(dead_code)]
    pub fn lines(&self) -> &[Vec<PointId>] {
        self.lines
    }
}

/// Order `to_place` greedily (most constrained first, then lowest id) and
/// classify each point, starting from the already-placed set `placed`.
pub(crate) fn greedy_order(
    n: usize,
    lines: &[Vec<PointId>],
    placed: &[PointId],
    to_place: &[PointId],
) -> Vec<(PointId, Classified)> {
    let mut tracker = LineTracker::new(n, lines);
    for &p in placed {
        tracker.place(p);
    }
    let mut remaining: Vec<PointId> = to_place.to_vec();
    let mut out = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let (idx, _) = remaining
            .iter()
            .enumerate()
            .max_by_key(|&(_, &p)| (tracker.constraint_count(p), std::cmp::Reverse(p)))
            .expect("nonempty");
        let p = remaining.remove(idx);
        out.push((p, tracker.classify(p)));
        tracker.place(p);
    }
    out
}

/// Outcome of a bounded placement search.
#[derive(Debug)]
pub(crate) enum SearchResult {
    Found(Vec<Option<ProjectivePoint<Rational>>>),
    Exhausted,
    BudgetExceeded,
}

pub(crate) struct PlacementSearch<'a> {
    table: &'a PairTable,
    coords: Vec<Option<ProjectivePoint<Rational>>>,
    placed: Vec<PointId>,
    order: &'a [(PointId, Placement)],
    candidates: &'a [Rational],
    budget: Option<u64>,
    nodes: u64,
}

impl<'a> PlacementSearch<'a> {
    pub fn new(
        table: &'a PairTable,
        initial: Vec<Option<ProjectivePoint<Rational>>>,
        order: &'a [(PointId, Placement)],
        candidates: &'a [Rational],
        budget: Option<u64>,
    ) -> Self {
        let placed = initial
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_some())
            .map(|(i, _)| i)
            .collect();
        Self {
            table,
            coords: initial,
            placed,
            order,
            candidates,
            budget,
            nodes: 0,
        }
    }

    pub fn run(mut self) -> SearchResult {
        match self.dfs(0) {
            Some(true) => SearchResult::Found(self.coords),
            Some(false) => SearchResult::Exhausted,
            None => SearchResult::BudgetExceeded,
        }
    }

    fn coord(&self, p: PointId) -> &ProjectivePoint<Rational> {
        self.coords[p]
            .as_ref()
            .expect("placement order refers only to placed points")
    }

    /// Exact check of a candidate position against every placed point and pair.
    fn admissible(&self, p: PointId, pos: &ProjectivePoint<Rational>) -> bool {
        if self.placed.iter().any(|&q| self.coord(q) == pos) {
            return false;
        }
        for (i, &q) in self.placed.iter().enumerate() {
            for &r in &self.placed[i + 1..] {
                if collinear_unchecked(pos, self.coord(q), self.coord(r))
                    != self.table.together(p, q, r)
                {
                    return false;
                }
            }
        }
        true
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn try_place(&mut self, i: usize, p: PointId, pos: ProjectivePoint<Rational>) -> Option<bool> {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        if !self.admissible(p, &pos) {
            return Some(false);
        }
        self.coords[p] = Some(pos);
        self.placed.push(p);
        let r = self.dfs(i + 1);
        if r != Some(true) {
            self.placed.pop();
            self.coords[p] = None;
        }
        r
    }

    fn dfs(&mut self, i: usize) -> Option<bool> {
        let Some((p, placement)) = self.order.get(i).cloned() else {
            return Some(true);
        };
        match placement {
            Placement::Meet([(a, b), (c, d)]) => {
                let l1 = self.coord(a).join(self.coord(b));
                let l2 = self.coord(c).join(self.coord(d));
                match (l1, l2) {
                    (Some(l1), Some(l2)) => match l1.meet(&l2) {
                        Some(pos) => self.try_place(i, p, pos),
                        None => Some(false),
                    },
                    _ => Some(false),
                }
            }
            Placement::OnLine(a, b) => {
                let (ca, cb) = (
                    self.coord(a).coords().clone(),
                    self.coord(b).coords().clone(),
                );
                for t in self.candidates {
                    let v = [
                        &ca[0] + t * &cb[0],
                        &ca[1] + t * &cb[1],
                        &ca[2] + t * &cb[2],
                    ];
                    let Ok(pos) = ProjectivePoint::from_array(v) else {
                        continue;
                    };
                    match self.try_place(i, p, pos) {
                        Some(false) => continue,
                        other => return other,
                    }
                }
                Some(false)
            }
            Placement::Plane => {
                let k = self.candidates.len();
                for m in 0..k {
                    for j in 0..=m {
                        let pairs: &[(usize, usize)] =
                            if j == m { &[(m, m)] } else { &[(m, j), (j, m)] };
                        for &(xi, yi) in pairs {
                            let one = Rational::from_integer(1.into());
                            let pos = ProjectivePoint::from_array([
                                self.candidates[xi].clone(),
                                self.candidates[yi].clone(),
                                one,
                            ])
                            .expect("w = 1");
                            match self.try_place(i, p, pos) {
                                Some(false) => continue,
                                other => return other,
                            }
                        }
                    }
                }
                Some(false)
            }
        }
    }
}
