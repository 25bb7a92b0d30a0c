//! Point and line removal to a fixpoint, with an invertible trace, and the
//! inverse operation that puts removed points back at rational positions.

use std::collections::BTreeSet;

use crate::engine::search::{greedy_order, Placement, PlacementSearch, SearchResult};
use crate::field::{rationals_by_height, Rational};
use crate::incidence::realization::{verify_realization, Realization};
use crate::incidence::structure::{IncidenceStructure, PairTable, PointId};
use crate::projective::ProjectivePoint;

/// One removal. Point ids refer to the original structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    /// A point of degree at most one, with the lines through it at removal time.
    RemovePoint {
        point: PointId,
        incident: Vec<Vec<PointId>>,
    },
    /// A line with fewer than two points of degree at least three. Its
    /// points of degree at most two go with it; `affected` holds the other
    /// lines through those points as they were just before removal.
    RemoveLine {
        line: Vec<PointId>,
        removed: Vec<PointId>,
        pivot: Option<PointId>,
        affected: Vec<Vec<PointId>>,
    },
}

impl ReductionStep {
    pub fn removed_points(&self) -> Vec<PointId> {
        match self {
            ReductionStep::RemovePoint { point, .. } => vec![*point],
            ReductionStep::RemoveLine { removed, .. } => removed.clone(),
        }
    }
}

/// Ordered record of a reduction, plus the map from reduced ids back to
/// original ids (`kept[reduced_id] = original_id`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionTrace {
    original_n: usize,
    steps: Vec<ReductionStep>,
    kept: Vec<PointId>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtendError {
    #[error("reduced realization is not an exact realization of the reduced structure")]
    ContractViolation,
    #[error("no admissible rational position found for point {0} up to height {1}")]
    SearchExhausted(PointId, u64),
}

#[derive(Clone, Debug)]
struct Working {
    active: Vec<bool>,
    lines: BTreeSet<Vec<PointId>>,
}

impl Working {
    fn from_structure(s: &IncidenceStructure) -> Self {
        Self {
            active: vec![true; s.n()],
            lines: s.lines().iter().cloned().collect(),
        }
    }

    fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.active.len()];
        for l in &self.lines {
            for &p in l {
                d[p] += 1;
            }
        }
        d
    }

    fn lines_through(&self, p: PointId) -> Vec<Vec<PointId>> {
        self.lines
            .iter()
            .filter(|l| l.contains(&p))
            .cloned()
            .collect()
    }

    fn drop_point(&mut self, p: PointId) {
        self.active[p] = false;
        for l in self.lines_through(p) {
            self.lines.remove(&l);
            let shrunk: Vec<PointId> = l.into_iter().filter(|&q| q != p).collect();
            if shrunk.len() >= 3 {
                self.lines.insert(shrunk);
            }
        }
    }

    /// Next removal, lowest point first, then lowest line.
    fn next_step(&self) -> Option<ReductionStep> {
        let deg = self.degrees();
        if let Some(p) = (0..self.active.len()).find(|&p| self.active[p] && deg[p] <= 1) {
            return Some(ReductionStep::RemovePoint {
                point: p,
                incident: self.lines_through(p),
            });
        }
        for l in &self.lines {
            let rich: Vec<PointId> = l.iter().copied().filter(|&p| deg[p] >= 3).collect();
            if rich.len() < 2 {
                let removed: Vec<PointId> = l.iter().copied().filter(|&p| deg[p] <= 2).collect();
                let affected = self
                    .lines
                    .iter()
                    .filter(|m| *m != l && m.iter().any(|q| removed.contains(q)))
                    .cloned()
                    .collect();
                return Some(ReductionStep::RemoveLine {
                    line: l.clone(),
                    removed,
                    pivot: rich.first().copied(),
                    affected,
                });
            }
        }
        None
    }

    fn apply(&mut self, step: &ReductionStep) {
        match step {
            ReductionStep::RemovePoint { point, .. } => self.drop_point(*point),
            ReductionStep::RemoveLine { line, removed, .. } => {
                self.lines.remove(line);
                for &p in removed {
                    self.drop_point(p);
                }
            }
        }
    }

    fn undo(&mut self, step: &ReductionStep) {
        let restore = |lines: &mut BTreeSet<Vec<PointId>>,
                       full: &Vec<PointId>,
                       gone: &[PointId]| {
            let shrunk: Vec<PointId> = full.iter().copied().filter(|q| !gone.contains(q)).collect();
            if shrunk.len() >= 3 {
                lines.remove(&shrunk);
            }
            lines.insert(full.clone());
        };
        match step {
            ReductionStep::RemovePoint { point, incident } => {
                self.active[*point] = true;
                for l in incident {
                    restore(&mut self.lines, l, &[*point]);
                }
            }
            ReductionStep::RemoveLine {
                line,
                removed,
                affected,
                ..
            } => {
                for &p in removed {
                    self.active[p] = true;
                }
                for l in affected {
                    restore(&mut self.lines, l, removed);
                }
                self.lines.insert(line.clone());
            }
        }
    }

    fn compact(&self) -> (IncidenceStructure, Vec<PointId>) {
        let kept: Vec<PointId> = (0..self.active.len()).filter(|&p| self.active[p]).collect();
        let mut new_id = vec![usize::MAX; self.active.len()];
        for (i, &p) in kept.iter().enumerate() {
            new_id[p] = i;
        }
        let lines = self
            .lines
            .iter()
            .map(|l| l.iter().map(|&p| new_id[p]).collect())
            .collect();
        (
            IncidenceStructure::from_sorted_unchecked(kept.len(), lines),
            kept,
        )
    }
}

/// Remove points and lines to the fixpoint where every point has degree at
/// least two and every line carries two points of degree at least three.
pub fn reduce(s: &IncidenceStructure) -> (IncidenceStructure, ReductionTrace) {
    let mut w = Working::from_structure(s);
    let mut steps = Vec::new();
    while let Some(step) = w.next_step() {
        w.apply(&step);
        steps.push(step);
    }
    let (reduced, kept) = w.compact();
    (
        reduced,
        ReductionTrace {
            original_n: s.n(),
            steps,
            kept,
        },
    )
}

impl ReductionTrace {
    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    pub fn kept(&self) -> &[PointId] {
        &self.kept
    }

    pub fn original_n(&self) -> usize {
        self.original_n
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Apply the recorded steps to `original`, returning the reduced structure.
    pub fn replay(&self, original: &IncidenceStructure) -> IncidenceStructure {
        let mut w = Working::from_structure(original);
        for step in &self.steps {
            w.apply(step);
        }
        w.compact().0
    }

    /// Rebuild the original structure from the reduced one.
    pub fn unreduce(&self, reduced: &IncidenceStructure) -> IncidenceStructure {
        let mut w = self.working_from_reduced(reduced);
        for step in self.steps.iter().rev() {
            w.undo(step);
        }
        w.compact().0
    }

    fn working_from_reduced(&self, reduced: &IncidenceStructure) -> Working {
        let mut active = vec![false; self.original_n];
        for &p in &self.kept {
            active[p] = true;
        }
        let lines = reduced
            .lines()
            .iter()
            .map(|l| l.iter().map(|&p| self.kept[p]).collect())
            .collect();
        Working { active, lines }
    }
}

const EXTEND_HEIGHTS: [u64; 4] = [8, 32, 128, 512];

/// Put the removed points back, last removal first. Each reinstated point
/// goes to the lowest-height admissible rational position: on the meet of
/// two restored lines, on one restored line, or anywhere in the chart.
pub fn extend(
    reduced_real: &Realization<Rational>,
    trace: &ReductionTrace,
) -> Result<Realization<Rational>, ExtendError> {
    if reduced_real.structure().n() != trace.kept.len() || !verify_realization(reduced_real) {
        return Err(ExtendError::ContractViolation);
    }
    let n = trace.original_n;
    let mut w = trace.working_from_reduced(reduced_real.structure());
    let mut coords: Vec<Option<ProjectivePoint<Rational>>> = vec![None; n];
    for (i, &p) in trace.kept.iter().enumerate() {
        coords[p] = Some(reduced_real.point(i).clone());
    }
    for step in trace.steps.iter().rev() {
        w.undo(step);
        let lines: Vec<Vec<PointId>> = w.lines.iter().cloned().collect();
        let placed: Vec<PointId> = (0..n).filter(|&p| coords[p].is_some()).collect();
        let group = step.removed_points();
        let order: Vec<(PointId, Placement)> = greedy_order(n, &lines, &placed, &group)
            .into_iter()
            .map(|(p, c)| (p, c.placement))
            .collect();
        let table = PairTable::from_lines(n, &lines);
        let mut done = false;
        for &h in &EXTEND_HEIGHTS {
            let candidates = rationals_by_height(h);
            if let SearchResult::Found(c) =
                PlacementSearch::new(&table, coords.clone(), &order, &candidates, None).run()
            {
                coords = c;
                done = true;
                break;
            }
        }
        if !done {
            return Err(ExtendError::SearchExhausted(
                group[0],
                *EXTEND_HEIGHTS.last().unwrap(),
            ));
        }
    }
    let (structure, _) = w.compact();
    let coords = coords
        .into_iter()
        .map(|c| c.expect("every point reinstated"))
        .collect();
    let r = Realization::new(structure, coords).expect("shape matches");
    debug_assert!(verify_realization(&r));
    Ok(r)
}
