//! Frame-and-propagate plans.
//!
//! Four points are sent to a standard frame; the rest are placed one at a
//! time, each either determined as the meet of two spanned lines or given
//! free parameters. Constraint lines beyond the two used for a meet are
//! residual equations. For a fixed frame kind, `residual - free` does not
//! depend on the order, so the search only branches when no point is
//! determined and a free point has to be chosen.

use std::ops::ControlFlow;

use crate::engine::search::{LineTracker, Placement};
use crate::field::Rational;
use crate::incidence::structure::{IncidenceStructure, PointId};
use crate::projective::{FrameKind, ProjectivePoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("structure has {0} points; a frame needs at least 4 points, no three of them forced collinear")]
    TooDegenerate(usize),
}

/// One placed point of a plan.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanStep {
    pub point: PointId,
    pub placement: Placement,
    /// Further spanned lines the point must lie on.
    pub extra: Vec<(PointId, PointId)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstraintPlan {
    frame: [PointId; 4],
    kind: FrameKind,
    steps: Vec<PlanStep>,
}

impl ConstraintPlan {
    pub fn frame(&self) -> [PointId; 4] {
        self.frame
    }

    pub fn frame_kind(&self) -> FrameKind {
        self.kind
    }

    /// Standard coordinates of the frame points, in frame order.
    pub fn frame_coords(&self) -> [ProjectivePoint<Rational>; 4] {
        self.kind.targets()
    }

    pub fn steps(&self) -> &[PlanStep] {
        &self.steps
    }

    /// Points fixed as the meet of two spanned lines.
    pub fn determined(&self) -> Vec<(PointId, [(PointId, PointId); 2])> {
        self.steps
            .iter()
            .filter_map(|s| match s.placement {
                Placement::Meet(l) => Some((s.point, l)),
                _ => None,
            })
            .collect()
    }

    /// Points with free parameters: on a spanned line, or anywhere (`None`).
    pub fn free(&self) -> Vec<(PointId, Option<(PointId, PointId)>)> {
        self.steps
            .iter()
            .filter_map(|s| match s.placement {
                Placement::OnLine(a, b) => Some((s.point, Some((a, b)))),
                Placement::Plane => Some((s.point, None)),
                Placement::Meet(_) => None,
            })
            .collect()
    }

    pub fn free_parameters(&self) -> usize {
        self.steps
            .iter()
            .map(|s| s.placement.free_parameters())
            .sum()
    }

    /// Number of equations beyond those used to place points.
    pub fn residual(&self) -> usize {
        self.steps.iter().map(|s| s.extra.len()).sum()
    }

    /// Initial coordinates with only the frame placed.
    pub fn initial_coords(&self, n: usize) -> Vec<Option<ProjectivePoint<Rational>>> {
        let mut c = vec![None; n];
        for (p, t) in self.frame.iter().zip(self.frame_coords()) {
            c[*p] = Some(t);
        }
        c
    }

    pub(crate) fn order(&self) -> Vec<(PointId, Placement)> {
        self.steps
            .iter()
            .map(|s| (s.point, s.placement.clone()))
            .collect()
    }

    fn objective(&self) -> (usize, usize, bool) {
        (
            self.residual(),
            self.free_parameters(),
            self.kind == FrameKind::General,
        )
    }
}

/// All frames of a structure: collinear frames first (three points of a
/// listed line, in ascending order, then a point off it), then general
/// frames (four points, no three on a listed line), each in lex order.
pub fn frames(s: &IncidenceStructure) -> Vec<([PointId; 4], FrameKind)> {
    let n = s.n();
    let table = s.pair_table();
    let mut out = Vec::new();
    for l in s.lines() {
        for i in 0..l.len() {
            for j in i + 1..l.len() {
                for k in j + 1..l.len() {
                    for p in (0..n).filter(|p| !l.contains(p)) {
                        out.push(([l[i], l[j], l[k], p], FrameKind::Collinear));
                    }
                }
            }
        }
    }
    out.sort();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if table.together(a, b, c) {
                    continue;
                }
                for d in c + 1..n {
                    if !table.together(a, b, d)
                        && !table.together(a, c, d)
                        && !table.together(b, c, d)
                    {
                        out.push(([a, b, c, d], FrameKind::General));
                    }
                }
            }
        }
    }
    out
}

struct Explorer<'a, V> {
    frame: [PointId; 4],
    kind: FrameKind,
    max_free: usize,
    visit: &'a mut V,
}

impl<V: FnMut(&ConstraintPlan) -> ControlFlow<(), usize>> Explorer<'_, V> {
    /// Place every determined point, then branch over the next free point.
    fn go(
        &mut self,
        tracker: &LineTracker<'_>,
        remaining: &[PointId],
        steps: &mut Vec<PlanStep>,
        free: usize,
    ) -> ControlFlow<()> {
        if free > self.max_free {
            return ControlFlow::Continue(());
        }
        let mut tracker = tracker.clone();
        let mut remaining = remaining.to_vec();
        let base = steps.len();
        loop {
            let forced = remaining
                .iter()
                .enumerate()
                .filter(|(_, &p)| tracker.constraint_count(p) >= 2)
                .max_by_key(|(_, &p)| (tracker.constraint_count(p), std::cmp::Reverse(p)))
                .map(|(i, _)| i);
            let Some(i) = forced else { break };
            let p = remaining.remove(i);
            let c = tracker.classify(p);
            steps.push(PlanStep {
                point: p,
                placement: c.placement,
                extra: c.extra,
            });
            tracker.place(p);
        }
        let r = if remaining.is_empty() {
            let plan = ConstraintPlan {
                frame: self.frame,
                kind: self.kind,
                steps: steps.clone(),
            };
            match (self.visit)(&plan) {
                ControlFlow::Continue(bound) => {
                    self.max_free = bound;
                    ControlFlow::Continue(())
                }
                ControlFlow::Break(()) => ControlFlow::Break(()),
            }
        } else {
            // most constrained candidates first
            let mut cands = remaining.clone();
            cands.sort_by_key(|&p| (std::cmp::Reverse(tracker.constraint_count(p)), p));
            let mut r = ControlFlow::Continue(());
            for p in cands {
                let c = tracker.classify(p);
                let cost = c.placement.free_parameters();
                let mut t2 = tracker.clone();
                t2.place(p);
                let rest: Vec<PointId> = remaining.iter().copied().filter(|&q| q != p).collect();
                steps.push(PlanStep {
                    point: p,
                    placement: c.placement,
                    extra: c.extra,
                });
                r = self.go(&t2, &rest, steps, free + cost);
                steps.pop();
                if r.is_break() {
                    break;
                }
            }
            r
        };
        steps.truncate(base);
        r
    }
}

/// Visit every plan with at most `max_free` free parameters. The visitor
/// returns the bound to use from then on, or `Break` to stop.
pub fn for_each_plan<V>(s: &IncidenceStructure, max_free: usize, mut visit: V)
where
    V: FnMut(&ConstraintPlan) -> ControlFlow<(), usize>,
{
    let mut bound = max_free;
    for (frame, kind) in frames(s) {
        let mut tracker = LineTracker::new(s.n(), s.lines());
        for &p in &frame {
            tracker.place(p);
        }
        let remaining: Vec<PointId> = (0..s.n()).filter(|p| !frame.contains(p)).collect();
        let mut ex = Explorer {
            frame,
            kind,
            max_free: bound,
            visit: &mut visit,
        };
        let flow = ex.go(&tracker, &remaining, &mut Vec::new(), 0);
        bound = ex.max_free;
        if flow.is_break() {
            return;
        }
    }
}

/// The plan with the fewest residual equations, then fewest free
/// parameters, preferring collinear frames; ties go to the first found.
pub fn plan(s: &IncidenceStructure) -> Result<ConstraintPlan, PlanError> {
    let mut best: Option<ConstraintPlan> = None;
    for_each_plan(s, usize::MAX, |p| {
        if best.as_ref().is_none_or(|b| p.objective() < b.objective()) {
            best = Some(p.clone());
        }
        let b = best.as_ref().unwrap();
        // with residual - free fixed per kind, only fewer free parameters can improve
        ControlFlow::Continue(b.free_parameters() + 1)
    });
    best.ok_or(PlanError::TooDegenerate(s.n()))
}
