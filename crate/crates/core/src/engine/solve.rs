//! Frame, propagate, and search the free parameters by height.

use std::sync::OnceLock;

use crate::constructions::named::{eight_three, fano};
use crate::engine::plan::plan;
use crate::engine::search::{greedy_order, Placement, PlacementSearch, SearchResult};
use crate::field::{rationals_by_height, Rational};
use crate::incidence::canonical::canonical_form;
use crate::incidence::realization::{verify_realization, Realization};
use crate::incidence::structure::IncidenceStructure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    RationalWitness(Realization<Rational>),
    KnownNotReal(&'static str),
    NoWitnessFound(u64),
}

impl SolveOutcome {
    pub fn witness(&self) -> Option<&Realization<Rational>> {
        match self {
            SolveOutcome::RationalWitness(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub height_bound: u64,
    /// Cap on search nodes; `None` searches the whole height range.
    pub node_budget: Option<u64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            height_bound: 64,
            node_budget: None,
        }
    }
}

/// Structures with no real realization, by canonical form.
fn registry() -> &'static [(IncidenceStructure, &'static str)] {
    static R: OnceLock<Vec<(IncidenceStructure, &'static str)>> = OnceLock::new();
    R.get_or_init(|| {
        vec![
            (canonical_form(&fano()), "Fano"),
            (canonical_form(&eight_three()), "8_3"),
        ]
    })
}

/// Name of the registered non-real structure isomorphic to `s`, if any.
pub fn known_not_real(s: &IncidenceStructure) -> Option<&'static str> {
    let reg = registry();
    if !reg
        .iter()
        .any(|(r, _)| r.n() == s.n() && r.lines().len() == s.lines().len())
    {
        return None;
    }
    let c = canonical_form(s);
    reg.iter().find(|(r, _)| *r == c).map(|(_, name)| *name)
}

pub fn solve(s: &IncidenceStructure, height_bound: u64) -> SolveOutcome {
    solve_with(
        s,
        &SolveOptions {
            height_bound,
            ..SolveOptions::default()
        },
    )
}

pub fn solve_with(s: &IncidenceStructure, opts: &SolveOptions) -> SolveOutcome {
    if let Some(name) = known_not_real(s) {
        return SolveOutcome::KnownNotReal(name);
    }
    let candidates = rationals_by_height(opts.height_bound);
    let n = s.n();
    let table = s.pair_table();
    let (initial, order): (Vec<_>, Vec<(usize, Placement)>) = match plan(s) {
        Ok(p) => (p.initial_coords(n), p.order()),
        Err(_) => {
            // no frame: place everything from scratch
            let all: Vec<usize> = (0..n).collect();
            let order = greedy_order(n, s.lines(), &[], &all)
                .into_iter()
                .map(|(p, c)| (p, c.placement))
                .collect();
            (vec![None; n], order)
        }
    };
    match PlacementSearch::new(&table, initial, &order, &candidates, opts.node_budget).run() {
        SearchResult::Found(coords) => {
            let coords = coords.into_iter().map(|c| c.expect("all placed")).collect();
            let r = Realization::new(s.clone(), coords).expect("shape");
            // independent re-check of the search's incremental tests
            assert!(
                verify_realization(&r),
                "placement search returned an inexact witness"
            );
            SolveOutcome::RationalWitness(r)
        }
        SearchResult::Exhausted | SearchResult::BudgetExceeded => {
            SolveOutcome::NoWitnessFound(opts.height_bound)
        }
    }
}
