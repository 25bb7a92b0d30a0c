//! Canonical labeling by backtracking over degree-respecting orders.
//!
//! Labels are handed out in order of non-increasing degree. Among those
//! labelings, the canonical one maximizes the collinear-triple indicator
//! vector read in colex order (`k`, then `j`, then `i`, with `i < j < k`).
//! The bits for label `k` are fixed as soon as label `k` is assigned, so a
//! partial labeling whose prefix falls below the best one is cut off.

use crate::incidence::structure::{IncidenceStructure, PairTable, PointId};

struct Search<'a> {
    n: usize,
    table: &'a PairTable,
    /// Allowed original points for each label position.
    class_of_pos: Vec<usize>,
    degree_class: Vec<usize>,
    /// `order[pos] = original point`.
    order: Vec<PointId>,
    used: Vec<bool>,
    best_bits: Vec<bool>,
    best_order: Vec<PointId>,
    bits: Vec<bool>,
}

impl Search<'_> {
    /// Bits contributed by label `k`: `(i, j)` for `j < k`, `i < j`.
    fn push_bits(&mut self, k: usize) {
        let pk = self.order[k];
        for j in 1..k {
            for i in 0..j {
                self.bits
                    .push(self.table.together(self.order[i], self.order[j], pk));
            }
        }
    }

    /// Extend the labeling at `pos`, cutting branches whose bits already
    /// fall below the best complete labeling.
    fn go(&mut self, pos: usize) {
        if pos == self.n {
            if self.best_order.is_empty() || self.bits > self.best_bits {
                self.best_bits = self.bits.clone();
                self.best_order = self.order.clone();
            }
            return;
        }
        for p in 0..self.n {
            if self.used[p] || self.degree_class[p] != self.class_of_pos[pos] {
                continue;
            }
            self.used[p] = true;
            self.order.push(p);
            let start = self.bits.len();
            self.push_bits(pos);
            // the best can change inside a subtree, so compare the whole prefix
            let prune =
                !self.best_order.is_empty() && self.bits[..] < self.best_bits[..self.bits.len()];
            if !prune {
                self.go(pos + 1);
            }
            self.bits.truncate(start);
            self.order.pop();
            self.used[p] = false;
        }
    }
}

/// Canonical relabeling as `perm[old] = new`.
pub fn canonical_labeling(s: &IncidenceStructure) -> Vec<PointId> {
    let n = s.n();
    let deg = s.degrees();
    let mut distinct: Vec<usize> = deg.clone();
    distinct.sort_unstable_by(|a, b| b.cmp(a));
    distinct.dedup();
    let degree_class: Vec<usize> = deg
        .iter()
        .map(|d| distinct.iter().position(|x| x == d).unwrap())
        .collect();
    let mut class_of_pos: Vec<usize> = degree_class.clone();
    class_of_pos.sort_unstable();
    let table = s.pair_table();
    let mut search = Search {
        n,
        table: &table,
        class_of_pos,
        degree_class,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best_bits: Vec::new(),
        best_order: Vec::new(),
        bits: Vec::new(),
    };
    search.go(0);
    let mut perm = vec![0; n];
    for (new, &old) in search.best_order.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

/// The structure relabeled canonically; isomorphic inputs give equal outputs.
pub fn canonical_form(s: &IncidenceStructure) -> IncidenceStructure {
    s.relabel(&canonical_labeling(s))
}

pub fn is_isomorphic(a: &IncidenceStructure, b: &IncidenceStructure) -> bool {
    if a.n() != b.n() || a.lines().len() != b.lines().len() {
        return false;
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}
