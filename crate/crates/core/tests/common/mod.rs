#![allow(dead_code)]

use projconf::incidence::IncidenceStructure;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random partial linear space on `n` points: candidate lines of size 3
/// or 4 are tried in random order and kept when they cover no used pair.
pub fn random_structure<R: Rng>(rng: &mut R, n: usize) -> IncidenceStructure {
    let mut pts: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n * n];
    let mut lines = Vec::new();
    let tries = rng.gen_range(0..=3 * n);
    for _ in 0..tries {
        let k = if n >= 4 && rng.gen_bool(0.2) { 4 } else { 3 };
        if k > n {
            continue;
        }
        pts.shuffle(rng);
        let mut l = pts[..k].to_vec();
        l.sort_unstable();
        let clash = l
            .iter()
            .any(|&a| l.iter().any(|&b| a != b && used[a * n + b]));
        if clash {
            continue;
        }
        for &a in &l {
            for &b in &l {
                used[a * n + b] = true;
            }
        }
        lines.push(l);
    }
    IncidenceStructure::new(n, lines).expect("pairs covered at most once")
}
