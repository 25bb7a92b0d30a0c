//! Reduced structures on up to eight points, and which of them are real.

use projconf::engine::{solve, SolveOutcome};
use projconf::enumeration::{census_summary, enumerate_reduced};

fn main() {
    for n in 3..=8 {
        let list = enumerate_reduced(n).expect("n is in range");
        println!("{}", census_summary(n, &list));
        for s in &list {
            let verdict = match solve(s, 64) {
                SolveOutcome::RationalWitness(_) => "rational witness".to_string(),
                SolveOutcome::KnownNotReal(name) => format!("not real ({name})"),
                SolveOutcome::NoWitnessFound(h) => format!("nothing up to height {h}"),
            };
            println!("  {} lines: {verdict}", s.lines().len());
        }
    }
}
