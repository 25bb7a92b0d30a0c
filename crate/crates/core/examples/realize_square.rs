//! Reduce, solve and extend the seven-point square, then print the witness.

use projconf::constructions::named::SQUARE7_INC;
use projconf::engine::{solve, SolveOutcome};
use projconf::incidence::{extend, parse_inc, reduce, verify_realization, AnyRealization};

fn main() {
    let s = parse_inc(SQUARE7_INC).expect("bundled file parses");
    let (reduced, trace) = reduce(&s);
    println!(
        "reduced to {} points and {} lines",
        reduced.n(),
        reduced.lines().len()
    );
    match solve(&reduced, 64) {
        SolveOutcome::RationalWitness(w) => {
            let r = extend(&w, &trace).expect("witness extends");
            assert!(verify_realization(&r));
            print!("{}", AnyRealization::from(r));
        }
        other => println!("no witness: {other:?}"),
    }
}
