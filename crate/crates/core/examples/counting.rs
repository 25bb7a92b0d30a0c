//! Degree counting for structures whose points have degree 2 or 3.

use projconf::engine::{count_identity_check, rich_triple_count};

fn main() {
    for (n, triples) in [(7, 6), (7, 7), (8, 7), (8, 8), (9, 9)] {
        match count_identity_check(n, triples) {
            Ok(a) => {
                let x = rich_triple_count(a, triples)
                    .map_or("infeasible".to_string(), |x| x.to_string());
                println!("n={n} triples={triples}: {a} points of degree 3, {x} triples of them");
            }
            Err(e) => println!("n={n} triples={triples}: {e}"),
        }
    }
}
