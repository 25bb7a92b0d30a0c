//! The Perles configuration: a proof that no rational picture exists, and a
//! picture over Q(sqrt 5) that exists anyway.

use projconf::constructions::named::named_structure;
use projconf::constructions::quadratic_witness;
use projconf::engine::{certify_not_rational, Certification};
use projconf::field::format_rational;
use projconf::incidence::verify_realization;
use projconf::QuadraticNumber;

fn main() {
    let perles = named_structure("perles").unwrap();
    match certify_not_rational(&perles) {
        Certification::NotRational(c) => {
            let roots: Vec<String> = c.rejected_roots.iter().map(format_rational).collect();
            println!(
                "residual gcd {} with rational roots [{}], none usable",
                c.gcd,
                roots.join(", ")
            );
        }
        Certification::Rational(_) => println!("unexpected rational picture"),
        Certification::Inconclusive => println!("no certificate found"),
    }
    let r = quadratic_witness("perles").unwrap();
    let conj = r.map_field(QuadraticNumber::conjugate).unwrap();
    println!(
        "witness verifies: {}, conjugate verifies: {}",
        verify_realization(&r),
        verify_realization(&conj)
    );
    for (i, p) in r.coords().iter().enumerate() {
        println!("  {i}: {p}");
    }
}
