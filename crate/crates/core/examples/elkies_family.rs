//! The ten-point family over Q(sqrt d), one member per parameter a.

use projconf::constructions::elkies::{
    elkies_field, elkies_realize, rationality_obstruction, Branch,
};
use projconf::field::rat;
use projconf::incidence::verify_realization;

fn main() {
    for a in [rat(0, 1), rat(1, 2), rat(-1, 3), rat(2, 1), rat(1, 1)] {
        match elkies_realize(&a, Branch::Plus) {
            Ok(r) => println!(
                "a={a}: field d={}, verifies {}, obstruction {}",
                elkies_field(&a).unwrap(),
                verify_realization(&r),
                rationality_obstruction(&a)
            ),
            Err(e) => println!("a={a}: {e}"),
        }
    }
}
