//! Relabeled copies of the Fano plane share one canonical form.

use projconf::constructions::named::fano;
use projconf::incidence::{canonical_form, is_isomorphic};

fn main() {
    let f = fano();
    let c = canonical_form(&f);
    print!("{c}");
    let shuffled = f.relabel(&[3, 6, 0, 1, 5, 2, 4]);
    println!(
        "relabeled copy has the same form: {}",
        canonical_form(&shuffled) == c
    );
    println!("isomorphic: {}", is_isomorphic(&f, &shuffled));
}
