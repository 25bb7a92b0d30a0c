//! Exact arithmetic in Q(sqrt 5).

use num::BigInt;
use projconf::field::rat;
use projconf::QuadraticNumber;

fn main() {
    let d = BigInt::from(5);
    let phi = QuadraticNumber::new(d.clone(), rat(1, 2), rat(1, 2)).unwrap();
    let one = QuadraticNumber::from_rational(&d, rat(1, 1));
    // the golden ratio satisfies x^2 = x + 1
    println!("phi = {phi}");
    println!("phi^2 = {}", phi.clone() * phi.clone());
    println!("phi + 1 = {}", phi.clone() + one.clone());
    println!("1/phi = {}", one / phi.clone());
    println!("norm {}, conjugate {}", phi.norm(), phi.conjugate());
}
