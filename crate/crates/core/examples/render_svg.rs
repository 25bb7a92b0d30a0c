//! Draw the eight-point square with labels; ideal points become markers.

use projconf::constructions::named::square8_witness;
use projconf::render::{render_svg, RenderSpec};

fn main() {
    let spec = RenderSpec {
        labels: true,
        ..RenderSpec::default()
    };
    print!("{}", render_svg(&square8_witness().into(), &spec).unwrap());
}
