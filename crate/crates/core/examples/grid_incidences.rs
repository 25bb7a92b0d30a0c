//! Rich lines of integer grids against the incidence bound, and a search
//! for small patterns inside them.

use projconf::applications::{
    build_grid, cube_root_ceil, find_subconfiguration, incidence_count, st_bound_check,
};
use projconf::constructions::named::named_structure;

fn main() {
    for m in [3, 5, 10, 20] {
        let n = m * m;
        let g = build_grid(n);
        let t = cube_root_ceil(n as u64) as usize;
        let (lines, inc) = incidence_count(&g, t, n);
        let ok = st_bound_check(n as u64, n as u64, inc as u64);
        println!(
            "{m}x{m}: {lines} lines with at least {t} points, {inc} incidences, within bound {ok}"
        );
    }
    let host = build_grid(36).realization();
    for name in ["square7", "perles"] {
        let found = find_subconfiguration(&host, &named_structure(name).unwrap());
        println!("{name} in 6x6: {found:?}");
    }
}
