//! Grid arrangements: exhaustive embedding search and incidence counts.

use projconf::applications::{
    build_grid, cube_root_ceil, find_subconfiguration, find_subconfiguration_exhaustive,
    incidence_count, st_bound_check,
};
use projconf::constructions::named::named_structure;
use projconf::incidence::maximal_collinear_sets;

#[test]
fn forbidden_patterns_absent_by_exhaustion() {
    // the certificate shortcut is not used here
    let perles = named_structure("perles").unwrap();
    let maclane = named_structure("maclane").unwrap();
    for m in 3..=6 {
        let host = build_grid(m * m).realization();
        assert_eq!(
            find_subconfiguration_exhaustive(&host, &perles),
            None,
            "perles m={m}"
        );
        assert_eq!(
            find_subconfiguration_exhaustive(&host, &maclane),
            None,
            "maclane m={m}"
        );
    }
}

#[test]
fn rational_patterns_embed_exactly() {
    for name in ["square7", "square8"] {
        let s = named_structure(name).unwrap();
        let host = build_grid(100).realization();
        let e = find_subconfiguration(&host, &s).unwrap_or_else(|| panic!("{name} in 10x10"));
        let image: Vec<_> = e.iter().map(|&c| host.point(c).clone()).collect();
        assert_eq!(maximal_collinear_sets(&image), s.lines());
    }
    // 8_3 is not realizable over the reals at all
    let e83 = named_structure("eight_three").unwrap();
    assert_eq!(
        find_subconfiguration_exhaustive(&build_grid(25).realization(), &e83),
        None
    );
}

#[test]
fn incidence_counts_are_monotone_and_bounded() {
    for m in 3..=30usize {
        let n = m * m;
        let g = build_grid(n);
        let mut last = usize::MAX;
        for t in 2..=m + 1 {
            let (_, inc) = incidence_count(&g, t, n);
            assert!(inc <= last, "m={m} t={t}");
            last = inc;
        }
        assert_eq!(incidence_count(&g, m + 1, n), (0, 0));
        let (lines, inc) = incidence_count(&g, cube_root_ceil(n as u64) as usize, n);
        assert!(st_bound_check(n as u64, n as u64, inc as u64), "m={m}");
        assert!(lines <= n);
    }
    // n = 100: between n^(4/3)/10 and 2.5 n^(4/3), compared by cubes
    let (_, inc) = incidence_count(&build_grid(100), 5, 100);
    let n4 = 100u128.pow(4);
    assert!(1000 * (inc as u128).pow(3) >= n4);
    assert!(8 * (inc as u128).pow(3) <= 125 * n4);
}
