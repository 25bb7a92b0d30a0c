//! Census of reduced structures against golden files and the naive oracle.

use std::collections::BTreeSet;

use projconf::constructions::named::{eight_three, fano, named_structure};
use projconf::enumeration::{
    case_counts, census_text, classify, enumerate_reduced, naive_reduced, CaseLabel,
};
use projconf::incidence::{canonical_form, is_isomorphic, parse_inc, IncidenceStructure};

mod golden;

fn canon(v: &[IncidenceStructure]) -> BTreeSet<IncidenceStructure> {
    v.iter().map(canonical_form).collect()
}

#[test]
fn census_matches_golden_files() {
    for n in 3..=8 {
        let text = census_text(n, &enumerate_reduced(n).unwrap());
        golden::check(&format!("census_n{n}.txt"), &text);
    }
}

#[test]
fn counts_per_size() {
    let sizes: Vec<usize> = (3..=8)
        .map(|n| enumerate_reduced(n).unwrap().len())
        .collect();
    assert_eq!(sizes, vec![0, 0, 0, 0, 2, 3]);
    let seven = enumerate_reduced(7).unwrap();
    assert!(seven.iter().any(|s| is_isomorphic(s, &fano())));
    assert!(seven
        .iter()
        .any(|s| is_isomorphic(s, &named_structure("square7").unwrap())));
    let eight = enumerate_reduced(8).unwrap();
    let counts = case_counts(&eight);
    for (label, want) in [
        (CaseLabel::N8NoQuad8T, 1),
        (CaseLabel::N8NoQuad7T, 1),
        (CaseLabel::N8Quad, 1),
    ] {
        assert!(counts.contains(&(label, want)), "{counts:?}");
    }
    let unique = eight
        .iter()
        .find(|s| classify(s) == Ok(CaseLabel::N8NoQuad8T))
        .unwrap();
    assert!(is_isomorphic(unique, &eight_three()));
    let quad = eight
        .iter()
        .find(|s| classify(s) == Ok(CaseLabel::N8Quad))
        .unwrap();
    assert!(is_isomorphic(quad, &named_structure("square8").unwrap()));
}

#[test]
fn naive_oracle_n7() {
    let fast = canon(&enumerate_reduced(7).unwrap());
    assert_eq!(fast, naive_reduced(7, &[]));
}

#[test]
fn naive_oracle_n8_with_a_quadruple() {
    let fast: BTreeSet<_> = enumerate_reduced(8)
        .unwrap()
        .iter()
        .filter(|s| s.max_line_size() == 4)
        .map(canonical_form)
        .collect();
    assert_eq!(fast, naive_reduced(8, &[vec![0, 1, 2, 3]]));
}

#[test]
fn golden_blocks_parse_back() {
    let text = census_text(8, &enumerate_reduced(8).unwrap());
    let blocks: Vec<&str> = text
        .split("\n\n")
        .filter(|b| b.starts_with("points"))
        .collect();
    assert_eq!(blocks.len(), 3);
    for b in blocks {
        assert!(parse_inc(b).unwrap().is_reduced());
    }
}
