//! The incidence-counting identities used to split the n = 8 cases.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Infeasible {
    #[error("no integer count of degree-3 points fits {points} points and {triples} triples")]
    DegreeCount { points: i64, triples: i64 },
    #[error(
        "no integer count of rich triples fits {rich_points} degree-3 points and {triples} triples"
    )]
    RichTriples { rich_points: i64, triples: i64 },
}

/// Number `a` of degree-3 points when every point has degree 2 or 3 and
/// there are `triples` lines of size 3: solves `3a + 2(n - a) = 3 triples`.
pub fn count_identity_check(n: i64, triples: i64) -> Result<i64, Infeasible> {
    let a = 3 * triples - 2 * n;
    if (0..=n).contains(&a) {
        Ok(a)
    } else {
        Err(Infeasible::DegreeCount { points: n, triples })
    }
}

/// Number `x` of triples made only of degree-3 points, from
/// `(3x + 2(triples - x)) / 3 = a`.
pub fn rich_triple_count(a: i64, triples: i64) -> Result<i64, Infeasible> {
    let x = 3 * a - 2 * triples;
    if (0..=triples).contains(&x) {
        Ok(x)
    } else {
        Err(Infeasible::RichTriples {
            rich_points: a,
            triples,
        })
    }
}
