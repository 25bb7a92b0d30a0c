use std::collections::BTreeSet;

use crate::field::{Field, Rational};
use crate::incidence::structure::{IncidenceStructure, PointId};
use crate::projective::{collinear_unchecked, GeometryError, ProjectiveMap, ProjectivePoint};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizationError {
    #[error("structure has {expected} points but {got} coordinates were given")]
    WrongPointCount { expected: usize, got: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Coordinates for every abstract point of a structure. Construction only
/// checks shape; use [`verify_realization`] for exactness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Realization<F> {
    structure: IncidenceStructure,
    coords: Vec<ProjectivePoint<F>>,
}

impl<F: Field> Realization<F> {
    pub fn new(
        structure: IncidenceStructure,
        coords: Vec<ProjectivePoint<F>>,
    ) -> Result<Self, RealizationError> {
        if coords.len() != structure.n() {
            return Err(RealizationError::WrongPointCount {
                expected: structure.n(),
                got: coords.len(),
            });
        }
        if let Some(first) = coords.first() {
            if coords.iter().any(|c| !c.same_field(first)) {
                return Err(GeometryError::MixedField.into());
            }
        }
        Ok(Self { structure, coords })
    }

    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }

    pub fn coords(&self) -> &[ProjectivePoint<F>] {
        &self.coords
    }

    pub fn point(&self, p: PointId) -> &ProjectivePoint<F> {
        &self.coords[p]
    }

    pub fn into_parts(self) -> (IncidenceStructure, Vec<ProjectivePoint<F>>) {
        (self.structure, self.coords)
    }

    /// Apply a rational projective map to every point.
    pub fn transformed(&self, m: &ProjectiveMap) -> Self {
        Self {
            structure: self.structure.clone(),
            coords: self.coords.iter().map(|p| m.apply(p)).collect(),
        }
    }

    /// Apply a coordinatewise field map (e.g. Galois conjugation).
    pub fn map_field(&self, f: impl Fn(&F) -> F) -> Result<Self, GeometryError> {
        let coords = self
            .coords
            .iter()
            .map(|p| p.map_coords(&f))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            structure: self.structure.clone(),
            coords,
        })
    }
}

impl<F: Field> Realization<F> {
    /// Coordinates converted into another field.
    pub fn lift<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<Realization<G>, GeometryError> {
        let coords = self
            .coords
            .iter()
            .map(|p| ProjectivePoint::new(f(p.x()), f(p.y()), f(p.w())))
            .collect::<Result<_, _>>()?;
        Ok(Realization {
            structure: self.structure.clone(),
            coords,
        })
    }
}

impl Realization<Rational> {
    pub fn rational(
        structure: IncidenceStructure,
        coords: Vec<ProjectivePoint<Rational>>,
    ) -> Result<Self, RealizationError> {
        Self::new(structure, coords)
    }
}

/// Exhaustive exactness check: distinct points, every listed line collinear,
/// and no three points collinear unless a listed line contains all three.
pub fn verify_realization<F: Field>(r: &Realization<F>) -> bool {
    let n = r.structure.n();
    let pts = &r.coords;
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return false;
            }
        }
    }
    let table = r.structure.pair_table();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear_unchecked(&pts[i], &pts[j], &pts[k]) != table.together(i, j, k) {
                    return false;
                }
            }
        }
    }
    true
}

/// All maximal collinear subsets of size at least three among `points`;
/// duplicate points make the result meaningless, so callers check first.
pub fn maximal_collinear_sets<F: Field>(points: &[ProjectivePoint<F>]) -> Vec<Vec<PointId>> {
    let n = points.len();
    let mut found: BTreeSet<Vec<PointId>> = BTreeSet::new();
    let mut covered = vec![false; n * n];
    for i in 0..n {
        for j in i + 1..n {
            if covered[i * n + j] {
                continue;
            }
            let mut set = vec![i, j];
            set.extend(
                (j + 1..n).filter(|&k| collinear_unchecked(&points[i], &points[j], &points[k])),
            );
            for &a in &set {
                for &b in &set {
                    covered[a * n + b] = true;
                }
            }
            if set.len() >= 3 {
                set.sort_unstable();
                found.insert(set);
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn p(x: Rational, y: Rational, w: Rational) -> ProjectivePoint<Rational> {
        ProjectivePoint::new(x, y, w).unwrap()
    }

    pub(crate) fn square7() -> (IncidenceStructure, Vec<ProjectivePoint<Rational>>) {
        // 0..3 square vertices, 4 center, 5 = (1,0,0), 6 = (0,1,0)
        let s = IncidenceStructure::new(
            7,
            vec![
                vec![0, 3, 4],
                vec![1, 2, 4],
                vec![0, 2, 5],
                vec![1, 3, 5],
                vec![0, 1, 6],
                vec![2, 3, 6],
            ],
        )
        .unwrap();
        let c = vec![
            p(int(0), int(0), int(1)),
            p(int(0), int(1), int(1)),
            p(int(1), int(0), int(1)),
            p(int(1), int(1), int(1)),
            p(rat(1, 2), rat(1, 2), int(1)),
            p(int(1), int(0), int(0)),
            p(int(0), int(1), int(0)),
        ];
        (s, c)
    }

    #[test]
    fn square_witness_verifies() {
        let (s, c) = square7();
        let r = Realization::new(s, c).unwrap();
        assert!(verify_realization(&r));
        assert_eq!(maximal_collinear_sets(r.coords()), r.structure().lines());
    }

    #[test]
    fn moved_center_breaks_diagonals() {
        let (s, mut c) = square7();
        c[4] = p(rat(1, 3), rat(1, 3), int(1));
        assert!(!verify_realization(&Realization::new(s, c).unwrap()));
    }

    #[test]
    fn coincident_points_fail() {
        let s = IncidenceStructure::empty(2);
        let q = p(int(1), int(2), int(1));
        assert!(!verify_realization(
            &Realization::new(s, vec![q.clone(), q]).unwrap()
        ));
    }

    #[test]
    fn wrong_length_rejected() {
        let s = IncidenceStructure::empty(2);
        assert!(matches!(
            Realization::new(s, vec![p(int(0), int(0), int(1))]),
            Err(RealizationError::WrongPointCount { .. })
        ));
    }
}
