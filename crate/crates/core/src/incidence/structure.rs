use std::fmt;

/// Index of an abstract point, `0..n`.
pub type PointId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("line {line} has {size} points; lines need at least 3")]
    LineTooSmall { line: usize, size: usize },
    #[error("line {line} mentions point {point}, outside 0..{n}")]
    PointOutOfRange { line: usize, point: usize, n: usize },
    #[error("line {line} lists point {point} twice")]
    RepeatedPoint { line: usize, point: usize },
    #[error("points {0} and {1} lie on two listed lines")]
    PairCoveredTwice(PointId, PointId),
    #[error("point {point} out of range 0..{n}")]
    NoSuchPoint { point: PointId, n: usize },
}

/// A finite partial linear space: `n` points and a list of maximal collinear
/// sets ("lines") of size at least three, any two meeting in at most one point.
///
/// Lines are kept sorted internally and the line list is sorted, so derived
/// equality and ordering are label-sensitive structural comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncidenceStructure {
    n: usize,
    lines: Vec<Vec<PointId>>,
}

impl IncidenceStructure {
    pub fn new(n: usize, lines: Vec<Vec<PointId>>) -> Result<Self, StructureError> {
        let mut lines = lines;
        for (i, l) in lines.iter_mut().enumerate() {
            if let Some(&p) = l.iter().find(|&&p| p >= n) {
                return Err(StructureError::PointOutOfRange {
                    line: i,
                    point: p,
                    n,
                });
            }
            l.sort_unstable();
            if let Some(w) = l.windows(2).find(|w| w[0] == w[1]) {
                return Err(StructureError::RepeatedPoint {
                    line: i,
                    point: w[0],
                });
            }
            if l.len() < 3 {
                return Err(StructureError::LineTooSmall {
                    line: i,
                    size: l.len(),
                });
            }
        }
        let mut seen = vec![false; n * n];
        for l in &lines {
            for (a, &p) in l.iter().enumerate() {
                for &q in &l[a + 1..] {
                    if std::mem::replace(&mut seen[p * n + q], true) {
                        return Err(StructureError::PairCoveredTwice(p, q));
                    }
                }
            }
        }
        lines.sort();
        Ok(Self { n, lines })
    }

    /// `n` points, no lines.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            lines: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lines(&self) -> &[Vec<PointId>] {
        &self.lines
    }

    pub fn degree(&self, p: PointId) -> Result<usize, StructureError> {
        if p >= self.n {
            return Err(StructureError::NoSuchPoint {
                point: p,
                n: self.n,
            });
        }
        Ok(self.lines.iter().filter(|l| l.contains(&p)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for l in &self.lines {
            for &p in l {
                d[p] += 1;
            }
        }
        d
    }

    /// Indices of the lines through `p`.
    pub fn lines_through(&self, p: PointId) -> impl Iterator<Item = usize> + '_ {
        self.lines
            .iter()
            .enumerate()
            .filter(move |(_, l)| l.contains(&p))
            .map(|(i, _)| i)
    }

    pub fn max_line_size(&self) -> usize {
        self.lines.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of lines with exactly three points.
    pub fn triple_count(&self) -> usize {
        self.lines.iter().filter(|l| l.len() == 3).count()
    }

    /// Total point-line incidences.
    pub fn incidences(&self) -> usize {
        self.lines.iter().map(Vec::len).sum()
    }

    pub fn pair_table(&self) -> PairTable {
        PairTable::new(self)
    }

    /// Relabel by `perm[old] = new`.
    pub fn relabel(&self, perm: &[PointId]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length");
        let lines = self
            .lines
            .iter()
            .map(|l| l.iter().map(|&p| perm[p]).collect())
            .collect();
        Self::new(self.n, lines).expect("relabeling preserves validity")
    }

    /// True when every point has degree at least 2 and every line has at
    /// least two points of degree at least 3.
    pub fn is_reduced(&self) -> bool {
        let deg = self.degrees();
        deg.iter().all(|&d| d >= 2)
            && self
                .lines
                .iter()
                .all(|l| l.iter().filter(|&&p| deg[p] >= 3).count() >= 2)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, lines: Vec<Vec<PointId>>) -> Self {
        debug_assert!(Self::new(n, lines.clone()).is_ok());
        let mut lines = lines;
        lines.sort();
        Self { n, lines }
    }
}

impl fmt::Display for IncidenceStructure {
    /// The `.inc` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points {}", self.n)?;
        for l in &self.lines {
            write!(f, "line")?;
            for p in l {
                write!(f, " {p}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dense lookup of which line (if any) contains a pair of points.
#[derive(Clone, Debug)]
pub struct PairTable {
    n: usize,
    cell: Vec<u32>,
}

const NO_LINE: u32 = u32::MAX;

impl PairTable {
    pub fn new(s: &IncidenceStructure) -> Self {
        Self::from_lines(s.n, &s.lines)
    }

    pub(crate) fn from_lines(n: usize, lines: &[Vec<PointId>]) -> Self {
        let mut cell = vec![NO_LINE; n * n];
        for (i, l) in lines.iter().enumerate() {
            for &p in l {
                for &q in l {
                    if p != q {
                        cell[p * n + q] = i as u32;
                    }
                }
            }
        }
        Self { n, cell }
    }

    pub fn line_of(&self, p: PointId, q: PointId) -> Option<usize> {
        let c = self.cell[p * self.n + q];
        (c != NO_LINE).then_some(c as usize)
    }

    /// Whether three distinct points lie together on a listed line.
    pub fn together(&self, p: PointId, q: PointId, r: PointId) -> bool {
        match self.line_of(p, q) {
            Some(l) => self.line_of(p, r) == Some(l),
            None => false,
        }
    }
}
