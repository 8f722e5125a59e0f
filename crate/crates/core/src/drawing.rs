//! Abstract drawings of `K_{5,n}`: white rotations plus pairwise crossing
//! counts.

use alloc::vec::Vec;

use crate::cyclic::{AntidistanceTable, CyclicPermutation, Relabelling};
use crate::{Error, Result, BLACK_VERTICES};

/// `⌊m/2⌋⌊(m−1)/2⌋⌊n/2⌋⌊(n−1)/2⌋`.
pub fn zarankiewicz_number(m: u64, n: u64) -> u64 {
    let half = |x: u64| (x / 2) * (x.saturating_sub(1) / 2);
    half(m) * half(n)
}

/// Crossings of an optimal drawing of `K_{5,n}`.
pub fn optimal_crossings(n: usize) -> u64 {
    zarankiewicz_number(BLACK_VERTICES as u64, n as u64)
}

/// White rotations `rotations[i]` and the crossing count `label(i, j)`
/// between the stars of white vertices `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbstractDrawing {
    rotations: Vec<CyclicPermutation>,
    lambda: Vec<u32>,
}

impl AbstractDrawing {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a drawing from a full `n × n` label matrix. The matrix is taken
    /// as given; [`validate`](Self::validate) reports asymmetry and the like.
    pub fn new(rotations: Vec<CyclicPermutation>, lambda: &[Vec<u32>]) -> Result<Self> {
        let n = rotations.len();
        for pi in &rotations {
            if pi.len() != BLACK_VERTICES || pi.word().iter().any(|&s| s as usize >= BLACK_VERTICES)
            {
                return Err(Error::NotWhiteRotation(*pi));
            }
        }
        if lambda.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: lambda.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in lambda {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Ok(Self {
            rotations,
            lambda: flat,
        })
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn rotations(&self) -> &[CyclicPermutation] {
        &self.rotations
    }

    pub fn rotation(&self, i: usize) -> CyclicPermutation {
        self.rotations[i]
    }

    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.lambda[i * self.n() + j]
    }

    /// Sets both `label(i, j)` and `label(j, i)`.
    pub fn set_label(&mut self, i: usize, j: usize, value: u32) {
        let n = self.n();
        self.lambda[i * n + j] = value;
        self.lambda[j * n + i] = value;
    }

    pub fn labels(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        self.lambda.chunks(n.max(1)).take(n).map(<[u32]>::to_vec).collect()
    }

    /// Appends a white vertex; `labels[k]` is its crossing count with
    /// vertex `k`. Returns the new index.
    pub fn push(&mut self, rotation: CyclicPermutation, labels: &[u32]) -> Result<usize> {
        let n = self.n();
        if labels.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        if rotation.len() != BLACK_VERTICES {
            return Err(Error::NotWhiteRotation(rotation));
        }
        let mut flat = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..n {
            flat.extend_from_slice(&self.lambda[i * n..(i + 1) * n]);
            flat.push(labels[i]);
        }
        flat.extend_from_slice(labels);
        flat.push(0);
        self.lambda = flat;
        self.rotations.push(rotation);
        Ok(n)
    }

    /// The drawing induced on the white vertices not in `removed`.
    pub fn without(&self, removed: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.n()).filter(|i| !removed.contains(i)).collect();
        self.induced(&keep)
    }

    /// The drawing induced on `keep`, in that order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let rotations = keep.iter().map(|&i| self.rotations[i]).collect();
        let mut lambda = Vec::with_capacity(keep.len() * keep.len());
        for &i in keep {
            for &j in keep {
                lambda.push(self.label(i, j));
            }
        }
        Self { rotations, lambda }
    }

    /// `cr_D(a_i)`: crossings involving the star of `a_i`.
    pub fn row_sum(&self, i: usize) -> u64 {
        (0..self.n())
            .filter(|&j| j != i)
            .map(|j| u64::from(self.label(i, j)))
            .sum()
    }

    /// Sum of the labels over unordered pairs.
    pub fn total_crossings(&self) -> u64 {
        let n = self.n();
        let mut total = 0;
        for i in 0..n {
            for j in i + 1..n {
                total += u64::from(self.label(i, j));
            }
        }
        total
    }

    pub fn is_optimal(&self) -> bool {
        self.total_crossings() == optimal_crossings(self.n())
    }

    /// Pairs `(i, j)`, `i < j`, with label 0, in lexicographic order.
    pub fn antipodal_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.label(i, j) == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Vertices grouped by rotation, groups in order of first appearance.
    pub fn rotation_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, pi) in self.rotations.iter().enumerate() {
            match classes.iter_mut().find(|c| self.rotations[c[0]] == *pi) {
                Some(c) => c.push(i),
                None => classes.push(alloc::vec![i]),
            }
        }
        classes
    }

    /// Crossings of `a_i` with vertices of other rotations.
    fn foreign_sum(&self, i: usize) -> u64 {
        (0..self.n())
            .filter(|&j| self.rotations[j] != self.rotations[i])
            .map(|j| u64::from(self.label(i, j)))
            .sum()
    }

    pub fn clean_report(&self) -> CleanReport {
        let n = self.n();
        let mut report = CleanReport::default();
        for i in 0..n {
            for j in i + 1..n {
                let same = self.rotations[i] == self.rotations[j];
                if same && self.label(i, j) != 4 {
                    report.same_rotation_not_four.push((i, j));
                }
                if self.label(i, j) > 4 {
                    report.above_four.push((i, j));
                }
                if same {
                    for k in (0..n).filter(|&k| k != i && k != j) {
                        if self.rotations[k] != self.rotations[i]
                            && self.label(i, k) != self.label(j, k)
                        {
                            report.nonuniform.push((i, j, k));
                        }
                    }
                }
            }
        }
        report
    }

    /// Whether same-rotation vertices cross 4 times, rotation classes cross
    /// uniformly and no label exceeds 4.
    pub fn is_clean(&self) -> bool {
        self.clean_report().is_clean()
    }

    /// Makes the drawing clean without adding crossings.
    ///
    /// Each rotation class first collapses onto its member with the fewest
    /// crossings against other rotations: every classmate copies that
    /// member's row and classmates cross 4 times. Then, while some pair
    /// crosses more than 4 times, the vertex with the larger row sum is moved
    /// into the other's class. Ties go to the lower index.
    pub fn clean(&self) -> Self {
        let mut d = self.clone();
        for class in self.rotation_classes() {
            let rep = *class
                .iter()
                .min_by_key(|&&i| (d.foreign_sum(i), i))
                .expect("classes are nonempty");
            for &j in &class {
                if j != rep {
                    d.copy_onto(rep, j);
                }
            }
        }
        while let Some((i, k)) = d.first_label_above_four() {
            let (anchor, moved) = if (d.row_sum(i), i) <= (d.row_sum(k), k) {
                (i, k)
            } else {
                (k, i)
            };
            d.copy_onto(anchor, moved);
        }
        d
    }

    /// Gives `moved` the rotation and row of `anchor`, crossing it 4 times.
    fn copy_onto(&mut self, anchor: usize, moved: usize) {
        self.rotations[moved] = self.rotations[anchor];
        for k in 0..self.n() {
            if k != anchor && k != moved {
                let v = if self.rotations[k] == self.rotations[anchor] {
                    4
                } else {
                    self.label(anchor, k)
                };
                self.set_label(moved, k, v);
            }
        }
        self.set_label(anchor, moved, 4);
    }

    fn first_label_above_four(&self) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.label(i, j) > 4)
    }

    /// The same drawing with every rotation relabelled by `sigma`.
    pub fn relabel(&self, sigma: &Relabelling) -> Result<Self> {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.relabel(sigma))
            .collect::<Result<_>>()?;
        Ok(Self {
            rotations,
            lambda: self.lambda.clone(),
        })
    }

    /// The mirror image: every rotation reversed, labels unchanged.
    pub fn mirrored(&self) -> Self {
        Self {
            rotations: self.rotations.iter().map(CyclicPermutation::reverse).collect(),
            lambda: self.lambda.clone(),
        }
    }

    fn sorted_multiset(&self) -> Vec<CyclicPermutation> {
        let mut m = self.rotations.clone();
        m.sort();
        m
    }

    /// Validates against a freshly built antidistance table.
    pub fn validate(&self) -> ValidationReport {
        self.validate_with(&AntidistanceTable::new())
    }

    pub fn validate_with(&self, table: &AntidistanceTable) -> ValidationReport {
        let n = self.n();
        let mut report = ValidationReport::default();
        for i in 0..n {
            if self.label(i, i) != 0 {
                report.nonzero_diagonal.push(i);
            }
            for j in i + 1..n {
                if self.label(i, j) != self.label(j, i) {
                    report.asymmetric.push((i, j));
                }
                if self.label(i, j) < table.antidistance(&self.rotations[i], &self.rotations[j]) {
                    report.below_antidistance.push((i, j));
                }
                for k in j + 1..n {
                    let s = self.label(i, j) + self.label(j, k) + self.label(i, k);
                    if s % 2 != 0 || s < 4 {
                        report.triangle.push((i, j, k));
                    }
                }
            }
        }
        report
    }
}

/// Isomorphism of drawings: some relabelling of the black vertices maps one
/// rotation multiset onto the other. Labels play no part. Returns the first
/// witness in lexicographic order of images.
pub fn are_isomorphic(d1: &AbstractDrawing, d2: &AbstractDrawing) -> Option<Relabelling> {
    if d1.n() != d2.n() {
        return None;
    }
    let target = d2.sorted_multiset();
    Relabelling::all(BLACK_VERTICES).into_iter().find(|sigma| {
        let mut image: Vec<CyclicPermutation> = d1
            .rotations
            .iter()
            .map(|r| r.relabel(sigma).expect("white rotation"))
            .collect();
        image.sort();
        image == target
    })
}

/// Violations of the cleanliness conditions, by offending indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CleanReport {
    /// Same-rotation pairs whose label is not 4.
    pub same_rotation_not_four: Vec<(usize, usize)>,
    /// `(i, j, k)`: `i`, `j` share a rotation but cross `k` differently.
    pub nonuniform: Vec<(usize, usize, usize)>,
    pub above_four: Vec<(usize, usize)>,
}

impl CleanReport {
    pub fn is_clean(&self) -> bool {
        self.same_rotation_not_four.is_empty()
            && self.nonuniform.is_empty()
            && self.above_four.is_empty()
    }
}

/// Violations of the drawing invariants, by offending indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub asymmetric: Vec<(usize, usize)>,
    pub nonzero_diagonal: Vec<usize>,
    /// Triples whose three labels sum to an odd number or to less than 4.
    pub triangle: Vec<(usize, usize, usize)>,
    /// Pairs crossing fewer times than the antidistance of their rotations.
    pub below_antidistance: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.asymmetric.is_empty()
            && self.nonzero_diagonal.is_empty()
            && self.triangle.is_empty()
            && self.below_antidistance.is_empty()
    }
}
