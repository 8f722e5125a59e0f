//! The linear system of a key: one equation per rotation,
//! `2 t_i + Σ_{j≠i} (λ_ij − 2) t_j = 0`, where `t_i` counts the white
//! vertices carrying rotation `i`.
//!
//! All arithmetic is exact.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::keycore::KeyGraph;
use crate::{Error, Result};

type Q = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KeyLinearSystem {
    m: usize,
    coeffs: Vec<i64>,
}

impl KeyLinearSystem {
    pub fn from_key(k: &KeyGraph) -> Self {
        Self::from_labels(&k.labels()).expect("key labels are square")
    }

    /// Builds the system from a square label matrix; the diagonal is ignored.
    pub fn from_labels(labels: &[Vec<u32>]) -> Result<Self> {
        let m = labels.len();
        let mut coeffs = Vec::with_capacity(m * m);
        for (i, row) in labels.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: row.len(),
                });
            }
            for (j, &l) in row.iter().enumerate() {
                coeffs.push(if i == j { 2 } else { i64::from(l) - 2 });
            }
        }
        Ok(Self { m, coeffs })
    }

    pub fn variable_count(&self) -> usize {
        self.m
    }

    pub fn coefficient(&self, i: usize, j: usize) -> i64 {
        self.coeffs[i * self.m + j]
    }

    /// Coefficients of equation `i`.
    pub fn equation(&self, i: usize) -> Vec<i64> {
        self.coeffs[i * self.m..(i + 1) * self.m].to_vec()
    }

    /// Coefficient-wise sum of the given equations.
    pub fn add_equations(&self, rows: &[usize]) -> Vec<i64> {
        let mut sum = alloc::vec![0; self.m];
        for &i in rows {
            for (s, c) in sum.iter_mut().zip(self.equation(i)) {
                *s += c;
            }
        }
        sum
    }

    /// Whether `t` satisfies every equation exactly.
    pub fn satisfied_by(&self, t: &[u64]) -> bool {
        t.len() == self.m
            && (0..self.m).all(|i| {
                (0..self.m)
                    .map(|j| self.coefficient(i, j) * t[j] as i64)
                    .sum::<i64>()
                    == 0
            })
    }

    /// A basis of the rational null space, each vector scaled to coprime
    /// integers with its last nonzero entry positive.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        let m = self.m;
        let rows: Vec<Vec<Q>> = (0..m)
            .map(|i| (0..m).map(|j| Q::from_integer(self.coefficient(i, j))).collect())
            .collect();
        let (rref, pivots) = reduce(rows, m);
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = alloc::vec![Q::from_integer(0); m];
                v[f] = Q::from_integer(1);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -rref[r][f];
                }
                primitive(&v)
            })
            .collect()
    }

    pub fn kernel_rank(&self) -> usize {
        self.kernel_basis().len()
    }

    /// All vectors of positive integers summing to `n` that satisfy the
    /// system, in lexicographic order.
    pub fn positive_integral_solutions(&self, n: u64) -> SolutionSet {
        let kernel_rank = self.kernel_rank();
        let m = self.m;
        if m == 0 || (n as usize) < m || n > i64::MAX as u64 / 4 {
            return SolutionSet {
                solutions: Vec::new(),
                kernel_rank,
            };
        }
        // Rows: the equations, then Σ t = n; last column is the right side.
        let mut rows: Vec<Vec<Q>> = (0..m)
            .map(|i| {
                let mut r: Vec<Q> = (0..m)
                    .map(|j| Q::from_integer(self.coefficient(i, j)))
                    .collect();
                r.push(Q::from_integer(0));
                r
            })
            .collect();
        let mut sum_row = alloc::vec![Q::from_integer(1); m];
        sum_row.push(Q::from_integer(n as i64));
        rows.push(sum_row);
        let (rref, pivots) = reduce(rows, m);
        let inconsistent = rref
            .iter()
            .skip(pivots.len())
            .any(|r| r[m] != Q::from_integer(0));
        let mut solutions = Vec::new();
        if !inconsistent {
            let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
            let mut t = alloc::vec![0u64; m];
            let search = Search {
                m,
                n,
                rref: &rref,
                pivots: &pivots,
                free: &free,
            };
            search.descend(0, 0, &mut t, &mut solutions);
            solutions.sort();
        }
        SolutionSet {
            solutions,
            kernel_rank,
        }
    }

    /// Every `n` in `1..=n_max` with at least one positive integral solution.
    pub fn solvable_sums(&self, n_max: u64) -> Vec<u64> {
        (1..=n_max)
            .filter(|&n| !self.positive_integral_solutions(n).solutions.is_empty())
            .collect()
    }
}

struct Search<'a> {
    m: usize,
    n: u64,
    rref: &'a [Vec<Q>],
    pivots: &'a [usize],
    free: &'a [usize],
}

impl Search<'_> {
    fn descend(&self, depth: usize, used: u64, t: &mut [u64], out: &mut Vec<Vec<u64>>) {
        if depth == self.free.len() {
            for (r, &p) in self.pivots.iter().enumerate() {
                let mut value = self.rref[r][self.m];
                for &f in self.free {
                    value -= self.rref[r][f] * Q::from_integer(t[f] as i64);
                }
                if !value.is_integer() || *value.numer() < 1 {
                    return;
                }
                t[p] = *value.numer() as u64;
            }
            out.push(t.to_vec());
            return;
        }
        // Every variable is at least 1, so later ones need room.
        let reserve = (self.m - depth - 1) as u64;
        let mut v = 1;
        while used + v + reserve <= self.n {
            t[self.free[depth]] = v;
            self.descend(depth + 1, used + v, t, out);
            v += 1;
        }
    }
}

/// Reduced row echelon form of the first `cols` columns (any further columns
/// are carried along). Returns the rows and the pivot column of each
/// leading row.
fn reduce(mut rows: Vec<Vec<Q>>, cols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let zero = Q::from_integer(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != zero) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != zero {
                let factor = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (rows, pivots)
}

fn primitive(v: &[Q]) -> Vec<i64> {
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<i64> = v.iter().map(|x| (x * lcm).to_integer()).collect();
    let gcd = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if gcd > 1 {
        for x in ints.iter_mut() {
            *x /= gcd;
        }
    }
    if ints.iter().rev().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in ints.iter_mut() {
            *x = -*x;
        }
    }
    ints
}

/// Positive integral solutions of a key system with a fixed coordinate sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub solutions: Vec<Vec<u64>>,
    /// Dimension of the rational null space.
    pub kernel_rank: usize,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// Terms of one equation; zero coefficients give empty strings.
fn row_terms(coeffs: &[i64]) -> Vec<String> {
    let mut first = true;
    coeffs
        .iter()
        .enumerate()
        .map(|(j, &c)| {
            if c == 0 {
                return String::new();
            }
            let mag = match c.unsigned_abs() {
                1 => alloc::format!("t_{j}"),
                k => alloc::format!("{k}t_{j}"),
            };
            let term = match (first, c < 0) {
                (true, false) => mag,
                (true, true) => alloc::format!("-{mag}"),
                (false, false) => alloc::format!("+ {mag}"),
                (false, true) => alloc::format!("- {mag}"),
            };
            first = false;
            term
        })
        .collect()
}

impl fmt::Display for KeyLinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.m).map(|i| row_terms(&self.equation(i))).collect();
        let widths: Vec<usize> = (0..self.m)
            .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        let label_width = alloc::format!("E_{}:", self.m.saturating_sub(1)).len();
        for (i, row) in rows.iter().enumerate() {
            let label = alloc::format!("E_{i}:");
            write!(f, "{label:<label_width$}")?;
            for (term, &w) in row.iter().zip(&widths) {
                write!(f, " {term:>w$}")?;
            }
            writeln!(f, " = 0")?;
        }
        Ok(())
    }
}
