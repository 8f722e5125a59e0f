//! Explicit optimal drawings and the superimposition calculus.
//!
//! `D_{r,s}` places white vertices on six fixed rotations with bag sizes
//! `(r+s, r, r, r+s, s, s)`; it is antipodal-free and optimal. Zarankiewicz
//! drawings split the white vertices into two classes with reverse
//! rotations. Every optimal drawing of `K_{5,n}` with `n` even decomposes
//! into antipodal pairs plus a residual `D_{r,s}`.

use alloc::vec::Vec;

use crate::cyclic::{AntidistanceTable, CyclicPermutation};
use crate::drawing::{are_isomorphic, optimal_crossings, AbstractDrawing};
use crate::keycore::KeyGraph;
use crate::{Error, Result};

/// The six rotations underlying `D_{r,s}`.
pub const DRS_ROTATIONS: [&str; 6] = ["01234", "04231", "01342", "04312", "01432", "02314"];

/// Crossings between bags of `D_{r,s}`.
pub const DRS_LABELS: [[u32; 6]; 6] = [
    [0, 1, 2, 1, 1, 2],
    [1, 0, 1, 2, 2, 3],
    [2, 1, 0, 1, 3, 2],
    [1, 2, 1, 0, 2, 1],
    [1, 2, 3, 2, 0, 1],
    [2, 3, 2, 1, 1, 0],
];

pub fn drs_rotations() -> [CyclicPermutation; 6] {
    DRS_ROTATIONS.map(|w| CyclicPermutation::parse(w).expect("valid rotation"))
}

/// Bag sizes of `D_{r,s}` in rotation order.
pub fn drs_bag_sizes(r: usize, s: usize) -> [usize; 6] {
    [r + s, r, r, r + s, s, s]
}

/// The key on all six rotations, whatever bags happen to be empty.
pub fn drs_key() -> KeyGraph {
    let labels: Vec<Vec<u32>> = DRS_LABELS.iter().map(|row| row.to_vec()).collect();
    KeyGraph::new(drs_rotations().to_vec(), &labels).expect("valid key")
}

/// A drawing from bags: `bags[b]` copies of `rotations[b]`, crossing 4 times
/// within a bag and `labels[b][c]` times across bags.
pub fn from_bags(
    rotations: &[CyclicPermutation],
    labels: &[Vec<u32>],
    bags: &[usize],
) -> AbstractDrawing {
    let owner: Vec<usize> = bags
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| core::iter::repeat_n(b, size))
        .collect();
    let n = owner.len();
    let rots = owner.iter().map(|&b| rotations[b]).collect();
    let matrix: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, owner[i] == owner[j]) {
                    (true, _) => 0,
                    (false, true) => 4,
                    (false, false) => labels[owner[i]][owner[j]],
                })
                .collect()
        })
        .collect();
    AbstractDrawing::new(rots, &matrix).expect("white rotations and square labels")
}

/// `D_{r,s}`: an antipodal-free optimal drawing of `K_{5,4(r+s)}`.
///
/// # Panics
///
/// If the built-in key fails validation, which would be a bug.
pub fn build_drs(r: usize, s: usize) -> AbstractDrawing {
    let key = drs_key();
    let report = from_bags(key.vertices(), &key.labels(), &[1; 6]).validate();
    assert!(report.is_valid(), "built-in D_(r,s) key is invalid: {report:?}");
    from_bags(key.vertices(), &key.labels(), &drs_bag_sizes(r, s))
}

/// The Zarankiewicz drawing: `⌊n/2⌋` vertices on `(01234)` followed by
/// `⌈n/2⌉` on its reverse; classes cross 0 times, classmates 4 times.
pub fn build_zarankiewicz(n: usize) -> AbstractDrawing {
    let pi = CyclicPermutation::identity(5).expect("five symbols");
    let rotations = [pi, pi.reverse()];
    let labels = alloc::vec![alloc::vec![0, 0], alloc::vec![0, 0]];
    from_bags(&rotations, &labels, &[n / 2, n - n / 2])
}

/// Appends an antipodal pair `u, v` with reverse rotations `ρ, ρ̄`.
///
/// Against each existing vertex `k`, `u` crosses `antidistance(ρ, rot_k)`
/// times and `v` the remaining `4 −` that. Among the rotations `ρ` giving a
/// valid drawing, the one introducing the fewest new zero labels (besides
/// the one between `u` and `v`) wins, ties going to the smallest `ρ`.
pub fn add_antipodal_pair(d: &AbstractDrawing) -> Result<AbstractDrawing> {
    let table = AntidistanceTable::new();
    let n = d.n();
    let mut best: Option<(usize, AbstractDrawing)> = None;
    for rho in table.rotations() {
        let Some(candidate) = superimpose(d, rho, &table) else {
            continue;
        };
        let zeros = (0..n)
            .filter(|&k| candidate.label(n, k) == 0 || candidate.label(n + 1, k) == 0)
            .count();
        if best.as_ref().is_none_or(|(z, _)| zeros < *z) {
            let done = zeros == 0;
            best = Some((zeros, candidate));
            if done {
                break;
            }
        }
    }
    best.map(|(_, d)| d).ok_or(Error::NoCompatibleAntipodalPair)
}

fn superimpose(
    d: &AbstractDrawing,
    rho: &CyclicPermutation,
    table: &AntidistanceTable,
) -> Option<AbstractDrawing> {
    let rho_bar = rho.reverse();
    let mut to_u = Vec::with_capacity(d.n());
    let mut to_v = Vec::with_capacity(d.n());
    for k in 0..d.n() {
        let lu = table.antidistance(rho, &d.rotation(k));
        if lu > 4 {
            return None;
        }
        let lv = 4 - lu;
        if lv < table.antidistance(&rho_bar, &d.rotation(k)) {
            return None;
        }
        to_u.push(lu);
        to_v.push(lv);
    }
    let mut out = d.clone();
    out.push(*rho, &to_u).ok()?;
    to_v.push(0);
    out.push(rho_bar, &to_v).ok()?;
    out.validate_with(table).is_valid().then_some(out)
}

/// `(r, s)` such that `d` is isomorphic to `D_{r,s}`, preferring larger `r`.
///
/// `D_{r,0}` and `D_{0,r}` are isomorphic, as are `D_{r,r}` and itself, but
/// for `r ≠ s` both positive `D_{s,r}` is only the mirror image of `D_{r,s}`
/// (reverse every rotation) and not isomorphic to it. So the answer has
/// `r ≥ s` except for those mirror drawings.
pub fn identify_drs(d: &AbstractDrawing) -> Option<(usize, usize)> {
    let n = d.n();
    if n % 4 != 0 {
        return None;
    }
    let total = n / 4;
    (0..=total)
        .rev()
        .map(|r| (r, total - r))
        .find(|&(r, s)| are_isomorphic(d, &build_drs(r, s)).is_some())
}

/// An optimal drawing split into antipodal pairs and a residual `D_{r,s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Removed pairs, as indices into the input drawing, in removal order.
    pub pairs: Vec<(usize, usize)>,
    /// Input indices of the residual's vertices.
    pub residual_indices: Vec<usize>,
    pub residual: AbstractDrawing,
    /// Crossings after each removal; each equals the optimum for its size.
    pub intermediate_crossings: Vec<u64>,
    pub identified: (usize, usize),
}

/// Strips the lexicographically least antipodal pair while one exists and
/// identifies the antipodal-free residual as some `D_{r,s}`.
pub fn decompose(d: &AbstractDrawing) -> Result<Decomposition> {
    if d.n() % 2 != 0 {
        return Err(Error::OddWhiteCount(d.n()));
    }
    check_optimal(d)?;
    let mut current = d.clone();
    let mut indices: Vec<usize> = (0..d.n()).collect();
    let mut pairs = Vec::new();
    let mut intermediate = Vec::new();
    while let Some(&(i, j)) = current.antipodal_pairs().first() {
        let (oi, oj) = (indices[i], indices[j]);
        pairs.push((oi, oj));
        current = current.without(&[i, j]);
        indices.retain(|&x| x != oi && x != oj);
        check_optimal(&current)?;
        intermediate.push(current.total_crossings());
    }
    let identified = identify_drs(&current).ok_or(Error::UnidentifiedResidual(current.n()))?;
    Ok(Decomposition {
        pairs,
        residual_indices: indices,
        residual: current,
        intermediate_crossings: intermediate,
        identified,
    })
}

fn check_optimal(d: &AbstractDrawing) -> Result<()> {
    let crossings = d.total_crossings();
    let optimal = optimal_crossings(d.n());
    if crossings == optimal {
        Ok(())
    } else {
        Err(Error::NotOptimal { crossings, optimal })
    }
}
