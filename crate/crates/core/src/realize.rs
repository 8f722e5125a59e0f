//! Coupling between white-pair and black-pair antiroutes.
//!
//! In a drawing with white rotations `π_0 .. π_{r-1}` and black rotations
//! `γ_0 .. γ_4` (cyclic orders of the white vertices around each black
//! vertex), every white pair `i, j` has an antiroute `P_ij` from `π_i` to
//! `π_j` of size `λ_ij`, every black pair `k, ℓ` has an antiroute `Q_kℓ`
//! from `γ_k` to `γ_ℓ`, and `(a_i a_j) ∈ Q_kℓ` exactly when `(k ℓ) ∈ P_ij`.
//!
//! [`fragment_realizable`] enumerates every choice of the `P_ij`, derives the
//! `Q_kℓ` and searches for black rotations they fit. When none exist the
//! whole search is returned as a [`RefutationCertificate`] that
//! [`RefutationCertificate::verify`] can check independently.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cyclic::{
    route_endpoints, route_order, routes_of_size, AntidistanceTable, CyclicPermutation, Route,
    Transposition,
};
use crate::BLACK_VERTICES;

/// The ten black pairs `(k, ℓ)`, `k < ℓ`, in lexicographic order.
pub const BLACK_PAIRS: [(u8, u8); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Position of `(k, ℓ)` (either order) in [`BLACK_PAIRS`].
pub fn black_pair_index(k: u8, l: u8) -> usize {
    let (k, l) = (k.min(l), k.max(l));
    BLACK_PAIRS
        .iter()
        .position(|&p| p == (k, l))
        .expect("black pair")
}

/// `Q_kℓ` for every black pair, indexed like [`BLACK_PAIRS`]. Each set holds
/// transpositions of white indices, sorted.
pub type QMap = [Vec<Transposition>; 10];

/// One antiroute `P_ij` per white pair `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntirouteAssignment {
    pub white_rotations: Vec<CyclicPermutation>,
    pub routes: BTreeMap<(usize, usize), Route>,
}

impl AntirouteAssignment {
    pub fn route(&self, i: usize, j: usize) -> Option<&Route> {
        self.routes.get(&(i.min(j), i.max(j)))
    }

    /// Sum of `|P_ij|` over all pairs.
    pub fn total_size(&self) -> usize {
        self.routes.values().map(Route::len).sum()
    }
}

/// `Q_kℓ = { (a_i a_j) : (k ℓ) ∈ P_ij }`.
pub fn induced_q(a: &AntirouteAssignment) -> QMap {
    let mut q: QMap = Default::default();
    for (&(i, j), route) in &a.routes {
        let white = Transposition::new(i as u8, j as u8).expect("distinct white vertices");
        for t in route.transpositions() {
            let (k, l) = t.symbols();
            q[black_pair_index(k, l)].push(white);
        }
    }
    for set in q.iter_mut() {
        set.sort();
    }
    q
}

/// Black rotations on the white indices fitting a given `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlackRotationProfile {
    pub gamma: [CyclicPermutation; BLACK_VERTICES],
    pub q: QMap,
}

impl BlackRotationProfile {
    /// Whether every `Q_kℓ` is an antiroute from `γ_k` to `γ_ℓ`.
    pub fn is_consistent(&self) -> bool {
        BLACK_PAIRS.iter().enumerate().all(|(idx, &(k, l))| {
            fits(
                &self.gamma[k as usize],
                &self.gamma[l as usize],
                &self.q[idx],
            )
        })
    }
}

fn fits(from: &CyclicPermutation, to: &CyclicPermutation, set: &[Transposition]) -> bool {
    route_order(from, &to.reverse(), set).is_some()
}

/// A node of the black-rotation search: a value for `γ_black` and what
/// became of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaNode {
    pub black: u8,
    pub gamma: CyclicPermutation,
    pub fate: Fate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fate {
    /// `Q_{with,black}` is not an antiroute from `γ_with` to this `γ_black`.
    Conflict { with: u8 },
    /// Consistent so far; the children are every candidate for the next
    /// black vertex (possibly none).
    Expanded(Vec<GammaNode>),
    /// All five black rotations fixed and consistent.
    Complete,
}

/// Candidates for `γ_k` given `γ_0`: reverses of the endpoints of `Q_0k`.
fn candidates(gamma0: &CyclicPermutation, q0k: &[Transposition]) -> Vec<CyclicPermutation> {
    let mut c: Vec<CyclicPermutation> = route_endpoints(gamma0, q0k)
        .iter()
        .map(CyclicPermutation::reverse)
        .collect();
    c.sort();
    c
}

/// Every cyclic permutation of the white indices, sorted.
fn white_orders(r: usize) -> Vec<CyclicPermutation> {
    CyclicPermutation::all(r)
}

/// Searches for black rotations fitting `q`. Returns the search tree, one
/// root per candidate `γ_0`, and the first complete profile in tree order.
pub fn profile_search(q: &QMap, r: usize) -> (Vec<GammaNode>, Option<BlackRotationProfile>) {
    let mut found = None;
    let mut path = Vec::with_capacity(BLACK_VERTICES);
    let roots = white_orders(r)
        .into_iter()
        .map(|g0| expand(q, 0, g0, &mut path, &mut found))
        .collect();
    (roots, found)
}

fn expand(
    q: &QMap,
    black: u8,
    gamma: CyclicPermutation,
    path: &mut Vec<CyclicPermutation>,
    found: &mut Option<BlackRotationProfile>,
) -> GammaNode {
    for j in 1..black {
        if !fits(&path[j as usize], &gamma, &q[black_pair_index(j, black)]) {
            return GammaNode {
                black,
                gamma,
                fate: Fate::Conflict { with: j },
            };
        }
    }
    path.push(gamma);
    let fate = if black as usize == BLACK_VERTICES - 1 {
        if found.is_none() {
            let gamma: [CyclicPermutation; BLACK_VERTICES] =
                path.clone().try_into().expect("five black rotations");
            *found = Some(BlackRotationProfile {
                gamma,
                q: q.clone(),
            });
        }
        Fate::Complete
    } else {
        let next = black + 1;
        let children = candidates(&path[0], &q[black_pair_index(0, next)])
            .into_iter()
            .map(|g| expand(q, next, g, path, found))
            .collect();
        Fate::Expanded(children)
    };
    path.pop();
    GammaNode { black, gamma, fate }
}

/// Black rotations on `r` white indices fitting `q`, if any exist.
pub fn profile_exists(q: &QMap, r: usize) -> Option<BlackRotationProfile> {
    profile_search(q, r).1
}

/// Checks that `roots` is a complete, conflict-only search tree for `q`:
/// every branch ends in a genuine conflict or an empty candidate list and
/// every candidate list is exactly the one the search would produce.
pub fn verify_refutation_tree(q: &QMap, r: usize, roots: &[GammaNode]) -> bool {
    let expected: Vec<CyclicPermutation> = white_orders(r);
    let listed: Vec<CyclicPermutation> = roots.iter().map(|n| n.gamma).collect();
    if listed != expected || roots.iter().any(|n| n.black != 0) {
        return false;
    }
    let mut path = Vec::with_capacity(BLACK_VERTICES);
    roots.iter().all(|n| verify_node(q, n, &mut path))
}

fn verify_node(q: &QMap, node: &GammaNode, path: &mut Vec<CyclicPermutation>) -> bool {
    let k = node.black;
    match &node.fate {
        Fate::Complete => false,
        Fate::Conflict { with } => {
            *with >= 1
                && *with < k
                && !fits(&path[*with as usize], &node.gamma, &q[black_pair_index(*with, k)])
        }
        Fate::Expanded(children) => {
            if k as usize >= BLACK_VERTICES - 1 {
                return false;
            }
            path.push(node.gamma);
            let next = k + 1;
            let expected = candidates(&path[0], &q[black_pair_index(0, next)]);
            let listed: Vec<CyclicPermutation> = children.iter().map(|c| c.gamma).collect();
            let ok = listed == expected
                && children
                    .iter()
                    .all(|c| c.black == next && verify_node(q, c, path));
            path.pop();
            ok
        }
    }
}

/// The refutation of one choice of the `P_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationRecord {
    /// Index into the route options of each white pair, pairs in
    /// lexicographic order.
    pub choice: Vec<usize>,
    pub q: QMap,
    pub tree: Vec<GammaNode>,
}

/// Proof that no black rotations fit any choice of white-pair antiroutes
/// for the given rotations and labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationCertificate {
    pub rotations: Vec<CyclicPermutation>,
    pub labels: Vec<Vec<u32>>,
    /// Every antiroute of the prescribed size, per white pair `i < j`.
    pub route_options: Vec<((usize, usize), Vec<Route>)>,
    pub combinations: Vec<CombinationRecord>,
}

impl RefutationCertificate {
    /// Replays the certificate: recomputes the route options, checks the
    /// combinations are exactly their product in order, that each induced
    /// `Q` is as recorded and that each search tree is a valid refutation.
    pub fn verify(&self) -> bool {
        let r = self.rotations.len();
        if self.labels.len() != r || self.labels.iter().any(|row| row.len() != r) {
            return false;
        }
        let pairs = white_pairs(r);
        if self.route_options.len() != pairs.len() {
            return false;
        }
        for (((i, j), options), &(pi, pj)) in self.route_options.iter().zip(&pairs) {
            if (*i, *j) != (pi, pj) {
                return false;
            }
            let expected = routes_of_size(
                &self.rotations[pi],
                &self.rotations[pj],
                self.labels[pi][pj] as usize,
                true,
            );
            if !same_route_sets(options, &expected) {
                return false;
            }
        }
        let sizes: Vec<usize> = self.route_options.iter().map(|(_, o)| o.len()).collect();
        let all = product(&sizes);
        if all.len() != self.combinations.len() {
            return false;
        }
        all.iter().zip(&self.combinations).all(|(choice, record)| {
            if *choice != record.choice {
                return false;
            }
            let assignment = self.assignment(choice);
            induced_q(&assignment) == record.q && verify_refutation_tree(&record.q, r, &record.tree)
        })
    }

    fn assignment(&self, choice: &[usize]) -> AntirouteAssignment {
        assemble(&self.rotations, &self.route_options, choice)
    }
}

fn same_route_sets(a: &[Route], b: &[Route]) -> bool {
    a.len() == b.len()
        && a
            .iter()
            .zip(b)
            .all(|(x, y)| x.transpositions() == y.transpositions())
}

fn white_pairs(r: usize) -> Vec<(usize, usize)> {
    (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .collect()
}

/// All index vectors below `sizes`, lexicographic, last position fastest.
fn product(sizes: &[usize]) -> Vec<Vec<usize>> {
    if sizes.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = alloc::vec![0; sizes.len()];
    loop {
        out.push(current.clone());
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            current[pos] += 1;
            if current[pos] < sizes[pos] {
                break;
            }
            current[pos] = 0;
        }
    }
}

fn assemble(
    rotations: &[CyclicPermutation],
    options: &[((usize, usize), Vec<Route>)],
    choice: &[usize],
) -> AntirouteAssignment {
    let routes = options
        .iter()
        .zip(choice)
        .map(|((pair, opts), &c)| (*pair, opts[c].clone()))
        .collect();
    AntirouteAssignment {
        white_rotations: rotations.to_vec(),
        routes,
    }
}

/// Outcome of [`fragment_realizable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realizability {
    /// The first choice of `P_ij` (in product order) admitting black
    /// rotations, with those rotations.
    Realizable {
        assignment: AntirouteAssignment,
        profile: BlackRotationProfile,
    },
    Refuted(RefutationCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentVerdict {
    /// Number of `P_ij` choices in total.
    pub combinations: usize,
    /// Number of choices examined before stopping.
    pub examined: usize,
    pub outcome: Realizability,
}

impl FragmentVerdict {
    pub fn is_realizable(&self) -> bool {
        matches!(self.outcome, Realizability::Realizable { .. })
    }
}

/// Decides whether white rotations with these pairwise labels admit
/// antiroutes and black rotations satisfying the coupling. This is a
/// necessary condition for the labelled rotations to occur in a drawing.
pub fn fragment_realizable(rotations: &[CyclicPermutation], labels: &[Vec<u32>]) -> FragmentVerdict {
    let r = rotations.len();
    let route_options: Vec<((usize, usize), Vec<Route>)> = white_pairs(r)
        .into_iter()
        .map(|(i, j)| {
            let size = labels[i][j] as usize;
            ((i, j), routes_of_size(&rotations[i], &rotations[j], size, true))
        })
        .collect();
    let sizes: Vec<usize> = route_options.iter().map(|(_, o)| o.len()).collect();
    let all = product(&sizes);
    let mut records = Vec::with_capacity(all.len());
    for (examined, choice) in all.iter().enumerate() {
        let assignment = assemble(rotations, &route_options, choice);
        let q = induced_q(&assignment);
        let (tree, found) = profile_search(&q, r);
        if let Some(profile) = found {
            return FragmentVerdict {
                combinations: all.len(),
                examined: examined + 1,
                outcome: Realizability::Realizable {
                    assignment,
                    profile,
                },
            };
        }
        records.push(CombinationRecord {
            choice: choice.clone(),
            q,
            tree,
        });
    }
    FragmentVerdict {
        combinations: all.len(),
        examined: all.len(),
        outcome: Realizability::Refuted(RefutationCertificate {
            rotations: rotations.to_vec(),
            labels: labels.to_vec(),
            route_options,
            combinations: records,
        }),
    }
}

/// Number of rotations at antidistance 1 from each of the three given.
pub fn hub_count(
    table: &AntidistanceTable,
    p1: &CyclicPermutation,
    p2: &CyclicPermutation,
    p3: &CyclicPermutation,
) -> usize {
    table
        .rotations()
        .iter()
        .filter(|h| [p1, p2, p3].iter().all(|p| table.antidistance(h, p) == 1))
        .count()
}

/// The hubs of every triple of distinct white rotations: returns the number
/// of triples scanned and the largest hub count seen.
pub fn scan_hub_counts(table: &AntidistanceTable) -> (usize, usize) {
    let rots = table.rotations();
    let mut triples = 0;
    let mut max = 0;
    for a in 0..rots.len() {
        for b in a + 1..rots.len() {
            for c in b + 1..rots.len() {
                triples += 1;
                max = max.max(hub_count(table, &rots[a], &rots[b], &rots[c]));
            }
        }
    }
    (triples, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cp(s: &str) -> CyclicPermutation {
        CyclicPermutation::parse(s).unwrap()
    }

    fn t(s: &str) -> Transposition {
        Transposition::parse(s).unwrap()
    }

    #[test]
    fn empty_q_has_no_profile() {
        let q: QMap = Default::default();
        let (tree, found) = profile_search(&q, 4);
        assert!(found.is_none());
        assert!(verify_refutation_tree(&q, 4, &tree));
    }

    #[test]
    fn tampered_tree_is_rejected() {
        let q: QMap = Default::default();
        let (mut tree, _) = profile_search(&q, 4);
        tree.pop();
        assert!(!verify_refutation_tree(&q, 4, &tree));
    }

    #[test]
    fn found_profile_is_consistent() {
        // The four bag rotations of D_{1,0} with their key labels.
        let rots = [cp("01234"), cp("04231"), cp("01342"), cp("04312")];
        let labels = vec![
            vec![0, 1, 2, 1],
            vec![1, 0, 1, 2],
            vec![2, 1, 0, 1],
            vec![1, 2, 1, 0],
        ];
        let verdict = fragment_realizable(&rots, &labels);
        match verdict.outcome {
            Realizability::Realizable { profile, assignment } => {
                assert!(profile.is_consistent());
                assert_eq!(profile.q, induced_q(&assignment));
            }
            Realizability::Refuted(_) => panic!("fragment should be realizable"),
        }
    }

    #[test]
    fn coupling_rule() {
        let mut routes = BTreeMap::new();
        let rots = vec![cp("01234"), cp("01432"), cp("04312")];
        routes.insert((0, 1), routes_of_size(&rots[0], &rots[1], 1, true)[0].clone());
        routes.insert((0, 2), routes_of_size(&rots[0], &rots[2], 1, true)[0].clone());
        routes.insert((1, 2), routes_of_size(&rots[1], &rots[2], 2, true)[0].clone());
        let a = AntirouteAssignment {
            white_rotations: rots,
            routes,
        };
        let q = induced_q(&a);
        assert_eq!(q[black_pair_index(0, 1)], vec![t("01")]);
        assert_eq!(q[black_pair_index(1, 2)], vec![t("02")]);
        assert_eq!(q[black_pair_index(3, 4)], vec![t("12")]);
        assert_eq!(q[black_pair_index(0, 2)], vec![t("12")]);
        assert_eq!(a.total_size(), 4);
    }

    #[test]
    fn product_order() {
        assert_eq!(
            product(&[2, 1, 2]),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0], vec![1, 0, 1]]
        );
        assert!(product(&[2, 0]).is_empty());
        assert_eq!(product(&[]), vec![Vec::<usize>::new()]);
    }
}
