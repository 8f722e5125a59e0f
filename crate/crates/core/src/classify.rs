//! Classification of antipodal-free optimal drawings of `K_{5,n}` at small
//! `n`.
//!
//! Candidate keys are enumerated as cores (label-1 graphs) up to
//! isomorphism together with a completion of the remaining labels, pushed
//! through the structural filters in order of cost, then through the key
//! linear system at `n`. Survivors get rotations assigned, their 4-vertex
//! fragments are checked with the realize engine, and every resulting
//! drawing is identified as some `D_{r,s}` by explicit construction.
//!
//! Two facts are taken as given rather than re-derived: optimal means
//! `Z(5, n)` crossings, and keys of antipodal-free optimal drawings have no
//! label 4 (together with antipodal-freeness, all labels lie in `{1,2,3}`).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::construct::{build_drs, decompose, from_bags, identify_drs};
use crate::cyclic::{AntidistanceTable, CyclicPermutation, Relabelling};
use crate::drawing::{are_isomorphic, optimal_crossings, AbstractDrawing};
use crate::graph::{bits, graphs_up_to_isomorphism, SimpleGraph};
use crate::keycore::lonely_path;
use crate::linsys::KeyLinearSystem;
use crate::realize::{fragment_realizable, Realizability, RefutationCertificate};
use crate::{Error, Result, BLACK_VERTICES};

/// Largest core considered.
pub const MAX_CORE_VERTICES: usize = 7;

/// Default upper bound on `n` for classification.
pub const DESK_BOUND: u64 = 24;

/// Facts the pipeline assumes instead of proving.
pub const ASSUMPTIONS: [&str; 3] = [
    "an optimal drawing of K_{5,n} has exactly Z(5,n) crossings",
    "the key of an antipodal-free optimal drawing has no edge labelled 4",
    "the core of an antipodal-free optimal drawing has at most 7 vertices",
];

/// The filters, in the order they are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Filter {
    TriangleParity,
    Connected,
    MaxDegree,
    NoK23,
    MinDegree,
    GirthFour,
    DegreeTwoOnFourCycle,
    NoSubdividedK4,
    NoLonelyPath,
    PositiveSolution,
    RotationAssignment,
    Fragments,
}

impl Filter {
    pub const ALL: [Filter; 12] = [
        Filter::TriangleParity,
        Filter::Connected,
        Filter::MaxDegree,
        Filter::NoK23,
        Filter::MinDegree,
        Filter::GirthFour,
        Filter::DegreeTwoOnFourCycle,
        Filter::NoSubdividedK4,
        Filter::NoLonelyPath,
        Filter::PositiveSolution,
        Filter::RotationAssignment,
        Filter::Fragments,
    ];

    /// The property a surviving key must have.
    pub fn property(self) -> &'static str {
        match self {
            Filter::TriangleParity => "labels around every triangle sum to an even number at least 4",
            Filter::Connected => "the core is connected",
            Filter::MaxDegree => "the core has maximum degree at most 3",
            Filter::NoK23 => "the core contains no K_{2,3}",
            Filter::MinDegree => "the core has minimum degree at least 2",
            Filter::GirthFour => "the core has girth 4",
            Filter::DegreeTwoOnFourCycle => "every degree-2 vertex of the core lies on a 4-cycle",
            Filter::NoSubdividedK4 => "the core contains no K_4 with one triangle subdivided",
            Filter::NoLonelyPath => {
                "the core has no 3-edge path whose 2-subpaths each have a unique middle vertex"
            }
            Filter::PositiveSolution => "the key linear system has a positive integral solution",
            Filter::RotationAssignment => {
                "white rotations can be assigned with antidistances equal to the labels"
            }
            Filter::Fragments => "every 4-vertex fragment admits black rotations",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Filter::TriangleParity => "triangle-parity",
            Filter::Connected => "connected",
            Filter::MaxDegree => "max-degree",
            Filter::NoK23 => "no-k23",
            Filter::MinDegree => "min-degree",
            Filter::GirthFour => "girth-four",
            Filter::DegreeTwoOnFourCycle => "degree-two-on-four-cycle",
            Filter::NoSubdividedK4 => "no-subdivided-k4",
            Filter::NoLonelyPath => "no-lonely-path",
            Filter::PositiveSolution => "positive-solution",
            Filter::RotationAssignment => "rotation-assignment",
            Filter::Fragments => "fragments",
        }
    }
}

/// Why a candidate was eliminated, with a witness where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elimination {
    /// An odd cycle of label-1 edges; label parity forces every triangle
    /// sum to be even, so the core must be bipartite.
    OddLabelCycle(Vec<usize>),
    /// A union of components that is not the whole core.
    Disconnected { component: u32 },
    DegreeAboveThree { vertex: usize },
    /// Images of the vertices of `K_{2,3}` (parts `{0,1}` and `{2,3,4}`).
    ContainsK23(Vec<usize>),
    DegreeBelowTwo { vertex: usize },
    GirthNotFour { girth: Option<usize> },
    DegreeTwoOffFourCycle { vertex: usize },
    /// Images of the vertices of [`SimpleGraph::subdivided_k4`].
    ContainsSubdividedK4(Vec<usize>),
    LonelyPath([usize; 4]),
    NoPositiveSolution { n: u64 },
    NoRotationAssignment,
    /// Every rotation assignment has a refuted 4-vertex fragment.
    FragmentRefuted(Vec<FragmentRefutation>),
}

impl Elimination {
    pub fn filter(&self) -> Filter {
        match self {
            Elimination::OddLabelCycle(_) => Filter::TriangleParity,
            Elimination::Disconnected { .. } => Filter::Connected,
            Elimination::DegreeAboveThree { .. } => Filter::MaxDegree,
            Elimination::ContainsK23(_) => Filter::NoK23,
            Elimination::DegreeBelowTwo { .. } => Filter::MinDegree,
            Elimination::GirthNotFour { .. } => Filter::GirthFour,
            Elimination::DegreeTwoOffFourCycle { .. } => Filter::DegreeTwoOnFourCycle,
            Elimination::ContainsSubdividedK4(_) => Filter::NoSubdividedK4,
            Elimination::LonelyPath(_) => Filter::NoLonelyPath,
            Elimination::NoPositiveSolution { .. } => Filter::PositiveSolution,
            Elimination::NoRotationAssignment => Filter::RotationAssignment,
            Elimination::FragmentRefuted { .. } => Filter::Fragments,
        }
    }

    /// Checks the witness against `candidate`. Structural witnesses are
    /// checked directly; the linear system and rotation search are rerun.
    pub fn replay(&self, candidate: &CandidateKey) -> bool {
        let g = &candidate.core;
        let m = g.vertex_count();
        match self {
            Elimination::OddLabelCycle(cycle) => {
                cycle.len() % 2 == 1
                    && distinct_in_range(cycle, m)
                    && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
            }
            Elimination::Disconnected { component } => {
                let full = full_mask(m);
                let inside = *component & full;
                inside != 0
                    && inside != full
                    && bits(inside).all(|v| g.neighbors(v) & !inside == 0)
            }
            Elimination::DegreeAboveThree { vertex } => *vertex < m && g.degree(*vertex) > 3,
            Elimination::ContainsK23(image) => {
                embeds(&SimpleGraph::complete_bipartite(2, 3), g, image)
            }
            Elimination::DegreeBelowTwo { vertex } => *vertex < m && g.degree(*vertex) < 2,
            Elimination::GirthNotFour { girth } => *girth != Some(4) && g.girth() == *girth,
            Elimination::DegreeTwoOffFourCycle { vertex } => {
                *vertex < m && g.degree(*vertex) == 2 && !g.on_four_cycle(*vertex)
            }
            Elimination::ContainsSubdividedK4(image) => {
                embeds(&SimpleGraph::subdivided_k4(), g, image)
            }
            Elimination::LonelyPath(p) => is_lonely_path(g, p),
            Elimination::NoPositiveSolution { n } => candidate
                .system()
                .is_some_and(|sys| sys.positive_integral_solutions(*n).is_empty()),
            Elimination::NoRotationAssignment => candidate
                .labels
                .as_ref()
                .is_some_and(|l| realize_key_rotations(l).is_empty()),
            Elimination::FragmentRefuted(refutations) => {
                let Some(labels) = &candidate.labels else {
                    return false;
                };
                let listed: BTreeSet<&Vec<CyclicPermutation>> =
                    refutations.iter().map(|f| &f.rotations).collect();
                let all = realize_key_rotations(labels);
                listed.len() == refutations.len()
                    && all.len() == listed.len()
                    && all.iter().all(|a| listed.contains(a))
                    && refutations.iter().all(|f| f.verify(labels))
            }
        }
    }
}

/// A rotation assignment together with a 4-vertex fragment of it that
/// admits no black rotations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentRefutation {
    pub rotations: Vec<CyclicPermutation>,
    pub vertices: Vec<usize>,
    pub certificate: RefutationCertificate,
}

impl FragmentRefutation {
    /// Checks that the assignment fits `labels`, that the certificate is
    /// about the named fragment, and that it verifies.
    pub fn verify(&self, labels: &[Vec<u32>]) -> bool {
        let table = AntidistanceTable::new();
        let m = labels.len();
        let rotations = &self.rotations;
        let cert = &self.certificate;
        rotations.len() == m
            && (0..m).all(|i| {
                (0..m).all(|j| i == j || table.antidistance(&rotations[i], &rotations[j]) == labels[i][j])
            })
            && distinct_in_range(&self.vertices, m)
            && cert.rotations.len() == self.vertices.len()
            && cert.labels.len() == self.vertices.len()
            && self.vertices.iter().enumerate().all(|(a, &i)| {
                cert.rotations[a] == rotations[i]
                    && self
                        .vertices
                        .iter()
                        .enumerate()
                        .all(|(b, &j)| a == b || cert.labels[a][b] == labels[i][j])
            })
            && cert.verify()
    }
}

fn full_mask(m: usize) -> u32 {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

fn distinct_in_range(vertices: &[usize], m: usize) -> bool {
    vertices.iter().enumerate().all(|(i, &v)| v < m && !vertices[..i].contains(&v))
}

fn embeds(pattern: &SimpleGraph, g: &SimpleGraph, image: &[usize]) -> bool {
    image.len() == pattern.vertex_count()
        && distinct_in_range(image, g.vertex_count())
        && pattern.edges().iter().all(|&(u, v)| g.has_edge(image[u], image[v]))
}

fn is_lonely_path(g: &SimpleGraph, p: &[usize; 4]) -> bool {
    distinct_in_range(p, g.vertex_count())
        && (0..3).all(|i| g.has_edge(p[i], p[i + 1]))
        && g.neighbors(p[0]) & g.neighbors(p[2]) == 1 << p[1]
        && g.neighbors(p[1]) & g.neighbors(p[3]) == 1 << p[2]
}

/// A candidate key: a core and, when the core is bipartite, the label
/// completion given by a side assignment of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateKey {
    pub core: SimpleGraph,
    /// Vertices on one side of the parity cut; `None` when no completion
    /// passes the triangle condition.
    pub side: Option<u32>,
    pub labels: Option<Vec<Vec<u32>>>,
    /// Filters passed, in order.
    pub passed: Vec<Filter>,
    pub eliminated: Option<Elimination>,
    /// Rotation assignments up to relabelling whose fragments all admit
    /// black rotations, once computed.
    pub assignments: Vec<Vec<CyclicPermutation>>,
    /// Rotation assignments ruled out by a fragment.
    pub refuted_assignments: Vec<FragmentRefutation>,
    /// Positive integral solutions at the classified `n`, once computed.
    pub solutions: Vec<Vec<u64>>,
}

impl CandidateKey {
    fn new(core: SimpleGraph, side: Option<u32>) -> Self {
        let labels = side.map(|s| completion_labels(&core, s));
        Self {
            core,
            side,
            labels,
            passed: Vec::new(),
            eliminated: None,
            assignments: Vec::new(),
            refuted_assignments: Vec::new(),
            solutions: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.core.vertex_count()
    }

    pub fn survived(&self) -> bool {
        self.eliminated.is_none()
    }

    pub fn system(&self) -> Option<KeyLinearSystem> {
        self.labels
            .as_ref()
            .map(|l| KeyLinearSystem::from_labels(l).expect("square labels"))
    }

    fn pass(&mut self, filter: Filter, failure: Option<Elimination>) -> bool {
        match failure {
            Some(e) => {
                self.eliminated = Some(e);
                false
            }
            None => {
                self.passed.push(filter);
                true
            }
        }
    }
}

/// Labels completing `core` with parity cut `side`: 1 on core edges, 2
/// between vertices on the same side, 3 across otherwise.
pub fn completion_labels(core: &SimpleGraph, side: u32) -> Vec<Vec<u32>> {
    let m = core.vertex_count();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let across = (side >> i & 1) != (side >> j & 1);
                    match (i == j, core.has_edge(i, j), across) {
                        (true, _, _) => 0,
                        (false, true, _) => 1,
                        (false, false, false) => 2,
                        (false, false, true) => 3,
                    }
                })
                .collect()
        })
        .collect()
}

/// Whether every triangle of the label matrix sums to an even number at
/// least 4.
pub fn labels_triangle_valid(labels: &[Vec<u32>]) -> bool {
    let m = labels.len();
    (0..m).all(|i| {
        (i + 1..m).all(|j| {
            (j + 1..m).all(|k| {
                let sum = labels[i][j] + labels[j][k] + labels[i][k];
                sum % 2 == 0 && sum >= 4
            })
        })
    })
}

/// Parity cuts of a bipartite `core`, one per orbit under its automorphisms
/// (a cut and its complement give the same labels). Each returned mask
/// contains vertex 0.
pub fn parity_cuts(core: &SimpleGraph) -> Vec<u32> {
    let Ok(colouring) = core.two_colouring() else {
        return Vec::new();
    };
    let m = core.vertex_count();
    if m == 0 {
        return vec![0];
    }
    let full = full_mask(m);
    let components = core.components();
    let automorphisms = core.automorphisms();
    let normal = |mask: u32| if mask & 1 == 1 { mask } else { !mask & full };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for flips in 0u32..1 << (components.len() - 1) {
        let mut side = colouring;
        for (c, &comp) in components.iter().enumerate().skip(1) {
            if flips >> (c - 1) & 1 == 1 {
                side ^= comp;
            }
        }
        let side = normal(side);
        let orbit_rep = automorphisms
            .iter()
            .map(|perm| {
                let image = bits(side).fold(0u32, |acc, v| acc | 1 << perm[v]);
                normal(image)
            })
            .min()
            .unwrap_or(side);
        if seen.insert(orbit_rep) {
            out.push(side);
        }
    }
    out
}

/// Every candidate with at most `max_vertices` vertices, before filtering.
/// Non-bipartite cores appear once with no completion.
pub fn candidate_keys(max_vertices: usize) -> Vec<CandidateKey> {
    let mut out = Vec::new();
    for m in 1..=max_vertices {
        for core in graphs_up_to_isomorphism(m) {
            if core.is_bipartite() {
                for side in parity_cuts(&core) {
                    out.push(CandidateKey::new(core.clone(), Some(side)));
                }
            } else {
                out.push(CandidateKey::new(core, None));
            }
        }
    }
    out
}

/// Applies the structural filters; returns whether the candidate survives.
fn structural_filters(c: &mut CandidateKey) -> bool {
    let g = c.core.clone();
    let m = g.vertex_count();
    let parity = g.two_colouring().err().map(Elimination::OddLabelCycle);
    if !c.pass(Filter::TriangleParity, parity) {
        return false;
    }
    let components = g.components();
    let disconnected = (components.len() > 1).then(|| Elimination::Disconnected {
        component: components[0],
    });
    if !c.pass(Filter::Connected, disconnected) {
        return false;
    }
    let high = (0..m)
        .find(|&v| g.degree(v) > 3)
        .map(|vertex| Elimination::DegreeAboveThree { vertex });
    if !c.pass(Filter::MaxDegree, high) {
        return false;
    }
    let k23 = g
        .find_subgraph(&SimpleGraph::complete_bipartite(2, 3))
        .map(Elimination::ContainsK23);
    if !c.pass(Filter::NoK23, k23) {
        return false;
    }
    let low = (0..m)
        .find(|&v| g.degree(v) < 2)
        .map(|vertex| Elimination::DegreeBelowTwo { vertex });
    if !c.pass(Filter::MinDegree, low) {
        return false;
    }
    let girth = g.girth();
    let bad_girth = (girth != Some(4)).then_some(Elimination::GirthNotFour { girth });
    if !c.pass(Filter::GirthFour, bad_girth) {
        return false;
    }
    let off = g
        .degree_two_off_four_cycles()
        .first()
        .map(|&vertex| Elimination::DegreeTwoOffFourCycle { vertex });
    if !c.pass(Filter::DegreeTwoOnFourCycle, off) {
        return false;
    }
    let sk4 = g
        .find_subgraph(&SimpleGraph::subdivided_k4())
        .map(Elimination::ContainsSubdividedK4);
    if !c.pass(Filter::NoSubdividedK4, sk4) {
        return false;
    }
    let lonely = lonely_path(&g).map(Elimination::LonelyPath);
    c.pass(Filter::NoLonelyPath, lonely)
}

fn linear_filter(c: &mut CandidateKey, n: u64) -> bool {
    let solutions = c
        .system()
        .expect("completed key")
        .positive_integral_solutions(n)
        .solutions;
    let failure = solutions
        .is_empty()
        .then_some(Elimination::NoPositiveSolution { n });
    c.solutions = solutions;
    c.pass(Filter::PositiveSolution, failure)
}

/// Candidates with at most [`MAX_CORE_VERTICES`] vertices run through the
/// structural filters and the linear system at `n`.
///
/// # Errors
///
/// `n` odd or zero.
pub fn enumerate_feasible_cores(n: u64) -> Result<Vec<CandidateKey>> {
    check_even(n)?;
    let mut all = candidate_keys(MAX_CORE_VERTICES);
    for c in &mut all {
        if structural_filters(c) {
            linear_filter(c, n);
        }
    }
    Ok(all)
}

fn check_even(n: u64) -> Result<()> {
    if n == 0 || n % 2 == 1 {
        Err(Error::OddWhiteCount(n as usize))
    } else {
        Ok(())
    }
}

/// Assignments of distinct white rotations to the key vertices with
/// `antidistance(π_i, π_j) = labels[i][j]`, one per orbit under relabellings
/// of the black vertices and label-preserving permutations of the key.
/// Each representative has `π_0 = (01234)` and is the least in its orbit.
pub fn realize_key_rotations(labels: &[Vec<u32>]) -> Vec<Vec<CyclicPermutation>> {
    let m = labels.len();
    if m == 0 {
        return vec![Vec::new()];
    }
    let table = AntidistanceTable::new();
    let symmetries = key_automorphisms(labels);
    let shifts: Vec<Relabelling> = (0..BLACK_VERTICES as i64)
        .map(|k| Relabelling::shift(BLACK_VERTICES, k))
        .collect();
    let mut reps = BTreeSet::new();
    let mut current = vec![CyclicPermutation::identity(BLACK_VERTICES).expect("five symbols")];
    extend_assignment(&table, labels, &mut current, &mut |a| {
        reps.insert(canonical_assignment(a, &symmetries, &shifts));
    });
    reps.into_iter().collect()
}

fn extend_assignment(
    table: &AntidistanceTable,
    labels: &[Vec<u32>],
    current: &mut Vec<CyclicPermutation>,
    found: &mut impl FnMut(&[CyclicPermutation]),
) {
    let i = current.len();
    if i == labels.len() {
        found(current);
        return;
    }
    for rho in table.rotations() {
        let fits = current
            .iter()
            .enumerate()
            .all(|(j, pi)| pi != rho && table.antidistance(pi, rho) == labels[i][j]);
        if fits {
            current.push(*rho);
            extend_assignment(table, labels, current, found);
            current.pop();
        }
    }
}

fn key_automorphisms(labels: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let m = labels.len();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn go(
        labels: &[Vec<u32>],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = perm.len();
        if i == labels.len() {
            out.push(perm.clone());
            return;
        }
        for v in 0..labels.len() {
            if used[v] || (0..i).any(|j| labels[perm[j]][v] != labels[j][i]) {
                continue;
            }
            used[v] = true;
            perm.push(v);
            go(labels, perm, used, out);
            perm.pop();
            used[v] = false;
        }
    }
    go(labels, &mut perm, &mut used, &mut out);
    out
}

fn canonical_assignment(
    a: &[CyclicPermutation],
    symmetries: &[Vec<usize>],
    shifts: &[Relabelling],
) -> Vec<CyclicPermutation> {
    let mut best: Option<Vec<CyclicPermutation>> = None;
    for phi in symmetries {
        let permuted: Vec<CyclicPermutation> = phi.iter().map(|&v| a[v]).collect();
        let normalize = Relabelling::normalizing(&permuted[0]).expect("white rotation");
        for shift in shifts {
            let sigma = shift.compose(&normalize);
            let image: Vec<CyclicPermutation> = permuted
                .iter()
                .map(|p| p.relabel(&sigma).expect("same domain"))
                .collect();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.expect("the identity is an automorphism")
}

/// The two cores that occur for antipodal-free optimal drawings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoreShape {
    FourCycle,
    C6Bar,
}

impl CoreShape {
    pub fn graph(self) -> SimpleGraph {
        match self {
            CoreShape::FourCycle => SimpleGraph::cycle(4),
            CoreShape::C6Bar => SimpleGraph::c6_bar(),
        }
    }

    /// The key: the core completed by its (unique) parity cut.
    pub fn key_labels(self) -> Vec<Vec<u32>> {
        let g = self.graph();
        let side = g.two_colouring().expect("bipartite core");
        completion_labels(&g, side)
    }

    pub fn of(g: &SimpleGraph) -> Option<Self> {
        [CoreShape::FourCycle, CoreShape::C6Bar]
            .into_iter()
            .find(|s| s.graph().is_isomorphic(g))
    }
}

/// Rotation assignments for the key of `shape`, up to relabelling and key
/// symmetry, with the vertex numbering of [`CoreShape::graph`]. Assignments
/// with a 4-vertex fragment admitting no black rotations are dropped.
pub fn realize_core_rotations(shape: CoreShape) -> Vec<Vec<CyclicPermutation>> {
    let labels = shape.key_labels();
    realize_key_rotations(&labels)
        .into_iter()
        .filter(|a| refuted_fragment(a, &labels).is_none())
        .collect()
}

/// A concrete drawing produced from a surviving candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    /// Index into [`ClassificationResult::candidates`].
    pub candidate: usize,
    pub rotations: Vec<CyclicPermutation>,
    /// Bag sizes: a positive solution of the key linear system.
    pub bags: Vec<u64>,
    pub drawing: AbstractDrawing,
    pub identified: Option<(usize, usize)>,
}

/// A `D_{r,s}` family, `r ≥ s`. For `r ≠ s` both positive it contains two
/// isomorphism classes, `D_{r,s}` and its mirror image `D_{s,r}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Family {
    pub r: usize,
    pub s: usize,
    pub core: CoreShape,
    /// The isomorphism classes found, as `(r, s)` parameters.
    pub classes: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NoAntipodalFreeDrawing,
    Families(Vec<Family>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub n: u64,
    pub verdict: Verdict,
    /// All candidates in canonical order, each with its trail.
    pub candidates: Vec<CandidateKey>,
    pub realizations: Vec<Realization>,
    pub assumptions: Vec<&'static str>,
}

impl ClassificationResult {
    pub fn survivors(&self) -> impl Iterator<Item = &CandidateKey> {
        self.candidates.iter().filter(|c| c.survived())
    }

    pub fn eliminated_by(&self, filter: Filter) -> usize {
        self.candidates
            .iter()
            .filter(|c| c.eliminated.as_ref().is_some_and(|e| e.filter() == filter))
            .count()
    }

    /// Pairs `(r, s)` of every family, `r ≥ s`.
    pub fn family_parameters(&self) -> Vec<(usize, usize)> {
        match &self.verdict {
            Verdict::NoAntipodalFreeDrawing => Vec::new(),
            Verdict::Families(f) => f.iter().map(|f| (f.r, f.s)).collect(),
        }
    }

    /// Replays every elimination certificate.
    pub fn replay_all(&self) -> bool {
        self.candidates
            .iter()
            .all(|c| c.eliminated.as_ref().is_none_or(|e| e.replay(c)))
    }

    /// Whether the verdict is backed by realizations: every realization is
    /// identified, and the families are exactly those identified.
    pub fn is_consistent(&self) -> bool {
        if self.realizations.iter().any(|r| r.identified.is_none()) {
            return false;
        }
        let found: BTreeSet<(usize, usize)> = self
            .realizations
            .iter()
            .filter_map(|r| r.identified)
            .collect();
        match &self.verdict {
            Verdict::NoAntipodalFreeDrawing => found.is_empty(),
            Verdict::Families(families) => {
                let listed: BTreeSet<(usize, usize)> = families
                    .iter()
                    .flat_map(|f| f.classes.iter().copied())
                    .collect();
                listed == found
            }
        }
    }
}

/// Classifies antipodal-free optimal drawings of `K_{5,n}` for even `n`.
///
/// # Errors
///
/// `n` odd or zero.
pub fn classify_antipodal_free_optimal(n: u64) -> Result<ClassificationResult> {
    let mut candidates = enumerate_feasible_cores(n)?;
    let mut realizations = Vec::new();
    for (index, c) in candidates.iter_mut().enumerate() {
        if !c.survived() {
            continue;
        }
        let labels = c.labels.clone().expect("completed key");
        c.assignments = realize_key_rotations(&labels);
        let none = c
            .assignments
            .is_empty()
            .then_some(Elimination::NoRotationAssignment);
        if !c.pass(Filter::RotationAssignment, none) {
            continue;
        }
        for rotations in core::mem::take(&mut c.assignments) {
            match refuted_fragment(&rotations, &labels) {
                Some(refutation) => c.refuted_assignments.push(refutation),
                None => c.assignments.push(rotations),
            }
        }
        let refuted = c
            .assignments
            .is_empty()
            .then(|| Elimination::FragmentRefuted(c.refuted_assignments.clone()));
        if !c.pass(Filter::Fragments, refuted) {
            continue;
        }
        for rotations in &c.assignments {
            for bags in &c.solutions {
                let sizes: Vec<usize> = bags.iter().map(|&b| b as usize).collect();
                let drawing = from_bags(rotations, &labels, &sizes);
                let identified = identify_drs(&drawing);
                realizations.push(Realization {
                    candidate: index,
                    rotations: rotations.clone(),
                    bags: bags.clone(),
                    drawing,
                    identified,
                });
            }
        }
    }
    let verdict = verdict_from(&candidates, &realizations);
    Ok(ClassificationResult {
        n,
        verdict,
        candidates,
        realizations,
        assumptions: ASSUMPTIONS.to_vec(),
    })
}

fn refuted_fragment(
    rotations: &[CyclicPermutation],
    labels: &[Vec<u32>],
) -> Option<FragmentRefutation> {
    let m = rotations.len();
    let mut subset = Vec::with_capacity(4);
    for_each_subset(m, 4.min(m), &mut subset, 0, &mut |vs| {
        let rots: Vec<CyclicPermutation> = vs.iter().map(|&i| rotations[i]).collect();
        let sub: Vec<Vec<u32>> = vs
            .iter()
            .map(|&i| vs.iter().map(|&j| labels[i][j]).collect())
            .collect();
        match fragment_realizable(&rots, &sub).outcome {
            Realizability::Refuted(certificate) => Some(FragmentRefutation {
                rotations: rotations.to_vec(),
                vertices: vs.to_vec(),
                certificate,
            }),
            Realizability::Realizable { .. } => None,
        }
    })
}

fn for_each_subset<T>(
    m: usize,
    k: usize,
    current: &mut Vec<usize>,
    start: usize,
    f: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if current.len() == k {
        return f(current);
    }
    for v in start..m {
        current.push(v);
        let out = for_each_subset(m, k, current, v + 1, f);
        current.pop();
        if out.is_some() {
            return out;
        }
    }
    None
}

fn verdict_from(candidates: &[CandidateKey], realizations: &[Realization]) -> Verdict {
    let mut families: Vec<Family> = Vec::new();
    for real in realizations {
        let Some((r, s)) = real.identified else {
            continue;
        };
        let Some(core) = CoreShape::of(&candidates[real.candidate].core) else {
            continue;
        };
        let (hi, lo) = (r.max(s), r.min(s));
        match families.iter_mut().find(|f| (f.r, f.s) == (hi, lo)) {
            Some(f) => {
                if !f.classes.contains(&(r, s)) {
                    f.classes.push((r, s));
                    f.classes.sort_unstable_by(|a, b| b.cmp(a));
                }
            }
            None => families.push(Family {
                r: hi,
                s: lo,
                core,
                classes: vec![(r, s)],
            }),
        }
    }
    if families.is_empty() {
        Verdict::NoAntipodalFreeDrawing
    } else {
        families.sort_by(|a, b| (b.r, b.s).cmp(&(a.r, a.s)));
        Verdict::Families(families)
    }
}

/// One removal step in [`verify_decomposition_theorem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalCheck {
    /// The pair removed, as indices into the input drawing.
    pub pair: (usize, usize),
    /// White vertices remaining.
    pub n: usize,
    pub crossings: u64,
    pub optimal: u64,
}

impl RemovalCheck {
    pub fn holds(&self) -> bool {
        self.crossings == self.optimal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub n: usize,
    pub crossings: u64,
    pub optimal: u64,
    pub steps: Vec<RemovalCheck>,
    /// `(r, s)` of the antipodal-free residual, when identified.
    pub identified: Option<(usize, usize)>,
    /// Whether the residual is isomorphic to `D_{r,s}` as rebuilt.
    pub residual_confirmed: bool,
    pub error: Option<Error>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.error.is_none()
            && self.crossings == self.optimal
            && self.steps.iter().all(RemovalCheck::holds)
            && self.identified.is_some()
            && self.residual_confirmed
    }
}

/// Decomposes `d` into antipodal pairs and a `D_{r,s}`, checking every
/// intermediate drawing for optimality and the residual by construction.
/// Failures are reported rather than returned as errors.
pub fn verify_decomposition_theorem(d: &AbstractDrawing) -> DecompositionReport {
    let mut report = DecompositionReport {
        n: d.n(),
        crossings: d.total_crossings(),
        optimal: optimal_crossings(d.n()),
        steps: Vec::new(),
        identified: None,
        residual_confirmed: false,
        error: None,
    };
    if d.n() % 2 == 1 {
        report.error = Some(Error::OddWhiteCount(d.n()));
        return report;
    }
    let mut current = d.clone();
    let mut indices: Vec<usize> = (0..d.n()).collect();
    while let Some(&(i, j)) = current.antipodal_pairs().first() {
        let pair = (indices[i], indices[j]);
        current = current.without(&[i, j]);
        indices.retain(|&x| x != pair.0 && x != pair.1);
        report.steps.push(RemovalCheck {
            pair,
            n: current.n(),
            crossings: current.total_crossings(),
            optimal: optimal_crossings(current.n()),
        });
    }
    match decompose(d) {
        Ok(dec) => {
            let (r, s) = dec.identified;
            report.identified = Some((r, s));
            report.residual_confirmed = are_isomorphic(&dec.residual, &build_drs(r, s)).is_some();
        }
        Err(e) => report.error = Some(e),
    }
    report
}
