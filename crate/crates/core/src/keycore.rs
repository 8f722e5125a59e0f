//! Keys and cores of clean drawings.
//!
//! The key of a clean drawing has one vertex per distinct rotation; the edge
//! between two rotations is labelled with the crossing count between any
//! two white vertices carrying them. The core keeps the label-1 edges.

use alloc::vec::Vec;

use crate::cyclic::{CyclicPermutation, Relabelling};
use crate::drawing::AbstractDrawing;
use crate::graph::SimpleGraph;
use crate::{Error, Result, BLACK_VERTICES};

/// Largest label a key may carry.
pub const MAX_LABEL: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KeyGraph {
    vertices: Vec<CyclicPermutation>,
    labels: Vec<u32>,
}

impl KeyGraph {
    /// Checks distinct vertices, a square symmetric matrix and labels in
    /// `0..=4`. The diagonal is ignored and stored as 0.
    pub fn new(vertices: Vec<CyclicPermutation>, labels: &[Vec<u32>]) -> Result<Self> {
        let m = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateKeyVertex(*v));
            }
        }
        if labels.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: labels.len(),
            });
        }
        let mut flat = alloc::vec![0; m * m];
        for i in 0..m {
            if labels[i].len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: labels[i].len(),
                });
            }
            for j in 0..m {
                if i == j {
                    continue;
                }
                if labels[i][j] != labels[j][i] {
                    return Err(Error::AsymmetricLabels(i, j));
                }
                if labels[i][j] > MAX_LABEL {
                    return Err(Error::LabelOutOfRange(labels[i][j]));
                }
                flat[i * m + j] = labels[i][j];
            }
        }
        Ok(Self {
            vertices,
            labels: flat,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[CyclicPermutation] {
        &self.vertices
    }

    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.labels[i * self.vertex_count() + j]
    }

    pub fn labels(&self) -> Vec<Vec<u32>> {
        let m = self.vertex_count();
        (0..m).map(|i| (0..m).map(|j| self.label(i, j)).collect()).collect()
    }

    pub fn index_of(&self, pi: &CyclicPermutation) -> Option<usize> {
        self.vertices.iter().position(|v| v == pi)
    }

    /// Label-1 subgraph, on the same vertex order.
    pub fn core(&self) -> CoreGraph {
        let m = self.vertex_count();
        let mut graph = SimpleGraph::new(m);
        for i in 0..m {
            for j in i + 1..m {
                if self.label(i, j) == 1 {
                    graph.add_edge(i, j);
                }
            }
        }
        CoreGraph {
            vertices: self.vertices.clone(),
            graph,
        }
    }

    /// Vertex triples whose labels sum to an odd number or to less than 4.
    pub fn triangle_violations(&self) -> Vec<(usize, usize, usize)> {
        let m = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    let s = self.label(i, j) + self.label(j, k) + self.label(i, k);
                    if s % 2 != 0 || s < 4 {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// The sub-key on `keep`, in that order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let vertices = keep.iter().map(|&i| self.vertices[i]).collect();
        let labels = keep
            .iter()
            .flat_map(|&i| keep.iter().map(move |&j| (i, j)))
            .map(|(i, j)| if i == j { 0 } else { self.label(i, j) })
            .collect();
        Self { vertices, labels }
    }

    /// Whether no edge carries `label`.
    pub fn is_free_of(&self, label: u32) -> bool {
        let m = self.vertex_count();
        (0..m).all(|i| (i + 1..m).all(|j| self.label(i, j) != label))
    }
}

/// The key of a clean drawing. Rotations appear in order of first
/// occurrence among the white vertices.
pub fn build_key(d: &AbstractDrawing) -> Result<KeyGraph> {
    let report = d.clean_report();
    if !report.same_rotation_not_four.is_empty() || !report.above_four.is_empty() {
        return Err(Error::NotClean);
    }
    let classes = d.rotation_classes();
    let m = classes.len();
    let mut labels = alloc::vec![alloc::vec![0u32; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let value = d.label(classes[a][0], classes[b][0]);
            for &i in &classes[a] {
                for &j in &classes[b] {
                    if d.label(i, j) != value {
                        return Err(Error::InconsistentClassLabels {
                            first: d.rotation(classes[a][0]),
                            second: d.rotation(classes[b][0]),
                        });
                    }
                }
            }
            labels[a][b] = value;
            labels[b][a] = value;
        }
    }
    let vertices = classes.iter().map(|c| d.rotation(c[0])).collect();
    KeyGraph::new(vertices, &labels)
}

pub fn core_of(k: &KeyGraph) -> CoreGraph {
    k.core()
}

/// Whether every triple of key labels sums to an even number at least 4.
pub fn key_triangle_check(k: &KeyGraph) -> bool {
    k.triangle_violations().is_empty()
}

/// The rotations of a key together with its label-1 edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreGraph {
    pub vertices: Vec<CyclicPermutation>,
    pub graph: SimpleGraph,
}

impl CoreGraph {
    pub fn structure_report(&self) -> StructureReport {
        structure_report(&self.graph)
    }
}

/// The structural predicates satisfied by cores of antipodal-free optimal
/// drawings, computed on an arbitrary graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    /// An odd cycle when the graph is not bipartite.
    pub odd_cycle: Option<Vec<usize>>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub girth: Option<usize>,
    /// An embedding of `K_{2,3}`, if any.
    pub k23: Option<Vec<usize>>,
    /// An embedding of `K_4` with one triangle subdivided, if any.
    pub subdivided_k4: Option<Vec<usize>>,
    pub degree_two_off_four_cycles: Vec<usize>,
    /// A path `p0 p1 p2 p3` where `p1` is the only common neighbor of `p0`
    /// and `p2`, and `p2` the only common neighbor of `p1` and `p3`.
    pub lonely_path: Option<[usize; 4]>,
    pub is_four_cycle: bool,
    pub is_c6_bar: bool,
}

impl StructureReport {
    pub fn bipartite(&self) -> bool {
        self.odd_cycle.is_none()
    }
}

pub fn structure_report(g: &SimpleGraph) -> StructureReport {
    let n = g.vertex_count();
    let small = n <= crate::graph::MAX_CANONICAL_VERTICES;
    StructureReport {
        vertex_count: n,
        edge_count: g.edge_count(),
        connected: g.is_connected(),
        odd_cycle: g.two_colouring().err(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        girth: g.girth(),
        k23: g.find_subgraph(&SimpleGraph::complete_bipartite(2, 3)),
        subdivided_k4: g.find_subgraph(&SimpleGraph::subdivided_k4()),
        degree_two_off_four_cycles: g.degree_two_off_four_cycles(),
        lonely_path: lonely_path(g),
        is_four_cycle: small && n == 4 && g.is_isomorphic(&SimpleGraph::cycle(4)),
        is_c6_bar: small && n == 6 && g.is_isomorphic(&SimpleGraph::c6_bar()),
    }
}

/// First path `p0 p1 p2 p3`, in lexicographic order, whose middle vertices
/// are the unique common neighbors of its two overlapping 2-paths.
pub fn lonely_path(g: &SimpleGraph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    for p0 in 0..n {
        for p1 in crate::graph::bits(g.neighbors(p0)) {
            for p2 in crate::graph::bits(g.neighbors(p1) & !(1 << p0)) {
                if g.neighbors(p0) & g.neighbors(p2) != 1 << p1 {
                    continue;
                }
                for p3 in crate::graph::bits(g.neighbors(p2) & !(1 << p1 | 1 << p0)) {
                    if g.neighbors(p1) & g.neighbors(p3) == 1 << p2 {
                        return Some([p0, p1, p2, p3]);
                    }
                }
            }
        }
    }
    None
}

/// A relabelling of the black vertices carrying the vertex set of `k1` onto
/// that of `k2` with all labels preserved, with the induced vertex map
/// (`map[i]` is the index in `k2` of the image of vertex `i` of `k1`).
pub fn keys_isomorphic(k1: &KeyGraph, k2: &KeyGraph) -> Option<(Relabelling, Vec<usize>)> {
    let m = k1.vertex_count();
    if m != k2.vertex_count() {
        return None;
    }
    'sigma: for sigma in Relabelling::all(BLACK_VERTICES) {
        let mut map = Vec::with_capacity(m);
        for v in k1.vertices() {
            let image = v.relabel(&sigma).ok()?;
            match k2.index_of(&image) {
                Some(j) => map.push(j),
                None => continue 'sigma,
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if k1.label(i, j) != k2.label(map[i], map[j]) {
                    continue 'sigma;
                }
            }
        }
        return Some((sigma, map));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cp(s: &str) -> CyclicPermutation {
        CyclicPermutation::parse(s).unwrap()
    }

    /// Three white vertices with labels 1, 1, 2: an optimal clean drawing of
    /// `K_{5,3}` whose core is a path.
    fn path_drawing() -> AbstractDrawing {
        AbstractDrawing::new(
            vec![cp("01234"), cp("01432"), cp("04312")],
            &[vec![0, 1, 1], vec![1, 0, 2], vec![1, 2, 0]],
        )
        .unwrap()
    }

    #[test]
    fn key_of_small_drawing() {
        let d = path_drawing();
        assert!(d.validate().is_valid());
        assert!(d.is_optimal());
        let k = build_key(&d).unwrap();
        assert_eq!(k.vertex_count(), 3);
        assert!(key_triangle_check(&k));
        let core = core_of(&k);
        assert_eq!(core.graph.edges(), vec![(0, 1), (0, 2)]);
        let r = core.structure_report();
        assert_eq!(r.min_degree, 1);
        assert!(r.bipartite() && r.connected);
    }

    #[test]
    fn build_key_rejects_unclean() {
        let mut d = path_drawing();
        d.set_label(0, 1, 5);
        assert_eq!(build_key(&d), Err(Error::NotClean));
        let mut d = path_drawing();
        d.push(cp("01234"), &[4, 1, 3]).unwrap();
        assert!(matches!(
            build_key(&d),
            Err(Error::InconsistentClassLabels { .. })
        ));
    }

    #[test]
    fn key_validation() {
        assert_eq!(
            KeyGraph::new(vec![cp("01234"), cp("01234")], &[vec![0, 4], vec![4, 0]]),
            Err(Error::DuplicateKeyVertex(cp("01234")))
        );
        assert_eq!(
            KeyGraph::new(vec![cp("01234"), cp("01432")], &[vec![0, 1], vec![2, 0]]),
            Err(Error::AsymmetricLabels(0, 1))
        );
        assert_eq!(
            KeyGraph::new(vec![cp("01234"), cp("01432")], &[vec![0, 5], vec![5, 0]]),
            Err(Error::LabelOutOfRange(5))
        );
    }

    #[test]
    fn triangle_check_on_label_triples() {
        let three = |a, b, c| {
            KeyGraph::new(
                vec![cp("01234"), cp("01432"), cp("04312")],
                &[vec![0, a, b], vec![a, 0, c], vec![b, c, 0]],
            )
            .unwrap()
        };
        assert!(!key_triangle_check(&three(1, 1, 1)));
        assert!(key_triangle_check(&three(1, 1, 2)));
        assert!(!key_triangle_check(&three(0, 1, 1)));
    }

    #[test]
    fn structure_predicates() {
        let r = structure_report(&SimpleGraph::complete_bipartite(3, 3));
        assert!(r.k23.is_some());
        let r = structure_report(&SimpleGraph::cube());
        assert!(r.subdivided_k4.is_some());
        let r = structure_report(&SimpleGraph::cycle(6));
        assert_eq!(r.lonely_path, Some([0, 1, 2, 3]));
        assert_eq!(r.girth, Some(6));
        let r = structure_report(&SimpleGraph::c6_bar());
        assert!(r.is_c6_bar && !r.is_four_cycle);
        assert_eq!(r.lonely_path, None);
        assert!(structure_report(&SimpleGraph::cycle(4)).is_four_cycle);
    }

    #[test]
    fn relabelled_key_is_isomorphic() {
        let k = build_key(&path_drawing()).unwrap();
        let sigma = Relabelling::shift(5, 1);
        let moved: Vec<_> = k.vertices().iter().map(|v| v.relabel(&sigma).unwrap()).collect();
        let k2 = KeyGraph::new(moved, &k.labels()).unwrap();
        let (_, map) = keys_isomorphic(&k, &k2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(k.label(i, j), k2.label(map[i], map[j]));
                }
            }
        }
        assert!(keys_isomorphic(&k, &k.induced(&[0, 1])).is_none());
    }
}
