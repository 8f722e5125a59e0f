//! Small simple graphs on at most 32 vertices, stored as adjacency bitsets.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

pub const MAX_VERTICES: usize = 32;

/// Canonical forms are only computed for graphs up to this size.
pub const MAX_CANONICAL_VERTICES: usize = 11;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SimpleGraph {
    adj: Vec<u32>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Self {
            adj: alloc::vec![0; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// The 6-cycle `0..6` with the chord `0 3`.
    pub fn c6_bar() -> Self {
        let mut g = Self::cycle(6);
        g.add_edge(0, 3);
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cube() -> Self {
        let mut g = Self::new(8);
        for u in 0..8usize {
            for bit in 0..3 {
                g.add_edge(u, u ^ (1 << bit));
            }
        }
        g
    }

    /// `K_4` with each edge of one triangle subdivided once: center `0`,
    /// corners `1, 2, 3`, subdivision vertices `4, 5, 6`.
    pub fn subdivided_k4() -> Self {
        Self::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (4, 2),
                (2, 5),
                (5, 3),
                (3, 6),
                (6, 1),
            ],
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Neighborhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    fn all_mask(&self) -> u32 {
        if self.vertex_count() == 32 {
            u32::MAX
        } else {
            (1u32 << self.vertex_count()) - 1
        }
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            if seen & (1 << v) != 0 {
                continue;
            }
            let mut comp = 1u32 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[u] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-colouring as a bitset of the vertices coloured 1 (each
    /// component's least vertex gets colour 0), or an odd cycle.
    pub fn two_colouring(&self) -> Result<u32, Vec<usize>> {
        let n = self.vertex_count();
        let mut colour = alloc::vec![u8::MAX; n];
        let mut parent = alloc::vec![usize::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = alloc::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in bits(self.adj[u]) {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return Err(odd_cycle(&parent, u, v));
                    }
                }
            }
        }
        Ok((0..n).filter(|&v| colour[v] == 1).fold(0, |m, v| m | 1 << v))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_ok()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = alloc::vec![usize::MAX; n];
            let mut parent = alloc::vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = alloc::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in bits(self.adj[u]) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Whether `v` lies on a 4-cycle.
    pub fn on_four_cycle(&self, v: usize) -> bool {
        let nbrs: Vec<usize> = bits(self.adj[v]).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if (self.adj[a] & self.adj[b] & !(1 << v)) != 0 {
                    return true;
                }
            }
        }
        false
    }

    /// The degree-2 vertices lying on no 4-cycle.
    pub fn degree_two_off_four_cycles(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 2 && !self.on_four_cycle(v))
            .collect()
    }

    /// An injective map from the vertices of `pattern` into `self` carrying
    /// edges to edges, if one exists. Non-induced.
    pub fn find_subgraph(&self, pattern: &SimpleGraph) -> Option<Vec<usize>> {
        let p = pattern.vertex_count();
        if p > self.vertex_count() || pattern.edge_count() > self.edge_count() {
            return None;
        }
        let order = pattern.search_order();
        let mut image = alloc::vec![usize::MAX; p];
        if self.embed(pattern, &order, 0, 0, &mut image) {
            Some(image)
        } else {
            None
        }
    }

    pub fn contains_subgraph(&self, pattern: &SimpleGraph) -> bool {
        self.find_subgraph(pattern).is_some()
    }

    /// Vertices ordered so each one after the first of its component has an
    /// earlier neighbor, highest degree first.
    fn search_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u32;
        while order.len() < n {
            let touching = (0..n)
                .filter(|&v| placed & (1 << v) == 0 && self.adj[v] & placed != 0)
                .max_by_key(|&v| (self.adj[v] & placed).count_ones() * 64 + self.degree(v) as u32);
            let next = touching.unwrap_or_else(|| {
                (0..n)
                    .filter(|&v| placed & (1 << v) == 0)
                    .max_by_key(|&v| self.degree(v))
                    .expect("unplaced vertex")
            });
            placed |= 1 << next;
            order.push(next);
        }
        order
    }

    fn embed(
        &self,
        pattern: &SimpleGraph,
        order: &[usize],
        depth: usize,
        used: u32,
        image: &mut [usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        let mut candidates = self.all_mask() & !used;
        for u in bits(pattern.adj[v]) {
            if image[u] != usize::MAX {
                candidates &= self.adj[image[u]];
            }
        }
        for w in bits(candidates) {
            if self.degree(w) < pattern.degree(v) {
                continue;
            }
            image[v] = w;
            if self.embed(pattern, order, depth + 1, used | 1 << w, image) {
                return true;
            }
        }
        image[v] = usize::MAX;
        false
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut g = Self::new(self.vertex_count());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// A canonical labelling: `perm` with `self.permuted(&perm)` equal for
    /// all isomorphic graphs, together with that canonical graph.
    ///
    /// Vertices are first sorted by degree and only permuted within degree
    /// classes; among those relabellings the one whose upper-triangle bit
    /// string is largest wins.
    pub fn canonical(&self) -> (Vec<usize>, SimpleGraph) {
        let n = self.vertex_count();
        assert!(
            n <= MAX_CANONICAL_VERTICES,
            "canonical forms need at most {MAX_CANONICAL_VERTICES} vertices"
        );
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| (core::cmp::Reverse(self.degree(v)), v));
        // Slot i of the canonical order may take any vertex whose degree
        // equals that of by_degree[i].
        let slot_degree: Vec<usize> = by_degree.iter().map(|&v| self.degree(v)).collect();
        let mut best_code = None;
        let mut best_order = by_degree.clone();
        let mut order = Vec::with_capacity(n);
        self.canonical_search(&slot_degree, 0, &mut order, 0, &mut best_code, &mut best_order);
        let mut perm = alloc::vec![0; n];
        for (slot, &v) in best_order.iter().enumerate() {
            perm[v] = slot;
        }
        let g = self.permuted(&perm);
        (perm, g)
    }

    fn canonical_search(
        &self,
        slot_degree: &[usize],
        used: u32,
        order: &mut Vec<usize>,
        code: u64,
        best_code: &mut Option<u64>,
        best_order: &mut Vec<usize>,
    ) {
        let n = slot_degree.len();
        let i = order.len();
        if i == n {
            if best_code.is_none_or(|b| code > b) {
                *best_code = Some(code);
                best_order.clone_from(order);
            }
            return;
        }
        for v in 0..n {
            if used & (1 << v) != 0 || self.degree(v) != slot_degree[i] {
                continue;
            }
            // Bits for pairs (j, i), j < i, appended in order.
            let mut c = code;
            for &u in order.iter() {
                c = (c << 1) | u64::from(self.has_edge(u, v));
            }
            // Prune: the prefix must be able to reach the best code.
            if let Some(b) = *best_code {
                let remaining = (n * (n - 1) / 2) - (i + 1) * i / 2;
                if (c << remaining) | ((1u64 << remaining) - 1) < b {
                    continue;
                }
            }
            order.push(v);
            self.canonical_search(slot_degree, used | 1 << v, order, c, best_code, best_order);
            order.pop();
        }
    }

    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edge_count() == other.edge_count()
            && self.canonical().1 == other.canonical().1
    }

    /// A vertex bijection `self → other` preserving adjacency.
    pub fn isomorphism_to(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return None;
        }
        let (p, a) = self.canonical();
        let (q, b) = other.canonical();
        if a != b {
            return None;
        }
        let mut q_inv = alloc::vec![0; q.len()];
        for (v, &slot) in q.iter().enumerate() {
            q_inv[slot] = v;
        }
        Some(p.iter().map(|&slot| q_inv[slot]).collect())
    }

    /// Every adjacency-preserving permutation of the vertices.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        let mut image = alloc::vec![usize::MAX; n];
        self.automorphism_search(0, 0, &mut image, &mut out);
        out
    }

    fn automorphism_search(
        &self,
        v: usize,
        used: u32,
        image: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.vertex_count();
        if v == n {
            out.push(image.clone());
            return;
        }
        for w in 0..n {
            if used & (1 << w) != 0 || self.degree(w) != self.degree(v) {
                continue;
            }
            if (0..v).all(|u| self.has_edge(u, v) == self.has_edge(image[u], w)) {
                image[v] = w;
                self.automorphism_search(v + 1, used | 1 << w, image, out);
            }
        }
        image[v] = usize::MAX;
    }
}

/// All graphs on `n` vertices up to isomorphism, as canonical forms in
/// increasing order.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= MAX_CANONICAL_VERTICES);
    let mut layer: BTreeSet<SimpleGraph> = BTreeSet::new();
    layer.insert(SimpleGraph::new(0));
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for g in &layer {
            for mask in 0u32..(1 << (m - 1)) {
                let mut h = SimpleGraph::new(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in bits(mask) {
                    h.add_edge(u, m - 1);
                }
                next.insert(h.canonical().1);
            }
        }
        layer = next;
    }
    layer.into_iter().collect()
}

/// Indices of the set bits, lowest first.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut p = alloc::vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = path_to_root(u);
    let pv = path_to_root(v);
    let meet = *pu.iter().find(|x| pv.contains(x)).expect("same component");
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let back: Vec<usize> = pv.iter().copied().take_while(|&x| x != meet).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}
