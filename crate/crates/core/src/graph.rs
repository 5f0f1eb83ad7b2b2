//! Simple undirected graphs on dense labels `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex next to a sorted edge
//! list, so edge tests are O(1) and neighborhood intersections are word-wise.

use crate::error::{Error, Result};
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

/// Iterator over the set bits of a bitset row.
pub struct Bits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Bits<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        let current = words.first().copied().unwrap_or(0);
        Bits { words, index: 0, current }
    }
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Pairs may be given in either orientation.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let (a, b) = (u.min(v), u.max(v));
            if g.has_edge(a, b) {
                return Err(Error::DuplicateEdge(a, b));
            }
            g.set(a, b);
            g.edges.push((a, b));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph { n, words, rows: vec![0; n * words], edges: Vec::new(), degrees: vec![0; n] }
    }

    /// Builds a graph on at most 64 vertices from adjacency masks.
    /// The masks must be symmetric and loop-free.
    pub(crate) fn from_masks(n: usize, masks: &[u64]) -> Graph {
        debug_assert!(n <= 64 && masks.len() == n);
        let mut edges = Vec::new();
        let mut degrees = Vec::with_capacity(n);
        for (u, &m) in masks.iter().enumerate() {
            degrees.push(m.count_ones() as usize);
            let mut upper = m >> u >> 1;
            while upper != 0 {
                let off = upper.trailing_zeros() as usize;
                edges.push((u, u + 1 + off));
                upper &= upper - 1;
            }
        }
        Graph { n, words: 1, rows: masks.to_vec(), edges, degrees }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &edges).expect("valid complete graph")
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("valid cycle")
    }

    /// Star with `leaves` leaves; vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).expect("valid star")
    }

    /// `K_{s,t}` with left side `0..s` and right side `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Graph {
        let edges: Vec<_> = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))).collect();
        Graph::new(s + t, &edges).expect("valid complete bipartite graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bitset row of `v`'s neighborhood.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn word_count(&self) -> usize {
        self.words
    }

    pub fn neighbors(&self, v: usize) -> Bits<'_> {
        Bits::new(self.row(v))
    }

    /// True when `N(u) ⊆ N(w)`.
    pub fn neighborhood_subset(&self, u: usize, w: usize) -> bool {
        self.row(u).iter().zip(self.row(w)).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> Graph {
        let edges: Vec<_> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Graph::new(self.n, &edges).expect("complement is simple")
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Vertex-disjoint union; `other` is relabeled by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::new(self.n + other.n, &edges).expect("disjoint union is simple")
    }

    /// Same graph on `n` vertices, padding with isolated vertices.
    pub fn with_vertex_count(&self, n: usize) -> Result<Graph> {
        Graph::new(n, &self.edges)
    }

    /// Induced subgraph on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges).expect("induced subgraph is simple")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A two-coloring of the vertices with every edge crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for &v in &self.left {
            side[v] = Some(false);
        }
        for &v in &self.right {
            if side[v].is_some() {
                return false;
            }
            side[v] = Some(true);
        }
        side.iter().all(Option::is_some) && g.edges().iter().all(|&(u, v)| side[u] != side[v])
    }
}

/// Two-coloring with each component's lowest label on the left, or `None`
/// when the graph has an odd cycle.
pub fn bipartition_of(g: &Graph) -> Option<Bipartition> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for comp in g.components() {
        let root = comp[0];
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, c) in color.iter().enumerate() {
        if c.unwrap() {
            right.push(v);
        } else {
            left.push(v);
        }
    }
    Some(Bipartition { left, right })
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| g.row(u).iter().zip(g.row(v)).all(|(a, b)| a & b == 0))
}
