//! Spanning trees, star partitions of trees, and edge-plus-star covers.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::collections::VecDeque;

/// Partition of a tree's vertices into parts that each induce a star.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarPartition {
    /// Sorted parts, ordered by smallest vertex.
    pub parts: Vec<Vec<usize>>,
    pub centers: Vec<usize>,
}

impl StarPartition {
    /// Leaf counts of the parts, in part order.
    pub fn leaf_counts(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len() - 1).collect()
    }

    /// Checks disjointness, coverage, part size and the induced-star property.
    pub fn is_valid_for(&self, t: &Graph) -> bool {
        let mut seen = vec![false; t.n()];
        for (part, &c) in self.parts.iter().zip(&self.centers) {
            if part.len() < 2 || !part.contains(&c) {
                return false;
            }
            for &v in part {
                if v >= t.n() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            // induced star at c: c adjacent to all others, no other edges
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    if t.has_edge(u, v) != (u == c || v == c) {
                        return false;
                    }
                }
            }
        }
        self.parts.len() == self.centers.len() && seen.iter().all(|&s| s)
    }
}

/// Disjoint matching edges plus an optional star covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeStarCover {
    pub matching: Vec<(usize, usize)>,
    pub star: Option<(usize, Vec<usize>)>,
}

impl EdgeStarCover {
    pub fn is_valid_for(&self, b: &Graph) -> bool {
        let mut seen = vec![false; b.n()];
        let mut mark = |v: usize| v < b.n() && !std::mem::replace(&mut seen[v], true);
        if let Some((c, leaves)) = &self.star {
            if leaves.len() < 2 || !mark(*c) {
                return false;
            }
            for &l in leaves {
                if !b.has_edge(*c, l) || !mark(l) {
                    return false;
                }
            }
        }
        for &(u, v) in &self.matching {
            if !b.has_edge(u, v) || !mark(u) || !mark(v) {
                return false;
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// BFS spanning tree rooted at vertex 0.
pub fn spanning_tree(h: &Graph) -> Result<Graph> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; h.n()];
    let mut edges = Vec::new();
    if h.n() > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for w in h.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    edges.push((u, w));
                    queue.push_back(w);
                }
            }
        }
    }
    Graph::new(h.n(), &edges)
}

/// Splits a tree into induced stars on at least two vertices.
///
/// A subtree that is a star is emitted whole. Otherwise the lowest non-leaf
/// `v` with a non-leaf neighbor `u` is cut along `vu`: the side of `u` and the
/// side of `v` both keep at least two vertices and are split recursively.
pub fn star_partition(t: &Graph) -> Result<StarPartition> {
    if t.n() < 2 {
        return Err(Error::TooFewVertices(t.n()));
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut stack = vec![(0..t.n()).collect::<Vec<_>>()];
    let mut inside = vec![false; t.n()];
    while let Some(part) = stack.pop() {
        for &v in &part {
            inside[v] = true;
        }
        let deg = |v: usize| t.neighbors(v).filter(|&w| inside[w]).count();
        if let Some(&c) = part.iter().find(|&&v| deg(v) + 1 == part.len()) {
            // a tree in which one vertex sees all others is a star
            out.push((part.clone(), c));
        } else {
            let (v, u) = part
                .iter()
                .filter(|&&v| deg(v) >= 2)
                .find_map(|&v| t.neighbors(v).find(|&w| inside[w] && deg(w) >= 2).map(|w| (v, w)))
                .expect("a non-star tree has two adjacent non-leaves");
            // u's side after deleting the edge vu
            let mut near_u = vec![u];
            let mut on_u = vec![false; t.n()];
            on_u[u] = true;
            let mut head = 0;
            while head < near_u.len() {
                let x = near_u[head];
                head += 1;
                for w in t.neighbors(x) {
                    if inside[w] && !on_u[w] && w != v {
                        on_u[w] = true;
                        near_u.push(w);
                    }
                }
            }
            let near_v: Vec<usize> = part.iter().copied().filter(|&x| !on_u[x]).collect();
            near_u.sort_unstable();
            stack.push(near_u);
            stack.push(near_v);
        }
        for &v in &part {
            inside[v] = false;
        }
    }
    out.sort();
    let (parts, centers) = out.into_iter().unzip();
    Ok(StarPartition { parts, centers })
}

/// Leaf counts of the star partition of the BFS spanning tree, non-increasing.
pub fn star_factor_profile(h: &Graph) -> Result<Vec<usize>> {
    let mut profile = star_partition(&spanning_tree(h)?)?.leaf_counts();
    profile.sort_unstable_by(|a, b| b.cmp(a));
    Ok(profile)
}

/// Perfect matching of the vertices in `free` (a bitmask) using edges of `b`.
fn perfect_matching(b: &Graph, free: u64, acc: &mut Vec<(usize, usize)>) -> bool {
    if free == 0 {
        return true;
    }
    let u = free.trailing_zeros() as usize;
    let rest = free & !(1 << u);
    let mut options = b.row(u)[0] & rest;
    while options != 0 {
        let v = options.trailing_zeros() as usize;
        options &= options - 1;
        acc.push((u, v));
        if perfect_matching(b, rest & !(1 << v), acc) {
            return true;
        }
        acc.pop();
    }
    false
}

fn subsets_desc(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, k, &mut Vec::new(), &mut out);
    out
}

/// First cover by vertex-disjoint edges plus at most one star with at least
/// two leaves: star centers ascending, leaf sets largest first, and the
/// star-free cover last.
pub fn edge_star_cover(b: &Graph) -> Option<EdgeStarCover> {
    let n = b.n();
    assert!(n <= 64, "edge_star_cover is an exhaustive search for small graphs");
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for c in 0..n {
        let nbrs: Vec<usize> = b.neighbors(c).collect();
        for size in (2..=nbrs.len()).rev() {
            // parity: the residual must split into edges
            if (n - size - 1) % 2 == 1 {
                continue;
            }
            for leaves in subsets_desc(&nbrs, size) {
                let used = leaves.iter().fold(1u64 << c, |m, &l| m | 1 << l);
                let mut matching = Vec::new();
                if perfect_matching(b, all & !used, &mut matching) {
                    return Some(EdgeStarCover { matching, star: Some((c, leaves)) });
                }
            }
        }
    }
    let mut matching = Vec::new();
    perfect_matching(b, all, &mut matching).then_some(EdgeStarCover { matching, star: None })
}
