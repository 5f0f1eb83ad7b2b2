//! Exact counting of stars, pattern copies and injective homomorphisms.

use crate::count::{binomial, falling, Count};
use crate::graph::{words_for, Bits, Graph};
use crate::iso::count_isomorphisms;
use rayon::prelude::*;
use std::collections::VecDeque;

/// `N(S_k, G) = Σ_v C(d_v, k)`.
///
/// For `k = 1` every edge is counted once per endpoint, giving `2e`.
pub fn count_stars(g: &Graph, k: usize) -> Count {
    g.degrees().iter().map(|&d| binomial(d as u64, k as u64)).sum()
}

/// Injective homomorphisms `S_a -> G`, i.e. `Σ_v d_v (d_v - 1) ... (d_v - a + 1)`.
pub fn star_inj_homs(g: &Graph, leaves: usize) -> Count {
    g.degrees().iter().map(|&d| falling(d as u64, leaves as u64)).sum()
}

/// A pattern graph prepared for repeated injective-homomorphism counting.
///
/// Pattern vertices are matched in BFS order from a maximum-degree vertex of
/// each component, so every vertex after a component root has an already
/// mapped neighbor whose image row bounds its candidates.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    order: Vec<usize>,
    /// For each depth: earlier depths adjacent in the pattern.
    back: Vec<Vec<usize>>,
    need: Vec<usize>,
    automorphisms: Count,
}

impl Pattern {
    pub fn new(h: &Graph) -> Pattern {
        let order = match_order(h);
        let mut depth_of = vec![0; h.n()];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v] = d;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(d, &v)| {
                let mut b: Vec<usize> = h.neighbors(v).map(|w| depth_of[w]).filter(|&x| x < d).collect();
                b.sort_unstable();
                b
            })
            .collect();
        let need = order.iter().map(|&v| h.degree(v)).collect();
        Pattern {
            graph: h.clone(),
            order,
            back,
            need,
            automorphisms: automorphism_count(h),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn automorphisms(&self) -> Count {
        self.automorphisms
    }

    pub fn inj_homs(&self, g: &Graph) -> Count {
        if self.order.len() > g.n() {
            return Count::ZERO;
        }
        if self.order.is_empty() {
            return Count::ONE;
        }
        let mut m = Matcher::new(self, g);
        Count::new(m.descend(0) as u128)
    }

    /// Same as [`Pattern::inj_homs`] with the image of the first pattern vertex
    /// distributed over the rayon pool.
    pub fn inj_homs_parallel(&self, g: &Graph) -> Count {
        if self.order.len() > g.n() || self.order.len() <= 1 {
            return self.inj_homs(g);
        }
        (0..g.n())
            .into_par_iter()
            .filter(|&w| g.degree(w) >= self.need[0])
            .map(|w| {
                let mut m = Matcher::new(self, g);
                m.place(0, w);
                let c = m.descend(1);
                Count::new(c as u128)
            })
            .sum()
    }

    pub fn copies(&self, g: &Graph) -> Count {
        self.inj_homs(g)
            .exact_div(self.automorphisms)
            .expect("injective homomorphisms divisible by automorphisms")
    }
}

fn match_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut seen = vec![false; h.n()];
    for comp in h.components() {
        let root = *comp.iter().max_by_key(|&&v| (h.degree(v), std::cmp::Reverse(v))).unwrap();
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            let mut next: Vec<usize> = h.neighbors(u).filter(|&w| !seen[w]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(h.degree(w)), w));
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

struct Matcher<'a> {
    p: &'a Pattern,
    g: &'a Graph,
    words: usize,
    image: Vec<usize>,
    used: Vec<u64>,
    all: Vec<u64>,
    scratch: Vec<Vec<u64>>,
}

impl<'a> Matcher<'a> {
    fn new(p: &'a Pattern, g: &'a Graph) -> Self {
        let words = g.word_count();
        let mut all = vec![0u64; words];
        for v in 0..g.n() {
            all[v / 64] |= 1 << (v % 64);
        }
        debug_assert_eq!(words, words_for(g.n()));
        Matcher {
            p,
            g,
            words,
            image: vec![0; p.order.len()],
            used: vec![0; words],
            all,
            scratch: vec![vec![0; words]; p.order.len()],
        }
    }

    fn place(&mut self, depth: usize, w: usize) {
        self.image[depth] = w;
        self.used[w / 64] |= 1 << (w % 64);
    }

    fn unplace(&mut self, w: usize) {
        self.used[w / 64] &= !(1 << (w % 64));
    }

    fn descend(&mut self, depth: usize) -> u64 {
        let mut cand = std::mem::take(&mut self.scratch[depth]);
        let back = &self.p.back[depth];
        match back.first() {
            Some(&b) => cand.copy_from_slice(self.g.row(self.image[b])),
            None => cand.copy_from_slice(&self.all),
        }
        for &b in back.iter().skip(1) {
            for (c, r) in cand.iter_mut().zip(self.g.row(self.image[b])) {
                *c &= r;
            }
        }
        for (c, u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        let need = self.p.need[depth];
        let last = depth + 1 == self.p.order.len();
        let mut total = 0u64;
        for w in Bits::new(&cand) {
            if self.g.degree(w) < need {
                continue;
            }
            if last {
                total += 1;
            } else {
                self.place(depth, w);
                total += self.descend(depth + 1);
                self.unplace(w);
            }
        }
        debug_assert_eq!(cand.len(), self.words);
        self.scratch[depth] = cand;
        total
    }
}

/// Number of injective vertex maps `H -> G` carrying edges to edges.
pub fn inj_homs(h: &Graph, g: &Graph) -> Count {
    Pattern::new(h).inj_homs(g)
}

/// Number of bijections of `V(H)` preserving adjacency and non-adjacency.
pub fn automorphism_count(h: &Graph) -> Count {
    Count::new(count_isomorphisms(h, h, u128::MAX))
}

/// Number of subgraphs of `G` isomorphic to `H`.
pub fn count_copies(h: &Graph, g: &Graph) -> Count {
    Pattern::new(h).copies(g)
}

fn set_bit(bits: &mut [u64], v: usize) {
    bits[v / 64] |= 1 << (v % 64);
}

fn clear_bit(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1 << (v % 64));
}

fn test_bit(bits: &[u64], v: usize) -> bool {
    bits[v / 64] >> (v % 64) & 1 == 1
}

/// Free neighbors of `c`, i.e. `N(c)` minus `used`.
fn free_neighbors(g: &Graph, c: usize, used: &[u64]) -> Vec<usize> {
    g.neighbors(c).filter(|&w| !test_bit(used, w)).collect()
}

/// Calls `f` for every `k`-subset of `items`, with the subset marked in `used`.
fn for_each_subset(items: &[usize], k: usize, used: &mut Vec<u64>, f: &mut dyn FnMut(&mut Vec<u64>)) {
    fn go(items: &[usize], start: usize, k: usize, used: &mut Vec<u64>, f: &mut dyn FnMut(&mut Vec<u64>)) {
        if k == 0 {
            f(used);
            return;
        }
        for i in start..=items.len() - k {
            set_bit(used, items[i]);
            go(items, i + 1, k - 1, used, f);
            clear_bit(used, items[i]);
        }
    }
    if k <= items.len() {
        go(items, 0, k, used, f);
    }
}

/// Ordered tuples `(S_1, ..., S_r)` of pairwise vertex-disjoint stars, `S_i`
/// having `profile[i]` leaves, each star given by its center and leaf set.
pub fn count_disjoint_star_tuples(g: &Graph, profile: &[usize]) -> Count {
    fn go(g: &Graph, profile: &[usize], used: &mut Vec<u64>) -> Count {
        let (&a, rest) = match profile.split_first() {
            Some(x) => x,
            None => return Count::ONE,
        };
        let mut total = Count::ZERO;
        for c in 0..g.n() {
            if test_bit(used, c) {
                continue;
            }
            let free = free_neighbors(g, c, used);
            if rest.is_empty() {
                total += binomial(free.len() as u64, a as u64);
                continue;
            }
            set_bit(used, c);
            for_each_subset(&free, a, used, &mut |u| total += go(g, rest, u));
            clear_bit(used, c);
        }
        total
    }
    let mut used = vec![0u64; words_for(g.n())];
    go(g, profile, &mut used)
}

/// Number of `m`-edge matchings among `edges` avoiding `used`.
fn count_matchings(edges: &[(usize, usize)], m: usize, used: &mut Vec<u64>) -> Count {
    if m == 0 {
        return Count::ONE;
    }
    let mut total = Count::ZERO;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if test_bit(used, u) || test_bit(used, v) {
            continue;
        }
        if m == 1 {
            total += Count::ONE;
            continue;
        }
        set_bit(used, u);
        set_bit(used, v);
        total += count_matchings(&edges[i + 1..], m - 1, used);
        clear_bit(used, u);
        clear_bit(used, v);
    }
    total
}

/// Pairs `(S, M)` of a `k`-leaf star (center plus leaf set) and an `m`-edge
/// matching, vertex-disjoint from each other.
pub fn count_star_matching_pairs(g: &Graph, k: usize, m: usize) -> Count {
    assert!(k >= 1, "star needs at least one leaf");
    let mut used = vec![0u64; words_for(g.n())];
    let mut total = Count::ZERO;
    for c in 0..g.n() {
        let free = free_neighbors(g, c, &used);
        set_bit(&mut used, c);
        for_each_subset(&free, k, &mut used, &mut |u| total += count_matchings(g.edges(), m, u));
        clear_bit(&mut used, c);
    }
    total
}
