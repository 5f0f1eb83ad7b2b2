//! Isomorphism testing and counting for small graphs.
//!
//! Vertices are first split by joint color refinement (starting from degrees)
//! over both graphs, then a backtracking search maps vertices class by class,
//! checking adjacency and non-adjacency against every vertex mapped so far.

use crate::graph::Graph;
use std::collections::BTreeMap;

/// Stable colors for `g1` and `g2`, computed jointly so equal colors are comparable.
fn refine(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [g1, g2];
    let mut colors: [Vec<usize>; 2] = [g1.degrees().to_vec(), g2.degrees().to_vec()];
    let mut classes = usize::MAX;
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut sigs: [Vec<(usize, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
        for (side, g) in graphs.iter().enumerate() {
            for v in 0..g.n() {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| colors[side][w]).collect();
                around.sort_unstable();
                let sig = (colors[side][v], around);
                palette.insert(sig.clone(), 0);
                sigs[side].push(sig);
            }
        }
        for (i, slot) in palette.values_mut().enumerate() {
            *slot = i;
        }
        let next: [Vec<usize>; 2] = [
            sigs[0].iter().map(|s| palette[s]).collect(),
            sigs[1].iter().map(|s| palette[s]).collect(),
        ];
        let count = palette.len();
        colors = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let [a, b] = colors;
    (a, b)
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    order: Vec<usize>,
    color1: Vec<usize>,
    by_color2: BTreeMap<usize, Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    limit: u128,
    found: u128,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        if self.found >= self.limit {
            return;
        }
        if depth == self.order.len() {
            self.found += 1;
            return;
        }
        let v = self.order[depth];
        let candidates = self.by_color2[&self.color1[v]].clone();
        for w in candidates {
            if self.used[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                self.g1.has_edge(u, v) == self.g2.has_edge(self.image[u], w)
            });
            if !consistent {
                continue;
            }
            self.used[w] = true;
            self.image[v] = w;
            self.run(depth + 1);
            self.used[w] = false;
            if self.found >= self.limit {
                return;
            }
        }
    }
}

/// Number of isomorphisms `g1 -> g2`, stopping early once `limit` is reached.
pub(crate) fn count_isomorphisms(g1: &Graph, g2: &Graph, limit: u128) -> u128 {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return 0;
    }
    let mut d1 = g1.degrees().to_vec();
    let mut d2 = g2.degrees().to_vec();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return 0;
    }
    let (color1, color2) = refine(g1, g2);
    let mut hist1 = BTreeMap::new();
    let mut by_color2: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &c in &color1 {
        *hist1.entry(c).or_insert(0usize) += 1;
    }
    for (w, &c) in color2.iter().enumerate() {
        by_color2.entry(c).or_default().push(w);
    }
    let hist2: BTreeMap<usize, usize> = by_color2.iter().map(|(&c, ws)| (c, ws.len())).collect();
    if hist1 != hist2 {
        return 0;
    }

    // Rarest color first, then grow along edges so adjacency checks prune early.
    let n = g1.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let seed = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (hist1[&color1[v]], v))
            .unwrap();
        placed[seed] = true;
        order.push(seed);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<usize> = g1.neighbors(u).filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (hist1[&color1[w]], w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }

    let mut search = Search {
        g1,
        g2,
        order,
        color1,
        by_color2,
        image: vec![0; n],
        used: vec![false; n],
        limit,
        found: 0,
    };
    search.run(0);
    search.found
}

/// True iff an adjacency-preserving bijection between the vertex sets exists.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    count_isomorphisms(g1, g2, 1) > 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_is_not_star() {
        assert!(!are_isomorphic(&Graph::path(4), &Graph::star(3)));
    }

    #[test]
    fn identity_and_relabeling() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (2, 5)]).unwrap();
        assert!(are_isomorphic(&g, &g));
        // reverse labels
        let h_edges: Vec<_> = g.edges().iter().map(|&(u, v)| (5 - u, 5 - v)).collect();
        let h = Graph::new(6, &h_edges).unwrap();
        assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn regular_graphs_with_same_degrees() {
        // C_6 vs two triangles: same degree sequence, refinement cannot split them
        let c6 = Graph::cycle(6);
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!are_isomorphic(&c6, &two_triangles));
    }

    #[test]
    fn counts_all_isomorphisms() {
        assert_eq!(count_isomorphisms(&Graph::cycle(5), &Graph::cycle(5), u128::MAX), 10);
        assert_eq!(count_isomorphisms(&Graph::complete(4), &Graph::complete(4), u128::MAX), 24);
        assert_eq!(count_isomorphisms(&Graph::empty(3), &Graph::empty(3), u128::MAX), 6);
    }
}
