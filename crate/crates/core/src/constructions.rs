//! The quasi-clique, the quasi-star and the quasi-complete bipartite graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `e = C(a, 2) + b` with `0 <= b < a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueDecomposition {
    pub a: usize,
    pub b: usize,
}

impl CliqueDecomposition {
    pub fn of(e: usize) -> Self {
        // largest a with C(a,2) <= e; then b = e - C(a,2) < a
        let mut a = 1;
        while pairs(a + 1) <= e {
            a += 1;
        }
        CliqueDecomposition { a, b: e - pairs(a) }
    }
}

/// Shape of `B_n^e`: `K_{t,n-t}` minus `deficiency` edges at one small-side vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteShape {
    pub t: usize,
    pub deficiency: usize,
    pub deficient_vertex_degree: usize,
}

impl BipartiteShape {
    /// Defined for `1 <= e <= floor(n^2/4)`.
    pub fn of(n: usize, e: usize) -> Result<Self> {
        let max = n * n / 4;
        if e > max {
            return Err(Error::TooManyEdges { n, e, max });
        }
        assert!(e >= 1, "bipartite shape needs at least one edge");
        let t = (1..=n / 2).find(|&i| i * (n - i) >= e).expect("t exists when e <= n^2/4");
        Ok(BipartiteShape {
            t,
            deficiency: t * (n - t) - e,
            deficient_vertex_degree: e - (t - 1) * (n - t),
        })
    }
}

/// `K_n^e`: clique on `0..a`, vertex `a` joined to `0..b`, everything else isolated.
pub fn quasi_clique(n: usize, e: usize) -> Result<Graph> {
    let max = pairs(n);
    if e > max {
        return Err(Error::TooManyEdges { n, e, max });
    }
    let CliqueDecomposition { a, b } = CliqueDecomposition::of(e);
    let mut edges: Vec<_> = (0..a).flat_map(|u| (u + 1..a).map(move |v| (u, v))).collect();
    edges.extend((0..b).map(|u| (u, a)));
    Graph::new(n, &edges)
}

/// `S_n^e`: complement of `K_n^{C(n,2) - e}`.
pub fn quasi_star(n: usize, e: usize) -> Result<Graph> {
    let max = pairs(n);
    if e > max {
        return Err(Error::TooManyEdges { n, e, max });
    }
    Ok(quasi_clique(n, max - e)?.complement())
}

/// `B_n^e`: small side `0..t`, large side `t..n`; vertex 0 keeps only its
/// first `e - (t-1)(n-t)` large-side neighbors. `B_n^0` is the empty graph.
pub fn quasi_complete_bipartite(n: usize, e: usize) -> Result<Graph> {
    if e == 0 {
        return Ok(Graph::empty(n));
    }
    let shape = BipartiteShape::of(n, e)?;
    let t = shape.t;
    let mut edges: Vec<_> = (0..shape.deficient_vertex_degree).map(|j| (0, t + j)).collect();
    edges.extend((1..t).flat_map(|u| (t..n).map(move |v| (u, v))));
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition_of;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees().to_vec();
        d.sort_unstable();
        d
    }

    #[test]
    fn clique_decomposition() {
        assert_eq!(CliqueDecomposition::of(10), CliqueDecomposition { a: 5, b: 0 });
        assert_eq!(CliqueDecomposition::of(11), CliqueDecomposition { a: 5, b: 1 });
        assert_eq!(CliqueDecomposition::of(0), CliqueDecomposition { a: 1, b: 0 });
        for e in 0..200 {
            let CliqueDecomposition { a, b } = CliqueDecomposition::of(e);
            assert!(b < a && pairs(a) + b == e);
        }
    }

    #[test]
    fn quasi_clique_examples() {
        assert_eq!(quasi_clique(5, 10).unwrap(), Graph::complete(5));
        let g = quasi_clique(10, 11).unwrap();
        assert_eq!(g.edge_count(), 11);
        assert!(g.has_edge(0, 5) && !g.has_edge(1, 5));
        assert_eq!(g.degrees()[6..], [0, 0, 0, 0]);
        assert_eq!(quasi_clique(4, 7), Err(Error::TooManyEdges { n: 4, e: 7, max: 6 }));
    }

    #[test]
    fn quasi_star_examples() {
        assert_eq!(quasi_star(5, 0).unwrap(), Graph::empty(5));
        assert_eq!(quasi_star(4, 6).unwrap(), Graph::complete(4));
        let s = quasi_star(6, 5).unwrap();
        assert_eq!(sorted_degrees(&s), vec![1, 1, 1, 1, 1, 5]);
        assert!(quasi_star(4, 7).is_err());
    }

    #[test]
    fn quasi_bipartite_examples() {
        assert_eq!(quasi_complete_bipartite(8, 12).unwrap(), Graph::complete_bipartite(2, 6));
        let b = quasi_complete_bipartite(8, 13).unwrap();
        assert_eq!(b.edge_count(), 13);
        assert_eq!(&b.degrees()[..3], &[3, 5, 5]);
        assert_eq!(&b.degrees()[3..], &[3, 3, 3, 2, 2]);
        assert_eq!(quasi_complete_bipartite(6, 0).unwrap(), Graph::empty(6));
        assert!(quasi_complete_bipartite(5, 7).is_err());
    }

    #[test]
    fn shape_of_b_8_13() {
        let s = BipartiteShape::of(8, 13).unwrap();
        assert_eq!(s, BipartiteShape { t: 3, deficiency: 2, deficient_vertex_degree: 3 });
    }

    #[test]
    fn clique_and_star_are_complements() {
        for n in 0..=10 {
            let total = pairs(n);
            for e in 0..=total {
                let kc = quasi_clique(n, e).unwrap();
                let ks = quasi_star(n, total - e).unwrap();
                assert_eq!(kc.complement(), ks, "n={n} e={e}");
                assert_eq!(kc.edge_count(), e);
            }
        }
    }

    #[test]
    fn quasi_bipartite_sweep() {
        for n in 1..=40 {
            for e in 0..=n * n / 4 {
                let g = quasi_complete_bipartite(n, e).unwrap();
                assert_eq!(g.edge_count(), e);
                assert!(bipartition_of(&g).is_some());
                if e >= 1 {
                    let s = BipartiteShape::of(n, e).unwrap();
                    assert!(1 <= s.t && s.t <= n / 2);
                    assert!(s.t == 1 || (s.t - 1) * (n - s.t + 1) < e);
                    assert_eq!(g.degree(0), s.deficient_vertex_degree);
                    assert!(s.deficient_vertex_degree >= s.t);
                }
            }
        }
    }
}
