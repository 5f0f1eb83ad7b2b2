//! Seeded generators for sweeps and property checks.

use crate::graph::Graph;
use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform `e`-edge graph on `n` labeled vertices.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, e: usize) -> Graph {
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let chosen: Vec<_> = index::sample(rng, pairs.len(), e).into_iter().map(|i| pairs[i]).collect();
    Graph::new(n, &chosen).expect("sampled pairs are distinct")
}

/// Uniform `e`-subset of the cross pairs of a random bipartition with
/// `left` vertices on one side. Requires `e <= left * (n - left)`.
pub fn random_bipartite<R: Rng>(rng: &mut R, n: usize, left: usize, e: usize) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let (l, r) = labels.split_at(left);
    let pairs: Vec<_> = l.iter().flat_map(|&u| r.iter().map(move |&v| (u, v))).collect();
    let chosen: Vec<_> = index::sample(rng, pairs.len(), e).into_iter().map(|i| pairs[i]).collect();
    Graph::new(n, &chosen).expect("sampled pairs are distinct")
}

/// Tree encoded by a Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Every labeled tree on `n >= 2` vertices, `n^(n-2)` of them.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2);
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut code| {
        let seq: Vec<usize> = (0..len)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect();
        prufer_tree(&seq)
    })
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 2);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_tree(&seq)
}
