//! Exhaustive maximization of `N(H, G)` over labeled hosts with `n` vertices
//! and `e` edges, optionally restricted to bipartite or triangle-free hosts.
//!
//! The `e`-subsets of the candidate vertex pairs are ranked in lexicographic
//! order and cut into contiguous shards. Shards are searched in parallel and
//! merged in rank order, so records (witness order included) do not depend on
//! the thread count.

use crate::constructions::quasi_complete_bipartite;
use crate::count::{binomial, Count};
use crate::counting::{count_stars, Pattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HostClass {
    All,
    Bipartite,
    TriangleFree,
}

impl fmt::Display for HostClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HostClass::All => "all",
            HostClass::Bipartite => "bipartite",
            HostClass::TriangleFree => "trifree",
        })
    }
}

impl FromStr for HostClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(HostClass::All),
            "bipartite" => Ok(HostClass::Bipartite),
            "trifree" | "triangle_free" => Ok(HostClass::TriangleFree),
            other => Err(format!("unknown host class {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Largest number of labeled hosts a single run may enumerate.
    pub budget: u128,
    /// Witnesses kept per record, pairwise non-isomorphic.
    pub witnesses: usize,
    /// Shards per enumeration space.
    pub shards: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: 100_000_000, witnesses: 3, shards: 64 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub e: usize,
    #[serde(skip)]
    pub pattern: Graph,
    pub host_class: HostClass,
    pub maximum: Count,
    #[serde(skip)]
    pub witnesses: Vec<Graph>,
    /// Labeled hosts enumerated (after class filtering: hosts scored).
    pub hosts_scored: u64,
}

/// Position of a combination in lexicographic order, and its successor.
pub(crate) mod combos {
    use crate::count::binomial;

    /// The `rank`-th `k`-subset of `0..n` in lexicographic order.
    pub fn unrank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
        let mut out = Vec::with_capacity(k);
        let mut next = 0;
        for i in 0..k {
            let mut c = next;
            loop {
                let block = binomial((n - c - 1) as u64, (k - i - 1) as u64).get();
                if rank < block {
                    break;
                }
                rank -= block;
                c += 1;
            }
            out.push(c);
            next = c + 1;
        }
        out
    }

    /// Advances to the lexicographic successor; false after the last subset.
    pub fn advance(c: &mut [usize], n: usize) -> bool {
        let k = c.len();
        for i in (0..k).rev() {
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

struct Space {
    pairs: Vec<(usize, usize)>,
    size: u128,
}

struct ShardJob {
    space: usize,
    start: u128,
    len: u128,
}

#[derive(Default)]
struct ShardBest {
    best: Option<u128>,
    witnesses: Vec<Graph>,
    scored: u64,
}

fn spaces_for(n: usize, e: usize, class: HostClass) -> Result<Vec<Space>> {
    let all_pairs = n * n.saturating_sub(1) / 2;
    let half = n * n / 4;
    match class {
        HostClass::All if e > all_pairs => return Err(Error::TooManyEdges { n, e, max: all_pairs }),
        HostClass::Bipartite if e > half => return Err(Error::TooManyEdges { n, e, max: half }),
        HostClass::TriangleFree if e > half => {
            return Err(Error::NoTriangleFreeHost { n, e, max: half })
        }
        _ => {}
    }
    let space = |pairs: Vec<(usize, usize)>| {
        let size = binomial(pairs.len() as u64, e as u64).get();
        Space { pairs, size }
    };
    Ok(match class {
        HostClass::All | HostClass::TriangleFree => {
            vec![space((0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())]
        }
        // left part is 0..p; e = 0 has the single empty host
        HostClass::Bipartite if e == 0 => vec![space(Vec::new())],
        HostClass::Bipartite => (1..=n / 2)
            .map(|p| space((0..p).flat_map(|u| (p..n).map(move |v| (u, v))).collect()))
            .filter(|s| s.size > 0)
            .collect(),
    })
}

fn has_triangle(masks: &[u64], pairs: &[(usize, usize)], combo: &[usize]) -> bool {
    combo.iter().any(|&i| {
        let (u, v) = pairs[i];
        masks[u] & masks[v] != 0
    })
}

fn run_shard(
    pattern: &Pattern,
    n: usize,
    class: HostClass,
    space: &Space,
    job: &ShardJob,
    e: usize,
    keep: usize,
) -> ShardBest {
    let mut out = ShardBest::default();
    let mut combo = combos::unrank(space.pairs.len(), e, job.start);
    let mut masks = vec![0u64; n];
    for step in 0..job.len {
        if step > 0 {
            combos::advance(&mut combo, space.pairs.len());
        }
        masks.iter_mut().for_each(|m| *m = 0);
        for &i in &combo {
            let (u, v) = space.pairs[i];
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        if class == HostClass::TriangleFree && has_triangle(&masks, &space.pairs, &combo) {
            continue;
        }
        out.scored += 1;
        let host = Graph::from_masks(n, &masks);
        let score = pattern.inj_homs(&host).get();
        match out.best {
            Some(b) if score < b => {}
            Some(b) if score == b => {
                if out.witnesses.len() < keep && !out.witnesses.iter().any(|w| are_isomorphic(w, &host)) {
                    out.witnesses.push(host);
                }
            }
            _ => {
                out.best = Some(score);
                out.witnesses.clear();
                if keep > 0 {
                    out.witnesses.push(host);
                }
            }
        }
    }
    out
}

/// Exact `max N(H, G)` over hosts of the given class with `n` vertices and `e` edges.
pub fn extremal_search(n: usize, e: usize, h: &Graph, class: HostClass, cfg: &OracleConfig) -> Result<ExtremalRecord> {
    assert!(n <= 64, "oracle hosts are limited to 64 vertices");
    let spaces = spaces_for(n, e, class)?;
    let required: u128 = spaces.iter().map(|s| s.size).sum();
    if required > cfg.budget {
        return Err(Error::BudgetExceeded { required, budget: cfg.budget });
    }
    let pattern = Pattern::new(h);

    let mut jobs = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        let shards = (cfg.shards.max(1) as u128).min(s.size);
        let base = s.size / shards.max(1);
        let extra = s.size % shards.max(1);
        let mut start = 0;
        for j in 0..shards {
            let len = base + u128::from(j < extra);
            jobs.push(ShardJob { space: i, start, len });
            start += len;
        }
    }
    let results: Vec<ShardBest> = jobs
        .par_iter()
        .map(|job| run_shard(&pattern, n, class, &spaces[job.space], job, e, cfg.witnesses))
        .collect();

    let best = results.iter().filter_map(|r| r.best).max();
    let best = best.expect("every feasible class has at least one host");
    let mut witnesses: Vec<Graph> = Vec::new();
    for r in results.iter().filter(|r| r.best == Some(best)) {
        for w in &r.witnesses {
            if witnesses.len() < cfg.witnesses && !witnesses.iter().any(|k| are_isomorphic(k, w)) {
                witnesses.push(w.clone());
            }
        }
    }
    let maximum = Count::new(best)
        .exact_div(pattern.automorphisms())
        .expect("injective homomorphisms divisible by automorphisms");
    Ok(ExtremalRecord {
        n,
        e,
        pattern: h.clone(),
        host_class: class,
        maximum,
        witnesses,
        hosts_scored: results.iter().map(|r| r.scored).sum(),
    })
}

/// `ex(n, e, H)` over all hosts.
pub fn ex_oracle(n: usize, e: usize, h: &Graph) -> Result<ExtremalRecord> {
    extremal_search(n, e, h, HostClass::All, &OracleConfig::default())
}

/// `ex_bip(n, e, H)` over bipartite hosts.
pub fn ex_bip_oracle(n: usize, e: usize, h: &Graph) -> Result<ExtremalRecord> {
    extremal_search(n, e, h, HostClass::Bipartite, &OracleConfig::default())
}

/// `ex(n, e, H, K_3)` over triangle-free hosts.
pub fn ex_trifree_oracle(n: usize, e: usize, h: &Graph) -> Result<ExtremalRecord> {
    extremal_search(n, e, h, HostClass::TriangleFree, &OracleConfig::default())
}

/// Bipartite maxima of cherries for 12 and 13 edges on 8 vertices: one more
/// edge forces a more balanced host with fewer cherries.
pub fn nonmonotonicity_demo() -> Result<(Count, Count)> {
    let cherry = Graph::star(2);
    let twelve = ex_bip_oracle(8, 12, &cherry)?.maximum;
    let thirteen = ex_bip_oracle(8, 13, &cherry)?.maximum;
    assert!(twelve > thirteen, "expected {twelve} > {thirteen}");
    debug_assert_eq!(thirteen, count_stars(&quasi_complete_bipartite(8, 13)?, 2));
    Ok((twelve, thirteen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::quasi_clique;
    use crate::counting::count_copies;

    #[test]
    fn unrank_matches_iteration() {
        for (n, k) in [(6, 3), (7, 0), (5, 5), (8, 2)] {
            let total = binomial(n as u64, k as u64).get();
            let mut c = combos::unrank(n, k, 0);
            for r in 0..total {
                assert_eq!(combos::unrank(n, k, r), c);
                let more = combos::advance(&mut c, n);
                assert_eq!(more, r + 1 < total);
            }
        }
    }

    #[test]
    fn general_examples() {
        let r = ex_oracle(4, 5, &Graph::complete(3)).unwrap();
        assert_eq!(r.maximum.get(), 2);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(ex_oracle(5, 10, &Graph::complete(3)).unwrap().maximum.get(), 10);
        let r = ex_oracle(6, 12, &Graph::path(4)).unwrap();
        assert_eq!(r.hosts_scored, 455);
        assert!(r.maximum >= count_copies(&Graph::path(4), &quasi_clique(6, 12).unwrap()));
    }

    #[test]
    fn bipartite_examples() {
        let r = ex_bip_oracle(8, 12, &Graph::star(2)).unwrap();
        assert_eq!(r.maximum.get(), 36);
        assert!(are_isomorphic(&r.witnesses[0], &Graph::complete_bipartite(2, 6)));
        assert_eq!(ex_bip_oracle(8, 13, &Graph::star(2)).unwrap().maximum.get(), 34);
        for n in 2..=6 {
            for e in 0..=n * n / 4 {
                assert_eq!(ex_bip_oracle(n, e, &Graph::complete(2)).unwrap().maximum.get(), e as u128);
            }
        }
    }

    #[test]
    fn triangle_free_examples() {
        let r = ex_trifree_oracle(4, 4, &Graph::path(4)).unwrap();
        assert_eq!(r.maximum.get(), 4);
        assert_eq!(r.witnesses, vec![Graph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()]);
        assert!(are_isomorphic(&r.witnesses[0], &quasi_complete_bipartite(4, 4).unwrap()));
        let r = ex_trifree_oracle(5, 6, &Graph::path(4)).unwrap();
        assert!(r.maximum >= count_copies(&Graph::path(4), &quasi_complete_bipartite(5, 6).unwrap()));
        assert_eq!(
            ex_trifree_oracle(4, 5, &Graph::path(3)).unwrap_err(),
            Error::NoTriangleFreeHost { n: 4, e: 5, max: 4 }
        );
    }

    #[test]
    fn demo_values() {
        let (a, b) = nonmonotonicity_demo().unwrap();
        assert_eq!((a.get(), b.get()), (36, 34));
        // without the bipartite restriction an extra edge never hurts
        let star = Graph::star(2);
        assert!(ex_oracle(7, 13, &star).unwrap().maximum >= ex_oracle(7, 12, &star).unwrap().maximum);
    }

    #[test]
    fn budget_guard() {
        let cfg = OracleConfig { budget: 100, ..OracleConfig::default() };
        let err = extremal_search(6, 5, &Graph::complete(2), HostClass::All, &cfg).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { required: 3003, budget: 100 });
    }

    #[test]
    fn shard_count_does_not_change_records() {
        let h = Graph::path(4);
        let one = OracleConfig { shards: 1, ..OracleConfig::default() };
        let many = OracleConfig { shards: 37, ..OracleConfig::default() };
        for class in [HostClass::All, HostClass::Bipartite, HostClass::TriangleFree] {
            let a = extremal_search(6, 6, &h, class, &one).unwrap();
            let b = extremal_search(6, 6, &h, class, &many).unwrap();
            assert_eq!(a.maximum, b.maximum);
            assert_eq!(a.witnesses, b.witnesses);
        }
    }
}
