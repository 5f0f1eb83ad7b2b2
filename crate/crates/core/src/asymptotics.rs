//! Closed-form estimates for star tuples and star-matching pairs, the
//! star-factor bound on injective homomorphisms, and finite-`n` scans for the
//! density at which the quasi-clique overtakes the quasi-star.

use crate::constructions::{quasi_clique, quasi_star};
use crate::count::{binomial, Count};
use crate::counting::{count_stars, star_inj_homs};
use crate::decomposition::star_factor_profile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;
use std::fmt;

/// Largest `v` with `C(v, 2) <= e`. Both 0 and 1 qualify at `e = 0`; this returns 1.
pub fn clique_order(e: usize) -> usize {
    let mut v = 1;
    while (v + 1) * v / 2 <= e {
        v += 1;
    }
    v
}

/// Largest `s <= n/2` with `s (n - s) <= e`.
pub fn balanced_split(n: usize, e: usize) -> Result<usize> {
    (1..=n / 2)
        .rev()
        .find(|&a| a * (n - a) <= e)
        .ok_or(Error::NoBalancedSplit { n, e })
}

/// `Π (a_i + 1) C(v + 1, a_i + 1)` with `v = clique_order(e)`: upper bound on ordered vertex-disjoint
/// star tuples (each star a center plus a leaf set) in `K_n^e`.
pub fn star_tuple_estimate(profile: &[usize], e: usize) -> Count {
    let v = clique_order(e) as u64 + 1;
    profile
        .iter()
        .map(|&a| {
            assert!(a >= 1, "stars need at least one leaf");
            Count::from(a + 1) * binomial(v, a as u64 + 1)
        })
        .product()
}

/// `C(e, m) ((a+1) C(n-a, k) + (n-a) C(a+1, k))` with `a = balanced_split(n, e)`:
/// upper bound on `k`-star / `m`-matching disjoint pairs in `B_n^e`.
pub fn star_matching_estimate(k: usize, m: usize, n: usize, e: usize) -> Result<Count> {
    let a = balanced_split(n, e)? as u64;
    let n = n as u64;
    let k = k as u64;
    let stars = Count::from(a + 1) * binomial(n - a, k) + Count::from(n - a) * binomial(a + 1, k);
    Ok(binomial(e as u64, m as u64) * stars)
}

/// `Π_i max(h(S_{a_i}, K_n^e), h(S_{a_i}, S_n^e))` over the star-factor profile of `H`.
pub fn star_factor_upper_bound(h: &Graph, n: usize, e: usize) -> Result<Count> {
    let clique = quasi_clique(n, e)?;
    let star = quasi_star(n, e)?;
    Ok(star_factor_profile(h)?
        .into_iter()
        .map(|a| star_inj_homs(&clique, a).max(star_inj_homs(&star, a)))
        .product())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Leader {
    Clique,
    Star,
    Tie,
}

impl fmt::Display for Leader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Leader::Clique => "clique",
            Leader::Star => "star",
            Leader::Tie => "tie",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensitySample {
    pub e: usize,
    pub clique_count: Count,
    pub star_count: Count,
}

impl DensitySample {
    pub fn leader(&self) -> Leader {
        match self.clique_count.cmp(&self.star_count) {
            std::cmp::Ordering::Greater => Leader::Clique,
            std::cmp::Ordering::Less => Leader::Star,
            std::cmp::Ordering::Equal => Leader::Tie,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityScan {
    pub j: usize,
    pub n: usize,
    pub samples: Vec<DensitySample>,
    /// First sampled `e` from which the quasi-clique is never behind.
    pub crossover_e: usize,
    /// Sampled `e` at which the strict leader changes (ties carry the previous leader).
    pub sign_changes: Vec<usize>,
}

impl DensityScan {
    /// `crossover_e / C(n, 2)`, a finite-`n` stand-in for the crossover density.
    pub fn crossover_density(&self) -> f64 {
        self.crossover_e as f64 / (self.n * (self.n - 1) / 2) as f64
    }

    pub fn is_single_crossing(&self) -> bool {
        self.sign_changes.len() <= 1
    }
}

/// `N(S_j, K_n^e)` against `N(S_j, S_n^e)` for `e = 0, step, 2 step, ..., C(n, 2)`.
pub fn crossover_scan(j: usize, n: usize, step: usize) -> Result<DensityScan> {
    if j < 2 {
        return Err(Error::LeafCount { k: j, min: 2 });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut es: Vec<usize> = (0..=total).step_by(step.max(1)).collect();
    if es.last() != Some(&total) {
        es.push(total);
    }
    let samples = es
        .into_iter()
        .map(|e| {
            Ok(DensitySample {
                e,
                clique_count: count_stars(&quasi_clique(n, e)?, j),
                star_count: count_stars(&quasi_star(n, e)?, j),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let crossover_e = samples
        .iter()
        .rposition(|s| s.clique_count < s.star_count)
        .map_or(samples[0].e, |i| samples[i + 1].e);
    let mut sign_changes = Vec::new();
    let mut current = Leader::Tie;
    for s in &samples {
        let l = s.leader();
        if l != Leader::Tie {
            if current != Leader::Tie && l != current {
                sign_changes.push(s.e);
            }
            current = l;
        }
    }
    Ok(DensityScan { j, n, samples, crossover_e, sign_changes })
}

/// Largest finite-`n` crossover density over the star-factor profile of `H`.
/// Single-edge parts always tie and contribute 0.
pub fn profile_crossover_density(h: &Graph, n: usize) -> Result<f64> {
    let mut best: f64 = 0.0;
    for a in star_factor_profile(h)? {
        if a >= 2 {
            best = best.max(crossover_scan(a, n, 1)?.crossover_density());
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::quasi_complete_bipartite;
    use crate::counting::{count_disjoint_star_tuples, count_star_matching_pairs, inj_homs};

    #[test]
    fn clique_order_examples() {
        assert_eq!(clique_order(10), 5);
        assert_eq!(clique_order(11), 5);
        assert_eq!(clique_order(0), 1);
        assert_eq!(clique_order(1), 2);
    }

    #[test]
    fn balanced_split_examples() {
        assert_eq!(balanced_split(8, 12), Ok(2));
        assert_eq!(balanced_split(8, 15), Ok(3));
        assert_eq!(balanced_split(10, 9), Ok(1));
        assert_eq!(balanced_split(10, 8), Err(Error::NoBalancedSplit { n: 10, e: 8 }));
    }

    #[test]
    fn star_tuple_examples() {
        assert_eq!(star_tuple_estimate(&[1], 10).get(), 30);
        assert_eq!(star_tuple_estimate(&[2, 1], 10).get(), 1800);
    }

    #[test]
    fn star_matching_examples() {
        assert_eq!(star_matching_estimate(2, 1, 8, 12).unwrap().get(), 756);
        assert_eq!(star_matching_estimate(2, 0, 8, 12).unwrap().get(), 63);
        let exact = count_star_matching_pairs(&quasi_complete_bipartite(8, 12).unwrap(), 2, 0);
        assert_eq!(exact.get(), 36);
    }

    #[test]
    fn estimates_bound_exact_counts() {
        for v in 4..=12 {
            let e = v * (v - 1) / 2;
            let g = quasi_clique(v + 3, e).unwrap();
            for profile in [&[1][..], &[2], &[2, 1], &[1, 1], &[3, 1]] {
                assert!(count_disjoint_star_tuples(&g, profile) <= star_tuple_estimate(profile, e));
            }
        }
        for n in [8, 10, 12] {
            for e in n - 1..=n * n / 4 {
                let b = quasi_complete_bipartite(n, e).unwrap();
                for (k, m) in [(2, 0), (2, 1), (3, 1), (2, 2)] {
                    let exact = count_star_matching_pairs(&b, k, m);
                    assert!(exact <= star_matching_estimate(k, m, n, e).unwrap(), "n={n} e={e} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn star_factor_bound_examples() {
        for (n, e) in [(5, 4), (6, 12), (8, 20)] {
            assert_eq!(star_factor_upper_bound(&Graph::complete(2), n, e).unwrap().get(), 2 * e as u128);
        }
        let k3 = star_factor_upper_bound(&Graph::complete(3), 5, 10).unwrap();
        assert!(k3 >= inj_homs(&Graph::complete(3), &Graph::complete(5)));
        assert_eq!(k3.get(), 60);
    }

    #[test]
    fn scan_endpoints() {
        let s = crossover_scan(2, 20, 1).unwrap();
        let first = &s.samples[0];
        assert!(first.star_count >= first.clique_count);
        let last = s.samples.last().unwrap();
        assert_eq!(last.e, 190);
        assert_eq!(last.clique_count, last.star_count);
        let density = s.crossover_density();
        assert!(density > 0.0 && density < 1.0, "{density}");
    }

    #[test]
    fn scan_with_stride_keeps_endpoint() {
        let s = crossover_scan(3, 9, 5).unwrap();
        assert_eq!(s.samples.last().unwrap().e, 36);
        assert_eq!(s.samples[1].e, 5);
        assert!(crossover_scan(1, 9, 1).is_err());
    }
}
