//! Self-check suite: each check recomputes a known value or property with the
//! library and reports what it measured. Used by `extremal verify` and by the
//! acceptance test target.

use crate::asymptotics::star_matching_estimate;
use crate::constructions::{quasi_clique, quasi_complete_bipartite, quasi_star};
use crate::count::Count;
use crate::counting::{automorphism_count, count_copies, count_star_matching_pairs, count_stars, inj_homs};
use crate::decomposition::star_partition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::nested::{run_transformation, weight, WeightParams};
use crate::oracle::{ex_bip_oracle, ex_oracle, ex_trifree_oracle};
use crate::random::{all_labeled_trees, random_bipartite, random_graph, random_tree, rng};
use rand::Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Quick,
    Full,
}

impl FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(Scale::Quick),
            "full" => Ok(Scale::Full),
            other => Err(format!("unknown scale {other:?}")),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Quick => "quick",
            Scale::Full => "full",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub status: Status,
    pub measured: String,
    /// Wall-clock time; left out of rendered reports so they stay reproducible.
    #[serde(skip)]
    pub seconds: f64,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{:>2}] {}: {}", self.status, self.id, self.name, self.measured)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub scale: Scale,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, id: usize) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# verify scale={} seed={}", self.scale, self.seed)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        writeln!(f, "# {} checks, {} failed", self.checks.len(), failed)
    }
}

/// What a check found: verdict plus a one-line summary of the measured values.
pub struct Outcome {
    pub ok: bool,
    pub measured: String,
}

impl Outcome {
    fn new(ok: bool, measured: impl Into<String>) -> Self {
        Outcome { ok, measured: measured.into() }
    }
}

pub type CheckFn = fn(Scale, u64) -> Result<Outcome>;

pub const CHECKS: [(usize, &str, CheckFn); 11] = [
    (1, "bipartite cherry golden values", check_golden_values),
    (2, "bipartite star maxima equal B_n^e", check_bipartite_stars),
    (3, "bipartite cherry maximum drops from 12 to 13 edges", check_nonmonotone),
    (4, "transformation soundness", check_transformation),
    (5, "weight properties", check_weights),
    (6, "tree star partitions", check_star_partitions),
    (7, "cherry maxima equal best of quasi-clique and quasi-star", check_cherry_shape),
    (8, "dense P_4 and K_3 maxima near the quasi-clique", check_dense_sandwich),
    (9, "triangle-free path maxima at least B_n^e", check_trifree_paths),
    (10, "star-matching pair estimate ratio", check_pair_ratio),
    (11, "counter cross-validation", check_counters),
];

pub fn run_check(id: usize, scale: Scale, seed: u64) -> CheckResult {
    let &(id, name, f) = CHECKS.iter().find(|c| c.0 == id).expect("known check id");
    let start = Instant::now();
    let (status, measured) = match f(scale, seed) {
        Ok(o) => (if o.ok { Status::Pass } else { Status::Fail }, o.measured),
        Err(e @ Error::BudgetExceeded { .. }) => (Status::Skipped, e.to_string()),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    CheckResult { id, name, status, measured, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_verify_suite(scale: Scale, seed: u64) -> VerifyReport {
    let checks = CHECKS.iter().map(|c| run_check(c.0, scale, seed)).collect();
    VerifyReport { scale, seed, checks }
}

fn full_or(scale: Scale, full: usize, quick: usize) -> usize {
    match scale {
        Scale::Full => full,
        Scale::Quick => quick,
    }
}

fn check_golden_values(_: Scale, _: u64) -> Result<Outcome> {
    let a = count_stars(&quasi_complete_bipartite(8, 12)?, 2);
    let b = count_stars(&quasi_complete_bipartite(8, 13)?, 2);
    Ok(Outcome::new(a.get() == 36 && b.get() == 34, format!("N(S_2,B_8^12)={a} N(S_2,B_8^13)={b}")))
}

fn check_bipartite_stars(scale: Scale, _: u64) -> Result<Outcome> {
    let max_n = full_or(scale, 8, 7);
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 2..=max_n {
        for e in 1..=n * n / 4 {
            let b = quasi_complete_bipartite(n, e)?;
            for k in [2, 3] {
                let oracle = ex_bip_oracle(n, e, &Graph::star(k))?.maximum;
                let built = count_stars(&b, k);
                cases += 1;
                if oracle != built {
                    bad.push(format!("(n={n},e={e},k={k}: {oracle} vs {built})"));
                }
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("n<={max_n}, {cases} cases, mismatches {bad:?}")))
}

fn check_nonmonotone(_: Scale, _: u64) -> Result<Outcome> {
    let cherry = Graph::star(2);
    let twelve = ex_bip_oracle(8, 12, &cherry)?.maximum;
    let thirteen = ex_bip_oracle(8, 13, &cherry)?.maximum;
    Ok(Outcome::new(
        twelve.get() == 36 && thirteen.get() == 34,
        format!("ex_bip(8,12,S_2)={twelve} ex_bip(8,13,S_2)={thirteen}"),
    ))
}

fn check_transformation(scale: Scale, seed: u64) -> Result<Outcome> {
    let graphs = full_or(scale, 200, 60);
    let max_n = full_or(scale, 24, 16);
    let mut r = rng(seed);
    let mut violations = Vec::new();
    let mut steps = 0;
    for _ in 0..graphs {
        let n = r.gen_range(2..=max_n);
        let left = r.gen_range(1..=n / 2);
        let e = r.gen_range(1..=left * (n - left));
        let g = random_bipartite(&mut r, n, left, e);
        let target = quasi_complete_bipartite(n, e)?;
        for k in [2, 3, 4] {
            let (end, trace) = run_transformation(&g, n, WeightParams::new(k)?)?;
            steps += trace.len();
            if !trace.is_monotone() || !trace.shifts_strictly_increase() || !are_isomorphic(&end, &target) {
                violations.push(format!("(n={n},e={e},k={k})"));
            }
        }
    }
    Ok(Outcome::new(
        violations.is_empty(),
        format!("{graphs} graphs n<={max_n}, k in 2..=4, {steps} steps, violations {violations:?}"),
    ))
}

fn check_weights(_: Scale, _: u64) -> Result<Outcome> {
    const LIMIT: usize = 50;
    let mut violations = 0u64;
    let mut checked = 0u64;
    for k in 2..=5 {
        let p = WeightParams::new(k)?;
        for i in 1..=LIMIT {
            for j in 1..=LIMIT {
                checked += 2;
                violations += u64::from(weight(i, j, p) != weight(j, i, p));
                if i < LIMIT {
                    violations += u64::from(weight(i, j, p) > weight(i + 1, j, p));
                }
            }
        }
        for x in 1..=LIMIT {
            for y in 1..=x {
                for z in 1..y {
                    checked += 1;
                    violations += u64::from(weight(x - z, y, p) > weight(x, y - z, p));
                }
            }
        }
    }
    Ok(Outcome::new(violations == 0, format!("{checked} comparisons, {violations} violations")))
}

fn check_star_partitions(scale: Scale, seed: u64) -> Result<Outcome> {
    let max_n = full_or(scale, 8, 7);
    let random = full_or(scale, 500, 200);
    let mut r = rng(seed);
    let mut trees = 0;
    let mut bad = Vec::new();
    let mut check = |t: &Graph| -> Result<()> {
        trees += 1;
        if !star_partition(t)?.is_valid_for(t) && bad.len() < 5 {
            bad.push(t.edges().to_vec());
        }
        Ok(())
    };
    for n in 2..=max_n {
        for t in all_labeled_trees(n) {
            check(&t)?;
        }
    }
    for _ in 0..random {
        let n = r.gen_range(2..=12);
        check(&random_tree(&mut r, n))?;
    }
    Ok(Outcome::new(bad.is_empty(), format!("{trees} trees, invalid {bad:?}")))
}

fn check_cherry_shape(scale: Scale, _: u64) -> Result<Outcome> {
    let max_n = full_or(scale, 7, 6);
    let cherry = Graph::star(2);
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 1..=max_n {
        for e in 0..=n * (n - 1) / 2 {
            let oracle = ex_oracle(n, e, &cherry)?.maximum;
            let best = count_stars(&quasi_clique(n, e)?, 2).max(count_stars(&quasi_star(n, e)?, 2));
            cases += 1;
            if oracle != best {
                bad.push(format!("(n={n},e={e}: {oracle} vs {best})"));
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("n<={max_n}, {cases} cases, mismatches {bad:?}")))
}

fn check_dense_sandwich(scale: Scale, _: u64) -> Result<Outcome> {
    const MAX_RATIO: f64 = 1.5;
    let max_n = full_or(scale, 7, 6);
    let mut worst: f64 = 1.0;
    let mut bad = Vec::new();
    for (name, h) in [("P_4", Graph::path(4)), ("K_3", Graph::complete(3))] {
        for n in h.n()..=max_n {
            let total = n * (n - 1) / 2;
            let from = (4 * total).div_ceil(5);
            for e in from..=total {
                let oracle = ex_oracle(n, e, &h)?.maximum;
                let built = count_copies(&h, &quasi_clique(n, e)?);
                let ratio = oracle.ratio(built);
                worst = worst.max(ratio);
                let ok = oracle >= built && ratio <= MAX_RATIO && (e < total || oracle == built);
                if !ok {
                    bad.push(format!("({name},n={n},e={e}: {oracle}/{built})"));
                }
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), format!("n<={max_n}, worst ratio {worst:.4}, violations {bad:?}")))
}

fn check_trifree_paths(scale: Scale, _: u64) -> Result<Outcome> {
    let max_n = full_or(scale, 7, 6);
    let mut cases = 0;
    let mut bad = Vec::new();
    for l in [4, 5] {
        let path = Graph::path(l);
        for n in l..=max_n {
            for e in 1..=n * n / 4 {
                let oracle = ex_trifree_oracle(n, e, &path)?.maximum;
                let built = count_copies(&path, &quasi_complete_bipartite(n, e)?);
                cases += 1;
                if oracle < built {
                    bad.push(format!("(P_{l},n={n},e={e}: {oracle} < {built})"));
                }
            }
        }
    }
    let c4 = ex_trifree_oracle(4, 4, &Graph::path(4))?.maximum;
    let b44 = count_copies(&Graph::path(4), &quasi_complete_bipartite(4, 4)?);
    let exact = c4.get() == 4 && b44.get() == 4;
    Ok(Outcome::new(
        bad.is_empty() && exact,
        format!("n<={max_n}, {cases} cases, (4,4): oracle {c4} construction {b44}, violations {bad:?}"),
    ))
}

/// Exact over estimate for the star-matching pair count in `B_n^e`, `e = ceil(n^1.5)`.
pub fn pair_ratio(n: usize) -> Result<(usize, Count, Count)> {
    let e = (n as f64).powf(1.5).ceil() as usize;
    let exact = count_star_matching_pairs(&quasi_complete_bipartite(n, e)?, 2, 1);
    let estimate = star_matching_estimate(2, 1, n, e)?;
    Ok((e, exact, estimate))
}

fn check_pair_ratio(_: Scale, _: u64) -> Result<Outcome> {
    const LOW: f64 = 0.8;
    const HIGH: f64 = 1.0;
    let mut ok = true;
    let mut prev = f64::NEG_INFINITY;
    let mut parts = Vec::new();
    for n in [30, 40, 60] {
        let (e, exact, estimate) = pair_ratio(n)?;
        let ratio = exact.ratio(estimate);
        ok &= (LOW..=HIGH).contains(&ratio) && ratio >= prev;
        prev = ratio;
        parts.push(format!("n={n} e={e} ratio={ratio:.4}"));
    }
    Ok(Outcome::new(ok, format!("{} (want [{LOW}, {HIGH}], non-decreasing)", parts.join(", "))))
}

fn check_counters(scale: Scale, seed: u64) -> Result<Outcome> {
    let graphs = full_or(scale, 300, 100);
    let mut r = rng(seed);
    let mut violations = Vec::new();
    for _ in 0..graphs {
        let n = r.gen_range(1..=10);
        let e = r.gen_range(0..=n * (n - 1) / 2);
        let g = random_graph(&mut r, n, e);
        for k in 1..=4 {
            let s = Graph::star(k);
            let copies = count_copies(&s, &g);
            // a one-leaf star is an edge seen from either end
            let centers = if k == 1 { Count::new(2) } else { Count::ONE };
            if count_stars(&g, k) != copies * centers || inj_homs(&s, &g) != copies * automorphism_count(&s) {
                violations.push(format!("(n={n},e={e},S_{k})"));
            }
        }
        // a non-star pattern for the homomorphism identity
        let h = Graph::path(4);
        if inj_homs(&h, &g) != count_copies(&h, &g) * automorphism_count(&h) {
            violations.push(format!("(n={n},e={e},P_4)"));
        }
    }
    Ok(Outcome::new(violations.is_empty(), format!("{graphs} graphs, violations {violations:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        for id in [1, 5, 11] {
            let c = run_check(id, Scale::Quick, 42);
            assert_eq!(c.status, Status::Pass, "{c}");
        }
    }

    #[test]
    fn verdicts_do_not_depend_on_seed() {
        for seed in [7, 42] {
            assert_eq!(run_check(6, Scale::Quick, seed).status, Status::Pass);
        }
    }

    #[test]
    fn scale_round_trip() {
        for s in [Scale::Quick, Scale::Full] {
            assert_eq!(s.to_string().parse::<Scale>(), Ok(s));
        }
        assert!("medium".parse::<Scale>().is_err());
    }

    #[test]
    fn report_lists_failures() {
        let r = VerifyReport {
            scale: Scale::Quick,
            seed: 1,
            checks: vec![CheckResult { id: 10, name: "x", status: Status::Fail, measured: "m".into(), seconds: 0.0 }],
        };
        assert!(!r.passed());
        assert!(r.to_string().contains("FAIL [10] x: m"));
    }
}
