use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::error::{Error, Result};
use crate::partition::{k_bounded_partitions, partitions_in, partitions_up_to, IntVector, Partition};

/// Suites accepted by [`sweep`]. `all` runs every suite except `literal`.
pub const SUITES: &[&str] = &[
    "theorem1",
    "lemmas",
    "identities",
    "rectangle-kschur",
    "omega",
    "appendix",
    "literal",
    "all",
];

const IN_ALL: &[&str] = &[
    "theorem1",
    "lemmas",
    "identities",
    "rectangle-kschur",
    "omega",
    "appendix",
];

/// Test-set degree for operator identities with large index degree.
pub const OPERATOR_TEST_DEGREE: usize = 3;
/// Test-set degree for the product formula.
pub const PRODUCT_TEST_DEGREE: usize = 4;
/// Random points per evaluation instance.
pub const EVAL_POINTS: usize = 20;

type Job = Box<dyn Fn() -> Result<VerifyReport> + Send + Sync>;

fn job(f: impl Fn() -> Result<VerifyReport> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

/// `(a, r, m, ν)` with `a(r+m) + |ν| ≤ cap`, `1 ≤ r+m ≤ 4`, `ℓ(ν) ≤ r`.
pub fn theorem1_instances(cap: usize) -> Vec<(usize, usize, usize, Partition)> {
    let mut out = Vec::new();
    for total in 1..=4usize {
        for r in 0..=total {
            let m = total - r;
            for a in 0..=cap / total {
                let rest = cap - a * total;
                for nu in partitions_up_to(rest) {
                    if nu.length() <= r {
                        out.push((a, r, m, nu));
                    }
                }
            }
        }
    }
    out
}

fn theorem1_jobs(cap: usize, literal: bool) -> Vec<Job> {
    let d = PRODUCT_TEST_DEGREE.min(cap);
    let mut jobs = Vec::new();
    for (a, r, m, nu) in theorem1_instances(cap.min(8)) {
        let nu2 = nu.clone();
        if literal {
            jobs.push(job(move || verify_theorem1(a, r, m, &nu2, d)));
            jobs.push(job(move || verify_corollary(a, r, m, &nu)));
        } else {
            jobs.push(job(move || verify_theorem1_full(a, r, m, &nu2, d)));
            jobs.push(job(move || verify_corollary_full(a, r, m, &nu)));
        }
    }
    jobs
}

fn tails() -> Vec<Partition> {
    partitions_up_to(2)
}

fn lemma_jobs(cap: usize, literal: bool) -> Vec<Job> {
    let mut jobs = Vec::new();
    if !literal {
        for r in 1..=4 {
            for b in 0..=3 {
                for deg in 0..=cap.min(6) {
                    for lambda in partitions_in(deg, Some(r), None) {
                        for nu in tails() {
                            let l = KostkaLemma::PermutationSum {
                                lambda: lambda.clone(),
                                b,
                                r,
                                nu,
                            };
                            jobs.push(job(move || verify_lemma_kostka(&l)));
                        }
                    }
                }
            }
        }
    }
    for m in 1..=4 {
        for a in 0..=3 {
            for lambda in bounded_partitions(m, a) {
                if lambda.degree() > cap {
                    continue;
                }
                for nu in tails() {
                    let (lambda, nu) = (lambda.clone(), nu.clone());
                    let l = if literal {
                        KostkaLemma::ESetSum { lambda, a, m, nu }
                    } else {
                        KostkaLemma::ESetSumFull { lambda, a, m, nu }
                    };
                    jobs.push(job(move || verify_lemma_kostka(&l)));
                }
            }
        }
    }
    if literal {
        return jobs;
    }
    for (lambda, b, r) in [(vec![2], 1, 2), (vec![1, 1], 0, 2), (vec![2, 1], 0, 3)] {
        let lambda = Partition::new(lambda).expect("partition");
        if lambda.degree() + b * r <= cap {
            let l = KostkaLemma::PermutationSum {
                lambda,
                b,
                r,
                nu: Partition::empty(),
            };
            jobs.push(job(move || {
                verify_lemma_kostka_operators(&l, OPERATOR_TEST_DEGREE)
            }));
        }
    }
    for lambda in [vec![1], vec![1, 1], vec![2, 1]] {
        let lambda = Partition::new(lambda).expect("partition");
        let l = KostkaLemma::ESetSumFull {
            lambda,
            a: 2,
            m: 2,
            nu: Partition::empty(),
        };
        jobs.push(job(move || {
            verify_lemma_kostka_operators(&l, OPERATOR_TEST_DEGREE)
        }));
    }
    let padded = |len: usize| -> Vec<IntVector> {
        bounded_partitions(len, 2)
            .into_iter()
            .map(|p| p.padded(len).expect("fits"))
            .collect()
    };
    for r in 0..=2 {
        for m in 0..=2 {
            for n in 0..=2 {
                for mu in padded(r) {
                    for gamma in padded(m) {
                        for nu in padded(n) {
                            if (mu.sum() + gamma.sum() + nu.sum()) as usize > cap.min(5) {
                                continue;
                            }
                            let (mu, gamma, nu) = (mu.clone(), gamma.clone(), nu.clone());
                            jobs.push(job(move || verify_lemma_general(&mu, &gamma, &nu, 2)));
                        }
                    }
                }
            }
        }
    }
    jobs
}

/// `ν` with `|ν| ≤ cap` and `h_M(ν) ≤ k`, nonempty.
fn identity_shapes(k: usize, cap: usize) -> Vec<Partition> {
    partitions_up_to(cap)
        .into_iter()
        .filter(|nu| !nu.is_empty() && nu.main_hook() <= k)
        .collect()
}

fn identity_jobs(cap: usize, literal: bool) -> Vec<Job> {
    let d = OPERATOR_TEST_DEGREE;
    let mut jobs = Vec::new();
    for k in 1..=4 {
        if !literal {
            for ell in 1..=k {
                for i in ell..=k {
                    jobs.push(job(move || verify_identity_rect_commute(k, ell, i, d)));
                }
            }
        }
        for nu in identity_shapes(k, cap.min(8)) {
            for ell in 1..=k {
                let hook = nu.main_hook();
                let mut push = |variant: Variant, structured: bool| {
                    let nu = nu.clone();
                    jobs.push(job(move || {
                        if structured {
                            verify_identity_structured(k, ell, &nu, variant, d)
                        } else {
                            verify_identity_expansion(k, ell, &nu, variant, d)
                        }
                    }));
                };
                if nu.first() >= ell {
                    if literal {
                        push(Variant::I4, true);
                    } else {
                        push(Variant::I4, false);
                    }
                }
                if literal {
                    continue;
                }
                if hook == k && nu.last() >= ell {
                    push(Variant::I3, false);
                }
                if hook == k && nu.first() >= ell && nu.last() < ell {
                    push(Variant::I2, true);
                }
            }
        }
    }
    if !literal {
        for m in -2..=3i64 {
            for n in -2..=3i64 {
                jobs.push(job(move || crate::vertex::check_commutation(m, n, &test_set(d))));
            }
        }
    }
    jobs
}

fn kschur_jobs(cap: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in 1..=3 {
        for deg in 0..=cap.min(6) {
            for lambda in k_bounded_partitions(deg, k) {
                for ell in 1..=k {
                    let l2 = lambda.clone();
                    jobs.push(job(move || verify_rectangle_action(k, ell, &l2)));
                    let l2 = lambda.clone();
                    jobs.push(job(move || verify_rectangle_product(k, ell, &l2)));
                }
            }
        }
        for deg in 0..=cap.min(8) {
            for lambda in k_bounded_partitions(deg, k) {
                jobs.push(job(move || verify_reduction(k, &lambda)));
            }
        }
    }
    for k in 1..=5 {
        jobs.push(job(move || verify_irreducible_count(k)));
    }
    jobs
}

fn omega_jobs(cap: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for k in 1..=3 {
        let bounded_up_to =
            |n: usize| -> Vec<Partition> { (0..=n).flat_map(|d| k_bounded_partitions(d, k)).collect() };
        for lambda in bounded_up_to(cap.min(7)) {
            for ell in 1..=k {
                let l2 = lambda.clone();
                jobs.push(job(move || verify_omega_invariance(k, ell, &l2)));
            }
        }
        let hooks: Vec<Partition> = bounded_up_to(k + 2)
            .into_iter()
            .filter(|l| !l.is_empty() && l.main_hook() <= k)
            .collect();
        for lambda in &hooks {
            for mu in bounded_up_to(cap.min(8).saturating_sub(lambda.degree())) {
                let (l2, m2) = (lambda.clone(), mu.clone());
                jobs.push(job(move || verify_preserve(k, &l2, &m2)));
                if lambda.main_hook() == k && mu.first() <= lambda.last() {
                    let (l2, m2) = (lambda.clone(), mu.clone());
                    jobs.push(job(move || verify_omega_lemma(k, &l2, &m2)));
                }
                if lambda.degree() + mu.degree() <= cap.min(6) {
                    let (l2, m2) = (lambda.clone(), mu.clone());
                    jobs.push(job(move || verify_split_projection(k, &l2, &m2)));
                }
            }
        }
        for lambda in bounded_up_to(cap.min(6)) {
            for i in 1..k {
                if lambda.first() > i {
                    let l2 = lambda.clone();
                    jobs.push(job(move || verify_b_i_invariance(k, i, &l2)));
                }
            }
        }
        for lambda in bounded_up_to(cap.min(5)) {
            for j in 2..=k {
                for ell in 1..j {
                    let l2 = lambda.clone();
                    jobs.push(job(move || verify_projection_commute(k, j, ell, &l2)));
                }
            }
        }
    }
    jobs
}

fn appendix_jobs(cap: usize) -> Vec<Job> {
    appendix_instances(cap, EVAL_POINTS)
        .into_iter()
        .map(|c| job(move || c.run()))
        .collect()
}

fn suite_jobs(suite: &str, cap: usize) -> Result<Vec<Job>> {
    Ok(match suite {
        "theorem1" => theorem1_jobs(cap, false),
        "lemmas" => lemma_jobs(cap, false),
        "identities" => identity_jobs(cap, false),
        "rectangle-kschur" => kschur_jobs(cap),
        "omega" => omega_jobs(cap),
        "appendix" => appendix_jobs(cap),
        "literal" => {
            let mut jobs = theorem1_jobs(cap, true);
            jobs.extend(lemma_jobs(cap, true));
            jobs.extend(identity_jobs(cap, true));
            jobs
        }
        "all" => {
            let mut jobs = Vec::new();
            for s in IN_ALL {
                jobs.extend(suite_jobs(s, cap)?);
            }
            jobs
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// Pass/fail counts for one report id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub total: usize,
    pub passed: usize,
}

/// The reports of one sweep, in enumeration order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    pub suite: String,
    pub max_degree: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub by_id: BTreeMap<String, Tally>,
    pub reports: Vec<VerifyReport>,
}

impl SweepResult {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyReport> {
        self.reports.iter().filter(|r| !r.pass)
    }
}

/// Runs every instance of `suite` within `max_degree`. Instances run in
/// parallel; the report order does not depend on scheduling. With `timing`
/// each report carries its wall-clock milliseconds.
pub fn sweep(suite: &str, max_degree: usize, timing: bool) -> Result<SweepResult> {
    let jobs = suite_jobs(suite, max_degree)?;
    let reports: Vec<VerifyReport> = jobs
        .par_iter()
        .map(|j| {
            let start = Instant::now();
            let mut r = j()?;
            if timing {
                r.millis = Some(start.elapsed().as_millis() as u64);
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let mut by_id: BTreeMap<String, Tally> = BTreeMap::new();
    for r in &reports {
        let t = by_id.entry(r.id.clone()).or_default();
        t.total += 1;
        t.passed += r.pass as usize;
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    Ok(SweepResult {
        suite: suite.to_string(),
        max_degree,
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
        by_id,
        reports,
    })
}
