use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use super::eset::{distinct_permutations, ESet};
use super::opsum::{compare_sums, FormalSum, OpSum};
use super::VerifyReport;
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{partitions_in, partitions_of, IntVector, Partition};
use crate::schur::{inverse_kostka_entry, kostka};
use crate::vertex::MAX_VECTOR_LEN;

/// Which Kostka-matrix lemma to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KostkaLemma {
    /// `Σ_{σ(λ) distinct} B_{σ(λ)+b^r, ν} = Σ_{μ ∈ P^r} K⁻¹_{λμ} B_{μ+b^r, ν}`.
    PermutationSum {
        lambda: Partition,
        b: usize,
        r: usize,
        nu: Partition,
    },
    /// `Σ_{E ∈ E^λ_m} B_{a^m-E, ν} = Σ K⁻¹_{γρ} K_{ωλ} K_{ω'γ} B_{a^m-ρ^R, ν}`.
    ESetSum {
        lambda: Partition,
        a: usize,
        m: usize,
        nu: Partition,
    },
    /// The same sum with `ρ` running over all of `P^m`.
    ESetSumFull {
        lambda: Partition,
        a: usize,
        m: usize,
        nu: Partition,
    },
}

impl KostkaLemma {
    fn eset_parts(&self) -> Option<(&Partition, usize, usize, &Partition, bool)> {
        match self {
            KostkaLemma::ESetSum { lambda, a, m, nu } => Some((lambda, *a, *m, nu, false)),
            KostkaLemma::ESetSumFull { lambda, a, m, nu } => Some((lambda, *a, *m, nu, true)),
            KostkaLemma::PermutationSum { .. } => None,
        }
    }
}

/// `(v + c, ν)` for a vector `v`.
fn with_tail(v: &[i64], c: i64, nu: &Partition) -> IntVector {
    IntVector::new(v.iter().map(|x| x + c).collect()).concat(&nu.to_vector())
}

/// Both sides of a Kostka lemma as formal sums of operator indices.
pub fn kostka_lemma_sides(lemma: &KostkaLemma) -> Result<(FormalSum, FormalSum)> {
    let mut lhs = FormalSum::new();
    let mut rhs = FormalSum::new();
    match lemma {
        KostkaLemma::PermutationSum { lambda, b, r, nu } => {
            let b = *b as i64;
            let padded = lambda.padded(*r)?;
            for sigma in distinct_permutations(padded.entries()) {
                lhs.add(&with_tail(&sigma, b, nu), &BigInt::one());
            }
            for mu in partitions_in(lambda.degree(), Some(*r), None) {
                let c = inverse_kostka_entry(lambda, &mu)?;
                if !c.is_zero() {
                    rhs.add(&with_tail(mu.padded(*r)?.entries(), b, nu), &c);
                }
            }
        }
        _ => {
            let (lambda, a, m, nu, full) = lemma.eset_parts().unwrap();
            if lambda.length() > m || lambda.first() > a {
                return Err(Error::Precondition(format!("{lambda} is not in P^{m}_(≤{a})")));
            }
            let a = a as i64;
            for (e, c) in ESet::new(m, lambda.parts().to_vec()).sums() {
                let v: Vec<i64> = e.iter().map(|x| a - x).collect();
                lhs.add(&with_tail(&v, 0, nu), &c);
            }
            let n = lambda.degree();
            // Σ_ω K_{ωλ} K_{ω'γ}: 0/1 matrices with row sums λ, column sums γ
            let omegas = partitions_of(n);
            let gammas: Vec<Partition> = partitions_in(n, Some(m), None).collect();
            let rhos: Vec<Partition> = partitions_in(n, Some(m), (!full).then_some(a as usize)).collect();
            for gamma in &gammas {
                let mut weight = BigInt::zero();
                for omega in &omegas {
                    weight += kostka(omega, lambda)? * kostka(&omega.conjugate(), gamma)?;
                }
                if weight.is_zero() {
                    continue;
                }
                for rho in &rhos {
                    let c = inverse_kostka_entry(gamma, rho)?;
                    if c.is_zero() {
                        continue;
                    }
                    let rev = rho.padded(m)?.reversed();
                    let v: Vec<i64> = rev.entries().iter().map(|x| a - x).collect();
                    rhs.add(&with_tail(&v, 0, nu), &(c * &weight));
                }
            }
        }
    }
    Ok((lhs, rhs))
}

fn lemma_params(lemma: &KostkaLemma) -> (&'static str, serde_json::Value) {
    match lemma {
        KostkaLemma::PermutationSum { lambda, b, r, nu } => {
            ("iden1", json!({ "lambda": lambda, "b": b, "r": r, "nu": nu }))
        }
        KostkaLemma::ESetSum { lambda, a, m, nu } => {
            ("iden2", json!({ "lambda": lambda, "a": a, "m": m, "nu": nu }))
        }
        KostkaLemma::ESetSumFull { lambda, a, m, nu } => (
            "iden2-full",
            json!({ "lambda": lambda, "a": a, "m": m, "nu": nu }),
        ),
    }
}

/// Compares both sides after straightening every index. Since `B_v` obeys
/// the same reordering rule as `s_v`, equal straightened sums give equal
/// operators.
pub fn verify_lemma_kostka(lemma: &KostkaLemma) -> Result<VerifyReport> {
    let (id, params) = lemma_params(lemma);
    let (lhs, rhs) = kostka_lemma_sides(lemma)?;
    let mut report = VerifyReport::new(id, params);
    report.require(lhs == rhs, || format!("lhs {lhs} ≠ rhs {rhs}"));
    Ok(report)
}

/// Applies both sides as operators on `{1} ∪ {H_σ : |σ| ≤ d}` without
/// straightening, which also exercises the reordering rule for `B_v`.
pub fn verify_lemma_kostka_operators(lemma: &KostkaLemma, d: usize) -> Result<VerifyReport> {
    let (id, mut params) = lemma_params(lemma);
    params["D"] = json!(d);
    let mut lhs = OpSum::new();
    let mut rhs = OpSum::new();
    let one = TPoly::one();
    match lemma {
        KostkaLemma::PermutationSum { lambda, b, r, nu } => {
            let b = *b as i64;
            for sigma in distinct_permutations(lambda.padded(*r)?.entries()) {
                lhs.add(vec![with_tail(&sigma, b, nu)], &one);
            }
            for mu in partitions_in(lambda.degree(), Some(*r), None) {
                let c = inverse_kostka_entry(lambda, &mu)?;
                rhs.add(
                    vec![with_tail(mu.padded(*r)?.entries(), b, nu)],
                    &TPoly::constant(c),
                );
            }
        }
        _ => {
            let (lambda, a, m, nu, _) = lemma.eset_parts().unwrap();
            for (e, c) in ESet::new(m, lambda.parts().to_vec()).sums() {
                let v: Vec<i64> = e.iter().map(|x| a as i64 - x).collect();
                lhs.add(vec![with_tail(&v, 0, nu)], &TPoly::constant(c));
            }
            let (_, formal) = kostka_lemma_sides(lemma)?;
            for (v, c) in formal.iter() {
                rhs.add(vec![v.clone()], &TPoly::constant(c.clone()));
            }
        }
    }
    compare_sums(&format!("{id}-operators"), params, &lhs, &rhs, d)
}

/// `[n]^m`: vectors of length `m` with entries in `0..=n`.
fn index_vectors(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=n).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_weakly_decreasing(v: &IntVector, name: &str) -> Result<()> {
    if v.to_partition().is_none() {
        return Err(Error::Precondition(format!("{name} = {v} is not a partition")));
    }
    Ok(())
}

/// Both sides of the general exchange lemma for explicit-length `μ`, `γ`,
/// `ν` (trailing zeros allowed).
pub fn general_lemma_sides(mu: &IntVector, gamma: &IntVector, nu: &IntVector) -> Result<(OpSum, OpSum)> {
    check_weakly_decreasing(mu, "μ")?;
    check_weakly_decreasing(gamma, "γ")?;
    check_weakly_decreasing(nu, "ν")?;
    let (r, m, n) = (mu.len(), gamma.len(), nu.len());
    for len in [r + m, m + n] {
        if len > MAX_VECTOR_LEN {
            return Err(Error::VectorTooLong(len));
        }
    }
    let mut lhs = OpSum::new();
    for i in index_vectors(m, n) {
        let deg: usize = i.iter().sum();
        let shifted: Vec<i64> = gamma
            .entries()
            .iter()
            .zip(&i)
            .map(|(g, x)| g + *x as i64)
            .collect();
        let outer = mu.concat(&IntVector::new(shifted));
        for (e, c) in ESet::new(n, i.clone()).sums() {
            let inner = IntVector::new(nu.entries().iter().zip(&e).map(|(a, b)| a - b).collect());
            let coeff = TPoly::neg_t_pow(deg).scale(&c);
            lhs.add(vec![outer.clone(), inner], &coeff);
        }
    }
    let mut rhs = OpSum::new();
    for i in index_vectors(r, m) {
        let deg: usize = i.iter().sum();
        let outer = IntVector::new(mu.entries().iter().zip(&i).map(|(a, x)| a + *x as i64).collect());
        for (e, c) in ESet::new(m, i.clone()).sums() {
            let head = IntVector::new(gamma.entries().iter().zip(&e).map(|(a, b)| a - b).collect());
            let coeff = TPoly::neg_t_pow(deg).scale(&c);
            rhs.add(vec![outer.clone(), head.concat(nu)], &coeff);
        }
    }
    Ok((lhs, rhs))
}

pub fn verify_lemma_general(
    mu: &IntVector,
    gamma: &IntVector,
    nu: &IntVector,
    d: usize,
) -> Result<VerifyReport> {
    let (lhs, rhs) = general_lemma_sides(mu, gamma, nu)?;
    compare_sums(
        "genlemma",
        json!({ "mu": mu, "gamma": gamma, "nu": nu, "D": d }),
        &lhs,
        &rhs,
        d,
    )
}
