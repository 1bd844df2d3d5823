use std::collections::BTreeSet;

use serde_json::json;

use super::eset::distinct_permutations;
use super::VerifyReport;
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::kspace::{
    g_poly, k_schur, lambda_ak_membership, omega_support, project_t, reconstruct, rectangle_exponent,
    reduce_with_order,
};
use crate::partition::{check_k, k_irreducibles, k_rectangle, Partition};
use crate::schur::{multiply, SymFunc};
use crate::vertex::{apply_b_int, apply_b_partition, hall_littlewood};

fn tail(lambda: &Partition) -> Partition {
    Partition::new(lambda.parts()[1..].to_vec()).expect("tail of a partition")
}

fn bounded(lambda: &Partition, k: usize) -> Result<()> {
    check_k(k)?;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded {
            partition: lambda.clone(),
            k,
        });
    }
    Ok(())
}

fn need(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}

/// `B_{(ℓ^{k+1-ℓ})} G^(k)_λ` lies in `Ω^(k)_{max(λ_1, ℓ)}`, and nowhere else.
pub fn verify_omega_invariance(k: usize, ell: usize, lambda: &Partition) -> Result<VerifyReport> {
    bounded(lambda, k)?;
    let rect = k_rectangle(ell, k)?;
    let image = apply_b_partition(&rect, &*g_poly(lambda, k)?)?;
    let support = omega_support(&image, k)?;
    let expect = BTreeSet::from([lambda.first().max(ell)]);
    let mut report = VerifyReport::new("propnouv", json!({ "k": k, "l": ell, "lambda": lambda }));
    report.require(support == expect, || {
        format!("Ω-support {support:?}, expected {expect:?}")
    });
    Ok(report)
}

/// For `h_M(λ) ≤ k`: `B_λ H_μ` stays in `Λ^(k)` and in fact in `Λ^(λ_1,k)`.
pub fn verify_preserve(k: usize, lambda: &Partition, mu: &Partition) -> Result<VerifyReport> {
    bounded(mu, k)?;
    need(lambda.main_hook() <= k, || format!("h_M({lambda}) > {k}"))?;
    let image = apply_b_partition(lambda, &hall_littlewood(mu))?;
    let mut report = VerifyReport::new("lemigen", json!({ "k": k, "lambda": lambda, "mu": mu }));
    report.require(lambda_ak_membership(&image, 0, k)?, || {
        "image leaves Λ^(k)".into()
    });
    report.require(lambda_ak_membership(&image, lambda.first(), k)?, || {
        format!("image leaves Λ^({},{k})", lambda.first())
    });
    Ok(report)
}

/// For `1 ≤ i < k` and `i < λ_1 ≤ k`: `B_i H_λ ∈ Λ^(i+1,k)`.
pub fn verify_b_i_invariance(k: usize, i: usize, lambda: &Partition) -> Result<VerifyReport> {
    bounded(lambda, k)?;
    need(1 <= i && i < k && lambda.first() > i, || {
        format!("need 1 ≤ i < k and λ_1 > i (i={i}, k={k}, λ={lambda})")
    })?;
    let image = apply_b_int(i as i64, &hall_littlewood(lambda))?;
    let mut report = VerifyReport::new("lemikplus", json!({ "k": k, "i": i, "lambda": lambda }));
    report.require(lambda_ak_membership(&image, i + 1, k)?, || {
        format!("image leaves Λ^({},{k})", i + 1)
    });
    Ok(report)
}

/// For `h_M(λ) = k` and `μ_1 ≤ λ_L`: `B_λ G^(k)_μ ∈ Ω^(k)_{λ_1}`.
pub fn verify_omega_lemma(k: usize, lambda: &Partition, mu: &Partition) -> Result<VerifyReport> {
    bounded(mu, k)?;
    need(lambda.main_hook() == k && mu.first() <= lambda.last(), || {
        format!("need h_M(λ) = k and μ_1 ≤ λ_L (λ={lambda}, μ={mu}, k={k})")
    })?;
    let image = apply_b_partition(lambda, &*g_poly(mu, k)?)?;
    let support = omega_support(&image, k)?;
    let mut report = VerifyReport::new("lemomega", json!({ "k": k, "lambda": lambda, "mu": mu }));
    report.require(support.iter().all(|&j| j == lambda.first()), || {
        format!("Ω-support {support:?}, expected within {{{}}}", lambda.first())
    });
    Ok(report)
}

/// For `k ≥ j > ℓ`: `T_j B_{(ℓ^{k+1-ℓ})} G_λ = B_{(ℓ^{k+1-ℓ})} T_j G_λ`.
pub fn verify_projection_commute(k: usize, j: usize, ell: usize, lambda: &Partition) -> Result<VerifyReport> {
    bounded(lambda, k)?;
    need(k >= j && j > ell && ell >= 1, || {
        format!("need k ≥ j > ℓ ≥ 1 (k={k}, j={j}, ℓ={ell})")
    })?;
    let rect = k_rectangle(ell, k)?;
    let g = g_poly(lambda, k)?;
    let lhs = project_t(j, k, &apply_b_partition(&rect, &g)?)?;
    let rhs = apply_b_partition(&rect, &project_t(j, k, &g)?)?;
    let mut report = VerifyReport::new("lemcommu", json!({ "k": k, "j": j, "l": ell, "lambda": lambda }));
    report.check(&g, lhs, rhs);
    Ok(report)
}

/// For `h_M(λ) ≤ k`: `T_{λ_1} B_λ G_μ = T_{λ_1} B_{λ_1} B_{λ̂} G_μ`.
pub fn verify_split_projection(k: usize, lambda: &Partition, mu: &Partition) -> Result<VerifyReport> {
    bounded(mu, k)?;
    need(!lambda.is_empty() && lambda.main_hook() <= k, || {
        format!("need 0 < h_M({lambda}) ≤ {k}")
    })?;
    let g = g_poly(mu, k)?;
    let j = lambda.first();
    let lhs = project_t(j, k, &apply_b_partition(lambda, &g)?)?;
    let inner = apply_b_partition(&tail(lambda), &g)?;
    let rhs = project_t(j, k, &apply_b_int(j as i64, &inner)?)?;
    let mut report = VerifyReport::new("lemsepara", json!({ "k": k, "lambda": lambda, "mu": mu }));
    report.check(&g, lhs, rhs);
    Ok(report)
}

/// `B_{(ℓ^{k+1-ℓ})} s^(k)_λ = t^d s^(k)_{(ℓ^{k+1-ℓ}) ∪ λ}`, `d` summing
/// `λ_i - ℓ` over the parts larger than `ℓ`.
pub fn verify_rectangle_action(k: usize, ell: usize, lambda: &Partition) -> Result<VerifyReport> {
    bounded(lambda, k)?;
    let rect = k_rectangle(ell, k)?;
    let ks = k_schur(lambda, k)?;
    let lhs = apply_b_partition(&rect, &ks)?;
    let d = rectangle_exponent(lambda, ell);
    let rhs = k_schur(&rect.union(lambda), k)?.scale_by_t_power(d);
    let mut report = VerifyReport::new("theorec", json!({ "k": k, "l": ell, "lambda": lambda, "d": d }));
    report.check(&ks, lhs, rhs);
    Ok(report)
}

/// At `t = 1`: `s_{(ℓ^{k+1-ℓ})} s^(k)_λ = s^(k)_{(ℓ^{k+1-ℓ}) ∪ λ}`.
pub fn verify_rectangle_product(k: usize, ell: usize, lambda: &Partition) -> Result<VerifyReport> {
    bounded(lambda, k)?;
    let rect = k_rectangle(ell, k)?;
    let ks = k_schur(lambda, k)?.at_t_one();
    let lhs = multiply(&SymFunc::schur(rect.clone()), &ks)?;
    let rhs = k_schur(&rect.union(lambda), k)?.at_t_one();
    let mut report = VerifyReport::new("conjrecschur", json!({ "k": k, "l": ell, "lambda": lambda }));
    report.check(&ks, lhs, rhs);
    Ok(report)
}

/// Reduction to a k-irreducible index, under every order of trying the
/// rectangle widths: each must rebuild `t^c s^(k)_λ` with its own `c`, and
/// all orders must reach the same irreducible remainder.
pub fn verify_reduction(k: usize, lambda: &Partition) -> Result<VerifyReport> {
    bounded(lambda, k)?;
    let target = k_schur(lambda, k)?;
    let widths: Vec<i64> = (1..=k as i64).rev().collect();
    let mut report = VerifyReport::new("reduce", json!({ "k": k, "lambda": lambda }));
    let mut first: Option<Partition> = None;
    for order in distinct_permutations(&widths) {
        let order: Vec<usize> = order.iter().map(|&w| w as usize).collect();
        let red = reduce_with_order(lambda, k, &order)?;
        let mu = first.get_or_insert_with(|| red.mu.clone()).clone();
        report.require(mu == red.mu, || {
            format!("order {order:?} leaves {}, expected {mu}", red.mu)
        });
        let rebuilt = reconstruct(&red)?;
        report.check(&SymFunc::one(), rebuilt, target.scale(&TPoly::t_pow(red.c)));
    }
    Ok(report)
}

/// There are exactly `k!` k-irreducible partitions.
pub fn verify_irreducible_count(k: usize) -> Result<VerifyReport> {
    let n = k_irreducibles(k)?.len();
    let expect: usize = (1..=k).product();
    let mut report = VerifyReport::new("irreducibles", json!({ "k": k, "count": n }));
    report.require(n == expect, || format!("{n} irreducibles, expected {expect}"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn omega_checks() {
        assert!(verify_omega_invariance(2, 1, &part![2, 1]).unwrap().pass);
        assert!(verify_omega_invariance(3, 2, &Partition::empty()).unwrap().pass);
        assert!(verify_omega_lemma(2, &part![1, 1], &part![1]).unwrap().pass);
        assert!(verify_omega_lemma(2, &part![1], &part![1]).is_err());
    }

    #[test]
    fn membership_checks() {
        assert!(verify_preserve(3, &part![2, 1], &part![1, 1]).unwrap().pass);
        assert!(verify_b_i_invariance(3, 1, &part![2, 1]).unwrap().pass);
        assert!(verify_b_i_invariance(3, 2, &part![2, 1]).is_err());
    }

    #[test]
    fn projection_checks() {
        assert!(verify_projection_commute(3, 2, 1, &part![2, 1]).unwrap().pass);
        assert!(verify_split_projection(3, &part![2, 1], &part![1]).unwrap().pass);
    }

    #[test]
    fn rectangle_checks() {
        let r = verify_rectangle_action(2, 1, &part![2]).unwrap();
        assert!(r.pass);
        assert_eq!(r.params["d"], 1);
        assert!(verify_rectangle_product(2, 2, &part![1, 1]).unwrap().pass);
        assert!(verify_reduction(2, &part![2, 2, 1]).unwrap().pass);
        // c depends on the extraction order, the rebuilt function does not
        let wide = reduce_with_order(&part![2, 1, 1], 2, &[2, 1]).unwrap();
        let narrow = reduce_with_order(&part![2, 1, 1], 2, &[1, 2]).unwrap();
        assert_eq!((wide.c, narrow.c), (0, 1));
        assert!(verify_reduction(2, &part![2, 1, 1]).unwrap().pass);
        assert!(verify_irreducible_count(3).unwrap().pass);
    }
}
