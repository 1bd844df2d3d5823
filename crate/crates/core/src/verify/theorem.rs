use serde_json::json;

use super::opsum::{compare_sums, OpSum};
use super::VerifyReport;
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{partitions_in, reverse, IntVector, Partition};
use crate::schur::{multiply, straighten_schur, Basis, SymFunc};
use crate::vertex::MAX_VECTOR_LEN;

/// `P^r_{≤m}`: partitions with at most `r` parts, each at most `m`,
/// degree-major.
pub fn bounded_partitions(r: usize, m: usize) -> Vec<Partition> {
    (0..=r * m)
        .flat_map(|d| partitions_in(d, Some(r), Some(m)))
        .collect()
}

/// `(a, a, …, a)` of length `n`.
pub fn constant_vector(a: i64, n: usize) -> IntVector {
    IntVector::new(vec![a; n])
}

/// `a^m - (μ')^R` as a length-`m` vector.
pub fn complement_of_conjugate(a: usize, m: usize, mu: &Partition) -> Result<IntVector> {
    let rc = reverse(&mu.conjugate(), m)?;
    Ok(IntVector::new(
        rc.entries().iter().map(|&x| a as i64 - x).collect(),
    ))
}

/// `a^r + μ` as a length-`r` vector.
pub fn shifted(a: usize, r: usize, mu: &Partition) -> Result<IntVector> {
    let p = mu.padded(r)?;
    Ok(IntVector::new(
        p.entries().iter().map(|&x| x + a as i64).collect(),
    ))
}

fn check_theorem1(r: usize, m: usize, nu: &Partition) -> Result<()> {
    if nu.length() > r {
        return Err(Error::Precondition(format!(
            "ℓ({nu}) = {} exceeds r = {r}",
            nu.length()
        )));
    }
    for len in [r + m, m + nu.length()] {
        if len > MAX_VECTOR_LEN {
            return Err(Error::VectorTooLong(len));
        }
    }
    Ok(())
}

/// The two sides of the product formula for `B_{a^{r+m}} B_ν`. On the right,
/// summands whose `a^m - (μ')^R` is not a partition are dropped.
pub fn theorem1_sides(a: usize, r: usize, m: usize, nu: &Partition) -> Result<(OpSum, OpSum)> {
    product_sides(a, r, m, nu, true)
}

/// Same as [`theorem1_sides`] but every `μ ∈ P^r_{≤m}` contributes.
pub fn theorem1_full_sides(a: usize, r: usize, m: usize, nu: &Partition) -> Result<(OpSum, OpSum)> {
    product_sides(a, r, m, nu, false)
}

fn product_sides(a: usize, r: usize, m: usize, nu: &Partition, skip: bool) -> Result<(OpSum, OpSum)> {
    check_theorem1(r, m, nu)?;
    let lhs = OpSum::single(vec![constant_vector(a as i64, r + m), nu.to_vector()]);
    let mut rhs = OpSum::new();
    for mu in bounded_partitions(r, m) {
        let top = complement_of_conjugate(a, m, &mu)?;
        if skip && top.to_partition().is_none() {
            continue;
        }
        let inner = top.concat(&nu.to_vector());
        rhs.add(vec![shifted(a, r, &mu)?, inner], &TPoly::neg_t_pow(mu.degree()));
    }
    Ok((lhs, rhs))
}

/// Checks the product formula on `{1} ∪ {H_σ : |σ| ≤ d}`.
pub fn verify_theorem1(a: usize, r: usize, m: usize, nu: &Partition, d: usize) -> Result<VerifyReport> {
    let (lhs, rhs) = theorem1_sides(a, r, m, nu)?;
    compare_sums(
        "theorem1",
        json!({ "a": a, "r": r, "m": m, "nu": nu, "D": d }),
        &lhs,
        &rhs,
        d,
    )
}

pub fn verify_theorem1_full(a: usize, r: usize, m: usize, nu: &Partition, d: usize) -> Result<VerifyReport> {
    let (lhs, rhs) = theorem1_full_sides(a, r, m, nu)?;
    compare_sums(
        "theorem1-full",
        json!({ "a": a, "r": r, "m": m, "nu": nu, "D": d }),
        &lhs,
        &rhs,
        d,
    )
}

fn schur_of(v: &IntVector) -> SymFunc {
    match straighten_schur(v) {
        Some((sign, p)) => SymFunc::schur(p).scale(&TPoly::constant(sign)),
        None => SymFunc::zero(Basis::Schur),
    }
}

/// The `t = 1` form: `s_{a^{r+m}} s_ν = Σ (-1)^{|μ|} s_{a^r+μ} s_{a^m-(μ')^R, ν}`,
/// dropping the same summands as [`theorem1_sides`].
pub fn verify_corollary(a: usize, r: usize, m: usize, nu: &Partition) -> Result<VerifyReport> {
    product_at_one("corollary", a, r, m, nu, true)
}

/// The `t = 1` form with every summand kept.
pub fn verify_corollary_full(a: usize, r: usize, m: usize, nu: &Partition) -> Result<VerifyReport> {
    product_at_one("corollary-full", a, r, m, nu, false)
}

fn product_at_one(
    id: &str,
    a: usize,
    r: usize,
    m: usize,
    nu: &Partition,
    skip: bool,
) -> Result<VerifyReport> {
    let (_, rhs_ops) = product_sides(a, r, m, nu, skip)?;
    let lhs = multiply(
        &schur_of(&constant_vector(a as i64, r + m)),
        &SymFunc::schur(nu.clone()),
    )?;
    let mut rhs = SymFunc::zero(Basis::Schur);
    for (word, c) in rhs_ops.iter() {
        let term = multiply(&schur_of(&word[0]), &schur_of(&word[1]))?;
        rhs.add_scaled(&term, &TPoly::constant(c.eval_at_one()))?;
    }
    let mut report = VerifyReport::new(id, json!({ "a": a, "r": r, "m": m, "nu": nu }));
    report.check(&SymFunc::one(), lhs, rhs);
    Ok(report)
}
