use serde::Serialize;
use serde_json::json;

use super::opsum::{compare_sums, OpSum};
use super::theorem::{complement_of_conjugate, shifted};
use super::VerifyReport;
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{k_rectangle, partitions_in, IntVector, Partition};
use crate::schur::straighten;

/// Checks `B_{(ℓ^{k+1-ℓ})} B_i = t^{i-ℓ} B_i B_{(ℓ^{k+1-ℓ})}`.
pub fn verify_identity_rect_commute(k: usize, ell: usize, i: usize, d: usize) -> Result<VerifyReport> {
    if !(1 <= ell && ell <= i && i <= k) {
        return Err(Error::Precondition(format!(
            "need 1 ≤ ℓ ≤ i ≤ k, got ℓ={ell} i={i} k={k}"
        )));
    }
    let rect = k_rectangle(ell, k)?.to_vector();
    let bi = IntVector::new(vec![i as i64]);
    let lhs = OpSum::single(vec![rect.clone(), bi.clone()]);
    let rhs = OpSum::single(vec![bi, rect]).scale(&TPoly::t_pow(i - ell));
    compare_sums(
        "rect-commute",
        json!({ "k": k, "l": ell, "i": i, "D": d }),
        &lhs,
        &rhs,
        d,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Variant {
    I2,
    I3,
    I4,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::I2 => "I2",
            Variant::I3 => "I3",
            Variant::I4 => "I4",
        }
    }
}

fn check_variant(k: usize, ell: usize, nu: &Partition, variant: Variant) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::Precondition(format!(
            "{}: {what} (k={k}, ℓ={ell}, ν={nu})",
            variant.name()
        )))
    };
    if ell == 0 || ell > k || nu.is_empty() {
        return fail("need 1 ≤ ℓ ≤ k and ν nonempty");
    }
    let hook = nu.main_hook();
    match variant {
        Variant::I4 if hook > k || nu.first() < ell => fail("need h_M(ν) ≤ k and ν_1 ≥ ℓ"),
        Variant::I2 if hook != k || nu.first() < ell || nu.last() >= ell => {
            fail("need h_M(ν) = k and ν_1 ≥ ℓ > ν_r")
        }
        Variant::I3 if hook != k || nu.last() < ell => fail("need h_M(ν) = k and ν_r ≥ ℓ"),
        _ => Ok(()),
    }
}

/// One summand `(-t)^{|μ|} · sign · B_ρ B_γ` of the rectangle expansion, with
/// `γ` already straightened.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectTerm {
    pub mu: Partition,
    pub rho: IntVector,
    pub sign: i8,
    pub gamma: IntVector,
}

/// The expansion of `B_{(ℓ^{k+1-ℓ})} B_ν` over `μ` with `ℓ(μ) ≤ k+1-ν_1` and
/// `μ_1 = ν_1 - ℓ`, keeping the summands whose second index does not
/// straighten to zero. Every such `μ` is kept, including those for which
/// `ℓ^{ν_1-ℓ} - (μ')^R` has negative entries.
pub fn rect_expansion(k: usize, ell: usize, nu: &Partition) -> Result<Vec<RectTerm>> {
    let m = nu.first() - ell;
    let r = k + 1 - nu.first();
    let mut out = Vec::new();
    for deg in m..=r * m {
        for mu in partitions_in(deg, Some(r), Some(m)) {
            if mu.first() != m {
                continue;
            }
            let top = complement_of_conjugate(ell, m, &mu)?;
            let Some(st) = straighten(&top.concat(&nu.to_vector())) else {
                continue;
            };
            out.push(RectTerm {
                rho: shifted(ell, r, &mu)?,
                mu,
                sign: st.sign,
                gamma: st.index,
            });
        }
    }
    Ok(out)
}

fn hook_of(v: &IntVector) -> i64 {
    let nonzero = v.entries().iter().filter(|&&x| x != 0).count() as i64;
    v.entries().first().copied().unwrap_or(0) + nonzero - 1
}

fn last_nonzero(v: &IntVector) -> i64 {
    v.entries().iter().rev().find(|&&x| x != 0).copied().unwrap_or(0)
}

/// Checks one of the three structured rectangle identities. I3 is the
/// `t`-commutation with exponent `|ν| - rℓ`; I2 and I4 check the expansion
/// as an operator identity and the shape claims on every surviving term.
pub fn verify_identity_structured(
    k: usize,
    ell: usize,
    nu: &Partition,
    variant: Variant,
    d: usize,
) -> Result<VerifyReport> {
    check_identity(k, ell, nu, variant, d, true)
}

/// As [`verify_identity_structured`] without the shape claims.
pub fn verify_identity_expansion(
    k: usize,
    ell: usize,
    nu: &Partition,
    variant: Variant,
    d: usize,
) -> Result<VerifyReport> {
    check_identity(k, ell, nu, variant, d, false)
}

fn check_identity(
    k: usize,
    ell: usize,
    nu: &Partition,
    variant: Variant,
    d: usize,
    shapes: bool,
) -> Result<VerifyReport> {
    check_variant(k, ell, nu, variant)?;
    let rect = k_rectangle(ell, k)?.to_vector();
    let lhs = OpSum::single(vec![rect.clone(), nu.to_vector()]);
    let params = json!({ "k": k, "l": ell, "nu": nu, "D": d });
    if variant == Variant::I3 {
        let e = nu.degree() - nu.length() * ell;
        let rhs = OpSum::single(vec![nu.to_vector(), rect]).scale(&TPoly::t_pow(e));
        return compare_sums("I3", params, &lhs, &rhs, d);
    }
    let terms = rect_expansion(k, ell, nu)?;
    let mut rhs = OpSum::new();
    for term in &terms {
        let c = TPoly::neg_t_pow(term.mu.degree()).scale(&term.sign.into());
        rhs.add(vec![term.rho.clone(), term.gamma.clone()], &c);
    }
    let id = if shapes {
        variant.name().to_string()
    } else {
        format!("{}-expansion", variant.name())
    };
    let mut report = compare_sums(&id, params, &lhs, &rhs, d)?;
    if !shapes {
        return Ok(report);
    }
    let k = k as i64;
    let ell = ell as i64;
    let nu_hook = nu.main_hook() as i64;
    for term in &terms {
        let rho = term.rho.entries();
        let gamma = &term.gamma;
        let g_hook = hook_of(gamma);
        let mut ok = rho[0] == nu.first() as i64
            && *rho.last().unwrap() >= ell
            && rho[0] + rho.len() as i64 - 1 == k
            && gamma.to_partition().is_some()
            && gamma.entries()[0] == ell;
        ok &= match variant {
            Variant::I4 => g_hook <= k && (g_hook < k || nu_hook == k),
            _ => g_hook == k && last_nonzero(gamma) == nu.last() as i64,
        };
        report.require(ok, || {
            format!("term μ={} gives ρ={} γ={}", term.mu, term.rho, term.gamma)
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn rect_commute_instances() {
        assert!(verify_identity_rect_commute(2, 1, 2, 3).unwrap().pass);
        assert!(verify_identity_rect_commute(3, 1, 3, 2).unwrap().pass);
        assert!(verify_identity_rect_commute(2, 2, 2, 3).unwrap().pass);
        assert!(verify_identity_rect_commute(2, 2, 1, 3).is_err());
    }

    #[test]
    fn structured_instances() {
        let r = verify_identity_structured(3, 1, &part![2, 2], Variant::I3, 2).unwrap();
        assert!(r.pass);
        let r = verify_identity_structured(3, 2, &part![2, 1], Variant::I4, 2).unwrap();
        assert!(r.pass, "{r:?}");
        // h_M((3,1)) = 4, so k = 4 is the matching rank
        assert!(verify_identity_structured(3, 2, &part![3, 1], Variant::I2, 2).is_err());
        let r = verify_identity_structured(4, 2, &part![3, 1], Variant::I2, 2).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn shape_claim_fails_on_a_non_partition_term() {
        let r = verify_identity_structured(4, 1, &part![2], Variant::I4, 2).unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_none());
        assert!(
            verify_identity_expansion(4, 1, &part![2], Variant::I4, 2)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn expansion_terms() {
        let terms = rect_expansion(4, 2, &part![3, 1]).unwrap();
        assert!(!terms.is_empty());
        assert!(terms.iter().all(|t| t.gamma.entries()[0] == 2));
    }
}
