use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use super::gbasis::project_t;
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{check_k, is_k_irreducible, k_bounded_partitions, k_rectangle, Partition};
use crate::schur::{Basis, SymFunc};
use crate::vertex::{apply_b_int, apply_b_partition};

type KsCache = RwLock<HashMap<(usize, Partition), Arc<SymFunc>>>;

fn ks_cache() -> &'static KsCache {
    static CACHE: OnceLock<KsCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s^(k)_λ = T^(k)_{λ_1} B_{λ_1} s^(k)_{(λ_2, λ_3, …)}`, seeded at `s^(k)_() = 1`.
pub fn k_schur(lambda: &Partition, k: usize) -> Result<Arc<SymFunc>> {
    check_k(k)?;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded {
            partition: lambda.clone(),
            k,
        });
    }
    let key = (k, lambda.clone());
    if let Some(hit) = ks_cache().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let value = match lambda.parts().split_first() {
        None => SymFunc::one(),
        Some((&head, tail)) => {
            let tail = Partition::new(tail.to_vec())?;
            let inner = apply_b_int(head as i64, &*k_schur(&tail, k)?)?;
            project_t(head, k, &inner)?
        }
    };
    let value = Arc::new(value);
    ks_cache().write().unwrap().insert(key, value.clone());
    Ok(value)
}

/// All k-Schur functions of one degree.
#[derive(Clone, Debug, Serialize)]
pub struct KSchurTable {
    pub k: usize,
    pub degree: usize,
    pub entries: Vec<(Partition, SymFunc)>,
}

pub fn k_schur_table(k: usize, degree: usize) -> Result<KSchurTable> {
    let entries = k_bounded_partitions(degree, k)
        .into_iter()
        .map(|l| k_schur(&l, k).map(|f| (l, (*f).clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(KSchurTable { k, degree, entries })
}

/// Rewrites a k-Schur-basis function in the Schur basis.
pub fn kschur_to_schur(f: &SymFunc) -> Result<SymFunc> {
    let Basis::KSchur(k) = f.basis() else {
        return Err(Error::BasisMismatch {
            left: "kschur".to_string(),
            right: f.basis().to_string(),
        });
    };
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        out.add_scaled(&*k_schur(lambda, k)?, c)?;
    }
    Ok(out)
}

/// Exponent `d` in `B_{(ℓ^{k+1-ℓ})} s^(k)_μ = t^d s^(k)_{(ℓ^{k+1-ℓ}) ∪ μ}`:
/// the sum of `μ_i - ℓ` over the parts of `μ` larger than `ℓ`.
pub fn rectangle_exponent(mu: &Partition, ell: usize) -> usize {
    mu.parts().iter().filter(|&&p| p > ell).map(|&p| p - ell).sum()
}

/// `B_{R_1} ⋯ B_{R_j} s^(k)_μ = t^c s^(k)_λ` with `μ` k-irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub k: usize,
    pub lambda: Partition,
    pub c: usize,
    /// In extraction order; `R_1` is applied last.
    pub rectangles: Vec<Partition>,
    pub mu: Partition,
}

/// Strips k-rectangles from `λ`, widest first, until the remainder is
/// k-irreducible.
pub fn reduce_to_irreducible(lambda: &Partition, k: usize) -> Result<Reduction> {
    reduce_with_order(lambda, k, &(1..=k).rev().collect::<Vec<_>>())
}

/// As [`reduce_to_irreducible`], trying rectangle widths in the given order
/// at every step.
pub fn reduce_with_order(lambda: &Partition, k: usize, widths: &[usize]) -> Result<Reduction> {
    check_k(k)?;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded {
            partition: lambda.clone(),
            k,
        });
    }
    let mut rest = lambda.clone();
    let mut rectangles = Vec::new();
    let mut c = 0;
    'outer: loop {
        for &ell in widths {
            let rect = k_rectangle(ell, k)?;
            if let Some(remainder) = rest.remove_parts(&rect) {
                c += rectangle_exponent(&remainder, ell);
                rectangles.push(rect);
                rest = remainder;
                continue 'outer;
            }
        }
        break;
    }
    debug_assert!(is_k_irreducible(&rest, k).unwrap_or(false));
    Ok(Reduction {
        k,
        lambda: lambda.clone(),
        c,
        rectangles,
        mu: rest,
    })
}

/// Evaluates `B_{R_1} ⋯ B_{R_j} s^(k)_μ`, which should equal `t^c s^(k)_λ`.
pub fn reconstruct(red: &Reduction) -> Result<SymFunc> {
    let mut f = (*k_schur(&red.mu, red.k)?).clone();
    for rect in red.rectangles.iter().rev() {
        f = apply_b_partition(rect, &f)?;
    }
    Ok(f)
}

/// Normal form in the quotient by the ideal generated by the k-rectangle
/// Schur functions, at `t = 1`: reducible k-Schur terms vanish.
pub fn quotient_normal_form(f: &SymFunc, k: usize) -> Result<SymFunc> {
    check_k(k)?;
    if f.basis() != Basis::KSchur(k) {
        return Err(Error::BasisMismatch {
            left: Basis::KSchur(k).to_string(),
            right: f.basis().to_string(),
        });
    }
    let mut out = SymFunc::zero(Basis::KSchur(k));
    for (lambda, c) in f.at_t_one().iter() {
        if is_k_irreducible(lambda, k)? {
            out.add_term(lambda.clone(), &TPoly::constant(c.eval_at_one()));
        }
    }
    Ok(out)
}
