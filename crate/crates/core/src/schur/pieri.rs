//! Pieri rules, their adjoints, and Schur products routed through
//! Jacobi–Trudi h-monomial expansions.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Basis, SymFunc};
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// All `μ ⊇ λ` such that `μ/λ` is a horizontal strip of size `r`.
pub fn add_horizontal_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    let parts = lambda.parts();
    let n = parts.len();
    let mut out = Vec::new();
    let mut cur = vec![0usize; n + 1];
    fn go(i: usize, left: usize, parts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let n = parts.len();
        let base = if i < n { parts[i] } else { 0 };
        if i == n {
            // the new row may take whatever is left, bounded by the row above
            let cap = if n == 0 { usize::MAX } else { parts[n - 1] };
            if left <= cap {
                cur[n] = left;
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let cap = if i == 0 {
            left
        } else {
            (parts[i - 1] - base).min(left)
        };
        for add in (0..=cap).rev() {
            cur[i] = base + add;
            go(i + 1, left - add, parts, cur, out);
        }
    }
    go(0, r, parts, &mut cur, &mut out);
    out
}

/// All `μ ⊆ λ` such that `λ/μ` is a horizontal strip of size `r`.
pub fn remove_horizontal_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut cur = parts.to_vec();
    fn go(i: usize, left: usize, parts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let floor = parts.get(i + 1).copied().unwrap_or(0);
        // rows i.. can give up at most parts[i] cells in total
        if parts[i] < left {
            return;
        }
        for take in 0..=(parts[i] - floor).min(left) {
            cur[i] = parts[i] - take;
            go(i + 1, left - take, parts, cur, out);
        }
        cur[i] = parts[i];
    }
    go(0, r, parts, &mut cur, &mut out);
    out
}

pub fn add_vertical_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    add_horizontal_strips(&lambda.conjugate(), r)
        .iter()
        .map(Partition::conjugate)
        .collect()
}

pub fn remove_vertical_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    remove_horizontal_strips(&lambda.conjugate(), r)
        .iter()
        .map(Partition::conjugate)
        .collect()
}

fn apply_termwise(f: &SymFunc, step: impl Fn(&Partition) -> Vec<Partition>) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in f.iter() {
        for mu in step(lambda) {
            out.add_term(mu, c);
        }
    }
    out
}

/// `h_r * s_λ`.
pub fn pieri_h(lambda: &Partition, r: usize) -> SymFunc {
    mul_h(r, &SymFunc::schur(lambda.clone()))
}

/// `e_r * s_λ`.
pub fn pieri_e(lambda: &Partition, r: usize) -> SymFunc {
    mul_e(r, &SymFunc::schur(lambda.clone()))
}

/// `h_r * f` for `f` in the Schur basis.
pub fn mul_h(r: usize, f: &SymFunc) -> SymFunc {
    if r == 0 {
        return f.clone();
    }
    apply_termwise(f, |l| add_horizontal_strips(l, r))
}

pub fn mul_e(r: usize, f: &SymFunc) -> SymFunc {
    if r == 0 {
        return f.clone();
    }
    apply_termwise(f, |l| add_vertical_strips(l, r))
}

/// `h_r^⊥ f`.
pub fn perp_h(r: usize, f: &SymFunc) -> SymFunc {
    if r == 0 {
        return f.clone();
    }
    apply_termwise(f, |l| remove_horizontal_strips(l, r))
}

/// `e_r^⊥ f`.
pub fn perp_e(r: usize, f: &SymFunc) -> SymFunc {
    if r == 0 {
        return f.clone();
    }
    apply_termwise(f, |l| remove_vertical_strips(l, r))
}

/// An h-monomial `h_{α_1} h_{α_2} ⋯` (parts sorted decreasingly) with an integer coefficient.
pub type HTerm = (Vec<usize>, BigInt);

type JtCache = RwLock<HashMap<Partition, Arc<Vec<HTerm>>>>;

fn jt_cache() -> &'static JtCache {
    static CACHE: OnceLock<JtCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Expansion of `s_μ` as the Jacobi–Trudi determinant `det(h_{μ_i - i + j})`.
pub fn jacobi_trudi(mu: &Partition) -> Arc<Vec<HTerm>> {
    if let Some(hit) = jt_cache().read().unwrap().get(mu) {
        return hit.clone();
    }
    let parts = mu.parts();
    let n = parts.len();
    let mut acc: HashMap<Vec<usize>, BigInt> = HashMap::new();
    let mut chosen = Vec::with_capacity(n);
    fn go(
        row: usize,
        used: u64,
        inversions: usize,
        parts: &[usize],
        chosen: &mut Vec<usize>,
        acc: &mut HashMap<Vec<usize>, BigInt>,
    ) {
        let n = parts.len();
        if row == n {
            let mut key: Vec<usize> = chosen.iter().copied().filter(|&x| x > 0).collect();
            key.sort_unstable_by(|a, b| b.cmp(a));
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            *acc.entry(key).or_default() += sign;
            return;
        }
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let idx = parts[row] as i64 - row as i64 + col as i64;
            if idx < 0 {
                continue;
            }
            let inv = (used >> col).count_ones() as usize;
            chosen.push(idx as usize);
            go(row + 1, used | (1 << col), inversions + inv, parts, chosen, acc);
            chosen.pop();
        }
    }
    go(0, 0, 0, parts, &mut chosen, &mut acc);
    let mut terms: Vec<HTerm> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort();
    let terms = Arc::new(terms);
    jt_cache().write().unwrap().insert(mu.clone(), terms.clone());
    terms
}

fn require_schur(f: &SymFunc) -> Result<()> {
    if f.basis() != Basis::Schur {
        return Err(Error::BasisMismatch {
            left: Basis::Schur.to_string(),
            right: f.basis().to_string(),
        });
    }
    Ok(())
}

/// Applies `Σ c_α op(α_1) op(α_2) ⋯` to `g` where `Σ c_α h_α = s_μ`.
fn apply_jt(mu: &Partition, g: &SymFunc, op: fn(usize, &SymFunc) -> SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (alpha, c) in jacobi_trudi(mu).iter() {
        let mut h = g.clone();
        for &a in alpha {
            h = op(a, &h);
            if h.is_zero() {
                break;
            }
        }
        out.add_scaled(&h, &TPoly::constant(c.clone()))
            .expect("Schur basis throughout");
    }
    out
}

/// Product in the Schur basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    require_schur(g)?;
    // expand the factor with fewer and smaller terms through Jacobi–Trudi
    let cost = |x: &SymFunc| x.support().map(Partition::degree).sum::<usize>();
    let (small, large) = if cost(f) <= cost(g) { (f, g) } else { (g, f) };
    let mut out = SymFunc::zero(Basis::Schur);
    for (mu, c) in small.iter() {
        out.add_scaled(&apply_jt(mu, large, mul_h), c)?;
    }
    Ok(out)
}

/// `s_μ * s_ν`.
pub fn multiply_schur(mu: &Partition, nu: &Partition) -> SymFunc {
    apply_jt(mu, &SymFunc::schur(nu.clone()), mul_h)
}

/// `s_μ^⊥ f`.
pub fn perp_s(mu: &Partition, f: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    Ok(apply_jt(mu, f, perp_h))
}

/// `f^⊥ g`, both in the Schur basis.
pub fn perp(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    require_schur(f)?;
    require_schur(g)?;
    let mut out = SymFunc::zero(Basis::Schur);
    for (mu, c) in f.iter() {
        out.add_scaled(&apply_jt(mu, g, perp_h), c)?;
    }
    Ok(out)
}

/// `h_α` for a composition `α`, expanded in the Schur basis.
pub fn h_product(alpha: &[usize]) -> SymFunc {
    alpha.iter().fold(SymFunc::one(), |acc, &a| mul_h(a, &acc))
}

/// The coefficient list of `f` as `(partition, integer)` pairs; `None` if some
/// coefficient depends on `t`.
pub fn integer_coeffs(f: &SymFunc) -> Option<Vec<(Partition, BigInt)>> {
    f.iter()
        .map(|(p, c)| c.as_constant().map(|x| (p.clone(), x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions_of;

    fn s(terms: &[(&[usize], i64)]) -> SymFunc {
        SymFunc::from_terms(
            Basis::Schur,
            terms
                .iter()
                .map(|(p, c)| (Partition::new(p.to_vec()).unwrap(), TPoly::constant(*c))),
        )
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_h(&part![1], 1), s(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(
            pieri_h(&part![2, 1], 2),
            s(&[(&[4, 1], 1), (&[3, 2], 1), (&[3, 1, 1], 1), (&[2, 2, 1], 1)])
        );
        assert_eq!(pieri_e(&part![1], 2), s(&[(&[2, 1], 1), (&[1, 1, 1], 1)]));
        assert_eq!(pieri_h(&Partition::empty(), 3), s(&[(&[3], 1)]));
    }

    #[test]
    fn multiply_examples() {
        let f = multiply(&SymFunc::schur(part![2, 2]), &SymFunc::schur(part![1])).unwrap();
        assert_eq!(f, s(&[(&[3, 2], 1), (&[2, 2, 1], 1)]));
        let g = multiply_schur(&part![2, 1], &part![2, 1]);
        assert_eq!(g.coeff(&part![3, 2, 1]), TPoly::constant(2));
        assert_eq!(g.len(), 7);
    }

    #[test]
    fn perp_examples() {
        let f = SymFunc::schur(part![2, 1]);
        assert_eq!(perp_h(1, &f), s(&[(&[2], 1), (&[1, 1], 1)]));
        assert!(perp_h(3, &f).is_zero());
        assert_eq!(
            perp_s(&part![1, 1], &SymFunc::schur(part![1, 1])).unwrap(),
            SymFunc::one()
        );
        assert_eq!(perp_e(2, &f), s(&[(&[1], 1)]));
    }

    #[test]
    fn strips_add_and_remove_are_inverse() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                for r in 0..=3 {
                    for mu in add_horizontal_strips(&lambda, r) {
                        assert!(remove_horizontal_strips(&mu, r).contains(&lambda));
                    }
                    for mu in remove_vertical_strips(&lambda, r) {
                        assert!(add_vertical_strips(&mu, r).contains(&lambda));
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_reproduces_schur() {
        for n in 0..=6 {
            for mu in partitions_of(n) {
                let mut total = SymFunc::zero(Basis::Schur);
                for (alpha, c) in jacobi_trudi(&mu).iter() {
                    total
                        .add_scaled(&h_product(alpha), &TPoly::constant(c.clone()))
                        .unwrap();
                }
                assert_eq!(total, SymFunc::schur(mu.clone()), "{mu}");
            }
        }
    }

    #[test]
    fn rejects_other_bases() {
        let m = SymFunc::term(Basis::Monomial, part![1], TPoly::one());
        assert!(multiply(&m, &SymFunc::one()).is_err());
        assert!(perp_s(&part![1], &m).is_err());
    }
}
