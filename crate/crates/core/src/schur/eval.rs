//! Scalar product, the plethysm `s_i[X(t-1)]`, and evaluation in finitely
//! many variables.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::kostka::kostka_matrix_restricted;
use super::{Basis, SymFunc};
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Hall scalar product; the Schur basis is orthonormal.
pub fn scalar_product(f: &SymFunc, g: &SymFunc) -> Result<TPoly> {
    for x in [f, g] {
        if x.basis() != Basis::Schur {
            return Err(Error::BasisMismatch {
                left: Basis::Schur.to_string(),
                right: x.basis().to_string(),
            });
        }
    }
    let mut acc = TPoly::zero();
    for (p, c) in f.iter() {
        if g.contains(p) {
            acc.add_mul(c, &g.coeff(p));
        }
    }
    Ok(acc)
}

/// Hook shape `(r, 1^{i-r})`.
pub fn hook(r: usize, i: usize) -> Partition {
    let mut parts = vec![r];
    parts.extend(std::iter::repeat_n(1, i - r));
    Partition::new(parts).expect("hooks are partitions")
}

/// `s_i[X(t-1)]` in the Schur basis:
/// `(t-1) Σ_{r=1..i} (-1)^{i-r} t^{r-1} s_{(r,1^{i-r})}` for `i ≥ 1`.
pub fn hook_plethysm(i: usize) -> SymFunc {
    if i == 0 {
        return SymFunc::one();
    }
    let t_minus_one = TPoly::from_i64s(&[-1, 1]);
    let mut out = SymFunc::zero(Basis::Schur);
    for r in 1..=i {
        let sign = if (i - r).is_multiple_of(2) { 1 } else { -1 };
        let c = t_minus_one.scale(&BigInt::from(sign)).scale_by_t_power(r - 1);
        out.add_term(hook(r, i), &c);
    }
    out
}

/// Monomial symmetric polynomial `m_μ(x_1..x_m)`; zero if `ℓ(μ) > m`.
fn monomial_eval(mu: &Partition, xs: &[BigRational]) -> BigRational {
    let m = xs.len();
    if mu.length() > m {
        return BigRational::zero();
    }
    let mut exps: Vec<usize> = mu.parts().to_vec();
    exps.resize(m, 0);
    exps.sort_unstable();
    let mut total = BigRational::zero();
    // walk distinct permutations in lexicographic order
    loop {
        let mut term = BigRational::one();
        for (x, &e) in xs.iter().zip(&exps) {
            if e > 0 {
                term *= num_traits::pow(x.clone(), e);
            }
        }
        total += term;
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| exps[i] < exps[i + 1]) else {
            break;
        };
        let j = (i + 1..m)
            .rev()
            .find(|&j| exps[j] > exps[i])
            .expect("successor exists");
        exps.swap(i, j);
        exps[i + 1..].reverse();
    }
    total
}

/// Evaluates `f` at `x_1..x_m` with `t` set to the given rational.
pub fn eval_in_vars(f: &SymFunc, xs: &[BigRational], t: &BigRational) -> Result<BigRational> {
    if f.basis() != Basis::Schur {
        return Err(Error::BasisMismatch {
            left: Basis::Schur.to_string(),
            right: f.basis().to_string(),
        });
    }
    let m = xs.len();
    let mut memo: HashMap<Partition, BigRational> = HashMap::new();
    let mut total = BigRational::zero();
    for (lambda, c) in f.iter() {
        if lambda.length() > m {
            continue;
        }
        let k = kostka_matrix_restricted(lambda.degree(), m);
        let i = k.position(lambda).expect("bounded length");
        let mut value = BigRational::zero();
        for (j, mu) in k.index.iter().enumerate() {
            let kk = &k.entries[i][j];
            if kk.is_zero() {
                continue;
            }
            let mv = memo
                .entry(mu.clone())
                .or_insert_with(|| monomial_eval(mu, xs))
                .clone();
            value += BigRational::from_integer(kk.clone()) * mv;
        }
        total += c.eval_rational(t) * value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::schur::pieri::{perp, perp_e, perp_h};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn evaluation_examples() {
        let one = q(1);
        let pts = [q(2), q(3)];
        assert_eq!(eval_in_vars(&SymFunc::schur(part![1]), &pts, &one).unwrap(), q(5));
        assert_eq!(
            eval_in_vars(&SymFunc::schur(part![1, 1]), &pts, &one).unwrap(),
            q(6)
        );
        assert_eq!(
            eval_in_vars(&SymFunc::schur(part![2, 1]), &[q(1), q(1)], &one).unwrap(),
            q(2)
        );
        assert_eq!(
            eval_in_vars(&SymFunc::schur(part![1, 1, 1]), &pts, &one).unwrap(),
            q(0)
        );
        // s_2(2,3) = 4 + 6 + 9
        assert_eq!(
            eval_in_vars(&SymFunc::schur(part![2]), &pts, &one).unwrap(),
            q(19)
        );
    }

    #[test]
    fn hook_plethysm_small_cases() {
        assert_eq!(hook_plethysm(0), SymFunc::one());
        let h1 = hook_plethysm(1);
        assert_eq!(h1.coeff(&part![1]), TPoly::from_i64s(&[-1, 1]));
        let h2 = hook_plethysm(2);
        assert_eq!(h2.coeff(&part![2]), TPoly::from_i64s(&[0, -1, 1]));
        assert_eq!(h2.coeff(&part![1, 1]), TPoly::from_i64s(&[1, -1]));
        assert_eq!(h2.len(), 2);
    }

    #[test]
    fn hook_plethysm_perp_factorizes() {
        // s_i[X(t-1)]^⊥ = Σ_j t^j (-1)^{i-j} h_j^⊥ e_{i-j}^⊥
        let f = &SymFunc::schur(part![3, 2, 1]) + &SymFunc::schur(part![2, 2, 1, 1]);
        for i in 0..=5 {
            let direct = perp(&hook_plethysm(i), &f).unwrap();
            let mut factored = SymFunc::zero(Basis::Schur);
            for j in 0..=i {
                let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                let term = perp_h(j, &perp_e(i - j, &f));
                factored.add_scaled(&term, &TPoly::monomial(sign, j)).unwrap();
            }
            assert_eq!(direct, factored, "i = {i}");
        }
    }

    #[test]
    fn scalar_product_is_orthonormal() {
        let a = SymFunc::schur(part![2, 1]);
        assert!(scalar_product(&a, &a).unwrap().is_one());
        assert!(scalar_product(&a, &SymFunc::schur(part![3])).unwrap().is_zero());
    }
}
