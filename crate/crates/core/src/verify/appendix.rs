use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::eset::distinct_permutations;
use super::opsum::FormalSum;
use super::theorem::bounded_partitions;
use super::VerifyReport;
use crate::error::{Error, Result};
use crate::partition::{partitions_in, reverse, IntVector, Partition};
use crate::schur::{eval_in_vars, inverse_kostka_entry, to_schur, Basis, SymFunc};

fn shift_up(lambda: &Partition, a: usize, m: usize) -> Result<Partition> {
    let v = lambda.padded(m)?;
    Ok(Partition::from_unsorted(
        v.entries().iter().map(|&x| x as usize + a).collect(),
    ))
}

/// `a^m - λ^R`, or `None` if `λ_1 > a`.
fn complement(lambda: &Partition, a: usize, m: usize) -> Result<Option<Partition>> {
    if lambda.first() > a {
        return Ok(None);
    }
    let r = reverse(lambda, m)?;
    Ok(IntVector::new(r.entries().iter().map(|&x| a as i64 - x).collect()).to_partition())
}

/// `K⁻¹_{λμ} = K⁻¹_{λ+a^m, μ+a^m}` for all `λ, μ ⊢ n` with at most `m` parts.
pub fn verify_kostka_shift(m: usize, a: usize, n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("kostkaplus", json!({ "m": m, "a": a, "n": n }));
    let shapes: Vec<Partition> = partitions_in(n, Some(m), None).collect();
    for lambda in &shapes {
        let up = shift_up(lambda, a, m)?;
        for mu in &shapes {
            let lhs = inverse_kostka_entry(lambda, mu)?;
            let rhs = inverse_kostka_entry(&up, &shift_up(mu, a, m)?)?;
            report.require(lhs == rhs, || format!("λ={lambda} μ={mu}: {lhs} ≠ {rhs}"));
        }
    }
    Ok(report)
}

/// `K⁻¹_{λμ} = K⁻¹_{a^m-λ^R, a^m-μ^R}` for `λ, μ ⊢ n` inside the `m × a` box.
pub fn verify_kostka_complement(m: usize, a: usize, n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("kostkamoins", json!({ "m": m, "a": a, "n": n }));
    let shapes: Vec<Partition> = partitions_in(n, Some(m), Some(a)).collect();
    for lambda in &shapes {
        let lc = complement(lambda, a, m)?.expect("inside the box");
        for mu in &shapes {
            let mc = complement(mu, a, m)?.expect("inside the box");
            let lhs = inverse_kostka_entry(lambda, mu)?;
            let rhs = inverse_kostka_entry(&lc, &mc)?;
            report.require(lhs == rhs, || format!("λ={lambda} μ={mu}: {lhs} ≠ {rhs}"));
        }
    }
    Ok(report)
}

/// A nonzero rational with numerator and denominator in `1..=9`, random sign.
fn random_point(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(1..=9);
    let den: i64 = rng.gen_range(1..=9);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    BigRational::new(BigInt::from(sign * num), BigInt::from(den))
}

fn instance_seed(m: usize, a: usize, lambda: &Partition) -> u64 {
    lambda.parts().iter().fold((m as u64) << 8 | a as u64, |h, &p| {
        h.wrapping_mul(31).wrapping_add(p as u64 + 1)
    })
}

/// `(x_1⋯x_m)^a s_λ(1/x_1, …, 1/x_m) = s_{a^m-λ^R}(x_1, …, x_m)` at `points`
/// random rational points.
pub fn verify_reciprocal_eval(lambda: &Partition, a: usize, m: usize, points: usize) -> Result<VerifyReport> {
    let Some(comp) = complement(lambda, a, m)? else {
        return Err(Error::Precondition(format!("{lambda} does not fit in {m} × {a}")));
    };
    if lambda.length() > m {
        return Err(Error::Precondition(format!("{lambda} has more than {m} parts")));
    }
    let mut report = VerifyReport::new(
        "formu1",
        json!({ "lambda": lambda, "a": a, "m": m, "points": points }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(m, a, lambda));
    let s_lambda = SymFunc::schur(lambda.clone());
    let s_comp = SymFunc::schur(comp);
    let t = BigRational::zero();
    for _ in 0..points {
        let xs: Vec<BigRational> = (0..m).map(|_| random_point(&mut rng)).collect();
        let inv: Vec<BigRational> = xs.iter().map(|x| x.recip()).collect();
        let prod = xs.iter().fold(BigRational::one(), |p, x| p * x);
        let lhs = num_traits::pow(prod, a) * eval_in_vars(&s_lambda, &inv, &t)?;
        let rhs = eval_in_vars(&s_comp, &xs, &t)?;
        report.require(lhs == rhs, || {
            let pts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            format!("at ({}): {lhs} ≠ {rhs}", pts.join(", "))
        });
    }
    Ok(report)
}

/// The signed straightening sum of the distinct rearrangements of `λ`
/// padded to length `n`.
pub fn monomial_by_straightening(lambda: &Partition, n: usize) -> Result<SymFunc> {
    let mut sum = FormalSum::new();
    for sigma in distinct_permutations(lambda.padded(n)?.entries()) {
        sum.add(&IntVector::new(sigma), &BigInt::one());
    }
    Ok(sum.to_schur())
}

/// The straightening sum agrees with `m_λ` in `n` variables, i.e. with the
/// Schur expansion of `m_λ` truncated to at most `n` parts; at `n = |λ|`
/// nothing is truncated.
pub fn verify_monomial_straightening(lambda: &Partition, n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("monoschur", json!({ "lambda": lambda, "n": n }));
    let lhs = monomial_by_straightening(lambda, n)?;
    let m = SymFunc::term(Basis::Monomial, lambda.clone(), crate::arith::TPoly::one());
    let rhs = to_schur(&m)?.filter(|p| p.length() <= n);
    report.check(&SymFunc::one(), lhs, rhs);
    Ok(report)
}

/// Every instance of the `appendix` suite within the bounds: `m ≤ 4, a ≤ 3, n ≤ 6` for the
/// Kostka formulas, `m ≤ 3, a ≤ 4` for evaluation, `ℓ(λ) ≤ 4, |λ| ≤ 8` for
/// straightening. `max_degree` lowers the degree caps.
pub fn appendix_instances(max_degree: usize, points: usize) -> Vec<AppendixCheck> {
    let mut out = Vec::new();
    for m in 1..=4 {
        for a in 0..=3 {
            for n in 0..=max_degree.min(6) {
                out.push(AppendixCheck::KostkaShift { m, a, n });
                out.push(AppendixCheck::KostkaComplement { m, a, n });
            }
        }
    }
    for m in 1..=3 {
        for a in 0..=4 {
            for lambda in bounded_partitions(m, a) {
                if lambda.degree() <= max_degree {
                    out.push(AppendixCheck::ReciprocalEval { lambda, a, m, points });
                }
            }
        }
    }
    for deg in 0..=max_degree.min(8) {
        for lambda in partitions_in(deg, Some(4), None) {
            for n in lambda.length()..=4 {
                out.push(AppendixCheck::MonomialStraightening {
                    lambda: lambda.clone(),
                    n,
                });
            }
            if deg > 4 {
                out.push(AppendixCheck::MonomialStraightening { lambda, n: deg });
            }
        }
    }
    out
}

/// One instance of the `appendix` suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AppendixCheck {
    KostkaShift {
        m: usize,
        a: usize,
        n: usize,
    },
    KostkaComplement {
        m: usize,
        a: usize,
        n: usize,
    },
    ReciprocalEval {
        lambda: Partition,
        a: usize,
        m: usize,
        points: usize,
    },
    MonomialStraightening {
        lambda: Partition,
        n: usize,
    },
}

impl AppendixCheck {
    pub fn run(&self) -> Result<VerifyReport> {
        match self {
            AppendixCheck::KostkaShift { m, a, n } => verify_kostka_shift(*m, *a, *n),
            AppendixCheck::KostkaComplement { m, a, n } => verify_kostka_complement(*m, *a, *n),
            AppendixCheck::ReciprocalEval { lambda, a, m, points } => {
                verify_reciprocal_eval(lambda, *a, *m, *points)
            }
            AppendixCheck::MonomialStraightening { lambda, n } => verify_monomial_straightening(lambda, *n),
        }
    }
}
