//! Kostka matrices, their inverses, and the basis changes they drive.
//!
//! Convention: `s_λ = Σ_μ K_{λμ} m_μ` and `h_μ = Σ_λ K_{λμ} s_λ`. Rows and
//! columns are indexed by partitions in descending lex order, which makes
//! the matrix upper unitriangular.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::pieri::mul_h;
use super::{Basis, SymFunc};
use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::{partitions_in, Partition};

/// A square integer matrix indexed by partitions of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    pub degree: usize,
    /// Partitions of length greater than this are excluded.
    pub max_len: Option<usize>,
    pub index: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
    position: HashMap<Partition, usize>,
}

impl KostkaMatrix {
    fn new(degree: usize, max_len: Option<usize>, index: Vec<Partition>, entries: Vec<Vec<BigInt>>) -> Self {
        let position = index.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        KostkaMatrix {
            degree,
            max_len,
            index,
            entries,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.position.get(lambda).copied()
    }

    /// Entry at `(row, col)`; zero when either index is outside the matrix.
    pub fn get(&self, row: &Partition, col: &Partition) -> BigInt {
        match (self.position(row), self.position(col)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigInt::zero(),
        }
    }
}

type Cache = RwLock<HashMap<(usize, Option<usize>, bool), Arc<KostkaMatrix>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(key: (usize, Option<usize>, bool), build: impl FnOnce() -> KostkaMatrix) -> Arc<KostkaMatrix> {
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return hit.clone();
    }
    let built = Arc::new(build());
    cache().write().unwrap().entry(key).or_insert(built).clone()
}

fn build_kostka(n: usize, max_len: Option<usize>) -> KostkaMatrix {
    let index: Vec<Partition> = partitions_in(n, max_len, None).collect();
    let pos: HashMap<&Partition, usize> = index.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let size = index.len();
    let mut entries = vec![vec![BigInt::zero(); size]; size];
    for (j, mu) in index.iter().enumerate() {
        // h_μ by iterated Pieri; longer shapes never shrink again, so they can be dropped
        let mut h = SymFunc::one();
        for &part in mu.parts() {
            h = mul_h(part, &h);
            if let Some(m) = max_len {
                h = h.filter(|p| p.length() <= m);
            }
        }
        for (lambda, c) in h.iter() {
            let i = pos[lambda];
            entries[i][j] = c.as_constant().expect("integer Pieri coefficients");
        }
    }
    KostkaMatrix::new(n, max_len, index, entries)
}

fn invert_integer_unitriangular(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let mut x = vec![vec![BigInt::zero(); n]; n];
    for i in (0..n).rev() {
        x[i][i] = BigInt::one();
        for j in i + 1..n {
            let mut acc = BigInt::zero();
            for k in i + 1..=j {
                if !m[i][k].is_zero() && !x[k][j].is_zero() {
                    acc -= &m[i][k] * &x[k][j];
                }
            }
            x[i][j] = acc;
        }
    }
    x
}

/// The Kostka matrix of degree `n`.
pub fn kostka_matrix(n: usize) -> Arc<KostkaMatrix> {
    cached((n, None, false), || build_kostka(n, None))
}

/// The principal block on partitions of length at most `m`. Partitions of
/// bounded length form an upper set for dominance, so this block of the
/// full inverse equals the inverse of this block.
pub fn kostka_matrix_restricted(n: usize, m: usize) -> Arc<KostkaMatrix> {
    cached((n, Some(m), false), || build_kostka(n, Some(m)))
}

pub fn inverse_kostka(n: usize) -> Arc<KostkaMatrix> {
    cached((n, None, true), || {
        let k = kostka_matrix(n);
        KostkaMatrix::new(n, None, k.index.clone(), invert_integer_unitriangular(&k.entries))
    })
}

pub fn inverse_kostka_restricted(n: usize, m: usize) -> Arc<KostkaMatrix> {
    cached((n, Some(m), true), || {
        let k = kostka_matrix_restricted(n, m);
        KostkaMatrix::new(
            n,
            Some(m),
            k.index.clone(),
            invert_integer_unitriangular(&k.entries),
        )
    })
}

fn check_degrees(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch {
            left: lambda.clone(),
            right: mu.clone(),
        });
    }
    Ok(())
}

/// `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    check_degrees(lambda, mu)?;
    let m = lambda.length().max(mu.length());
    Ok(kostka_matrix_restricted(lambda.degree(), m).get(lambda, mu))
}

/// `K⁻¹_{λμ}`, defined by `m_λ = Σ_μ K⁻¹_{λμ} s_μ`.
pub fn inverse_kostka_entry(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    check_degrees(lambda, mu)?;
    let m = lambda.length().max(mu.length());
    Ok(inverse_kostka_restricted(lambda.degree(), m).get(lambda, mu))
}

/// Converts from the `s`, `m` or `h` basis into the Schur basis.
pub fn to_schur(f: &SymFunc) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::Schur);
    match f.basis() {
        Basis::Schur => return Ok(f.clone()),
        Basis::Monomial => {
            for (lambda, c) in f.iter() {
                let inv = inverse_kostka(lambda.degree());
                let i = inv.position(lambda).expect("partition of its own degree");
                for (j, mu) in inv.index.iter().enumerate() {
                    let x = &inv.entries[i][j];
                    if !x.is_zero() {
                        out.add_term_mul(mu, c, &TPoly::constant(x.clone()));
                    }
                }
            }
        }
        Basis::Homogeneous => {
            for (mu, c) in f.iter() {
                let k = kostka_matrix(mu.degree());
                let j = k.position(mu).expect("partition of its own degree");
                for (i, lambda) in k.index.iter().enumerate() {
                    let x = &k.entries[i][j];
                    if !x.is_zero() {
                        out.add_term_mul(lambda, c, &TPoly::constant(x.clone()));
                    }
                }
            }
        }
        other => {
            return Err(Error::BasisMismatch {
                left: Basis::Schur.to_string(),
                right: other.to_string(),
            })
        }
    }
    Ok(out)
}

/// Converts a Schur-basis function into the monomial basis.
pub fn to_monomial(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::Schur {
        return Err(Error::BasisMismatch {
            left: Basis::Schur.to_string(),
            right: f.basis().to_string(),
        });
    }
    let mut out = SymFunc::zero(Basis::Monomial);
    for (lambda, c) in f.iter() {
        let k = kostka_matrix(lambda.degree());
        let i = k.position(lambda).expect("partition of its own degree");
        for (j, mu) in k.index.iter().enumerate() {
            let x = &k.entries[i][j];
            if !x.is_zero() {
                out.add_term_mul(mu, c, &TPoly::constant(x.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part![2, 1], &part![1, 1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(kostka(&part![3], &part![1, 1, 1]).unwrap(), BigInt::from(1));
        assert_eq!(kostka(&part![1, 1, 1], &part![3]).unwrap(), BigInt::zero());
        assert_eq!(
            inverse_kostka_entry(&part![2], &part![1, 1]).unwrap(),
            BigInt::from(-1)
        );
        assert!(kostka(&part![2], &part![1]).is_err());
    }

    #[test]
    fn matrices_are_unitriangular_and_inverse() {
        for n in 0..=7 {
            let k = kostka_matrix(n);
            let inv = inverse_kostka(n);
            let size = k.len();
            for i in 0..size {
                assert!(k.entries[i][i].is_one());
                for j in 0..i {
                    assert!(k.entries[i][j].is_zero());
                }
                for j in 0..size {
                    let dot: BigInt = (0..size).map(|l| &k.entries[i][l] * &inv.entries[l][j]).sum();
                    assert_eq!(dot.is_one(), i == j);
                    assert!(i == j || dot.is_zero());
                }
            }
        }
    }

    #[test]
    fn restricted_block_matches_full_inverse() {
        let full = inverse_kostka(6);
        for m in 1..=6 {
            let block = inverse_kostka_restricted(6, m);
            for a in &block.index {
                for b in &block.index {
                    assert_eq!(block.get(a, b), full.get(a, b));
                }
            }
        }
    }

    #[test]
    fn conversions() {
        let m21 = SymFunc::term(Basis::Monomial, part![2, 1], TPoly::one());
        let s = to_schur(&m21).unwrap();
        assert_eq!(s.coeff(&part![2, 1]), TPoly::one());
        assert_eq!(s.coeff(&part![1, 1, 1]), TPoly::constant(-2));
        assert_eq!(s.len(), 2);
        assert_eq!(to_monomial(&s).unwrap(), m21);

        let h21 = SymFunc::term(Basis::Homogeneous, part![2, 1], TPoly::one());
        let s = to_schur(&h21).unwrap();
        assert_eq!(s, &SymFunc::schur(part![3]) + &SymFunc::schur(part![2, 1]));
        assert!(to_monomial(&m21).is_err());
    }
}
