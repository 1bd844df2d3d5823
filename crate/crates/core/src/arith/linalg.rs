//! Triangular solves and small dense linear algebra over `Z[t]`.

use num_rational::BigRational;
use num_traits::Zero;

use super::{TPoly, TRat};
use crate::error::{Error, Result};

fn check_upper(m: &[Vec<TPoly>], n: usize) -> Result<()> {
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::ShapeMismatch);
    }
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate().take(i) {
            if !x.is_zero() {
                return Err(Error::NotTriangular { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Solves `m * x = b` for upper-triangular `m` with unit diagonal.
pub fn unitriangular_solve(m: &[Vec<TPoly>], b: &[TPoly]) -> Result<Vec<TPoly>> {
    let n = b.len();
    check_upper(m, n)?;
    if let Some(i) = (0..n).find(|&i| !m[i][i].is_one()) {
        return Err(Error::NonUnitDiagonal { index: i });
    }
    let mut x = vec![TPoly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..n {
            if !m[i][j].is_zero() && !x[j].is_zero() {
                acc -= &(&m[i][j] * &x[j]);
            }
        }
        x[i] = acc;
    }
    Ok(x)
}

/// Upper-triangular solve over `Q(t)` for a nonzero but possibly non-unit diagonal.
pub fn triangular_solve_rational(m: &[Vec<TPoly>], b: &[TPoly]) -> Result<Vec<TRat>> {
    let n = b.len();
    check_upper(m, n)?;
    let mut x = vec![TRat::zero(); n];
    for i in (0..n).rev() {
        if m[i][i].is_zero() {
            return Err(Error::Precondition(format!("zero diagonal entry at {i}")));
        }
        let mut acc = TRat::from(b[i].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() && !x[j].is_zero() {
                acc = &acc - &(&TRat::from(m[i][j].clone()) * &x[j]);
            }
        }
        x[i] = (&acc / &TRat::from(m[i][i].clone()))?;
    }
    Ok(x)
}

/// Inverse of an upper unitriangular matrix; the result is again upper unitriangular.
pub fn invert_unitriangular(m: &[Vec<TPoly>]) -> Result<Vec<Vec<TPoly>>> {
    let n = m.len();
    let mut inv = vec![vec![TPoly::zero(); n]; n];
    for col in 0..n {
        let mut e = vec![TPoly::zero(); n];
        e[col] = TPoly::one();
        let x = unitriangular_solve(m, &e)?;
        for (row, v) in x.into_iter().enumerate() {
            inv[row][col] = v;
        }
    }
    Ok(inv)
}

pub fn mat_mul(a: &[Vec<TPoly>], b: &[Vec<TPoly>]) -> Result<Vec<Vec<TPoly>>> {
    let inner = b.len();
    if a.iter().any(|r| r.len() != inner) {
        return Err(Error::ShapeMismatch);
    }
    let cols = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![TPoly::zero(); cols]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..cols {
                out[i][j].add_mul(x, &b[k][j]);
            }
        }
    }
    Ok(out)
}

pub fn mat_vec(a: &[Vec<TPoly>], v: &[TPoly]) -> Result<Vec<TPoly>> {
    if a.iter().any(|r| r.len() != v.len()) {
        return Err(Error::ShapeMismatch);
    }
    Ok(a.iter()
        .map(|row| {
            let mut acc = TPoly::zero();
            for (x, y) in row.iter().zip(v) {
                acc.add_mul(x, y);
            }
            acc
        })
        .collect())
}

/// Rank of `m` after substituting the rational value `t`.
pub fn rank_at(m: &[Vec<TPoly>], t: &BigRational) -> usize {
    let mut rows: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| x.eval_rational(t)).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for cc in c..cols {
                    let delta = &f * &rows[rank][cc];
                    rows[r][cc] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> TPoly {
        TPoly::from_i64s(c)
    }

    #[test]
    fn solve_examples() {
        let id = vec![vec![p(&[1]), p(&[])], vec![p(&[]), p(&[1])]];
        let b = vec![p(&[3, 1]), p(&[0, 0, 2])];
        assert_eq!(unitriangular_solve(&id, &b).unwrap(), b);

        let m = vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[]), p(&[1])]];
        let x = unitriangular_solve(&m, &[p(&[0, 0, 1]), p(&[1])]).unwrap();
        assert_eq!(x, vec![p(&[0, -1, 1]), p(&[1])]);

        let one = vec![vec![p(&[1])]];
        assert_eq!(
            unitriangular_solve(&one, &[p(&[1, 1])]).unwrap(),
            vec![p(&[1, 1])]
        );
    }

    #[test]
    fn solve_rejects_bad_input() {
        let lower = vec![vec![p(&[1]), p(&[])], vec![p(&[2]), p(&[1])]];
        assert_eq!(
            unitriangular_solve(&lower, &[p(&[1]), p(&[1])]),
            Err(Error::NotTriangular { row: 1, col: 0 })
        );
        let nonunit = vec![vec![p(&[1]), p(&[])], vec![p(&[]), p(&[0, 1])]];
        assert_eq!(
            unitriangular_solve(&nonunit, &[p(&[1]), p(&[1])]),
            Err(Error::NonUnitDiagonal { index: 1 })
        );
        let x = triangular_solve_rational(&nonunit, &[p(&[1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(x[1].to_tpoly(), Some(p(&[0, 1])));
    }

    #[test]
    fn solution_reproduces_rhs() {
        let m = vec![
            vec![p(&[1]), p(&[0, 1]), p(&[2, 0, -1])],
            vec![p(&[]), p(&[1]), p(&[1, 1])],
            vec![p(&[]), p(&[]), p(&[1])],
        ];
        let b = vec![p(&[1, 2, 3]), p(&[-4]), p(&[0, 0, 0, 5])];
        let x = unitriangular_solve(&m, &b).unwrap();
        assert_eq!(mat_vec(&m, &x).unwrap(), b);
        let inv = invert_unitriangular(&m).unwrap();
        let prod = mat_mul(&m, &inv).unwrap();
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
                assert!(i == j || x.is_zero());
            }
        }
        assert_eq!(rank_at(&m, &BigRational::from_integer(2.into())), 3);
    }

    fn arb_unitriangular(n: usize) -> impl Strategy<Value = Vec<Vec<TPoly>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 0..3), n * n).prop_map(move |cs| {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match i.cmp(&j) {
                            std::cmp::Ordering::Equal => TPoly::one(),
                            std::cmp::Ordering::Greater => TPoly::zero(),
                            std::cmp::Ordering::Less => p(&cs[i * n + j]),
                        })
                        .collect()
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn solve_round_trip(
            (m, b) in (1usize..6).prop_flat_map(|n| (
                arb_unitriangular(n),
                proptest::collection::vec(proptest::collection::vec(-5i64..=5, 0..4), n),
            ))
        ) {
            let b: Vec<TPoly> = b.iter().map(|c| p(c)).collect();
            let x = unitriangular_solve(&m, &b).unwrap();
            prop_assert_eq!(mat_vec(&m, &x).unwrap(), b.clone());
            let inv = invert_unitriangular(&m).unwrap();
            prop_assert_eq!(mat_vec(&inv, &b).unwrap(), x);
        }
    }
}
