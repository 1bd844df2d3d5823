mod common;

use num_bigint::BigInt;

use kschur::partition::{partitions_of, Partition};
use kschur::schur::kostka;

#[test]
fn oracle_small_values() {
    assert_eq!(common::kostka(&[2, 1], &[1, 1, 1]), BigInt::from(2));
    assert_eq!(common::character(&[2, 1], &[1, 1, 1]), BigInt::from(2));
    assert_eq!(common::character(&[2, 1], &[3]), BigInt::from(-1));
    assert_eq!(common::partitions(5).len(), 7);
}

#[test]
fn characters_are_orthogonal_in_degree_four() {
    // Σ_λ χ^λ(ρ)² = z_ρ
    let z = [4, 3, 8, 4, 24];
    for (rho, z) in common::partitions(4).iter().zip(z) {
        let sum: BigInt = common::partitions(4)
            .iter()
            .map(|l| common::character(l, rho).pow(2))
            .sum();
        assert_eq!(sum, BigInt::from(z), "ρ={rho:?}");
    }
}

#[test]
fn library_kostka_matches_tableau_count() {
    for n in 0..=6 {
        let shapes = partitions_of(n);
        for l in &shapes {
            for m in &shapes {
                let expect = common::kostka(l.parts(), m.parts());
                assert_eq!(kostka(l, m).unwrap(), expect, "λ={l} μ={m}");
            }
        }
    }
}

#[test]
fn schur_polynomial_in_two_variables() {
    let s21 = common::schur_poly(Partition::new(vec![2, 1]).unwrap().parts(), 2);
    assert_eq!(s21.len(), 2);
    assert!(s21.values().all(|c| *c == BigInt::from(1)));
}
