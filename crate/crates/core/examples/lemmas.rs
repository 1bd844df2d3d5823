//! Kostka-matrix lemmas on operator indices.

use kschur::part;
use kschur::partition::{IntVector, Partition};
use kschur::verify::{kostka_lemma_sides, verify_lemma_general, verify_lemma_kostka, KostkaLemma};

fn main() -> kschur::Result<()> {
    let l = KostkaLemma::PermutationSum {
        lambda: part![2, 1],
        b: 1,
        r: 3,
        nu: Partition::empty(),
    };
    let (lhs, rhs) = kostka_lemma_sides(&l)?;
    println!(
        "permutation sum: {} vs {} index terms, equal as Schur functions: {}",
        lhs.len(),
        rhs.len(),
        verify_lemma_kostka(&l)?.pass
    );

    let stated = KostkaLemma::ESetSum {
        lambda: part![1, 1],
        a: 1,
        m: 2,
        nu: Partition::empty(),
    };
    let full = KostkaLemma::ESetSumFull {
        lambda: part![1, 1],
        a: 1,
        m: 2,
        nu: Partition::empty(),
    };
    println!("E-set sum, ρ in the box: {}", verify_lemma_kostka(&stated)?.pass);
    println!("E-set sum, ρ unrestricted: {}", verify_lemma_kostka(&full)?.pass);

    let mu = IntVector::new(vec![1, 0]);
    let gamma = IntVector::new(vec![1]);
    let nu = IntVector::new(vec![]);
    println!(
        "general lemma: {}",
        verify_lemma_general(&mu, &gamma, &nu, 2)?.pass
    );
    Ok(())
}
