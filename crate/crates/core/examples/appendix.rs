//! Inverse Kostka symmetries, reciprocal evaluation and monomial straightening.

use kschur::part;
use kschur::verify::{
    monomial_by_straightening, verify_kostka_complement, verify_kostka_shift, verify_monomial_straightening,
    verify_reciprocal_eval,
};

fn main() -> kschur::Result<()> {
    println!(
        "K⁻¹ shift invariance m=3 a=2 n=4: {}",
        verify_kostka_shift(3, 2, 4)?.pass
    );
    println!(
        "K⁻¹ box complement m=3 a=2 n=3: {}",
        verify_kostka_complement(3, 2, 3)?.pass
    );

    let r = verify_reciprocal_eval(&part![2, 1], 3, 3, 20)?;
    println!("reciprocal evaluation at {} points: {}", r.cases, r.pass);

    for n in 2..=4 {
        println!(
            "m21 in {n} variables = {}",
            monomial_by_straightening(&part![2, 1], n)?.pretty()
        );
    }
    println!(
        "m221 check: {}",
        verify_monomial_straightening(&part![2, 2, 1], 5)?.pass
    );
    Ok(())
}
