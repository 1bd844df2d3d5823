//! Reduction to k-irreducible indices and the quotient by k-rectangles.

use kschur::kspace::{k_schur, quotient_normal_form, reconstruct, reduce_to_irreducible, reduce_with_order};
use kschur::part;
use kschur::{Basis, SymFunc, TPoly};

fn main() -> kschur::Result<()> {
    let k = 2;
    let lambda = part![2, 2, 1, 1, 1];
    let red = reduce_to_irreducible(&lambda, k)?;
    println!(
        "{lambda}: rectangles {:?}, remainder {}, t^{}",
        red.rectangles, red.mu, red.c
    );
    let rebuilt = reconstruct(&red)?;
    println!(
        "rebuilt = t^c s^(k)_λ: {}",
        rebuilt == k_schur(&lambda, k)?.scale(&TPoly::t_pow(red.c))
    );

    for order in [[2, 1], [1, 2]] {
        let r = reduce_with_order(&part![2, 1, 1], k, &order)?;
        println!("(2,1,1) widths {order:?}: c = {}, remainder {}", r.c, r.mu);
    }

    let f = SymFunc::from_terms(
        Basis::KSchur(k),
        [
            (part![2, 1], TPoly::one()),
            (part![1, 1, 1], TPoly::from(3)),
            (part![1], TPoly::from(2)),
        ],
    );
    println!(
        "{} ≡ {} mod k-rectangles",
        f.pretty(),
        quotient_normal_form(&f, k)?.pretty()
    );
    Ok(())
}
