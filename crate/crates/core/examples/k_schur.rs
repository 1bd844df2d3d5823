//! k-Schur functions and the action of k-rectangles.

use kschur::kspace::{k_schur, k_schur_table, rectangle_exponent};
use kschur::part;
use kschur::partition::k_rectangle;
use kschur::vertex::apply_b_partition;

fn main() -> kschur::Result<()> {
    let table = k_schur_table(2, 4)?;
    for (lambda, f) in &table.entries {
        println!("s^(2)_{lambda} = {}", f.pretty());
    }

    // for large k the k-Schur function is the Schur function
    println!("s^(5)_(2,1) = {}", k_schur(&part![2, 1], 5)?.pretty());

    let (k, ell) = (3, 2);
    let lambda = part![3, 1];
    let rect = k_rectangle(ell, k)?;
    let lhs = apply_b_partition(&rect, &*k_schur(&lambda, k)?)?;
    let d = rectangle_exponent(&lambda, ell);
    let rhs = k_schur(&rect.union(&lambda), k)?.scale_by_t_power(d);
    println!(
        "B_{rect} s^(3)_{lambda} = t^{d} s^(3)_{}: {}",
        rect.union(&lambda),
        lhs == rhs
    );
    Ok(())
}
