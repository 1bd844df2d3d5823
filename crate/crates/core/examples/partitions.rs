//! Partition combinatorics: conjugates, dominance, hooks, k-splits.

use kschur::part;
use kschur::partition::{
    is_k_irreducible, k_bounded_partitions, k_irreducibles, k_rectangles, partitions_of,
};

fn main() -> kschur::Result<()> {
    let lambda = part![4, 2, 2, 1];
    println!(
        "λ = {lambda}, |λ| = {}, ℓ(λ) = {}",
        lambda.degree(),
        lambda.length()
    );
    println!("λ' = {}", lambda.conjugate());
    println!("main hook h_M(λ) = {}", lambda.main_hook());
    println!("hook at (1,2) = {}", lambda.hook_length(1, 2)?);

    let mu = part![3, 3, 2, 1];
    println!("{mu} ≤ {lambda} in dominance: {}", mu.dominance_leq(&lambda)?);

    println!("partitions of 5:");
    for p in partitions_of(5) {
        println!("  {p}  (conjugate {})", p.conjugate());
    }

    let k = 3;
    let split = part![3, 2, 2, 1, 1, 1].k_split(k)?;
    println!("3-split of (3,2,2,1,1,1): {:?}", split.blocks());

    println!("3-rectangles: {:?}", k_rectangles(k)?);
    let irr = k_irreducibles(k)?;
    println!("{} 3-irreducibles: {irr:?}", irr.len());
    let bounded = k_bounded_partitions(4, 2);
    for p in &bounded {
        println!("  {p} is 2-irreducible: {}", is_k_irreducible(p, 2)?);
    }
    Ok(())
}
