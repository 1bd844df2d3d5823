//! Vertex operators and Hall-Littlewood functions.

use kschur::part;
use kschur::partition::{partitions_of, IntVector};
use kschur::schur::SymFunc;
use kschur::vertex::{
    apply_b_int, apply_b_vector, hall_littlewood, hl_to_schur, kostka_foulkes, schur_to_hl, OpExpr,
};

fn main() -> kschur::Result<()> {
    for mu in partitions_of(3) {
        println!("H_{mu} = {}", hall_littlewood(&mu).pretty());
    }

    let h1 = apply_b_int(1, &SymFunc::one())?;
    let h21 = apply_b_int(2, &h1)?;
    println!("B_2 B_1 1 = {}", h21.pretty());
    assert_eq!(h21, *hall_littlewood(&part![2, 1]));

    let v = IntVector::new(vec![1, 2]);
    println!("B_(1,2) 1 = {}", apply_b_vector(&v, &SymFunc::one())?.pretty());

    println!(
        "Kostka-Foulkes K_(3),(1,1,1)(t) = {}",
        kostka_foulkes(&part![3], &part![1, 1, 1])?
    );

    let f = SymFunc::schur(part![2, 2]);
    let in_h = schur_to_hl(&f)?;
    println!("s22 in the H basis: {}", in_h.pretty());
    assert_eq!(hl_to_schur(&in_h)?, f);

    let op = OpExpr::b(1).then(OpExpr::b(2));
    println!("B_1 B_2 s1 = {}", op.apply(&SymFunc::schur(part![1]))?.pretty());
    Ok(())
}
