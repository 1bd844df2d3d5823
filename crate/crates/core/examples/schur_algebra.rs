//! Schur-basis algebra: products, Kostka matrices, basis changes, straightening.

use kschur::part;
use kschur::partition::IntVector;
use kschur::schur::{inverse_kostka, kostka_matrix, multiply, perp_s, straighten, to_monomial, to_schur};
use kschur::{Basis, SymFunc, TPoly};

fn main() -> kschur::Result<()> {
    let f = SymFunc::schur(part![2, 1]);
    let g = SymFunc::schur(part![1, 1]);
    println!("s21 * s11 = {}", multiply(&f, &g)?.pretty());
    println!("s11^⊥ s21 = {}", perp_s(&part![1, 1], &f)?.pretty());

    let k = kostka_matrix(4);
    let kinv = inverse_kostka(4);
    println!("Kostka matrix, degree 4:");
    for row in &k.index {
        let cells: Vec<String> = k.index.iter().map(|col| k.get(row, col).to_string()).collect();
        let inv: Vec<String> = kinv
            .index
            .iter()
            .map(|col| kinv.get(row, col).to_string())
            .collect();
        println!(
            "  {:<10} {:<16} inverse {}",
            row.to_string(),
            cells.join(" "),
            inv.join(" ")
        );
    }

    let m = SymFunc::term(Basis::Monomial, part![2, 2], TPoly::one());
    let s = to_schur(&m)?;
    println!("m22 = {}", s.pretty());
    println!("back to monomials: {}", to_monomial(&s)?.pretty());

    for v in [vec![1, 3], vec![2, 3], vec![0, 2, 1], vec![0, -1]] {
        let v = IntVector::new(v);
        match straighten(&v) {
            None => println!("s_{v} = 0"),
            Some(st) => println!(
                "s_{v} = {} s_{} (negative tail: {})",
                st.sign,
                st.index,
                st.negative_tail()
            ),
        }
    }
    Ok(())
}
