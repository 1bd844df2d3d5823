//! The rectangle product formula, as operators and at t = 1.

use kschur::part;
use kschur::partition::Partition;
use kschur::verify::{
    theorem1_full_sides, verify_corollary, verify_corollary_full, verify_theorem1, verify_theorem1_full,
};

fn main() -> kschur::Result<()> {
    let (a, r, m, nu) = (2, 1, 1, part![1]);
    let (lhs, rhs) = theorem1_full_sides(a, r, m, &nu)?;
    println!("left: {} words, right: {} words", lhs.len(), rhs.len());
    for (word, c) in rhs.iter() {
        println!("  ({c}) B_{} B_{}", word[0], word[1]);
    }
    println!(
        "s22 s1 = s2 s21 - s3 s11: {}",
        verify_corollary(a, r, m, &nu)?.pass
    );

    for (a, r, m, nu) in [
        (1, 1, 1, Partition::empty()),
        (1, 2, 1, Partition::empty()),
        (0, 1, 1, part![1]),
    ] {
        let stated = verify_theorem1(a, r, m, &nu, 3)?;
        let full = verify_theorem1_full(a, r, m, &nu, 3)?;
        let cor = verify_corollary(a, r, m, &nu)?;
        let cor_full = verify_corollary_full(a, r, m, &nu)?;
        println!(
            "a={a} r={r} m={m} ν={nu}: dropping summands {}/{}, all summands {}/{}",
            stated.pass, cor.pass, full.pass, cor_full.pass
        );
        if let Some(w) = stated.witness {
            println!(
                "  witness input {}: {} vs {}",
                w.input.pretty(),
                w.lhs.pretty(),
                w.rhs.pretty()
            );
        }
    }
    Ok(())
}
