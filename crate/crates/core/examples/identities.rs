//! Rectangle commutation and the expansion of B_rect B_ν.

use kschur::part;
use kschur::verify::test_set;
use kschur::verify::{
    rect_expansion, verify_identity_expansion, verify_identity_rect_commute, verify_identity_structured,
    Variant,
};
use kschur::vertex::check_commutation;

fn main() -> kschur::Result<()> {
    println!(
        "rect-commute k=3 ℓ=1 i=2: {}",
        verify_identity_rect_commute(3, 1, 2, 3)?.pass
    );
    println!(
        "commutation m=1 n=2: {}",
        check_commutation(1, 2, &test_set(3))?.pass
    );

    let (k, ell, nu) = (3, 1, part![2, 1]);
    for term in rect_expansion(k, ell, &nu)? {
        println!(
            "  μ={} sign {} B_{} B_{}",
            term.mu, term.sign, term.rho, term.gamma
        );
    }
    println!(
        "I4 expansion: {}",
        verify_identity_expansion(k, ell, &nu, Variant::I4, 3)?.pass
    );
    println!(
        "I3 (k=3 ℓ=1 ν=(2,2)): {}",
        verify_identity_expansion(3, 1, &part![2, 2], Variant::I3, 3)?.pass
    );

    let shapes = verify_identity_structured(4, 1, &part![2], Variant::I4, 3)?;
    println!("I4 shapes at k=4 ℓ=1 ν=(2): {} {:?}", shapes.pass, shapes.notes);
    Ok(())
}
