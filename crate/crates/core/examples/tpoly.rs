//! Exact arithmetic in Z[t] and Q(t), and triangular solves.

use kschur::arith::{invert_unitriangular, mat_vec, triangular_solve_rational, unitriangular_solve};
use kschur::{TPoly, TRat};

fn main() -> kschur::Result<()> {
    let a = TPoly::from_i64s(&[-1, 1]); // t - 1
    let b = TPoly::from_i64s(&[1, 1]); // t + 1
    let p = &a * &b;
    println!("({a})({b}) = {p}");
    println!("at t = 1: {}", p.eval_at_one());
    println!("gcd({p}, {a}) = {}", p.gcd(&a));
    println!("({p}) / ({a}) = {}", p.exact_divide(&a)?);

    let r = TRat::new(p.clone(), TPoly::from_i64s(&[0, 0, 1]))?;
    println!("rational: {r}, inverse {}", r.recip()?);

    // upper unitriangular system over Z[t]
    let m = vec![
        vec![TPoly::one(), TPoly::t(), TPoly::t_pow(2)],
        vec![TPoly::zero(), TPoly::one(), TPoly::t()],
        vec![TPoly::zero(), TPoly::zero(), TPoly::one()],
    ];
    let rhs = vec![TPoly::from(3), TPoly::from(2), TPoly::one()];
    let x = unitriangular_solve(&m, &rhs)?;
    println!("x = {x:?}");
    assert_eq!(mat_vec(&m, &x)?, rhs);
    println!("inverse: {:?}", invert_unitriangular(&m)?);

    let d = vec![vec![TPoly::from(2), TPoly::t()], vec![TPoly::zero(), a.clone()]];
    let y = triangular_solve_rational(&d, &[TPoly::one(), TPoly::one()])?;
    println!("non-unit diagonal: {y:?}");
    Ok(())
}
