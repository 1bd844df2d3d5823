use std::fmt;

use serde_json::json;

use super::{apply_b_int, apply_b_vector};
use crate::arith::TPoly;
use crate::error::Result;
use crate::kspace::project_t;
use crate::partition::IntVector;
use crate::schur::{Basis, SymFunc};
use crate::verify::{compare_on, VerifyReport};

/// A linear operator on Schur-basis functions, built from vertex operators
/// and projections.
#[derive(Clone, PartialEq, Eq)]
pub enum OpExpr {
    BInt(i64),
    BVector(IntVector),
    /// `T_j^(k)`.
    Project {
        j: usize,
        k: usize,
    },
    Scale(TPoly),
    /// Applied right to left, like function composition.
    Compose(Vec<OpExpr>),
    Sum(Vec<OpExpr>),
}

impl OpExpr {
    pub fn b(ell: i64) -> Self {
        OpExpr::BInt(ell)
    }

    pub fn bv(v: &[i64]) -> Self {
        OpExpr::BVector(IntVector::new(v.to_vec()))
    }

    pub fn t_pow(n: usize) -> Self {
        OpExpr::Scale(TPoly::t_pow(n))
    }

    /// `self ∘ other`.
    pub fn then(self, other: OpExpr) -> Self {
        let mut ops = match self {
            OpExpr::Compose(v) => v,
            x => vec![x],
        };
        match other {
            OpExpr::Compose(v) => ops.extend(v),
            x => ops.push(x),
        }
        OpExpr::Compose(ops)
    }

    pub fn plus(self, other: OpExpr) -> Self {
        let mut ops = match self {
            OpExpr::Sum(v) => v,
            x => vec![x],
        };
        ops.push(other);
        OpExpr::Sum(ops)
    }

    pub fn apply(&self, f: &SymFunc) -> Result<SymFunc> {
        match self {
            OpExpr::BInt(ell) => apply_b_int(*ell, f),
            OpExpr::BVector(v) => apply_b_vector(v, f),
            OpExpr::Project { j, k } => project_t(*j, *k, f),
            OpExpr::Scale(c) => Ok(f.scale(c)),
            OpExpr::Compose(ops) => ops.iter().rev().try_fold(f.clone(), |acc, op| op.apply(&acc)),
            OpExpr::Sum(ops) => {
                let mut out = SymFunc::zero(Basis::Schur);
                for op in ops {
                    out.add_scaled(&op.apply(f)?, &TPoly::one())?;
                }
                Ok(out)
            }
        }
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::BInt(ell) => write!(f, "B_{ell}"),
            OpExpr::BVector(v) => write!(f, "B_{v}"),
            OpExpr::Project { j, k } => write!(f, "T_{j}^({k})"),
            OpExpr::Scale(c) => write!(f, "({c})"),
            OpExpr::Compose(ops) => {
                let parts: Vec<String> = ops.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" "))
            }
            OpExpr::Sum(ops) => {
                let parts: Vec<String> = ops.iter().map(|o| format!("[{o}]")).collect();
                f.write_str(&parts.join(" + "))
            }
        }
    }
}

impl fmt::Debug for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpExpr({self})")
    }
}

/// Checks `B_m B_n = t B_n B_m + t B_{m+1} B_{n-1} - B_{n-1} B_{m+1}` on every
/// element of `test_set`.
pub fn check_commutation(m: i64, n: i64, test_set: &[SymFunc]) -> Result<VerifyReport> {
    let lhs = OpExpr::b(m).then(OpExpr::b(n));
    let rhs = OpExpr::t_pow(1)
        .then(OpExpr::b(n))
        .then(OpExpr::b(m))
        .plus(OpExpr::t_pow(1).then(OpExpr::b(m + 1)).then(OpExpr::b(n - 1)))
        .plus(
            OpExpr::Scale(TPoly::constant(-1))
                .then(OpExpr::b(n - 1))
                .then(OpExpr::b(m + 1)),
        );
    compare_on(
        "commutation",
        json!({ "m": m, "n": n }),
        test_set,
        |f| lhs.apply(f),
        |f| rhs.apply(f),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_up_to;
    use crate::verify::test_set;

    #[test]
    fn composition_order() {
        // B_2 ∘ B_1 on 1 is H_{(2,1)}
        let op = OpExpr::b(2).then(OpExpr::b(1));
        let v = op.apply(&SymFunc::one()).unwrap();
        assert_eq!(v, *crate::vertex::hall_littlewood(&crate::part![2, 1]));
        assert_eq!(op.to_string(), "B_2 B_1");
    }

    #[test]
    fn commutation_relation() {
        assert!(check_commutation(1, 1, &[SymFunc::one()]).unwrap().pass);
        assert!(check_commutation(2, 1, &test_set(4)).unwrap().pass);
        let schurs: Vec<SymFunc> = partitions_up_to(3).into_iter().map(SymFunc::schur).collect();
        assert!(check_commutation(0, 3, &schurs).unwrap().pass);
        assert!(check_commutation(-1, 2, &schurs).unwrap().pass);
    }
}
