//! The straightening rule for Schur functions and vertex operators indexed
//! by arbitrary integer vectors.

use serde::Serialize;

use crate::partition::{IntVector, Partition};

/// A nonzero straightened index: `s_v = sign * s_index`.
///
/// `index` is weakly decreasing. If its last entry is negative the term is
/// zero as a Schur function but still meaningful as an operator index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Straightened {
    pub sign: i8,
    pub index: IntVector,
}

impl Straightened {
    pub fn negative_tail(&self) -> bool {
        self.index.entries().last().is_some_and(|&x| x < 0)
    }

    /// The partition, unless the tail is negative.
    pub fn partition(&self) -> Option<Partition> {
        self.index.to_partition()
    }
}

/// Sorts `v + δ_n` decreasingly and subtracts `δ_n` again. Returns `None`
/// when `v + δ_n` has a repeated entry.
pub fn straighten(v: &IntVector) -> Option<Straightened> {
    let n = v.len() as i64;
    let mut u: Vec<i64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + n - 1 - i as i64)
        .collect();
    // insertion sort, counting transpositions
    let mut swaps = 0usize;
    for i in 1..u.len() {
        let mut j = i;
        while j > 0 && u[j - 1] <= u[j] {
            if u[j - 1] == u[j] {
                return None;
            }
            u.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    let index = u
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (n - 1 - i as i64))
        .collect();
    Some(Straightened {
        sign: if swaps.is_multiple_of(2) { 1 } else { -1 },
        index: IntVector::new(index),
    })
}

/// Schur-function semantics: `s_v = sign * s_λ`, or `None` when `s_v = 0`.
pub fn straighten_schur(v: &IntVector) -> Option<(i8, Partition)> {
    let s = straighten(v)?;
    let p = s.partition()?;
    Some((s.sign, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn v(x: &[i64]) -> IntVector {
        IntVector::new(x.to_vec())
    }

    #[test]
    fn examples() {
        let s = straighten(&v(&[1, 3])).unwrap();
        assert_eq!((s.sign, s.partition()), (-1, Some(part![2, 2])));
        assert_eq!(straighten(&v(&[2, 3])), None);
        let s = straighten(&v(&[1, 0, 2])).unwrap();
        assert_eq!((s.sign, s.partition()), (-1, Some(part![1, 1, 1])));
    }

    #[test]
    fn partitions_are_fixed_points() {
        let s = straighten(&v(&[3, 1, 0])).unwrap();
        assert_eq!(s.sign, 1);
        assert_eq!(s.index, v(&[3, 1, 0]));
        assert_eq!(straighten(&v(&[])).unwrap().index, v(&[]));
    }

    #[test]
    fn negative_tail_is_flagged() {
        // s_(-1,1) = h_-1 h_1 - h_0 h_0 = -1
        let s = straighten(&v(&[-1, 1])).unwrap();
        assert_eq!((s.sign, s.index.clone()), (-1, v(&[0, 0])));
        let s = straighten(&v(&[1, -3])).unwrap();
        assert!(s.negative_tail());
        assert_eq!(s.partition(), None);
        assert_eq!(straighten_schur(&v(&[1, -3])), None);
    }
}
