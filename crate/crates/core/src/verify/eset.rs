use std::collections::BTreeMap;

use num_bigint::BigInt;

/// 0/1 vectors of length `m` with exactly `d` ones, in descending lex order.
pub fn e_vectors(m: usize, d: usize) -> Vec<Vec<i64>> {
    fn go(m: usize, d: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let left = m - prefix.len();
        if d > left {
            return;
        }
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        if d > 0 {
            prefix.push(1);
            go(m, d - 1, prefix, out);
            prefix.pop();
        }
        prefix.push(0);
        go(m, d, prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    go(m, d, &mut Vec::with_capacity(m), &mut out);
    out
}

/// `E_m^λ`: all sums `v_1 + v_2 + ⋯` with `v_i ∈ E_m^{λ_i}`, counted with
/// multiplicity. The specification need not be weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ESet {
    pub m: usize,
    pub spec: Vec<usize>,
}

impl ESet {
    pub fn new(m: usize, spec: Vec<usize>) -> Self {
        ESet { m, spec }
    }

    /// Each distinct sum with the number of tuples producing it.
    pub fn sums(&self) -> BTreeMap<Vec<i64>, BigInt> {
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        acc.insert(vec![0; self.m], BigInt::from(1));
        for &d in &self.spec {
            let vs = e_vectors(self.m, d);
            let mut next = BTreeMap::new();
            for (sum, c) in &acc {
                for v in &vs {
                    let s: Vec<i64> = sum.iter().zip(v).map(|(a, b)| a + b).collect();
                    *next.entry(s).or_insert_with(|| BigInt::from(0)) += c;
                }
            }
            acc = next;
        }
        acc
    }

    /// Number of tuples, `Π binomial(m, λ_i)`.
    pub fn count(&self) -> BigInt {
        self.sums().values().sum()
    }
}

/// Distinct rearrangements of `v`, in descending lex order.
pub fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = v.to_vec();
    cur.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![cur.clone()];
    // previous permutation in lex order
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] > cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] < cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}
