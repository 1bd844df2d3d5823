use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::TPoly;
use crate::error::Result;
use crate::partition::IntVector;
use crate::schur::{straighten, Basis, SymFunc};
use crate::vertex::apply_b_vector;

use super::{compare_on, test_set, VerifyReport};

/// A formal sum `Σ c · B_{w_1} B_{w_2} ⋯ B_{w_j}` of products of
/// vector-indexed vertex operators. Words are stored outermost first.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct OpSum {
    terms: BTreeMap<Vec<IntVector>, TPoly>,
}

impl OpSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(word: Vec<IntVector>) -> Self {
        let mut s = Self::new();
        s.add(word, &TPoly::one());
        s
    }

    pub fn add(&mut self, word: Vec<IntVector>, c: &TPoly) {
        let slot = self.terms.entry(word.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<IntVector>, &TPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &TPoly) -> OpSum {
        let mut out = OpSum::new();
        for (w, a) in &self.terms {
            out.add(w.clone(), &(a * c));
        }
        out
    }

    /// Applies the sum to `f`, sharing the innermost applications between
    /// words with a common suffix.
    pub fn apply(&self, f: &SymFunc) -> Result<SymFunc> {
        let words: Vec<(&[IntVector], &TPoly)> = self.terms.iter().map(|(w, c)| (w.as_slice(), c)).collect();
        apply_words(&words, f)
    }
}

fn apply_words(words: &[(&[IntVector], &TPoly)], f: &SymFunc) -> Result<SymFunc> {
    let mut leaf = TPoly::zero();
    let mut groups: BTreeMap<&IntVector, Vec<(&[IntVector], &TPoly)>> = BTreeMap::new();
    for &(w, c) in words {
        match w.split_last() {
            None => leaf += c,
            Some((last, rest)) => groups.entry(last).or_default().push((rest, c)),
        }
    }
    let mut out = f.scale(&leaf);
    for (v, sub) in groups {
        let g = apply_b_vector(v, f)?;
        if g.is_zero() {
            continue;
        }
        out.add_scaled(&apply_words(&sub, &g)?, &TPoly::one())?;
    }
    Ok(out)
}

impl fmt::Display for OpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let ops: Vec<String> = w.iter().map(|v| format!("B_{v}")).collect();
                format!("({c})·{}", ops.join(" "))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for OpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpSum({self})")
    }
}

/// Compares two operator sums on `{1} ∪ {H_σ : |σ| ≤ d}`.
pub fn compare_sums(
    id: &str,
    params: serde_json::Value,
    lhs: &OpSum,
    rhs: &OpSum,
    d: usize,
) -> Result<VerifyReport> {
    compare_on(id, params, &test_set(d), |f| lhs.apply(f), |f| rhs.apply(f))
}

/// A formal integer combination of straightened indices. Two sums of
/// `s_v` (or of `B_{v,ν}`) agree as soon as their straightened forms agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<IntVector, BigInt>,
}

impl FormalSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c · s_v` after straightening `v`.
    pub fn add(&mut self, v: &IntVector, c: &BigInt) {
        let Some(st) = straighten(v) else {
            return;
        };
        let c = if st.sign < 0 { -c } else { c.clone() };
        let slot = self.terms.entry(st.index.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&st.index);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntVector, &BigInt)> {
        self.terms.iter()
    }

    /// The Schur function this sum spells; negative-tail indices vanish.
    pub fn to_schur(&self) -> SymFunc {
        let mut out = SymFunc::zero(Basis::Schur);
        for (v, c) in &self.terms {
            if let Some(p) = v.to_partition() {
                out.add_term(p, &TPoly::constant(c.clone()));
            }
        }
        out
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(v, c)| format!("{c}·[{v}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}
