//! Integer partitions and the shape combinatorics built on them.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing positive
//! parts with trailing zeros removed. Operations that need an explicit length
//! (padding with zeros, reversal, entrywise sums) produce an [`IntVector`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any increase is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`, a single row.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(a^m)`, an `m`-row rectangle of width `a`.
    pub fn rectangle(a: usize, m: usize) -> Self {
        if a == 0 {
            Self::empty()
        } else {
            Partition(vec![a; m])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Smallest nonzero part, 0 for the empty partition.
    pub fn last(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// Dominance order: every prefix sum of `self` is at most the matching
    /// prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.clone(),
                right: other.clone(),
            });
        }
        let n = self.length().max(other.length());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hook length of the cell in row `row`, column `col` (both 1-based).
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if row == 0 || col == 0 || row > self.length() || col > self.part(row - 1) {
            return Err(Error::CellOutsideDiagram {
                partition: self.clone(),
                row,
                col,
            });
        }
        let arm = self.part(row - 1) - col;
        let leg = self.0[row..].iter().take_while(|&&p| p >= col).count();
        Ok(arm + leg + 1)
    }

    /// Hook length of the corner cell (1,1); 0 for the empty partition.
    pub fn main_hook(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.first() + self.length() - 1
        }
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    /// Greedy top-down cut into blocks of main hook-length `k`.
    pub fn k_split(&self, k: usize) -> Result<KSplit> {
        check_k(k)?;
        if !self.is_k_bounded(k) {
            return Err(Error::NotKBounded {
                partition: self.clone(),
                k,
            });
        }
        let mut blocks = Vec::new();
        let mut start = 0;
        while start < self.length() {
            let head = self.0[start];
            // rows needed to reach hook k, clipped at the end of the partition
            let rows = (k + 1 - head).min(self.length() - start);
            blocks.push(Partition(self.0[start..start + rows].to_vec()));
            start += rows;
        }
        Ok(KSplit { k, blocks })
    }

    /// Multiset union of the parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Concatenation `(self, other)`; a partition only when `self.last() >= other.first()`.
    pub fn concat(&self, other: &Partition) -> IntVector {
        let mut v = self.to_vector();
        v.0.extend(other.0.iter().map(|&p| p as i64));
        v
    }

    /// True if every part of `other` (with multiplicity) is a part of `self`.
    pub fn contains_parts(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .all(|&p| self.multiplicity(p) >= other.multiplicity(p))
    }

    /// Multiset difference, `None` unless `other`'s parts all occur in `self`.
    pub fn remove_parts(&self, other: &Partition) -> Option<Partition> {
        let mut parts = self.0.clone();
        for &p in &other.0 {
            let pos = parts.iter().position(|&q| q == p)?;
            parts.remove(pos);
        }
        Some(Partition(parts))
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains_diagram(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn to_vector(&self) -> IntVector {
        IntVector(self.0.iter().map(|&p| p as i64).collect())
    }

    /// The parts padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Result<IntVector> {
        if len < self.length() {
            return Err(Error::Precondition(format!("{self} has more than {len} parts")));
        }
        let mut v = self.to_vector();
        v.0.resize(len, 0);
        Ok(v)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the parts (a missing part counts as 0).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Builds a partition from literal parts; panics on increasing input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("parts must be weakly decreasing")
    };
}

/// An integer vector of explicit length. Indexes vertex operators and Schur
/// functions before straightening.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The partition this vector spells, if it is weakly decreasing and nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.0.iter().any(|&x| x < 0) || self.0.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::from_unsorted(
            self.0.iter().map(|&x| x as usize).collect(),
        ))
    }

    pub fn concat(&self, other: &IntVector) -> IntVector {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        IntVector(v)
    }

    pub fn reversed(&self) -> IntVector {
        IntVector(self.0.iter().rev().copied().collect())
    }
}

impl From<&Partition> for IntVector {
    fn from(p: &Partition) -> Self {
        p.to_vector()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The k-split of a k-bounded partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KSplit {
    pub k: usize,
    pub blocks: Vec<Partition>,
}

impl KSplit {
    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    /// Concatenation of the blocks.
    pub fn flatten(&self) -> Partition {
        Partition(self.blocks.iter().flat_map(|b| b.0.iter().copied()).collect())
    }
}

/// Rejects `k = 0`.
pub fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidK(0))
    } else {
        Ok(())
    }
}

/// `(ell^(k+1-ell))`. Requires `1 <= ell <= k`.
pub fn k_rectangle(ell: usize, k: usize) -> Result<Partition> {
    check_k(k)?;
    if ell == 0 || ell > k {
        return Err(Error::Precondition(format!(
            "rectangle width {ell} outside 1..={k}"
        )));
    }
    Ok(Partition::rectangle(ell, k + 1 - ell))
}

/// The k-rectangles ordered by width `1..=k`.
pub fn k_rectangles(k: usize) -> Result<Vec<Partition>> {
    (1..=k).map(|ell| k_rectangle(ell, k)).collect()
}

/// At most `i` parts equal to `k - i` for every `i < k`.
pub fn is_k_irreducible(lambda: &Partition, k: usize) -> Result<bool> {
    check_k(k)?;
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded {
            partition: lambda.clone(),
            k,
        });
    }
    Ok((1..=k).all(|v| lambda.multiplicity(v) <= k - v))
}

/// All k-irreducible partitions, by degree and then descending lex.
pub fn k_irreducibles(k: usize) -> Result<Vec<Partition>> {
    check_k(k)?;
    let mut out = vec![Vec::new()];
    for v in (1..=k).rev() {
        let mut next = Vec::new();
        for parts in &out {
            for mult in 0..=(k - v) {
                let mut p: Vec<usize> = parts.clone();
                p.extend(std::iter::repeat_n(v, mult));
                next.push(p);
            }
        }
        out = next;
    }
    let mut out: Vec<Partition> = out.into_iter().map(Partition).collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    Ok(out)
}

/// `(n-1, n-2, ..., 0)`.
pub fn delta(n: usize) -> IntVector {
    IntVector((0..n as i64).rev().collect())
}

/// `mu^R`: `mu` padded to `m` entries and read backwards.
pub fn reverse(mu: &Partition, m: usize) -> Result<IntVector> {
    Ok(mu.padded(m)?.reversed())
}

/// Entrywise sum on zero-padded sequences.
pub fn add(lambda: &Partition, mu: &Partition) -> Partition {
    let n = lambda.length().max(mu.length());
    Partition((0..n).map(|i| lambda.part(i) + mu.part(i)).collect())
}

/// Entrywise difference on zero-padded sequences; may leave the set of
/// partitions, which the caller detects with [`IntVector::to_partition`].
pub fn sub(lambda: &Partition, mu: &Partition) -> IntVector {
    let n = lambda.length().max(mu.length());
    IntVector(
        (0..n)
            .map(|i| lambda.part(i) as i64 - mu.part(i) as i64)
            .collect(),
    )
}

/// Partitions of `degree` with at most `max_len` parts, each at most
/// `max_part`, in descending lexicographic order.
pub fn partitions_in(degree: usize, max_len: Option<usize>, max_part: Option<usize>) -> PartitionIter {
    PartitionIter::new(degree, max_len.unwrap_or(degree), max_part.unwrap_or(degree))
}

pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_in(n, None, None).collect()
}

/// All partitions with degree `0..=n`, degree-major, descending lex inside a degree.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// k-bounded partitions of `n`, descending lex.
pub fn k_bounded_partitions(n: usize, k: usize) -> Vec<Partition> {
    partitions_in(n, None, Some(k)).collect()
}

pub struct PartitionIter {
    max_len: usize,
    max_part: usize,
    current: Option<Vec<usize>>,
}

impl PartitionIter {
    fn new(degree: usize, max_len: usize, max_part: usize) -> Self {
        let current = fill(degree, max_part, max_len);
        PartitionIter {
            max_len,
            max_part,
            current,
        }
    }
}

/// Greedy lex-largest partition of `n` under the bounds, if one exists.
fn fill(mut n: usize, max_part: usize, max_len: usize) -> Option<Vec<usize>> {
    if n > max_part.saturating_mul(max_len) {
        return None;
    }
    let mut parts = Vec::new();
    while n > 0 {
        let p = n.min(max_part);
        parts.push(p);
        n -= p;
    }
    Some(parts)
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // rightmost position that can be lowered by one with a feasible refill
        let mut rest: usize = 0;
        let mut next = None;
        for i in (0..cur.len()).rev() {
            rest += cur[i];
            let lowered = cur[i] - 1;
            let remaining = rest - lowered;
            let slots = self.max_len - i - 1;
            if lowered == 0 {
                continue;
            }
            if let Some(tail) = fill(remaining, lowered.min(self.max_part), slots) {
                let mut n = cur[..i].to_vec();
                n.push(lowered);
                n.extend(tail);
                next = Some(n);
                break;
            }
        }
        self.current = next;
        Some(Partition(cur))
    }
}

fn parse_ints<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{x}` is not an integer")))
        })
        .collect()
}

/// Comma-separated parts; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_ints(s)?)
    }
}

impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(IntVector::new(parse_ints(s)?))
    }
}
