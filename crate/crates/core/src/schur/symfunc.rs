use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::TPoly;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The basis a [`SymFunc`] is written in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    Schur,
    Monomial,
    Homogeneous,
    HallLittlewood,
    /// k-split polynomials `G^(k)`.
    G(usize),
    KSchur(usize),
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::Schur => "s",
            Basis::Monomial => "m",
            Basis::Homogeneous => "h",
            Basis::HallLittlewood => "H",
            Basis::G(_) => "G",
            Basis::KSchur(_) => "kschur",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self {
            Basis::G(k) | Basis::KSchur(k) => Some(*k),
            _ => None,
        }
    }

    fn from_tag(tag: &str, k: Option<usize>) -> Result<Basis> {
        let need_k = || k.ok_or_else(|| Error::Parse(format!("basis `{tag}` needs a k field")));
        Ok(match tag {
            "s" => Basis::Schur,
            "m" => Basis::Monomial,
            "h" => Basis::Homogeneous,
            "H" => Basis::HallLittlewood,
            "G" => Basis::G(need_k()?),
            "kschur" => Basis::KSchur(need_k()?),
            other => return Err(Error::Parse(format!("unknown basis `{other}`"))),
        })
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}^({k})", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

/// A finite linear combination of basis elements with coefficients in `Z[t]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, TPoly>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 in the Schur basis.
    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::term(Basis::Schur, lambda, TPoly::one())
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: TPoly) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, &coeff);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, TPoly)>) -> Self {
        let mut f = Self::zero(basis);
        for (p, c) in terms {
            f.add_term(p, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Same coefficients, reinterpreted in another basis.
    pub fn relabel(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &TPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += a * b` on the coefficient of `lambda`.
    pub fn add_term_mul(&mut self, lambda: &Partition, a: &TPoly, b: &TPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        slot.add_mul(a, b);
        if slot.is_zero() {
            self.terms.remove(lambda);
        }
    }

    /// `self += c * g`. Bases must agree.
    pub fn add_scaled(&mut self, g: &SymFunc, c: &TPoly) -> Result<()> {
        self.check_basis(g)?;
        for (p, x) in &g.terms {
            self.add_term_mul(p, x, c);
        }
        Ok(())
    }

    fn check_basis(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        out.add_scaled(other, &TPoly::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        out.add_scaled(other, &TPoly::constant(-1))?;
        Ok(out)
    }

    pub fn coeff(&self, lambda: &Partition) -> TPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.terms.contains_key(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of the index.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &TPoly)> {
        self.terms.iter()
    }

    /// Terms in the canonical output order (descending lex).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<Partition, TPoly> {
        self.terms
    }

    /// Distinct degrees present in the support, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Terms of degree `n` only.
    pub fn degree_part(&self, n: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.degree() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &TPoly) -> SymFunc {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_by_t_power(&self, n: usize) -> SymFunc {
        self.map_coeffs(|x| x.scale_by_t_power(n))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&TPoly) -> TPoly) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Specializes `t = 1`.
    pub fn at_t_one(&self) -> SymFunc {
        self.map_coeffs(|c| TPoly::constant(c.eval_at_one()))
    }

    /// Keeps the terms whose index satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&Partition) -> bool) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| pred(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Human-readable form with unicode t-powers.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let name = self.basis.tag();
        let sup = self.basis.k().map(|k| format!("^({k})")).unwrap_or_default();
        self.iter_desc()
            .map(|(p, c)| {
                let label = format!("{name}{sup}{p}");
                if c.is_one() {
                    label
                } else {
                    format!("({})·{label}", c.pretty())
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{}]({})", self.basis, self.pretty())
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    /// Panics on a basis mismatch; use [`SymFunc::try_add`] to handle it.
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.try_add(rhs)
            .expect("adding symmetric functions in different bases")
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.try_sub(rhs)
            .expect("subtracting symmetric functions in different bases")
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: TPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    k: Option<usize>,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis.tag().to_string(),
            k: self.basis.k(),
            terms: self
                .iter_desc()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SymFuncJson::deserialize(d)?;
        let basis = Basis::from_tag(&raw.basis, raw.k).map_err(D::Error::custom)?;
        Ok(SymFunc::from_terms(
            basis,
            raw.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn arithmetic_cancels_and_checks_basis() {
        let a = SymFunc::schur(part![2, 1]);
        let b = SymFunc::term(Basis::Schur, part![2, 1], TPoly::constant(-1));
        assert!((&a + &b).is_zero());
        let m = SymFunc::term(Basis::Monomial, part![2, 1], TPoly::one());
        assert!(matches!(a.try_add(&m), Err(Error::BasisMismatch { .. })));
        assert_eq!(a.homogeneous_degree(), Some(3));
        assert_eq!((&a + &SymFunc::one()).homogeneous_degree(), None);
    }

    #[test]
    fn json_is_descending_lex() {
        let f = SymFunc::from_terms(
            Basis::Schur,
            [(part![1, 1], TPoly::one()), (part![2], TPoly::t())],
        );
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"s","terms":[{"partition":[2],"coeff":["0","1"]},{"partition":[1,1],"coeff":["1"]}]}"#
        );
        let back: SymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);

        let g = SymFunc::term(Basis::G(3), part![2, 1], TPoly::one());
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with(r#"{"basis":"G","k":3,"#));
        assert_eq!(serde_json::from_str::<SymFunc>(&s).unwrap(), g);
        assert!(serde_json::from_str::<SymFunc>(r#"{"basis":"G","terms":[]}"#).is_err());
    }

    #[test]
    fn pretty_output() {
        let f = SymFunc::from_terms(
            Basis::Schur,
            [
                (part![1, 1], TPoly::one()),
                (part![2], TPoly::from_i64s(&[0, 1, 1])),
            ],
        );
        assert_eq!(f.pretty(), "(t + t²)·s(2) + s(1,1)");
        assert_eq!(SymFunc::zero(Basis::Schur).pretty(), "0");
    }
}
