//! Dense polynomials in `t` with arbitrary-precision integer coefficients.
//!
//! Invariant: the coefficient vector is empty for zero, otherwise its last
//! entry is nonzero.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * t^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        TPoly { coeffs }
    }

    /// `t^n`.
    pub fn t_pow(n: usize) -> Self {
        Self::monomial(1, n)
    }

    /// `(-t)^n`.
    pub fn neg_t_pow(n: usize) -> Self {
        Self::monomial(if n.is_multiple_of(2) { 1 } else { -1 }, n)
    }

    /// Coefficients in ascending powers of `t`; trailing zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = TPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `t` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Constant polynomial, returned as its value.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `t^n`.
    pub fn scale_by_t_power(&self, n: usize) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n];
        coeffs.extend_from_slice(&self.coeffs);
        TPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * t + BigRational::from_integer(c.clone())
        })
    }

    /// `self += a * b` without building the intermediate product.
    pub fn add_mul(&mut self, a: &TPoly, b: &TPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let n = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < n {
            self.coeffs.resize(n, BigInt::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                self.coeffs[i + j] += x * y;
            }
        }
        self.normalize();
    }

    /// `self += c * t^shift * a` for a signed integer `c`.
    pub fn add_scaled_shifted(&mut self, a: &TPoly, c: i64, shift: usize) {
        if a.is_zero() || c == 0 {
            return;
        }
        let n = a.coeffs.len() + shift;
        if self.coeffs.len() < n {
            self.coeffs.resize(n, BigInt::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            match c {
                1 => self.coeffs[i + shift] += x,
                -1 => self.coeffs[i + shift] -= x,
                _ => self.coeffs[i + shift] += x * c,
            }
        }
        self.normalize();
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every intermediate leading coefficient. `None` if some step is not
    /// integral.
    fn div_rem_integral(&self, q: &TPoly) -> Result<Option<(TPoly, TPoly)>> {
        let dq = q.degree().ok_or(Error::DivisionByZero)?;
        let lc = q.leading_coeff().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dq {
            return Ok(Some((TPoly::zero(), self.clone())));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dq];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dq];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[i + j] -= &c * qc;
            }
            quot[i] = c;
        }
        Ok(Some((TPoly::from_coeffs(quot), TPoly::from_coeffs(rem))))
    }

    /// Exact quotient `self / q`; fails unless `q` divides `self` in `Z[t]`.
    pub fn exact_divide(&self, q: &TPoly) -> Result<TPoly> {
        match self.div_rem_integral(q)? {
            Some((quot, rem)) if rem.is_zero() => Ok(quot),
            _ => Err(Error::NotDivisible),
        }
    }

    /// Pseudo-remainder: `lc(q)^(deg p - deg q + 1) * p mod q`, always integral.
    pub fn pseudo_rem(&self, q: &TPoly) -> Result<TPoly> {
        let dq = q.degree().ok_or(Error::DivisionByZero)?;
        let Some(dp) = self.degree() else {
            return Ok(TPoly::zero());
        };
        if dp < dq {
            return Ok(self.clone());
        }
        let lc = q.leading_coeff().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        for _ in 0..=(dp - dq) {
            let Some(dr) = rem.degree() else { break };
            if dr < dq {
                rem = rem.scale(&lc);
                continue;
            }
            let top = rem.leading_coeff().cloned().expect("nonzero");
            let mut next = rem.scale(&lc);
            next -= &q.scale(&top).scale_by_t_power(dr - dq);
            rem = next;
        }
        Ok(rem)
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive_part(&self) -> TPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Gcd in `Z[t]` with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero");
            a = b;
            b = r.primitive_part();
        }
        a.normalized_sign().scale(&content)
    }

    fn normalized_sign(&self) -> TPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Human-readable form with unicode superscripts, e.g. `1 + t − 2t³`.
    pub fn pretty(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push(if unicode { '−' } else { '-' });
                }
            } else {
                out.push_str(match (neg, unicode) {
                    (true, true) => " − ",
                    (true, false) => " - ",
                    _ => " + ",
                });
            }
            if i == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            if i >= 1 {
                out.push('t');
            }
            if i >= 2 {
                if unicode {
                    out.push_str(&superscript(i));
                } else {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|d| DIGITS[d.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl From<i64> for TPoly {
    fn from(c: i64) -> Self {
        TPoly::constant(c)
    }
}

impl From<BigInt> for TPoly {
    fn from(c: BigInt) -> Self {
        TPoly::constant(c)
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(mut self, rhs: TPoly) -> TPoly {
        self += &rhs;
        self
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl MulAssign<&TPoly> for TPoly {
    fn mul_assign(&mut self, rhs: &TPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl Serialize for TPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TPoly::from_coeffs(coeffs))
    }
}
