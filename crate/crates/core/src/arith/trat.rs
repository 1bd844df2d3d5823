//! Reduced rational functions in `t`. Only used when a triangular solve
//! meets a diagonal entry that is not 1.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::TPoly;
use crate::error::{Error, Result};

/// `numerator / denominator` with `gcd = 1` and a denominator whose leading
/// coefficient is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TRat {
    num: TPoly,
    den: TPoly,
}

impl TRat {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.exact_divide(&g)?;
        let mut den = den.exact_divide(&g)?;
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(TRat { num, den })
    }

    pub fn zero() -> Self {
        TRat {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        TPoly::one().into()
    }

    pub fn numerator(&self) -> &TPoly {
        &self.num
    }

    pub fn denominator(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, if the denominator is 1.
    pub fn to_tpoly(&self) -> Option<TPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn recip(&self) -> Result<TRat> {
        TRat::new(self.den.clone(), self.num.clone())
    }
}

impl From<TPoly> for TRat {
    fn from(p: TPoly) -> Self {
        TRat {
            num: p,
            den: TPoly::one(),
        }
    }
}

impl Add<&TRat> for &TRat {
    type Output = TRat;
    fn add(self, rhs: &TRat) -> TRat {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        TRat::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub<&TRat> for &TRat {
    type Output = TRat;
    fn sub(self, rhs: &TRat) -> TRat {
        self + &(-rhs)
    }
}

impl Mul<&TRat> for &TRat {
    type Output = TRat;
    fn mul(self, rhs: &TRat) -> TRat {
        TRat::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Div<&TRat> for &TRat {
    type Output = Result<TRat>;
    fn div(self, rhs: &TRat) -> Result<TRat> {
        Ok(self * &rhs.recip()?)
    }
}

impl Neg for &TRat {
    type Output = TRat;
    fn neg(self) -> TRat {
        TRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for TRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> TPoly {
        TPoly::from_i64s(c)
    }

    #[test]
    fn reduces_and_normalizes() {
        // (1 - t^2) / (t - 1) = -(1 + t)
        let r = TRat::new(p(&[1, 0, -1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.to_tpoly(), Some(p(&[-1, -1])));
        let half = TRat::new(p(&[1]), p(&[-2])).unwrap();
        assert_eq!(half.numerator(), &p(&[-1]));
        assert_eq!(half.denominator(), &p(&[2]));
        assert_eq!(TRat::new(p(&[1]), TPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_ops() {
        let a = TRat::new(p(&[1]), p(&[1, 1])).unwrap();
        let b = TRat::new(p(&[0, 1]), p(&[1, 1])).unwrap();
        assert_eq!(&a + &b, TRat::one());
        assert_eq!((&a / &a).unwrap(), TRat::one());
        assert!((&a - &a).is_zero());
        assert!((&a / &TRat::zero()).is_err());
    }
}
