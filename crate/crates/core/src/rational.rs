//! Unreduced fractions of Laurent polynomials.
//!
//! Values are never brought to lowest terms; equality is decided by
//! cross-multiplication, which is sound because the Laurent ring is an
//! integral domain.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalFn { num, den })
    }

    pub fn zero() -> Self {
        RationalFn::from(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        RationalFn::from(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPoly, LaurentPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    /// The polynomial this fraction equals, if the denominator divides the
    /// numerator.
    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    /// Rewrites the fraction over `den`, which must be a multiple of the
    /// current denominator. Returns the new numerator.
    pub fn numerator_over(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let cofactor = den.exact_div(&self.den)?;
        Ok(&self.num * &cofactor)
    }

    /// Sums fractions over a common denominator known to be a multiple of
    /// every summand's denominator. Avoids the blow-up of pairwise addition.
    pub fn sum_over(terms: &[RationalFn], common_den: LaurentPoly) -> Result<RationalFn> {
        let mut num = LaurentPoly::zero();
        for t in terms {
            num += &t.numerator_over(&common_den)?;
        }
        RationalFn::new(num, common_den)
    }

    pub fn bar(&self) -> RationalFn {
        RationalFn {
            num: self.num.bar(),
            den: self.den.bar(),
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> RationalFn {
        RationalFn {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl PartialEq<LaurentPoly> for RationalFn {
    fn eq(&self, other: &LaurentPoly) -> bool {
        self.num == other * &self.den
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;

    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFn {
            num: &self.num * &rhs.den + &rhs.num * &self.den,
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;

    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;

    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;

    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: RationalFn) -> RationalFn {
        &self + &rhs
    }
}

impl Sub for RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: RationalFn) -> RationalFn {
        &self - &rhs
    }
}

impl Mul for RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: RationalFn) -> RationalFn {
        &self * &rhs
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brace(n: i64) -> LaurentPoly {
        LaurentPoly::q_pow(n) - LaurentPoly::q_pow(-n)
    }

    fn a() -> LaurentPoly {
        LaurentPoly::a_pow(1)
    }

    #[test]
    fn common_factor_is_equal() {
        let x = RationalFn::new(a(), brace(1)).unwrap();
        let y = RationalFn::new(a() * brace(2), brace(1) * brace(2)).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn additive_inverse() {
        let x = RationalFn::new(LaurentPoly::one(), brace(1)).unwrap();
        let y = RationalFn::new(LaurentPoly::constant(-1), brace(1)).unwrap();
        assert!((&x + &y).is_zero());
        assert_eq!(&x + &y, RationalFn::zero());
    }

    #[test]
    fn multiplicative_inverse() {
        let x = RationalFn::new(a(), brace(1)).unwrap();
        let y = RationalFn::new(brace(1), a()).unwrap();
        assert_eq!(&x * &y, RationalFn::one());
        assert_eq!(x.recip().unwrap(), y);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFn::new(a(), LaurentPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
        assert!(RationalFn::zero().recip().is_err());
    }

    #[test]
    fn sum_over_common_denominator_matches_pairwise() {
        let x = RationalFn::new(a(), brace(1)).unwrap();
        let y = RationalFn::new(LaurentPoly::q_pow(3), brace(2)).unwrap();
        let common = brace(1) * brace(2);
        let summed = RationalFn::sum_over(&[x.clone(), y.clone()], common).unwrap();
        assert_eq!(summed, &x + &y);
    }
}
