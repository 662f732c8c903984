//! Evaluation at exact rational points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use crate::poly::LaurentPoly;
use crate::rational::RationalFn;

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let e = i32::try_from(e).expect("exponent fits in i32");
    Pow::pow(x, e)
}

impl LaurentPoly {
    /// Evaluates at `(q, a)`. Both must be nonzero when negative exponents
    /// occur.
    pub fn eval(&self, q: &BigRational, a: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in self.terms() {
            let term = rational_pow(q, m.eq) * rational_pow(a, m.ea);
            acc += term * BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl RationalFn {
    /// Evaluates at `(q, a)`; `None` when the denominator vanishes there.
    pub fn eval(&self, q: &BigRational, a: &BigRational) -> Option<BigRational> {
        let den = self.den().eval(q, a);
        if den.is_zero() {
            return None;
        }
        Some(self.num().eval(q, a) / den)
    }
}

/// Convenience constructor for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_laurent_monomials() {
        let p = LaurentPoly::monomial(3, -2, 1) + LaurentPoly::constant(1);
        // 3 · (1/2)^{-2} · 5 + 1 = 61
        assert_eq!(p.eval(&ratio(1, 2), &ratio(5, 1)), ratio(61, 1));
    }

    #[test]
    fn rational_function_pole() {
        let den = LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1);
        let f = RationalFn::new(LaurentPoly::one(), den).unwrap();
        assert_eq!(f.eval(&ratio(1, 1), &ratio(2, 1)), None);
        assert_eq!(f.eval(&ratio(2, 1), &ratio(2, 1)), Some(ratio(2, 3)));
    }
}
