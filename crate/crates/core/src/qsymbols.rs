//! Quantum integers, braces and their products.
//!
//! * `[n] = (q^n - q^{-n}) / (q - q^{-1})`
//! * `{n} = q^n - q^{-n}`
//! * `{n;a} = a q^n - a^{-1} q^{-n}`
//!
//! Falling products `{n}_i`, `{n;a}_i`, `[n]_i` are `i` factors with the
//! index decreasing by one each step, and equal one when `i = 0`.

use crate::composition::Composition;
use crate::division::exact_div_by_factors;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// The quantum integer `[n]`, for any integer `n`.
pub fn qint(n: i64) -> LaurentPoly {
    if n < 0 {
        return -qint(-n);
    }
    (0..n).map(|j| LaurentPoly::q_pow(n - 1 - 2 * j)).sum()
}

/// `{n} = q^n - q^{-n}`.
pub fn brace(n: i64) -> LaurentPoly {
    LaurentPoly::q_pow(n) - LaurentPoly::q_pow(-n)
}

/// `{m;a} = a q^m - a^{-1} q^{-m}`.
pub fn brace_a(m: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, m, 1) - LaurentPoly::monomial(1, -m, -1)
}

/// `{n}_i = {n}{n-1}…{n-i+1}`.
pub fn brace_ff(n: i64, i: u32) -> LaurentPoly {
    (0..i as i64).map(|j| brace(n - j)).product()
}

/// `{m;a}_i = {m;a}{m-1;a}…{m-i+1;a}`, for any integer `m`.
pub fn brace_a_ff(m: i64, i: u32) -> LaurentPoly {
    (0..i as i64).map(|j| brace_a(m - j)).product()
}

/// The ascending product `{-m;a}{-m+1;a}…{-m+i-1;a}`.
pub fn brace_a_rising(m: i64, i: u32) -> LaurentPoly {
    (0..i as i64).map(|j| brace_a(-m + j)).product()
}

/// `[n]_i = [n][n-1]…[n-i+1]`.
pub fn qint_ff(n: i64, i: u32) -> LaurentPoly {
    (0..i as i64).map(|j| qint(n - j)).product()
}

/// `{n}! = {n}_n`.
pub fn qfact(n: u32) -> LaurentPoly {
    brace_ff(n as i64, n)
}

/// `[n]! = [n]_n`.
pub fn qint_fact(n: u32) -> LaurentPoly {
    qint_ff(n as i64, n)
}

/// The balanced q-binomial `[n]! / ([k]! [n-k]!)`, zero outside `0..=n`.
///
/// Computed as `{n}_k / {k}!` by exact division, so an error here means the
/// arithmetic kernel is broken.
pub fn qbinom(n: u32, k: i64) -> Result<LaurentPoly> {
    if k < 0 || k > n as i64 {
        return Ok(LaurentPoly::zero());
    }
    let k = k as u32;
    let k = k.min(n - k);
    let divisors: Vec<LaurentPoly> = (1..=k as i64).map(brace).collect();
    exact_div_by_factors(&brace_ff(n as i64, k), &divisors)
}

/// The q-multinomial `[n]! / ([l_1]! … [l_p]!)`.
pub fn qmultinom(n: u32, l: &Composition) -> Result<LaurentPoly> {
    if l.total() != n {
        return Err(Error::SumMismatch {
            expected: n,
            actual: l.total(),
        });
    }
    let mut out = LaurentPoly::one();
    for (i, &part) in l.parts().iter().enumerate() {
        out = &out * &qbinom(l.partial_sum(i + 1), part as i64)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn definitions() {
        assert_eq!(qint(2), q(1) + q(-1));
        assert_eq!(qint(0), LaurentPoly::zero());
        assert_eq!(qint(-3), -qint(3));
        assert_eq!(brace(0), LaurentPoly::zero());
        assert_eq!(
            brace_a(-1),
            LaurentPoly::monomial(1, -1, 1) - LaurentPoly::monomial(1, 1, -1)
        );
    }

    #[test]
    fn empty_products_are_one() {
        for n in -3..4 {
            assert!(brace_ff(n, 0).is_one());
            assert!(brace_a_ff(n, 0).is_one());
            assert!(qint_ff(n, 0).is_one());
        }
        assert!(brace_a_rising(2, 0).is_one());
        assert!(qfact(0).is_one());
    }

    #[test]
    fn falling_products() {
        assert_eq!(brace_a_ff(-1, 1), brace_a(-1));
        let expected = (LaurentPoly::a_pow(1) - LaurentPoly::a_pow(-1))
            * (LaurentPoly::monomial(1, -1, 1) - LaurentPoly::monomial(1, 1, -1));
        assert_eq!(brace_a_ff(0, 2), expected);
        assert_eq!(brace_a_rising(2, 3), brace_a(-2) * brace_a(-1) * brace_a(0));
    }

    #[test]
    fn factorials() {
        assert_eq!(qfact(2), brace(2) * brace(1));
        assert_eq!(qint_fact(3), (q(2) + q(0) + q(-2)) * (q(1) + q(-1)));
    }

    #[test]
    fn binomials() {
        for n in 0..6 {
            assert!(qbinom(n, 0).unwrap().is_one());
        }
        assert_eq!(qbinom(2, 1).unwrap(), q(1) + q(-1));
        let expected = q(4) + q(2) + LaurentPoly::constant(2) + q(-2) + q(-4);
        assert_eq!(qbinom(4, 2).unwrap(), expected);
        assert!(qbinom(3, 4).unwrap().is_zero());
        assert!(qbinom(3, -1).unwrap().is_zero());
    }

    #[test]
    fn multinomials() {
        assert!(qmultinom(3, &Composition::new(vec![3])).unwrap().is_one());
        assert_eq!(
            qmultinom(2, &Composition::new(vec![1, 1])).unwrap(),
            q(1) + q(-1)
        );
        assert!(qmultinom(1, &Composition::new(vec![1, 0]))
            .unwrap()
            .is_one());
        assert_eq!(
            qmultinom(3, &Composition::new(vec![1, 1])).unwrap_err(),
            Error::SumMismatch {
                expected: 3,
                actual: 2
            }
        );
    }

    #[test]
    fn brace_is_scaled_quantum_integer() {
        let unit = brace(1);
        for n in -20..=20 {
            assert_eq!(brace(n), &unit * &qint(n), "n = {n}");
        }
    }

    #[test]
    fn multinomial_matches_factorial_quotient() {
        let l = Composition::new(vec![2, 1, 2]);
        let den = qint_fact(2) * qint_fact(1) * qint_fact(2);
        assert_eq!(
            qmultinom(5, &l).unwrap(),
            qint_fact(5).exact_div(&den).unwrap()
        );
    }
}
