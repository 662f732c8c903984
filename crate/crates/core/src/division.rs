//! Exact division in `Z[q^{±1}, a^{±1}]`.
//!
//! Division runs the single-divisor multivariate algorithm under the
//! lexicographic order (`a` major, `q` minor). Because the ring is a Laurent
//! ring, quotient terms are confined to the box cut out by the degree bounds
//! `deg(num) - deg(den)` in each variable separately; any candidate outside it
//! goes to the remainder. All working terms then stay in a finite set and the
//! strictly decreasing leading term guarantees termination.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Monomial};

#[derive(Clone, Copy)]
struct QuotientBox {
    a: (i64, i64),
    q: (i64, i64),
}

impl QuotientBox {
    fn new(num: &LaurentPoly, den: &LaurentPoly) -> Option<QuotientBox> {
        let (na, da) = (num.a_range()?, den.a_range()?);
        let (nq, dq) = (num.q_range()?, den.q_range()?);
        Some(QuotientBox {
            a: (na.0 - da.0, na.1 - da.1),
            q: (nq.0 - dq.0, nq.1 - dq.1),
        })
    }

    fn contains(&self, m: Monomial) -> bool {
        self.a.0 <= m.ea && m.ea <= self.a.1 && self.q.0 <= m.eq && m.eq <= self.q.1
    }
}

impl LaurentPoly {
    /// Returns `(quotient, remainder)` with `self = quotient · den + remainder`.
    ///
    /// The remainder is zero exactly when `den` divides `self` in the ring.
    /// Panics if `den` is zero.
    pub fn div_rem(&self, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let mut quotient = LaurentPoly::zero();
        let mut remainder = LaurentPoly::zero();
        let Some(bounds) = QuotientBox::new(self, den) else {
            return (quotient, remainder);
        };
        let (lead_m, lead_c) = den.leading_term().expect("nonzero divisor");
        let lead_c = lead_c.clone();

        let mut work = self.clone();
        while let Some((m, c)) = work.leading_term() {
            let c = c.clone();
            let qm = Monomial::new(m.ea - lead_m.ea, m.eq - lead_m.eq);
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() || !bounds.contains(qm) {
                work.remove_term(m);
                remainder.add_term(m, c);
                continue;
            }
            for (dm, dc) in den.terms() {
                let prod = &qc * dc;
                work.sub_term_ref(Monomial::new(qm.ea + dm.ea, qm.eq + dm.eq), &prod);
            }
            quotient.add_term(qm, qc);
        }
        (quotient, remainder)
    }

    /// Exact quotient `self / den`.
    ///
    /// Fails with [`Error::InexactDivision`] carrying the nonzero remainder
    /// when `den` does not divide `self`, and with [`Error::ZeroDenominator`]
    /// when `den` is zero.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if let Some(quick) = self.div_by_monomial(den) {
            return quick;
        }
        let (quotient, remainder) = self.div_rem(den);
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::InexactDivision { remainder })
        }
    }

    fn div_by_monomial(&self, den: &LaurentPoly) -> Option<Result<LaurentPoly>> {
        if den.len() != 1 {
            return None;
        }
        let (m, c) = den.leading_term()?;
        let mut quotient = LaurentPoly::zero();
        let mut remainder = LaurentPoly::zero();
        for (tm, tc) in self.terms() {
            let (qc, r) = tc.div_rem(c);
            if r.is_zero() {
                quotient.add_term(Monomial::new(tm.ea - m.ea, tm.eq - m.eq), qc);
            } else {
                remainder.add_term(tm, tc.clone());
            }
        }
        Some(if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::InexactDivision { remainder })
        })
    }
}

/// Divides by each factor in turn; the divisor is never multiplied out.
pub fn exact_div_by_factors<'a, I>(num: &LaurentPoly, factors: I) -> Result<LaurentPoly>
where
    I: IntoIterator<Item = &'a LaurentPoly>,
{
    let mut out = num.clone();
    for f in factors {
        out = out.exact_div(f)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brace(n: i64) -> LaurentPoly {
        LaurentPoly::q_pow(n) - LaurentPoly::q_pow(-n)
    }

    #[test]
    fn cancels_a_factor() {
        let num = brace(2) * brace(1);
        assert_eq!(num.exact_div(&brace(1)).unwrap(), brace(2));
    }

    #[test]
    fn balanced_binomial_four_two() {
        let num = brace(4) * brace(3);
        let den = brace(2) * brace(1);
        let expected: LaurentPoly = [4, 2, 0, 0, -2, -4]
            .iter()
            .map(|&e| LaurentPoly::q_pow(e))
            .sum();
        assert_eq!(num.exact_div(&den).unwrap(), expected);
    }

    #[test]
    fn q_over_brace_one_is_inexact() {
        let err = LaurentPoly::q_pow(1).exact_div(&brace(1)).unwrap_err();
        match err {
            Error::InexactDivision { remainder } => assert!(!remainder.is_zero()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn division_identity_holds_even_when_inexact() {
        let num = LaurentPoly::monomial(3, 5, 2) + LaurentPoly::monomial(-2, -1, 0) + brace(7);
        let den = LaurentPoly::monomial(2, 1, 1) - LaurentPoly::monomial(1, -2, 0);
        let (q, r) = num.div_rem(&den);
        assert_eq!(&(&q * &den) + &r, num);
    }

    #[test]
    fn zero_divisor_is_an_error() {
        assert_eq!(
            LaurentPoly::one().exact_div(&LaurentPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn monomial_divisor_with_non_divisible_coefficient() {
        let num = LaurentPoly::monomial(3, 1, 0);
        assert!(num.exact_div(&LaurentPoly::constant(2)).is_err());
        assert_eq!(
            LaurentPoly::monomial(6, 1, 2)
                .exact_div(&LaurentPoly::monomial(-2, 3, 1))
                .unwrap(),
            LaurentPoly::monomial(-3, -2, 1)
        );
    }

    #[test]
    fn zero_numerator() {
        assert_eq!(
            LaurentPoly::zero().exact_div(&brace(3)).unwrap(),
            LaurentPoly::zero()
        );
    }
}
