//! Scalar coefficients of the twist and symmetrizer calculus.
//!
//! Everything here is a formula evaluator: the crossing coefficients `α`,
//! the symmetrizer coefficients `x` and `y`, the closure value `⟨D_{m,n}⟩`,
//! the composition sums `C_{n,k}^{(p)}` and their normalized diagonal
//! `C̃_{k,k}^{(p)} = C_{k,k}^{(p)} / {k}!`, the twist eigen-coefficients
//! `t_{n,p}` and `T_{n,p}`, and the change of basis between the `H_i` and
//! `R_i` elements of the solid-torus skein module.

use crate::composition::{compositions, Composition};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::qsymbols::{brace_a, brace_a_ff, brace_ff, qbinom, qfact, qmultinom};
use crate::rational::RationalFn;

/// `(-1)^i a^{-i} q^{-i(m+n) + i(i+3)/2} [m choose i] {n}_i`, without range
/// checks. Vanishes when `i > m` or `i > n`.
fn alpha_unchecked(m: u32, n: u32, i: u32) -> LaurentPoly {
    let (mi, ni, ii) = (m as i64, n as i64, i as i64);
    let eq = -ii * (mi + ni) + ii * (ii + 3) / 2;
    let prefactor = LaurentPoly::sign(ii).shift(eq, -ii);
    let binom = qbinom(m, ii).expect("q-binomial is a Laurent polynomial");
    &(&prefactor * &binom) * &brace_ff(ni, i)
}

/// Crossing-change coefficient `α_{m,n}^i`, a Laurent polynomial.
pub fn alpha(m: u32, n: u32, i: u32) -> Result<LaurentPoly> {
    if i > m.min(n) {
        return Err(Error::IndexOutOfRange(format!(
            "alpha index {i} exceeds min({m}, {n})"
        )));
    }
    Ok(alpha_unchecked(m, n, i))
}

fn check_symmetrizer_index(m: u32, n: u32, i: u32) -> Result<()> {
    if i > m.min(n) {
        return Err(Error::IndexOutOfRange(format!(
            "symmetrizer index {i} exceeds min({m}, {n})"
        )));
    }
    Ok(())
}

/// `x_{m,n}^i = (-1)^i [m choose i][n choose i] {i}! / {m+n-2;a}_i`.
pub fn x_coeff(m: u32, n: u32, i: u32) -> Result<RationalFn> {
    check_symmetrizer_index(m, n, i)?;
    let num = LaurentPoly::sign(i as i64) * qbinom(m, i as i64)? * qbinom(n, i as i64)? * qfact(i);
    let den = brace_a_ff(m as i64 + n as i64 - 2, i);
    RationalFn::new(num, den)
}

/// `y_{m,n}^i = {m}_i {n}_i / ({i}! {m+n-i-1;a}_i)`.
pub fn y_coeff(m: u32, n: u32, i: u32) -> Result<RationalFn> {
    check_symmetrizer_index(m, n, i)?;
    let num = brace_ff(m as i64, i) * brace_ff(n as i64, i);
    let den = qfact(i) * brace_a_ff(m as i64 + n as i64 - i as i64 - 1, i);
    RationalFn::new(num, den)
}

/// Closure value `⟨D_{m,n}⟩` for `m, n ≥ 1`; symmetric in its arguments.
pub fn d_closure(m: u32, n: u32) -> Result<RationalFn> {
    if m < 1 || n < 1 {
        return Err(Error::IndexOutOfRange(format!(
            "closure needs m, n >= 1, got ({m}, {n})"
        )));
    }
    let (m, n) = (m.max(n) as i64, m.min(n) as i64);
    let num = brace_a(m + n - 1)
        * brace_a_ff(m - 2, (m - 1) as u32)
        * brace_a_ff(n - 2, (n - 1) as u32)
        * brace_a(-1);
    let den = qfact(m as u32) * qfact(n as u32);
    RationalFn::new(num, den)
}

/// The exponent `φ(l)` of the normalized composition sum, for a composition
/// of `k`.
pub fn phi(l: &Composition, k: u32) -> Result<i64> {
    if l.total() != k {
        return Err(Error::SumMismatch {
            expected: k,
            actual: l.total(),
        });
    }
    let k = k as i64;
    let parts: Vec<i64> = l.parts().iter().map(|&x| x as i64).collect();
    let sums: Vec<i64> = l.partial_sums().iter().map(|&x| x as i64).collect();
    let p = parts.len();
    let mut out = 0;
    for i in 0..p.saturating_sub(1) {
        out += 2 * sums[i] * (sums[i] - 2 * k + 1);
        out += 2 * sums[i] * parts[i + 1];
    }
    for &li in &parts {
        out += li * (li + 3) / 2;
    }
    Ok(out)
}

/// Kronecker delta at `k = 0`, the zero-twist convention.
fn delta(k: u32) -> LaurentPoly {
    if k == 0 {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    }
}

/// Expansion coefficient `C_{n,k}^{(p)}` of `p` full twists on `n` strands.
///
/// For `p ≥ 1` this is the sum over compositions `l` of `k` into `p` parts of
/// `Π_{i<p} a^{-2 s_i} q^{2 s_i (s_i - 2n + 1)} · Π_i α_{n-s_{i-1}, n-s_{i-1}}^{l_i}`.
/// Negative `p` is the bar image of `-p`; `p = 0` is the delta at `k = 0`.
pub fn c_general(n: u32, k: u32, p: i64) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::IndexOutOfRange(format!(
            "composition total {k} exceeds strand count {n}"
        )));
    }
    if p == 0 {
        return Ok(delta(k));
    }
    if p < 0 {
        return Ok(c_general(n, k, -p)?.bar());
    }
    let ni = n as i64;
    let mut total = LaurentPoly::zero();
    for l in compositions(k, p as usize) {
        let mut term = LaurentPoly::one();
        for (i, &li) in l.parts().iter().enumerate() {
            let remaining = n - l.partial_sum(i);
            term = &term * &alpha_unchecked(remaining, remaining, li);
            if term.is_zero() {
                break;
            }
        }
        if term.is_zero() {
            continue;
        }
        let (mut ea, mut eq) = (0i64, 0i64);
        for &s in &l.partial_sums()[..l.len() - 1] {
            let s = s as i64;
            ea -= 2 * s;
            eq += 2 * s * (s - 2 * ni + 1);
        }
        total += &term.shift(eq, ea);
    }
    Ok(total)
}

/// Normalized diagonal coefficient `C̃_{k,k}^{(p)} = C_{k,k}^{(p)} / {k}!`,
/// from its closed composition-sum form.
///
/// For `p < 0` this is `(-1)^k` times the bar image of `C̃^{(-p)}`: the
/// numerator is bar-covariant but `{k}!` picks up `(-1)^k` under the bar.
pub fn c_tilde(k: u32, p: i64) -> LaurentPoly {
    if p == 0 {
        return delta(k);
    }
    if p < 0 {
        let mirrored = c_tilde(k, -p).bar();
        return if k.is_multiple_of(2) {
            mirrored
        } else {
            -mirrored
        };
    }
    let ki = k as i64;
    let mut sum = LaurentPoly::zero();
    for l in compositions(k, p as usize) {
        let ea: i64 = l
            .parts()
            .iter()
            .take(l.len() - 1)
            .enumerate()
            .map(|(i, &li)| -2 * (p - 1 - i as i64) * li as i64)
            .sum();
        let eq = phi(&l, k).expect("composition of k");
        let multinom = qmultinom(k, &l).expect("q-multinomial is a Laurent polynomial");
        sum += &multinom.shift(eq, ea);
    }
    &LaurentPoly::sign(ki).shift(-2 * ki * ki, -ki) * &sum
}

/// `(a^i q^{i(i-1)})^{2p}`.
pub(crate) fn framing_monomial(i: i64, p: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, 2 * p * i * (i - 1), 2 * p * i)
}

/// Common denominator `{n}! {2n-1;a}_{2n+1}` for the twist sums below.
fn twist_common_den(n: u32) -> LaurentPoly {
    qfact(n) * brace_a_ff(2 * n as i64 - 1, 2 * n + 1)
}

/// Twist eigen-coefficient
/// `t_{n,p} = (-1)^n Σ_i (-1)^i (a^i q^{i(i-1)})^{2p} / ({i}! {n-i}!) · {2i-1;a} / {n+i-1;a}_{n+1}`.
pub fn t_twist(n: u32, p: i64) -> RationalFn {
    let ni = n as i64;
    let terms: Vec<RationalFn> = (0..=n)
        .map(|i| {
            let ii = i as i64;
            let num = LaurentPoly::sign(ni + ii) * framing_monomial(ii, p) * brace_a(2 * ii - 1);
            let den = qfact(i) * qfact(n - i) * brace_a_ff(ni + ii - 1, n + 1);
            RationalFn::new(num, den).expect("nonzero denominator")
        })
        .collect();
    RationalFn::sum_over(&terms, twist_common_den(n)).expect("common denominator")
}

/// `T_{n,p} = (a^{-n} q^{-n(n-1)})^{2p} {n}! Σ_i (-1)^i (a^i q^{i(i-1)})^{2p}
/// {n}_{n-i} / {n-i}! · {2i-1;a} / {n+i-1;a}_{n+1}`.
pub fn big_t_twist(n: u32, p: i64) -> RationalFn {
    let ni = n as i64;
    let terms: Vec<RationalFn> = (0..=n)
        .map(|i| {
            let ii = i as i64;
            let num = LaurentPoly::sign(ii)
                * framing_monomial(ii, p)
                * brace_ff(ni, n - i)
                * brace_a(2 * ii - 1);
            let den = qfact(n - i) * brace_a_ff(ni + ii - 1, n + 1);
            RationalFn::new(num, den).expect("nonzero denominator")
        })
        .collect();
    let sum = RationalFn::sum_over(&terms, twist_common_den(n)).expect("common denominator");
    sum.scale(&(framing_monomial(ni, -p) * qfact(n)))
}

pub type RfMatrix = Vec<Vec<RationalFn>>;

/// Change-of-basis matrices between `H_0..H_{size-1}` and `R_0..R_{size-1}`.
///
/// Returns `(m_hr, m_rh)` with `H_i = Σ_j m_hr[i][j] R_j` and
/// `R_i = Σ_j m_rh[i][j] H_j`. `m_rh` is built from the recursion
/// `R_n = H_n - Σ_{i<n} m_hr[n][i] R_i`, not by inverting `m_hr`.
pub fn basis_matrices(size: usize) -> (RfMatrix, RfMatrix) {
    let entry = |i: usize, j: usize| -> RationalFn {
        if j > i {
            return RationalFn::zero();
        }
        let d = (i - j) as u32;
        RationalFn::new(brace_a_ff(i as i64 - 1 + j as i64, d), qfact(d))
            .expect("nonzero factorial")
    };
    let m_hr: RfMatrix = (0..size)
        .map(|i| (0..size).map(|j| entry(i, j)).collect())
        .collect();

    let mut m_rh: RfMatrix = Vec::with_capacity(size);
    #[allow(clippy::needless_range_loop)]
    for n in 0..size {
        let mut row: Vec<RationalFn> = (0..size)
            .map(|j| {
                if j == n {
                    RationalFn::one()
                } else {
                    RationalFn::zero()
                }
            })
            .collect();
        for i in 0..n {
            let coeff = &m_hr[n][i];
            for (j, slot) in row.iter_mut().enumerate() {
                if !m_rh[i][j].is_zero() {
                    *slot = &*slot - &(coeff * &m_rh[i][j]);
                }
            }
        }
        m_rh.push(row);
    }
    (m_hr, m_rh)
}

/// Product of square matrices over the fraction field.
pub fn rf_matmul(lhs: &RfMatrix, rhs: &RfMatrix) -> RfMatrix {
    let n = lhs.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(RationalFn::zero(), |acc, k| {
                        if lhs[i][k].is_zero() || rhs[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&lhs[i][k] * &rhs[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsymbols::brace;

    fn a_pow(e: i64) -> LaurentPoly {
        LaurentPoly::a_pow(e)
    }

    #[test]
    fn alpha_examples() {
        for (m, n) in [(0, 0), (3, 2), (5, 5)] {
            assert!(alpha(m, n, 0).unwrap().is_one());
        }
        assert_eq!(alpha(1, 1, 1).unwrap(), -(a_pow(-1) * brace(1)));
        assert!(matches!(alpha(2, 1, 2), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn alpha_diagonal_form() {
        for n in 0..5u32 {
            for i in 0..=n {
                let (ni, ii) = (n as i64, i as i64);
                let expected = LaurentPoly::sign(ii).shift(-2 * ni * ii + ii * (ii + 3) / 2, -ii)
                    * qbinom(n, ii).unwrap()
                    * brace_ff(ni, i);
                assert_eq!(alpha(n, n, i).unwrap(), expected);
            }
        }
    }

    #[test]
    fn x_and_y_examples() {
        assert_eq!(x_coeff(3, 2, 0).unwrap(), RationalFn::one());
        let brace_a0 = brace_a(0);
        assert_eq!(
            x_coeff(1, 1, 1).unwrap(),
            RationalFn::new(-brace(1), brace_a0.clone()).unwrap()
        );
        assert_eq!(
            y_coeff(1, 1, 1).unwrap(),
            RationalFn::new(brace(1), brace_a0).unwrap()
        );
        assert!(x_coeff(1, 2, 2).is_err());
    }

    #[test]
    fn closure_examples() {
        let d11 = RationalFn::new(brace_a(1) * brace_a(-1), brace(1) * brace(1)).unwrap();
        assert_eq!(d_closure(1, 1).unwrap(), d11);
        let d21 =
            RationalFn::new(brace_a(2) * brace_a(0) * brace_a(-1), qfact(2) * qfact(1)).unwrap();
        assert_eq!(d_closure(2, 1).unwrap(), d21);
        assert_eq!(d_closure(1, 3).unwrap(), d_closure(3, 1).unwrap());
        assert!(d_closure(0, 2).is_err());
    }

    #[test]
    fn phi_examples() {
        for k in 0..6 {
            let single = Composition::new(vec![k]);
            assert_eq!(phi(&single, k).unwrap(), (k * (k + 3) / 2) as i64);
        }
        assert_eq!(phi(&Composition::new(vec![1, 0]), 1).unwrap(), 2);
        assert_eq!(phi(&Composition::new(vec![0, 1]), 1).unwrap(), 2);
        assert!(phi(&Composition::new(vec![0, 1]), 2).is_err());
    }

    #[test]
    fn c_general_examples() {
        for n in 0..4 {
            for p in -2..=3 {
                assert!(c_general(n, 0, p).unwrap().is_one());
            }
        }
        assert_eq!(c_general(1, 1, 1).unwrap(), alpha(1, 1, 1).unwrap());
        assert_eq!(
            c_general(3, 2, -2).unwrap(),
            c_general(3, 2, 2).unwrap().bar()
        );
        assert!(c_general(2, 2, 0).unwrap().is_zero());
        assert!(c_general(2, 3, 1).is_err());
    }

    #[test]
    fn c_tilde_examples() {
        // k = 2: a^{-2} q^{-3}
        assert_eq!(c_tilde(2, 1), LaurentPoly::monomial(1, -3, -2));
        assert_eq!(c_tilde(2, -1), LaurentPoly::monomial(1, 3, 2));
        assert_eq!(c_tilde(1, 2), -(a_pow(-1) + a_pow(-3)));
        assert!(c_tilde(0, 0).is_one());
        assert!(c_tilde(3, 0).is_zero());
    }

    #[test]
    fn t_examples() {
        for p in -2..=3 {
            assert_eq!(t_twist(0, p), RationalFn::one());
            assert_eq!(big_t_twist(0, p), RationalFn::one());
        }
        assert_eq!(t_twist(1, 1), RationalFn::new(a_pow(1), brace(1)).unwrap());
        assert_eq!(big_t_twist(1, 1), -(a_pow(-1) * brace(1)));
    }

    #[test]
    fn basis_matrix_examples() {
        let (m_hr, m_rh) = basis_matrices(3);
        for i in 0..3 {
            assert_eq!(m_hr[i][i], RationalFn::one());
            assert_eq!(m_rh[i][i], RationalFn::one());
        }
        let prod = rf_matmul(&m_hr, &m_rh);
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j {
                    RationalFn::one()
                } else {
                    RationalFn::zero()
                };
                assert_eq!(*x, expected, "entry ({i}, {j})");
            }
        }
    }
}
