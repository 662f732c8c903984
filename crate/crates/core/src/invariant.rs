//! Colored HOMFLY-PT invariants of the double twist knots `K_{p,s}`.
//!
//! The normalized invariant for the symmetric color `(N)` is
//!
//! ```text
//! H_N(K_{p,s}) = Σ_{k=0}^{N} (-1)^k (a^k q^{k(k-1)})^{2(p+s)} C̃_k^{(p)} C̃_k^{(s)}
//!                [N choose k] {N+k-1;a}_k {k-2;a}_k
//! ```
//!
//! at framing zero. `K_{1,1}` is the left-handed trefoil, `K_{-1,1}` the
//! figure-eight, `K_{2,1}` is `5_2` and `K_{-2,1}` is `6_1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::qsymbols::{brace, brace_a_ff, qbinom};
use crate::twist::{c_tilde, framing_monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnotParams {
    pub p: i64,
    pub s: i64,
    /// Color `N` of the symmetric representation `(N)`.
    pub color: u32,
}

impl KnotParams {
    pub fn new(p: i64, s: i64, color: u32) -> Self {
        KnotParams { p, s, color }
    }
}

/// Twist parameters reduced to the range where the evaluator applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalizedKnot {
    Unknot,
    /// `s ≥ 1`; evaluate directly.
    Standard {
        p: i64,
        s: i64,
    },
    /// `s ≥ 1`; evaluate and then apply the bar involution.
    Mirror {
        p: i64,
        s: i64,
    },
}

pub fn normalize_params(p: i64, s: i64) -> NormalizedKnot {
    if p == 0 || s == 0 {
        NormalizedKnot::Unknot
    } else if s >= 1 {
        NormalizedKnot::Standard { p, s }
    } else if p >= 1 {
        NormalizedKnot::Standard { p: s, s: p }
    } else {
        NormalizedKnot::Mirror { p: -p, s: -s }
    }
}

/// Write-once cache of `C̃_k^{(p)}` keyed by `(k, p)`.
#[derive(Debug, Default)]
pub struct CTildeCache {
    map: Mutex<HashMap<(u32, i64), Arc<LaurentPoly>>>,
}

impl CTildeCache {
    pub fn new() -> Self {
        CTildeCache::default()
    }

    pub fn get(&self, k: u32, p: i64) -> Arc<LaurentPoly> {
        if let Some(hit) = self.map.lock().expect("cache lock").get(&(k, p)) {
            return Arc::clone(hit);
        }
        // computed outside the lock; concurrent inserts store identical values
        let value = Arc::new(c_tilde(k, p));
        let mut map = self.map.lock().expect("cache lock");
        Arc::clone(map.entry((k, p)).or_insert(value))
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn global_cache() -> &'static CTildeCache {
    static CACHE: OnceLock<CTildeCache> = OnceLock::new();
    CACHE.get_or_init(CTildeCache::new)
}

/// `[N choose k] {N+k-1;a}_k {k-2;a}_k`, shared by every formula for `H_N`.
fn color_factor(color: u32, k: u32) -> LaurentPoly {
    let (n, ki) = (color as i64, k as i64);
    qbinom(color, ki).expect("q-binomial is a Laurent polynomial")
        * brace_a_ff(n + ki - 1, k)
        * brace_a_ff(ki - 2, k)
}

fn theorem_sum<F>(p: i64, s: i64, color: u32, c_tilde_of: F) -> LaurentPoly
where
    F: Fn(u32, i64) -> Arc<LaurentPoly>,
{
    (0..=color)
        .map(|k| {
            let ki = k as i64;
            let twist = LaurentPoly::sign(ki) * framing_monomial(ki, p + s);
            let coeff = &*c_tilde_of(k, p) * &*c_tilde_of(k, s);
            twist * coeff * color_factor(color, k)
        })
        .sum()
}

fn evaluate<F>(kp: KnotParams, c_tilde_of: F) -> LaurentPoly
where
    F: Fn(u32, i64) -> Arc<LaurentPoly>,
{
    match normalize_params(kp.p, kp.s) {
        NormalizedKnot::Unknot => LaurentPoly::one(),
        NormalizedKnot::Standard { p, s } => theorem_sum(p, s, kp.color, c_tilde_of),
        NormalizedKnot::Mirror { p, s } => theorem_sum(p, s, kp.color, c_tilde_of).bar(),
    }
}

/// Normalized colored HOMFLY-PT invariant `H_N(K_{p,s}; q, a)`.
pub fn homfly_double_twist(kp: KnotParams) -> LaurentPoly {
    homfly_double_twist_with(kp, global_cache())
}

pub fn homfly_double_twist_with(kp: KnotParams, cache: &CTildeCache) -> LaurentPoly {
    evaluate(kp, |k, p| cache.get(k, p))
}

/// Same as [`homfly_double_twist`] but recomputes every `C̃` coefficient.
pub fn homfly_double_twist_uncached(kp: KnotParams) -> LaurentPoly {
    evaluate(kp, |k, p| Arc::new(c_tilde(k, p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialKnot {
    Trefoil31,
    FigureEight41,
    FiveTwo52,
    SixOne61,
}

impl SpecialKnot {
    pub const ALL: [SpecialKnot; 4] = [
        SpecialKnot::Trefoil31,
        SpecialKnot::FigureEight41,
        SpecialKnot::FiveTwo52,
        SpecialKnot::SixOne61,
    ];

    /// Twist parameters `(p, s)` of the knot in the double twist family.
    pub fn twist_params(self) -> (i64, i64) {
        match self {
            SpecialKnot::Trefoil31 => (1, 1),
            SpecialKnot::FigureEight41 => (-1, 1),
            SpecialKnot::FiveTwo52 => (2, 1),
            SpecialKnot::SixOne61 => (-2, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialKnot::Trefoil31 => "3_1",
            SpecialKnot::FigureEight41 => "4_1",
            SpecialKnot::FiveTwo52 => "5_2",
            SpecialKnot::SixOne61 => "6_1",
        }
    }
}

/// `Σ_{l=0}^{k} a^{sign·2l} q^{sign·(-3kl + l(l+2))} [k choose l]`.
fn two_twist_inner_sum(k: u32, sign: i64) -> LaurentPoly {
    let ki = k as i64;
    (0..=ki)
        .map(|l| {
            let binom = qbinom(k, l).expect("q-binomial is a Laurent polynomial");
            binom.shift(sign * (-3 * ki * l + l * (l + 2)), sign * (-2 * l))
        })
        .sum()
}

/// The closed single-sum forms for `3_1`, `4_1`, `5_2` and `6_1`.
///
/// Independent of [`homfly_double_twist`]: no `C̃` coefficients are used,
/// only the explicit per-knot prefactors.
pub fn homfly_special(knot: SpecialKnot, color: u32) -> LaurentPoly {
    (0..=color)
        .map(|k| {
            let ki = k as i64;
            let prefactor = match knot {
                SpecialKnot::Trefoil31 => LaurentPoly::sign(ki).shift(ki * (ki - 1), 2 * ki),
                SpecialKnot::FigureEight41 => LaurentPoly::one(),
                SpecialKnot::FiveTwo52 => {
                    LaurentPoly::sign(ki).shift(3 * ki * (ki - 1), 4 * ki)
                        * two_twist_inner_sum(k, 1)
                }
                SpecialKnot::SixOne61 => {
                    LaurentPoly::monomial(1, -2 * ki * (ki - 1), -2 * ki)
                        * two_twist_inner_sum(k, -1)
                }
            };
            prefactor * color_factor(color, k)
        })
        .sum()
}

/// The `SU(n)` specialization `a = q^n` of [`homfly_double_twist`].
pub fn su_n_invariant(kp: KnotParams, n: u32) -> LaurentPoly {
    homfly_double_twist(kp).specialize_a(n as i64)
}

/// The explicit `a = q^2` formulas for `K_{2,1}` (`p = 2`) and `K_{-2,1}`
/// (`p = -2`), with the color factor written as
/// `{N+k+1}{N+k}…{N-k+1} / {N+1}`.
pub fn jones_a_q2_printed(p: i64, color: u32) -> Result<LaurentPoly> {
    if p != 2 && p != -2 {
        return Err(Error::IndexOutOfRange(format!(
            "printed a = q^2 form exists for p = ±2 only, got {p}"
        )));
    }
    let n = color as i64;
    let mut total = LaurentPoly::zero();
    for k in 0..=n {
        let inner: LaurentPoly = (0..=k)
            .map(|l| {
                let binom = qbinom(k as u32, l).expect("q-binomial is a Laurent polynomial");
                if p == 2 {
                    binom.shift(-3 * k * l + l * (l - 2), 0)
                } else {
                    binom.shift(3 * k * l - l * (l - 2), 0)
                }
            })
            .sum();
        let prefactor = if p == 2 {
            LaurentPoly::sign(k).shift(3 * k * k + 5 * k, 0)
        } else {
            LaurentPoly::q_pow(-2 * k * (k + 1))
        };
        let product: LaurentPoly = (n - k + 1..=n + k + 1).map(brace).product();
        let ratio = product.exact_div(&brace(n + 1))?;
        total += &(prefactor * inner * ratio);
    }
    Ok(total)
}
