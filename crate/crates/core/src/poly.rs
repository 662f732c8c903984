//! Sparse Laurent polynomials in `q` and `a` over the integers.
//!
//! A [`LaurentPoly`] is a finite map from exponent pairs to nonzero
//! [`BigInt`] coefficients. Zero coefficients are never stored, so two
//! polynomials are equal exactly when their maps are equal.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent pair of a monomial `a^ea q^eq`.
///
/// The derived ordering is lexicographic with the `a`-exponent major and the
/// `q`-exponent minor. This is both the division term order and the canonical
/// output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub ea: i64,
    pub eq: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ea: 0, eq: 0 };

    pub fn new(ea: i64, eq: i64) -> Self {
        Monomial { ea, eq }
    }

    fn shifted(self, other: Monomial) -> Monomial {
        Monomial {
            ea: self.ea + other.ea,
            eq: self.eq + other.eq,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(c, 0, 0)
    }

    /// The monomial `c · q^eq · a^ea`. Note the argument order: `q` first.
    pub fn monomial(c: impl Into<BigInt>, eq: i64, ea: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial { ea, eq }, c);
        }
        LaurentPoly { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        LaurentPoly::monomial(1, e, 0)
    }

    /// `a^e`.
    pub fn a_pow(e: i64) -> Self {
        LaurentPoly::monomial(1, 0, e)
    }

    /// `(-1)^k`.
    pub fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            LaurentPoly::one()
        } else {
            LaurentPoly::constant(-1)
        }
    }

    /// Builds a polynomial from arbitrary `(monomial, coefficient)` pairs,
    /// summing duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut out = LaurentPoly::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: ascending by `(ea, eq)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `q^eq a^ea` (zero when absent).
    pub fn coeff(&self, eq: i64, ea: i64) -> BigInt {
        self.terms
            .get(&Monomial { ea, eq })
            .cloned()
            .unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn trailing_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    /// Inclusive range of `a`-exponents, `None` for the zero polynomial.
    pub fn a_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?.ea;
        let hi = self.terms.keys().next_back()?.ea;
        Some((lo, hi))
    }

    /// Inclusive range of `q`-exponents, `None` for the zero polynomial.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|m| m.eq).min()?;
        let hi = self.terms.keys().map(|m| m.eq).max()?;
        Some((lo, hi))
    }

    /// True when no monomial involves `a`.
    pub fn is_a_free(&self) -> bool {
        self.terms.keys().all(|m| m.ea == 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_term_ref(&mut self, m: Monomial, c: &BigInt) {
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn sub_term_ref(&mut self, m: Monomial, c: &BigInt) {
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(-c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() -= c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: Monomial) -> Option<BigInt> {
        self.terms.remove(&m)
    }

    /// Multiplies by the monomial `c · q^eq · a^ea`.
    pub fn mul_monomial(&self, c: &BigInt, eq: i64, ea: i64) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let shift = Monomial { ea, eq };
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.shifted(shift), x * c))
                .collect(),
        }
    }

    /// Multiplies by `q^eq a^ea`.
    pub fn shift(&self, eq: i64, ea: i64) -> LaurentPoly {
        let shift = Monomial { ea, eq };
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.shifted(shift), x.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The bar involution `q ↦ q^{-1}`, `a ↦ a^{-1}`.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial {
                            ea: -m.ea,
                            eq: -m.eq,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Substitutes `a = q^n`.
    pub fn specialize_a(&self, n: i64) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial {
                    ea: 0,
                    eq: m.eq + n * m.ea,
                },
                c.clone(),
            )
        }))
    }

    /// Product of the given factors; the empty product is one.
    pub fn product<'a, I>(factors: I) -> LaurentPoly
    where
        I: IntoIterator<Item = &'a LaurentPoly>,
    {
        factors
            .into_iter()
            .fold(LaurentPoly::one(), |acc, f| &acc * f)
    }

    /// Plain-text rendering, e.g. `a^2*q^-2 + a^2*q^2 - a^4`.
    pub fn to_text(&self) -> String {
        render(self, |out, ea, eq, coeff_shown| {
            let mut factors: Vec<String> = Vec::new();
            if let Some(c) = coeff_shown {
                factors.push(c.to_string());
            }
            for (var, e) in [("a", ea), ("q", eq)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        })
    }

    /// LaTeX rendering, e.g. `a^{2}q^{-2} + a^{2}q^{2} - a^{4}`.
    pub fn to_latex(&self) -> String {
        render(self, |out, ea, eq, coeff_shown| {
            if let Some(c) = coeff_shown {
                out.push_str(&c.to_string());
            }
            for (var, e) in [("a", ea), ("q", eq)] {
                match e {
                    0 => {}
                    1 => out.push_str(var),
                    _ => out.push_str(&format!("{var}^{{{e}}}")),
                }
            }
        })
    }
}

/// Shared term-joining logic for the text renderers. The callback receives the
/// exponents and the absolute coefficient when it must be printed (it is
/// omitted for `±1` on a non-constant monomial).
fn render<F>(p: &LaurentPoly, mut write_term: F) -> String
where
    F: FnMut(&mut String, i64, i64, Option<&BigInt>),
{
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let constant = m.ea == 0 && m.eq == 0;
        let shown = if abs.is_one() && !constant {
            None
        } else {
            Some(&abs)
        };
        write_term(&mut out, m.ea, m.eq, shown);
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(*m, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.sub_term_ref(*m, c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.shifted(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}
