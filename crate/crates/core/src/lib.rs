//! Exact colored HOMFLY-PT invariants of double twist knots.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`], [`division`], [`rational`], [`eval`]: arithmetic in
//!   `Z[q^{±1}, a^{±1}]` and its fraction field.
//! * [`qsymbols`], [`composition`]: quantum integers, braces, q-binomials.
//! * [`twist`]: the coefficient formulas of the twist calculus.
//! * [`invariant`]: the invariant of `K_{p,s}` and its specializations.
//! * [`cyclotomic`]: extraction and verification of the cyclotomic expansion.
//! * [`checks`]: named identity checks used by the command-line verifier.

pub mod checks;
pub mod composition;
pub mod cyclotomic;
pub mod division;
pub mod error;
pub mod eval;
pub mod invariant;
pub mod poly;
pub mod qsymbols;
pub mod rational;
pub mod twist;

pub use composition::{compositions, Composition};
pub use cyclotomic::{
    basis_coeff, check_expansion, extract_cyclotomic, hk_closed_form, verify_conjecture,
    CyclotomicData, Status,
};
pub use error::{Error, Result};
pub use invariant::{
    homfly_double_twist, homfly_special, jones_a_q2_printed, normalize_params, su_n_invariant,
    KnotParams, NormalizedKnot, SpecialKnot,
};
pub use poly::{LaurentPoly, Monomial};
pub use rational::RationalFn;
