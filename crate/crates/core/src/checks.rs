//! Named identity checks, grouped into suites, for the command-line verifier.
//!
//! Every check is exact. Randomized kernel checks draw from a ChaCha stream
//! with a fixed seed, so a run is reproducible bit for bit.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::{basis_coeff, hk_closed_form, verify_grid, Status};
use crate::eval::ratio;
use crate::invariant::{
    homfly_double_twist, homfly_special, jones_a_q2_printed, su_n_invariant, KnotParams,
    SpecialKnot,
};
use crate::poly::{LaurentPoly, Monomial};
use crate::qsymbols::{brace, brace_a_ff, brace_ff, qbinom, qfact, qint};
use crate::rational::RationalFn;
use crate::twist::{basis_matrices, big_t_twist, c_general, c_tilde, rf_matmul, t_twist};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_CASES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Core,
    Coefficients,
    Cyclotomic,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Core, Suite::Coefficients, Suite::Cyclotomic];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Coefficients => "coefficients",
            Suite::Cyclotomic => "cyclotomic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} [{}] {}: {}",
            self.suite, self.name, self.detail
        )
    }
}

type CheckResult = std::result::Result<String, String>;

struct Check {
    name: &'static str,
    run: fn(&Config) -> CheckResult,
}

/// Parameters for the randomized checks.
#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub cases: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            cases: DEFAULT_CASES,
        }
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn random_poly<R: Rng>(rng: &mut R) -> LaurentPoly {
    let n_terms = rng.gen_range(0..=5);
    LaurentPoly::from_terms((0..n_terms).map(|_| {
        let m = Monomial::new(rng.gen_range(-2..=2), rng.gen_range(-5..=5));
        let c = if rng.gen_ratio(1, 10) {
            BigInt::from(rng.gen::<i128>()) * BigInt::from(rng.gen::<i64>())
        } else {
            BigInt::from(rng.gen_range(-9i64..=9))
        };
        (m, c)
    }))
}

fn random_nonzero_poly<R: Rng>(rng: &mut R) -> LaurentPoly {
    loop {
        let p = random_poly(rng);
        if !p.is_zero() {
            return p;
        }
    }
}

// ---------------------------------------------------------------- core

fn ring_axioms(cfg: &Config) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for case in 0..cfg.cases {
        let (x, y, z) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        ensure(&(&x + &y) + &z == &x + &(&y + &z), || {
            format!("add assoc, case {case}")
        })?;
        ensure(&x + &y == &y + &x, || format!("add comm, case {case}"))?;
        ensure(&(&x * &y) * &z == &x * &(&y * &z), || {
            format!("mul assoc, case {case}")
        })?;
        ensure(&x * &y == &y * &x, || format!("mul comm, case {case}"))?;
        ensure(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || {
            format!("distributivity, case {case}")
        })?;
        ensure((&x + &(-x.clone())).is_zero(), || {
            format!("additive inverse, case {case}")
        })?;
        ensure(&x * &LaurentPoly::one() == x, || {
            format!("unit, case {case}")
        })?;
    }
    Ok(format!("{} random triples", cfg.cases))
}

fn bar_homomorphism(cfg: &Config) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 1);
    for case in 0..cfg.cases {
        let (x, y) = (random_poly(&mut rng), random_poly(&mut rng));
        ensure((&x * &y).bar() == &x.bar() * &y.bar(), || {
            format!("bar(xy), case {case}")
        })?;
        ensure((&x + &y).bar() == &x.bar() + &y.bar(), || {
            format!("bar(x+y), case {case}")
        })?;
        ensure(x.bar().bar() == x, || format!("involution, case {case}"))?;
    }
    Ok(format!("{} random pairs", cfg.cases))
}

fn exact_division_round_trip(cfg: &Config) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 2);
    for case in 0..cfg.cases {
        let p = random_poly(&mut rng);
        let d = random_nonzero_poly(&mut rng);
        let back = (&p * &d)
            .exact_div(&d)
            .map_err(|e| format!("case {case}: {e}"))?;
        ensure(back == p, || format!("round trip, case {case}"))?;
    }
    Ok(format!("{} random pairs", cfg.cases))
}

fn specialization_commutes(cfg: &Config) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 3);
    for case in 0..cfg.cases {
        let (x, y) = (random_poly(&mut rng), random_poly(&mut rng));
        let n = rng.gen_range(-4..=4);
        ensure(
            (&x * &y).specialize_a(n) == &x.specialize_a(n) * &y.specialize_a(n),
            || format!("product, case {case}"),
        )?;
        ensure(
            (&x + &y).specialize_a(n) == &x.specialize_a(n) + &y.specialize_a(n),
            || format!("sum, case {case}"),
        )?;
    }
    Ok(format!("{} random pairs", cfg.cases))
}

fn evaluation_homomorphism(cfg: &Config) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 4);
    let points: Vec<(BigRational, BigRational)> = vec![
        (ratio(2, 1), ratio(3, 1)),
        (ratio(-1, 2), ratio(5, 3)),
        (ratio(7, 5), ratio(-2, 9)),
    ];
    for case in 0..cfg.cases {
        let (x, y) = (random_poly(&mut rng), random_poly(&mut rng));
        let (q, a) = &points[case % points.len()];
        let (ex, ey) = (x.eval(q, a), y.eval(q, a));
        ensure((&x * &y).eval(q, a) == &ex * &ey, || {
            format!("product, case {case}")
        })?;
        ensure((&x + &y).eval(q, a) == &ex + &ey, || {
            format!("sum, case {case}")
        })?;
        ensure((&x - &y).eval(q, a) == &ex - &ey, || {
            format!("difference, case {case}")
        })?;
    }
    Ok(format!(
        "{} random pairs at {} rational points",
        cfg.cases,
        points.len()
    ))
}

fn brace_is_scaled_qint(_: &Config) -> CheckResult {
    let unit = brace(1);
    for n in -20..=20 {
        ensure(brace(n) == &unit * &qint(n), || format!("n = {n}"))?;
    }
    Ok("|n| <= 20".into())
}

fn qbinom_symmetry_and_bar(_: &Config) -> CheckResult {
    for n in 0..=12u32 {
        for k in 0..=n as i64 {
            let b = qbinom(n, k).map_err(|e| e.to_string())?;
            ensure(b == qbinom(n, n as i64 - k).unwrap(), || {
                format!("symmetry ({n},{k})")
            })?;
            ensure(b.bar() == b, || format!("bar invariance ({n},{k})"))?;
        }
    }
    Ok("n <= 12".into())
}

fn qbinom_pascal(_: &Config) -> CheckResult {
    for n in 1..=12u32 {
        for k in 0..=n as i64 {
            let lhs = qbinom(n, k).unwrap();
            let rhs = qbinom(n - 1, k).unwrap().shift(k, 0)
                + qbinom(n - 1, k - 1).unwrap().shift(k - n as i64, 0);
            ensure(lhs == rhs, || format!("Pascal ({n},{k})"))?;
        }
    }
    Ok("n <= 12".into())
}

fn brace_a_ff_specializes(_: &Config) -> CheckResult {
    for m in -4..=6i64 {
        for i in 0..=5u32 {
            for n in -2..=4i64 {
                ensure(
                    brace_a_ff(m, i).specialize_a(n) == brace_ff(m + n, i),
                    || format!("(m, i, n) = ({m}, {i}, {n})"),
                )?;
            }
        }
    }
    Ok("m in -4..=6, i <= 5, n in -2..=4".into())
}

// ------------------------------------------------------- coefficients

fn divisibility(_: &Config) -> CheckResult {
    for n in 1..=5u32 {
        for k in 0..=n {
            for p in 1..=3 {
                let c = c_general(n, k, p).map_err(|e| e.to_string())?;
                c.exact_div(&brace_ff(n as i64, k))
                    .map_err(|e| format!("C_({n},{k})^({p}): {e}"))?;
            }
        }
    }
    Ok("1 <= n <= 5, k <= n, 1 <= p <= 3".into())
}

fn c_paths_agree(_: &Config) -> CheckResult {
    for n in 0..=4u32 {
        for p in -3..=3 {
            let general = c_general(n, n, p).map_err(|e| e.to_string())?;
            ensure(general == qfact(n) * c_tilde(n, p), || {
                format!("(n, p) = ({n}, {p})")
            })?;
        }
    }
    Ok("n <= 4, |p| <= 3".into())
}

fn big_t_equals_c(_: &Config) -> CheckResult {
    for n in 0..=4u32 {
        for p in 1..=3 {
            let c = c_general(n, n, p).map_err(|e| e.to_string())?;
            ensure(big_t_twist(n, p) == c, || format!("(n, p) = ({n}, {p})"))?;
        }
    }
    Ok("n <= 4, 1 <= p <= 3".into())
}

fn big_t_vs_small_t(_: &Config) -> CheckResult {
    for n in 0..=4u32 {
        for p in 1..=3i64 {
            let ni = n as i64;
            let factor = LaurentPoly::sign(ni)
                * LaurentPoly::monomial(1, -2 * p * ni * (ni - 1), -2 * p * ni)
                * qfact(n).pow(2);
            ensure(big_t_twist(n, p) == t_twist(n, p).scale(&factor), || {
                format!("(n, p) = ({n}, {p})")
            })?;
        }
    }
    Ok("n <= 4, 1 <= p <= 3".into())
}

fn small_t_vs_c_tilde(_: &Config) -> CheckResult {
    for k in 0..=4u32 {
        for p in 1..=3i64 {
            let ki = k as i64;
            let num = LaurentPoly::sign(ki)
                * LaurentPoly::monomial(1, 2 * p * ki * (ki - 1), 2 * p * ki)
                * c_tilde(k, p);
            let rhs = RationalFn::new(num, qfact(k)).map_err(|e| e.to_string())?;
            ensure(t_twist(k, p) == rhs, || format!("(k, p) = ({k}, {p})"))?;
        }
    }
    Ok("k <= 4, 1 <= p <= 3".into())
}

fn c_tilde_bar_duality(_: &Config) -> CheckResult {
    for k in 0..=6u32 {
        for p in 1..=3 {
            let expected = LaurentPoly::sign(k as i64) * c_tilde(k, p).bar();
            ensure(c_tilde(k, -p) == expected, || {
                format!("(k, p) = ({k}, {p})")
            })?;
        }
    }
    Ok("k <= 6, p <= 3, with the (-1)^k factor".into())
}

fn c_tilde_closed_forms(_: &Config) -> CheckResult {
    for k in 0..=8u32 {
        let ki = k as i64;
        let e = 3 * ki * (ki - 1) / 2;
        ensure(
            c_tilde(k, 1) == LaurentPoly::sign(ki).shift(-e, -ki),
            || format!("p = 1, k = {k}"),
        )?;
        ensure(c_tilde(k, -1) == LaurentPoly::monomial(1, e, ki), || {
            format!("p = -1, k = {k}")
        })?;
    }
    for k in 0..=6u32 {
        let ki = k as i64;
        let e = 3 * ki * (ki - 1) / 2;
        let mut plus = LaurentPoly::zero();
        let mut minus = LaurentPoly::zero();
        for l in 0..=ki {
            let b = qbinom(k, l).unwrap();
            plus += &b.shift(-3 * ki * l + l * (l + 2), -2 * l);
            minus += &b.shift(3 * ki * l - l * (l + 2), 2 * l);
        }
        ensure(
            c_tilde(k, 2) == LaurentPoly::sign(ki).shift(-e, -ki) * plus,
            || format!("p = 2, k = {k}"),
        )?;
        ensure(c_tilde(k, -2) == minus.shift(e, ki), || {
            format!("p = -2, k = {k}")
        })?;
    }
    Ok("p = ±1 for k <= 8, p = ±2 for k <= 6".into())
}

fn basis_matrices_inverse(_: &Config) -> CheckResult {
    let size = 5;
    let (m_hr, m_rh) = basis_matrices(size);
    for (order, prod) in [
        ("HR*RH", rf_matmul(&m_hr, &m_rh)),
        ("RH*HR", rf_matmul(&m_rh, &m_hr)),
    ] {
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j {
                    RationalFn::one()
                } else {
                    RationalFn::zero()
                };
                ensure(*x == expected, || format!("{order} entry ({i}, {j})"))?;
            }
        }
    }
    Ok(format!("size {size}"))
}

fn ps_symmetry(_: &Config) -> CheckResult {
    for p in -2..=3 {
        for s in -2..=3 {
            for color in 0..=4 {
                ensure(
                    homfly_double_twist(KnotParams::new(p, s, color))
                        == homfly_double_twist(KnotParams::new(s, p, color)),
                    || format!("(p, s, N) = ({p}, {s}, {color})"),
                )?;
            }
        }
    }
    Ok("p, s in -2..=3, N <= 4".into())
}

fn mirror_covariance(_: &Config) -> CheckResult {
    for p in -2..=3 {
        for s in -2..=3 {
            for color in 0..=4 {
                ensure(
                    homfly_double_twist(KnotParams::new(-p, -s, color))
                        == homfly_double_twist(KnotParams::new(p, s, color)).bar(),
                    || format!("(p, s, N) = ({p}, {s}, {color})"),
                )?;
            }
        }
    }
    Ok("p, s in -2..=3, N <= 4".into())
}

fn figure_eight_amphichiral(_: &Config) -> CheckResult {
    for color in 0..=5 {
        let h = homfly_double_twist(KnotParams::new(-1, 1, color));
        ensure(h.bar() == h, || format!("N = {color}"))?;
    }
    Ok("N <= 5".into())
}

fn special_forms_agree(_: &Config) -> CheckResult {
    for knot in SpecialKnot::ALL {
        let (p, s) = knot.twist_params();
        for color in 0..=6 {
            ensure(
                homfly_special(knot, color) == homfly_double_twist(KnotParams::new(p, s, color)),
                || format!("{} at N = {color}", knot.name()),
            )?;
        }
    }
    Ok("3_1, 4_1, 5_2, 6_1 for N <= 6".into())
}

fn trefoil_collapse(_: &Config) -> CheckResult {
    for k in 0..=6u32 {
        let ki = k as i64;
        let lhs = LaurentPoly::sign(ki)
            * LaurentPoly::monomial(1, 4 * ki * (ki - 1), 4 * ki)
            * c_tilde(k, 1).pow(2);
        ensure(
            lhs == LaurentPoly::sign(ki).shift(ki * (ki - 1), 2 * ki),
            || format!("k = {k}"),
        )?;
    }
    Ok("k <= 6".into())
}

fn trivialities(_: &Config) -> CheckResult {
    for p in -3..=3 {
        for s in -3..=3 {
            ensure(
                homfly_double_twist(KnotParams::new(p, s, 0)).is_one(),
                || format!("N = 0 at ({p}, {s})"),
            )?;
            for color in 0..=5 {
                if p == 0 || s == 0 {
                    ensure(
                        homfly_double_twist(KnotParams::new(p, s, color)).is_one(),
                        || format!("unknot ({p}, {s}, {color})"),
                    )?;
                }
                if (-2..=2).contains(&p) && (-2..=2).contains(&s) {
                    ensure(
                        su_n_invariant(KnotParams::new(p, s, color), 1).is_one(),
                        || format!("SU(1) at ({p}, {s}, {color})"),
                    )?;
                }
            }
        }
    }
    Ok("N = 0, unknots and SU(1) for N <= 5".into())
}

fn printed_a_q2(_: &Config) -> CheckResult {
    for p in [2, -2] {
        for color in 0..=6 {
            let printed = jones_a_q2_printed(p, color).map_err(|e| e.to_string())?;
            ensure(
                printed == su_n_invariant(KnotParams::new(p, 1, color), 2),
                || format!("p = {p}, N = {color}"),
            )?;
        }
    }
    Ok("p = ±2, N <= 6".into())
}

// --------------------------------------------------------- cyclotomic

pub const GRID_KNOTS: [(i64, i64); 5] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (2, 2)];

fn conjecture_grid(_: &Config) -> CheckResult {
    let points: Vec<(i64, i64, u32)> = GRID_KNOTS
        .iter()
        .flat_map(|&(p, s)| (2..=4).map(move |n| (p, s, n)))
        .collect();
    for data in verify_grid(&points, 4, 2) {
        ensure(data.status == Status::Verified, || {
            format!("({}, {}, n = {}): {}", data.p, data.s, data.n, data.status)
        })?;
        ensure(data.coefficients.iter().all(LaurentPoly::is_a_free), || {
            format!("a-dependence at ({}, {}, n = {})", data.p, data.s, data.n)
        })?;
        ensure(data.checked_colors.last() == Some(&6), || {
            format!("colors checked: {:?}", data.checked_colors)
        })?;
    }
    Ok(format!(
        "{} grid points, kmax = 4, extra colors = 2",
        points.len()
    ))
}

fn mirror_coefficients(_: &Config) -> CheckResult {
    let mut points = Vec::new();
    for &(p, s) in &GRID_KNOTS {
        for n in 2..=3 {
            points.push((p, s, n));
            points.push((-p, -s, n));
        }
    }
    let results = verify_grid(&points, 4, 0);
    for pair in results.chunks(2) {
        let (orig, mirror) = (&pair[0], &pair[1]);
        ensure(orig.is_verified() && mirror.is_verified(), || {
            format!(
                "extraction failed at ({}, {}, n = {})",
                orig.p, orig.s, orig.n
            )
        })?;
        for (k, (h, hm)) in orig
            .coefficients
            .iter()
            .zip(&mirror.coefficients)
            .enumerate()
        {
            ensure(*hm == h.bar(), || {
                format!("({}, {}, n = {}) k = {k}", orig.p, orig.s, orig.n)
            })?;
        }
    }
    Ok("grid knots and mirrors, n in {2, 3}".into())
}

fn basis_coeff_is_a_free(_: &Config) -> CheckResult {
    for color in 0..=6 {
        for k in 0..=color {
            for n in 1..=4 {
                let b = basis_coeff(color, k, n);
                ensure(b.is_a_free() && !b.is_zero(), || {
                    format!("({color}, {k}, {n})")
                })?;
            }
        }
    }
    Ok("N <= 6, n <= 4".into())
}

fn closed_form_factor_identity(_: &Config) -> CheckResult {
    // [N choose k] {N+k-1;a}_k at a = q^n equals C_{N+1,k}^{(n)} / {k}!
    for color in 0..=6u32 {
        for k in 0..=color.min(6) {
            for n in 1..=4u32 {
                let lhs = (qbinom(color, k as i64).unwrap()
                    * brace_a_ff(color as i64 + k as i64 - 1, k))
                .specialize_a(n as i64);
                let rhs = basis_coeff(color, k, n)
                    .exact_div(&qfact(k))
                    .map_err(|e| format!("({color}, {k}, {n}): {e}"))?;
                ensure(lhs == rhs, || format!("({color}, {k}, {n})"))?;
            }
        }
    }
    Ok("N, k <= 6, n <= 4".into())
}

fn closed_form_matches_spot_value(_: &Config) -> CheckResult {
    let h = hk_closed_form(1, 1, 2, 1).map_err(|e| e.to_string())?;
    ensure(h == LaurentPoly::monomial(-1, 4, 0), || format!("got {h}"))?;
    Ok("H_1 of (1, 1) at n = 2 is -q^4".into())
}

fn checks_for(suite: Suite) -> Vec<Check> {
    macro_rules! checks {
        ($($f:ident),* $(,)?) => {
            vec![$(Check { name: stringify!($f), run: $f }),*]
        };
    }
    match suite {
        Suite::Core => checks![
            ring_axioms,
            bar_homomorphism,
            exact_division_round_trip,
            specialization_commutes,
            evaluation_homomorphism,
            brace_is_scaled_qint,
            qbinom_symmetry_and_bar,
            qbinom_pascal,
            brace_a_ff_specializes,
        ],
        Suite::Coefficients => checks![
            divisibility,
            c_paths_agree,
            big_t_equals_c,
            big_t_vs_small_t,
            small_t_vs_c_tilde,
            c_tilde_bar_duality,
            c_tilde_closed_forms,
            basis_matrices_inverse,
            ps_symmetry,
            mirror_covariance,
            figure_eight_amphichiral,
            special_forms_agree,
            trefoil_collapse,
            trivialities,
            printed_a_q2,
        ],
        Suite::Cyclotomic => checks![
            conjecture_grid,
            mirror_coefficients,
            basis_coeff_is_a_free,
            closed_form_factor_identity,
            closed_form_matches_spot_value,
        ],
    }
}

/// Runs every check of `suite` in declaration order.
pub fn run_suite(suite: Suite, cfg: &Config) -> Vec<CheckOutcome> {
    checks_for(suite)
        .into_iter()
        .map(|check| {
            let (passed, detail) = match (check.run)(cfg) {
                Ok(detail) => (true, detail),
                Err(detail) => (false, detail),
            };
            CheckOutcome {
                suite,
                name: check.name,
                passed,
                detail,
            }
        })
        .collect()
}

pub fn run_all(cfg: &Config) -> Vec<CheckOutcome> {
    Suite::ALL
        .iter()
        .flat_map(|&suite| run_suite(suite, cfg))
        .collect()
}
