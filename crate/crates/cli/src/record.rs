//! The serialized form of one computed invariant.

use std::str::FromStr;

use homfly_core::{LaurentPoly, Monomial};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotId {
    pub p: i64,
    pub s: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableSpec {
    GenericA,
    AEqQn(u32),
}

/// One monomial; the coefficient is a decimal string so it survives any JSON
/// reader without rounding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub ea: i64,
    pub eq: i64,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub knot: KnotId,
    #[serde(rename = "N")]
    pub color: u32,
    pub variable_spec: VariableSpec,
    pub polynomial: Vec<Term>,
    pub meta: Meta,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const FORMULA_THEOREM: &str = "theorem-1.2";
pub const FORMULA_PRINTED_A_Q2: &str = "printed-a-q2";

pub fn special_formula(knot_name: &str) -> String {
    format!("special-{knot_name}")
}

impl OutputRecord {
    pub fn new(
        p: i64,
        s: i64,
        color: u32,
        variable_spec: VariableSpec,
        poly: &LaurentPoly,
        formula: &str,
    ) -> Self {
        let polynomial = poly
            .terms()
            .map(|(m, c)| Term {
                ea: m.ea,
                eq: m.eq,
                c: c.to_string(),
            })
            .collect();
        OutputRecord {
            knot: KnotId { p, s },
            color,
            variable_spec,
            polynomial,
            meta: Meta {
                version: VERSION.to_string(),
                formula: formula.to_string(),
            },
        }
    }

    /// Rebuilds the polynomial; `None` if a coefficient is not an integer.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let terms = self
            .polynomial
            .iter()
            .map(|t| Some((Monomial::new(t.ea, t.eq), BigInt::from_str(&t.c).ok()?)))
            .collect::<Option<Vec<_>>>()?;
        Some(LaurentPoly::from_terms(terms))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

pub fn format_output(rec: &OutputRecord, fmt: Format) -> String {
    match fmt {
        Format::Json => serde_json::to_string(rec).expect("records always serialize"),
        Format::Latex => rec.to_poly().map(|p| p.to_latex()).unwrap_or_default(),
        Format::Text => rec.to_poly().map(|p| p.to_text()).unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn record(poly: &LaurentPoly) -> OutputRecord {
        OutputRecord::new(1, 1, 1, VariableSpec::GenericA, poly, FORMULA_THEOREM)
    }

    #[test]
    fn zero_renders_as_zero() {
        let rec = record(&LaurentPoly::zero());
        assert_eq!(format_output(&rec, Format::Latex), "0");
        assert_eq!(format_output(&rec, Format::Text), "0");
        assert!(format_output(&rec, Format::Json).contains("\"polynomial\":[]"));
    }

    #[test]
    fn negative_monomial_latex() {
        let rec = record(&LaurentPoly::monomial(-1, 0, -1));
        assert_eq!(format_output(&rec, Format::Latex), "-a^{-1}");
    }

    #[test]
    fn big_coefficient_is_a_string() {
        let big = BigInt::from_str("12345678901234567890").unwrap();
        let poly = LaurentPoly::from_terms([(Monomial::new(0, 3), big)]);
        let json = format_output(&record(&poly), Format::Json);
        assert!(json.contains("\"c\":\"12345678901234567890\""), "{json}");
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_poly().unwrap(), poly);
    }

    #[test]
    fn schema_shape() {
        let rec = OutputRecord::new(-2, 1, 3, VariableSpec::AEqQn(2), &LaurentPoly::one(), "x");
        let json = format_output(&rec, Format::Json);
        assert_eq!(
            json,
            format!(
                r#"{{"knot":{{"p":-2,"s":1}},"N":3,"variable_spec":{{"a_eq_qn":2}},"polynomial":[{{"ea":0,"eq":0,"c":"1"}}],"meta":{{"version":"{VERSION}","formula":"x"}}}}"#
            )
        );
        let generic = format_output(&record(&LaurentPoly::one()), Format::Json);
        assert!(generic.contains(r#""variable_spec":"generic_a""#));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-5i64..=5, -9i64..=9), any::<i128>()), 0..8).prop_map(|ts| {
            LaurentPoly::from_terms(ts.into_iter().map(|((ea, eq), c)| {
                (Monomial::new(ea, eq), BigInt::from(c) * BigInt::from(c) - 1)
            }))
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(
            poly in arb_poly(),
            p in -9i64..9,
            s in -9i64..9,
            color in 0u32..20,
            sun in prop::option::of(1u32..8),
        ) {
            let spec = sun.map_or(VariableSpec::GenericA, VariableSpec::AEqQn);
            let rec = OutputRecord::new(p, s, color, spec, &poly, FORMULA_THEOREM);
            let json = format_output(&rec, Format::Json);
            prop_assert!(!json.contains('\n'));
            let back: OutputRecord = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back.to_poly().unwrap(), poly);
            prop_assert_eq!(back, rec);
        }

        #[test]
        fn renderings_are_injective(x in arb_poly(), y in arb_poly()) {
            let (rx, ry) = (record(&x), record(&y));
            for fmt in [Format::Json, Format::Latex, Format::Text] {
                prop_assert_eq!(format_output(&rx, fmt) == format_output(&ry, fmt), x == y);
            }
        }
    }
}
