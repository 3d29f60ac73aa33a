//! JSON wire format.
//!
//! An [`MPoly`] is an array of `{"c": "<decimal>", "e": [ep, eq, et, eu, ev, ew]}`
//! objects sorted lexicographically by `e`; a [`Series`] is
//! `{"order": N, "coeffs": [MPoly, ...]}`. Coefficients are strings so that
//! arbitrary-precision values survive any JSON reader.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{MPoly, Monomial, Series, NVARS};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    c: String,
    e: [u16; NVARS],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<MPoly>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(m, c)| TermRepr {
                c: c.to_string(),
                e: m.0,
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermRepr>::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in raw {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient"));
            }
            if terms.insert(Monomial(t.e), c).is_some() {
                return Err(D::Error::custom(format!("duplicate exponent {:?}", t.e)));
            }
        }
        Ok(MPoly::from_sorted_unchecked(terms))
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesRepr::deserialize(deserializer)?;
        Series::new(raw.order, raw.coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::super::Var;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn golden_encoding() {
        let f = &(&MPoly::var(Var::P) + &MPoly::var(Var::Q)) * &MPoly::var(Var::T);
        let f = &f + &MPoly::constant(-3);
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"[{"c":"-3","e":[0,0,0,0,0,0]},{"c":"1","e":[0,1,1,0,0,0]},{"c":"1","e":[1,0,1,0,0,0]}]"#
        );
        let s = Series::new(1, vec![MPoly::one(), MPoly::zero()]).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"order":1,"coeffs":[[{"c":"1","e":[0,0,0,0,0,0]}],[]]}"#
        );
    }

    #[test]
    fn rejects_non_canonical_input() {
        assert!(serde_json::from_str::<MPoly>(r#"[{"c":"0","e":[0,0,0,0,0,0]}]"#).is_err());
        assert!(serde_json::from_str::<MPoly>(
            r#"[{"c":"1","e":[0,0,0,0,0,0]},{"c":"2","e":[0,0,0,0,0,0]}]"#
        )
        .is_err());
        assert!(serde_json::from_str::<MPoly>(r#"[{"c":"x","e":[0,0,0,0,0,0]}]"#).is_err());
        assert!(serde_json::from_str::<Series>(r#"{"order":2,"coeffs":[[]]}"#).is_err());
    }

    fn arb_mpoly() -> impl Strategy<Value = MPoly> {
        prop::collection::vec(
            (prop::array::uniform6(0u16..5), -1_000_000_000_000i64..1_000_000_000_000),
            0..8,
        )
        .prop_map(|ts| MPoly::from_terms(ts.into_iter().map(|(e, c)| (Monomial(e), c))))
    }

    proptest! {
        #[test]
        fn mpoly_round_trips(f in arb_mpoly()) {
            let text = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<MPoly>(&text).unwrap(), f);
        }

        #[test]
        fn series_round_trips(cs in prop::collection::vec(arb_mpoly(), 1..5)) {
            let s = Series::new(cs.len() - 1, cs).unwrap();
            let text = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<Series>(&text).unwrap(), s);
        }
    }
}
