//! JSON: a polynomial is a list of `[coefficient, {var: exponent}]` pairs in
//! descending graded-lexicographic order; a rational function is
//! `{"num": poly, "den": poly}`.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{MultiPoly, RatFunc};
use crate::exactnum::{format_rational, parse_rational};

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self.grlex_terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (c, m) in terms {
            seq.serialize_element(&(format_rational(&c), m))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(String, BTreeMap<String, u32>)> = Vec::deserialize(deserializer)?;
        let mut vars: Vec<String> = raw.iter().flat_map(|(_, m)| m.keys().cloned()).collect();
        vars.sort();
        vars.dedup();
        let mut terms = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            let c = parse_rational(&c).map_err(D::Error::custom)?;
            let e = vars.iter().map(|v| m.get(v).copied().unwrap_or(0)).collect();
            terms.push((e, c));
        }
        Ok(MultiPoly::from_terms(vars, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: MultiPoly,
    den: MultiPoly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: self.numer().clone(),
            den: self.denom().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = RatFuncRepr::deserialize(deserializer)?;
        RatFunc::new(r.num, r.den).map_err(D::Error::custom)
    }
}
