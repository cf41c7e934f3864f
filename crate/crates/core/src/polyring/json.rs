use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, Ring, RingSpec};
use crate::error::{Error, Result};

/// Canonical wire form: `{"vars":[...],"terms":[["<coeff>",[e1,...]],...]}`,
/// terms descending in the ring order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<(String, Vec<u32>)>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.ring().variables().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|(m, c)| (c.to_string(), m.exponents().to_vec()))
                .collect(),
        }
    }

    /// Reads the canonical form into `ring`; the payload's variables are
    /// matched by name and must all exist in `ring`.
    pub fn from_json(json: &PolyJson, ring: &Ring) -> Result<Polynomial> {
        let own = RingSpec::new(&json.vars, ring.domain(), ring.order())?;
        let mut terms = Vec::with_capacity(json.terms.len());
        for (c, e) in &json.terms {
            if e.len() != json.vars.len() {
                return Err(Error::Format(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    json.vars.len()
                )));
            }
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::Format(format!("bad coefficient `{c}`")))?;
            terms.push((Monomial::new(e.clone()), c));
        }
        Polynomial::from_terms(&own, terms).embed(ring)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    /// Accepts either the canonical object or an expression string.
    pub fn from_json_value(value: &serde_json::Value, ring: &Ring) -> Result<Polynomial> {
        match value {
            serde_json::Value::String(s) => Polynomial::parse(s, ring),
            other => {
                let pj: PolyJson = serde_json::from_value(other.clone())?;
                Polynomial::from_json(&pj, ring)
            }
        }
    }
}
