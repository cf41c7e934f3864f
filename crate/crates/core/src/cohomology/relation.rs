use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{membership, GbConfig};
use crate::polyring::{same_ring, Polynomial, Ring, RingSpec};

/// A relation `Σ F_i G_i = 0`, exact in the polynomial ring or, when
/// `quotient` is nonempty, modulo the ideal it generates (the ring is then
/// the quotient by that ideal).
#[derive(Debug, Clone, PartialEq)]
pub struct RelationInstance {
    ring: Ring,
    f: Vec<Polynomial>,
    g: Vec<Polynomial>,
    quotient: Vec<Polynomial>,
}

/// `{"vars":[...], "F":[...], "G":[...], "quotient_extra":[...]}`. Entries
/// are expression strings or canonical polynomial objects.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelationJson {
    pub vars: Vec<String>,
    #[serde(rename = "F")]
    pub f: Vec<serde_json::Value>,
    #[serde(rename = "G")]
    pub g: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quotient_extra: Vec<serde_json::Value>,
}

pub fn make_relation(f: Vec<Polynomial>, g: Vec<Polynomial>) -> Result<RelationInstance> {
    RelationInstance::new(f, g, Vec::new())
}

impl RelationInstance {
    pub fn new(f: Vec<Polynomial>, g: Vec<Polynomial>, quotient: Vec<Polynomial>) -> Result<RelationInstance> {
        if f.len() != g.len() {
            return Err(Error::WrongArity { expected: f.len(), actual: g.len() });
        }
        if f.len() < 2 {
            return Err(Error::WrongArity { expected: 2, actual: f.len() });
        }
        let ring = f[0].ring().clone();
        if !ring.is_integral() {
            return Err(Error::DomainMismatch { expected: "ZZ" });
        }
        for p in f.iter().chain(&g).chain(&quotient) {
            if !same_ring(p.ring(), &ring) {
                return Err(Error::RingMismatch(format!("{} vs {}", p.ring(), ring)));
            }
        }
        let rel = RelationInstance { ring, f, g, quotient };
        let residual = rel.residual();
        let holds = if rel.quotient.is_empty() {
            residual.is_zero()
        } else {
            membership(&residual, &rel.quotient, &GbConfig::default())?.is_member()
        };
        if !holds {
            return Err(Error::NotARelation { residual: residual.to_string() });
        }
        Ok(rel)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn f(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn g(&self) -> &[Polynomial] {
        &self.g
    }

    /// Extra generators of the defining ideal of a quotient presentation.
    pub fn quotient(&self) -> &[Polynomial] {
        &self.quotient
    }

    /// `Σ F_i G_i` in the ambient polynomial ring.
    pub fn residual(&self) -> Polynomial {
        self.f.iter().zip(&self.g).fold(Polynomial::zero(&self.ring), |acc, (a, b)| &acc + &(a * b))
    }

    /// `G_1 ⋯ G_n`.
    pub fn g_product(&self) -> Polynomial {
        self.g.iter().fold(Polynomial::one(&self.ring), |acc, g| &acc * g)
    }

    /// `∏_{j≠i} G_j`.
    pub fn g_product_except(&self, i: usize) -> Polynomial {
        self.g
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(Polynomial::one(&self.ring), |acc, (_, g)| &acc * g)
    }

    pub fn from_json(json: &RelationJson) -> Result<RelationInstance> {
        let ring = RingSpec::integers(&json.vars)?;
        let read = |v: &[serde_json::Value]| v.iter().map(|x| Polynomial::from_json_value(x, &ring)).collect::<Result<Vec<_>>>();
        RelationInstance::new(read(&json.f)?, read(&json.g)?, read(&json.quotient_extra)?)
    }

    pub fn from_json_str(text: &str) -> Result<RelationInstance> {
        let json: RelationJson = serde_json::from_str(text)?;
        Self::from_json(&json)
    }

    pub fn to_json(&self) -> RelationJson {
        let enc = |v: &[Polynomial]| {
            v.iter()
                .map(|p| serde_json::to_value(p.to_json()).expect("serializable"))
                .collect::<Vec<_>>()
        };
        RelationJson {
            vars: self.ring.variables().to_vec(),
            f: enc(&self.f),
            g: enc(&self.g),
            quotient_extra: enc(&self.quotient),
        }
    }
}

/// Relation form helper for tests and fixtures: parse each entry in `ring`.
pub fn parse_relation(ring: &Ring, f: &[&str], g: &[&str]) -> Result<RelationInstance> {
    let read = |v: &[&str]| v.iter().map(|s| Polynomial::parse(s, ring)).collect::<Result<Vec<_>>>();
    make_relation(read(f)?, read(g)?)
}
