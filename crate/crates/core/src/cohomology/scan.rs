use std::time::Instant;

use serde::Serialize;

use super::{RelationJson, TorsionCandidate};
use crate::error::{Error, Result};
use crate::groebner::{membership, CertificateJson, GbConfig, Membership, MembershipCertificate};
use crate::polyring::{PolyJson, Polynomial};

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Found { k: u32, certificate: MembershipCertificate },
    Exhausted { k_max: u32 },
    Unknown { k: u32, reason: String },
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Found { .. } => "FOUND",
            Outcome::Exhausted { .. } => "EXHAUSTED",
            Outcome::Unknown { .. } => "UNKNOWN",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub candidate: TorsionCandidate,
    pub k_max: u32,
    pub outcome: Outcome,
    /// Extra generators adjoined to the target ideal on top of the
    /// relation's own quotient generators.
    pub quotient_extra: Vec<Polynomial>,
    /// Wall-clock milliseconds per tested k.
    pub elapsed_ms: Vec<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutcomeJson {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReportJson {
    pub relation: RelationJson,
    pub p: u64,
    pub e: u32,
    pub q: u32,
    pub lambda: PolyJson,
    pub k_max: u32,
    pub quotient_extra: Vec<PolyJson>,
    pub outcome: OutcomeJson,
}

impl ConjectureReport {
    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found { .. })
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.outcome, Outcome::Exhausted { .. })
    }

    pub fn certificate(&self) -> Option<(u32, &MembershipCertificate)> {
        match &self.outcome {
            Outcome::Found { k, certificate } => Some((*k, certificate)),
            _ => None,
        }
    }

    /// Deterministic payload; timing is reported separately.
    pub fn to_json(&self) -> ConjectureReportJson {
        let c = &self.candidate;
        let outcome = match &self.outcome {
            Outcome::Found { k, certificate } => OutcomeJson {
                status: "FOUND",
                k: Some(*k),
                certificate: Some(certificate.to_json()),
                reason: None,
            },
            Outcome::Exhausted { .. } => OutcomeJson { status: "EXHAUSTED", k: None, certificate: None, reason: None },
            Outcome::Unknown { k, reason } => OutcomeJson {
                status: "UNKNOWN",
                k: Some(*k),
                certificate: None,
                reason: Some(reason.clone()),
            },
        };
        ConjectureReportJson {
            relation: c.relation().to_json(),
            p: c.p(),
            e: c.e(),
            q: c.q(),
            lambda: c.lambda().to_json(),
            k_max: self.k_max,
            quotient_extra: self.quotient_extra.iter().map(|p| p.to_json()).collect(),
            outcome,
        }
    }
}

/// Scans `k = 0..=k_max` for `λ_q (G_1⋯G_n)^k ∈ (G_1^{q+k}, …, G_n^{q+k}) + (extra)`
/// over ℤ, stopping at the first success.
pub fn check_conjecture(
    cand: &TorsionCandidate,
    k_max: u32,
    quotient_extra: &[Polynomial],
    config: &GbConfig,
) -> Result<ConjectureReport> {
    let mut elapsed_ms = Vec::new();
    let mut outcome = Outcome::Exhausted { k_max };
    for k in 0..=k_max {
        let start = Instant::now();
        let target = cand.target(k);
        let mut gens = cand.ideal(k);
        gens.extend(quotient_extra.iter().cloned());
        let result = membership(&target, &gens, config);
        elapsed_ms.push(start.elapsed().as_millis());
        match result {
            Ok(Membership::Member(certificate)) => {
                outcome = Outcome::Found { k, certificate };
                break;
            }
            Ok(Membership::NotMember) => {}
            Err(Error::ResourceBound(reason)) => {
                outcome = Outcome::Unknown { k, reason };
                break;
            }
            Err(err) => return Err(err),
        }
    }
    Ok(ConjectureReport {
        candidate: cand.clone(),
        k_max,
        outcome,
        quotient_extra: quotient_extra.to_vec(),
        elapsed_ms,
    })
}

/// From a certificate at `k` against `G_i^{q+k}` (plus trailing fixed
/// generators) to one at `k+1`: multiply through by `G_1⋯G_n` and move
/// `∏_{j≠i} G_j` into the i-th cofactor.
pub fn raise_k(cand: &TorsionCandidate, k: u32, cert: &MembershipCertificate) -> Result<MembershipCertificate> {
    let rel = cand.relation();
    let n = rel.n();
    let prod = rel.g_product();
    let gens = cert.generators();
    if gens.len() < n || gens[..n] != cand.ideal(k)[..n] {
        return Err(Error::CertificateInvalid(format!("not a certificate against G_i^(q+{k})")));
    }
    let cofs = cert
        .cofactors()
        .iter()
        .enumerate()
        .map(|(i, h)| if i < n { h * &rel.g_product_except(i) } else { h * &prod })
        .collect();
    let mut gens_out: Vec<Polynomial> = cand.ideal(k + 1)[..n].to_vec();
    gens_out.extend(gens[n..].iter().cloned());
    MembershipCertificate::new(cert.target() * &prod, gens_out, cofs, cert.modulus())
}
