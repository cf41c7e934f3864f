//! The explicit equational content behind the torsion candidates.
//!
//! Binomial identities are checked exhaustively over parameter boxes,
//! together with their telescoping certificates. Polynomial identities are
//! expanded with integer coefficients only: every rational coefficient is
//! cleared by an explicit common denominator first. The witness
//! constructions turn those identities into membership certificates, which
//! are always re-verified by plain arithmetic.

mod binom;
mod cleared;
mod hochster;
mod lemmas;
mod plucker;
mod regular;

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{CertificateJson, MembershipCertificate};
use crate::polyring::{PolyJson, Polynomial};

pub use binom::binom;
pub use cleared::{clearing_denominator, gamma, gamma_expected, lemma_asym_check, lemma_asym_check_with, lemma_iden_check, lemma_iden_check_with};
pub use hochster::{hochster_gamma, hochster_gamma_with, hochster_mu_lift, hochster_mu_lift_with, HochsterLift};
pub use lemmas::{
    lemma1_certificate_check, lemma1_eval, lemma1_in_domain, lemma1_initial, lemma1_initial_check, lemma1_recurrence_holds,
    lemma1_sum_check, lemma1_term, lemma2_certificate_check, lemma2_eval, lemma2_in_range, lemma2_recurrence_holds,
    lemma2_sum_check, lemma2_term, CheckId, Lemma1Case, Lemma1Eval, TupleVerdict, Verdict, WZCertificateCheck,
};
pub use plucker::{compute_d, plucker_witness, plucker_witness_with, PluckerWitness};
pub use regular::{
    reg_witness, reg_witness_with, si_containment_check, si_containment_with, theorem31_witness, theorem31_witness_with,
    RegWitness,
};

/// Expansion budget for the polynomial identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Refuse an expansion whose estimated term count exceeds this.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_terms: 5_000_000 }
    }
}

impl Limits {
    pub(crate) fn admit(&self, estimate: f64, what: &str) -> Result<()> {
        if estimate > self.max_terms as f64 {
            return Err(Error::ResourceBound(format!(
                "{what}: about {estimate:.0} terms, cap is {}",
                self.max_terms
            )));
        }
        Ok(())
    }
}

/// Outcome of one polynomial identity check. `verdict` is exactly
/// `residual == 0`; auxiliary checks are listed separately.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub residual: Polynomial,
    pub verdict: bool,
    pub side_checks: Vec<(String, bool)>,
    pub notes: BTreeMap<String, String>,
    pub certificate: Option<MembershipCertificate>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReportJson {
    pub identity: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub residual: PolyJson,
    pub verdict: bool,
    pub side_checks: BTreeMap<String, bool>,
    pub notes: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

impl IdentityReport {
    pub(crate) fn new(identity: &str, residual: Polynomial, start: Instant) -> IdentityReport {
        IdentityReport {
            identity: identity.to_string(),
            params: BTreeMap::new(),
            verdict: residual.is_zero(),
            residual,
            side_checks: Vec::new(),
            notes: BTreeMap::new(),
            certificate: None,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }

    pub(crate) fn param(&mut self, name: &str, value: impl Into<serde_json::Value>) {
        self.params.insert(name.to_string(), value.into());
    }

    pub(crate) fn note(&mut self, name: &str, value: impl Display) {
        self.notes.insert(name.to_string(), value.to_string());
    }

    pub(crate) fn side_check(&mut self, name: &str, ok: bool) {
        self.side_checks.push((name.to_string(), ok));
    }

    /// Residual zero and every auxiliary check passed.
    pub fn passed(&self) -> bool {
        self.verdict && self.side_checks.iter().all(|(_, ok)| *ok)
    }

    pub fn to_json(&self) -> IdentityReportJson {
        IdentityReportJson {
            identity: self.identity.clone(),
            params: self.params.clone(),
            residual: self.residual.to_json(),
            verdict: self.verdict,
            side_checks: self.side_checks.iter().cloned().collect(),
            notes: self.notes.clone(),
            certificate: self.certificate.as_ref().map(|c| c.to_json()),
        }
    }
}
