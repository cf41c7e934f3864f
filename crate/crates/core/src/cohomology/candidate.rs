use num_bigint::BigInt;

use super::RelationInstance;
use crate::error::{Error, Result};
use crate::groebner::{membership, GbConfig, MembershipCertificate};
use crate::polyring::{is_prime, Polynomial};

/// The data of the class `η_q = [λ_q + (G_1^q, …, G_n^q)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionCandidate {
    relation: RelationInstance,
    p: u64,
    e: u32,
    q: u32,
    lambda: Polynomial,
    frobenius: Vec<Polynomial>,
}

pub fn prime_power(p: u64, e: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::Format("exponent e must be at least 1".into()));
    }
    u32::try_from(p)
        .ok()
        .and_then(|p| p.checked_pow(e))
        .ok_or_else(|| Error::ResourceBound(format!("{p}^{e} does not fit an exponent")))
}

/// `λ_q = Σ (F_i G_i)^q / p`.
///
/// For a quotient presentation `Σ F_i G_i` only vanishes in the quotient, so
/// the representative `(Σ (F_i G_i)^q - (Σ F_i G_i)^q) / p` is used; it has
/// the same class modulo the defining ideal.
pub fn lambda_q(rel: &RelationInstance, p: u64, e: u32) -> Result<TorsionCandidate> {
    let q = prime_power(p, e)?;
    let mut sum = rel
        .f()
        .iter()
        .zip(rel.g())
        .fold(Polynomial::zero(rel.ring()), |acc, (f, g)| &acc + &(f * g).power(q));
    if !rel.quotient().is_empty() {
        sum = &sum - &rel.residual().power(q);
    }
    let lambda = sum
        .exact_div_int(&BigInt::from(p))
        .map_err(|err| Error::Internal(format!("power sum of a relation not divisible by {p}: {err}")))?;
    let frobenius = rel.g().iter().map(|g| g.power(q)).collect();
    Ok(TorsionCandidate { relation: rel.clone(), p, e, q, lambda, frobenius })
}

impl TorsionCandidate {
    pub fn relation(&self) -> &RelationInstance {
        &self.relation
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn lambda(&self) -> &Polynomial {
        &self.lambda
    }

    /// `G_1^q, …, G_n^q`.
    pub fn frobenius_ideal(&self) -> &[Polynomial] {
        &self.frobenius
    }

    /// `λ_q (G_1 ⋯ G_n)^k`.
    pub fn target(&self, k: u32) -> Polynomial {
        &self.lambda * &self.relation.g_product().power(k)
    }

    /// `G_1^{q+k}, …, G_n^{q+k}` followed by the quotient generators.
    pub fn ideal(&self, k: u32) -> Vec<Polynomial> {
        let mut gens: Vec<Polynomial> = self.relation.g().iter().map(|g| g.power(self.q + k)).collect();
        gens.extend(self.relation.quotient().iter().cloned());
        gens
    }
}

/// `p λ_q = Σ F_i^q G_i^q`, with an extra term over the quotient generators
/// for quotient presentations.
pub fn annihilation_certificate(cand: &TorsionCandidate) -> Result<MembershipCertificate> {
    let rel = cand.relation();
    let q = cand.q();
    let target = cand.lambda().scale(&BigInt::from(cand.p()));
    let mut gens = cand.frobenius_ideal().to_vec();
    let mut cofs: Vec<Polynomial> = rel.f().iter().map(|f| f.power(q)).collect();
    if !rel.quotient().is_empty() {
        // (Σ F_i G_i)^q = r^{q-1} Σ c_j Q_j where r = Σ c_j Q_j
        let r = rel.residual();
        let cert = membership(&r, rel.quotient(), &GbConfig::default())?;
        let cert = cert
            .certificate()
            .ok_or_else(|| Error::Internal("relation residual left the quotient ideal".into()))?;
        let r_pow = r.power(q - 1);
        gens.extend(rel.quotient().iter().cloned());
        cofs.extend(cert.cofactors().iter().map(|c| -(&r_pow * c)));
    }
    MembershipCertificate::new(target, gens, cofs, None)
}
