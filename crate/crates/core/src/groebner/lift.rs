use num_bigint::BigInt;

use super::MembershipCertificate;
use crate::cohomology::{lambda_q, RelationInstance};
use crate::error::{Error, Result};
use crate::polyring::Polynomial;

/// `F_i^q (∏_{j≠i} G_j)^k` for every i.
fn frobenius_terms(rel: &RelationInstance, q: u32, k: u32) -> Vec<Polynomial> {
    (0..rel.n())
        .map(|i| &rel.f()[i].power(q) * &rel.g_product_except(i).power(k))
        .collect()
}

fn check_lift(rel: &RelationInstance, alpha: &[Polynomial], q: u32, k: u32, p: u64) -> Result<()> {
    let ring = rel.ring();
    let sum = alpha
        .iter()
        .zip(rel.g())
        .fold(Polynomial::zero(ring), |acc, (a, g)| &acc + &(a * &g.power(q + k)));
    if !sum.is_zero() {
        return Err(Error::CertificateInvalid(format!(
            "lifted cofactors leave Σ α_i G_i^(q+k) with {} terms",
            sum.num_terms()
        )));
    }
    for (i, (a, f)) in alpha.iter().zip(frobenius_terms(rel, q, k)).enumerate() {
        if !(a - &f).is_zero_mod(p) {
            return Err(Error::CertificateInvalid(format!("α_{} is not congruent to its Frobenius term mod {p}", i + 1)));
        }
    }
    Ok(())
}

fn check_membership_shape(cert: &MembershipCertificate, rel: &RelationInstance, gens: &[Polynomial], target: &Polynomial) -> Result<()> {
    if cert.modulus().is_some() {
        return Err(Error::CertificateInvalid("lifting needs an exact integer certificate".into()));
    }
    if cert.generators() != gens || cert.target() != target {
        return Err(Error::CertificateInvalid(
            "certificate is not for λ_q·(G_1⋯G_n)^k against G_i^(q+k)".into(),
        ));
    }
    if !rel.quotient().is_empty() {
        return Err(Error::CertificateInvalid("relation lifting is defined for polynomial rings only".into()));
    }
    cert.verify()
}

/// Turns a membership certificate `λ_q (G_1⋯G_n)^k = Σ h_i G_i^{q+k}` into a
/// relation `Σ α_i G_i^{q+k} = 0` with `α_i ≡ F_i^q ∏_{j≠i} G_j^k (mod p)`,
/// via `α_i = F_i^q ∏_{j≠i} G_j^k - p h_i`.
pub fn lift_relation(cert: &MembershipCertificate, rel: &RelationInstance, p: u64, e: u32, k: u32) -> Result<Vec<Polynomial>> {
    let cand = lambda_q(rel, p, e)?;
    let q = cand.q();
    check_membership_shape(cert, rel, &cand.ideal(k), &cand.target(k))?;
    let pb = BigInt::from(p);
    let alpha: Vec<Polynomial> = frobenius_terms(rel, q, k)
        .into_iter()
        .zip(cert.cofactors())
        .map(|(f, h)| &f - &h.scale(&pb))
        .collect();
    check_lift(rel, &alpha, q, k, p)?;
    Ok(alpha)
}

/// The converse: from a lifted relation `α` recover the membership
/// certificate with `h_i = (F_i^q ∏_{j≠i} G_j^k - α_i) / p`.
pub fn certificate_from_lift(alpha: &[Polynomial], rel: &RelationInstance, p: u64, e: u32, k: u32) -> Result<MembershipCertificate> {
    if alpha.len() != rel.n() {
        return Err(Error::WrongArity { expected: rel.n(), actual: alpha.len() });
    }
    if !rel.quotient().is_empty() {
        return Err(Error::CertificateInvalid("relation lifting is defined for polynomial rings only".into()));
    }
    let cand = lambda_q(rel, p, e)?;
    let q = cand.q();
    check_lift(rel, alpha, q, k, p)?;
    let pb = BigInt::from(p);
    let cofs = frobenius_terms(rel, q, k)
        .into_iter()
        .zip(alpha)
        .map(|(f, a)| (&f - a).exact_div_int(&pb))
        .collect::<Result<Vec<_>>>()?;
    MembershipCertificate::new(cand.target(k), cand.ideal(k), cofs, None)
}
