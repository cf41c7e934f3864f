use num_bigint::BigInt;
use num_integer::binomial;

use super::{lambda_q, make_relation, RelationInstance};
use crate::error::{Error, Result};
use crate::groebner::MembershipCertificate;
use crate::polyring::{same_ring, Polynomial};

/// For `n = 2`: `λ_q = (F_1G_1)^q` when `p = 2` and `0` otherwise, with the
/// certificate `(F_1^q, 0)` against `(G_1^q, G_2^q)` at `k = 0`.
pub fn n2_closed_form(rel: &RelationInstance, p: u64, e: u32) -> Result<(Polynomial, MembershipCertificate)> {
    if rel.n() != 2 {
        return Err(Error::WrongArity { expected: 2, actual: rel.n() });
    }
    if !rel.quotient().is_empty() {
        return Err(Error::InvalidRing("closed form needs a relation in the polynomial ring".into()));
    }
    let cand = lambda_q(rel, p, e)?;
    let q = cand.q();
    let ring = rel.ring();
    let (lambda, cof0) = if p == 2 {
        ((&rel.f()[0] * &rel.g()[0]).power(q), rel.f()[0].power(q))
    } else {
        (Polynomial::zero(ring), Polynomial::zero(ring))
    };
    let cert = MembershipCertificate::new(
        lambda.clone(),
        cand.frobenius_ideal().to_vec(),
        vec![cof0, Polynomial::zero(ring)],
        None,
    )?;
    if &lambda != cand.lambda() {
        return Err(Error::Internal("closed form disagrees with the power sum".into()));
    }
    Ok((lambda, cert))
}

/// The relation `G_j·G_i - G_i·G_j = 0` on the whole list `G`, indices 0-based.
pub fn koszul_relation(g: &[Polynomial], i: usize, j: usize) -> Result<RelationInstance> {
    let n = g.len();
    if i == j || i >= n || j >= n {
        return Err(Error::IndexError(format!("need distinct indices below {n}, got {i} and {j}")));
    }
    let ring = g[0].ring();
    let mut f = vec![Polynomial::zero(ring); n];
    f[i] = g[j].clone();
    f[j] = -&g[i];
    make_relation(f, g.to_vec())
}

/// Certificate at `k = 0` for the Koszul relation at `(i, j)`: the two-term
/// closed form placed at positions `i` and `j`.
pub fn koszul_certificate(g: &[Polynomial], i: usize, j: usize, p: u64, e: u32) -> Result<(u32, MembershipCertificate)> {
    let rel = koszul_relation(g, i, j)?;
    let pair = make_relation(vec![rel.f()[i].clone(), rel.f()[j].clone()], vec![g[i].clone(), g[j].clone()])?;
    let (lambda, small) = n2_closed_form(&pair, p, e)?;
    let cand = lambda_q(&rel, p, e)?;
    let ring = rel.ring();
    let mut cofs = vec![Polynomial::zero(ring); g.len()];
    cofs[i] = small.cofactors()[0].clone();
    cofs[j] = small.cofactors()[1].clone();
    let cert = MembershipCertificate::new(lambda, cand.frobenius_ideal().to_vec(), cofs, None)?;
    Ok((0, cert))
}

/// Result of combining two certified relations on the same `G`.
#[derive(Debug, Clone)]
pub struct Combination {
    /// `Σ (s E_i + t F_i) G_i = 0` over the ring extended by `s, t`.
    pub relation: RelationInstance,
    pub k: u32,
    pub certificate: MembershipCertificate,
}

/// Combines certificates for `E` at `k₁` and `F` at `k₂` into one for
/// `sE + tF` at `max(k₁, k₂)`, with fresh variables `s` and `t`.
pub fn combine_sum(
    rel_e: &RelationInstance,
    rel_f: &RelationInstance,
    cert_e: (u32, &MembershipCertificate),
    cert_f: (u32, &MembershipCertificate),
    p: u64,
    e: u32,
) -> Result<Combination> {
    combine_sum_with(rel_e, rel_f, cert_e, cert_f, p, e, ["s", "t"])
}

/// [`combine_sum`] with chosen names for the two fresh variables.
pub fn combine_sum_with(
    rel_e: &RelationInstance,
    rel_f: &RelationInstance,
    cert_e: (u32, &MembershipCertificate),
    cert_f: (u32, &MembershipCertificate),
    p: u64,
    e: u32,
    names: [&str; 2],
) -> Result<Combination> {
    if !same_ring(rel_e.ring(), rel_f.ring()) || rel_e.g() != rel_f.g() {
        return Err(Error::IncompatibleRelations("relations must share the ring and the list G".into()));
    }
    if !rel_e.quotient().is_empty() || !rel_f.quotient().is_empty() {
        return Err(Error::IncompatibleRelations("quotient presentations are not combined".into()));
    }
    let cand_e = lambda_q(rel_e, p, e)?;
    let cand_f = lambda_q(rel_f, p, e)?;
    let q = cand_e.q();
    let n = rel_e.n();
    for (cand, (k, cert)) in [(&cand_e, cert_e), (&cand_f, cert_f)] {
        if cert.modulus().is_some() || cert.generators() != cand.ideal(k).as_slice() || cert.target() != &cand.target(k) {
            return Err(Error::CertificateInvalid(format!(
                "certificate does not prove λ_q·(G_1⋯G_n)^{k} ∈ (G_i^(q+{k}))"
            )));
        }
        cert.verify()?;
    }
    let k = cert_e.0.max(cert_f.0);

    let ring = rel_e.ring().extended(&names)?;
    let emb = |v: &[Polynomial]| v.iter().map(|x| x.embed(&ring)).collect::<Result<Vec<_>>>();
    let (ee, ff, gg) = (emb(rel_e.f())?, emb(rel_f.f())?, emb(rel_e.g())?);
    let s = Polynomial::var(&ring, names[0])?;
    let t = Polynomial::var(&ring, names[1])?;
    let h: Vec<Polynomial> = ee.iter().zip(&ff).map(|(a, b)| &(&s * a) + &(&t * b)).collect();
    let relation = make_relation(h, gg.clone())?;
    let cand = lambda_q(&relation, p, e)?;

    let others = |i: usize, pow: u32| {
        gg.iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(Polynomial::one(&ring), |acc, (_, g)| &acc * &g.power(pow))
    };
    let (sq, tq) = (s.power(q), t.power(q));
    let pb = BigInt::from(p);
    let mut cofs = Vec::with_capacity(n);
    for i in 0..n {
        let he = cert_e.1.cofactors()[i].embed(&ring)?;
        let hf = cert_f.1.cofactors()[i].embed(&ring)?;
        let mut c = &(&sq * &he) * &others(i, k - cert_e.0);
        c = &c + &(&(&tq * &hf) * &others(i, k - cert_f.0));
        let mut cross = Polynomial::zero(&ring);
        for j in 1..q {
            let coeff = binomial(BigInt::from(q), BigInt::from(j)) / &pb;
            let term = &(&s.power(j) * &t.power(q - j)) * &(&ee[i].power(j) * &ff[i].power(q - j));
            cross = &cross + &term.scale(&coeff);
        }
        c = &c + &(&cross * &others(i, k));
        cofs.push(c);
    }
    let certificate = MembershipCertificate::new(cand.target(k), cand.ideal(k), cofs, None)?;
    Ok(Combination { relation, k, certificate })
}
