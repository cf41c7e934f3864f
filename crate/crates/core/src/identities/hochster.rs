use std::time::Instant;

use num_bigint::BigInt;

use super::binom::{binom, sign};
use super::{IdentityReport, Limits};
use crate::cohomology::{lambda_q, parse_relation, RelationInstance};
use crate::error::{Error, Result};
use crate::groebner::{certificate_from_lift, MembershipCertificate};
use crate::polyring::{Polynomial, RingSpec};

fn hochster_relation() -> Result<RelationInstance> {
    let ring = RingSpec::integers(&["u", "v", "w", "x", "y", "z"])?;
    parse_relation(&ring, &["u", "v", "w"], &["v*z - w*y", "w*x - u*z", "u*y - v*x"])
}

/// The cofactors `c_i` with `Σ Δ_i^{2k+1} c_i = 0`; line 1 is
/// `u^{k+1} Σ_n C(k,n) x^n Σ_i (-1)^i C(k+i,k) C(k+n-i,k) w^i v^{n-i} Δ₂^{k-i} Δ₃^{k-n+i}`
/// and the other two are its cyclic shifts.
fn mu_cofactors(rel: &RelationInstance, k: u32) -> Vec<Polynomial> {
    let ring = rel.ring();
    let v = |name: &str| Polynomial::var(ring, name).expect("known variable");
    let (u, vv, w, x, y, z) = (v("u"), v("v"), v("w"), v("x"), v("y"), v("z"));
    let d = rel.g();
    // (lead, multiplier, left, right, next Δ, after-next Δ)
    let lines = [
        (&u, &x, &w, &vv, &d[1], &d[2]),
        (&vv, &y, &u, &w, &d[2], &d[0]),
        (&w, &z, &vv, &u, &d[0], &d[1]),
    ];
    let ki = k as i64;
    lines
        .iter()
        .map(|(lead, mult, left, right, d_a, d_b)| {
            let mut outer = Polynomial::zero(ring);
            for n in 0..=k {
                let mut inner = Polynomial::zero(ring);
                for i in 0..=n {
                    let c = sign(i as i64) * binom(ki + i as i64, ki) * binom(ki + (n - i) as i64, ki);
                    let mono = &(&left.power(i) * &right.power(n - i)) * &(&d_a.power(k - i) * &d_b.power(k - n + i));
                    inner = &inner + &mono.scale(&c);
                }
                outer = &outer + &(&mult.power(n) * &inner).scale(&binom(ki, n as i64));
            }
            &lead.power(k + 1) * &outer
        })
        .collect()
}

/// Bound on the size of one summand `Δ_i^{2k+1} c_i`: the dense count in
/// degree `9k+3`, or the product of the binomial factor sizes if smaller.
fn term_estimate(k: u32) -> f64 {
    let dense = super::cleared::homogeneous_terms(6, 9 * k as u64 + 3);
    let k = k as f64;
    let mut sparse = 0.0;
    for n in 0..=k as u32 {
        for i in 0..=n {
            sparse += (k - i as f64 + 1.0) * (k - (n - i) as f64 + 1.0);
        }
    }
    dense.min(sparse * (2.0 * k + 2.0))
}

/// The triple-sum identity `Σ_i Δ_i^{2k+1} c_i = 0` in `ℤ[u,v,w,x,y,z]`.
pub fn hochster_gamma(k: u32) -> Result<IdentityReport> {
    hochster_gamma_with(k, &Limits::default())
}

pub fn hochster_gamma_with(k: u32, limits: &Limits) -> Result<IdentityReport> {
    let start = Instant::now();
    limits.admit(term_estimate(k), "Hochster identity")?;
    let rel = hochster_relation()?;
    let cofs = mu_cofactors(&rel, k);
    let residual = cofs
        .iter()
        .zip(rel.g())
        .fold(Polynomial::zero(rel.ring()), |acc, (c, g)| &acc + &(c * &g.power(2 * k + 1)));
    let mut report = IdentityReport::new("hochster", residual, start);
    report.param("k", k);
    Ok(report)
}

/// The identity at `k = q-1` read mod p and as an exact lift.
#[derive(Debug, Clone)]
pub struct HochsterLift {
    pub k: u32,
    /// `Σ (F_iΔ_i)^q (Δ₁Δ₂Δ₃)^k ≡ Σ c_i Δ_i^{2k+1} (mod p)`.
    pub modular: MembershipCertificate,
    /// The `c_i`; each is `≡ F_i^q (∏_{j≠i} Δ_j)^k (mod p)`.
    pub alpha: Vec<Polynomial>,
    /// `λ_q (Δ₁Δ₂Δ₃)^k ∈ (Δ_i^{q+k})` over ℤ, recovered from the lift.
    pub exact: MembershipCertificate,
}

pub fn hochster_mu_lift(p: u64, e: u32) -> Result<HochsterLift> {
    hochster_mu_lift_with(p, e, &Limits::default())
}

pub fn hochster_mu_lift_with(p: u64, e: u32, limits: &Limits) -> Result<HochsterLift> {
    let rel = hochster_relation()?;
    let cand = lambda_q(&rel, p, e)?;
    let q = cand.q();
    let k = q - 1;
    limits.admit(term_estimate(k), "Hochster identity")?;
    let alpha = mu_cofactors(&rel, k);
    for (i, c) in alpha.iter().enumerate() {
        let frob = &rel.f()[i].power(q) * &rel.g_product_except(i).power(k);
        if !(c - &frob).is_zero_mod(p) {
            return Err(Error::Internal(format!("c_{} is not the Frobenius term mod {p}", i + 1)));
        }
    }
    let target = &cand.lambda().scale(&BigInt::from(p)) * &rel.g_product().power(k);
    let modular = MembershipCertificate::new(target, cand.ideal(k), alpha.clone(), Some(p))?;
    let exact = certificate_from_lift(&alpha, &rel, p, e, k)?;
    Ok(HochsterLift { k, modular, alpha, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k0_is_the_defining_relation() {
        let rel = hochster_relation().unwrap();
        let c = mu_cofactors(&rel, 0);
        assert_eq!(c, rel.f().to_vec());
        assert!(hochster_gamma(0).unwrap().verdict);
    }

    #[test]
    fn small_k() {
        for k in 1..=2 {
            assert!(hochster_gamma(k).unwrap().passed(), "k={k}");
        }
    }

    #[test]
    fn lift_p2() {
        let lift = hochster_mu_lift(2, 1).unwrap();
        assert_eq!(lift.k, 1);
        assert!(lift.modular.verify().is_ok());
        assert!(lift.exact.verify().is_ok());
        assert_eq!(lift.modular.modulus(), Some(2));
    }
}
