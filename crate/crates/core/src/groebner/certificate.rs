use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{same_ring, Polynomial, PolyJson, Ring, RingSpec};

/// Explicit cofactors with `Σ cofactor_i * generator_i = target`, or the same
/// congruence modulo `modulus` when one is given.
///
/// Construction re-verifies the identity by plain arithmetic, so a value of
/// this type is always a checked proof.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipCertificate {
    target: Polynomial,
    generators: Vec<Polynomial>,
    cofactors: Vec<Polynomial>,
    modulus: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub target: PolyJson,
    pub generators: Vec<PolyJson>,
    pub cofactors: Vec<PolyJson>,
    pub modulus: Option<u64>,
    pub verified: bool,
}

/// `Σ a_i * b_i`, products computed in parallel and summed in index order.
pub(crate) fn dot(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Polynomial {
    let products: Vec<Polynomial> = a
        .par_iter()
        .zip(b.par_iter())
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .collect();
    products.iter().fold(Polynomial::zero(ring), |acc, p| &acc + p)
}

impl MembershipCertificate {
    pub fn new(
        target: Polynomial,
        generators: Vec<Polynomial>,
        cofactors: Vec<Polynomial>,
        modulus: Option<u64>,
    ) -> Result<Self> {
        let cert = MembershipCertificate { target, generators, cofactors, modulus };
        cert.verify()?;
        Ok(cert)
    }

    pub fn target(&self) -> &Polynomial {
        &self.target
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn cofactors(&self) -> &[Polynomial] {
        &self.cofactors
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn ring(&self) -> &Ring {
        self.target.ring()
    }

    /// `Σ cofactor_i * generator_i - target`.
    pub fn residual(&self) -> Polynomial {
        let ring = self.target.ring();
        &dot(ring, &self.cofactors, &self.generators) - &self.target
    }

    pub fn verify(&self) -> Result<()> {
        let ring = self.target.ring();
        if self.generators.len() != self.cofactors.len() {
            return Err(Error::CertificateInvalid(format!(
                "{} generators but {} cofactors",
                self.generators.len(),
                self.cofactors.len()
            )));
        }
        if let Some(p) = self.modulus {
            if !ring.is_integral() {
                return Err(Error::CertificateInvalid("modular certificates carry integer polynomials".into()));
            }
            if !crate::polyring::is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        for g in self.generators.iter().chain(&self.cofactors) {
            if !same_ring(g.ring(), ring) {
                return Err(Error::CertificateInvalid(format!("polynomial in {} but target in {}", g.ring(), ring)));
            }
        }
        let residual = self.residual();
        let ok = match self.modulus {
            None => residual.is_zero(),
            Some(p) => residual.is_zero_mod(p),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::CertificateInvalid(format!(
                "recomposition leaves a residual with {} terms",
                residual.num_terms()
            )))
        }
    }

    /// Re-expresses every polynomial in `ring` (matched by variable name)
    /// and re-verifies.
    pub fn embed(&self, ring: &Ring) -> Result<MembershipCertificate> {
        let conv = |v: &[Polynomial]| v.iter().map(|p| p.embed(ring)).collect::<Result<Vec<_>>>();
        MembershipCertificate::new(self.target.embed(ring)?, conv(&self.generators)?, conv(&self.cofactors)?, self.modulus)
    }

    /// Field certificates are written as integer representatives with the
    /// characteristic as modulus.
    pub fn to_json(&self) -> CertificateJson {
        let (lift, modulus) = match self.target.ring().domain().characteristic() {
            Some(p) => (true, Some(p)),
            None => (false, self.modulus),
        };
        let enc = |p: &Polynomial| {
            if lift {
                p.lift_to_integers().expect("field ring lifts").to_json()
            } else {
                p.to_json()
            }
        };
        CertificateJson {
            target: enc(&self.target),
            generators: self.generators.iter().map(enc).collect(),
            cofactors: self.cofactors.iter().map(enc).collect(),
            modulus,
            verified: true,
        }
    }

    /// Loads into ℤ[target vars] (DEGREVLEX) and re-verifies.
    pub fn from_json(json: &CertificateJson) -> Result<MembershipCertificate> {
        let ring = RingSpec::integers(&json.target.vars)?;
        Self::from_json_in(json, &ring)
    }

    pub fn from_json_in(json: &CertificateJson, ring: &Ring) -> Result<MembershipCertificate> {
        let dec = |v: &[PolyJson]| v.iter().map(|p| Polynomial::from_json(p, ring)).collect::<Result<Vec<_>>>();
        MembershipCertificate::new(
            Polynomial::from_json(&json.target, ring)?,
            dec(&json.generators)?,
            dec(&json.cofactors)?,
            json.modulus,
        )
    }
}
