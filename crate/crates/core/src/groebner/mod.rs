//! Gröbner bases over prime fields and strong Gröbner bases over ℤ.
//!
//! Over ℤ membership is coefficient sensitive: `x ∈ (2x, 3x)` but
//! `x ∉ (2x)`, so the integer case completes with both S-polynomials and
//! gcd-polynomials and reduces a term only when the leading coefficient of
//! the reducer divides it. Every reduction records quotients, which makes
//! every positive membership answer carry explicit cofactors.

mod certificate;
mod engine;
mod grading;
mod lift;

use crate::error::{Error, Result};
use crate::polyring::{same_ring, Polynomial, Ring};

pub use certificate::{CertificateJson, MembershipCertificate};
pub use grading::Grading;
pub use lift::{certificate_from_lift, lift_relation};

use engine::{Engine, Truncation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbConfig {
    pub max_pairs: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub max_reduction_steps: usize,
    /// Stop the completion at the target's multidegree when the generators
    /// are homogeneous (membership only).
    pub truncate: bool,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 500_000,
            max_degree: 400,
            max_terms: 5_000_000,
            max_reduction_steps: 50_000_000,
            truncate: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisDomain {
    Field,
    IntegerRing,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    representations: Vec<Vec<Polynomial>>,
    domain: BasisDomain,
    truncation: Option<Truncation>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn domain(&self) -> BasisDomain {
        self.domain
    }

    /// Cofactors expressing `basis()[i]` over `generators()`.
    pub fn representation(&self, i: usize) -> &[Polynomial] {
        &self.representations[i]
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.is_some()
    }

    fn engine<'a>(&'a self, config: &'a GbConfig) -> Engine<'a> {
        let mut e = Engine::new(&self.ring, self.generators.len(), config, self.truncation.as_ref());
        e.load(&self.basis, &self.representations);
        e
    }

    /// Remainder of `f` plus cofactors with `f = remainder + Σ cof_j * generator_j`.
    pub fn reduce_with_cofactors(&self, f: &Polynomial, config: &GbConfig) -> Result<(Polynomial, Vec<Polynomial>)> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch(format!("{} vs {}", f.ring(), self.ring)));
        }
        if let Some(t) = &self.truncation {
            if let Some((m, _)) = f.terms().iter().find(|(m, _)| !t.admits(m)) {
                return Err(Error::ResourceBound(format!(
                    "basis truncated below the degree of term {}",
                    Polynomial::monomial(&self.ring, m.clone(), 1)
                )));
            }
        }
        let engine = self.engine(config);
        let (rem, quots) = engine.reduce(f, true, None)?;
        Ok((rem, engine.expand_quotients(&quots)))
    }
}

fn check_inputs(gens: &[Polynomial], ring: &Ring) -> Result<()> {
    for g in gens {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch(format!("generator in {} but ring is {}", g.ring(), ring)));
        }
    }
    Ok(())
}

fn compute(gens: &[Polynomial], ring: &Ring, config: &GbConfig, truncation: Option<Truncation>) -> Result<GroebnerBasis> {
    check_inputs(gens, ring)?;
    let mut engine = Engine::new(ring, gens.len(), config, truncation.as_ref());
    for (i, g) in gens.iter().enumerate() {
        engine.add_generator(i, g)?;
    }
    engine.complete()?;
    engine.interreduce()?;
    let (basis, representations) = engine.into_basis().into_iter().map(|e| (e.poly, e.cof)).unzip();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        generators: gens.to_vec(),
        basis,
        representations,
        domain: if ring.is_integral() { BasisDomain::IntegerRing } else { BasisDomain::Field },
        truncation,
    })
}

/// Reduced Gröbner basis over a prime field.
pub fn buchberger(gens: &[Polynomial], ring: &Ring, config: &GbConfig) -> Result<GroebnerBasis> {
    if ring.is_integral() {
        return Err(Error::DomainMismatch { expected: "GF(p)" });
    }
    compute(gens, ring, config, None)
}

/// Strong Gröbner basis over ℤ. The ring is taken from the generators.
pub fn strong_gb_z(gens: &[Polynomial], config: &GbConfig) -> Result<GroebnerBasis> {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::InvalidRing("no generators".into()))?;
    if !ring.is_integral() {
        return Err(Error::DomainMismatch { expected: "ZZ" });
    }
    compute(gens, &ring, config, None)
}

/// Remainder of `f` against `gb`; zero exactly when `f` is in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    Ok(gb.reduce_with_cofactors(f, &GbConfig::default())?.0)
}

#[derive(Debug, Clone)]
pub enum Membership {
    Member(MembershipCertificate),
    NotMember,
}

impl Membership {
    pub fn certificate(&self) -> Option<&MembershipCertificate> {
        match self {
            Membership::Member(c) => Some(c),
            Membership::NotMember => None,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Decides `f ∈ (gens)` over the coefficient domain of `f`'s ring.
///
/// A resource cap surfaces as `Err(ResourceBound)`; it is never turned into a
/// negative answer.
pub fn membership(f: &Polynomial, gens: &[Polynomial], config: &GbConfig) -> Result<Membership> {
    let ring = f.ring().clone();
    check_inputs(gens, &ring)?;
    if f.is_zero() {
        let cof = vec![Polynomial::zero(&ring); gens.len()];
        return Ok(Membership::Member(MembershipCertificate::new(f.clone(), gens.to_vec(), cof, None)?));
    }
    let truncation = if config.truncate {
        Grading::detect(gens).map(|grading| {
            let bound = grading.bound_for(f);
            Truncation { grading, bound }
        })
    } else {
        None
    };
    let gb = compute(gens, &ring, config, truncation)?;
    let (rem, cof) = gb.reduce_with_cofactors(f, config)?;
    if !rem.is_zero() {
        return Ok(Membership::NotMember);
    }
    let cert = MembershipCertificate::new(f.clone(), gens.to_vec(), cof, None)
        .map_err(|e| Error::Internal(format!("cofactor tracking produced a bad certificate: {e}")))?;
    Ok(Membership::Member(cert))
}

#[cfg(test)]
mod tests;
