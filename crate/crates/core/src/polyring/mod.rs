//! Sparse multivariate polynomials over ℤ and 𝔽_p.
//!
//! A [`RingSpec`] fixes the variable list, the coefficient domain and the
//! monomial order. Every [`Polynomial`] holds a shared handle to its ring and
//! keeps its terms sorted descending in that ring's order with no zero
//! coefficients, so structural equality is mathematical equality.

mod json;
mod monomial;
mod parse;
mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use json::PolyJson;
pub use monomial::Monomial;
pub use poly::{arith, ArithKind, Polynomial, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    Integers,
    PrimeField(u64),
}

impl CoefficientDomain {
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            CoefficientDomain::Integers => None,
            CoefficientDomain::PrimeField(p) => Some(*p),
        }
    }
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::Integers => write!(f, "ZZ"),
            CoefficientDomain::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents().cmp(b.exponents())),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // the monomial with the smaller exponent in the last differing
                // variable is the larger one
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Variable names, coefficient domain and monomial order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    variables: Vec<String>,
    domain: CoefficientDomain,
    order: MonomialOrder,
}

/// Shared handle to a ring; cloning is cheap.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new<S: AsRef<str>>(
        variables: &[S],
        domain: CoefficientDomain,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let CoefficientDomain::PrimeField(p) = domain {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(Arc::new(RingSpec { variables, domain, order }))
    }

    /// ℤ[vars] under DEGREVLEX.
    pub fn integers<S: AsRef<str>>(variables: &[S]) -> Result<Ring> {
        Self::new(variables, CoefficientDomain::Integers, MonomialOrder::DegRevLex)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn domain(&self) -> CoefficientDomain {
        self.domain
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_integral(&self) -> bool {
        self.domain == CoefficientDomain::Integers
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn with_domain(&self, domain: CoefficientDomain) -> Result<Ring> {
        Self::new(&self.variables, domain, self.order)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::new(&self.variables, self.domain, order)
    }

    /// Appends fresh variables; a name already in the ring is an error.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut vars = self.variables.clone();
        for v in extra {
            let v = v.as_ref();
            if vars.iter().any(|w| w == v) {
                return Err(Error::InvalidRing(format!("variable `{v}` already present")));
            }
            vars.push(v.to_string());
        }
        Self::new(&vars, self.domain, self.order)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Brings an integer into canonical form for this ring's domain.
    pub fn normalize(&self, c: BigInt) -> BigInt {
        match self.domain {
            CoefficientDomain::Integers => c,
            CoefficientDomain::PrimeField(p) => c.mod_floor(&BigInt::from(p)),
        }
    }

    /// Inverse of a nonzero residue in 𝔽_p.
    pub fn inverse(&self, c: &BigInt) -> Option<BigInt> {
        let p = BigInt::from(self.domain.characteristic()?);
        let c = c.mod_floor(&p);
        if c.is_zero() {
            return None;
        }
        let ext = c.extended_gcd(&p);
        Some(ext.x.mod_floor(&p))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({:?})", self.domain, self.variables.join(","), self.order)
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Deterministic primality by trial division; inputs here are small primes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
