use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::binom::binom;
use super::{IdentityReport, Limits};
use crate::cohomology::{make_relation, RelationInstance};
use crate::error::{Error, Result};
use crate::groebner::{certificate_from_lift, CertificateJson, MembershipCertificate};
use crate::polyring::{PolyJson, Polynomial, RingSpec};

/// The unit `d` of the cleared identity: `d₀·t` with
/// `d₀ = lcm (2q-1-r)/gcd(q, 2q-1-r)` over `0 ≤ r ≤ q-1` and `t` least with
/// `d₀ t ≡ 1 (mod p)`.
pub fn compute_d(p: u64, e: u32) -> Result<BigInt> {
    let q = BigInt::from(crate::cohomology::prime_power(p, e)?);
    let two_q = &q * 2u32;
    let mut d0 = BigInt::one();
    let mut r = BigInt::zero();
    while r < q {
        let den: BigInt = &two_q - 1u32 - &r;
        d0 = d0.lcm(&(&den / den.gcd(&q)));
        r += 1u32;
    }
    let pb = BigInt::from(p);
    let unit = d0.mod_floor(&pb);
    let t = (1..p)
        .map(BigInt::from)
        .find(|t| (t * &unit).mod_floor(&pb).is_one())
        .ok_or_else(|| Error::Internal(format!("d₀ = {d0} is not a unit mod {p}")))?;
    Ok(d0 * t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PluckerCoefficient {
    pub r: u32,
    pub n: u32,
    pub value: String,
    pub residue: u64,
}

/// The cleared identity on the Plücker relation and the membership it
/// implies at `k = q-1`.
#[derive(Debug, Clone)]
pub struct PluckerWitness {
    pub p: u64,
    pub e: u32,
    pub q: u32,
    pub k: u32,
    pub d: BigInt,
    pub coefficients: Vec<PluckerCoefficient>,
    /// `Σ_i P_i^{2k+1} B_i`, expected to vanish.
    pub identity: IdentityReport,
    pub relation: RelationInstance,
    /// The `B_i`, a lift of the Frobenius terms.
    pub alpha: Vec<Polynomial>,
    pub certificate: MembershipCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct PluckerWitnessJson {
    pub p: u64,
    pub e: u32,
    pub q: u32,
    pub k: u32,
    pub d: String,
    pub coefficients: Vec<PluckerCoefficient>,
    pub identity_residual: PolyJson,
    pub congruences_hold: bool,
    pub certificate: CertificateJson,
}

impl PluckerWitness {
    /// `≡ 1 (mod p)` exactly at `(r, n) = (k, 0)`, `≡ 0` elsewhere.
    pub fn congruences_hold(&self) -> bool {
        self.coefficients.iter().all(|c| {
            let want = u64::from(c.r == self.k && c.n == 0);
            c.residue == want
        })
    }

    pub fn passed(&self) -> bool {
        self.identity.verdict && self.congruences_hold() && self.certificate.verify().is_ok()
    }

    pub fn to_json(&self) -> PluckerWitnessJson {
        PluckerWitnessJson {
            p: self.p,
            e: self.e,
            q: self.q,
            k: self.k,
            d: self.d.to_string(),
            coefficients: self.coefficients.clone(),
            identity_residual: self.identity.residual.to_json(),
            congruences_hold: self.congruences_hold(),
            certificate: self.certificate.to_json(),
        }
    }
}

/// Bound on the size of one `P_i^{2k+1} B_i`: the dense count in degree
/// `10k+4`, or the product of the factor sizes if smaller.
fn term_estimate(k: u32) -> f64 {
    let dense = super::cleared::homogeneous_terms(8, 10 * k as u64 + 4);
    let mut sparse = 0.0;
    for r in 0..=k {
        // (P_{i+1}P_{i+2})^r has at most C(r+3, 3) terms
        let pair = super::cleared::homogeneous_terms(4, r as u64);
        for n in 0..=r {
            sparse += (2 * k + 2 - r - n) as f64 * pair;
        }
    }
    dense.min(sparse * (2 * k + 2) as f64)
}

pub fn plucker_witness(p: u64, e: u32) -> Result<PluckerWitness> {
    plucker_witness_with(p, e, &Limits::default())
}

pub fn plucker_witness_with(p: u64, e: u32, limits: &Limits) -> Result<PluckerWitness> {
    let start = Instant::now();
    let q = crate::cohomology::prime_power(p, e)?;
    let k = q - 1;
    limits.admit(term_estimate(k), "Plücker identity")?;
    let d = compute_d(p, e)?;

    let ring = RingSpec::integers(&["s", "t", "u", "v", "w", "x", "y", "z"])?;
    let v = |name: &str| Polynomial::var(&ring, name).expect("known variable");
    let (s, t) = (v("s"), v("t"));
    let (u, vv, w, x, y, z) = (v("u"), v("v"), v("w"), v("x"), v("y"), v("z"));
    let delta = [&(&vv * &z) - &(&w * &y), &(&w * &x) - &(&u * &z), &(&u * &y) - &(&vv * &x)];
    let plk = [&(&u * &t) - &(&x * &s), &(&vv * &t) - &(&y * &s), &(&w * &t) - &(&z * &s)];
    let shift = [&w * &y, &u * &z, &vv * &x];

    let pb = BigInt::from(p);
    let kk = k as i64;
    let mut coefficients = Vec::new();
    let mut table = Vec::new();
    for r in 0..=k {
        let top = 2 * kk + 1 - r as i64;
        let lead = &d * BigInt::from(k + 1);
        if !lead.is_multiple_of(&BigInt::from(top)) {
            return Err(Error::Internal(format!("d(k+1) not divisible by {top}")));
        }
        let lead = lead / BigInt::from(top);
        for n in 0..=r {
            let c = &lead * binom(top, n as i64) * binom(kk - n as i64, (r - n) as i64);
            coefficients.push(PluckerCoefficient {
                r,
                n,
                value: c.to_string(),
                residue: c.mod_floor(&pb).try_into().expect("residue below p"),
            });
            table.push((r, n, c));
        }
    }

    let st = &s * &t;
    let mut alpha = Vec::with_capacity(3);
    for i in 0..3 {
        let pair = &plk[(i + 1) % 3] * &plk[(i + 2) % 3];
        let mut b = Polynomial::zero(&ring);
        for (r, n, c) in &table {
            if c.is_zero() {
                continue;
            }
            let mono = &(&st.power(k - r) * &shift[i].power(*n)) * &delta[i].power(2 * k + 1 - r - n);
            b = &b + &(&mono * &pair.power(*r)).scale(c);
        }
        alpha.push(b);
    }
    let residual = alpha
        .iter()
        .zip(&plk)
        .fold(Polynomial::zero(&ring), |acc, (b, g)| &acc + &(b * &g.power(2 * k + 1)));
    let mut identity = IdentityReport::new("plucker", residual, start);
    identity.param("p", p);
    identity.param("e", e);
    identity.param("k", k);
    identity.note("d", &d);

    let relation = make_relation(delta.to_vec(), plk.to_vec())?;
    let certificate = certificate_from_lift(&alpha, &relation, p, e, k)?;
    identity.side_check("certificate", certificate.verify().is_ok());
    identity.elapsed_ms = start.elapsed().as_millis();
    Ok(PluckerWitness { p, e, q, k, d, coefficients, identity, relation, alpha, certificate })
}
