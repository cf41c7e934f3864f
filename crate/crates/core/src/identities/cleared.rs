use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::binom::{binom, sign};
use super::lemmas::lemma1_term;
use super::{IdentityReport, Limits};
use crate::error::Result;
use crate::polyring::{Polynomial, Ring, RingSpec};

/// `lcm{2k+1-r : 0 ≤ r ≤ k}`.
pub fn clearing_denominator(k: u32) -> BigInt {
    (0..=k).fold(BigInt::one(), |acc, r| acc.lcm(&BigInt::from(2 * k + 1 - r)))
}

struct Vars {
    ring: Ring,
}

impl Vars {
    fn new(names: &[&str]) -> Vars {
        Vars { ring: RingSpec::integers(names).expect("valid names") }
    }

    fn v(&self, name: &str) -> Polynomial {
        Polynomial::var(&self.ring, name).expect("known variable")
    }
}

/// One side of the asymmetric identity at `(T, Y, Z)`, multiplied by
/// `scale`, as the double sum over `(r, n)`.
fn asym_lhs(k: u32, t: &Polynomial, y: &Polynomial, z: &Polynomial, scale: &BigInt) -> Polynomial {
    let ring = t.ring();
    let ki = k as i64;
    let (ty, yz) = (t - y, y - z);
    let yz_prod = y * z;
    let mut acc = Polynomial::zero(ring);
    for r in 0..=k {
        let den = BigInt::from(2 * k + 1 - r);
        let mut inner = Polynomial::zero(ring);
        for n in 0..=r {
            let c = binom(2 * ki + 1 - r as i64, n as i64) * binom(ki - n as i64, (r - n) as i64);
            if c.is_zero() {
                continue;
            }
            let term = &ty.power(n) * &yz.power(2 * k + 1 - r - n);
            inner = &inner + &term.scale(&c);
        }
        let factor = &t.power(k - r) * &yz_prod.power(r);
        acc = &acc + &(&inner * &factor).scale(&(scale / &den));
    }
    acc
}

/// The right side `Σ_s (-1)^s C(k,s) T^{k-s}/(2k+1-s) (Y^{2k+1}Z^s - Z^{2k+1}Y^s)`
/// times `scale`.
fn asym_rhs(k: u32, t: &Polynomial, y: &Polynomial, z: &Polynomial, scale: &BigInt) -> Polynomial {
    let ring = t.ring();
    let mut acc = Polynomial::zero(ring);
    let (y_top, z_top) = (y.power(2 * k + 1), z.power(2 * k + 1));
    for s in 0..=k {
        let c = sign(s as i64) * binom(k as i64, s as i64) * (scale / BigInt::from(2 * k + 1 - s));
        let bracket = &(&y_top * &z.power(s)) - &(&z_top * &y.power(s));
        acc = &acc + &(&t.power(k - s) * &bracket).scale(&c);
    }
    acc
}

pub(super) fn homogeneous_terms(nvars: u64, degree: u64) -> f64 {
    // C(degree + nvars - 1, nvars - 1)
    (1..nvars).fold(1.0, |acc, i| acc * (degree + i) as f64 / i as f64)
}

/// `γ_{m,s}` from the coefficient comparison, as an exact rational.
pub fn gamma(m: i64, s: i64, k: i64) -> BigRational {
    let mut acc = BigRational::zero();
    for r in s..=k {
        let inner: BigInt = (r - s..=r).map(|n| lemma1_term(m, s, r, k, n)).sum();
        // inner sum is over C(k-n, r-n) = C(k-n, k-r) for the ranges used here
        let num = sign(m + 1) * binom(m, r - s) * binom(2 * k + 1 - r, m) * inner;
        acc += BigRational::new(num, BigInt::from(2 * k + 1 - r));
    }
    acc
}

/// The value `γ_{m,s}` must take: `∓C(k,s)/(2k+1-s)` at `m = 0` and
/// `m = 2k+1-s`, zero otherwise.
pub fn gamma_expected(m: i64, s: i64, k: i64) -> BigRational {
    let base = BigRational::new(binom(k, s), BigInt::from(2 * k + 1 - s));
    if m == 0 {
        -base
    } else if m == 2 * k + 1 - s {
        base
    } else {
        BigRational::zero()
    }
}

/// Residuals of the coefficient comparison over all `0 ≤ s ≤ k`,
/// `0 ≤ m ≤ 2k+1-s`: the sum of `|L·(γ - expected)|` (integral) and the
/// number of uncleared rational mismatches.
fn gamma_residuals(k: u32) -> (BigInt, usize) {
    let l = BigRational::from_integer(clearing_denominator(k));
    let k = k as i64;
    let mut cleared = BigInt::zero();
    let mut uncleared = 0;
    for s in 0..=k {
        for m in 0..=2 * k + 1 - s {
            let diff = gamma(m, s, k) - gamma_expected(m, s, k);
            let scaled = &diff * &l;
            debug_assert!(scaled.is_integer());
            cleared += scaled.to_integer().abs();
            if !diff.is_zero() {
                uncleared += 1;
            }
        }
    }
    (cleared, uncleared)
}

/// Both sides of the asymmetric identity in `ℤ[T,Y,Z]`, cleared by
/// `L = lcm{2k+1-r}`; also the coefficient-level values `γ_{m,s}`.
pub fn lemma_asym_check(k: u32) -> Result<IdentityReport> {
    lemma_asym_check_with(k, &Limits::default())
}

pub fn lemma_asym_check_with(k: u32, limits: &Limits) -> Result<IdentityReport> {
    let start = Instant::now();
    limits.admit(homogeneous_terms(3, 3 * k as u64 + 1), "asymmetric identity")?;
    let vars = Vars::new(&["T", "Y", "Z"]);
    let (t, y, z) = (vars.v("T"), vars.v("Y"), vars.v("Z"));
    let l = clearing_denominator(k);
    let residual = &asym_lhs(k, &t, &y, &z, &l) - &asym_rhs(k, &t, &y, &z, &l);
    let (gamma_cleared, gamma_uncleared) = gamma_residuals(k);
    let mut report = IdentityReport::new("asym", residual, start);
    report.param("k", k);
    report.note("L", &l);
    report.note("gamma_cleared_residual", &gamma_cleared);
    report.note("gamma_uncleared_mismatches", gamma_uncleared);
    report.side_check("gamma_cleared", gamma_cleared.is_zero());
    report.side_check("gamma_uncleared", gamma_uncleared == 0);
    Ok(report)
}

/// The cyclic triple sum in `ℤ[T,X,Y,Z]`, cleared by `L` with the `(k+1)`
/// factor kept; also the telescoped form obtained from the asymmetric
/// identity.
pub fn lemma_iden_check(k: u32) -> Result<IdentityReport> {
    lemma_iden_check_with(k, &Limits::default())
}

pub fn lemma_iden_check_with(k: u32, limits: &Limits) -> Result<IdentityReport> {
    let start = Instant::now();
    limits.admit(homogeneous_terms(4, 5 * k as u64 + 2), "cyclic identity")?;
    let vars = Vars::new(&["T", "X", "Y", "Z"]);
    let (t, x, y, z) = (vars.v("T"), vars.v("X"), vars.v("Y"), vars.v("Z"));
    let scale = clearing_denominator(k) * BigInt::from(k + 1);
    let top = 2 * k + 1;
    let cyc = [(&x, &y, &z), (&y, &z, &x), (&z, &x, &y)];
    let mut residual = Polynomial::zero(&vars.ring);
    let mut telescoped = Polynomial::zero(&vars.ring);
    for (a, b, c) in cyc {
        let lead = a.power(top);
        residual = &residual + &(&lead * &asym_lhs(k, &t, b, c, &scale));
        telescoped = &telescoped + &(&lead * &asym_rhs(k, &t, b, c, &scale));
    }
    let mut report = IdentityReport::new("iden", residual, start);
    report.param("k", k);
    report.note("telescoped_terms", telescoped.num_terms());
    report.side_check("telescoped", telescoped.is_zero());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(clearing_denominator(0), BigInt::from(1));
        assert_eq!(clearing_denominator(2), BigInt::from(60));
        for k in 0..=3 {
            assert!(lemma_asym_check(k).unwrap().passed(), "asym k={k}");
            assert!(lemma_iden_check(k).unwrap().passed(), "iden k={k}");
        }
    }

    #[test]
    fn k0_sides_are_y_minus_z() {
        let vars = Vars::new(&["T", "Y", "Z"]);
        let (t, y, z) = (vars.v("T"), vars.v("Y"), vars.v("Z"));
        let one = BigInt::one();
        assert_eq!(asym_lhs(0, &t, &y, &z, &one), &y - &z);
        assert_eq!(asym_rhs(0, &t, &y, &z, &one), &y - &z);
    }

    #[test]
    fn gamma_boundary_values() {
        let k = 3;
        for s in 0..=k {
            let base = BigRational::new(binom(k, s), BigInt::from(2 * k + 1 - s));
            assert_eq!(gamma(0, s, k), -base.clone());
            assert_eq!(gamma(2 * k + 1 - s, s, k), base);
        }
    }

    #[test]
    fn oversized_expansion_is_refused() {
        assert!(matches!(lemma_asym_check(100_000), Err(crate::Error::ResourceBound(_))));
    }
}
