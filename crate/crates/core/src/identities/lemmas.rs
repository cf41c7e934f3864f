use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::binom::{binom, sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckId {
    /// Sum against the three-case closed form of the first identity.
    Lemma1Sum,
    /// `(s+1)F(s+1,n) - (m+s-k)F(s,n) = G(s,n+1) - G(s,n)`.
    Lemma1Recurrence,
    /// `H(0) = (-1)^r`.
    Lemma1Initial,
    /// Vanishing of the second sum for `1 ≤ m ≤ 2k-s`.
    Lemma2Sum,
    /// `G(r) - G(r+1) = m(2k+1-m-s)F(r)`.
    Lemma2Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// Degenerate tuple; the division-free relation was still checked.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleVerdict {
    pub params: Vec<i64>,
    pub verdict: Verdict,
}

/// Exhaustive evaluation of one identity over a parameter box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WZCertificateCheck {
    pub identity: CheckId,
    pub names: Vec<&'static str>,
    pub ranges: Vec<(i64, i64)>,
    pub verdicts: Vec<TupleVerdict>,
}

impl WZCertificateCheck {
    fn new(identity: CheckId, names: &[&'static str], ranges: &[&RangeInclusive<i64>]) -> Self {
        WZCertificateCheck {
            identity,
            names: names.to_vec(),
            ranges: ranges.iter().map(|r| (*r.start(), *r.end())).collect(),
            verdicts: Vec::new(),
        }
    }

    fn push(&mut self, params: Vec<i64>, verdict: Verdict) {
        self.verdicts.push(TupleVerdict { params, verdict });
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.verdicts.iter().filter(|t| t.verdict == v).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &TupleVerdict> {
        self.verdicts.iter().filter(|t| t.verdict == Verdict::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.count(Verdict::Fail) == 0
    }
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Lemma1Case {
    /// `m ≤ k - s`: `(-1)^{r-s} C(k-m, s)`.
    Low,
    /// `k + 1 ≤ m`: `(-1)^r C(m+s-k-1, s)`.
    High,
    /// Otherwise `0`.
    Middle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma1Eval {
    pub sum: BigInt,
    pub closed: BigInt,
    pub case: Lemma1Case,
}

impl Lemma1Eval {
    pub fn agrees(&self) -> bool {
        self.sum == self.closed
    }
}

/// The summand `F(s, n) = (-1)^n C(m+s-r, m-n) C(k-n, k-r)`.
pub fn lemma1_term(m: i64, s: i64, r: i64, k: i64, n: i64) -> BigInt {
    sign(n) * binom(m + s - r, m - n) * binom(k - n, k - r)
}

/// `Σ_n F(s, n)` against the three-case closed form.
pub fn lemma1_eval(m: i64, s: i64, r: i64, k: i64) -> Lemma1Eval {
    // C(m+s-r, m-n) vanishes unless r-s ≤ n ≤ m
    let sum = (r - s..=m).map(|n| lemma1_term(m, s, r, k, n)).sum();
    let (closed, case) = if m <= k - s {
        (sign(r - s) * binom(k - m, s), Lemma1Case::Low)
    } else if k < m {
        (sign(r) * binom(m + s - k - 1, s), Lemma1Case::High)
    } else {
        (BigInt::zero(), Lemma1Case::Middle)
    };
    Lemma1Eval { sum, closed, case }
}

/// The parameters where the closed form is a theorem: `r ≤ k` and
/// `r ≤ m + s`. These are the only tuples the later coefficient comparison
/// needs, since there `C(m, r-s) ≠ 0` forces `r ≤ m + s`.
pub fn lemma1_in_domain(m: i64, s: i64, r: i64, k: i64) -> bool {
    r <= k && r <= m + s
}

fn lemma1_g(m: i64, s: i64, r: i64, k: i64, n: i64) -> BigInt {
    -BigInt::from(k + 1 - n) * lemma1_term(m, s, r, k, n)
}

pub fn lemma1_recurrence_holds(m: i64, s: i64, r: i64, k: i64, n: i64) -> bool {
    let lhs = BigInt::from(s + 1) * lemma1_term(m, s + 1, r, k, n) - BigInt::from(m + s - k) * lemma1_term(m, s, r, k, n);
    let rhs = lemma1_g(m, s, r, k, n + 1) - lemma1_g(m, s, r, k, n);
    lhs == rhs
}

/// `H(0) = Σ_n F(0, n)`.
pub fn lemma1_initial(m: i64, r: i64, k: i64) -> BigInt {
    (r..=m).map(|n| lemma1_term(m, 0, r, k, n)).sum()
}

/// Sum against closed form for every `(m, s, r, k)` in the box with `s ≤ k`.
pub fn lemma1_sum_check(
    m: RangeInclusive<i64>,
    s: RangeInclusive<i64>,
    r: RangeInclusive<i64>,
    k: RangeInclusive<i64>,
) -> WZCertificateCheck {
    let mut out = WZCertificateCheck::new(CheckId::Lemma1Sum, &["m", "s", "r", "k"], &[&m, &s, &r, &k]);
    for mm in m.clone() {
        for ss in s.clone() {
            for rr in r.clone() {
                for kk in k.clone() {
                    if ss <= kk {
                        out.push(vec![mm, ss, rr, kk], verdict(lemma1_eval(mm, ss, rr, kk).agrees()));
                    }
                }
            }
        }
    }
    out
}

/// The telescoping recurrence for every `(m, s, r, k, n)` in the box.
pub fn lemma1_certificate_check(
    m: RangeInclusive<i64>,
    s: RangeInclusive<i64>,
    r: RangeInclusive<i64>,
    k: RangeInclusive<i64>,
    n: RangeInclusive<i64>,
) -> WZCertificateCheck {
    let mut out = WZCertificateCheck::new(CheckId::Lemma1Recurrence, &["m", "s", "r", "k", "n"], &[&m, &s, &r, &k, &n]);
    for mm in m.clone() {
        for ss in s.clone() {
            for rr in r.clone() {
                for kk in k.clone() {
                    for nn in n.clone() {
                        out.push(vec![mm, ss, rr, kk, nn], verdict(lemma1_recurrence_holds(mm, ss, rr, kk, nn)));
                    }
                }
            }
        }
    }
    out
}

/// `H(0) = (-1)^r` for every `(m, r, k)` in the box.
pub fn lemma1_initial_check(m: RangeInclusive<i64>, r: RangeInclusive<i64>, k: RangeInclusive<i64>) -> WZCertificateCheck {
    let mut out = WZCertificateCheck::new(CheckId::Lemma1Initial, &["m", "r", "k"], &[&m, &r, &k]);
    for mm in m.clone() {
        for rr in r.clone() {
            for kk in k.clone() {
                out.push(vec![mm, rr, kk], verdict(lemma1_initial(mm, rr, kk) == sign(rr)));
            }
        }
    }
    out
}

/// `F(r) = (-1)^r C(2k-r, m-1) C(m, r-s)`.
pub fn lemma2_term(m: i64, s: i64, k: i64, r: i64) -> BigInt {
    sign(r) * binom(2 * k - r, m - 1) * binom(m, r - s)
}

/// `Σ_r F(r)`; zero whenever `1 ≤ m ≤ 2k - s`.
pub fn lemma2_eval(m: i64, s: i64, k: i64) -> BigInt {
    // C(m, r-s) vanishes unless s ≤ r ≤ s+m
    (s..=s + m).map(|r| lemma2_term(m, s, k, r)).sum()
}

pub fn lemma2_in_range(m: i64, s: i64, k: i64) -> bool {
    1 <= m && m <= 2 * k - s
}

fn lemma2_g(m: i64, s: i64, k: i64, r: i64) -> BigInt {
    BigInt::from((2 * k + 1 - r) * (r - s)) * lemma2_term(m, s, k, r)
}

pub fn lemma2_recurrence_holds(m: i64, s: i64, k: i64, r: i64) -> bool {
    lemma2_g(m, s, k, r) - lemma2_g(m, s, k, r + 1) == BigInt::from(m * (2 * k + 1 - m - s)) * lemma2_term(m, s, k, r)
}

/// Vanishing of the sum for every in-range `(m, s, k)` of the box.
pub fn lemma2_sum_check(m: RangeInclusive<i64>, s: RangeInclusive<i64>, k: RangeInclusive<i64>) -> WZCertificateCheck {
    let mut out = WZCertificateCheck::new(CheckId::Lemma2Sum, &["m", "s", "k"], &[&m, &s, &k]);
    for mm in m.clone() {
        for ss in s.clone() {
            for kk in k.clone() {
                if lemma2_in_range(mm, ss, kk) {
                    out.push(vec![mm, ss, kk], verdict(lemma2_eval(mm, ss, kk).is_zero()));
                }
            }
        }
    }
    out
}

/// The telescoping relation for every `(m, s, k, r)` in the box. Tuples with
/// `m(2k+1-m-s) = 0` are reported as skipped when the relation holds there
/// (as `0 = 0` on the right).
pub fn lemma2_certificate_check(
    m: RangeInclusive<i64>,
    s: RangeInclusive<i64>,
    k: RangeInclusive<i64>,
    r: RangeInclusive<i64>,
) -> WZCertificateCheck {
    let mut out = WZCertificateCheck::new(CheckId::Lemma2Recurrence, &["m", "s", "k", "r"], &[&m, &s, &k, &r]);
    for mm in m.clone() {
        for ss in s.clone() {
            for kk in k.clone() {
                for rr in r.clone() {
                    let holds = lemma2_recurrence_holds(mm, ss, kk, rr);
                    let v = match (holds, mm * (2 * kk + 1 - mm - ss) == 0) {
                        (false, _) => Verdict::Fail,
                        (true, true) => Verdict::Skipped,
                        (true, false) => Verdict::Pass,
                    };
                    out.push(vec![mm, ss, kk, rr], v);
                }
            }
        }
    }
    out
}
