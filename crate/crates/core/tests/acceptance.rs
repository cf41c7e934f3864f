//! One PASS/FAIL line per acceptance criterion, with wall-clock limits.
//!
//! Criteria listed in `EXPECTED_RED` are known not to hold as stated; the
//! run fails if any other criterion fails, or if a red one starts passing.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use ptorsion::cohomology::{check_conjecture, combine_sum, lambda_q, parse_relation, RelationInstance};
use ptorsion::groebner::{buchberger, lift_relation, membership, normal_form, strong_gb_z, GbConfig, MembershipCertificate};
use ptorsion::identities::*;
use ptorsion::polyring::{CoefficientDomain, Monomial, MonomialOrder, Polynomial, Ring, RingSpec};

/// The literal first lemma fails outside `r ≤ k, r ≤ m+s`.
const EXPECTED_RED: &[u32] = &[1];

const LIMITS_S: [u64; 10] = [10, 10, 120, 120, 600, 600, 900, 60, 300, 300];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Certificates emitted along the way, re-verified in criterion 10.
#[derive(Default)]
struct Emitted {
    certs: Vec<(String, MembershipCertificate)>,
    found: Vec<(String, RelationInstance, u64, u32, u32, MembershipCertificate)>,
}

fn x6() -> Ring {
    RingSpec::integers(&["u", "v", "w", "x", "y", "z"]).unwrap()
}

fn hochster_with(f: [&str; 3]) -> RelationInstance {
    parse_relation(&x6(), &f, &["v*z - w*y", "w*x - u*z", "u*y - v*x"]).unwrap()
}

fn c1() -> Outcome {
    let b = 0..=8;
    let sum = lemma1_sum_check(b.clone(), b.clone(), b.clone(), b.clone());
    let rec = lemma1_certificate_check(b.clone(), b.clone(), b.clone(), b.clone(), b);
    let off = |p: &[i64]| !lemma1_in_domain(p[0], p[1], p[2], p[3]);
    let all_off = sum.failures().all(|t| off(&t.params)) && rec.failures().all(|t| off(&t.params));
    let ok = sum.all_pass() && rec.all_pass();
    outcome(
        ok,
        format!(
            "sum {}/{} mismatches, recurrence {}/{} failures; all outside r ≤ k, r ≤ m+s: {all_off}",
            sum.count(Verdict::Fail),
            sum.verdicts.len(),
            rec.count(Verdict::Fail),
            rec.verdicts.len()
        ),
    )
}

fn c2() -> Outcome {
    let sum = lemma2_sum_check(0..=10, 0..=10, 0..=10);
    let rec = lemma2_certificate_check(0..=10, 0..=10, 0..=10, 0..=10);
    let sharp = lemma2_eval(3, 0, 1);
    let ok = sum.all_pass() && rec.all_pass() && sharp == BigInt::from(1);
    outcome(
        ok,
        format!(
            "{} in-range sums vanish, recurrence on {} tuples ({} skipped), (3,0,1) -> {sharp}",
            sum.count(Verdict::Pass),
            rec.verdicts.len(),
            rec.count(Verdict::Skipped)
        ),
    )
}

fn c3() -> Outcome {
    let mut bad = Vec::new();
    for k in 0..=6 {
        if !lemma_asym_check(k).unwrap().verdict {
            bad.push(format!("asym k={k}"));
        }
        if !lemma_iden_check(k).unwrap().verdict {
            bad.push(format!("iden k={k}"));
        }
    }
    outcome(bad.is_empty(), format!("k = 0..6, nonzero residuals: {bad:?}"))
}

fn c4(out: &mut Emitted) -> Outcome {
    let gamma_ok = (0..=4).all(|k| hochster_gamma(k).unwrap().verdict);
    let mut lifts_ok = true;
    for (p, e) in [(2, 1), (3, 1)] {
        let lift = hochster_mu_lift(p, e).unwrap();
        lifts_ok &= lift.modular.verify().is_ok() && lift.modular.modulus() == Some(p);
        out.certs.push((format!("mu lift mod {p}"), lift.modular));
        out.certs.push((format!("mu lift exact p={p}"), lift.exact));
    }
    outcome(gamma_ok && lifts_ok, format!("residual 0 for k = 0..4: {gamma_ok}; mod-p lifts recompose: {lifts_ok}"))
}

fn c5(out: &mut Emitted) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (p, e) in [(2, 1), (3, 1)] {
        let w = plucker_witness(p, e).unwrap();
        let cert_ok = w.certificate.verify().is_ok();
        ok &= w.identity.verdict && w.congruences_hold() && cert_ok;
        notes.push(format!("q={} d={} identity {} table {} cert {cert_ok}", w.q, w.d, w.identity.verdict, w.congruences_hold()));
        if p == 2 {
            let gb = membership(w.certificate.target(), w.certificate.generators(), &GbConfig::default())
                .map(|m| m.is_member())
                .unwrap_or(false);
            ok &= gb;
            notes.push(format!("GB member {gb}"));
        }
        out.found.push((format!("plucker p={p}"), w.relation.clone(), p, e, w.k, w.certificate.clone()));
        out.certs.push((format!("plucker p={p}"), w.certificate));
    }
    outcome(ok, notes.join("; "))
}

fn c6(out: &mut Emitted) -> Outcome {
    let rel = hochster_with(["u", "v", "w"]);
    let r = rel.ring().clone();
    let (alpha, beta) = (Polynomial::parse("y", &r).unwrap(), Polynomial::parse("-x", &r).unwrap());
    let mut ok = true;
    let mut notes = Vec::new();
    for (p, e) in [(2u64, 1u32), (3, 1)] {
        let q = p as u32;
        let w = reg_witness(&rel, &alpha, &beta, p, e).unwrap();
        let cert_ok = w.k == q - 1 && w.certificate.verify().is_ok();
        let cand = lambda_q(&rel, p, e).unwrap();
        let scan = check_conjecture(&cand, q - 1, &[], &GbConfig::default()).unwrap();
        let found = scan.certificate().map(|(k, c)| (k, c.clone()));
        ok &= cert_ok && found.as_ref().is_some_and(|(k, _)| *k <= q - 1);
        notes.push(format!("p={p}: reg k={} ok {cert_ok}, scan {:?}", w.k, found.as_ref().map(|f| f.0)));
        out.found.push((format!("reg p={p}"), rel.clone(), p, e, w.k, w.certificate.clone()));
        out.certs.push((format!("reg p={p}"), w.certificate));
        if let Some((k, c)) = found {
            out.found.push((format!("scan p={p}"), rel.clone(), p, e, k, c.clone()));
            out.certs.push((format!("scan p={p}"), c));
        }
    }
    outcome(ok, notes.join("; "))
}

fn c7() -> Outcome {
    let r = RingSpec::integers(&["U", "V", "W", "X", "Y", "Z"]).unwrap();
    let p = |s: &str| Polynomial::parse(s, &r).unwrap();
    let rel = RelationInstance::new(vec![p("U"), p("V"), p("W")], vec![p("X"), p("Y"), p("Z")], vec![p("U*X + V*Y + W*Z")]).unwrap();
    let mut labels = Vec::new();
    for pr in [2, 3] {
        let cand = lambda_q(&rel, pr, 1).unwrap();
        labels.push(check_conjecture(&cand, 2, &[], &GbConfig::default()).unwrap().outcome.label());
    }
    outcome(labels.iter().all(|l| *l == "EXHAUSTED"), format!("p=2,3 with k_max=2: {labels:?}"))
}

fn c8(out: &Emitted) -> Outcome {
    let mut bad = Vec::new();
    for (name, rel, p, e, k, cert) in &out.found {
        let q = (*p as u32).pow(*e);
        let Ok(alpha) = lift_relation(cert, rel, *p, *e, *k) else {
            bad.push(name.clone());
            continue;
        };
        let sum = alpha
            .iter()
            .zip(rel.g())
            .fold(Polynomial::zero(rel.ring()), |acc, (a, g)| &acc + &(a * &g.power(q + k)));
        let congruent = (0..rel.n()).all(|i| {
            let frob = &rel.f()[i].power(q) * &rel.g_product_except(i).power(*k);
            (&alpha[i] - &frob).is_zero_mod(*p)
        });
        if !sum.is_zero() || !congruent {
            bad.push(name.clone());
        }
    }
    outcome(bad.is_empty(), format!("{} found instances lifted, failures {bad:?}", out.found.len()))
}

fn c9(out: &mut Emitted) -> Outcome {
    let (rel1, rel2) = (hochster_with(["u", "v", "w"]), hochster_with(["x", "y", "z"]));
    let r = rel1.ring().clone();
    let p = |s: &str| Polynomial::parse(s, &r).unwrap();
    let w1 = reg_witness(&rel1, &p("y"), &p("-x"), 2, 1).unwrap();
    let w2 = reg_witness(&rel2, &p("-v"), &p("u"), 2, 1).unwrap();
    let combo = combine_sum(&rel1, &rel2, (w1.k, &w1.certificate), (w2.k, &w2.certificate), 2, 1).unwrap();
    let ok = combo.k == 1 && combo.certificate.verify().is_ok();
    out.certs.push(("combination".into(), combo.certificate));
    outcome(ok, format!("k1={} k2={} combined k={}", w1.k, w2.k, combo.k))
}

fn random_poly(rng: &mut StdRng, ring: &Ring, terms: usize, max_exp: u32, max_coeff: i64) -> Polynomial {
    let n = ring.nvars();
    let terms = (0..rng.gen_range(0..=terms)).map(|_| {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        (Monomial::new(e), BigInt::from(rng.gen_range(-max_coeff..=max_coeff)))
    });
    Polynomial::from_terms(ring, terms)
}

fn c10(out: &Emitted) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xacce);
    let zz = RingSpec::integers(&["x", "y", "z"]).unwrap();
    let mut axioms = 0;
    for _ in 0..1000 {
        let (a, b, c) = (
            random_poly(&mut rng, &zz, 5, 3, 20),
            random_poly(&mut rng, &zz, 5, 3, 20),
            random_poly(&mut rng, &zz, 5, 3, 20),
        );
        let holds = &(&a * &b) * &c == &a * &(&b * &c)
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a * &b == &b * &a;
        axioms += usize::from(holds);
    }

    let cfg = GbConfig::default();
    let gens: Vec<Polynomial> = ["2*x*y - z", "3*y^2 + x", "6*z - x^2"]
        .iter()
        .map(|s| Polynomial::parse(s, &zz).unwrap())
        .collect();
    let gb = strong_gb_z(&gens, &cfg).unwrap();
    let mut idempotent = 0;
    for _ in 0..50 {
        let f = random_poly(&mut rng, &zz, 6, 4, 30);
        let nf = normal_form(&f, &gb).unwrap();
        idempotent += usize::from(normal_form(&nf, &gb).unwrap() == nf);
    }
    let mut sound = 0;
    for _ in 0..200 {
        let f = gens
            .iter()
            .fold(Polynomial::zero(&zz), |acc, g| &acc + &(&random_poly(&mut rng, &zz, 3, 2, 5) * g));
        sound += usize::from(normal_form(&f, &gb).unwrap().is_zero());
    }

    let gf = RingSpec::new(&["x", "y", "z"], CoefficientDomain::PrimeField(7), MonomialOrder::DegRevLex).unwrap();
    let fgens: Vec<Polynomial> = ["x^2*y - z", "x*y^2 - x + 1", "y*z - 2*x", "z^2 + 3*y"]
        .iter()
        .map(|s| Polynomial::parse(s, &gf).unwrap())
        .collect();
    let basis = |g: &[Polynomial]| -> BTreeSet<String> {
        buchberger(g, &gf, &cfg).unwrap().basis().iter().map(|p| p.to_string()).collect()
    };
    let reference = basis(&fgens);
    let mut stable = 0;
    for _ in 0..20 {
        let mut g = fgens.clone();
        g.shuffle(&mut rng);
        stable += usize::from(basis(&g) == reference);
    }

    let recomposed = out.certs.iter().filter(|(_, c)| c.verify().is_ok()).count();
    let ok = axioms == 1000 && idempotent == 50 && sound == 200 && stable == 20 && recomposed == out.certs.len();
    outcome(
        ok,
        format!(
            "axioms {axioms}/1000, NF idempotent {idempotent}/50, strong GB sound {sound}/200, order-independent {stable}/20, certificates {recomposed}/{}",
            out.certs.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut emitted = Emitted::default();
    let mut unexpected = Vec::new();
    for n in 1..=10u32 {
        let start = Instant::now();
        let o = match n {
            1 => c1(),
            2 => c2(),
            3 => c3(),
            4 => c4(&mut emitted),
            5 => c5(&mut emitted),
            6 => c6(&mut emitted),
            7 => c7(),
            8 => c8(&emitted),
            9 => c9(&mut emitted),
            _ => c10(&emitted),
        };
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(LIMITS_S[n as usize - 1]);
        let ok = o.ok && elapsed <= limit;
        println!(
            "{} criterion {n}: {} [{:.2}s of {}s]",
            if ok { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        if ok == EXPECTED_RED.contains(&n) {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes as recorded (expected red: {EXPECTED_RED:?})");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
