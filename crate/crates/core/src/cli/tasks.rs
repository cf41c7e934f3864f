use std::fs;
use std::path::Path;

use serde_json::{json, Map, Value};

use super::args::{ConjectureArgs, IdentityKind, ReportArgs, Span, VerifyArgs, WitnessArgs, WitnessKind};
use super::run::{Context, Job, Status, TaskOutcome};
use crate::cohomology::{check_conjecture, lambda_q, Outcome, RelationInstance};
use crate::error::{Error, Result};
use crate::groebner::{lift_relation, membership, CertificateJson, MembershipCertificate};
use crate::identities::{self as id, IdentityReport, WZCertificateCheck};
use crate::polyring::Polynomial;

pub(crate) struct Task {
    pub name: String,
    pub job: Job,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

// ---- verify ----

fn wz_outcome(name: &str, check: &WZCertificateCheck, domain: Option<&dyn Fn(&[i64]) -> bool>) -> TaskOutcome {
    let failures: Vec<&Vec<i64>> = check.failures().map(|t| &t.params).collect();
    let mut result = json!({
        "identity": check.identity,
        "names": check.names,
        "ranges": check.ranges,
        "total": check.verdicts.len(),
        "pass": check.count(id::Verdict::Pass),
        "fail": check.count(id::Verdict::Fail),
        "skipped": check.count(id::Verdict::Skipped),
        "failures": failures,
    });
    let (ok, summary) = match domain {
        None => (
            check.all_pass(),
            format!("{} tuples, {} failing", check.verdicts.len(), failures.len()),
        ),
        Some(inside) => {
            let scanned = check.verdicts.iter().filter(|t| inside(&t.params)).count();
            let bad = failures.iter().filter(|p| inside(p)).count();
            result["in_domain"] = json!({ "total": scanned, "fail": bad });
            (bad == 0, format!("{scanned} in-domain tuples, {bad} failing ({} failing outside)", failures.len() - bad))
        }
    };
    TaskOutcome::check(name, ok, summary, result)
}

fn identity_outcome(name: &str, report: &IdentityReport) -> TaskOutcome {
    let summary = format!(
        "residual has {} terms{}",
        report.residual.num_terms(),
        report
            .side_checks
            .iter()
            .map(|(n, ok)| format!(", {n} {}", if *ok { "ok" } else { "FAILED" }))
            .collect::<String>()
    );
    let result = serde_json::to_value(report.to_json()).expect("serializable");
    TaskOutcome::check(name, report.passed(), summary, result)
}

pub(crate) fn verify(args: &VerifyArgs, _ctx: &Context) -> Vec<Task> {
    let kinds: Vec<IdentityKind> = match args.identity {
        IdentityKind::All => vec![
            IdentityKind::Lemma1,
            IdentityKind::Lemma2,
            IdentityKind::Asym,
            IdentityKind::Iden,
            IdentityKind::Hochster,
        ],
        k => vec![k],
    };
    let mut tasks = Vec::new();
    for kind in kinds {
        match kind {
            IdentityKind::Lemma1 => {
                let b = args.boxed.unwrap_or(Span { lo: 0, hi: 8 }).range();
                let in_domain = args.in_domain;
                let r = b.clone();
                tasks.push(Task::new("lemma1.sum", move |_| {
                    let check = id::lemma1_sum_check(r.clone(), r.clone(), r.clone(), r.clone());
                    let dom = |p: &[i64]| id::lemma1_in_domain(p[0], p[1], p[2], p[3]);
                    Ok(wz_outcome("lemma1.sum", &check, in_domain.then_some(&dom as &dyn Fn(&[i64]) -> bool)))
                }));
                let r = b.clone();
                tasks.push(Task::new("lemma1.recurrence", move |_| {
                    let check = id::lemma1_certificate_check(r.clone(), r.clone(), r.clone(), r.clone(), r.clone());
                    let dom = |p: &[i64]| id::lemma1_in_domain(p[0], p[1], p[2], p[3]);
                    Ok(wz_outcome("lemma1.recurrence", &check, in_domain.then_some(&dom as &dyn Fn(&[i64]) -> bool)))
                }));
                let r = b;
                tasks.push(Task::new("lemma1.initial", move |_| {
                    let check = id::lemma1_initial_check(r.clone(), r.clone(), r.clone());
                    let dom = |p: &[i64]| id::lemma1_in_domain(p[0], 0, p[1], p[2]);
                    Ok(wz_outcome("lemma1.initial", &check, in_domain.then_some(&dom as &dyn Fn(&[i64]) -> bool)))
                }));
            }
            IdentityKind::Lemma2 => {
                let b = args.boxed.unwrap_or(Span { lo: 0, hi: 10 }).range();
                let r = b.clone();
                tasks.push(Task::new("lemma2.sum", move |_| {
                    Ok(wz_outcome("lemma2.sum", &id::lemma2_sum_check(r.clone(), r.clone(), r.clone()), None))
                }));
                let r = b;
                tasks.push(Task::new("lemma2.recurrence", move |_| {
                    let check = id::lemma2_certificate_check(r.clone(), r.clone(), r.clone(), r.clone());
                    Ok(wz_outcome("lemma2.recurrence", &check, None))
                }));
                tasks.push(Task::new("lemma2.sharpness", |_| {
                    let v = id::lemma2_eval(3, 0, 1);
                    let ok = v == 1.into();
                    Ok(TaskOutcome::check(
                        "lemma2.sharpness",
                        ok,
                        format!("(m,s,k) = (3,0,1) gives {v}"),
                        json!({ "m": 3, "s": 0, "k": 1, "value": v.to_string() }),
                    ))
                }));
            }
            IdentityKind::Asym | IdentityKind::Iden | IdentityKind::Hochster => {
                let default = if kind == IdentityKind::Hochster { 4 } else { 6 };
                let ks = args.k.unwrap_or(Span { lo: 0, hi: default });
                for k in ks.range() {
                    let k = u32::try_from(k).unwrap_or(u32::MAX);
                    let name = match kind {
                        IdentityKind::Asym => format!("asym.k={k}"),
                        IdentityKind::Iden => format!("iden.k={k}"),
                        _ => format!("hochster.k={k}"),
                    };
                    let job_name = name.clone();
                    tasks.push(Task::new(name, move |ctx| {
                        let report = match kind {
                            IdentityKind::Asym => id::lemma_asym_check_with(k, &ctx.limits)?,
                            IdentityKind::Iden => id::lemma_iden_check_with(k, &ctx.limits)?,
                            _ => id::hochster_gamma_with(k, &ctx.limits)?,
                        };
                        Ok(identity_outcome(&job_name, &report))
                    }));
                }
            }
            IdentityKind::All => unreachable!("expanded above"),
        }
    }
    tasks
}

// ---- conjecture ----

pub(crate) fn conjecture(args: &ConjectureArgs, _ctx: &Context) -> Result<Vec<Task>> {
    let rel = RelationInstance::from_json_str(&read(&args.relation)?)?;
    let mut tasks = Vec::new();
    for &p in &args.primes {
        let (rel, e, k_max) = (rel.clone(), args.power, args.k_max);
        let (want_found, want_exhausted) = (args.expect_found, args.expect_exhausted);
        let name = format!("conjecture.p={p}.e={e}");
        let job_name = name.clone();
        tasks.push(Task::new(name, move |ctx| {
            let cand = lambda_q(&rel, p, e)?;
            let report = check_conjecture(&cand, k_max, &[], &ctx.gb)?;
            let (status, summary) = match &report.outcome {
                Outcome::Found { k, certificate } => {
                    certificate.verify()?;
                    let status = if want_exhausted { Status::Fail } else { Status::Pass };
                    (status, format!("FOUND at k={k}"))
                }
                Outcome::Exhausted { k_max } => {
                    let status = if want_found { Status::Fail } else { Status::Pass };
                    (status, format!("EXHAUSTED for k ≤ {k_max}"))
                }
                Outcome::Unknown { k, reason } => (Status::Unknown, format!("UNKNOWN at k={k}: {reason}")),
            };
            let result = serde_json::to_value(report.to_json()).expect("serializable");
            Ok(TaskOutcome::new(&job_name, status, summary, result))
        }));
    }
    Ok(tasks)
}

// ---- witness ----

struct Checks(Vec<(String, bool)>);

impl Checks {
    fn push(&mut self, name: &str, ok: bool) {
        self.0.push((name.to_string(), ok));
    }

    fn all(&self) -> bool {
        self.0.iter().all(|(_, ok)| *ok)
    }

    fn to_json(&self) -> Value {
        Value::Object(self.0.iter().map(|(n, ok)| (n.clone(), Value::Bool(*ok))).collect())
    }
}

fn cross_check(cert: &MembershipCertificate, ctx: &Context, checks: &mut Checks) -> Result<()> {
    let found = membership(cert.target(), cert.generators(), &ctx.gb)?;
    checks.push("gb_membership", found.is_member());
    Ok(())
}

fn lift_check(cert: &MembershipCertificate, rel: &RelationInstance, p: u64, e: u32, k: u32, checks: &mut Checks) -> Value {
    match lift_relation(cert, rel, p, e, k) {
        Ok(alpha) => {
            checks.push("lift", true);
            Value::Array(alpha.iter().map(|a| serde_json::to_value(a.to_json()).expect("serializable")).collect())
        }
        Err(err) => {
            checks.push("lift", false);
            Value::String(err.to_string())
        }
    }
}

fn cert_value(cert: &MembershipCertificate) -> Value {
    serde_json::to_value(cert.to_json()).expect("serializable")
}

fn witness_outcome(name: &str, kind: WitnessKind, p: u64, e: u32, k: u32, checks: Checks, mut extra: Map<String, Value>) -> TaskOutcome {
    extra.insert("kind".into(), serde_json::to_value(kind).expect("serializable"));
    extra.insert("p".into(), p.into());
    extra.insert("e".into(), e.into());
    extra.insert("k".into(), k.into());
    extra.insert("checks".into(), checks.to_json());
    let failed: Vec<&str> = checks.0.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    let summary = if failed.is_empty() {
        format!("certificate at k={k} verified")
    } else {
        format!("certificate at k={k}: failed {}", failed.join(", "))
    };
    TaskOutcome::check(name, checks.all(), summary, Value::Object(extra))
}

fn load_relation(args: &WitnessArgs) -> Result<RelationInstance> {
    let path = args
        .relation
        .as_ref()
        .ok_or_else(|| Error::Format("this witness needs --relation FILE".into()))?;
    RelationInstance::from_json_str(&read(path)?)
}

pub(crate) fn witness(args: &WitnessArgs, _ctx: &Context) -> Result<Vec<Task>> {
    let (p, e, kind, gb_check) = (args.prime, args.power, args.kind, args.cross_check_gb);
    crate::cohomology::prime_power(p, e)?;
    let label = serde_json::to_value(kind).expect("serializable");
    let name = format!("witness.{}.p={p}.e={e}", label.as_str().unwrap_or("?"));
    let job_name = name.clone();
    let job: Job = match kind {
        WitnessKind::Plucker => Box::new(move |ctx| {
            let w = id::plucker_witness_with(p, e, &ctx.limits)?;
            let mut checks = Checks(Vec::new());
            checks.push("identity", w.identity.verdict);
            checks.push("congruences", w.congruences_hold());
            checks.push("recomposes", w.certificate.verify().is_ok());
            let alpha = lift_check(&w.certificate, &w.relation, p, e, w.k, &mut checks);
            if gb_check {
                cross_check(&w.certificate, ctx, &mut checks)?;
            }
            let mut details = serde_json::to_value(w.to_json()).expect("serializable");
            let cert = details.as_object_mut().and_then(|m| m.remove("certificate")).unwrap_or(Value::Null);
            let mut extra = Map::new();
            extra.insert("plucker".into(), details);
            extra.insert("alpha".into(), alpha);
            extra.insert("certificate".into(), cert);
            Ok(witness_outcome(&job_name, kind, p, e, w.k, checks, extra))
        }),
        WitnessKind::HochsterMu => Box::new(move |ctx| {
            let lift = id::hochster_mu_lift_with(p, e, &ctx.limits)?;
            let mut checks = Checks(Vec::new());
            checks.push("modular_recomposes", lift.modular.verify().is_ok());
            checks.push("exact_recomposes", lift.exact.verify().is_ok());
            if gb_check {
                cross_check(&lift.exact, ctx, &mut checks)?;
            }
            let mut extra = Map::new();
            extra.insert("certificate".into(), cert_value(&lift.modular));
            extra.insert("exact_certificate".into(), cert_value(&lift.exact));
            Ok(witness_outcome(&job_name, kind, p, e, lift.k, checks, extra))
        }),
        WitnessKind::SiContainment => Box::new(move |ctx| {
            let report = id::si_containment_with(p, e, &ctx.gb)?;
            let mut checks = Checks(Vec::new());
            checks.push("member", report.passed());
            let k = report.params.get("k").and_then(Value::as_u64).unwrap_or(0) as u32;
            let mut extra = Map::new();
            if let Some(c) = &report.certificate {
                checks.push("recomposes", c.verify().is_ok());
                extra.insert("certificate".into(), cert_value(c));
            }
            extra.insert("lambda".into(), report.notes.get("lambda").cloned().unwrap_or_default().into());
            Ok(witness_outcome(&job_name, kind, p, e, k, checks, extra))
        }),
        WitnessKind::Reg => {
            let rel = load_relation(args)?;
            let parse = |flag: &str, v: &Option<String>| {
                let text = v.as_ref().ok_or_else(|| Error::Format(format!("reg needs --{flag}")))?;
                Polynomial::parse(text, rel.ring())
            };
            let (alpha, beta) = (parse("alpha", &args.alpha)?, parse("beta", &args.beta)?);
            Box::new(move |ctx| {
                let w = id::reg_witness_with(&rel, &alpha, &beta, p, e, &ctx.gb)?;
                let mut checks = Checks(Vec::new());
                checks.push("recomposes", w.certificate.verify().is_ok());
                let lifted = lift_check(&w.certificate, &rel, p, e, w.k, &mut checks);
                if gb_check {
                    cross_check(&w.certificate, ctx, &mut checks)?;
                }
                let mut extra = Map::new();
                extra.insert("alpha".into(), lifted);
                extra.insert("certificate".into(), cert_value(&w.certificate));
                Ok(witness_outcome(&job_name, kind, p, e, w.k, checks, extra))
            })
        }
        WitnessKind::Theorem31 => {
            let rel = load_relation(args)?;
            Box::new(move |ctx| {
                let w = id::theorem31_witness_with(rel.f(), p, e, &ctx.gb)?;
                let mut checks = Checks(Vec::new());
                checks.push("recomposes", w.certificate.verify().is_ok());
                if gb_check {
                    cross_check(&w.certificate, ctx, &mut checks)?;
                }
                let mut extra = Map::new();
                extra.insert("certificate".into(), cert_value(&w.certificate));
                Ok(witness_outcome(&job_name, kind, p, e, w.k, checks, extra))
            })
        }
    };
    Ok(vec![Task { name, job }])
}

// ---- report ----

fn collect_certificates<'a>(v: &'a Value, out: &mut Vec<&'a Value>) {
    match v {
        Value::Object(m) => {
            if m.contains_key("target") && m.contains_key("generators") && m.contains_key("cofactors") {
                out.push(v);
                return;
            }
            m.values().for_each(|x| collect_certificates(x, out));
        }
        Value::Array(xs) => xs.iter().for_each(|x| collect_certificates(x, out)),
        _ => {}
    }
}

pub(crate) fn report(args: &ReportArgs) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for path in &args.files {
        let text = read(path)?;
        let value: Value = serde_json::from_str(&text)?;
        let name = format!("report:{}", path.display());
        let job_name = name.clone();
        tasks.push(Task::new(name, move |_| {
            let mut certs = Vec::new();
            collect_certificates(&value, &mut certs);
            let saved = value.get("verdict").and_then(Value::as_str).map(str::to_string);
            if certs.is_empty() && saved.is_none() {
                return Err(Error::Format("neither a run report nor a certificate".into()));
            }
            let mut bad = Vec::new();
            for (i, c) in certs.iter().enumerate() {
                let json: CertificateJson = serde_json::from_value((*c).clone())?;
                if let Err(err) = MembershipCertificate::from_json(&json) {
                    bad.push(format!("#{i}: {err}"));
                }
            }
            let saved_ok = saved.as_deref().is_none_or(|s| s == "PASS");
            let ok = bad.is_empty() && saved_ok;
            let summary = format!(
                "{} of {} certificates re-verified{}",
                certs.len() - bad.len(),
                certs.len(),
                saved.as_deref().map(|s| format!(", saved verdict {s}")).unwrap_or_default()
            );
            let result = json!({ "certificates": certs.len(), "rejected": bad, "saved_verdict": saved });
            Ok(TaskOutcome::check(&job_name, ok, summary, result))
        }));
    }
    Ok(tasks)
}
