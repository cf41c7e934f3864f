use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::args::{Cli, Command, Format};
use super::tasks::{self, Task};
use super::{exit_code, EXIT_MATH, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use crate::error::Error;
use crate::groebner::{CertificateJson, GbConfig, MembershipCertificate};
use crate::identities::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Unknown,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct TaskOutcome {
    pub name: String,
    pub status: Status,
    pub summary: String,
    pub result: Value,
}

impl TaskOutcome {
    pub(crate) fn new(name: &str, status: Status, summary: impl Into<String>, result: Value) -> TaskOutcome {
        TaskOutcome { name: name.to_string(), status, summary: summary.into(), result }
    }

    pub(crate) fn check(name: &str, ok: bool, summary: impl Into<String>, result: Value) -> TaskOutcome {
        let status = if ok { Status::Pass } else { Status::Fail };
        TaskOutcome::new(name, status, summary, result)
    }
}

/// Everything a command produced. Only `timing_ms` varies between runs
/// with the same configuration.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub config: Value,
    pub tasks: Vec<TaskOutcome>,
    pub verdict: Status,
    pub timing_ms: BTreeMap<String, u128>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Status::Pass => EXIT_OK,
            Status::Fail => EXIT_MATH,
            Status::Unknown => EXIT_RESOURCE,
        }
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for t in &self.tasks {
            out.push_str(&format!("{:<7} {}: {}\n", label(t.status), t.name, t.summary));
        }
        out.push_str(&format!("verdict: {}\n", label(self.verdict)));
        out
    }
}

fn label(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Unknown => "UNKNOWN",
        Status::Fail => "FAIL",
    }
}

pub(crate) struct Context {
    pub gb: GbConfig,
    pub limits: Limits,
}

pub(super) fn execute(cli: &Cli) -> i32 {
    let ctx = Context {
        gb: GbConfig { max_pairs: cli.max_pairs, max_terms: cli.max_terms, ..GbConfig::default() },
        limits: Limits { max_terms: cli.max_terms },
    };
    let planned = match &cli.command {
        Command::Verify(a) => Ok(tasks::verify(a, &ctx)),
        Command::Conjecture(a) => tasks::conjecture(a, &ctx),
        Command::Witness(a) => tasks::witness(a, &ctx),
        Command::Report(a) => tasks::report(a),
    };
    let planned = match planned {
        Ok(t) => t,
        Err(err) => {
            eprintln!("error: {err}");
            return exit_code(&err);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(err) => {
            eprintln!("error: cannot start workers: {err}");
            return EXIT_USAGE;
        }
    };
    let results: Vec<(Result<TaskOutcome, Error>, u128)> = pool.install(|| {
        planned
            .par_iter()
            .map(|task| {
                eprintln!("[start] {}", task.name);
                let start = Instant::now();
                let out = (task.job)(&ctx);
                let ms = start.elapsed().as_millis();
                eprintln!("[done ] {} ({ms} ms)", task.name);
                (out, ms)
            })
            .collect()
    });

    let mut outcomes = Vec::with_capacity(results.len());
    let mut timing_ms = BTreeMap::new();
    for (task, (res, ms)) in planned.iter().zip(results) {
        timing_ms.insert(task.name.clone(), ms);
        let outcome = match res {
            Ok(o) => o,
            Err(Error::ResourceBound(reason)) => {
                TaskOutcome::new(&task.name, Status::Unknown, format!("resource bound: {reason}"), Value::Null)
            }
            Err(err) if exit_code(&err) == EXIT_MATH => {
                TaskOutcome::new(&task.name, Status::Fail, err.to_string(), Value::Null)
            }
            Err(err) => {
                eprintln!("error: {}: {err}", task.name);
                return EXIT_USAGE;
            }
        };
        outcomes.push(outcome);
    }
    let verdict = outcomes.iter().map(|o| o.status).max().unwrap_or(Status::Pass);
    let report = RunReport {
        config: serde_json::to_value(cli).expect("serializable config"),
        tasks: outcomes,
        verdict,
        timing_ms,
    };

    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable report") + "\n",
        Format::Plain => report.to_plain(),
    };
    print!("{text}");
    if let Some(path) = &cli.output {
        let written = match &cli.command {
            Command::Witness(_) => write_certificates(&report, path),
            _ => fs::write(path, &text).map_err(|e| Error::Format(format!("{}: {e}", path.display()))),
        };
        if let Err(err) = written {
            eprintln!("error: {err}");
            return exit_code(&err);
        }
    }
    report.exit_code()
}

/// Writes the certificate of a witness run after reloading it from its own
/// serialized form and re-verifying.
fn write_certificates(report: &RunReport, path: &Path) -> Result<(), Error> {
    let Some(cert) = report.tasks.iter().find_map(|t| t.result.get("certificate")) else {
        return Err(Error::CertificateInvalid("no certificate was produced".into()));
    };
    let json: CertificateJson = serde_json::from_value(cert.clone())?;
    MembershipCertificate::from_json(&json)?;
    let text = serde_json::to_string_pretty(&json)? + "\n";
    fs::write(path, text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub(crate) type Job = Box<dyn Fn(&Context) -> Result<TaskOutcome, Error> + Send + Sync>;

impl Task {
    pub(crate) fn new(name: impl Into<String>, job: impl Fn(&Context) -> Result<TaskOutcome, Error> + Send + Sync + 'static) -> Task {
        Task { name: name.into(), job: Box::new(job) }
    }
}
