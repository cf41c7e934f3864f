use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "ptorsion", version, about = "Certificates for p-torsion candidates in local cohomology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report (or, for `witness`, the certificate) to this file.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for independent tasks; 0 means one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    /// Cap on critical pairs in a Gröbner completion.
    #[arg(long, global = true, default_value_t = 500_000)]
    pub max_pairs: usize,

    /// Cap on the term count of any single expansion.
    #[arg(long, global = true, default_value_t = 5_000_000)]
    pub max_terms: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Plain,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Check the binomial lemmas and polynomial identities.
    Verify(VerifyArgs),
    /// Bounded scan for the vanishing of λ_q on a relation file.
    Conjecture(ConjectureArgs),
    /// Build and re-verify an explicit certificate.
    Witness(WitnessArgs),
    /// Reload saved reports or certificates and re-verify them.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKind {
    Lemma1,
    Lemma2,
    Asym,
    Iden,
    Hochster,
    All,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = IdentityKind::All)]
    pub identity: IdentityKind,

    /// Values of k for the polynomial identities, e.g. `0..4` (inclusive) or `3`.
    #[arg(long = "k", value_parser = parse_range)]
    pub k: Option<Span>,

    /// Parameter box for the binomial lemmas, e.g. `0..6` (inclusive).
    #[arg(long = "box", value_parser = parse_range)]
    pub boxed: Option<Span>,

    /// Scan the first lemma only where it is proved (`r ≤ k`, `r ≤ m+s`).
    #[arg(long)]
    pub in_domain: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ConjectureArgs {
    /// Relation file (JSON with `vars`, `F`, `G` and optional `quotient_extra`).
    pub relation: PathBuf,

    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub primes: Vec<u64>,

    #[arg(long, default_value_t = 1)]
    pub power: u32,

    #[arg(long, default_value_t = 2)]
    pub k_max: u32,

    #[arg(long, conflicts_with = "expect_exhausted")]
    pub expect_found: bool,

    #[arg(long)]
    pub expect_exhausted: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Reg,
    Theorem31,
    Plucker,
    HochsterMu,
    SiContainment,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WitnessArgs {
    #[arg(value_enum)]
    pub kind: WitnessKind,

    #[arg(long, default_value_t = 2)]
    pub prime: u64,

    #[arg(long, default_value_t = 1)]
    pub power: u32,

    /// Relation file, for `reg` and `theorem31`.
    #[arg(long)]
    pub relation: Option<PathBuf>,

    /// `α` with `G₃ = αF₁ + βF₂`, for `reg`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,

    /// `β` with `G₃ = αF₁ + βF₂`, for `reg`.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,

    /// Also decide the membership with a strong Gröbner basis.
    #[arg(long)]
    pub cross_check_gb: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ReportArgs {
    /// Saved run reports or certificate files.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
}

/// An inclusive range of nonnegative integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn range(&self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

fn parse_range(text: &str) -> Result<Span, String> {
    let num = |s: &str| s.trim().parse::<i64>().map_err(|_| format!("`{s}` is not an integer"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(text)?;
            (n, n)
        }
    };
    if lo < 0 || hi < lo {
        return Err(format!("`{text}` is not a nonempty range of nonnegative integers"));
    }
    Ok(Span { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..4").unwrap(), Span { lo: 0, hi: 4 });
        assert_eq!(parse_range("2..=3").unwrap(), Span { lo: 2, hi: 3 });
        assert_eq!(parse_range("7").unwrap(), Span { lo: 7, hi: 7 });
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("x").is_err());
    }
}
