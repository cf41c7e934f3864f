//! Torsion candidates attached to a relation `Σ F_i G_i = 0`.
//!
//! For a prime power `q = p^e` the candidate is `λ_q = Σ (F_i G_i)^q / p`
//! together with the ideal `(G_1^q, …, G_n^q)`. Its class in the local
//! cohomology direct limit vanishes exactly when some `k` gives
//! `λ_q (G_1⋯G_n)^k ∈ (G_1^{q+k}, …, G_n^{q+k})`; the scans here test that for
//! bounded `k` only, so a negative answer is evidence, never a proof of
//! non-vanishing.

mod candidate;
mod closed;
mod relation;
mod scan;

pub use candidate::{annihilation_certificate, lambda_q, TorsionCandidate};
pub use candidate::prime_power;
pub use closed::{combine_sum, combine_sum_with, koszul_certificate, koszul_relation, n2_closed_form, Combination};
pub use relation::{make_relation, parse_relation, RelationInstance, RelationJson};
pub use scan::{check_conjecture, raise_k, ConjectureReport, ConjectureReportJson, Outcome, OutcomeJson};
