//! Exact computer algebra for p-torsion candidates in local cohomology.
//!
//! The crate is organized bottom-up:
//!
//! - [`polyring`]: sparse multivariate polynomials over ℤ and 𝔽_p.
//! - [`groebner`]: Buchberger over prime fields, strong Gröbner bases over ℤ,
//!   normal forms and membership certificates.
//! - [`cohomology`]: relations, the candidates λ_q, bounded scans for the
//!   vanishing of the associated classes, and the closed-form cases.
//! - [`identities`]: binomial lemmas with telescoping certificates, the
//!   cleared polynomial identities and the witness constructions.
//! - [`cli`]: the command-line front end.

pub mod error;
pub mod cli;
pub mod cohomology;
pub mod groebner;
pub mod identities;
pub mod polyring;

pub use error::{Error, Result};
