//! Python bindings: rings, polynomials, membership certificates, the
//! torsion scan and the witness constructions.
//!
//! Library errors surface as `PtorsionError` subclasses so callers can tell
//! bad input from a failed check or a resource cap.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ptorsion::cohomology::{self as coh, Outcome, RelationInstance};
use ptorsion::groebner::{self as gb, CertificateJson, GbConfig, MembershipCertificate};
use ptorsion::identities as id;
use ptorsion::polyring::{CoefficientDomain, MonomialOrder, Polynomial, Ring, RingSpec};
use ptorsion::Error;

create_exception!(ptorsion_py, PtorsionError, PyException);
create_exception!(ptorsion_py, InputError, PtorsionError);
create_exception!(ptorsion_py, VerificationError, PtorsionError);
create_exception!(ptorsion_py, ResourceBoundError, PtorsionError);

fn py_err(err: Error) -> PyErr {
    let msg = err.to_string();
    match err {
        Error::ResourceBound(_) => ResourceBoundError::new_err(msg),
        Error::CertificateInvalid(_) | Error::Internal(_) | Error::NotDivisible { .. } => VerificationError::new_err(msg),
        _ => InputError::new_err(msg),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for ptorsion::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

#[pyclass(name = "Ring", module = "ptorsion_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyRing {
    inner: Ring,
}

#[pymethods]
impl PyRing {
    /// `Ring(["x", "y"], modulus=None, order="degrevlex")`; a modulus makes
    /// the coefficients 𝔽_p.
    #[new]
    #[pyo3(signature = (variables, modulus = None, order = "degrevlex"))]
    fn new(variables: Vec<String>, modulus: Option<u64>, order: &str) -> PyResult<Self> {
        let order = match order.to_ascii_lowercase().as_str() {
            "lex" => MonomialOrder::Lex,
            "deglex" => MonomialOrder::DegLex,
            "degrevlex" => MonomialOrder::DegRevLex,
            other => return Err(InputError::new_err(format!("unknown monomial order `{other}`"))),
        };
        let domain = modulus.map_or(CoefficientDomain::Integers, CoefficientDomain::PrimeField);
        Ok(PyRing { inner: RingSpec::new(&variables, domain, order).py()? })
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.inner.variables().to_vec()
    }

    #[getter]
    fn characteristic(&self) -> Option<u64> {
        self.inner.domain().characteristic()
    }

    /// Parses an expression such as `"(x+y)^2 - 3*x"`.
    fn parse(&self, text: &str) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: Polynomial::parse(text, &self.inner).py()? })
    }

    fn __repr__(&self) -> String {
        format!("Ring({})", self.inner)
    }
}

#[pyclass(name = "Polynomial", module = "ptorsion_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyPoly {
    inner: Polynomial,
}

fn inners(polys: &[PyPoly]) -> Vec<Polynomial> {
    polys.iter().map(|p| p.inner.clone()).collect()
}

fn wrap(polys: &[Polynomial]) -> Vec<PyPoly> {
    polys.iter().map(|p| PyPoly { inner: p.clone() }).collect()
}

#[pymethods]
impl PyPoly {
    #[getter]
    fn ring(&self) -> PyRing {
        PyRing { inner: self.inner.ring().clone() }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn degree(&self) -> u32 {
        self.inner.degree()
    }

    /// `[(coefficient, exponents), ...]`, leading term first.
    fn terms(&self) -> Vec<(BigInt, Vec<u32>)> {
        self.inner.terms().iter().map(|(m, c)| (c.clone(), m.exponents().to_vec())).collect()
    }

    fn mod_reduce(&self, p: u64) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.mod_reduce(p).py()? })
    }

    fn exact_div_int(&self, m: BigInt) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.exact_div_int(&m).py()? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.checked_add(&other.inner).py()? })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.checked_sub(&other.inner).py()? })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        Ok(PyPoly { inner: self.inner.checked_mul(&other.inner).py()? })
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly { inner: -&self.inner }
    }

    fn __pow__(&self, n: u32, modulo: Option<Py<PyAny>>) -> PyResult<PyPoly> {
        if modulo.is_some() {
            return Err(InputError::new_err("three-argument pow is not supported"));
        }
        Ok(PyPoly { inner: self.inner.power(n) })
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

#[pyclass(name = "Certificate", module = "ptorsion_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyCertificate {
    inner: MembershipCertificate,
}

#[pymethods]
impl PyCertificate {
    /// Builds and checks `target = Σ cofactors[i] * generators[i]` (mod
    /// `modulus` if given).
    #[new]
    #[pyo3(signature = (target, generators, cofactors, modulus = None))]
    fn new(target: PyPoly, generators: Vec<PyPoly>, cofactors: Vec<PyPoly>, modulus: Option<u64>) -> PyResult<Self> {
        let inner = MembershipCertificate::new(target.inner, inners(&generators), inners(&cofactors), modulus).py()?;
        Ok(PyCertificate { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let json: CertificateJson = serde_json::from_str(text).map_err(|e| InputError::new_err(e.to_string()))?;
        Ok(PyCertificate { inner: MembershipCertificate::from_json(&json).py()? })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("serializable")
    }

    #[getter]
    fn target(&self) -> PyPoly {
        PyPoly { inner: self.inner.target().clone() }
    }

    #[getter]
    fn generators(&self) -> Vec<PyPoly> {
        wrap(self.inner.generators())
    }

    #[getter]
    fn cofactors(&self) -> Vec<PyPoly> {
        wrap(self.inner.cofactors())
    }

    #[getter]
    fn modulus(&self) -> Option<u64> {
        self.inner.modulus()
    }

    fn verify(&self) -> bool {
        self.inner.verify().is_ok()
    }

    fn __repr__(&self) -> String {
        format!("Certificate({} generators, target {} terms)", self.inner.generators().len(), self.inner.target().num_terms())
    }
}

fn cert(c: MembershipCertificate) -> PyCertificate {
    PyCertificate { inner: c }
}

fn relation(f: &[PyPoly], g: &[PyPoly], quotient: &[PyPoly]) -> PyResult<RelationInstance> {
    RelationInstance::new(inners(f), inners(g), inners(quotient)).py()
}

/// A certificate for `f ∈ (gens)`, or `None` when `f` is not a member.
#[pyfunction]
#[pyo3(signature = (f, gens, max_pairs = 500_000))]
fn membership(f: &PyPoly, gens: Vec<PyPoly>, max_pairs: usize) -> PyResult<Option<PyCertificate>> {
    let config = GbConfig { max_pairs, ..GbConfig::default() };
    Ok(gb::membership(&f.inner, &inners(&gens), &config).py()?.certificate().cloned().map(cert))
}

/// The reduced (field) or strong (ℤ) Gröbner basis of `gens`.
#[pyfunction]
fn groebner_basis(gens: Vec<PyPoly>) -> PyResult<Vec<PyPoly>> {
    let gens = inners(&gens);
    let ring = gens.first().map(|g| g.ring().clone()).ok_or_else(|| InputError::new_err("no generators"))?;
    let config = GbConfig::default();
    let basis = if ring.is_integral() {
        gb::strong_gb_z(&gens, &config)
    } else {
        gb::buchberger(&gens, &ring, &config)
    }
    .py()?;
    Ok(wrap(basis.basis()))
}

/// `λ_q = (Σ (F_i G_i)^q) / p` for the relation `Σ F_i G_i = 0`.
#[pyfunction]
#[pyo3(signature = (f, g, p, e = 1, quotient = Vec::new()))]
fn lambda_q(f: Vec<PyPoly>, g: Vec<PyPoly>, p: u64, e: u32, quotient: Vec<PyPoly>) -> PyResult<PyPoly> {
    let rel = relation(&f, &g, &quotient)?;
    Ok(PyPoly { inner: coh::lambda_q(&rel, p, e).py()?.lambda().clone() })
}

/// Scans `k = 0..=k_max`; returns `{"status", "k", "certificate"}`.
#[pyfunction]
#[pyo3(signature = (f, g, p, e = 1, k_max = 2, quotient = Vec::new()))]
fn check_conjecture<'py>(
    py: Python<'py>,
    f: Vec<PyPoly>,
    g: Vec<PyPoly>,
    p: u64,
    e: u32,
    k_max: u32,
    quotient: Vec<PyPoly>,
) -> PyResult<Bound<'py, PyDict>> {
    let rel = relation(&f, &g, &quotient)?;
    let cand = coh::lambda_q(&rel, p, e).py()?;
    let report = py.detach(|| coh::check_conjecture(&cand, k_max, &[], &GbConfig::default())).py()?;
    let out = PyDict::new(py);
    out.set_item("status", report.outcome.label())?;
    match report.outcome {
        Outcome::Found { k, certificate } => {
            out.set_item("k", k)?;
            out.set_item("certificate", cert(certificate))?;
        }
        Outcome::Exhausted { k_max } => out.set_item("k", k_max)?,
        Outcome::Unknown { k, reason } => {
            out.set_item("k", k)?;
            out.set_item("reason", reason)?;
        }
    }
    Ok(out)
}

/// `α_i` with `Σ α_i G_i^{q+k} = 0` and `α_i ≡ F_i^q ∏_{j≠i} G_j^k (mod p)`.
#[pyfunction]
#[pyo3(signature = (certificate, f, g, p, e, k))]
fn lift_relation(certificate: &PyCertificate, f: Vec<PyPoly>, g: Vec<PyPoly>, p: u64, e: u32, k: u32) -> PyResult<Vec<PyPoly>> {
    let rel = relation(&f, &g, &[])?;
    Ok(wrap(&gb::lift_relation(&certificate.inner, &rel, p, e, k).py()?))
}

#[pyfunction]
fn binom(k: i64, i: i64) -> BigInt {
    id::binom(k, i)
}

/// `(sum, closed form, case)` for the first binomial lemma.
#[pyfunction]
fn lemma1_eval(m: i64, s: i64, r: i64, k: i64) -> (BigInt, BigInt, String) {
    let e = id::lemma1_eval(m, s, r, k);
    (e.sum, e.closed, format!("{:?}", e.case).to_uppercase())
}

#[pyfunction]
fn lemma2_eval(m: i64, s: i64, k: i64) -> BigInt {
    id::lemma2_eval(m, s, k)
}

#[pyfunction]
fn compute_d(p: u64, e: u32) -> PyResult<BigInt> {
    id::compute_d(p, e).py()
}

fn report_json(report: &id::IdentityReport) -> String {
    serde_json::to_string(&report.to_json()).expect("serializable")
}

/// Runs a polynomial identity check; returns `(passed, report_json)`.
#[pyfunction]
fn identity_check(py: Python<'_>, name: &str, k: u32) -> PyResult<(bool, String)> {
    let report = py
        .detach(|| match name {
            "asym" => id::lemma_asym_check(k),
            "iden" => id::lemma_iden_check(k),
            "hochster" => id::hochster_gamma(k),
            other => Err(Error::Format(format!("unknown identity `{other}`"))),
        })
        .py()?;
    Ok((report.passed(), report_json(&report)))
}

/// `(k, certificate, coefficient table)` for the Plücker construction.
#[pyfunction]
fn plucker_witness(py: Python<'_>, p: u64, e: u32) -> PyResult<(u32, PyCertificate, Vec<(u32, u32, BigInt)>)> {
    let w = py.detach(|| id::plucker_witness(p, e)).py()?;
    if !w.passed() {
        return Err(VerificationError::new_err("Plücker identity or congruences failed"));
    }
    let table = w
        .coefficients
        .iter()
        .map(|c| (c.r, c.n, c.value.parse().expect("decimal")))
        .collect();
    Ok((w.k, cert(w.certificate), table))
}

/// `(modular certificate, exact certificate)` at `k = q-1`.
#[pyfunction]
fn hochster_mu_lift(py: Python<'_>, p: u64, e: u32) -> PyResult<(PyCertificate, PyCertificate)> {
    let lift = py.detach(|| id::hochster_mu_lift(p, e)).py()?;
    Ok((cert(lift.modular), cert(lift.exact)))
}

#[pyfunction]
fn si_containment_check(py: Python<'_>, p: u64, e: u32) -> PyResult<Option<PyCertificate>> {
    let report = py.detach(|| id::si_containment_check(p, e)).py()?;
    Ok(report.certificate.map(cert))
}

#[pyfunction]
fn reg_witness(f: Vec<PyPoly>, g: Vec<PyPoly>, alpha: &PyPoly, beta: &PyPoly, p: u64, e: u32) -> PyResult<(u32, PyCertificate)> {
    let rel = relation(&f, &g, &[])?;
    let w = id::reg_witness(&rel, &alpha.inner, &beta.inner, p, e).py()?;
    Ok((w.k, cert(w.certificate)))
}

#[pyfunction]
fn theorem31_witness(f: Vec<PyPoly>, p: u64, e: u32) -> PyResult<(u32, PyCertificate)> {
    let w = id::theorem31_witness(&inners(&f), p, e).py()?;
    Ok((w.k, cert(w.certificate)))
}

#[pymodule]
fn ptorsion_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds every class, exception and function to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("PtorsionError", py.get_type::<PtorsionError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("VerificationError", py.get_type::<VerificationError>())?;
    m.add("ResourceBoundError", py.get_type::<ResourceBoundError>())?;
    m.add_class::<PyRing>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyCertificate>()?;
    for f in [
        wrap_pyfunction!(membership, m)?,
        wrap_pyfunction!(groebner_basis, m)?,
        wrap_pyfunction!(lambda_q, m)?,
        wrap_pyfunction!(check_conjecture, m)?,
        wrap_pyfunction!(lift_relation, m)?,
        wrap_pyfunction!(binom, m)?,
        wrap_pyfunction!(lemma1_eval, m)?,
        wrap_pyfunction!(lemma2_eval, m)?,
        wrap_pyfunction!(compute_d, m)?,
        wrap_pyfunction!(identity_check, m)?,
        wrap_pyfunction!(plucker_witness, m)?,
        wrap_pyfunction!(hochster_mu_lift, m)?,
        wrap_pyfunction!(si_containment_check, m)?,
        wrap_pyfunction!(reg_witness, m)?,
        wrap_pyfunction!(theorem31_witness, m)?,
    ] {
        m.add_function(f)?;
    }
    Ok(())
}
