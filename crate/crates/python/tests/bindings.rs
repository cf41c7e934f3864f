use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module(script: &str) {
    Python::attach(|py| {
        let module = PyModule::new(py, "ptorsion_py").unwrap();
        ptorsion_py::register(&module).unwrap();
        let sys = py.import("sys").unwrap();
        sys.getattr("modules").unwrap().set_item("ptorsion_py", &module).unwrap();
        let code = std::ffi::CString::new(script).unwrap();
        if let Err(e) = py.run(&code, None, None) {
            e.print(py);
            panic!("python script failed");
        }
    });
}

#[test]
fn polynomial_arithmetic() {
    with_module(
        r#"
import ptorsion_py as pt
R = pt.Ring(["x", "y"])
f = R.parse("(x+y)^2")
assert str(f - R.parse("x^2 + 2*x*y + y^2")) == "0"
assert f ** 2 == f * f
assert str(f.mod_reduce(2)) == "x^2 + y^2"
try:
    R.parse("x +")
    raise SystemExit("parse error not raised")
except pt.InputError:
    pass
"#,
    );
}

#[test]
fn koszul_scan_and_certificate_json() {
    with_module(
        r#"
import ptorsion_py as pt
R = pt.Ring(["x", "y"])
x, y = R.parse("x"), R.parse("y")
out = pt.check_conjecture([y, -x], [x, y], 2)
assert out["status"] == "FOUND" and out["k"] == 0, out
cert = out["certificate"]
assert cert.verify()
again = pt.Certificate.from_json(cert.to_json())
assert again.verify() and again.target == cert.target
alpha = pt.lift_relation(cert, [y, -x], [x, y], 2, 1, 0)
assert alpha[0] * x ** 2 + alpha[1] * y ** 2 == R.parse("0")
assert [a.mod_reduce(2) for a in alpha] == [y.mod_reduce(2) ** 2, x.mod_reduce(2) ** 2]
"#,
    );
}

#[test]
fn witnesses_and_identities() {
    with_module(
        r#"
import ptorsion_py as pt
assert pt.compute_d(2, 1) == 3 and pt.compute_d(3, 1) == 40
k, cert, table = pt.plucker_witness(2, 1)
assert k == 1 and cert.verify() and [c for _, _, c in table] == [2, 3, 6]
modular, exact = pt.hochster_mu_lift(2, 1)
assert modular.modulus == 2 and exact.modulus is None and exact.verify()
assert pt.si_containment_check(2, 1).verify()
assert pt.identity_check("iden", 2)[0]
assert pt.lemma2_eval(3, 0, 2) == 0
assert pt.binom(-1, 0) == 0
try:
    pt.identity_check("asym", 100000)
    raise SystemExit("resource bound not raised")
except pt.ResourceBoundError:
    pass
"#,
    );
}
