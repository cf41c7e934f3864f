"""Smoke test for the compiled extension: `maturin develop` then run this."""

import ptorsion_py as pt


def main():
    ring = pt.Ring(["u", "v", "w", "x", "y", "z"])
    P = ring.parse
    f = [P("u"), P("v"), P("w")]
    g = [P("v*z - w*y"), P("w*x - u*z"), P("u*y - v*x")]

    lam = pt.lambda_q(f, g, 2)
    print("lambda_2 terms:", lam.num_terms())

    out = pt.check_conjecture(f, g, 2, k_max=1)
    print("scan:", out["status"], "k =", out["k"])
    assert out["status"] == "FOUND"
    assert out["certificate"].verify()

    k, cert = pt.theorem31_witness(f, 2, 1)
    print("column witness k =", k, "verified:", cert.verify())
    assert cert.verify()

    k, cert, table = pt.plucker_witness(3, 1)
    print("plucker d =", pt.compute_d(3, 1), "k =", k, "coefficients:", [c for _, _, c in table])
    assert cert.verify()

    text = cert.to_json()
    assert pt.Certificate.from_json(text).verify()
    print("ok")


if __name__ == "__main__":
    main()
