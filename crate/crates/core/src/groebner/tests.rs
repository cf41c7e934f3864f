use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::polyring::{CoefficientDomain, Monomial, MonomialOrder, RingSpec};

fn zz(vars: &[&str]) -> Ring {
    RingSpec::integers(vars).unwrap()
}

fn gf(vars: &[&str], p: u64) -> Ring {
    RingSpec::new(vars, CoefficientDomain::PrimeField(p), MonomialOrder::DegRevLex).unwrap()
}

fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| Polynomial::parse(s, ring).unwrap()).collect()
}

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn basis_strings(gb: &GroebnerBasis) -> BTreeSet<String> {
    gb.basis().iter().map(|p| p.to_string()).collect()
}

/// Every S-polynomial of the basis reduces to zero against it.
fn s_pairs_reduce(gb: &GroebnerBasis) -> bool {
    let b = gb.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let (mi, ci) = b[i].leading_term().unwrap();
            let (mj, cj) = b[j].leading_term().unwrap();
            let l = mi.lcm(mj);
            let ring = gb.ring();
            let si = b[i].mul_term(&ring.inverse(ci).unwrap(), &mi.divide_into(&l).unwrap());
            let sj = b[j].mul_term(&ring.inverse(cj).unwrap(), &mj.divide_into(&l).unwrap());
            if !normal_form(&(&si - &sj), gb).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

#[test]
fn field_examples() {
    let r = gf(&["x", "y"], 2);
    let gb = buchberger(&polys(&r, &["x", "y"]), &r, &cfg()).unwrap();
    assert_eq!(basis_strings(&gb), ["x", "y"].iter().map(|s| s.to_string()).collect());

    let gb = buchberger(&polys(&r, &["x^2", "x"]), &r, &cfg()).unwrap();
    assert_eq!(gb.basis(), polys(&r, &["x"]).as_slice());

    let r5 = gf(&["x", "y"], 5);
    let gb = buchberger(&polys(&r5, &["x^2 + y^2", "x*y"]), &r5, &cfg()).unwrap();
    assert!(s_pairs_reduce(&gb));
    assert!(normal_form(&Polynomial::parse("x^3", &r5).unwrap(), &gb).unwrap().is_zero());
    for g in gb.basis() {
        assert_eq!(g.leading_coefficient().unwrap(), &BigInt::from(1));
    }
}

#[test]
fn buchberger_rejects_integers() {
    let r = zz(&["x"]);
    assert!(matches!(
        buchberger(&polys(&r, &["x"]), &r, &cfg()),
        Err(Error::DomainMismatch { .. })
    ));
}

#[test]
fn strong_basis_examples() {
    let r = zz(&["x", "y"]);
    let gb = strong_gb_z(&polys(&r, &["2*x", "3*x"]), &cfg()).unwrap();
    assert_eq!(gb.basis(), polys(&r, &["x"]).as_slice());

    let gb = strong_gb_z(&polys(&r, &["2*x", "3*y"]), &cfg()).unwrap();
    let expected: BTreeSet<String> = ["2*x", "3*y", "x*y"].iter().map(|s| s.to_string()).collect();
    assert_eq!(basis_strings(&gb), expected);
    let nf = normal_form(&Polynomial::parse("x*y + 1", &r).unwrap(), &gb).unwrap();
    assert_eq!(nf, Polynomial::one(&r));

    for p in [2u32, 3, 5, 7] {
        let rx = zz(&["x"]);
        let gb = strong_gb_z(&polys(&rx, &["x - 1", &p.to_string()]), &cfg()).unwrap();
        for e in 1..=2 {
            let q = p.pow(e);
            let f = Polynomial::parse(&format!("x^{q} - 1"), &rx).unwrap();
            assert!(normal_form(&f, &gb).unwrap().is_zero(), "p={p} q={q}");
        }
    }
}

#[test]
fn normal_form_examples() {
    let r = zz(&["x"]);
    let gb = strong_gb_z(&polys(&r, &["x"]), &cfg()).unwrap();
    assert!(normal_form(&Polynomial::parse("x^2 + x", &r).unwrap(), &gb).unwrap().is_zero());
    let gb = strong_gb_z(&polys(&r, &["x^2"]), &cfg()).unwrap();
    let f = Polynomial::parse("x + 1", &r).unwrap();
    assert_eq!(normal_form(&f, &gb).unwrap(), f);
    let other = zz(&["y"]);
    assert!(matches!(
        normal_form(&Polynomial::one(&other), &gb),
        Err(Error::RingMismatch(_))
    ));
}

#[test]
fn membership_carries_cofactors() {
    let r = zz(&["x"]);
    let gens = polys(&r, &["2*x", "3*x"]);
    let m = membership(&Polynomial::parse("x", &r).unwrap(), &gens, &cfg()).unwrap();
    let cert = m.certificate().unwrap();
    assert_eq!(cert.cofactors(), polys(&r, &["-1", "1"]).as_slice());
    assert!(!membership(&Polynomial::parse("x", &r).unwrap(), &polys(&r, &["2*x"]), &cfg())
        .unwrap()
        .is_member());
}

#[test]
fn koszul_membership() {
    let r = zz(&["x", "y"]);
    let gens = polys(&r, &["x^2", "y^2"]);
    let m = membership(&Polynomial::parse("x^2*y^2", &r).unwrap(), &gens, &cfg()).unwrap();
    let cert = m.certificate().unwrap();
    // the remainder must come out exactly as y^2 * x^2 with the second cofactor zero
    assert_eq!(cert.cofactors(), polys(&r, &["y^2", "0"]).as_slice());
}

#[test]
fn truncated_membership_agrees_with_full_basis() {
    let r = zz(&["u", "v", "w", "x", "y", "z"]);
    let gens = polys(&r, &["(v*z - w*y)^2", "(w*x - u*z)^2", "(u*y - v*x)^2"]);
    let f = Polynomial::parse("u^2*(v*z - w*y)^2 + 2*v*w*x*y*z", &r).unwrap();
    let mut full = cfg();
    full.truncate = false;
    let a = membership(&f, &gens, &cfg()).unwrap().is_member();
    let b = membership(&f, &gens, &full).unwrap().is_member();
    assert_eq!(a, b);
}

#[test]
fn resource_caps_surface_as_errors() {
    let r = zz(&["x", "y", "z"]);
    let gens = polys(&r, &["x^3 - y*z + 1", "y^2 - x*z - 2", "z^3 - x*y + 3"]);
    let tight = GbConfig { max_pairs: 1, ..GbConfig::default() };
    let f = Polynomial::parse("x*y*z", &r).unwrap();
    assert!(matches!(membership(&f, &gens, &tight), Err(Error::ResourceBound(_))));
}

#[test]
fn certificate_json_round_trip() {
    let r = zz(&["x", "y"]);
    let gens = polys(&r, &["2*x", "3*y"]);
    let f = Polynomial::parse("x*y + 4*x", &r).unwrap();
    let cert = membership(&f, &gens, &cfg()).unwrap().certificate().unwrap().clone();
    let json = serde_json::to_string(&cert.to_json()).unwrap();
    assert!(json.starts_with("{\"target\":{\"vars\":[\"x\",\"y\"]"));
    assert!(json.ends_with("\"modulus\":null,\"verified\":true}"));
    let back: CertificateJson = serde_json::from_str(&json).unwrap();
    assert_eq!(MembershipCertificate::from_json(&back).unwrap(), cert);
}

#[test]
fn field_certificates_serialize_with_modulus() {
    let r = gf(&["x", "y"], 5);
    let gens = polys(&r, &["x^2 + y^2", "x*y"]);
    let f = Polynomial::parse("x^3", &r).unwrap();
    let cert = membership(&f, &gens, &cfg()).unwrap().certificate().unwrap().clone();
    let json = cert.to_json();
    assert_eq!(json.modulus, Some(5));
    let back = MembershipCertificate::from_json(&json).unwrap();
    assert!(back.ring().is_integral());
    assert_eq!(back.modulus(), Some(5));
}

#[test]
fn tampered_certificates_are_rejected() {
    let r = zz(&["x"]);
    let gens = polys(&r, &["2*x", "3*x"]);
    let bad = MembershipCertificate::new(Polynomial::parse("x", &r).unwrap(), gens.clone(), polys(&r, &["1", "1"]), None);
    assert!(matches!(bad, Err(Error::CertificateInvalid(_))));
    let short = MembershipCertificate::new(Polynomial::parse("x", &r).unwrap(), gens.clone(), polys(&r, &["1"]), None);
    assert!(matches!(short, Err(Error::CertificateInvalid(_))));
    // 5x = 1*2x + 1*3x holds exactly, so also mod 5; 10x ≡ 0 only mod 5
    let modc = MembershipCertificate::new(Polynomial::parse("10*x", &r).unwrap(), gens, polys(&r, &["0", "0"]), Some(5));
    assert!(modc.is_ok());
}

#[test]
fn reduce_with_cofactors_recomposes() {
    let r = zz(&["x", "y"]);
    let gens = polys(&r, &["x^2 - 2*y", "3*x*y - 1"]);
    let gb = strong_gb_z(&gens, &cfg()).unwrap();
    let f = Polynomial::parse("x^3*y + 7*x*y^2 - 5", &r).unwrap();
    let (rem, cof) = gb.reduce_with_cofactors(&f, &cfg()).unwrap();
    let recomposed = cof.iter().zip(&gens).fold(rem.clone(), |acc, (c, g)| &acc + &(c * g));
    assert_eq!(recomposed, f);
    assert_eq!(normal_form(&rem, &gb).unwrap(), rem);
}

// ---- property suite ----

fn small_poly(ring: Ring, max_terms: usize, max_exp: u32, max_coeff: i64) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), -max_coeff..=max_coeff),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(&ring, terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c))))
    })
}

fn gens_strategy(ring: Ring) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(small_poly(ring, 3, 2, 6), 1..=3)
        .prop_map(|v| v.into_iter().filter(|p| !p.is_zero()).collect::<Vec<_>>())
        .prop_filter("nonempty", |v| !v.is_empty())
}

fn small_cfg() -> GbConfig {
    GbConfig { max_pairs: 2_000, max_degree: 24, max_terms: 20_000, max_reduction_steps: 200_000, truncate: false }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn nf_is_idempotent(gens in gens_strategy(zz(&["x", "y"])), f in small_poly(zz(&["x", "y"]), 5, 4, 20)) {
        if let Ok(gb) = strong_gb_z(&gens, &small_cfg()) {
            let nf = normal_form(&f, &gb).unwrap();
            prop_assert_eq!(normal_form(&nf, &gb).unwrap(), nf);
        }
    }

    #[test]
    fn every_returned_certificate_recomposes(gens in gens_strategy(zz(&["x", "y"])), f in small_poly(zz(&["x", "y"]), 4, 3, 10)) {
        if let Ok(Membership::Member(cert)) = membership(&f, &gens, &small_cfg()) {
            prop_assert!(cert.verify().is_ok());
            prop_assert!(cert.residual().is_zero());
        }
    }

    #[test]
    fn integer_membership_implies_membership_mod_p(
        gens in gens_strategy(zz(&["x", "y"])),
        mult in prop::collection::vec(small_poly(zz(&["x", "y"]), 2, 2, 4), 3),
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
    ) {
        let r = gens[0].ring().clone();
        let f = gens.iter().zip(&mult).fold(Polynomial::zero(&r), |acc, (g, m)| &acc + &(g * m));
        let fp = f.mod_reduce(p).unwrap();
        let gp: Vec<Polynomial> = gens.iter().map(|g| g.mod_reduce(p).unwrap()).filter(|g| !g.is_zero()).collect();
        if gp.is_empty() {
            prop_assert!(fp.is_zero());
        } else if let Ok(m) = membership(&fp, &gp, &small_cfg()) {
            prop_assert!(m.is_member());
        }
    }
}

/// Reduced field bases do not depend on the order of the input.
#[test]
fn field_basis_independent_of_input_order() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let r = gf(&["x", "y", "z"], 7);
    let gens = polys(&r, &["x^2*y - z", "x*y^2 - x + 1", "y*z - 2*x", "z^2 + 3*y"]);
    let reference = basis_strings(&buchberger(&gens, &r, &cfg()).unwrap());
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..20 {
        let mut g = gens.clone();
        g.shuffle(&mut rng);
        assert_eq!(basis_strings(&buchberger(&g, &r, &cfg()).unwrap()), reference);
    }
}

/// 200 random ideal combinations all reduce to zero against the strong basis.
#[test]
fn strong_basis_soundness_on_random_combinations() {
    use rand::{Rng, SeedableRng};
    let r = zz(&["x", "y", "z"]);
    let gens = polys(&r, &["2*x*y - z", "3*y^2 + x", "6*z - x^2"]);
    let gb = strong_gb_z(&gens, &cfg()).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(200);
    for _ in 0..200 {
        let mut f = Polynomial::zero(&r);
        for g in &gens {
            let terms = (0..rng.gen_range(0..3)).map(|_| {
                let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                (Monomial::new(e), BigInt::from(rng.gen_range(-5i64..=5)))
            });
            f = &f + &(&Polynomial::from_terms(&r, terms) * g);
        }
        assert!(normal_form(&f, &gb).unwrap().is_zero(), "{f}");
    }
}
