use num_bigint::BigInt;
use proptest::prelude::*;

use ptorsion::cohomology::{check_conjecture, combine_sum, lambda_q, make_relation, n2_closed_form, raise_k, RelationInstance};
use ptorsion::groebner::{certificate_from_lift, lift_relation, GbConfig};
use ptorsion::polyring::{Monomial, Polynomial, Ring, RingSpec};

fn ring() -> Ring {
    RingSpec::integers(&["a", "b", "c"]).unwrap()
}

fn poly(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..5), 1..=max_terms).prop_map(|terms| {
        Polynomial::from_terms(&ring(), terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c))))
    })
}

/// `(h g₂, -h g₁)` against `(g₁, g₂)`.
fn koszul_multiple() -> impl Strategy<Value = RelationInstance> {
    (poly(2), poly(2), poly(2)).prop_filter_map("degenerate", |(g1, g2, h)| {
        if g1.is_zero() || g2.is_zero() || h.is_zero() {
            return None;
        }
        make_relation(vec![&h * &g2, -&(&h * &g1)], vec![g1, g2]).ok()
    })
}

fn primes() -> impl Strategy<Value = (u64, u32)> {
    prop::sample::select(vec![(2u64, 1u32), (3, 1), (2, 2)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn power_sum_vanishes_mod_p(rel in koszul_multiple(), (p, e) in primes()) {
        let q = (p as u32).pow(e);
        let sum = rel.f().iter().zip(rel.g()).fold(Polynomial::zero(rel.ring()), |acc, (f, g)| &acc + &(f * g).power(q));
        prop_assert!(sum.is_zero_mod(p));
        let cand = lambda_q(&rel, p, e).unwrap();
        prop_assert_eq!(cand.lambda().scale(&BigInt::from(p)), sum);
    }

    #[test]
    fn closed_form_matches_lambda_and_lifts(rel in koszul_multiple(), (p, e) in primes()) {
        let (lambda, cert) = n2_closed_form(&rel, p, e).unwrap();
        let cand = lambda_q(&rel, p, e).unwrap();
        prop_assert_eq!(&lambda, cand.lambda());
        prop_assert!(cert.verify().is_ok());
        let alpha = lift_relation(&cert, &rel, p, e, 0).unwrap();
        let back = certificate_from_lift(&alpha, &rel, p, e, 0).unwrap();
        prop_assert_eq!(back.cofactors(), cert.cofactors());
        let raised = raise_k(&cand, 0, &cert).unwrap();
        prop_assert!(raised.verify().is_ok());
        prop_assert_eq!(raised.target(), &cand.target(1));
    }

    #[test]
    fn combinations_verify(h1 in poly(2), h2 in poly(2), g1 in poly(2), g2 in poly(2)) {
        prop_assume!(!g1.is_zero() && !g2.is_zero() && !h1.is_zero() && !h2.is_zero());
        let r1 = make_relation(vec![&h1 * &g2, -&(&h1 * &g1)], vec![g1.clone(), g2.clone()]).unwrap();
        let r2 = make_relation(vec![&h2 * &g2, -&(&h2 * &g1)], vec![g1, g2]).unwrap();
        let (_, c1) = n2_closed_form(&r1, 2, 1).unwrap();
        let (_, c2) = n2_closed_form(&r2, 2, 1).unwrap();
        let combo = combine_sum(&r1, &r2, (0, &c1), (0, &c2), 2, 1).unwrap();
        prop_assert!(combo.certificate.verify().is_ok());
    }
}

#[test]
fn scan_is_monotone_on_found_instances() {
    let r = ring();
    let p = |s: &str| Polynomial::parse(s, &r).unwrap();
    let rel = make_relation(vec![p("b*c"), p("-a*c")], vec![p("a"), p("b")]).unwrap();
    for (pr, e) in [(2, 1), (3, 1)] {
        let cand = lambda_q(&rel, pr, e).unwrap();
        let scan = check_conjecture(&cand, 2, &[], &GbConfig::default()).unwrap();
        let (k, cert) = scan.certificate().unwrap();
        let up = raise_k(&cand, k, cert).unwrap();
        assert!(up.verify().is_ok());
        let direct = check_conjecture(&cand, k + 1, &[], &GbConfig::default()).unwrap();
        assert!(direct.is_found());
    }
}
