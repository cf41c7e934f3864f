use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;

use super::IdentityReport;
use crate::cohomology::{combine_sum_with, lambda_q, make_relation, prime_power, RelationInstance};
use crate::error::{Error, Result};
use crate::groebner::{membership, GbConfig, MembershipCertificate};
use crate::polyring::{Polynomial, Ring, RingSpec};

/// The three product ideals in `ℤ[A,B,T]`, each enumerated as `(k+1)²`
/// generators indexed by `(a, b)`.
fn si_generators(ring: &Ring, q: u32, k: u32) -> Vec<Polynomial> {
    let v = |name: &str| Polynomial::var(ring, name).expect("known variable");
    let (a_, b_, t) = (v("A"), v("B"), v("T"));
    let ab = &a_ + &b_;
    let (tb, ta) = (&t + &b_, &t - &a_);
    let mut gens = Vec::with_capacity(3 * ((k + 1) * (k + 1)) as usize);
    let branches: [(&Polynomial, &Polynomial, &Polynomial, &Polynomial, &Polynomial); 3] = [
        (&ab, &a_, &t, &b_, &t),
        (&a_, &b_, &tb, &ab, &t),
        (&b_, &a_, &ta, &ab, &t),
    ];
    // lead^{q+k} T^a X^{k-a} Y^b W^{k-b}
    for (lead, x, y, w, tt) in branches {
        let l = lead.power(q + k);
        for a in 0..=k {
            for b in 0..=k {
                let g = &(&l * &(&tt.power(a) * &x.power(k - a))) * &(&y.power(b) * &w.power(k - b));
                gens.push(g);
            }
        }
    }
    gens
}

/// `((A+B)^q + (-A)^q + (-B)^q)/p · [(A+B)AB]^k` lies in the sum of the
/// three product ideals, at `k = q-1`. The certificate is kept in the
/// report for [`reg_witness`].
pub fn si_containment_check(p: u64, e: u32) -> Result<IdentityReport> {
    si_containment_with(p, e, &GbConfig::default())
}

pub fn si_containment_with(p: u64, e: u32, config: &GbConfig) -> Result<IdentityReport> {
    let start = Instant::now();
    let q = prime_power(p, e)?;
    let k = q - 1;
    let ring = RingSpec::integers(&["A", "B", "T"])?;
    let v = |name: &str| Polynomial::var(&ring, name).expect("known variable");
    let (a_, b_) = (v("A"), v("B"));
    let ab = &a_ + &b_;
    let numerator = &(&ab.power(q) + &(-&a_).power(q)) + &(-&b_).power(q);
    let lambda = numerator.exact_div_int(&BigInt::from(p))?;
    let target = &lambda * &(&(&ab * &a_) * &b_).power(k);
    let gens = si_generators(&ring, q, k);
    let found = membership(&target, &gens, config)?;
    let residual = match found.certificate() {
        Some(c) => c.residual(),
        // not a member: report the target itself as what is left over
        None => target.clone(),
    };
    let mut report = IdentityReport::new("si-containment", residual, start);
    report.param("p", p);
    report.param("e", e);
    report.param("k", k);
    report.note("lambda", &lambda);
    report.note("generators", gens.len());
    report.side_check("member", found.is_member());
    report.certificate = found.certificate().cloned();
    Ok(report)
}

/// Output of the regular-sequence construction.
#[derive(Debug, Clone)]
pub struct RegWitness {
    pub k: u32,
    pub certificate: MembershipCertificate,
}

/// Specializes the `ℤ[A,B,T]` containment along `A = -F₂G₂`, `B = -F₃G₃`,
/// `T = βF₂F₃` and divides out `(F₁F₂F₃)^k`, giving
/// `λ_q (G₁G₂G₃)^k ∈ (G_i^{q+k})` at `k = q-1`.
pub fn reg_witness(rel: &RelationInstance, alpha: &Polynomial, beta: &Polynomial, p: u64, e: u32) -> Result<RegWitness> {
    reg_witness_with(rel, alpha, beta, p, e, &GbConfig::default())
}

pub fn reg_witness_with(
    rel: &RelationInstance,
    alpha: &Polynomial,
    beta: &Polynomial,
    p: u64,
    e: u32,
    config: &GbConfig,
) -> Result<RegWitness> {
    if rel.n() != 3 {
        return Err(Error::WrongArity { expected: 3, actual: rel.n() });
    }
    if !rel.quotient().is_empty() {
        return Err(Error::InvalidRing("the regular-sequence witness needs a polynomial ring".into()));
    }
    let ring = rel.ring().clone();
    let alpha = alpha.embed(&ring)?;
    let beta = beta.embed(&ring)?;
    let (f, g) = (rel.f(), rel.g());
    let decomposed = &(&alpha * &f[0]) + &(&beta * &f[1]);
    if decomposed != g[2] {
        return Err(Error::DecompositionInvalid(format!(
            "G_3 - (αF_1 + βF_2) = {}",
            &g[2] - &decomposed
        )));
    }
    let q = prime_power(p, e)?;
    let k = q - 1;

    let si = si_containment_with(p, e, config)?;
    let si_cert = si
        .certificate
        .clone()
        .ok_or_else(|| Error::Internal("containment in ℤ[A,B,T] failed".into()))?;

    let a_img = -&(&f[1] * &g[1]);
    let b_img = -&(&f[2] * &g[2]);
    let t_img = &(&beta * &f[1]) * &f[2];
    let checks = [
        (&a_img + &b_img, &f[0] * &g[0], "A+B = F_1G_1"),
        (&t_img + &b_img, -&(&(&alpha * &f[0]) * &f[2]), "T+B = -αF_1F_3"),
        (
            &t_img - &a_img,
            -&(&(&f[0] * &g[0]) + &(&(&alpha * &f[0]) * &f[2])),
            "T-A = -F_1G_1 - αF_1F_3",
        ),
    ];
    for (lhs, rhs, what) in &checks {
        if lhs != rhs {
            return Err(Error::Internal(format!("specialization identity {what} fails")));
        }
    }
    let assignment: BTreeMap<String, Polynomial> =
        [("A".to_string(), a_img), ("B".to_string(), b_img), ("T".to_string(), t_img)].into();

    // generators after substitution, with (F_1F_2F_3)^k G_i^{q+k} taken out
    let sign = if (q + k) % 2 == 0 { Polynomial::one(&ring) } else { -&Polynomial::one(&ring) };
    let bf3 = &beta * &f[2];
    let bf2 = &beta * &f[1];
    let af3 = &alpha * &f[2];
    let (ng2, ng3) = (-&g[1], -&g[2]);
    let g1_af3 = -&(&g[0] + &af3);
    let naf3 = -&af3;
    let branches: [(Polynomial, &Polynomial, &Polynomial, &Polynomial, &Polynomial); 3] = [
        (f[0].power(q), &bf3, &ng2, &bf2, &ng3),
        (&sign * &f[1].power(q), &bf2, &ng3, &naf3, &g[0]),
        (&sign * &f[2].power(q), &bf3, &ng2, &g1_af3, &g[0]),
    ];
    let per = ((k + 1) * (k + 1)) as usize;
    let mut cofs = Vec::with_capacity(3);
    for (bi, (lead, x, y, z, w)) in branches.iter().enumerate() {
        let mut h = Polynomial::zero(&ring);
        let mut j = bi * per;
        for a in 0..=k {
            for b in 0..=k {
                let c = si_cert.cofactors()[j].substitute(&assignment, &ring)?;
                j += 1;
                if c.is_zero() {
                    continue;
                }
                let factor = &(&x.power(a) * &y.power(k - a)) * &(&z.power(b) * &w.power(k - b));
                h = &h + &(&c * &(lead * &factor));
            }
        }
        cofs.push(h);
    }
    let cand = lambda_q(rel, p, e)?;
    let certificate = MembershipCertificate::new(cand.target(k), cand.ideal(k), cofs, None)
        .map_err(|err| Error::Internal(format!("specialized certificate does not recompose: {err}")))?;
    Ok(RegWitness { k, certificate })
}

fn fresh_names(ring: &Ring) -> [String; 2] {
    let taken = |s: &str| ring.var_index(s).is_some();
    if !taken("s") && !taken("t") {
        return ["s".into(), "t".into()];
    }
    (0..)
        .map(|i| [format!("s{i}"), format!("t{i}")])
        .find(|[s, t]| !taken(s) && !taken(t))
        .expect("unbounded search")
}

/// Certificate at `k = q-1` for a relation `(F₁,F₂,F₃)` on the minors
/// `Δ₁ = vz-wy`, `Δ₂ = wx-uz`, `Δ₃ = uy-vx` in `ℤ[u,v,w,x,y,z]`.
///
/// `F` is written as `a·(u,v,w) + b·(x,y,z)`; the two column relations get
/// regular-sequence witnesses, which are combined and then specialized
/// along `s ↦ a`, `t ↦ b`.
pub fn theorem31_witness(f: &[Polynomial], p: u64, e: u32) -> Result<RegWitness> {
    theorem31_witness_with(f, p, e, &GbConfig::default())
}

pub fn theorem31_witness_with(f: &[Polynomial], p: u64, e: u32, config: &GbConfig) -> Result<RegWitness> {
    if f.len() != 3 {
        return Err(Error::WrongArity { expected: 3, actual: f.len() });
    }
    let ring = f[0].ring().clone();
    let v = |name: &str| {
        Polynomial::var(&ring, name).map_err(|_| Error::InvalidRing(format!("the ring needs the variable {name}")))
    };
    let (u, vv, w, x, y, z) = (v("u")?, v("v")?, v("w")?, v("x")?, v("y")?, v("z")?);
    let delta = vec![&(&vv * &z) - &(&w * &y), &(&w * &x) - &(&u * &z), &(&u * &y) - &(&vv * &x)];
    let rel = make_relation(f.to_vec(), delta.clone())?;

    let fail = || Error::DecompositionFailed("F is not a combination of the columns (u,v,w) and (x,y,z)".into());
    let a = (&(&y * &f[0]) - &(&x * &f[1])).exact_div(&delta[2])?.ok_or_else(fail)?;
    let b = (&(&u * &f[1]) - &(&vv * &f[0])).exact_div(&delta[2])?.ok_or_else(fail)?;
    for (i, (c1, c2)) in [(&u, &x), (&vv, &y), (&w, &z)].into_iter().enumerate() {
        if &(&a * c1) + &(&b * c2) != f[i] {
            return Err(fail());
        }
    }

    let rel1 = make_relation(vec![u.clone(), vv.clone(), w.clone()], delta.clone())?;
    let rel2 = make_relation(vec![x.clone(), y.clone(), z.clone()], delta)?;
    let w1 = reg_witness_with(&rel1, &y, &(-&x), p, e, config)?;
    let w2 = reg_witness_with(&rel2, &(-&vv), &u, p, e, config)?;
    let names = fresh_names(&ring);
    let combo = combine_sum_with(
        &rel1,
        &rel2,
        (w1.k, &w1.certificate),
        (w2.k, &w2.certificate),
        p,
        e,
        [&names[0], &names[1]],
    )?;

    let ext = combo.relation.ring().clone();
    let mut assignment = BTreeMap::new();
    for name in ring.variables() {
        assignment.insert(name.clone(), Polynomial::var(&ring, name)?);
    }
    assignment.insert(names[0].clone(), a);
    assignment.insert(names[1].clone(), b);
    let sub = |poly: &Polynomial| poly.embed(&ext).and_then(|x| x.substitute(&assignment, &ring));
    let cofs = combo.certificate.cofactors().iter().map(sub).collect::<Result<Vec<_>>>()?;
    let cand = lambda_q(&rel, p, e)?;
    let k = combo.k;
    let certificate = MembershipCertificate::new(cand.target(k), cand.ideal(k), cofs, None)
        .map_err(|err| Error::Internal(format!("specialized combination does not recompose: {err}")))?;
    Ok(RegWitness { k, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::parse_relation;

    fn x6() -> Ring {
        RingSpec::integers(&["u", "v", "w", "x", "y", "z"]).unwrap()
    }

    #[test]
    fn containment_p2() {
        let report = si_containment_check(2, 1).unwrap();
        assert_eq!(report.notes["lambda"], "A^2 + A*B + B^2");
        assert!(report.passed());
        assert_eq!(report.certificate.as_ref().unwrap().generators().len(), 12);
    }

    #[test]
    fn reg_hochster() {
        let r = x6();
        let rel = parse_relation(&r, &["u", "v", "w"], &["v*z - w*y", "w*x - u*z", "u*y - v*x"]).unwrap();
        let y = Polynomial::parse("y", &r).unwrap();
        let mx = Polynomial::parse("-x", &r).unwrap();
        let w = reg_witness(&rel, &y, &mx, 2, 1).unwrap();
        assert_eq!(w.k, 1);
        assert!(w.certificate.verify().is_ok());
        assert!(matches!(reg_witness(&rel, &mx, &y, 2, 1), Err(Error::DecompositionInvalid(_))));
    }

    #[test]
    fn reg_degenerate() {
        let r = x6();
        let rel = parse_relation(&r, &["u", "v", "w"], &["v", "-u", "0"]).unwrap();
        let zero = Polynomial::zero(&r);
        for (p, e) in [(2, 1), (3, 1)] {
            let w = reg_witness(&rel, &zero, &zero, p, e).unwrap();
            assert_eq!(w.k, (p as u32) - 1);
        }
    }

    #[test]
    fn column_witness_cases() {
        let r = x6();
        let cols = |s: [&str; 3]| s.iter().map(|t| Polynomial::parse(t, &r).unwrap()).collect::<Vec<_>>();
        assert_eq!(theorem31_witness(&cols(["u", "v", "w"]), 2, 1).unwrap().k, 1);
        let mixed = cols(["u*x + x^2", "v*x + x*y", "w*x + x*z"]);
        assert!(theorem31_witness(&mixed, 2, 1).unwrap().certificate.verify().is_ok());
    }
}
