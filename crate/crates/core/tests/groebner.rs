use ptorsion::cohomology::{lambda_q, parse_relation, RelationInstance};
use ptorsion::groebner::{membership, GbConfig, Membership, MembershipCertificate};
use ptorsion::polyring::RingSpec;

fn hochster() -> RelationInstance {
    let r = RingSpec::integers(&["u", "v", "w", "x", "y", "z"]).unwrap();
    parse_relation(&r, &["u", "v", "w"], &["v*z - w*y", "w*x - u*z", "u*y - v*x"]).unwrap()
}

fn decide(rel: &RelationInstance, p: u64, k: u32, truncate: bool) -> Membership {
    let cand = lambda_q(rel, p, 1).unwrap();
    let config = GbConfig { truncate, ..GbConfig::default() };
    membership(&cand.target(k), &cand.ideal(k), &config).unwrap()
}

#[test]
fn truncated_and_full_completion_agree() {
    let rel = hochster();
    for (p, k, member) in [(2, 0, false), (2, 1, true), (3, 1, false)] {
        let cut = decide(&rel, p, k, true);
        let full = decide(&rel, p, k, false);
        assert_eq!(cut.is_member(), member, "truncated p={p} k={k}");
        assert_eq!(full.is_member(), member, "full p={p} k={k}");
    }
}

#[test]
fn certificates_survive_a_file_round_trip() {
    let rel = hochster();
    let Membership::Member(cert) = decide(&rel, 2, 1, true) else { panic!("member") };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    std::fs::write(&path, serde_json::to_string_pretty(&cert.to_json()).unwrap()).unwrap();
    let back: ptorsion::groebner::CertificateJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let loaded = MembershipCertificate::from_json(&back).unwrap();
    assert_eq!(loaded, cert);
}
