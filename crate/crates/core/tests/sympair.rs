use symcoh::catalog::{self, catalog};
use symcoh::pairspec::PairFile;
use symcoh::rootsys::{build_root_system, Family};
use symcoh::sympair::{build_pair, SatakeSpec, Subset};
use symcoh::{BigSymmetricPair, SymmetricPair, Weight, Q};

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

#[test]
fn split_a2_is_the_conic_pair() {
    let spec = SatakeSpec::new(build_root_system(Family::A, 2).unwrap(), &[], &[]).unwrap();
    let p = build_pair(spec).unwrap();
    assert_eq!(p.restricted_simple()[0], Weight::from_ints(&[4, -2]));
    assert_eq!(p.special_basis(), &[Weight::from_ints(&[2, 0]), Weight::from_ints(&[0, 2])]);
    assert_eq!(p.rho_coefficients(), &[q(1, 2), q(1, 2)]);
    // alpha~_1 = 2 omega~_1 - omega~_2 has a negative coordinate.
    assert_eq!(p.special_coords(&p.restricted_simple()[0]).unwrap(), vec![q(2, 1), q(-1, 1)]);
    assert!(!p.warnings().is_empty());
}

#[test]
fn cnh4_data() {
    for n in 4..=7 {
        let p: SymmetricPair = catalog("CnH4", Some(n)).unwrap();
        assert_eq!(p.rank_restricted(), 2);
        let mut theta2 = vec![0; n];
        theta2[0] = -1;
        theta2[1] = -1;
        theta2[2] = -1;
        assert_eq!(p.theta_simple(1), &theta2[..]);
        assert_eq!(
            p.special_basis(),
            &[Weight::fundamental(n, 1), Weight::fundamental(n, 3)]
        );
        assert_eq!(p.rho_coefficients(), &[q(2, 1), q(2 * n as i64 - 5, 2)]);
        assert!(!p.is_special(&Weight::fundamental(n, 0)));
        assert!(p.special_coords(&Weight::fundamental(n, 0)).is_none());
    }
    let p4: SymmetricPair = catalog("CnH4(4)", None).unwrap();
    assert_eq!(p4.theta_simple(3), &[0, 0, -2, -1]);
    let p6: SymmetricPair = catalog("CnH4(6)", None).unwrap();
    assert_eq!(p6.theta_simple(3), &[0, 0, -1, -1, -2, -1]);
}

#[test]
fn rank_one_entries() {
    let p: SymmetricPair = catalog("P2", None).unwrap();
    assert_eq!(p.rank_restricted(), 1);
    assert_eq!(p.restricted_simple()[0], Weight::from_ints(&[4]));
    assert_eq!(p.special_basis()[0], Weight::from_ints(&[2]));
    assert_eq!(p.rho_coefficients(), &[q(1, 2)]);
    for name in catalog::RANK_ONE {
        let f = catalog::file(name).unwrap();
        let n = f.min_n.map(|m| m.max(3));
        let p: SymmetricPair = f.build(n).unwrap();
        assert_eq!(p.rank_restricted(), 1, "{name}");
        assert!(p.rho_coefficients()[0] > Q::from(0));
    }
    let ab: SymmetricPair = catalog("A1xA1", None).unwrap();
    assert_eq!(ab.theta_simple(0), &[0, -1]);
}

#[test]
fn cones() {
    let p: SymmetricPair = catalog("conics", None).unwrap();
    let z = Weight::zero(2);
    assert_eq!(p.r_cone_member(Subset::empty(), &z), Some(vec![0, 0]));
    assert_eq!(p.r_cone_member(Subset::from_indices(&[0]), &z), None);
    assert_eq!(p.r_cone_member(Subset::empty(), &p.root_system().simple_root(0)), None);
    assert!(p.omega_cone_member(Subset::empty(), &z));
    assert!(!p.omega_cone_member(Subset::full(2), &z));
    assert!(p.omega_cone_member(Subset::from_indices(&[0]), &Weight::from_ints(&[-2, 0])));
    assert_eq!(p.special_coords(&Weight::from_ints(&[2, 4])).unwrap(), vec![q(1, 1), q(2, 1)]);
}

#[test]
fn rejects_invalid_satake_data() {
    let a3 = || build_root_system::<Q>(Family::A, 3).unwrap();
    // Two adjacent black nodes give a non-integral m.
    let spec = SatakeSpec::new(a3(), &[0, 1], &[]).unwrap();
    assert!(build_pair(spec).is_err());
    assert!(SatakeSpec::new(a3(), &[5], &[]).is_err());
    assert!(SatakeSpec::new(a3(), &[0], &[(0, 2)]).is_err());
}

#[test]
fn user_pair_files() {
    let f = PairFile::parse(
        r#"
        name = "AIII-2"
        family = "A"
        rank = 3
        delta0 = [2]
        thetabar = [[1, 3]]
        "#,
    )
    .unwrap();
    let p: SymmetricPair = f.build(None).unwrap();
    assert_eq!(p.rank_restricted(), 1);
    assert_eq!(p.special_basis()[0], Weight::from_ints(&[1, 0, 1]));
    assert!(PairFile::parse("name = \"x\"\nfamily = \"A\"\nrank = 2\nbogus = 1").is_err());
}

#[test]
fn big_rationals_agree() {
    let a: SymmetricPair = catalog("CnH4(5)", None).unwrap();
    let b: BigSymmetricPair = catalog("CnH4(5)", None).unwrap();
    let render = |v: &[String]| v.join(",");
    let ra: Vec<String> = a.rho_coefficients().iter().map(|x| x.to_string()).collect();
    let rb: Vec<String> = b.rho_coefficients().iter().map(|x| x.to_string()).collect();
    assert_eq!(render(&ra), render(&rb));
}
