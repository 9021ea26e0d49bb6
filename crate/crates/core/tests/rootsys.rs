use num_bigint::BigUint;
use symcoh::rootsys::{build_root_system, Family, RootSystem};
use symcoh::{BigRootSystem, BigWeight, Weight, Q};

fn rs(f: Family, n: usize) -> RootSystem<Q> {
    build_root_system(f, n).unwrap()
}

#[test]
fn positive_root_counts() {
    let mut a2: Vec<Vec<i64>> = rs(Family::A, 2).positive_roots().to_vec();
    a2.sort();
    assert_eq!(a2, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    for (f, n, count) in [
        (Family::A, 4, 10),
        (Family::B, 3, 9),
        (Family::C, 4, 16),
        (Family::C, 6, 36),
        (Family::D, 4, 12),
        (Family::D, 5, 20),
        (Family::F, 4, 24),
    ] {
        assert_eq!(rs(f, n).positive_roots().len(), count, "{f:?}{n}");
    }
    assert!(build_root_system::<Q>(Family::D, 3).is_err());
    assert!(build_root_system::<Q>(Family::F, 3).is_err());
}

#[test]
fn weyl_orders() {
    for (f, n, order) in [(Family::A, 3, 24), (Family::B, 3, 48), (Family::C, 4, 384), (Family::D, 4, 192), (Family::F, 4, 1152)] {
        let r = rs(f, n);
        assert_eq!(r.weyl_order(), order);
        assert_eq!(r.weyl_elements().len() as u64, order);
        assert_eq!(r.longest_element().length(), r.positive_roots().len());
    }
}

#[test]
fn pairings() {
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 4), (Family::F, 4)] {
        let r = rs(f, n);
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            assert_eq!(r.pair_coroot(r.rho(), &e).unwrap(), Q::from(1));
            for j in 0..n {
                let want = Q::from(i64::from(i == j));
                assert_eq!(r.pair_coroot(&Weight::fundamental(n, i), &{
                    let mut a = vec![0; n];
                    a[j] = 1;
                    a
                }).unwrap(), want);
            }
        }
    }
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.pair_coroot(&a2.simple_root(0), &[0, 1]).unwrap(), Q::from(-1));
    assert!(a2.pair_coroot(a2.rho(), &[1, -1]).is_err());
}

#[test]
fn dot_action() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.dot_dominant(&Weight::zero(2)), Some((Weight::zero(2), 0)));
    assert_eq!(a2.dot_dominant(&-a2.rho()), None);
    assert_eq!(a2.dot_dominant(&-&a2.simple_root(0)), Some((Weight::zero(2), 1)));
    let orbit = a2.dot_orbit(&Weight::zero(2)).unwrap();
    assert_eq!(orbit.len(), 6);
    assert_eq!(orbit.iter().filter(|w| w.is_zero()).count(), 1);
    assert!(orbit.contains(&a2.rho().scale(&Q::from(-2))));
    let a1 = rs(Family::A, 1);
    let mut o = a1.dot_orbit(&Weight::zero(1)).unwrap();
    o.sort();
    assert_eq!(o, vec![Weight::from_ints(&[-2]), Weight::zero(1)]);
}

#[test]
fn longest_element_action() {
    let a2 = rs(Family::A, 2);
    assert!(a2.longest_act(&Weight::zero(2)).is_zero());
    for (a, b) in [(1, 0), (3, -2), (-4, 7)] {
        let v = Weight::from_ints(&[a, b]);
        assert_eq!(a2.longest_act(&v), Weight::from_ints(&[-b, -a]));
    }
    let f4 = rs(Family::F, 4);
    let v = Weight::from_ints(&[1, -2, 3, 5]);
    assert_eq!(f4.longest_act(&f4.longest_act(&v)), v);
}

#[test]
fn dimensions() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.weyl_dim(&Weight::zero(2)).unwrap(), BigUint::from(1u32));
    assert_eq!(a2.weyl_dim(&Weight::from_ints(&[1, 0])).unwrap(), BigUint::from(3u32));
    assert_eq!(a2.weyl_dim(a2.rho()).unwrap(), BigUint::from(8u32));
    let c4 = rs(Family::C, 4);
    // Standard representation of Sp(8) and its adjoint.
    assert_eq!(c4.weyl_dim(&Weight::fundamental(4, 0)).unwrap(), BigUint::from(8u32));
    assert_eq!(c4.weyl_dim(&Weight::from_ints(&[2, 0, 0, 0])).unwrap(), BigUint::from(36u32));
    let f4 = rs(Family::F, 4);
    // The 26- and 52-dimensional representations sit at the short and long ends.
    let mut dims: Vec<BigUint> = (0..4).map(|i| f4.weyl_dim(&Weight::fundamental(4, i)).unwrap()).collect();
    dims.sort();
    assert_eq!(dims[0], BigUint::from(26u32));
    assert_eq!(dims[1], BigUint::from(52u32));
    assert!(a2.weyl_dim(&Weight::from_ints(&[-1, 0])).is_err());
}

#[test]
fn big_rational_scalar() {
    let r: BigRootSystem = build_root_system(Family::C, 4).unwrap();
    let v = BigWeight::from_ints(&[3, -1, 0, 2]);
    assert_eq!(r.longest_act(&r.longest_act(&v)), v);
    assert_eq!(r.weyl_order(), 384);
}
