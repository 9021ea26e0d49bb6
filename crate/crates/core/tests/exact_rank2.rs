use std::collections::BTreeSet;

use symcoh::exact_rank2::{
    conics_cohomology, conics_nonvanishing, conics_weight, sp_cohomology, sp_degrees, sp_moved_roots,
    sp_regular, sp_table1, SpFamily,
};
use symcoh::{CohomologyTable, Weight, Q};

fn support(t: &CohomologyTable) -> BTreeSet<usize> {
    t.support().into_iter().collect()
}

#[test]
fn conics_predicates_match_tables() {
    for l1 in -9..=9 {
        for l2 in -9..=9 {
            let t = conics_cohomology::<Q>(&conics_weight(l1, l2)).unwrap();
            assert_eq!(support(&t), conics_nonvanishing(l1, l2), "({l1}, {l2})");
        }
    }
}

#[test]
fn conics_two_degree_example() {
    assert_eq!(conics_nonvanishing(6, -3), BTreeSet::from([0, 2]));
    let t = conics_cohomology::<Q>(&conics_weight(6, -3)).unwrap();
    assert_eq!(t.support(), vec![0, 2]);
}

#[test]
fn conics_rejects_odd_weights() {
    assert!(conics_cohomology::<Q>(&Weight::from_ints(&[1, 0])).is_err());
}

#[test]
fn conics_extremes() {
    let t = conics_cohomology::<Q>(&Weight::zero(2)).unwrap();
    assert_eq!(t.support(), vec![0]);
    assert_eq!(t.get(0, &Weight::zero(2)), 1);
    // Serre dual side of the trivial bundle lives in the top degree.
    let t = conics_cohomology::<Q>(&conics_weight(-3, -3)).unwrap();
    assert_eq!(t.support(), vec![5]);
}

#[test]
fn sp_degree_sets() {
    assert_eq!(sp_degrees(4), [0, 5, 4, 8, 12, 11, 16]);
    for n in [4usize, 5] {
        let allowed: BTreeSet<usize> = sp_degrees(n).into_iter().collect();
        let fam = SpFamily::<Q>::new(n).unwrap();
        let mut seen = BTreeSet::new();
        for x in -12..=3 {
            for y in -12..=3 {
                let t = fam.cohomology(x, y).unwrap();
                seen.extend(t.support());
                let rs = fam.pair().root_system();
                let generic = rs.is_regular(&(&fam.weight(x, y) + rs.rho()));
                assert_eq!(sp_regular(n, x, y), generic, "n={n} ({x}, {y})");
            }
        }
        assert!(seen.is_subset(&allowed), "n={n}: {seen:?}");
        assert!(seen.contains(&0) && seen.contains(&(8 * n - 16)));
    }
}

#[test]
fn sp_trivial_bundle() {
    let t = sp_cohomology::<Q>(4, 0, 0).unwrap();
    assert_eq!(t.support(), vec![0]);
    assert_eq!(t.get(0, &Weight::zero(4)), 1);
    assert!(sp_cohomology::<Q>(3, 0, 0).is_err());
}

#[test]
fn table_rows() {
    assert_eq!(sp_moved_roots(4).len(), 14);
    let rows = sp_table1(4, 0, 0).unwrap();
    assert_eq!(rows.len(), 14);
    assert!(rows.iter().all(|r| r.value != 0));
}
