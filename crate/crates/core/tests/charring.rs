use proptest::prelude::*;
use symcoh::charring::{
    closed_orbit_cell_data, multiplicity_extraction, support_character, verma_character, window_for,
};
use symcoh::rootsys::{build_root_system, Family};
use symcoh::{CellLocalData, RootSystem, Weight, Q};

fn systems() -> Vec<RootSystem> {
    vec![
        build_root_system(Family::A, 2).unwrap(),
        build_root_system(Family::B, 2).unwrap(),
        build_root_system(Family::A, 3).unwrap(),
        build_root_system(Family::C, 3).unwrap(),
    ]
}

#[test]
fn support_character_basics() {
    let rs: RootSystem = build_root_system(Family::A, 2).unwrap();
    let l = Weight::from_ints(&[1, 2]);
    let bare = CellLocalData {
        lambda_prime: l.clone(),
        pos_denoms: vec![],
        neg_denoms: vec![],
        double_denoms: vec![],
    };
    let ch = support_character(&bare, 5).unwrap();
    assert_eq!(ch.terms().len(), 1);
    let full = CellLocalData {
        pos_denoms: rs.positive_roots().to_vec(),
        ..bare.clone()
    };
    assert_eq!(support_character(&full, 6).unwrap(), verma_character(&rs, &l, 6));
    let bad = CellLocalData {
        neg_denoms: vec![vec![1, -1]],
        ..bare
    };
    assert!(support_character(&bad, 3).is_err());
}

#[test]
fn extraction_refuses_outside_window() {
    let rs: RootSystem = build_root_system(Family::A, 2).unwrap();
    let ch = verma_character(&rs, &Weight::from_ints(&[3, 3]), 2);
    assert!(multiplicity_extraction(&rs, &ch, &Weight::zero(2)).is_err());
    assert_eq!(multiplicity_extraction(&rs, &ch, &Weight::from_ints(&[3, 3])).unwrap(), 1);
    // Above the anchor everything vanishes exactly.
    assert_eq!(multiplicity_extraction(&rs, &ch, &Weight::from_ints(&[9, 9])).unwrap(), 0);
    assert!(multiplicity_extraction(&rs, &ch, &Weight::from_ints(&[-1, 0])).is_err());
}

/// Positive roots of the Levi on `levi` (0-based simple indices).
fn levi_roots(rs: &RootSystem, levi: &[usize]) -> Vec<Vec<i64>> {
    rs.positive_roots()
        .iter()
        .filter(|r| r.iter().enumerate().all(|(k, &c)| c == 0 || levi.contains(&k)))
        .cloned()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verma_extraction(sys in 0usize..4, coords in prop::collection::vec(-4i64..=6, 3), cut in 0usize..8) {
        let rs = &systems()[sys];
        let n = rs.rank();
        let l = Weight::from_ints(&coords[..n.min(3)].iter().chain(std::iter::repeat(&0)).take(n).copied().collect::<Vec<_>>());
        let ch = verma_character(rs, &l, cut);
        if l.is_dominant() {
            prop_assert_eq!(multiplicity_extraction(rs, &ch, &l).unwrap(), 1);
        }
        for mu in rs.dot_orbit(&Weight::zero(n)).unwrap().iter().map(|w| w + &Weight::from_ints(&vec![1; n])) {
            if mu.is_dominant() && mu != l {
                if let Ok(v) = multiplicity_extraction(rs, &ch, &mu) {
                    prop_assert_eq!(v, 0);
                }
            }
        }
    }

    #[test]
    fn truncation_is_stable(sys in 0usize..4, a in -3i64..=5, b in -3i64..=5, extra in 1usize..4) {
        let rs = &systems()[sys];
        let n = rs.rank();
        let mut c = vec![a, b];
        c.resize(n, 1);
        let l = Weight::from_ints(&c);
        for mu in [Weight::zero(n), Weight::fundamental(n, 0), Weight::from_ints(&vec![1; n])] {
            let Some(h) = window_for(rs, &l, &mu) else { continue };
            if h > 12 { continue; }
            let small = multiplicity_extraction(rs, &verma_character(rs, &l, h), &mu).unwrap();
            let large = multiplicity_extraction(rs, &verma_character(rs, &l, h + extra), &mu).unwrap();
            prop_assert_eq!(small, large);
        }
    }

    /// With squared denominators from a Levi the residual character has no
    /// dominant weight, so every extraction vanishes.
    #[test]
    fn double_denominators_kill_finite_subquotients(
        sys in 0usize..4,
        mask in 1u32..8,
        chi in prop::collection::vec(-3i64..=3, 3),
        word in prop::collection::vec(0usize..3, 0..5),
    ) {
        let rs = &systems()[sys];
        let n = rs.rank();
        let levi: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        prop_assume!(!levi.is_empty());
        // chi orthogonal to the Levi: zero coordinates on its simple roots.
        let chi_w = Weight::from_ints(&(0..n).map(|i| if levi.contains(&i) { 0 } else { chi[i % 3] }).collect::<Vec<_>>());
        let w = rs.reduce(&rs.weyl_element(word.into_iter().filter(|&i| i < n).collect()));
        let lroots = levi_roots(rs, &levi);
        let images: Vec<Vec<i64>> = lroots.iter().map(|r| rs.act_root(&w, r)).collect();
        // Only minimal coset representatives: w keeps the Levi positive.
        prop_assume!(images.iter().all(|r| r.iter().all(|&c| c >= 0)));
        let two_rho_l: Vec<i64> = (0..n).map(|k| images.iter().map(|r| r[k]).sum()).collect();
        let lambda_prime = &rs.act(&w, &chi_w) - &rs.root_weight(&two_rho_l);
        let pos: Vec<Vec<i64>> = rs.positive_roots().iter().filter(|r| !images.contains(r)).cloned().collect();
        let data = CellLocalData { lambda_prime: lambda_prime.clone(), pos_denoms: pos, neg_denoms: vec![], double_denoms: images };
        let mut checked = 0;
        for a in 0..=4i64 {
            for b in 0..=4i64 {
                let mut m = vec![a, b];
                m.resize(n, 0);
                let mu = Weight::from_ints(&m);
                let Some(h) = window_for(rs, &lambda_prime, &mu) else { continue };
                if h > 10 { continue; }
                let ch = support_character(&data, h).unwrap();
                prop_assert_eq!(multiplicity_extraction(rs, &ch, &mu).unwrap(), 0);
                checked += 1;
            }
        }
        let _ = checked;
    }
}

#[test]
fn cnh4_closed_orbit_identity_cell() {
    let p: symcoh::SymmetricPair = symcoh::catalog::catalog("CnH4(4)", None).unwrap();
    let rs = p.root_system();
    let zeta = symcoh::rootsys::Coweight::canonical(4);
    let l = p.special_weight_ints(&[1, 1]);
    let data = closed_orbit_cell_data(&p, &l, &symcoh::rootsys::WeylElement::identity(), &zeta).unwrap();
    assert_eq!(data.lambda_prime, l);
    let ch = support_character(&data, 0).unwrap();
    assert_eq!(multiplicity_extraction(rs, &ch, &l).unwrap(), 1);
    let _ = Q::from(0);
}
