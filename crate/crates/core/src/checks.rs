//! Cross-validation suites shared by the command line and the test suite.
//!
//! Each suite returns one [`CheckOutcome`] per property. Grid sweeps run in
//! parallel; results are collected in grid order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::catalog::{self, catalog};
use crate::charring::{closed_orbit_cell_data, multiplicity_extraction, support_character, verma_character, window_for};
use crate::cohomology::{bound_cohomology, cell_multiplicity, euler_character, CohomologyTable, VirtualModule};
use crate::error::{Error, Result};
use crate::exact_rank2::{conics_cohomology, conics_nonvanishing, conics_weight, sp_regular, sp_table1, SpFamily};
use crate::rootsys::{build_root_system, Coweight, Family, RootSystem, Weight};
use crate::scalar::Scalar;
use crate::sympair::SymmetricPair;

const MAX_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    /// First few counterexamples.
    pub failures: Vec<String>,
    pub failed: usize,
    /// Extra context, e.g. how many samples were nontrivial.
    pub note: Option<String>,
}

impl CheckOutcome {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
            failed: 0,
            note: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} ({} cases", self.name, self.cases)?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        write!(f, ")")?;
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        for c in &self.failures {
            write!(f, "\n    {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    ConicsEuler,
    SpEquality,
    Table1,
    H1Vanishing,
    P2Plethysm,
    CharringAgreement,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::ConicsEuler,
        Suite::SpEquality,
        Suite::Table1,
        Suite::H1Vanishing,
        Suite::P2Plethysm,
        Suite::CharringAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ConicsEuler => "conics-euler",
            Suite::SpEquality => "sp-equality",
            Suite::Table1 => "table1",
            Suite::H1Vanishing => "h1-vanishing",
            Suite::P2Plethysm => "p2-plethysm",
            Suite::CharringAgreement => "charring-agreement",
        }
    }

    pub fn run<T: Scalar>(self, seed: u64) -> Result<Vec<CheckOutcome>> {
        match self {
            Suite::ConicsEuler => conics_suite::<T>(10),
            Suite::SpEquality => sp_equality::<T>(4, (-12, 4), (-10, 4), 1).and_then(|mut a| {
                a.extend(sp_equality::<T>(5, (-14, 4), (-12, 4), 3)?);
                Ok(a)
            }),
            Suite::Table1 => table1::<T>(&[4, 5, 6, 7], 50, seed),
            Suite::H1Vanishing => h1_vanishing::<T>(),
            Suite::P2Plethysm => p2_plethysm::<T>(8),
            Suite::CharringAgreement => Ok(vec![
                charring_agreement::<T>("conics", None, 50, seed)?,
                charring_agreement::<T>("CnH4", Some(4), 50, seed)?,
                verma_telescoping::<T>(100, seed),
            ]),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter {
                name: "suite".into(),
                reason: format!("unknown suite `{s}`"),
            })
    }
}

fn alternating<T: Scalar>(t: &CohomologyTable<T>) -> VirtualModule<T> {
    t.euler()
}

/// Conic properties on the grid `[-r, r]^2` of `(l1, l2)`.
pub fn conics_suite<T: Scalar>(r: i64) -> Result<Vec<CheckOutcome>> {
    let pair: SymmetricPair<T> = catalog("conics", None)?;
    let grid: Vec<(i64, i64)> = (-r..=r).flat_map(|a| (-r..=r).map(move |b| (a, b))).collect();
    let rows: Vec<Result<_>> = grid
        .par_iter()
        .map(|&(a, b)| {
            let l: Weight<T> = conics_weight(a, b);
            let exact = conics_cohomology(&l)?;
            let bound = bound_cohomology(&pair, &l)?;
            let chi = euler_character(&pair, &l)?;
            Ok((a, b, exact, bound, chi))
        })
        .collect();
    let mut euler = CheckOutcome::new("conics: alternating sum equals Euler characteristic");
    let mut vanish = CheckOutcome::new("conics: H^1 = H^4 = 0");
    let mut dominated = CheckOutcome::new("conics: bound dominates exact");
    let mut regions = CheckOutcome::new("conics: nonvanishing degrees match the predicates");
    let mut exclusive = CheckOutcome::new("conics: H^2 and H^3 never both nonzero");
    for row in rows {
        let (a, b, exact, bound, chi) = row?;
        let alt = alternating(&exact);
        euler.record(alt == chi, || format!("({a}, {b}): exact {alt} vs chi {chi}"));
        vanish.record(exact.degree(1).is_empty() && exact.degree(4).is_empty(), || format!("({a}, {b})"));
        dominated.record(exact.le(&bound), || format!("({a}, {b})"));
        let support: std::collections::BTreeSet<usize> = exact.support().into_iter().collect();
        let pred = conics_nonvanishing(a, b);
        regions.record(support == pred, || format!("({a}, {b}): {support:?} vs {pred:?}"));
        exclusive.record(!(support.contains(&2) && support.contains(&3)), || format!("({a}, {b})"));
    }
    let mut strict = CheckOutcome::new("conics: bound is strict at -14 w1 + 8 w2, degree 2, mu = w2");
    let l: Weight<T> = conics_weight(-7, 4);
    let mu = Weight::from_ints(&[0, 1]);
    let e = conics_cohomology(&l)?.get(2, &mu);
    let bnd = bound_cohomology(&pair, &l)?.get(2, &mu);
    strict.record(e == 0 && bnd >= 1, || format!("exact {e}, bound {bnd}"));
    Ok(vec![euler, vanish, dominated, regions, exclusive, strict])
}

/// Closed form against the generic bound for `CnH4(n)`; `step` thins the grid.
pub fn sp_equality<T: Scalar>(
    n: usize,
    xs: (i64, i64),
    ys: (i64, i64),
    step: usize,
) -> Result<Vec<CheckOutcome>> {
    let fam: SpFamily<T> = SpFamily::new(n)?;
    let degrees = crate::exact_rank2::sp_degrees(n);
    let grid: Vec<(i64, i64)> = (xs.0..=xs.1)
        .step_by(step)
        .flat_map(|x| (ys.0..=ys.1).step_by(step).map(move |y| (x, y)))
        .collect();
    let rows: Vec<Result<_>> = grid
        .par_iter()
        .map(|&(x, y)| {
            let exact = fam.cohomology(x, y)?;
            let bound = bound_cohomology(fam.pair(), &fam.weight(x, y))?;
            Ok((x, y, exact, bound))
        })
        .collect();
    let mut eq = CheckOutcome::new(&format!("CnH4({n}): closed form equals bound"));
    let mut deg = CheckOutcome::new(&format!("CnH4({n}): support in {degrees:?}"));
    for row in rows {
        let (x, y, exact, bound) = row?;
        eq.record(exact == bound, || format!("({x}, {y})"));
        let s = exact.support();
        deg.record(s.iter().all(|d| degrees.contains(d)), || format!("({x}, {y}): {s:?}"));
    }
    Ok(vec![eq, deg])
}

/// Pairing table and regularity against the generic root system.
pub fn table1<T: Scalar>(ns: &[usize], samples: usize, seed: u64) -> Result<Vec<CheckOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = CheckOutcome::new("table1: closed-form pairings");
    let mut reg = CheckOutcome::new("table1: regularity criterion");
    for &n in ns {
        let fam: SpFamily<T> = SpFamily::new(n)?;
        let rs = fam.pair().root_system();
        let mut pts: Vec<(i64, i64)> = (0..samples).map(|_| (rng.gen_range(-20..=20), rng.gen_range(-20..=20))).collect();
        // Make sure singular points are covered too.
        pts.extend([(-1, 0), (0, -1), (-2, 3), (3, 1 - n as i64)]);
        for (x, y) in pts {
            let nu = &fam.weight(x, y) + rs.rho();
            for row in sp_table1(n, x, y)? {
                let v = rs.pair_coroot(&nu, &row.root)?;
                rows.record(v == T::from_int(row.value), || {
                    format!("n={n} ({x}, {y}) {:?}: table {} vs {}", row.shape, row.value, v)
                });
            }
            let want = rs.is_regular(&nu);
            reg.record(sp_regular(n, x, y) == want, || format!("n={n} ({x}, {y})"));
        }
    }
    Ok(vec![rows, reg])
}

/// Pairs and special-coordinate boxes for the degree-one sweep.
pub fn h1_targets() -> Vec<(String, i64)> {
    let mut v: Vec<(String, i64)> = catalog::RANK_ONE
        .iter()
        .map(|s| {
            let f = catalog::file(s).expect("built-in");
            let name = match (f.is_template(), f.min_n) {
                (true, m) => format!("{s}({})", m.unwrap_or(1).max(3)),
                _ => s.to_string(),
            };
            (name, 100)
        })
        .collect();
    v.push(("P2".into(), 100));
    v.push(("conics".into(), 7));
    v.push(("split-A(2)".into(), 7));
    v.push(("split-A(3)".into(), 3));
    v.push(("CnH4(4)".into(), 7));
    v.push(("CnH4(5)".into(), 7));
    v
}

fn box_points(rank: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                // Half-open in rank one so the box has exactly 2r points.
                let hi = if rank == 1 { r - 1 } else { r };
                (-r..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// The degree-one bucket of the bound is empty.
pub fn h1_vanishing<T: Scalar>() -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (name, r) in h1_targets() {
        let pair: SymmetricPair<T> = catalog(&name, None)?;
        let pts = box_points(pair.rank_restricted(), r);
        let res: Vec<Result<(Vec<i64>, bool)>> = pts
            .par_iter()
            .map(|k| {
                let l = pair.special_weight_ints(k);
                Ok((k.clone(), bound_cohomology(&pair, &l)?.degree(1).is_empty()))
            })
            .collect();
        let mut o = CheckOutcome::new(&format!("H^1 bound empty: {name}"));
        for r in res {
            let (k, ok) = r?;
            o.record(ok, || format!("{k:?}"));
        }
        out.push(o);
    }
    Ok(out)
}

/// `Sym^m(Sym^2 k^2)` decomposed into `V_j`, by expanding monomial weights.
pub fn plethysm_sym_sym2(m: usize) -> BTreeMap<i64, i64> {
    // Weights of Sym^2 k^2 are 2, 0, -2; a degree-m monomial picks a multiset.
    let mut weights: BTreeMap<i64, i64> = BTreeMap::new();
    for a in 0..=m {
        for b in 0..=m - a {
            let c = m - a - b;
            *weights.entry(2 * a as i64 - 2 * c as i64).or_insert(0) += 1;
        }
    }
    let mut out = BTreeMap::new();
    for (&w, &c) in &weights {
        if w < 0 {
            continue;
        }
        let above = weights.get(&(w + 2)).copied().unwrap_or(0);
        if c - above != 0 {
            out.insert(w, c - above);
        }
    }
    out
}

/// `chi(P2, 2m omega)` against the plethysm.
pub fn p2_plethysm<T: Scalar>(max_m: usize) -> Result<Vec<CheckOutcome>> {
    let pair: SymmetricPair<T> = catalog("P2", None)?;
    let mut o = CheckOutcome::new("P2: chi(2m omega) = Sym^m(Sym^2)");
    for m in 0..=max_m {
        let chi = euler_character(&pair, &Weight::from_ints(&[2 * m as i64]))?;
        let mut want = VirtualModule::new();
        for (w, c) in plethysm_sym_sym2(m) {
            want.add(Weight::from_ints(&[w]), c);
        }
        o.record(chi == want, || format!("m={m}: {chi} vs {want}"));
    }
    Ok(vec![o])
}

fn random_special<T: Scalar, R: Rng>(pair: &SymmetricPair<T>, rng: &mut R, r: i64) -> Weight<T> {
    let k: Vec<i64> = (0..pair.rank_restricted()).map(|_| rng.gen_range(-r..=r)).collect();
    pair.special_weight_ints(&k)
}

fn random_dominant<T: Scalar, R: Rng>(rank: usize, rng: &mut R, r: i64) -> Weight<T> {
    let k: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=r)).collect();
    Weight::from_ints(&k)
}

/// Largest cutoff used when sampling; keeps expansions small.
fn cutoff_cap(rank: usize) -> usize {
    match rank {
        0..=2 => 40,
        3 => 24,
        _ => 16,
    }
}

/// Extraction from closed-orbit characters against the cell formula.
pub fn charring_agreement<T: Scalar>(
    name: &str,
    n: Option<usize>,
    samples: usize,
    seed: u64,
) -> Result<CheckOutcome> {
    let pair: SymmetricPair<T> = catalog(name, n)?;
    let rs = pair.root_system();
    let zeta = Coweight::canonical(rs.rank());
    let ws = rs.weyl_elements();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut o = CheckOutcome::new(&format!("charring agrees with cell multiplicity: {}", pair.name()));
    let mut nonzero = 0usize;
    let mut attempts = 0usize;
    while o.cases < samples {
        attempts += 1;
        if attempts > 200 * samples {
            o.record(false, || "too few samples inside the window".into());
            break;
        }
        let lambda = random_special(&pair, &mut rng, 3);
        // Half the time aim at a weight some cell contains: pick nu near
        // lambda and let w carry nu + rho into the dominant chamber.
        let (w, mu) = if rng.gen_range(0..2) == 0 {
            let mut hit = None;
            for _ in 0..30 {
                let c: Vec<i64> = (0..pair.rank_restricted()).map(|_| rng.gen_range(-1..=2)).collect();
                let nu = pair.shift(&lambda, &c);
                let Some((mu, w)) = rs.dot_dominant_element(&nu) else {
                    continue;
                };
                let Ok(signs) = crate::cohomology::cell_signs(&pair, &w, &zeta) else {
                    continue;
                };
                if c.iter().zip(&signs).all(|(&ci, &s)| (ci > 0) == (s < 0)) {
                    hit = Some((w, mu));
                    break;
                }
            }
            let Some(hit) = hit else {
                continue;
            };
            hit
        } else {
            (ws[rng.gen_range(0..ws.len())].clone(), random_dominant(rs.rank(), &mut rng, 3))
        };
        let w = &w;
        let Ok(data) = closed_orbit_cell_data(&pair, &lambda, w, &zeta) else {
            continue;
        };
        if !rs.is_regular(&(&mu + rs.rho())) {
            continue;
        }
        let want = cell_multiplicity(&pair, &lambda, w, &mu, &zeta)?;
        let Some(h) = window_for(rs, &data.lambda_prime, &mu) else {
            // Not below the highest term: nothing to extract.
            o.record(want == 0, || format!("w={:?} lambda={lambda} mu={mu}: above anchor but cell says 1", w.word()));
            continue;
        };
        if h > cutoff_cap(rs.rank()) {
            continue;
        }
        let ch = support_character(&data, h)?;
        let got = multiplicity_extraction(rs, &ch, &mu)?;
        nonzero += usize::from(got != 0);
        o.record(got == i64::from(want), || {
            format!("w={:?} lambda={lambda} mu={mu}: extracted {got}, cell {want}", w.word())
        });
    }
    o.note = Some(format!("{nonzero} nonzero"));
    if nonzero == 0 && o.cases > 0 {
        o.record(false, || "no sample had a nonzero multiplicity".into());
    }
    Ok(o)
}

/// `prod (1 - e^{-alpha}) * ch M(lambda) = e^lambda` inside the window.
pub fn verma_telescoping<T: Scalar>(samples: usize, seed: u64) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let systems: Vec<RootSystem<T>> = [(Family::A, 2), (Family::B, 2), (Family::C, 3), (Family::A, 3), (Family::F, 4)]
        .into_iter()
        .map(|(f, r)| build_root_system(f, r).expect("valid type"))
        .collect();
    let mut o = CheckOutcome::new("Verma telescoping");
    for _ in 0..samples {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let k: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-6..=6)).collect();
        let lambda = Weight::from_ints(&k);
        let cutoff = rng.gen_range(0..=if rs.rank() > 3 { 5 } else { 9 });
        let mut ch = verma_character(rs, &lambda, cutoff);
        for a in rs.positive_roots() {
            ch.mul_one_minus(a);
        }
        let ok = ch.terms().len() == 1 && ch.terms().get(&vec![0; rs.rank()]) == Some(&1);
        o.record(ok, || format!("{} lambda={lambda} cutoff={cutoff}", rs.cartan_type()));
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plethysm_small() {
        assert_eq!(plethysm_sym_sym2(0), BTreeMap::from([(0, 1)]));
        assert_eq!(plethysm_sym_sym2(2), BTreeMap::from([(0, 1), (4, 1)]));
        assert_eq!(plethysm_sym_sym2(3), BTreeMap::from([(2, 1), (6, 1)]));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
