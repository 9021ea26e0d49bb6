//! Exact cohomology for two rank-two families.
//!
//! * `CnH4(n)`: the wonderful compactification of `Sp(2n) / Sp4 x Sp(2n-4)`,
//!   weights `x omega_2 + y omega_4`. The closed-form degree table is
//!   transcribed row by row; the restricted roots entering it come from the
//!   generic engine, so a transcription slip shows up as a disagreement
//!   with [`crate::cohomology::bound_cohomology`].
//! * complete conics: `PGL3 / PSO3`, weights `2 l1 omega_1 + 2 l2 omega_2`.
//!
//! Conventions fixed here:
//! * the conic cones are `R1 = 2Z>0 a1 + 2Z<=0 a2` and
//!   `R2 = 2Z<=0 a1 + 2Z>0 a2`;
//! * `H^2` and `H^3` membership is tested on `mu + rho` in every summand;
//! * `2Z>=4` in the top degree means even integers at least 4;
//! * `w0 lambda` is the linear action;
//! * no duality twist: `chi` of `L_lambda` is compared with the sections
//!   functor directly, e.g. `chi(P2, 2m omega)` is the character of
//!   `Sym^m(Sym^2 k^2)`.

use std::collections::BTreeSet;

use crate::catalog::catalog;
use crate::cohomology::CohomologyTable;
use crate::error::{Error, Result};
use crate::polyhedron::System;
use crate::rootsys::{build_root_system, Family, RootSystem, Weight, WeylElement};
use crate::scalar::Scalar;
use crate::sympair::SymmetricPair;

/// Shape of a positive root of `C_n` in the `e`-basis (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootShape {
    /// `e_i - e_j`, `i < j`
    Difference(usize, usize),
    /// `e_i + e_j`, `i < j`
    Sum(usize, usize),
    /// `2 e_i`
    Double(usize),
}

impl RootShape {
    /// Simple-root coordinates in `C_n`.
    pub fn coords(self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        match self {
            RootShape::Difference(i, j) => {
                for k in i..j {
                    v[k - 1] = 1;
                }
            }
            RootShape::Sum(i, j) => {
                for k in i..j {
                    v[k - 1] = 1;
                }
                for k in j..n {
                    v[k - 1] = 2;
                }
                v[n - 1] = 1;
            }
            RootShape::Double(i) => {
                for k in i..n {
                    v[k - 1] = 2;
                }
                v[n - 1] = 1;
            }
        }
        v
    }
}

/// One line of the pairing table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub shape: RootShape,
    pub root: Vec<i64>,
    pub value: i64,
}

/// The `theta`-moved positive roots of the `CnH4(n)` pair.
pub fn sp_moved_roots(n: usize) -> Vec<RootShape> {
    let mut out = Vec::new();
    for i in 1..=2 {
        for j in 3..=n {
            out.push(RootShape::Difference(i, j));
        }
    }
    for i in 3..=4 {
        for j in 5..=n {
            out.push(RootShape::Difference(i, j));
        }
    }
    for i in 1..=4 {
        for j in i + 1..=n {
            out.push(RootShape::Sum(i, j));
        }
    }
    for i in 1..=4 {
        out.push(RootShape::Double(i));
    }
    out
}

/// `<nu + rho, alpha^vee>` for `nu = x omega_2 + y omega_4`, by the closed form.
pub fn sp_table1_value(n: usize, shape: RootShape, x: i64, y: i64) -> i64 {
    let n = n as i64;
    match shape {
        RootShape::Difference(i, j) => {
            let (i, j) = (i as i64, j as i64);
            match (i, j) {
                (1..=2, 3..=4) => x + j - i,
                (1..=2, _) => x + y + j - i,
                _ => y + j - i,
            }
        }
        RootShape::Sum(i, j) => {
            let (i, j) = (i as i64, j as i64);
            match (i, j) {
                (1, 2) => 2 * x + 2 * y + 2 * n - 1,
                (1..=2, 3..=4) => x + 2 * y + 2 * n + 2 - i - j,
                (3, 4) => 2 * y + 2 * n - 5,
                (1..=2, _) => x + y + 2 * n + 2 - i - j,
                _ => y + 2 * n + 2 - i - j,
            }
        }
        RootShape::Double(i) => {
            let i = i as i64;
            if i <= 2 {
                x + y + n + 1 - i
            } else {
                y + n + 1 - i
            }
        }
    }
}

/// The full pairing table at `(x, y)`.
pub fn sp_table1(n: usize, x: i64, y: i64) -> Result<Vec<Table1Row>> {
    check_sp_n(n)?;
    Ok(sp_moved_roots(n)
        .into_iter()
        .map(|shape| Table1Row {
            shape,
            root: shape.coords(n),
            value: sp_table1_value(n, shape, x, y),
        })
        .collect())
}

/// Regularity of `nu + rho` by the four closed-form conditions.
pub fn sp_regular(n: usize, x: i64, y: i64) -> bool {
    let n = n as i64;
    let not_in = |v: i64, lo: i64, hi: i64| v < lo || v > hi;
    not_in(x, -3, -1)
        && not_in(y, -2 * n + 6, -1)
        && not_in(x + y, -2 * n + 4, -3)
        && not_in(x + 2 * y, -2 * n + 2, -2 * n + 4)
}

/// The seven degrees where `CnH4(n)` cohomology can be nonzero.
pub fn sp_degrees(n: usize) -> [usize; 7] {
    [0, 5, 4 * n - 12, 4 * n - 8, 4 * n - 4, 8 * n - 21, 8 * n - 16]
}

fn check_sp_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidParameter {
            name: "CnH4".into(),
            reason: format!("n = {n} is below 4"),
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Ge,
    Le,
}

/// `ax x + ay y (op) rhs`.
#[derive(Clone, Copy, Debug)]
struct Lin {
    ax: i64,
    ay: i64,
    op: Op,
    rhs: i64,
}

const fn lin(ax: i64, ay: i64, op: Op, rhs: i64) -> Lin {
    Lin { ax, ay, op, rhs }
}

/// One row of the degree table: inequalities on `nu`, and whether
/// `k_2`, `k_4` are positive (`true`) or nonpositive.
struct SpRow {
    degree: usize,
    ineqs: [Lin; 2],
    positive: [bool; 2],
}

fn sp_rows(n: usize) -> Vec<SpRow> {
    let m = n as i64;
    use Op::{Ge, Le};
    vec![
        SpRow { degree: 0, ineqs: [lin(1, 0, Ge, 0), lin(0, 1, Ge, 0)], positive: [false, false] },
        SpRow { degree: 5, ineqs: [lin(1, 0, Le, -4), lin(1, 1, Ge, -2)], positive: [true, false] },
        SpRow {
            degree: 4 * n - 12,
            ineqs: [lin(0, 1, Le, -2 * m + 5), lin(1, 2, Ge, -2 * m + 5)],
            positive: [false, true],
        },
        SpRow {
            degree: 4 * n - 8,
            ineqs: [lin(1, 2, Ge, -2 * m + 5), lin(1, 1, Le, -2 * m + 3)],
            positive: [true, false],
        },
        SpRow {
            degree: 4 * n - 8,
            ineqs: [lin(1, 1, Ge, -2), lin(1, 2, Le, -2 * m + 1)],
            positive: [false, true],
        },
        SpRow {
            degree: 4 * n - 4,
            ineqs: [lin(0, 1, Ge, 0), lin(1, 2, Le, -2 * m + 1)],
            positive: [true, false],
        },
        SpRow {
            degree: 8 * n - 21,
            ineqs: [lin(1, 0, Ge, 0), lin(1, 1, Le, -2 * m + 3)],
            positive: [false, true],
        },
        SpRow {
            degree: 8 * n - 16,
            ineqs: [lin(1, 0, Le, -4), lin(0, 1, Le, -2 * m + 5)],
            positive: [true, true],
        },
    ]
}

/// The `CnH4(n)` pair with its closed-form cohomology.
#[derive(Clone, Debug)]
pub struct SpFamily<T> {
    n: usize,
    pair: SymmetricPair<T>,
    /// Special coordinates `(x, y)` of `alpha~_2` and `alpha~_4`.
    steps: Vec<[T; 2]>,
}

impl<T: Scalar> SpFamily<T> {
    pub fn new(n: usize) -> Result<Self> {
        check_sp_n(n)?;
        let pair: SymmetricPair<T> = catalog("CnH4", Some(n))?;
        let steps = pair
            .restricted_simple()
            .iter()
            .map(|a| {
                let c = pair.special_coords(a).expect("alpha~ is special");
                [c[0].clone(), c[1].clone()]
            })
            .collect();
        Ok(Self { n, pair, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair(&self) -> &SymmetricPair<T> {
        &self.pair
    }

    pub fn weight(&self, x: i64, y: i64) -> Weight<T> {
        self.pair.special_weight_ints(&[x, y])
    }

    /// `H^d(X, L_lambda)` for `lambda = x omega_2 + y omega_4`.
    pub fn cohomology(&self, x: i64, y: i64) -> Result<CohomologyTable<T>> {
        let rs = self.pair.root_system();
        let lambda = self.weight(x, y);
        let mut table = CohomologyTable::new();
        for row in sp_rows(self.n) {
            let mut sys = System::new(2);
            for (i, &pos) in row.positive.iter().enumerate() {
                if pos {
                    sys.bound_var(i, Some(1), None);
                } else {
                    sys.bound_var(i, None, Some(0));
                }
            }
            for l in &row.ineqs {
                // ax * x(nu) + ay * y(nu), with (x, y)(nu) = (x, y) + k2 s2 + k4 s4.
                let ax = T::from_int(l.ax);
                let ay = T::from_int(l.ay);
                let coeffs: Vec<T> = self
                    .steps
                    .iter()
                    .map(|s| ax.clone() * s[0].clone() + ay.clone() * s[1].clone())
                    .collect();
                let rhs = T::from_int(l.rhs - l.ax * x - l.ay * y);
                match l.op {
                    Op::Ge => sys.add_ge(&coeffs, &rhs),
                    Op::Le => sys.add_le(&coeffs, &rhs),
                }
            }
            let pts = sys.lattice_points().map_err(|_| {
                Error::UnboundedRegion(
                    row.positive
                        .iter()
                        .enumerate()
                        .filter(|(_, &p)| p)
                        .map(|(i, _)| i + 1)
                        .collect(),
                )
            })?;
            for k in pts {
                let nu = self.pair.shift(&lambda, &k);
                if let Some((plus, _)) = rs.dot_dominant(&nu) {
                    table.add(row.degree, plus, 1);
                }
            }
        }
        Ok(table)
    }
}

/// Closed-form cohomology of `CnH4(n)` at `x omega_2 + y omega_4`.
pub fn sp_cohomology<T: Scalar>(n: usize, x: i64, y: i64) -> Result<CohomologyTable<T>> {
    SpFamily::new(n)?.cohomology(x, y)
}

/// The conic cones in the `(alpha_1, alpha_2)` coefficients `(2p, 2q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicCone {
    /// `p > 0`, `q <= 0`
    R1,
    /// `p <= 0`, `q > 0`
    R2,
}

impl ConicCone {
    fn bounds(self) -> [(Option<i64>, Option<i64>); 2] {
        match self {
            ConicCone::R1 => [(Some(1), None), (None, Some(0))],
            ConicCone::R2 => [(None, Some(0)), (Some(1), None)],
        }
    }

    /// Whether `delta` (a weight of `A2`) lies in the cone.
    fn contains<T: Scalar>(self, rs: &RootSystem<T>, delta: &Weight<T>) -> bool {
        let c = rs.to_root_coords(delta);
        let two = T::from_int(2);
        let halves: Option<Vec<i64>> = c.iter().map(|v| (v.clone() / two.clone()).to_i64_exact()).collect();
        let Some(h) = halves else {
            return false;
        };
        let [(lo0, hi0), (lo1, hi1)] = self.bounds();
        let inside = |v: i64, lo: Option<i64>, hi: Option<i64>| {
            lo.map_or(true, |l| v >= l) && hi.map_or(true, |u| v <= u)
        };
        inside(h[0], lo0, hi0) && inside(h[1], lo1, hi1)
    }
}

/// One summand of `H^2` or `H^3`: dominant `mu` with
/// `mu + rho in w_in(lambda + rho + R) \ w_out(lambda + rho + R)`.
struct ConicPiece {
    degree: usize,
    w_in: &'static [usize],
    w_out: &'static [usize],
    cone: ConicCone,
}

const CONIC_PIECES: [ConicPiece; 4] = [
    ConicPiece { degree: 2, w_in: &[0], w_out: &[1, 0], cone: ConicCone::R1 },
    ConicPiece { degree: 2, w_in: &[1], w_out: &[0, 1], cone: ConicCone::R2 },
    ConicPiece { degree: 3, w_in: &[1, 0], w_out: &[0], cone: ConicCone::R1 },
    ConicPiece { degree: 3, w_in: &[0, 1], w_out: &[1], cone: ConicCone::R2 },
];

/// Dominant points `base + p d0 + q d1` with `(p, q)` in the given box.
fn dominant_points<T: Scalar>(
    base: &Weight<T>,
    dirs: [&Weight<T>; 2],
    bounds: [(Option<i64>, Option<i64>); 2],
) -> Result<Vec<Weight<T>>> {
    let mut sys = System::new(2);
    for (i, (lo, hi)) in bounds.iter().enumerate() {
        sys.bound_var(i, *lo, *hi);
    }
    for c in 0..base.rank() {
        let coeffs = [dirs[0].coords[c].clone(), dirs[1].coords[c].clone()];
        sys.add_ge(&coeffs, &-base.coords[c].clone());
    }
    let pts = sys
        .lattice_points()
        .map_err(|_| Error::UnboundedRegion(vec![]))?;
    Ok(pts
        .into_iter()
        .map(|k| {
            let mut w = base.clone();
            for (ki, d) in k.iter().zip(dirs) {
                w = &w + &d.scale(&T::from_int(*ki));
            }
            w
        })
        .collect())
}

fn conic_lambda<T: Scalar>(lambda: &Weight<T>) -> Result<(i64, i64)> {
    let ints = lambda
        .to_ints()
        .filter(|v| v.len() == 2 && v.iter().all(|c| c % 2 == 0))
        .ok_or_else(|| Error::NotSpecial(lambda.to_string()))?;
    Ok((ints[0] / 2, ints[1] / 2))
}

/// Exact `H^d` of the complete conics for `lambda in 2Z omega_1 + 2Z omega_2`.
pub fn conics_cohomology<T: Scalar>(lambda: &Weight<T>) -> Result<CohomologyTable<T>> {
    conic_lambda(lambda)?;
    let rs: RootSystem<T> = build_root_system(Family::A, 2)?;
    let a1 = rs.simple_root(0).scale(&T::from_int(2));
    let a2 = rs.simple_root(1).scale(&T::from_int(2));
    let neg = [&-&a1, &-&a2];
    let mut table = CohomologyTable::new();

    for mu in dominant_points(lambda, [neg[0], neg[1]], [(Some(0), None), (Some(0), None)])? {
        table.add(0, mu, 1);
    }
    let top = rs.longest_act(lambda);
    for mu in dominant_points(&top, [neg[0], neg[1]], [(Some(2), None), (Some(2), None)])? {
        table.add(5, mu, 1);
    }

    let lr = lambda + rs.rho();
    for piece in &CONIC_PIECES {
        let w_in = rs.weyl_element(piece.w_in.to_vec());
        let w_out_inv = rs.weyl_element(piece.w_out.to_vec()).inverse();
        // mu = w_in(lambda + rho + 2p a1 + 2q a2) - rho
        let base = &rs.act(&w_in, &lr) - rs.rho();
        let d0 = rs.act(&w_in, &a1);
        let d1 = rs.act(&w_in, &a2);
        for mu in dominant_points(&base, [&d0, &d1], piece.cone.bounds())? {
            let back = &rs.act(&w_out_inv, &(&mu + rs.rho())) - &lr;
            if !piece.cone.contains(&rs, &back) {
                table.add(piece.degree, mu, 1);
            }
        }
    }
    Ok(table)
}

/// `lambda = 2 l1 omega_1 + 2 l2 omega_2`.
pub fn conics_weight<T: Scalar>(l1: i64, l2: i64) -> Weight<T> {
    Weight::from_ints(&[2 * l1, 2 * l2])
}

/// Degrees with nonzero cohomology, by the closed-form predicates.
pub fn conics_nonvanishing(l1: i64, l2: i64) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if l1 + 2 * l2 >= 0 && 2 * l1 + l2 >= 0 {
        out.insert(0);
    }
    if (l1 + 3 <= 0 || l2 + 3 <= 0) && l1 + l2 + 1 >= 0 {
        out.insert(2);
    }
    if (l1 >= 1 || l2 >= 1) && l1 + l2 + 3 <= 0 {
        out.insert(3);
    }
    if l1 + 2 * l2 + 6 <= 0 && 2 * l1 + l2 + 6 <= 0 {
        out.insert(5);
    }
    out
}

/// Identity, `s1`, `s2`, ... as reduced elements of `A2`.
pub fn a2_element<T: Scalar>(rs: &RootSystem<T>, word: &[usize]) -> WeylElement {
    rs.weyl_element(word.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{bound_cohomology, euler_character};
    use num_rational::Rational64 as Q;

    #[test]
    fn table1_spot_values() {
        assert_eq!(sp_table1_value(4, RootShape::Difference(2, 3), 0, 0), 1);
        assert_eq!(sp_table1_value(4, RootShape::Sum(3, 4), 0, 0), 3);
        // 16 positive roots, two of them in the Levi.
        assert_eq!(sp_moved_roots(4).len(), 14);
        let p = SpFamily::<Q>::new(5).unwrap();
        let rs = p.pair().root_system();
        let nu = &p.weight(-3, 2) + rs.rho();
        for row in sp_table1(5, -3, 2).unwrap() {
            assert_eq!(rs.pair_coroot(&nu, &row.root).unwrap(), Q::from(row.value), "{:?}", row.shape);
        }
        assert!(sp_regular(4, 0, 0));
        assert!(!sp_regular(4, -1, 0));
    }

    #[test]
    fn sp_trivial_bundle() {
        let t = sp_cohomology::<Q>(4, 0, 0).unwrap();
        assert_eq!(t.get(0, &Weight::zero(4)), 1);
        let fam = SpFamily::<Q>::new(4).unwrap();
        let b = bound_cohomology(fam.pair(), &fam.weight(0, 0)).unwrap();
        assert_eq!(t, b);
    }

    #[test]
    fn conics_small_cases() {
        let z = Weight::<Q>::zero(2);
        let t = conics_cohomology(&z).unwrap();
        assert_eq!(t.support(), vec![0]);
        assert_eq!(t.get(0, &z), 1);
        let l = Weight::<Q>::from_ints(&[-14, 8]);
        let t = conics_cohomology(&l).unwrap();
        assert_eq!(t.get(2, &Weight::from_ints(&[0, 1])), 0);
        let p = catalog::<Q>("conics", None).unwrap();
        assert_eq!(t.euler(), euler_character(&p, &l).unwrap());
        assert!(conics_cohomology(&Weight::<Q>::from_ints(&[1, 0])).is_err());
        assert_eq!(conics_nonvanishing(0, 0), BTreeSet::from([0]));
        assert_eq!(conics_nonvanishing(6, -3), BTreeSet::from([0, 2]));
    }
}
