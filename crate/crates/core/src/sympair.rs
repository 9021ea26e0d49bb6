//! Symmetric pairs from Satake data.
//!
//! A pair is given by a root system, the black nodes `delta0` and an
//! involution `thetabar` of the white nodes. From these we derive the
//! involution on weights, the restricted simple roots `alpha~_i`, the
//! special basis `omega~_i`, the constants `rho_i`, and the cones `R_J`
//! and `Omega_J`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, BasisSolver, Matrix};
use crate::rootsys::{RootSystem, Weight};
use crate::scalar::Scalar;

/// A subset of restricted indices `{0..r-1}`, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn full(r: usize) -> Self {
        Subset(((1u64 << r) - 1) as u32)
    }

    pub fn from_indices(ix: &[usize]) -> Self {
        Subset(ix.iter().fold(0u32, |m, &i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// Every subset of `{0..r-1}` in mask order.
    pub fn all(r: usize) -> impl Iterator<Item = Subset> {
        (0..(1u32 << r)).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ix: Vec<String> = self.indices().iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", ix.join(","))
    }
}

/// Which of the two signed cones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConeKind {
    R,
    Omega,
}

/// A signed cone `R_J` or `Omega_J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConeSpec {
    pub j: Subset,
    pub kind: ConeKind,
}

impl ConeSpec {
    pub fn contains<T: Scalar>(&self, pair: &SymmetricPair<T>, w: &Weight<T>) -> bool {
        match self.kind {
            ConeKind::R => pair.r_cone_member(self.j, w).is_some(),
            ConeKind::Omega => pair.omega_cone_member(self.j, w),
        }
    }
}

/// Satake data: black nodes and the white-node involution (0-based).
#[derive(Clone, Debug)]
pub struct SatakeSpec<T> {
    pub rs: RootSystem<T>,
    pub delta0: Vec<usize>,
    /// Full-length map; identity on `delta0`.
    pub thetabar: Vec<usize>,
}

impl<T: Scalar> SatakeSpec<T> {
    /// `pairs` lists swapped white nodes; unlisted nodes are fixed.
    pub fn new(rs: RootSystem<T>, delta0: &[usize], pairs: &[(usize, usize)]) -> Result<Self> {
        let n = rs.rank();
        let mut d0: Vec<usize> = delta0.to_vec();
        d0.sort_unstable();
        d0.dedup();
        if let Some(&bad) = d0.iter().find(|&&i| i >= n) {
            return Err(Error::InvalidSatake(format!("black node {} out of range", bad + 1)));
        }
        let mut tb: Vec<usize> = (0..n).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidSatake("thetabar index out of range".into()));
            }
            if d0.contains(&a) || d0.contains(&b) {
                return Err(Error::InvalidSatake("thetabar moves a black node".into()));
            }
            if (tb[a] != a && tb[a] != b) || (tb[b] != b && tb[b] != a) {
                return Err(Error::InvalidSatake("thetabar is not an involution".into()));
            }
            tb[a] = b;
            tb[b] = a;
        }
        Ok(Self {
            rs,
            delta0: d0,
            thetabar: tb,
        })
    }

    pub fn delta1(&self) -> Vec<usize> {
        (0..self.rs.rank())
            .filter(|i| !self.delta0.contains(i))
            .collect()
    }
}

/// A symmetric pair with all derived data.
#[derive(Clone, Debug)]
pub struct SymmetricPair<T> {
    name: String,
    spec: SatakeSpec<T>,
    theta: Matrix<T>,
    theta_roots: Vec<Vec<i64>>,
    representatives: Vec<usize>,
    restricted_simple: Vec<Weight<T>>,
    restricted_root_coords: Vec<Vec<i64>>,
    special_basis: Vec<Weight<T>>,
    rho_coeffs: Vec<T>,
    alpha_solver: BasisSolver<T>,
    omega_solver: BasisSolver<T>,
    warnings: Vec<String>,
}

/// Derives the pair from Satake data.
pub fn build_pair<T: Scalar>(spec: SatakeSpec<T>) -> Result<SymmetricPair<T>> {
    SymmetricPair::build(spec, String::new())
}

impl<T: Scalar> SymmetricPair<T> {
    pub fn build(spec: SatakeSpec<T>, name: String) -> Result<Self> {
        let rs = &spec.rs;
        let n = rs.rank();
        let c = rs.cartan();
        let d0 = &spec.delta0;
        let tb = &spec.thetabar;
        for i in 0..n {
            if tb[tb[i]] != i || (d0.contains(&i) && tb[i] != i) {
                return Err(Error::InvalidSatake("thetabar is not an involution of delta1".into()));
            }
        }
        let delta1 = spec.delta1();
        if delta1.is_empty() {
            return Err(Error::InvalidSatake("no white nodes".into()));
        }

        // theta on simple roots, columns in simple-root coordinates.
        let block: Matrix<T> = d0
            .iter()
            .map(|&a| d0.iter().map(|&b| T::from_int(c[a][b])).collect())
            .collect();
        let mut theta_roots = vec![vec![0i64; n]; n];
        for j in 0..n {
            if d0.contains(&j) {
                theta_roots[j][j] = 1;
                continue;
            }
            let rhs: Vec<T> = d0
                .iter()
                .map(|&dp| T::from_int(-c[dp][j] - c[dp][tb[j]]))
                .collect();
            let m = if d0.is_empty() {
                Vec::new()
            } else {
                linalg::solve(&block, &rhs)
                    .ok_or_else(|| Error::InvalidSatake("black Cartan block is singular".into()))?
            };
            let col = &mut theta_roots[j];
            col[tb[j]] -= 1;
            for (&dl, mv) in d0.iter().zip(&m) {
                match mv.to_i64_exact() {
                    Some(v) if v >= 0 => col[dl] -= v,
                    _ => {
                        return Err(Error::InvalidSatake(format!(
                            "m for delta = alpha{} and alpha{} is {}, not a nonnegative integer",
                            dl + 1,
                            j + 1,
                            crate::scalar::render(mv)
                        )))
                    }
                }
            }
        }

        // theta on weights: C * Theta * C^{-1}.
        let cm: Matrix<T> = linalg::from_int(c);
        let th_r: Matrix<T> = (0..n)
            .map(|i| (0..n).map(|j| T::from_int(theta_roots[j][i])).collect())
            .collect();
        let cinv = linalg::inverse(&cm).expect("Cartan invertible");
        let theta = linalg::mul(&linalg::mul(&cm, &th_r), &cinv);
        if linalg::mul(&theta, &theta) != linalg::identity(n) {
            return Err(Error::InvalidSatake("derived theta is not an involution".into()));
        }

        let mut representatives = Vec::new();
        let mut restricted_root_coords: Vec<Vec<i64>> = Vec::new();
        for &a in &delta1 {
            let mut v: Vec<i64> = theta_roots[a].iter().map(|x| -x).collect();
            v[a] += 1;
            if !restricted_root_coords.contains(&v) {
                representatives.push(a);
                restricted_root_coords.push(v);
            }
        }
        let restricted_simple: Vec<Weight<T>> = restricted_root_coords
            .iter()
            .map(|r| rs.root_weight(r))
            .collect();
        let alpha_solver = BasisSolver::new(
            restricted_simple.iter().map(|w| w.coords.clone()).collect(),
        )
        .ok_or_else(|| Error::InvalidSatake("restricted simple roots are dependent".into()))?;

        let special_basis: Vec<Weight<T>> = representatives
            .iter()
            .map(|&a| {
                let mut w = Weight::<T>::zero(n);
                if tb[a] != a {
                    w.coords[a] = T::one();
                    w.coords[tb[a]] = T::one();
                } else if theta_roots[a].iter().enumerate().all(|(k, &x)| x == if k == a { -1 } else { 0 }) {
                    w.coords[a] = T::from_int(2);
                } else {
                    w.coords[a] = T::one();
                }
                w
            })
            .collect();
        let omega_solver = BasisSolver::new(
            special_basis.iter().map(|w| w.coords.clone()).collect(),
        )
        .ok_or_else(|| Error::InvalidSatake("special basis is dependent".into()))?;

        let mut rho_coeffs = Vec::new();
        for (at, om) in restricted_simple.iter().zip(&special_basis) {
            let den = rs.inner(om, at);
            if den.is_zero() {
                return Err(Error::InvalidSatake("(omega~_i, alpha~_i) vanishes".into()));
            }
            rho_coeffs.push(rs.inner(rs.rho(), at) / den);
        }

        let mut pair = Self {
            name,
            spec,
            theta,
            theta_roots,
            representatives,
            restricted_simple,
            restricted_root_coords,
            special_basis,
            rho_coeffs,
            alpha_solver,
            omega_solver,
            warnings: Vec::new(),
        };
        pair.validate()?;
        Ok(pair)
    }

    /// Hard invariants are errors; the soft ones become warnings.
    fn validate(&mut self) -> Result<()> {
        for (i, w) in self.special_basis.iter().enumerate() {
            if self.theta_apply(w) != -w {
                return Err(Error::InvalidSatake(format!("omega~_{} is not special", i + 1)));
            }
        }
        for (i, w) in self.restricted_simple.iter().enumerate() {
            if self.theta_apply(w) != -w {
                return Err(Error::InvalidSatake(format!("alpha~_{} is not special", i + 1)));
            }
        }
        for (i, rho) in self.rho_coeffs.iter().enumerate() {
            if !rho.is_positive() {
                return Err(Error::InvalidSatake(format!("rho_{} is not positive", i + 1)));
            }
        }
        let rs = &self.spec.rs;
        for r in rs.positive_roots() {
            let t = self.theta_root(r);
            if t != *r && RootSystem::<T>::height(&t) > 0 {
                return Err(Error::InvalidSatake(format!(
                    "theta maps the positive root {r:?} outside the negative roots"
                )));
            }
        }
        let mut warnings = Vec::new();
        for (i, a) in self.restricted_simple.iter().enumerate() {
            match self.special_coords(a) {
                None => warnings.push(format!("alpha~_{} is outside the special span", i + 1)),
                Some(cs) => {
                    if cs.iter().any(|c| !c.is_integral()) {
                        warnings.push(format!("alpha~_{} has non-integral special coordinates", i + 1));
                    }
                    if cs.iter().any(|c| c.is_negative()) {
                        warnings.push(format!(
                            "alpha~_{} has a negative special coordinate: {}",
                            i + 1,
                            Weight::new(cs.clone())
                        ));
                    }
                    if !cs[i].is_positive() {
                        warnings.push(format!("alpha~_{} has nonpositive diagonal coordinate", i + 1));
                    }
                }
            }
        }
        self.warnings = warnings;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> &SatakeSpec<T> {
        &self.spec
    }

    pub fn root_system(&self) -> &RootSystem<T> {
        &self.spec.rs
    }

    /// The involution on weights (fundamental-weight coordinates).
    pub fn theta(&self) -> &Matrix<T> {
        &self.theta
    }

    /// `theta(alpha_j)` in simple-root coordinates.
    pub fn theta_simple(&self, j: usize) -> &[i64] {
        &self.theta_roots[j]
    }

    /// `theta` on a root-lattice vector.
    pub fn theta_root(&self, r: &[i64]) -> Vec<i64> {
        let n = r.len();
        let mut out = vec![0i64; n];
        for (j, &rj) in r.iter().enumerate() {
            if rj != 0 {
                for i in 0..n {
                    out[i] += rj * self.theta_roots[j][i];
                }
            }
        }
        out
    }

    pub fn rank_restricted(&self) -> usize {
        self.restricted_simple.len()
    }

    /// Simple root chosen for each `alpha~_i` (0-based).
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn restricted_simple(&self) -> &[Weight<T>] {
        &self.restricted_simple
    }

    /// `alpha~_i` in simple-root coordinates.
    pub fn restricted_root_coords(&self) -> &[Vec<i64>] {
        &self.restricted_root_coords
    }

    pub fn special_basis(&self) -> &[Weight<T>] {
        &self.special_basis
    }

    pub fn rho_coefficients(&self) -> &[T] {
        &self.rho_coeffs
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn theta_apply(&self, w: &Weight<T>) -> Weight<T> {
        Weight::new(linalg::mul_vec(&self.theta, &w.coords))
    }

    pub fn is_special(&self, w: &Weight<T>) -> bool {
        self.theta_apply(w) == -w
    }

    /// Coordinates in the `omega~` basis, when in their rational span.
    pub fn special_coords(&self, w: &Weight<T>) -> Option<Vec<T>> {
        self.omega_solver.coords(&w.coords)
    }

    /// Integer special coordinates, or `NotSpecial`.
    pub fn special_ints(&self, w: &Weight<T>) -> Result<Vec<i64>> {
        self.special_coords(w)
            .and_then(|c| c.iter().map(|x| x.to_i64_exact()).collect())
            .ok_or_else(|| Error::NotSpecial(w.to_string()))
    }

    /// `sum c_i omega~_i`.
    pub fn special_weight(&self, c: &[T]) -> Weight<T> {
        let n = self.spec.rs.rank();
        let mut w = Weight::zero(n);
        for (ci, b) in c.iter().zip(&self.special_basis) {
            for k in 0..n {
                w.coords[k] += ci.clone() * b.coords[k].clone();
            }
        }
        w
    }

    pub fn special_weight_ints(&self, c: &[i64]) -> Weight<T> {
        self.special_weight(&c.iter().map(|&x| T::from_int(x)).collect::<Vec<_>>())
    }

    /// `sum v_i (omega_a + omega_{thetabar a})` over representatives `a`,
    /// counting `omega_a` once when `a` is fixed by `thetabar`.
    pub fn representative_weight(&self, v: &[T]) -> Weight<T> {
        let mut w = Weight::zero(self.spec.rs.rank());
        for (vi, &a) in v.iter().zip(&self.representatives) {
            w.coords[a] += vi.clone();
            let b = self.spec.thetabar[a];
            if b != a {
                w.coords[b] += vi.clone();
            }
        }
        w
    }

    /// Coordinates in the `alpha~` basis, when in their rational span.
    pub fn restricted_coords(&self, w: &Weight<T>) -> Option<Vec<T>> {
        self.alpha_solver.coords(&w.coords)
    }

    /// `lambda + sum k_i alpha~_i`.
    pub fn shift(&self, base: &Weight<T>, k: &[i64]) -> Weight<T> {
        let mut w = base.clone();
        for (&ki, a) in k.iter().zip(&self.restricted_simple) {
            if ki != 0 {
                let kt = T::from_int(ki);
                for (x, y) in w.coords.iter_mut().zip(&a.coords) {
                    *x += kt.clone() * y.clone();
                }
            }
        }
        w
    }

    /// `Some(k)` iff `delta = sum k_i alpha~_i` with integers `k_i > 0` on
    /// `J` and `k_i <= 0` off `J`.
    pub fn r_cone_member(&self, j: Subset, delta: &Weight<T>) -> Option<Vec<i64>> {
        let c = self.restricted_coords(delta)?;
        let k: Vec<i64> = c.iter().map(|x| x.to_i64_exact()).collect::<Option<_>>()?;
        let ok = k
            .iter()
            .enumerate()
            .all(|(i, &ki)| if j.contains(i) { ki > 0 } else { ki <= 0 });
        ok.then_some(k)
    }

    /// `nu = sum c_i omega~_i` with integers `c_i < -rho_i` on `J` and
    /// `c_i > -rho_i` off `J`.
    pub fn omega_cone_member(&self, j: Subset, nu: &Weight<T>) -> bool {
        let Some(c) = self.special_coords(nu) else {
            return false;
        };
        c.iter().zip(&self.rho_coeffs).enumerate().all(|(i, (ci, rho))| {
            if !ci.is_integral() {
                return false;
            }
            let shifted = ci.clone() + rho.clone();
            if j.contains(i) {
                shifted.is_negative()
            } else {
                shifted.is_positive()
            }
        })
    }

    /// The unique `J` with `nu` in `Omega_J`, if any.
    pub fn omega_subset(&self, nu: &Weight<T>) -> Option<Subset> {
        let c = self.special_coords(nu)?;
        let mut mask = 0u32;
        for (i, (ci, rho)) in c.iter().zip(&self.rho_coeffs).enumerate() {
            if !ci.is_integral() {
                return None;
            }
            let s = ci.clone() + rho.clone();
            if s.is_zero() {
                return None;
            }
            if s.is_negative() {
                mask |= 1 << i;
            }
        }
        Some(Subset(mask))
    }

    /// The Gram matrix `(omega~_j, alpha~_i)` (row `i`, column `j`).
    pub fn cross_gram(&self) -> Matrix<T> {
        let rs = &self.spec.rs;
        self.restricted_simple
            .iter()
            .map(|a| self.special_basis.iter().map(|o| rs.inner(o, a)).collect())
            .collect()
    }
}

impl<T: Scalar> fmt::Display for SymmetricPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d0: Vec<String> = self.spec.delta0.iter().map(|i| (i + 1).to_string()).collect();
        write!(
            f,
            "{} [{}; delta0 = {{{}}}; r = {}]",
            self.name,
            self.spec.rs.cartan_type(),
            d0.join(","),
            self.rank_restricted()
        )
    }
}
