//! Euler characteristic, cohomology bounds and closed-orbit cell data.
//!
//! Every sum runs over pairs `(J, nu)` with `J` a subset of the restricted
//! indices and `nu` in `(lambda + R_J) cap Omega_J`. Writing
//! `nu = lambda + sum k_i alpha~_i`, both cones are linear conditions on the
//! integer vector `k`, so each region is a rational polyhedron whose
//! integer points are listed by [`crate::polyhedron`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyhedron::System;
use crate::rootsys::{Coweight, RootSystem, Weight, WeylElement};
use crate::scalar::Scalar;
use crate::sympair::{Subset, SymmetricPair};

/// A finite formal combination of irreducibles `[L(mu)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualModule<T> {
    entries: BTreeMap<Weight<T>, i64>,
}

impl<T: Scalar> Default for VirtualModule<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> VirtualModule<T> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, mu: Weight<T>, m: i64) {
        if m == 0 {
            return;
        }
        match self.entries.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(m);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, mu: &Weight<T>) -> i64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Entries in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight<T>, &i64)> {
        self.entries.iter()
    }

    pub fn add_module(&mut self, other: &Self, sign: i64) {
        for (k, v) in &other.entries {
            self.add(k.clone(), sign * v);
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|&v| v >= 0)
    }

    /// `self[mu] <= other[mu]` for every `mu`.
    pub fn le(&self, other: &Self) -> bool {
        self.entries.iter().all(|(k, &v)| v <= other.get(k))
            && other
                .entries
                .iter()
                .all(|(k, &v)| v >= 0 || self.entries.contains_key(k))
    }
}

impl<T: Scalar> fmt::Display for VirtualModule<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| format!("{v}*L{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cohomology (or a bound for it), degree by degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CohomologyTable<T> {
    pub by_degree: BTreeMap<usize, VirtualModule<T>>,
}

impl<T: Scalar> CohomologyTable<T> {
    pub fn new() -> Self {
        Self {
            by_degree: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, d: usize, mu: Weight<T>, m: i64) {
        self.by_degree.entry(d).or_default().add(mu, m);
        if self.by_degree.get(&d).is_some_and(|v| v.is_empty()) {
            self.by_degree.remove(&d);
        }
    }

    pub fn degree(&self, d: usize) -> VirtualModule<T> {
        self.by_degree.get(&d).cloned().unwrap_or_default()
    }

    pub fn get(&self, d: usize, mu: &Weight<T>) -> i64 {
        self.by_degree.get(&d).map_or(0, |v| v.get(mu))
    }

    /// Degrees carrying a nonzero module.
    pub fn support(&self) -> Vec<usize> {
        self.by_degree
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(d, _)| *d)
            .collect()
    }

    /// `sum_d (-1)^d H^d`.
    pub fn euler(&self) -> VirtualModule<T> {
        let mut out = VirtualModule::new();
        for (d, v) in &self.by_degree {
            out.add_module(v, if d % 2 == 0 { 1 } else { -1 });
        }
        out
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.by_degree.iter().all(|(d, v)| v.le(&other.degree(*d)))
    }
}

/// One regular lattice point of a region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionPoint<T> {
    pub j: Subset,
    pub k: Vec<i64>,
    pub nu: Weight<T>,
    pub nu_plus: Weight<T>,
    pub length: usize,
}

impl<T: Scalar> RegionPoint<T> {
    pub fn degree(&self) -> usize {
        self.length + self.j.len()
    }

    pub fn sign(&self) -> i64 {
        if self.degree() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

fn require_special<T: Scalar>(pair: &SymmetricPair<T>, lambda: &Weight<T>) -> Result<Vec<i64>> {
    if lambda.rank() != pair.root_system().rank() {
        return Err(Error::RankMismatch {
            expected: pair.root_system().rank(),
            got: lambda.rank(),
        });
    }
    if !pair.is_special(lambda) {
        return Err(Error::NotSpecial(lambda.to_string()));
    }
    pair.special_ints(lambda)
}

/// Integer points `k` of `(lambda + R_J) cap Omega_J`, regular or not.
pub fn region_points<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
    j: Subset,
) -> Result<Vec<Vec<i64>>> {
    let lc = require_special(pair, lambda)?;
    let r = pair.rank_restricted();
    // a[i] = special coordinates of alpha~_i.
    let a: Vec<Vec<T>> = pair
        .restricted_simple()
        .iter()
        .map(|w| pair.special_coords(w).expect("alpha~ is special"))
        .collect();
    let mut sys = System::new(r);
    for i in 0..r {
        if j.contains(i) {
            sys.bound_var(i, Some(1), None);
        } else {
            sys.bound_var(i, None, Some(0));
        }
    }
    for (col, rho) in pair.rho_coefficients().iter().enumerate() {
        // c_col = lc[col] + sum_i k_i a[i][col]
        let coeffs: Vec<T> = (0..r).map(|i| a[i][col].clone()).collect();
        let bound = -rho.clone() - T::from_int(lc[col]);
        if j.contains(col) {
            sys.add_lt(&coeffs, &bound);
        } else {
            sys.add_gt(&coeffs, &bound);
        }
    }
    let pts = sys
        .lattice_points()
        .map_err(|_| Error::UnboundedRegion(j.indices().iter().map(|i| i + 1).collect()))?;
    // Omega_J also asks for integral special coordinates.
    Ok(pts
        .into_iter()
        .filter(|k| pair.omega_cone_member(j, &pair.shift(lambda, k)))
        .collect())
}

/// All regular points of all regions, sorted by `(J, k)`.
pub fn region_terms<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
) -> Result<Vec<RegionPoint<T>>> {
    let rs = pair.root_system();
    let mut out = Vec::new();
    for j in Subset::all(pair.rank_restricted()) {
        for k in region_points(pair, lambda, j)? {
            let nu = pair.shift(lambda, &k);
            if let Some((nu_plus, length)) = rs.dot_dominant(&nu) {
                out.push(RegionPoint {
                    j,
                    k,
                    nu,
                    nu_plus,
                    length,
                });
            }
        }
    }
    Ok(out)
}

/// `chi(X, L_lambda)` as a virtual module.
pub fn euler_character<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
) -> Result<VirtualModule<T>> {
    let mut out = VirtualModule::new();
    for p in region_terms(pair, lambda)? {
        let sign = p.sign();
        out.add(p.nu_plus, sign);
    }
    Ok(out)
}

/// Upper bound for every `H^d(X, L_lambda)`.
pub fn bound_cohomology<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
) -> Result<CohomologyTable<T>> {
    let mut out = CohomologyTable::new();
    for p in region_terms(pair, lambda)? {
        let d = p.degree();
        out.add(d, p.nu_plus, 1);
    }
    Ok(out)
}

/// `chi_lambda(mu)` by running over the dot orbit of `mu`.
pub fn euler_multiplicity<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
    mu: &Weight<T>,
) -> Result<i64> {
    require_special(pair, lambda)?;
    let rs = pair.root_system();
    if !mu.is_integral() || !mu.is_dominant() {
        return Err(Error::NotDominantIntegral(mu.to_string()));
    }
    let mut total = 0i64;
    for nu in rs.dot_orbit(mu)? {
        let delta = &nu - lambda;
        let mut hits = 0;
        for j in Subset::all(pair.rank_restricted()) {
            if pair.r_cone_member(j, &delta).is_some() && pair.omega_cone_member(j, &nu) {
                let d = rs.dot_length(&nu) + j.len();
                total += if d % 2 == 0 { 1 } else { -1 };
                hits += 1;
            }
        }
        debug_assert!(hits <= 1, "cones overlap at {nu}");
    }
    Ok(total)
}

fn check_coweight<T: Scalar>(rs: &RootSystem<T>, zeta: &Coweight) -> Result<()> {
    if zeta.values.len() != rs.rank() || !zeta.is_dominant_regular() {
        return Err(Error::InvalidCoweight);
    }
    Ok(())
}

/// `<w(alpha~_i), zeta>` for each restricted index.
pub fn cell_signs<T: Scalar>(
    pair: &SymmetricPair<T>,
    w: &WeylElement,
    zeta: &Coweight,
) -> Result<Vec<i64>> {
    let rs = pair.root_system();
    check_coweight(rs, zeta)?;
    pair.restricted_root_coords()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let image = rs.act_root(w, r);
            let v: i64 = image.iter().zip(&zeta.values).map(|(a, b)| a * b).sum();
            if v == 0 {
                Err(Error::DegenerateCoweight(i + 1))
            } else {
                Ok(v)
            }
        })
        .collect()
}

/// Multiplicity of `L(mu)` in the cohomology with support in the cell of `w`.
pub fn cell_multiplicity<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
    w: &WeylElement,
    mu: &Weight<T>,
    zeta: &Coweight,
) -> Result<u8> {
    require_special(pair, lambda)?;
    let rs = pair.root_system();
    let signs = cell_signs(pair, w, zeta)?;
    let mu_rho = mu + rs.rho();
    if !rs.is_regular(&mu_rho) {
        return Err(Error::Singular(mu.to_string()));
    }
    let v = &rs.act(&w.inverse(), &mu_rho) - &(lambda + rs.rho());
    let Some(c) = pair.restricted_coords(&v) else {
        return Ok(0);
    };
    let ok = c.iter().zip(&signs).all(|(ci, &s)| {
        ci.is_integral() && if s < 0 { ci.is_positive() } else { !ci.is_positive() }
    });
    Ok(u8::from(ok))
}

/// Codimension of the cell of `w`.
pub fn cell_codimension<T: Scalar>(
    pair: &SymmetricPair<T>,
    w: &WeylElement,
    zeta: &Coweight,
) -> Result<usize> {
    let signs = cell_signs(pair, w, zeta)?;
    Ok(signs.iter().filter(|&&s| s < 0).count() + w.length())
}

/// Sign of `(lambda + rho, alpha~_i)`: `-1` or `1`.
pub fn wspecial_sign<T: Scalar>(pair: &SymmetricPair<T>, lambda: &Weight<T>, i: usize) -> Result<i8> {
    let rs = pair.root_system();
    let r = pair.rank_restricted();
    if i >= r {
        return Err(Error::IndexOutOfRange { index: i, rank: r });
    }
    let v = lambda + rs.rho();
    if !rs.is_regular(&v) {
        return Err(Error::Singular(lambda.to_string()));
    }
    let s = rs.inner(&v, &pair.restricted_simple()[i]);
    Ok(if s.is_negative() { -1 } else { 1 })
}

/// Sign of `<w_lambda(alpha~_i), zeta>` with `w_lambda (lambda + rho)` dominant.
pub fn wspecial_direct<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
    i: usize,
    zeta: &Coweight,
) -> Result<i8> {
    let rs = pair.root_system();
    let (_, w) = rs
        .dot_dominant_element(lambda)
        .ok_or_else(|| Error::Singular(lambda.to_string()))?;
    let signs = cell_signs(pair, &w, zeta)?;
    let s = signs
        .get(i)
        .ok_or(Error::IndexOutOfRange { index: i, rank: signs.len() })?;
    Ok(if *s < 0 { -1 } else { 1 })
}
