//! Truncated formal characters.
//!
//! A [`FormalCharacter`] stores `sum_c a_c e^{anchor - sum c_i alpha_i}` for
//! offsets `c` in `Z>=0^rank` with total height at most `cutoff`. Every
//! coefficient inside that simplex is exact.
//!
//! Multiplicities of finite-dimensional subquotients are read off as the
//! coefficient of `e^mu` in `prod_{alpha > 0} (1 - e^{-alpha}) * char`. That
//! coefficient only involves offsets of height at most `ht(anchor - mu)`, so
//! extraction is refused when this exceeds the cutoff.

use std::collections::BTreeMap;

use crate::cohomology::cell_signs;
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem, Weight, WeylElement};
use crate::scalar::Scalar;
use crate::sympair::SymmetricPair;

fn height(c: &[i64]) -> i64 {
    c.iter().sum()
}

fn is_positive_element(d: &[i64]) -> bool {
    d.iter().all(|&x| x >= 0) && d.iter().any(|&x| x > 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter<T> {
    anchor: Weight<T>,
    cutoff: usize,
    coeffs: BTreeMap<Vec<i64>, i64>,
}

impl<T: Scalar> FormalCharacter<T> {
    /// `e^anchor` truncated at `cutoff`.
    pub fn monomial(anchor: Weight<T>, cutoff: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![0; anchor.rank()], 1);
        Self { anchor, cutoff, coeffs }
    }

    pub fn anchor(&self) -> &Weight<T> {
        &self.anchor
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Nonzero coefficients keyed by offset.
    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.coeffs
    }

    /// Offset of `mu` from the anchor, if it is a nonnegative integer vector.
    pub fn offset(&self, rs: &RootSystem<T>, mu: &Weight<T>) -> Option<Vec<i64>> {
        let o = rs.to_root_ints(&(&self.anchor - mu))?;
        o.iter().all(|&x| x >= 0).then_some(o)
    }

    /// Coefficient at `mu`; an error if `mu` lies below the truncation.
    pub fn coefficient(&self, rs: &RootSystem<T>, mu: &Weight<T>) -> Result<i64> {
        let Some(o) = self.offset(rs, mu) else {
            return Ok(0);
        };
        let h = height(&o);
        if h as usize > self.cutoff {
            return Err(Error::OutsideWindow {
                weight: mu.to_string(),
                height: h,
                cutoff: self.cutoff as i64,
            });
        }
        Ok(self.coeffs.get(&o).copied().unwrap_or(0))
    }

    /// Multiplies by `1 / (1 - e^{-d})` for a positive element `d`.
    pub fn mul_geometric(&mut self, d: &[i64]) -> Result<()> {
        if !is_positive_element(d) {
            return Err(Error::NotPositiveRoot(d.to_vec()));
        }
        // new[c] = old[c] + new[c - d], filled in order of height.
        let mut keys: Vec<Vec<i64>> = Vec::new();
        let mut frontier: Vec<Vec<i64>> = self.coeffs.keys().cloned().collect();
        let mut seen: std::collections::BTreeSet<Vec<i64>> = frontier.iter().cloned().collect();
        while let Some(c) = frontier.pop() {
            keys.push(c.clone());
            let next: Vec<i64> = c.iter().zip(d).map(|(a, b)| a + b).collect();
            if height(&next) as usize <= self.cutoff && seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
        keys.sort_by_key(|k| height(k));
        let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for c in keys {
            let prev: Vec<i64> = c.iter().zip(d).map(|(a, b)| a - b).collect();
            let v = self.coeffs.get(&c).copied().unwrap_or(0) + out.get(&prev).copied().unwrap_or(0);
            out.insert(c, v);
        }
        out.retain(|_, v| *v != 0);
        self.coeffs = out;
        Ok(())
    }

    /// Multiplies by `1 - e^{-d}`.
    pub fn mul_one_minus(&mut self, d: &[i64]) {
        let mut out = self.coeffs.clone();
        for (c, v) in &self.coeffs {
            let s: Vec<i64> = c.iter().zip(d).map(|(a, b)| a + b).collect();
            if s.iter().all(|&x| x >= 0) && height(&s) as usize <= self.cutoff {
                *out.entry(s).or_insert(0) -= v;
            }
        }
        out.retain(|_, v| *v != 0);
        self.coeffs = out;
    }

    /// Product; anchors add and the cutoff is the smaller one.
    pub fn mul(&self, other: &Self) -> Self {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut coeffs: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let s: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                if height(&s) as usize <= cutoff {
                    *coeffs.entry(s).or_insert(0) += x * y;
                }
            }
        }
        coeffs.retain(|_, v| *v != 0);
        Self {
            anchor: &self.anchor + &other.anchor,
            cutoff,
            coeffs,
        }
    }
}

/// `e^lambda / prod_{alpha > 0} (1 - e^{-alpha})`.
pub fn verma_character<T: Scalar>(rs: &RootSystem<T>, lambda: &Weight<T>, cutoff: usize) -> FormalCharacter<T> {
    let mut ch = FormalCharacter::monomial(lambda.clone(), cutoff);
    for a in rs.positive_roots() {
        ch.mul_geometric(a).expect("positive root");
    }
    ch
}

/// Local data of a cell: highest term and the denominator weights,
/// each given in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellLocalData<T> {
    pub lambda_prime: Weight<T>,
    pub pos_denoms: Vec<Vec<i64>>,
    /// Already negated, so each entry is positive.
    pub neg_denoms: Vec<Vec<i64>>,
    /// Each entry enters squared.
    pub double_denoms: Vec<Vec<i64>>,
}

impl<T: Scalar> CellLocalData<T> {
    pub fn validate(&self) -> Result<()> {
        for d in self
            .pos_denoms
            .iter()
            .chain(&self.neg_denoms)
            .chain(&self.double_denoms)
        {
            if !is_positive_element(d) {
                return Err(Error::NotPositiveRoot(d.clone()));
            }
        }
        Ok(())
    }
}

/// Character of the support module described by `data`.
pub fn support_character<T: Scalar>(
    data: &CellLocalData<T>,
    cutoff: usize,
) -> Result<FormalCharacter<T>> {
    data.validate()?;
    let mut ch = FormalCharacter::monomial(data.lambda_prime.clone(), cutoff);
    for d in data.pos_denoms.iter().chain(&data.neg_denoms) {
        ch.mul_geometric(d)?;
    }
    for d in &data.double_denoms {
        ch.mul_geometric(d)?;
        ch.mul_geometric(d)?;
    }
    Ok(ch)
}

/// Multiplicity of `L(mu)` read off from a character.
pub fn multiplicity_extraction<T: Scalar>(
    rs: &RootSystem<T>,
    ch: &FormalCharacter<T>,
    mu: &Weight<T>,
) -> Result<i64> {
    if !mu.is_dominant() || !mu.is_integral() {
        return Err(Error::NotDominantIntegral(mu.to_string()));
    }
    let Some(o) = ch.offset(rs, mu) else {
        return Ok(0);
    };
    let h = height(&o) as usize;
    if h > ch.cutoff {
        return Err(Error::OutsideWindow {
            weight: mu.to_string(),
            height: h as i64,
            cutoff: ch.cutoff as i64,
        });
    }
    // Weyl denominator, truncated at the height of `o`.
    let mut den = FormalCharacter::monomial(rs.zero(), h);
    for a in rs.positive_roots() {
        den.mul_one_minus(a);
    }
    let mut total = 0i64;
    for (s, v) in &den.coeffs {
        let rest: Vec<i64> = o.iter().zip(s).map(|(a, b)| a - b).collect();
        if rest.iter().all(|&x| x >= 0) {
            total += v * ch.coeffs.get(&rest).copied().unwrap_or(0);
        }
    }
    Ok(total)
}

/// Cutoff that admits `mu` for a character anchored at `anchor`, if any.
pub fn window_for<T: Scalar>(rs: &RootSystem<T>, anchor: &Weight<T>, mu: &Weight<T>) -> Option<usize> {
    let o = rs.to_root_ints(&(anchor - mu))?;
    o.iter().all(|&x| x >= 0).then(|| height(&o) as usize)
}

/// Data of the closed-orbit cell of `w`.
///
/// The character is `sum_c ch M(w . (lambda + sum c_i alpha~_i))` over the
/// cone of the cell, so the highest term is
/// `w(lambda + rho) - rho + sum_{i in N} w(alpha~_i)` where `N` collects the
/// indices with `<w(alpha~_i), zeta> < 0`. Fails unless every `w(alpha~_i)`
/// is sign-definite in the simple-root basis.
pub fn closed_orbit_cell_data<T: Scalar>(
    pair: &SymmetricPair<T>,
    lambda: &Weight<T>,
    w: &WeylElement,
    zeta: &Coweight,
) -> Result<CellLocalData<T>> {
    let rs = pair.root_system();
    if !pair.is_special(lambda) {
        return Err(Error::NotSpecial(lambda.to_string()));
    }
    let signs = cell_signs(pair, w, zeta)?;
    let mut lambda_prime = &rs.act(w, &(lambda + rs.rho())) - rs.rho();
    let mut pos_denoms: Vec<Vec<i64>> = rs.positive_roots().to_vec();
    let mut neg_denoms = Vec::new();
    for (r, s) in pair.restricted_root_coords().iter().zip(signs) {
        let image = rs.act_root(w, r);
        let neg: Vec<i64> = image.iter().map(|x| -x).collect();
        if s > 0 && is_positive_element(&image) {
            pos_denoms.push(image);
        } else if s < 0 && is_positive_element(&neg) {
            lambda_prime = &lambda_prime + &rs.root_weight(&image);
            neg_denoms.push(neg);
        } else {
            return Err(Error::InvalidParameter {
                name: "w".into(),
                reason: format!("w(alpha~) = {image:?} is not sign-definite"),
            });
        }
    }
    Ok(CellLocalData {
        lambda_prime,
        pos_denoms,
        neg_denoms,
        double_denoms: Vec::new(),
    })
}
