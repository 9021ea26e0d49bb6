//! Root systems of types A, B, C, D, F (and finite products of them), their
//! Weyl groups, the dot action and the Weyl dimension formula.
//!
//! Conventions:
//! * simple roots are numbered as in Bourbaki;
//! * `cartan[i][j] = <alpha_j, alpha_i^vee>`, so column `j` of the Cartan
//!   matrix is `alpha_j` written in fundamental-weight coordinates;
//! * the invariant form is fixed by minimal positive integer symmetrizers
//!   `d_i = (alpha_i, alpha_i) / 2`;
//! * roots are integer vectors in the simple-root basis, weights are exact
//!   vectors in the fundamental-weight basis.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::{render, Scalar};

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<T> {
    pub coords: Vec<T>,
}

impl<T: Scalar> Weight<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![T::zero(); rank],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&c| T::from_int(c)).collect(),
        }
    }

    /// The fundamental weight `omega_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i] = T::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integral())
    }

    /// All coordinates nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// Integer coordinates, if every coordinate is an integer fitting `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(|c| c.to_i64_exact()).collect()
    }
}

impl<T: Scalar> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(render).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<T: Scalar> Add for &Weight<T> {
    type Output = Weight<T>;
    fn add(self, rhs: &Weight<T>) -> Weight<T> {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Weight<T> {
    type Output = Weight<T>;
    fn sub(self, rhs: &Weight<T>) -> Weight<T> {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Add for Weight<T> {
    type Output = Weight<T>;
    fn add(self, rhs: Weight<T>) -> Weight<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Weight<T> {
    type Output = Weight<T>;
    fn sub(self, rhs: Weight<T>) -> Weight<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for &Weight<T> {
    type Output = Weight<T>;
    fn neg(self) -> Weight<T> {
        Weight {
            coords: self.coords.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Neg for Weight<T> {
    type Output = Weight<T>;
    fn neg(self) -> Weight<T> {
        -&self
    }
}

/// Simple Lie types supported by the builder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    F,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::F => 'F',
        }
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::F => rank == 4,
        }
    }

    fn positive_root_count(self, n: usize) -> usize {
        match self {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::F => 24,
        }
    }

    fn weyl_order(self, n: usize) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::F => 1152,
        }
    }

    /// Symmetric Gram matrix `(alpha_i, alpha_j)` with minimal integer entries.
    fn gram(self, n: usize) -> Vec<Vec<i64>> {
        let mut b = vec![vec![0i64; n]; n];
        match self {
            Family::A => {
                for i in 0..n {
                    b[i][i] = 2;
                    if i + 1 < n {
                        b[i][i + 1] = -1;
                        b[i + 1][i] = -1;
                    }
                }
            }
            Family::B => {
                for i in 0..n {
                    b[i][i] = if i + 1 < n { 4 } else { 2 };
                    if i + 1 < n {
                        b[i][i + 1] = -2;
                        b[i + 1][i] = -2;
                    }
                }
            }
            Family::C => {
                for i in 0..n {
                    b[i][i] = if i + 1 < n { 2 } else { 4 };
                    if i + 1 < n {
                        let v = if i + 2 == n { -2 } else { -1 };
                        b[i][i + 1] = v;
                        b[i + 1][i] = v;
                    }
                }
            }
            Family::D => {
                for i in 0..n {
                    b[i][i] = 2;
                }
                for i in 0..n - 2 {
                    b[i][i + 1] = -1;
                    b[i + 1][i] = -1;
                }
                b[n - 3][n - 1] = -1;
                b[n - 1][n - 3] = -1;
            }
            Family::F => {
                b = vec![
                    vec![4, -2, 0, 0],
                    vec![-2, 4, -2, 0],
                    vec![0, -2, 2, -1],
                    vec![0, 0, -1, 2],
                ];
            }
        }
        b
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "F" => Ok(Family::F),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A product of simple types, e.g. `C4` or `A1xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub components: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn simple(family: Family, rank: usize) -> Self {
        Self {
            components: vec![(family, rank)],
        }
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    /// The family when the type is simple.
    pub fn family(&self) -> Option<Family> {
        match self.components.as_slice() {
            [(f, _)] => Some(*f),
            _ => None,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(fam, n)| format!("{}{}", fam.letter(), n))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut components = Vec::new();
        for part in s.split(['x', 'X', '*']) {
            let part = part.trim();
            let (head, tail) = part.split_at(part.len().min(1));
            let family: Family = head.parse()?;
            let rank: usize = tail
                .parse()
                .map_err(|_| Error::UnknownFamily(s.to_string()))?;
            components.push((family, rank));
        }
        Ok(Self { components })
    }
}

/// An element of the Weyl group as a word in simple reflections.
///
/// The word `[i1, ..., ik]` stands for `s_{i1} ... s_{ik}` (0-based indices),
/// so `s_{ik}` acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    length: usize,
}

impl WeylElement {
    pub fn identity() -> Self {
        Self {
            word: Vec::new(),
            length: 0,
        }
    }

    pub(crate) fn with_length(word: Vec<usize>, length: usize) -> Self {
        Self { word, length }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn inverse(&self) -> Self {
        Self {
            word: self.word.iter().rev().copied().collect(),
            length: self.length,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.word.len() == self.length
    }
}

/// A dominant regular coweight given by its values on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coweight {
    pub values: Vec<i64>,
}

impl Coweight {
    /// Sum of fundamental coweights: the height function.
    pub fn canonical(rank: usize) -> Self {
        Self {
            values: vec![1; rank],
        }
    }

    pub fn is_dominant_regular(&self) -> bool {
        self.values.iter().all(|&v| v > 0)
    }
}

/// Root datum of a reductive-free semisimple type, generic over the scalar.
#[derive(Clone, Debug)]
pub struct RootSystem<T> {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    root_norms: Vec<i64>,
    root_index: HashMap<Vec<i64>, usize>,
    cartan_inv: Matrix<T>,
    rho: Weight<T>,
    longest: WeylElement,
}

/// Builds a simple root system.
pub fn build_root_system<T: Scalar>(family: Family, rank: usize) -> Result<RootSystem<T>> {
    RootSystem::new(CartanType::simple(family, rank))
}

impl<T: Scalar> RootSystem<T> {
    pub fn new(ctype: CartanType) -> Result<Self> {
        if ctype.components.is_empty() {
            return Err(Error::UnknownFamily(String::new()));
        }
        for &(f, n) in &ctype.components {
            if !f.is_valid_rank(n) {
                return Err(Error::InvalidRootSystem {
                    family: f.letter().to_string(),
                    rank: n,
                });
            }
        }
        let n = ctype.rank();
        let mut gram = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for &(f, k) in &ctype.components {
            let b = f.gram(k);
            for i in 0..k {
                for j in 0..k {
                    gram[offset + i][offset + j] = b[i][j];
                }
            }
            offset += k;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let symmetrizer: Vec<i64> = (0..n).map(|i| gram[i][i] / 2).collect();
        let positive_roots = close_roots(&cartan);
        let expected: usize = ctype
            .components
            .iter()
            .map(|&(f, k)| f.positive_root_count(k))
            .sum();
        assert_eq!(positive_roots.len(), expected, "root closure count");
        let root_norms = positive_roots
            .iter()
            .map(|r| quad(&gram, r))
            .collect();
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let cartan_inv =
            linalg::inverse(&linalg::from_int::<T>(&cartan)).expect("Cartan matrix invertible");
        let rho = Weight::from_ints(&vec![1; n]);
        let mut rs = Self {
            ctype,
            cartan,
            gram,
            symmetrizer,
            positive_roots,
            root_norms,
            root_index,
            cartan_inv,
            rho,
            longest: WeylElement::identity(),
        };
        let (_, u) = rs.dominant_element(&-&rs.rho);
        rs.longest = u.inverse();
        Ok(rs)
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ctype
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix `(alpha_i, alpha_j)` of the simple roots.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight<T> {
        &self.rho
    }

    pub fn zero(&self) -> Weight<T> {
        Weight::zero(self.rank())
    }

    pub fn weyl_order(&self) -> u64 {
        self.ctype
            .components
            .iter()
            .map(|&(f, k)| f.weyl_order(k))
            .product()
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.longest
    }

    fn check_rank(&self, w: &Weight<T>) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    /// Whether `r` (simple-root coordinates) is a root, positive or negative.
    pub fn is_root(&self, r: &[i64]) -> bool {
        if self.root_index.contains_key(r) {
            return true;
        }
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    pub fn is_positive_root(&self, r: &[i64]) -> bool {
        self.root_index.contains_key(r)
    }

    pub fn positive_root_index(&self, r: &[i64]) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    /// The simple root `alpha_i` as a weight.
    pub fn simple_root(&self, i: usize) -> Weight<T> {
        Weight::from_ints(&self.cartan.iter().map(|row| row[i]).collect::<Vec<_>>())
    }

    /// A root (or any root-lattice vector) as a weight.
    pub fn root_weight(&self, r: &[i64]) -> Weight<T> {
        let n = self.rank();
        let coords = (0..n)
            .map(|i| T::from_int((0..n).map(|j| self.cartan[i][j] * r[j]).sum()))
            .collect();
        Weight::new(coords)
    }

    /// Simple-root coordinates of a weight (generally rational).
    pub fn to_root_coords(&self, w: &Weight<T>) -> Vec<T> {
        linalg::mul_vec(&self.cartan_inv, &w.coords)
    }

    /// Integer simple-root coordinates, when `w` lies in the root lattice.
    pub fn to_root_ints(&self, w: &Weight<T>) -> Option<Vec<i64>> {
        self.to_root_coords(w)
            .iter()
            .map(|c| c.to_i64_exact())
            .collect()
    }

    /// The invariant form `(lambda, mu)`.
    pub fn inner(&self, a: &Weight<T>, b: &Weight<T>) -> T {
        let ra = self.to_root_coords(a);
        ra.into_iter()
            .zip(&b.coords)
            .zip(&self.symmetrizer)
            .fold(T::zero(), |acc, ((x, y), &d)| {
                acc + x * y.clone() * T::from_int(d)
            })
    }

    /// `(lambda, beta)` for `beta` in simple-root coordinates.
    fn inner_root(&self, w: &Weight<T>, r: &[i64]) -> T {
        let mut acc = T::zero();
        for ((&rj, &dj), aj) in r.iter().zip(&self.symmetrizer).zip(&w.coords) {
            if rj != 0 {
                acc += aj.clone() * T::from_int(rj * dj);
            }
        }
        acc
    }

    /// `<lambda, beta^vee>` for the positive root with index `idx`.
    pub fn pair_positive(&self, w: &Weight<T>, idx: usize) -> T {
        let r = &self.positive_roots[idx];
        self.inner_root(w, r) * T::from_int(2) / T::from_int(self.root_norms[idx])
    }

    /// `<lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)`.
    pub fn pair_coroot(&self, w: &Weight<T>, alpha: &[i64]) -> Result<T> {
        self.check_rank(w)?;
        if alpha.len() != self.rank() || !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_vec()));
        }
        let norm = quad(&self.gram, alpha);
        Ok(self.inner_root(w, alpha) * T::from_int(2) / T::from_int(norm))
    }

    /// Linear reflection `s_i`.
    pub fn reflect(&self, w: &Weight<T>, i: usize) -> Weight<T> {
        let a = w.coords[i].clone();
        if a.is_zero() {
            return w.clone();
        }
        let coords = w
            .coords
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone() - a.clone() * T::from_int(self.cartan[k][i]))
            .collect();
        Weight::new(coords)
    }

    /// Linear action of `w` on a weight.
    pub fn act(&self, w: &WeylElement, v: &Weight<T>) -> Weight<T> {
        w.word
            .iter()
            .rev()
            .fold(v.clone(), |acc, &i| self.reflect(&acc, i))
    }

    /// Dot action `w(nu + rho) - rho`.
    pub fn dot_act(&self, w: &WeylElement, v: &Weight<T>) -> Weight<T> {
        &self.act(w, &(v + &self.rho)) - &self.rho
    }

    /// Action on a root-lattice vector in simple-root coordinates.
    pub fn act_root(&self, w: &WeylElement, r: &[i64]) -> Vec<i64> {
        let mut v = r.to_vec();
        for &i in w.word.iter().rev() {
            let p: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * v[j]).sum();
            v[i] -= p;
        }
        v
    }

    /// `#{alpha > 0 : w(alpha) < 0}`.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| Self::height(&self.act_root(w, r)) < 0)
            .count()
    }

    /// Wraps a word, computing its length by inversion counting.
    pub fn weyl_element(&self, word: Vec<usize>) -> WeylElement {
        let tmp = WeylElement::with_length(word, 0);
        let length = self.inversion_count(&tmp);
        WeylElement::with_length(tmp.word, length)
    }

    /// A reduced word for `w`, found by the descent algorithm on `w(rho)`.
    pub fn reduce(&self, w: &WeylElement) -> WeylElement {
        let (_, u) = self.dominant_element(&self.act(w, &self.rho));
        u.inverse()
    }

    /// Returns `(v+, u)` with `u v = v+` dominant; `u` is reduced.
    ///
    /// Always reflects at the smallest index with a negative coordinate.
    pub fn dominant_element(&self, v: &Weight<T>) -> (Weight<T>, WeylElement) {
        let mut cur = v.clone();
        let mut steps: Vec<usize> = Vec::new();
        while let Some(i) = cur.coords.iter().position(|c| c.is_negative()) {
            cur = self.reflect(&cur, i);
            steps.push(i);
        }
        let len = steps.len();
        steps.reverse();
        (cur, WeylElement::with_length(steps, len))
    }

    /// Whether `<v, alpha^vee> != 0` for every positive root.
    pub fn is_regular(&self, v: &Weight<T>) -> bool {
        (0..self.positive_roots.len()).all(|k| !self.pair_positive(v, k).is_zero())
    }

    /// `l(nu) = #{alpha > 0 : <nu + rho, alpha^vee> < 0}`.
    pub fn dot_length(&self, nu: &Weight<T>) -> usize {
        let v = nu + &self.rho;
        (0..self.positive_roots.len())
            .filter(|&k| self.pair_positive(&v, k).is_negative())
            .count()
    }

    /// Dominant representative of `nu` under the dot action together with
    /// the Weyl element `w` satisfying `w . nu = nu+`; `None` when singular.
    pub fn dot_dominant_element(&self, nu: &Weight<T>) -> Option<(Weight<T>, WeylElement)> {
        let v = nu + &self.rho;
        let (dom, w) = self.dominant_element(&v);
        if dom.coords.iter().any(|c| c.is_zero()) {
            return None;
        }
        debug_assert_eq!(w.length(), self.dot_length(nu));
        Some((&dom - &self.rho, w))
    }

    /// `(nu+, l(nu))`, or `None` when `nu + rho` is singular.
    pub fn dot_dominant(&self, nu: &Weight<T>) -> Option<(Weight<T>, usize)> {
        self.dot_dominant_element(nu)
            .map(|(p, w)| (p, w.length()))
    }

    /// The orbit `W . mu` in breadth-first order from `mu`.
    pub fn dot_orbit(&self, mu: &Weight<T>) -> Result<Vec<Weight<T>>> {
        self.check_rank(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominantIntegral(mu.to_string()));
        }
        let start = mu + &self.rho;
        if start.coords.iter().any(|c| c.is_zero()) {
            return Err(Error::Singular(mu.to_string()));
        }
        let orbit = self.linear_orbit(&start);
        Ok(orbit.into_iter().map(|v| &v - &self.rho).collect())
    }

    fn linear_orbit(&self, start: &Weight<T>) -> Vec<Weight<T>> {
        let mut seen: HashSet<Weight<T>> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let s = self.reflect(&v, i);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
            out.push(v);
        }
        out
    }

    /// Every element of `W` with a reduced word, in breadth-first order.
    pub fn weyl_elements(&self) -> Vec<WeylElement> {
        let mut seen: HashMap<Weight<T>, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(self.rho.clone(), ());
        queue.push_back((self.rho.clone(), Vec::<usize>::new()));
        while let Some((v, word)) = queue.pop_front() {
            for i in 0..self.rank() {
                // Left multiplication by s_i; grows length iff coordinate i positive.
                if v.coords[i].is_positive() {
                    let s = self.reflect(&v, i);
                    if seen.insert(s.clone(), ()).is_none() {
                        let mut w = Vec::with_capacity(word.len() + 1);
                        w.push(i);
                        w.extend_from_slice(&word);
                        queue.push_back((s, w));
                    }
                }
            }
            let len = word.len();
            out.push(WeylElement::with_length(word, len));
        }
        out
    }

    /// Linear action of the longest element.
    pub fn longest_act(&self, v: &Weight<T>) -> Weight<T> {
        self.act(&self.longest, v)
    }

    /// `dim L(mu)` by the Weyl dimension formula.
    pub fn weyl_dim(&self, mu: &Weight<T>) -> Result<BigUint> {
        self.check_rank(mu)?;
        let ints = mu
            .to_ints()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .ok_or_else(|| Error::NotDominantIntegral(mu.to_string()))?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for r in &self.positive_roots {
            let mut a = BigInt::zero();
            let mut b = BigInt::zero();
            for j in 0..r.len() {
                let rd = BigInt::from(r[j] * self.symmetrizer[j]);
                a += &rd * BigInt::from(ints[j] + 1);
                b += rd;
            }
            num *= a;
            den *= b;
        }
        let q = &num / &den;
        debug_assert!((&q * &den) == num);
        Ok(q.abs().to_biguint().expect("positive dimension"))
    }
}

fn quad(gram: &[Vec<i64>], r: &[i64]) -> i64 {
    let n = r.len();
    let mut s = 0;
    for i in 0..n {
        if r[i] == 0 {
            continue;
        }
        for j in 0..n {
            s += r[i] * r[j] * gram[i][j];
        }
    }
    s
}

/// Positive roots by closure along root strings, sorted by height and then
/// with the simple roots in index order.
fn close_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut set: HashSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if set.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up.clone());
                        all.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}
