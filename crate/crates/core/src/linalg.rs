//! Small exact dense linear algebra over a [`Scalar`] field.

use crate::scalar::Scalar;

pub type Matrix<T> = Vec<Vec<T>>;

pub fn identity<T: Scalar>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn from_int<T: Scalar>(m: &[Vec<i64>]) -> Matrix<T> {
    m.iter()
        .map(|row| row.iter().map(|&x| T::from_int(x)).collect())
        .collect()
}

pub fn mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![T::zero(); m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += a[i][l].clone() * brow[j].clone();
            }
        }
    }
    out
}

pub fn mul_vec<T: Scalar>(a: &Matrix<T>, v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        })
        .collect()
}

/// Solves `a x = b` for square `a`; `None` when singular.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    let mut m: Matrix<T> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= p.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let delta = f.clone() * m[col][c].clone();
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let id = identity::<T>(n);
    let cols: Option<Vec<Vec<T>>> = (0..n)
        .map(|j| {
            let e: Vec<T> = id.iter().map(|row| row[j].clone()).collect();
            solve(a, &e)
        })
        .collect();
    let cols = cols?;
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Expresses `target` in the basis `basis` (vectors of equal length);
/// `None` when `target` is outside their span or the basis is dependent.
pub fn coordinates_in<T: Scalar>(basis: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
    let k = basis.len();
    let n = target.len();
    // Reduce the n x (k+1) augmented system.
    let mut m: Matrix<T> = (0..n)
        .map(|i| {
            let mut row: Vec<T> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let Some(p) = (pivot_row..n).find(|&r| !m[r][col].is_zero()) else {
            return None;
        };
        m.swap(pivot_row, p);
        let pv = m[pivot_row][col].clone();
        for x in m[pivot_row].iter_mut() {
            *x /= pv.clone();
        }
        for r in 0..n {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let delta = f.clone() * m[pivot_row][c].clone();
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| m[r][k].clone()).collect())
}

pub fn rank<T: Scalar>(vectors: &[Vec<T>]) -> usize {
    let mut rows: Matrix<T> = vectors.to_vec();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone() / rows[r][col].clone();
                for c in col..ncols {
                    let delta = f.clone() * rows[r][c].clone();
                    rows[i][c] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// Fast coordinates in a fixed independent basis.
///
/// Picks rows where the basis restricts to an invertible square block, solves
/// there, then verifies the full vector so out-of-span inputs are rejected.
#[derive(Clone, Debug)]
pub struct BasisSolver<T> {
    basis: Vec<Vec<T>>,
    rows: Vec<usize>,
    inv: Matrix<T>,
}

impl<T: Scalar> BasisSolver<T> {
    /// `None` when the basis is dependent.
    pub fn new(basis: Vec<Vec<T>>) -> Option<Self> {
        let k = basis.len();
        let n = basis.first().map_or(0, |b| b.len());
        let mut rows = Vec::with_capacity(k);
        let mut picked: Vec<Vec<T>> = Vec::new();
        for i in 0..n {
            let row: Vec<T> = basis.iter().map(|b| b[i].clone()).collect();
            let mut trial = picked.clone();
            trial.push(row.clone());
            if rank(&trial) == trial.len() {
                picked = trial;
                rows.push(i);
                if rows.len() == k {
                    break;
                }
            }
        }
        if rows.len() != k {
            return None;
        }
        let inv = inverse(&picked)?;
        Some(Self { basis, rows, inv })
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn coords(&self, v: &[T]) -> Option<Vec<T>> {
        let sub: Vec<T> = self.rows.iter().map(|&i| v[i].clone()).collect();
        let c = mul_vec(&self.inv, &sub);
        for (i, vi) in v.iter().enumerate() {
            let mut acc = T::zero();
            for (cj, bj) in c.iter().zip(&self.basis) {
                acc += cj.clone() * bj[i].clone();
            }
            if acc != *vi {
                return None;
            }
        }
        Some(c)
    }
}
