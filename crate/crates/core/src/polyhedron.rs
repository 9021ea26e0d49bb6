//! Integer points of a rational polyhedron `{k in Z^r : A k <= b}`.
//!
//! Bounds come from Fourier-Motzkin projection onto the leading variable;
//! each admissible value is substituted and the rest is enumerated
//! recursively. Rows are kept with integer coefficients, so a strict
//! inequality `a.k < b` becomes `a.k <= b - 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::scalar::Scalar;

/// One row `coeffs . k <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<i128>,
    pub rhs: i128,
}

impl Constraint {
    fn normalized(mut self) -> Self {
        let g = self
            .coeffs
            .iter()
            .fold(0i128, |g, &c| g.gcd(&c));
        if g > 1 {
            for c in self.coeffs.iter_mut() {
                *c /= g;
            }
            self.rhs = Integer::div_floor(&self.rhs, &g);
        }
        self
    }

    fn holds_at_origin(&self) -> bool {
        self.rhs >= 0
    }
}

/// The feasible set has no bound in some coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unbounded;

#[derive(Clone, Debug, Default)]
pub struct System {
    nvars: usize,
    rows: Vec<Constraint>,
}

fn integer_row<T: Scalar>(a: &[T], b: &T) -> (Vec<i128>, BigInt, BigInt) {
    let mut l = BigInt::from(1);
    for x in a.iter().chain(std::iter::once(b)) {
        let (_, d) = x.parts();
        l = l.lcm(&d);
    }
    let scale = |x: &T| {
        let (n, d) = x.parts();
        n * (&l / d)
    };
    let coeffs = a
        .iter()
        .map(|x| scale(x).to_i128().expect("coefficient fits i128"))
        .collect();
    (coeffs, scale(b), l)
}

impl System {
    pub fn new(nvars: usize) -> Self {
        Self {
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    fn push(&mut self, coeffs: Vec<i128>, rhs: BigInt) {
        let rhs = rhs.to_i128().expect("bound fits i128");
        self.rows.push(Constraint { coeffs, rhs }.normalized());
    }

    /// `a . k <= b`.
    pub fn add_le<T: Scalar>(&mut self, a: &[T], b: &T) {
        let (c, r, _) = integer_row(a, b);
        self.push(c, r);
    }

    /// `a . k < b`.
    pub fn add_lt<T: Scalar>(&mut self, a: &[T], b: &T) {
        let (c, r, _) = integer_row(a, b);
        self.push(c, r - 1);
    }

    /// `a . k >= b`.
    pub fn add_ge<T: Scalar>(&mut self, a: &[T], b: &T) {
        let neg: Vec<T> = a.iter().map(|x| -x.clone()).collect();
        self.add_le(&neg, &-b.clone());
    }

    /// `a . k > b`.
    pub fn add_gt<T: Scalar>(&mut self, a: &[T], b: &T) {
        let neg: Vec<T> = a.iter().map(|x| -x.clone()).collect();
        self.add_lt(&neg, &-b.clone());
    }

    /// Variable bound `lo <= k_i` or `k_i <= hi` in integer form.
    pub fn bound_var(&mut self, i: usize, lo: Option<i64>, hi: Option<i64>) {
        if let Some(lo) = lo {
            let mut c = vec![0i128; self.nvars];
            c[i] = -1;
            self.rows.push(Constraint { coeffs: c, rhs: -(lo as i128) });
        }
        if let Some(hi) = hi {
            let mut c = vec![0i128; self.nvars];
            c[i] = 1;
            self.rows.push(Constraint { coeffs: c, rhs: hi as i128 });
        }
    }

    /// All integer points in lexicographic order.
    pub fn lattice_points(&self) -> Result<Vec<Vec<i64>>, Unbounded> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.nvars);
        enumerate(&self.rows, self.nvars, &mut prefix, &mut out)?;
        Ok(out)
    }
}

/// Eliminates variable `j` from `rows`.
fn eliminate(rows: &[Constraint], j: usize) -> Vec<Constraint> {
    let mut out: Vec<Constraint> = Vec::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for r in rows {
        match r.coeffs[j].signum() {
            1 => pos.push(r),
            -1 => neg.push(r),
            _ => out.push(r.clone()),
        }
    }
    for p in &pos {
        for q in &neg {
            let (a, b) = (p.coeffs[j], -q.coeffs[j]);
            let coeffs = p
                .coeffs
                .iter()
                .zip(&q.coeffs)
                .map(|(&x, &y)| b * x + a * y)
                .collect();
            out.push(
                Constraint {
                    coeffs,
                    rhs: b * p.rhs + a * q.rhs,
                }
                .normalized(),
            );
        }
    }
    out.sort_by(|x, y| x.coeffs.cmp(&y.coeffs).then(x.rhs.cmp(&y.rhs)));
    // Keep only the tightest row per direction.
    out.dedup_by(|x, y| x.coeffs == y.coeffs);
    out
}

fn enumerate(
    rows: &[Constraint],
    nvars: usize,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) -> Result<(), Unbounded> {
    let depth = prefix.len();
    if depth == nvars {
        if rows.iter().all(|r| r.holds_at_origin()) {
            out.push(prefix.clone());
        }
        return Ok(());
    }
    // Project onto the variable at `depth`.
    let mut proj: Vec<Constraint> = rows.to_vec();
    for j in depth + 1..nvars {
        proj = eliminate(&proj, j);
    }
    let mut lo: Option<i128> = None;
    let mut hi: Option<i128> = None;
    for r in &proj {
        let c = r.coeffs[depth];
        if c.is_zero() {
            if !r.holds_at_origin() {
                return Ok(());
            }
        } else if c > 0 {
            let v = Integer::div_floor(&r.rhs, &c);
            hi = Some(hi.map_or(v, |h| h.min(v)));
        } else {
            let v = Integer::div_ceil(&(-r.rhs), &(-c));
            lo = Some(lo.map_or(v, |l| l.max(v)));
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(Unbounded);
    };
    for v in lo..=hi {
        let sub: Vec<Constraint> = rows
            .iter()
            .map(|r| {
                let mut c = r.coeffs.clone();
                let rhs = r.rhs - c[depth] * v;
                c[depth] = 0;
                Constraint { coeffs: c, rhs }
            })
            .collect();
        prefix.push(v as i64);
        enumerate(&sub, nvars, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}
