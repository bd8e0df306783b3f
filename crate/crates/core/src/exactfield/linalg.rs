//! Exact Gaussian elimination over any field implementing [`Scalar`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;

/// Minimal field interface for the elimination routines. `Ctx` carries what
/// is needed to produce constants (nothing for ℚ, the owning field for
/// number-field elements).
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    type Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn is_nil(&self) -> bool;
}

impl Scalar for Rational {
    type Ctx = ();
    fn zero_in(_: &()) -> Self {
        Rational::zero()
    }
    fn one_in(_: &()) -> Self {
        Rational::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Solution set of `M·x = v`: an optional particular solution (absent when
/// the system is inconsistent) and a basis of the kernel of `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSolution<T> {
    pub particular: Option<Vec<T>>,
    pub kernel: Vec<Vec<T>>,
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<T: Scalar>(rows: &mut [Vec<T>], ncols: usize, ctx: &T::Ctx) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_nil()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one_in(ctx) / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_nil() {
                let f = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let sub = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis of `m` (each row of `m` has `ncols` entries).
pub fn kernel<T: Scalar>(m: &[Vec<T>], ncols: usize, ctx: &T::Ctx) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = m.to_vec();
    let pivots = rref(&mut rows, ncols, ctx);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero_in(ctx); ncols];
            v[f] = T::one_in(ctx);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m·x = v` exactly.
pub fn linear_solve<T: Scalar>(
    m: &[Vec<T>],
    v: &[T],
    ncols: usize,
    ctx: &T::Ctx,
) -> LinearSolution<T> {
    assert_eq!(m.len(), v.len(), "row count mismatch");
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .zip(v)
        .map(|(row, b)| {
            assert_eq!(row.len(), ncols, "column count mismatch");
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1, ctx);
    let kernel = kernel(m, ncols, ctx);
    if pivots.last() == Some(&ncols) {
        return LinearSolution { particular: None, kernel };
    }
    let mut x = vec![T::zero_in(ctx); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    LinearSolution { particular: Some(x), kernel }
}

pub fn mat_vec<T: Scalar>(m: &[Vec<T>], x: &[T], ctx: &T::Ctx) -> Vec<T> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(T::zero_in(ctx), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>], ctx: &T::Ctx) -> Vec<Vec<T>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(T::zero_in(ctx), |acc, k| {
                        acc + row[k].clone() * b[k][j].clone()
                    })
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<T: Scalar>(m: &[Vec<T>], ctx: &T::Ctx) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one_in(ctx) } else { T::zero_in(ctx) }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, n, ctx);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant<T: Scalar>(m: &[Vec<T>], ctx: &T::Ctx) -> T {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = T::one_in(ctx);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_nil()) else {
            return T::zero_in(ctx);
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det = det * piv.clone();
        for i in c + 1..n {
            if a[i][c].is_nil() {
                continue;
            }
            let f = a[i][c].clone() / piv.clone();
            for j in c..n {
                let sub = f.clone() * a[c][j].clone();
                a[i][j] = a[i][j].clone() - sub;
            }
        }
    }
    det
}
