//! Irreducibility over ℚ by Kronecker's method: a factor of degree `d` is
//! pinned down by its values at `d + 1` integer points, each of which must
//! divide the corresponding value of the polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::factorize;
use super::poly::QPoly;
use super::rational::Rational;

fn eval_int(c: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * &x + a)
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Lagrange interpolation through integer nodes.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (&xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = QPoly::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                basis = basis.mul(&QPoly::from_ints(&[-xj, 1]));
                denom *= Rational::from_integer(BigInt::from(xi - xj));
            }
        }
        let scale = Rational::from_integer(yi.clone()) / denom;
        acc = acc.add(&basis.scale(&scale));
    }
    acc
}

/// A nontrivial factor of `p` over ℚ, or `None` when `p` is irreducible.
/// Intended for degrees up to about 8.
pub fn find_factor(p: &QPoly) -> Option<QPoly> {
    let n = p.degree()?;
    if n <= 1 {
        return None;
    }
    let c = p.primitive_integer();
    // Sample points, fewest divisors first.
    let mut samples: Vec<(i64, BigInt, usize)> = Vec::new();
    for k in 0..(4 * n as i64 + 8) {
        let x = if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 };
        let v = eval_int(&c, x);
        if v.is_zero() {
            return Some(QPoly::from_ints(&[-x, 1]));
        }
        let nd = positive_divisors(&v).len();
        samples.push((x, v.abs(), nd));
    }
    samples.sort_by_key(|s| s.2);
    for d in 1..=n / 2 {
        let pts = &samples[..=d];
        let xs: Vec<i64> = pts.iter().map(|s| s.0).collect();
        let divs: Vec<Vec<BigInt>> = pts.iter().map(|s| positive_divisors(&s.1)).collect();
        // odometer over signed divisor choices; the first value stays positive
        let sizes: Vec<usize> = divs
            .iter()
            .enumerate()
            .map(|(i, d)| if i == 0 { d.len() } else { 2 * d.len() })
            .collect();
        let mut idx = vec![0usize; d + 1];
        loop {
            let ys: Vec<BigInt> = idx
                .iter()
                .enumerate()
                .map(|(i, &k)| {
                    let m = divs[i].len();
                    if k < m {
                        divs[i][k].clone()
                    } else {
                        -divs[i][k - m].clone()
                    }
                })
                .collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(d)
                && g.coeffs().iter().all(|q| q.denom().is_one())
                && c.last().unwrap().is_multiple_of(&g.leading().to_integer())
                && p.rem(&g).is_zero()
            {
                return Some(g);
            }
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < sizes[pos] {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    None
}

pub fn is_irreducible(p: &QPoly) -> bool {
    p.degree().is_some_and(|d| d >= 1) && find_factor(p).is_none()
}
