//! Floating-point helpers used only to *propose* candidates (complex roots,
//! Vandermonde solves). Every candidate is verified exactly before use.

use num_complex::Complex64;

use super::poly::QPoly;
use super::rational::to_f64;

/// All complex roots of a squarefree polynomial (Durand–Kerner followed by
/// Newton polishing).
pub fn complex_roots(p: &QPoly) -> Vec<Complex64> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let lead = to_f64(&p.leading());
    let c: Vec<f64> = p.coeffs().iter().map(|x| to_f64(x) / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    };
    let deriv = |z: Complex64| -> Complex64 {
        c.iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, &a)| acc * z + a * k as f64)
    };
    if n == 1 {
        return vec![Complex64::new(-c[0], 0.0)];
    }
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * (bound * 0.5).max(0.5))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() < 1e-300 {
                denom = Complex64::new(1e-12, 1e-12);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..5 {
            let d = deriv(*r);
            if d.norm() < 1e-300 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    z
}

/// Inverse of a small complex matrix by Gauss–Jordan with partial pivoting.
pub fn complex_inverse(m: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Complex64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| {
                if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| a[x][c].norm().total_cmp(&a[y][c].norm()))?;
        if a[p][c].norm() < 1e-14 {
            return None;
        }
        a.swap(p, c);
        let inv = Complex64::new(1.0, 0.0) / a[c][c];
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for i in 0..n {
            if i != c {
                let f = a[i][c];
                if f.norm() == 0.0 {
                    continue;
                }
                for j in 0..2 * n {
                    let sub = f * a[c][j];
                    a[i][j] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
