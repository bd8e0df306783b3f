//! Diagonal ternary quadratic forms over ℚ: Legendre normal form, local
//! solvability via Hilbert symbols, point finding by Lagrange descent, and
//! the norm equation x² − d·y² = c built on top of them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::arith::{
    hilbert_symbol_prime, hilbert_symbol_real, integer_sqrt_exact, prime_divisors,
    rational_sqrt_exact, squarefree_decompose, sqrt_mod_squarefree,
};
use super::rational::Rational;

/// A place of ℚ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Prime(BigInt),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "real"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// `a·x² + b·y² + c·z²` after reduction, with the diagonal change of
/// variables `X_i = scale_i · Z_i` back to the original coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedConic {
    pub form: [BigInt; 3],
    pub scale: [Rational; 3],
}

/// True when the coefficients are nonzero, squarefree and pairwise coprime.
pub fn is_legendre_normal(form: &[BigInt; 3]) -> bool {
    form.iter().all(|x| super::arith::is_squarefree(x))
        && form[0].gcd(&form[1]).is_one()
        && form[0].gcd(&form[2]).is_one()
        && form[1].gcd(&form[2]).is_one()
}

/// Reduces a nondegenerate diagonal form with rational coefficients to
/// Legendre normal form.
pub fn legendre_normal_form(coeffs: &[Rational; 3]) -> NormalizedConic {
    assert!(coeffs.iter().all(|c| !c.is_zero()), "degenerate conic");
    let mut form: [BigInt; 3] = Default::default();
    let mut scale: [Rational; 3] = [Rational::one(), Rational::one(), Rational::one()];
    for i in 0..3 {
        // q x² with q = n/d: substitute x = d·x'
        let (n, d) = (coeffs[i].numer().clone(), coeffs[i].denom().clone());
        form[i] = n * &d;
        scale[i] = Rational::from_integer(d);
    }
    loop {
        for i in 0..3 {
            let (core, s) = squarefree_decompose(&form[i]);
            form[i] = core;
            scale[i] = &scale[i] / Rational::from_integer(s);
        }
        let g = form[0].gcd(&form[1]).gcd(&form[2]);
        if !g.is_one() {
            for f in form.iter_mut() {
                *f = &*f / &g;
            }
        }
        let mut changed = false;
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let g = form[i].gcd(&form[j]);
            if !g.is_one() {
                form[i] = &form[i] / &g;
                form[j] = &form[j] / &g;
                form[k] = &form[k] * &g;
                scale[k] = &scale[k] * Rational::from_integer(g);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    NormalizedConic { form, scale }
}

/// Places where `a x² + b y² + c z² = 0` has no nontrivial local solution:
/// those with Hilbert symbol `(−ac, −bc)_v = −1`. Real place first, then
/// primes ascending. Empty iff the conic has a rational point.
pub fn failing_places(form: &[BigInt; 3]) -> Vec<Place> {
    let [a, b, c] = form;
    let u = -(a * c);
    let v = -(b * c);
    let mut out = Vec::new();
    if hilbert_symbol_real(&u, &v) == -1 {
        out.push(Place::Real);
    }
    let mut primes = prime_divisors(&(a * b * c * BigInt::from(2)));
    primes.sort();
    primes.dedup();
    for p in primes {
        if hilbert_symbol_prime(&u, &v, &p) == -1 {
            out.push(Place::Prime(p));
        }
    }
    out
}

pub fn is_on_conic(form: &[BigInt; 3], pt: &[BigInt; 3]) -> bool {
    let s: BigInt = form.iter().zip(pt).map(|(c, x)| c * x * x).sum();
    s.is_zero() && pt.iter().any(|x| !x.is_zero())
}

fn primitive(pt: [BigInt; 3]) -> [BigInt; 3] {
    let g = pt[0].gcd(&pt[1]).gcd(&pt[2]);
    if g.is_zero() || g.is_one() {
        return pt;
    }
    pt.map(|x| x / &g)
}

/// Solves x² = a·y² + b·z² for squarefree nonzero `a`, `b` by Lagrange's
/// descent. `None` when a local obstruction is met.
fn lagrange(a: &BigInt, b: &BigInt, depth: usize) -> Option<[BigInt; 3]> {
    if depth > 4096 {
        return None;
    }
    let one = BigInt::one();
    if a.is_negative() && b.is_negative() {
        return None;
    }
    if *a == one {
        return Some([one.clone(), one, BigInt::zero()]);
    }
    if *b == one {
        return Some([one.clone(), BigInt::zero(), one]);
    }
    if a.abs() > b.abs() {
        let [x, y, z] = lagrange(b, a, depth + 1)?;
        return Some([x, z, y]);
    }
    let bb = b.abs();
    let t = sqrt_mod_squarefree(a, &bb)?;
    let k = (&t * &t - a) / b;
    if k.is_zero() {
        // a = t², impossible for squarefree a ≠ 1
        return None;
    }
    let (kc, s) = squarefree_decompose(&k);
    let [x1, y1, z1] = lagrange(a, &kc, depth + 1)?;
    let x = &t * &x1 + a * &y1;
    let y = &x1 + &t * &y1;
    let z = &kc * &s * &z1;
    Some(primitive([x, y, z]))
}

/// A point on a conic in Legendre normal form found by Lagrange descent.
pub fn descent_point(form: &[BigInt; 3]) -> Option<[BigInt; 3]> {
    if !failing_places(form).is_empty() {
        return None;
    }
    let [a, b, c] = form;
    // (a x)² = (−ab) y² + (−ac) z²
    let big_a = -(a * b);
    let big_b = -(a * c);
    let (ca, sa) = squarefree_decompose(&big_a);
    let (cb, sb) = squarefree_decompose(&big_b);
    let [x1, y1, z1] = lagrange(&ca, &cb, 0)?;
    // X = x1, Y = y1 / sa, Z = z1 / sb, and x = X / a.
    let pt = [
        &x1 * &sa * &sb,
        &y1 * &sb * a,
        &z1 * &sa * a,
    ];
    let pt = primitive(pt);
    debug_assert!(is_on_conic(form, &pt), "descent produced an off-conic point");
    is_on_conic(form, &pt).then_some(pt)
}

/// Holzer box: a solvable normal-form conic has a point with
/// |x| ≤ √|bc|, |y| ≤ √|ac|, |z| ≤ √|ab|.
pub fn holzer_bounds(form: &[BigInt; 3]) -> [BigInt; 3] {
    let [a, b, c] = form;
    [(b * c).abs().sqrt(), (a * c).abs().sqrt(), (a * b).abs().sqrt()]
}

/// Exhaustive search with |x|, |y| ≤ the given bounds, solving for z.
pub fn search_point(form: &[BigInt; 3], bx: u64, by: u64) -> Option<[BigInt; 3]> {
    let [a, b, c] = form;
    for h in 0..=bx.max(by) {
        for x in (0..=h.min(bx)).rev() {
            let yb = h.min(by) as i64;
            for y in (0..=2 * yb).map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }) {
                if (x as i64).unsigned_abs().max(y.unsigned_abs()) != h {
                    continue;
                }
                let (xb, yb) = (BigInt::from(x), BigInt::from(y));
                let num = -(a * &xb * &xb + b * &yb * &yb);
                if xb.is_zero() && yb.is_zero() {
                    continue;
                }
                if !num.is_multiple_of(c) {
                    continue;
                }
                if let Some(z) = integer_sqrt_exact(&(num / c)) {
                    return Some(primitive([xb, yb, z]));
                }
            }
        }
    }
    None
}

/// How [`find_point`] should look for a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PointSearch {
    /// Cap on the brute-force box; `None` means the Holzer box, used only
    /// when it is small.
    pub height_bound: Option<u64>,
}

const DEFAULT_BOX_LIMIT: u64 = 400;

/// A rational point on a normal-form conic, or `None` when some place
/// obstructs. Small points are found by bounded search, otherwise by
/// Lagrange descent.
pub fn find_point(form: &[BigInt; 3], search: PointSearch) -> Option<[BigInt; 3]> {
    if !failing_places(form).is_empty() {
        return None;
    }
    let hb = holzer_bounds(form);
    let (bx, by) = match search.height_bound {
        Some(cap) => (cap, cap),
        None => (
            hb[0].to_u64().unwrap_or(u64::MAX).min(DEFAULT_BOX_LIMIT),
            hb[1].to_u64().unwrap_or(u64::MAX).min(DEFAULT_BOX_LIMIT),
        ),
    };
    search_point(form, bx, by).or_else(|| descent_point(form))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormError {
    #[error("d = {0} is a rational square; the norm form factors")]
    SquareDiscriminant(String),
    #[error("d and c must be nonzero")]
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NormSolution {
    Solution { x: Rational, y: Rational },
    Unsolvable { place: Place },
}

/// Solves x² − d·y² = c over ℚ, or names a place where it is locally
/// unsolvable.
pub fn norm_equation(d: &Rational, c: &Rational) -> Result<NormSolution, NormError> {
    if d.is_zero() || c.is_zero() {
        return Err(NormError::Zero);
    }
    if rational_sqrt_exact(d).is_some() {
        return Err(NormError::SquareDiscriminant(d.to_string()));
    }
    if let Some(r) = rational_sqrt_exact(c) {
        return Ok(NormSolution::Solution { x: r, y: Rational::zero() });
    }
    let nc = legendre_normal_form(&[Rational::one(), -d.clone(), -c.clone()]);
    if let Some(place) = failing_places(&nc.form).into_iter().next() {
        return Ok(NormSolution::Unsolvable { place });
    }
    let pt = find_point(&nc.form, PointSearch::default()).expect("locally solvable conic");
    let orig: Vec<Rational> = pt
        .iter()
        .zip(&nc.scale)
        .map(|(z, s)| Rational::from_integer(z.clone()) * s)
        .collect();
    // z = 0 would force x² = d y² with d a nonsquare.
    assert!(!orig[2].is_zero());
    Ok(NormSolution::Solution {
        x: &orig[0] / &orig[2],
        y: &orig[1] / &orig[2],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rational::{rat, ratio};

    fn f(a: i64, b: i64, c: i64) -> [BigInt; 3] {
        [BigInt::from(a), BigInt::from(b), BigInt::from(c)]
    }

    #[test]
    fn normal_form_reduction() {
        let nc = legendre_normal_form(&[rat(12), rat(-18), ratio(1, 2)]);
        assert!(is_legendre_normal(&nc.form));
        // check the substitution maps solutions of the normal form to the original
        if let Some(pt) = find_point(&nc.form, PointSearch::default()) {
            let orig: Vec<Rational> = pt
                .iter()
                .zip(&nc.scale)
                .map(|(z, s)| Rational::from_integer(z.clone()) * s)
                .collect();
            let v = rat(12) * &orig[0] * &orig[0] - rat(18) * &orig[1] * &orig[1]
                + ratio(1, 2) * &orig[2] * &orig[2];
            assert!(v.is_zero());
        }
    }

    #[test]
    fn pythagorean_and_sum_of_three_squares() {
        assert!(failing_places(&f(1, 1, -1)).is_empty());
        let p = find_point(&f(1, 1, -1), PointSearch::default()).unwrap();
        assert!(is_on_conic(&f(1, 1, -1), &p));
        assert_eq!(failing_places(&f(1, 1, 1)), vec![Place::Real, Place::Prime(BigInt::from(2))]);
    }

    #[test]
    fn descent_agrees_with_search() {
        for a in [-7i64, -5, -3, -2, -1, 1, 2, 3, 5, 7, 11, 13] {
            for b in [-13i64, -11, -7, -3, -2, -1, 1, 2, 5, 6, 10] {
                for c in [-15i64, -6, -1, 1, 3, 14, 15, 17] {
                    let form = f(a, b, c);
                    if !is_legendre_normal(&form) {
                        continue;
                    }
                    let solvable = failing_places(&form).is_empty();
                    let d = descent_point(&form);
                    assert_eq!(d.is_some(), solvable, "{form:?}");
                    if let Some(p) = d {
                        assert!(is_on_conic(&form, &p));
                    }
                    let hb = holzer_bounds(&form);
                    let s = search_point(&form, hb[0].to_u64().unwrap(), hb[1].to_u64().unwrap());
                    assert_eq!(s.is_some(), solvable, "Holzer search disagrees on {form:?}");
                }
            }
        }
    }

    #[test]
    fn norm_equation_examples() {
        assert_eq!(
            norm_equation(&rat(2), &rat(1)).unwrap(),
            NormSolution::Solution { x: rat(1), y: rat(0) }
        );
        match norm_equation(&rat(2), &rat(7)).unwrap() {
            NormSolution::Solution { x, y } => assert_eq!(&x * &x - rat(2) * &y * &y, rat(7)),
            u => panic!("{u:?}"),
        }
        assert_eq!(
            norm_equation(&rat(-1), &rat(-1)).unwrap(),
            NormSolution::Unsolvable { place: Place::Real }
        );
        assert!(matches!(
            norm_equation(&rat(4), &rat(3)),
            Err(NormError::SquareDiscriminant(_))
        ));
        assert!(matches!(
            norm_equation(&rat(3), &rat(-1)).unwrap(),
            NormSolution::Unsolvable { .. }
        ));
        match norm_equation(&ratio(5, 3), &ratio(-7, 12)).unwrap() {
            NormSolution::Solution { x, y } => {
                assert_eq!(&x * &x - ratio(5, 3) * &y * &y, ratio(-7, 12))
            }
            NormSolution::Unsolvable { .. } => {}
        }
    }
}
