//! Integer number theory at desk scale: trial-division factoring,
//! squarefree parts, square roots modulo squarefree integers and Hilbert
//! symbols.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Factorization of `|n|` into primes, ascending. `n` must be nonzero.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "factorize(0)");
    let mut n = n.abs();
    let mut out = Vec::new();
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u32, 3] {
        let p = BigInt::from(p);
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        push(p, e, &mut out);
    }
    // 6k ± 1 wheel
    let mut d = BigInt::from(5);
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    let mut step_two = true;
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e, &mut out);
        d += if step_two { &two } else { &four };
        step_two = !step_two;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Writes `n = s²·c` with `c` squarefree (carrying the sign of `n`) and
/// `s > 0`. Returns `(c, s)`.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut s = BigInt::one();
    for (p, e) in factorize(n) {
        if e % 2 == 1 {
            core *= &p;
        }
        for _ in 0..e / 2 {
            s *= &p;
        }
    }
    (core, s)
}

pub fn squarefree_part(n: &BigInt) -> BigInt {
    squarefree_decompose(n).0
}

/// Squarefree integer in the square class of a nonzero rational.
pub fn rational_squarefree_part(q: &Rational) -> BigInt {
    squarefree_part(&(q.numer() * q.denom()))
}

pub fn is_squarefree(n: &BigInt) -> bool {
    !n.is_zero() && factorize(n).iter().all(|(_, e)| *e == 1)
}

pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn rational_sqrt_exact(q: &Rational) -> Option<Rational> {
    let n = integer_sqrt_exact(q.numer())?;
    let d = integer_sqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// Legendre symbol (a/p) for an odd prime p: 1, -1, or 0.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

/// A square root of `a` modulo the prime `p`, if one exists.
pub fn sqrt_mod_prime(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if *p == BigInt::from(2) {
        return Some(a);
    }
    if legendre(&a, p) != 1 {
        return None;
    }
    if let Some(small) = p.to_u64().filter(|&q| q < 2000) {
        let a = a.to_u64().unwrap();
        return (1..small).find(|x| x * x % small == a).map(BigInt::from);
    }
    // Tonelli–Shanks
    let one = BigInt::one();
    let mut q = p - 1u32;
    let mut s = 0u32;
    while q.is_even() {
        q >>= 1;
        s += 1;
    }
    let mut z = BigInt::from(2);
    while legendre(&z, p) != -1 {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1u32) / 2u32), p);
    while !t.is_one() {
        let mut i = 0u32;
        let mut tt = t.clone();
        while !tt.is_one() {
            tt = &tt * &tt % p;
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = c.modpow(&(&one << (m - i - 1)), p);
        m = i;
        c = &b * &b % p;
        t = &t * &c % p;
        r = &r * &b % p;
    }
    Some(r)
}

/// A square root of `a` modulo a squarefree `n > 0`, via CRT over the prime
/// factors, returned with `|t| <= n/2`.
pub fn sqrt_mod_squarefree(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    assert!(n.is_positive());
    if n.is_one() {
        return Some(BigInt::zero());
    }
    let mut t = BigInt::zero();
    let mut modulus = BigInt::one();
    for (p, e) in factorize(n) {
        debug_assert_eq!(e, 1);
        let r = sqrt_mod_prime(a, &p)?;
        // combine t mod modulus with r mod p
        let inv = mod_inverse(&modulus, &p).expect("coprime moduli");
        let k = ((&r - &t) * inv).mod_floor(&p);
        t += &modulus * k;
        modulus *= &p;
    }
    let t = t.mod_floor(n);
    if &t * 2u32 > *n {
        Some(t - n)
    } else {
        Some(t)
    }
}

pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Hilbert symbol `(a, b)_p` for nonzero integers at a prime `p`.
pub fn hilbert_symbol_prime(a: &BigInt, b: &BigInt, p: &BigInt) -> i32 {
    assert!(!a.is_zero() && !b.is_zero());
    let alpha = valuation(a, p);
    let beta = valuation(b, p);
    let mut u = a.clone();
    let mut v = b.clone();
    for _ in 0..alpha {
        u /= p;
    }
    for _ in 0..beta {
        v /= p;
    }
    let two = BigInt::from(2);
    if *p == two {
        let eps = |x: &BigInt| -> u32 { ((x - 1u32) / 2u32).mod_floor(&two).to_u32().unwrap() };
        let omega = |x: &BigInt| -> u32 {
            ((x * x - 1u32) / 8u32).mod_floor(&two).to_u32().unwrap()
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let eps_p = ((p - 1u32) / 2u32).mod_floor(&two).to_u32().unwrap();
        let mut s = if (alpha * beta * eps_p) % 2 == 0 { 1 } else { -1 };
        if beta % 2 == 1 {
            s *= legendre(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre(&v, p);
        }
        s
    }
}

pub fn hilbert_symbol_real(a: &BigInt, b: &BigInt) -> i32 {
    if a.is_negative() && b.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factor_and_squarefree() {
        assert_eq!(
            factorize(&b(360)),
            vec![(b(2), 3), (b(3), 2), (b(5), 1)]
        );
        assert_eq!(squarefree_decompose(&b(-72)), (b(-2), b(6)));
        assert_eq!(squarefree_decompose(&b(1)), (b(1), b(1)));
        assert!(is_squarefree(&b(-30)));
        assert!(!is_squarefree(&b(12)));
    }

    #[test]
    fn sqrt_mod() {
        for p in [3i64, 5, 7, 11, 13, 17, 10007] {
            let p = b(p);
            for a in 0..30i64 {
                let a = b(a);
                match sqrt_mod_prime(&a, &p) {
                    Some(r) => assert_eq!((&r * &r - &a).mod_floor(&p), BigInt::zero()),
                    None => assert_eq!(legendre(&a, &p), -1),
                }
            }
        }
        let t = sqrt_mod_squarefree(&b(-1), &b(65)).unwrap();
        assert_eq!((&t * &t + BigInt::one()).mod_floor(&b(65)), BigInt::zero());
        assert!(t.abs() * 2 <= b(65));
        assert!(sqrt_mod_squarefree(&b(3), &b(35)).is_none());
    }

    #[test]
    fn hilbert_symbols_known_values() {
        // (-1,-1) is ramified exactly at 2 and the real place.
        assert_eq!(hilbert_symbol_prime(&b(-1), &b(-1), &b(2)), -1);
        assert_eq!(hilbert_symbol_real(&b(-1), &b(-1)), -1);
        assert_eq!(hilbert_symbol_prime(&b(-1), &b(-1), &b(3)), 1);
        // (2, 3) ramified at 2 and 3
        assert_eq!(hilbert_symbol_prime(&b(2), &b(3), &b(3)), -1);
        assert_eq!(hilbert_symbol_prime(&b(2), &b(3), &b(2)), -1);
        // (-1, 3) ramified at 2 and 3 (x^2 + y^2 = 3 unsolvable)
        assert_eq!(hilbert_symbol_prime(&b(-1), &b(3), &b(3)), -1);
        assert_eq!(hilbert_symbol_prime(&b(-1), &b(5), &b(5)), 1);
    }

    #[test]
    fn hilbert_product_formula() {
        for a in -12i64..=12 {
            for c in -12i64..=12 {
                if a == 0 || c == 0 {
                    continue;
                }
                let (a, c) = (b(a), b(c));
                let mut prod = hilbert_symbol_real(&a, &c);
                let mut places = prime_divisors(&(&a * &c * 2));
                places.dedup();
                for p in places {
                    prod *= hilbert_symbol_prime(&a, &c, &p);
                }
                assert_eq!(prod, 1, "product formula fails for ({a},{c})");
            }
        }
    }
}
