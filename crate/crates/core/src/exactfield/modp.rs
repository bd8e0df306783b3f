//! Reduction of a number field modulo a prime q at which the minimal
//! polynomial has a root r, i.e. the ring map θ ↦ r on q-integral elements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::arith::is_prime_u64;
use super::field::{FieldElement, NumberField};
use super::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reduction {
    pub q: u64,
    pub root: u64,
}

fn mulm(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub fn inv_mod(a: u64, q: u64) -> Option<u64> {
    let g = BigInt::from(a).extended_gcd(&BigInt::from(q));
    if g.gcd != BigInt::from(1) {
        return None;
    }
    g.x.mod_floor(&BigInt::from(q)).to_u64()
}

fn rational_mod(x: &Rational, q: u64) -> Option<u64> {
    let qb = BigInt::from(q);
    let den = x.denom().mod_floor(&qb).to_u64()?;
    let num = x.numer().mod_floor(&qb).to_u64()?;
    Some(mulm(num, inv_mod(den, q)?, q))
}

impl Reduction {
    /// Split primes at or above `start`, in increasing order.
    pub fn candidates(field: &NumberField, start: u64) -> impl Iterator<Item = Reduction> + '_ {
        (start..).filter(|&q| is_prime_u64(q)).filter_map(move |q| {
            let coeffs: Option<Vec<u64>> =
                field.minpoly().coeffs().iter().map(|c| rational_mod(c, q)).collect();
            let coeffs = coeffs?;
            let root = (0..q).find(|&r| {
                coeffs.iter().rev().fold(0u64, |acc, c| (mulm(acc, r, q) + c) % q) == 0
            })?;
            Some(Reduction { q, root })
        })
    }

    /// Image in F_q, or None when a denominator is divisible by q.
    pub fn reduce(&self, a: &FieldElement) -> Option<u64> {
        let mut acc = 0u64;
        for c in a.coords().iter().rev() {
            let c = if c.is_zero() { 0 } else { rational_mod(c, self.q)? };
            acc = (mulm(acc, self.root, self.q) + c) % self.q;
        }
        Some(acc)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mulm(a, b, self.q)
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        inv_mod(a, self.q)
    }
}
