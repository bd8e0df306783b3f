//! Seeded random instances: rational curves twisted by Möbius maps over a
//! number field, Galois-stable branch divisors, and curves whose conjugates
//! rescale the weights.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::curve::PgonalCurve;
use crate::exactfield::{ratio, FieldElement, NumberField, QPoly};
use crate::projgeom::{Mat2, Mobius, ProjPoint, WeightedPointSet};

pub use rand_chacha::ChaCha8Rng as CorpusRng;

pub fn rng(seed: u64) -> CorpusRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// ℚ(√d) presented by x² − d.
pub fn quadratic_field(d: i64) -> NumberField {
    let label = if d == -1 { "Q(i)".to_string() } else { format!("Q(sqrt({d}))") };
    NumberField::new(QPoly::from_ints(&[-d, 0, 1]), &label).expect("d not a square")
}

pub fn random_rational(rng: &mut impl Rng, h: i64) -> crate::exactfield::Rational {
    ratio(rng.gen_range(-h..=h), rng.gen_range(1..=3))
}

/// A random element with integer coordinates in `-h..=h`.
pub fn random_element(rng: &mut impl Rng, field: &NumberField, h: i64) -> FieldElement {
    let coords = (0..field.degree()).map(|_| ratio(rng.gen_range(-h..=h), 1)).collect();
    field.element(coords).expect("length")
}

/// A random element whose Galois orbit has full size.
pub fn generic_element(rng: &mut impl Rng, field: &NumberField, h: i64) -> FieldElement {
    loop {
        let a = random_element(rng, field, h);
        if orbit(&a).len() == field.automorphism_count() {
            return a;
        }
    }
}

/// Distinct conjugates σ(a), in automorphism order.
pub fn orbit(a: &FieldElement) -> Vec<FieldElement> {
    let mut out: Vec<FieldElement> = Vec::new();
    for s in 0..a.field().automorphism_count() {
        let b = a.apply(s);
        if !out.contains(&b) {
            out.push(b);
        }
    }
    out
}

/// `m` weights in `1..p` summing to 0 mod p.
pub fn random_weights(rng: &mut impl Rng, p: u32, m: usize) -> Vec<u32> {
    loop {
        let mut w: Vec<u32> = (0..m - 1).map(|_| rng.gen_range(1..p)).collect();
        let s: u32 = w.iter().map(|x| x % p).sum::<u32>() % p;
        let last = (p - s) % p;
        if last != 0 {
            w.push(last);
            return w;
        }
    }
}

/// A random invertible Möbius map over `field` with at least one entry
/// outside ℚ (when the field is larger than ℚ).
pub fn random_mobius(rng: &mut impl Rng, field: &NumberField, h: i64) -> Mobius {
    loop {
        let m = Mat2::new(
            random_element(rng, field, h),
            random_element(rng, field, h),
            random_element(rng, field, h),
            random_element(rng, field, h),
        );
        let irrational = field.degree() == 1 || m.entries().iter().any(|e| e.as_rational().is_none());
        if irrational && !m.det().is_zero() {
            return Mobius::new(m).expect("invertible");
        }
    }
}

/// A curve over ℚ with `m` distinct random rational branch points (one of
/// them possibly ∞), viewed over `field`.
pub fn random_rational_curve(rng: &mut impl Rng, field: &NumberField, p: u32, m: usize) -> PgonalCurve {
    loop {
        let weights = if p == 2 { vec![1; m] } else { random_weights(rng, p, m) };
        let mut pts: Vec<ProjPoint> = Vec::new();
        if rng.gen_bool(0.3) {
            pts.push(ProjPoint::Infinity);
        }
        while pts.len() < m {
            let pt = ProjPoint::Finite(field.from_rational(random_rational(rng, 9)));
            if !pts.contains(&pt) {
                pts.push(pt);
            }
        }
        pts.shuffle(rng);
        if let Ok(c) = PgonalCurve::new(p, field.clone(), pts.into_iter().zip(weights).collect()) {
            return c;
        }
    }
}

/// The curve with branch divisor `h(B)`.
pub fn twist(curve: &PgonalCurve, h: &Mobius) -> PgonalCurve {
    let b = curve.branch().map_mobius(h);
    PgonalCurve::new(curve.p(), curve.field().clone(), b.entries().to_vec()).expect("twist of a valid curve")
}

/// A twist by a random Möbius map over ℚ(√d) of a random curve over ℚ.
pub fn random_twisted_curve(rng: &mut impl Rng, d: i64, p: u32, m: usize) -> (PgonalCurve, Mobius) {
    let k = quadratic_field(d);
    let base = random_rational_curve(rng, &k, p, m);
    let h = random_mobius(rng, &k, 3);
    (twist(&base, &h), h)
}

/// Smallest branch count giving genus ≥ 2 for p, with hyperelliptic counts
/// even.
pub fn min_points(p: u32) -> usize {
    match p {
        2 => 6,
        3 => 4,
        _ => 3,
    }
}

/// A Galois-stable divisor over a Galois field: rational points plus full
/// orbits of generic elements, weights constant along orbits, then twisted
/// by a random Möbius map. The power character of the result is trivial.
pub fn random_galois_stable_curve(rng: &mut impl Rng, field: &NumberField, p: u32) -> PgonalCurve {
    loop {
        let mut entries: Vec<(ProjPoint, u32)> = Vec::new();
        let orbits = rng.gen_range(1..=2);
        for _ in 0..orbits {
            let a = generic_element(rng, field, 3);
            let w = if p == 2 { 1 } else { rng.gen_range(1..p) };
            for b in orbit(&a) {
                entries.push((ProjPoint::Finite(b), w));
            }
        }
        let extra = rng.gen_range(0..=3);
        for _ in 0..extra {
            let w = if p == 2 { 1 } else { rng.gen_range(1..p) };
            entries.push((ProjPoint::Finite(field.from_rational(random_rational(rng, 9))), w));
        }
        let sum: u32 = entries.iter().map(|(_, w)| *w).sum::<u32>() % p;
        if sum != 0 {
            entries.push((ProjPoint::Infinity, p - sum));
        }
        let Ok(base) = PgonalCurve::new(p, field.clone(), entries) else { continue };
        let h = random_mobius(rng, field, 2);
        return twist(&base, &h);
    }
}

/// Units `s` of order dividing `n` in (ℤ/p)^×, excluding 1.
pub fn units_of_order_dividing(p: u32, n: usize) -> Vec<u32> {
    (2..p)
        .filter(|&s| {
            let mut x = 1u64;
            for _ in 0..n {
                x = x * s as u64 % p as u64;
            }
            x == 1
        })
        .collect()
}

/// A curve over a field with cyclic Galois group generated by `sigma`, made
/// of `orbits` generic orbits `σ^k(a)` carrying weights `w·s^k mod p`.
/// Conjugation by σ multiplies the weights by `s`.
pub fn t_twisted_curve(
    rng: &mut impl Rng,
    field: &NumberField,
    sigma: usize,
    p: u32,
    s: u32,
    orbits: usize,
) -> PgonalCurve {
    let group = field.galois_group();
    let n = group.element_order(sigma);
    assert_eq!(n, group.order(), "sigma must generate the Galois group");
    loop {
        let mut entries = Vec::new();
        for _ in 0..orbits {
            let a = generic_element(rng, field, 3);
            let w = rng.gen_range(1..p) as u64;
            let mut cur = a.clone();
            let mut wt = w;
            for _ in 0..n {
                entries.push((ProjPoint::Finite(cur.clone()), wt as u32));
                cur = cur.apply(sigma);
                wt = wt * s as u64 % p as u64;
            }
        }
        if let Ok(c) = PgonalCurve::new(p, field.clone(), entries) {
            return c;
        }
    }
}

/// Random weighted set of size `m` with coordinates of height ≤ 3.
pub fn random_weighted_set(rng: &mut impl Rng, field: &NumberField, p: u32, m: usize, equal: bool) -> WeightedPointSet {
    let w0 = rng.gen_range(1..p);
    loop {
        let mut pts: Vec<ProjPoint> = Vec::new();
        if rng.gen_bool(0.3) {
            pts.push(ProjPoint::Infinity);
        }
        while pts.len() < m {
            let pt = ProjPoint::Finite(random_element(rng, field, 3));
            if !pts.contains(&pt) {
                pts.push(pt);
            }
        }
        let entries = pts
            .into_iter()
            .map(|pt| (pt, if equal { w0 } else { rng.gen_range(1..p) }))
            .collect();
        if let Ok(s) = WeightedPointSet::new(p, entries) {
            return s;
        }
    }
}

/// Point sets with many Möbius symmetries: {0, ∞, ±1}, {0, ∞, ±1, ±i},
/// {0, 1, ∞}.
pub fn symmetric_set(field: &NumberField, p: u32, which: usize) -> WeightedPointSet {
    let f = |n: i64| ProjPoint::Finite(field.from_int(n));
    let mut pts = vec![f(0), ProjPoint::Infinity, f(1)];
    match which % 3 {
        0 => {}
        1 => pts.push(f(-1)),
        _ => {
            pts.push(f(-1));
            if let Some(i) = field.sqrt_of_rational(&ratio(-1, 1)) {
                pts.push(ProjPoint::Finite(i.clone()));
                pts.push(ProjPoint::Finite(-&i));
            }
        }
    }
    WeightedPointSet::new(p, pts.into_iter().map(|pt| (pt, 1)).collect()).expect("distinct")
}
