use std::sync::OnceLock;

use proptest::prelude::*;

use pgonal::corpus;
use pgonal::curve::{isomorphic_as_pgonal, PgonalCurve};
use pgonal::exactfield::{FieldElement, NumberField, QPoly};
use pgonal::projgeom::{
    match_weighted_sets, quadratic_twisted_action, BinaryQuadratic, Mat2, Mobius, ProjPoint,
};
use pgonal::serial::{parse_curve, serialize_curve};

/// ℚ(ζ₅), the cyclic cubic, ℚ(i), and the non-Galois ℚ(∛2).
fn fields() -> &'static [NumberField] {
    static F: OnceLock<Vec<NumberField>> = OnceLock::new();
    F.get_or_init(|| {
        let f = |c: &[i64], l: &str| NumberField::new(QPoly::from_ints(c), l).unwrap();
        vec![
            f(&[1, 1, 1, 1, 1], "Q(zeta5)"),
            f(&[1, -3, 0, 1], "Q(cos(2pi/9))"),
            f(&[1, 0, 1], "Q(i)"),
            f(&[-2, 0, 0, 1], "Q(cbrt2)"),
        ]
    })
}

fn elem(field: &NumberField, c: &[i64]) -> FieldElement {
    c.iter()
        .take(field.degree())
        .enumerate()
        .fold(field.zero(), |acc, (i, &x)| &acc + &(&field.from_int(x) * &field.generator().pow(i as u32)))
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 4)
}

fn mat(field: &NumberField, c: &[Vec<i64>; 4]) -> Option<Mat2> {
    let m = Mat2::new(elem(field, &c[0]), elem(field, &c[1]), elem(field, &c[2]), elem(field, &c[3]));
    (!m.det().is_zero()).then_some(m)
}

fn point(field: &NumberField, c: &[i64], inf: bool) -> ProjPoint {
    if inf {
        ProjPoint::Infinity
    } else {
        ProjPoint::Finite(elem(field, c))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(k in 0usize..4, a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = &fields()[k];
        let (a, b, c) = (elem(f, &a), elem(f, &b), elem(f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, f.zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), f.one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn automorphisms_are_ring_maps(k in 0usize..4, a in coeffs(), b in coeffs()) {
        let f = &fields()[k];
        let (a, b) = (elem(f, &a), elem(f, &b));
        for s in 0..f.automorphism_count() {
            prop_assert_eq!((&a * &b).apply(s), &a.apply(s) * &b.apply(s));
            prop_assert_eq!((&a + &b).apply(s), &a.apply(s) + &b.apply(s));
            for t in 0..f.automorphism_count() {
                let st = f.compose_automorphisms(s, t);
                prop_assert_eq!(a.apply(st), a.apply(t).apply(s));
            }
        }
    }

    #[test]
    fn mobius_composition(
        k in 0usize..3,
        g in [coeffs(), coeffs(), coeffs(), coeffs()],
        h in [coeffs(), coeffs(), coeffs(), coeffs()],
        x in coeffs(),
        inf in any::<bool>(),
    ) {
        let f = &fields()[k];
        let (Some(g), Some(h)) = (mat(f, &g), mat(f, &h)) else { return Ok(()) };
        let (g, h) = (Mobius::new(g).unwrap(), Mobius::new(h).unwrap());
        let x = point(f, &x, inf);
        prop_assert_eq!(g.compose(&h).apply(&x), g.apply(&h.apply(&x)));
        prop_assert!(g.compose(&g.inverse()).is_identity());
        for s in 0..f.automorphism_count() {
            prop_assert_eq!(g.compose(&h).conjugate(s), g.conjugate(s).compose(&h.conjugate(s)));
            prop_assert_eq!(g.conjugate(s).apply(&x.apply_automorphism(s)), g.apply(&x).apply_automorphism(s));
        }
    }

    #[test]
    fn twisted_action_is_an_action(
        k in 0usize..3,
        a in [coeffs(), coeffs(), coeffs(), coeffs()],
        b in [coeffs(), coeffs(), coeffs(), coeffs()],
        q in [coeffs(), coeffs(), coeffs()],
        lambda in coeffs(),
    ) {
        let f = &fields()[k];
        let (Some(a), Some(b)) = (mat(f, &a), mat(f, &b)) else { return Ok(()) };
        let q = BinaryQuadratic::new(elem(f, &q[0]), elem(f, &q[1]), elem(f, &q[2]));
        let n = f.automorphism_count();
        for s in 0..n {
            for t in 0..n {
                // ρ(σ, A) ∘ ρ(τ, B) = ρ(στ, A·σ(B))
                let inner = quadratic_twisted_action(t, &b, &q).unwrap();
                let lhs = quadratic_twisted_action(s, &a, &inner).unwrap();
                let ab = a.mul(&b.apply_automorphism(s));
                let rhs = quadratic_twisted_action(f.compose_automorphisms(s, t), &ab, &q).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
        let lambda = elem(f, &lambda);
        if !lambda.is_zero() {
            let scaled = a.scale(&lambda);
            prop_assert_eq!(
                quadratic_twisted_action(1 % n, &scaled, &q).unwrap(),
                quadratic_twisted_action(1 % n, &a, &q).unwrap()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let q = NumberField::rationals();
        let mut r = corpus::rng(seed);
        let m = corpus::min_points(p) + if p == 2 { 0 } else { 1 };
        let c = corpus::random_rational_curve(&mut r, &q, p, m);
        let h = corpus::random_mobius(&mut r, &q, 4);
        let d = corpus::twist(&c, &h);
        let refl = isomorphic_as_pgonal(&c, &c).unwrap();
        prop_assert!(refl.iter().any(|(t, g)| *t == 1 && g.is_identity()));
        let fwd = isomorphic_as_pgonal(&c, &d).unwrap();
        let back = isomorphic_as_pgonal(&d, &c).unwrap();
        prop_assert!(fwd.contains(&(1, h.clone())));
        prop_assert!(back.contains(&(1, h.inverse())));
        prop_assert_eq!(fwd.len(), back.len());
        for (t, g) in &fwd {
            let t_inv = (1..p).find(|u| (u * t) % p == 1).unwrap();
            prop_assert!(back.contains(&(t_inv, g.inverse())));
        }
    }

    #[test]
    fn conjugation_round_trip(seed in any::<u64>(), k in 0usize..3) {
        let f = &fields()[k];
        let mut r = corpus::rng(seed);
        let pts: Vec<(FieldElement, u32)> = (0..5).map(|_| (corpus::random_element(&mut r, f, 5), 1)).collect();
        let Ok(c) = PgonalCurve::from_affine(2, f.clone(), pts) else { return Ok(()) };
        let g = f.galois_group();
        for s in 0..f.automorphism_count() {
            prop_assert_eq!(c.conjugate(s).conjugate(g.inverse(s)), c.clone());
        }
    }

    #[test]
    fn matching_finds_the_twist(seed in any::<u64>(), k in 0usize..3, p in prop::sample::select(vec![3u32, 5, 7])) {
        let f = &fields()[k];
        let mut r = corpus::rng(seed);
        let a = corpus::random_weighted_set(&mut r, f, p, 5, false);
        let h = corpus::random_mobius(&mut r, f, 3);
        let b = a.map_mobius(&h);
        let maps = match_weighted_sets(f, &a, &b).unwrap();
        prop_assert!(maps.contains(&h));
        prop_assert!(maps.iter().all(|g| a.maps_onto(g, &b)));
    }

    #[test]
    fn serialization_round_trip(seed in any::<u64>(), k in 0usize..3) {
        let f = &fields()[k];
        let mut r = corpus::rng(seed);
        let c = corpus::random_galois_stable_curve(&mut r, f, 3);
        let text = serialize_curve(&c);
        let back = parse_curve(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(serialize_curve(&back), text);
    }
}
