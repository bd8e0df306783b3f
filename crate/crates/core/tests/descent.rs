use num_bigint::BigInt;
use pgonal::curve::{isomorphic_as_pgonal, PgonalCurve};
use pgonal::descent::{
    compute_cocycle, descend, model_over_witness_field, DescendOptions, DescentOutcome, Variant,
};
use pgonal::exactfield::{ratio, FieldElement, NumberField, QPoly};
use pgonal::projgeom::{match_weighted_sets, Mat2, Mobius, ProjPoint};

fn qi() -> NumberField {
    NumberField::new(QPoly::from_ints(&[1, 0, 1]), "Q(i)").unwrap()
}

/// Model round trip: the output branch divisor over L is Möbius-equivalent
/// to the input, and the model coefficients generate the model divisor.
fn check_round_trip(curve: &PgonalCurve, out: &DescentOutcome) {
    let emb = out.embedding.as_ref().unwrap();
    let model = out.model_curve.as_ref().unwrap();
    let lifted = curve.embed(emb);
    let isos = isomorphic_as_pgonal(&lifted, model).unwrap();
    assert!(isos.iter().any(|(t, g)| *t == 1 && g == out.witness.as_ref().unwrap()));
    let coeffs = model_over_witness_field(out).unwrap();
    assert_eq!(coeffs, model.affine_polynomial());
}

#[test]
fn sqrt2_translation_twist() {
    let k = NumberField::quadratic(2, "Q(sqrt2)").unwrap();
    let r2 = k.generator();
    let pts: Vec<(FieldElement, u32)> =
        [0, 1, -1, 2, -2].iter().map(|&n| (&r2 + &k.from_int(n), 1)).collect();
    let curve = PgonalCurve::from_affine(2, k.clone(), pts).unwrap();
    assert_eq!(curve.m(), 6);
    let c = compute_cocycle(&curve).unwrap();
    assert!(c.verify());
    // the base curve has extra symmetries, so several cocycles are consistent
    assert!(c.multiple_selections);
    let translation = Mobius::new(Mat2::new(k.one(), &r2 * &k.from_int(-2), k.zero(), k.one())).unwrap();
    let conj = curve.branch().apply_automorphism(1);
    assert!(match_weighted_sets(&k, curve.branch(), &conj).unwrap().contains(&translation));
    let out = descend(&curve, DescendOptions::default()).unwrap();
    assert_eq!(out.variant, Variant::RationalModel);
    assert!(matches!(out.model.as_ref().unwrap().degree(), 5 | 6));
    check_round_trip(&curve, &out);
}

#[test]
fn rational_input_is_untouched() {
    let q = NumberField::rationals();
    let curve =
        PgonalCurve::from_affine(7, q.clone(), vec![(q.from_int(0), 2), (q.from_int(1), 1)]).unwrap();
    let out = descend(&curve, DescendOptions::default()).unwrap();
    assert_eq!(out.variant, Variant::RationalModel);
    assert!(out.witness.as_ref().unwrap().is_identity());
    check_round_trip(&curve, &out);
}

fn quaternion_curve() -> PgonalCurve {
    // σ(B) = g(B) for g(z) = −1/z: points come in pairs {b, −1/σ(b)}
    let k = qi();
    let i = k.generator();
    let mut pts = Vec::new();
    for b in [k.from_int(2), k.from_int(3), &k.from_int(1) + &(&i * &k.from_int(2))] {
        let partner = -&b.apply(1).inverse().unwrap();
        pts.push((b, 1));
        pts.push((partner, 1));
    }
    PgonalCurve::from_affine(2, k, pts).unwrap()
}

#[test]
fn quaternion_obstruction() {
    let curve = quaternion_curve();
    let out = descend(&curve, DescendOptions::default()).unwrap();
    assert_eq!(out.variant, Variant::QuadraticModel);
    assert_eq!(out.extension_disc, Some(BigInt::from(-1)));
    assert_eq!(out.obstruction.as_ref().unwrap().to_string(), "real");
    check_round_trip(&curve, &out);
}

#[test]
fn sqrt3_obstruction_needs_compositum() {
    // g(z) = 3/z over Q(√3): the canonical lift has A·σ(A) = 1/3, and 1/3 is
    // not a norm from Q(√3)
    let k = NumberField::quadratic(3, "Q(sqrt3)").unwrap();
    let s = k.generator();
    let mut pts = Vec::new();
    for b in [k.from_int(2), k.from_int(5), &k.from_int(1) + &s] {
        let partner = &k.from_int(3) / &b.apply(1);
        pts.push((b, 1));
        pts.push((partner, 1));
    }
    let curve = PgonalCurve::from_affine(2, k.clone(), pts).unwrap();
    let c = compute_cocycle(&curve).unwrap();
    assert_eq!(c.lift_scalar(1), Some(ratio(1, 3)));
    let out = descend(&curve, DescendOptions::default()).unwrap();
    assert_eq!(out.variant, Variant::QuadraticModel);
    assert_eq!(out.extension_disc, Some(BigInt::from(-1)));
    assert_eq!(out.witness.as_ref().unwrap().field().degree(), 4);
    check_round_trip(&curve, &out);
}

#[test]
fn cubic_twist_over_qi() {
    let k = qi();
    let i = k.generator();
    let base = [(0, 2), (1, 1), (3, 1), (-2, 2)];
    let h = Mobius::new(Mat2::new(k.one(), i.clone(), k.from_int(1), &k.from_int(2) - &i)).unwrap();
    let pts: Vec<(ProjPoint, u32)> = base
        .iter()
        .map(|&(a, w)| (h.apply(&ProjPoint::Finite(k.from_int(a))), w))
        .collect();
    let curve = PgonalCurve::new(3, k.clone(), pts).unwrap();
    let out = descend(&curve, DescendOptions::default()).unwrap();
    assert!(out.is_model());
    check_round_trip(&curve, &out);
}
