use crate::exactfield::{NumberField, QPoly};

use super::{uniqueness_classify, PgonalCurve, UniquenessVerdict};

/// One of the exceptional curves whose p-gonal group is not unique.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    /// Shape tag `(m,p)` as used by [`uniqueness_classify`].
    pub tag: &'static str,
    pub name: &'static str,
    pub equation: &'static str,
    pub curve: PgonalCurve,
    pub genus: u64,
    /// Automorphism-group facts, recorded as text only.
    pub annotation: &'static str,
}

impl GalleryEntry {
    pub fn verdict(&self) -> UniquenessVerdict {
        uniqueness_classify(self.curve.p(), self.curve.m()).expect("gallery shapes are valid")
    }
}

fn field(coeffs: &[i64], label: &str) -> NumberField {
    NumberField::new(QPoly::from_ints(coeffs), label).expect("gallery field")
}

/// The six exceptional fixtures, in the order (3,7), (4,3), (4,5), (5,3),
/// (p,p) at p = 5, (2p,p) at p = 3 with a = 2.
pub fn gallery() -> Vec<GalleryEntry> {
    let mut out = Vec::new();

    let q = NumberField::rationals();
    let klein = PgonalCurve::from_affine(7, q.clone(), vec![(q.from_int(0), 2), (q.from_int(1), 1)])
        .expect("klein");
    out.push(GalleryEntry {
        tag: "(3,7)",
        name: "klein",
        equation: "y^7 = x^2 (x - 1)",
        genus: 3,
        curve: klein,
        annotation: "automorphism group PGL2(7), order 168",
    });

    // β⁴ + 4β² + 1 = 0 gives √3 = β² + 2, and 15√3 − 26 = (β³)².
    let k = field(&[1, 0, 4, 0, 1], "Q(sqrt(-2+sqrt3))");
    let b3 = k.generator().pow(3);
    let c43 = PgonalCurve::from_affine(
        3,
        k.clone(),
        vec![(k.from_int(1), 1), (k.from_int(-1), 1), (b3.clone(), 2), (-&b3, 2)],
    )
    .expect("(4,3)");
    out.push(GalleryEntry {
        tag: "(4,3)",
        name: "genus-two-gl23",
        equation: "y^3 = (x^2 - 1)(x^2 - 15 sqrt3 + 26)^2",
        genus: 2,
        curve: c43,
        annotation: "automorphism group GL2(3), order 48",
    });

    let qi = field(&[1, 0, 1], "Q(i)");
    let i = qi.generator();
    let bring = PgonalCurve::from_affine(
        5,
        qi.clone(),
        vec![(qi.from_int(1), 1), (qi.from_int(-1), 1), (i.clone(), 4), (-&i, 4)],
    )
    .expect("bring");
    out.push(GalleryEntry {
        tag: "(4,5)",
        name: "bring",
        equation: "y^5 = (x^2 - 1)(x^2 + 1)^4",
        genus: 4,
        curve: bring,
        annotation: "automorphism group S5, order 120",
    });

    let c53 = PgonalCurve::from_affine(
        3,
        qi.clone(),
        vec![
            (qi.from_int(0), 2),
            (qi.from_int(1), 1),
            (qi.from_int(-1), 1),
            (i.clone(), 1),
            (-&i, 1),
        ],
    )
    .expect("(5,3)");
    out.push(GalleryEntry {
        tag: "(5,3)",
        name: "genus-three-order-48",
        equation: "y^3 = x^2 (x^4 - 1)",
        genus: 3,
        curve: c53,
        annotation: "automorphism group of order 48, quotient signature (0;2,3,12)",
    });

    // Roots of x⁵ + 1 are −ζ^k.
    let z5 = field(&[1, 1, 1, 1, 1], "Q(zeta5)");
    let zeta = z5.generator();
    let fermat_pts = (0..5).map(|k| (-&zeta.pow(k), 1)).collect();
    let fermat = PgonalCurve::from_affine(5, z5, fermat_pts).expect("fermat");
    out.push(GalleryEntry {
        tag: "(p,p)",
        name: "fermat-5",
        equation: "y^5 = -1 - x^5",
        genus: 6,
        curve: fermat,
        annotation: "automorphism group Z_p^2 x| S3 (order 150 at p = 5)",
    });

    // Roots of (x³ − 8)(x³ − 1/8) are 2ζ^k and ζ^k/2.
    let z3 = field(&[1, 1, 1], "Q(zeta3)");
    let w = z3.generator();
    let half = z3.from_rational(crate::exactfield::ratio(1, 2));
    let mut pts = Vec::new();
    for k in 0..3 {
        let r = w.pow(k);
        pts.push((&r * &z3.from_int(2), 1));
        pts.push((&r * &half, 1));
    }
    let c2pp = PgonalCurve::from_affine(3, z3, pts).expect("(2p,p)");
    out.push(GalleryEntry {
        tag: "(2p,p)",
        name: "two-p-p-3-a2",
        equation: "y^3 = (x^3 - 8)(x^3 - 1/8)",
        genus: 4,
        curve: c2pp,
        annotation: "family with automorphism group Z_p^2 x| Z_2^2, quotient signature (0;2,2,2,p)",
    });

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let g = gallery();
        assert_eq!(g.len(), 6);
        let genera: Vec<u64> = g.iter().map(|e| e.curve.genus()).collect();
        assert_eq!(genera, [3, 2, 4, 3, 6, 4]);
        for e in &g {
            assert_eq!(e.curve.genus(), e.genus);
            let v = e.verdict();
            assert!(!v.unique);
            assert_eq!(v.reason.to_string(), format!("exceptional-{}", e.tag));
        }
        assert_eq!(g[5].curve.m(), 6);
    }

    #[test]
    fn sqrt3_conjugation() {
        // The (4,3) fixture's coefficients live in Q(√3); conjugating √3 keeps
        // the weights and sends x² − 15√3 + 26 to x² + 15√3 + 26.
        let e = &gallery()[1];
        let k = e.curve.field();
        let sqrt3 = &k.generator().pow(2) + &k.from_int(2);
        for s in 0..k.automorphism_count() {
            let c = e.curve.conjugate(s);
            assert_eq!(c.branch().weight_multiset(), vec![1, 1, 2, 2]);
            let poly = c.affine_polynomial();
            let flipped = sqrt3.apply(s) != sqrt3;
            let sign = if flipped { -1 } else { 1 };
            // (x² − 1)(x² − s)² with s = ±15√3 − 26: constant term −s².
            let s_val = &(&sqrt3 * &k.from_int(15 * sign)) - &k.from_int(26);
            assert_eq!(poly[0], -&(&s_val * &s_val));
        }
    }
}
