//! The compositum K(√e) of a number field with a quadratic field, built as
//! the algebra K[s]/(s² − e) with a primitive element θ + c·s.

use num_traits::One;

use super::field::{FieldElement, FieldEmbedding, FieldError, NumberField};
use super::linalg::{kernel, linear_solve};
use super::poly::QPoly;
use super::rational::Rational;

#[derive(Debug, Clone)]
pub struct Compositum {
    pub field: NumberField,
    /// K → K(√e)
    pub embedding: FieldEmbedding,
    /// The chosen square root of e inside the compositum.
    pub sqrt: FieldElement,
}

type Pair = (FieldElement, FieldElement);

fn pair_mul(a: &Pair, b: &Pair, e: &FieldElement) -> Pair {
    (
        &(&a.0 * &b.0) + &(&(&a.1 * &b.1) * e),
        &(&a.0 * &b.1) + &(&a.1 * &b.0),
    )
}

fn pair_coords(a: &Pair) -> Vec<Rational> {
    a.0.coords().iter().chain(a.1.coords()).cloned().collect()
}

/// Builds K(√e). When √e already lies in K the compositum is K itself.
pub fn adjoin_sqrt(k: &NumberField, e: &Rational) -> Result<Compositum, FieldError> {
    if let Some(s) = k.sqrt_of_rational(e) {
        return Ok(Compositum {
            field: k.clone(),
            embedding: FieldEmbedding::identity(k),
            sqrt: s,
        });
    }
    let n = k.degree();
    let big = 2 * n;
    let ek = k.from_rational(e.clone());
    let theta: Pair = (k.generator(), k.zero());
    let s: Pair = (k.zero(), k.one());
    for c in 1i64.. {
        let gamma: Pair = (k.generator(), k.from_int(c));
        let mut powers: Vec<Pair> = vec![(k.one(), k.zero())];
        for _ in 0..big {
            let next = pair_mul(powers.last().unwrap(), &gamma, &ek);
            powers.push(next);
        }
        // columns γ^0..γ^{2n-1}
        let cols: Vec<Vec<Rational>> = powers[..big].iter().map(pair_coords).collect();
        let mat: Vec<Vec<Rational>> = (0..big)
            .map(|r| cols.iter().map(|col| col[r].clone()).collect())
            .collect();
        if !kernel(&mat, big, &()).is_empty() {
            continue;
        }
        let top = pair_coords(&powers[big]);
        let sol = linear_solve(&mat, &top, big, &()).particular.expect("full rank");
        let mut mp: Vec<Rational> = sol.iter().map(|x| -x.clone()).collect();
        mp.push(Rational::one());
        let minpoly = QPoly::new(mp);
        let express = |target: &Pair| -> Vec<Rational> {
            linear_solve(&mat, &pair_coords(target), big, &())
                .particular
                .expect("γ is primitive")
        };
        let theta_in_l = QPoly::new(express(&theta));
        let s_in_l = QPoly::new(express(&s));
        let label = format!("{}(sqrt({}))", k.label(), e);
        let bare = NumberField::bare(minpoly.clone(), &label);
        let theta_l = bare.from_poly(&theta_in_l);
        let s_l = bare.from_poly(&s_in_l);
        let mut images = Vec::new();
        for sigma in 0..k.automorphism_count() {
            let h = QPoly::new(k.automorphism_image(sigma).coords().to_vec());
            let h_l = bare.eval_poly(&h, &theta_l);
            for eps in [1i64, -1] {
                let img = &h_l + &s_l.scale(&Rational::from_integer((eps * c).into()));
                images.push(img.coords().to_vec());
            }
        }
        let l = NumberField::with_automorphisms(minpoly, &label, images)?;
        let theta_final = l.from_poly(&theta_in_l);
        let sqrt = l.from_poly(&s_in_l);
        debug_assert_eq!(&sqrt * &sqrt, l.from_rational(e.clone()));
        return Ok(Compositum {
            embedding: FieldEmbedding::new(k.clone(), theta_final),
            field: l,
            sqrt,
        });
    }
    unreachable!()
}
