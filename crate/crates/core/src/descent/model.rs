use num_bigint::BigInt;
use num_traits::Zero;

use crate::curve::{mul_linear, power_character, CurveError, PgonalCurve};
use crate::exactfield::compositum::adjoin_sqrt;
use crate::exactfield::linalg::{inverse, linear_solve};
use crate::exactfield::quadform::PointSearch;
use crate::exactfield::{FieldElement, FieldEmbedding, NumberField, Place, Rational};
use crate::projgeom::{mobius_through_triples, Mobius, ProjPoint, WeightedPointSet};

use super::{
    compute_cocycle, conic_point, descend_to_conic, ConicPoint, DescendedConic, DescentError,
    GaloisCocycle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Model over ℚ.
    RationalModel,
    /// Model over ℚ(√e); the conic has no rational point.
    QuadraticModel,
    /// Some conjugate of the curve is not isomorphic to it.
    FomObstruction,
    /// Matches exist for every σ but no choice satisfies the cocycle relation.
    CocycleObstruction,
    /// The power character is nontrivial; only `[k₁ : ℚ]` is reported.
    CharacterExtension,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::RationalModel => "rational-model",
            Variant::QuadraticModel => "quadratic-model",
            Variant::FomObstruction => "fom-obstruction",
            Variant::CocycleObstruction => "cocycle-obstruction",
            Variant::CharacterExtension => "character-extension",
        }
    }
}

/// A polynomial over ℚ or ℚ(√e): coefficient k is `u_k + v_k·√e`,
/// constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelPolynomial {
    /// `None` for ℚ.
    pub disc: Option<BigInt>,
    pub coeffs: Vec<(Rational, Rational)>,
}

impl ModelPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Result of [`descend`].
#[derive(Debug, Clone)]
pub struct DescentOutcome {
    pub variant: Variant,
    pub model: Option<ModelPolynomial>,
    /// Φ over `L`, with Φ^σ ∘ g_σ = Φ for σ fixing the model's field.
    pub witness: Option<Mobius>,
    /// The first failing place of the conic, when it has no rational point.
    pub obstruction: Option<Place>,
    pub places: Vec<Place>,
    /// Squarefree `e` of the quadratic model field.
    pub extension_disc: Option<BigInt>,
    /// Normal form of the conic, when one was built.
    pub conic: Option<[BigInt; 3]>,
    /// K → L, where L is the field of the witness.
    pub embedding: Option<FieldEmbedding>,
    /// The model's branch divisor as a curve over `L`.
    pub model_curve: Option<PgonalCurve>,
    pub cocycle: Option<GaloisCocycle>,
    pub failing_sigma: Option<usize>,
    pub k1_degree: Option<usize>,
    /// The square root of `extension_disc` inside `L` used for the model.
    pub sqrt: Option<FieldElement>,
}

impl DescentOutcome {
    fn negative(variant: Variant) -> Self {
        DescentOutcome {
            variant,
            model: None,
            witness: None,
            obstruction: None,
            places: Vec::new(),
            extension_disc: None,
            conic: None,
            embedding: None,
            model_curve: None,
            cocycle: None,
            failing_sigma: None,
            k1_degree: None,
            sqrt: None,
        }
    }

    /// Degree over ℚ of the model's field, for successful outcomes.
    pub fn degree(&self) -> Option<usize> {
        match self.variant {
            Variant::RationalModel => Some(1),
            Variant::QuadraticModel => Some(2),
            _ => None,
        }
    }

    pub fn is_model(&self) -> bool {
        self.degree().is_some()
    }
}

/// Expresses `x ∈ L` as `u + v·s`; `None` when impossible.
fn split_quadratic(x: &FieldElement, s: Option<&FieldElement>) -> Option<(Rational, Rational)> {
    if let Some(q) = x.as_rational() {
        return Some((q, Rational::zero()));
    }
    let s = s?;
    let l = x.field();
    let one = l.one();
    let rows: Vec<Vec<Rational>> = (0..l.degree())
        .map(|k| vec![one.coords()[k].clone(), s.coords()[k].clone()])
        .collect();
    let sol = linear_solve(&rows, x.coords(), 2, &()).particular?;
    Some((sol[0].clone(), sol[1].clone()))
}

/// Index in `K` of the restriction of automorphism `tau` of `L`.
fn restrict(e: &FieldEmbedding, tau: usize) -> usize {
    let k = e.source();
    let l = e.target();
    let img = l.apply(tau, &e.apply(&k.generator()));
    (0..k.automorphism_count())
        .find(|&s| e.apply(&k.automorphism_image(s)) == img)
        .expect("L/K normal")
}

fn lift_point(l: &NumberField, s: Option<&FieldElement>, c: &(Rational, Rational)) -> FieldElement {
    let mut x = l.from_rational(c.0.clone());
    if !c.1.is_zero() {
        x = &x + &s.expect("quadratic coordinate needs a square root").scale(&c.1);
    }
    x
}

/// Builds the isomorphism Φ from P¹ to the descended line through the conic
/// and the given point, and the model `y^p = q(x)` with `q` over ℚ or
/// ℚ(√e).
pub fn parametrize_and_model(
    curve: &PgonalCurve,
    cocycle: &GaloisCocycle,
    conic: &DescendedConic,
    point: &ConicPoint,
) -> Result<DescentOutcome, DescentError> {
    let k = curve.field();
    let (e, coords, places): (Option<BigInt>, [(Rational, Rational); 3], Vec<Place>) = match point {
        ConicPoint::Rational(z) => (
            None,
            std::array::from_fn(|i| (Rational::from_integer(z[i].clone()), Rational::zero())),
            Vec::new(),
        ),
        ConicPoint::Obstructed { places, point } => {
            (Some(point.e.clone()), point.coords.clone(), places.clone())
        }
    };
    let comp = match &e {
        Some(e) => Some(adjoin_sqrt(k, &Rational::from_integer(e.clone()))?),
        None => None,
    };
    let (l, emb, sqrt) = match &comp {
        Some(c) => (c.field.clone(), c.embedding.clone(), Some(c.sqrt.clone())),
        None => (k.clone(), FieldEmbedding::identity(k), None),
    };
    let lr = |q: &Rational| l.from_rational(q.clone());

    // point in quadric coordinates X = M·Z
    let z: Vec<FieldElement> = coords.iter().map(|c| lift_point(&l, sqrt.as_ref(), c)).collect();
    let x0: Vec<FieldElement> = (0..3)
        .map(|i| {
            (0..3).fold(l.zero(), |acc, j| &acc + &(&lr(&conic.transform[i][j]) * &z[j]))
        })
        .collect();
    // basis [X0 | U | W] with U, W standard vectors
    let std_vec = |i: usize| -> Vec<FieldElement> {
        (0..3).map(|r| if r == i { l.one() } else { l.zero() }).collect()
    };
    let (binv, _) = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .find_map(|&(u, w)| {
            let (cu, cw) = (std_vec(u), std_vec(w));
            let m: Vec<Vec<FieldElement>> =
                (0..3).map(|r| vec![x0[r].clone(), cu[r].clone(), cw[r].clone()]).collect();
            inverse(&m, &l).map(|inv| (inv, (u, w)))
        })
        .ok_or_else(|| DescentError::Invariant("conic point is zero".into()))?;

    let quadrics: Vec<_> = conic.quadrics.iter().map(|q| {
        crate::projgeom::BinaryQuadratic::new(emb.apply(&q.q[0]), emb.apply(&q.q[1]), emb.apply(&q.q[2]))
    }).collect();
    let phi_at = |x: &FieldElement, y: &FieldElement| -> Option<ProjPoint> {
        let xs: Vec<FieldElement> = quadrics.iter().map(|q| q.eval(x, y)).collect();
        let row = |r: usize| (0..3).fold(l.zero(), |acc, j| &acc + &(&binv[r][j] * &xs[j]));
        ProjPoint::from_homogeneous(&row(1), &row(2)).ok()
    };
    let mut samples: Vec<(ProjPoint, ProjPoint)> = Vec::new();
    let cands = std::iter::once(ProjPoint::Infinity)
        .chain((0..).map(|n: i64| ProjPoint::Finite(l.from_int(if n % 2 == 0 { n / 2 } else { -(n + 1) / 2 }))));
    for src in cands {
        let (x, y) = src.homogeneous(&l);
        if let Some(img) = phi_at(&x, &y) {
            samples.push((src, img));
        }
        if samples.len() == 4 {
            break;
        }
    }
    let phi = mobius_through_triples(
        &l,
        [&samples[0].0, &samples[1].0, &samples[2].0],
        [&samples[0].1, &samples[1].1, &samples[2].1],
    )
    .map_err(|err| DescentError::Invariant(format!("parametrization: {err}")))?;
    if phi.apply(&samples[3].0) != samples[3].1 {
        return Err(DescentError::Invariant("parametrization is not a Möbius map".into()));
    }

    // Gal(L / k₂)
    let fixing: Vec<usize> = (0..l.automorphism_count())
        .filter(|&t| sqrt.as_ref().is_none_or(|s| &l.apply(t, s) == s))
        .collect();
    for &t in &fixing {
        let s = restrict(&emb, t);
        let g = cocycle.map(s).embed(&emb);
        if phi.conjugate(t).compose(&g) != phi {
            return Err(DescentError::Invariant(format!(
                "witness identity fails for automorphism {t}"
            )));
        }
    }

    let branch_l = curve.branch().embed(&emb);
    let model_branch = WeightedPointSet::new(
        curve.p(),
        branch_l.entries().iter().map(|(pt, w)| (phi.apply(pt), *w)).collect(),
    )
    .map_err(|err| DescentError::Invariant(err.to_string()))?;
    if fixing.iter().any(|&t| model_branch.apply_automorphism(t) != model_branch) {
        return Err(DescentError::Invariant("model branch divisor is not Galois stable".into()));
    }
    let mut poly = vec![l.one()];
    for (pt, w) in model_branch.entries() {
        if let Some(b) = pt.affine() {
            for _ in 0..*w {
                poly = mul_linear(&poly, b);
            }
        }
    }
    let coeffs = poly
        .iter()
        .map(|c| split_quadratic(c, sqrt.as_ref()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| DescentError::Invariant("model coefficient outside the target field".into()))?;
    let model_curve = PgonalCurve::new(curve.p(), l.clone(), model_branch.entries().to_vec())
        .map_err(|err| DescentError::Invariant(err.to_string()))?;
    Ok(DescentOutcome {
        variant: if e.is_none() { Variant::RationalModel } else { Variant::QuadraticModel },
        model: Some(ModelPolynomial { disc: e.clone(), coeffs }),
        sqrt,
        witness: Some(phi),
        obstruction: places.first().cloned(),
        places,
        extension_disc: e,
        conic: Some(conic.normal.form.clone()),
        embedding: Some(emb),
        model_curve: Some(model_curve),
        cocycle: Some(cocycle.clone()),
        failing_sigma: None,
        k1_degree: None,
    })
}

/// Options for [`descend`].
#[derive(Debug, Clone, Copy, Default)]
pub struct DescendOptions {
    pub search: PointSearch,
}

/// Finds a model of the curve over ℚ or a quadratic field, or reports why
/// the curve's conjugates prevent it.
pub fn descend(curve: &PgonalCurve, opts: DescendOptions) -> Result<DescentOutcome, DescentError> {
    let k = curve.field();
    if !k.is_galois() {
        return Err(DescentError::NotGalois(k.label().to_string()));
    }
    match power_character(curve) {
        Err(CurveError::FieldOfModuli { sigma }) => {
            let mut o = DescentOutcome::negative(Variant::FomObstruction);
            o.failing_sigma = Some(sigma);
            return Ok(o);
        }
        Err(err) => return Err(DescentError::Curve(err)),
        Ok(ch) if !ch.is_trivial() => {
            let mut o = DescentOutcome::negative(Variant::CharacterExtension);
            o.k1_degree = Some(ch.k1_degree());
            return Ok(o);
        }
        Ok(_) => {}
    }
    let cocycle = match compute_cocycle(curve) {
        Ok(c) => c,
        Err(DescentError::FieldOfModuli { sigma }) => {
            let mut o = DescentOutcome::negative(Variant::FomObstruction);
            o.failing_sigma = Some(sigma);
            return Ok(o);
        }
        Err(DescentError::CocycleObstruction) => {
            return Ok(DescentOutcome::negative(Variant::CocycleObstruction))
        }
        Err(err) => return Err(err),
    };
    if cocycle.is_trivial() {
        let coeffs = curve
            .affine_polynomial()
            .iter()
            .map(|c| c.as_rational().map(|q| (q, Rational::zero())))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| DescentError::Invariant("trivial cocycle with irrational polynomial".into()))?;
        return Ok(DescentOutcome {
            variant: Variant::RationalModel,
            model: Some(ModelPolynomial { disc: None, coeffs }),
            witness: Some(Mobius::identity(k)),
            embedding: Some(FieldEmbedding::identity(k)),
            model_curve: Some(curve.clone()),
            cocycle: Some(cocycle),
            ..DescentOutcome::negative(Variant::RationalModel)
        });
    }
    let conic = descend_to_conic(&cocycle)?;
    let point = conic_point(conic.form(), opts.search)?;
    parametrize_and_model(curve, &cocycle, &conic, &point)
}

/// Model coefficients as elements of the witness field `L`.
pub fn model_over_witness_field(outcome: &DescentOutcome) -> Option<Vec<FieldElement>> {
    let model = outcome.model.as_ref()?;
    let l = outcome.witness.as_ref()?.field();
    Some(model.coeffs.iter().map(|c| lift_point(l, outcome.sqrt.as_ref(), c)).collect())
}
