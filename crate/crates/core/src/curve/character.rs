use crate::exactfield::GaloisGroup;
use crate::projgeom::{match_weighted_sets, Mobius, WeightedPointSet};

use super::{CurveError, PgonalCurve};

/// Units `t` such that some Möbius map sends `a` onto `b` with each weight
/// `n` becoming `t·n mod p`, together with the maps.
fn unit_matches(
    field: &crate::exactfield::NumberField,
    a: &WeightedPointSet,
    b: &WeightedPointSet,
) -> Vec<(u32, Vec<Mobius>)> {
    let p = a.prime();
    let mut out = Vec::new();
    if a.len() != b.len() {
        return out;
    }
    for t in 1..p {
        let scaled = a.scale_weights(t);
        if scaled.weight_multiset() != b.weight_multiset() {
            continue;
        }
        let maps = match_weighted_sets(field, &scaled, b).expect("sizes and weights checked");
        if !maps.is_empty() {
            out.push((t, maps));
        }
    }
    out
}

/// All pairs `(t, g)` where the Möbius map `g` carries the branch divisor of
/// `c1` onto that of `c2`, sending weight `n` to weight `t·n mod p`. Sorted by
/// `t`, then by `g`.
pub fn isomorphic_as_pgonal(
    c1: &PgonalCurve,
    c2: &PgonalCurve,
) -> Result<Vec<(u32, Mobius)>, CurveError> {
    if c1.p() != c2.p() {
        return Err(CurveError::PrimeMismatch(c1.p(), c2.p()));
    }
    if c1.field() != c2.field() {
        return Err(CurveError::FieldMismatch(
            c1.field().label().to_string(),
            c2.field().label().to_string(),
        ));
    }
    Ok(unit_matches(c1.field(), c1.branch(), c2.branch())
        .into_iter()
        .flat_map(|(t, maps)| maps.into_iter().map(move |g| (t, g)))
        .collect())
}

/// The character σ ↦ t(σ) measuring how a Galois conjugate of the curve is
/// identified with the curve itself: the admissible units for σ are those
/// `t` for which the branch divisor maps onto its σ-conjugate with weights
/// multiplied by `t`. They form a coset of the stabilizer `H` (the units
/// admissible for the identity), and σ ↦ coset is a homomorphism into
/// `(ℤ/p)^× / H`.
#[derive(Debug, Clone)]
pub struct PowerCharacter {
    pub prime: u32,
    pub group: GaloisGroup,
    /// Smallest admissible unit per automorphism.
    pub values: Vec<u32>,
    /// All admissible units per automorphism, ascending.
    pub admissible: Vec<Vec<u32>>,
    pub stabilizer: Vec<u32>,
    /// Automorphisms whose admissible set is the stabilizer itself.
    pub kernel: Vec<usize>,
    /// Number of distinct cosets hit; this is the degree `[k₁ : k]`.
    pub image_order: usize,
}

impl PowerCharacter {
    pub fn is_trivial(&self) -> bool {
        self.image_order == 1
    }

    pub fn k1_degree(&self) -> usize {
        self.image_order
    }

    /// Checks `t(σ)·t(τ)` is admissible for `στ` for every pair.
    pub fn is_homomorphism(&self) -> bool {
        let p = self.prime as u64;
        self.group.elements().all(|s| {
            self.group.elements().all(|t| {
                let st = self.group.compose(s, t);
                let prod = (self.values[s] as u64 * self.values[t] as u64 % p) as u32;
                self.admissible[st].binary_search(&prod).is_ok()
            })
        })
    }
}

/// Computes the power character over `k = ℚ` for a curve whose field is
/// Galois over ℚ.
pub fn power_character(curve: &PgonalCurve) -> Result<PowerCharacter, CurveError> {
    let field = curve.field();
    if !field.is_galois() {
        return Err(CurveError::NotGalois(field.label().to_string()));
    }
    let group = field.galois_group();
    let mut admissible = Vec::with_capacity(group.order());
    for s in group.elements() {
        let conj = curve.branch().apply_automorphism(s);
        let units: Vec<u32> = unit_matches(field, curve.branch(), &conj)
            .into_iter()
            .map(|(t, _)| t)
            .collect();
        if units.is_empty() {
            return Err(CurveError::FieldOfModuli { sigma: s });
        }
        admissible.push(units);
    }
    let stabilizer = admissible[0].clone();
    let values: Vec<u32> = admissible.iter().map(|u| u[0]).collect();
    let kernel = group.elements().filter(|&s| admissible[s] == stabilizer).collect();
    let mut cosets = admissible.clone();
    cosets.sort();
    cosets.dedup();
    let ch = PowerCharacter {
        prime: curve.p(),
        group,
        values,
        admissible,
        stabilizer,
        kernel,
        image_order: cosets.len(),
    };
    if !ch.is_homomorphism() || (curve.p() - 1) as usize % ch.image_order != 0 {
        return Err(CurveError::Invariant("power character is not a homomorphism".into()));
    }
    Ok(ch)
}
