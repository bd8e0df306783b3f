//! Cyclic p-gonal curves `y^p = Π (x − a_j)^{n_j}` described by their
//! weighted branch divisor on the projective line.

mod character;
mod gallery;
mod uniqueness;

pub use character::{isomorphic_as_pgonal, power_character, PowerCharacter};
pub use gallery::{gallery, GalleryEntry};
pub use uniqueness::{uniqueness_classify, Reason, UniquenessVerdict};

use std::fmt;

use crate::exactfield::arith::is_prime_u64;
use crate::exactfield::{FieldElement, FieldEmbedding, NumberField};
use crate::projgeom::{ProjError, ProjPoint, WeightedPointSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("p not prime: {0}")]
    NotPrime(u32),
    #[error("weight out of range: {weight} not in 1..{p}")]
    WeightOutOfRange { weight: u32, p: u32 },
    #[error("congruence failure: weights sum to {sum}, not divisible by {p}")]
    Congruence { sum: u64, p: u32 },
    #[error("m < 3: branch divisor has {0} points")]
    TooFewPoints(usize),
    #[error("genus < 2: genus is {0}")]
    GenusTooSmall(u64),
    #[error("duplicate branch point {0}")]
    DuplicatePoint(String),
    #[error("branch point {0} does not lie in the curve's field")]
    ForeignPoint(String),
    #[error("invalid shape (p={p}, m={m}): {why}")]
    InvalidShape { p: u32, m: usize, why: &'static str },
    #[error("curves use different primes ({0} vs {1})")]
    PrimeMismatch(u32, u32),
    #[error("curves live over different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("field {0} is not Galois over Q")]
    NotGalois(String),
    #[error("automorphism {sigma} sends the curve to a non-isomorphic conjugate")]
    FieldOfModuli { sigma: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CurveError {
    /// True for outcomes that are mathematical answers rather than bad input.
    pub fn is_math_negative(&self) -> bool {
        matches!(self, CurveError::FieldOfModuli { .. })
    }
}

/// A validated cyclic p-gonal curve over a number field `K`. The point at
/// infinity is stored explicitly whenever it is branched, so the weights
/// always sum to 0 mod p.
#[derive(Clone, PartialEq, Eq)]
pub struct PgonalCurve {
    p: u32,
    field: NumberField,
    branch: WeightedPointSet,
}

/// `(m − 2)(p − 1)/2`, or `None` when that is not an integer.
pub fn genus_formula(p: u32, m: usize) -> Option<u64> {
    let n = (m as u64).checked_sub(2)? * (p as u64 - 1);
    (n % 2 == 0).then_some(n / 2)
}

impl PgonalCurve {
    /// Validates a full branch divisor (infinity included when branched).
    pub fn new(p: u32, field: NumberField, entries: Vec<(ProjPoint, u32)>) -> Result<Self, CurveError> {
        if !is_prime_u64(p as u64) {
            return Err(CurveError::NotPrime(p));
        }
        if let Some((pt, _)) = entries
            .iter()
            .find(|(pt, _)| pt.affine().is_some_and(|a| a.field() != &field))
        {
            return Err(CurveError::ForeignPoint(pt.to_string()));
        }
        let branch = WeightedPointSet::new(p, entries).map_err(|e| match e {
            ProjError::WeightOutOfRange { weight, prime } => {
                CurveError::WeightOutOfRange { weight, p: prime }
            }
            ProjError::DuplicatePoint(s) => CurveError::DuplicatePoint(s),
            other => CurveError::Invariant(other.to_string()),
        })?;
        let m = branch.len();
        if m < 3 {
            return Err(CurveError::TooFewPoints(m));
        }
        let sum = branch.weight_sum();
        if sum % p as u64 != 0 {
            return Err(CurveError::Congruence { sum, p });
        }
        let g = genus_formula(p, m).expect("congruence forces an integral genus");
        if g < 2 {
            return Err(CurveError::GenusTooSmall(g));
        }
        Ok(PgonalCurve { p, field, branch })
    }

    /// Builds a curve from the finite roots of `F(x)`, adding the point at
    /// infinity with the complementary weight when the finite weights do not
    /// already sum to 0 mod p.
    pub fn from_affine(
        p: u32,
        field: NumberField,
        finite: Vec<(FieldElement, u32)>,
    ) -> Result<Self, CurveError> {
        if p == 0 {
            return Err(CurveError::NotPrime(p));
        }
        let sum: u64 = finite.iter().map(|(_, w)| *w as u64).sum();
        let mut entries: Vec<(ProjPoint, u32)> =
            finite.into_iter().map(|(a, w)| (ProjPoint::Finite(a), w)).collect();
        let r = (sum % p as u64) as u32;
        if r != 0 {
            entries.push((ProjPoint::Infinity, p - r));
        }
        PgonalCurve::new(p, field, entries)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn branch(&self) -> &WeightedPointSet {
        &self.branch
    }

    pub fn m(&self) -> usize {
        self.branch.len()
    }

    pub fn genus(&self) -> u64 {
        genus_formula(self.p, self.m()).expect("validated curve")
    }

    /// Coefficients (constant term first) of `Π (x − a_j)^{n_j}` over the
    /// finite branch points.
    pub fn affine_polynomial(&self) -> Vec<FieldElement> {
        let mut poly = vec![self.field.one()];
        for (pt, w) in self.branch.entries() {
            if let Some(a) = pt.affine() {
                for _ in 0..*w {
                    poly = mul_linear(&poly, a);
                }
            }
        }
        poly
    }

    /// The conjugate curve: σ applied to every branch point.
    pub fn conjugate(&self, sigma: usize) -> PgonalCurve {
        assert!(sigma < self.field.automorphism_count(), "automorphism index out of range");
        PgonalCurve {
            p: self.p,
            field: self.field.clone(),
            branch: self.branch.apply_automorphism(sigma),
        }
    }

    /// The same curve viewed over a larger field.
    pub fn embed(&self, e: &FieldEmbedding) -> PgonalCurve {
        assert!(e.source() == &self.field, "embedding source differs from curve field");
        PgonalCurve {
            p: self.p,
            field: e.target().clone(),
            branch: self.branch.embed(e),
        }
    }
}

/// `poly · (x − a)` with coefficients constant term first.
pub(crate) fn mul_linear(poly: &[FieldElement], a: &FieldElement) -> Vec<FieldElement> {
    let f = a.field();
    let mut out = vec![f.zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] = &out[i + 1] + c;
        out[i] = &out[i] - &(c * a);
    }
    out
}

impl fmt::Debug for PgonalCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PgonalCurve(p={}, over {}, {:?})", self.p, self.field.label(), self.branch)
    }
}
