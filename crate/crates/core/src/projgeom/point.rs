use std::cmp::Ordering;
use std::fmt;

use crate::exactfield::{FieldElement, FieldEmbedding, NumberField};

use super::ProjError;

/// A point of the projective line over a number field, in canonical form:
/// either an affine value `(u : 1)` or the point at infinity `(1 : 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(FieldElement),
    Infinity,
}

impl ProjPoint {
    pub fn from_homogeneous(u: &FieldElement, v: &FieldElement) -> Result<Self, ProjError> {
        if v.is_zero() {
            if u.is_zero() {
                return Err(ProjError::ZeroPoint);
            }
            return Ok(ProjPoint::Infinity);
        }
        Ok(ProjPoint::Finite(u / v))
    }

    pub fn finite(a: FieldElement) -> Self {
        ProjPoint::Finite(a)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn affine(&self) -> Option<&FieldElement> {
        match self {
            ProjPoint::Finite(a) => Some(a),
            ProjPoint::Infinity => None,
        }
    }

    /// Canonical homogeneous coordinates `(u, v)`.
    pub fn homogeneous(&self, field: &NumberField) -> (FieldElement, FieldElement) {
        match self {
            ProjPoint::Finite(a) => (a.clone(), field.one()),
            ProjPoint::Infinity => (field.one(), field.zero()),
        }
    }

    pub fn apply_automorphism(&self, sigma: usize) -> Self {
        match self {
            ProjPoint::Finite(a) => ProjPoint::Finite(a.apply(sigma)),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        match self {
            ProjPoint::Finite(a) => ProjPoint::Finite(e.apply(a)),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on affine coordinates, infinity last.
impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ProjPoint::Finite(a), ProjPoint::Finite(b)) => a.cmp(b),
            (ProjPoint::Finite(_), ProjPoint::Infinity) => Ordering::Less,
            (ProjPoint::Infinity, ProjPoint::Finite(_)) => Ordering::Greater,
            (ProjPoint::Infinity, ProjPoint::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(a) => write!(f, "{a}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}
