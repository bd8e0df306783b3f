use std::cmp::Ordering;
use std::fmt;

use crate::exactfield::{FieldElement, FieldEmbedding, NumberField};

use super::{ProjError, ProjPoint};

/// A raw 2×2 matrix `[[a, b], [c, d]]` over a number field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(field: &NumberField, e: [[i64; 2]; 2]) -> Self {
        Mat2::new(
            field.from_int(e[0][0]),
            field.from_int(e[0][1]),
            field.from_int(e[1][0]),
            field.from_int(e[1][1]),
        )
    }

    pub fn identity(field: &NumberField) -> Self {
        Mat2::new(field.one(), field.zero(), field.zero(), field.one())
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn det(&self) -> FieldElement {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }

    pub fn adjugate(&self) -> Mat2 {
        Mat2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn inverse(&self) -> Result<Mat2, ProjError> {
        let det = self.det();
        if det.is_zero() {
            return Err(ProjError::Singular);
        }
        let inv = det.inverse().expect("nonzero determinant");
        Ok(self.adjugate().scale(&inv))
    }

    pub fn scale(&self, s: &FieldElement) -> Mat2 {
        Mat2::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    pub fn apply_automorphism(&self, sigma: usize) -> Mat2 {
        Mat2::new(
            self.a.apply(sigma),
            self.b.apply(sigma),
            self.c.apply(sigma),
            self.d.apply(sigma),
        )
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Mat2 {
        Mat2::new(e.apply(&self.a), e.apply(&self.b), e.apply(&self.c), e.apply(&self.d))
    }

    pub fn entries(&self) -> [&FieldElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `Some(λ)` when the matrix is λ·I.
    pub fn scalar_value(&self) -> Option<FieldElement> {
        (self.b.is_zero() && self.c.is_zero() && self.a == self.d).then(|| self.a.clone())
    }
}

/// An element of PGL₂ over a number field, stored as its canonical matrix
/// (first nonzero entry in row-major order equal to 1). Equality and order
/// are those of the canonical matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mobius(Mat2);

impl std::hash::Hash for Mat2 {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for e in self.entries() {
            e.hash(state);
        }
    }
}

impl Mobius {
    pub fn new(m: Mat2) -> Result<Self, ProjError> {
        if m.det().is_zero() {
            return Err(ProjError::Singular);
        }
        let lead = m
            .entries()
            .into_iter()
            .find(|e| !e.is_zero())
            .cloned()
            .expect("nonsingular matrix has a nonzero entry");
        let inv = lead.inverse().expect("nonzero");
        Ok(Mobius(m.scale(&inv)))
    }

    pub fn identity(field: &NumberField) -> Self {
        Mobius(Mat2::identity(field))
    }

    pub fn from_ints(field: &NumberField, e: [[i64; 2]; 2]) -> Result<Self, ProjError> {
        Mobius::new(Mat2::from_ints(field, e))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn field(&self) -> &NumberField {
        self.0.field()
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Mat2::identity(self.field())
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let m = &self.0;
        let (u, v) = p.homogeneous(m.field());
        let nu = &(&m.a * &u) + &(&m.b * &v);
        let nv = &(&m.c * &u) + &(&m.d * &v);
        ProjPoint::from_homogeneous(&nu, &nv).expect("invertible map")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius::new(self.0.mul(&other.0)).expect("product of invertible maps")
    }

    pub fn inverse(&self) -> Mobius {
        Mobius::new(self.0.adjugate()).expect("invertible")
    }

    /// Applies σ to the matrix entries (the map g^σ).
    pub fn conjugate(&self, sigma: usize) -> Mobius {
        Mobius::new(self.0.apply_automorphism(sigma)).expect("invertible")
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Mobius {
        Mobius::new(self.0.embed(e)).expect("invertible")
    }
}

impl PartialOrd for Mobius {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the canonical entries.
impl Ord for Mobius {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .entries()
            .into_iter()
            .zip(other.0.entries())
            .map(|(x, y)| x.cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.0.a, self.0.b, self.0.c, self.0.d)
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> (({})x + ({})) / (({})x + ({}))", self.0.a, self.0.b, self.0.c, self.0.d)
    }
}

/// Matrix sending (1:0), (0:1), (1:1) to `p1`, `p2`, `p3`.
fn frame(field: &NumberField, pts: [&ProjPoint; 3]) -> Result<Mat2, ProjError> {
    let (u1, v1) = pts[0].homogeneous(field);
    let (u2, v2) = pts[1].homogeneous(field);
    let (u3, v3) = pts[2].homogeneous(field);
    let det = |a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement| {
        &(a * d) - &(b * c)
    };
    let d12 = det(&u1, &u2, &v1, &v2);
    let d32 = det(&u3, &u2, &v3, &v2);
    let d13 = det(&u1, &u3, &v1, &v3);
    if d12.is_zero() || d32.is_zero() || d13.is_zero() {
        return Err(ProjError::RepeatedPoints);
    }
    let inv = d12.inverse().expect("nonzero");
    let l1 = &d32 * &inv;
    let l2 = &d13 * &inv;
    Ok(Mat2::new(&l1 * &u1, &l2 * &u2, &l1 * &v1, &l2 * &v2))
}

/// The unique Möbius map sending `src[i]` to `dst[i]` for i = 0, 1, 2.
pub fn mobius_through_triples(
    field: &NumberField,
    src: [&ProjPoint; 3],
    dst: [&ProjPoint; 3],
) -> Result<Mobius, ProjError> {
    let fs = frame(field, src)?;
    let fd = frame(field, dst)?;
    Mobius::new(fd.mul(&fs.adjugate()))
}
