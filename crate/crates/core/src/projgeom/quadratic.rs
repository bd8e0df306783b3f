use crate::exactfield::{FieldElement, NumberField};

use super::{Mat2, ProjError};

/// The binary quadratic form `q0·x² + q1·xy + q2·y²`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct BinaryQuadratic {
    pub q: [FieldElement; 3],
}

impl BinaryQuadratic {
    pub fn new(q0: FieldElement, q1: FieldElement, q2: FieldElement) -> Self {
        BinaryQuadratic { q: [q0, q1, q2] }
    }

    pub fn zero(field: &NumberField) -> Self {
        BinaryQuadratic::new(field.zero(), field.zero(), field.zero())
    }

    /// The monomial basis x², xy, y².
    pub fn basis(field: &NumberField) -> [BinaryQuadratic; 3] {
        let (z, o) = (field.zero(), field.one());
        [
            BinaryQuadratic::new(o.clone(), z.clone(), z.clone()),
            BinaryQuadratic::new(z.clone(), o.clone(), z.clone()),
            BinaryQuadratic::new(z.clone(), z, o),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        BinaryQuadratic::new(&self.q[0] + &o.q[0], &self.q[1] + &o.q[1], &self.q[2] + &o.q[2])
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        BinaryQuadratic::new(&self.q[0] * s, &self.q[1] * s, &self.q[2] * s)
    }

    pub fn apply_automorphism(&self, sigma: usize) -> Self {
        BinaryQuadratic::new(self.q[0].apply(sigma), self.q[1].apply(sigma), self.q[2].apply(sigma))
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        &(&(&self.q[0] * &(x * x)) + &(&self.q[1] * &(x * y))) + &(&self.q[2] * &(y * y))
    }

    /// `Q ∘ M`, i.e. the form `(x, y) ↦ Q(a·x + b·y, c·x + d·y)`.
    pub fn compose(&self, m: &Mat2) -> Self {
        let [q0, q1, q2] = &self.q;
        let two = m.field().from_int(2);
        let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
        let x2 = &(&(q0 * &(a * a)) + &(q1 * &(a * c))) + &(q2 * &(c * c));
        let xy = &(&(&two * &(q0 * &(a * b))) + &(q1 * &(&(a * d) + &(b * c))))
            + &(&two * &(q2 * &(c * d)));
        let y2 = &(&(q0 * &(b * b)) + &(q1 * &(b * d))) + &(q2 * &(d * d));
        BinaryQuadratic::new(x2, xy, y2)
    }

    /// Product of two quadratics as quartic coefficients of x⁴, x³y, …, y⁴.
    pub fn mul_quartic(&self, o: &Self) -> [FieldElement; 5] {
        let f = self.q[0].field();
        let mut out: [FieldElement; 5] = std::array::from_fn(|_| f.zero());
        for i in 0..3 {
            for j in 0..3 {
                out[i + j] = &out[i + j] + &(&self.q[i] * &o.q[j]);
            }
        }
        out
    }
}

/// `det(A) · (σQ ∘ A⁻¹)`. Unchanged when `A` is replaced by a nonzero
/// multiple, so it depends only on the Möbius class of `A`.
pub fn quadratic_twisted_action(
    sigma: usize,
    a: &Mat2,
    q: &BinaryQuadratic,
) -> Result<BinaryQuadratic, ProjError> {
    let inv = a.inverse()?;
    Ok(q.apply_automorphism(sigma).compose(&inv).scale(&a.det()))
}
