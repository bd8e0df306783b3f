//! Galois descent for cyclic p-gonal curves: the cocycle comparing a curve
//! with its conjugates, the conic it determines, and a model over ℚ or a
//! quadratic field.

mod cocycle;
mod conic;
mod model;

pub use cocycle::{compute_cocycle, GaloisCocycle};
pub use conic::{
    cocycle_action, conic_point, descend_to_conic, diagonalize, quadratic_point_on_conic,
    ConicPoint, DescendedConic, Line, QMatrix, QuadraticPoint,
};
pub use model::{
    descend, model_over_witness_field, parametrize_and_model, DescendOptions, DescentOutcome,
    ModelPolynomial, Variant,
};

use crate::curve::CurveError;
use crate::exactfield::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DescentError {
    #[error("field {0} is not Galois over Q")]
    NotGalois(String),
    #[error("automorphism {sigma} sends the curve to a non-isomorphic conjugate")]
    FieldOfModuli { sigma: usize },
    #[error("no relation-consistent choice of maps exists")]
    CocycleObstruction,
    #[error("maps do not satisfy the cocycle relation")]
    NotACocycle,
    #[error("conic {0} is not in Legendre normal form")]
    NotNormalForm(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
