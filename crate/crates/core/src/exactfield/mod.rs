//! Exact arithmetic over ℚ and over number fields ℚ[x]/(f).

pub mod arith;
pub mod compositum;
pub mod field;
pub mod irreducible;
pub mod linalg;
pub mod modp;
pub(crate) mod numeric;
pub mod poly;
pub mod quadform;
pub mod rational;

pub use field::{FieldElement, FieldEmbedding, FieldError, GaloisGroup, NumberField, MAX_DEGREE};
pub use linalg::{linear_solve, LinearSolution, Scalar};
pub use poly::QPoly;
pub use quadform::{norm_equation, NormError, NormSolution, Place};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
