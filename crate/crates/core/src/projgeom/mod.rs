//! The projective line over a number field: points, Möbius maps, weighted
//! point sets and binary quadratic forms.

mod mobius;
mod point;
mod quadratic;
mod weighted;

pub use mobius::{mobius_through_triples, Mat2, Mobius};
pub use point::ProjPoint;
pub use quadratic::{quadratic_twisted_action, BinaryQuadratic};
pub use weighted::{match_weighted_sets, WeightedPointSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProjError {
    #[error("(0 : 0) is not a projective point")]
    ZeroPoint,
    #[error("singular matrix")]
    Singular,
    #[error("triple contains repeated points")]
    RepeatedPoints,
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("weight out of range: {weight} not in 1..{prime}")]
    WeightOutOfRange { weight: u32, prime: u32 },
    #[error("sets have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("sets have different weight multisets")]
    WeightMismatch,
    #[error("matching needs at least 3 points, got {0}")]
    TooFewPoints(usize),
}
