//! Exact computations with cyclic p-gonal curves `y^p = F(x)` over number
//! fields: branch-divisor arithmetic, uniqueness of the p-gonal group,
//! Galois descent data, and explicit models over ℚ or a quadratic field.

pub mod exactfield;
pub mod projgeom;
pub mod curve;
pub mod descent;
pub mod serial;
pub mod corpus;
