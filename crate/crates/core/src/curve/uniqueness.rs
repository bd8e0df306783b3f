use std::fmt;

use crate::exactfield::arith::is_prime_u64;

use super::{genus_formula, CurveError};

/// Why the p-gonal group is or is not unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    CastelnuovoSeveri,
    WoottonGeneric,
    /// One of the exceptional shapes; `&str` is the shape tag, e.g. `(3,7)`
    /// or `(2p,p)`.
    Exceptional(&'static str),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::CastelnuovoSeveri => write!(f, "castelnuovo-severi"),
            Reason::WoottonGeneric => write!(f, "wootton-generic"),
            Reason::Exceptional(tag) => write!(f, "exceptional-{tag}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniquenessVerdict {
    pub unique: bool,
    pub reason: Reason,
}

fn exceptional_shape(p: u32, m: usize) -> Option<&'static str> {
    match (m, p) {
        (3, 7) => Some("(3,7)"),
        (4, 3) => Some("(4,3)"),
        (4, 5) => Some("(4,5)"),
        (5, 3) => Some("(5,3)"),
        (m, p) if p >= 5 && m == p as usize => Some("(p,p)"),
        (m, p) if p >= 3 && m == 2 * p as usize => Some("(2p,p)"),
        _ => None,
    }
}

/// Decides whether a cyclic p-gonal curve with `m` branch points has a unique
/// p-gonal group.
pub fn uniqueness_classify(p: u32, m: usize) -> Result<UniquenessVerdict, CurveError> {
    if !is_prime_u64(p as u64) {
        return Err(CurveError::NotPrime(p));
    }
    if m < 3 {
        return Err(CurveError::TooFewPoints(m));
    }
    if p == 2 && m % 2 == 1 {
        return Err(CurveError::InvalidShape { p, m, why: "hyperelliptic branch count must be even" });
    }
    let g = genus_formula(p, m).expect("shape checked");
    if g < 2 {
        return Err(CurveError::GenusTooSmall(g));
    }
    let verdict = if 2 * (p as usize) < m {
        UniquenessVerdict { unique: true, reason: Reason::CastelnuovoSeveri }
    } else if let Some(tag) = exceptional_shape(p, m) {
        UniquenessVerdict { unique: false, reason: Reason::Exceptional(tag) }
    } else {
        UniquenessVerdict { unique: true, reason: Reason::WoottonGeneric }
    };
    Ok(verdict)
}
