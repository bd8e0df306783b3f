use crate::curve::PgonalCurve;
use crate::exactfield::{GaloisGroup, NumberField, Rational};
use crate::projgeom::{match_weighted_sets, Mobius};

use super::DescentError;

/// A family σ ↦ g_σ of Möbius maps over `K`, indexed by Gal(K/ℚ), with
/// `g_{στ} = (g_τ)^σ ∘ g_σ`.
#[derive(Debug, Clone)]
pub struct GaloisCocycle {
    pub group: GaloisGroup,
    pub maps: Vec<Mobius>,
    /// Set when more than one relation-consistent selection exists.
    pub multiple_selections: bool,
}

impl GaloisCocycle {
    /// Wraps explicit maps, checking the cocycle relation.
    pub fn new(field: &NumberField, maps: Vec<Mobius>) -> Result<Self, DescentError> {
        if !field.is_galois() {
            return Err(DescentError::NotGalois(field.label().to_string()));
        }
        let group = field.galois_group();
        if maps.len() != group.order() || maps.iter().any(|g| g.field() != field) {
            return Err(DescentError::NotACocycle);
        }
        let c = GaloisCocycle { group, maps, multiple_selections: false };
        if !c.verify() {
            return Err(DescentError::NotACocycle);
        }
        Ok(c)
    }

    pub fn field(&self) -> &NumberField {
        self.group.field()
    }

    pub fn map(&self, sigma: usize) -> &Mobius {
        &self.maps[sigma]
    }

    /// Checks `g_id = id` and the relation for every pair.
    pub fn verify(&self) -> bool {
        self.maps[0].is_identity()
            && self.group.elements().all(|s| {
                self.group
                    .elements()
                    .all(|t| relation_holds(&self.group, &self.maps, s, t))
            })
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.iter().all(Mobius::is_identity)
    }

    /// For σ of order 2 and the canonical lift `A` of g_σ, the rational `c`
    /// with `A·σ(A) = c·I`.
    pub fn lift_scalar(&self, sigma: usize) -> Option<Rational> {
        if self.group.element_order(sigma) != 2 {
            return None;
        }
        let a = self.maps[sigma].matrix();
        a.mul(&a.apply_automorphism(sigma)).scalar_value()?.as_rational()
    }
}

fn relation_holds(group: &GaloisGroup, maps: &[Mobius], s: usize, t: usize) -> bool {
    let st = group.compose(s, t);
    maps[st] == maps[t].conjugate(s).compose(&maps[s])
}

/// Candidate lists per σ: the identity first when it is a candidate, then
/// canonical order.
fn candidates(curve: &PgonalCurve, group: &GaloisGroup) -> Result<Vec<Vec<Mobius>>, DescentError> {
    let field = curve.field();
    let id = Mobius::identity(field);
    let mut out = Vec::with_capacity(group.order());
    for s in group.elements() {
        let conj = curve.branch().apply_automorphism(s);
        let mut maps = match_weighted_sets(field, curve.branch(), &conj)
            .map_err(|e| DescentError::Invariant(e.to_string()))?;
        if maps.is_empty() {
            return Err(DescentError::FieldOfModuli { sigma: s });
        }
        if let Some(pos) = maps.iter().position(|g| g == &id) {
            let g = maps.remove(pos);
            maps.insert(0, g);
        }
        if s == 0 {
            maps.truncate(1);
        }
        out.push(maps);
    }
    Ok(out)
}

struct Search<'a> {
    group: &'a GaloisGroup,
    cands: &'a [Vec<Mobius>],
    chosen: Vec<Option<Mobius>>,
    found: Vec<Vec<Mobius>>,
}

impl Search<'_> {
    fn consistent(&self) -> bool {
        let n = self.group.order();
        for s in 0..n {
            let Some(gs) = &self.chosen[s] else { continue };
            for t in 0..n {
                let Some(gt) = &self.chosen[t] else { continue };
                let st = self.group.compose(s, t);
                let Some(gst) = &self.chosen[st] else { continue };
                if *gst != gt.conjugate(s).compose(gs) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, idx: usize) {
        if self.found.len() >= 2 {
            return;
        }
        if idx == self.group.order() {
            self.found
                .push(self.chosen.iter().map(|g| g.clone().expect("assigned")).collect());
            return;
        }
        for g in &self.cands[idx] {
            self.chosen[idx] = Some(g.clone());
            if self.consistent() {
                self.run(idx + 1);
            }
            if self.found.len() >= 2 {
                break;
            }
        }
        self.chosen[idx] = None;
    }
}

/// Selects g_σ from the Möbius maps carrying the branch divisor onto its
/// σ-conjugate (weights preserved) so that the cocycle relation holds over
/// the whole Galois group. Candidates are tried identity first, then in
/// canonical order; the first consistent selection is returned.
pub fn compute_cocycle(curve: &PgonalCurve) -> Result<GaloisCocycle, DescentError> {
    let field = curve.field();
    if !field.is_galois() {
        return Err(DescentError::NotGalois(field.label().to_string()));
    }
    let group = field.galois_group();
    let cands = candidates(curve, &group)?;
    let mut search = Search {
        group: &group,
        cands: &cands,
        chosen: vec![None; group.order()],
        found: Vec::new(),
    };
    search.run(0);
    let multiple = search.found.len() > 1;
    let Some(maps) = search.found.into_iter().next() else {
        return Err(DescentError::CocycleObstruction);
    };
    let c = GaloisCocycle { group, maps, multiple_selections: multiple };
    debug_assert!(c.verify());
    Ok(c)
}
