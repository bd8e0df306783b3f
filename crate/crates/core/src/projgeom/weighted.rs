use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::exactfield::modp::Reduction;
use crate::exactfield::{FieldEmbedding, NumberField};

use super::{mobius_through_triples, Mobius, ProjError, ProjPoint};

/// A finite set of distinct points on the projective line, each carrying a
/// weight in `1..p`, stored sorted by point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedPointSet {
    prime: u32,
    entries: Vec<(ProjPoint, u32)>,
}

impl WeightedPointSet {
    pub fn new(prime: u32, mut entries: Vec<(ProjPoint, u32)>) -> Result<Self, ProjError> {
        if let Some((_, w)) = entries.iter().find(|(_, w)| *w == 0 || *w >= prime) {
            return Err(ProjError::WeightOutOfRange { weight: *w, prime });
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(ProjError::DuplicatePoint(w[0].0.to_string()));
        }
        Ok(WeightedPointSet { prime, entries })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(ProjPoint, u32)] {
        &self.entries
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.entries.iter().map(|(p, _)| p)
    }

    pub fn weight_of(&self, p: &ProjPoint) -> Option<u32> {
        self.entries
            .binary_search_by(|(q, _)| q.cmp(p))
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn weight_sum(&self) -> u64 {
        self.entries.iter().map(|(_, w)| *w as u64).sum()
    }

    /// Sorted list of weights.
    pub fn weight_multiset(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self.entries.iter().map(|(_, w)| *w).collect();
        w.sort_unstable();
        w
    }

    /// Some finite point's field, if any point is finite.
    pub fn field(&self) -> Option<&NumberField> {
        self.entries.iter().find_map(|(p, _)| p.affine().map(|a| a.field()))
    }

    fn rebuild(&self, entries: Vec<(ProjPoint, u32)>) -> Self {
        WeightedPointSet::new(self.prime, entries).expect("bijective image of a valid set")
    }

    pub fn map_mobius(&self, g: &Mobius) -> Self {
        self.rebuild(self.entries.iter().map(|(p, w)| (g.apply(p), *w)).collect())
    }

    pub fn apply_automorphism(&self, sigma: usize) -> Self {
        self.rebuild(self.entries.iter().map(|(p, w)| (p.apply_automorphism(sigma), *w)).collect())
    }

    pub fn embed(&self, e: &FieldEmbedding) -> Self {
        self.rebuild(self.entries.iter().map(|(p, w)| (p.embed(e), *w)).collect())
    }

    /// Multiplies every weight by the unit `t` modulo p.
    pub fn scale_weights(&self, t: u32) -> Self {
        let p = self.prime as u64;
        self.rebuild(
            self.entries
                .iter()
                .map(|(q, w)| (q.clone(), ((*w as u64 * t as u64) % p) as u32))
                .collect(),
        )
    }

    /// True when `g` carries this set onto `other`, weights included.
    pub fn maps_onto(&self, g: &Mobius, other: &WeightedPointSet) -> bool {
        self.len() == other.len()
            && self
                .entries
                .iter()
                .all(|(p, w)| other.weight_of(&g.apply(p)) == Some(*w))
    }
}

impl fmt::Debug for WeightedPointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, w)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p}, {w})")?;
        }
        write!(f, "}} mod {}", self.prime)
    }
}

/// Points reduced modulo a split prime, ∞ as (1 : 0).
struct ModFilter {
    red: Reduction,
    src: Vec<(u64, u64)>,
    dst: Vec<(u64, u64)>,
    dst_weight: HashMap<(u64, u64), u32>,
}

impl ModFilter {
    fn reduce_point(red: &Reduction, p: &ProjPoint) -> Option<(u64, u64)> {
        match p {
            ProjPoint::Infinity => Some((1, 0)),
            ProjPoint::Finite(x) => Some((red.reduce(x)?, 1)),
        }
    }

    fn reduce_set(red: &Reduction, s: &WeightedPointSet) -> Option<Vec<(u64, u64)>> {
        let pts: Option<Vec<_>> = s.entries.iter().map(|(p, _)| Self::reduce_point(red, p)).collect();
        let pts = pts?;
        let distinct: HashSet<_> = pts.iter().collect();
        (distinct.len() == pts.len()).then_some(pts)
    }

    /// Needs both sets integral and still separated mod q; then every true
    /// map reduces to the mod-q map through the reduced triples.
    fn new(field: &NumberField, a: &WeightedPointSet, b: &WeightedPointSet) -> Option<Self> {
        Reduction::candidates(field, 10_007).take(40).find_map(|red| {
            let src = Self::reduce_set(&red, a)?;
            let dst = Self::reduce_set(&red, b)?;
            let dst_weight = dst.iter().zip(&b.entries).map(|(p, (_, w))| (*p, *w)).collect();
            Some(ModFilter { red, src, dst, dst_weight })
        })
    }

    fn frame(&self, p: [(u64, u64); 3]) -> [u64; 4] {
        let r = &self.red;
        let det = |x: (u64, u64), y: (u64, u64)| r.sub(r.mul(x.0, y.1), r.mul(y.0, x.1));
        let inv = r.inv(det(p[0], p[1])).expect("distinct mod q");
        let l1 = r.mul(det(p[2], p[1]), inv);
        let l2 = r.mul(det(p[0], p[2]), inv);
        [r.mul(l1, p[0].0), r.mul(l2, p[1].0), r.mul(l1, p[0].1), r.mul(l2, p[1].1)]
    }

    fn normalize(&self, (u, v): (u64, u64)) -> (u64, u64) {
        if v == 0 {
            (1, 0)
        } else {
            (self.red.mul(u, self.red.inv(v).expect("q prime")), 1)
        }
    }

    /// Whether the map src[0..3] ↦ dst[t] carries every point of A onto a
    /// point of B of the same weight, modulo q.
    fn admits(&self, a: &WeightedPointSet, t: [usize; 3]) -> bool {
        let r = &self.red;
        let fs = self.frame([self.src[0], self.src[1], self.src[2]]);
        let fd = self.frame([self.dst[t[0]], self.dst[t[1]], self.dst[t[2]]]);
        let adj = [fs[3], r.sub(0, fs[1]), r.sub(0, fs[2]), fs[0]];
        let m = [
            r.add(r.mul(fd[0], adj[0]), r.mul(fd[1], adj[2])),
            r.add(r.mul(fd[0], adj[1]), r.mul(fd[1], adj[3])),
            r.add(r.mul(fd[2], adj[0]), r.mul(fd[3], adj[2])),
            r.add(r.mul(fd[2], adj[1]), r.mul(fd[3], adj[3])),
        ];
        self.src.iter().zip(&a.entries).skip(3).all(|(&(u, v), (_, w))| {
            let img = (r.add(r.mul(m[0], u), r.mul(m[1], v)), r.add(r.mul(m[2], u), r.mul(m[3], v)));
            self.dst_weight.get(&self.normalize(img)) == Some(w)
        })
    }
}

/// All Möbius maps carrying A onto B with weights preserved, sorted and
/// deduplicated. Candidates are the images of the first three points of A;
/// each is screened modulo a split prime before the exact check.
pub fn match_weighted_sets(
    field: &NumberField,
    a: &WeightedPointSet,
    b: &WeightedPointSet,
) -> Result<Vec<Mobius>, ProjError> {
    if a.len() != b.len() {
        return Err(ProjError::SizeMismatch(a.len(), b.len()));
    }
    if a.len() < 3 {
        return Err(ProjError::TooFewPoints(a.len()));
    }
    if a.weight_multiset() != b.weight_multiset() {
        return Err(ProjError::WeightMismatch);
    }
    let filter = if a.len() > 3 { ModFilter::new(field, a, b) } else { None };
    let src: Vec<&(ProjPoint, u32)> = a.entries.iter().take(3).collect();
    let fiber = |w: u32| -> Vec<usize> {
        (0..b.len()).filter(|&i| b.entries[i].1 == w).collect()
    };
    let (f0, f1, f2) = (fiber(src[0].1), fiber(src[1].1), fiber(src[2].1));
    let mut out = Vec::new();
    for &i in &f0 {
        for &j in &f1 {
            if j == i {
                continue;
            }
            for &k in &f2 {
                if k == i || k == j {
                    continue;
                }
                if let Some(f) = &filter {
                    if !f.admits(a, [i, j, k]) {
                        continue;
                    }
                }
                let g = mobius_through_triples(
                    field,
                    [&src[0].0, &src[1].0, &src[2].0],
                    [&b.entries[i].0, &b.entries[j].0, &b.entries[k].0],
                )?;
                if a.maps_onto(&g, b) {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(f: &NumberField, p: u32, pts: &[(Option<i64>, u32)]) -> WeightedPointSet {
        let entries = pts
            .iter()
            .map(|(x, w)| {
                let pt = match x {
                    Some(n) => ProjPoint::Finite(f.from_int(*n)),
                    None => ProjPoint::Infinity,
                };
                (pt, *w)
            })
            .collect();
        WeightedPointSet::new(p, entries).unwrap()
    }

    #[test]
    fn anharmonic_group() {
        let f = NumberField::rationals();
        let a = set(&f, 2, &[(Some(0), 1), (Some(1), 1), (None, 1)]);
        let maps = match_weighted_sets(&f, &a, &a).unwrap();
        assert_eq!(maps.len(), 6);
        assert!(maps.iter().all(|g| a.maps_onto(g, &a)));
    }

    #[test]
    fn distinct_weights_force_identity() {
        let f = NumberField::rationals();
        let a = set(&f, 5, &[(Some(0), 1), (Some(1), 2), (None, 3)]);
        let maps = match_weighted_sets(&f, &a, &a).unwrap();
        assert_eq!(maps, vec![Mobius::identity(&f)]);
    }

    #[test]
    fn doubling() {
        let f = NumberField::rationals();
        let a = set(&f, 2, &[(Some(0), 1), (Some(1), 1), (None, 1)]);
        let b = set(&f, 2, &[(Some(0), 1), (Some(2), 1), (None, 1)]);
        let maps = match_weighted_sets(&f, &a, &b).unwrap();
        assert!(maps.contains(&Mobius::from_ints(&f, [[2, 0], [0, 1]]).unwrap()));
    }

    #[test]
    fn rejects_mismatch() {
        let f = NumberField::rationals();
        let a = set(&f, 5, &[(Some(0), 1), (Some(1), 1), (None, 3)]);
        let b = set(&f, 5, &[(Some(0), 1), (Some(1), 2), (None, 2)]);
        assert_eq!(match_weighted_sets(&f, &a, &b), Err(ProjError::WeightMismatch));
        assert!(WeightedPointSet::new(5, vec![(ProjPoint::Infinity, 5)]).is_err());
        assert!(WeightedPointSet::new(
            5,
            vec![(ProjPoint::Infinity, 1), (ProjPoint::Infinity, 2)]
        )
        .is_err());
    }
}
