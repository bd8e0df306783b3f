use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactfield::arith::{rational_sqrt_exact, squarefree_decompose};
use crate::exactfield::linalg::{determinant, kernel};
use crate::exactfield::quadform::{
    failing_places, find_point, is_legendre_normal, legendre_normal_form, NormalizedConic,
    PointSearch,
};
use crate::exactfield::{FieldElement, NumberField, Place, Rational};
use crate::projgeom::{quadratic_twisted_action, BinaryQuadratic};

use super::{DescentError, GaloisCocycle};

pub type QMatrix = [[Rational; 3]; 3];

/// The conic attached to a cocycle: three quadrics spanning the invariant
/// space, the quadratic relation among them, and its reduction to a
/// diagonal form in Legendre normal form.
#[derive(Debug, Clone)]
pub struct DescendedConic {
    pub quadrics: [BinaryQuadratic; 3],
    /// Symmetric matrix `G` with `Σ G_ij Q_i Q_j = 0`.
    pub gram: QMatrix,
    /// `Tᵀ G T = diag(diagonal)`.
    pub diagonal: [Rational; 3],
    pub normal: NormalizedConic,
    /// `X = M·Z` takes normal-form coordinates `Z` to quadric coordinates `X`.
    pub transform: QMatrix,
}

impl DescendedConic {
    pub fn form(&self) -> &[BigInt; 3] {
        &self.normal.form
    }

    /// `Σ G_ij Q_i Q_j` as quartic coefficients (all zero for a valid conic).
    pub fn veronese_residual(&self) -> Vec<FieldElement> {
        let f = self.quadrics[0].q[0].field();
        let mut out = vec![f.zero(); 5];
        for i in 0..3 {
            for j in 0..3 {
                let g = f.from_rational(self.gram[i][j].clone());
                for (o, c) in out.iter_mut().zip(self.quadrics[i].mul_quartic(&self.quadrics[j])) {
                    *o = &*o + &(&g * &c);
                }
            }
        }
        out
    }
}

fn flatten(q: &BinaryQuadratic) -> Vec<Rational> {
    q.q.iter().flat_map(|c| c.coords().iter().cloned()).collect()
}

fn unflatten(field: &NumberField, v: &[Rational]) -> BinaryQuadratic {
    let n = field.degree();
    let e = |j: usize| field.element(v[j * n..(j + 1) * n].to_vec()).expect("length");
    BinaryQuadratic::new(e(0), e(1), e(2))
}

/// The action Q ↦ det(A_σ)⁻¹ · (σQ ∘ A_σ) for a lift A_σ of g_σ, computed as
/// the twisted action of g_σ⁻¹. It is a group action exactly when g satisfies
/// the cocycle relation.
pub fn cocycle_action(c: &GaloisCocycle, sigma: usize, q: &BinaryQuadratic) -> BinaryQuadratic {
    let inv = c.map(sigma).inverse();
    quadratic_twisted_action(sigma, inv.matrix(), q).expect("invertible")
}

/// Symmetric congruence diagonalization over ℚ: returns `(T, d)` with
/// `Tᵀ G T = diag(d)`.
pub fn diagonalize(g: &QMatrix) -> (QMatrix, [Rational; 3]) {
    let mut a = g.clone();
    let mut t: QMatrix = std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
    });
    // e_j ← e_j + f·e_i applied to both the form and the basis
    let add = |a: &mut QMatrix, t: &mut QMatrix, j: usize, i: usize, f: &Rational| {
        for r in 0..3 {
            let v = &a[r][i] * f;
            a[r][j] += v;
        }
        for c in 0..3 {
            let v = &a[i][c] * f;
            a[j][c] += v;
        }
        for r in 0..3 {
            let v = &t[r][i] * f;
            t[r][j] += v;
        }
    };
    for i in 0..3 {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..3).find(|&j| !a[j][j].is_zero()) {
                add(&mut a, &mut t, i, j, &Rational::one());
                if a[i][i].is_zero() {
                    add(&mut a, &mut t, i, j, &Rational::one());
                }
            } else if let Some(j) = (i + 1..3).find(|&j| !a[i][j].is_zero()) {
                add(&mut a, &mut t, i, j, &Rational::one());
            }
        }
        if a[i][i].is_zero() {
            continue;
        }
        for j in i + 1..3 {
            if !a[j][i].is_zero() {
                let f = -(&a[j][i] / &a[i][i]);
                add(&mut a, &mut t, j, i, &f);
            }
        }
    }
    let d = std::array::from_fn(|i| a[i][i].clone());
    (t, d)
}

/// Builds the conic of a verified cocycle over Gal(K/ℚ).
pub fn descend_to_conic(c: &GaloisCocycle) -> Result<DescendedConic, DescentError> {
    let field = c.field().clone();
    let n = field.degree();
    let dim = 3 * n;
    // ℚ-basis of K³: θ^k in slot j
    let basis: Vec<BinaryQuadratic> = (0..3)
        .flat_map(|j| {
            let field = field.clone();
            (0..n).map(move |k| {
                let mut q = BinaryQuadratic::zero(&field);
                q.q[j] = field.generator().pow(k as u32);
                if k == 0 {
                    q.q[j] = field.one();
                }
                q
            })
        })
        .collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for s in c.group.elements().skip(1) {
        let cols: Vec<Vec<Rational>> = basis.iter().map(|b| flatten(&cocycle_action(c, s, b))).collect();
        for r in 0..dim {
            rows.push(
                (0..dim)
                    .map(|k| {
                        let v = cols[k][r].clone();
                        if k == r {
                            v - Rational::one()
                        } else {
                            v
                        }
                    })
                    .collect(),
            );
        }
    }
    let fixed = if rows.is_empty() {
        (0..dim)
            .map(|i| (0..dim).map(|k| if i == k { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        kernel(&rows, dim, &())
    };
    if fixed.len() != 3 {
        return Err(DescentError::Invariant(format!(
            "invariant quadrics have dimension {} over Q, expected 3",
            fixed.len()
        )));
    }
    let quadrics: [BinaryQuadratic; 3] = std::array::from_fn(|i| unflatten(&field, &fixed[i]));
    let det = {
        let m: Vec<Vec<FieldElement>> = quadrics.iter().map(|q| q.q.to_vec()).collect();
        determinant(&m, &field)
    };
    if det.is_zero() {
        return Err(DescentError::Invariant("invariant quadrics are dependent over K".into()));
    }

    // quadratic relation: unknowns c11, c22, c33, c12, c13, c23
    let pairs = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];
    let prods: Vec<[FieldElement; 5]> =
        pairs.iter().map(|&(i, j)| quadrics[i].mul_quartic(&quadrics[j])).collect();
    let mut rel_rows = Vec::new();
    for deg in 0..5 {
        for k in 0..n {
            rel_rows.push(prods.iter().map(|p| p[deg].coords()[k].clone()).collect::<Vec<_>>());
        }
    }
    let rel = kernel(&rel_rows, 6, &());
    if rel.len() != 1 {
        return Err(DescentError::Invariant(format!(
            "quadratic relation space has dimension {}, expected 1",
            rel.len()
        )));
    }
    let r = &rel[0];
    let half = |x: &Rational| x / Rational::from_integer(BigInt::from(2));
    let gram: QMatrix = [
        [r[0].clone(), half(&r[3]), half(&r[4])],
        [half(&r[3]), r[1].clone(), half(&r[5])],
        [half(&r[4]), half(&r[5]), r[2].clone()],
    ];
    let gv: Vec<Vec<Rational>> = gram.iter().map(|row| row.to_vec()).collect();
    if determinant(&gv, &()).is_zero() {
        return Err(DescentError::Invariant("singular gram matrix".into()));
    }
    let (t, diagonal) = diagonalize(&gram);
    let normal = legendre_normal_form(&diagonal);
    let transform: QMatrix =
        std::array::from_fn(|i| std::array::from_fn(|j| &t[i][j] * &normal.scale[j]));
    Ok(DescendedConic { quadrics, gram, diagonal, normal, transform })
}

/// Which coordinate line a quadratic point lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Z,
    Y,
    X,
}

/// A point on the conic over ℚ(√e): each coordinate is `u + v·√e`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticPoint {
    pub e: BigInt,
    pub line: Line,
    pub coords: [(Rational, Rational); 3],
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConicPoint {
    Rational([BigInt; 3]),
    Obstructed { places: Vec<Place>, point: QuadraticPoint },
}

impl ConicPoint {
    pub fn is_rational(&self) -> bool {
        matches!(self, ConicPoint::Rational(_))
    }
}

/// Intersection of `a x² + b y² = 0` (the conic restricted to a coordinate
/// line, `a`, `b` the surviving coefficients): `(1 : f√e / b)` where
/// `−ab = f² e`. `None` when the intersection is rational.
fn line_point(a: &BigInt, b: &BigInt) -> Option<(BigInt, Rational)> {
    let (e, f) = squarefree_decompose(&(-(a * b)));
    if e.is_one() {
        return None;
    }
    Some((e, Rational::new(f, b.clone())))
}

/// Decides whether `a x² + b y² + c z² = 0` has a rational point and finds
/// one, or returns the failing places and a point over a quadratic field.
pub fn conic_point(form: &[BigInt; 3], search: PointSearch) -> Result<ConicPoint, DescentError> {
    if form.iter().any(Zero::is_zero) || !is_legendre_normal(form) {
        return Err(DescentError::NotNormalForm(format!("{form:?}")));
    }
    let places = failing_places(form);
    if places.is_empty() {
        let pt = find_point(form, search)
            .ok_or_else(|| DescentError::Invariant("locally solvable conic without a point".into()))?;
        return Ok(ConicPoint::Rational(pt));
    }
    let [a, b, c] = form;
    let zero = || (Rational::zero(), Rational::zero());
    let one = || (Rational::one(), Rational::zero());
    for (line, (p, q)) in [(Line::Z, (a, b)), (Line::Y, (a, c)), (Line::X, (b, c))] {
        let Some((e, t)) = line_point(p, q) else { continue };
        let coords = match line {
            Line::Z => [one(), (Rational::zero(), t), zero()],
            Line::Y => [one(), zero(), (Rational::zero(), t)],
            Line::X => [zero(), one(), (Rational::zero(), t)],
        };
        return Ok(ConicPoint::Obstructed { places, point: QuadraticPoint { e, line, coords } });
    }
    Err(DescentError::Invariant("obstructed conic meets every coordinate line rationally".into()))
}

/// True when the quadratic point satisfies the form exactly.
pub fn quadratic_point_on_conic(form: &[BigInt; 3], pt: &QuadraticPoint) -> bool {
    // (u + v√e)² = u² + e v² + 2uv√e
    let e = Rational::from_integer(pt.e.clone());
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    for (k, (u, v)) in form.iter().zip(&pt.coords) {
        let k = Rational::from_integer(k.clone());
        re += &k * (u * u + &e * v * v);
        im += &k * (Rational::from_integer(BigInt::from(2)) * u * v);
    }
    re.is_zero() && im.is_zero() && rational_sqrt_exact(&e).is_none()
}
