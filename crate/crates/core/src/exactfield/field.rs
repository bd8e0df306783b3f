//! Number fields ℚ[x]/(f) with exact element arithmetic and an explicit
//! list of field automorphisms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};
use thiserror::Error;

use super::irreducible::find_factor;
use super::linalg::Scalar;
use super::numeric::{complex_inverse, complex_roots};
use super::poly::QPoly;
use super::rational::{format_rational, rationalize, Rational};

/// Largest degree accepted by [`NumberField::new`].
pub const MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("minimal polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("minimal polynomial is reducible over Q: factor {0}")]
    Reducible(QPoly),
    #[error("automorphism images do not close into a group")]
    NotAGroup,
    #[error("elements belong to different fields ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("automorphism index {index} out of range (field has {count})")]
    BadAutomorphism { index: usize, count: usize },
    #[error("coordinate vector has length {got}, field degree is {expected}")]
    BadLength { got: usize, expected: usize },
}

struct FieldData {
    minpoly: QPoly,
    label: String,
    degree: usize,
    /// Coordinates of θ^k for n <= k <= 2n - 2.
    high_powers: Vec<Vec<Rational>>,
    /// Images of θ, identity first.
    automorphisms: Vec<Vec<Rational>>,
    /// `auto_mats[s][k]` = coordinates of σ_s(θ)^k.
    auto_mats: Vec<Vec<Vec<Rational>>>,
    compose: Vec<Vec<usize>>,
}

/// A number field ℚ(θ) = ℚ[x]/(minpoly). Cloning is cheap.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({}: {})", self.0.label, self.0.minpoly)
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }
}

impl Eq for NumberField {}

fn reduce_powers(minpoly: &QPoly) -> Vec<Vec<Rational>> {
    let n = minpoly.degree().unwrap();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // θ^n = -(c_0 + ... + c_{n-1} θ^{n-1})
    let mut cur: Vec<Rational> = (0..n).map(|k| -minpoly.coeff(k)).collect();
    for _ in n..=(2 * n).saturating_sub(2).max(n) {
        out.push(cur.clone());
        // multiply by θ
        let top = cur[n - 1].clone();
        let mut next = vec![Rational::zero(); n];
        for k in (1..n).rev() {
            next[k] = cur[k - 1].clone();
        }
        for k in 0..n {
            next[k] += &top * -minpoly.coeff(k);
        }
        cur = next;
    }
    out
}

impl NumberField {
    /// Builds ℚ[x]/(minpoly), verifying irreducibility and enumerating the
    /// automorphisms of the field.
    pub fn new(minpoly: QPoly, label: &str) -> Result<Self, FieldError> {
        let n = minpoly.degree().ok_or(FieldError::NotMonic)?;
        if n == 0 || !minpoly.is_monic() {
            return Err(FieldError::NotMonic);
        }
        if n > MAX_DEGREE {
            return Err(FieldError::DegreeTooLarge(n));
        }
        if let Some(f) = find_factor(&minpoly) {
            return Err(FieldError::Reducible(f.monic()));
        }
        let bare = Self::bare(minpoly.clone(), label);
        let roots = bare.roots_of(&minpoly);
        let images: Vec<Vec<Rational>> = roots.into_iter().map(|r| r.coords).collect();
        Self::with_automorphisms(minpoly, label, images)
    }

    pub fn rationals() -> Self {
        Self::new(QPoly::from_ints(&[0, 1]), "Q").expect("Q is a field")
    }

    /// ℚ(√d) presented by x² − d.
    pub fn quadratic(d: i64, label: &str) -> Result<Self, FieldError> {
        Self::new(QPoly::from_ints(&[-d, 0, 1]), label)
    }

    pub(crate) fn bare(minpoly: QPoly, label: &str) -> Self {
        let degree = minpoly.degree().unwrap();
        NumberField(Arc::new(FieldData {
            high_powers: reduce_powers(&minpoly),
            minpoly,
            label: label.to_string(),
            degree,
            automorphisms: Vec::new(),
            auto_mats: Vec::new(),
            compose: Vec::new(),
        }))
    }

    /// Assembles a field from a trusted minimal polynomial and a list of
    /// automorphism images of the generator (checked to be roots and to
    /// close into a group).
    pub(crate) fn with_automorphisms(
        minpoly: QPoly,
        label: &str,
        images: Vec<Vec<Rational>>,
    ) -> Result<Self, FieldError> {
        let bare = Self::bare(minpoly.clone(), label);
        let n = bare.degree();
        let gen = bare.generator();
        let mut elems: Vec<FieldElement> = Vec::new();
        for img in images {
            let e = bare.element(img)?;
            if !bare.eval_poly(&minpoly, &e).is_zero() {
                return Err(FieldError::NotAGroup);
            }
            if !elems.contains(&e) {
                elems.push(e);
            }
        }
        elems.sort_by(|a, b| {
            (a != &gen).cmp(&(b != &gen)).then_with(|| a.cmp(b))
        });
        if elems.first() != Some(&gen) {
            return Err(FieldError::NotAGroup);
        }
        let auto_mats: Vec<Vec<Vec<Rational>>> = elems
            .iter()
            .map(|h| {
                let mut rows = Vec::with_capacity(n);
                let mut pw = bare.one();
                for _ in 0..n {
                    rows.push(pw.coords.clone());
                    pw = &pw * h;
                }
                rows
            })
            .collect();
        let count = elems.len();
        let mut compose = vec![vec![0usize; count]; count];
        for i in 0..count {
            for j in 0..count {
                // (σ_i ∘ σ_j)(θ) = σ_i(h_j) = h_j(h_i)
                let img = apply_matrix(&auto_mats[i], &elems[j].coords);
                let k = elems
                    .iter()
                    .position(|e| e.coords == img)
                    .ok_or(FieldError::NotAGroup)?;
                compose[i][j] = k;
            }
        }
        for row in &compose {
            if !row.contains(&0) {
                return Err(FieldError::NotAGroup);
            }
        }
        let data = FieldData {
            high_powers: reduce_powers(&minpoly),
            minpoly,
            label: label.to_string(),
            degree: n,
            automorphisms: elems.into_iter().map(|e| e.coords).collect(),
            auto_mats,
            compose,
        };
        Ok(NumberField(Arc::new(data)))
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.0.minpoly
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_rational_field(&self) -> bool {
        self.0.degree == 1
    }

    pub fn automorphism_count(&self) -> usize {
        self.0.automorphisms.len()
    }

    /// Galois over ℚ iff the automorphism count equals the degree.
    pub fn is_galois(&self) -> bool {
        self.automorphism_count() == self.degree()
    }

    pub fn automorphism_image(&self, sigma: usize) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: self.0.automorphisms[sigma].clone(),
        }
    }

    /// Index of σ_i ∘ σ_j.
    pub fn compose_automorphisms(&self, i: usize, j: usize) -> usize {
        self.0.compose[i][j]
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q;
        FieldElement { field: self.clone(), coords }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(n.into()))
    }

    /// The class of x in ℚ[x]/(minpoly).
    pub fn generator(&self) -> FieldElement {
        let n = self.degree();
        if n == 1 {
            return self.from_rational(-self.0.minpoly.coeff(0));
        }
        let mut coords = vec![Rational::zero(); n];
        coords[1] = Rational::one();
        FieldElement { field: self.clone(), coords }
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<FieldElement, FieldError> {
        if coords.len() != self.degree() {
            return Err(FieldError::BadLength {
                got: coords.len(),
                expected: self.degree(),
            });
        }
        Ok(FieldElement { field: self.clone(), coords })
    }

    /// Element Σ c_k θ^k for an arbitrary-length coefficient list.
    pub fn from_poly(&self, p: &QPoly) -> FieldElement {
        let r = p.rem(&self.0.minpoly);
        let mut coords = vec![Rational::zero(); self.degree()];
        for (k, c) in r.coeffs().iter().enumerate() {
            coords[k] = c.clone();
        }
        FieldElement { field: self.clone(), coords }
    }

    pub fn eval_poly(&self, p: &QPoly, x: &FieldElement) -> FieldElement {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * x) + &self.from_rational(c.clone());
        }
        acc
    }

    /// Applies the automorphism with index `sigma`.
    pub fn apply(&self, sigma: usize, a: &FieldElement) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: apply_matrix(&self.0.auto_mats[sigma], &a.coords),
        }
    }

    pub fn checked_apply(&self, sigma: usize, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if sigma >= self.automorphism_count() {
            return Err(FieldError::BadAutomorphism {
                index: sigma,
                count: self.automorphism_count(),
            });
        }
        if a.field != *self {
            return Err(FieldError::FieldMismatch(
                self.label().to_string(),
                a.field.label().to_string(),
            ));
        }
        Ok(self.apply(sigma, a))
    }

    /// All roots of `g` lying in this field. Candidates come from a floating
    /// point Vandermonde solve over every assignment of roots of `g` to the
    /// complex embeddings; each candidate is checked exactly.
    pub fn roots_of(&self, g: &QPoly) -> Vec<FieldElement> {
        let n = self.degree();
        let Some(d) = g.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let gsq = g.gcd(&g.derivative());
        let g = if gsq.degree() == Some(0) { g.clone() } else { g.div_rem(&gsq).0 };
        let d = g.degree().unwrap();
        let emb = complex_roots(&self.0.minpoly);
        let targets = complex_roots(&g);
        let vand: Vec<Vec<Complex64>> = emb
            .iter()
            .map(|z| (0..n).map(|k| z.powu(k as u32)).collect())
            .collect();
        let Some(vinv) = complex_inverse(&vand) else {
            return Vec::new();
        };
        let total = (d as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        assert!(total <= 5_000_000, "root search space too large");
        let mut found: Vec<FieldElement> = Vec::new();
        let mut idx = vec![0usize; n];
        'outer: loop {
            let w: Vec<Complex64> = idx.iter().map(|&k| targets[k]).collect();
            let mut coords = Vec::with_capacity(n);
            let mut ok = true;
            for row in &vinv {
                let c: Complex64 = row.iter().zip(&w).map(|(a, b)| a * b).sum();
                if c.im.abs() > 1e-6 * (1.0 + c.re.abs()) {
                    ok = false;
                    break;
                }
                match rationalize(c.re, 100_000, 1e-9) {
                    Some(q) => coords.push(q),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let cand = FieldElement { field: self.clone(), coords };
                if !found.contains(&cand) && self.eval_poly(&g, &cand).is_zero() {
                    found.push(cand);
                }
            }
            for pos in 0..n {
                idx[pos] += 1;
                if idx[pos] < d {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
        found.sort();
        found
    }

    /// A square root of the rational `q` inside the field, if one exists.
    pub fn sqrt_of_rational(&self, q: &Rational) -> Option<FieldElement> {
        let g = QPoly::new(vec![-q.clone(), Rational::zero(), Rational::one()]);
        self.roots_of(&g).into_iter().next()
    }

    pub fn galois_group(&self) -> GaloisGroup {
        GaloisGroup::new(self.clone())
    }

    fn mul_coords(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = self.degree();
        if n == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<Rational> = prod[..n].to_vec();
        for (k, c) in prod[n..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.0.high_powers[k]) {
                *o += c * r;
            }
        }
        out
    }
}

fn apply_matrix(rows: &[Vec<Rational>], coords: &[Rational]) -> Vec<Rational> {
    let n = coords.len();
    let mut out = vec![Rational::zero(); n];
    for (c, row) in coords.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            *o += c * r;
        }
    }
    out
}

/// An element of a [`NumberField`], stored as its reduced coordinate vector
/// in the power basis 1, θ, …, θ^{n−1}.
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on coordinates, rationals ordered numerically.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// `Some(q)` when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coords[0].clone())
    }

    fn check_same(&self, o: &Self) -> Result<(), FieldError> {
        if self.field != o.field {
            return Err(FieldError::FieldMismatch(
                self.field.label().to_string(),
                o.field.label().to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, FieldError> {
        self.check_same(o)?;
        Ok(self + o)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, FieldError> {
        self.check_same(o)?;
        Ok(self - o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, FieldError> {
        self.check_same(o)?;
        Ok(self * o)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, FieldError> {
        self.check_same(o)?;
        Ok(self * &o.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        let f = &self.field;
        if f.is_galois() {
            // a⁻¹ = (product of the other conjugates) / N(a)
            let mut rest = f.one();
            for s in 1..f.automorphism_count() {
                rest = &rest * &f.apply(s, self);
            }
            let norm = (self * &rest).as_rational().expect("norm is rational");
            return Ok(rest.scale(&norm.recip()));
        }
        let a = QPoly::new(self.coords.clone());
        let (g, s, _) = a.ext_gcd(self.field.minpoly());
        debug_assert!(g.degree() == Some(0));
        Ok(self.field.from_poly(&s))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn apply(&self, sigma: usize) -> Self {
        self.field.apply(sigma, self)
    }

    /// Field norm down to ℚ (product of all automorphic images; only
    /// meaningful for Galois fields).
    pub fn galois_norm(&self) -> Rational {
        let f = &self.field;
        let mut acc = f.one();
        for s in 0..f.automorphism_count() {
            acc = &acc * &f.apply(s, self);
        }
        acc.as_rational().expect("norm of a Galois field element is rational")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return write!(f, "{}", format_rational(&self.coords[0]));
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = format_rational(c);
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*a")?,
                _ => write!(f, "({c})*a^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        assert!(self.field == o.field, "field mismatch in add");
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        assert!(self.field == o.field, "field mismatch in sub");
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        assert!(self.field == o.field, "field mismatch in mul");
        FieldElement {
            field: self.field.clone(),
            coords: self.field.mul_coords(&self.coords, &o.coords),
        }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, o: &FieldElement) -> FieldElement {
        self.checked_div(o).expect("invalid division")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                (&self).$m(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Scalar for FieldElement {
    type Ctx = NumberField;
    fn zero_in(ctx: &NumberField) -> Self {
        ctx.zero()
    }
    fn one_in(ctx: &NumberField) -> Self {
        ctx.one()
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
}

/// The automorphism group of a field as a multiplication table on indices
/// (index 0 is the identity).
#[derive(Debug, Clone)]
pub struct GaloisGroup {
    field: NumberField,
    table: Vec<Vec<usize>>,
}

impl GaloisGroup {
    pub fn new(field: NumberField) -> Self {
        let table = field.0.compose.clone();
        GaloisGroup { field, table }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Index of σ_i ∘ σ_j.
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table[i].iter().position(|&k| k == 0).expect("group table")
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.compose(i, cur);
            k += 1;
        }
        k
    }

    /// Checks identity, closure, inverses and associativity of the table.
    pub fn is_group_table(&self) -> bool {
        let n = self.order();
        let ok_rows = (0..n).all(|i| {
            let mut seen = vec![false; n];
            for &k in &self.table[i] {
                if k >= n || seen[k] {
                    return false;
                }
                seen[k] = true;
            }
            true
        });
        ok_rows
            && (0..n).all(|i| self.table[0][i] == i && self.table[i][0] == i)
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        self.compose(self.compose(a, b), c) == self.compose(a, self.compose(b, c))
                    })
                })
            })
    }
}

/// A field homomorphism `source → target`, given by the image of the
/// source generator.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    source: NumberField,
    target: NumberField,
    powers: Vec<FieldElement>,
}

impl FieldEmbedding {
    pub fn new(source: NumberField, image_of_generator: FieldElement) -> Self {
        let target = image_of_generator.field().clone();
        let n = source.degree();
        let mut powers = Vec::with_capacity(n);
        let mut pw = target.one();
        for _ in 0..n {
            powers.push(pw.clone());
            pw = &pw * &image_of_generator;
        }
        debug_assert!(target
            .eval_poly(source.minpoly(), &image_of_generator)
            .is_zero());
        FieldEmbedding { source, target, powers }
    }

    pub fn identity(field: &NumberField) -> Self {
        Self::new(field.clone(), field.generator())
    }

    pub fn source(&self) -> &NumberField {
        &self.source
    }

    pub fn target(&self) -> &NumberField {
        &self.target
    }

    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(a.field() == &self.source, "embedding applied to foreign element");
        let mut acc = self.target.zero();
        for (c, pw) in a.coords().iter().zip(&self.powers) {
            if !c.is_zero() {
                acc = &acc + &pw.scale(c);
            }
        }
        acc
    }
}
