//! Homogeneous polynomials in `x, y, z` and the pencil-restriction /
//! discriminant pipeline used by linear projections.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::binary::BinaryForm;
use super::matrix::bareiss_det;
use super::scalar::{FieldTag, Scalar};
use super::uni::UniPoly;
use super::AlgebraError;
use core::fmt;

/// Sparse homogeneous polynomial. Every stored monomial `(i, j, k)` has
/// `i + j + k = degree` and a nonzero coefficient; the zero polynomial is an
/// empty map with a declared degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    field: FieldTag,
    degree: usize,
    coeffs: BTreeMap<[u32; 3], Scalar>,
}

impl HomogPoly {
    pub fn zero(field: FieldTag, degree: usize) -> Self {
        HomogPoly {
            field,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(field: FieldTag, degree: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = ([u32; 3], Scalar)>,
    {
        let mut coeffs: BTreeMap<[u32; 3], Scalar> = BTreeMap::new();
        for (expo, c) in terms {
            if c.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    left: field,
                    right: c.field(),
                });
            }
            let sum = expo[0] as usize + expo[1] as usize + expo[2] as usize;
            if sum != degree {
                return Err(AlgebraError::NotHomogeneous(alloc::format!(
                    "monomial x^{} y^{} z^{} in a degree-{} polynomial",
                    expo[0],
                    expo[1],
                    expo[2],
                    degree
                )));
            }
            let entry = coeffs.entry(expo).or_insert_with(|| Scalar::zero(field));
            *entry = entry.add(&c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(HomogPoly {
            field,
            degree,
            coeffs,
        })
    }

    pub fn monomial(field: FieldTag, expo: [u32; 3], c: Scalar) -> Self {
        let degree = expo.iter().map(|&e| e as usize).sum();
        HomogPoly::from_terms(field, degree, [(expo, c)]).expect("single monomial")
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Scalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, expo: &[u32; 3]) -> Scalar {
        self.coeffs
            .get(expo)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Coefficient vector in the fixed monomial order of [`monomials`].
    pub fn coeff_vector(&self) -> Vec<Scalar> {
        monomials(self.degree)
            .into_iter()
            .map(|e| self.coeff(&e))
            .collect()
    }

    pub fn from_coeff_vector(
        field: FieldTag,
        degree: usize,
        v: &[Scalar],
    ) -> Result<Self, AlgebraError> {
        let monos = monomials(degree);
        assert_eq!(monos.len(), v.len(), "coefficient vector length");
        HomogPoly::from_terms(field, degree, monos.into_iter().zip(v.iter().cloned()))
    }

    pub fn add(&self, other: &HomogPoly) -> HomogPoly {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(|| Scalar::zero(self.field));
            *entry = entry.add(c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        HomogPoly {
            field: self.field,
            degree: self.degree,
            coeffs,
        }
    }

    pub fn neg(&self) -> HomogPoly {
        HomogPoly {
            field: self.field,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &HomogPoly) -> HomogPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> HomogPoly {
        if c.is_zero() {
            return HomogPoly::zero(self.field, self.degree);
        }
        HomogPoly {
            field: self.field,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        let degree = self.degree + other.degree;
        let mut coeffs: BTreeMap<[u32; 3], Scalar> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                let entry = coeffs.entry(e).or_insert_with(|| Scalar::zero(self.field));
                *entry = entry.add(&c1.mul(c2));
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        HomogPoly {
            field: self.field,
            degree,
            coeffs,
        }
    }

    /// Value at a fixed representative `(x, y, z)`.
    pub fn eval(&self, v: &[Scalar; 3]) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for (e, c) in &self.coeffs {
            let mut term = c.clone();
            for (axis, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&v[axis].pow(exp as u64));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Partial derivative along axis 0, 1, or 2.
    pub fn partial(&self, axis: usize) -> HomogPoly {
        let degree = self.degree.saturating_sub(1);
        let mut coeffs: BTreeMap<[u32; 3], Scalar> = BTreeMap::new();
        for (e, c) in &self.coeffs {
            if e[axis] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[axis] -= 1;
            let v = c.mul(&Scalar::from_i64(e[axis] as i64, self.field));
            if !v.is_zero() {
                coeffs.insert(e2, v);
            }
        }
        HomogPoly {
            field: self.field,
            degree,
            coeffs,
        }
    }

    /// Substitution `F(M * (x, y, z)^T)`.
    pub fn substitute(&self, m: &Mat3) -> HomogPoly {
        let lin: Vec<HomogPoly> = (0..3)
            .map(|r| {
                HomogPoly::from_terms(
                    self.field,
                    1,
                    [
                        ([1, 0, 0], m.rows[r][0].clone()),
                        ([0, 1, 0], m.rows[r][1].clone()),
                        ([0, 0, 1], m.rows[r][2].clone()),
                    ],
                )
                .expect("linear form")
            })
            .collect();
        // Cache powers of each linear form up to the degree.
        let pow_table: Vec<Vec<HomogPoly>> = lin
            .iter()
            .map(|l| {
                let mut pows = vec![HomogPoly::from_terms(
                    self.field,
                    0,
                    [([0, 0, 0], Scalar::one(self.field))],
                )
                .unwrap()];
                for i in 1..=self.degree {
                    let next = pows[i - 1].mul(l);
                    pows.push(next);
                }
                pows
            })
            .collect();
        let mut acc = HomogPoly::zero(self.field, self.degree);
        for (e, c) in &self.coeffs {
            let term = pow_table[0][e[0] as usize]
                .mul(&pow_table[1][e[1] as usize])
                .mul(&pow_table[2][e[2] as usize])
                .scale(c);
            acc = acc.add(&term);
        }
        acc
    }

    /// Scales so the first (lexicographically smallest) nonzero coefficient
    /// is 1; the canonical representative of the projective class.
    pub fn normalized(&self) -> HomogPoly {
        match self.coeffs.values().next() {
            None => self.clone(),
            Some(first) => self.scale(&first.inv().expect("nonzero coefficient")),
        }
    }

    /// True iff the two polynomials differ by a nonzero scalar factor,
    /// tested by cross-multiplying coefficient vectors.
    pub fn proportional(&self, other: &HomogPoly) -> bool {
        if self.degree != other.degree || self.field != other.field {
            return false;
        }
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let keys: Vec<[u32; 3]> = self.coeffs.keys().cloned().collect();
        if keys != other.coeffs.keys().cloned().collect::<Vec<_>>() {
            return false;
        }
        let (e0, a0) = self.coeffs.iter().next().unwrap();
        let b0 = other.coeff(e0);
        self.coeffs
            .iter()
            .all(|(e, a)| a.mul(&b0) == other.coeff(e).mul(a0))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let mono = mono_text(e);
            push_term(&mut out, &mut first, c, &mono);
        }
        if first {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn mono_text(e: &[u32; 3]) -> String {
    let mut parts = Vec::new();
    for (var, &exp) in ["x", "y", "z"].iter().zip(e.iter()) {
        if exp == 1 {
            parts.push(String::from(*var));
        } else if exp > 1 {
            parts.push(alloc::format!("{}^{}", var, exp));
        }
    }
    parts.join("*")
}

/// Appends `c * mono` to a polynomial string with sign handling.
pub(crate) fn push_term(out: &mut String, first: &mut bool, c: &Scalar, mono: &str) {
    let (neg, mag) = match c {
        Scalar::Rat(r) => {
            use num_traits::Signed;
            if r.is_negative() {
                (true, Scalar::Rat(-r))
            } else {
                (false, c.clone())
            }
        }
        Scalar::Fp { .. } => (false, c.clone()),
    };
    if *first {
        if neg {
            out.push('-');
        }
        *first = false;
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mag_is_one = mag.is_one();
    if !mag_is_one || mono.is_empty() {
        out.push_str(&alloc::format!("{}", mag));
        if !mono.is_empty() {
            out.push('*');
        }
    }
    out.push_str(mono);
}

/// All exponent triples of a given total degree, ascending lexicographic in
/// `(i, j, k)`; this fixes the column order of every evaluation matrix.
pub fn monomials(degree: usize) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    let d = degree as u32;
    for i in 0..=d {
        for j in 0..=(d - i) {
            out.push([i, j, d - i - j]);
        }
    }
    out.sort();
    out
}

/// Dimension of the space of degree-m forms: `(m+1)(m+2)/2`, 0 if m < 0.
pub fn form_space_dim(m: i64) -> usize {
    if m < 0 {
        0
    } else {
        ((m + 1) * (m + 2) / 2) as usize
    }
}

/// Exact 3x3 matrix over a scalar field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3 {
    pub rows: [[Scalar; 3]; 3],
}

impl Mat3 {
    pub fn identity(field: FieldTag) -> Self {
        let z = || Scalar::zero(field);
        let o = || Scalar::one(field);
        Mat3 {
            rows: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    pub fn from_columns(c0: &[Scalar; 3], c1: &[Scalar; 3], c2: &[Scalar; 3]) -> Self {
        Mat3 {
            rows: [
                [c0[0].clone(), c1[0].clone(), c2[0].clone()],
                [c0[1].clone(), c1[1].clone(), c2[1].clone()],
                [c0[2].clone(), c1[2].clone(), c2[2].clone()],
            ],
        }
    }

    pub fn det(&self) -> Scalar {
        super::matrix::det3(&self.rows)
    }

    pub fn mul_vec(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        core::array::from_fn(|r| {
            self.rows[r][0]
                .mul(&v[0])
                .add(&self.rows[r][1].mul(&v[1]))
                .add(&self.rows[r][2].mul(&v[2]))
        })
    }

    pub fn mul_mat(&self, other: &Mat3) -> Mat3 {
        let field = self.rows[0][0].field();
        let mut rows = core::array::from_fn(|_| core::array::from_fn(|_| Scalar::zero(field)));
        #[allow(clippy::needless_range_loop)]
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Scalar::zero(field);
                for k in 0..3 {
                    acc = acc.add(&self.rows[r][k].mul(&other.rows[k][c]));
                }
                rows[r][c] = acc;
            }
        }
        Mat3 { rows }
    }

    /// Adjugate: `adj(M) * M = det(M) * I`. Defined over any field, even for
    /// singular matrices.
    pub fn adjugate(&self) -> Mat3 {
        let m = &self.rows;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
            m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
        };
        Mat3 {
            rows: [
                [cof(1, 1, 2, 2), cof(0, 2, 2, 1), cof(0, 1, 1, 2)],
                [cof(1, 2, 2, 0), cof(0, 0, 2, 2), cof(0, 2, 1, 0)],
                [cof(1, 0, 2, 1), cof(0, 1, 2, 0), cof(0, 0, 1, 1)],
            ],
        }
    }

    pub fn inverse(&self) -> Result<Mat3, AlgebraError> {
        let det = self.det();
        if det.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let inv = det.inv()?;
        let adj = self.adjugate();
        Ok(Mat3 {
            rows: adj.rows.map(|row| row.map(|e| e.mul(&inv))),
        })
    }
}

/// A curve restricted to the pencil of lines through a center point.
///
/// The coordinate change sends the center to `[0:1:0]`; the line of the
/// pencil at parameter `[s:t]` is `{x*t = z*s}`, so the fiber polynomial at
/// `[s:t]` is obtained by substituting `(s, y, t)`. `coeffs[j]` is the
/// binary form in `(s, t)` multiplying `y^j`; it has degree `d - j`.
#[derive(Clone, Debug)]
pub struct PencilRestriction {
    pub basis: Mat3,
    pub degree: usize,
    pub coeffs: Vec<BinaryForm>,
}

/// Deterministic basis taking a point `p` to `[0:1:0]`: the first pair of
/// standard basis vectors that extends `p` to a basis, in lexicographic
/// order of index pairs. Columns are `(e_i, p, e_j)`.
pub fn pencil_basis(field: FieldTag, p: &[Scalar; 3]) -> Mat3 {
    let unit = |i: usize| {
        let mut v: [Scalar; 3] = core::array::from_fn(|_| Scalar::zero(field));
        v[i] = Scalar::one(field);
        v
    };
    for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
        let b = Mat3::from_columns(&unit(i), p, &unit(j));
        if !b.det().is_zero() {
            return b;
        }
    }
    unreachable!("a nonzero point always extends to a basis")
}

/// Rewrites `F` in pencil coordinates for the center `p` (which must not be
/// the zero vector). The returned restriction records the basis so results
/// can be pulled back.
pub fn restrict_to_pencil(f: &HomogPoly, p: &[Scalar; 3]) -> Result<PencilRestriction, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    for c in p.iter() {
        if c.field() != f.field() {
            return Err(AlgebraError::FieldMismatch {
                left: f.field(),
                right: c.field(),
            });
        }
    }
    let basis = pencil_basis(f.field(), p);
    let g = f.substitute(&basis);
    let d = f.degree();
    let mut coeffs: Vec<BinaryForm> = (0..=d)
        .map(|j| BinaryForm::zero(f.field(), d - j))
        .collect();
    for (e, c) in g.terms() {
        let j = e[1] as usize;
        // x^i y^j z^k contributes c * s^i t^k to the y^j coefficient.
        let i = e[0] as usize;
        coeffs[j].coeffs[i] = coeffs[j].coeffs[i].add(c);
    }
    Ok(PencilRestriction {
        basis,
        degree: d,
        coeffs,
    })
}

impl PencilRestriction {
    /// The coefficient of `y^d`: a degree-0 form, equal to the value of the
    /// original polynomial at the basis representative of the center.
    pub fn leading(&self) -> &BinaryForm {
        &self.coeffs[self.degree]
    }

    /// Fiber polynomial in `y` over the pencil parameter `[s:t]`.
    pub fn fiber_at(&self, s: &Scalar, t: &Scalar) -> UniPoly {
        let field = self.coeffs[0].field;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_at(s, t))
            .collect::<Vec<_>>();
        UniPoly::new(field, coeffs)
    }

    /// Discriminant of the restriction with respect to `y`:
    /// `(-1)^(d(d-1)/2) Res_y(F, dF/dy) / lc`, a binary form of degree
    /// `d(d-1)` in the pencil parameters, computed by an exact Sylvester
    /// determinant (fraction-free elimination over polynomial entries).
    pub fn discriminant(&self) -> Result<BinaryForm, AlgebraError> {
        discriminant_of_y_poly(&self.coeffs)
    }
}

/// Discriminant of `sum_j c_j(s,t) y^j` with respect to `y`; see
/// [`PencilRestriction::discriminant`] for the normalization.
pub fn discriminant_of_y_poly(coeffs: &[BinaryForm]) -> Result<BinaryForm, AlgebraError> {
    let d = coeffs.len() - 1;
    assert!(d >= 1, "positive degree required");
    let field = coeffs[0].field;
    let lc = &coeffs[d];
    if lc.is_zero() {
        return Err(AlgebraError::ZeroLeadingCoefficient);
    }
    if d == 1 {
        // Linear in y: no repeated roots, discriminant is 1.
        return Ok(BinaryForm::new(field, 0, vec![Scalar::one(field)]));
    }
    // Dehomogenize at t = 1; the resultant of the declared-degree layout is a
    // form of degree d(d-1), recovered afterwards by rehomogenizing.
    let f: Vec<UniPoly> = coeffs.iter().map(BinaryForm::to_uni).collect();
    let g: Vec<UniPoly> = (1..=d)
        .map(|j| f[j].scale(&Scalar::from_i64(j as i64, field)))
        .collect();
    let n = 2 * d - 1;
    let zero = UniPoly::zero(field);
    let mut syl = vec![vec![zero; n]; n];
    // d-1 rows of f (y-degree d), d rows of g (declared y-degree d-1).
    for r in 0..d - 1 {
        for (m, fj) in f.iter().rev().enumerate() {
            syl[r][r + m] = fj.clone();
        }
    }
    for r in 0..d {
        for (m, gj) in g.iter().rev().enumerate() {
            syl[d - 1 + r][r + m] = gj.clone();
        }
    }
    let res = bareiss_det(syl);
    let w = d * (d - 1);
    let lc_scalar = lc.coeffs[0].clone();
    let mut disc_uni = res.scale(&lc_scalar.inv()?);
    if (w / 2) % 2 == 1 {
        disc_uni = disc_uni.neg();
    }
    if disc_uni.is_zero() {
        return Ok(BinaryForm::zero(field, w));
    }
    assert!(
        disc_uni.degree().unwrap() <= w,
        "discriminant degree exceeds d(d-1)"
    );
    Ok(BinaryForm::from_uni(&disc_uni, w))
}
