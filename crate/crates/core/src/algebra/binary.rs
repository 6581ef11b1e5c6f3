//! Binary forms: homogeneous polynomials in two variables `(s, t)`.
//!
//! These carry discriminants restricted to the pencil parameter line P^1.
//! Root extraction is exhaustive over a prime field (all `p + 1` points of
//! P^1(F_p) are tried) and structural over the rationals (squarefree
//! decomposition only, which is all the multiplicity data downstream needs).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::scalar::{FieldTag, Scalar};
use super::uni::UniPoly;
use super::AlgebraError;
use core::fmt;

/// A point of the projective line, normalized to `[a : 1]` or `[1 : 0]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointP1 {
    coords: [Scalar; 2],
}

impl PointP1 {
    pub fn new(s: Scalar, t: Scalar) -> Result<Self, AlgebraError> {
        if s.field() != t.field() {
            return Err(AlgebraError::FieldMismatch {
                left: s.field(),
                right: t.field(),
            });
        }
        if s.is_zero() && t.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        Ok(if t.is_zero() {
            PointP1 {
                coords: [Scalar::one(s.field()), t],
            }
        } else {
            PointP1 {
                coords: [s.div(&t), Scalar::one(t.field())],
            }
        })
    }

    pub fn infinity(field: FieldTag) -> Self {
        PointP1 {
            coords: [Scalar::one(field), Scalar::zero(field)],
        }
    }

    pub fn affine(a: Scalar) -> Self {
        let one = Scalar::one(a.field());
        PointP1 { coords: [a, one] }
    }

    pub fn is_infinity(&self) -> bool {
        self.coords[1].is_zero()
    }

    pub fn coords(&self) -> &[Scalar; 2] {
        &self.coords
    }

    pub fn field(&self) -> FieldTag {
        self.coords[0].field()
    }
}

impl fmt::Display for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.coords[0], self.coords[1])
    }
}

/// One entry of a root report: either a rational point of P^1 or an
/// unsplit factor, together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootEntry {
    Point(PointP1, usize),
    Factor(BinaryForm, usize),
}

impl RootEntry {
    pub fn multiplicity(&self) -> usize {
        match self {
            RootEntry::Point(_, m) | RootEntry::Factor(_, m) => *m,
        }
    }

    /// Degree of the locus: 1 for a point, the factor degree otherwise.
    pub fn locus_degree(&self) -> usize {
        match self {
            RootEntry::Point(..) => 1,
            RootEntry::Factor(f, _) => f.degree,
        }
    }
}

/// Retained for report serialization: a squarefree factor with multiplicity.
pub type SquarefreePart = (BinaryForm, usize);

/// Homogeneous polynomial in `(s, t)`; `coeffs[i]` multiplies `s^i t^(n-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub field: FieldTag,
    pub degree: usize,
    pub coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(field: FieldTag, degree: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "coefficient count");
        BinaryForm {
            field,
            degree,
            coeffs,
        }
    }

    pub fn zero(field: FieldTag, degree: usize) -> Self {
        BinaryForm {
            field,
            degree,
            coeffs: vec![Scalar::zero(field); degree + 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Homogenizes a univariate polynomial in `s` to the given degree by
    /// padding with powers of `t`.
    pub fn from_uni(u: &UniPoly, degree: usize) -> Self {
        let d = u.degree().map_or(0, |d| d);
        assert!(u.is_zero() || d <= degree, "degree too small");
        let mut coeffs = vec![Scalar::zero(u.field); degree + 1];
        for (i, c) in u.coeffs.iter().enumerate() {
            coeffs[i] = c.clone();
        }
        BinaryForm {
            field: u.field,
            degree,
            coeffs,
        }
    }

    /// The dehomogenization `B(s, 1)`.
    pub fn to_uni(&self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.clone())
    }

    pub fn eval(&self, p: &PointP1) -> Scalar {
        self.eval_at(&p.coords()[0], &p.coords()[1])
    }

    pub fn eval_at(&self, s: &Scalar, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        let mut spow = Scalar::one(self.field);
        // Precompute t^(n-i) by walking down.
        let mut tpows = vec![Scalar::one(self.field); self.degree + 1];
        for i in (0..self.degree).rev() {
            tpows[i] = tpows[i + 1].mul(t);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&spow).mul(&tpows[i]));
            }
            spow = spow.mul(s);
        }
        acc
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let degree = self.degree + other.degree;
        let mut coeffs = vec![Scalar::zero(self.field); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        BinaryForm {
            field: self.field,
            degree,
            coeffs,
        }
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm {
            field: self.field,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplicity of the factor `t` (the root at `[1:0]`).
    fn t_multiplicity(&self) -> usize {
        assert!(!self.is_zero());
        let top = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero form");
        self.degree - top
    }

    pub fn derivative_s(&self) -> BinaryForm {
        if self.degree == 0 {
            return BinaryForm::zero(self.field, 0);
        }
        let coeffs = (1..=self.degree)
            .map(|i| self.coeffs[i].mul(&Scalar::from_i64(i as i64, self.field)))
            .collect();
        BinaryForm {
            field: self.field,
            degree: self.degree - 1,
            coeffs,
        }
    }

    pub fn derivative_t(&self) -> BinaryForm {
        if self.degree == 0 {
            return BinaryForm::zero(self.field, 0);
        }
        let coeffs = (0..self.degree)
            .map(|i| {
                self.coeffs[i].mul(&Scalar::from_i64((self.degree - i) as i64, self.field))
            })
            .collect();
        BinaryForm {
            field: self.field,
            degree: self.degree - 1,
            coeffs,
        }
    }

    /// Gcd of two forms (monic dehomogenized part, exact `t`-power bookkeeping).
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let ta = self.t_multiplicity();
        let tb = other.t_multiplicity();
        let g = self.to_uni().gcd(&other.to_uni());
        let gd = g.degree().unwrap_or(0);
        let tmin = ta.min(tb);
        // t^tmin * homog(g)
        let mut coeffs = vec![Scalar::zero(self.field); gd + tmin + 1];
        for (i, c) in g.coeffs.iter().enumerate() {
            coeffs[i] = c.clone();
        }
        BinaryForm {
            field: self.field,
            degree: gd + tmin,
            coeffs,
        }
    }

    /// True iff the form has no repeated factor over the closure. Uses
    /// `gcd(B, dB/ds, dB/dt)`, which is correct in every characteristic.
    pub fn is_squarefree(&self) -> Result<bool, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        if self.degree == 0 {
            return Ok(true);
        }
        let g = self.gcd(&self.derivative_s()).gcd(&self.derivative_t());
        Ok(g.degree == 0)
    }

    /// Root structure of a nonzero form.
    ///
    /// Over `F_p` every rational point of P^1 is tried and stripped to its
    /// exact multiplicity; what remains is reported as squarefree factors
    /// with multiplicities. Over the rationals only `[1:0]` and degree-one
    /// squarefree parts split off as points; the rest stays factored.
    /// Multiplicities times locus degrees always sum to the form degree.
    pub fn roots(&self) -> Result<Vec<RootEntry>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut entries = Vec::new();
        let tmult = self.t_multiplicity();
        if tmult > 0 {
            entries.push(RootEntry::Point(PointP1::infinity(self.field), tmult));
        }
        let mut rest = self.to_uni();
        if let FieldTag::PrimeField(p) = self.field {
            for a in 0..p {
                if rest.is_constant() {
                    break;
                }
                let x = Scalar::Fp { p, val: a };
                let (m, cof) = rest.strip_root(&x);
                if m > 0 {
                    entries.push(RootEntry::Point(PointP1::affine(x), m));
                    rest = cof;
                }
            }
        }
        if !rest.is_constant() {
            for (factor, mult) in rest.squarefree_decomposition() {
                let deg = factor.degree().unwrap();
                if deg == 1 {
                    // Monic s + c vanishes at [-c : 1].
                    let root = factor.coeffs[0].neg();
                    entries.push(RootEntry::Point(PointP1::affine(root), mult));
                } else {
                    entries.push(RootEntry::Factor(BinaryForm::from_uni(&factor, deg), mult));
                }
            }
        }
        let total: usize = entries
            .iter()
            .map(|e| e.multiplicity() * e.locus_degree())
            .sum();
        assert_eq!(total, self.degree, "root multiplicities must sum to degree");
        Ok(entries)
    }

    /// Renders the form in variables `s, t`.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let mut first = true;
        for i in (0..=self.degree).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mono = match (i, self.degree - i) {
                (0, 0) => String::new(),
                (a, 0) => format_mono("s", a),
                (0, b) => format_mono("t", b),
                (a, b) => {
                    let mut m = format_mono("s", a);
                    m.push('*');
                    m.push_str(&format_mono("t", b));
                    m
                }
            };
            super::homog::push_term(&mut out, &mut first, c, &mono);
        }
        if first {
            let _ = write!(out, "0");
        }
        out
    }
}

fn format_mono(var: &str, e: usize) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    if e == 1 {
        let _ = write!(s, "{}", var);
    } else {
        let _ = write!(s, "{}^{}", var, e);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const F7: FieldTag = FieldTag::PrimeField(7);

    fn form(field: FieldTag, cs: &[i64]) -> BinaryForm {
        BinaryForm::new(
            field,
            cs.len() - 1,
            cs.iter().map(|&c| Scalar::from_i64(c, field)).collect(),
        )
    }

    #[test]
    fn s_squared_t_roots() {
        // s^2 t: coeffs of (t^3, s t^2, s^2 t, s^3) = (0,0,1,0)
        for field in [FieldTag::Rationals, F7] {
            let b = form(field, &[0, 0, 1, 0]);
            let roots = b.roots().unwrap();
            assert_eq!(roots.len(), 2);
            assert!(roots.contains(&RootEntry::Point(PointP1::infinity(field), 1)));
            assert!(roots.contains(&RootEntry::Point(
                PointP1::affine(Scalar::zero(field)),
                2
            )));
        }
    }

    #[test]
    fn fermat_discriminant_roots_over_f7() {
        // -27 (s^3 + t^3)^2 over F_7: cube roots of -1 are 3, 5, 6.
        let s3t3 = form(F7, &[1, 0, 0, 1]);
        let b = s3t3.mul(&s3t3).scale(&Scalar::from_i64(-27, F7));
        let roots = b.roots().unwrap();
        assert_eq!(roots.len(), 3);
        let mut found = Vec::new();
        for r in &roots {
            match r {
                RootEntry::Point(p, m) => {
                    assert_eq!(*m, 2);
                    assert!(!p.is_infinity());
                    found.push(p.coords()[0].as_fp().unwrap());
                }
                _ => panic!("should split completely"),
            }
        }
        found.sort_unstable();
        assert_eq!(found, vec![3, 5, 6]);
    }

    #[test]
    fn rational_structure_only_over_q() {
        // (s^3 + t^3)^2 over Q: rational root [-1:1] with mult 2, quadratic factor mult 2.
        let s3t3 = form(FieldTag::Rationals, &[1, 0, 0, 1]);
        let b = s3t3.mul(&s3t3);
        let roots = b.roots().unwrap();
        let total: usize = roots
            .iter()
            .map(|e| e.multiplicity() * e.locus_degree())
            .sum();
        assert_eq!(total, 6);
        assert!(roots
            .iter()
            .any(|e| matches!(e, RootEntry::Point(p, 2) if p.coords()[0] == Scalar::from_i64(-1, FieldTag::Rationals))));
        assert!(roots
            .iter()
            .any(|e| matches!(e, RootEntry::Factor(f, 2) if f.degree == 2)));
    }

    #[test]
    fn squarefree_detection() {
        let b = form(FieldTag::Rationals, &[1, 0, 0, 1]); // s^3 + t^3
        assert!(b.is_squarefree().unwrap());
        assert!(!b.mul(&b).is_squarefree().unwrap());
        // In char 3, s^3 + t^3 = (s + t)^3.
        let f3 = FieldTag::PrimeField(3);
        let c = form(f3, &[1, 0, 0, 1]);
        assert!(!c.is_squarefree().unwrap());
    }

    #[test]
    fn squarefree_of_high_degree_is_all_simple() {
        // s^12 - t^12 ... not squarefree in char dividing 12; use Q.
        let mut cs = vec![0i64; 13];
        cs[0] = -1;
        cs[12] = 1;
        let b = form(FieldTag::Rationals, &cs);
        assert!(b.is_squarefree().unwrap());
        let roots = b.roots().unwrap();
        for e in &roots {
            assert_eq!(e.multiplicity(), 1);
        }
        let slots: usize = roots.iter().map(|e| e.locus_degree()).sum();
        assert_eq!(slots, 12);
    }
}
