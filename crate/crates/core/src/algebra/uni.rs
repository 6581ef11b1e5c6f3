//! Univariate polynomials over a [`Scalar`] field.
//!
//! This is internal plumbing shared by binary forms, discriminants, and
//! fiber analysis: exact division, gcd, squarefree decomposition (with the
//! characteristic-p p-th-root fallback), and resultants.

use alloc::vec;
use alloc::vec::Vec;

use super::scalar::{FieldTag, Scalar};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`, no trailing
/// zeros are stored, and the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub field: FieldTag,
    pub coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: FieldTag, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldTag) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(c.field(), vec![c])
    }

    pub fn monomial(field: FieldTag, c: Scalar, deg: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(field); deg + 1];
        coeffs[deg] = c;
        UniPoly::new(field, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        UniPoly::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        UniPoly::new(self.field, coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(Scalar::neg).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs =
            vec![Scalar::zero(self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(self.field, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division: returns `(q, r)` with `self = q*other + r`.
    pub fn divrem(&self, other: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let d = other.degree().unwrap();
        let lc_inv = other.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.clone();
        let mut quot = vec![Scalar::zero(self.field); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lc_inv);
            let shift = rd - d;
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * other
            let mut coeffs = rem.coeffs;
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[shift + j] = coeffs[shift + j].sub(&factor.mul(b));
            }
            rem = UniPoly::new(self.field, coeffs);
        }
        (UniPoly::new(self.field, quot), rem)
    }

    /// Division known to be exact; panics if a remainder is left.
    pub fn exact_div(&self, other: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(other);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (1 for coprime inputs, 0 only if both inputs are 0).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&Scalar::from_i64(i as i64, self.field)))
            .collect();
        UniPoly::new(self.field, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Strips the root `x = r` completely, returning `(multiplicity, cofactor)`.
    pub fn strip_root(&self, r: &Scalar) -> (usize, UniPoly) {
        let lin = UniPoly::new(self.field, vec![r.neg(), Scalar::one(self.field)]);
        let mut mult = 0;
        let mut rest = self.clone();
        loop {
            if rest.is_zero() {
                break;
            }
            let (q, rem) = rest.divrem(&lin);
            if rem.is_zero() {
                mult += 1;
                rest = q;
            } else {
                break;
            }
        }
        (mult, rest)
    }

    /// In characteristic p, a polynomial with zero derivative is `g(x^p)`;
    /// this extracts `g` by taking p-th roots of the surviving coefficients.
    fn pth_root(&self) -> UniPoly {
        let p = self.field.characteristic();
        assert!(p > 0, "p-th root only in positive characteristic");
        let pu = p as usize;
        let mut coeffs = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            assert!(i % pu == 0, "derivative-zero polynomial expected");
            while coeffs.len() < i / pu {
                coeffs.push(Scalar::zero(self.field));
            }
            // In F_p the Frobenius is the identity on the prime field, so the
            // p-th root of a coefficient is itself.
            coeffs.push(c.clone());
        }
        UniPoly::new(self.field, coeffs)
    }

    /// Squarefree decomposition: returns pairs `(factor, multiplicity)` with
    /// each factor squarefree and monic, pairwise coprime, and
    /// `self = lc * prod factor^multiplicity`. Works in characteristic 0 and p.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        assert!(!self.is_zero());
        let mut out = Vec::new();
        self.squarefree_into(1, &mut out);
        out.retain(|(f, _)| f.degree().unwrap_or(0) > 0);
        out
    }

    fn squarefree_into(&self, mult_scale: usize, out: &mut Vec<(UniPoly, usize)>) {
        let f = self.monic();
        if f.is_constant() {
            return;
        }
        let deriv = f.derivative();
        if deriv.is_zero() {
            // f = g(x^p); multiplicities pick up a factor of p.
            let g = f.pth_root();
            let p = self.field.characteristic() as usize;
            g.squarefree_into(mult_scale * p, out);
            return;
        }
        let c = f.gcd(&deriv);
        let mut w = f.exact_div(&c);
        let mut c = c;
        let mut i = 1usize;
        // Musser's algorithm; in char p the leftover c is a p-th power.
        while !w.is_constant() {
            let y = w.gcd(&c);
            let fac = w.exact_div(&y);
            if fac.degree().unwrap_or(0) > 0 {
                out.push((fac, i * mult_scale));
            }
            w = y;
            c = c.exact_div(&w);
            i += 1;
        }
        if !c.is_constant() {
            let g = c.pth_root();
            let p = self.field.characteristic() as usize;
            g.squarefree_into(mult_scale * p, out);
        }
    }

    /// True iff the polynomial has no repeated root over the closure.
    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero());
        if self.is_constant() {
            return true;
        }
        let deriv = self.derivative();
        if deriv.is_zero() {
            return false;
        }
        self.gcd(&deriv).is_constant()
    }

    /// Resultant of two polynomials via a Euclidean remainder sequence.
    pub fn resultant(&self, other: &UniPoly) -> Scalar {
        let field = self.field;
        if self.is_zero() || other.is_zero() {
            return Scalar::zero(field);
        }
        // Res(f, c) = c^deg(f) for a constant c.
        if other.is_constant() {
            return other.coeffs[0].pow(self.degree().unwrap() as u64);
        }
        if self.is_constant() {
            return self.coeffs[0].pow(other.degree().unwrap() as u64);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = Scalar::one(field);
        let mut sign_flips = 0usize;
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            if da < db {
                core::mem::swap(&mut a, &mut b);
                sign_flips += da * db;
                continue;
            }
            let (_, r) = a.divrem(&b);
            let lb = b.leading().unwrap().clone();
            match r.degree() {
                None => {
                    // Common factor of positive degree: resultant vanishes.
                    if b.degree().unwrap() > 0 {
                        return Scalar::zero(field);
                    }
                    break;
                }
                Some(dr) => {
                    // Res(a,b) = (-1)^(da*db) lc(b)^(da-dr) Res(b,r)
                    sign_flips += da * db;
                    acc = acc.mul(&lb.pow((da - dr) as u64));
                    a = b;
                    b = r;
                    if b.is_constant() {
                        let da2 = a.degree().unwrap();
                        acc = acc.mul(&b.coeffs[0].pow(da2 as u64));
                        break;
                    }
                }
            }
        }
        if sign_flips % 2 == 1 {
            acc = acc.neg();
        }
        acc
    }
}

/// Rational roots of a univariate polynomial, best effort: over a prime
/// field the search is exhaustive; over the rationals candidates come from
/// divisors of the outer coefficients (skipped if they exceed u64).
pub fn rational_roots(u: &UniPoly) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    let field = u.field;
    let mut out = Vec::new();
    if u.is_zero() || u.is_constant() {
        return out;
    }
    if let FieldTag::PrimeField(p) = field {
        for a in 0..p {
            let x = Scalar::Fp { p, val: a };
            if u.eval(&x).is_zero() {
                out.push(x);
            }
        }
        return out;
    }
    let mut poly = u.clone();
    let zero = Scalar::zero(field);
    if u.eval(&zero).is_zero() {
        out.push(zero);
        let (_, rest) = poly.strip_root(&Scalar::zero(field));
        poly = rest;
        if poly.is_constant() {
            return out;
        }
    }
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::from(1);
    for c in &poly.coeffs {
        let r = c.as_rational().expect("rational field");
        lcm = num_integer::Integer::lcm(&lcm, r.denom());
    }
    let ints: Vec<BigInt> = poly
        .coeffs
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    let a0 = ints.first().cloned().unwrap_or_else(BigInt::zero).abs();
    let an = ints.last().cloned().unwrap_or_else(BigInt::zero).abs();
    let (d0, dn) = match (small_divisors(&a0), small_divisors(&an)) {
        (Some(a), Some(b)) => (a, b),
        _ => return out,
    };
    for num in &d0 {
        for den in &dn {
            for sign in [1i64, -1] {
                let cand = Scalar::Rat(num_rational::BigRational::new(
                    BigInt::from(sign) * BigInt::from(*num),
                    BigInt::from(*den),
                ));
                if u.eval(&cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn small_divisors(n: &num_bigint::BigInt) -> Option<Vec<u64>> {
    use num_traits::ToPrimitive;
    let n = n.to_u64()?;
    if n == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i.checked_mul(i).is_some_and(|sq| sq <= n) {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    Some(out)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_i64(n, FieldTag::Rationals)
    }

    fn qpoly(cs: &[i64]) -> UniPoly {
        UniPoly::new(FieldTag::Rationals, cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let f = qpoly(&[2, 0, -3, 1, 4]);
        let g = qpoly(&[1, 2, 1]);
        let (quot, rem) = f.divrem(&g);
        assert_eq!(quot.mul(&g).add(&rem), f);
        assert!(rem.degree().unwrap_or(0) < g.degree().unwrap());
    }

    #[test]
    fn gcd_of_products() {
        let a = qpoly(&[-1, 1]); // x - 1
        let b = qpoly(&[2, 1]); // x + 2
        let c = qpoly(&[1, 1]); // x + 1
        let f = a.mul(&b);
        let g = a.mul(&c);
        assert_eq!(f.gcd(&g), a.monic());
    }

    #[test]
    fn squarefree_decomposition_char0() {
        // (x-1)^2 (x+2)^3
        let f = qpoly(&[-1, 1]);
        let g = qpoly(&[2, 1]);
        let poly = f.mul(&f).mul(&g).mul(&g).mul(&g);
        let dec = poly.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert!(dec.contains(&(f.monic(), 2)));
        assert!(dec.contains(&(g.monic(), 3)));
    }

    #[test]
    fn squarefree_decomposition_char_p_power() {
        // Over F_3: (x+1)^3 = x^3 + 1 has zero derivative.
        let f3 = FieldTag::PrimeField(3);
        let s = |n: i64| Scalar::from_i64(n, f3);
        let poly = UniPoly::new(f3, vec![s(1), s(0), s(0), s(1)]);
        let dec = poly.squarefree_decomposition();
        assert_eq!(dec, vec![(UniPoly::new(f3, vec![s(1), s(1)]), 3)]);
        assert!(!poly.is_squarefree());
    }

    #[test]
    fn quadratic_resultant_is_discriminant_like() {
        // Res(ax^2+bx+c, 2ax+b) = a(4ac - b^2) ... with a=1,b=-3,c=2: -(9-8) = 1*(8-9) = -1
        let f = qpoly(&[2, -3, 1]);
        let res = f.resultant(&f.derivative());
        assert_eq!(res, q(-1));
    }

    #[test]
    fn resultant_multiplicative() {
        let f = qpoly(&[1, 3, 1]);
        let g = qpoly(&[-2, 0, 1]);
        let h = qpoly(&[5, 1, 2]);
        let lhs = f.mul(&g).resultant(&h);
        let rhs = f.resultant(&h).mul(&g.resultant(&h));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_detects_common_root() {
        let f = qpoly(&[-1, 1]).mul(&qpoly(&[2, 1]));
        let g = qpoly(&[-1, 1]).mul(&qpoly(&[7, 1]));
        assert!(f.resultant(&g).is_zero());
    }

    #[test]
    fn strip_root_multiplicity() {
        // (x-2)^3 (x+1)
        let f = qpoly(&[-2, 1]);
        let poly = f.mul(&f).mul(&f).mul(&qpoly(&[1, 1]));
        let (m, rest) = poly.strip_root(&q(2));
        assert_eq!(m, 3);
        assert_eq!(rest.monic(), qpoly(&[1, 1]).monic());
    }
}
