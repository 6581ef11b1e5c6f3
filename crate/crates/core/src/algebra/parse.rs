//! Text formats: polynomials like `y^2*z - x^3 - 2*x*z^2`, scalars like
//! `3/4` or `3 mod 7`, points like `[1:-2:0]`.
//!
//! The coefficient field is inferred from `mod p` annotations when present,
//! otherwise taken from the caller's hint (defaulting to the rationals).

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::homog::HomogPoly;
use super::scalar::{FieldTag, Scalar};
use super::AlgebraError;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.offset + 1, self.message)
    }
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }

    fn from_algebra(e: AlgebraError) -> Self {
        ParseError {
            offset: 0,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize), // 0 = x, 1 = y, 2 = z
    Mod,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn tokenize(input: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                toks.push((start, Tok::Int(n)));
            }
            'x' => {
                toks.push((i, Tok::Var(0)));
                i += 1;
            }
            'y' => {
                toks.push((i, Tok::Var(1)));
                i += 1;
            }
            'z' => {
                toks.push((i, Tok::Var(2)));
                i += 1;
            }
            'm' => {
                if input[i..].starts_with("mod") {
                    toks.push((i, Tok::Mod));
                    i += 3;
                } else {
                    return Err(ParseError::new(i, "unexpected character 'm'"));
                }
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '[' => {
                toks.push((i, Tok::LBracket));
                i += 1;
            }
            ']' => {
                toks.push((i, Tok::RBracket));
                i += 1;
            }
            ':' => {
                toks.push((i, Tok::Colon));
                i += 1;
            }
            other => {
                return Err(ParseError::new(
                    i,
                    alloc::format!("unexpected character '{}'", other),
                ))
            }
        }
    }
    Ok(Lexer { toks, pos: 0 })
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(usize::MAX)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let off = self.offset();
        match self.next() {
            Some(t) if t == tok => Ok(()),
            _ => Err(ParseError::new(off, alloc::format!("expected {}", what))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }
}

/// A raw coefficient before field reconciliation.
#[derive(Debug, Clone)]
enum RawCoef {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    ModP(BigInt, u64),
}

#[derive(Debug, Clone)]
struct RawTerm {
    negative: bool,
    coefs: Vec<RawCoef>,
    expo: [u32; 3],
}

fn parse_nat(lx: &mut Lexer) -> Result<BigInt, ParseError> {
    let off = lx.offset();
    match lx.next() {
        Some(Tok::Int(n)) => Ok(n),
        _ => Err(ParseError::new(off, "expected a number")),
    }
}

/// scalar := int ( '/' int | 'mod' int )?
fn parse_raw_scalar(lx: &mut Lexer, first: BigInt) -> Result<RawCoef, ParseError> {
    match lx.peek() {
        Some(Tok::Slash) => {
            lx.next();
            let den = parse_nat(lx)?;
            Ok(RawCoef::Ratio(first, den))
        }
        Some(Tok::Mod) => {
            lx.next();
            let off = lx.offset();
            let p = parse_nat(lx)?;
            let p: u64 = p
                .try_into()
                .map_err(|_| ParseError::new(off, "modulus too large"))?;
            Ok(RawCoef::ModP(first, p))
        }
        _ => Ok(RawCoef::Int(first)),
    }
}

fn parse_term(lx: &mut Lexer, negative: bool) -> Result<RawTerm, ParseError> {
    let mut term = RawTerm {
        negative,
        coefs: Vec::new(),
        expo: [0, 0, 0],
    };
    let mut saw_atom = false;
    loop {
        match lx.peek() {
            Some(Tok::Int(_)) => {
                let n = parse_nat(lx)?;
                term.coefs.push(parse_raw_scalar(lx, n)?);
                saw_atom = true;
            }
            Some(Tok::LParen) => {
                lx.next();
                let n = parse_nat(lx)?;
                term.coefs.push(parse_raw_scalar(lx, n)?);
                lx.expect(Tok::RParen, "')'")?;
                saw_atom = true;
            }
            Some(Tok::Var(v)) => {
                let v = *v;
                lx.next();
                let mut exp = 1u32;
                if lx.peek() == Some(&Tok::Caret) {
                    lx.next();
                    let off = lx.offset();
                    let e = parse_nat(lx)?;
                    exp = e
                        .try_into()
                        .map_err(|_| ParseError::new(off, "exponent too large"))?;
                }
                term.expo[v] += exp;
                saw_atom = true;
            }
            Some(Tok::Star) => {
                lx.next();
                continue;
            }
            _ => break,
        }
    }
    if !saw_atom {
        return Err(ParseError::new(lx.offset(), "expected a term"));
    }
    Ok(term)
}

fn parse_terms(lx: &mut Lexer) -> Result<Vec<RawTerm>, ParseError> {
    let mut terms = Vec::new();
    let mut negative = match lx.peek() {
        Some(Tok::Minus) => {
            lx.next();
            true
        }
        Some(Tok::Plus) => {
            lx.next();
            false
        }
        _ => false,
    };
    loop {
        terms.push(parse_term(lx, negative)?);
        match lx.peek() {
            Some(Tok::Plus) => {
                lx.next();
                negative = false;
            }
            Some(Tok::Minus) => {
                lx.next();
                negative = true;
            }
            None => break,
            _ => {
                return Err(ParseError::new(lx.offset(), "expected '+', '-' or end"));
            }
        }
    }
    Ok(terms)
}

fn infer_field(terms: &[RawTerm], hint: Option<FieldTag>) -> Result<FieldTag, ParseError> {
    let mut modulus: Option<u64> = None;
    for t in terms {
        for c in &t.coefs {
            if let RawCoef::ModP(_, p) = c {
                match modulus {
                    None => modulus = Some(*p),
                    Some(q) if q == *p => {}
                    Some(q) => {
                        return Err(ParseError::new(
                            0,
                            alloc::format!("conflicting moduli {} and {}", q, p),
                        ))
                    }
                }
            }
        }
    }
    let field = match (modulus, hint) {
        (Some(p), Some(FieldTag::PrimeField(q))) if p != q => {
            return Err(ParseError::new(
                0,
                alloc::format!("coefficients mod {} but field is F{}", p, q),
            ))
        }
        (Some(p), Some(FieldTag::Rationals)) => {
            return Err(ParseError::new(
                0,
                alloc::format!("coefficients mod {} but field is Q", p),
            ))
        }
        (Some(p), _) => FieldTag::PrimeField(p),
        (None, Some(f)) => f,
        (None, None) => FieldTag::Rationals,
    };
    field.validate().map_err(ParseError::from_algebra)?;
    Ok(field)
}

fn build_scalar(coefs: &[RawCoef], negative: bool, field: FieldTag) -> Result<Scalar, ParseError> {
    let mut acc = Scalar::one(field);
    for c in coefs {
        let v = match c {
            RawCoef::Int(n) | RawCoef::ModP(n, _) => Scalar::from_bigint(n, field),
            RawCoef::Ratio(n, d) => {
                let num = Scalar::from_bigint(n, field);
                let den = Scalar::from_bigint(d, field);
                num.checked_div(&den).map_err(ParseError::from_algebra)?
            }
        };
        acc = acc.mul(&v);
    }
    Ok(if negative { acc.neg() } else { acc })
}

/// Parses a homogeneous polynomial in `x, y, z`. All terms must have equal
/// total degree. The string `0` parses to the zero polynomial of degree 0.
pub fn parse_poly(input: &str, hint: Option<FieldTag>) -> Result<HomogPoly, ParseError> {
    let mut lx = tokenize(input)?;
    let terms = parse_terms(&mut lx)?;
    if !lx.at_end() {
        return Err(ParseError::new(lx.offset(), "trailing input"));
    }
    let field = infer_field(&terms, hint)?;
    let mut degree: Option<usize> = None;
    let mut built: Vec<([u32; 3], Scalar)> = Vec::new();
    for t in &terms {
        let d = t.expo.iter().map(|&e| e as usize).sum::<usize>();
        let c = build_scalar(&t.coefs, t.negative, field)?;
        if d == 0 && c.is_zero() {
            continue; // bare zero constant; does not pin the degree
        }
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => {
                return Err(ParseError::new(
                    0,
                    alloc::format!("mixed degrees {} and {}", d0, d),
                ))
            }
            _ => {}
        }
        built.push((t.expo, c));
    }
    HomogPoly::from_terms(field, degree.unwrap_or(0), built).map_err(ParseError::from_algebra)
}

/// Parses one scalar: `-3`, `3/4`, `3 mod 7`.
pub fn parse_scalar(input: &str, hint: Option<FieldTag>) -> Result<Scalar, ParseError> {
    let mut lx = tokenize(input)?;
    let negative = if lx.peek() == Some(&Tok::Minus) {
        lx.next();
        true
    } else {
        false
    };
    let n = parse_nat(&mut lx)?;
    let raw = parse_raw_scalar(&mut lx, n)?;
    if !lx.at_end() {
        return Err(ParseError::new(lx.offset(), "trailing input"));
    }
    let terms = [RawTerm {
        negative,
        coefs: alloc::vec![raw],
        expo: [0, 0, 0],
    }];
    let field = infer_field(&terms, hint)?;
    build_scalar(&terms[0].coefs, negative, field)
}

fn parse_coords<const N: usize>(
    input: &str,
    hint: Option<FieldTag>,
) -> Result<[Scalar; N], ParseError> {
    let mut lx = tokenize(input)?;
    lx.expect(Tok::LBracket, "'['")?;
    let mut raw: Vec<(bool, RawCoef)> = Vec::new();
    for i in 0..N {
        if i > 0 {
            lx.expect(Tok::Colon, "':'")?;
        }
        let negative = if lx.peek() == Some(&Tok::Minus) {
            lx.next();
            true
        } else {
            false
        };
        let n = parse_nat(&mut lx)?;
        raw.push((negative, parse_raw_scalar(&mut lx, n)?));
    }
    lx.expect(Tok::RBracket, "']'")?;
    if !lx.at_end() {
        return Err(ParseError::new(lx.offset(), "trailing input"));
    }
    let terms: Vec<RawTerm> = raw
        .iter()
        .map(|(neg, c)| RawTerm {
            negative: *neg,
            coefs: alloc::vec![c.clone()],
            expo: [0, 0, 0],
        })
        .collect();
    let field = infer_field(&terms, hint)?;
    let mut out: Vec<Scalar> = Vec::with_capacity(N);
    for t in &terms {
        out.push(build_scalar(&t.coefs, t.negative, field)?);
    }
    Ok(out.try_into().expect("length N"))
}

/// Parses a projective plane point `[a:b:c]`.
pub fn parse_point(input: &str, hint: Option<FieldTag>) -> Result<[Scalar; 3], ParseError> {
    parse_coords::<3>(input, hint)
}

/// Parses a pencil parameter `[s:t]`.
pub fn parse_point_p1(input: &str, hint: Option<FieldTag>) -> Result<[Scalar; 2], ParseError> {
    parse_coords::<2>(input, hint)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fermat_cubic() {
        let f = parse_poly("x^3 + y^3 + z^3", None).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.field(), FieldTag::Rationals);
        assert_eq!(f.to_text(), "x^3 + y^3 + z^3");
    }

    #[test]
    fn parses_mixed_signs_and_coefficients() {
        let f = parse_poly("y^2*z - x^3 - 2*x*z^2", None).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(&[1, 0, 2]), Scalar::from_i64(-2, FieldTag::Rationals));
        assert_eq!(f.to_text(), "-x^3 + y^2*z - 2*x*z^2");
    }

    #[test]
    fn parses_rational_and_modular_coefficients() {
        let f = parse_poly("3/4*x^2 + y^2", None).unwrap();
        assert_eq!(
            f.coeff(&[2, 0, 0]),
            Scalar::from_ratio(3, 4, FieldTag::Rationals).unwrap()
        );
        let g = parse_poly("(3 mod 7)*x^2 + y^2", None).unwrap();
        assert_eq!(g.field(), FieldTag::PrimeField(7));
        assert_eq!(g.coeff(&[2, 0, 0]), Scalar::from_i64(3, FieldTag::PrimeField(7)));
        let h = parse_poly("3 mod 7 * x^2 + y^2", None).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn juxtaposition_is_multiplication() {
        let g = parse_poly("2x*y^2 + x*y*z", None).unwrap();
        let h = parse_poly("2*x*y^2 + xyz", None).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let e = parse_poly("x^2 + y", None);
        assert!(e.is_err());
    }

    #[test]
    fn rejects_conflicting_moduli() {
        assert!(parse_poly("1 mod 7 * x + 1 mod 11 * y", None).is_err());
        assert!(parse_poly("1 mod 7 * x", Some(FieldTag::PrimeField(11))).is_err());
    }

    #[test]
    fn field_hint_maps_integers() {
        let f = parse_poly("x^2 + 9*y^2", Some(FieldTag::PrimeField(7))).unwrap();
        assert_eq!(f.coeff(&[0, 2, 0]), Scalar::from_i64(2, FieldTag::PrimeField(7)));
    }

    #[test]
    fn parses_points() {
        let p = parse_point("[1:-2:0]", None).unwrap();
        assert_eq!(p[1], Scalar::from_i64(-2, FieldTag::Rationals));
        let q = parse_point("[1/2:1:3 mod 5]", None).unwrap();
        assert_eq!(q[2].field(), FieldTag::PrimeField(5));
        assert!(parse_point("[1:2]", None).is_err());
        let s = parse_point_p1("[4:1]", Some(FieldTag::PrimeField(7))).unwrap();
        assert_eq!(s[0].as_fp(), Some(4));
    }

    #[test]
    fn parse_scalar_forms() {
        assert_eq!(
            parse_scalar("-3/4", None).unwrap(),
            Scalar::from_ratio(-3, 4, FieldTag::Rationals).unwrap()
        );
        assert_eq!(
            parse_scalar("3 mod 7", None).unwrap(),
            Scalar::from_i64(3, FieldTag::PrimeField(7))
        );
    }

    #[test]
    fn zero_polynomial() {
        let f = parse_poly("0", None).unwrap();
        assert!(f.is_zero());
    }
}
