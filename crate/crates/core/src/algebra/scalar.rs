//! Exact field elements: arbitrary-precision rationals and prime fields.

use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::AlgebraError;

/// Tag identifying the coefficient field of a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldTag {
    /// The field of rational numbers.
    Rationals,
    /// The prime field `F_p`; the modulus must be prime.
    PrimeField(u64),
}

impl FieldTag {
    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldTag::Rationals => 0,
            FieldTag::PrimeField(p) => *p,
        }
    }

    /// Validates that a prime-field modulus really is prime.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        match self {
            FieldTag::Rationals => Ok(()),
            FieldTag::PrimeField(p) => {
                if is_prime_u64(*p) {
                    Ok(())
                } else {
                    Err(AlgebraError::NonPrimeModulus(*p))
                }
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::PrimeField(p) => write!(f, "F{}", p),
        }
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (the
/// `BigRational` normal form); prime-field values are reduced to `[0, p)`.
/// Arithmetic between scalars of different fields is a programming error and
/// panics; public entry points validate fields before computing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::Rat(_) => FieldTag::Rationals,
            Scalar::Fp { p, .. } => FieldTag::PrimeField(*p),
        }
    }

    pub fn zero(field: FieldTag) -> Self {
        Scalar::from_i64(0, field)
    }

    pub fn one(field: FieldTag) -> Self {
        Scalar::from_i64(1, field)
    }

    pub fn from_i64(n: i64, field: FieldTag) -> Self {
        match field {
            FieldTag::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldTag::PrimeField(p) => {
                let val = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val }
            }
        }
    }

    pub fn from_bigint(n: &BigInt, field: FieldTag) -> Self {
        match field {
            FieldTag::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            FieldTag::PrimeField(p) => {
                let m = BigInt::from(p);
                let mut r = n % &m;
                if r.sign() == Sign::Minus {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::Fp {
                    p,
                    val: digits.first().copied().unwrap_or(0),
                }
            }
        }
    }

    /// Builds `num/den` in the given field; over `F_p` this is `num * den^-1`.
    pub fn from_ratio(num: i64, den: i64, field: FieldTag) -> Result<Self, AlgebraError> {
        if den == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        match field {
            FieldTag::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldTag::PrimeField(_) => {
                let d = Scalar::from_i64(den, field);
                Scalar::from_i64(num, field).checked_div(&d)
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert!(
            self.field() == other.field(),
            "field mismatch: {} vs {}",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *p as u128;
                Scalar::Fp { p: *p, val: s as u64 }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.assert_same_field(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { val: b, .. }) => {
                let s = (*a as u128 * *b as u128) % *p as u128;
                Scalar::Fp { p: *p, val: s as u64 }
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self) -> Result<Scalar, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: mod_inv(*val, *p),
            },
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        if self.field() != other.field() {
            return Err(AlgebraError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            });
        }
        Ok(self.mul(&other.inv()?))
    }

    /// `self / other`, panicking on division by zero.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self.checked_div(other).expect("scalar division")
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Canonical representative in `[0, p)`, if this scalar is prime-field.
    pub fn as_fp(&self) -> Option<u64> {
        match self {
            Scalar::Fp { val, .. } => Some(*val),
            _ => None,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for canonical sorting (points, divisor supports).
/// Scalars of different fields order by field tag.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp { p: p1, val: a }, Scalar::Fp { p: p2, val: b }) => {
                p1.cmp(p2).then(a.cmp(b))
            }
            (Scalar::Rat(_), Scalar::Fp { .. }) => Ordering::Less,
            (Scalar::Fp { .. }, Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{}", val),
        }
    }
}

impl Scalar {
    /// Renders a rational as `p/q` (or an integer) and a prime-field value
    /// as its canonical representative. Used for report serialization.
    pub fn to_display_string(&self) -> alloc::string::String {
        self.to_string()
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a != 0 mod p.
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        let tmp_r = old_r - q * r;
        old_r = r;
        r = tmp_r;
        let tmp_s = old_s - q * s;
        old_s = s;
        s = tmp_s;
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        a %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    const F7: FieldTag = FieldTag::PrimeField(7);

    #[test]
    fn rational_normal_form() {
        let a = Scalar::from_ratio(6, -4, FieldTag::Rationals).unwrap();
        match &a {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn fp_reduction_and_inverse() {
        let a = Scalar::from_i64(-3, F7);
        assert_eq!(a.as_fp(), Some(4));
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
    }

    #[test]
    fn exactness_roundtrip() {
        for (n, d) in [(3i64, 4i64), (-7, 5), (22, 7)] {
            let a = Scalar::from_ratio(n, d, FieldTag::Rationals).unwrap();
            let b = Scalar::from_ratio(d, n, FieldTag::Rationals).unwrap();
            assert!(a.mul(&b).is_one());
        }
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_panics() {
        let a = Scalar::from_i64(1, FieldTag::Rationals);
        let b = Scalar::from_i64(1, F7);
        let _ = a.add(&b);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91)); // 7 * 13
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = Scalar::from_i64(3, F7);
        let mut acc = Scalar::one(F7);
        for e in 0..10u64 {
            assert_eq!(a.pow(e), acc);
            acc = acc.mul(&a);
        }
    }
}
