use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact coefficient field: either GF(p) for a word-size prime p, or the
/// rationals with arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientField {
    kind: FieldKind,
}

/// A field element. Prime-field values are canonical representatives in
/// `0..p`; rationals are kept in lowest terms with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coeff {
    Prime(u64),
    Rational(BigRational),
}

const MAX_PRIME: u64 = 1 << 31;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// Inverse mod p by extended Euclid; a must be nonzero mod p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of a non-unit");
    old_s.rem_euclid(p as i128) as u64
}

impl CoefficientField {
    /// GF(p). Fails unless p is a prime not exceeding 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::InvalidConfig(format!(
                "prime field modulus {p} exceeds 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidConfig(format!("{p} is not prime")));
        }
        Ok(CoefficientField {
            kind: FieldKind::Prime(p),
        })
    }

    pub fn rationals() -> Self {
        CoefficientField {
            kind: FieldKind::Rationals,
        }
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    /// p for GF(p), 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::Prime(p) => p,
            FieldKind::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self.kind {
            FieldKind::Prime(_) => Coeff::Prime(0),
            FieldKind::Rationals => Coeff::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coeff {
        match self.kind {
            FieldKind::Prime(_) => Coeff::Prime(1),
            FieldKind::Rationals => Coeff::Rational(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self.kind {
            FieldKind::Prime(p) => Coeff::Prime((n as i128).rem_euclid(p as i128) as u64),
            FieldKind::Rationals => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// num/den as a field element. den must be nonzero.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Coeff> {
        if den == 0 {
            return Err(Error::InvalidConfig("zero denominator".into()));
        }
        match self.kind {
            FieldKind::Prime(_) => {
                let d = self.from_i64(den);
                if self.is_zero(&d) {
                    return Err(Error::InvalidConfig(format!(
                        "denominator {den} vanishes in characteristic {}",
                        self.characteristic()
                    )));
                }
                Ok(self.mul(&self.from_i64(num), &self.inv(&d)))
            }
            FieldKind::Rationals => Ok(Coeff::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
        }
    }

    /// Parse an unsigned decimal literal of arbitrary length.
    pub fn from_decimal(&self, digits: &str) -> Result<Coeff> {
        let n = BigInt::parse_bytes(digits.as_bytes(), 10)
            .ok_or_else(|| Error::InvalidConfig(format!("bad integer literal '{digits}'")))?;
        Ok(match self.kind {
            FieldKind::Prime(p) => {
                use num_traits::ToPrimitive;
                let r = n % BigInt::from(p);
                Coeff::Prime(r.to_u64().unwrap())
            }
            FieldKind::Rationals => Coeff::Rational(BigRational::from_integer(n)),
        })
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Prime(v) => *v == 0,
            Coeff::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Prime(v) => *v == 1,
            Coeff::Rational(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.kind(), a, b) {
            (FieldKind::Prime(p), Coeff::Prime(x), Coeff::Prime(y)) => {
                Coeff::Prime((x + y) % p)
            }
            (FieldKind::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => {
                Coeff::Rational(x + y)
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self.kind(), a) {
            (FieldKind::Prime(p), Coeff::Prime(x)) => Coeff::Prime((p - x) % p),
            (FieldKind::Rationals, Coeff::Rational(x)) => Coeff::Rational(-x),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self.kind(), a, b) {
            (FieldKind::Prime(p), Coeff::Prime(x), Coeff::Prime(y)) => {
                Coeff::Prime(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldKind::Rationals, Coeff::Rational(x), Coeff::Rational(y)) => {
                Coeff::Rational(x * y)
            }
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    /// Multiplicative inverse. Panics on zero; leading coefficients are
    /// nonzero by the term invariant, and the parser rejects zero divisors.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self.kind(), a) {
            (FieldKind::Prime(p), Coeff::Prime(x)) => Coeff::Prime(mod_inverse(*x, *p)),
            (FieldKind::Rationals, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            _ => panic!("coefficient does not belong to this field"),
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// True when the canonical text form starts with a minus sign.
    pub fn is_negative(&self, c: &Coeff) -> bool {
        match c {
            Coeff::Prime(_) => false,
            Coeff::Rational(r) => r.is_negative(),
        }
    }

    pub fn format(&self, c: &Coeff) -> String {
        match c {
            Coeff::Prime(v) => v.to_string(),
            Coeff::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}
