//! Exact coefficient fields: the rationals and prime fields `GF(p)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Which field the coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds `GF(p)`, rejecting composite moduli. Moduli are limited to 32 bits.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p > u32::MAX as u64 {
            Err(FieldError::ModulusTooLarge(p))
        } else if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElem::Prime {
                value: reduce_i128(n as i128, p),
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => FieldElem::Prime {
                value: reduce_bigint(n, p),
                modulus: p,
            },
        }
    }

    /// `num / den`; fails when `den` vanishes in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElem, FieldError> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.from_bigint(num).div(&d))
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        x.field() == *self
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

/// A field element in canonical form: rationals are reduced with a positive
/// denominator, residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Rational(_) => Field::Rational,
            FieldElem::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_zero(),
            FieldElem::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_one(),
            FieldElem::Prime { value, .. } => *value == 1,
        }
    }

    /// Whether the printed form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElem::Rational(q) => q.is_negative(),
            FieldElem::Prime { .. } => false,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            (
                FieldElem::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElem::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => FieldElem::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, other),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(-a),
            FieldElem::Prime { value, modulus } => FieldElem::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            (
                FieldElem::Prime {
                    value: a,
                    modulus: p,
                },
                FieldElem::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => FieldElem::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, other),
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// On zero; callers check `is_zero` first.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero field element");
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(a.recip()),
            FieldElem::Prime { value, modulus } => FieldElem::Prime {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn abs(&self) -> Self {
        match self {
            FieldElem::Rational(a) => FieldElem::Rational(a.abs()),
            other => other.clone(),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &FieldElem, b: &FieldElem) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    u64::try_from(r).expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    debug_assert!(e.gcd.is_one());
    reduce_bigint(&e.x, p)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
