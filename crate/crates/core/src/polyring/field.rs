use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient field: the rationals or a prime field `𝔽_p`.
///
/// Text form is `q` or `gf:P`. Primes are limited to `p < 2³²` so residue
/// products fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::InvalidField(format!(
                "{p} exceeds the supported range"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// From a characteristic: 0 for the rationals.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(FieldSpec::Rational)
        } else {
            FieldSpec::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Modular {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let den = self.from_bigint(den);
        let inv = den.inverse().ok_or(Error::DivisionByZero)?;
        Ok(&self.from_bigint(num) * &inv)
    }

    /// All field elements in increasing residue order, or `None` over ℚ.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some((0..p).map(|v| self.from_u64(v)).collect()),
        }
    }

    /// `k!` as a field element.
    pub fn factorial(&self, k: u32) -> Scalar {
        (1..=k as i64).fold(self.one(), |acc, i| &acc * &self.from_i64(i))
    }

    pub(crate) fn check_same(&self, other: &FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{self} vs {other}")))
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("GF:"))
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidField(format!("expected `q` or `gf:P`, got {s:?}")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A field element. Rationals are reduced fractions; prime-field elements are
/// residues in `0..p` tagged with their modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(num_traits::pow(r.clone(), exp as usize)),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, exp as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Whether the printed form needs a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }

    /// Residue of a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed-field arithmetic: {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular { value: a, modulus },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Modular {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => mixed(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular { value: a, modulus },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) if modulus == q => Scalar::Modular {
                value: a * b % modulus,
                modulus: *modulus,
            },
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

/// Fixed total order used for canonical orbit representatives: residues by
/// integer value, rationals by numerator then denominator.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) => p.cmp(q).then(a.cmp(b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => a
                .numer()
                .cmp(b.numer())
                .then_with(|| a.denom().cmp(b.denom())),
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}
