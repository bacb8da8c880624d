//! Base fields and their scalars.
//!
//! Rational scalars are arbitrary precision fractions kept in lowest terms
//! with a positive denominator, so equality is structural. Prime field
//! scalars are residues in `[0, p)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime; keeps residue products inside `u64`.
pub const MAX_PRIME: u32 = (1 << 31) - 1;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(RBig),
    Fp { v: u32, p: u32 },
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Prime field of order `p`; rejects composites and oversized primes.
    pub fn prime(p: u32) -> Result<Field> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::input(format!("{p} is not an admissible prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(RBig::ZERO),
            Field::Prime(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(RBig::ONE),
            Field::Prime(p) => Scalar::Fp { v: 1 % p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(RBig::from(n)),
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(*p as i64) as u32,
                p: *p,
            },
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::input(format!("denominator {den} vanishes in {self}")))?;
        Ok(&self.from_i64(num) * &inv)
    }

    /// Parses the text encoding: `num/den` (den optional) for ℚ, an integer
    /// in `[0, p)` for 𝔽_p.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match self {
            Field::Rationals => {
                let (n, d) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num = IBig::from_str(n)
                    .map_err(|_| Error::input(format!("bad rational numerator in {text:?}")))?;
                let den = UBig::from_str(d)
                    .map_err(|_| Error::input(format!("bad rational denominator in {text:?}")))?;
                if den == UBig::ZERO {
                    return Err(Error::input(format!("zero denominator in {text:?}")));
                }
                Ok(Scalar::Q(RBig::from_parts(num, den)))
            }
            Field::Prime(p) => {
                let v: u64 = text
                    .parse()
                    .map_err(|_| Error::input(format!("bad residue {text:?}")))?;
                if v >= *p as u64 {
                    return Err(Error::input(format!("residue {v} not in [0, {p})")));
                }
                Ok(Scalar::Fp { v: v as u32, p: *p })
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// `Q`, or `F<p>` / `F_<p>` for a prime `p`.
impl FromStr for Field {
    type Err = Error;

    fn from_str(text: &str) -> Result<Field> {
        if text == "Q" {
            return Ok(Field::Rationals);
        }
        let p = text
            .strip_prefix('F')
            .map(|t| t.trim_start_matches('_'))
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::input(format!("unknown field {text:?}; use Q or Fp such as F3")))?;
        Field::prime(p)
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(r) => Scalar::Q(RBig::ONE / r),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32,
                p: *p,
            },
        })
    }

    /// In-place `self += a * b`, the inner step of every elimination and
    /// product loop.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Q(s), Scalar::Q(x), Scalar::Q(y)) => {
                *s += x * y;
            }
            (Scalar::Fp { v, p }, Scalar::Fp { v: x, p: px }, Scalar::Fp { v: y, p: py })
                if p == px && p == py =>
            {
                let m = *p as u64;
                *v = ((*v as u64 + (*x as u64) * (*y as u64) % m) % m) as u32;
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denominator() == &UBig::ONE {
                    write!(f, "{}", r.numerator())
                } else {
                    write!(f, "{}/{}", r.numerator(), r.denominator())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $qop:tt, $fp:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $qop b),
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) if p == q => {
                        let f: fn(u64, u64, u64) -> u64 = $fp;
                        Scalar::Fp { v: f(*a as u64, *b as u64, *p as u64) as u32, p: *p }
                    }
                    _ => panic!("scalars from different fields"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, +, |a, b, m| (a + b) % m);
binop!(Sub, sub, -, |a, b, m| (a + m - b) % m);
binop!(Mul, mul, *, |a, b, m| a * b % m);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (*p - *v) % *p,
                p: *p,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Serialized form of a [`Field`]: `{"kind": "Q"}` or `{"kind": "Fp", "p": 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field> {
        match (self.kind.as_str(), self.p) {
            ("Q", None) => Ok(Field::Rationals),
            ("Q", Some(_)) => Err(Error::input("field Q takes no prime")),
            ("Fp", Some(p)) => Field::prime(p),
            ("Fp", None) => Err(Error::input("field Fp requires \"p\"")),
            (k, _) => Err(Error::input(format!("unknown field kind {k:?}"))),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> Self {
        match f {
            Field::Rationals => FieldSpec {
                kind: "Q".into(),
                p: None,
            },
            Field::Prime(p) => FieldSpec {
                kind: "Fp".into(),
                p: Some(p),
            },
        }
    }
}
