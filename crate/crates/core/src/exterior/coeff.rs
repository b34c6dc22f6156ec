use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ring coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Domain {
    Integer,
    Rational,
    /// Residues modulo a prime below 2^31.
    Prime(u32),
}

impl Domain {
    pub fn is_field(self) -> bool {
        !matches!(self, Domain::Integer)
    }

    /// Short tag as used on the command line: `z`, `q`, `f<p>`.
    pub fn tag(self) -> String {
        match self {
            Domain::Integer => "z".to_string(),
            Domain::Rational => "q".to_string(),
            Domain::Prime(p) => format!("f{p}"),
        }
    }

    pub fn prime(p: u32) -> Result<Domain> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidFieldTag(format!("f{p}")));
        }
        Ok(Domain::Prime(p))
    }

    pub fn zero(self) -> Coefficient {
        Coefficient::from_i64(self, 0)
    }

    pub fn one(self) -> Coefficient {
        Coefficient::from_i64(self, 1)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => write!(f, "Z"),
            Domain::Rational => write!(f, "Q"),
            Domain::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Parses field tags `q`, `f2`, `f3`, `f5`, `f<p>` (and `z` for the integers).
impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Domain> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" => Ok(Domain::Rational),
            "z" => Ok(Domain::Integer),
            _ => {
                let p = t
                    .strip_prefix('f')
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidFieldTag(s.to_string()))?;
                Domain::prime(p).map_err(|_| Error::InvalidFieldTag(s.to_string()))
            }
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar. Rationals are kept in lowest terms by `BigRational`, residues in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Integer(BigInt),
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Coefficient {
    pub fn from_i64(domain: Domain, v: i64) -> Coefficient {
        match domain {
            Domain::Integer => Coefficient::Integer(BigInt::from(v)),
            Domain::Rational => Coefficient::Rational(BigRational::from_integer(BigInt::from(v))),
            Domain::Prime(p) => Coefficient::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps an integer into `domain` (reduction mod p for prime fields).
    pub fn from_bigint(domain: Domain, v: &BigInt) -> Coefficient {
        match domain {
            Domain::Integer => Coefficient::Integer(v.clone()),
            Domain::Rational => Coefficient::Rational(BigRational::from_integer(v.clone())),
            Domain::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Coefficient::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Coefficient::Integer(_) => Domain::Integer,
            Coefficient::Rational(_) => Domain::Rational,
            Coefficient::Residue { modulus, .. } => Domain::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Integer(a) => a.is_zero(),
            Coefficient::Rational(a) => a.is_zero(),
            Coefficient::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Integer(a) => a.is_one(),
            Coefficient::Rational(a) => a.is_one(),
            Coefficient::Residue { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Coefficient) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain(), other.domain()))
        }
    }

    pub fn checked_add(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Coefficient) -> Result<Coefficient> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    // Same-domain arithmetic; callers guarantee matching domains.
    pub(crate) fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a + b),
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Residue { value: a, modulus }, Coefficient::Residue { value: b, .. }) => {
                Coefficient::Residue {
                    value: ((*a as u64 + *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!("coefficient domain mismatch"),
        }
    }

    pub(crate) fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Integer(a), Coefficient::Integer(b)) => Coefficient::Integer(a * b),
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Residue { value: a, modulus }, Coefficient::Residue { value: b, .. }) => {
                Coefficient::Residue {
                    value: ((*a as u64 * *b as u64) % *modulus as u64) as u32,
                    modulus: *modulus,
                }
            }
            _ => unreachable!("coefficient domain mismatch"),
        }
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Integer(a) => Coefficient::Integer(-a),
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Residue { value, modulus } => Coefficient::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; over the integers only the units ±1 qualify.
    pub fn inverse(&self) -> Option<Coefficient> {
        match self {
            Coefficient::Integer(a) => (a.abs().is_one()).then(|| Coefficient::Integer(a.clone())),
            Coefficient::Rational(a) => (!a.is_zero()).then(|| Coefficient::Rational(a.recip())),
            Coefficient::Residue { value, modulus } => {
                if *value == 0 {
                    return None;
                }
                Some(Coefficient::Residue {
                    value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                    modulus: *modulus,
                })
            }
        }
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(a) => write!(f, "{a}"),
            Coefficient::Rational(a) => write!(f, "{a}"),
            Coefficient::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}
