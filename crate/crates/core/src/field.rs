//! Exact coefficient fields: arbitrary precision rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::LadderError;

/// The coefficient field of a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, LadderError> {
        if p < 2 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(LadderError::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElement::Modular { value: n.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LadderError;

    /// Accepts `q` or `gf:P`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .parse()
                .map_err(|_| LadderError::InvalidField(format!("bad prime in {s:?}")))?;
            return Field::prime(p);
        }
        Err(LadderError::InvalidField(format!("unknown field {s:?}; expected q or gf:P")))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar. Mixing elements of different fields is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { value: u64, p: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Modular { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) if p == q => {
                FieldElement::Modular { value: (a + b) % p, p: *p }
            }
            _ => panic!("field mismatch in add"),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { value, p } => FieldElement::Modular { value: (p - value) % p, p: *p },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) if p == q => {
                FieldElement::Modular { value: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => panic!("field mismatch in mul"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Modular { value, p } => FieldElement::Modular { value: pow_mod(*value, p - 2, *p), p: *p },
        })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// True if the printed form starts with a minus sign.
    pub fn is_negative_display(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_negative(),
            FieldElement::Modular { .. } => false,
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl FieldElement {
    /// Parses a coefficient literal (`3`, `-2/5`) into the given field.
    pub fn parse_in(field: Field, s: &str) -> Result<Self, LadderError> {
        let bad = || LadderError::Parse(format!("bad coefficient {s:?}"));
        let r: BigRational = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.trim().parse().map_err(|_| bad())?),
        };
        match field {
            Field::Rationals => Ok(FieldElement::Rational(r)),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let m = ((x % &pb) + &pb) % &pb;
                    m.try_into().unwrap_or(0)
                };
                let num = FieldElement::Modular { value: reduce(r.numer()), p };
                let den = FieldElement::Modular { value: reduce(r.denom()), p };
                num.div(&den).ok_or_else(bad)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(32003).unwrap();
        let a = f.from_i64(12345);
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).is_one());
        assert!(f.from_i64(-1).add(&f.one()).is_zero());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rationals;
        let third = f.one().div(&f.from_i64(3)).unwrap();
        let sum = third.add(&third).add(&third);
        assert!(sum.is_one());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn parse_field_names() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("gf:32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert!("gf:32004".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }

    #[test]
    fn parse_coefficients() {
        let c = FieldElement::parse_in(Field::Rationals, "-2/4").unwrap();
        assert_eq!(c.to_string(), "-1/2");
        let m = FieldElement::parse_in(Field::Prime(7), "-1").unwrap();
        assert_eq!(m, FieldElement::Modular { value: 6, p: 7 });
    }
}
