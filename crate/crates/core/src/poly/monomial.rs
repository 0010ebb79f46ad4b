use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::LadderError;

/// A matrix indeterminate `x[row,col]`, 1-based. For symmetric and skew shapes only the
/// stored representative (row <= col, resp. row < col) is ever used as a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub row: u16,
    pub col: u16,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var { row: row as u16, col: col as u16 }
    }

    pub fn cell(self) -> (usize, usize) {
        (self.row as usize, self.col as usize)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

impl FromStr for Var {
    type Err = LadderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LadderError::Parse(format!("bad variable {s:?}"));
        let inner = s.trim().strip_prefix("x[").and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        let (r, c) = inner.split_once(',').ok_or_else(bad)?;
        let row: u16 = r.trim().parse().map_err(|_| bad())?;
        let col: u16 = c.trim().parse().map_err(|_| bad())?;
        Ok(Var { row, col })
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sparse exponent vector sorted by variable, with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    factors: SmallVec<[(Var, u32); 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut factors = SmallVec::new();
        factors.push((v, e));
        Monomial { factors, degree: e }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs, merging repeats.
    pub fn from_factors<I: IntoIterator<Item = (Var, u32)>>(it: I) -> Self {
        let mut f: SmallVec<[(Var, u32); 4]> = it.into_iter().filter(|(_, e)| *e > 0).collect();
        f.sort_by_key(|(v, _)| *v);
        let mut merged: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (v, e) in f {
            match merged.last_mut() {
                Some((w, x)) if *w == v => *x += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|(_, e)| e).sum();
        Monomial { factors: merged, degree }
    }

    pub fn from_vars<I: IntoIterator<Item = Var>>(it: I) -> Self {
        Self::from_factors(it.into_iter().map(|v| (v, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|(v, _)| *v)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors.binary_search_by_key(&v, |(w, _)| *w).map(|i| self.factors[i].1).unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.exponent(v) > 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        let mut j = 0;
        let b = &other.factors;
        for &(v, e) in &self.factors {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_factors(
            other.factors.iter().map(|&(v, e)| (v, e - self.exponent(v))),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut all: Vec<(Var, u32)> = self.factors.to_vec();
        for &(v, e) in &other.factors {
            match all.iter_mut().find(|(w, _)| *w == v) {
                Some((_, x)) => *x = (*x).max(e),
                None => all.push((v, e)),
            }
        }
        Monomial::from_factors(all)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.vars().all(|v| !other.contains(v))
    }

    /// Removes every occurrence of `v`.
    pub fn without(&self, v: Var) -> Monomial {
        Monomial::from_factors(self.factors.iter().copied().filter(|(w, _)| *w != v))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = LadderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut factors = Vec::new();
        for part in s.split('*') {
            let (v, e) = match part.split_once('^') {
                Some((v, e)) => (v, e.trim().parse::<u32>().map_err(|_| LadderError::Parse(format!("bad exponent in {part:?}")))?),
                None => (part, 1),
            };
            factors.push((v.parse::<Var>()?, e));
        }
        Ok(Monomial::from_factors(factors))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
