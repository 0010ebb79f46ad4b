use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Monomial, TermOrder, Var};
use crate::error::{LadderError, Result};
use crate::field::{Field, FieldElement};

/// Sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial { field, terms: BTreeMap::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: FieldElement) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { field, terms }
    }

    pub fn monomial(field: Field, m: Monomial) -> Self {
        Self::term(m, field.one())
    }

    pub fn var(field: Field, v: Var) -> Self {
        Self::monomial(field, Monomial::var(v))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElement)>>(field: Field, it: I) -> Self {
        let mut p = Polynomial::zero(field);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { field: self.field, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial { field: self.field, terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect() }
    }

    /// `c * m * self`
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), &c.mul(d));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.field.one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, FieldElement)> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(LadderError::ZeroPolynomial)?;
        for v in self.variables() {
            if !order.knows(v) {
                return Err(LadderError::UnknownVariable(v.to_string()));
            }
        }
        let best = it.fold(first, |best, cur| if order.cmp(cur.0, best.0).is_gt() { cur } else { best });
        Ok((best.0.clone(), best.1.clone()))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Result<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self, order: &TermOrder) -> Result<Polynomial> {
        let (_, c) = self.leading_term(order)?;
        Ok(self.scale(&c.inv().expect("nonzero leading coefficient")))
    }

    /// Terms sorted decreasingly under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Canonical text `c*x[i,j]^e*... + ...`, terms decreasing under `order`.
    pub fn to_text(&self, order: &TermOrder) -> String {
        format_terms(self.sorted_terms(order))
    }

    /// Replaces every variable by a polynomial (variables missing from `subst` stay).
    pub fn substitute(&self, subst: &dyn Fn(Var) -> Option<Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                let img = subst(v).unwrap_or_else(|| Polynomial::var(self.field, v));
                acc = acc.mul(&img.pow(e));
            }
            out = out.add(&acc);
        }
        out
    }

    /// Parses the canonical text form into `field`.
    pub fn parse(field: Field, s: &str) -> Result<Polynomial> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero(field));
        }
        let mut p = Polynomial::zero(field);
        let mut depth = 0usize;
        let mut start = 0usize;
        let bytes = s.as_bytes();
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut negative = false;
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'[' => depth += 1,
                b']' => depth = depth.saturating_sub(1),
                b'+' | b'-' if depth == 0 => {
                    let chunk = s[start..i].trim();
                    if !chunk.is_empty() {
                        pieces.push((negative, chunk));
                    } else if i != 0 && !pieces.is_empty() {
                        return Err(LadderError::Parse(format!("dangling sign in {s:?}")));
                    }
                    negative = b == b'-';
                    start = i + 1;
                }
                _ => {}
            }
        }
        let chunk = s[start..].trim();
        if chunk.is_empty() {
            return Err(LadderError::Parse(format!("trailing sign in {s:?}")));
        }
        pieces.push((negative, chunk));
        for (neg, chunk) in pieces {
            let (coeff, mono) = split_term(field, chunk)?;
            let coeff = if neg { coeff.neg() } else { coeff };
            p.add_term(mono, &coeff);
        }
        Ok(p)
    }
}

fn split_term(field: Field, chunk: &str) -> Result<(FieldElement, Monomial)> {
    if chunk.starts_with("x[") {
        return Ok((field.one(), chunk.parse()?));
    }
    match chunk.split_once('*') {
        Some((c, rest)) => Ok((FieldElement::parse_in(field, c)?, rest.parse()?)),
        None => Ok((FieldElement::parse_in(field, chunk)?, Monomial::one())),
    }
}

fn format_terms(terms: Vec<(Monomial, FieldElement)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative_display();
        let abs = if neg { c.neg() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{abs}*{m}"));
        }
    }
    out
}

impl fmt::Display for Polynomial {
    /// Canonical text with terms in decreasing structural order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(m, c)| (m.clone(), c.clone())).collect();
        write!(f, "{}", format_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MatrixShape;

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(Field::Rationals, Var::new(i, j))
    }

    #[test]
    fn leading_term_of_two_minor() {
        let det = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)));
        let diag = TermOrder::diagonal(MatrixShape::Generic { m: 2, n: 2 });
        let (m, c) = det.leading_term(&diag).unwrap();
        assert_eq!(m.to_string(), "x[1,1]*x[2,2]");
        assert!(c.is_one());
        assert_eq!(det.to_text(&diag), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        let anti = TermOrder::anti_diagonal(MatrixShape::Generic { m: 2, n: 2 });
        assert_eq!(det.to_text(&anti), "-x[1,2]*x[2,1] + x[1,1]*x[2,2]");
    }

    #[test]
    fn zero_polynomial_has_no_leading_term() {
        let o = TermOrder::diagonal(MatrixShape::Generic { m: 1, n: 1 });
        assert_eq!(Polynomial::zero(Field::Rationals).leading_term(&o), Err(LadderError::ZeroPolynomial));
        let single = x(1, 1).scale(&Field::Rationals.from_i64(5));
        let (m, c) = single.leading_term(&o).unwrap();
        assert_eq!(m, Monomial::var(Var::new(1, 1)));
        assert_eq!(c, Field::Rationals.from_i64(5));
    }

    #[test]
    fn parse_round_trip() {
        let o = TermOrder::diagonal(MatrixShape::Generic { m: 2, n: 3 });
        let text = "3/2*x[1,1]^2*x[2,3] - x[1,2] + 7";
        let p = Polynomial::parse(Field::Rationals, text).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(Polynomial::parse(Field::Rationals, &p.to_text(&o)).unwrap(), p);
        assert_eq!(Polynomial::parse(Field::Rationals, "-x[1,1]").unwrap(), x(1, 1).neg());
        assert!(Polynomial::parse(Field::Rationals, "x[1,1] +").is_err());
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let p = x(1, 1).add(&x(1, 2)).sub(&x(1, 2));
        assert_eq!(p, x(1, 1));
        assert!(p.sub(&x(1, 1)).is_zero());
    }
}
