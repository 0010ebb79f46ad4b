//! Matrix shapes, entry resolution, minors and pfaffians.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LadderError, Result};
use crate::field::Field;
use crate::poly::{Monomial, OrderKind, Polynomial, TermOrder, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatrixShape {
    Generic { m: usize, n: usize },
    Symmetric { n: usize },
    #[serde(rename = "skew")]
    SkewSymmetric { n: usize },
}

impl MatrixShape {
    pub fn rows(&self) -> usize {
        match *self {
            MatrixShape::Generic { m, .. } => m,
            MatrixShape::Symmetric { n } | MatrixShape::SkewSymmetric { n } => n,
        }
    }

    pub fn cols(&self) -> usize {
        match *self {
            MatrixShape::Generic { n, .. } | MatrixShape::Symmetric { n } | MatrixShape::SkewSymmetric { n } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            MatrixShape::Generic { m, n } if m == 0 || m > n => {
                Err(LadderError::Precondition(format!("generic shape needs 1 <= m <= n, got {m}x{n}")))
            }
            MatrixShape::Symmetric { n } | MatrixShape::SkewSymmetric { n } if n == 0 => {
                Err(LadderError::Precondition("matrix size must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// The stored variables, row-major.
    pub fn variables(&self) -> Vec<Var> {
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            for j in 1..=self.cols() {
                let keep = match self {
                    MatrixShape::Generic { .. } => true,
                    MatrixShape::Symmetric { .. } => i <= j,
                    MatrixShape::SkewSymmetric { .. } => i < j,
                };
                if keep {
                    out.push(Var::new(i, j));
                }
            }
        }
        out
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<MatrixEntry> {
        if i == 0 || j == 0 || i > self.rows() || j > self.cols() {
            return Err(LadderError::OutOfBounds(format!("({i},{j}) outside {self}")));
        }
        Ok(match self {
            MatrixShape::Generic { .. } => MatrixEntry::Plus(Var::new(i, j)),
            MatrixShape::Symmetric { .. } => MatrixEntry::Plus(Var::new(i.min(j), i.max(j))),
            MatrixShape::SkewSymmetric { .. } => match i.cmp(&j) {
                std::cmp::Ordering::Less => MatrixEntry::Plus(Var::new(i, j)),
                std::cmp::Ordering::Greater => MatrixEntry::Minus(Var::new(j, i)),
                std::cmp::Ordering::Equal => MatrixEntry::Zero,
            },
        })
    }
}

impl fmt::Display for MatrixShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixShape::Generic { m, n } => write!(f, "generic {m}x{n}"),
            MatrixShape::Symmetric { n } => write!(f, "symmetric {n}x{n}"),
            MatrixShape::SkewSymmetric { n } => write!(f, "skew-symmetric {n}x{n}"),
        }
    }
}

/// A matrix position resolved to its stored variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixEntry {
    Plus(Var),
    Minus(Var),
    Zero,
}

impl MatrixEntry {
    pub fn var(&self) -> Option<Var> {
        match *self {
            MatrixEntry::Plus(v) | MatrixEntry::Minus(v) => Some(v),
            MatrixEntry::Zero => None,
        }
    }

    pub fn to_polynomial(&self, field: Field) -> Polynomial {
        match *self {
            MatrixEntry::Plus(v) => Polynomial::var(field, v),
            MatrixEntry::Minus(v) => Polynomial::var(field, v).neg(),
            MatrixEntry::Zero => Polynomial::zero(field),
        }
    }
}

impl fmt::Display for MatrixEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixEntry::Plus(v) => write!(f, "+{v}"),
            MatrixEntry::Minus(v) => write!(f, "-{v}"),
            MatrixEntry::Zero => write!(f, "0"),
        }
    }
}

fn check_indices(shape: &MatrixShape, idx: &[usize], bound: usize) -> Result<()> {
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(LadderError::Precondition(format!("indices {idx:?} must be strictly increasing")));
    }
    if idx.iter().any(|&i| i == 0 || i > bound) {
        return Err(LadderError::OutOfBounds(format!("indices {idx:?} outside {shape}")));
    }
    Ok(())
}

/// Determinant of the submatrix on `rows` x `cols`, by memoized cofactor expansion.
pub fn minor(shape: &MatrixShape, rows: &[usize], cols: &[usize], field: Field) -> Result<Polynomial> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(LadderError::SizeMismatch { rows: rows.len(), cols: cols.len() });
    }
    check_indices(shape, rows, shape.rows())?;
    check_indices(shape, cols, shape.cols())?;
    let mut memo = HashMap::new();
    Ok(det_rec(shape, rows, cols, field, &mut memo))
}

fn det_rec(
    shape: &MatrixShape,
    rows: &[usize],
    cols: &[usize],
    field: Field,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), Polynomial>,
) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::constant(field.one());
    }
    let key = (rows.to_vec(), cols.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let r = rows[0];
    let mut out = Polynomial::zero(field);
    for (k, &c) in cols.iter().enumerate() {
        let e = shape.entry(r, c).expect("indices checked").to_polynomial(field);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = det_rec(shape, &rows[1..], &rest, field, memo);
        let term = e.mul(&sub);
        out = if k % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    memo.insert(key, out.clone());
    out
}

/// Pfaffian of the principal skew submatrix on `indices`, expanded along the first index.
pub fn pfaffian(shape: &MatrixShape, indices: &[usize], field: Field) -> Result<Polynomial> {
    if !matches!(shape, MatrixShape::SkewSymmetric { .. }) {
        return Err(LadderError::Precondition(format!("pfaffians need a skew-symmetric shape, got {shape}")));
    }
    if indices.is_empty() || indices.len() % 2 == 1 || indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(LadderError::BadPfaffianIndices(indices.to_vec()));
    }
    check_indices(shape, indices, shape.cols())?;
    let mut memo = HashMap::new();
    Ok(pf_rec(indices, field, &mut memo))
}

fn pf_rec(idx: &[usize], field: Field, memo: &mut HashMap<Vec<usize>, Polynomial>) -> Polynomial {
    if idx.is_empty() {
        return Polynomial::constant(field.one());
    }
    if let Some(p) = memo.get(idx) {
        return p.clone();
    }
    let first = idx[0];
    let mut out = Polynomial::zero(field);
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = Polynomial::var(field, Var::new(first, idx[k])).mul(&pf_rec(&rest, field, memo));
        // position k (0-based) is j = k + 1 in the 1-based sign (-1)^j
        out = if k % 2 == 1 { out.add(&term) } else { out.sub(&term) };
    }
    memo.insert(idx.to_vec(), out.clone());
    out
}

/// The (anti)diagonal product of a submatrix, or `None` if some entry on it is zero.
pub fn diagonal_product(shape: &MatrixShape, rows: &[usize], cols: &[usize], kind: OrderKind) -> Option<Monomial> {
    let t = rows.len();
    let mut vars = Vec::with_capacity(t);
    for (k, &r) in rows.iter().enumerate() {
        let c = match kind {
            OrderKind::Diagonal => cols[k],
            OrderKind::AntiDiagonal => cols[t - 1 - k],
        };
        vars.push(shape.entry(r, c).ok()?.var()?);
    }
    Some(Monomial::from_vars(vars))
}

fn subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < t - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, t, cur, out);
            cur.pop();
        }
    }
    go(1, n, t, &mut cur, &mut out);
    out
}

/// All `t`-element subsets of `{1..n}`, lexicographically.
pub fn index_subsets(n: usize, t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![Vec::new()];
    }
    subsets(n, t)
}

/// Checks that `order` realizes its kind on every submatrix of size at most `max_t`.
///
/// Generic and symmetric shapes: the leading monomial of each nonzero minor is the
/// (anti)diagonal product. Skew shapes: the leading monomial of each principal pfaffian
/// pairs indices outside-in (anti-diagonal) or consecutively (diagonal).
pub fn realizes_order_kind(order: &TermOrder, max_t: usize) -> Result<bool> {
    let shape = order.shape();
    let field = Field::Rationals;
    if let MatrixShape::SkewSymmetric { n } = shape {
        for t in 1..=max_t.min(n / 2) {
            for idx in index_subsets(n, 2 * t) {
                let pf = pfaffian(&shape, &idx, field)?;
                let expected = Monomial::from_vars((0..t).map(|k| match order.kind() {
                    OrderKind::AntiDiagonal => Var::new(idx[k], idx[2 * t - 1 - k]),
                    OrderKind::Diagonal => Var::new(idx[2 * k], idx[2 * k + 1]),
                }));
                if pf.leading_monomial(order)? != expected {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    for t in 1..=max_t.min(shape.rows()).min(shape.cols()) {
        for rows in index_subsets(shape.rows(), t) {
            for cols in index_subsets(shape.cols(), t) {
                let det = minor(&shape, &rows, &cols, field)?;
                if det.is_zero() {
                    continue;
                }
                match diagonal_product(&shape, &rows, &cols, order.kind()) {
                    Some(m) if det.leading_monomial(order)? == m => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(Q, s).unwrap()
    }

    #[test]
    fn entries_resolve_canonically() {
        let g = MatrixShape::Generic { m: 2, n: 3 };
        assert_eq!(g.entry(2, 3).unwrap(), MatrixEntry::Plus(Var::new(2, 3)));
        let s = MatrixShape::SkewSymmetric { n: 4 };
        assert_eq!(s.entry(3, 3).unwrap(), MatrixEntry::Zero);
        assert_eq!(s.entry(4, 2).unwrap(), MatrixEntry::Minus(Var::new(2, 4)));
        let y = MatrixShape::Symmetric { n: 3 };
        assert_eq!(y.entry(3, 1).unwrap(), y.entry(1, 3).unwrap());
        assert!(g.entry(3, 1).is_err());
    }

    #[test]
    fn small_minors() {
        let g = MatrixShape::Generic { m: 2, n: 2 };
        assert_eq!(minor(&g, &[1, 2], &[1, 2], Q).unwrap(), p("x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
        assert_eq!(minor(&g, &[2], &[1], Q).unwrap(), p("x[2,1]"));
        let y = MatrixShape::Symmetric { n: 3 };
        assert_eq!(minor(&y, &[1, 2], &[2, 3], Q).unwrap(), p("x[1,2]*x[2,3] - x[1,3]*x[2,2]"));
        assert!(matches!(minor(&g, &[1, 2], &[1], Q), Err(LadderError::SizeMismatch { rows: 2, cols: 1 })));
    }

    #[test]
    fn pfaffian_expansion() {
        let s = MatrixShape::SkewSymmetric { n: 6 };
        assert_eq!(pfaffian(&s, &[2, 5], Q).unwrap(), p("x[2,5]"));
        assert_eq!(
            pfaffian(&s, &[1, 2, 3, 4], Q).unwrap(),
            p("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]")
        );
        assert_eq!(pfaffian(&s, &[1, 2, 3, 4, 5, 6], Q).unwrap().len(), 15);
        assert!(matches!(pfaffian(&s, &[1, 2, 3], Q), Err(LadderError::BadPfaffianIndices(_))));
        assert!(pfaffian(&s, &[2, 2], Q).is_err());
    }

    #[test]
    fn default_orders_realize_their_kind() {
        for shape in [MatrixShape::Generic { m: 3, n: 4 }, MatrixShape::Symmetric { n: 4 }, MatrixShape::SkewSymmetric { n: 6 }] {
            for kind in [OrderKind::Diagonal, OrderKind::AntiDiagonal] {
                assert!(realizes_order_kind(&TermOrder::new(kind, shape), 4).unwrap(), "{shape} {kind}");
            }
        }
    }
}
