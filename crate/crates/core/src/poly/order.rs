use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::Monomial;
use super::Var;
use crate::error::{LadderError, Result};
use crate::matrix::MatrixShape;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    #[serde(rename = "diag")]
    Diagonal,
    #[serde(rename = "antidiag")]
    AntiDiagonal,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Diagonal => write!(f, "diag"),
            OrderKind::AntiDiagonal => write!(f, "antidiag"),
        }
    }
}

impl FromStr for OrderKind {
    type Err = LadderError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diag" | "diagonal" => Ok(OrderKind::Diagonal),
            "antidiag" | "anti-diagonal" | "antidiagonal" => Ok(OrderKind::AntiDiagonal),
            _ => Err(LadderError::Parse(format!("unknown order {s:?}; expected diag or antidiag"))),
        }
    }
}

/// A lexicographic term order given by a ranking of the variables (largest first).
///
/// The default rankings realize the (anti)diagonal property: row-major with the top row
/// largest, columns left-to-right for `Diagonal` and right-to-left for `AntiDiagonal`.
#[derive(Clone, Debug)]
pub struct TermOrder {
    kind: OrderKind,
    shape: MatrixShape,
    ranking: Arc<Vec<Var>>,
    rank: Arc<HashMap<Var, u32>>,
}

impl PartialEq for TermOrder {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.shape == other.shape && self.ranking == other.ranking
    }
}

impl TermOrder {
    pub fn new(kind: OrderKind, shape: MatrixShape) -> Self {
        let mut vars = shape.variables();
        match kind {
            OrderKind::Diagonal => vars.sort_by_key(|v| (v.row, v.col)),
            OrderKind::AntiDiagonal => vars.sort_by_key(|v| (v.row, std::cmp::Reverse(v.col))),
        }
        Self::from_ranking_unchecked(kind, shape, vars)
    }

    pub fn diagonal(shape: MatrixShape) -> Self {
        Self::new(OrderKind::Diagonal, shape)
    }

    pub fn anti_diagonal(shape: MatrixShape) -> Self {
        Self::new(OrderKind::AntiDiagonal, shape)
    }

    /// Substitutes a caller-supplied variable permutation. The ranking must list every
    /// variable of the shape exactly once; whether it realizes `kind` is the caller's claim
    /// and can be checked with [`crate::matrix::realizes_order_kind`].
    pub fn from_ranking(kind: OrderKind, shape: MatrixShape, ranking: Vec<Var>) -> Result<Self> {
        let mut expected = shape.variables();
        let mut given = ranking.clone();
        expected.sort();
        given.sort();
        if expected != given {
            return Err(LadderError::Precondition(
                "ranking must be a permutation of the shape's variables".into(),
            ));
        }
        Ok(Self::from_ranking_unchecked(kind, shape, ranking))
    }

    fn from_ranking_unchecked(kind: OrderKind, shape: MatrixShape, ranking: Vec<Var>) -> Self {
        let rank = ranking.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
        TermOrder { kind, shape, ranking: Arc::new(ranking), rank: Arc::new(rank) }
    }

    /// The same order with one extra variable ranked above all others (an elimination order
    /// for that variable).
    pub fn with_top_variable(&self, top: Var) -> Self {
        let mut ranking = vec![top];
        ranking.extend(self.ranking.iter().copied().filter(|v| *v != top));
        Self::from_ranking_unchecked(self.kind, self.shape, ranking)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    pub fn ranking(&self) -> &[Var] {
        &self.ranking
    }

    pub fn knows(&self, v: Var) -> bool {
        self.rank.contains_key(&v)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for v in a.vars().chain(b.vars()) {
            if !self.knows(v) {
                return Err(LadderError::UnknownVariable(v.to_string()));
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Infallible comparison; every variable must be known to the order.
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let key = |m: &Monomial| {
            let mut k: SmallVec<[(u32, u32); 8]> = m
                .factors()
                .iter()
                .map(|(v, e)| (*self.rank.get(v).unwrap_or_else(|| panic!("variable {v} not in term order")), *e))
                .collect();
            k.sort_unstable();
            k
        };
        let (ka, kb) = (key(a), key(b));
        for (x, y) in ka.iter().zip(kb.iter()) {
            if x.0 != y.0 {
                // the monomial holding the larger variable wins
                return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        ka.len().cmp(&kb.len())
    }
}
