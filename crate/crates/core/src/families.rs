//! Natural generating sets of the four ideal families and their initial terms.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{LadderError, Result};
use crate::field::Field;
use crate::ladders::Ladder;
use crate::matrix::{index_subsets, minor, pfaffian};
use crate::poly::{Monomial, Polynomial, TermOrder};

/// A validated ladder together with its matrix shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyInstance {
    ladder: Ladder,
}

impl FamilyInstance {
    pub fn new(ladder: Ladder) -> Result<Self> {
        ladder.check()?;
        Ok(FamilyInstance { ladder })
    }

    pub fn ladder(&self) -> &Ladder {
        &self.ladder
    }

    pub fn shape(&self) -> crate::matrix::MatrixShape {
        self.ladder.shape()
    }
}

/// Which selection produced a generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Selection {
    Minor { rows: Vec<usize>, cols: Vec<usize> },
    Pfaffian { indices: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub polynomial: Polynomial,
    /// Zero-based region index.
    pub region: usize,
    pub selection: Selection,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.polynomial.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn region_selections(ladder: &Ladder, k: usize) -> Vec<Selection> {
    if ladder.is_inert(k) {
        return Vec::new();
    }
    let (p, t) = (ladder.points()[k], ladder.t()[k]);
    match ladder {
        Ladder::MaxMinors(x) => index_subsets(x.n, x.m)
            .into_iter()
            .map(|cols| Selection::Minor { rows: (1..=x.m).collect(), cols })
            .collect(),
        Ladder::Pfaffian(_) => index_subsets(p.1 - p.0 + 1, 2 * t)
            .into_iter()
            .map(|idx| Selection::Pfaffian { indices: idx.into_iter().map(|i| i + p.0 - 1).collect() })
            .collect(),
        Ladder::Symmetric(x) => {
            let (v, w) = (p.0, p.1.min(x.n));
            let subsets = index_subsets(w, t);
            let mut out = Vec::new();
            for rows in &subsets {
                for cols in &subsets {
                    if rows.iter().zip(cols).any(|(r, c)| r > c) {
                        continue;
                    }
                    let inside = rows.iter().all(|&r| cols.iter().all(|&c| r.min(c) <= v));
                    if inside {
                        out.push(Selection::Minor { rows: rows.clone(), cols: cols.clone() });
                    }
                }
            }
            out
        }
        Ladder::OneSided(x) => {
            let (a, b) = (p.0.min(x.m), p.1);
            let col_sets: Vec<Vec<usize>> =
                index_subsets(x.n - b + 1, t).into_iter().map(|c| c.into_iter().map(|j| j + b - 1).collect()).collect();
            let mut out = Vec::new();
            for rows in index_subsets(a, t) {
                for cols in &col_sets {
                    out.push(Selection::Minor { rows: rows.clone(), cols: cols.clone() });
                }
            }
            out
        }
    }
}

fn realize(ladder: &Ladder, sel: &Selection, field: Field) -> Result<Polynomial> {
    let shape = ladder.shape();
    match sel {
        Selection::Minor { rows, cols } => minor(&shape, rows, cols, field),
        Selection::Pfaffian { indices } => pfaffian(&shape, indices, field),
    }
}

/// Generators of region `k` alone, in enumeration order.
pub fn region_generators(ladder: &Ladder, k: usize, field: Field) -> Result<Vec<Polynomial>> {
    region_selections(ladder, k)
        .iter()
        .map(|s| realize(ladder, s, field))
        .filter(|p| !matches!(p, Ok(q) if q.is_zero()))
        .collect()
}

/// Union over regions of the minors or pfaffians inside each region, deduplicated up to
/// a scalar and ordered by (region, selection).
pub fn natural_generators(ladder: &Ladder, field: Field) -> Result<GeneratorSet> {
    let order = ladder.default_order();
    let per_region: Vec<Result<Vec<Generator>>> = (0..ladder.points().len())
        .into_par_iter()
        .map(|k| {
            region_selections(ladder, k)
                .into_iter()
                .map(|selection| {
                    let polynomial = realize(ladder, &selection, field)?;
                    Ok(Generator { polynomial, region: k, selection })
                })
                .collect()
        })
        .collect();
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let mut generators = Vec::new();
    for region in per_region {
        for g in region? {
            if g.polynomial.is_zero() {
                continue;
            }
            if seen.insert(g.polynomial.monic(&order)?) {
                generators.push(g);
            }
        }
    }
    Ok(GeneratorSet { generators })
}

/// Leading monomials of the natural generators under `order`.
pub fn initial_generators(ladder: &Ladder, order: &TermOrder, field: Field) -> Result<BTreeSet<Monomial>> {
    natural_generators(ladder, field)?
        .generators
        .iter()
        .map(|g| g.polynomial.leading_monomial(order))
        .collect()
}

/// Whether `order` is of the kind the family's Groebner claim is made for.
pub fn order_matches_family(ladder: &Ladder, order: &TermOrder) -> bool {
    order.kind() == ladder.default_order_kind()
}

/// Rejects an order that does not know every ladder variable.
pub fn check_order_covers(ladder: &Ladder, order: &TermOrder) -> Result<()> {
    match ladder.variables().into_iter().find(|v| !order.knows(*v)) {
        Some(v) => Err(LadderError::UnknownVariable(v.to_string())),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladders::{MaxMinors, OneSidedLadder, PfaffianLadder};
    use crate::poly::OrderKind;

    const Q: Field = Field::Rationals;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn generator_counts() {
        let mm = Ladder::MaxMinors(MaxMinors { m: 2, n: 3 });
        assert_eq!(natural_generators(&mm, Q).unwrap().len(), 3);
        let p4 = Ladder::Pfaffian(PfaffianLadder { n: 4, corners: vec![(1, 4)], t: vec![2] });
        let g = natural_generators(&p4, Q).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.generators[0].selection, Selection::Pfaffian { indices: vec![1, 2, 3, 4] });
        let p6 = Ladder::Pfaffian(PfaffianLadder { n: 6, corners: vec![(1, 6)], t: vec![2] });
        assert_eq!(natural_generators(&p6, Q).unwrap().len(), 15);
    }

    #[test]
    fn onesided_overlap_is_deduplicated() {
        let l = Ladder::OneSided(OneSidedLadder { m: 3, n: 3, points: vec![(2, 1), (3, 2)], t: vec![2, 2] });
        // rows {1,2} x any 2 columns: 3; rows in {1,2,3} x cols {2,3}: 3, one shared
        assert_eq!(natural_generators(&l, Q).unwrap().len(), 5);
    }

    #[test]
    fn initial_terms() {
        let mm = Ladder::MaxMinors(MaxMinors { m: 2, n: 2 });
        let diag = TermOrder::new(OrderKind::Diagonal, mm.shape());
        assert_eq!(initial_generators(&mm, &diag, Q).unwrap(), [mono("x[1,1]*x[2,2]")].into_iter().collect());
        let p4 = Ladder::Pfaffian(PfaffianLadder { n: 4, corners: vec![(1, 4)], t: vec![2] });
        assert_eq!(
            initial_generators(&p4, &p4.default_order(), Q).unwrap(),
            [mono("x[1,4]*x[2,3]")].into_iter().collect()
        );
        let mm3 = Ladder::MaxMinors(MaxMinors { m: 2, n: 3 });
        let expected: BTreeSet<Monomial> =
            ["x[1,1]*x[2,2]", "x[1,1]*x[2,3]", "x[1,2]*x[2,3]"].into_iter().map(mono).collect();
        assert_eq!(initial_generators(&mm3, &mm3.default_order(), Q).unwrap(), expected);
    }
}
