//! Inverse substitutions that invert one entry of a one-sided ladder and lower the
//! sizes of the regions through it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{LadderError, Result};
use crate::families::natural_generators;
use crate::field::Field;
use crate::ladders::{Cell, Ladder, OneSidedLadder};
use crate::matrix::{index_subsets, minor};
use crate::poly::{buchberger_reduced_with_budget, normal_form, Monomial, Polynomial, TermOrder, Var};

/// `numerator / x_pivot^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub numerator: Polynomial,
    pub exponent: u32,
}

impl Fraction {
    fn reduce(mut self, pivot: Var) -> Self {
        while self.exponent > 0 && !self.numerator.is_zero() && self.numerator.monomials().all(|m| m.contains(pivot)) {
            let p = Monomial::var(pivot);
            self.numerator = Polynomial::from_terms(
                self.numerator.field(),
                self.numerator.terms().map(|(m, c)| (p.quotient_of(m).expect("pivot divides"), c.clone())),
            );
            self.exponent -= 1;
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Phi,
    Psi,
}

/// `x_ij -> x_ij ± x_iv x_uj / x_uv` on the affected cells, identity elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationMap {
    pub pivot: Cell,
    pub direction: Direction,
    pub affected: BTreeSet<Cell>,
    pub field: Field,
}

impl LocalizationMap {
    fn pivot_var(&self) -> Var {
        Var::new(self.pivot.0, self.pivot.1)
    }

    pub fn image(&self, x: Var) -> Fraction {
        let field = self.field;
        let (i, j) = x.cell();
        let (u, v) = self.pivot;
        if !self.affected.contains(&(i, j)) {
            return Fraction { numerator: Polynomial::var(field, x), exponent: 0 };
        }
        let sign = match self.direction {
            Direction::Phi => field.one(),
            Direction::Psi => field.one().neg(),
        };
        let mut numerator = Polynomial::monomial(field, Monomial::from_vars([x, self.pivot_var()]));
        numerator.add_term(Monomial::from_vars([Var::new(i, v), Var::new(u, j)]), &sign);
        Fraction { numerator, exponent: 1 }
    }

    /// The image of `p`, over the least common power of the pivot.
    pub fn apply(&self, p: &Polynomial) -> Fraction {
        let pivot = self.pivot_var();
        let mut parts: Vec<(Polynomial, u32)> = Vec::new();
        for (m, c) in p.terms() {
            let mut num = Polynomial::constant(c.clone());
            let mut e = 0;
            for &(x, k) in m.factors() {
                let img = self.image(x);
                num = num.mul(&img.numerator.pow(k));
                e += img.exponent * k;
            }
            parts.push((num, e));
        }
        let top = parts.iter().map(|x| x.1).max().unwrap_or(0);
        let mut numerator = Polynomial::zero(self.field);
        for (num, e) in parts {
            numerator = numerator.add(&num.mul_term(&Monomial::var_pow(pivot, top - e), &self.field.one()));
        }
        Fraction { numerator, exponent: top }.reduce(pivot)
    }

    pub fn apply_fraction(&self, f: &Fraction) -> Fraction {
        let inner = self.apply(&f.numerator);
        Fraction { numerator: inner.numerator, exponent: inner.exponent + f.exponent }.reduce(self.pivot_var())
    }
}

/// The maps together with the rebuilt ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub phi: LocalizationMap,
    pub psi: LocalizationMap,
    /// Zero-based indices of the regions containing the pivot.
    pub regions: Vec<usize>,
    /// The rebuilt ladder with points `(a_i - 1, b_i + 1)` on the affected regions.
    pub hat: OneSidedLadder,
    pub r: Vec<usize>,
    /// Generators of the lowered ideal in the original labelling: `(r_i)`-minors of each
    /// affected region with row `u` and column `v` removed, `t_i`-minors elsewhere.
    pub lowered: Vec<Polynomial>,
}

fn region(l: &OneSidedLadder, k: usize) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = l.points[k];
    ((1..=a.min(l.m)).collect(), (b..=l.n).collect())
}

fn minors_of(l: &OneSidedLadder, rows: &[usize], cols: &[usize], t: usize, field: Field) -> Result<Vec<Polynomial>> {
    let shape = Ladder::OneSided(l.clone()).shape();
    let mut out = Vec::new();
    for rs in index_subsets(rows.len(), t) {
        for cs in index_subsets(cols.len(), t) {
            let r: Vec<usize> = rs.iter().map(|&i| rows[i - 1]).collect();
            let c: Vec<usize> = cs.iter().map(|&j| cols[j - 1]).collect();
            let p = minor(&shape, &r, &c, field)?;
            if !p.is_zero() {
                out.push(p);
            }
        }
    }
    Ok(out)
}

pub fn localization_maps(l: &OneSidedLadder, cell: Cell, field: Field) -> Result<Localization> {
    let ladder = Ladder::OneSided(l.clone());
    ladder.check()?;
    if !ladder.cells().contains(&cell) {
        return Err(LadderError::OutOfBounds(format!("({},{}) is not a cell of {ladder}", cell.0, cell.1)));
    }
    let (u, v) = cell;
    let regions: Vec<usize> = (0..l.points.len()).filter(|&k| ladder.region_cells(k).contains(&cell)).collect();
    if let Some(&k) = regions.iter().find(|&&k| l.t[k] < 2) {
        return Err(LadderError::Precondition(format!("t_{} = {} < 2 on a region through ({u},{v})", k + 1, l.t[k])));
    }
    let affected: BTreeSet<Cell> = regions
        .iter()
        .flat_map(|&k| ladder.region_cells(k))
        .filter(|&(i, j)| i != u && j != v)
        .collect();
    let mut lowered = Vec::new();
    let mut hat_points = l.points.clone();
    let mut r = l.t.clone();
    for k in 0..l.points.len() {
        let (rows, cols) = region(l, k);
        if regions.contains(&k) {
            let rows: Vec<usize> = rows.into_iter().filter(|&i| i != u).collect();
            let cols: Vec<usize> = cols.into_iter().filter(|&j| j != v).collect();
            r[k] -= 1;
            hat_points[k] = (l.points[k].0 - 1, l.points[k].1 + 1);
            lowered.extend(minors_of(l, &rows, &cols, r[k], field)?);
        } else {
            lowered.extend(minors_of(l, &rows, &cols, r[k], field)?);
        }
    }
    let map = |direction| LocalizationMap { pivot: cell, direction, affected: affected.clone(), field };
    Ok(Localization {
        phi: map(Direction::Phi),
        psi: map(Direction::Psi),
        regions,
        hat: OneSidedLadder { m: l.m, n: l.n, points: hat_points, t: r.clone() },
        r,
        lowered,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationReport {
    pub pivot: Cell,
    /// `psi(phi(x)) = x` for every ladder variable.
    pub round_trip: bool,
    /// Per generator of the ladder ideal: its cleared image lies in the saturated lowered ideal.
    pub forward: Vec<(String, bool)>,
    /// Per generator of the lowered ideal: its cleared preimage lies in the saturated ladder ideal.
    pub backward: Vec<(String, bool)>,
}

impl LocalizationReport {
    pub fn passed(&self) -> bool {
        self.round_trip && self.forward.iter().all(|x| x.1) && self.backward.iter().all(|x| x.1)
    }
}

/// `psi(phi(x)) = x` for every variable of the ladder.
pub fn round_trip(l: &OneSidedLadder, loc: &Localization) -> bool {
    Ladder::OneSided(l.clone()).variables().into_iter().all(|x| {
        let back = loc.psi.apply_fraction(&loc.phi.image(x));
        back.exponent == 0 && back.numerator == Polynomial::var(loc.phi.field, x)
    })
}

fn saturation_basis(gens: &[Polynomial], pivot: Var, order: &TermOrder, field: Field, budget: &Budget) -> Result<(Vec<Polynomial>, TermOrder)> {
    let y = Var::new(0, 0);
    let order = order.with_top_variable(y);
    let mut rabinowitsch = Polynomial::monomial(field, Monomial::from_vars([y, pivot]));
    rabinowitsch.add_term(Monomial::one(), &field.one().neg());
    let mut all = gens.to_vec();
    all.push(rabinowitsch);
    Ok((buchberger_reduced_with_budget(&all, &order, budget)?, order))
}

/// Membership of cleared images in the pivot-saturations of the target ideals, in both
/// directions. This certifies equality of the ideals after inverting the pivot.
pub fn verify_localization(l: &OneSidedLadder, cell: Cell, field: Field, budget: &Budget) -> Result<LocalizationReport> {
    let loc = localization_maps(l, cell, field)?;
    let ladder = Ladder::OneSided(l.clone());
    let order = ladder.default_order();
    let pivot = Var::new(cell.0, cell.1);
    let source = natural_generators(&ladder, field)?.polynomials();
    let (target_gb, ext) = saturation_basis(&loc.lowered, pivot, &order, field, budget)?;
    let (source_gb, _) = saturation_basis(&source, pivot, &order, field, budget)?;
    let test = |map: &LocalizationMap, gens: &[Polynomial], gb: &[Polynomial]| -> Result<Vec<(String, bool)>> {
        gens.iter()
            .map(|g| {
                let img = map.apply(g);
                Ok((g.to_text(&order), normal_form(&img.numerator, gb, &ext)?.is_zero()))
            })
            .collect()
    };
    Ok(LocalizationReport {
        pivot: cell,
        round_trip: round_trip(l, &loc),
        forward: test(&loc.phi, &source, &target_gb)?,
        backward: test(&loc.psi, &loc.lowered, &source_gb)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn full(m: usize, n: usize, t: usize) -> OneSidedLadder {
        OneSidedLadder { m, n, points: vec![(m, 1)], t: vec![t] }
    }

    #[test]
    fn phi_on_affected_and_unaffected() {
        let l = full(3, 3, 2);
        let loc = localization_maps(&l, (2, 2), Q).unwrap();
        let img = loc.phi.image(Var::new(1, 1));
        assert_eq!(img.exponent, 1);
        assert_eq!(img.numerator, Polynomial::parse(Q, "x[1,1]*x[2,2] + x[1,2]*x[2,1]").unwrap());
        let same = loc.phi.image(Var::new(2, 3));
        assert_eq!(same.exponent, 0);
        assert_eq!(same.numerator, Polynomial::var(Q, Var::new(2, 3)));
        assert_eq!(loc.r, vec![1]);
        assert_eq!(loc.hat.points, vec![(2, 2)]);
    }

    #[test]
    fn inverse_maps() {
        for cell in [(1, 1), (2, 2), (3, 3), (1, 3)] {
            let l = full(3, 3, 2);
            let loc = localization_maps(&l, cell, Q).unwrap();
            assert!(round_trip(&l, &loc), "{cell:?}");
        }
    }

    #[test]
    fn membership_three_by_three() {
        let r = verify_localization(&full(3, 3, 2), (2, 2), Q, &Budget::unlimited()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.forward.len(), 9);
    }

    #[test]
    fn size_one_region_is_rejected() {
        let l = full(2, 3, 1);
        assert!(matches!(localization_maps(&l, (1, 1), Q), Err(LadderError::Precondition(_))));
        assert!(localization_maps(&full(2, 3, 2), (3, 1), Q).is_err());
    }
}
