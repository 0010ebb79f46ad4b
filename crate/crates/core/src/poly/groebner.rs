//! Division, S-polynomials and a reduced Buchberger oracle.

use std::collections::BTreeSet;

use super::{Monomial, Polynomial, TermOrder};
use crate::budget::Budget;
use crate::error::Result;
use crate::field::FieldElement;

/// Result of a division: `p = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn leads(g: &[Polynomial], order: &TermOrder) -> Result<Vec<(Monomial, FieldElement)>> {
    g.iter().map(|q| q.leading_term(order)).collect()
}

/// Full reduction of `p` modulo `g`, always using the first listed reducer that applies.
pub fn normal_form(p: &Polynomial, g: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    Ok(divide(p, g, order, false)?.remainder)
}

/// Like [`normal_form`] but also records the quotients.
pub fn normal_form_with_quotients(p: &Polynomial, g: &[Polynomial], order: &TermOrder) -> Result<Division> {
    divide(p, g, order, true)
}

fn divide(p: &Polynomial, g: &[Polynomial], order: &TermOrder, keep: bool) -> Result<Division> {
    let field = p.field();
    let lts = leads(g, order)?;
    let mut quotients = if keep { vec![Polynomial::zero(field); g.len()] } else { Vec::new() };
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero(field);
    while !rest.is_zero() {
        let (m, c) = rest.leading_term(order)?;
        match lts.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let (lm, lc) = &lts[i];
                let q = lm.quotient_of(&m).expect("divisor checked");
                let coeff = c.div(lc).expect("leading coefficient is nonzero");
                rest = rest.sub(&g[i].mul_term(&q, &coeff));
                if keep {
                    quotients[i].add_term(q, &coeff);
                }
            }
            None => {
                rest.add_term(m.clone(), &c.neg());
                remainder.add_term(m, &c);
            }
        }
    }
    Ok(Division { quotients, remainder })
}

/// The S-polynomial of `f` and `g`; leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    let (mf, cf) = f.leading_term(order)?;
    let (mg, cg) = g.leading_term(order)?;
    let l = mf.lcm(&mg);
    let one = f.field().one();
    let a = f.mul_term(&mf.quotient_of(&l).expect("lcm"), &one.div(&cf).expect("nonzero"));
    let b = g.mul_term(&mg.quotient_of(&l).expect("lcm"), &one.div(&cg).expect("nonzero"));
    Ok(a.sub(&b))
}

/// The reduced Groebner basis of the ideal generated by `f`, sorted by decreasing
/// leading monomial.
pub fn buchberger_reduced(f: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>> {
    buchberger_reduced_with_budget(f, order, &Budget::unlimited())
}

pub fn buchberger_reduced_with_budget(f: &[Polynomial], order: &TermOrder, budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    for p in f {
        if p.is_zero() {
            continue;
        }
        let r = normal_form(p, &basis, order)?;
        if !r.is_zero() {
            let r = r.monic(order)?;
            lms.push(r.leading_monomial(order)?);
            basis.push(r);
        }
    }
    // normal strategy: smallest lcm degree first, ties by index
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert((lms[i].lcm(&lms[j]).degree(), i, j));
        }
    }
    let mut used = 0u64;
    while let Some(entry) = queue.pop_first() {
        let (_, i, j) = entry;
        if lms[i].is_coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        if chain_criterion(&lms, &queue, i, j, &l) {
            continue;
        }
        used += 1;
        budget.check_spairs(used)?;
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = normal_form(&s, &basis, order)?;
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order)?;
        let lm = r.leading_monomial(order)?;
        let k = basis.len();
        for (idx, other) in lms.iter().enumerate() {
            queue.insert((other.lcm(&lm).degree(), idx, k));
        }
        lms.push(lm);
        basis.push(r);
    }
    interreduce(basis, order)
}

/// Skip (i, j) when some k has lm_k | lcm and both (i, k), (j, k) are already processed.
fn chain_criterion(lms: &[Monomial], queue: &BTreeSet<(u32, usize, usize)>, i: usize, j: usize, l: &Monomial) -> bool {
    let pending = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        queue.contains(&(lms[a].lcm(&lms[b]).degree(), a, b))
    };
    (0..lms.len()).any(|k| k != i && k != j && lms[k].divides(l) && !pending(i, k) && !pending(j, k))
}

fn interreduce(basis: Vec<Polynomial>, order: &TermOrder) -> Result<Vec<Polynomial>> {
    let mut lm: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order)).collect::<Result<_>>()?;
    let mut keep: Vec<Polynomial> = Vec::new();
    let mut keep_lm: Vec<Monomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = lm.iter().enumerate().any(|(o, m)| {
            o != idx && m.divides(&lm[idx]) && (m != &lm[idx] || o < idx)
        });
        if !redundant {
            keep.push(g.clone());
            keep_lm.push(lm[idx].clone());
        }
    }
    lm = keep_lm;
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Polynomial> = keep.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, g)| g.clone()).collect();
        let head = Polynomial::monomial(keep[idx].field(), lm[idx].clone());
        let tail = keep[idx].sub(&head);
        let r = head.add(&normal_form(&tail, &others, order)?);
        reduced.push(r.monic(order)?);
    }
    reduced.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial(order).expect("nonzero"), b.leading_monomial(order).expect("nonzero"));
        order.cmp(&lb, &la)
    });
    Ok(reduced)
}

/// Monic, interreduced, tail-reduced, and closed under S-pair reduction.
pub fn is_reduced_groebner(g: &[Polynomial], order: &TermOrder) -> Result<bool> {
    let lts = leads(g, order)?;
    if lts.iter().any(|(_, c)| !c.is_one()) {
        return Ok(false);
    }
    for (i, p) in g.iter().enumerate() {
        for (m, _) in p.terms() {
            if lts.iter().enumerate().any(|(j, (lm, _))| (j != i || m != lm) && lm.divides(m)) {
                return Ok(false);
            }
        }
    }
    for j in 0..g.len() {
        for i in 0..j {
            if lts[i].0.is_coprime(&lts[j].0) {
                continue;
            }
            if !normal_form(&s_polynomial(&g[i], &g[j], order)?, g, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership test against a Groebner basis.
pub fn reduces_to_zero(p: &Polynomial, gb: &[Polynomial], order: &TermOrder) -> Result<bool> {
    Ok(normal_form(p, gb, order)?.is_zero())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::LadderError;
    use crate::field::Field;
    use crate::matrix::MatrixShape;
    use crate::poly::Var;

    fn q() -> Field {
        Field::Rationals
    }

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(q(), Var::new(i, j))
    }

    fn order(m: usize, n: usize) -> TermOrder {
        TermOrder::diagonal(MatrixShape::Generic { m, n })
    }

    fn det2(a: (usize, usize), b: (usize, usize), c: (usize, usize), d: (usize, usize)) -> Polynomial {
        x(a.0, a.1).mul(&x(d.0, d.1)).sub(&x(b.0, b.1).mul(&x(c.0, c.1)))
    }

    #[test]
    fn normal_form_examples() {
        let o = order(2, 2);
        let g = det2((1, 1), (1, 2), (2, 1), (2, 2));
        assert!(normal_form(&g, std::slice::from_ref(&g), &o).unwrap().is_zero());
        let m = x(1, 1).mul(&x(2, 2));
        assert_eq!(normal_form(&m, std::slice::from_ref(&g), &o).unwrap(), x(1, 2).mul(&x(2, 1)));
        assert_eq!(normal_form(&m, &[], &o).unwrap(), m);
    }

    #[test]
    fn quotients_reassemble() {
        let o = order(2, 3);
        let g = vec![det2((1, 1), (1, 2), (2, 1), (2, 2)), x(1, 3).add(&x(2, 3))];
        let p = x(1, 1).mul(&x(2, 2)).mul(&x(1, 3)).add(&x(2, 1));
        let d = normal_form_with_quotients(&p, &g, &o).unwrap();
        let mut back = d.remainder.clone();
        for (qi, gi) in d.quotients.iter().zip(&g) {
            back = back.add(&qi.mul(gi));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn s_polynomial_cancels() {
        let o = order(2, 3);
        let f = det2((1, 1), (1, 2), (2, 1), (2, 2));
        assert!(s_polynomial(&f, &f, &o).unwrap().is_zero());
        let g = det2((1, 1), (1, 3), (2, 1), (2, 3));
        let s = s_polynomial(&f, &g, &o).unwrap();
        let l = Monomial::from_vars([Var::new(1, 1), Var::new(2, 2), Var::new(2, 3)]);
        assert!(s.coefficient(&l).is_none());
        assert_eq!(o.cmp(&s.leading_monomial(&o).unwrap(), &l), std::cmp::Ordering::Less);
    }

    #[test]
    fn linear_system() {
        let o = order(1, 2);
        let (a, b) = (x(1, 1), x(1, 2));
        let gb = buchberger_reduced(&[a.add(&b), a.sub(&b)], &o).unwrap();
        assert_eq!(gb, vec![a.clone(), b.clone()]);
        assert!(is_reduced_groebner(&gb, &o).unwrap());
        assert!(!is_reduced_groebner(&[a.clone(), a.mul(&b)], &o).unwrap());
    }

    #[test]
    fn maximal_minors_are_fixed() {
        let o = order(2, 3);
        let gens = vec![
            det2((1, 1), (1, 2), (2, 1), (2, 2)),
            det2((1, 1), (1, 3), (2, 1), (2, 3)),
            det2((1, 2), (1, 3), (2, 2), (2, 3)),
        ];
        let gb = buchberger_reduced(&gens, &o).unwrap();
        assert_eq!(gb.len(), 3);
        for g in &gens {
            assert!(gb.contains(g));
        }
        assert!(is_reduced_groebner(&gens, &o).unwrap());
        assert_eq!(buchberger_reduced(&gb, &o).unwrap(), gb);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let o = order(2, 3);
        let gens = vec![det2((1, 1), (1, 2), (2, 1), (2, 2)), det2((1, 1), (1, 3), (2, 1), (2, 3))];
        let err = buchberger_reduced_with_budget(&gens, &o, &Budget::unlimited().with_spairs(0)).unwrap_err();
        assert!(matches!(err, LadderError::Budget(_)));
    }
}
