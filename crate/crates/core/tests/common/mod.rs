//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ladderlink::ladders::{MaxMinors, OneSidedLadder, PfaffianLadder, SymmetricPlusLadder};
use ladderlink::monomial_ideal::MonomialIdeal;
use ladderlink::{Ladder, Monomial, Var};

pub fn maxminors(m: usize, n: usize) -> Ladder {
    Ladder::MaxMinors(MaxMinors { m, n })
}

pub fn pfaffian(n: usize, corners: &[(usize, usize)], t: &[usize]) -> Ladder {
    Ladder::Pfaffian(PfaffianLadder { n, corners: corners.to_vec(), t: t.to_vec() })
}

pub fn symmetric(n: usize, points: &[(usize, usize)], t: &[usize]) -> Ladder {
    Ladder::Symmetric(SymmetricPlusLadder { n, points: points.to_vec(), t: t.to_vec() })
}

pub fn onesided(m: usize, n: usize, points: &[(usize, usize)], t: &[usize]) -> Ladder {
    Ladder::OneSided(OneSidedLadder { m, n, points: points.to_vec(), t: t.to_vec() })
}

/// Normalized instances covering all four families at desk scale.
pub fn corpus() -> Vec<Ladder> {
    vec![
        maxminors(1, 3),
        maxminors(2, 2),
        maxminors(2, 3),
        maxminors(2, 4),
        maxminors(3, 4),
        pfaffian(4, &[(1, 4)], &[2]),
        pfaffian(5, &[(1, 5)], &[2]),
        pfaffian(6, &[(1, 6)], &[2]),
        pfaffian(6, &[(1, 5), (2, 6)], &[2, 2]),
        pfaffian(6, &[(1, 4), (3, 6)], &[2, 2]),
        symmetric(3, &[(3, 3)], &[2]),
        symmetric(4, &[(4, 4)], &[2]),
        symmetric(4, &[(2, 4), (3, 3)], &[2, 2]),
        onesided(2, 3, &[(2, 1)], &[2]),
        onesided(3, 3, &[(3, 1)], &[2]),
        onesided(3, 3, &[(2, 1), (3, 2)], &[2, 2]),
        onesided(4, 4, &[(2, 1), (4, 3)], &[2, 2]),
        onesided(4, 4, &[(3, 1), (4, 2)], &[2, 2]),
        onesided(4, 4, &[(4, 1)], &[2]),
        onesided(2, 4, &[(2, 1)], &[2]),
    ]
}

/// Degree-`d` monomials in `vars`, by direct enumeration.
pub fn monomials_of_degree(vars: &[Var], d: usize) -> Vec<Monomial> {
    fn go(vars: &[Var], d: usize, start: usize, acc: &mut Vec<Var>, out: &mut Vec<Monomial>) {
        if acc.len() == d {
            out.push(Monomial::from_vars(acc.iter().copied()));
            return;
        }
        for i in start..vars.len() {
            acc.push(vars[i]);
            go(vars, d, i, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, d, 0, &mut Vec::new(), &mut out);
    out
}

/// `H_{R/A}(d)` by counting standard monomials.
pub fn brute_hilbert(a: &MonomialIdeal, d: usize) -> u64 {
    let vars: Vec<Var> = a.ambient().iter().copied().collect();
    monomials_of_degree(&vars, d).iter().filter(|m| !a.contains(m)).count() as u64
}

/// Height of a squarefree monomial ideal: the least size of a vertex cover of its generators.
pub fn brute_height(a: &MonomialIdeal) -> usize {
    let vars: Vec<Var> = a.support().into_iter().collect();
    let gens: Vec<BTreeSet<Var>> = a.generators().iter().map(|g| g.vars().collect()).collect();
    for size in 0..=vars.len() {
        let mut found = false;
        subsets(vars.len(), size, &mut |s| {
            let cover: BTreeSet<Var> = s.iter().map(|&i| vars[i]).collect();
            if gens.iter().all(|g| !g.is_disjoint(&cover)) {
                found = true;
            }
        });
        if found {
            return size;
        }
    }
    vars.len()
}

fn subsets(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..n {
            acc.push(i);
            go(n, k, i + 1, acc, f);
            acc.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), f);
}
