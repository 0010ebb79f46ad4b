//! Monomial ideals with colon, Basic Double Link and quotient Hilbert functions.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{LadderError, Result};
use crate::poly::{Monomial, Var};

/// Divisibility-minimal subset, sorted and deduplicated.
pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
    let mut out: Vec<Monomial> = Vec::new();
    for m in all {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// A monomial ideal in the polynomial ring on `ambient`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
    ambient: BTreeSet<Var>,
}

impl MonomialIdeal {
    /// The ambient set is enlarged by the support of the generators if necessary.
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I, ambient: impl IntoIterator<Item = Var>) -> Self {
        let generators = minimalize(gens);
        let mut ambient: BTreeSet<Var> = ambient.into_iter().collect();
        for g in &generators {
            ambient.extend(g.vars());
        }
        MonomialIdeal { generators, ambient }
    }

    pub fn zero(ambient: impl IntoIterator<Item = Var>) -> Self {
        Self::new(std::iter::empty(), ambient)
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn ambient(&self) -> &BTreeSet<Var> {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn support(&self) -> BTreeSet<Var> {
        self.generators.iter().flat_map(|g| g.vars()).collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn with_ambient(&self, ambient: impl IntoIterator<Item = Var>) -> Self {
        Self::new(self.generators.clone(), ambient)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(
            self.generators.iter().chain(&other.generators).cloned(),
            self.ambient.iter().chain(&other.ambient).copied(),
        )
    }

    pub fn mul_monomial(&self, f: &Monomial) -> MonomialIdeal {
        Self::new(self.generators.iter().map(|g| g.mul(f)), self.ambient.iter().copied().chain(f.vars()))
    }

    /// `(A : f)`, generated by `lcm(g, f) / f`.
    pub fn colon(&self, f: &Monomial) -> MonomialIdeal {
        Self::new(
            self.generators.iter().map(|g| f.quotient_of(&g.lcm(f)).expect("f divides lcm")),
            self.ambient.iter().copied(),
        )
    }

    /// `(A : f) = A`. A unit `f` is trivially stable.
    pub fn colon_stable(&self, f: &Monomial) -> bool {
        self.colon(f).generators == self.generators
    }

    /// `H_{R/A}(d)`.
    pub fn hilbert_function(&self, d: i64) -> u64 {
        if d < 0 {
            return 0;
        }
        self.hilbert_vector(d as usize)[d as usize]
    }

    /// `[H_{R/A}(0), ..., H_{R/A}(dmax)]` by the pivot recursion
    /// `H_{R/A} = H_{R/(A+x)} + H_{R/(A:x)}(- 1)`.
    pub fn hilbert_vector(&self, dmax: usize) -> Vec<u64> {
        let mut memo = HashMap::new();
        hilbert_rec(&self.generators, self.ambient.len(), dmax, &mut memo)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Monomials of degree `d` in `v` variables.
pub fn monomial_count(v: usize, d: usize) -> u64 {
    if v == 0 {
        return u64::from(d == 0);
    }
    binomial((d + v - 1) as u64, (v - 1) as u64)
}

fn hilbert_rec(gens: &[Monomial], v: usize, dmax: usize, memo: &mut HashMap<Vec<Monomial>, Vec<u64>>) -> Vec<u64> {
    if let Some(h) = memo.get(gens) {
        return h.clone();
    }
    let out = if gens.iter().any(Monomial::is_one) {
        vec![0; dmax + 1]
    } else {
        let linear = gens.iter().filter(|g| g.degree() == 1).count();
        let mut counts: HashMap<Var, usize> = HashMap::new();
        for g in gens.iter().filter(|g| g.degree() > 1) {
            for x in g.vars() {
                *counts.entry(x).or_default() += 1;
            }
        }
        match counts.into_iter().max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0))) {
            None => (0..=dmax).map(|d| monomial_count(v - linear, d)).collect(),
            Some((x, _)) => {
                let xm = Monomial::var(x);
                let plus = minimalize(gens.iter().cloned().chain(std::iter::once(xm.clone())));
                let colon = minimalize(gens.iter().map(|g| xm.quotient_of(&g.lcm(&xm)).expect("x divides lcm")));
                let a = hilbert_rec(&plus, v, dmax, memo);
                let b = hilbert_rec(&colon, v, dmax, memo);
                (0..=dmax).map(|d| a[d] + if d >= 1 { b[d - 1] } else { 0 }).collect()
            }
        }
    };
    memo.insert(gens.to_vec(), out.clone());
    out
}

/// `C = A + f B`, the Basic Double Link of `B` on `A`.
pub fn bdl(a: &MonomialIdeal, b: &MonomialIdeal, f: &Monomial) -> Result<MonomialIdeal> {
    if !a.colon_stable(f) {
        return Err(LadderError::Precondition(format!("colon not stable: (A : {f}) != A")));
    }
    if !b.contains_ideal(a) {
        return Err(LadderError::Precondition("A is not contained in B".into()));
    }
    Ok(a.sum(&b.mul_monomial(f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn vars(n: usize) -> Vec<Var> {
        (1..=n).map(|j| Var::new(1, j)).collect()
    }

    fn grid(r: usize, c: usize) -> Vec<Var> {
        (1..=r).flat_map(|i| (1..=c).map(move |j| Var::new(i, j))).collect()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(minimalize([m("x[1,1]"), m("x[1,1]*x[1,2]")]), vec![m("x[1,1]")]);
        assert!(minimalize(Vec::new()).is_empty());
        let g = vec![m("x[1,1]*x[2,2]"), m("x[1,1]*x[2,3]"), m("x[1,2]*x[2,3]")];
        assert_eq!(minimalize(g.clone()), g);
    }

    #[test]
    fn colon_examples() {
        let a = MonomialIdeal::new([m("x[1,1]*x[2,2]")], grid(2, 3));
        assert!(a.colon_stable(&m("x[2,3]")));
        let b = MonomialIdeal::new([m("x[1,1]*x[1,2]")], vars(2));
        assert!(!b.colon_stable(&m("x[1,1]")));
        assert_eq!(b.colon(&m("x[1,1]")).generators(), &[m("x[1,2]")]);
    }

    #[test]
    fn bdl_examples() {
        let amb = grid(2, 3);
        let a = MonomialIdeal::new([m("x[1,1]*x[2,2]")], amb.clone());
        let b = MonomialIdeal::new([m("x[1,1]"), m("x[1,2]")], amb.clone());
        let c = bdl(&a, &b, &m("x[2,3]")).unwrap();
        let expect = MonomialIdeal::new([m("x[1,1]*x[2,2]"), m("x[1,1]*x[2,3]"), m("x[1,2]*x[2,3]")], amb);
        assert_eq!(c, expect);
        assert_eq!(bdl(&a, &b, &Monomial::one()).unwrap(), b);
        assert_eq!(bdl(&a, &a, &m("x[2,3]")).unwrap(), a);
        assert!(bdl(&a, &b, &m("x[1,1]")).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let zero = MonomialIdeal::zero(vars(4));
        assert_eq!(zero.hilbert_function(3), monomial_count(4, 3));
        assert_eq!(monomial_count(4, 3), 20);
        let all = MonomialIdeal::new(vars(4).into_iter().map(Monomial::var), vars(4));
        assert_eq!(all.hilbert_function(0), 1);
        assert_eq!(all.hilbert_function(2), 0);
        let one = MonomialIdeal::new([m("x[1,1]*x[2,2]")], grid(2, 2));
        assert_eq!(one.hilbert_function(2), 9);
        assert_eq!(one.hilbert_function(-1), 0);
    }
}
