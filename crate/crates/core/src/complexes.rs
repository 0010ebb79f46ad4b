//! Stanley-Reisner complexes, links, deletions and vertex decomposability.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{LadderError, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Monomial, Var};

type Face = u64;

/// A simplicial complex on a labelled vertex set, stored by its facets.
///
/// An empty facet list is the void complex; `[∅]` is the empty complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Var>,
    facets: Vec<Face>,
}

fn bit(i: usize) -> Face {
    1u64 << i
}

fn maximal(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
    let mut out: Vec<Face> = Vec::new();
    for f in faces {
        if !out.iter().any(|g| f & g == f) {
            out.push(f);
        }
    }
    out.sort_unstable();
    out
}

fn minimal(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_by_key(|f| f.count_ones());
    let mut out: Vec<Face> = Vec::new();
    for s in sets {
        if !out.iter().any(|g| g & s == *g) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

/// Minimal sets meeting every member of `family`. An empty member admits no transversal.
fn minimal_transversals(family: &[Face], budget: &Budget) -> Result<Vec<Face>> {
    let mut acc: Vec<Face> = vec![0];
    let mut count = 0u64;
    for &e in family {
        let mut next = Vec::new();
        for &t in &acc {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut rest = e;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    next.push(t | b);
                    rest &= rest - 1;
                }
            }
        }
        acc = minimal(next);
        count += acc.len() as u64;
        budget.check_faces(count)?;
    }
    Ok(acc)
}

impl SimplicialComplex {
    pub fn from_facets(vertices: Vec<Var>, facets: Vec<BTreeSet<Var>>) -> Result<Self> {
        if vertices.len() > 64 {
            return Err(LadderError::Budget("more than 64 vertices".into()));
        }
        let mut encoded = Vec::new();
        for f in facets {
            let mut face = 0;
            for v in f {
                let i = vertices.iter().position(|w| *w == v).ok_or_else(|| LadderError::UnknownVariable(v.to_string()))?;
                face |= bit(i);
            }
            encoded.push(face);
        }
        Ok(SimplicialComplex { vertices, facets: maximal(encoded) })
    }

    /// The complex whose Stanley-Reisner ideal is `a`, on `a`'s ambient vertex set.
    pub fn from_squarefree(a: &MonomialIdeal) -> Result<Self> {
        Self::from_squarefree_with_budget(a, &Budget::unlimited())
    }

    pub fn from_squarefree_with_budget(a: &MonomialIdeal, budget: &Budget) -> Result<Self> {
        if !a.is_squarefree() {
            return Err(LadderError::NotSquarefree);
        }
        let vertices: Vec<Var> = a.ambient().iter().copied().collect();
        if vertices.len() > 64 {
            return Err(LadderError::Budget("more than 64 vertices".into()));
        }
        let full: Face = if vertices.len() == 64 { u64::MAX } else { bit(vertices.len()) - 1 };
        let edges: Vec<Face> = a.generators().iter().map(|g| encode(&vertices, g)).collect();
        let covers = minimal_transversals(&edges, budget)?;
        let facets = maximal(covers.into_iter().map(|c| full & !c).collect());
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Minimal non-faces as squarefree monomials.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        let full = self.full();
        let comps: Vec<Face> = self.facets.iter().map(|f| full & !f).collect();
        let nonfaces = minimal_transversals(&comps, &Budget::unlimited())?;
        Ok(MonomialIdeal::new(nonfaces.into_iter().map(|f| self.monomial(f)), self.vertices.iter().copied()))
    }

    fn full(&self) -> Face {
        if self.vertices.len() == 64 {
            u64::MAX
        } else {
            bit(self.vertices.len()) - 1
        }
    }

    fn monomial(&self, f: Face) -> Monomial {
        Monomial::from_vars((0..self.vertices.len()).filter(|&i| f & bit(i) != 0).map(|i| self.vertices[i]))
    }

    pub fn vertices(&self) -> &[Var] {
        &self.vertices
    }

    pub fn facets(&self) -> Vec<BTreeSet<Var>> {
        self.facets.iter().map(|&f| self.monomial(f).vars().collect()).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1`; `-1` for `{∅}` and, by convention, for the void complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.count_ones() as i64).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Number of vertices minus `dim + 1`: the height of the Stanley-Reisner ideal.
    pub fn codimension(&self) -> i64 {
        self.vertices.len() as i64 - (self.dim() + 1)
    }

    fn index(&self, v: Var) -> Option<usize> {
        self.vertices.iter().position(|w| *w == v)
    }

    fn drop_vertex(&self, i: usize, facets: Vec<Face>) -> SimplicialComplex {
        let low = bit(i) - 1;
        let squeeze = |f: Face| (f & low) | ((f >> 1) & !low);
        let mut vertices = self.vertices.clone();
        vertices.remove(i);
        SimplicialComplex { vertices, facets: maximal(facets.into_iter().map(squeeze).collect()) }
    }

    /// `lk_v`; a vertex outside the vertex set is treated as a cone point.
    pub fn link(&self, v: Var) -> SimplicialComplex {
        match self.index(v) {
            None => self.clone(),
            Some(i) => {
                let fs = self.facets.iter().filter(|&&f| f & bit(i) != 0).map(|&f| f & !bit(i)).collect();
                self.drop_vertex(i, fs)
            }
        }
    }

    /// `Δ - v`.
    pub fn deletion(&self, v: Var) -> SimplicialComplex {
        match self.index(v) {
            None => self.clone(),
            Some(i) => {
                let fs = self.facets.iter().map(|&f| f & !bit(i)).collect();
                self.drop_vertex(i, fs)
            }
        }
    }

    /// Vertices lying in every facet.
    pub fn cone_points(&self) -> Vec<Var> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let common = self.facets.iter().fold(self.full(), |acc, f| acc & f);
        (0..self.vertices.len()).filter(|&i| common & bit(i) != 0).map(|i| self.vertices[i]).collect()
    }

    pub fn remove_cone_points(&self) -> (SimplicialComplex, Vec<Var>) {
        let cones = self.cone_points();
        let mut out = self.clone();
        for v in &cones {
            let i = out.index(*v).expect("cone point is a vertex");
            let fs = out.facets.iter().map(|&f| f & !bit(i)).collect();
            out = out.drop_vertex(i, fs);
        }
        (out, cones)
    }

    /// Same complex on the vertex set of `self` with vertices outside every facet removed.
    fn used_vertices(&self) -> Vec<Var> {
        let used = self.facets.iter().fold(0, |acc, f| acc | f);
        (0..self.vertices.len()).filter(|&i| used & bit(i) != 0).map(|i| self.vertices[i]).collect()
    }

    /// Side conditions of a shedding vertex: link and deletion pure, and
    /// `dim Δ = dim(Δ - v) = dim lk_v(Δ) + 1`.
    pub fn check_shedding(&self, v: Var) -> bool {
        let Some(i) = self.index(v) else { return false };
        if !self.facets.iter().any(|&f| f & bit(i) != 0) {
            return false;
        }
        let (lk, del) = (self.link(v), self.deletion(v));
        lk.is_pure() && del.is_pure() && self.dim() == del.dim() && self.dim() == lk.dim() + 1
    }

    pub fn is_vertex_decomposable(&self) -> Result<VdOutcome> {
        self.is_vertex_decomposable_with(&[], &Budget::unlimited())
    }

    /// Exhaustive memoized search; `preferred` vertices are tried first.
    pub fn is_vertex_decomposable_with(&self, preferred: &[Var], budget: &Budget) -> Result<VdOutcome> {
        let mut search = VdSearch { memo: HashMap::new(), budget, nodes: 0, preferred };
        let cert = search.run(self)?;
        let trace = if cert.is_some() {
            Vec::new()
        } else {
            let (reduced, _) = self.remove_cone_points();
            reduced
                .used_vertices()
                .into_iter()
                .map(|v| {
                    if reduced.check_shedding(v) {
                        format!("{v}: side conditions hold but a branch is not decomposable")
                    } else {
                        format!("{v}: purity or dimension condition fails")
                    }
                })
                .collect()
        };
        Ok(VdOutcome { decomposable: cert.is_some(), certificate: cert, trace })
    }

    /// Re-checks a certificate against this complex.
    pub fn replay(&self, cert: &VdCertificate) -> bool {
        if self.is_void() {
            return false;
        }
        let (reduced, _) = self.remove_cone_points();
        match cert {
            VdCertificate::Empty => self.facets == [0],
            VdCertificate::Simplex => reduced.facets.len() == 1 && self.facets != [0],
            VdCertificate::Shed { vertex, link, deletion } => {
                reduced.check_shedding(*vertex)
                    && reduced.link(*vertex).replay(link)
                    && reduced.deletion(*vertex).replay(deletion)
            }
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self
            .facets()
            .iter()
            .map(|fc| format!("{{{}}}", fc.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", facets.join(", "))
    }
}

fn encode(vertices: &[Var], m: &Monomial) -> Face {
    m.vars().filter_map(|v| vertices.iter().position(|w| *w == v)).fold(0, |acc, i| acc | bit(i))
}

/// A replayable vertex decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VdCertificate {
    Empty,
    Simplex,
    Shed { vertex: Var, link: Box<VdCertificate>, deletion: Box<VdCertificate> },
}

impl VdCertificate {
    pub fn depth(&self) -> usize {
        match self {
            VdCertificate::Shed { link, deletion, .. } => 1 + link.depth().max(deletion.depth()),
            _ => 0,
        }
    }

    pub fn root_vertex(&self) -> Option<Var> {
        match self {
            VdCertificate::Shed { vertex, .. } => Some(*vertex),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VdOutcome {
    pub decomposable: bool,
    pub certificate: Option<VdCertificate>,
    /// Per-vertex reasons at the root when the search fails.
    pub trace: Vec<String>,
}

struct VdSearch<'a> {
    memo: HashMap<(Vec<Var>, Vec<Face>), Option<VdCertificate>>,
    budget: &'a Budget,
    nodes: u64,
    preferred: &'a [Var],
}

impl VdSearch<'_> {
    fn run(&mut self, delta: &SimplicialComplex) -> Result<Option<VdCertificate>> {
        if delta.is_void() {
            return Ok(None);
        }
        if delta.facets == [0] {
            return Ok(Some(VdCertificate::Empty));
        }
        let (reduced, _) = delta.remove_cone_points();
        let key = (reduced.vertices.clone(), reduced.facets.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        self.nodes += 1;
        self.budget.check_faces(self.nodes)?;
        let result = if reduced.facets.len() == 1 {
            Some(VdCertificate::Simplex)
        } else {
            let mut candidates: Vec<Var> =
                self.preferred.iter().copied().filter(|v| reduced.index(*v).is_some()).collect();
            for v in reduced.used_vertices() {
                if !candidates.contains(&v) {
                    candidates.push(v);
                }
            }
            let mut found = None;
            for v in candidates {
                if !reduced.check_shedding(v) {
                    continue;
                }
                let Some(lk) = self.run(&reduced.link(v))? else { continue };
                let Some(del) = self.run(&reduced.deletion(v))? else { continue };
                found = Some(VdCertificate::Shed { vertex: v, link: Box::new(lk), deletion: Box::new(del) });
                break;
            }
            found
        };
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}
