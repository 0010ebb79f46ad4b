//! Corner-removal chains as Basic Double Link certificates, their verification, and
//! the full per-instance report.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::complexes::{SimplicialComplex, VdCertificate, VdOutcome};
use crate::error::{LadderError, Result};
use crate::families::{initial_generators, natural_generators};
use crate::field::Field;
use crate::ladders::{Ladder, SplitResult};
use crate::monomial_ideal::{bdl, minimalize, MonomialIdeal};
use crate::poly::{buchberger_reduced_with_budget, is_reduced_groebner, Monomial, OrderKind, Polynomial, TermOrder, Var};

pub const SCHEMA_VERSION: u32 = 1;

/// Per-step verdicts recorded when the chain is built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepFlags {
    /// `(A : f) = A` and `f` is outside the support of `A`.
    pub colon_stable: bool,
    /// `C = A + f B` as minimal generating sets.
    pub bdl_exact: bool,
    /// `f` is a shedding vertex of the complex of `C`, with deletion and link the
    /// complexes of `A` and `B`.
    pub shedding_ok: bool,
    /// `height(L) - height(M)` from the shifted ladders.
    pub height_delta: i64,
    /// Formula heights agree with the codimensions of the complexes of `C` and `A`.
    pub heights_ok: bool,
}

/// One corner removal: `L` with reduced ladder `L'` and middle ladder `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageStep {
    pub key: String,
    pub instance: Ladder,
    pub reduced: Ladder,
    pub middle: Ladder,
    pub shedding: Var,
    pub shift: u32,
    pub ambient: Vec<Var>,
    /// Minimal generators of `in(I(M))`.
    pub a: Vec<Monomial>,
    /// Minimal generators of `in(I(L'))`.
    pub b: Vec<Monomial>,
    /// Minimal generators of `in(I(L))`.
    pub c: Vec<Monomial>,
    pub flags: StepFlags,
    pub warnings: Vec<String>,
}

impl LinkageStep {
    pub fn ideals(&self) -> (MonomialIdeal, MonomialIdeal, MonomialIdeal) {
        let amb = self.ambient.iter().copied();
        (
            MonomialIdeal::new(self.a.iter().cloned(), amb.clone()),
            MonomialIdeal::new(self.b.iter().cloned(), amb.clone()),
            MonomialIdeal::new(self.c.iter().cloned(), amb),
        )
    }

    pub fn is_ok(&self) -> bool {
        let f = &self.flags;
        f.colon_stable && f.bdl_exact && f.shedding_ok && f.heights_ok && f.height_delta == 1
    }
}

/// A chain end: a ladder whose natural generators are indeterminates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalNode {
    pub key: String,
    pub instance: Ladder,
    pub generators: Vec<Monomial>,
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageCertificate {
    pub schema_version: u32,
    pub root: Ladder,
    pub order: OrderKind,
    pub field: Field,
    pub dmax: usize,
    pub root_ambient: Vec<Var>,
    pub root_initial: Vec<Monomial>,
    /// Sorted by decreasing (cells, sizes): every step's `L'` and `M` are later steps or terminals.
    pub steps: Vec<LinkageStep>,
    pub terminals: Vec<TerminalNode>,
    pub vd: Option<VdCertificate>,
    pub verdicts: BTreeMap<String, bool>,
}

impl LinkageCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| LadderError::Parse(e.to_string()))
    }

    pub fn shedding_sequence(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for s in &self.steps {
            if !out.contains(&s.shedding) {
                out.push(s.shedding);
            }
        }
        out
    }

    /// Every `L'` and `M` is the instance of a later step or a terminal.
    pub fn is_connected(&self) -> bool {
        let terminals: HashSet<&str> = self.terminals.iter().map(|t| t.key.as_str()).collect();
        self.steps.iter().enumerate().all(|(i, s)| {
            [&s.reduced, &s.middle].into_iter().all(|child| {
                let key = child.to_string();
                terminals.contains(key.as_str()) || self.steps[i + 1..].iter().any(|later| later.key == key)
            })
        })
    }
}

/// `2 * (max generator degree) + 2`.
pub fn default_dmax(ladder: &Ladder, field: Field) -> Result<usize> {
    let gens = natural_generators(ladder, field)?;
    let maxdeg = gens.generators.iter().map(|g| g.polynomial.total_degree() as usize).max().unwrap_or(0);
    Ok(2 * maxdeg + 2)
}

fn monomial_ideal_of(ladder: &Ladder, order: &TermOrder, field: Field, ambient: &[Var]) -> Result<MonomialIdeal> {
    Ok(MonomialIdeal::new(initial_generators(ladder, order, field)?, ambient.iter().copied()))
}

fn complex_of(ideal: &MonomialIdeal, budget: &Budget) -> Result<SimplicialComplex> {
    SimplicialComplex::from_squarefree_with_budget(ideal, budget)
}

fn without(ambient: &[Var], f: Var) -> Vec<Var> {
    ambient.iter().copied().filter(|v| *v != f).collect()
}

/// `f` sheds the complex of `C`, with deletion the complex of `A` and link that of `B`.
fn shedding_matches(a: &MonomialIdeal, b: &MonomialIdeal, c: &MonomialIdeal, f: Var, budget: &Budget) -> Result<bool> {
    if !c.is_squarefree() || !a.is_squarefree() || !b.is_squarefree() || b.support().contains(&f) {
        return Ok(false);
    }
    let dc = complex_of(c, budget)?;
    let rest = without(&c.ambient().iter().copied().collect::<Vec<_>>(), f);
    let da = complex_of(&a.with_ambient(rest.iter().copied()), budget)?;
    let db = complex_of(&b.with_ambient(rest.iter().copied()), budget)?;
    Ok(dc.check_shedding(f) && dc.deletion(f) == da && dc.link(f) == db)
}

fn step_flags(step: &LinkageStep, budget: &Budget) -> Result<StepFlags> {
    let (a, b, c) = step.ideals();
    let f = Monomial::var(step.shedding);
    let colon_stable = a.colon_stable(&f) && !a.support().contains(&step.shedding);
    let bdl_exact = match bdl(&a, &b, &f) {
        Ok(x) => x.generators() == c.generators(),
        Err(_) => false,
    };
    let shedding_ok = shedding_matches(&a, &b, &c, step.shedding, budget)?;
    let (hl, hm) = (step.instance.height_formula() as i64, step.middle.height_formula() as i64);
    let heights_ok = if c.is_squarefree() && a.is_squarefree() {
        let (cc, ca) = (complex_of(&c, budget)?.codimension(), complex_of(&a, budget)?.codimension());
        cc == hl && cc == ca + 1
    } else {
        false
    };
    Ok(StepFlags { colon_stable, bdl_exact, shedding_ok, height_delta: hl - hm, heights_ok })
}

/// Runs the corner-removal recursion to the end, sharing repeated sub-instances.
pub fn build_chain(ladder: &Ladder, order: &TermOrder, field: Field, budget: &Budget) -> Result<LinkageCertificate> {
    ladder.check()?;
    let mut steps = Vec::new();
    let mut terminals = Vec::new();
    let mut seen = HashSet::new();
    let mut stack = vec![ladder.clone()];
    while let Some(l) = stack.pop() {
        budget.check_clock()?;
        let key = l.to_string();
        if !seen.insert(key.clone()) {
            continue;
        }
        let ambient = l.variables();
        match l.recursion_split()? {
            SplitResult::Terminal => {
                let generators = minimalize(initial_generators(&l, order, field)?);
                let linear = generators.iter().all(|g| g.degree() == 1);
                terminals.push(TerminalNode { key, instance: l, generators, linear });
            }
            SplitResult::Split(s) => {
                let measure = |x: &Ladder| (x.cells().len(), x.size_sum());
                if measure(&s.reduced) >= measure(&l) || measure(&s.middle) >= measure(&l) {
                    return Err(LadderError::Precondition(format!("split of {l} does not decrease (cells, sizes)")));
                }
                let a = monomial_ideal_of(&s.middle, order, field, &ambient)?;
                let b = monomial_ideal_of(&s.reduced, order, field, &ambient)?;
                let c = monomial_ideal_of(&l, order, field, &ambient)?;
                let mut step = LinkageStep {
                    key,
                    instance: l.clone(),
                    reduced: s.reduced.clone(),
                    middle: s.middle.clone(),
                    shedding: s.shedding,
                    shift: 1,
                    ambient,
                    a: a.generators().to_vec(),
                    b: b.generators().to_vec(),
                    c: c.generators().to_vec(),
                    flags: StepFlags { colon_stable: false, bdl_exact: false, shedding_ok: false, height_delta: 0, heights_ok: false },
                    warnings: s.warnings,
                };
                step.flags = step_flags(&step, budget)?;
                steps.push(step);
                stack.push(s.middle);
                stack.push(s.reduced);
            }
        }
    }
    steps.sort_by_key(|s: &LinkageStep| std::cmp::Reverse((s.instance.cells().len(), s.instance.size_sum())));
    let root_ambient = ladder.variables();
    let root_initial = minimalize(initial_generators(ladder, order, field)?);
    let mut cert = LinkageCertificate {
        schema_version: SCHEMA_VERSION,
        root: ladder.clone(),
        order: order.kind(),
        field,
        dmax: default_dmax(ladder, field)?,
        root_ambient,
        root_initial,
        steps,
        terminals,
        vd: None,
        verdicts: BTreeMap::new(),
    };
    cert.verdicts.insert("bdl".into(), cert.steps.iter().all(|s| s.flags.bdl_exact && s.flags.colon_stable));
    cert.verdicts.insert("shedding".into(), cert.steps.iter().all(|s| s.flags.shedding_ok));
    cert.verdicts.insert("heights".into(), cert.steps.iter().all(|s| s.flags.heights_ok && s.flags.height_delta == 1));
    cert.verdicts.insert("connected".into(), cert.is_connected());
    cert.verdicts.insert("terminal_linear".into(), cert.terminals.iter().all(|t| t.linear));
    Ok(cert)
}

/// Reduced Groebner bases of ladder ideals, shared across steps and threads.
#[derive(Default)]
pub struct GroebnerCache {
    map: Mutex<HashMap<String, Arc<Vec<Polynomial>>>>,
}

impl GroebnerCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, ladder: &Ladder, order: &TermOrder, field: Field, budget: &Budget) -> Result<Arc<Vec<Polynomial>>> {
        let key = format!("{ladder}|{}|{field}|{:?}", order.kind(), order.ranking());
        if let Some(hit) = self.map.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let gens = natural_generators(ladder, field)?.polynomials();
        let gb = Arc::new(buchberger_reduced_with_budget(&gens, order, budget)?);
        self.map.lock().expect("cache lock").entry(key).or_insert_with(|| gb.clone());
        Ok(gb)
    }
}

/// Outcome of the Hilbert-function checks at one step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InidReport {
    pub key: String,
    pub dmax: usize,
    /// First degree where `H_C(d) = H_B(d-1) + H_A(d) - H_A(d-1)` fails.
    pub monomial_failure: Option<usize>,
    /// First degree where `H_J(d) = H_I(d-1) + H_N(d) - H_N(d-1)` fails.
    pub ideal_failure: Option<usize>,
    /// Every generator of `C` lies in the initial ideal of `J`.
    pub c_in_initial: bool,
}

impl InidReport {
    pub fn passed(&self) -> bool {
        self.monomial_failure.is_none() && self.ideal_failure.is_none() && self.c_in_initial
    }
}

fn first_bdl_failure(h_c: &[u64], h_b: &[u64], h_a: &[u64], shift: usize) -> Option<usize> {
    (0..h_c.len()).find(|&d| {
        let back = |h: &[u64]| if d >= shift { h[d - shift] as i128 } else { 0 };
        h_c[d] as i128 != back(h_b) + h_a[d] as i128 - back(h_a)
    })
}

/// Checks the two Hilbert identities of one step for `d <= dmax`, using Buchberger
/// initial ideals of `I = I(L')`, `J = I(L)`, `N = I(M)` for the second.
pub fn verify_inid_step(
    step: &LinkageStep,
    order: &TermOrder,
    field: Field,
    dmax: usize,
    budget: &Budget,
    cache: &GroebnerCache,
) -> Result<InidReport> {
    let (a, b, c) = step.ideals();
    let f = Monomial::var(step.shedding);
    if !a.colon_stable(&f) {
        return Err(LadderError::Precondition(format!("colon not stable: (A : {f}) != A")));
    }
    if !(a.is_squarefree() && b.is_squarefree() && c.is_squarefree()) {
        return Err(LadderError::NotSquarefree);
    }
    let shift = step.shift as usize;
    let monomial_failure = first_bdl_failure(&c.hilbert_vector(dmax), &b.hilbert_vector(dmax), &a.hilbert_vector(dmax), shift);
    let initial = |l: &Ladder| -> Result<MonomialIdeal> {
        let gb = cache.get(l, order, field, budget)?;
        let lms: Vec<Monomial> = gb.iter().map(|g| g.leading_monomial(order)).collect::<Result<_>>()?;
        Ok(MonomialIdeal::new(lms, step.ambient.iter().copied()))
    };
    let (in_i, in_j, in_n) = (initial(&step.reduced)?, initial(&step.instance)?, initial(&step.middle)?);
    let ideal_failure =
        first_bdl_failure(&in_j.hilbert_vector(dmax), &in_i.hilbert_vector(dmax), &in_n.hilbert_vector(dmax), shift);
    let c_in_initial = c.generators().iter().all(|g| in_j.contains(g));
    Ok(InidReport { key: step.key.clone(), dmax, monomial_failure, ideal_failure, c_in_initial })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub instance: Ladder,
    pub key: String,
    pub order: OrderKind,
    pub field: Field,
    pub dmax: usize,
    pub checks: Vec<CheckResult>,
    pub inid: Vec<InidReport>,
    pub certificate: Option<LinkageCertificate>,
    pub vd: Option<VdOutcome>,
    /// Hypotheses taken on trust rather than checked.
    pub assumptions: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn any_skipped(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Skipped)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn record<T>(checks: &mut Vec<CheckResult>, id: &str, name: &str, outcome: Result<T>, judge: impl FnOnce(&T) -> (bool, String)) -> Result<Option<T>> {
    let (status, detail, value) = match outcome {
        Ok(v) => {
            let (ok, detail) = judge(&v);
            (if ok { Status::Pass } else { Status::Fail }, detail, Some(v))
        }
        Err(LadderError::Budget(msg)) => (Status::Skipped, format!("budget exhausted: {msg}"), None),
        Err(e) => return Err(e),
    };
    checks.push(CheckResult { id: id.into(), name: name.into(), status, detail });
    Ok(value)
}

/// Monic natural generators and the reduced Groebner basis, both as sets.
pub fn groebner_fixed_point(ladder: &Ladder, order: &TermOrder, field: Field, budget: &Budget) -> Result<(bool, bool)> {
    let monic: Vec<Polynomial> =
        natural_generators(ladder, field)?.polynomials().iter().map(|p| p.monic(order)).collect::<Result<_>>()?;
    let reduced_claim = is_reduced_groebner(&monic, order)?;
    let gb = buchberger_reduced_with_budget(&monic, order, budget)?;
    let lhs: HashSet<&Polynomial> = gb.iter().collect();
    let rhs: HashSet<&Polynomial> = monic.iter().collect();
    Ok((reduced_claim, lhs == rhs && gb.len() == monic.len()))
}

/// Checks (a) through (f) for one instance. Budget exhaustion marks the affected checks
/// as skipped instead of failing the call.
pub fn verify_family(ladder: &Ladder, order: &TermOrder, field: Field, dmax: Option<usize>, budget: &Budget) -> Result<FamilyReport> {
    ladder.check()?;
    crate::families::check_order_covers(ladder, order)?;
    let dmax = match dmax {
        Some(d) => d,
        None => default_dmax(ladder, field)?,
    };
    let mut checks = Vec::new();
    let fixed = groebner_fixed_point(ladder, order, field, budget);
    let (reduced, equal) = match fixed {
        Ok(x) => (Ok(x.0), Ok(x.1)),
        Err(e) => (Err(e.clone()), Err(e)),
    };
    record(&mut checks, "a", "natural generators form a reduced Groebner basis", reduced, |ok| (*ok, String::new()))?;
    record(&mut checks, "b", "Buchberger oracle returns the natural generators", equal, |ok| (*ok, String::new()))?;

    let ambient = ladder.variables();
    let initial = monomial_ideal_of(ladder, order, field, &ambient)?;
    record(&mut checks, "c", "initial ideal is squarefree", Ok(initial.is_squarefree()), |ok| {
        (*ok, format!("{} minimal generators", initial.generators().len()))
    })?;

    let complex = if initial.is_squarefree() { Some(complex_of(&initial, budget)) } else { None };
    let codim = complex.clone().map(|c| c.map(|c| c.codimension()));
    let height = ladder.height_formula() as i64;
    match codim {
        Some(res) => {
            record(&mut checks, "d", "codimension equals the height formula", res, |cd| {
                (*cd == height, format!("codimension {cd}, formula {height}"))
            })?;
        }
        None => checks.push(CheckResult { id: "d".into(), name: "codimension equals the height formula".into(), status: Status::Fail, detail: "initial ideal is not squarefree".into() }),
    }

    let chain = build_chain(ladder, order, field, budget);
    let cert = match chain {
        Ok(c) => Some(c),
        Err(LadderError::Budget(_)) => None,
        Err(e) => return Err(e),
    };
    let preferred = cert.as_ref().map(|c| c.shedding_sequence()).unwrap_or_default();
    let vd = match complex {
        Some(Ok(cx)) => Some(cx.is_vertex_decomposable_with(&preferred, budget).map(|o| (cx, o))),
        Some(Err(e)) => Some(Err(e)),
        None => None,
    };
    let mut vd_outcome = None;
    match (&cert, vd) {
        (None, _) => checks.push(skipped("e", "chain construction exceeded the budget")),
        (Some(_), None) => checks.push(CheckResult {
            id: "e".into(),
            name: "vertex decomposable".into(),
            status: Status::Fail,
            detail: "initial ideal is not squarefree".into(),
        }),
        (Some(cert), Some(res)) => {
            let judged = record(&mut checks, "e", "vertex decomposable, constructive shedding holds", res, |(cx, o)| {
                let replay = o.certificate.as_ref().is_some_and(|c| cx.replay(c));
                let steps = cert.steps.iter().all(|s| s.flags.shedding_ok);
                (o.decomposable && replay && steps, format!("search {}, replay {replay}, chain shedding {steps}", o.decomposable))
            })?;
            vd_outcome = judged.map(|(_, o)| o);
        }
    }

    let mut inid = Vec::new();
    match &cert {
        Some(cert) => {
            let cache = GroebnerCache::new();
            let reports: Vec<Result<InidReport>> =
                cert.steps.par_iter().map(|s| verify_inid_step(s, order, field, dmax, budget, &cache)).collect();
            let mut failure = None;
            let mut skipped_msg = None;
            for r in reports {
                match r {
                    Ok(r) => inid.push(r),
                    Err(LadderError::Budget(m)) => skipped_msg = Some(m),
                    Err(e) => failure = Some(e.to_string()),
                }
            }
            let structural = cert.steps.iter().all(|s| s.flags.bdl_exact && s.flags.colon_stable) && cert.is_connected();
            if let Some(m) = skipped_msg {
                checks.push(skipped("f", &m));
            } else {
                let ok = failure.is_none() && structural && inid.iter().all(InidReport::passed);
                let detail = match failure {
                    Some(e) => e,
                    None => format!("{} steps, dmax {dmax}, structure {structural}", cert.steps.len()),
                };
                checks.push(CheckResult { id: "f".into(), name: "Hilbert identities at every chain step".into(), status: if ok { Status::Pass } else { Status::Fail }, detail });
            }
        }
        None => checks.push(skipped("f", "chain construction exceeded the budget")),
    }

    let certificate = cert.map(|mut c| {
        c.dmax = dmax;
        c.vd = vd_outcome.as_ref().and_then(|o| o.certificate.clone());
        c
    });
    Ok(FamilyReport {
        instance: ladder.clone(),
        key: ladder.to_string(),
        order: order.kind(),
        field,
        dmax,
        checks,
        inid,
        certificate,
        vd: vd_outcome,
        assumptions: vec![
            "G0 and generically Gorenstein hypotheses of the biliaison lemma are not checked".into(),
            "the isomorphism J/N = [I/N](-1) is checked only through Hilbert functions".into(),
        ],
    })
}

fn skipped(id: &str, msg: &str) -> CheckResult {
    CheckResult { id: id.into(), name: String::new(), status: Status::Skipped, detail: format!("budget exhausted: {msg}") }
}

/// Outcome of re-checking a serialized certificate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub failures: Vec<String>,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Re-verifies a certificate from its monomial data alone.
pub fn replay(cert: &LinkageCertificate) -> Result<ReplayReport> {
    let mut failures = Vec::new();
    if cert.schema_version != SCHEMA_VERSION {
        failures.push(format!("schema version {} is not {SCHEMA_VERSION}", cert.schema_version));
    }
    if !cert.is_connected() {
        failures.push("chain is not connected".into());
    }
    if cert.steps.first().map(|s| &s.instance) != Some(&cert.root) && !cert.steps.is_empty() {
        failures.push("first step is not the root instance".into());
    }
    for t in &cert.terminals {
        if !t.generators.iter().all(|g| g.degree() == 1) {
            failures.push(format!("{}: terminal generators are not indeterminates", t.key));
        }
    }
    let budget = Budget::unlimited();
    for s in &cert.steps {
        if s.shift != 1 {
            failures.push(format!("{}: shift {} is not 1", s.key, s.shift));
        }
        let (a, b, c) = s.ideals();
        let f = Monomial::var(s.shedding);
        match bdl(&a, &b, &f) {
            Ok(x) if x.generators() == c.generators() => {}
            Ok(_) => failures.push(format!("{}: C != A + {f} B", s.key)),
            Err(e) => failures.push(format!("{}: {e}", s.key)),
        }
        if a.support().contains(&s.shedding) {
            failures.push(format!("{}: {f} divides a generator of A", s.key));
        }
        if let Some(d) = first_bdl_failure(&c.hilbert_vector(cert.dmax), &b.hilbert_vector(cert.dmax), &a.hilbert_vector(cert.dmax), 1) {
            failures.push(format!("{}: Hilbert identity fails in degree {d}", s.key));
        }
        if !shedding_matches(&a, &b, &c, s.shedding, &budget)? {
            failures.push(format!("{}: {f} is not a shedding vertex", s.key));
        }
    }
    if let Some(vd) = &cert.vd {
        let root = MonomialIdeal::new(cert.root_initial.iter().cloned(), cert.root_ambient.iter().copied());
        match SimplicialComplex::from_squarefree(&root) {
            Ok(cx) if cx.replay(vd) => {}
            Ok(_) => failures.push("vertex decomposition does not replay".into()),
            Err(e) => failures.push(format!("root complex: {e}")),
        }
    }
    if let Some(first) = cert.steps.first() {
        let c: BTreeSet<&Monomial> = first.c.iter().collect();
        if c != cert.root_initial.iter().collect() {
            failures.push("root initial ideal differs from the first step".into());
        }
    }
    Ok(ReplayReport { failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladders::{MaxMinors, PfaffianLadder};

    const Q: Field = Field::Rationals;

    fn mm(m: usize, n: usize) -> Ladder {
        Ladder::MaxMinors(MaxMinors { m, n })
    }

    #[test]
    fn one_row_is_terminal() {
        let l = mm(1, 3);
        let cert = build_chain(&l, &l.default_order(), Q, &Budget::unlimited()).unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(cert.terminals.len(), 1);
        assert!(cert.terminals[0].linear);
    }

    #[test]
    fn two_by_three_chain() {
        let l = mm(2, 3);
        let cert = build_chain(&l, &l.default_order(), Q, &Budget::unlimited()).unwrap();
        assert!(cert.steps.len() >= 2);
        assert!(cert.is_connected());
        assert!(cert.steps.iter().all(LinkageStep::is_ok), "{:#?}", cert.steps);
        let cache = GroebnerCache::new();
        for s in &cert.steps {
            let r = verify_inid_step(s, &l.default_order(), Q, 6, &Budget::unlimited(), &cache).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert!(replay(&cert).unwrap().passed());
    }

    #[test]
    fn pfaffian_four_step() {
        let l = Ladder::Pfaffian(PfaffianLadder { n: 4, corners: vec![(1, 4)], t: vec![2] });
        let cert = build_chain(&l, &l.default_order(), Q, &Budget::unlimited()).unwrap();
        assert_eq!(cert.steps.len(), 1);
        let s = &cert.steps[0];
        assert_eq!(s.shedding, Var::new(1, 4));
        assert_eq!(s.reduced, Ladder::Pfaffian(PfaffianLadder { n: 4, corners: vec![(2, 3)], t: vec![1] }));
        assert!(s.is_ok());
    }

    #[test]
    fn unstable_colon_is_rejected() {
        let l = mm(2, 3);
        let cert = build_chain(&l, &l.default_order(), Q, &Budget::unlimited()).unwrap();
        let mut s = cert.steps[0].clone();
        s.shedding = s.a[0].vars().next().unwrap();
        let err = verify_inid_step(&s, &l.default_order(), Q, 6, &Budget::unlimited(), &GroebnerCache::new()).unwrap_err();
        assert!(err.to_string().contains("colon not stable"));
    }

    #[test]
    fn full_report_two_by_three() {
        let l = mm(2, 3);
        let r = verify_family(&l, &l.default_order(), Q, None, &Budget::unlimited()).unwrap();
        assert!(r.passed(), "{:#?}", r.checks);
        assert_eq!(r.checks.len(), 6);
        let cert = r.certificate.unwrap();
        assert!(replay(&cert).unwrap().passed());
        let back = LinkageCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn tiny_budget_skips() {
        let l = mm(2, 4);
        let r = verify_family(&l, &l.default_order(), Q, None, &Budget::unlimited().with_spairs(0).with_faces(0)).unwrap();
        assert!(r.any_skipped());
    }
}
