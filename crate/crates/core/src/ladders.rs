//! Ladder geometries, validation, shifted ladders, heights and the corner-removal split.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LadderError, Result};
use crate::field::Field;
use crate::matrix::MatrixShape;
use crate::poly::{normal_form, OrderKind, Polynomial, TermOrder, Var};

pub type Cell = (usize, usize);
pub type CellSet = BTreeSet<Cell>;

/// Names the first violated ladder condition and where it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub condition: String,
    pub detail: String,
}

impl Diagnostic {
    fn new(condition: &str, detail: impl Into<String>) -> Self {
        Diagnostic { condition: condition.to_string(), detail: detail.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)
    }
}

/// All maximal minors of a generic `m x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MaxMinors {
    pub m: usize,
    pub n: usize,
}

/// Symmetric ladder given by upper corners; region k is the square block `a_k <= i, j <= b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PfaffianLadder {
    pub n: usize,
    pub corners: Vec<Cell>,
    pub t: Vec<usize>,
}

/// `L+` inside `{i <= j}` given by distinguished points; region k is `{i <= j, i <= v_k, j <= w_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricPlusLadder {
    pub n: usize,
    pub points: Vec<Cell>,
    pub t: Vec<usize>,
}

/// One-sided ladder of an `m x n` matrix; region k is `{i <= a_k, j >= b_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneSidedLadder {
    pub m: usize,
    pub n: usize,
    pub points: Vec<Cell>,
    pub t: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    #[serde(rename = "maxminors")]
    MaxMinors,
    Pfaffian,
    Symmetric,
    #[serde(rename = "onesided")]
    OneSided,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::MaxMinors => "maxminors",
            Family::Pfaffian => "pfaffian",
            Family::Symmetric => "symmetric",
            Family::OneSided => "onesided",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LadderSpec", into = "LadderSpec")]
pub enum Ladder {
    MaxMinors(MaxMinors),
    Pfaffian(PfaffianLadder),
    Symmetric(SymmetricPlusLadder),
    OneSided(OneSidedLadder),
}

/// Wire format of a ladder instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LadderSpec {
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corners: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<usize>>,
}

fn pairs(v: Option<Vec<[usize; 2]>>, what: &str) -> Result<Vec<Cell>> {
    v.map(|v| v.into_iter().map(|[a, b]| (a, b)).collect())
        .ok_or_else(|| LadderError::Parse(format!("missing {what:?}")))
}

impl TryFrom<LadderSpec> for Ladder {
    type Error = LadderError;

    fn try_from(s: LadderSpec) -> Result<Self> {
        let t = || s.t.clone().ok_or_else(|| LadderError::Parse("missing \"t\"".into()));
        match s.family.as_str() {
            "maxminors" => {
                let m = s.m.ok_or_else(|| LadderError::Parse("maxminors needs \"m\"".into()))?;
                if let Some(t) = &s.t {
                    if t.as_slice() != [m] {
                        return Err(LadderError::Parse(format!("maxminors has t = [m], got {t:?}")));
                    }
                }
                Ok(Ladder::MaxMinors(MaxMinors { m, n: s.n }))
            }
            "pfaffian" => Ok(Ladder::Pfaffian(PfaffianLadder { n: s.n, corners: pairs(s.corners.clone(), "corners")?, t: t()? })),
            "symmetric" => {
                Ok(Ladder::Symmetric(SymmetricPlusLadder { n: s.n, points: pairs(s.points.clone(), "points")?, t: t()? }))
            }
            "onesided" => {
                let m = s.m.ok_or_else(|| LadderError::Parse("onesided needs \"m\"".into()))?;
                Ok(Ladder::OneSided(OneSidedLadder { m, n: s.n, points: pairs(s.points.clone(), "points")?, t: t()? }))
            }
            "twosided" | "two-sided" => Err(LadderError::OutOfScope("two-sided ladders are not supported".into())),
            other => Err(LadderError::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl From<Ladder> for LadderSpec {
    fn from(l: Ladder) -> Self {
        let arr = |v: &[Cell]| Some(v.iter().map(|&(a, b)| [a, b]).collect());
        match l {
            Ladder::MaxMinors(x) => LadderSpec { family: "maxminors".into(), n: x.n, m: Some(x.m), t: Some(vec![x.m]), ..Default::default() },
            Ladder::Pfaffian(x) => LadderSpec { family: "pfaffian".into(), n: x.n, corners: arr(&x.corners), t: Some(x.t), ..Default::default() },
            Ladder::Symmetric(x) => LadderSpec { family: "symmetric".into(), n: x.n, points: arr(&x.points), t: Some(x.t), ..Default::default() },
            Ladder::OneSided(x) => {
                LadderSpec { family: "onesided".into(), n: x.n, m: Some(x.m), points: arr(&x.points), t: Some(x.t), ..Default::default() }
            }
        }
    }
}

impl fmt::Display for Ladder {
    /// Canonical instance key, e.g. `onesided 3x3 (2,1)^2 (3,2)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ladder::MaxMinors(x) => write!(f, "maxminors {}x{}", x.m, x.n),
            _ => {
                let (m, n) = (self.shape().rows(), self.shape().cols());
                write!(f, "{} {m}x{n}", self.family())?;
                for (p, t) in self.points().iter().zip(self.t()) {
                    write!(f, " ({},{})^{t}", p.0, p.1)?;
                }
                Ok(())
            }
        }
    }
}

/// Output of [`Ladder::recursion_split`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult {
    Terminal,
    Split(Split),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// `L'` with `t'`.
    pub reduced: Ladder,
    /// `M` with `u`.
    pub middle: Ladder,
    pub shedding: Var,
    /// Index of the point that was removed.
    pub k: usize,
    pub warnings: Vec<String>,
}

impl Ladder {
    pub fn from_json(s: &str) -> Result<Ladder> {
        let spec: LadderSpec = serde_json::from_str(s).map_err(|e| LadderError::Parse(e.to_string()))?;
        Ladder::try_from(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ladders serialize")
    }

    pub fn family(&self) -> Family {
        match self {
            Ladder::MaxMinors(_) => Family::MaxMinors,
            Ladder::Pfaffian(_) => Family::Pfaffian,
            Ladder::Symmetric(_) => Family::Symmetric,
            Ladder::OneSided(_) => Family::OneSided,
        }
    }

    pub fn shape(&self) -> MatrixShape {
        match self {
            Ladder::MaxMinors(x) => MatrixShape::Generic { m: x.m, n: x.n },
            Ladder::Pfaffian(x) => MatrixShape::SkewSymmetric { n: x.n },
            Ladder::Symmetric(x) => MatrixShape::Symmetric { n: x.n },
            Ladder::OneSided(x) => MatrixShape::Generic { m: x.m, n: x.n },
        }
    }

    /// The order kind under which the family's generators are claimed to be a Groebner basis.
    pub fn default_order_kind(&self) -> OrderKind {
        match self {
            Ladder::MaxMinors(_) | Ladder::Symmetric(_) => OrderKind::Diagonal,
            Ladder::Pfaffian(_) | Ladder::OneSided(_) => OrderKind::AntiDiagonal,
        }
    }

    pub fn default_order(&self) -> TermOrder {
        TermOrder::new(self.default_order_kind(), self.shape())
    }

    pub fn points(&self) -> Vec<Cell> {
        match self {
            Ladder::MaxMinors(x) => vec![(x.m, 1)],
            Ladder::Pfaffian(x) => x.corners.clone(),
            Ladder::Symmetric(x) => x.points.clone(),
            Ladder::OneSided(x) => x.points.clone(),
        }
    }

    pub fn t(&self) -> Vec<usize> {
        match self {
            Ladder::MaxMinors(x) => vec![x.m],
            Ladder::Pfaffian(x) => x.t.clone(),
            Ladder::Symmetric(x) => x.t.clone(),
            Ladder::OneSided(x) => x.t.clone(),
        }
    }

    fn with_points(&self, points: Vec<Cell>, t: Vec<usize>) -> Ladder {
        match self {
            Ladder::MaxMinors(_) => unreachable!("max minors have no point list"),
            Ladder::Pfaffian(x) => Ladder::Pfaffian(PfaffianLadder { n: x.n, corners: points, t }),
            Ladder::Symmetric(x) => Ladder::Symmetric(SymmetricPlusLadder { n: x.n, points, t }),
            Ladder::OneSided(x) => Ladder::OneSided(OneSidedLadder { m: x.m, n: x.n, points, t }),
        }
    }

    /// Cells of region `k` (for pfaffian blocks, both triangles and the diagonal).
    pub fn region_cells(&self, k: usize) -> CellSet {
        region_cells(self, self.points()[k])
    }

    pub fn cells(&self) -> CellSet {
        match self {
            Ladder::MaxMinors(x) => (1..=x.m).flat_map(|i| (1..=x.n).map(move |j| (i, j))).collect(),
            _ => self.points().into_iter().flat_map(|p| region_cells(self, p)).collect(),
        }
    }

    /// The ladder's variables: cells for generic shapes, `i <= j` for symmetric, `i < j` for skew.
    pub fn variables(&self) -> Vec<Var> {
        let shape = self.shape();
        self.cells()
            .into_iter()
            .filter(|&(i, j)| match shape {
                MatrixShape::Generic { .. } => true,
                MatrixShape::Symmetric { .. } => i <= j,
                MatrixShape::SkewSymmetric { .. } => i < j,
            })
            .map(|(i, j)| Var::new(i, j))
            .collect()
    }

    /// True if region `k` carries no minor or pfaffian of the required size.
    pub fn is_inert(&self, k: usize) -> bool {
        let (p, t) = (self.points()[k], self.t()[k]);
        match self {
            Ladder::MaxMinors(x) => x.m > x.n,
            Ladder::Pfaffian(_) => p.0 >= p.1 || 2 * t > p.1 - p.0 + 1,
            Ladder::Symmetric(_) => t > p.0.min(p.1),
            Ladder::OneSided(x) => t > p.0 || p.1 > x.n || t > x.n - p.1 + 1,
        }
    }

    /// `Ok` iff every structural condition and normalization assumption holds.
    pub fn validate(&self) -> std::result::Result<(), Diagnostic> {
        self.validate_structure()?;
        if let Ladder::OneSided(x) = self {
            validate_onesided_remarks(x)?;
        }
        Ok(())
    }

    /// [`Ladder::validate`] as a typed error.
    pub fn check(&self) -> Result<()> {
        self.validate().map_err(LadderError::InvalidLadder)
    }

    /// The ladder axioms without the normalization assumptions.
    pub fn validate_structure(&self) -> std::result::Result<(), Diagnostic> {
        match self {
            Ladder::MaxMinors(x) => {
                if x.m == 0 || x.m > x.n {
                    return Err(Diagnostic::new("matrix shape", format!("need 1 <= m <= n, got {}x{}", x.m, x.n)));
                }
                Ok(())
            }
            Ladder::Pfaffian(x) => validate_pfaffian(x),
            Ladder::Symmetric(x) => validate_symmetric(x),
            Ladder::OneSided(x) => validate_onesided(x),
        }
    }

    /// The shifted ladder whose size gives the height, with all sizes equal to one.
    /// `None` when every shifted region is empty.
    pub fn tilde_ladder(&self) -> Option<Ladder> {
        let (pts, ts) = (self.points(), self.t());
        let shifted: Vec<Cell> = match self {
            Ladder::MaxMinors(x) => {
                return (x.m <= x.n).then(|| {
                    Ladder::OneSided(OneSidedLadder { m: x.m, n: x.n, points: vec![(1, x.m)], t: vec![1] })
                })
            }
            Ladder::Pfaffian(_) => pts
                .iter()
                .zip(&ts)
                .filter(|&(&(a, b), &t)| a + t - 1 < (b + 1).saturating_sub(t)).map(|(&(a, b), &t)| (a + t - 1, b + 1 - t))
                .collect(),
            Ladder::Symmetric(_) => pts
                .iter()
                .zip(&ts)
                .filter(|&(&(v, w), &t)| v >= t && w >= t).map(|(&(v, w), &t)| (v + 1 - t, w + 1 - t))
                .collect(),
            Ladder::OneSided(x) => pts
                .iter()
                .zip(&ts)
                .filter(|&(&(a, b), &t)| a >= t && b + t - 1 <= x.n).map(|(&(a, b), &t)| (a + 1 - t, b + t - 1))
                .collect(),
        };
        if shifted.is_empty() {
            return None;
        }
        let ones = vec![1; shifted.len()];
        Some(self.with_points(shifted, ones))
    }

    /// Cells of the shifted ladder. For the symmetric family this is evaluated by the
    /// displayed inequality description of `L~+` intersected with `L+`.
    pub fn tilde(&self) -> CellSet {
        match self {
            Ladder::Symmetric(x) => symmetric_tilde_by_inequalities(x, &self.cells()),
            _ => self.tilde_ladder().map(|l| l.cells()).unwrap_or_default(),
        }
    }

    /// Height predicted by the shifted ladder.
    pub fn height_formula(&self) -> usize {
        let tilde = self.tilde();
        match self {
            Ladder::Pfaffian(_) => tilde.iter().filter(|(i, j)| i < j).count(),
            _ => tilde.len(),
        }
    }

    /// The ladder is terminal when every region that carries generators has size one.
    pub fn is_terminal(&self) -> bool {
        match self {
            Ladder::MaxMinors(x) => x.m <= 1 || x.m > x.n,
            _ => (0..self.t().len()).all(|k| self.t()[k] == 1 || self.is_inert(k)),
        }
    }

    /// One step of the inductive proofs: remove the point of largest size.
    pub fn recursion_split(&self) -> Result<SplitResult> {
        if self.is_terminal() {
            return Ok(SplitResult::Terminal);
        }
        if let Ladder::MaxMinors(x) = self {
            return Ok(SplitResult::Split(Split {
                reduced: Ladder::MaxMinors(MaxMinors { m: x.m - 1, n: x.n - 1 }),
                middle: Ladder::MaxMinors(MaxMinors { m: x.m, n: x.n - 1 }),
                shedding: Var::new(x.m, x.n),
                k: 0,
                warnings: Vec::new(),
            }));
        }
        let (pts, ts) = (self.points(), self.t());
        let k = (0..pts.len())
            .filter(|&k| !self.is_inert(k) && ts[k] >= 2)
            .max_by(|&a, &b| ts[a].cmp(&ts[b]).then(b.cmp(&a)))
            .expect("non-terminal ladder has an active point");
        let (p, t) = (pts[k], ts[k]);
        let (reduced_pt, middle_pts) = match self {
            Ladder::Pfaffian(_) => ((p.0 as isize + 1, p.1 as isize - 1), [(p.0 as isize, p.1 as isize - 1), (p.0 as isize + 1, p.1 as isize)]),
            Ladder::Symmetric(_) => {
                ((p.0 as isize - 1, p.1 as isize - 1), [(p.0 as isize - 1, p.1 as isize), (p.0 as isize, p.1 as isize - 1)])
            }
            Ladder::OneSided(_) => {
                ((p.0 as isize - 1, p.1 as isize + 1), [(p.0 as isize - 1, p.1 as isize), (p.0 as isize, p.1 as isize + 1)])
            }
            Ladder::MaxMinors(_) => unreachable!(),
        };
        let mut warnings = Vec::new();
        let mut reduced: Vec<(isize, isize, usize)> = Vec::new();
        let mut middle: Vec<(isize, isize, usize)> = Vec::new();
        for (i, (&q, &s)) in pts.iter().zip(&ts).enumerate() {
            let q = (q.0 as isize, q.1 as isize);
            if i == k {
                reduced.push((reduced_pt.0, reduced_pt.1, t - 1));
                middle.push((middle_pts[0].0, middle_pts[0].1, t));
                middle.push((middle_pts[1].0, middle_pts[1].1, t));
            } else {
                reduced.push((q.0, q.1, s));
                middle.push((q.0, q.1, s));
            }
        }
        let reduced = self.normalize(reduced, &mut warnings)?;
        let middle = self.normalize(middle, &mut warnings)?;
        let shedding = Var::new(p.0, p.1);
        Ok(SplitResult::Split(Split { reduced, middle, shedding, k, warnings }))
    }

    /// The same ideal with redundant points removed; warnings report structural defects
    /// of the result.
    pub fn normalized(&self) -> Result<(Ladder, Vec<String>)> {
        if let Ladder::MaxMinors(_) = self {
            return Ok((self.clone(), Vec::new()));
        }
        let raw = self.points().iter().zip(self.t()).map(|(p, t)| (p.0 as isize, p.1 as isize, t)).collect();
        let mut warnings = Vec::new();
        let l = self.normalize(raw, &mut warnings)?;
        Ok((l, warnings))
    }

    /// Clips degenerate points, sorts, and drops points whose generators lie in the ideal
    /// of the remaining points. Points without generators are kept while they add cells.
    fn normalize(&self, raw: Vec<(isize, isize, usize)>, warnings: &mut Vec<String>) -> Result<Ladder> {
        let (rows, cols) = (self.shape().rows() as isize, self.shape().cols() as isize);
        let mut pts: Vec<(Cell, usize)> = Vec::new();
        for (a, b, t) in raw {
            if t == 0 || a < 1 || b < 1 || a > rows || b > cols {
                continue;
            }
            let (a, b) = (a as usize, b as usize);
            let p = match self {
                Ladder::Pfaffian(_) if a >= b => continue,
                Ladder::Symmetric(_) if a > b => (b, b),
                _ => (a, b),
            };
            pts.push((p, t));
        }
        match self {
            Ladder::Symmetric(_) => pts.sort_by(|x, y| x.0 .0.cmp(&y.0 .0).then(y.0 .1.cmp(&x.0 .1)).then(x.1.cmp(&y.1))),
            _ => pts.sort(),
        }
        pts.dedup_by(|later, earlier| later.0 == earlier.0);
        let mut ladder = self.with_points(pts.iter().map(|x| x.0).collect(), pts.iter().map(|x| x.1).collect());
        let mut k = 0;
        while k < ladder.points().len() && ladder.points().len() > 1 {
            let others = ladder.without_point(k);
            let drop = if ladder.is_inert(k) {
                ladder.region_cells(k).is_subset(&others.cells())
            } else {
                region_generators_redundant(&ladder, k, &others)?
            };
            if drop {
                ladder = others;
            } else {
                k += 1;
            }
        }
        if let Err(d) = ladder.validate_structure() {
            if ladder.points().is_empty() {
                return Ok(ladder);
            }
            warnings.push(format!("{ladder}: {d}"));
        }
        Ok(ladder)
    }

    fn without_point(&self, k: usize) -> Ladder {
        let (mut p, mut t) = (self.points(), self.t());
        p.remove(k);
        t.remove(k);
        self.with_points(p, t)
    }

    /// Number of points with their sizes summed, the second component of the
    /// well-founded recursion measure.
    pub fn size_sum(&self) -> usize {
        self.t().iter().sum()
    }
}

fn region_generators_redundant(ladder: &Ladder, k: usize, others: &Ladder) -> Result<bool> {
    let field = Field::Rationals;
    let mine = crate::families::region_generators(ladder, k, field)?;
    if mine.is_empty() {
        return Ok(true);
    }
    let order = ladder.default_order();
    let theirs: Vec<Polynomial> = crate::families::natural_generators(others, field)?.polynomials();
    for g in mine {
        if !normal_form(&g, &theirs, &order)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn region_cells(ladder: &Ladder, p: Cell) -> CellSet {
    let mut out = CellSet::new();
    match ladder {
        Ladder::MaxMinors(x) => {
            for i in 1..=x.m {
                for j in 1..=x.n {
                    out.insert((i, j));
                }
            }
        }
        Ladder::Pfaffian(_) => {
            for i in p.0..=p.1 {
                for j in p.0..=p.1 {
                    out.insert((i, j));
                }
            }
        }
        Ladder::Symmetric(x) => {
            for i in 1..=p.0.min(x.n) {
                for j in i..=p.1.min(x.n) {
                    out.insert((i, j));
                }
            }
        }
        Ladder::OneSided(x) => {
            for i in 1..=p.0.min(x.m) {
                for j in p.1.max(1)..=x.n {
                    out.insert((i, j));
                }
            }
        }
    }
    out
}

fn symmetric_tilde_by_inequalities(x: &SymmetricPlusLadder, cells: &CellSet) -> CellSet {
    let s = x.points.len();
    let shift = |k: usize| -> (isize, isize) {
        let (v, w) = x.points[k];
        let t = x.t[k] as isize;
        (v as isize - t + 1, w as isize - t + 1)
    };
    cells
        .iter()
        .copied()
        .filter(|&(i, j)| {
            let (i, j) = (i as isize, j as isize);
            if s == 0 || j > shift(0).1 || i > shift(s - 1).0 {
                return false;
            }
            (1..s).all(|k| i <= shift(k - 1).0 || j <= shift(k).1)
        })
        .collect()
}

fn common_checks(n_points: usize, n_t: usize, t: &[usize]) -> std::result::Result<(), Diagnostic> {
    if n_points == 0 {
        return Err(Diagnostic::new("nonempty", "at least one point is required"));
    }
    if n_points != n_t {
        return Err(Diagnostic::new("size vector", format!("{n_points} points but {n_t} sizes")));
    }
    if let Some(k) = t.iter().position(|&x| x == 0) {
        return Err(Diagnostic::new("size vector", format!("t_{} must be positive", k + 1)));
    }
    Ok(())
}

fn validate_pfaffian(x: &PfaffianLadder) -> std::result::Result<(), Diagnostic> {
    common_checks(x.corners.len(), x.t.len(), &x.t)?;
    for (k, &(a, b)) in x.corners.iter().enumerate() {
        if a < 1 || b > x.n || a >= b {
            return Err(Diagnostic::new("upper corner bounds", format!("corner {} = ({a},{b}) needs 1 <= a < b <= {}", k + 1, x.n)));
        }
    }
    for k in 1..x.corners.len() {
        let (p, q) = (x.corners[k - 1], x.corners[k]);
        if p == q {
            return Err(Diagnostic::new("no two upper corners coincide", format!("corner ({},{}) is listed twice", q.0, q.1)));
        }
        if p.0 > q.0 || p.1 > q.1 {
            return Err(Diagnostic::new("corner order", format!("({},{}) before ({},{}) breaks a_1 <= ... <= a_s, b_1 <= ... <= b_s", p.0, p.1, q.0, q.1)));
        }
    }
    let lad = Ladder::Pfaffian(x.clone());
    let cells = lad.cells();
    for &(a, b) in &x.corners {
        if a >= 1 && cells.contains(&(a - 1, b + 1)) {
            return Err(Diagnostic::new("upper corners belong to the border", format!("({},{}) lies in the ladder", a - 1, b + 1)));
        }
    }
    staircase(&cells)
}

fn validate_symmetric(x: &SymmetricPlusLadder) -> std::result::Result<(), Diagnostic> {
    common_checks(x.points.len(), x.t.len(), &x.t)?;
    for (k, &(v, w)) in x.points.iter().enumerate() {
        if v < 1 || v > w || w > x.n {
            return Err(Diagnostic::new("point bounds", format!("point {} = ({v},{w}) needs 1 <= v <= w <= {}", k + 1, x.n)));
        }
    }
    for k in 1..x.points.len() {
        let (p, q) = (x.points[k - 1], x.points[k]);
        if p == q {
            return Err(Diagnostic::new("distinct points", format!("({},{}) is listed twice", q.0, q.1)));
        }
        if p.0 > q.0 || p.1 < q.1 {
            return Err(Diagnostic::new("point order", format!("({},{}) before ({},{}) breaks v_1 <= ... <= v_s, w_1 >= ... >= w_s", p.0, p.1, q.0, q.1)));
        }
    }
    let cells = Ladder::Symmetric(x.clone()).cells();
    for &(v, w) in &x.points {
        if cells.contains(&(v + 1, w + 1)) {
            return Err(Diagnostic::new("points lie on the lower border", format!("({v},{w}) is interior: ({},{}) is in the ladder", v + 1, w + 1)));
        }
    }
    Ok(())
}

fn validate_onesided(x: &OneSidedLadder) -> std::result::Result<(), Diagnostic> {
    if x.m == 0 || x.m > x.n {
        return Err(Diagnostic::new("matrix shape", format!("need 1 <= m <= n, got {}x{}", x.m, x.n)));
    }
    common_checks(x.points.len(), x.t.len(), &x.t)?;
    for (k, &(a, b)) in x.points.iter().enumerate() {
        if a < 1 || a > x.m || b < 1 || b > x.n {
            return Err(Diagnostic::new("point bounds", format!("point {} = ({a},{b}) outside {}x{}", k + 1, x.m, x.n)));
        }
    }
    for k in 1..x.points.len() {
        let (p, q) = (x.points[k - 1], x.points[k]);
        if p == q {
            return Err(Diagnostic::new("distinct points", format!("({},{}) is listed twice", q.0, q.1)));
        }
        if p.0 > q.0 || p.1 > q.1 {
            return Err(Diagnostic::new("point order", format!("({},{}) before ({},{}) breaks a_1 <= ... <= a_s, b_1 <= ... <= b_s", p.0, p.1, q.0, q.1)));
        }
    }
    let cells = Ladder::OneSided(x.clone()).cells();
    if !cells.contains(&(1, x.n)) {
        return Err(Diagnostic::new("corner cell", format!("(1,{}) must lie in the ladder (printed as (1,m) in the definition; read as (1,n))", x.n)));
    }
    for &(a, b) in &x.points {
        if b >= 2 && cells.contains(&(a + 1, b - 1)) {
            return Err(Diagnostic::new("points lie on the lower border", format!("({a},{b}) is interior: ({},{}) is in the ladder", a + 1, b - 1)));
        }
    }
    staircase(&cells)
}

fn validate_onesided_remarks(x: &OneSidedLadder) -> std::result::Result<(), Diagnostic> {
    for (k, (&(a, b), &t)) in x.points.iter().zip(&x.t).enumerate() {
        let bound = a.min(x.n - b + 1);
        if t > bound {
            return Err(Diagnostic::new("size bound t_k <= min(a_k, n - b_k + 1)", format!("t_{} = {t} exceeds {bound}", k + 1)));
        }
    }
    for k in 1..x.points.len() {
        let (a0, b0, t0) = (x.points[k - 1].0 as isize, x.points[k - 1].1 as isize, x.t[k - 1] as isize);
        let (a1, b1, t1) = (x.points[k].0 as isize, x.points[k].1 as isize, x.t[k] as isize);
        if !(b0 - b1 < t1 - t0 && t1 - t0 < a1 - a0) {
            return Err(Diagnostic::new(
                "b_{k-1} - b_k < t_k - t_{k-1} < a_k - a_{k-1}",
                format!("fails at k = {}: {} < {} < {}", k + 1, b0 - b1, t1 - t0, a1 - a0),
            ));
        }
    }
    Ok(())
}

/// If `i < h`, `j > k` and `(i,j), (h,k)` lie in the ladder then so do `(i,k), (h,j)`.
fn staircase(cells: &CellSet) -> std::result::Result<(), Diagnostic> {
    for &(i, j) in cells {
        for &(h, k) in cells {
            if i < h && j > k {
                if let Some(c) = [(i, k), (h, j)].into_iter().find(|c| !cells.contains(c)) {
                    return Err(Diagnostic::new(
                        "staircase condition",
                        format!("({i},{j}) and ({h},{k}) are in the ladder but ({},{}) is not", c.0, c.1),
                    ));
                }
            }
        }
    }
    Ok(())
}
