//! Command-line front end: validate instances, run the checks, emit reports and certificates.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use ladderlink::families::{initial_generators, natural_generators};
use ladderlink::linkage::{build_chain, groebner_fixed_point, replay, verify_family, LinkageCertificate, Status};
use ladderlink::monomial_ideal::MonomialIdeal;
use ladderlink::{Budget, Field, Ladder, LadderError, OrderKind, SimplicialComplex, TermOrder};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "ladderlink", version, about = "Groebner, liaison and Stanley-Reisner checks for ladder ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Term order kind: diag or antidiag. Defaults to the family's order.
    #[arg(long, global = true)]
    order: Option<OrderKind>,
    /// Highest degree for Hilbert-function checks.
    #[arg(long, global = true)]
    dmax: Option<usize>,
    /// Coefficient field: q or gf:P.
    #[arg(long, global = true, default_value = "q")]
    field: Field,
    /// Maximum number of S-pair reductions per Groebner computation.
    #[arg(long, global = true)]
    budget_spairs: Option<u64>,
    /// Maximum number of face-enumeration or search steps.
    #[arg(long, global = true)]
    budget_faces: Option<u64>,
    /// Wall-clock limit in seconds.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    /// Write the JSON result to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the ladder conditions.
    Validate { instance: PathBuf },
    /// List the natural generators.
    Generators { instance: PathBuf },
    /// Reduced Groebner basis verdicts.
    GroebnerCheck { instance: PathBuf },
    /// Minimal generators of the initial ideal.
    Initial { instance: PathBuf },
    /// Height formula against the codimension of the initial complex.
    Height { instance: PathBuf },
    /// Vertex decomposability of the initial complex.
    Vd { instance: PathBuf },
    /// Build the linkage certificate.
    Chain { instance: PathBuf },
    /// Run every check and emit the full report.
    Verify { instance: PathBuf },
    /// Re-check a certificate file.
    Replay { certificate: PathBuf },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<LadderError> for Failure {
    fn from(e: LadderError) -> Self {
        match e {
            LadderError::Budget(m) => Failure::Budget(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(format!("{e:#}"))
    }
}

type Outcome = std::result::Result<bool, Failure>;

impl Opts {
    fn budget(&self) -> Budget {
        let mut b = Budget::unlimited();
        if let Some(n) = self.budget_spairs {
            b = b.with_spairs(n);
        }
        if let Some(n) = self.budget_faces {
            b = b.with_faces(n);
        }
        if let Some(s) = self.timeout {
            b = b.with_timeout(Duration::from_secs(s));
        }
        b
    }

    fn order(&self, l: &Ladder) -> TermOrder {
        TermOrder::new(self.order.unwrap_or_else(|| l.default_order_kind()), l.shape())
    }

    /// Prints `text` or the JSON value, and writes JSON to `--out` when given.
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<(), Failure> {
        let json = serde_json::to_string_pretty(value).expect("outputs serialize");
        if let Some(path) = &self.out {
            std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
        }
        let body = if self.json { json } else { text() };
        match writeln!(std::io::stdout().lock(), "{body}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Input(format!("writing output: {e}"))),
            _ => Ok(()),
        }
    }
}

fn load(path: &Path) -> Result<Ladder, Failure> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Ladder::from_json(&text)?)
}

fn load_valid(path: &Path) -> Result<Ladder, Failure> {
    let l = load(path)?;
    l.check()?;
    Ok(l)
}

fn initial_ideal(l: &Ladder, opts: &Opts) -> Result<MonomialIdeal, Failure> {
    Ok(MonomialIdeal::new(initial_generators(l, &opts.order(l), opts.field)?, l.variables()))
}

#[derive(Serialize)]
struct Verdicts<'a> {
    instance: &'a Ladder,
    #[serde(flatten)]
    values: serde_json::Value,
}

fn run(cmd: &Command, opts: &Opts) -> Outcome {
    match cmd {
        Command::Validate { instance } => {
            let l = load(instance)?;
            match l.validate() {
                Ok(()) => {
                    let v = serde_json::json!({ "valid": true });
                    opts.emit(&Verdicts { instance: &l, values: v }, || format!("{l}: valid"))?;
                    Ok(true)
                }
                Err(d) => {
                    let v = serde_json::json!({ "valid": false, "diagnostic": d });
                    opts.emit(&Verdicts { instance: &l, values: v }, || format!("{l}: invalid: {d}"))?;
                    Err(Failure::Input(d.to_string()))
                }
            }
        }
        Command::Generators { instance } => {
            let l = load_valid(instance)?;
            let order = opts.order(&l);
            let gens = natural_generators(&l, opts.field)?;
            let rows: Vec<serde_json::Value> = gens
                .generators
                .iter()
                .map(|g| serde_json::json!({ "region": g.region + 1, "selection": g.selection, "polynomial": g.polynomial.to_text(&order) }))
                .collect();
            opts.emit(&rows, || rows.iter().map(|r| r["polynomial"].as_str().unwrap_or_default().to_string()).collect::<Vec<_>>().join("\n"))?;
            Ok(true)
        }
        Command::GroebnerCheck { instance } => {
            let l = load_valid(instance)?;
            let (reduced, fixed) = groebner_fixed_point(&l, &opts.order(&l), opts.field, &opts.budget())?;
            let v = serde_json::json!({ "reduced_groebner": reduced, "oracle_agrees": fixed });
            opts.emit(&Verdicts { instance: &l, values: v }, || {
                format!("{l}\n(a) reduced Groebner basis: {}\n(b) Buchberger oracle agrees: {}", pass(reduced), pass(fixed))
            })?;
            Ok(reduced && fixed)
        }
        Command::Initial { instance } => {
            let l = load_valid(instance)?;
            let a = initial_ideal(&l, opts)?;
            let gens: Vec<String> = a.generators().iter().map(|g| g.to_string()).collect();
            let v = serde_json::json!({ "generators": gens, "squarefree": a.is_squarefree() });
            opts.emit(&Verdicts { instance: &l, values: v }, || format!("{}\nsquarefree: {}", gens.join("\n"), a.is_squarefree()))?;
            Ok(a.is_squarefree())
        }
        Command::Height { instance } => {
            let l = load_valid(instance)?;
            let a = initial_ideal(&l, opts)?;
            let codim = SimplicialComplex::from_squarefree_with_budget(&a, &opts.budget())?.codimension();
            let formula = l.height_formula() as i64;
            let v = serde_json::json!({ "formula": formula, "codimension": codim });
            opts.emit(&Verdicts { instance: &l, values: v }, || format!("{l}: formula {formula}, codimension {codim}: {}", pass(formula == codim)))?;
            Ok(formula == codim)
        }
        Command::Vd { instance } => {
            let l = load_valid(instance)?;
            let budget = opts.budget();
            let cx = SimplicialComplex::from_squarefree_with_budget(&initial_ideal(&l, opts)?, &budget)?;
            let preferred = build_chain(&l, &opts.order(&l), opts.field, &budget).map(|c| c.shedding_sequence()).unwrap_or_default();
            let out = cx.is_vertex_decomposable_with(&preferred, &budget)?;
            opts.emit(&out, || {
                let mut s = format!("{l}: vertex decomposable: {}", out.decomposable);
                for line in &out.trace {
                    s.push_str(&format!("\n  {line}"));
                }
                s
            })?;
            Ok(out.decomposable)
        }
        Command::Chain { instance } => {
            let l = load_valid(instance)?;
            let cert = build_chain(&l, &opts.order(&l), opts.field, &opts.budget())?;
            let ok = cert.verdicts.values().all(|&v| v);
            opts.emit(&cert, || {
                let mut s = format!("{l}: {} steps, {} terminals", cert.steps.len(), cert.terminals.len());
                for st in &cert.steps {
                    s.push_str(&format!("\n  {} -- shed {} --> {} | {}", st.key, st.shedding, st.reduced, st.middle));
                }
                for (k, v) in &cert.verdicts {
                    s.push_str(&format!("\n{k}: {}", pass(*v)));
                }
                s
            })?;
            Ok(ok)
        }
        Command::Verify { instance } => {
            let l = load_valid(instance)?;
            let report = verify_family(&l, &opts.order(&l), opts.field, opts.dmax, &opts.budget())?;
            opts.emit(&report, || {
                let mut s = format!("{} (dmax {})", report.key, report.dmax);
                for c in &report.checks {
                    s.push_str(&format!("\n({}) {} {}", c.id, status(c.status), c.name));
                    if !c.detail.is_empty() {
                        s.push_str(&format!(": {}", c.detail));
                    }
                }
                s
            })?;
            if report.any_failed() {
                Ok(false)
            } else if report.any_skipped() {
                Err(Failure::Budget("some checks were skipped".into()))
            } else {
                Ok(true)
            }
        }
        Command::Replay { certificate } => {
            let text = std::fs::read_to_string(certificate).with_context(|| format!("reading {}", certificate.display()))?;
            let cert = LinkageCertificate::from_json(&text)?;
            let r = replay(&cert)?;
            opts.emit(&r, || {
                if r.passed() {
                    format!("{}: certificate replays", cert.root)
                } else {
                    r.failures.join("\n")
                }
            })?;
            Ok(r.passed())
        }
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIPPED",
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, &cli.opts) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("budget exhausted: {m}");
            ExitCode::from(3)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(["ladderlink", "verify", "x.json", "--field", "gf:7", "--order", "antidiag", "--dmax", "4"]).unwrap();
        assert!(matches!(cli.command, Command::Verify { .. }));
        assert_eq!(cli.opts.field, Field::prime(7).unwrap());
        assert_eq!(cli.opts.order, Some(OrderKind::AntiDiagonal));
        assert_eq!(cli.opts.dmax, Some(4));
    }

    #[test]
    fn default_order_follows_family() {
        let cli = Cli::try_parse_from(["ladderlink", "vd", "x.json"]).unwrap();
        let l = Ladder::from_json(r#"{"family":"pfaffian","n":4,"corners":[[1,4]],"t":[2]}"#).unwrap();
        assert_eq!(cli.opts.order(&l), l.default_order());
    }

    #[test]
    fn budget_errors_map_to_budget_failure() {
        assert!(matches!(Failure::from(LadderError::Budget("x".into())), Failure::Budget(_)));
        assert!(matches!(Failure::from(LadderError::Parse("x".into())), Failure::Input(_)));
        assert_eq!(status(Status::Skipped), "SKIPPED");
    }
}
