//! The five subcommands. Each returns a human summary, a JSON report and an exit status.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use mlacalc::action::{CompatiblePair, CompatibilityReport};
use mlacalc::harness::{self, Instance, Outcome, Selection, Status, Suite};
use mlacalc::mla::{axiom_sides, MultLieAlg, SeriesReport, SeriesVerdict};
use mlacalc::scan;
use mlacalc::tensor::{tensor_product, SeedOrder, TensorError, TensorOptions};
use serde::Serialize;
use serde_json::{json, Value};

use crate::document::{witness_names, AlgebraDoc, InstanceDocument, LoadError, RawAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExitStatus {
    Pass,
    Violation,
    InputError,
    Resource,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Pass => 0,
            ExitStatus::Violation => 1,
            ExitStatus::InputError => 2,
            ExitStatus::Resource => 3,
        }
    }
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub max_cosets: Option<usize>,
    pub max_rounds: Option<usize>,
    pub suite: Option<String>,
    pub statement: Option<String>,
    pub seed_order: SeedOrder,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub human: String,
    pub json: Value,
    pub status: ExitStatus,
}

impl Report {
    fn new(command: &str, human: String, mut body: Value, status: ExitStatus) -> Self {
        if let Value::Object(map) = &mut body {
            map.insert("status".into(), serde_json::to_value(status).unwrap());
            let mut out = serde_json::Map::new();
            out.insert("command".into(), command.into());
            out.extend(std::mem::take(map));
            body = Value::Object(out);
        }
        Report {
            human,
            json: body,
            status,
        }
    }

    /// A report for a document that could not be loaded.
    pub fn load_failure(command: &str, e: &LoadError) -> Self {
        let (status, body) = match e {
            LoadError::Input(msg) => (ExitStatus::InputError, json!({ "error": msg })),
            LoadError::Violation { what, witness } => (
                ExitStatus::Violation,
                json!({ "violation": { "condition": what, "witness": witness } }),
            ),
        };
        Report::new(command, format!("{e}\n"), body, status)
    }
}

fn tensor_options(opts: &Options, job_cosets: Option<usize>, job_rounds: Option<usize>) -> TensorOptions {
    let d = TensorOptions::default();
    TensorOptions {
        max_cosets: opts.max_cosets.or(job_cosets).unwrap_or(d.max_cosets),
        max_rounds: opts.max_rounds.or(job_rounds).unwrap_or(d.max_rounds),
        seed_order: opts.seed_order,
        ..d
    }
}

#[derive(Serialize)]
struct AxiomLine {
    axiom: u8,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

fn axiom_lines(raw: &RawAlgebra) -> Vec<AxiomLine> {
    let g = &raw.group;
    let n = g.order();
    let star = |a: usize, b: usize| raw.star[a][b];
    (1..=5u8)
        .map(|axiom| {
            let dims: &[usize] = if axiom == 1 { &[n] } else { &[n, n, n] };
            let hit = scan::first_failure(dims, |t| {
                let z = if axiom == 1 { [t[0]; 3] } else { [t[0], t[1], t[2]] };
                let (l, r) = axiom_sides(g, star, axiom, z);
                l == r
            });
            AxiomLine {
                axiom,
                holds: hit.is_none(),
                witness: hit.map(|w| w.iter().map(|&x| g.label(x).to_string()).collect()),
            }
        })
        .collect()
}

fn describe_axioms(label: &str, lines: &[AxiomLine], out: &mut String) -> bool {
    let held = lines.iter().filter(|l| l.holds).count();
    let _ = writeln!(out, "{label}axioms: {held}/5");
    for l in lines.iter().filter(|l| !l.holds) {
        let _ = writeln!(
            out,
            "  axiom {} fails at ({})",
            l.axiom,
            l.witness.as_deref().unwrap_or_default().join(", ")
        );
    }
    held == 5
}

fn pair_algebra_docs(doc: &InstanceDocument) -> Option<Vec<(&'static str, &AlgebraDoc)>> {
    let pair = match doc {
        InstanceDocument::Algebra(_) => return None,
        InstanceDocument::Pair(p) => p,
        InstanceDocument::Tensor(t) => &t.pair,
    };
    let mut out = vec![("G", &pair.g)];
    if let Some(h) = &pair.h {
        out.push(("H", h));
    }
    Some(out)
}

fn flag_json(report: &CompatibilityReport) -> Value {
    Value::Array(
        report
            .flags
            .iter()
            .map(|f| {
                json!({
                    "condition": f.condition.to_string(),
                    "side": f.side,
                    "holds": f.witness.is_none(),
                    "witness": f.witness,
                })
            })
            .collect(),
    )
}

fn describe_flags(report: &CompatibilityReport, out: &mut String) {
    let held = report.flags.iter().filter(|f| f.witness.is_none()).count();
    let _ = writeln!(out, "action and compatibility conditions: {held}/{}", report.flags.len());
    for f in report.flags.iter().filter(|f| f.witness.is_some()) {
        let _ = writeln!(
            out,
            "  {} ({}) fails at positions {:?}",
            f.condition,
            f.side,
            f.witness.as_deref().unwrap_or_default()
        );
    }
}

/// Axioms of every algebra in the document, then the pair conditions.
pub fn validate(doc: &InstanceDocument) -> Report {
    let algebras: Vec<(&str, &AlgebraDoc)> = match doc {
        InstanceDocument::Algebra(a) => vec![("", a)],
        _ => pair_algebra_docs(doc).unwrap(),
    };
    let mut human = String::new();
    let mut body = serde_json::Map::new();
    let mut ok = true;
    let mut axioms_json = serde_json::Map::new();
    for (name, a) in &algebras {
        let raw = match a.raw() {
            Ok(r) => r,
            Err(e) => return Report::load_failure("validate", &e),
        };
        let lines = axiom_lines(&raw);
        let label = if name.is_empty() { String::new() } else { format!("{name} ") };
        ok &= describe_axioms(&label, &lines, &mut human);
        axioms_json.insert(
            if name.is_empty() { "algebra".into() } else { name.to_string() },
            json!({ "order": raw.group.order(), "axioms": lines }),
        );
    }
    body.insert("axioms".into(), Value::Object(axioms_json));
    if ok {
        if let Some(pair_doc) = match doc {
            InstanceDocument::Algebra(_) => None,
            InstanceDocument::Pair(p) => Some(p),
            InstanceDocument::Tensor(t) => Some(&t.pair),
        } {
            let raw = match pair_doc.raw() {
                Ok(r) => r,
                Err(e) => {
                    if let LoadError::Input(_) = e {
                        return Report::load_failure("validate", &e);
                    }
                    let _ = writeln!(human, "{e}");
                    body.insert("actions".into(), json!({ "violation": e.to_string() }));
                    return Report::new("validate", human, Value::Object(body), ExitStatus::Violation);
                }
            };
            match CompatiblePair::report(&raw.g_on_h, &raw.h_on_g) {
                Ok(report) => {
                    describe_flags(&report, &mut human);
                    ok &= report.all_hold();
                    body.insert("conditions".into(), flag_json(&report));
                }
                Err(e) => return Report::load_failure("validate", &LoadError::Input(e.to_string())),
            }
        }
    }
    let status = if ok { ExitStatus::Pass } else { ExitStatus::Violation };
    Report::new("validate", human, Value::Object(body), status)
}

fn series_line(r: &SeriesReport, noun: &str) -> String {
    match r.verdict {
        SeriesVerdict::Terminated(n) => format!("yes, {noun} {n}"),
        SeriesVerdict::Stabilized(_) => format!(
            "no (stabilizes at order {})",
            r.stable_term().map_or(0, |t| t.order())
        ),
    }
}

fn series_json(r: &SeriesReport) -> Value {
    json!({
        "term_orders": r.term_orders(),
        "verdict": r.verdict,
        "value": r.class_or_length(),
    })
}

fn series_of(label: &str, m: &MultLieAlg, human: &mut String) -> Value {
    let lc = m.lower_central_series();
    let d = m.derived_series();
    let nil = series_line(&lc, "class");
    let sol = series_line(&d, "length");
    let _ = writeln!(human, "{label}Lie nilpotent: {nil}; Lie solvable: {sol}");
    let _ = writeln!(
        human,
        "{label}lower central orders {:?}; derived orders {:?}",
        lc.term_orders(),
        d.term_orders()
    );
    json!({
        "order": m.order(),
        "lower_central": series_json(&lc),
        "derived": series_json(&d),
    })
}

/// Lower central and derived series of every algebra in the document.
pub fn series(doc: &InstanceDocument) -> Report {
    let algebras: Vec<(&str, &AlgebraDoc)> = match doc {
        InstanceDocument::Algebra(a) => vec![("", a)],
        _ => pair_algebra_docs(doc).unwrap(),
    };
    let mut human = String::new();
    let mut body = serde_json::Map::new();
    for (name, a) in algebras {
        let m = match a.load() {
            Ok(m) => m,
            Err(e) => return Report::load_failure("series", &e),
        };
        let label = if name.is_empty() { String::new() } else { format!("{name}: ") };
        let v = series_of(&label, &m, &mut human);
        body.insert(if name.is_empty() { "algebra".into() } else { name.into() }, v);
    }
    Report::new("series", human, Value::Object(body), ExitStatus::Pass)
}

fn load_pair(command: &str, doc: &InstanceDocument) -> Result<CompatiblePair, Report> {
    let pair_doc = match doc {
        InstanceDocument::Algebra(_) => {
            return Err(Report::load_failure(
                command,
                &LoadError::Input(format!("{command} needs a pair or tensor document")),
            ))
        }
        InstanceDocument::Pair(p) => p,
        InstanceDocument::Tensor(t) => &t.pair,
    };
    pair_doc.load().map_err(|e| Report::load_failure(command, &e))
}

fn ledger_status(outcome: Outcome) -> ExitStatus {
    match outcome {
        Outcome::AllPass => ExitStatus::Pass,
        Outcome::Violation => ExitStatus::Violation,
        Outcome::Resource => ExitStatus::Resource,
    }
}

fn describe_ledger(ledger: &harness::VerdictLedger, human: &mut String) {
    for e in &ledger.entries {
        if matches!(&e.status, Status::Skipped { resource: false, .. }) {
            continue;
        }
        let _ = write!(human, "{:<40} {}", e.id, e.status);
        if let Status::Fail { witness, .. } = &e.status {
            if !witness.is_empty() {
                let _ = write!(human, " at positions {witness:?}");
            }
        }
        if let Some(note) = &e.note {
            let _ = write!(human, " [{note}]");
        }
        human.push('\n');
    }
    let count = |f: fn(&Status) -> bool| ledger.count(f);
    let _ = writeln!(
        human,
        "passed {}, failed {}, inapplicable {}, skipped {}",
        count(|s| matches!(s, Status::Pass)),
        count(|s| matches!(s, Status::Fail { .. })),
        count(|s| matches!(s, Status::Inapplicable { .. })),
        count(|s| matches!(s, Status::Skipped { resource: true, .. })),
    );
}

/// Action and compatibility conditions, then the pair-level statements.
pub fn action_check(doc: &InstanceDocument) -> Report {
    let pair_doc = match doc {
        InstanceDocument::Algebra(_) => {
            return Report::load_failure(
                "action-check",
                &LoadError::Input("action-check needs a pair or tensor document".into()),
            )
        }
        InstanceDocument::Pair(p) => p,
        InstanceDocument::Tensor(t) => &t.pair,
    };
    let raw = match pair_doc.raw() {
        Ok(r) => r,
        Err(e) => return Report::load_failure("action-check", &e),
    };
    let report = match CompatiblePair::report(&raw.g_on_h, &raw.h_on_g) {
        Ok(r) => r,
        Err(e) => return Report::load_failure("action-check", &LoadError::Input(e.to_string())),
    };
    let mut human = String::new();
    describe_flags(&report, &mut human);
    let mut body = json!({ "conditions": flag_json(&report) });
    if !report.all_hold() {
        return Report::new("action-check", human, body, ExitStatus::Violation);
    }
    let pair = match raw.validate() {
        Ok(p) => p,
        Err(e) => return Report::load_failure("action-check", &e),
    };
    let selection = Selection {
        suite: Some(Suite::Compat),
        ..Selection::default()
    };
    let ledger = harness::run_suite(&Instance::Pair(pair), &selection).expect("suite selection is valid");
    describe_ledger(&ledger, &mut human);
    body["statements"] = serde_json::to_value(
        ledger
            .entries
            .iter()
            .filter(|e| e.suite == Suite::Compat)
            .collect::<Vec<_>>(),
    )
    .unwrap();
    Report::new("action-check", human, body, ledger_status(ledger.outcome()))
}

/// Realizes `G⊗H` and reports it as an algebra document plus the symbol map.
pub fn tensor(doc: &InstanceDocument, opts: &Options) -> Report {
    let pair = match load_pair("tensor", doc) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let (jc, jr) = match doc {
        InstanceDocument::Tensor(t) => (t.max_cosets, t.max_rounds),
        _ => (None, None),
    };
    let mut topts = tensor_options(opts, jc, jr);
    topts.deadline = Selection::budget_from_env().map(|b| Instant::now() + b);
    let t = match tensor_product(&pair, &topts) {
        Ok(t) => t,
        Err(e) => {
            let status = match e {
                TensorError::CosetCapExceeded { .. }
                | TensorError::DeadlineExceeded
                | TensorError::StarInconsistent { .. } => ExitStatus::Resource,
                TensorError::Input(_) => ExitStatus::InputError,
                _ => ExitStatus::Violation,
            };
            return Report::new("tensor", format!("{e}\n"), json!({ "error": e.to_string() }), status);
        }
    };
    let (g, h) = (pair.g(), pair.h());
    let pair_names = |v: &[(usize, usize)]| -> Vec<[String; 2]> {
        v.iter()
            .map(|&(x, y)| [g.group().label(x).to_string(), h.group().label(y).to_string()])
            .collect()
    };
    let k = t.group();
    let mut human = String::new();
    let _ = writeln!(human, "|G⊗H| = {}", t.order());
    let _ = writeln!(
        human,
        "star: {}",
        if t.algebra().is_trivial_star() { "trivial" } else { "non-trivial" }
    );
    let _ = writeln!(
        human,
        "completion rounds: {}, relators added: {}, defining relators: {}, generators after simplification: {}",
        t.rounds(),
        t.added_relators().len(),
        t.relator_count(),
        t.simplified_generators()
    );
    let symbols: Vec<Vec<String>> = t
        .tensor_map()
        .iter()
        .map(|row| witness_names(t.algebra(), row))
        .collect();
    let induced = t.induced().map(|ind| {
        let rows = |flat: &[u32], actors: usize| -> Vec<Vec<String>> {
            flat.chunks(k.order())
                .take(actors)
                .map(|r| r.iter().map(|&z| k.label(z as usize).to_string()).collect())
                .collect()
        };
        json!({
            "g_action": rows(&ind.g_action, g.order()),
            "h_action": rows(&ind.h_action, h.order()),
        })
    });
    let body = json!({
        "order": t.order(),
        "rounds": t.rounds(),
        "added_relators": t.added_relators().iter().map(|w| pair_names(w)).collect::<Vec<_>>(),
        "relator_count": t.relator_count(),
        "simplified_generators": t.simplified_generators(),
        "generators": t
            .generators()
            .map(|(z, (x, y))| json!({ "element": k.label(z), "symbol": [g.group().label(x), h.group().label(y)] }))
            .collect::<Vec<_>>(),
        "seed_order": t.seed_order(),
        "enumeration": t.stats(),
        "algebra": AlgebraDoc::from_algebra(t.algebra()),
        "symbols": symbols,
        "induced_actions": induced,
    });
    Report::new("tensor", human, body, ExitStatus::Pass)
}

/// Runs the statement catalogue on the instance.
pub fn verify(doc: &InstanceDocument, opts: &Options) -> Report {
    let suite = match opts.suite.as_deref().map(Suite::parse) {
        None => None,
        Some(Some(s)) => s,
        Some(None) => {
            return Report::load_failure(
                "verify",
                &LoadError::Input(format!(
                    "unknown suite {:?}; expected axioms, identities, compat, tensor or all",
                    opts.suite.as_deref().unwrap_or_default()
                )),
            )
        }
    };
    let (instance, jc, jr) = match doc {
        InstanceDocument::Algebra(a) => match a.load() {
            Ok(m) => (Instance::Algebra(Arc::new(m)), None, None),
            Err(e) => return Report::load_failure("verify", &e),
        },
        InstanceDocument::Pair(p) => match p.load() {
            Ok(p) => (Instance::Pair(p), None, None),
            Err(e) => return Report::load_failure("verify", &e),
        },
        InstanceDocument::Tensor(t) => match t.pair.load() {
            Ok(p) => (Instance::Pair(p), t.max_cosets, t.max_rounds),
            Err(e) => return Report::load_failure("verify", &e),
        },
    };
    let selection = Selection {
        suite,
        statement: opts.statement.clone(),
        tensor: tensor_options(opts, jc, jr),
        budget: Selection::budget_from_env(),
    };
    let ledger = match harness::run_suite(&instance, &selection) {
        Ok(l) => l,
        Err(e) => return Report::load_failure("verify", &LoadError::Input(e.to_string())),
    };
    let mut human = String::new();
    describe_ledger(&ledger, &mut human);
    let body = json!({ "outcome": ledger.outcome(), "entries": ledger.entries });
    Report::new("verify", human, body, ledger_status(ledger.outcome()))
}

