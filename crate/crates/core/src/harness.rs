//! A fixed catalogue of structural statements, each evaluated exhaustively on
//! an instance and collected into a verdict ledger.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::action::{ActionError, CompatiblePair, Condition, MixedIdeal, Side};
use crate::group::{Elem, Subgroup};
use crate::mla::{IdealDefect, LieIdentity, MultLieAlg};
use crate::pair_checks;
use crate::tensor::{
    self, check_tensor_lie_commutator, identify, main_theorem_check, tensor_ideal, PrefixOrder,
    RelatorOrder, SeedOrder, TensorAlgebra, TensorError, TensorIdentity, TensorOptions,
};

/// Environment variable holding the per-statement time budget in seconds.
pub const BUDGET_ENV: &str = "MLACALC_BUDGET_SECS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    Identities,
    Compat,
    Tensor,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Option<Suite>> {
        Some(match s {
            "axioms" => Some(Suite::Axioms),
            "identities" => Some(Suite::Identities),
            "compat" => Some(Suite::Compat),
            "tensor" => Some(Suite::Tensor),
            "all" => None,
            _ => return None,
        })
    }
}

/// What a statement needs from the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Algebra,
    Pair,
    Tensor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Statement {
    pub id: &'static str,
    pub suite: Suite,
    pub scope: Scope,
    pub summary: &'static str,
}

const fn st(id: &'static str, suite: Suite, scope: Scope, summary: &'static str) -> Statement {
    Statement {
        id,
        suite,
        scope,
        summary,
    }
}

/// The frozen statement catalogue, in ledger order.
pub const CATALOGUE: &[Statement] = &[
    st("mla-axioms", Suite::Axioms, Scope::Algebra, "the five star axioms hold"),
    st("lie-identity-diagonal", Suite::Identities, Scope::Algebra, "^L[a,a] = 1"),
    st("lie-identity-antisymmetry", Suite::Identities, Scope::Algebra, "^L[a,b] ^L[b,a] = 1"),
    st("lie-identity-left-product", Suite::Identities, Scope::Algebra, "^L[ab,c] expands"),
    st("lie-identity-right-product", Suite::Identities, Scope::Algebra, "^L[a,bc] expands"),
    st("lie-identity-conjugation", Suite::Identities, Scope::Algebra, "conjugation commutes with ^L"),
    st("lie-identity-inverse", Suite::Identities, Scope::Algebra, "^L of inverses"),
    st("lie-identity-central-stars", Suite::Identities, Scope::Algebra, "^L[a,b] centralizes x⋆y"),
    st("action-conditions", Suite::Compat, Scope::Pair, "both actions are actions"),
    st("compatibility-conditions", Suite::Compat, Scope::Pair, "the five compatibility conditions hold"),
    st("bracket-conjugation", Suite::Compat, Scope::Pair, "brackets conjugate brackets"),
    st("commutator-bracket", Suite::Compat, Scope::Pair, "[⟨g,h⟩,h'] = (^g h h^-1)⋆h'"),
    st("mixed-ideals", Suite::Compat, Scope::Pair, "^G H, ⟨G,H⟩ and ^L[G,H] are ideals"),
    st("partner-generators", Suite::Compat, Scope::Pair, "generators of ^L[G,H] agree with partners"),
    st("partner-words", Suite::Compat, Scope::Pair, "short words agree with partner words"),
    st("partner-closure", Suite::Compat, Scope::Pair, "agreement survives inverses and commutators"),
    st("star-bracket", Suite::Compat, Scope::Pair, "x1⋆x2 = ⟨y1,x2⟩ on ^L[G,H]"),
    st("derived-star-bracket", Suite::Compat, Scope::Pair, "x1⋆x2 = ⟨y1,x2⟩ on derived terms"),
    st("lie-conjugation", Suite::Compat, Scope::Pair, "^L of partners agree"),
    st("mixed-lie-transfer-bounds", Suite::Compat, Scope::Pair, "class and length transfer between ^L[G,H] and ^L[H,G]"),
    st("lie-commutes-with-bracket", Suite::Compat, Scope::Pair, "^L[x,y] commutes with ⟨G,H⟩"),
    st("mixed-lie-acts-trivially", Suite::Compat, Scope::Pair, "^L[G,H] acts trivially on ⟨H,G⟩"),
    st("tensor-realization", Suite::Tensor, Scope::Tensor, "G⊗H realized; defining and star relations hold"),
    st("induced-actions", Suite::Tensor, Scope::Tensor, "G and H act on G⊗H by star automorphisms"),
    st("tensor-identity-unit-symbols", Suite::Tensor, Scope::Tensor, "1⊗h = 1 = g⊗1"),
    st("tensor-identity-inverse-symbols", Suite::Tensor, Scope::Tensor, "inverses of symbols"),
    st("tensor-identity-conjugation-by-symbol", Suite::Tensor, Scope::Tensor, "symbols conjugate by ^g h h^-1"),
    st("tensor-identity-left-commutator-symbol", Suite::Tensor, Scope::Tensor, "(g ^h g^-1)⊗h'"),
    st("tensor-identity-right-commutator-symbol", Suite::Tensor, Scope::Tensor, "g'⊗(^g h h^-1)"),
    st("tensor-identity-commutator-of-symbols", Suite::Tensor, Scope::Tensor, "commutators of symbols"),
    st("tensor-ideal", Suite::Tensor, Scope::Tensor, "I⊗J is an ideal for invariant ideals I, J"),
    st("lie-commutator-expansion", Suite::Tensor, Scope::Tensor, "^L[g⊗h, g'⊗h'] expands into three symbols"),
    st("quotient-nilpotency-bound", Suite::Tensor, Scope::Tensor, "cl(G⊗H / ^L[H,G]⊗⟨G,H⟩) ≤ cl(H)+1"),
    st("quotient-solvability-bound", Suite::Tensor, Scope::Tensor, "l(G⊗H / ^L[H,G]⊗⟨G,H⟩) ≤ l(H)+1"),
    st("self-pair-quotient", Suite::Tensor, Scope::Tensor, "G⊗G / ^L[G,G]⊗(G⋆G) inherits nilpotency and solvability"),
    st("square-quotient", Suite::Tensor, Scope::Tensor, "cl(G⊗G / ^L[G,G]⊗^L[G,G]) ≤ cl(G)"),
    st("seed-order-independence", Suite::Tensor, Scope::Tensor, "star tables agree across normal-form orders"),
];

pub fn statement(id: &str) -> Option<&'static Statement> {
    CATALOGUE.iter().find(|s| s.id == id)
}

/// An instance the harness can evaluate.
#[derive(Debug, Clone)]
pub enum Instance {
    Algebra(Arc<MultLieAlg>),
    Pair(CompatiblePair),
}

impl Instance {
    fn scope(&self) -> Scope {
        match self {
            Instance::Algebra(_) => Scope::Algebra,
            Instance::Pair(_) => Scope::Tensor,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Selection {
    /// `None` selects every suite.
    pub suite: Option<Suite>,
    pub statement: Option<String>,
    pub tensor: TensorOptions,
    pub budget: Option<Duration>,
}

impl Selection {
    /// Budget from [`BUDGET_ENV`], if set to a positive number of seconds.
    pub fn budget_from_env() -> Option<Duration> {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<f64>().ok())
            .filter(|&s| s > 0.0 && s.is_finite())
            .map(Duration::from_secs_f64)
    }

    fn selects(&self, s: &Statement) -> bool {
        match &self.statement {
            Some(id) => id == s.id,
            None => self.suite.map_or(true, |suite| suite == s.suite),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown statement id {0:?}")]
    UnknownStatement(String),
    #[error("statement {id} needs a compatible pair, but the instance is a single algebra")]
    SelectionMismatch { id: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail { message: String, witness: Vec<Elem> },
    Inapplicable { reason: String },
    Skipped { reason: String, resource: bool },
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail { message, .. } => write!(f, "FAIL: {message}"),
            Status::Inapplicable { reason } => write!(f, "inapplicable: {reason}"),
            Status::Skipped { reason, .. } => write!(f, "skipped: {reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub id: &'static str,
    pub suite: Suite,
    #[serde(flatten)]
    pub status: Status,
    pub tuples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub wall: Duration,
}

/// Aggregate verdict of a ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    AllPass,
    Violation,
    Resource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictLedger {
    pub entries: Vec<Entry>,
}

impl VerdictLedger {
    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries
            .iter()
            .filter(|e| matches!(e.status, Status::Fail { .. }))
    }

    pub fn outcome(&self) -> Outcome {
        if self.failures().next().is_some() {
            Outcome::Violation
        } else if self
            .entries
            .iter()
            .any(|e| matches!(e.status, Status::Skipped { resource: true, .. }))
        {
            Outcome::Resource
        } else {
            Outcome::AllPass
        }
    }

    pub fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.entries.iter().filter(|e| pred(&e.status)).count()
    }
}

struct Verdict {
    status: Status,
    tuples: u64,
    note: Option<String>,
}

impl Verdict {
    fn pass(tuples: u64) -> Self {
        Verdict {
            status: Status::Pass,
            tuples,
            note: None,
        }
    }

    fn fail(message: impl Into<String>, witness: Vec<Elem>, tuples: u64) -> Self {
        Verdict {
            status: Status::Fail {
                message: message.into(),
                witness,
            },
            tuples,
            note: None,
        }
    }

    fn inapplicable(reason: impl Into<String>) -> Self {
        Verdict {
            status: Status::Inapplicable {
                reason: reason.into(),
            },
            tuples: 0,
            note: None,
        }
    }

    fn skipped(reason: impl Into<String>, resource: bool) -> Self {
        Verdict {
            status: Status::Skipped {
                reason: reason.into(),
                resource,
            },
            tuples: 0,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn from_action(r: Result<u64, ActionError>) -> Self {
        match r {
            Ok(n) => Verdict::pass(n),
            Err(e) => Verdict::fail(e.to_string(), action_witness(&e), 0),
        }
    }

    fn from_tensor(r: Result<u64, TensorError>) -> Self {
        match r {
            Ok(n) => Verdict::pass(n),
            Err(e) => tensor_failure(e),
        }
    }
}

fn defect_witness(d: &IdealDefect) -> Vec<Elem> {
    match *d {
        IdealDefect::NotNormal { g, a } | IdealDefect::LeftStar { g, a } => vec![g, a],
        IdealDefect::RightStar { a, g } => vec![a, g],
    }
}

fn action_witness(e: &ActionError) -> Vec<Elem> {
    match e {
        ActionError::ActionViolation { witness, .. }
        | ActionError::CompatibilityViolation { witness, .. }
        | ActionError::IdentityViolation { witness, .. } => witness.clone(),
        ActionError::IdealityFailure { defect, .. } => defect_witness(defect),
        ActionError::NotAutomorphism { g } => vec![*g],
        ActionError::NotInIdeal(x) => vec![*x],
        ActionError::NotInTerm { elem, k } => vec![*elem, *k],
        _ => Vec::new(),
    }
}

fn tensor_failure(e: TensorError) -> Verdict {
    match e {
        TensorError::CosetCapExceeded { .. } | TensorError::DeadlineExceeded => {
            Verdict::skipped(e.to_string(), true)
        }
        TensorError::StarInconsistent { .. } => Verdict::skipped(e.to_string(), true),
        TensorError::Inapplicable { reason } => Verdict::inapplicable(reason),
        TensorError::IdentityViolation { ref witness, .. }
        | TensorError::InducedActionIllDefined { ref witness, .. }
        | TensorError::IdealityFailure { ref witness } => {
            let w = witness.clone();
            Verdict::fail(e.to_string(), w, 0)
        }
        TensorError::Action(ref a) => {
            let w = action_witness(a);
            Verdict::fail(e.to_string(), w, 0)
        }
        other => Verdict::fail(other.to_string(), Vec::new(), 0),
    }
}

fn algebra_statement(id: &str, m: &MultLieAlg) -> Verdict {
    let n = m.order() as u64;
    if id == "mla-axioms" {
        return match m.axiom_violation() {
            None => Verdict::pass(n + 4 * n * n * n),
            Some((axiom, w)) => Verdict::fail(format!("axiom {axiom}"), w, 0),
        };
    }
    let name = id.trim_start_matches("lie-identity-");
    let identity = LieIdentity::ALL
        .into_iter()
        .find(|i| i.name() == name)
        .expect("catalogue names match identities");
    let outcome = identity.check(m);
    match outcome.witness {
        None => Verdict::pass(outcome.tuples),
        Some(w) => Verdict::fail(format!("identity {}", identity.name()), w, outcome.tuples),
    }
}

fn combine(a: Verdict, b: Verdict) -> Verdict {
    match (&a.status, &b.status) {
        (Status::Pass, Status::Pass) => Verdict::pass(a.tuples + b.tuples),
        (Status::Pass, _) => b,
        _ => a,
    }
}

fn pair_statement(id: &str, pair: &CompatiblePair) -> Verdict {
    match id {
        "action-conditions" | "compatibility-conditions" => {
            let report = match CompatiblePair::report(pair.g_on_h(), pair.h_on_g()) {
                Ok(r) => r,
                Err(e) => return Verdict::fail(e.to_string(), Vec::new(), 0),
            };
            let wanted = |c: &Condition| match c {
                Condition::Action(_) => id == "action-conditions",
                Condition::Compatibility(_) => id == "compatibility-conditions",
            };
            let flags: Vec<_> = report.flags.iter().filter(|f| wanted(&f.condition)).collect();
            match flags.iter().find(|f| f.witness.is_some()) {
                Some(f) => Verdict::fail(
                    format!("{} ({})", f.condition, f.side),
                    f.witness.clone().unwrap_or_default(),
                    flags.len() as u64,
                ),
                None => Verdict::pass(flags.len() as u64),
            }
        }
        "bracket-conjugation" => Verdict::from_action(pair_checks::bracket_conjugation(pair)),
        "commutator-bracket" => Verdict::from_action(pair_checks::commutator_bracket(pair)),
        "mixed-ideals" => {
            let mut count = 0;
            let mut orders = Vec::new();
            for side in Side::BOTH {
                for kind in [MixedIdeal::ActionDerived, MixedIdeal::Bracket, MixedIdeal::MixedLie] {
                    match pair.mixed_ideal(kind, side) {
                        Ok(w) => {
                            count += 1;
                            orders.push(format!("{kind} ({side}): {}", w.ideal.order()));
                        }
                        Err(e) => return Verdict::fail(e.to_string(), action_witness(&e), count),
                    }
                }
            }
            Verdict::pass(count).with_note(orders.join(", "))
        }
        "partner-generators" => Verdict::from_action(pair_checks::partner_generators(pair)),
        "partner-words" => Verdict::from_action(pair_checks::partner_words(pair)),
        "partner-closure" => Verdict::from_action(pair_checks::partner_closure(pair)),
        "star-bracket" => Verdict::from_action(pair_checks::star_bracket(pair)),
        "derived-star-bracket" => Verdict::from_action(pair_checks::derived_star_bracket(pair)),
        "lie-conjugation" => Verdict::from_action(pair_checks::lie_conjugation(pair)),
        "mixed-lie-transfer-bounds" => match pair_checks::transfer_bounds(pair) {
            Ok(r) => Verdict::pass(4).with_note(format!(
                "orders {} and {}, classes {} and {}, lengths {} and {}",
                r.orders.0,
                r.orders.1,
                fmt_opt(r.classes.0),
                fmt_opt(r.classes.1),
                fmt_opt(r.lengths.0),
                fmt_opt(r.lengths.1)
            )),
            Err(e) => Verdict::fail(e.to_string(), Vec::new(), 4),
        },
        "lie-commutes-with-bracket" => {
            Verdict::from_action(pair_checks::lie_commutes_with_bracket(pair))
        }
        "mixed-lie-acts-trivially" => {
            Verdict::from_action(pair_checks::mixed_lie_acts_trivially(pair))
        }
        _ => unreachable!("not a pair statement: {id}"),
    }
}

/// Ideals generated by at most two elements, deduplicated.
fn small_ideals(m: &MultLieAlg) -> Vec<Subgroup> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let n = m.order();
    for a in 0..n {
        for b in a..n {
            let ideal = m.ideal_closure(&[a, b]);
            if seen.insert(ideal.carrier.elements().to_vec()) {
                out.push(ideal.carrier);
            }
        }
    }
    out
}

fn tensor_ideal_statement(t: &TensorAlgebra) -> Verdict {
    let pair = t.pair();
    let (gi, hj) = (small_ideals(pair.g()), small_ideals(pair.h()));
    let mut checked = 0u64;
    let mut excluded = 0u64;
    for i in &gi {
        for j in &hj {
            match tensor_ideal(t, i, j) {
                Ok(_) => checked += 1,
                Err(TensorError::PreconditionFailed { .. }) => excluded += 1,
                Err(e) => {
                    let mut v = tensor_failure(e);
                    v.note = Some(format!(
                        "I = {:?}, J = {:?}",
                        i.elements(),
                        j.elements()
                    ));
                    return v;
                }
            }
        }
    }
    Verdict::pass(checked).with_note(format!(
        "{checked} ideal pairs checked, {excluded} excluded by the invariance hypotheses"
    ))
}

fn lie_commutator_statement(t: &TensorAlgebra) -> Verdict {
    let report = match check_tensor_lie_commutator(t) {
        Ok(r) => r,
        Err(e) => return tensor_failure(e),
    };
    let reading = |o: PrefixOrder| match o {
        PrefixOrder::GOuter => "G-outer",
        PrefixOrder::HOuter => "H-outer",
    };
    let holding: Vec<_> = PrefixOrder::BOTH
        .into_iter()
        .filter(|&o| report.holds_for(o))
        .map(reading)
        .collect();
    if report.holds_for(PrefixOrder::GOuter) {
        Verdict::pass(report.quadruples).with_note(format!("holds for prefix readings: {}", holding.join(", ")))
    } else {
        let w = report
            .outcomes
            .iter()
            .find(|(o, _)| *o == PrefixOrder::GOuter)
            .and_then(|(_, w)| w.clone())
            .unwrap_or_default();
        Verdict::fail("expansion differs from ^L[g⊗h, g'⊗h']", w, report.quadruples).with_note(
            if holding.is_empty() {
                "no prefix reading holds".to_string()
            } else {
                format!("holds only for: {}", holding.join(", "))
            },
        )
    }
}

fn theorem_statements(t: &TensorAlgebra, id: &str) -> Verdict {
    let report = match main_theorem_check(t) {
        Ok(r) => r,
        Err(e) => return tensor_failure(e),
    };
    let ids: &[&str] = match id {
        "quotient-nilpotency-bound" => &["quotient-nilpotency"],
        "quotient-solvability-bound" => &["quotient-solvability"],
        "self-pair-quotient" => &["self-pair-nilpotency", "self-pair-solvability"],
        "square-quotient" => &["square-nilpotency", "square-solvability"],
        _ => unreachable!(),
    };
    let checks: Vec<_> = ids.iter().filter_map(|c| report.check(c)).collect();
    if checks.is_empty() {
        return Verdict::inapplicable("requires G = H with both brackets equal to the star");
    }
    let describe = |c: &tensor::ideal::BoundCheck| {
        format!(
            "{}: hypothesis {}, bound {}, measured {}",
            c.id,
            fmt_opt(c.hypothesis),
            fmt_opt(c.bound),
            fmt_opt(c.computed)
        )
    };
    let note = checks.iter().map(|c| describe(c)).collect::<Vec<_>>().join("; ");
    if let Some(c) = checks
        .iter()
        .find(|c| c.verdict == tensor::ideal::BoundVerdict::Violated)
    {
        return Verdict::fail(describe(c), Vec::new(), checks.len() as u64).with_note(note);
    }
    if checks
        .iter()
        .all(|c| c.verdict == tensor::ideal::BoundVerdict::Inapplicable)
    {
        return Verdict::inapplicable("the hypothesis algebra is not Lie nilpotent or solvable")
            .with_note(note);
    }
    let ideal = match (id, report.square_ideal_order) {
        ("square-quotient", Some(o)) => format!("ideal order {o}"),
        _ => format!("ideal order {}", report.ideal_order),
    };
    Verdict::pass(checks.len() as u64).with_note(format!("{ideal}; {note}"))
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn seed_order_statement(t: &TensorAlgebra, opts: &TensorOptions) -> Verdict {
    let alt_opts = TensorOptions {
        seed_order: match t.seed_order() {
            SeedOrder::Default => SeedOrder::Alt,
            SeedOrder::Alt => SeedOrder::Default,
        },
        ..opts.clone()
    };
    let alt = match tensor::tensor_product(t.pair(), &alt_opts) {
        Ok(a) => a,
        Err(e) => return tensor_failure(e),
    };
    let rev_opts = TensorOptions {
        relator_order: RelatorOrder::Reversed,
        ..opts.clone()
    };
    let rev = match tensor::induce_star(t.pair(), &rev_opts) {
        Ok(r) => r,
        Err(e) => return tensor_failure(e),
    };
    if rev.order() != t.order() {
        return Verdict::fail(
            format!("reversed relator order gives order {} instead of {}", rev.order(), t.order()),
            Vec::new(),
            0,
        );
    }
    let id = match identify(t, &alt) {
        Ok(i) => i,
        Err(e) => return tensor_failure(e),
    };
    let n = t.order() as u64;
    let tuples = 2 * n * n;
    if !id.bijective {
        return Verdict::fail("normal-form map is not a bijection", Vec::new(), tuples);
    }
    for (what, w) in [
        ("multiplication", &id.multiplication_defect),
        ("star", &id.star_defect),
        ("symbols", &id.symbol_defect),
    ] {
        if let Some(w) = w {
            return Verdict::fail(format!("identification breaks {what}"), w.clone(), tuples);
        }
    }
    Verdict::pass(tuples).with_note(format!("order {} under both seed orders and relator orders", t.order()))
}

enum TensorState {
    NotBuilt,
    Built(Box<TensorAlgebra>),
    Unavailable(Status),
}

/// Evaluates the selected statements; unselected ones are recorded as skipped.
pub fn run_suite(instance: &Instance, selection: &Selection) -> Result<VerdictLedger, HarnessError> {
    if let Some(id) = &selection.statement {
        let s = statement(id).ok_or_else(|| HarnessError::UnknownStatement(id.clone()))?;
        if s.scope > instance.scope() {
            return Err(HarnessError::SelectionMismatch { id: id.clone() });
        }
    }
    let mut tensor_state = TensorState::NotBuilt;
    let mut entries = Vec::with_capacity(CATALOGUE.len());
    for s in CATALOGUE {
        let start = Instant::now();
        let verdict = if !selection.selects(s) {
            Verdict::skipped("not selected", false)
        } else if s.scope > instance.scope() {
            Verdict::inapplicable("requires a compatible pair")
        } else {
            evaluate(s, instance, selection, &mut tensor_state)
        };
        entries.push(Entry {
            id: s.id,
            suite: s.suite,
            status: verdict.status,
            tuples: verdict.tuples,
            note: verdict.note,
            wall: start.elapsed(),
        });
    }
    Ok(VerdictLedger { entries })
}

fn evaluate(
    s: &Statement,
    instance: &Instance,
    selection: &Selection,
    tensor_state: &mut TensorState,
) -> Verdict {
    match (s.scope, instance) {
        (Scope::Algebra, Instance::Algebra(m)) => algebra_statement(s.id, m),
        (Scope::Algebra, Instance::Pair(p)) => {
            let g = algebra_statement(s.id, p.g());
            let h = algebra_statement(s.id, p.h());
            combine(g, h)
        }
        (Scope::Pair, Instance::Pair(p)) => pair_statement(s.id, p),
        (Scope::Tensor, Instance::Pair(p)) => {
            let opts = TensorOptions {
                deadline: selection.budget.map(|b| Instant::now() + b),
                ..selection.tensor.clone()
            };
            if matches!(tensor_state, TensorState::NotBuilt) {
                match tensor::tensor_product(p, &opts) {
                    Ok(t) => *tensor_state = TensorState::Built(Box::new(t)),
                    Err(e) => {
                        let v = tensor_failure(e);
                        *tensor_state = TensorState::Unavailable(v.status.clone());
                        return v;
                    }
                }
            }
            let t = match tensor_state {
                TensorState::Built(t) => t,
                TensorState::Unavailable(status) => {
                    let resource = matches!(status, Status::Skipped { resource: true, .. });
                    return Verdict::skipped(format!("tensor product unavailable ({status})"), resource);
                }
                TensorState::NotBuilt => unreachable!(),
            };
            tensor_statement(s.id, t, &opts)
        }
        _ => unreachable!("scope checked by caller"),
    }
}

fn tensor_statement(id: &str, t: &TensorAlgebra, opts: &TensorOptions) -> Verdict {
    if let Some(name) = id.strip_prefix("tensor-identity-") {
        let identity = TensorIdentity::ALL
            .into_iter()
            .find(|i| i.to_string() == name)
            .expect("catalogue names match identities");
        return Verdict::from_tensor(identity.check(t));
    }
    match id {
        "tensor-realization" => Verdict::from_tensor(t.verify_relations()).with_note(format!(
            "order {}, {} round(s), {} relator(s) added by completion",
            t.order(),
            t.rounds(),
            t.added_relators().len()
        )),
        "induced-actions" => Verdict::from_tensor(
            tensor::induce_actions(t.clone()).map(|_| (t.pair().g().order() + t.pair().h().order()) as u64),
        ),
        "tensor-ideal" => tensor_ideal_statement(t),
        "lie-commutator-expansion" => lie_commutator_statement(t),
        "quotient-nilpotency-bound"
        | "quotient-solvability-bound"
        | "self-pair-quotient"
        | "square-quotient" => theorem_statements(t, id),
        "seed-order-independence" => seed_order_statement(t, opts),
        _ => unreachable!("not a tensor statement: {id}"),
    }
}
