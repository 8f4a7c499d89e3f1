//! JSON instance documents: algebras, compatible pairs and tensor jobs, with
//! every table written in element names.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use mlacalc::action::{ActionError, CompatiblePair, MlaAction};
use mlacalc::group::{Elem, FiniteGroup};
use mlacalc::mla::{MlaError, MultLieAlg};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StarShorthand {
    Trivial,
    Improper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StarSpec {
    Shorthand(StarShorthand),
    Table(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
    pub star: StarSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionShorthand {
    /// Identity automorphisms, bracket constantly `1`.
    Trivial,
    /// Conjugation, bracket constantly `1`.
    Conjugation,
    /// Conjugation, bracket `⋆`.
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BracketShorthand {
    Trivial,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BracketSpec {
    Shorthand(BracketShorthand),
    Table(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAction {
    pub phi: Vec<Vec<String>>,
    pub bracket: BracketSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionDoc {
    Shorthand(ActionShorthand),
    Explicit(ExplicitAction),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub g: AlgebraDoc,
    /// Omitted when `H` is the same algebra as `G`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<AlgebraDoc>,
    pub g_on_h: ActionDoc,
    pub h_on_g: ActionDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJobDoc {
    pub pair: PairDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_cosets: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_rounds: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InstanceDocument {
    Algebra(AlgebraDoc),
    Pair(PairDoc),
    Tensor(TensorJobDoc),
}

impl InstanceDocument {
    /// Dispatches on the top-level keys: `pair` marks a tensor job, `g` a pair.
    pub fn from_value(v: Value) -> Result<Self, LoadError> {
        let obj = v
            .as_object()
            .ok_or_else(|| LoadError::Input("document must be a JSON object".into()))?;
        let parsed = if obj.contains_key("pair") {
            serde_json::from_value(v).map(InstanceDocument::Tensor)
        } else if obj.contains_key("g") {
            serde_json::from_value(v).map(InstanceDocument::Pair)
        } else {
            serde_json::from_value(v).map(InstanceDocument::Algebra)
        };
        parsed.map_err(|e| LoadError::Input(e.to_string()))
    }

    pub fn from_str(s: &str) -> Result<Self, LoadError> {
        let v: Value = serde_json::from_str(s).map_err(|e| LoadError::Input(format!("invalid JSON: {e}")))?;
        Self::from_value(v)
    }

    pub fn from_path(path: &Path) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LoadError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_str(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// Why a document could not be turned into a validated object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    /// Malformed document: bad JSON, unknown names, wrong shapes, not a group.
    #[error("input error: {0}")]
    Input(String),
    /// Well-formed tables that violate an axiom or condition.
    #[error("{what} fails at ({})", witness.join(", "))]
    Violation { what: String, witness: Vec<String> },
}

impl LoadError {
    fn input(e: impl ToString) -> Self {
        LoadError::Input(e.to_string())
    }
}

fn resolve_table(
    what: &str,
    rows: &[Vec<String>],
    row_count: usize,
    target: &HashMap<&str, Elem>,
) -> Result<Vec<Vec<Elem>>, LoadError> {
    if rows.len() != row_count {
        return Err(LoadError::Input(format!(
            "{what} has {} rows, expected {row_count}",
            rows.len()
        )));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() != target.len() {
                return Err(LoadError::Input(format!(
                    "{what} row {i} has {} entries, expected {}",
                    row.len(),
                    target.len()
                )));
            }
            row.iter()
                .map(|name| {
                    target.get(name.as_str()).copied().ok_or_else(|| {
                        LoadError::Input(format!("{what} row {i} names unknown element {name:?}"))
                    })
                })
                .collect()
        })
        .collect()
}

fn index(labels: &[String]) -> HashMap<&str, Elem> {
    labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}

fn names(labels: &[String], w: &[Elem]) -> Vec<String> {
    w.iter()
        .map(|&x| labels.get(x).cloned().unwrap_or_else(|| format!("#{x}")))
        .collect()
}

/// A group with a star table that has not been checked against the axioms.
#[derive(Debug, Clone)]
pub struct RawAlgebra {
    pub group: FiniteGroup,
    pub star: Vec<Vec<Elem>>,
}

impl RawAlgebra {
    pub fn validate(self) -> Result<MultLieAlg, LoadError> {
        let labels = self.group.labels().to_vec();
        MultLieAlg::check_axioms(self.group, &self.star).map_err(|e| match e {
            MlaError::AxiomViolation { axiom, witness } => LoadError::Violation {
                what: format!("axiom {axiom}"),
                witness: names(&labels, &witness),
            },
            other => LoadError::input(other),
        })
    }
}

impl AlgebraDoc {
    pub fn raw(&self) -> Result<RawAlgebra, LoadError> {
        let idx = index(&self.elements);
        if idx.len() != self.elements.len() {
            let mut seen = std::collections::HashSet::new();
            let dup = self.elements.iter().find(|e| !seen.insert(e.as_str())).unwrap();
            return Err(LoadError::Input(format!("duplicate element name {dup:?}")));
        }
        let n = self.elements.len();
        let table = resolve_table("table", &self.table, n, &idx)?;
        let group = FiniteGroup::from_table(self.elements.clone(), table).map_err(LoadError::input)?;
        let star = match &self.star {
            StarSpec::Shorthand(StarShorthand::Trivial) => MultLieAlg::trivial(group.clone()).star_rows(),
            StarSpec::Shorthand(StarShorthand::Improper) => MultLieAlg::improper(group.clone()).star_rows(),
            StarSpec::Table(rows) => resolve_table("star", rows, n, &idx)?,
        };
        Ok(RawAlgebra { group, star })
    }

    pub fn load(&self) -> Result<MultLieAlg, LoadError> {
        self.raw()?.validate()
    }

    /// Explicit tables, with the star abbreviated when it is trivial or improper.
    pub fn from_algebra(m: &MultLieAlg) -> Self {
        let g = m.group();
        let labels = g.labels();
        let rows = |t: Vec<Vec<Elem>>| -> Vec<Vec<String>> { t.iter().map(|r| names(labels, r)).collect() };
        let star = if m.is_trivial_star() {
            StarSpec::Shorthand(StarShorthand::Trivial)
        } else if m.is_improper_star() {
            StarSpec::Shorthand(StarShorthand::Improper)
        } else {
            StarSpec::Table(rows(m.star_rows()))
        };
        AlgebraDoc {
            elements: labels.to_vec(),
            table: rows(g.table_rows()),
            star,
        }
    }
}

/// The two actions of a pair document, individually validated but not yet
/// checked for compatibility.
#[derive(Debug, Clone)]
pub struct RawPair {
    pub g_on_h: MlaAction,
    pub h_on_g: MlaAction,
}

impl RawPair {
    pub fn validate(self) -> Result<CompatiblePair, LoadError> {
        CompatiblePair::check(self.g_on_h, self.h_on_g).map_err(action_error)
    }
}

/// Pair witnesses mix `G` and `H` coordinates; they are printed as positions `#i`.
fn action_error(e: ActionError) -> LoadError {
    match e {
        ActionError::Shape { .. } | ActionError::OutOfRange { .. } | ActionError::Mismatch => {
            LoadError::input(e)
        }
        ActionError::NotAutomorphism { g } => LoadError::Violation {
            what: "star-preserving automorphism".into(),
            witness: vec![format!("#{g}")],
        },
        ActionError::ActionViolation { condition, witness } => LoadError::Violation {
            what: format!("action condition {condition}"),
            witness: witness.iter().map(|x| format!("#{x}")).collect(),
        },
        ActionError::CompatibilityViolation {
            condition,
            side,
            witness,
        } => LoadError::Violation {
            what: format!("compatibility condition {condition} ({side})"),
            witness: witness.iter().map(|x| format!("#{x}")).collect(),
        },
        other => LoadError::Violation {
            what: other.to_string(),
            witness: Vec::new(),
        },
    }
}

fn action(
    doc: &ActionDoc,
    actor: &Arc<MultLieAlg>,
    acted: &Arc<MultLieAlg>,
    role: &str,
) -> Result<MlaAction, LoadError> {
    let same = Arc::ptr_eq(actor, acted) || actor == acted;
    let need_same = |what: &str| {
        if same {
            Ok(())
        } else {
            Err(LoadError::Input(format!("{role}: {what:?} needs G and H to be the same algebra")))
        }
    };
    match doc {
        ActionDoc::Shorthand(ActionShorthand::Trivial) => Ok(MlaAction::trivial(actor.clone(), acted.clone())),
        ActionDoc::Shorthand(ActionShorthand::Conjugation) => {
            need_same("conjugation")?;
            Ok(MlaAction::conjugation_trivial(actor.clone()))
        }
        ActionDoc::Shorthand(ActionShorthand::Star) => {
            need_same("star")?;
            Ok(MlaAction::conjugation_star(actor.clone()))
        }
        ActionDoc::Explicit(ex) => {
            let idx = index(acted.group().labels());
            let m = actor.order();
            let phi = resolve_table(&format!("{role}.phi"), &ex.phi, m, &idx)?;
            let bracket = match &ex.bracket {
                BracketSpec::Shorthand(BracketShorthand::Trivial) => {
                    vec![vec![acted.group().identity(); acted.order()]; m]
                }
                BracketSpec::Shorthand(BracketShorthand::Star) => {
                    need_same("star")?;
                    actor.star_rows()
                }
                BracketSpec::Table(rows) => resolve_table(&format!("{role}.bracket"), rows, m, &idx)?,
            };
            MlaAction::validate(actor.clone(), acted.clone(), &phi, &bracket)
                .map_err(action_error)
        }
    }
}

impl PairDoc {
    pub fn raw(&self) -> Result<RawPair, LoadError> {
        let g = Arc::new(self.g.load()?);
        let h = match &self.h {
            None => g.clone(),
            Some(h) => Arc::new(h.load()?),
        };
        Ok(RawPair {
            g_on_h: action(&self.g_on_h, &g, &h, "g_on_h")?,
            h_on_g: action(&self.h_on_g, &h, &g, "h_on_g")?,
        })
    }

    pub fn load(&self) -> Result<CompatiblePair, LoadError> {
        self.raw()?.validate()
    }

    pub fn from_pair(p: &CompatiblePair) -> Self {
        let same = Arc::ptr_eq(p.g(), p.h()) || p.g() == p.h();
        PairDoc {
            g: AlgebraDoc::from_algebra(p.g()),
            h: (!same).then(|| AlgebraDoc::from_algebra(p.h())),
            g_on_h: ActionDoc::from_action(p.g_on_h(), same),
            h_on_g: ActionDoc::from_action(p.h_on_g(), same),
        }
    }
}

impl ActionDoc {
    pub fn from_action(a: &MlaAction, same: bool) -> Self {
        let (actor, acted) = (a.actor(), a.acted());
        if *a == MlaAction::trivial(actor.clone(), acted.clone()) {
            return ActionDoc::Shorthand(ActionShorthand::Trivial);
        }
        if same {
            if *a == MlaAction::conjugation_trivial(actor.clone()) {
                return ActionDoc::Shorthand(ActionShorthand::Conjugation);
            }
            if *a == MlaAction::conjugation_star(actor.clone()) {
                return ActionDoc::Shorthand(ActionShorthand::Star);
            }
        }
        let labels = acted.group().labels();
        let rows = |t: Vec<Vec<Elem>>| -> Vec<Vec<String>> { t.iter().map(|r| names(labels, r)).collect() };
        let bracket = a.bracket_rows();
        let e = acted.group().identity();
        ActionDoc::Explicit(ExplicitAction {
            phi: rows(a.phi_rows()),
            bracket: if bracket.iter().flatten().all(|&b| b == e) {
                BracketSpec::Shorthand(BracketShorthand::Trivial)
            } else {
                BracketSpec::Table(rows(bracket))
            },
        })
    }
}

/// Element names of `m` for a witness in `m`.
pub fn witness_names(m: &MultLieAlg, w: &[Elem]) -> Vec<String> {
    names(m.group().labels(), w)
}
