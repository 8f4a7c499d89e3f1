//! Ideals `I⊗J` of `G⊗H` and the nilpotency/solvability bounds for quotients by them.

use serde::Serialize;

use super::{TensorAlgebra, TensorError};
use crate::action::{MixedIdeal, Side};
use crate::group::{subgroup_closure, Subgroup};
use crate::mla::{Absorption, IdealDefect, Ideal, MultLieAlg};

/// The subgroup of `G⊗H` generated by `a⊗b` for `a ∈ I`, `b ∈ J`, checked to be an ideal.
pub fn tensor_ideal(t: &TensorAlgebra, i: &Subgroup, j: &Subgroup) -> Result<Ideal, TensorError> {
    let pair = t.pair();
    let (gm, hm) = (pair.g(), pair.h());
    if i.parent_order() != gm.order() || j.parent_order() != hm.order() {
        return Err(TensorError::Input("subgroups must live in G and H".into()));
    }
    if !gm.is_ideal(i) {
        return Err(TensorError::PreconditionFailed {
            which: "I is an ideal of G".into(),
        });
    }
    if !hm.is_ideal(j) {
        return Err(TensorError::PreconditionFailed {
            which: "J is an ideal of H".into(),
        });
    }
    let h_moves_i = hm
        .group()
        .elements()
        .any(|h| i.elements().iter().any(|&a| !i.contains(pair.h_on_g().act(h, a))));
    if h_moves_i {
        return Err(TensorError::PreconditionFailed {
            which: "I is invariant under the action of H".into(),
        });
    }
    let g_moves_j = gm
        .group()
        .elements()
        .any(|g| j.elements().iter().any(|&b| !j.contains(pair.g_on_h().act(g, b))));
    if g_moves_j {
        return Err(TensorError::PreconditionFailed {
            which: "J is invariant under the action of G".into(),
        });
    }
    let mut seed: Vec<_> = i
        .elements()
        .iter()
        .flat_map(|&a| j.elements().iter().map(move |&b| t.tensor(a, b)))
        .collect();
    seed.sort_unstable();
    seed.dedup();
    let carrier = subgroup_closure(t.group(), &seed);
    match t.algebra().ideal_defect(&carrier, Absorption::TwoSided) {
        None => Ok(Ideal { carrier }),
        Some(d) => Err(TensorError::IdealityFailure {
            witness: match d {
                IdealDefect::NotNormal { g, a } | IdealDefect::LeftStar { g, a } => vec![g, a],
                IdealDefect::RightStar { a, g } => vec![a, g],
            },
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundVerdict {
    Holds,
    Violated,
    Inapplicable,
}

/// One bound: the hypothesis value `n`, the claimed bound, and what was measured.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub id: &'static str,
    pub hypothesis: Option<usize>,
    /// `None` when the claim is only finiteness.
    pub bound: Option<usize>,
    pub computed: Option<usize>,
    pub verdict: BoundVerdict,
}

impl BoundCheck {
    fn new(id: &'static str, hypothesis: Option<usize>, bound: Option<usize>, computed: Option<usize>) -> Self {
        let verdict = match (hypothesis, computed) {
            (None, _) => BoundVerdict::Inapplicable,
            (Some(_), None) => BoundVerdict::Violated,
            (Some(_), Some(c)) if bound.map_or(true, |b| c <= b) => BoundVerdict::Holds,
            _ => BoundVerdict::Violated,
        };
        BoundCheck {
            id,
            hypothesis,
            bound,
            computed,
            verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub tensor_order: usize,
    pub ideal_order: usize,
    pub quotient_order: usize,
    pub square_ideal_order: Option<usize>,
    pub checks: Vec<BoundCheck>,
}

impl TheoremReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.verdict == BoundVerdict::Violated)
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn check(&self, id: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// The first violated bound as an error.
    pub fn into_result(self) -> Result<Self, TensorError> {
        let err = self.violations().next().map(|c| TensorError::BoundViolation {
            which: c.id.to_string(),
            claimed: c.bound.unwrap_or(usize::MAX),
            computed: c.computed.unwrap_or(usize::MAX),
        });
        match err {
            Some(e) => Err(e),
            None => Ok(self),
        }
    }
}

fn quotient(t: &TensorAlgebra, i: &Ideal) -> Result<MultLieAlg, TensorError> {
    Ok(t.algebra().quotient_algebra(i)?.0)
}

/// Class and length bounds for `G⊗H / (^L[H,G] ⊗ ⟨G,H⟩)`, plus the tensor-square
/// statements when both actions are conjugation with bracket `⋆`.
pub fn main_theorem_check(t: &TensorAlgebra) -> Result<TheoremReport, TensorError> {
    let pair = t.pair();
    let lie_hg = pair.mixed_ideal(MixedIdeal::MixedLie, Side::HOnG)?;
    let bracket_gh = pair.mixed_ideal(MixedIdeal::Bracket, Side::GOnH)?;
    let i = Subgroup::from_elements(pair.g().group(), lie_hg.elements())
        .ok_or_else(|| TensorError::Internal("mixed ideal is not a subgroup".into()))?;
    let j = Subgroup::from_elements(pair.h().group(), bracket_gh.elements())
        .ok_or_else(|| TensorError::Internal("bracket ideal is not a subgroup".into()))?;
    let ideal = tensor_ideal(t, &i, &j)?;
    let q = quotient(t, &ideal)?;
    let (h_class, h_length) = (pair.h().nilpotency_class(), pair.h().solvability_length());
    let (q_class, q_length) = (q.nilpotency_class(), q.solvability_length());
    let mut checks = vec![
        BoundCheck::new("quotient-nilpotency", h_class, h_class.map(|n| n + 1), q_class),
        BoundCheck::new("quotient-solvability", h_length, h_length.map(|n| n + 1), q_length),
    ];
    let mut square_ideal_order = None;
    if pair.is_star_self_pair() {
        let (g_class, g_length) = (pair.g().nilpotency_class(), pair.g().solvability_length());
        checks.push(BoundCheck::new("self-pair-nilpotency", g_class, None, q_class));
        checks.push(BoundCheck::new("self-pair-solvability", g_length, None, q_length));
        let lie_gg = pair.mixed_ideal(MixedIdeal::MixedLie, Side::GOnH)?;
        let l = Subgroup::from_elements(pair.g().group(), lie_gg.elements())
            .ok_or_else(|| TensorError::Internal("mixed ideal is not a subgroup".into()))?;
        let square = tensor_ideal(t, &l, &l)?;
        square_ideal_order = Some(square.order());
        let sq = quotient(t, &square)?;
        checks.push(BoundCheck::new("square-nilpotency", g_class, g_class, sq.nilpotency_class()));
        checks.push(BoundCheck::new("square-solvability", g_length, None, sq.solvability_length()));
    }
    Ok(TheoremReport {
        tensor_order: t.order(),
        ideal_order: ideal.order(),
        quotient_order: q.order(),
        square_ideal_order,
        checks,
    })
}
