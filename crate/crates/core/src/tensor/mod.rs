//! The non-abelian tensor product of a compatible pair, realized as a finite
//! multiplicative Lie algebra.

mod algebra;
pub mod checks;
pub mod enumerate;
mod identify;
pub mod ideal;
pub mod presentation;

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::action::ActionError;
use crate::group::{Elem, GroupError};
use crate::mla::MlaError;

pub use algebra::{induce_actions, induce_star, tensor_product, Actor, InducedActions, TensorAlgebra};
pub use checks::{
    check_tensor_identities, check_tensor_lie_commutator, LieCommutatorReport, PrefixOrder,
    TensorIdentity,
};
pub use enumerate::{coset_enumerate, EnumerationOptions, EnumerationResult, EnumerationStats};
pub use ideal::{main_theorem_check, tensor_ideal, BoundCheck, TheoremReport};
pub use identify::{identify, Identification};
pub use presentation::{build_tensor_presentation, simplify, Presentation, Simplified};

pub const DEFAULT_MAX_ROUNDS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("coset enumeration exceeded {max_cosets} cosets")]
    CosetCapExceeded { max_cosets: usize },
    #[error("time budget exhausted")]
    DeadlineExceeded,
    #[error("star still inconsistent after {rounds} rounds: {check} fails at {witness:?}")]
    StarInconsistent {
        rounds: usize,
        check: String,
        witness: Vec<Elem>,
    },
    #[error("induced action of {actor} is ill defined: {check} fails at {witness:?}")]
    InducedActionIllDefined {
        actor: Actor,
        check: &'static str,
        witness: Vec<Elem>,
    },
    #[error("induced actions have not been installed")]
    ActionsMissing,
    #[error("tensor identity {which} fails at {witness:?}")]
    IdentityViolation { which: String, witness: Vec<Elem> },
    #[error("precondition failed: {which}")]
    PreconditionFailed { which: String },
    #[error("generated subgroup is not an ideal: {witness:?}")]
    IdealityFailure { witness: Vec<Elem> },
    #[error("{which}: claimed at most {claimed}, computed {computed}")]
    BoundViolation {
        which: String,
        claimed: usize,
        computed: usize,
    },
    #[error("theorem not applicable: {reason}")]
    Inapplicable { reason: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Mla(#[from] MlaError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// Which normal-form order seeds the star extension.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedOrder {
    /// Least symbol represents each generator; generators in ascending order.
    #[default]
    Default,
    /// Greatest symbol represents each generator; generators in descending order.
    Alt,
}

/// Order in which relators are handed to the enumerator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelatorOrder {
    #[default]
    Given,
    Reversed,
}

#[derive(Debug, Clone)]
pub struct TensorOptions {
    pub max_cosets: usize,
    pub max_rounds: usize,
    pub seed_order: SeedOrder,
    pub relator_order: RelatorOrder,
    pub deadline: Option<Instant>,
}

impl Default for TensorOptions {
    fn default() -> Self {
        TensorOptions {
            max_cosets: enumerate::DEFAULT_MAX_COSETS,
            max_rounds: DEFAULT_MAX_ROUNDS,
            seed_order: SeedOrder::Default,
            relator_order: RelatorOrder::Given,
            deadline: None,
        }
    }
}
