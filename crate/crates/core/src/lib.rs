//! Finite multiplicative Lie algebras: validation, Lie series, compatible
//! actions, non-abelian tensor products and an exhaustive checker for their
//! structural identities.

pub mod action;
pub mod corpus;
pub mod group;
pub mod mla;
pub mod pair_checks;
pub mod partner;
pub mod scan;
pub mod harness;
pub mod tensor;

pub use action::{CompatiblePair, MlaAction, Side};
pub use group::{Elem, FiniteGroup, Subgroup};
pub use mla::{Ideal, MultLieAlg};
