//! Actions of multiplicative Lie algebras on one another and compatible pairs.
//!
//! An [`MlaAction`] of `G` on `H` is an automorphism action `g ↦ φ(g)` plus a
//! bracket `⟨g,h⟩ ∈ H`. A [`CompatiblePair`] holds actions in both directions
//! that satisfy the compatibility conditions; it also resolves the mixed
//! symbols (`^y x` for `y ∈ H`) that a single action cannot evaluate.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::group::{Elem, Subgroup};
use crate::mla::{Ideal, IdealDefect, MlaError, MultLieAlg};
use crate::scan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionCondition {
    /// `φ(xx') = φ(x)∘φ(x')`
    Homomorphism,
    /// `⟨x,yy'⟩ = ⟨x,y⟩⟨^y x, ^y y'⟩`
    BracketSplitsActed,
    /// `⟨xx',y⟩ = ⟨^x x', ^x y⟩⟨x,y⟩`
    BracketSplitsActor,
    /// `⟨x⋆x', ^x' y⟩ ⟨^y x, ⟨x',y⟩⟩^-1 ⟨^x x', ⟨x,y⟩^-1⟩^-1 = 1`
    ActorStar,
    /// `⟨^y' x, y⋆y'⟩ ⟨⟨y,x⟩^-1, ^y y'⟩^-1 ⟨⟨y',x⟩, ^x y⟩^-1 = 1`
    ActedStar,
}

impl ActionCondition {
    /// Conditions that refer to the reverse action.
    pub const NEEDS_COMPANION: [ActionCondition; 3] = [
        ActionCondition::BracketSplitsActed,
        ActionCondition::ActorStar,
        ActionCondition::ActedStar,
    ];
}

impl fmt::Display for ActionCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ActionCondition::Homomorphism => "homomorphism",
            ActionCondition::BracketSplitsActed => "bracket-splits-acted",
            ActionCondition::BracketSplitsActor => "bracket-splits-actor",
            ActionCondition::ActorStar => "actor-star",
            ActionCondition::ActedStar => "acted-star",
        };
        f.write_str(s)
    }
}

/// Which direction of a pair a check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `G` acting on `H`; results live in `H`.
    GOnH,
    /// `H` acting on `G`; results live in `G`.
    HOnG,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::GOnH, Side::HOnG];

    pub fn flip(self) -> Side {
        match self {
            Side::GOnH => Side::HOnG,
            Side::HOnG => Side::GOnH,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::GOnH => "G on H",
            Side::HOnG => "H on G",
        })
    }
}

/// The three ideals a compatible pair induces in the acted algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MixedIdeal {
    /// `^G H`, generated by `^g h · h^-1`.
    ActionDerived,
    /// `⟨G,H⟩`, generated by `⟨g,h⟩`.
    Bracket,
    /// `^L[G,H]`, generated by `⟨g,h⟩^-1 (^g h · h^-1)`.
    MixedLie,
}

impl fmt::Display for MixedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MixedIdeal::ActionDerived => "action-derived",
            MixedIdeal::Bracket => "bracket",
            MixedIdeal::MixedLie => "mixed-lie",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action tables must be {actor}x{acted}")]
    Shape { actor: usize, acted: usize },
    #[error("table entry {value} is not an element of the acted algebra")]
    OutOfRange { value: usize },
    #[error("phi[{g}] is not a star-preserving automorphism")]
    NotAutomorphism { g: Elem },
    #[error("action condition {condition} fails at {witness:?}")]
    ActionViolation {
        condition: ActionCondition,
        witness: Vec<Elem>,
    },
    #[error("the two actions are not over the same pair of algebras")]
    Mismatch,
    #[error("compatibility condition {condition} ({side}) fails at {witness:?}")]
    CompatibilityViolation {
        condition: u8,
        side: Side,
        witness: Vec<Elem>,
    },
    #[error("generated {ideal} subgroup ({side}) is not an ideal: {defect}")]
    IdealityFailure {
        ideal: MixedIdeal,
        side: Side,
        defect: IdealDefect,
    },
    #[error("{check} ({side}) fails at {witness:?}")]
    IdentityViolation {
        check: &'static str,
        side: Side,
        witness: Vec<Elem>,
    },
    #[error("element {0} is not in the mixed Lie ideal")]
    NotInIdeal(Elem),
    #[error("a witness word is required")]
    WitnessRequired,
    #[error("element {elem} is not in derived term {k}")]
    NotInTerm { elem: Elem, k: usize },
    #[error("bound {which} fails: {values:?}")]
    BoundViolation {
        which: &'static str,
        values: (Option<usize>, Option<usize>),
    },
    #[error(transparent)]
    Mla(#[from] MlaError),
}

/// An action of `actor` on `acted`.
#[derive(Clone, PartialEq, Eq)]
pub struct MlaAction {
    actor: Arc<MultLieAlg>,
    acted: Arc<MultLieAlg>,
    phi: Vec<u32>,
    bracket: Vec<u32>,
}

impl fmt::Debug for MlaAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MlaAction")
            .field("actor", &self.actor.order())
            .field("acted", &self.acted.order())
            .finish()
    }
}

fn flatten(rows: &[Vec<Elem>], r: usize, c: usize) -> Result<Vec<u32>, ActionError> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(ActionError::Shape { actor: r, acted: c });
    }
    let mut out = Vec::with_capacity(r * c);
    for &v in rows.iter().flatten() {
        if v >= c {
            return Err(ActionError::OutOfRange { value: v });
        }
        out.push(v as u32);
    }
    Ok(out)
}

impl MlaAction {
    /// Validates the conditions that need only this action; the rest are
    /// checked by [`CompatiblePair::check`].
    pub fn validate(
        actor: Arc<MultLieAlg>,
        acted: Arc<MultLieAlg>,
        phi: &[Vec<Elem>],
        bracket: &[Vec<Elem>],
    ) -> Result<Self, ActionError> {
        let (m, n) = (actor.order(), acted.order());
        let phi = flatten(phi, m, n)?;
        let bracket = flatten(bracket, m, n)?;
        let a = MlaAction {
            actor,
            acted,
            phi,
            bracket,
        };
        if let Some(g) = (0..m).find(|&g| !a.is_star_automorphism(g)) {
            return Err(ActionError::NotAutomorphism { g });
        }
        for cond in [ActionCondition::Homomorphism, ActionCondition::BracketSplitsActor] {
            if let Some(witness) = a.standalone_violation(cond) {
                return Err(ActionError::ActionViolation {
                    condition: cond,
                    witness,
                });
            }
        }
        Ok(a)
    }

    /// Identity automorphisms and a constant bracket.
    pub fn trivial(actor: Arc<MultLieAlg>, acted: Arc<MultLieAlg>) -> Self {
        let (m, n) = (actor.order(), acted.order());
        let e = acted.group().identity() as u32;
        let phi = (0..m).flat_map(|_| 0..n as u32).collect();
        MlaAction {
            actor,
            acted,
            phi,
            bracket: vec![e; m * n],
        }
    }

    /// Self-action by conjugation with `⟨g,h⟩ = g⋆h`.
    pub fn conjugation_star(m: Arc<MultLieAlg>) -> Self {
        Self::conjugation_with(m, true)
    }

    /// Self-action by conjugation with a constant bracket.
    pub fn conjugation_trivial(m: Arc<MultLieAlg>) -> Self {
        Self::conjugation_with(m, false)
    }

    fn conjugation_with(m: Arc<MultLieAlg>, star: bool) -> Self {
        let n = m.order();
        let g = m.group();
        let mut phi = Vec::with_capacity(n * n);
        let mut bracket = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                phi.push(g.conjugate(x, y) as u32);
                bracket.push(if star { m.star(x, y) } else { g.identity() } as u32);
            }
        }
        MlaAction {
            actor: m.clone(),
            acted: m,
            phi,
            bracket,
        }
    }

    pub fn actor(&self) -> &Arc<MultLieAlg> {
        &self.actor
    }

    pub fn acted(&self) -> &Arc<MultLieAlg> {
        &self.acted
    }

    /// `^g h`
    #[inline]
    pub fn act(&self, g: Elem, h: Elem) -> Elem {
        self.phi[g * self.acted.order() + h] as usize
    }

    /// `⟨g,h⟩`
    #[inline]
    pub fn bracket(&self, g: Elem, h: Elem) -> Elem {
        self.bracket[g * self.acted.order() + h] as usize
    }

    pub fn phi_rows(&self) -> Vec<Vec<Elem>> {
        let n = self.acted.order();
        self.phi.chunks(n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn bracket_rows(&self) -> Vec<Vec<Elem>> {
        let n = self.acted.order();
        self.bracket
            .chunks(n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        let n = self.acted.order();
        let e = self.acted.group().identity() as u32;
        self.bracket.iter().all(|&b| b == e)
            && self.phi.chunks(n).all(|r| r.iter().enumerate().all(|(i, &v)| v as usize == i))
    }

    fn is_star_automorphism(&self, g: Elem) -> bool {
        let h = &self.acted;
        let n = h.order();
        let row = &self.phi[g * n..(g + 1) * n];
        let mut seen = vec![false; n];
        for &v in row {
            if std::mem::replace(&mut seen[v as usize], true) {
                return false;
            }
        }
        let f = |a: Elem| row[a] as usize;
        scan::first_failure(&[n, n], |t| {
            let (a, b) = (t[0], t[1]);
            f(h.group().mul(a, b)) == h.group().mul(f(a), f(b)) && f(h.star(a, b)) == h.star(f(a), f(b))
        })
        .is_none()
    }

    fn standalone_violation(&self, cond: ActionCondition) -> Option<Vec<Elem>> {
        let g = self.actor.group();
        let h = self.acted.group();
        let (m, n) = (g.order(), h.order());
        match cond {
            ActionCondition::Homomorphism => scan::first_failure(&[m, m, n], |t| {
                let (x, x2, y) = (t[0], t[1], t[2]);
                self.act(g.mul(x, x2), y) == self.act(x, self.act(x2, y))
            }),
            ActionCondition::BracketSplitsActor => scan::first_failure(&[m, m, n], |t| {
                let (x, x2, y) = (t[0], t[1], t[2]);
                let lhs = self.bracket(g.mul(x, x2), y);
                let rhs = h.mul(self.bracket(g.conjugate(x, x2), self.act(x, y)), self.bracket(x, y));
                lhs == rhs
            }),
            _ => unreachable!("condition needs the companion action"),
        }
    }

    /// Checks a condition that also reads the reverse action `back`.
    pub fn violation_with(&self, back: &MlaAction, cond: ActionCondition) -> Option<Vec<Elem>> {
        let g = self.actor.group();
        let h = self.acted.group();
        let (m, n) = (g.order(), h.order());
        match cond {
            ActionCondition::Homomorphism | ActionCondition::BracketSplitsActor => {
                self.standalone_violation(cond)
            }
            ActionCondition::BracketSplitsActed => scan::first_failure(&[m, n, n], |t| {
                let (x, y, y2) = (t[0], t[1], t[2]);
                let lhs = self.bracket(x, h.mul(y, y2));
                let rhs = h.mul(self.bracket(x, y), self.bracket(back.act(y, x), h.conjugate(y, y2)));
                lhs == rhs
            }),
            ActionCondition::ActorStar => scan::first_failure(&[m, m, n], |t| {
                let (x, x2, y) = (t[0], t[1], t[2]);
                let a = self.bracket(self.actor.star(x, x2), self.act(x2, y));
                let b = self.bracket(back.act(y, x), self.bracket(x2, y));
                let c = self.bracket(g.conjugate(x, x2), h.inv(self.bracket(x, y)));
                h.product([a, h.inv(b), h.inv(c)]) == h.identity()
            }),
            ActionCondition::ActedStar => scan::first_failure(&[m, n, n], |t| {
                let (x, y, y2) = (t[0], t[1], t[2]);
                let a = self.bracket(back.act(y2, x), self.acted.star(y, y2));
                let b = self.bracket(g.inv(back.bracket(y, x)), h.conjugate(y, y2));
                let c = self.bracket(back.bracket(y2, x), self.act(x, y));
                h.product([a, h.inv(b), h.inv(c)]) == h.identity()
            }),
        }
    }
}

/// A condition in a compatibility report: an action condition or a numbered compatibility condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Condition {
    Action(ActionCondition),
    Compatibility(u8),
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Action(c) => c.fmt(f),
            Condition::Compatibility(n) => write!(f, "compatibility-{n}"),
        }
    }
}

/// One checked condition in a compatibility report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionFlag {
    pub condition: Condition,
    pub side: Side,
    pub witness: Option<Vec<Elem>>,
}

/// Every action and compatibility condition, on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatibilityReport {
    pub flags: Vec<ConditionFlag>,
}

impl CompatibilityReport {
    pub fn all_hold(&self) -> bool {
        self.flags.iter().all(|f| f.witness.is_none())
    }

    pub fn first_failure(&self) -> Option<&ConditionFlag> {
        self.flags.iter().find(|f| f.witness.is_some())
    }

    /// The same flags with sides swapped (flags come in side pairs).
    pub fn mirrored(&self) -> Self {
        let mut flags = Vec::with_capacity(self.flags.len());
        for pair in self.flags.chunks(2) {
            for f in pair.iter().rev() {
                flags.push(ConditionFlag {
                    side: f.side.flip(),
                    ..f.clone()
                });
            }
        }
        CompatibilityReport { flags }
    }
}

pub const COMPATIBILITY_CONDITIONS: [u8; 5] = [1, 2, 3, 4, 5];

/// Compatibility condition `cond` read in the direction `fwd` (G on H) with companion `back`.
fn compat_violation(fwd: &MlaAction, back: &MlaAction, cond: u8) -> Option<Vec<Elem>> {
    let gm = &fwd.actor;
    let hm = &fwd.acted;
    let g = gm.group();
    let h = hm.group();
    let (m, n) = (g.order(), h.order());
    match cond {
        // ^(^g h) g' = g · ^h(g^-1 g' g) · g^-1
        1 => scan::first_failure(&[m, n, m], |t| {
            let (x, y, x2) = (t[0], t[1], t[2]);
            let lhs = back.act(fwd.act(x, y), x2);
            let inner = g.product([g.inv(x), x2, x]);
            let rhs = g.conjugate(x, back.act(y, inner));
            lhs == rhs
        }),
        // ⟨⟨h,g⟩^-1, h'⟩ = ⟨g,h⟩ ⋆ h'
        2 => scan::first_failure(&[m, n, n], |t| {
            let (x, y, y2) = (t[0], t[1], t[2]);
            fwd.bracket(g.inv(back.bracket(y, x)), y2) == hm.star(fwd.bracket(x, y), y2)
        }),
        // ⟨g,h⟩ · ^⟨h,g⟩ h' · ⟨g,h⟩^-1 = h'
        3 => scan::first_failure(&[m, n, n], |t| {
            let (x, y, y2) = (t[0], t[1], t[2]);
            h.conjugate(fwd.bracket(x, y), fwd.act(back.bracket(y, x), y2)) == y2
        }),
        // ^g ⟨h,g'⟩ = ⟨^g h, g g' g^-1⟩
        4 => scan::first_failure(&[m, n, m], |t| {
            let (x, y, x2) = (t[0], t[1], t[2]);
            g.conjugate(x, back.bracket(y, x2)) == back.bracket(fwd.act(x, y), g.conjugate(x, x2))
        }),
        // ⟨g · ^h g^-1, h'⟩ = (^g h · h^-1) ⋆ h'
        5 => scan::first_failure(&[m, n, n], |t| {
            let (x, y, y2) = (t[0], t[1], t[2]);
            let left = g.mul(x, back.act(y, g.inv(x)));
            let right = h.mul(fwd.act(x, y), h.inv(y));
            fwd.bracket(left, y2) == hm.star(right, y2)
        }),
        _ => panic!("there are five compatibility conditions"),
    }
}

/// Actions of `G` on `H` and of `H` on `G` satisfying every compatibility condition.
#[derive(Clone, PartialEq, Eq)]
pub struct CompatiblePair {
    g_on_h: MlaAction,
    h_on_g: MlaAction,
}

impl fmt::Debug for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CompatiblePair")
            .field("g", &self.g().order())
            .field("h", &self.h().order())
            .finish()
    }
}

impl CompatiblePair {
    /// Checks the remaining action conditions and all compatibility
    /// conditions; fails on the first violation.
    pub fn check(g_on_h: MlaAction, h_on_g: MlaAction) -> Result<Self, ActionError> {
        let report = Self::report(&g_on_h, &h_on_g)?;
        if let Some(f) = report.first_failure() {
            let witness = f.witness.clone().unwrap();
            return Err(match f.condition {
                Condition::Compatibility(condition) => ActionError::CompatibilityViolation {
                    condition,
                    side: f.side,
                    witness,
                },
                Condition::Action(condition) => ActionError::ActionViolation { condition, witness },
            });
        }
        Ok(CompatiblePair { g_on_h, h_on_g })
    }

    /// Evaluates every condition on both sides without stopping.
    /// Action conditions are labelled by name, compatibility conditions by number.
    pub fn report(g_on_h: &MlaAction, h_on_g: &MlaAction) -> Result<CompatibilityReport, ActionError> {
        if g_on_h.actor != h_on_g.acted || g_on_h.acted != h_on_g.actor {
            return Err(ActionError::Mismatch);
        }
        let mut flags = Vec::new();
        let all_action = [
            ActionCondition::Homomorphism,
            ActionCondition::BracketSplitsActed,
            ActionCondition::BracketSplitsActor,
            ActionCondition::ActorStar,
            ActionCondition::ActedStar,
        ];
        for cond in all_action {
            for side in Side::BOTH {
                let (fwd, back) = orient(g_on_h, h_on_g, side);
                flags.push(ConditionFlag {
                    condition: Condition::Action(cond),
                    side,
                    witness: fwd.violation_with(back, cond),
                });
            }
        }
        for cond in COMPATIBILITY_CONDITIONS {
            for side in Side::BOTH {
                let (fwd, back) = orient(g_on_h, h_on_g, side);
                flags.push(ConditionFlag {
                    condition: Condition::Compatibility(cond),
                    side,
                    witness: compat_violation(fwd, back, cond),
                });
            }
        }
        Ok(CompatibilityReport { flags })
    }

    pub fn g(&self) -> &Arc<MultLieAlg> {
        &self.g_on_h.actor
    }

    pub fn h(&self) -> &Arc<MultLieAlg> {
        &self.g_on_h.acted
    }

    pub fn g_on_h(&self) -> &MlaAction {
        &self.g_on_h
    }

    pub fn h_on_g(&self) -> &MlaAction {
        &self.h_on_g
    }

    /// The pair with the roles of `G` and `H` exchanged.
    pub fn swapped(&self) -> CompatiblePair {
        CompatiblePair {
            g_on_h: self.h_on_g.clone(),
            h_on_g: self.g_on_h.clone(),
        }
    }

    /// The pair oriented so that `side` becomes `G on H`.
    pub fn oriented(&self, side: Side) -> CompatiblePair {
        match side {
            Side::GOnH => self.clone(),
            Side::HOnG => self.swapped(),
        }
    }

    /// Whether both actors are the same algebra and both actions are
    /// conjugation with `⟨x,y⟩ = x⋆y`.
    pub fn is_star_self_pair(&self) -> bool {
        let m = self.g();
        **m == **self.h()
            && self.g_on_h == MlaAction::conjugation_star(m.clone())
            && self.h_on_g == MlaAction::conjugation_star(m.clone())
    }

    /// Generators of a mixed ideal on one side, as values in the acted algebra.
    pub fn ideal_generator(&self, kind: MixedIdeal, side: Side, g: Elem, h: Elem) -> Elem {
        let (fwd, _) = orient(&self.g_on_h, &self.h_on_g, side);
        let hg = fwd.acted.group();
        let act = hg.mul(fwd.act(g, h), hg.inv(h));
        match kind {
            MixedIdeal::ActionDerived => act,
            MixedIdeal::Bracket => fwd.bracket(g, h),
            MixedIdeal::MixedLie => hg.mul(hg.inv(fwd.bracket(g, h)), act),
        }
    }

    /// The subgroup generated by a mixed ideal's generators, with a BFS word
    /// for each element, verified to be an ideal.
    pub fn mixed_ideal(&self, kind: MixedIdeal, side: Side) -> Result<WitnessedIdeal, ActionError> {
        let p = self.oriented(side);
        let gm = p.g();
        let hm = p.h();
        let hg = hm.group();
        let mut letters = Vec::new();
        for g in gm.group().elements() {
            for h in hg.elements() {
                let v = p.ideal_generator(kind, Side::GOnH, g, h);
                letters.push((Letter { g, h, inverse: false }, v));
                letters.push((Letter { g, h, inverse: true }, hg.inv(v)));
            }
        }
        let mut words: Vec<Option<Vec<Letter>>> = vec![None; hg.order()];
        words[hg.identity()] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([hg.identity()]);
        let mut members = vec![hg.identity()];
        while let Some(a) = queue.pop_front() {
            for &(l, v) in &letters {
                let b = hg.mul(a, v);
                if words[b].is_none() {
                    let mut w = words[a].clone().unwrap();
                    w.push(l);
                    words[b] = Some(w);
                    members.push(b);
                    queue.push_back(b);
                }
            }
        }
        let carrier = Subgroup::from_elements(hg, &members).expect("generated set is a subgroup");
        let ideal = match hm.ideal(carrier) {
            Ok(i) => i,
            Err(MlaError::NotIdeal(defect)) => {
                return Err(ActionError::IdealityFailure {
                    ideal: kind,
                    side,
                    defect,
                })
            }
            Err(e) => return Err(e.into()),
        };
        Ok(WitnessedIdeal {
            kind,
            side,
            ideal,
            words,
        })
    }
}

fn orient<'a>(a: &'a MlaAction, b: &'a MlaAction, side: Side) -> (&'a MlaAction, &'a MlaAction) {
    match side {
        Side::GOnH => (a, b),
        Side::HOnG => (b, a),
    }
}

/// A generator `(g,h)` of a mixed ideal, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Letter {
    pub g: Elem,
    pub h: Elem,
    pub inverse: bool,
}

/// A mixed ideal together with a shortest generator word for each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessedIdeal {
    pub kind: MixedIdeal,
    pub side: Side,
    pub ideal: Ideal,
    words: Vec<Option<Vec<Letter>>>,
}

impl WitnessedIdeal {
    pub fn word(&self, a: Elem) -> Option<&[Letter]> {
        self.words.get(a).and_then(|w| w.as_deref())
    }

    pub fn elements(&self) -> &[Elem] {
        self.ideal.elements()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.ideal.contains(a)
    }
}
