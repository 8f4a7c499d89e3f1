//! Partners: for `x ∈ ^L[G,H]` an element `y ∈ ^L[H,G]` acting on `G` and `H`
//! exactly as `x` does.
//!
//! Partners are built structurally from witness expressions: a generator
//! `⟨g,h⟩^-1 (^g h h^-1)` goes to `⟨h,g⟩ (g ^h g^-1)`, products to products,
//! inverses to inverses and Lie commutators to Lie commutators.

use std::sync::Arc;

use serde::Serialize;

use crate::action::{ActionError, CompatiblePair, Letter, MixedIdeal, Side, WitnessedIdeal};
use crate::group::{Elem, Subgroup};

/// A generator `⟨h,g⟩ (g ^h g^-1)` of the partner side, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartnerLetter {
    pub h: Elem,
    pub g: Elem,
    pub inverse: bool,
}

/// `^L[g,h] = ⟨g,h⟩^-1 (^g h h^-1)` in `H`, inverted if requested.
pub fn letter_value(pair: &CompatiblePair, l: Letter) -> Elem {
    let v = pair.ideal_generator(MixedIdeal::MixedLie, Side::GOnH, l.g, l.h);
    if l.inverse {
        pair.h().group().inv(v)
    } else {
        v
    }
}

/// `⟨h,g⟩ (g ^h g^-1)` in `G`, inverted if requested.
pub fn partner_letter_value(pair: &CompatiblePair, l: PartnerLetter) -> Elem {
    let g = pair.g().group();
    let back = pair.h_on_g();
    let v = g.product([back.bracket(l.h, l.g), l.g, back.act(l.h, g.inv(l.g))]);
    if l.inverse {
        g.inv(v)
    } else {
        v
    }
}

/// Partner word of a generator word: letter by letter, order kept.
pub fn action_partner(word: &[Letter]) -> Vec<PartnerLetter> {
    word.iter()
        .map(|l| PartnerLetter {
            h: l.h,
            g: l.g,
            inverse: l.inverse,
        })
        .collect()
}

pub fn eval_word(pair: &CompatiblePair, word: &[Letter]) -> Elem {
    let h = pair.h().group();
    h.product(word.iter().map(|&l| letter_value(pair, l)))
}

pub fn eval_partner_word(pair: &CompatiblePair, word: &[PartnerLetter]) -> Elem {
    let g = pair.g().group();
    g.product(word.iter().map(|&l| partner_letter_value(pair, l)))
}

/// Partner word of an element of `^L[G,H]`, via its stored witness word.
pub fn partner_of(ideal: &WitnessedIdeal, x: Elem) -> Result<Vec<PartnerLetter>, ActionError> {
    debug_assert_eq!(ideal.kind, MixedIdeal::MixedLie);
    ideal.word(x).map(action_partner).ok_or(ActionError::NotInIdeal(x))
}

/// Whether `x ∈ H` and `y ∈ G` act identically on all of `G` and all of `H`.
pub fn agree(pair: &CompatiblePair, x: Elem, y: Elem) -> bool {
    let g = pair.g().group();
    let h = pair.h().group();
    g.elements()
        .all(|g2| pair.h_on_g().act(x, g2) == g.conjugate(y, g2))
        && h.elements().all(|h2| h.conjugate(x, h2) == pair.g_on_h().act(y, h2))
}

/// First element of `G` or `H` (tagged 0 or 1) where the actions of `x` and `y` differ.
pub fn disagreement(pair: &CompatiblePair, x: Elem, y: Elem) -> Option<[Elem; 2]> {
    let g = pair.g().group();
    let h = pair.h().group();
    if let Some(g2) = g.elements().find(|&g2| pair.h_on_g().act(x, g2) != g.conjugate(y, g2)) {
        return Some([0, g2]);
    }
    h.elements()
        .find(|&h2| h.conjugate(x, h2) != pair.g_on_h().act(y, h2))
        .map(|h2| [1, h2])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    One,
    Gen(Letter),
    Mul(Arc<Witness>, Arc<Witness>),
    Inv(Arc<Witness>),
    Lie(Arc<Witness>, Arc<Witness>),
}

/// An expression for an element of `^L[G,H]` with its value in `H` and the
/// value of its partner in `G`, both computed when the node is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub expr: Expr,
    pub value: Elem,
    pub partner: Elem,
}

impl Witness {
    pub fn one(pair: &CompatiblePair) -> Arc<Witness> {
        Arc::new(Witness {
            expr: Expr::One,
            value: pair.h().group().identity(),
            partner: pair.g().group().identity(),
        })
    }

    pub fn gen(pair: &CompatiblePair, l: Letter) -> Arc<Witness> {
        let p = PartnerLetter {
            h: l.h,
            g: l.g,
            inverse: l.inverse,
        };
        Arc::new(Witness {
            expr: Expr::Gen(l),
            value: letter_value(pair, l),
            partner: partner_letter_value(pair, p),
        })
    }

    pub fn mul(pair: &CompatiblePair, a: &Arc<Witness>, b: &Arc<Witness>) -> Arc<Witness> {
        Arc::new(Witness {
            expr: Expr::Mul(a.clone(), b.clone()),
            value: pair.h().group().mul(a.value, b.value),
            partner: pair.g().group().mul(a.partner, b.partner),
        })
    }

    pub fn inv(pair: &CompatiblePair, a: &Arc<Witness>) -> Arc<Witness> {
        Arc::new(Witness {
            expr: Expr::Inv(a.clone()),
            value: pair.h().group().inv(a.value),
            partner: pair.g().group().inv(a.partner),
        })
    }

    pub fn lie(pair: &CompatiblePair, a: &Arc<Witness>, b: &Arc<Witness>) -> Arc<Witness> {
        Arc::new(Witness {
            expr: Expr::Lie(a.clone(), b.clone()),
            value: pair.h().lie_bracket_defect(a.value, b.value),
            partner: pair.g().lie_bracket_defect(a.partner, b.partner),
        })
    }

    /// `s a s^-1`
    fn conj(pair: &CompatiblePair, s: &Arc<Witness>, a: &Arc<Witness>) -> Arc<Witness> {
        let sa = Self::mul(pair, s, a);
        Self::mul(pair, &sa, &Self::inv(pair, s))
    }

    /// `a ⋆ b = [a,b] · ^L[a,b]^-1`
    fn star(pair: &CompatiblePair, a: &Arc<Witness>, b: &Arc<Witness>) -> Arc<Witness> {
        let ab = Self::mul(pair, a, b);
        let comm = Self::mul(pair, &Self::mul(pair, &ab, &Self::inv(pair, a)), &Self::inv(pair, b));
        Self::mul(pair, &comm, &Self::inv(pair, &Self::lie(pair, a, b)))
    }

    pub fn from_word(pair: &CompatiblePair, word: &[Letter]) -> Arc<Witness> {
        word.iter().fold(Self::one(pair), |acc, &l| {
            if matches!(acc.expr, Expr::One) {
                Self::gen(pair, l)
            } else {
                Self::mul(pair, &acc, &Self::gen(pair, l))
            }
        })
    }

    /// Re-evaluates the tree from scratch (for cross-checking the cached values).
    pub fn recompute(&self, pair: &CompatiblePair) -> (Elem, Elem) {
        let g = pair.g();
        let h = pair.h();
        match &self.expr {
            Expr::One => (h.group().identity(), g.group().identity()),
            Expr::Gen(l) => {
                let w = Self::gen(pair, *l);
                (w.value, w.partner)
            }
            Expr::Mul(a, b) => {
                let (av, ap) = a.recompute(pair);
                let (bv, bp) = b.recompute(pair);
                (h.group().mul(av, bv), g.group().mul(ap, bp))
            }
            Expr::Inv(a) => {
                let (av, ap) = a.recompute(pair);
                (h.group().inv(av), g.group().inv(ap))
            }
            Expr::Lie(a, b) => {
                let (av, ap) = a.recompute(pair);
                let (bv, bp) = b.recompute(pair);
                (h.lie_bracket_defect(av, bv), g.lie_bracket_defect(ap, bp))
            }
        }
    }
}

/// One term of the derived series of `^L[G,H]`, with a witness per element.
#[derive(Debug, Clone)]
pub struct Term {
    pub carrier: Subgroup,
    witnesses: Vec<Option<Arc<Witness>>>,
}

impl Term {
    pub fn witness(&self, a: Elem) -> Option<&Arc<Witness>> {
        self.witnesses.get(a).and_then(|w| w.as_ref())
    }

    pub fn elements(&self) -> &[Elem] {
        self.carrier.elements()
    }
}

/// Derived series of `^L[G,H]` taken inside `^L[G,H]` itself.
#[derive(Debug, Clone)]
pub struct DerivedTerms {
    pub terms: Vec<Term>,
}

impl DerivedTerms {
    /// Term `k`; past the end the series is constant.
    pub fn term(&self, k: usize) -> &Term {
        &self.terms[k.min(self.terms.len() - 1)]
    }

    pub fn compute(pair: &CompatiblePair) -> Result<Self, ActionError> {
        let base = pair.mixed_ideal(MixedIdeal::MixedLie, Side::GOnH)?;
        let h = pair.h().group();
        let mut witnesses = vec![None; h.order()];
        for &a in base.elements() {
            witnesses[a] = Some(Witness::from_word(pair, base.word(a).unwrap()));
        }
        let t0 = Term {
            carrier: base.ideal.carrier.clone(),
            witnesses,
        };
        let mut terms = vec![t0];
        loop {
            let last = terms.last().unwrap();
            if last.carrier.is_trivial() {
                break;
            }
            let next = next_term(pair, &terms[0], last);
            if next.carrier == last.carrier {
                break;
            }
            terms.push(next);
        }
        Ok(DerivedTerms { terms })
    }
}

/// Ideal closure, inside `t0`, of all `^L[u,v]` with `u,v ∈ last`.
fn next_term(pair: &CompatiblePair, t0: &Term, last: &Term) -> Term {
    let hm = pair.h();
    let h = hm.group();
    let n = h.order();
    let mut witnesses: Vec<Option<Arc<Witness>>> = vec![None; n];
    let mut members = Vec::new();
    let add = |w: Arc<Witness>, witnesses: &mut Vec<Option<Arc<Witness>>>, members: &mut Vec<Elem>| {
        let v = w.value;
        if witnesses[v].is_none() {
            members.push(v);
            witnesses[v] = Some(w);
        }
    };
    add(Witness::one(pair), &mut witnesses, &mut members);
    for &u in last.elements() {
        for &v in last.elements() {
            let w = Witness::lie(pair, last.witness(u).unwrap(), last.witness(v).unwrap());
            add(w, &mut witnesses, &mut members);
        }
    }
    let mut done = 0;
    // worklist: each member is combined once with everything present
    while done < members.len() {
        let a = members[done];
        done += 1;
        let wa = witnesses[a].clone().unwrap();
        let mut i = 0;
        while i < members.len() {
            let b = members[i];
            let wb = witnesses[b].clone().unwrap();
            add(Witness::mul(pair, &wa, &wb), &mut witnesses, &mut members);
            add(Witness::mul(pair, &wb, &wa), &mut witnesses, &mut members);
            i += 1;
        }
        for &s in t0.elements() {
            let ws = t0.witness(s).unwrap();
            add(Witness::conj(pair, ws, &wa), &mut witnesses, &mut members);
            add(Witness::star(pair, ws, &wa), &mut witnesses, &mut members);
            add(Witness::star(pair, &wa, ws), &mut witnesses, &mut members);
        }
    }
    let carrier = Subgroup::from_elements(h, &members).expect("closure is a subgroup");
    Term { carrier, witnesses }
}

/// Derived terms of both mixed Lie ideals, ready for partner queries.
#[derive(Debug, Clone)]
pub struct PartnerContext {
    pub pair: CompatiblePair,
    pub terms: DerivedTerms,
    pub mirror: DerivedTerms,
}

impl PartnerContext {
    pub fn new(pair: &CompatiblePair) -> Result<Self, ActionError> {
        Ok(PartnerContext {
            pair: pair.clone(),
            terms: DerivedTerms::compute(pair)?,
            mirror: DerivedTerms::compute(&pair.swapped())?,
        })
    }

    /// Given `x1, x2` in term `k` of `^L[G,H]` and a witness for `x1`, returns
    /// `z` in term `k` of `^L[H,G]` with `x1 ⋆ x2 = ⟨z, x2⟩`.
    pub fn star_to_bracket(
        &self,
        x1: Elem,
        w1: Option<&Witness>,
        x2: Elem,
        k: usize,
    ) -> Result<Elem, ActionError> {
        let w1 = w1.ok_or(ActionError::WitnessRequired)?;
        let term = self.terms.term(k);
        for x in [x1, x2] {
            if !term.carrier.contains(x) {
                return Err(ActionError::NotInTerm { elem: x, k });
            }
        }
        if w1.value != x1 {
            return Err(ActionError::NotInTerm { elem: x1, k });
        }
        let z = w1.partner;
        let violation = |witness| ActionError::IdentityViolation {
            check: "star-to-bracket",
            side: Side::GOnH,
            witness,
        };
        if !self.mirror.term(k).carrier.contains(z) {
            return Err(violation(vec![x1, x2, z]));
        }
        let hm = self.pair.h();
        if hm.star(x1, x2) != self.pair.g_on_h().bracket(z, x2) {
            return Err(violation(vec![x1, x2, z]));
        }
        Ok(z)
    }
}
