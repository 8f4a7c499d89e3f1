//! Exhaustive checks of the identities every compatible pair satisfies.
//!
//! Each check runs on both orientations of the pair and returns the number of
//! tuples examined, or the first failing tuple as
//! [`ActionError::IdentityViolation`].

use serde::Serialize;

use crate::action::{ActionError, CompatiblePair, MixedIdeal, Side};
use crate::group::Elem;
use crate::mla::MultLieAlg;
use crate::partner::{self, PartnerContext};
use crate::scan;

fn both_sides(
    pair: &CompatiblePair,
    check: &'static str,
    f: impl Fn(&CompatiblePair) -> Result<(u64, Option<Vec<Elem>>), ActionError>,
) -> Result<u64, ActionError> {
    let mut total = 0;
    for side in Side::BOTH {
        let (n, witness) = f(&pair.oriented(side))?;
        total += n;
        if let Some(witness) = witness {
            return Err(ActionError::IdentityViolation { check, side, witness });
        }
    }
    Ok(total)
}

/// `⟨x,y⟩⟨g,h⟩⟨x,y⟩^-1 = ⟨^[x,y] g, ^[x,y] h⟩` with `[x,y] = ^x y · y^-1`.
pub fn bracket_conjugation(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "bracket-conjugation", |p| {
        let (a, b) = (p.g_on_h(), p.h_on_g());
        let h = p.h().group();
        let dims = [p.g().order(), h.order(), p.g().order(), h.order()];
        let w = scan::first_failure(&dims, |t| {
            let (x, y, g, hh) = (t[0], t[1], t[2], t[3]);
            let c = h.mul(a.act(x, y), h.inv(y));
            h.conjugate(a.bracket(x, y), a.bracket(g, hh)) == a.bracket(b.act(c, g), h.conjugate(c, hh))
        });
        Ok((scan::volume(&dims), w))
    })
}

/// `[⟨g,h⟩, h'] = ⟨g ^h g^-1, h'⟩ = (^g h h^-1) ⋆ h'`.
pub fn commutator_bracket(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "commutator-bracket", |p| {
        let (a, b) = (p.g_on_h(), p.h_on_g());
        let g = p.g().group();
        let h = p.h().group();
        let dims = [g.order(), h.order(), h.order()];
        let w = scan::first_failure(&dims, |t| {
            let (x, y, y2) = (t[0], t[1], t[2]);
            let left = h.commutator(a.bracket(x, y), y2);
            let middle = a.bracket(g.mul(x, b.act(y, g.inv(x))), y2);
            let right = p.h().star(h.mul(a.act(x, y), h.inv(y)), y2);
            left == middle && middle == right
        });
        Ok((scan::volume(&dims), w))
    })
}

/// Each generator of `^L[G,H]` agrees with its partner.
pub fn partner_generators(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "partner-generator", |p| {
        let dims = [p.g().order(), p.h().order()];
        let w = scan::first_failure(&dims, |t| {
            let l = crate::action::Letter { g: t[0], h: t[1], inverse: false };
            let x = partner::letter_value(p, l);
            let y = partner::partner_letter_value(
                p,
                partner::PartnerLetter { h: t[1], g: t[0], inverse: false },
            );
            partner::agree(p, x, y)
        });
        Ok((scan::volume(&dims), w))
    })
}

/// Distinct (value, partner value) pairs of signed generators.
fn letter_pairs(p: &CompatiblePair) -> Vec<(Elem, Elem)> {
    let mut out = Vec::new();
    for g in p.g().group().elements() {
        for h in p.h().group().elements() {
            for inverse in [false, true] {
                let x = partner::letter_value(p, crate::action::Letter { g, h, inverse });
                let y = partner::partner_letter_value(p, partner::PartnerLetter { h, g, inverse });
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Words of length at most two over the generators agree with their partner words.
pub fn partner_words(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "partner-word", |p| {
        let letters = letter_pairs(p);
        let g = p.g().group();
        let h = p.h().group();
        let mut words = vec![(h.identity(), g.identity())];
        words.extend(letters.iter().copied());
        for &(x1, y1) in &letters {
            for &(x2, y2) in &letters {
                words.push((h.mul(x1, x2), g.mul(y1, y2)));
            }
        }
        let bad = scan::first_failing_index(words.len(), |i| partner::agree(p, words[i].0, words[i].1));
        Ok((words.len() as u64, bad.map(|i| vec![words[i].0, words[i].1])))
    })
}

/// Agreeing pairs drawn from the two mixed Lie ideals are closed under
/// inverses and commutators.
pub fn partner_closure(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "partner-closure", |p| {
        let xs = p.mixed_ideal(MixedIdeal::MixedLie, Side::GOnH)?;
        let ys = p.mixed_ideal(MixedIdeal::MixedLie, Side::HOnG)?;
        let g = p.g().group();
        let h = p.h().group();
        let agreeing: Vec<(Elem, Elem)> = xs
            .elements()
            .iter()
            .flat_map(|&x| ys.elements().iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| partner::agree(p, x, y))
            .collect();
        let k = agreeing.len();
        let w = scan::first_failure(&[k, k], |t| {
            let (x1, y1) = agreeing[t[0]];
            let (x2, y2) = agreeing[t[1]];
            partner::agree(p, h.inv(x1), g.inv(y1))
                && partner::agree(p, h.commutator(x1, x2), g.commutator(y1, y2))
        });
        let w = w.map(|t| {
            let (x1, y1) = agreeing[t[0]];
            let (x2, y2) = agreeing[t[1]];
            vec![x1, y1, x2, y2]
        });
        Ok(((k * k) as u64, w))
    })
}

fn star_bracket_at(ctx: &PartnerContext, k: usize) -> Result<(u64, Option<Vec<Elem>>), ActionError> {
    let term = ctx.terms.term(k);
    let xs = term.elements();
    let dims = [xs.len(), xs.len()];
    let mut hit = None;
    let w = scan::first_failure(&dims, |t| {
        let w1 = term.witness(xs[t[0]]).map(|w| &**w);
        ctx.star_to_bracket(xs[t[0]], w1, xs[t[1]], k).is_ok()
    });
    if let Some(t) = w {
        let w1 = term.witness(xs[t[0]]).map(|w| &**w);
        match ctx.star_to_bracket(xs[t[0]], w1, xs[t[1]], k) {
            Err(ActionError::IdentityViolation { witness, .. }) => hit = Some(witness),
            Err(e) => return Err(e),
            Ok(_) => unreachable!(),
        }
    }
    Ok((scan::volume(&dims), hit))
}

/// `x1 ⋆ x2 = ⟨y1, x2⟩` for `x1, x2 ∈ ^L[G,H]`, `y1` the partner of `x1`.
pub fn star_bracket(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "star-bracket", |p| star_bracket_at(&PartnerContext::new(p)?, 0))
}

/// The same as [`star_bracket`] on every further derived term of `^L[G,H]`.
pub fn derived_star_bracket(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "derived-star-bracket", |p| {
        let ctx = PartnerContext::new(p)?;
        let depth = ctx.terms.terms.len().max(ctx.mirror.terms.len());
        let mut total = 0;
        for k in 1..depth.max(2) {
            let (n, w) = star_bracket_at(&ctx, k)?;
            total += n;
            if let Some(mut w) = w {
                w.push(k);
                return Ok((total, Some(w)));
            }
        }
        Ok((total, None))
    })
}

/// `^L[x1,x2]` agrees with `^L[y1,y2]` whenever `y1, y2` are partners of `x1, x2`.
pub fn lie_conjugation(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "lie-conjugation", |p| {
        let ctx = PartnerContext::new(p)?;
        let term = ctx.terms.term(0);
        let xs = term.elements();
        let dims = [xs.len(), xs.len()];
        let w = scan::first_failure(&dims, |t| {
            let a = term.witness(xs[t[0]]).unwrap();
            let b = term.witness(xs[t[1]]).unwrap();
            let x = p.h().lie_bracket_defect(a.value, b.value);
            let y = p.g().lie_bracket_defect(a.partner, b.partner);
            partner::agree(p, x, y)
        });
        Ok((scan::volume(&dims), w.map(|t| vec![xs[t[0]], xs[t[1]]])))
    })
}

/// Every generator `^L[x,y]` of `H` commutes with every element of `⟨G,H⟩`.
pub fn lie_commutes_with_bracket(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "lie-commutes-with-bracket", |p| {
        let bracket = p.mixed_ideal(MixedIdeal::Bracket, Side::GOnH)?;
        let h = p.h().group();
        let bs = bracket.elements();
        let dims = [p.g().order(), h.order(), bs.len()];
        let w = scan::first_failure(&dims, |t| {
            let l = p.ideal_generator(MixedIdeal::MixedLie, Side::GOnH, t[0], t[1]);
            h.commutator(l, bs[t[2]]) == h.identity()
        });
        Ok((scan::volume(&dims), w.map(|t| vec![t[0], t[1], bs[t[2]]])))
    })
}

/// `^L[G,H]` acts trivially on `⟨H,G⟩`.
pub fn mixed_lie_acts_trivially(pair: &CompatiblePair) -> Result<u64, ActionError> {
    both_sides(pair, "mixed-lie-acts-trivially", |p| {
        let lie = p.mixed_ideal(MixedIdeal::MixedLie, Side::GOnH)?;
        let bracket = p.mixed_ideal(MixedIdeal::Bracket, Side::HOnG)?;
        let (xs, bs) = (lie.elements(), bracket.elements());
        let dims = [xs.len(), bs.len()];
        let w = scan::first_failure(&dims, |t| p.h_on_g().act(xs[t[0]], bs[t[1]]) == bs[t[1]]);
        Ok((scan::volume(&dims), w.map(|t| vec![xs[t[0]], bs[t[1]]])))
    })
}

/// Nilpotency class and solvability length of both mixed Lie ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub orders: (usize, usize),
    pub classes: (Option<usize>, Option<usize>),
    pub lengths: (Option<usize>, Option<usize>),
}

fn mixed_lie_algebra(pair: &CompatiblePair, side: Side) -> Result<MultLieAlg, ActionError> {
    let ideal = pair.mixed_ideal(MixedIdeal::MixedLie, side)?;
    let owner = match side {
        Side::GOnH => pair.h(),
        Side::HOnG => pair.g(),
    };
    Ok(owner.sub_algebra(&ideal.ideal).0)
}

/// Whether `b` obeys the bound `b ≤ a + 1` given that `a` exists.
fn within(a: Option<usize>, b: Option<usize>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(a), Some(b)) => b <= a + 1,
        (Some(_), None) => false,
    }
}

/// `cl(^L[H,G]) ≤ cl(^L[G,H]) + 1` and `l(^L[H,G]) ≤ l(^L[G,H]) + 1` when
/// the right-hand sides exist, in both directions.
pub fn transfer_bounds(pair: &CompatiblePair) -> Result<TransferReport, ActionError> {
    let a = mixed_lie_algebra(pair, Side::GOnH)?;
    let b = mixed_lie_algebra(pair, Side::HOnG)?;
    let report = TransferReport {
        orders: (a.order(), b.order()),
        classes: (a.nilpotency_class(), b.nilpotency_class()),
        lengths: (a.solvability_length(), b.solvability_length()),
    };
    let (ca, cb) = report.classes;
    let (la, lb) = report.lengths;
    let checks = [
        ("nilpotency", ca, cb),
        ("nilpotency-reverse", cb, ca),
        ("solvability", la, lb),
        ("solvability-reverse", lb, la),
    ];
    for (which, x, y) in checks {
        if !within(x, y) {
            return Err(ActionError::BoundViolation { which, values: (x, y) });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_semantics() {
        assert!(within(None, None));
        assert!(within(Some(1), Some(2)));
        assert!(!within(Some(1), Some(3)));
        assert!(!within(Some(0), None));
    }
}
