//! Compatible pairs: the condition checker against an oracle written here,
//! pair-level identities, mixed ideals and the transfer bounds.

use std::sync::Arc;

use mlacalc::action::{
    ActionCondition, ActionError, CompatiblePair, Condition, MixedIdeal, MlaAction, Side,
};
use mlacalc::corpus;
use mlacalc::group::Elem;
use mlacalc::mla::MultLieAlg;
use mlacalc::pair_checks;
use proptest::prelude::*;

fn conj(g: &mlacalc::FiniteGroup, x: Elem, y: Elem) -> Elem {
    g.mul(g.mul(x, y), g.inv(x))
}

/// Compatibility condition `c` for `fwd: G on H` with companion `back: H on G`.
fn oracle_compat(fwd: &MlaAction, back: &MlaAction, c: u8) -> bool {
    let (gm, hm) = (fwd.actor(), fwd.acted());
    let (g, h) = (gm.group(), hm.group());
    let mut ok = true;
    for x in g.elements() {
        for y in h.elements() {
            for x2 in g.elements() {
                ok &= match c {
                    1 => back.act(fwd.act(x, y), x2) == conj(g, x, back.act(y, g.mul(g.mul(g.inv(x), x2), x))),
                    4 => conj(g, x, back.bracket(y, x2)) == back.bracket(fwd.act(x, y), conj(g, x, x2)),
                    _ => true,
                };
            }
            for y2 in h.elements() {
                let br = fwd.bracket(x, y);
                ok &= match c {
                    2 => fwd.bracket(g.inv(back.bracket(y, x)), y2) == hm.star(br, y2),
                    3 => conj(h, br, fwd.act(back.bracket(y, x), y2)) == y2,
                    5 => {
                        let left = g.mul(x, back.act(y, g.inv(x)));
                        let right = h.mul(fwd.act(x, y), h.inv(y));
                        fwd.bracket(left, y2) == hm.star(right, y2)
                    }
                    _ => true,
                };
            }
        }
    }
    ok
}

fn oriented<'a>(a: &'a MlaAction, b: &'a MlaAction, side: Side) -> (&'a MlaAction, &'a MlaAction) {
    match side {
        Side::GOnH => (a, b),
        Side::HOnG => (b, a),
    }
}

fn named_pairs() -> Vec<(&'static str, CompatiblePair)> {
    let s3 = Arc::new(MultLieAlg::improper(corpus::symmetric3()));
    let q8 = Arc::new(MultLieAlg::trivial(corpus::quaternion8()));
    let z2 = Arc::new(MultLieAlg::trivial(corpus::cyclic(2)));
    let s3t = Arc::new(MultLieAlg::trivial(corpus::symmetric3()));
    vec![
        ("Z2 trivial pair", corpus::trivial_pair(z2.clone(), z2)),
        ("S3 trivial pair", corpus::trivial_pair(s3t.clone(), s3t)),
        ("S3 improper self-pair", corpus::self_pair(s3)),
        ("Q8 trivial self-pair", corpus::self_pair(q8)),
    ]
}

#[test]
fn named_pairs_pass_every_condition_and_identity() {
    for (name, p) in named_pairs() {
        let report = CompatiblePair::report(p.g_on_h(), p.h_on_g()).unwrap();
        assert!(report.all_hold(), "{name}");
        assert_eq!(report.flags.len(), 20);
        let checks: [(&str, fn(&CompatiblePair) -> Result<u64, ActionError>); 10] = [
            ("bracket-conjugation", pair_checks::bracket_conjugation),
            ("commutator-bracket", pair_checks::commutator_bracket),
            ("partner-generators", pair_checks::partner_generators),
            ("partner-words", pair_checks::partner_words),
            ("partner-closure", pair_checks::partner_closure),
            ("star-bracket", pair_checks::star_bracket),
            ("derived-star-bracket", pair_checks::derived_star_bracket),
            ("lie-conjugation", pair_checks::lie_conjugation),
            ("lie-commutes-with-bracket", pair_checks::lie_commutes_with_bracket),
            ("mixed-lie-acts-trivially", pair_checks::mixed_lie_acts_trivially),
        ];
        for (what, check) in checks {
            let n = check(&p).unwrap_or_else(|e| panic!("{name}: {what}: {e}"));
            assert!(n > 0, "{name}: {what}");
        }
    }
}

#[test]
fn checker_agrees_with_oracle_on_every_corpus_pair() {
    for (name, p) in corpus::small_pairs() {
        let report = CompatiblePair::report(p.g_on_h(), p.h_on_g()).unwrap();
        for f in &report.flags {
            if let Condition::Compatibility(c) = f.condition {
                let (fwd, back) = oriented(p.g_on_h(), p.h_on_g(), f.side);
                assert_eq!(f.witness.is_none(), oracle_compat(fwd, back, c), "{name}: {c} {}", f.side);
            }
        }
        assert!(report.all_hold(), "{name}");
    }
}

fn is_ideal(m: &MultLieAlg, members: &[Elem]) -> bool {
    let g = m.group();
    let inside = |x: Elem| members.contains(&x);
    members.contains(&g.identity())
        && members.iter().all(|&a| members.iter().all(|&b| inside(g.mul(a, b))))
        && members.iter().all(|&a| {
            g.elements()
                .all(|x| inside(conj(g, x, a)) && inside(m.star(x, a)) && inside(m.star(a, x)))
        })
}

#[test]
fn mixed_ideals_are_ideals_containing_their_generators() {
    for (name, p) in corpus::small_pairs() {
        for side in Side::BOTH {
            let target = match side {
                Side::GOnH => p.h(),
                Side::HOnG => p.g(),
            };
            let (m, n) = match side {
                Side::GOnH => (p.g().order(), p.h().order()),
                Side::HOnG => (p.h().order(), p.g().order()),
            };
            for kind in [MixedIdeal::ActionDerived, MixedIdeal::Bracket, MixedIdeal::MixedLie] {
                let w = p.mixed_ideal(kind, side).unwrap_or_else(|e| panic!("{name}: {e}"));
                assert!(is_ideal(target, w.elements()), "{name}: {kind} {side}");
                for x in 0..m {
                    for y in 0..n {
                        assert!(w.contains(p.ideal_generator(kind, side, x, y)), "{name}: {kind} {side}");
                    }
                }
            }
        }
    }
}

#[test]
fn transfer_bounds_hold_on_every_corpus_pair() {
    for (name, p) in corpus::small_pairs() {
        let r = pair_checks::transfer_bounds(&p).unwrap_or_else(|e| panic!("{name}: {e}"));
        for (a, b) in [(r.classes.0, r.classes.1), (r.classes.1, r.classes.0), (r.lengths.0, r.lengths.1), (r.lengths.1, r.lengths.0)] {
            if let Some(a) = a {
                assert!(matches!(b, Some(b) if b <= a + 1), "{name}: {r:?}");
            }
        }
    }
}

#[test]
fn perturbed_bracket_on_s3_is_rejected_with_a_replayable_witness() {
    let s3 = Arc::new(MultLieAlg::trivial(corpus::symmetric3()));
    let action = MlaAction::conjugation_trivial(s3.clone());
    let mut bracket = action.bracket_rows();
    bracket[1][3] = 1;
    let err = MlaAction::validate(s3.clone(), s3.clone(), &action.phi_rows(), &bracket).unwrap_err();
    let ActionError::ActionViolation { condition, witness } = err else { panic!("{err:?}") };
    assert_eq!(condition, ActionCondition::BracketSplitsActor);
    // replay the condition at the witness directly
    let g = s3.group();
    let (x, x2, y) = (witness[0], witness[1], witness[2]);
    let phi = action.phi_rows();
    let lhs = bracket[g.mul(x, x2)][y];
    let rhs = g.mul(bracket[conj(g, x, x2)][phi[x][y]], bracket[x][y]);
    assert_ne!(lhs, rhs);
}

#[test]
fn swapping_a_pair_mirrors_its_report() {
    let p = corpus::inversion_pair();
    let swapped = p.swapped();
    let report = CompatiblePair::report(swapped.g_on_h(), swapped.h_on_g()).unwrap();
    assert_eq!(report, CompatiblePair::report(p.g_on_h(), p.h_on_g()).unwrap().mirrored());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Random single-entry changes to the bracket of a conjugation self-pair:
    /// whenever both actions validate, the report agrees with the oracle.
    #[test]
    fn report_matches_oracle_after_bracket_perturbation(
        which in 0usize..4,
        x in 0usize..8,
        y in 0usize..8,
        v in 0usize..8,
    ) {
        let groups = [corpus::symmetric3(), corpus::quaternion8(), corpus::dihedral(4), corpus::cyclic(4)];
        let g = groups[which].clone();
        let n = g.order();
        let m = Arc::new(MultLieAlg::improper(g));
        let base = MlaAction::conjugation_star(m.clone());
        let mut bracket = base.bracket_rows();
        bracket[x % n][y % n] = v % n;
        let Ok(fwd) = MlaAction::validate(m.clone(), m.clone(), &base.phi_rows(), &bracket) else {
            return Ok(());
        };
        let report = CompatiblePair::report(&fwd, &base).unwrap();
        for f in &report.flags {
            if let Condition::Compatibility(c) = f.condition {
                let (a, b) = oriented(&fwd, &base, f.side);
                prop_assert_eq!(f.witness.is_none(), oracle_compat(a, b, c));
            }
        }
        if report.all_hold() {
            prop_assert!(CompatiblePair::check(fwd, base).is_ok());
        } else {
            prop_assert!(CompatiblePair::check(fwd, base).is_err());
        }
    }
}
