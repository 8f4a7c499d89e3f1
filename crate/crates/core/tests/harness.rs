//! The statement harness: catalogue shape, selection, determinism and budgets.

use std::collections::HashSet;
use std::sync::Arc;
use std::time::Duration;

use mlacalc::corpus;
use mlacalc::harness::{
    run_suite, statement, HarnessError, Instance, Outcome, Scope, Selection, Status, Suite, CATALOGUE,
};
use mlacalc::mla::MultLieAlg;

fn s3_improper() -> Instance {
    Instance::Algebra(Arc::new(MultLieAlg::improper(corpus::symmetric3())))
}

fn q8_self_pair() -> Instance {
    Instance::Pair(corpus::self_pair(Arc::new(MultLieAlg::trivial(corpus::quaternion8()))))
}

#[test]
fn catalogue_ids_are_unique_and_resolvable() {
    let ids: HashSet<_> = CATALOGUE.iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), CATALOGUE.len());
    for s in CATALOGUE {
        assert_eq!(statement(s.id), Some(s));
        assert!(!s.summary.is_empty());
    }
    for suite in [Suite::Axioms, Suite::Identities, Suite::Compat, Suite::Tensor] {
        assert!(CATALOGUE.iter().any(|s| s.suite == suite));
    }
    assert_eq!(Suite::parse("all"), Some(None));
    assert_eq!(Suite::parse("tensor"), Some(Some(Suite::Tensor)));
    assert_eq!(Suite::parse("everything"), None);
}

#[test]
fn ledger_lists_every_statement_once_in_catalogue_order() {
    let ledger = run_suite(&q8_self_pair(), &Selection::default()).unwrap();
    let ids: Vec<_> = ledger.entries.iter().map(|e| e.id).collect();
    let expected: Vec<_> = CATALOGUE.iter().map(|s| s.id).collect();
    assert_eq!(ids, expected);
    assert_eq!(ledger.outcome(), Outcome::AllPass);
    assert_eq!(ledger.failures().count(), 0);
}

#[test]
fn ledgers_are_deterministic() {
    for instance in [s3_improper(), q8_self_pair()] {
        let a = run_suite(&instance, &Selection::default()).unwrap();
        let b = run_suite(&instance, &Selection::default()).unwrap();
        let strip = |l: &mlacalc::harness::VerdictLedger| {
            l.entries.iter().map(|e| (e.id, e.status.clone(), e.tuples, e.note.clone())).collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}

#[test]
fn algebra_instances_pass_identities_and_mark_pair_statements_inapplicable() {
    let ledger = run_suite(&s3_improper(), &Selection::default()).unwrap();
    for e in &ledger.entries {
        let s = statement(e.id).unwrap();
        match s.scope {
            Scope::Algebra => assert_eq!(e.status, Status::Pass, "{}", e.id),
            _ => assert!(matches!(e.status, Status::Inapplicable { .. }), "{}", e.id),
        }
        if s.suite == Suite::Identities {
            assert_eq!(e.tuples % 6, 0, "{}", e.id);
            assert!(e.tuples >= 6, "{}", e.id);
        }
    }
    assert_eq!(ledger.outcome(), Outcome::AllPass);
}

#[test]
fn suite_selection_skips_the_rest() {
    let sel = Selection {
        suite: Some(Suite::Identities),
        ..Selection::default()
    };
    let ledger = run_suite(&q8_self_pair(), &sel).unwrap();
    for e in &ledger.entries {
        if e.suite == Suite::Identities {
            assert_eq!(e.status, Status::Pass, "{}", e.id);
        } else {
            assert!(matches!(e.status, Status::Skipped { resource: false, .. }), "{}", e.id);
        }
    }
}

#[test]
fn explicit_statement_beyond_the_instance_is_rejected() {
    for id in ["square-quotient", "tensor-realization", "mixed-ideals"] {
        let sel = Selection {
            statement: Some(id.into()),
            ..Selection::default()
        };
        assert_eq!(
            run_suite(&s3_improper(), &sel),
            Err(HarnessError::SelectionMismatch { id: id.into() })
        );
    }
    let sel = Selection {
        statement: Some("no-such-statement".into()),
        ..Selection::default()
    };
    assert!(matches!(run_suite(&s3_improper(), &sel), Err(HarnessError::UnknownStatement(_))));
}

#[test]
fn exhausted_budget_is_a_resource_outcome() {
    let m = Arc::new(MultLieAlg::trivial(corpus::group_by_name("Z2xZ2xZ2").unwrap()));
    let instance = Instance::Pair(corpus::self_pair(m));
    let sel = Selection {
        suite: Some(Suite::Tensor),
        budget: Some(Duration::from_nanos(1)),
        ..Selection::default()
    };
    let ledger = run_suite(&instance, &sel).unwrap();
    assert_eq!(ledger.outcome(), Outcome::Resource);
    assert_eq!(ledger.failures().count(), 0);
    let e = ledger.entry("tensor-realization").unwrap();
    assert!(matches!(e.status, Status::Skipped { resource: true, .. }), "{:?}", e.status);
}

#[test]
fn coset_cap_is_a_resource_outcome() {
    let mut sel = Selection {
        suite: Some(Suite::Tensor),
        ..Selection::default()
    };
    sel.tensor.max_cosets = 8;
    let ledger = run_suite(&q8_self_pair(), &sel).unwrap();
    assert_eq!(ledger.outcome(), Outcome::Resource);
}

#[test]
fn every_corpus_pair_passes_every_statement() {
    for (name, p) in corpus::small_pairs() {
        let ledger = run_suite(&Instance::Pair(p), &Selection::default()).unwrap();
        let failures: Vec<_> = ledger.failures().map(|e| (e.id, e.status.to_string())).collect();
        assert!(failures.is_empty(), "{name}: {failures:?}");
        assert_eq!(ledger.outcome(), Outcome::AllPass, "{name}");
    }
}
