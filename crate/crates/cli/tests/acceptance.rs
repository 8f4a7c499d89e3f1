//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness; a failing criterion makes the process exit non-zero.

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use mlacalc::action::CompatiblePair;
use mlacalc::corpus;
use mlacalc::harness::{self, Instance, Selection, Status, Suite};
use mlacalc::mla::{LieIdentity, MultLieAlg, SeriesVerdict};
use mlacalc::pair_checks;
use mlacalc::tensor::presentation::{letter, Word};
use mlacalc::tensor::{
    check_tensor_identities, check_tensor_lie_commutator, coset_enumerate, identify, main_theorem_check,
    tensor_ideal, tensor_product, EnumerationOptions, SeedOrder, TensorOptions,
};
use mlacalc::{Elem, MlaAction, Subgroup};
use mlacalc_cli::document::{InstanceDocument, LoadError};
use mlacalc_cli::fixtures::corpus_documents;

const AXIOM_BUDGET: Duration = Duration::from_secs(5);
const IDENTITY_BUDGET: Duration = Duration::from_secs(30);
const COMPAT_BUDGET: Duration = Duration::from_secs(60);
const TENSOR_BUDGET: Duration = Duration::from_secs(600);
const Q8_MAX_COSETS: usize = 200_000;
const Q8_MAX_ROUNDS: usize = 8;

type Outcome = Result<String, String>;

fn timed(budget: Option<Duration>, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    let wall = start.elapsed();
    match (out, budget) {
        (Ok(_), Some(b)) if wall >= b => (Err(format!("took {:.2?}, limit {b:?}", wall)), wall),
        (out, _) => (out, wall),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn axiom_suite() -> Outcome {
    let mut algebras = 0;
    for (name, g) in corpus::small_groups() {
        let n = g.order();
        let trivial = vec![vec![g.identity(); n]; n];
        let improper: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| g.commutator(x, y)).collect()).collect();
        for star in [trivial, improper] {
            MultLieAlg::check_axioms(g.clone(), &star).map_err(|e| format!("{name}: {e}"))?;
            algebras += 1;
        }
    }
    let mut perturbed = 0;
    for (rel, doc) in corpus_documents() {
        if !rel.starts_with("perturbed/") {
            continue;
        }
        let err = match doc {
            InstanceDocument::Algebra(a) => a.load().err(),
            InstanceDocument::Pair(p) => p.load().err(),
            InstanceDocument::Tensor(t) => t.pair.load().err(),
        };
        match err {
            Some(LoadError::Violation { witness, .. }) if !witness.is_empty() => perturbed += 1,
            other => return Err(format!("{rel}: expected a witnessed violation, got {other:?}")),
        }
    }
    Ok(format!("{algebras} stars validate, {perturbed} perturbations caught with witnesses"))
}

fn identity_suite() -> Outcome {
    let mut tuples = 0u64;
    let algebras = corpus::small_algebras();
    for (name, m) in &algebras {
        for id in LieIdentity::ALL {
            let out = id.check(m);
            ensure(out.witness.is_none(), || format!("{name}: {} fails at {:?}", id.name(), out.witness))?;
            tuples += out.tuples;
        }
    }
    Ok(format!("{} identities on {} algebras, {tuples} tuples", LieIdentity::ALL.len(), algebras.len()))
}

fn series_truths() -> Outcome {
    let s3 = MultLieAlg::trivial(corpus::symmetric3());
    ensure(s3.nilpotency_class().is_none(), || "S3 trivial is Lie nilpotent".into())?;
    ensure(matches!(s3.lower_central_series().verdict, SeriesVerdict::Stabilized(_)), || {
        "S3 lower central series does not stabilize".into()
    })?;
    ensure(s3.solvability_length() == Some(2), || format!("S3 length {:?}", s3.solvability_length()))?;
    let q8 = MultLieAlg::trivial(corpus::quaternion8());
    ensure(q8.nilpotency_class() == Some(2), || format!("Q8 class {:?}", q8.nilpotency_class()))?;
    ensure(q8.solvability_length() == Some(2), || format!("Q8 length {:?}", q8.solvability_length()))?;
    for (name, g) in corpus::small_groups() {
        let class = MultLieAlg::improper(g).nilpotency_class();
        ensure(matches!(class, Some(c) if c <= 1), || format!("{name} improper class {class:?}"))?;
    }
    Ok("S3: not nilpotent, length 2; Q8: class 2, length 2; improper: class <= 1".into())
}

fn compat_pairs() -> Vec<(&'static str, CompatiblePair)> {
    let z2 = Arc::new(MultLieAlg::trivial(corpus::cyclic(2)));
    let s3t = Arc::new(MultLieAlg::trivial(corpus::symmetric3()));
    vec![
        ("Z2 trivial pair", corpus::trivial_pair(z2.clone(), z2)),
        ("S3 trivial pair", corpus::trivial_pair(s3t.clone(), s3t)),
        ("S3 improper self-pair", corpus::self_pair(Arc::new(MultLieAlg::improper(corpus::symmetric3())))),
        ("Q8 trivial self-pair", corpus::self_pair(Arc::new(MultLieAlg::trivial(corpus::quaternion8())))),
    ]
}

fn compat_suite() -> Outcome {
    let sel = Selection {
        suite: Some(Suite::Compat),
        ..Selection::default()
    };
    let mut passed = 0;
    for (name, p) in compat_pairs() {
        let report = CompatiblePair::report(p.g_on_h(), p.h_on_g()).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.all_hold(), || format!("{name}: {:?}", report.first_failure()))?;
        let ledger = harness::run_suite(&Instance::Pair(p), &sel).map_err(|e| e.to_string())?;
        for e in ledger.entries.iter().filter(|e| e.suite == Suite::Compat) {
            ensure(e.status == Status::Pass, || format!("{name}: {} is {}", e.id, e.status))?;
            passed += 1;
        }
    }
    Ok(format!("{passed} pair statements pass on 4 pairs"))
}

fn within(a: Option<usize>, b: Option<usize>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(a), Some(b)) => b <= a + 1,
        (Some(_), None) => false,
    }
}

fn transfer_bounds() -> Outcome {
    let pairs = corpus::small_pairs();
    for (name, p) in &pairs {
        let r = pair_checks::transfer_bounds(p).map_err(|e| format!("{name}: {e}"))?;
        let ok = within(r.classes.0, r.classes.1)
            && within(r.classes.1, r.classes.0)
            && within(r.lengths.0, r.lengths.1)
            && within(r.lengths.1, r.lengths.0);
        if !ok {
            let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("transfer-counterexample.json");
            let body = serde_json::json!({ "pair": name, "report": r });
            std::fs::write(&path, serde_json::to_string_pretty(&body).unwrap()).ok();
            return Err(format!("{name}: {r:?}, written to {}", path.display()));
        }
    }
    Ok(format!("{} pairs, both directions", pairs.len()))
}

fn q8_conjugation_pair() -> CompatiblePair {
    let m = Arc::new(MultLieAlg::trivial(corpus::quaternion8()));
    let a = MlaAction::conjugation_trivial(m);
    CompatiblePair::check(a.clone(), a).expect("conjugation pair")
}

fn tensor_pipeline() -> Outcome {
    let rels: Vec<Word> = [vec![(0, 2)], vec![(1, 3)], vec![(0, 1), (1, 1), (0, 1), (1, 1)]]
        .iter()
        .map(|runs| runs.iter().flat_map(|&(g, k)| std::iter::repeat(letter(g, false)).take(k)).collect())
        .collect();
    let order6 = coset_enumerate(2, &rels, 1000, &EnumerationOptions::default())
        .map_err(|e| e.to_string())?
        .group
        .order();
    ensure(order6 == 6, || format!("<a,b | a^2, b^3, (ab)^2> has order {order6}"))?;

    let z2 = Arc::new(MultLieAlg::trivial(corpus::cyclic(2)));
    let t = tensor_product(&corpus::trivial_pair(z2.clone(), z2), &TensorOptions::default())
        .map_err(|e| e.to_string())?;
    ensure(t.order() == 2 && t.algebra().is_trivial_star(), || format!("Z2 x Z2: order {}", t.order()))?;

    let opts = TensorOptions {
        max_cosets: Q8_MAX_COSETS,
        max_rounds: Q8_MAX_ROUNDS,
        ..TensorOptions::default()
    };
    let pair = q8_conjugation_pair();
    let t = tensor_product(&pair, &opts).map_err(|e| format!("Q8: {e}"))?;
    let ids = check_tensor_identities(&t).map_err(|e| format!("Q8: {e}"))?;
    let lie = check_tensor_lie_commutator(&t).map_err(|e| format!("Q8: {e}"))?;
    ensure(lie.holds(), || format!("Q8 Lie commutator expansion: {:?}", lie.outcomes))?;
    let alt = tensor_product(&pair, &TensorOptions { seed_order: SeedOrder::Alt, ..opts })
        .map_err(|e| format!("Q8 alt: {e}"))?;
    let iso = identify(&t, &alt).map_err(|e| e.to_string())?;
    ensure(iso.is_isomorphism(), || format!("seed orders differ: {iso:?}"))?;
    Ok(format!(
        "order 6; |Z2(x)Z2| = 2; |Q8(x)Q8| = {} in {} round(s), {} identities; alt seed order isomorphic",
        t.order(),
        t.rounds(),
        ids.len()
    ))
}

fn q8_tensor_ideal() -> Outcome {
    let pair = q8_conjugation_pair();
    let t = tensor_product(&pair, &TensorOptions::default()).map_err(|e| e.to_string())?;
    let g = pair.g().group();
    let minus_one = g.index_of("-1").ok_or("no -1 in Q8")?;
    let centre = Subgroup::from_elements(g, &[g.identity(), minus_one]).ok_or("centre is not a subgroup")?;
    let ideal = tensor_ideal(&t, &centre, &centre).map_err(|e| e.to_string())?;
    let k = t.group();
    let members: HashSet<Elem> = ideal.elements().iter().copied().collect();
    ensure(members.contains(&k.identity()), || "identity missing".into())?;
    for &a in &members {
        ensure(members.contains(&k.inv(a)), || format!("inverse of {a} missing"))?;
        for &b in &members {
            ensure(members.contains(&k.mul(a, b)), || format!("product {a}*{b} missing"))?;
        }
        for z in k.elements() {
            ensure(members.contains(&k.conjugate(z, a)), || format!("conjugate of {a} by {z} missing"))?;
            ensure(members.contains(&t.star(z, a)), || format!("{z} * {a} missing"))?;
            ensure(members.contains(&t.star(a, z)), || format!("{a} * {z} missing"))?;
        }
    }
    Ok(format!("ideal of order {} in K of order {}", members.len(), t.order()))
}

fn theorem_bounds() -> Outcome {
    let pairs = corpus::small_pairs();
    let mut applicable = 0;
    for (name, p) in &pairs {
        let t = tensor_product(p, &TensorOptions::default()).map_err(|e| format!("{name}: {e}"))?;
        let report = main_theorem_check(&t).map_err(|e| format!("{name}: {e}"))?;
        ensure(report.all_hold(), || format!("{name}: {:?}", report.violations().collect::<Vec<_>>()))?;
        applicable += report.checks.iter().filter(|c| c.hypothesis.is_some()).count();
    }
    Ok(format!("{} pairs, {applicable} applicable bounds hold", pairs.len()))
}

fn cli_contract() -> Outcome {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, &[&str], &str, i32); 10] = [
        ("validate-s3-improper", &["validate"], "algebras/s3-improper.json", 0),
        ("validate-s3-perturbed", &["validate"], "perturbed/s3-improper.json", 1),
        ("validate-s3-bracket", &["validate"], "perturbed/s3-bracket.json", 1),
        ("series-s3-trivial", &["series"], "algebras/s3-trivial.json", 0),
        ("action-check-s3-improper", &["action-check"], "pairs/s3-improper-self-pair.json", 0),
        ("tensor-z2-trivial", &["tensor"], "pairs/z2-trivial-pair.json", 0),
        ("tensor-s3-improper", &["tensor"], "pairs/s3-improper-self-pair.json", 0),
        ("tensor-q8-tiny-cap", &["tensor"], "tensor/q8-conjugation-tiny-cap.json", 3),
        ("verify-q8-trivial-self-pair", &["verify"], "pairs/q8-trivial-self-pair.json", 0),
        ("validate-unknown-element", &["validate"], "invalid/unknown-element.json", 2),
    ];
    let mut codes = HashSet::new();
    for (name, args, fixture, code) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_mlacalc"))
            .args(args)
            .arg("--json")
            .arg(fixtures.join(fixture))
            .env_remove(harness::BUDGET_ENV)
            .output()
            .map_err(|e| e.to_string())?;
        let got = out.status.code().unwrap_or(-1);
        ensure(got == code, || format!("{name}: exit {got}, expected {code}"))?;
        let expected = std::fs::read_to_string(golden.join(format!("{name}.json"))).map_err(|e| format!("{name}: {e}"))?;
        ensure(out.stdout == expected.as_bytes(), || format!("{name}: JSON differs from golden file"))?;
        codes.insert(code);
    }
    ensure(codes.len() == 4, || "not every exit code exercised".into())?;
    Ok(format!("{} golden reports stable, exit codes 0/1/2/3", cases.len()))
}

fn main() {
    let criteria: [(&str, Option<Duration>, fn() -> Outcome); 9] = [
        ("axiom suite", Some(AXIOM_BUDGET), axiom_suite),
        ("Lie identity suite", Some(IDENTITY_BUDGET), identity_suite),
        ("series ground truths", None, series_truths),
        ("compatibility suite", Some(COMPAT_BUDGET), compat_suite),
        ("transfer bounds", None, transfer_bounds),
        ("tensor pipeline", Some(TENSOR_BUDGET), tensor_pipeline),
        ("tensor ideal on Q8", None, q8_tensor_ideal),
        ("quotient bounds", None, theorem_bounds),
        ("CLI contract", None, cli_contract),
    ];
    let mut failed = 0;
    for (name, budget, f) in criteria {
        let (out, wall) = timed(budget, f);
        let limit = budget.map(|b| format!(", limit {b:?}")).unwrap_or_default();
        match out {
            Ok(detail) => println!("PASS {name} ({wall:.2?}{limit}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({wall:.2?}{limit}): {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
