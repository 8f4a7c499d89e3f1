//! Star axioms, Lie identities, ideals and series on the corpus, against
//! brute-force oracles written here.

use mlacalc::corpus;
use mlacalc::group::{Elem, FiniteGroup, Subgroup};
use mlacalc::mla::{axiom_sides, LieIdentity, MlaError, MultLieAlg, SeriesVerdict};
use proptest::prelude::*;

fn conj(g: &FiniteGroup, x: Elem, y: Elem) -> Elem {
    g.mul(g.mul(x, y), g.inv(x))
}

/// The five axioms written out directly; returns the first failing axiom.
fn oracle_axioms(g: &FiniteGroup, star: &dyn Fn(Elem, Elem) -> Elem) -> Option<u8> {
    let n = g.order();
    let e = g.identity();
    if (0..n).any(|x| star(x, x) != e) {
        return Some(1);
    }
    let mut failing = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let checks = [
                    (2, star(x, g.mul(y, z)) == g.mul(star(x, y), conj(g, y, star(x, z)))),
                    (3, star(g.mul(x, y), z) == g.mul(conj(g, x, star(y, z)), star(x, z))),
                    (
                        4,
                        g.mul(
                            g.mul(star(star(x, y), conj(g, y, z)), star(star(y, z), conj(g, z, x))),
                            star(star(z, x), conj(g, x, y)),
                        ) == e,
                    ),
                    (5, conj(g, z, star(x, y)) == star(conj(g, z, x), conj(g, z, y))),
                ];
                if let Some(&(a, _)) = checks.iter().find(|(_, ok)| !ok) {
                    if failing.map_or(true, |f| a < f) {
                        failing = Some(a);
                    }
                    if a == 2 {
                        break 'outer;
                    }
                }
            }
        }
    }
    failing
}

#[test]
fn trivial_and_improper_stars_validate_on_every_corpus_group() {
    let groups = corpus::small_groups();
    assert_eq!(groups.len(), 24);
    for (name, g) in groups {
        assert!(g.order() <= 12);
        let n = g.order();
        let trivial: Vec<Vec<Elem>> = vec![vec![g.identity(); n]; n];
        let improper: Vec<Vec<Elem>> = (0..n)
            .map(|x| (0..n).map(|y| g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)))).collect())
            .collect();
        for star in [&trivial, &improper] {
            assert_eq!(oracle_axioms(&g, &|a, b| star[a][b]), None, "{name}");
            let m = MultLieAlg::check_axioms(g.clone(), star).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(m.axiom_violation(), None);
        }
    }
}

#[test]
fn every_single_entry_perturbation_of_s3_improper_is_caught_with_a_replayable_witness() {
    let m = MultLieAlg::improper(corpus::symmetric3());
    let g = m.group().clone();
    let n = g.order();
    let base = m.star_rows();
    for a in 0..n {
        for b in 0..n {
            for v in 0..n {
                if v == base[a][b] {
                    continue;
                }
                let mut star = base.clone();
                star[a][b] = v;
                let expected = oracle_axioms(&g, &|x, y| star[x][y]);
                match MultLieAlg::check_axioms(g.clone(), &star) {
                    Err(MlaError::AxiomViolation { axiom, witness }) => {
                        assert_eq!(Some(axiom), expected, "entry ({a},{b}) -> {v}");
                        let t = if axiom == 1 { [witness[0]; 3] } else { [witness[0], witness[1], witness[2]] };
                        let (l, r) = axiom_sides(&g, |x, y| star[x][y], axiom, t);
                        assert_ne!(l, r, "witness does not replay");
                    }
                    other => panic!("entry ({a},{b}) -> {v}: {other:?}"),
                }
            }
        }
    }
}

#[test]
fn lie_identities_hold_on_every_corpus_algebra() {
    for (name, m) in corpus::small_algebras() {
        for id in LieIdentity::ALL {
            let out = id.check(&m);
            assert_eq!(out.witness, None, "{name}: {}", id.name());
            let n = m.order() as u64;
            assert_eq!(out.tuples, n.pow(id.arity() as u32), "{name}: {}", id.name());
        }
    }
}

#[test]
fn lie_defect_is_star_inverse_times_commutator() {
    for (name, m) in corpus::small_algebras() {
        let g = m.group();
        for a in g.elements() {
            for b in g.elements() {
                let comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
                assert_eq!(m.lie_bracket_defect(a, b), g.mul(g.inv(m.star(a, b)), comm), "{name}");
            }
        }
    }
}

#[test]
fn series_ground_truths() {
    let s3 = MultLieAlg::trivial(corpus::symmetric3());
    assert_eq!(s3.nilpotency_class(), None);
    assert_eq!(s3.lower_central_series().verdict, SeriesVerdict::Stabilized(1));
    assert_eq!(s3.lower_central_series().stable_term().unwrap().order(), 3);
    assert_eq!(s3.solvability_length(), Some(2));

    let q8 = MultLieAlg::trivial(corpus::quaternion8());
    assert_eq!(q8.nilpotency_class(), Some(2));
    assert_eq!(q8.solvability_length(), Some(2));

    for (name, g) in corpus::small_groups() {
        let m = MultLieAlg::improper(g);
        let class = m.nilpotency_class();
        assert!(matches!(class, Some(c) if c <= 1), "{name}: {class:?}");
    }
}

/// With the trivial star the Lie defect is the group commutator, so the
/// series are the ordinary lower central and derived series.
fn group_lower_central_class(g: &FiniteGroup) -> Option<usize> {
    let mut term: Vec<Elem> = g.elements().collect();
    let mut steps = 0;
    loop {
        if term.len() == 1 {
            return Some(steps);
        }
        let seeds: Vec<Elem> = g
            .elements()
            .flat_map(|x| term.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))))
            .collect();
        let next = closure(g, &seeds);
        if next.len() == term.len() {
            return None;
        }
        term = next;
        steps += 1;
    }
}

fn closure(g: &FiniteGroup, seed: &[Elem]) -> Vec<Elem> {
    let mut set = vec![false; g.order()];
    set[g.identity()] = true;
    let mut items = vec![g.identity()];
    let mut i = 0;
    for &s in seed {
        if !set[s] {
            set[s] = true;
            items.push(s);
        }
    }
    while i < items.len() {
        let x = items[i];
        for &s in seed {
            let y = g.mul(x, s);
            if !set[y] {
                set[y] = true;
                items.push(y);
            }
        }
        i += 1;
    }
    items.sort_unstable();
    items
}

#[test]
fn trivial_star_series_match_the_group_series() {
    for (name, g) in corpus::small_groups() {
        let m = MultLieAlg::trivial(g.clone());
        assert_eq!(m.nilpotency_class(), group_lower_central_class(&g), "{name}");
    }
}

fn corpus_algebra() -> impl Strategy<Value = MultLieAlg> {
    let all: Vec<MultLieAlg> = corpus::small_algebras().into_iter().map(|(_, m)| m).collect();
    proptest::sample::select(all)
}

fn is_ideal_oracle(m: &MultLieAlg, members: &[Elem]) -> bool {
    let g = m.group();
    let inside = |x: Elem| members.contains(&x);
    members.iter().all(|&a| {
        g.elements()
            .all(|x| inside(conj(g, x, a)) && inside(m.star(x, a)) && inside(m.star(a, x)))
    }) && members.iter().all(|&a| members.iter().all(|&b| inside(g.mul(a, b))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_closure_is_the_least_ideal_over_its_seed(m in corpus_algebra(), seed in proptest::collection::vec(0usize..12, 0..3)) {
        let seed: Vec<Elem> = seed.into_iter().map(|s| s % m.order()).collect();
        let ideal = m.ideal_closure(&seed);
        prop_assert!(is_ideal_oracle(&m, ideal.elements()));
        prop_assert!(seed.iter().all(|&s| ideal.contains(s)));
        // every ideal of the corpus algebra containing the seed contains the closure
        for x in m.group().elements() {
            let bigger = m.ideal_closure(&[seed.clone(), vec![x]].concat());
            prop_assert!(ideal.elements().iter().all(|&a| bigger.contains(a)));
        }
    }

    #[test]
    fn quotients_by_ideals_satisfy_the_axioms(m in corpus_algebra(), s in 0usize..12) {
        let ideal = m.ideal_closure(&[s % m.order()]);
        let (q, map) = m.quotient_algebra(&ideal).unwrap();
        prop_assert_eq!(q.order() * ideal.order(), m.order());
        prop_assert_eq!(oracle_axioms(q.group(), &|a, b| q.star(a, b)), None);
        let g = m.group();
        for a in g.elements() {
            for b in g.elements() {
                prop_assert_eq!(map.apply(m.star(a, b)), q.star(map.apply(a), map.apply(b)));
                prop_assert_eq!(map.apply(g.mul(a, b)), q.group().mul(map.apply(a), map.apply(b)));
            }
        }
    }

    #[test]
    fn series_terms_are_decreasing_ideals(m in corpus_algebra()) {
        for report in [m.lower_central_series(), m.derived_series()] {
            for w in report.terms.windows(2) {
                prop_assert!(w[1].elements().iter().all(|&a| w[0].contains(a)));
                prop_assert!(w[1].order() < w[0].order());
            }
            for t in &report.terms {
                prop_assert!(is_ideal_oracle(&m, t.elements()));
            }
        }
    }

    #[test]
    fn subgroup_from_elements_accepts_exactly_subgroups(m in corpus_algebra(), mask in 0u32..4096) {
        let g = m.group();
        let members: Vec<Elem> = g.elements().filter(|&x| mask & (1 << x) != 0).collect();
        let closed = members.contains(&g.identity())
            && members.iter().all(|&a| members.iter().all(|&b| members.contains(&g.mul(a, b))));
        prop_assert_eq!(Subgroup::from_elements(g, &members).is_some(), closed);
    }
}
