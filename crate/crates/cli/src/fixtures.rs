//! The bundled fixture corpus, rebuilt from the core corpus constructors.

use std::sync::Arc;

use mlacalc::action::MlaAction;
use mlacalc::corpus;
use mlacalc::mla::MultLieAlg;

use crate::document::{
    ActionDoc, ActionShorthand, AlgebraDoc, BracketSpec, ExplicitAction, InstanceDocument, PairDoc, StarShorthand,
    StarSpec, TensorJobDoc,
};

fn file_stem(name: &str) -> String {
    name.to_lowercase().replace('^', "").replace('/', "-")
}

fn with_star(m: &MultLieAlg, star: StarShorthand) -> AlgebraDoc {
    AlgebraDoc {
        star: StarSpec::Shorthand(star),
        ..AlgebraDoc::from_algebra(m)
    }
}

/// One entry of the star table moved to the next element (cyclically).
fn perturbed(doc: &AlgebraDoc, m: &MultLieAlg) -> AlgebraDoc {
    let n = m.order();
    let mut rows = m.star_rows();
    let e = m.group().identity();
    let a = (0..n).find(|&x| x != e).expect("non-trivial group");
    let b = (0..n).rev().find(|&x| x != e).unwrap();
    rows[a][b] = (rows[a][b] + 1) % n;
    let labels = m.group().labels();
    AlgebraDoc {
        star: StarSpec::Table(
            rows.iter()
                .map(|r| r.iter().map(|&x| labels[x].clone()).collect())
                .collect(),
        ),
        ..doc.clone()
    }
}

fn self_pair_doc(m: &MultLieAlg, star: StarShorthand, action: ActionShorthand) -> PairDoc {
    PairDoc {
        g: with_star(m, star),
        h: None,
        g_on_h: ActionDoc::Shorthand(action),
        h_on_g: ActionDoc::Shorthand(action),
    }
}

/// Every fixture as `(relative path, document)`.
pub fn corpus_documents() -> Vec<(String, InstanceDocument)> {
    let mut out = Vec::new();
    for (name, g) in corpus::small_groups() {
        let stem = file_stem(name);
        let trivial = MultLieAlg::trivial(g.clone());
        let doc = with_star(&trivial, StarShorthand::Trivial);
        if g.order() > 1 {
            out.push((
                format!("perturbed/{stem}-trivial.json"),
                InstanceDocument::Algebra(perturbed(&doc, &trivial)),
            ));
        }
        out.push((format!("algebras/{stem}-trivial.json"), InstanceDocument::Algebra(doc)));
        if !g.is_abelian() {
            let improper = MultLieAlg::improper(g);
            let doc = with_star(&improper, StarShorthand::Improper);
            out.push((
                format!("perturbed/{stem}-improper.json"),
                InstanceDocument::Algebra(perturbed(&doc, &improper)),
            ));
            out.push((format!("algebras/{stem}-improper.json"), InstanceDocument::Algebra(doc)));
        }
    }
    for (name, m) in [
        ("lie-heisenberg-z2", corpus::heisenberg_z2()),
        ("lie-cross-z2", corpus::cross_product_z2()),
        ("lie-affine-z3", corpus::affine_z3()),
    ] {
        out.push((
            format!("algebras/{name}.json"),
            InstanceDocument::Algebra(AlgebraDoc::from_algebra(&m)),
        ));
    }

    let group = |n: &str| corpus::group_by_name(n).expect("corpus group");
    let z2 = MultLieAlg::trivial(group("Z2"));
    let s3 = MultLieAlg::improper(group("S3"));
    let s3_trivial = MultLieAlg::trivial(group("S3"));
    let q8 = MultLieAlg::trivial(group("Q8"));
    let q8_improper = MultLieAlg::improper(group("Q8"));
    let pairs = [
        ("z2-trivial-pair", self_pair_doc(&z2, StarShorthand::Trivial, ActionShorthand::Trivial)),
        ("s3-trivial-pair", self_pair_doc(&s3_trivial, StarShorthand::Trivial, ActionShorthand::Trivial)),
        ("s3-improper-self-pair", self_pair_doc(&s3, StarShorthand::Improper, ActionShorthand::Star)),
        ("q8-trivial-self-pair", self_pair_doc(&q8, StarShorthand::Trivial, ActionShorthand::Star)),
        ("q8-conjugation-pair", self_pair_doc(&q8, StarShorthand::Trivial, ActionShorthand::Conjugation)),
        ("q8-improper-self-pair", self_pair_doc(&q8_improper, StarShorthand::Improper, ActionShorthand::Star)),
        ("z2-on-z3-inversion", PairDoc::from_pair(&corpus::inversion_pair())),
    ];
    for (name, p) in pairs {
        out.push((format!("pairs/{name}.json"), InstanceDocument::Pair(p)));
    }
    out.push((
        "tensor/q8-conjugation.json".into(),
        InstanceDocument::Tensor(TensorJobDoc {
            pair: self_pair_doc(&q8, StarShorthand::Trivial, ActionShorthand::Conjugation),
            max_cosets: Some(200_000),
            max_rounds: Some(8),
        }),
    ));
    out.push((
        "tensor/q8-conjugation-tiny-cap.json".into(),
        InstanceDocument::Tensor(TensorJobDoc {
            pair: self_pair_doc(&q8, StarShorthand::Trivial, ActionShorthand::Conjugation),
            max_cosets: Some(8),
            max_rounds: None,
        }),
    ));

    // conjugation on S3 with one bracket entry moved off the identity
    let s3a = Arc::new(s3_trivial.clone());
    let conj = MlaAction::conjugation_trivial(s3a.clone());
    let mut bracket = conj.bracket_rows();
    bracket[1][3] = 1;
    let labels = s3a.group().labels();
    let names = |t: Vec<Vec<usize>>| -> Vec<Vec<String>> {
        t.iter().map(|r| r.iter().map(|&x| labels[x].clone()).collect()).collect()
    };
    out.push((
        "perturbed/s3-bracket.json".into(),
        InstanceDocument::Pair(PairDoc {
            g: with_star(&s3_trivial, StarShorthand::Trivial),
            h: None,
            g_on_h: ActionDoc::Explicit(ExplicitAction {
                phi: names(conj.phi_rows()),
                bracket: BracketSpec::Table(names(bracket)),
            }),
            h_on_g: ActionDoc::Shorthand(ActionShorthand::Conjugation),
        }),
    ));

    let mut unknown = with_star(&z2, StarShorthand::Trivial);
    unknown.table[1][1] = "b".into();
    out.push(("invalid/unknown-element.json".into(), InstanceDocument::Algebra(unknown)));
    let mut not_group = with_star(&z2, StarShorthand::Trivial);
    not_group.table[1][1] = not_group.elements[1].clone();
    out.push(("invalid/not-a-group.json".into(), InstanceDocument::Algebra(not_group)));
    out
}

