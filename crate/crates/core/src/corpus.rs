//! Bundled fixtures: every group of order at most twelve, the two canonical
//! stars on each, a few Lie rings on elementary abelian groups, and the
//! compatible pairs built from them.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::action::{CompatiblePair, MlaAction};
use crate::group::{Elem, FiniteGroup};
use crate::mla::MultLieAlg;

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        2 => format!("{base}{base}"),
        _ => format!("{base}^{k}"),
    }
}

/// `Z_n` with elements `e, a, aa, a^3, ...`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    if n == 1 {
        return FiniteGroup::trivial().with_labels(vec!["e".into()]).unwrap();
    }
    let labels = (0..n).map(|k| power_label("a", k)).collect();
    FiniteGroup::from_fn(labels, |i, j| (i + j) % n).unwrap()
}

/// Direct product with pair labels `(x,y)`; index `i * |H| + j`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order();
    let labels = g
        .elements()
        .flat_map(|a| h.elements().map(move |b| (a, b)))
        .map(|(a, b)| format!("({},{})", g.label(a), h.label(b)))
        .collect();
    FiniteGroup::from_fn(labels, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })
    .unwrap()
}

/// Dihedral group of order `2n`: `s^a r^i` at index `a * n + i`, with `s r s^-1 = r^-1`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let labels = (0..2 * n)
        .map(|x| {
            let (a, i) = (x / n, x % n);
            let rot = if i == 0 { String::new() } else { power_label("r", i) };
            match (a, i) {
                (0, 0) => "e".to_string(),
                (0, _) => rot,
                (_, 0) => "s".to_string(),
                _ => format!("s{rot}"),
            }
        })
        .collect();
    FiniteGroup::from_fn(labels, |x, y| {
        let (a, i) = (x / n, x % n);
        let (b, j) = (y / n, y % n);
        let twisted = if b == 1 { (n - i) % n } else { i };
        ((a + b) % 2) * n + (twisted + j) % n
    })
    .unwrap()
}

/// `S3` as the dihedral group of order 6, labels `e r rr s sr srr`.
pub fn symmetric3() -> FiniteGroup {
    dihedral(3)
}

/// Quaternion group with labels `1 -1 i -i j -j k -k`.
pub fn quaternion8() -> FiniteGroup {
    // unit index u in {1,i,j,k} = 0..4, sign bit; element = 2u + sign
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // unit products (result unit, sign flip)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    FiniteGroup::from_fn(labels, |x, y| {
        let (u, su) = (x / 2, x % 2);
        let (v, sv) = (y / 2, y % 2);
        let (w, flip) = UNIT[u][v];
        2 * w + (su + sv + flip) % 2
    })
    .unwrap()
}

/// `Z3 ⋊ Z4` (dicyclic of order 12): `(i, j)` at `4 i + j`, generator of `Z4` inverting `Z3`.
pub fn dicyclic12() -> FiniteGroup {
    let labels = (0..12)
        .map(|x| {
            let (i, j) = (x / 4, x % 4);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (0, _) => power_label("x", j),
                (_, 0) => power_label("a", i),
                _ => format!("{}{}", power_label("a", i), power_label("x", j)),
            }
        })
        .collect();
    FiniteGroup::from_fn(labels, |x, y| {
        let (i, j) = (x / 4, x % 4);
        let (k, l) = (y / 4, y % 4);
        let twisted = if j % 2 == 1 { (3 - k) % 3 } else { k };
        ((i + twisted) % 3) * 4 + (j + l) % 4
    })
    .unwrap()
}

/// Closure of permutation generators; labels are shortest words in the generator names.
pub fn from_permutations(gens: &[Vec<usize>], names: &[&str]) -> FiniteGroup {
    let degree = gens[0].len();
    let id: Vec<usize> = (0..degree).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id.clone(), 0)]);
    let mut perms = vec![id];
    let mut labels = vec!["e".to_string()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for (g, name) in gens.iter().zip(names) {
            // right multiplication: first a, then g
            let p: Vec<usize> = (0..degree).map(|i| g[perms[a][i]]).collect();
            if !index.contains_key(&p) {
                index.insert(p.clone(), perms.len());
                labels.push(if a == 0 { name.to_string() } else { format!("{}{}", labels[a], name) });
                perms.push(p);
                queue.push_back(perms.len() - 1);
            }
        }
    }
    let compose = |x: usize, y: usize| {
        let p: Vec<usize> = (0..degree).map(|i| perms[y][perms[x][i]]).collect();
        index[&p]
    };
    FiniteGroup::from_fn(labels.clone(), compose).unwrap()
}

pub fn alternating4() -> FiniteGroup {
    from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], &["a", "b"])
}

/// All groups of order at most twelve, one per isomorphism class.
pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    let z = cyclic;
    vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", direct_product(&z(2), &z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", symmetric3()),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z4xZ2", direct_product(&z(4), &z(2))),
        ("Z2xZ2xZ2", direct_product(&direct_product(&z(2), &z(2)), &z(2))),
        ("D8", dihedral(4)),
        ("Q8", quaternion8()),
        ("Z9", z(9)),
        ("Z3xZ3", direct_product(&z(3), &z(3))),
        ("Z10", z(10)),
        ("D10", dihedral(5)),
        ("Z11", z(11)),
        ("Z12", z(12)),
        ("Z6xZ2", direct_product(&z(6), &z(2))),
        ("A4", alternating4()),
        ("D12", dihedral(6)),
        ("Dic12", dicyclic12()),
    ]
}

pub fn group_by_name(name: &str) -> Option<FiniteGroup> {
    small_groups()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, g)| g)
}

/// A Lie ring on `(Z_p)^dim` given by brackets of basis vectors; unspecified
/// basis brackets are zero and `[e_j, e_i] = -[e_i, e_j]` is implied.
pub fn abelian_lie_ring(p: usize, dim: usize, basis_brackets: &[(usize, usize, Vec<usize>)]) -> MultLieAlg {
    let n = p.pow(dim as u32);
    let digits = |x: usize| -> Vec<usize> { (0..dim).map(|k| (x / p.pow(k as u32)) % p).collect() };
    let undigits = |v: &[usize]| -> usize { v.iter().enumerate().map(|(k, &c)| (c % p) * p.pow(k as u32)).sum() };
    let labels: Vec<String> = (0..n)
        .map(|x| {
            if x == 0 {
                "0".to_string()
            } else {
                digits(x).iter().map(|d| d.to_string()).collect::<Vec<_>>().join("")
            }
        })
        .collect();
    let group = FiniteGroup::from_fn(labels, |x, y| {
        let (a, b) = (digits(x), digits(y));
        let s: Vec<usize> = a.iter().zip(&b).map(|(u, v)| u + v).collect();
        undigits(&s)
    })
    .unwrap();
    let mut basis = vec![vec![vec![0usize; dim]; dim]; dim];
    for (i, j, v) in basis_brackets {
        basis[*i][*j] = v.clone();
        basis[*j][*i] = v.iter().map(|c| (p - c % p) % p).collect();
    }
    let star: Vec<Vec<Elem>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (a, b) = (digits(x), digits(y));
                    let mut out = vec![0usize; dim];
                    for i in 0..dim {
                        for j in 0..dim {
                            let c = a[i] * b[j];
                            for (o, v) in out.iter_mut().zip(&basis[i][j]) {
                                *o += c * v;
                            }
                        }
                    }
                    undigits(&out)
                })
                .collect()
        })
        .collect();
    MultLieAlg::check_axioms(group, &star).expect("Lie ring satisfies the axioms")
}

/// Heisenberg Lie ring on `(Z_2)^3`: `[e0, e1] = e2`.
pub fn heisenberg_z2() -> MultLieAlg {
    abelian_lie_ring(2, 3, &[(0, 1, vec![0, 0, 1])])
}

/// Cross-product Lie ring on `(Z_2)^3` (perfect, neither nilpotent nor solvable).
pub fn cross_product_z2() -> MultLieAlg {
    abelian_lie_ring(
        2,
        3,
        &[(0, 1, vec![0, 0, 1]), (1, 2, vec![1, 0, 0]), (2, 0, vec![0, 1, 0])],
    )
}

/// Two-dimensional non-abelian Lie ring on `(Z_3)^2`: `[e0, e1] = e1`.
pub fn affine_z3() -> MultLieAlg {
    abelian_lie_ring(3, 2, &[(0, 1, vec![0, 1])])
}

/// Every corpus algebra: trivial and improper stars on all small groups
/// (only one of them when the group is abelian) plus the Lie rings.
pub fn small_algebras() -> Vec<(String, MultLieAlg)> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        let abelian = g.is_abelian();
        out.push((format!("{name}/trivial"), MultLieAlg::trivial(g.clone())));
        if !abelian {
            out.push((format!("{name}/improper"), MultLieAlg::improper(g)));
        }
    }
    out.push(("Z2^3/heisenberg".into(), heisenberg_z2()));
    out.push(("Z2^3/cross".into(), cross_product_z2()));
    out.push(("Z3^2/affine".into(), affine_z3()));
    out
}

/// Trivial actions both ways: identity automorphisms and constant brackets.
pub fn trivial_pair(g: Arc<MultLieAlg>, h: Arc<MultLieAlg>) -> CompatiblePair {
    let a = MlaAction::trivial(g.clone(), h.clone());
    let b = MlaAction::trivial(h, g);
    CompatiblePair::check(a, b).expect("trivial actions are compatible")
}

/// An algebra acting on itself by conjugation with bracket `⋆`, both ways.
pub fn self_pair(m: Arc<MultLieAlg>) -> CompatiblePair {
    let a = MlaAction::conjugation_star(m.clone());
    let b = MlaAction::conjugation_star(m);
    CompatiblePair::check(a, b).expect("conjugation with the star bracket is compatible")
}

/// `Z2` acting on `Z3` by inversion, `Z3` acting trivially on `Z2`, trivial brackets.
pub fn inversion_pair() -> CompatiblePair {
    let g = Arc::new(MultLieAlg::trivial(cyclic(2)));
    let h = Arc::new(MultLieAlg::trivial(cyclic(3)));
    let phi = vec![vec![0, 1, 2], vec![0, 2, 1]];
    let a = MlaAction::validate(g.clone(), h.clone(), &phi, &vec![vec![0; 3]; 2]).unwrap();
    let b = MlaAction::trivial(h, g);
    CompatiblePair::check(a, b).expect("inversion pair is compatible")
}

/// All corpus pairs: for each corpus algebra the trivial pair and the
/// conjugation self-pair, plus the inversion pair.
pub fn small_pairs() -> Vec<(String, CompatiblePair)> {
    let mut out = Vec::new();
    for (name, m) in small_algebras() {
        let m = Arc::new(m);
        out.push((format!("{name} trivial-pair"), trivial_pair(m.clone(), m.clone())));
        out.push((format!("{name} self-pair"), self_pair(m)));
    }
    out.push(("Z2-on-Z3 inversion".into(), inversion_pair()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_has_every_small_group_once() {
        let groups = small_groups();
        assert_eq!(groups.len(), 24);
        let mut count_by_order = [0usize; 13];
        for (_, g) in &groups {
            count_by_order[g.order()] += 1;
        }
        assert_eq!(count_by_order[1..], [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]);
    }

    #[test]
    fn group_invariants_distinguish_same_order_classes() {
        // (abelian?, sorted element orders) separates all classes of order <= 12
        let mut seen = std::collections::HashSet::new();
        for (name, g) in small_groups() {
            let mut orders: Vec<_> = g.elements().map(|a| g.element_order(a)).collect();
            orders.sort();
            assert!(seen.insert((g.is_abelian(), orders)), "{name} duplicates a class");
        }
    }

    #[test]
    fn named_labels() {
        let s3 = symmetric3();
        assert_eq!(s3.labels(), ["e", "r", "rr", "s", "sr", "srr"]);
        let q8 = quaternion8();
        let i = q8.index_of("i").unwrap();
        let j = q8.index_of("j").unwrap();
        assert_eq!(q8.label(q8.mul(i, j)), "k");
        assert_eq!(q8.label(q8.mul(j, i)), "-k");
        assert_eq!(q8.label(q8.mul(i, i)), "-1");
    }
}
