//! Finite groups as explicit Cayley tables.
//!
//! Elements are dense indices `0..order`; labels exist only for presentation.
//! Subgroups are membership masks over a parent group, and quotients use the
//! least element index of each coset as its canonical representative.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

/// Dense element index into a [`FiniteGroup`].
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table has {rows} rows (row {bad_row} has {bad_len} entries) for {labels} labels")]
    Shape {
        labels: usize,
        rows: usize,
        bad_row: usize,
        bad_len: usize,
    },
    #[error("empty element list")]
    Empty,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("product {i}*{j} = {value} is not an element")]
    NotClosed { i: Elem, j: Elem, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(Elem),
    #[error("({i}*{j})*{k} != {i}*({j}*{k})")]
    NotAssociative { i: Elem, j: Elem, k: Elem },
    #[error("group of order {order} exceeds the cap of {cap} elements")]
    OrderCap { order: usize, cap: usize },
    #[error("subgroup is not normal: conjugating {n} by {g} leaves it")]
    NotNormal { g: Elem, n: Elem },
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<u32>,
    identity: Elem,
    inverses: Vec<Elem>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("labels", &self.labels)
            .finish()
    }
}

impl FiniteGroup {
    pub const DEFAULT_ORDER_CAP: usize = 10_000;

    /// Validates a Cayley table, locating the identity and inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_capped(labels, table, Self::DEFAULT_ORDER_CAP)
    }

    pub fn from_table_capped(
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > cap {
            return Err(GroupError::OrderCap { order: n, cap });
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            let (bad_row, bad_len) = table
                .iter()
                .enumerate()
                .find(|(_, r)| r.len() != n)
                .map(|(i, r)| (i, r.len()))
                .unwrap_or((table.len(), 0));
            return Err(GroupError::Shape {
                labels: n,
                rows: table.len(),
                bad_row,
                bad_len,
            });
        }
        check_unique_labels(&labels)?;
        for (i, row) in table.iter().enumerate() {
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::NotClosed { i, j, value: v });
            }
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let at = |i: usize, j: usize| flat[i * n + j] as usize;

        let identity = (0..n)
            .find(|&e| (0..n).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| at(i, j) == identity && at(j, i) == identity)
                .ok_or(GroupError::NoInverse(i))?;
            inverses.push(inv);
        }
        let bad = (0..n).into_par_iter().find_map_first(|i| {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        if let Some((i, j, k)) = bad {
            return Err(GroupError::NotAssociative { i, j, k });
        }
        Ok(FiniteGroup {
            labels,
            table: flat,
            identity,
            inverses,
        })
    }

    /// Builds a group from a product rule known to be a group law, skipping the
    /// associativity scan. Identity and inverses are still located.
    pub fn from_fn(
        labels: Vec<String>,
        mul: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self, GroupError> {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = mul(i, j);
                if v >= n {
                    return Err(GroupError::NotClosed { i, j, value: v });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat_trusted(labels, table)
    }

    /// Identity and inverses are located but associativity is taken on trust.
    pub(crate) fn from_flat_trusted(labels: Vec<String>, table: Vec<u32>) -> Result<Self, GroupError> {
        let n = labels.len();
        check_unique_labels(&labels)?;
        let at = |i: usize, j: usize| table[i * n + j] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| at(e, i) == i && at(i, e) == i))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = vec![usize::MAX; n];
        for i in 0..n {
            if inverses[i] != usize::MAX {
                continue;
            }
            let inv = (0..n)
                .find(|&j| at(i, j) == identity)
                .ok_or(GroupError::NoInverse(i))?;
            inverses[i] = inv;
            inverses[inv] = i;
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// The group of order one.
    pub fn trivial() -> Self {
        FiniteGroup {
            labels: vec!["1".into()],
            table: vec![0],
            identity: 0,
            inverses: vec![0],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems
            .into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    /// `z x z^-1`.
    #[inline]
    pub fn conjugate(&self, z: Elem, x: Elem) -> Elem {
        self.mul(self.mul(z, x), self.inv(z))
    }

    /// `x y x^-1 y^-1`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order() {
            return Err(GroupError::Shape {
                labels: labels.len(),
                rows: self.order(),
                bad_row: 0,
                bad_len: self.order(),
            });
        }
        check_unique_labels(&labels)?;
        self.labels = labels;
        Ok(self)
    }

    /// The table as nested rows of indices.
    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Same multiplication table after relabeling-free comparison.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.table == other.table
    }
}

fn check_unique_labels(labels: &[String]) -> Result<(), GroupError> {
    let mut seen = std::collections::HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(GroupError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// A subset of a parent group's elements closed under product and inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    mask: Vec<bool>,
    elements: Vec<Elem>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_members(g.order(), [g.identity()])
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_members(g.order(), g.elements())
    }

    /// Wraps a member set without checking closure.
    pub(crate) fn from_members(order: usize, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = vec![false; order];
        for m in members {
            mask[m] = true;
        }
        let elements = (0..order).filter(|&i| mask[i]).collect();
        Subgroup { mask, elements }
    }

    /// Checks closure and returns the subgroup, or `None` if the set is not one.
    pub fn from_elements(g: &FiniteGroup, members: &[Elem]) -> Option<Self> {
        if members.iter().any(|&m| m >= g.order()) {
            return None;
        }
        let s = Self::from_members(g.order(), members.iter().copied());
        s.is_subgroup_of(g).then_some(s)
    }

    fn is_subgroup_of(&self, g: &FiniteGroup) -> bool {
        self.contains(g.identity())
            && self.elements.iter().all(|&a| {
                self.contains(g.inv(a)) && self.elements.iter().all(|&b| self.contains(g.mul(a, b)))
            })
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.mask.get(a).copied().unwrap_or(false)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    /// First `(g, n)` with `g n g^-1` outside the subgroup.
    pub fn normality_witness(&self, g: &FiniteGroup) -> Option<(Elem, Elem)> {
        g.elements().find_map(|x| {
            self.elements
                .iter()
                .find(|&&n| !self.contains(g.conjugate(x, n)))
                .map(|&n| (x, n))
        })
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.normality_witness(g).is_none()
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(g: &FiniteGroup, seed: &[Elem]) -> Subgroup {
    let mut gens: Vec<Elem> = seed.iter().copied().filter(|&s| s != g.identity()).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut mask = vec![false; g.order()];
    mask[g.identity()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(a) = queue.pop_front() {
        for &s in &gens {
            let b = g.mul(a, s);
            if !mask[b] {
                mask[b] = true;
                queue.push_back(b);
            }
        }
    }
    Subgroup::from_members(g.order(), (0..g.order()).filter(|&i| mask[i]))
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &FiniteGroup, seed: &[Elem]) -> Subgroup {
    let mut current = subgroup_closure(g, seed);
    loop {
        let conj: Vec<Elem> = g
            .elements()
            .flat_map(|x| current.elements().iter().map(move |&n| (x, n)))
            .map(|(x, n)| g.conjugate(x, n))
            .filter(|&c| !current.contains(c))
            .collect();
        if conj.is_empty() {
            return current;
        }
        let mut seed = current.elements().to_vec();
        seed.extend(conj);
        current = subgroup_closure(g, &seed);
    }
}

/// A map between two groups, stored as the image of every source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    pub image: Vec<Elem>,
}

impl GroupMap {
    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a]
    }

    /// First `(s, t)` with `image[s t] != image[s] image[t]`.
    pub fn homomorphism_witness(
        &self,
        source: &FiniteGroup,
        target: &FiniteGroup,
    ) -> Option<(Elem, Elem)> {
        if self.image.len() != source.order() {
            return Some((0, 0));
        }
        source.elements().find_map(|s| {
            source
                .elements()
                .find(|&t| {
                    self.image[source.mul(s, t)] != target.mul(self.image[s], self.image[t])
                })
                .map(|t| (s, t))
        })
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        self.homomorphism_witness(source, target).is_none()
    }

    pub fn kernel(&self, source: &FiniteGroup, target: &FiniteGroup) -> Subgroup {
        let e = target.identity();
        Subgroup::from_members(
            source.order(),
            source.elements().filter(|&a| self.image[a] == e),
        )
    }

    pub fn is_surjective(&self, target: &FiniteGroup) -> bool {
        let mut hit = vec![false; target.order()];
        for &i in &self.image {
            hit[i] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// `G / N` with canonical least-index coset representatives, plus the projection.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupMap), GroupError> {
    if let Some((x, m)) = n.normality_witness(g) {
        return Err(GroupError::NotNormal { g: x, n: m });
    }
    let mut rep = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if rep[x] != usize::MAX {
            continue;
        }
        // x is the least index of its coset since all smaller ones are assigned
        for &m in n.elements() {
            rep[g.mul(x, m)] = x;
        }
        reps.push(x);
    }
    let mut index_of_rep = vec![usize::MAX; g.order()];
    for (i, &r) in reps.iter().enumerate() {
        index_of_rep[r] = i;
    }
    let image: Vec<Elem> = g.elements().map(|x| index_of_rep[rep[x]]).collect();
    let labels: Vec<String> = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(image[g.mul(a, b)] as u32);
        }
    }
    let qg = FiniteGroup::from_flat_trusted(labels, table)?;
    Ok((qg, GroupMap { image }))
}

/// The subgroup carrier re-indexed as a group of its own, with the embedding.
pub fn subgroup_as_group(g: &FiniteGroup, s: &Subgroup) -> (FiniteGroup, Vec<Elem>) {
    let embed = s.elements().to_vec();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &e) in embed.iter().enumerate() {
        local[e] = i;
    }
    let labels = embed.iter().map(|&e| g.label(e).to_string()).collect();
    let k = embed.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &embed {
        for &b in &embed {
            table.push(local[g.mul(a, b)] as u32);
        }
    }
    let sub = FiniteGroup::from_flat_trusted(labels, table).expect("subgroup is a group");
    (sub, embed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn z3_table_validates() {
        let g = FiniteGroup::from_table(
            names(&["e", "a", "b"]),
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 2);
    }

    #[test]
    fn constant_table_has_no_identity() {
        let err = FiniteGroup::from_table(names(&["x", "y"]), vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(err.unwrap_err(), GroupError::NoIdentity);
    }

    #[test]
    fn out_of_range_entry_is_not_closed() {
        let err = FiniteGroup::from_table(names(&["e", "a"]), vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(err.unwrap_err(), GroupError::NotClosed { i: 1, j: 1, value: 2 });
    }

    #[test]
    fn latin_square_without_inverse_or_associativity() {
        // identity row/column but a non-associative loop of order 5
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(names(&["e", "a", "b", "c", "d"]), t).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }), "{err:?}");

        let t = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 2]];
        let err = FiniteGroup::from_table(names(&["e", "a", "b"]), t).unwrap_err();
        assert!(matches!(err, GroupError::NoInverse(_) | GroupError::NotAssociative { .. }));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = FiniteGroup::from_table(names(&["e", "e"]), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(err.unwrap_err(), GroupError::DuplicateLabel("e".into()));
    }

    #[test]
    fn order_cap_enforced() {
        let err = FiniteGroup::from_table_capped(
            names(&["e", "a"]),
            vec![vec![0, 1], vec![1, 0]],
            1,
        );
        assert_eq!(err.unwrap_err(), GroupError::OrderCap { order: 2, cap: 1 });
    }

    #[test]
    fn s3_brute_force_associativity_and_commutator() {
        let s3 = corpus::symmetric3();
        // re-validate through the checked constructor: all 216 triples
        let again = FiniteGroup::from_table(s3.labels().to_vec(), s3.table_rows()).unwrap();
        assert_eq!(again.order(), 6);
        let e = s3.index_of("e").unwrap();
        let r = s3.index_of("r").unwrap();
        let s = s3.index_of("s").unwrap();
        for x in s3.elements() {
            assert_eq!(s3.conjugate(e, x), x);
        }
        assert_eq!(s3.commutator(s, r), r);
        // table walk: s r s^-1 r^-1
        let walk = s3.product([s, r, s3.inv(s), s3.inv(r)]);
        assert_eq!(walk, r);
    }

    #[test]
    fn abelian_commutators_vanish() {
        let z6 = corpus::cyclic(6);
        for x in z6.elements() {
            for y in z6.elements() {
                assert_eq!(z6.commutator(x, y), z6.identity());
            }
        }
    }

    #[test]
    fn closures_in_s3() {
        let s3 = corpus::symmetric3();
        let r = s3.index_of("r").unwrap();
        let s = s3.index_of("s").unwrap();
        let rr = s3.index_of("rr").unwrap();
        let c = subgroup_closure(&s3, &[r]);
        let mut expect = vec![s3.identity(), r, rr];
        expect.sort();
        assert_eq!(c.elements(), &expect[..]);
        assert!(subgroup_closure(&s3, &[]).is_trivial());
        assert_eq!(normal_closure(&s3, &[s]).order(), 6);
        assert_eq!(subgroup_closure(&s3, &[s]).order(), 2);
    }

    #[test]
    fn s3_mod_a3() {
        let s3 = corpus::symmetric3();
        let a3 = subgroup_closure(&s3, &[s3.index_of("r").unwrap()]);
        let (q, pi) = quotient(&s3, &a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(pi.is_homomorphism(&s3, &q));
        assert_eq!(pi.kernel(&s3, &q), a3);
        let c2 = subgroup_closure(&s3, &[s3.index_of("s").unwrap()]);
        assert!(matches!(quotient(&s3, &c2), Err(GroupError::NotNormal { .. })));
    }

    #[test]
    fn trivial_and_full_quotients() {
        for g in [corpus::symmetric3(), corpus::quaternion8(), corpus::cyclic(5)] {
            let (q, pi) = quotient(&g, &Subgroup::trivial(&g)).unwrap();
            assert_eq!(q.order(), g.order());
            assert!(pi.is_surjective(&q));
            assert!(pi.is_homomorphism(&g, &q));
            let (q, _) = quotient(&g, &Subgroup::whole(&g)).unwrap();
            assert_eq!(q.order(), 1);
        }
    }

    #[test]
    fn corpus_groups_are_latin_and_closures_agree() {
        for (name, g) in corpus::small_groups() {
            for a in g.elements() {
                let mut row: Vec<_> = g.elements().map(|b| g.mul(a, b)).collect();
                let mut col: Vec<_> = g.elements().map(|b| g.mul(b, a)).collect();
                row.sort();
                col.sort();
                assert!(row.iter().copied().eq(g.elements()), "{name}");
                assert!(col.iter().copied().eq(g.elements()), "{name}");
            }
            for a in g.elements() {
                let conjugates: Vec<_> = g.elements().map(|x| g.conjugate(x, a)).collect();
                assert_eq!(
                    normal_closure(&g, &[a]),
                    subgroup_closure(&g, &conjugates),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn projection_identifies_cosets() {
        for (name, g) in corpus::small_groups() {
            // derived subgroup is always normal
            let comms: Vec<_> = g
                .elements()
                .flat_map(|x| g.elements().map(move |y| (x, y)))
                .map(|(x, y)| g.commutator(x, y))
                .collect();
            let n = normal_closure(&g, &comms);
            let (_, pi) = quotient(&g, &n).unwrap();
            for x in g.elements() {
                for y in g.elements() {
                    let same = pi.apply(x) == pi.apply(y);
                    assert_eq!(same, n.contains(g.mul(x, g.inv(y))), "{name}");
                }
            }
        }
    }
}
