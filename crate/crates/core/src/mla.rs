//! Multiplicative Lie algebras over finite groups.
//!
//! A [`MultLieAlg`] is a group together with a second operation `⋆` subject to
//! five axioms. This module validates those axioms, computes the Lie
//! commutator `^L[a,b] = (a⋆b)^-1 [a,b]`, closes seeds into ideals, and runs
//! the Lie derived and lower central series.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::group::{self, Elem, FiniteGroup, GroupError, GroupMap, Subgroup};
use crate::scan;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MlaError {
    #[error("star table must be {order}x{order}")]
    Shape { order: usize },
    #[error("star entry {i}*{j} = {value} is not an element")]
    OutOfRange { i: Elem, j: Elem, value: usize },
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation { axiom: u8, witness: Vec<Elem> },
    #[error("Lie identity {which} fails at {witness:?}")]
    IdentityViolation { which: u8, witness: Vec<Elem> },
    #[error("quotient star is not well defined at {witness:?}")]
    QuotientStarIllDefined { witness: Vec<Elem> },
    #[error("carrier is not an ideal: {0}")]
    NotIdeal(IdealDefect),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Which absorption the ideal notion demands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Absorption {
    /// `g⋆a` and `a⋆g` both stay in the carrier.
    #[default]
    TwoSided,
    /// Only `g⋆a` is required.
    LeftOnly,
}

/// Why a subgroup fails to be an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IdealDefect {
    NotNormal { g: Elem, a: Elem },
    LeftStar { g: Elem, a: Elem },
    RightStar { a: Elem, g: Elem },
}

impl fmt::Display for IdealDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDefect::NotNormal { g, a } => write!(f, "conjugate of {a} by {g} escapes"),
            IdealDefect::LeftStar { g, a } => write!(f, "{g}⋆{a} escapes"),
            IdealDefect::RightStar { a, g } => write!(f, "{a}⋆{g} escapes"),
        }
    }
}

/// A finite group with a validated multiplicative Lie structure.
#[derive(Clone, PartialEq, Eq)]
pub struct MultLieAlg {
    group: FiniteGroup,
    star: Vec<u32>,
}

impl fmt::Debug for MultLieAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultLieAlg")
            .field("order", &self.order())
            .field("labels", &self.group.labels())
            .finish()
    }
}

/// Evaluates the two sides of an axiom at a tuple; the axiom holds there iff they agree.
pub fn axiom_sides(
    g: &FiniteGroup,
    star: impl Fn(Elem, Elem) -> Elem,
    axiom: u8,
    [x, y, z]: [Elem; 3],
) -> (Elem, Elem) {
    let e = g.identity();
    match axiom {
        1 => (star(x, x), e),
        2 => (
            star(x, g.mul(y, z)),
            g.mul(star(x, y), g.conjugate(y, star(x, z))),
        ),
        3 => (
            star(g.mul(x, y), z),
            g.mul(g.conjugate(x, star(y, z)), star(x, z)),
        ),
        4 => {
            let a = star(star(x, y), g.conjugate(y, z));
            let b = star(star(y, z), g.conjugate(z, x));
            let c = star(star(z, x), g.conjugate(x, y));
            (g.product([a, b, c]), e)
        }
        5 => (
            g.conjugate(z, star(x, y)),
            star(g.conjugate(z, x), g.conjugate(z, y)),
        ),
        _ => panic!("there are five axioms"),
    }
}

/// First failing axiom (checked in order 1..=5) with its lexicographically least witness.
pub fn first_axiom_violation(
    g: &FiniteGroup,
    star: &(impl Fn(Elem, Elem) -> Elem + Sync),
) -> Option<(u8, Vec<Elem>)> {
    if let Some(x) = g.elements().find(|&x| star(x, x) != g.identity()) {
        return Some((1, vec![x]));
    }
    let n = g.order();
    for axiom in 2..=5u8 {
        let hit = scan::first_failure(&[n, n, n], |t| {
            let (l, r) = axiom_sides(g, star, axiom, [t[0], t[1], t[2]]);
            l == r
        });
        if let Some(w) = hit {
            return Some((axiom, w));
        }
    }
    None
}

impl MultLieAlg {
    /// Validates the five axioms for a star table over `group`.
    pub fn check_axioms(group: FiniteGroup, star: &[Vec<Elem>]) -> Result<Self, MlaError> {
        let n = group.order();
        if star.len() != n || star.iter().any(|r| r.len() != n) {
            return Err(MlaError::Shape { order: n });
        }
        for (i, row) in star.iter().enumerate() {
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(MlaError::OutOfRange { i, j, value: v });
            }
        }
        let flat = star.iter().flatten().map(|&v| v as u32).collect();
        Self::from_flat(group, flat)
    }

    pub(crate) fn from_flat(group: FiniteGroup, star: Vec<u32>) -> Result<Self, MlaError> {
        let n = group.order();
        let lookup = |a: Elem, b: Elem| star[a * n + b] as usize;
        if let Some((axiom, witness)) = first_axiom_violation(&group, &lookup) {
            return Err(MlaError::AxiomViolation { axiom, witness });
        }
        Ok(MultLieAlg { group, star })
    }

    /// Skips validation; callers guarantee the axioms.
    pub(crate) fn from_flat_trusted(group: FiniteGroup, star: Vec<u32>) -> Self {
        MultLieAlg { group, star }
    }

    /// `x⋆y = 1`.
    pub fn trivial(group: FiniteGroup) -> Self {
        let e = group.identity() as u32;
        let n = group.order();
        MultLieAlg {
            group,
            star: vec![e; n * n],
        }
    }

    /// `x⋆y = [x,y]`.
    pub fn improper(group: FiniteGroup) -> Self {
        let star = group
            .elements()
            .flat_map(|x| group.elements().map(move |y| (x, y)))
            .map(|(x, y)| group.commutator(x, y) as u32)
            .collect();
        MultLieAlg { group, star }
    }

    #[inline]
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn star(&self, a: Elem, b: Elem) -> Elem {
        self.star[a * self.order() + b] as usize
    }

    pub(crate) fn star_flat(&self) -> &[u32] {
        &self.star
    }

    pub fn star_rows(&self) -> Vec<Vec<Elem>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.star(i, j)).collect()).collect()
    }

    pub fn is_trivial_star(&self) -> bool {
        let e = self.group.identity() as u32;
        self.star.iter().all(|&v| v == e)
    }

    pub fn is_improper_star(&self) -> bool {
        let g = &self.group;
        g.elements()
            .all(|x| g.elements().all(|y| self.star(x, y) == g.commutator(x, y)))
    }

    /// `^L[a,b] = (a⋆b)^-1 [a,b]`.
    #[inline]
    pub fn lie_bracket_defect(&self, a: Elem, b: Elem) -> Elem {
        let g = &self.group;
        g.mul(g.inv(self.star(a, b)), g.commutator(a, b))
    }

    /// Re-runs the axiom scan (the value was validated on construction).
    pub fn axiom_violation(&self) -> Option<(u8, Vec<Elem>)> {
        first_axiom_violation(&self.group, &|a, b| self.star(a, b))
    }

    /// Exhaustive check of the seven Lie commutator identities.
    pub fn check_lie_identities(&self) -> Result<(), MlaError> {
        for id in LieIdentity::ALL {
            let out = id.check(self);
            if let Some(witness) = out.witness {
                return Err(MlaError::IdentityViolation {
                    which: id.number(),
                    witness,
                });
            }
        }
        Ok(())
    }

    /// First element of `s` and reason why `s` is not an ideal.
    pub fn ideal_defect(&self, s: &Subgroup, absorption: Absorption) -> Option<IdealDefect> {
        let g = &self.group;
        for &a in s.elements() {
            for x in g.elements() {
                if !s.contains(g.conjugate(x, a)) {
                    return Some(IdealDefect::NotNormal { g: x, a });
                }
                if !s.contains(self.star(x, a)) {
                    return Some(IdealDefect::LeftStar { g: x, a });
                }
                if absorption == Absorption::TwoSided && !s.contains(self.star(a, x)) {
                    return Some(IdealDefect::RightStar { a, g: x });
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, s: &Subgroup) -> bool {
        self.ideal_defect(s, Absorption::TwoSided).is_none()
    }

    /// Wraps a subgroup as an ideal after checking the invariant.
    pub fn ideal(&self, s: Subgroup) -> Result<Ideal, MlaError> {
        match self.ideal_defect(&s, Absorption::TwoSided) {
            Some(d) => Err(MlaError::NotIdeal(d)),
            None => Ok(Ideal { carrier: s }),
        }
    }

    pub fn whole_ideal(&self) -> Ideal {
        Ideal {
            carrier: Subgroup::whole(&self.group),
        }
    }

    pub fn trivial_ideal(&self) -> Ideal {
        Ideal {
            carrier: Subgroup::trivial(&self.group),
        }
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &[Elem]) -> Ideal {
        self.ideal_closure_with(seed, Absorption::TwoSided)
    }

    pub fn ideal_closure_with(&self, seed: &[Elem], absorption: Absorption) -> Ideal {
        let g = &self.group;
        let mut current = group::subgroup_closure(g, seed);
        loop {
            let mut extra = Vec::new();
            for &a in current.elements() {
                for x in g.elements() {
                    let mut push = |v: Elem| {
                        if !current.contains(v) {
                            extra.push(v);
                        }
                    };
                    push(g.conjugate(x, a));
                    push(self.star(x, a));
                    if absorption == Absorption::TwoSided {
                        push(self.star(a, x));
                    }
                }
            }
            if extra.is_empty() {
                return Ideal { carrier: current };
            }
            extra.extend_from_slice(current.elements());
            current = group::subgroup_closure(g, &extra);
        }
    }

    /// `^L[A,B]`: the ideal generated by all `^L[a,b]`, `a ∈ A`, `b ∈ B`.
    pub fn lie_commutator_ideal(&self, a: &Subgroup, b: &Subgroup) -> Ideal {
        let mut seed: Vec<Elem> = a
            .elements()
            .iter()
            .flat_map(|&x| b.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.lie_bracket_defect(x, y))
            .collect();
        seed.sort_unstable();
        seed.dedup();
        self.ideal_closure(&seed)
    }

    /// `G^(0) = G`, `G^(k+1) = ^L[G^(k), G^(k)]`.
    pub fn derived_series(&self) -> SeriesReport {
        self.run_series(SeriesKind::Derived)
    }

    /// `L_0 = G`, `L_(k+1) = ^L[G, L_k]`.
    pub fn lower_central_series(&self) -> SeriesReport {
        self.run_series(SeriesKind::LowerCentral)
    }

    fn run_series(&self, kind: SeriesKind) -> SeriesReport {
        let whole = Subgroup::whole(&self.group);
        let mut terms = vec![Ideal {
            carrier: whole.clone(),
        }];
        loop {
            let last = &terms.last().unwrap().carrier;
            if last.is_trivial() {
                let n = terms.len() - 1;
                return SeriesReport {
                    kind,
                    terms,
                    verdict: SeriesVerdict::Terminated(n),
                };
            }
            let next = match kind {
                SeriesKind::Derived => self.lie_commutator_ideal(last, last),
                SeriesKind::LowerCentral => self.lie_commutator_ideal(&whole, last),
            };
            if &next.carrier == last {
                let k = terms.len() - 1;
                return SeriesReport {
                    kind,
                    terms,
                    verdict: SeriesVerdict::Stabilized(k),
                };
            }
            terms.push(next);
        }
    }

    /// Lie nilpotency class, if the lower central series reaches the trivial ideal.
    pub fn nilpotency_class(&self) -> Option<usize> {
        self.lower_central_series().class_or_length()
    }

    /// Lie solvability length, if the derived series reaches the trivial ideal.
    pub fn solvability_length(&self) -> Option<usize> {
        self.derived_series().class_or_length()
    }

    /// Restriction of both operations to the carrier of an ideal (or any
    /// star-closed subgroup), re-indexed from zero; returns the embedding.
    pub fn sub_algebra(&self, i: &Ideal) -> (MultLieAlg, Vec<Elem>) {
        let (sub, embed) = group::subgroup_as_group(&self.group, &i.carrier);
        let mut local = vec![usize::MAX; self.order()];
        for (k, &e) in embed.iter().enumerate() {
            local[e] = k;
        }
        let star = embed
            .iter()
            .flat_map(|&a| embed.iter().map(move |&b| (a, b)))
            .map(|(a, b)| local[self.star(a, b)] as u32)
            .collect();
        (MultLieAlg::from_flat_trusted(sub, star), embed)
    }

    /// `M / I` with the star computed on canonical representatives; fails if
    /// the star does not descend to cosets.
    pub fn quotient_algebra(&self, i: &Ideal) -> Result<(MultLieAlg, GroupMap), MlaError> {
        let (q, pi) = group::quotient(&self.group, &i.carrier)?;
        let qn = q.order();
        let mut rep = vec![usize::MAX; qn];
        for x in self.group.elements() {
            if rep[pi.apply(x)] == usize::MAX {
                rep[pi.apply(x)] = x;
            }
        }
        let mut star = vec![0u32; qn * qn];
        for a in 0..qn {
            for b in 0..qn {
                star[a * qn + b] = pi.apply(self.star(rep[a], rep[b])) as u32;
            }
        }
        for x in self.group.elements() {
            for y in self.group.elements() {
                let expect = star[pi.apply(x) * qn + pi.apply(y)] as usize;
                if pi.apply(self.star(x, y)) != expect {
                    return Err(MlaError::QuotientStarIllDefined { witness: vec![x, y] });
                }
            }
        }
        // a well-defined image of a valid star satisfies every axiom
        let alg = MultLieAlg::from_flat_trusted(q, star);
        Ok((alg, pi))
    }
}

/// A normal subgroup absorbed by `⋆` from both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub carrier: Subgroup,
}

impl Ideal {
    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.carrier.is_trivial()
    }

    pub fn elements(&self) -> &[Elem] {
        self.carrier.elements()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.carrier.contains(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "index")]
pub enum SeriesVerdict {
    /// Term `n` is trivial (and no earlier term is).
    Terminated(usize),
    /// Term `k` equals term `k+1` and is not trivial.
    Stabilized(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Ideal>,
    pub verdict: SeriesVerdict,
}

impl SeriesReport {
    pub fn class_or_length(&self) -> Option<usize> {
        match self.verdict {
            SeriesVerdict::Terminated(n) => Some(n),
            SeriesVerdict::Stabilized(_) => None,
        }
    }

    pub fn term_orders(&self) -> Vec<usize> {
        self.terms.iter().map(Ideal::order).collect()
    }

    pub fn stable_term(&self) -> Option<&Ideal> {
        match self.verdict {
            SeriesVerdict::Stabilized(k) => self.terms.get(k),
            SeriesVerdict::Terminated(_) => None,
        }
    }
}

/// The seven identities satisfied by the Lie commutator in every algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieIdentity {
    /// `^L[a,a] = 1`
    Diagonal,
    /// `^L[a,b] ^L[b,a] = 1`
    Antisymmetry,
    /// `^L[ab,c] = ^L[a,c] · ^(^c a)(^L[b,c])`
    LeftProduct,
    /// `^L[a,bc] = ^b(^L[a,c]) · ^[^b c, ^b a](^L[a,b])`
    RightProduct,
    /// `^a(^L[b,c]) = ^L[^a b, ^a c]`
    Conjugation,
    /// `^L[a^-1,b] = ^(a^-1)(^L[b,a])` and `^L[a,b^-1] = ^(b^-1)(^L[b,a])`
    Inverse,
    /// `[^L[a,b], x⋆y] = 1`
    CentralStars,
}

/// Result of one exhaustive identity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub tuples: u64,
    pub witness: Option<Vec<Elem>>,
}

impl LieIdentity {
    pub const ALL: [LieIdentity; 7] = [
        LieIdentity::Diagonal,
        LieIdentity::Antisymmetry,
        LieIdentity::LeftProduct,
        LieIdentity::RightProduct,
        LieIdentity::Conjugation,
        LieIdentity::Inverse,
        LieIdentity::CentralStars,
    ];

    pub fn number(self) -> u8 {
        Self::ALL.iter().position(|&i| i == self).unwrap() as u8 + 1
    }

    /// Stable kebab-case name.
    pub fn name(self) -> &'static str {
        match self {
            LieIdentity::Diagonal => "diagonal",
            LieIdentity::Antisymmetry => "antisymmetry",
            LieIdentity::LeftProduct => "left-product",
            LieIdentity::RightProduct => "right-product",
            LieIdentity::Conjugation => "conjugation",
            LieIdentity::Inverse => "inverse",
            LieIdentity::CentralStars => "central-stars",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            LieIdentity::Diagonal => 1,
            LieIdentity::Antisymmetry | LieIdentity::Inverse => 2,
            LieIdentity::LeftProduct | LieIdentity::RightProduct | LieIdentity::Conjugation => 3,
            LieIdentity::CentralStars => 4,
        }
    }

    /// Whether the identity holds at a tuple of length [`arity`](Self::arity).
    pub fn holds_at(self, m: &MultLieAlg, t: &[Elem]) -> bool {
        let g = m.group();
        let lb = |a, b| m.lie_bracket_defect(a, b);
        let e = g.identity();
        match self {
            LieIdentity::Diagonal => lb(t[0], t[0]) == e,
            LieIdentity::Antisymmetry => g.mul(lb(t[0], t[1]), lb(t[1], t[0])) == e,
            LieIdentity::LeftProduct => {
                let (a, b, c) = (t[0], t[1], t[2]);
                let lhs = lb(g.mul(a, b), c);
                let rhs = g.mul(lb(a, c), g.conjugate(g.conjugate(c, a), lb(b, c)));
                lhs == rhs
            }
            LieIdentity::RightProduct => {
                let (a, b, c) = (t[0], t[1], t[2]);
                let lhs = lb(a, g.mul(b, c));
                let twist = g.commutator(g.conjugate(b, c), g.conjugate(b, a));
                let rhs = g.mul(g.conjugate(b, lb(a, c)), g.conjugate(twist, lb(a, b)));
                lhs == rhs
            }
            LieIdentity::Conjugation => {
                let (a, b, c) = (t[0], t[1], t[2]);
                g.conjugate(a, lb(b, c)) == lb(g.conjugate(a, b), g.conjugate(a, c))
            }
            LieIdentity::Inverse => {
                let (a, b) = (t[0], t[1]);
                let ai = g.inv(a);
                let bi = g.inv(b);
                lb(ai, b) == g.conjugate(ai, lb(b, a)) && lb(a, bi) == g.conjugate(bi, lb(b, a))
            }
            LieIdentity::CentralStars => {
                let l = lb(t[0], t[1]);
                g.commutator(l, m.star(t[2], t[3])) == e
            }
        }
    }

    /// Scans all tuples in lexicographic order; reports the first failure.
    pub fn check(self, m: &MultLieAlg) -> IdentityOutcome {
        let n = m.order();
        let k = self.arity();
        let tuples = (n as u64).pow(k as u32);
        let witness = scan::first_failure(&vec![n; k], |t| self.holds_at(m, t));
        IdentityOutcome { tuples, witness }
    }
}
