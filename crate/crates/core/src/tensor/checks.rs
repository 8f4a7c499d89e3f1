//! Identity suites evaluated inside a realized `G⊗H`.

use std::fmt;

use serde::Serialize;

use super::{TensorAlgebra, TensorError};
use crate::action::{MixedIdeal, Side};
use crate::group::Elem;
use crate::scan;

/// The six basic identities relating `⊗`, the induced actions and commutators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TensorIdentity {
    /// `1⊗h = 1 = g⊗1`.
    UnitSymbols,
    /// `(g⊗h)^-1 = ^g(g^-1⊗h) = ^h(g⊗h^-1)`.
    InverseSymbols,
    /// `(g⊗h)(g'⊗h')(g⊗h)^-1 = ^(^g h·h^-1)(g'⊗h')`.
    ConjugationBySymbol,
    /// `(g·^h g^-1)⊗h' = (g⊗h)·^h'(g⊗h)^-1`.
    LeftCommutatorSymbol,
    /// `g'⊗(^g h·h^-1) = ^g'(g⊗h)·(g⊗h)^-1`.
    RightCommutatorSymbol,
    /// `[g⊗h, g'⊗h'] = (g·^h g^-1)⊗(^g' h'·h'^-1)`.
    CommutatorOfSymbols,
}

impl TensorIdentity {
    pub const ALL: [TensorIdentity; 6] = [
        TensorIdentity::UnitSymbols,
        TensorIdentity::InverseSymbols,
        TensorIdentity::ConjugationBySymbol,
        TensorIdentity::LeftCommutatorSymbol,
        TensorIdentity::RightCommutatorSymbol,
        TensorIdentity::CommutatorOfSymbols,
    ];

    pub fn number(self) -> u8 {
        Self::ALL.iter().position(|&i| i == self).unwrap() as u8 + 1
    }

    /// Tuple shape: `g` and `h` coordinates in order.
    fn dims(self, m: usize, n: usize) -> Vec<usize> {
        match self {
            TensorIdentity::UnitSymbols | TensorIdentity::InverseSymbols => vec![m, n],
            TensorIdentity::LeftCommutatorSymbol => vec![m, n, n],
            TensorIdentity::RightCommutatorSymbol => vec![m, n, m],
            TensorIdentity::ConjugationBySymbol | TensorIdentity::CommutatorOfSymbols => {
                vec![m, n, m, n]
            }
        }
    }

    fn holds_at(self, t: &TensorAlgebra, w: &[Elem]) -> bool {
        let pair = t.pair();
        let g = pair.g().group();
        let h = pair.h().group();
        let k = t.group();
        let a = pair.g_on_h();
        let b = pair.h_on_g();
        let tens = |x, y| t.tensor(x, y);
        // g·^h g^-1 and ^g h·h^-1
        let g_comm = |x: Elem, y: Elem| g.mul(x, b.act(y, g.inv(x)));
        let h_comm = |x: Elem, y: Elem| h.mul(a.act(x, y), h.inv(y));
        match self {
            TensorIdentity::UnitSymbols => {
                tens(g.identity(), w[1]) == k.identity() && tens(w[0], h.identity()) == k.identity()
            }
            TensorIdentity::InverseSymbols => {
                let inv = k.inv(tens(w[0], w[1]));
                inv == t.g_act(w[0], tens(g.inv(w[0]), w[1]))
                    && inv == t.h_act(w[1], tens(w[0], h.inv(w[1])))
            }
            TensorIdentity::ConjugationBySymbol => {
                let lhs = k.conjugate(tens(w[0], w[1]), tens(w[2], w[3]));
                lhs == t.h_act(h_comm(w[0], w[1]), tens(w[2], w[3]))
            }
            TensorIdentity::LeftCommutatorSymbol => {
                let x = tens(w[0], w[1]);
                tens(g_comm(w[0], w[1]), w[2]) == k.mul(x, t.h_act(w[2], k.inv(x)))
            }
            TensorIdentity::RightCommutatorSymbol => {
                let x = tens(w[0], w[1]);
                tens(w[2], h_comm(w[0], w[1])) == k.mul(t.g_act(w[2], x), k.inv(x))
            }
            TensorIdentity::CommutatorOfSymbols => {
                let lhs = k.commutator(tens(w[0], w[1]), tens(w[2], w[3]));
                lhs == tens(g_comm(w[0], w[1]), h_comm(w[2], w[3]))
            }
        }
    }

    /// Exhaustive check; returns the number of tuples examined.
    pub fn check(self, t: &TensorAlgebra) -> Result<u64, TensorError> {
        if t.induced().is_none() {
            return Err(TensorError::ActionsMissing);
        }
        let dims = self.dims(t.pair().g().order(), t.pair().h().order());
        match scan::first_failure(&dims, |w| self.holds_at(t, w)) {
            Some(witness) => Err(TensorError::IdentityViolation {
                which: self.to_string(),
                witness,
            }),
            None => Ok(scan::volume(&dims)),
        }
    }
}

impl fmt::Display for TensorIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TensorIdentity::UnitSymbols => "unit-symbols",
            TensorIdentity::InverseSymbols => "inverse-symbols",
            TensorIdentity::ConjugationBySymbol => "conjugation-by-symbol",
            TensorIdentity::LeftCommutatorSymbol => "left-commutator-symbol",
            TensorIdentity::RightCommutatorSymbol => "right-commutator-symbol",
            TensorIdentity::CommutatorOfSymbols => "commutator-of-symbols",
        })
    }
}

/// All six identities; stops at the first violation.
pub fn check_tensor_identities(t: &TensorAlgebra) -> Result<Vec<(TensorIdentity, u64)>, TensorError> {
    TensorIdentity::ALL
        .iter()
        .map(|&i| i.check(t).map(|n| (i, n)))
        .collect()
}

/// How a prefix `^(x·y)` with `x ∈ G`, `y ∈ H` acts on `G⊗H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrefixOrder {
    /// `^x(^y k)`.
    GOuter,
    /// `^y(^x k)`.
    HOuter,
}

impl PrefixOrder {
    pub const BOTH: [PrefixOrder; 2] = [PrefixOrder::GOuter, PrefixOrder::HOuter];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieCommutatorReport {
    pub quadruples: u64,
    /// Least failing `(g,h,g',h')` for each reading of the prefix, if any.
    pub outcomes: Vec<(PrefixOrder, Option<Vec<Elem>>)>,
}

impl LieCommutatorReport {
    pub fn holds_for(&self, order: PrefixOrder) -> bool {
        self.outcomes.iter().any(|(o, w)| *o == order && w.is_none())
    }

    pub fn holds(&self) -> bool {
        self.outcomes.iter().any(|(_, w)| w.is_none())
    }
}

/// Both sides of the expansion of `^L[g⊗h, g'⊗h']`.
pub fn lie_commutator_sides(t: &TensorAlgebra, order: PrefixOrder, w: &[Elem]) -> (Elem, Elem) {
    let pair = t.pair();
    let g = pair.g().group();
    let k = t.group();
    let (x, y, x2, y2) = (w[0], w[1], w[2], w[3]);
    let lhs = t.algebra().lie_bracket_defect(t.tensor(x, y), t.tensor(x2, y2));
    // ^L[h,g] ∈ G and ^L[g',h'] ∈ H
    let lie_hg = pair.ideal_generator(MixedIdeal::MixedLie, Side::HOnG, y, x);
    let lie_gh = pair.ideal_generator(MixedIdeal::MixedLie, Side::GOnH, x2, y2);
    let br_hg = pair.h_on_g().bracket(y, x);
    let br_gh = pair.g_on_h().bracket(x2, y2);
    let lie_hg_inv = g.inv(lie_hg);
    let inner = t.tensor(g.inv(br_hg), lie_gh);
    let first = match order {
        PrefixOrder::GOuter => t.g_act(lie_hg_inv, t.h_act(br_gh, inner)),
        PrefixOrder::HOuter => t.h_act(br_gh, t.g_act(lie_hg_inv, inner)),
    };
    let rhs = k.product([first, t.tensor(lie_hg_inv, br_gh), t.tensor(lie_hg_inv, lie_gh)]);
    (lhs, rhs)
}

/// Evaluates the expansion over every quadruple under both prefix readings.
pub fn check_tensor_lie_commutator(t: &TensorAlgebra) -> Result<LieCommutatorReport, TensorError> {
    if t.induced().is_none() {
        return Err(TensorError::ActionsMissing);
    }
    let (m, n) = (t.pair().g().order(), t.pair().h().order());
    let dims = [m, n, m, n];
    let outcomes = PrefixOrder::BOTH
        .iter()
        .map(|&o| {
            let hit = scan::first_failure(&dims, |w| {
                let (l, r) = lie_commutator_sides(t, o, w);
                l == r
            });
            (o, hit)
        })
        .collect();
    Ok(LieCommutatorReport {
        quadruples: scan::volume(&dims),
        outcomes,
    })
}
