//! Matching two realizations of the same tensor product element by element.

use serde::Serialize;

use super::{TensorAlgebra, TensorError};
use crate::group::Elem;
use crate::scan;

/// The map sending each element of one realization to the value of its
/// normal-form word in the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub map: Vec<Elem>,
    pub bijective: bool,
    /// Least `(x,y)` with `φ(xy) ≠ φ(x)φ(y)`.
    pub multiplication_defect: Option<Vec<Elem>>,
    /// Least `(x,y)` with `φ(x⋆y) ≠ φ(x)⋆φ(y)`.
    pub star_defect: Option<Vec<Elem>>,
    /// Least `(g,h)` with `φ(g⊗h) ≠ g⊗h`.
    pub symbol_defect: Option<Vec<Elem>>,
}

impl Identification {
    pub fn is_isomorphism(&self) -> bool {
        self.bijective
            && self.multiplication_defect.is_none()
            && self.star_defect.is_none()
            && self.symbol_defect.is_none()
    }
}

pub fn identify(a: &TensorAlgebra, b: &TensorAlgebra) -> Result<Identification, TensorError> {
    let (pa, pb) = (a.pair(), b.pair());
    if pa.g().order() != pb.g().order() || pa.h().order() != pb.h().order() {
        return Err(TensorError::Input("realizations of different pairs".into()));
    }
    let kb = b.group();
    let map: Vec<Elem> = a
        .group()
        .elements()
        .map(|z| kb.product(a.normal_form(z).into_iter().map(|(g, h)| b.tensor(g, h))))
        .collect();
    let mut hit = vec![false; kb.order()];
    for &v in &map {
        hit[v] = true;
    }
    let bijective = a.order() == b.order() && hit.iter().all(|&h| h);
    let n = a.order();
    let ka = a.group();
    let multiplication_defect =
        scan::first_failure(&[n, n], |t| map[ka.mul(t[0], t[1])] == kb.mul(map[t[0]], map[t[1]]));
    let star_defect =
        scan::first_failure(&[n, n], |t| map[a.star(t[0], t[1])] == b.star(map[t[0]], map[t[1]]));
    let symbol_defect = scan::first_failure(&[pa.g().order(), pa.h().order()], |t| {
        map[a.tensor(t[0], t[1])] == b.tensor(t[0], t[1])
    });
    Ok(Identification {
        map,
        bijective,
        multiplication_defect,
        star_defect,
        symbol_defect,
    })
}
