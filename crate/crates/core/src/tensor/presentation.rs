//! Group presentations on the symbols `g⊗h` and their simplification.
//!
//! Words are sequences of letters: generator `i` is letter `2i`, its inverse
//! is `2i + 1`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::action::CompatiblePair;
use crate::group::Elem;

pub type Letter = u32;
pub type Word = Vec<Letter>;

#[inline]
pub fn letter(generator: usize, inverse: bool) -> Letter {
    (2 * generator + inverse as usize) as Letter
}

#[inline]
pub fn inv(l: Letter) -> Letter {
    l ^ 1
}

#[inline]
pub fn generator_of(l: Letter) -> usize {
    (l >> 1) as usize
}

#[inline]
pub fn is_inverse(l: Letter) -> bool {
    l & 1 == 1
}

pub fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|&l| inv(l)).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&inv(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == inv(w[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Least rotation of the word or of its inverse; equal for relators that
/// define the same normal closure trivially.
pub fn canonical_cyclic(w: &[Letter]) -> Word {
    let mut best: Option<Word> = None;
    for cand in [w.to_vec(), invert_word(w)] {
        for r in 0..cand.len().max(1) {
            let rot: Word = cand[r..].iter().chain(&cand[..r]).copied().collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// A presentation on the symbols `g⊗h`, symbol index `g·|H| + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub g_order: usize,
    pub h_order: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn generator_count(&self) -> usize {
        self.g_order * self.h_order
    }

    #[inline]
    pub fn symbol(&self, g: Elem, h: Elem) -> usize {
        g * self.h_order + h
    }

    pub fn generator_label(&self, s: usize) -> (Elem, Elem) {
        (s / self.h_order, s % self.h_order)
    }
}

/// Relators from the four defining relations, instantiated over every tuple.
pub fn build_tensor_presentation(pair: &CompatiblePair) -> Presentation {
    let gm = pair.g();
    let hm = pair.h();
    let g = gm.group();
    let h = hm.group();
    let (a, b) = (pair.g_on_h(), pair.h_on_g());
    let (m, n) = (g.order(), h.order());
    let s = |x: Elem, y: Elem| x * n + y;
    let pos = |x, y| letter(s(x, y), false);
    let neg = |x, y| letter(s(x, y), true);
    let mut relators: Vec<Word> = Vec::with_capacity(2 * m * n * (m + n));
    // x ⊗ yy' = (x ⊗ y) ^y(x ⊗ y')
    relators.par_extend((0..m).into_par_iter().flat_map_iter(|x| {
        (0..n).flat_map(move |y| {
            (0..n).map(move |y2| {
                vec![
                    neg(x, h.mul(y, y2)),
                    pos(x, y),
                    pos(b.act(y, x), h.conjugate(y, y2)),
                ]
            })
        })
    }));
    // xx' ⊗ y = ^x(x' ⊗ y) (x ⊗ y)
    relators.par_extend((0..m).into_par_iter().flat_map_iter(|x| {
        (0..m).flat_map(move |x2| {
            (0..n).map(move |y| {
                vec![
                    neg(g.mul(x, x2), y),
                    pos(g.conjugate(x, x2), a.act(x, y)),
                    pos(x, y),
                ]
            })
        })
    }));
    // ((x⋆x') ⊗ ^x' y) (^y x ⊗ ⟨x',y⟩)^-1 (^x x' ⊗ ⟨x,y⟩^-1)^-1
    relators.par_extend((0..m).into_par_iter().flat_map_iter(|x| {
        (0..m).flat_map(move |x2| {
            (0..n).map(move |y| {
                vec![
                    pos(gm.star(x, x2), a.act(x2, y)),
                    neg(b.act(y, x), a.bracket(x2, y)),
                    neg(g.conjugate(x, x2), h.inv(a.bracket(x, y))),
                ]
            })
        })
    }));
    // (^y' x ⊗ y⋆y') (⟨y,x⟩^-1 ⊗ ^y y')^-1 (⟨y',x⟩ ⊗ ^x y)^-1
    relators.par_extend((0..n).into_par_iter().flat_map_iter(|y| {
        (0..n).flat_map(move |y2| {
            (0..m).map(move |x| {
                vec![
                    pos(b.act(y2, x), hm.star(y, y2)),
                    neg(g.inv(b.bracket(y, x)), h.conjugate(y, y2)),
                    neg(b.bracket(y2, x), a.act(x, y)),
                ]
            })
        })
    }));
    Presentation {
        g_order: m,
        h_order: n,
        relators,
    }
}

/// Image of an original generator after simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Image {
    One,
    /// New generator index, and whether the original equals its inverse.
    Gen(usize, bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplified {
    pub generator_count: usize,
    pub relators: Vec<Word>,
    pub images: Vec<Image>,
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    Root,
    One,
    Alias(usize, bool),
}

fn resolve(slots: &[Slot], mut g: usize) -> Option<(usize, bool)> {
    let mut flip = false;
    loop {
        match slots[g] {
            Slot::Root => return Some((g, flip)),
            Slot::One => return None,
            Slot::Alias(t, i) => {
                flip ^= i;
                g = t;
            }
        }
    }
}

fn substitute(slots: &[Slot], w: &[Letter]) -> Word {
    let raw: Word = w
        .iter()
        .filter_map(|&l| resolve(slots, generator_of(l)).map(|(r, f)| letter(r, f ^ is_inverse(l))))
        .collect();
    cyclic_reduce(&raw)
}

/// Removes generators forced trivial or equal to another generator's power by
/// relators of length one or two, then dedupes relators up to rotation and inversion.
pub fn simplify(generator_count: usize, relators: &[Word]) -> Simplified {
    let mut slots = vec![Slot::Root; generator_count];
    let mut current: Vec<Word> = relators.to_vec();
    loop {
        let mut changed = false;
        let mut next = Vec::with_capacity(current.len());
        for w in &current {
            let w = substitute(&slots, w);
            match w.len() {
                0 => {}
                1 => {
                    slots[generator_of(w[0])] = Slot::One;
                    changed = true;
                }
                2 if generator_of(w[0]) != generator_of(w[1]) => {
                    let (x, y) = (generator_of(w[0]), generator_of(w[1]));
                    // x^a y^b = 1  ⇒  x = y^(-ab)
                    let flip = is_inverse(w[0]) == is_inverse(w[1]);
                    let (gone, keep) = if x > y { (x, y) } else { (y, x) };
                    slots[gone] = Slot::Alias(keep, flip);
                    changed = true;
                }
                _ => next.push(w),
            }
        }
        current = next;
        if !changed {
            break;
        }
    }
    let mut seen = HashSet::new();
    let mut roots = vec![usize::MAX; generator_count];
    let mut count = 0;
    for (g, slot) in slots.iter().enumerate() {
        if matches!(slot, Slot::Root) {
            roots[g] = count;
            count += 1;
        }
    }
    let mut out = Vec::new();
    for w in current {
        let w = substitute(&slots, &w);
        if w.is_empty() {
            continue;
        }
        let renamed: Word = w
            .iter()
            .map(|&l| letter(roots[generator_of(l)], is_inverse(l)))
            .collect();
        if seen.insert(canonical_cyclic(&renamed)) {
            out.push(renamed);
        }
    }
    let images = (0..generator_count)
        .map(|g| match resolve(&slots, g) {
            None => Image::One,
            Some((r, f)) => Image::Gen(roots[r], f),
        })
        .collect();
    Simplified {
        generator_count: count,
        relators: out,
        images,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[0, 2, 3, 1]), Vec::<Letter>::new());
        assert_eq!(cyclic_reduce(&[0, 2, 4, 1]), vec![2, 4]);
        assert_eq!(canonical_cyclic(&[4, 2]), vec![2, 4]);
        assert_eq!(canonical_cyclic(&[5, 3]), vec![2, 4]);
    }

    #[test]
    fn simplify_eliminates_short_relators() {
        // a = 1, c = b^-1, c^3 = 1
        let rels = vec![vec![0], vec![2, 4], vec![4, 4, 4]];
        let s = simplify(3, &rels);
        assert_eq!(s.generator_count, 1);
        assert_eq!(s.images[0], Image::One);
        assert_eq!(s.images[1], Image::Gen(0, false));
        assert_eq!(s.images[2], Image::Gen(0, true));
        assert_eq!(s.relators, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn square_relator_is_kept() {
        let s = simplify(1, &[vec![0, 0]]);
        assert_eq!(s.generator_count, 1);
        assert_eq!(s.relators, vec![vec![0, 0]]);
    }
}
