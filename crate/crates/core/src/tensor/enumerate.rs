//! Coset enumeration over the trivial subgroup, Felsch style.

use std::collections::VecDeque;
use std::time::Instant;

use serde::Serialize;

use super::presentation::{cyclic_reduce, generator_of, inv, invert_word, Letter, Word};
use super::TensorError;
use crate::group::{Elem, FiniteGroup};

pub const DEFAULT_MAX_COSETS: usize = 200_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub defined: usize,
    pub collapsed: usize,
    pub max_live: usize,
}

/// The presented group as a Cayley table; element `0` is the identity.
#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub group: FiniteGroup,
    pub gen_image: Vec<Elem>,
    /// A shortest word for each element in the generator letters, BFS order.
    pub words: Vec<Word>,
    pub stats: EnumerationStats,
}

#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    pub deadline: Option<Instant>,
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    rep: Vec<u32>,
    /// Cyclic conjugates of relators and their inverses, keyed by first letter.
    conjugates: Vec<Vec<Word>>,
    deductions: Vec<(u32, Letter)>,
    queue: VecDeque<u32>,
    max_cosets: usize,
    live: usize,
    stats: EnumerationStats,
}

impl Enumerator {
    fn new(generators: usize, relators: &[Word], max_cosets: usize) -> Self {
        let cols = 2 * generators;
        let mut conjugates = vec![Vec::new(); cols];
        let mut seen = std::collections::HashSet::new();
        for r in relators {
            for w in [r.clone(), invert_word(r)] {
                for k in 0..w.len() {
                    let rot: Word = w[k..].iter().chain(&w[..k]).copied().collect();
                    if seen.insert(rot.clone()) {
                        conjugates[rot[0] as usize].push(rot);
                    }
                }
            }
        }
        let mut e = Enumerator {
            cols,
            table: Vec::new(),
            rep: Vec::new(),
            conjugates,
            deductions: Vec::new(),
            queue: VecDeque::new(),
            max_cosets,
            live: 0,
            stats: EnumerationStats::default(),
        };
        e.allocate();
        e
    }

    fn allocate(&mut self) -> u32 {
        let c = self.rep.len() as u32;
        self.rep.push(c);
        self.table.extend(std::iter::repeat(NONE).take(self.cols));
        self.live += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        c
    }

    #[inline]
    fn get(&self, c: u32, x: Letter) -> u32 {
        self.table[c as usize * self.cols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: Letter, d: u32) {
        self.table[c as usize * self.cols + x as usize] = d;
    }

    fn find(&mut self, mut c: u32) -> u32 {
        let mut root = c;
        while self.rep[root as usize] != root {
            root = self.rep[root as usize];
        }
        while self.rep[c as usize] != root {
            let next = self.rep[c as usize];
            self.rep[c as usize] = root;
            c = next;
        }
        root
    }

    fn is_live(&self, c: u32) -> bool {
        self.rep[c as usize] == c
    }

    fn define(&mut self, c: u32, x: Letter) -> Result<(), TensorError> {
        if self.rep.len() >= self.max_cosets {
            return Err(TensorError::CosetCapExceeded {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.allocate();
        self.stats.defined += 1;
        self.set(c, x, d);
        self.set(d, inv(x), c);
        self.deductions.push((c, x));
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        self.rep[gone as usize] = keep;
        self.queue.push_back(gone);
        self.live -= 1;
        self.stats.collapsed += 1;
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(e) = self.queue.pop_front() {
            for x in 0..self.cols as Letter {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, inv(x)) == e {
                    self.set(f, inv(x), NONE);
                }
                let e1 = self.find(e);
                let f1 = self.find(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                    continue;
                }
                let fx = self.get(f1, inv(x));
                if fx != NONE {
                    self.merge(e1, fx);
                    continue;
                }
                self.set(e1, x, f1);
                self.set(f1, inv(x), e1);
                self.deductions.push((e1, x));
            }
        }
    }

    /// Traces a relator conjugate from `c` in both directions, filling a single gap.
    fn scan(&mut self, c: u32, w: &[Letter]) {
        let mut f = c;
        let mut i = 0usize;
        let mut j = w.len();
        while i < j {
            let t = self.get(f, w[i]);
            if t == NONE {
                break;
            }
            f = t;
            i += 1;
        }
        if i == j {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let mut b = c;
        while j > i {
            let t = self.get(b, inv(w[j - 1]));
            if t == NONE {
                break;
            }
            b = t;
            j -= 1;
        }
        if j == i {
            self.coincidence(f, b);
        } else if j == i + 1 {
            self.set(f, w[i], b);
            self.set(b, inv(w[i]), f);
            self.deductions.push((f, w[i]));
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let d = self.get(c, x);
            if d == NONE {
                continue;
            }
            let list = std::mem::take(&mut self.conjugates[x as usize]);
            for w in &list {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, w);
            }
            self.conjugates[x as usize] = list;
            let d = self.find(d);
            let list = std::mem::take(&mut self.conjugates[inv(x) as usize]);
            for w in &list {
                if !self.is_live(d) {
                    break;
                }
                self.scan(d, w);
            }
            self.conjugates[inv(x) as usize] = list;
        }
    }

    fn run(&mut self, opts: &EnumerationOptions) -> Result<(), TensorError> {
        if opts.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(TensorError::DeadlineExceeded);
        }
        // Relators are traced once from the base coset so that words which
        // never need a fresh definition still act.
        let all: Vec<Word> = self.conjugates.iter().flatten().cloned().collect();
        for w in &all {
            self.scan(0, w);
            self.process_deductions();
        }
        let mut c = 0u32;
        let mut steps = 0usize;
        while (c as usize) < self.rep.len() {
            if self.is_live(c) {
                for x in 0..self.cols as Letter {
                    if !self.is_live(c) {
                        break;
                    }
                    if self.get(c, x) == NONE {
                        self.define(c, x)?;
                        self.process_deductions();
                        steps += 1;
                        if steps % 1024 == 0 {
                            if let Some(d) = opts.deadline {
                                if Instant::now() > d {
                                    return Err(TensorError::DeadlineExceeded);
                                }
                            }
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Relabels live cosets in BFS order from the base coset.
    fn compact(&mut self) -> (Vec<u32>, Vec<Word>) {
        let n = self.rep.len();
        let mut index = vec![NONE; n];
        let mut order = vec![0u32];
        let mut words: Vec<Word> = vec![Vec::new()];
        index[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            for x in 0..self.cols as Letter {
                let d = self.get(c, x);
                if index[d as usize] == NONE {
                    index[d as usize] = order.len() as u32;
                    order.push(d);
                    let mut w = words[head].clone();
                    w.push(x);
                    words.push(w);
                }
            }
            head += 1;
        }
        let mut table = vec![0u32; order.len() * self.cols];
        for (i, &c) in order.iter().enumerate() {
            for x in 0..self.cols {
                table[i * self.cols + x] = index[self.get(c, x as Letter) as usize];
            }
        }
        (table, words)
    }
}

/// Enumerates the cosets of the trivial subgroup in `⟨generators | relators⟩`.
pub fn coset_enumerate(
    generators: usize,
    relators: &[Word],
    max_cosets: usize,
    opts: &EnumerationOptions,
) -> Result<EnumerationResult, TensorError> {
    if max_cosets == 0 {
        return Err(TensorError::Input("max_cosets must be at least 1".into()));
    }
    if let Some(w) = relators.iter().find(|w| w.iter().any(|&l| generator_of(l) >= generators)) {
        return Err(TensorError::Input(format!(
            "relator {w:?} uses a letter outside {generators} generators"
        )));
    }
    if generators == 0 {
        if relators.iter().any(|w| !w.is_empty()) {
            return Err(TensorError::Input("relators given without generators".into()));
        }
        return Ok(EnumerationResult {
            group: FiniteGroup::trivial(),
            gen_image: Vec::new(),
            words: vec![Vec::new()],
            stats: EnumerationStats::default(),
        });
    }
    let reduced: Vec<Word> = relators
        .iter()
        .map(|w| cyclic_reduce(w))
        .filter(|w| !w.is_empty())
        .collect();
    let mut e = Enumerator::new(generators, &reduced, max_cosets);
    e.run(opts)?;
    let cols = e.cols;
    let (table, words) = e.compact();
    let n = words.len();
    let at = |c: usize, x: usize| table[c * cols + x] as usize;
    for c in 0..n {
        for w in &reduced {
            let end = w.iter().fold(c, |d, &l| at(d, l as usize));
            if end != c {
                return Err(TensorError::Internal(format!(
                    "relator {w:?} does not close at coset {c}"
                )));
            }
        }
    }
    // Right regular representation: u·v is u followed by the word of v.
    let mut parent = vec![(0usize, 0usize); n];
    for (v, w) in words.iter().enumerate().skip(1) {
        let mut prefix = w.clone();
        let last = prefix.pop().unwrap_or_default() as usize;
        // The parent is the coset reached by the prefix; BFS words are prefix-closed.
        let p = prefix.iter().fold(0usize, |d, &l| at(d, l as usize));
        parent[v] = (p, last);
    }
    let mut mult = vec![0u32; n * n];
    for u in 0..n {
        let row = &mut mult[u * n..(u + 1) * n];
        row[0] = u as u32;
        for v in 1..n {
            let (p, x) = parent[v];
            row[v] = at(row[p] as usize, x) as u32;
        }
    }
    let labels = (0..n)
        .map(|i| if i == 0 { "1".to_string() } else { format!("k{i}") })
        .collect();
    let group = FiniteGroup::from_flat_trusted(labels, mult)?;
    let gen_image = (0..generators).map(|g| at(0, 2 * g)).collect();
    Ok(EnumerationResult {
        group,
        gen_image,
        words,
        stats: e.stats,
    })
}

impl EnumerationResult {
    /// Evaluates a word in the generator letters.
    pub fn eval(&self, w: &[Letter]) -> Elem {
        w.iter().fold(self.group.identity(), |acc, &l| {
            let g = self.gen_image[generator_of(l)];
            let g = if l & 1 == 1 { self.group.inv(g) } else { g };
            self.group.mul(acc, g)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(gens: usize, rels: &[Word]) -> usize {
        coset_enumerate(gens, rels, 10_000, &EnumerationOptions::default())
            .unwrap()
            .group
            .order()
    }

    #[test]
    fn cyclic_and_trivial() {
        assert_eq!(order(1, &[vec![0, 0]]), 2);
        assert_eq!(order(1, &[vec![0]]), 1);
        assert_eq!(order(1, &[vec![0; 7]]), 7);
    }

    #[test]
    fn dihedral_and_symmetric() {
        // a², b³, (ab)²
        assert_eq!(order(2, &[vec![0, 0], vec![2, 2, 2], vec![0, 2, 0, 2]]), 6);
        // a⁴, b², (ab)²
        assert_eq!(order(2, &[vec![0; 4], vec![2, 2], vec![0, 2, 0, 2]]), 8);
    }

    #[test]
    fn relators_close_under_image() {
        let rels = vec![vec![0; 4], vec![0, 0, 3, 3], vec![0, 2, 1, 3, 0, 0, 2, 2]];
        let r = coset_enumerate(2, &rels, 10_000, &EnumerationOptions::default()).unwrap();
        for w in &rels {
            assert_eq!(r.eval(w), r.group.identity());
        }
    }

    #[test]
    fn infinite_group_hits_cap() {
        let err = coset_enumerate(2, &[vec![0, 2, 1, 3]], 500, &EnumerationOptions::default());
        assert!(matches!(err, Err(TensorError::CosetCapExceeded { max_cosets: 500 })));
    }

    #[test]
    fn empty_generator_set() {
        assert!(coset_enumerate(0, &[], 5, &EnumerationOptions::default()).is_ok());
        assert!(coset_enumerate(0, &[vec![0]], 5, &EnumerationOptions::default()).is_err());
    }
}
