//! Realizing `G⊗H`: enumeration, star extension along normal-form words, and
//! induced actions, iterated until every validation passes.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{coset_enumerate, EnumerationOptions, EnumerationStats};
use super::presentation::{build_tensor_presentation, letter, simplify, Image, Word};
use super::{RelatorOrder, SeedOrder, TensorError, TensorOptions};
use crate::action::CompatiblePair;
use crate::group::{Elem, FiniteGroup};
use crate::mla::{axiom_sides, MultLieAlg};
use crate::scan;

/// The algebra acting on `G⊗H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Actor {
    G,
    H,
}

impl fmt::Display for Actor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Actor::G => "G",
            Actor::H => "H",
        })
    }
}

/// Permutation tables of the induced actions, row per acting element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedActions {
    pub g_action: Vec<u32>,
    pub h_action: Vec<u32>,
}

/// `G⊗H` with its tensor map `(g,h) ↦ g⊗h`.
#[derive(Debug, Clone)]
pub struct TensorAlgebra {
    algebra: Arc<MultLieAlg>,
    pair: CompatiblePair,
    tensor_map: Vec<u32>,
    generators: Vec<Elem>,
    generator_symbols: Vec<usize>,
    parent: Vec<(u32, u32)>,
    induced: Option<InducedActions>,
    seed_order: SeedOrder,
    rounds: usize,
    added_relators: Vec<Word>,
    relator_count: usize,
    simplified_generators: usize,
    stats: EnumerationStats,
}

/// One enumeration round: the group plus the normal-form spanning tree.
struct Skeleton {
    group: FiniteGroup,
    symbol_image: Vec<u32>,
    generators: Vec<Elem>,
    generator_symbols: Vec<usize>,
    /// BFS tree: `z = parent(z) · generators[gen(z)]`.
    parent: Vec<(u32, u32)>,
    bfs: Vec<Elem>,
    relator_count: usize,
    simplified_generators: usize,
    stats: EnumerationStats,
}

impl Skeleton {
    fn word(&self, z: Elem) -> Vec<usize> {
        let mut out = Vec::new();
        let mut z = z;
        while z != self.group.identity() {
            let (p, a) = self.parent[z];
            out.push(a as usize);
            z = p as usize;
        }
        out.reverse();
        out
    }

    /// Extends generator images along normal-form words.
    fn extend(&self, image: impl Fn(usize) -> Elem) -> Vec<u32> {
        let k = &self.group;
        let gen_image: Vec<Elem> = (0..self.generators.len()).map(image).collect();
        let mut out = vec![0u32; k.order()];
        out[k.identity()] = k.identity() as u32;
        for &z in &self.bfs[1..] {
            let (p, a) = self.parent[z];
            out[z] = k.mul(out[p as usize] as usize, gen_image[a as usize]) as u32;
        }
        out
    }
}

fn symbol_pairs(pair: &CompatiblePair) -> (usize, usize) {
    (pair.g().order(), pair.h().order())
}

/// The relation defining the star on symbols: `(x⊗y)⋆(x'⊗y') = ⟨y,x⟩^-1 ⊗ ⟨x',y'⟩`.
fn star_symbol(pair: &CompatiblePair, s1: usize, s2: usize) -> usize {
    let n = pair.h().order();
    let (x, y) = (s1 / n, s1 % n);
    let (x2, y2) = (s2 / n, s2 % n);
    let g = pair.g().group();
    g.inv(pair.h_on_g().bracket(y, x)) * n + pair.g_on_h().bracket(x2, y2)
}

fn acted_symbol(pair: &CompatiblePair, actor: Actor, by: Elem, s: usize) -> usize {
    let n = pair.h().order();
    let (x, y) = (s / n, s % n);
    match actor {
        Actor::G => pair.g().group().conjugate(by, x) * n + pair.g_on_h().act(by, y),
        Actor::H => pair.h_on_g().act(by, x) * n + pair.h().group().conjugate(by, y),
    }
}

fn realize(
    pair: &CompatiblePair,
    base: &[Word],
    extra: &[Word],
    opts: &TensorOptions,
) -> Result<Skeleton, TensorError> {
    let (m, n) = symbol_pairs(pair);
    let symbols = m * n;
    let all: Vec<Word> = base.iter().chain(extra).cloned().collect();
    let simplified = simplify(symbols, &all);
    let result = coset_enumerate(
        simplified.generator_count,
        &simplified.relators,
        opts.max_cosets,
        &EnumerationOptions {
            deadline: opts.deadline,
        },
    )?;
    let k = result.group;
    let symbol_image: Vec<u32> = simplified
        .images
        .iter()
        .map(|im| match *im {
            Image::One => k.identity() as u32,
            Image::Gen(i, f) => {
                let e = result.gen_image[i];
                (if f { k.inv(e) } else { e }) as u32
            }
        })
        .collect();
    let mut rep: HashMap<u32, usize> = HashMap::new();
    for (s, &e) in symbol_image.iter().enumerate() {
        if e as usize == k.identity() {
            continue;
        }
        let slot = rep.entry(e).or_insert(s);
        if opts.seed_order == SeedOrder::Alt {
            *slot = s;
        }
    }
    let mut reps: Vec<(usize, u32)> = rep.into_iter().map(|(e, s)| (s, e)).collect();
    reps.sort_unstable();
    if opts.seed_order == SeedOrder::Alt {
        reps.reverse();
    }
    let generator_symbols: Vec<usize> = reps.iter().map(|&(s, _)| s).collect();
    let generators: Vec<Elem> = reps.iter().map(|&(_, e)| e as usize).collect();
    let order = k.order();
    let mut parent = vec![(u32::MAX, u32::MAX); order];
    let mut seen = vec![false; order];
    let mut bfs = vec![k.identity()];
    seen[k.identity()] = true;
    let mut queue = VecDeque::from([k.identity()]);
    while let Some(z) = queue.pop_front() {
        for (a, &gen) in generators.iter().enumerate() {
            let w = k.mul(z, gen);
            if !seen[w] {
                seen[w] = true;
                parent[w] = (z as u32, a as u32);
                bfs.push(w);
                queue.push_back(w);
            }
        }
    }
    if bfs.len() != order {
        return Err(TensorError::Internal(
            "symbol images do not generate the enumerated group".into(),
        ));
    }
    Ok(Skeleton {
        group: k,
        symbol_image,
        generators,
        generator_symbols,
        parent,
        bfs,
        relator_count: all.len(),
        simplified_generators: simplified.generator_count,
        stats: result.stats,
    })
}

/// Star on `K` from the symbol relation, expanded right by axiom (2) and left by axiom (3).
fn extend_star(sk: &Skeleton, pair: &CompatiblePair) -> Vec<u32> {
    let k = &sk.group;
    let n = k.order();
    let e = k.identity();
    let gens = sk.generators.len();
    let base: Vec<Vec<Elem>> = (0..gens)
        .map(|a| {
            (0..gens)
                .map(|b| {
                    let s = star_symbol(pair, sk.generator_symbols[a], sk.generator_symbols[b]);
                    sk.symbol_image[s] as usize
                })
                .collect()
        })
        .collect();
    // right[a][z] = gen_a ⋆ z
    let right: Vec<Vec<Elem>> = (0..gens)
        .into_par_iter()
        .map(|a| {
            let mut row = vec![e; n];
            for &z in &sk.bfs[1..] {
                let (p, t) = sk.parent[z];
                let p = p as usize;
                row[z] = k.mul(row[p], k.conjugate(p, base[a][t as usize]));
            }
            row
        })
        .collect();
    let mut star = vec![e as u32; n * n];
    for &z in &sk.bfs[1..] {
        let (p, t) = sk.parent[z];
        let p = p as usize;
        for w in 0..n {
            let v = k.mul(k.conjugate(p, right[t as usize][w]), star[p * n + w] as usize);
            star[z * n + w] = v as u32;
        }
    }
    star
}

/// Distinct nontrivial `lhs·rhs^-1` over a tuple box, plus the least failing tuple.
fn collect_defects(
    k: &FiniteGroup,
    dims: &[usize],
    sides: impl Fn(&[Elem]) -> (Elem, Elem) + Sync,
) -> (BTreeSet<Elem>, Option<Vec<Elem>>) {
    if dims.iter().any(|&d| d == 0) {
        return (BTreeSet::new(), None);
    }
    let len = dims.len();
    (0..dims[0])
        .into_par_iter()
        .map(|first| {
            let mut set = BTreeSet::new();
            let mut least = None;
            let mut t = vec![0usize; len];
            t[0] = first;
            loop {
                let (l, r) = sides(&t);
                if l != r {
                    set.insert(k.mul(l, k.inv(r)));
                    if least.is_none() {
                        least = Some(t.clone());
                    }
                }
                let mut pos = len;
                loop {
                    if pos <= 1 {
                        return (set, least);
                    }
                    pos -= 1;
                    t[pos] += 1;
                    if t[pos] < dims[pos] {
                        break;
                    }
                    t[pos] = 0;
                }
            }
        })
        .reduce(
            || (BTreeSet::new(), None),
            |(mut a, la), (b, lb)| {
                a.extend(b);
                let least = match (la, lb) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                };
                (a, least)
            },
        )
}

#[derive(Default)]
struct Defects {
    kernel: BTreeSet<Elem>,
    first: Option<(String, Vec<Elem>)>,
}

impl Defects {
    fn absorb(&mut self, check: impl Into<String>, found: (BTreeSet<Elem>, Option<Vec<Elem>>)) {
        let (set, least) = found;
        if self.first.is_none() {
            if let Some(w) = least {
                self.first = Some((check.into(), w));
            }
        }
        self.kernel.extend(set);
    }
}

fn star_defects(sk: &Skeleton, star: &[u32], pair: &CompatiblePair, out: &mut Defects) {
    let k = &sk.group;
    let n = k.order();
    let st = |a: Elem, b: Elem| star[a * n + b] as usize;
    let symbols = sk.symbol_image.len();
    out.absorb(
        "star on symbols",
        collect_defects(k, &[symbols, symbols], |t| {
            let lhs = st(sk.symbol_image[t[0]] as usize, sk.symbol_image[t[1]] as usize);
            (lhs, sk.symbol_image[star_symbol(pair, t[0], t[1])] as usize)
        }),
    );
    let e = k.identity() as u32;
    if star.iter().all(|&v| v == e) {
        return;
    }
    out.absorb(
        "axiom 1",
        collect_defects(k, &[n], |t| axiom_sides(k, st, 1, [t[0], 0, 0])),
    );
    // Axioms (2), (3) and (5) propagate along words, so one generator slot suffices.
    let gens = &sk.generators;
    let g = gens.len();
    let slot = |axiom: u8| match axiom {
        3 => 0,
        _ => 2,
    };
    for axiom in 2..=5u8 {
        let mut dims = [n, n, n];
        if axiom != 4 {
            dims[slot(axiom)] = g;
        }
        let (set, least) = collect_defects(k, &dims, |t| {
            let mut x = [t[0], t[1], t[2]];
            if axiom != 4 {
                x[slot(axiom)] = gens[x[slot(axiom)]];
            }
            axiom_sides(k, st, axiom, x)
        });
        let least = least.map(|mut w| {
            if axiom != 4 {
                w[slot(axiom)] = gens[w[slot(axiom)]];
            }
            w
        });
        out.absorb(format!("axiom {axiom}"), (set, least));
    }
}

fn action_tables(sk: &Skeleton, pair: &CompatiblePair) -> InducedActions {
    let table = |actor: Actor, count: usize| -> Vec<u32> {
        (0..count)
            .into_par_iter()
            .flat_map_iter(|by| {
                sk.extend(|a| {
                    let s = acted_symbol(pair, actor, by, sk.generator_symbols[a]);
                    sk.symbol_image[s] as usize
                })
            })
            .collect()
    };
    InducedActions {
        g_action: table(Actor::G, pair.g().order()),
        h_action: table(Actor::H, pair.h().order()),
    }
}

/// Defects of one induced action, named after the failing check.
fn actor_defects(
    k: &FiniteGroup,
    symbol_image: &[u32],
    star: &[u32],
    pair: &CompatiblePair,
    actor: Actor,
    rows: &[u32],
    out: &mut Defects,
) {
    let n = k.order();
    let (count, actor_group) = match actor {
        Actor::G => (pair.g().order(), pair.g().group()),
        Actor::H => (pair.h().order(), pair.h().group()),
    };
    let act = |by: Elem, z: Elem| rows[by * n + z] as usize;
    let st = |a: Elem, b: Elem| star[a * n + b] as usize;
    let symbols = symbol_image.len();
    out.absorb(
        format!("{actor} action on symbols"),
        collect_defects(k, &[count, symbols], |t| {
            let lhs = act(t[0], symbol_image[t[1]] as usize);
            (lhs, symbol_image[acted_symbol(pair, actor, t[0], t[1])] as usize)
        }),
    );
    out.absorb(
        format!("{actor} action multiplicativity"),
        collect_defects(k, &[count, n, n], |t| {
            (act(t[0], k.mul(t[1], t[2])), k.mul(act(t[0], t[1]), act(t[0], t[2])))
        }),
    );
    out.absorb(
        format!("{actor} action star preservation"),
        collect_defects(k, &[count, n, n], |t| {
            (act(t[0], st(t[1], t[2])), st(act(t[0], t[1]), act(t[0], t[2])))
        }),
    );
    out.absorb(
        format!("{actor} action composition"),
        collect_defects(k, &[count, count, n], |t| {
            (act(actor_group.mul(t[0], t[1]), t[2]), act(t[0], act(t[1], t[2])))
        }),
    );
}

fn trivial_algebra(pair: &CompatiblePair, seed_order: SeedOrder) -> TensorAlgebra {
    let (m, n) = symbol_pairs(pair);
    TensorAlgebra {
        algebra: Arc::new(MultLieAlg::trivial(FiniteGroup::trivial())),
        pair: pair.clone(),
        tensor_map: vec![0; m * n],
        generators: Vec::new(),
        generator_symbols: Vec::new(),
        parent: vec![(u32::MAX, u32::MAX)],
        induced: Some(InducedActions {
            g_action: vec![0; m],
            h_action: vec![0; n],
        }),
        seed_order,
        rounds: 0,
        added_relators: Vec::new(),
        relator_count: 0,
        simplified_generators: 0,
        stats: EnumerationStats::default(),
    }
}

fn fixpoint(
    pair: &CompatiblePair,
    opts: &TensorOptions,
    with_actions: bool,
) -> Result<TensorAlgebra, TensorError> {
    if opts.max_rounds == 0 {
        return Err(TensorError::Input("max_rounds must be at least 1".into()));
    }
    if pair.g().order() == 1 || pair.h().order() == 1 {
        return Ok(trivial_algebra(pair, opts.seed_order));
    }
    let mut base = build_tensor_presentation(pair).relators;
    if opts.relator_order == RelatorOrder::Reversed {
        base.reverse();
    }
    let mut extra: Vec<Word> = Vec::new();
    for round in 1..=opts.max_rounds {
        let sk = realize(pair, &base, &extra, opts)?;
        let star = extend_star(&sk, pair);
        let mut defects = Defects::default();
        star_defects(&sk, &star, pair, &mut defects);
        let actions = with_actions.then(|| action_tables(&sk, pair));
        if let Some(a) = &actions {
            for (actor, rows) in [(Actor::G, &a.g_action), (Actor::H, &a.h_action)] {
                actor_defects(&sk.group, &sk.symbol_image, &star, pair, actor, rows, &mut defects);
            }
        }
        if defects.kernel.is_empty() {
            return Ok(TensorAlgebra {
                algebra: Arc::new(MultLieAlg::from_flat_trusted(sk.group, star)),
                pair: pair.clone(),
                tensor_map: sk.symbol_image,
                generators: sk.generators,
                generator_symbols: sk.generator_symbols,
                parent: sk.parent,
                induced: actions,
                seed_order: opts.seed_order,
                rounds: round,
                added_relators: extra,
                relator_count: sk.relator_count,
                simplified_generators: sk.simplified_generators,
                stats: sk.stats,
            });
        }
        if round == opts.max_rounds {
            let (check, witness) = defects.first.unwrap_or_default();
            return Err(TensorError::StarInconsistent {
                rounds: round,
                check,
                witness,
            });
        }
        for z in defects.kernel {
            extra.push(
                sk.word(z)
                    .into_iter()
                    .map(|a| letter(sk.generator_symbols[a], false))
                    .collect(),
            );
        }
    }
    unreachable!("loop returns on its last round")
}

/// Realizes `G⊗H` with its star, completing the presentation until the star
/// axioms and the symbol relation hold.
pub fn induce_star(pair: &CompatiblePair, opts: &TensorOptions) -> Result<TensorAlgebra, TensorError> {
    let mut t = fixpoint(pair, opts, false)?;
    t.induced = None;
    Ok(t)
}

/// Installs the actions of `G` and `H` on `G⊗H` and checks that each is a
/// star-preserving automorphism action.
pub fn induce_actions(mut t: TensorAlgebra) -> Result<TensorAlgebra, TensorError> {
    if t.order() == 1 {
        t.induced = trivial_algebra(&t.pair, t.seed_order).induced;
        return Ok(t);
    }
    let k = t.algebra.group();
    let sk = Skeleton {
        group: k.clone(),
        symbol_image: t.tensor_map.clone(),
        generators: t.generators.clone(),
        generator_symbols: t.generator_symbols.clone(),
        parent: t.parent.clone(),
        bfs: t.bfs_order(),
        relator_count: t.relator_count,
        simplified_generators: t.simplified_generators,
        stats: t.stats,
    };
    let tables = action_tables(&sk, &t.pair);
    let star = t.algebra.star_flat();
    for (actor, rows) in [(Actor::G, &tables.g_action), (Actor::H, &tables.h_action)] {
        let mut defects = Defects::default();
        actor_defects(k, &t.tensor_map, star, &t.pair, actor, rows, &mut defects);
        if let Some((check, witness)) = defects.first {
            let check = match check.rsplit_once(" action ").map(|(_, c)| c) {
                Some("on symbols") => "symbol images",
                Some("multiplicativity") => "multiplicativity",
                Some("star preservation") => "star preservation",
                _ => "composition",
            };
            return Err(TensorError::InducedActionIllDefined {
                actor,
                check,
                witness,
            });
        }
        let n = k.order();
        for by in 0..rows.len() / n {
            let mut hit = vec![false; n];
            for z in 0..n {
                hit[rows[by * n + z] as usize] = true;
            }
            if let Some(z) = hit.iter().position(|&h| !h) {
                return Err(TensorError::InducedActionIllDefined {
                    actor,
                    check: "bijectivity",
                    witness: vec![by, z],
                });
            }
        }
    }
    t.induced = Some(tables);
    Ok(t)
}

/// Full construction: star, induced actions, and all their validations.
pub fn tensor_product(pair: &CompatiblePair, opts: &TensorOptions) -> Result<TensorAlgebra, TensorError> {
    let mut t = fixpoint(pair, opts, true)?;
    t.induced = None;
    induce_actions(t)
}

impl TensorAlgebra {
    pub fn algebra(&self) -> &Arc<MultLieAlg> {
        &self.algebra
    }

    pub fn group(&self) -> &FiniteGroup {
        self.algebra.group()
    }

    pub fn order(&self) -> usize {
        self.algebra.order()
    }

    pub fn pair(&self) -> &CompatiblePair {
        &self.pair
    }

    /// `g⊗h` as an element of the realized algebra.
    #[inline]
    pub fn tensor(&self, g: Elem, h: Elem) -> Elem {
        self.tensor_map[g * self.pair.h().order() + h] as usize
    }

    pub fn tensor_map(&self) -> Vec<Vec<Elem>> {
        let n = self.pair.h().order();
        self.tensor_map
            .chunks(n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn star(&self, a: Elem, b: Elem) -> Elem {
        self.algebra.star(a, b)
    }

    pub fn induced(&self) -> Option<&InducedActions> {
        self.induced.as_ref()
    }

    /// `^g k` for `g ∈ G`.
    pub fn g_act(&self, g: Elem, k: Elem) -> Elem {
        let t = self.induced.as_ref().expect("induced actions installed");
        t.g_action[g * self.order() + k] as usize
    }

    /// `^h k` for `h ∈ H`.
    pub fn h_act(&self, h: Elem, k: Elem) -> Elem {
        let t = self.induced.as_ref().expect("induced actions installed");
        t.h_action[h * self.order() + k] as usize
    }

    /// Generators of the realized group with the symbol representing each.
    pub fn generators(&self) -> impl Iterator<Item = (Elem, (Elem, Elem))> + '_ {
        let n = self.pair.h().order();
        self.generators
            .iter()
            .zip(&self.generator_symbols)
            .map(move |(&e, &s)| (e, (s / n, s % n)))
    }

    /// Normal-form word of `z` as a sequence of symbols `(g,h)`.
    pub fn normal_form(&self, z: Elem) -> Vec<(Elem, Elem)> {
        let n = self.pair.h().order();
        let mut out = Vec::new();
        let mut z = z;
        while z != self.group().identity() {
            let (p, a) = self.parent[z];
            let s = self.generator_symbols[a as usize];
            out.push((s / n, s % n));
            z = p as usize;
        }
        out.reverse();
        out
    }

    fn bfs_order(&self) -> Vec<Elem> {
        let k = self.group();
        let mut depth = vec![0usize; k.order()];
        let mut order: Vec<Elem> = k.elements().collect();
        for z in k.elements() {
            depth[z] = self.normal_form(z).len();
        }
        order.sort_by_key(|&z| (depth[z], z));
        order
    }

    /// Evaluates every defining relator under the tensor map and the star
    /// relation on every pair of symbols; returns the number of checks.
    pub fn verify_relations(&self) -> Result<u64, TensorError> {
        let k = self.group();
        let (m, n) = symbol_pairs(&self.pair);
        let p = build_tensor_presentation(&self.pair);
        let value = |l: u32| {
            let v = self.tensor_map[(l >> 1) as usize] as usize;
            if l & 1 == 1 {
                k.inv(v)
            } else {
                v
            }
        };
        let blocks = [m * n * n, m * m * n, m * m * n, n * n * m];
        let bad = scan::first_failing_index(p.relators.len(), |i| {
            k.product(p.relators[i].iter().map(|&l| value(l))) == k.identity()
        });
        if let Some(mut i) = bad {
            let mut block = 0;
            while i >= blocks[block] {
                i -= blocks[block];
                block += 1;
            }
            let inner = if block == 3 { m } else { n };
            let mid = if block == 0 || block == 3 { n } else { m };
            return Err(TensorError::IdentityViolation {
                which: format!("defining relation {}", block + 1),
                witness: vec![i / (mid * inner), (i / inner) % mid, i % inner],
            });
        }
        let symbols = m * n;
        if let Some(w) = scan::first_failure(&[symbols, symbols], |t| {
            let lhs = self.star(self.tensor_map[t[0]] as usize, self.tensor_map[t[1]] as usize);
            lhs == self.tensor_map[star_symbol(&self.pair, t[0], t[1])] as usize
        }) {
            return Err(TensorError::IdentityViolation {
                which: "star on symbols".into(),
                witness: vec![w[0] / n, w[0] % n, w[1] / n, w[1] % n],
            });
        }
        Ok(p.relators.len() as u64 + (symbols * symbols) as u64)
    }

    pub fn seed_order(&self) -> SeedOrder {
        self.seed_order
    }

    /// Enumeration rounds used; 0 when the result is trivial by shortcut.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Relators over symbols added by the completion loop.
    pub fn added_relators(&self) -> Vec<Vec<(Elem, Elem)>> {
        let n = self.pair.h().order();
        self.added_relators
            .iter()
            .map(|w| w.iter().map(|&l| ((l >> 1) as usize / n, (l >> 1) as usize % n)).collect())
            .collect()
    }

    pub fn relator_count(&self) -> usize {
        self.relator_count
    }

    pub fn simplified_generators(&self) -> usize {
        self.simplified_generators
    }

    pub fn stats(&self) -> EnumerationStats {
        self.stats
    }
}
