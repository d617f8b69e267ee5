//! The λ/ρ word calculus, the pair-step graph, Mal'cev nilpotency with
//! class and witness extraction, η-pairs, the Neumann-Taylor and
//! positively-Engel identities, and Freni's γ*.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::semigroup::{congruence_closure, Congruence, FiniteSemigroup};

/// A value for a z-position: an element of S, or the formal identity of
/// S¹ which multiplies as omission.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ZSymbol {
    Skip,
    Elem(usize),
}

/// One step of the recursion: (x,y) ↦ (x∘z∘y, y∘z∘x).
pub fn pair_step(s: &FiniteSemigroup, pair: (usize, usize), z: ZSymbol) -> (usize, usize) {
    let (x, y) = pair;
    match z {
        ZSymbol::Skip => (s.prod(x, y), s.prod(y, x)),
        ZSymbol::Elem(c) => (s.prod(s.prod(x, c), y), s.prod(s.prod(y, c), x)),
    }
}

/// (λ_n, ρ_n) from seeds x,y along a word of z-symbols.
pub fn lambda_rho(
    s: &FiniteSemigroup,
    x: usize,
    y: usize,
    word: &[ZSymbol],
) -> (usize, usize) {
    word.iter().fold((x, y), |p, &z| pair_step(s, p, z))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilpotencyWitness {
    pub x: usize,
    pub y: usize,
    pub word: Vec<ZSymbol>,
}

impl NilpotencyWitness {
    /// Re-check the defining property: λ_m(x,y,word) = x, ρ_m = y.
    pub fn is_valid(&self, s: &FiniteSemigroup) -> bool {
        self.x != self.y && lambda_rho(s, self.x, self.y, &self.word) == (self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FailureWitness {
    /// A pair returning to itself: disproves nilpotency outright.
    Cycle(NilpotencyWitness),
    /// Non-diagonal pairs in the repeated state of a stalled iteration.
    StuckPairs(Vec<(usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub verdict: bool,
    pub class_n: Option<usize>,
    pub witness: Option<FailureWitness>,
}

/// The directed pair-step graph on ordered pairs; node id x*N + y.
pub struct PairGraph {
    pub n: usize,
    /// adjacency: for each node, its n+1 successors (Skip first, then the
    /// elements in id order)
    pub succ: Vec<Vec<usize>>,
}

pub fn pair_graph(s: &FiniteSemigroup) -> PairGraph {
    let n = s.order();
    let mut succ = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut out = Vec::with_capacity(n + 1);
            let (a, b) = pair_step(s, (x, y), ZSymbol::Skip);
            out.push(a * n + b);
            for c in 0..n {
                let (a, b) = pair_step(s, (x, y), ZSymbol::Elem(c));
                out.push(a * n + b);
            }
            succ.push(out);
        }
    }
    PairGraph { n, succ }
}

/// Iterative Tarjan SCC. Returns the component id of every node, with
/// components numbered in reverse topological order of discovery.
fn tarjan_scc(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut next_index = 0usize;
    let mut next_comp = 0usize;
    // explicit call stack: (node, next successor position)
    let mut call: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        call.push((start, 0));
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < succ[v].len() {
                let w = succ[v][*pos];
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// Nodes of the pair graph lying on a cycle: SCC of size > 1, or a
/// self-loop.
fn cyclic_nodes(g: &PairGraph) -> Vec<bool> {
    let comp = tarjan_scc(&g.succ);
    let mut size: HashMap<usize, usize> = HashMap::new();
    for &c in &comp {
        *size.entry(c).or_insert(0) += 1;
    }
    (0..g.succ.len())
        .map(|v| size[&comp[v]] > 1 || g.succ[v].contains(&v))
        .collect()
}

/// All pairs (x,y) with x η_n y for some n: the diagonal (trivially),
/// plus every non-diagonal pair on a cycle of the pair graph.
pub fn eta_pairs(s: &FiniteSemigroup) -> Vec<(usize, usize)> {
    let g = pair_graph(s);
    let cyc = cyclic_nodes(&g);
    let n = s.order();
    let mut out: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
    for x in 0..n {
        for y in 0..n {
            if x != y && cyc[x * n + y] {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out
}

type Bitset = Vec<u64>;

fn bitset_new(bits: usize) -> Bitset {
    vec![0u64; bits.div_ceil(64)]
}

fn bitset_set(b: &mut Bitset, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bitset_get(b: &Bitset, i: usize) -> bool {
    b[i / 64] & (1 << (i % 64)) != 0
}

/// Step a set of pairs by every z-symbol at once.
fn step_set(g: &PairGraph, set: &Bitset) -> Bitset {
    let total = g.n * g.n;
    let mut out = bitset_new(total);
    for v in 0..total {
        if bitset_get(set, v) {
            for &w in &g.succ[v] {
                bitset_set(&mut out, w);
            }
        }
    }
    out
}

fn is_diagonal(g: &PairGraph, set: &Bitset) -> bool {
    let n = g.n;
    for x in 0..n {
        for y in 0..n {
            if x != y && bitset_get(set, x * n + y) {
                return false;
            }
        }
    }
    true
}

fn nondiagonal_pairs(g: &PairGraph, set: &Bitset) -> Vec<(usize, usize)> {
    let n = g.n;
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && bitset_get(set, x * n + y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Mal'cev nilpotency by set iteration: P_0 = all pairs, P_{k+1} =
/// one-step image of P_k. Nilpotent iff some P_k is inside the diagonal;
/// the iteration stalls (revisits a state) otherwise.
pub fn is_malcev_nilpotent(s: &FiniteSemigroup) -> IdentityReport {
    let g = pair_graph(s);
    let total = g.n * g.n;
    let mut set = bitset_new(total);
    for v in 0..total {
        bitset_set(&mut set, v);
    }
    let cap = 2 * (total + 1);
    let mut seen: HashSet<Bitset> = HashSet::new();
    let mut k = 0usize;
    loop {
        if is_diagonal(&g, &set) {
            // upward closure sanity: once inside the diagonal, stay there
            debug_assert!(is_diagonal(&g, &step_set(&g, &set)));
            return IdentityReport {
                verdict: true,
                class_n: Some(k.max(1)),
                witness: None,
            };
        }
        if !seen.insert(set.clone()) || seen.len() > cap {
            let witness = nonnilpotent_witness(s).map(FailureWitness::Cycle);
            debug_assert!(witness.is_some());
            return IdentityReport {
                verdict: false,
                class_n: None,
                witness,
            };
        }
        set = step_set(&g, &set);
        k += 1;
    }
}

/// A non-nilpotency witness: a distinct pair (x,y) and a word returning it to
/// itself; present iff S is not nilpotent. The least such pair is used
/// and its word is a shortest cycle.
pub fn nonnilpotent_witness(s: &FiniteSemigroup) -> Option<NilpotencyWitness> {
    let g = pair_graph(s);
    let cyc = cyclic_nodes(&g);
    let n = s.order();
    let start = (0..n * n).find(|&v| cyc[v] && v / n != v % n)?;
    // BFS for the shortest path start -> start, recording the symbol taken
    let total = n * n;
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; total]; // (prev node, symbol idx)
    let mut queue = VecDeque::new();
    queue.push_back(start);
    let mut found = false;
    'bfs: while let Some(v) = queue.pop_front() {
        for (zi, &w) in g.succ[v].iter().enumerate() {
            if w == start {
                pred[start] = Some((v, zi));
                found = true;
                break 'bfs;
            }
            if pred[w].is_none() && w != start {
                pred[w] = Some((v, zi));
                queue.push_back(w);
            }
        }
    }
    if !found {
        return None; // unreachable when cyc[start]
    }
    let mut word_rev: Vec<ZSymbol> = Vec::new();
    let mut cur = start;
    loop {
        let (prev, zi) = pred[cur].unwrap();
        word_rev.push(if zi == 0 {
            ZSymbol::Skip
        } else {
            ZSymbol::Elem(zi - 1)
        });
        cur = prev;
        if cur == start {
            break;
        }
    }
    word_rev.reverse();
    let w = NilpotencyWitness {
        x: start / n,
        y: start % n,
        word: word_rev,
    };
    debug_assert!(w.is_valid(s));
    Some(w)
}

/// Neumann-Taylor: λ_n(a,b,1,c_2,…,c_n) = ρ_n(…) for some n ≥ 2. The
/// first z-position is forced to Skip, the rest are free.
pub fn is_neumann_taylor(s: &FiniteSemigroup) -> IdentityReport {
    let g = pair_graph(s);
    let total = g.n * g.n;
    // P_1: apply the forced Skip to every seed pair
    let mut set = bitset_new(total);
    for x in 0..g.n {
        for y in 0..g.n {
            let (a, b) = pair_step(s, (x, y), ZSymbol::Skip);
            bitset_set(&mut set, a * g.n + b);
        }
    }
    let mut seen: HashSet<Bitset> = HashSet::new();
    let mut k = 1usize;
    loop {
        if k >= 2 && is_diagonal(&g, &set) {
            return IdentityReport {
                verdict: true,
                class_n: Some(k),
                witness: None,
            };
        }
        if !seen.insert(set.clone()) {
            return IdentityReport {
                verdict: false,
                class_n: None,
                witness: Some(FailureWitness::StuckPairs(nondiagonal_pairs(&g, &set))),
            };
        }
        set = step_set(&g, &set);
        k += 1;
    }
}

/// Positively Engel: λ_n(a,b,1,1,c,c²,…,c^{n−2}) = ρ_n(…) for some n ≥ 3
/// and every c. Each c is iterated separately with the prescribed power
/// schedule; the verdict is the conjunction.
pub fn is_positively_engel(s: &FiniteSemigroup) -> IdentityReport {
    let g = pair_graph(s);
    let total = g.n * g.n;
    let mut worst_n = 0usize;
    for c in std::iter::once(None).chain((0..g.n).map(Some)) {
        // Q_2: two forced Skips applied to all seed pairs
        let mut set = bitset_new(total);
        for x in 0..g.n {
            for y in 0..g.n {
                let p = pair_step(s, (x, y), ZSymbol::Skip);
                let (a, b) = pair_step(s, p, ZSymbol::Skip);
                bitset_set(&mut set, a * g.n + b);
            }
        }
        // power = c^{k-1} used for the step from n=k+1 to n=k+2; starts
        // at c^1 for the step into n=3
        let mut power: Option<usize> = c;
        let mut k = 2usize;
        let mut seen: HashSet<(Bitset, Option<usize>)> = HashSet::new();
        let n_c = loop {
            if is_diagonal(&g, &set) {
                break Some(k);
            }
            if !seen.insert((set.clone(), power)) {
                break None;
            }
            let z = match power {
                None => ZSymbol::Skip,
                Some(p) => ZSymbol::Elem(p),
            };
            let mut next = bitset_new(total);
            for v in 0..total {
                if bitset_get(&set, v) {
                    let (a, b) = pair_step(s, (v / g.n, v % g.n), z);
                    bitset_set(&mut next, a * g.n + b);
                }
            }
            set = next;
            power = match (power, c) {
                (Some(p), Some(cc)) => Some(s.prod(p, cc)),
                _ => None,
            };
            k += 1;
        };
        match n_c {
            Some(nc) => worst_n = worst_n.max(nc),
            None => {
                return IdentityReport {
                    verdict: false,
                    class_n: None,
                    witness: Some(FailureWitness::StuckPairs(nondiagonal_pairs(&g, &set))),
                }
            }
        }
    }
    IdentityReport {
        verdict: true,
        class_n: Some(worst_n),
        witness: None,
    }
}

/// Freni's γ*: the smallest congruence with commutative quotient.
pub fn gamma_star(s: &FiniteSemigroup) -> Congruence {
    let mut pairs = Vec::new();
    for x in s.elements() {
        for y in s.elements() {
            pairs.push((s.prod(x, y), s.prod(y, x)));
        }
    }
    let c = congruence_closure(s, &pairs);
    debug_assert!({
        let (q, _) = crate::semigroup::quotient(s, &c);
        q.is_commutative()
    });
    c
}
