//! Finite semigroups as Cayley tables, partitions, congruences, quotients
//! and isomorphism testing.
//!
//! Elements are dense 0-based ids; labels are presentation-only.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite semigroup given by its multiplication table.
///
/// Immutable after validation; every operation on it is a pure function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>, // row-major, table[i*order + j] = i*j
    labels: Option<Vec<String>>,
    zero: Option<usize>,
    identity: Option<usize>,
}

impl FiniteSemigroup {
    /// Validate a table and build a semigroup. Zero and identity are
    /// detected, never assumed.
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Invalid(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat, labels)
    }

    pub fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Invalid("order must be at least 1".into()));
        }
        if table.len() != order * order {
            return Err(Error::Invalid("table size does not match order".into()));
        }
        for i in 0..order {
            for j in 0..order {
                let v = table[i * order + j];
                if v >= order {
                    return Err(Error::IndexOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order,
                    });
                }
            }
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(Error::Invalid("label count does not match order".into()));
            }
        }
        // associativity over all order^3 triples, reporting the first violation
        for i in 0..order {
            for j in 0..order {
                let ij = table[i * order + j];
                for k in 0..order {
                    let jk = table[j * order + k];
                    if table[ij * order + k] != table[i * order + jk] {
                        return Err(Error::Associativity { i, j, k });
                    }
                }
            }
        }
        let zero = (0..order).find(|&z| (0..order).all(|x| table[z * order + x] == z && table[x * order + z] == z));
        let identity =
            (0..order).find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x));
        Ok(FiniteSemigroup {
            order,
            table,
            labels,
            zero,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    /// Fold a product over a nonempty sequence of element ids.
    pub fn prod_all<I: IntoIterator<Item = usize>>(&self, elems: I) -> Option<usize> {
        let mut it = elems.into_iter();
        let first = it.next()?;
        Some(it.fold(first, |acc, x| self.prod(acc, x)))
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.prod(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (x..self.order).all(|y| self.prod(x, y) == self.prod(y, x)))
    }

    /// (index, period) of the monogenic subsemigroup of `x`.
    pub fn index_period(&self, x: usize) -> (usize, usize) {
        let mut seen = vec![usize::MAX; self.order];
        let mut cur = x;
        let mut step = 1;
        loop {
            if seen[cur] != usize::MAX {
                let index = seen[cur];
                return (index, step - index);
            }
            seen[cur] = step;
            cur = self.prod(cur, x);
            step += 1;
        }
    }

    /// Restrict to a product-closed subset, reindexing to 0..k-1 in the
    /// order given by the sorted subset. Returns the subsemigroup and the
    /// map from new ids to ambient ids.
    pub fn subsemigroup(&self, elems: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let mut sorted: Vec<usize> = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut back = vec![usize::MAX; self.order];
        for (new, &old) in sorted.iter().enumerate() {
            back[old] = new;
        }
        let k = sorted.len();
        let mut flat = vec![0usize; k * k];
        for i in 0..k {
            for j in 0..k {
                let p = self.prod(sorted[i], sorted[j]);
                if back[p] == usize::MAX {
                    return Err(Error::Invalid(format!(
                        "subset not closed: {} * {} = {} escapes",
                        sorted[i], sorted[j], p
                    )));
                }
                flat[i * k + j] = back[p];
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| sorted.iter().map(|&x| l[x].clone()).collect());
        Ok((FiniteSemigroup::from_flat(k, flat, labels)?, sorted))
    }

    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let n = self.order * other.order;
        let id = |a: usize, b: usize| a * other.order + b;
        let mut flat = vec![0usize; n * n];
        for a in 0..self.order {
            for b in 0..other.order {
                for c in 0..self.order {
                    for d in 0..other.order {
                        flat[id(a, b) * n + id(c, d)] = id(self.prod(a, c), other.prod(b, d));
                    }
                }
            }
        }
        FiniteSemigroup::from_flat(n, flat, None).expect("product of semigroups is associative")
    }

    /// Rees quotient: collapse a nonempty two-sided ideal to a single zero.
    /// Returns the quotient and the map from ambient ids to quotient ids.
    pub fn rees_quotient(&self, ideal: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let mut in_ideal = vec![false; self.order];
        for &x in ideal {
            in_ideal[x] = true;
        }
        if ideal.is_empty() {
            return Err(Error::Invalid("Rees quotient of empty ideal".into()));
        }
        for &x in ideal {
            for s in 0..self.order {
                if !in_ideal[self.prod(s, x)] || !in_ideal[self.prod(x, s)] {
                    return Err(Error::Invalid("subset is not a two-sided ideal".into()));
                }
            }
        }
        let outside: Vec<usize> = (0..self.order).filter(|&x| !in_ideal[x]).collect();
        let k = outside.len() + 1; // adjoined theta is the last id
        let theta = k - 1;
        let mut fwd = vec![theta; self.order];
        for (new, &old) in outside.iter().enumerate() {
            fwd[old] = new;
        }
        let mut flat = vec![theta; k * k];
        for i in 0..outside.len() {
            for j in 0..outside.len() {
                flat[i * k + j] = fwd[self.prod(outside[i], outside[j])];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut v: Vec<String> = outside.iter().map(|&x| l[x].clone()).collect();
            v.push("θ".to_string());
            v
        });
        Ok((FiniteSemigroup::from_flat(k, flat, labels)?, fwd))
    }
}

/// A partition of 0..n into disjoint classes, in canonical form: classes
/// sorted by least member, members sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>, // element -> class index
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Build from any element -> marker map; markers are only compared for
    /// equality.
    pub fn from_markers(markers: &[usize]) -> Partition {
        let n = markers.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let idx = classes.len();
            let mut cls = Vec::new();
            for y in x..n {
                if class_of[y] == usize::MAX && markers[y] == markers[x] {
                    class_of[y] = idx;
                    cls.push(y);
                }
            }
            classes.push(cls);
        }
        Partition { class_of, classes }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            class_of: (0..n).collect(),
            classes: (0..n).map(|x| vec![x]).collect(),
        }
    }

    pub fn n_elements(&self) -> usize {
        self.class_of.len()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, idx: usize) -> &[usize] {
        &self.classes[idx]
    }

    pub fn class_containing(&self, x: usize) -> &[usize] {
        &self.classes[self.class_of[x]]
    }

    /// True if every class of `self` is contained in a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.classes
            .iter()
            .all(|cls| cls.iter().all(|&x| other.same(cls[0], x)))
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.class_of.len();
        let markers: Vec<usize> = (0..n)
            .map(|x| self.class_of[x] * other.len() + other.class_of[x])
            .collect();
        Partition::from_markers(&markers)
    }
}

/// An equivalence on a semigroup compatible with left and right
/// multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub partition: Partition,
}

impl Congruence {
    pub fn identity(s: &FiniteSemigroup) -> Congruence {
        Congruence {
            partition: Partition::singletons(s.order()),
        }
    }

    pub fn universal(s: &FiniteSemigroup) -> Congruence {
        Congruence {
            partition: Partition::from_markers(&vec![0; s.order()]),
        }
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.partition.same(a, b)
    }

    pub fn class_count(&self) -> usize {
        self.partition.len()
    }

    /// Compatibility check: a ≡ b implies sa ≡ sb and as ≡ bs.
    pub fn is_congruence(&self, s: &FiniteSemigroup) -> bool {
        for cls in self.partition.classes() {
            let a = cls[0];
            for &b in &cls[1..] {
                for x in s.elements() {
                    if !self.partition.same(s.prod(x, a), s.prod(x, b))
                        || !self.partition.same(s.prod(a, x), s.prod(b, x))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Union-find over dense ids with smallest-id representatives.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Union, keeping the smaller id as representative. Returns true if the
    /// classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let markers: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_markers(&markers)
    }
}

/// Smallest congruence containing the given pairs: union-find with a pair
/// worklist; on merging (a,b), the translates (sa,sb) and (as,bs) are
/// enqueued for every s.
pub fn congruence_closure(s: &FiniteSemigroup, pairs: &[(usize, usize)]) -> Congruence {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    let mut queue: VecDeque<(usize, usize)> = pairs.iter().copied().collect();
    while let Some((a, b)) = queue.pop_front() {
        if !uf.union(a, b) {
            continue;
        }
        for x in 0..n {
            queue.push_back((s.prod(x, a), s.prod(x, b)));
            queue.push_back((s.prod(a, x), s.prod(b, x)));
        }
    }
    let c = Congruence {
        partition: uf.into_partition(),
    };
    debug_assert!(c.is_congruence(s));
    c
}

/// A map between semigroups respecting products.
#[derive(Debug, Clone)]
pub struct SemigroupMorphism {
    pub source: FiniteSemigroup,
    pub target: FiniteSemigroup,
    pub map: Vec<usize>,
}

impl SemigroupMorphism {
    pub fn is_morphism(&self) -> bool {
        let n = self.source.order();
        if self.map.len() != n || self.map.iter().any(|&v| v >= self.target.order()) {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                if self.map[self.source.prod(x, y)] != self.target.prod(self.map[x], self.map[y]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_surjective()
    }

    /// The kernel congruence on the source (equal images).
    pub fn kernel(&self) -> Congruence {
        Congruence {
            partition: Partition::from_markers(&self.map),
        }
    }
}

/// Quotient by a congruence, with the canonical projection. Class ids are
/// ordered by least class member.
pub fn quotient(s: &FiniteSemigroup, c: &Congruence) -> (FiniteSemigroup, SemigroupMorphism) {
    assert!(c.is_congruence(s), "quotient by a non-congruence");
    let k = c.class_count();
    let reps: Vec<usize> = c.partition.classes().iter().map(|cls| cls[0]).collect();
    let mut flat = vec![0usize; k * k];
    for i in 0..k {
        for j in 0..k {
            flat[i * k + j] = c.partition.class_index(s.prod(reps[i], reps[j]));
        }
    }
    let labels = s.labels().map(|l| {
        c.partition
            .classes()
            .iter()
            .map(|cls| {
                if cls.len() == 1 {
                    l[cls[0]].clone()
                } else {
                    let inner: Vec<&str> = cls.iter().map(|&x| l[x].as_str()).collect();
                    format!("{{{}}}", inner.join(","))
                }
            })
            .collect()
    });
    let q = FiniteSemigroup::from_flat(k, flat, labels).expect("quotient of a congruence is associative");
    let map: Vec<usize> = (0..s.order()).map(|x| c.partition.class_index(x)).collect();
    let m = SemigroupMorphism {
        source: s.clone(),
        target: q.clone(),
        map,
    };
    (q, m)
}

/// Smallest product-closed superset of a nonempty generator set, sorted.
pub fn generate_subsemigroup(s: &FiniteSemigroup, gens: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; s.order()];
    let mut frontier: Vec<usize> = Vec::new();
    for &g in gens {
        if !in_set[g] {
            in_set[g] = true;
            frontier.push(g);
        }
    }
    let mut members: Vec<usize> = frontier.clone();
    while let Some(x) = frontier.pop() {
        // one-step closure against every known member, both sides
        let snapshot: Vec<usize> = members.clone();
        for &y in &snapshot {
            for p in [s.prod(x, y), s.prod(y, x)] {
                if !in_set[p] {
                    in_set[p] = true;
                    members.push(p);
                    frontier.push(p);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

const ISO_ORDER_CAP: usize = 64;
const ISO_NODE_BUDGET: usize = 2_000_000;

/// Per-element invariant used to prune the isomorphism search.
fn element_signature(s: &FiniteSemigroup, green: &crate::green::GreenData) -> Vec<(u64, usize)> {
    let n = s.order();
    let mut appearances = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            appearances[s.prod(i, j)] += 1;
        }
    }
    (0..n)
        .map(|x| {
            let (idx, per) = s.index_period(x);
            let mut sig: u64 = 0;
            sig = sig.wrapping_mul(1_000_003).wrapping_add(s.is_idempotent(x) as u64);
            sig = sig.wrapping_mul(1_000_003).wrapping_add(idx as u64);
            sig = sig.wrapping_mul(1_000_003).wrapping_add(per as u64);
            sig = sig
                .wrapping_mul(1_000_003)
                .wrapping_add(green.r.class_containing(x).len() as u64);
            sig = sig
                .wrapping_mul(1_000_003)
                .wrapping_add(green.l.class_containing(x).len() as u64);
            sig = sig
                .wrapping_mul(1_000_003)
                .wrapping_add(green.j.class_containing(x).len() as u64);
            sig = sig
                .wrapping_mul(1_000_003)
                .wrapping_add(green.h.class_containing(x).len() as u64);
            sig = sig.wrapping_mul(1_000_003).wrapping_add(appearances[x] as u64);
            sig = sig
                .wrapping_mul(1_000_003)
                .wrapping_add((Some(x) == s.zero()) as u64);
            sig = sig
                .wrapping_mul(1_000_003)
                .wrapping_add((Some(x) == s.identity()) as u64);
            (sig, x)
        })
        .collect()
}

/// Isomorphism search: backtracking over a derivation schedule where every
/// element that is a product of earlier elements has a forced image.
/// Limited to order <= 64 with a node budget.
pub fn is_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Result<Option<SemigroupMorphism>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let n = a.order();
    if n > ISO_ORDER_CAP {
        return Err(Error::BudgetExceeded(format!(
            "isomorphism test limited to order {ISO_ORDER_CAP}, got {n}"
        )));
    }
    let ga = crate::green::compute_green(a);
    let gb = crate::green::compute_green(b);
    let sig_a = element_signature(a, &ga);
    let sig_b = element_signature(b, &gb);
    {
        let mut ma: Vec<u64> = sig_a.iter().map(|&(s, _)| s).collect();
        let mut mb: Vec<u64> = sig_b.iter().map(|&(s, _)| s).collect();
        ma.sort_unstable();
        mb.sort_unstable();
        if ma != mb {
            return Ok(None);
        }
    }

    // derivation schedule: alternate free picks with forced products
    #[derive(Clone, Copy)]
    enum Step {
        Free(usize),
        Derived(usize, usize, usize), // x = u*v with u, v scheduled earlier
    }
    let mut scheduled = vec![false; n];
    let mut schedule: Vec<Step> = Vec::with_capacity(n);
    let mut known: Vec<usize> = Vec::new();
    while known.len() < n {
        let x = (0..n).find(|&x| !scheduled[x]).unwrap();
        scheduled[x] = true;
        schedule.push(Step::Free(x));
        known.push(x);
        loop {
            let mut found = None;
            'outer: for &u in &known {
                for &v in &known {
                    let p = a.prod(u, v);
                    if !scheduled[p] {
                        found = Some((p, u, v));
                        break 'outer;
                    }
                }
            }
            match found {
                Some((p, u, v)) => {
                    scheduled[p] = true;
                    schedule.push(Step::Derived(p, u, v));
                    known.push(p);
                }
                None => break,
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut mapped: Vec<usize> = Vec::new();
    let mut nodes = 0usize;

    fn consistent(
        a: &FiniteSemigroup,
        b: &FiniteSemigroup,
        map: &[usize],
        mapped: &[usize],
        x: usize,
    ) -> bool {
        for &y in mapped {
            let p1 = a.prod(x, y);
            if map[p1] != usize::MAX && b.prod(map[x], map[y]) != map[p1] {
                return false;
            }
            let p2 = a.prod(y, x);
            if map[p2] != usize::MAX && b.prod(map[y], map[x]) != map[p2] {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        a: &FiniteSemigroup,
        b: &FiniteSemigroup,
        schedule: &[Step],
        pos: usize,
        sig_a: &[(u64, usize)],
        sig_b: &[(u64, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        mapped: &mut Vec<usize>,
        nodes: &mut usize,
    ) -> Result<bool> {
        if pos == schedule.len() {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > ISO_NODE_BUDGET {
            return Err(Error::BudgetExceeded("isomorphism search node budget".into()));
        }
        match schedule[pos] {
            Step::Free(x) => {
                for cand in 0..b.order() {
                    if used[cand] || sig_b[cand].0 != sig_a[x].0 {
                        continue;
                    }
                    map[x] = cand;
                    if consistent(a, b, map, mapped, x) {
                        used[cand] = true;
                        mapped.push(x);
                        if search(a, b, schedule, pos + 1, sig_a, sig_b, map, used, mapped, nodes)? {
                            return Ok(true);
                        }
                        mapped.pop();
                        used[cand] = false;
                    }
                    map[x] = usize::MAX;
                }
                Ok(false)
            }
            Step::Derived(x, u, v) => {
                let forced = b.prod(map[u], map[v]);
                if used[forced] || sig_b[forced].0 != sig_a[x].0 {
                    return Ok(false);
                }
                map[x] = forced;
                if consistent(a, b, map, mapped, x) {
                    used[forced] = true;
                    mapped.push(x);
                    if search(a, b, schedule, pos + 1, sig_a, sig_b, map, used, mapped, nodes)? {
                        return Ok(true);
                    }
                    mapped.pop();
                    used[forced] = false;
                }
                map[x] = usize::MAX;
                Ok(false)
            }
        }
    }

    let found = search(
        a, b, &schedule, 0, &sig_a, &sig_b, &mut map, &mut used, &mut mapped, &mut nodes,
    )?;
    if !found {
        return Ok(None);
    }
    let m = SemigroupMorphism {
        source: a.clone(),
        target: b.clone(),
        map,
    };
    debug_assert!(m.is_morphism() && m.is_bijective());
    Ok(Some(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_semigroup() {
        let s = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.identity(), Some(0));
        assert_eq!(s.zero(), Some(0));
    }

    #[test]
    fn left_zero_has_no_identity_or_zero() {
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(s.identity(), None);
        assert_eq!(s.zero(), None);
    }

    #[test]
    fn nonassociative_table_rejected() {
        // exhaustive check of the 8 triples shows (1,1,1) fails:
        // (1*1)*1 = 0*1 = 1 but 1*(1*1) = 1*0 = 0
        let err = FiniteSemigroup::new(vec![vec![0, 1], vec![0, 0]], None).unwrap_err();
        match err {
            Error::Associativity { .. } => {}
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_rejected() {
        let err = FiniteSemigroup::new(vec![vec![0, 2], vec![0, 0]], None).unwrap_err();
        match err {
            Error::IndexOutOfRange { .. } => {}
            other => panic!("expected index error, got {other:?}"),
        }
    }

    #[test]
    fn closure_of_empty_is_identity_congruence() {
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        let c = congruence_closure(&s, &[]);
        assert_eq!(c.class_count(), 2);
    }

    #[test]
    fn closure_in_null_semigroup() {
        // 2-element null semigroup: all products are element 0
        let s = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 0]], None).unwrap();
        // hand-run of the worklist: merging (0,1) enqueues only (0,0) pairs,
        // so the closure is exactly the one merge
        let c = congruence_closure(&s, &[(0, 1)]);
        assert_eq!(c.class_count(), 1);
    }

    #[test]
    fn quotient_by_identity_is_isomorphic_copy() {
        let s = crate::corpus::builtin("b2").unwrap();
        let c = Congruence::identity(&s);
        let (q, m) = quotient(&s, &c);
        assert_eq!(q.order(), s.order());
        assert!(m.is_morphism() && m.is_bijective());
    }

    #[test]
    fn quotient_by_universal_is_trivial() {
        let s = crate::corpus::builtin("b2").unwrap();
        let (q, _) = quotient(&s, &Congruence::universal(&s));
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn generate_identity_in_monoid() {
        let s = crate::corpus::builtin("z4").unwrap();
        let e = s.identity().unwrap();
        assert_eq!(generate_subsemigroup(&s, &[e]), vec![e]);
        let all: Vec<usize> = s.elements().collect();
        assert_eq!(generate_subsemigroup(&s, &all), all);
    }

    #[test]
    fn iso_self_and_distinguishes_idempotent_counts() {
        let null2 = FiniteSemigroup::new(vec![vec![0, 0], vec![0, 0]], None).unwrap();
        let semilattice2 = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        assert!(is_isomorphic(&null2, &null2).unwrap().is_some());
        assert!(is_isomorphic(&null2, &semilattice2).unwrap().is_none());
    }

    #[test]
    fn iso_verdict_symmetric() {
        let a = crate::corpus::builtin("z4").unwrap();
        // Klein four-group: not isomorphic to Z4
        let b = a.direct_product(&crate::corpus::builtin("z2").unwrap());
        let (b, _) = b
            .subsemigroup(&generate_subsemigroup(&b, &[0, 1, 2, 3, 4, 5, 6, 7]))
            .unwrap();
        let z2z2 = crate::corpus::builtin("z2")
            .unwrap()
            .direct_product(&crate::corpus::builtin("z2").unwrap());
        assert!(is_isomorphic(&a, &z2z2).unwrap().is_none());
        assert!(is_isomorphic(&z2z2, &a).unwrap().is_none());
        assert_eq!(b.order(), 8);
    }
}
