//! Groups inside semigroups: maximal subgroups, lower central series,
//! nilpotent residual, normal closures and quotients.

use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, SemigroupMorphism};

/// A finite group carried by a semigroup table. `carrier` holds ambient
/// ids when the group sits inside a larger semigroup; for a standalone
/// group the carrier is 0..N-1.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub semigroup: FiniteSemigroup,
    /// group ids (0..order of `semigroup`) -> ambient ids of the host
    pub carrier: Vec<usize>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupData {
    /// Treat a whole semigroup as a group; fails if it is not one.
    pub fn from_semigroup(s: &FiniteSemigroup) -> Result<GroupData> {
        let carrier: Vec<usize> = s.elements().collect();
        Self::build(s.clone(), carrier)
    }

    fn build(sub: FiniteSemigroup, carrier: Vec<usize>) -> Result<GroupData> {
        let identity = sub.identity().ok_or(Error::NotGroupHClass)?;
        let n = sub.order();
        let mut inverse = vec![usize::MAX; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            match (0..n).find(|&y| sub.prod(x, y) == identity && sub.prod(y, x) == identity) {
                Some(y) => *inv = y,
                None => return Err(Error::NotGroupHClass),
            }
        }
        Ok(GroupData {
            semigroup: sub,
            carrier,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }

    #[inline]
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.semigroup.prod(x, y)
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn commutator(&self, x: usize, y: usize) -> usize {
        // [x,y] = x⁻¹ y⁻¹ x y
        let a = self.prod(self.inv(x), self.inv(y));
        let b = self.prod(x, y);
        self.prod(a, b)
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        !subset.is_empty()
            && subset.contains(&self.identity)
            && subset
                .iter()
                .all(|&x| subset.contains(&self.inv(x)) && subset.iter().all(|&y| subset.contains(&self.prod(x, y))))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        self.is_subgroup(subset)
            && subset.iter().all(|&x| {
                (0..self.order()).all(|g| {
                    let conj = self.prod(self.prod(g, x), self.inv(g));
                    subset.contains(&conj)
                })
            })
    }
}

/// Group structure on an H-class of S containing an idempotent.
pub fn maximal_subgroup(s: &FiniteSemigroup, hclass: &[usize]) -> Result<GroupData> {
    let (sub, carrier) = s
        .subsemigroup(hclass)
        .map_err(|_| Error::NotGroupHClass)?;
    GroupData::build(sub, carrier)
}

/// Smallest subgroup containing a seed (seed need not contain identity).
pub fn generated_subgroup(g: &GroupData, seed: &[usize]) -> Vec<usize> {
    let mut gens: Vec<usize> = seed.to_vec();
    gens.push(g.identity);
    // inverses are generated automatically in a finite group
    crate::semigroup::generate_subsemigroup(&g.semigroup, &gens)
}

/// Smallest normal subgroup containing the seed: close under conjugation,
/// then generate.
pub fn normal_closure(g: &GroupData, seed: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut in_set = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let push = |x: usize, in_set: &mut Vec<bool>, stack: &mut Vec<usize>| {
        if !in_set[x] {
            in_set[x] = true;
            stack.push(x);
        }
    };
    push(g.identity, &mut in_set, &mut stack);
    for &x in seed {
        push(x, &mut in_set, &mut stack);
    }
    while let Some(x) = stack.pop() {
        push(g.inv(x), &mut in_set, &mut stack);
        for y in 0..n {
            if in_set[y] {
                push(g.prod(x, y), &mut in_set, &mut stack);
            }
            let conj = g.prod(g.prod(y, x), g.inv(y));
            push(conj, &mut in_set, &mut stack);
        }
        // products with elements added after x are caught when those pop
        let members: Vec<usize> = (0..n).filter(|&y| in_set[y]).collect();
        for &y in &members {
            push(g.prod(x, y), &mut in_set, &mut stack);
            push(g.prod(y, x), &mut in_set, &mut stack);
        }
    }
    (0..n).filter(|&x| in_set[x]).collect()
}

#[derive(Debug, Clone)]
pub struct NormalSubgroupChain {
    pub terms: Vec<Vec<usize>>,
    pub stabilized: usize,
}

/// Lower central series γ_1 = G, γ_{k+1} = ⟨[γ_k, G]⟩ (normal-closed),
/// stopping when the chain stabilizes.
pub fn lower_central_series(g: &GroupData) -> NormalSubgroupChain {
    let mut terms: Vec<Vec<usize>> = vec![(0..g.order()).collect()];
    loop {
        let last = terms.last().unwrap();
        let mut comms: Vec<usize> = Vec::new();
        for &x in last {
            for y in 0..g.order() {
                comms.push(g.commutator(x, y));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        let next = normal_closure(g, &comms);
        if &next == last {
            let stabilized = terms.len() - 1;
            debug_assert!(g.is_normal(&next));
            return NormalSubgroupChain { terms, stabilized };
        }
        terms.push(next);
    }
}

/// γ_∞(G): the stable term of the lower central series. G/γ_∞ is the
/// largest nilpotent quotient.
pub fn nilpotent_residual(g: &GroupData) -> Vec<usize> {
    lower_central_series(g).terms.last().unwrap().clone()
}

pub fn is_nilpotent_group(g: &GroupData) -> bool {
    nilpotent_residual(g).len() == 1
}

/// Quotient by a normal subgroup, with the projection (as ids of g's own
/// table).
pub fn group_quotient(g: &GroupData, n: &[usize]) -> Result<(GroupData, Vec<usize>)> {
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    // coset of x = { x·n }, identified by its least member
    let order = g.order();
    let coset_rep: Vec<usize> = (0..order)
        .map(|x| n.iter().map(|&m| g.prod(x, m)).min().unwrap())
        .collect();
    let mut reps: Vec<usize> = coset_rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let k = reps.len();
    let idx = |r: usize| reps.binary_search(&r).unwrap();
    let mut flat = vec![0usize; k * k];
    for i in 0..k {
        for j in 0..k {
            flat[i * k + j] = idx(coset_rep[g.prod(reps[i], reps[j])]);
        }
    }
    let q = FiniteSemigroup::from_flat(k, flat, None)?;
    let map: Vec<usize> = (0..order).map(|x| idx(coset_rep[x])).collect();
    let qg = GroupData::from_semigroup(&q)?;
    Ok((qg, map))
}

/// All normal subgroups, as unions of conjugacy classes closed into
/// subgroups. Only for desk-scale oracles.
pub fn normal_subgroups(g: &GroupData) -> Result<Vec<Vec<usize>>> {
    const CAP: usize = 24;
    if g.order() > CAP {
        return Err(Error::BudgetExceeded(format!(
            "normal subgroup enumeration limited to order {CAP}"
        )));
    }
    let n = g.order();
    // conjugacy classes
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut cls: Vec<usize> = (0..n)
            .map(|y| g.prod(g.prod(y, x), g.inv(y)))
            .collect();
        cls.sort_unstable();
        cls.dedup();
        for &c in &cls {
            class_of[c] = idx;
        }
        classes.push(cls);
    }
    let id_class = class_of[g.identity];
    let k = classes.len();
    let others: Vec<usize> = (0..k).filter(|&c| c != id_class).collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0..(1usize << others.len()) {
        let mut subset: Vec<usize> = classes[id_class].clone();
        for (bit, &c) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                subset.extend_from_slice(&classes[c]);
            }
        }
        subset.sort_unstable();
        if g.is_subgroup(&subset) {
            out.push(subset);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Surjective group morphism check between two GroupData values.
pub fn is_group_epimorphism(a: &GroupData, b: &GroupData, map: &[usize]) -> bool {
    let m = SemigroupMorphism {
        source: a.semigroup.clone(),
        target: b.semigroup.clone(),
        map: map.to_vec(),
    };
    m.is_morphism() && m.is_surjective()
}
