//! Green's relations, the J-class order, principal series and principal
//! factors.

 
use crate::semigroup::{FiniteSemigroup, Partition};

#[derive(Debug, Clone)]
pub struct GreenData {
    pub r: Partition,
    pub l: Partition,
    pub j: Partition,
    pub h: Partition,
    /// j_below[a][b] true iff J-class a is strictly below J-class b in the
    /// ideal order (principal ideal of a strictly contained in that of b).
    pub j_below: Vec<Vec<bool>>,
    /// per-J-class: contains an idempotent
    pub regular_j: Vec<bool>,
}

/// Principal right ideal xS¹ as a bitset-ish bool vec.
fn right_ideal(s: &FiniteSemigroup, x: usize) -> Vec<bool> {
    let n = s.order();
    let mut set = vec![false; n];
    set[x] = true; // the S¹ factor contributes x itself
    for y in 0..n {
        set[s.prod(x, y)] = true;
    }
    set
}

fn left_ideal(s: &FiniteSemigroup, x: usize) -> Vec<bool> {
    let n = s.order();
    let mut set = vec![false; n];
    set[x] = true;
    for y in 0..n {
        set[s.prod(y, x)] = true;
    }
    set
}

/// Principal two-sided ideal S¹xS¹.
fn two_sided_ideal(s: &FiniteSemigroup, x: usize) -> Vec<bool> {
    let n = s.order();
    let mut set = vec![false; n];
    set[x] = true;
    for y in 0..n {
        let xy = s.prod(x, y);
        set[xy] = true;
        set[s.prod(y, x)] = true;
        for z in 0..n {
            set[s.prod(z, xy)] = true;
        }
    }
    set
}

fn partition_by_sets(sets: &[Vec<bool>]) -> Partition {
    let n = sets.len();
    let mut markers = vec![usize::MAX; n];
    let mut next = 0usize;
    for x in 0..n {
        if markers[x] != usize::MAX {
            continue;
        }
        markers[x] = next;
        for y in x + 1..n {
            if markers[y] == usize::MAX && sets[y] == sets[x] {
                markers[y] = next;
            }
        }
        next += 1;
    }
    Partition::from_markers(&markers)
}

fn subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub fn compute_green(s: &FiniteSemigroup) -> GreenData {
    let n = s.order();
    let rsets: Vec<Vec<bool>> = (0..n).map(|x| right_ideal(s, x)).collect();
    let lsets: Vec<Vec<bool>> = (0..n).map(|x| left_ideal(s, x)).collect();
    let jsets: Vec<Vec<bool>> = (0..n).map(|x| two_sided_ideal(s, x)).collect();
    let r = partition_by_sets(&rsets);
    let l = partition_by_sets(&lsets);
    let j = partition_by_sets(&jsets);
    let h = r.meet(&l);
    let k = j.len();
    let mut j_below = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            if a == b {
                continue;
            }
            let ia = &jsets[j.class(a)[0]];
            let ib = &jsets[j.class(b)[0]];
            j_below[a][b] = subset(ia, ib) && ia != ib;
        }
    }
    let regular_j = (0..k)
        .map(|a| j.class(a).iter().any(|&x| s.is_idempotent(x)))
        .collect();
    GreenData {
        r,
        l,
        j,
        h,
        j_below,
        regular_j,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    Null,
    CompletelySimple,
    Completely0Simple,
}

#[derive(Debug, Clone)]
pub struct FactorDescriptor {
    /// elements of S_p \ S_{p+1}, ambient ids, sorted
    pub jclass: Vec<usize>,
    pub kind: FactorKind,
    /// the factor as a semigroup: the J-class with products falling into
    /// S_{p+1} sent to an adjoined θ; for the kernel, the subsemigroup
    /// itself without an adjoined zero
    pub semigroup: FiniteSemigroup,
    /// factor id -> ambient id; the adjoined θ (if any) maps to usize::MAX
    pub embedding: Vec<usize>,
    /// id of θ inside the factor semigroup, when present
    pub theta: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct PrincipalSeries {
    /// descending ideals S_1 = S ⊃ S_2 ⊃ … ⊃ S_o; the empty set S_{o+1}
    /// is implicit
    pub ideals: Vec<Vec<usize>>,
    pub factors: Vec<FactorDescriptor>,
}

/// Build a principal series by repeatedly deleting a maximal J-class of the
/// remaining ideal; among maximal classes the one with the least minimum id
/// is removed first.
pub fn principal_series(s: &FiniteSemigroup) -> PrincipalSeries {
    let mut ideals: Vec<Vec<usize>> = Vec::new();
    let mut factors: Vec<FactorDescriptor> = Vec::new();
    let mut current: Vec<usize> = s.elements().collect();
    while !current.is_empty() {
        ideals.push(current.clone());
        // Green structure of the remaining ideal as a semigroup in its own
        // right; J-classes of an ideal are its maximal-chain building blocks
        let (sub, back) = s
            .subsemigroup(&current)
            .expect("ideals are product-closed");
        let g = compute_green(&sub);
        let k = g.j.len();
        let maximal: Vec<usize> = (0..k)
            .filter(|&a| (0..k).all(|b| !g.j_below[a][b]))
            .collect();
        let pick = *maximal
            .iter()
            .min_by_key(|&&a| back[g.j.class(a)[0]])
            .expect("finite nonempty semigroup has a maximal J-class");
        let jclass: Vec<usize> = g.j.class(pick).iter().map(|&x| back[x]).collect();
        let rest: Vec<usize> = current
            .iter()
            .copied()
            .filter(|x| !jclass.contains(x))
            .collect();
        factors.push(make_factor(s, &jclass, &rest, g.regular_j[pick]));
        current = rest;
    }
    PrincipalSeries { ideals, factors }
}

fn make_factor(
    s: &FiniteSemigroup,
    jclass: &[usize],
    rest: &[usize],
    regular: bool,
) -> FactorDescriptor {
    let mut jc: Vec<usize> = jclass.to_vec();
    jc.sort_unstable();
    if rest.is_empty() {
        // kernel: the J-class is itself a simple subsemigroup, no adjoined θ
        let (sub, back) = s.subsemigroup(&jc).expect("kernel is product-closed");
        return FactorDescriptor {
            jclass: jc,
            kind: FactorKind::CompletelySimple,
            semigroup: sub,
            embedding: back,
            theta: None,
        };
    }
    let k = jc.len() + 1;
    let theta = k - 1;
    let mut pos = std::collections::HashMap::new();
    for (i, &x) in jc.iter().enumerate() {
        pos.insert(x, i);
    }
    let mut flat = vec![theta; k * k];
    let mut any_inner = false;
    for i in 0..jc.len() {
        for j in 0..jc.len() {
            let p = s.prod(jc[i], jc[j]);
            if let Some(&q) = pos.get(&p) {
                flat[i * k + j] = q;
                any_inner = true;
            }
        }
    }
    let labels = s.labels().map(|l| {
        let mut v: Vec<String> = jc.iter().map(|&x| l[x].clone()).collect();
        v.push("θ".to_string());
        v
    });
    let semigroup =
        FiniteSemigroup::from_flat(k, flat, labels).expect("principal factor is associative");
    let kind = if !any_inner {
        FactorKind::Null
    } else if regular {
        FactorKind::Completely0Simple
    } else {
        FactorKind::Null
    };
    let mut embedding: Vec<usize> = jc.clone();
    embedding.push(usize::MAX);
    FactorDescriptor {
        jclass: jc,
        kind,
        semigroup,
        embedding,
        theta: Some(theta),
    }
}

pub fn is_semisimple(s: &FiniteSemigroup) -> bool {
    principal_series(s)
        .factors
        .iter()
        .all(|f| f.kind != FactorKind::Null)
}

/// Check that a set is a two-sided ideal of S.
pub fn is_ideal(s: &FiniteSemigroup, subset: &[usize]) -> bool {
    let mut inside = vec![false; s.order()];
    for &x in subset {
        inside[x] = true;
    }
    subset
        .iter()
        .all(|&x| s.elements().all(|y| inside[s.prod(x, y)] && inside[s.prod(y, x)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    #[test]
    fn group_is_single_class_everywhere() {
        let g = builtin("s3").unwrap();
        let gr = compute_green(&g);
        assert_eq!(gr.r.len(), 1);
        assert_eq!(gr.l.len(), 1);
        assert_eq!(gr.j.len(), 1);
        assert_eq!(gr.h.len(), 1);
        assert!(gr.regular_j[0]);
    }

    #[test]
    fn b2_green_structure() {
        let b2 = builtin("b2").unwrap();
        let gr = compute_green(&b2);
        // J-classes: {θ} and the four nonzero elements
        assert_eq!(gr.j.len(), 2);
        let theta = b2.zero().unwrap();
        assert_eq!(gr.j.class_containing(theta).len(), 1);
        // H-classes of the nonzero part are singletons
        assert_eq!(gr.h.len(), 5);
        // R and L each split the nonzero part in two
        assert_eq!(gr.r.len(), 3);
        assert_eq!(gr.l.len(), 3);
    }

    #[test]
    fn semilattice_j_order() {
        // {e,f} with ef = fe = f: J-classes {e},{f}, {f} below {e}
        let s = builtin("semilattice2").unwrap();
        let gr = compute_green(&s);
        assert_eq!(gr.j.len(), 2);
        let ce = gr.j.class_index(0);
        let cf = gr.j.class_index(1);
        assert!(gr.j_below[cf][ce]);
        assert!(!gr.j_below[ce][cf]);
    }

    #[test]
    fn series_of_group_is_single_simple_step() {
        let g = builtin("z4").unwrap();
        let ser = principal_series(&g);
        assert_eq!(ser.factors.len(), 1);
        assert_eq!(ser.factors[0].kind, FactorKind::CompletelySimple);
        assert!(ser.factors[0].theta.is_none());
        assert!(is_semisimple(&g));
    }

    #[test]
    fn f7_series() {
        let f7 = builtin("f7").unwrap();
        let ser = principal_series(&f7);
        // F7 ⊃ B2 ⊃ {θ}: factors {1,u}∪θ (0-simple), B2∖{θ}∪θ (0-simple),
        // kernel {θ} simple
        assert_eq!(ser.factors.len(), 3);
        assert_eq!(ser.factors[0].kind, FactorKind::Completely0Simple);
        assert_eq!(ser.factors[0].jclass.len(), 2);
        assert_eq!(ser.factors[1].kind, FactorKind::Completely0Simple);
        assert_eq!(ser.factors[1].jclass.len(), 4);
        assert_eq!(ser.factors[2].kind, FactorKind::CompletelySimple);
        assert_eq!(ser.factors[2].jclass, vec![f7.zero().unwrap()]);
        assert!(is_semisimple(&f7));
        for ideal in &ser.ideals {
            assert!(is_ideal(&f7, ideal));
        }
    }

    #[test]
    fn series_steps_remove_one_j_class() {
        for name in ["b2", "f7", "paper23", "s3", "semilattice2", "noncsd22"] {
            let s = builtin(name).unwrap();
            let gr = compute_green(&s);
            let ser = principal_series(&s);
            for (step, factor) in ser.factors.iter().enumerate() {
                // each difference set is a single J-class of S
                let rep = factor.jclass[0];
                let mut cls: Vec<usize> = gr.j.class_containing(rep).to_vec();
                cls.sort_unstable();
                assert_eq!(factor.jclass, cls, "{name} step {step}");
                assert!(is_ideal(&s, &ser.ideals[step]), "{name} step {step}");
            }
        }
    }

    #[test]
    fn paper23_not_semisimple() {
        let s = builtin("paper23").unwrap();
        assert!(!is_semisimple(&s));
        let ser = principal_series(&s);
        // v1 and v2 sit in null factors above the two matrix parts
        let null_count = ser
            .factors
            .iter()
            .filter(|f| f.kind == FactorKind::Null)
            .count();
        assert_eq!(null_count, 2);
    }

    #[test]
    fn b2_semisimple() {
        assert!(is_semisimple(&builtin("b2").unwrap()));
    }
}
