//! Built-in example semigroups and exhaustive enumeration of small
//! orders (oracle fuel).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rees::{brandt_structure, build_rees, trivial_group, ReesStructure};
use crate::semigroup::FiniteSemigroup;

pub const BUILTIN_NAMES: [&str; 18] = [
    "trivial",
    "null2",
    "null3",
    "leftzero2",
    "semilattice2",
    "z2",
    "z3",
    "z4",
    "z5",
    "z6",
    "s3",
    "d4",
    "q8",
    "b2",
    "f7",
    "paper23",
    "allones22",
    "noncsd22",
];

pub fn builtin(name: &str) -> Result<FiniteSemigroup> {
    match name {
        "trivial" => FiniteSemigroup::new(vec![vec![0]], None),
        "null2" => null_semigroup(2),
        "null3" => null_semigroup(3),
        "leftzero2" => FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None),
        "semilattice2" => FiniteSemigroup::new(vec![vec![0, 1], vec![1, 1]], None),
        "z2" => cyclic(2),
        "z3" => cyclic(3),
        "z4" => cyclic(4),
        "z5" => cyclic(5),
        "z6" => cyclic(6),
        "s3" => symmetric3(),
        "d4" => dihedral4(),
        "q8" => quaternion(),
        "b2" => Ok(build_rees(&brandt_structure(2))),
        "f7" => build_f7(),
        "paper23" => build_paper_example(),
        "allones22" => Ok(build_rees(&all_ones22())),
        "noncsd22" => Ok(build_rees(&noncsd22())),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

/// Builtin group names accepted inside Rees files.
pub fn builtin_group(name: &str) -> Result<FiniteSemigroup> {
    match name {
        "trivial" => FiniteSemigroup::new(vec![vec![0]], None),
        "Z2" => cyclic(2),
        "Z3" => cyclic(3),
        "Z4" => cyclic(4),
        "Z6" => cyclic(6),
        "S3" => symmetric3(),
        "D4" => dihedral4(),
        "Q8" => quaternion(),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

fn null_semigroup(n: usize) -> Result<FiniteSemigroup> {
    FiniteSemigroup::new(vec![vec![0; n]; n], None)
}

fn cyclic(n: usize) -> Result<FiniteSemigroup> {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteSemigroup::new(table, None)
}

/// S3 as permutations of {0,1,2}, listed identity first.
fn symmetric3() -> Result<FiniteSemigroup> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        // apply q first, then p
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let idx = |p: &[usize; 3]| perms.iter().position(|x| x == p).unwrap();
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| idx(&compose(p, q))).collect())
        .collect();
    FiniteSemigroup::new(table, None)
}

/// D4 as r^a s^b with r⁴ = s² = 1, s r = r⁻¹ s; id = a + 4b.
fn dihedral4() -> Result<FiniteSemigroup> {
    let mul = |x: usize, y: usize| -> usize {
        let (a, b) = (x % 4, x / 4);
        let (c, d) = (y % 4, y / 4);
        // (r^a s^b)(r^c s^d): s r^c = r^{4-c} s
        let aa = if b == 0 { (a + c) % 4 } else { (a + 4 - c % 4) % 4 };
        let bb = (b + d) % 2;
        aa + 4 * bb
    };
    let table: Vec<Vec<usize>> = (0..8).map(|x| (0..8).map(|y| mul(x, y)).collect()).collect();
    FiniteSemigroup::new(table, None)
}

/// Q8 = {±1, ±i, ±j, ±k}; id = 2*axis + sign with axes 1,i,j,k.
fn quaternion() -> Result<FiniteSemigroup> {
    // axis multiplication with sign: i*j = k, j*k = i, k*i = j
    let mul = |x: usize, y: usize| -> usize {
        let (ax, sx) = (x / 2, x % 2);
        let (ay, sy) = (y / 2, y % 2);
        let (az, extra) = match (ax, ay) {
            (0, a) => (a, 0),
            (a, 0) => (a, 0),
            (a, b) if a == b => (0, 1), // i²=j²=k²=-1
            (1, 2) => (3, 0),           // i j = k
            (2, 1) => (3, 1),           // j i = -k
            (2, 3) => (1, 0),           // j k = i
            (3, 2) => (1, 1),           // k j = -i
            (3, 1) => (2, 0),           // k i = j
            (1, 3) => (2, 1),           // i k = -j
            _ => unreachable!(),
        };
        2 * az + (sx + sy + extra) % 2
    };
    let table: Vec<Vec<usize>> = (0..8).map(|x| (0..8).map(|y| mul(x, y)).collect()).collect();
    FiniteSemigroup::new(table, None)
}

fn all_ones22() -> ReesStructure {
    ReesStructure::new(
        trivial_group(),
        2,
        2,
        vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]],
        true,
    )
    .unwrap()
}

fn noncsd22() -> ReesStructure {
    ReesStructure::new(
        trivial_group(),
        2,
        2,
        vec![vec![Some(0), Some(0)], vec![None, Some(0)]],
        true,
    )
    .unwrap()
}

/// F7 = M⁰({1},2,2;I₂) ∪ {1,u}: ids 0=θ, 1..4 = (1;i,j) row-major,
/// 5 = 1, 6 = u. The units act on matrix coordinates via the swap:
/// u(1;i,j) = (1;σ(i),j), (1;i,j)u = (1;i,σ(j)), u² = 1.
pub fn build_f7() -> Result<FiniteSemigroup> {
    let n = 7;
    let theta = 0usize;
    let cell = |i: usize, j: usize| 1 + 2 * i + j; // 0-based coordinates
    let one = 5usize;
    let u = 6usize;
    let mut table = vec![vec![theta; n]; n];
    // identity element
    for (x, row) in table.iter_mut().enumerate() {
        row[one] = x;
    }
    table[one] = (0..n).collect();
    table[u][u] = one;
    // matrix part: (1;i,j)(1;k,l) = (1;i,l) when j = k
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    if j == k {
                        table[cell(i, j)][cell(k, l)] = cell(i, l);
                    }
                }
            }
        }
    }
    // unit action on coordinates
    for i in 0..2 {
        for j in 0..2 {
            table[u][cell(i, j)] = cell(1 - i, j);
            table[cell(i, j)][u] = cell(i, 1 - j);
        }
    }
    let labels = vec![
        "θ".to_string(),
        "(1;1,1)".to_string(),
        "(1;1,2)".to_string(),
        "(1;2,1)".to_string(),
        "(1;2,2)".to_string(),
        "1".to_string(),
        "u".to_string(),
    ];
    FiniteSemigroup::new(table, Some(labels))
}

/// The 23-element semigroup with principal factors {θ},
/// M1 = M⁰({1},{a,b},{a,b};I₂), M2 = M⁰({1},{i,j,k,l},{i,j,k,l};I₄) and
/// a null factor {v1,v2}, glued along φ(i)=φ(j)=a, φ(k)=φ(l)=b.
/// Ids: 0=θ; 1..4 = (α,β) row-major over {a,b}; 5..20 = [γ,λ] row-major
/// over {i,j,k,l}; 21=v1, 22=v2.
pub fn build_paper_example() -> Result<FiniteSemigroup> {
    const N: usize = 23;
    let theta = 0usize;
    let m1 = |alpha: usize, beta: usize| 1 + 2 * alpha + beta; // α,β ∈ {0=a,1=b}
    let m2 = |g: usize, l: usize| 5 + 4 * g + l; // indices in {0=i,1=j,2=k,3=l}
    let v1 = 21usize;
    let v2 = 22usize;
    let phi = |x: usize| x / 2; // i,j ↦ a and k,l ↦ b
    let mut table = vec![vec![theta; N]; N];
    // M1 internal: (α,β)(γ,δ) = (α,δ) when β = γ
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == c {
                        table[m1(a, b)][m1(c, d)] = m1(a, d);
                    }
                }
            }
        }
    }
    // M2 internal: identity sandwich on matching middles; mismatched
    // middles drop through φ into M1
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    table[m2(a, b)][m2(c, d)] = if b == c {
                        m2(a, d)
                    } else if phi(b) == phi(c) {
                        m1(phi(a), phi(d))
                    } else {
                        theta
                    };
                }
            }
        }
    }
    // cross products through φ
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..4 {
                for d in 0..4 {
                    table[m1(a, b)][m2(c, d)] = if b == phi(c) { m1(a, phi(d)) } else { theta };
                    table[m2(c, d)][m1(a, b)] = if phi(d) == a { m1(phi(c), b) } else { theta };
                }
            }
        }
    }
    // v-products with M1: v(a,β) = (b,β), v(b,β) = θ; (β,a)v = θ,
    // (β,b)v = (β,a)
    for v in [v1, v2] {
        for b in 0..2 {
            table[v][m1(0, b)] = m1(1, b);
            table[v][m1(1, b)] = theta;
            table[m1(b, 0)][v] = theta;
            table[m1(b, 1)][v] = m1(b, 0);
        }
    }
    // v-products with M2 (0=i,1=j,2=k,3=l): v1 sends i↦l, j↦k on the
    // left and k↦j, l↦i on the right; v2 sends i↦k, j↦l and k↦i, l↦j
    for alpha in 0..4 {
        table[v1][m2(0, alpha)] = m2(3, alpha);
        table[v1][m2(1, alpha)] = m2(2, alpha);
        table[v2][m2(0, alpha)] = m2(2, alpha);
        table[v2][m2(1, alpha)] = m2(3, alpha);
        // v[β,α] = θ for β ∈ {k,l}: already θ-filled
        table[m2(alpha, 2)][v1] = m2(alpha, 1);
        table[m2(alpha, 3)][v1] = m2(alpha, 0);
        table[m2(alpha, 2)][v2] = m2(alpha, 0);
        table[m2(alpha, 3)][v2] = m2(alpha, 1);
        // [α,γ]v = θ for γ ∈ {i,j}: already θ-filled
    }
    // v1² = v1v2 = v2v1 = v2² = θ: already θ-filled
    let mut labels = vec!["θ".to_string()];
    let ab = ["a", "b"];
    let ijkl = ["i", "j", "k", "l"];
    for a in 0..2 {
        for b in 0..2 {
            labels.push(format!("({},{})", ab[a], ab[b]));
        }
    }
    for g in 0..4 {
        for l in 0..4 {
            labels.push(format!("[{},{}]", ijkl[g], ijkl[l]));
        }
    }
    labels.push("v1".to_string());
    labels.push("v2".to_string());
    FiniteSemigroup::new(table, Some(labels))
}

/// Convenient id accessors for the 23-element example, matching the
/// construction above.
pub mod paper23_ids {
    pub const THETA: usize = 0;
    /// (α,β) with α,β ∈ {0=a, 1=b}
    pub fn m1(alpha: usize, beta: usize) -> usize {
        1 + 2 * alpha + beta
    }
    /// [γ,λ] with indices in {0=i, 1=j, 2=k, 3=l}
    pub fn m2(gamma: usize, lambda: usize) -> usize {
        5 + 4 * gamma + lambda
    }
    pub const V1: usize = 21;
    pub const V2: usize = 22;
}

const ENUM_CAP: usize = 4;

/// All semigroups of order n up to isomorphism, in deterministic order
/// (sorted canonical tables). Backtracking over table cells with
/// associativity propagation; dedup by canonical form (minimum relabeled
/// table over all permutations).
pub fn enumerate_small(n: usize) -> Result<Vec<FiniteSemigroup>> {
    if n == 0 || n > ENUM_CAP {
        return Err(Error::BudgetExceeded(format!(
            "enumeration limited to orders 1..{ENUM_CAP}"
        )));
    }
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut table = vec![usize::MAX; n * n];
    enumerate_rec(n, 0, &mut table, &mut canon);
    canon
        .into_iter()
        .map(|flat| FiniteSemigroup::from_flat(n, flat, None))
        .collect()
}

/// Count of labeled associative tables of order n (no dedup).
pub fn count_labeled(n: usize) -> Result<usize> {
    if n == 0 || n > ENUM_CAP {
        return Err(Error::BudgetExceeded("order out of range".into()));
    }
    let mut count = 0usize;
    let mut table = vec![usize::MAX; n * n];
    count_rec(n, 0, &mut table, &mut count);
    Ok(count)
}

fn partial_ok(n: usize, table: &[usize]) -> bool {
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j];
            if ij == usize::MAX {
                continue;
            }
            for k in 0..n {
                let jk = table[j * n + k];
                if jk == usize::MAX {
                    continue;
                }
                let left = table[ij * n + k];
                let right = table[i * n + jk];
                if left != usize::MAX && right != usize::MAX && left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn enumerate_rec(n: usize, pos: usize, table: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    if pos == n * n {
        out.insert(canonical_form(n, table));
        return;
    }
    for v in 0..n {
        table[pos] = v;
        if partial_ok(n, table) {
            enumerate_rec(n, pos + 1, table, out);
        }
    }
    table[pos] = usize::MAX;
}

fn count_rec(n: usize, pos: usize, table: &mut Vec<usize>, count: &mut usize) {
    if pos == n * n {
        *count += 1;
        return;
    }
    for v in 0..n {
        table[pos] = v;
        if partial_ok(n, table) {
            count_rec(n, pos + 1, table, count);
        }
    }
    table[pos] = usize::MAX;
}

/// Minimum over all relabelings σ of the flat table σ∘t∘(σ⁻¹×σ⁻¹).
fn canonical_form(n: usize, table: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut cand = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                cand[perm[i] * n + perm[j]] = perm[table[i * n + j]];
            }
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::is_isomorphic;

    #[test]
    fn every_builtin_validates() {
        for name in BUILTIN_NAMES {
            let s = builtin(name).unwrap();
            assert!(s.order() >= 1, "{name}");
        }
    }

    #[test]
    fn f7_facts() {
        let f7 = builtin("f7").unwrap();
        assert_eq!(f7.order(), 7);
        // u·(1;1,1) = (1;2,1): ids 6·1 = 3
        assert_eq!(f7.prod(6, 1), 3);
        // ⟨u⟩ = {u, 1}
        let gen = crate::semigroup::generate_subsemigroup(&f7, &[6]);
        assert_eq!(gen, vec![5, 6]);
        assert!(crate::pseudo::is_inverse_semigroup(&f7));
        assert!(!crate::malcev::is_malcev_nilpotent(&f7).verdict);
    }

    #[test]
    fn paper23_products() {
        use paper23_ids::*;
        let s = builtin("paper23").unwrap();
        assert_eq!(s.order(), 23);
        // [i,i]·[i,k] = [i,k]
        assert_eq!(s.prod(m2(0, 0), m2(0, 2)), m2(0, 2));
        // [i,i]·[j,l] = (a,b): middles i ≠ j but φ(i) = φ(j) = a
        assert_eq!(s.prod(m2(0, 0), m2(1, 3)), m1(0, 1));
        // v1·[i,α] = [l,α]
        for alpha in 0..4 {
            assert_eq!(s.prod(V1, m2(0, alpha)), m2(3, alpha));
        }
        // v1² = v1v2 = v2v1 = v2² = θ
        for x in [V1, V2] {
            for y in [V1, V2] {
                assert_eq!(s.prod(x, y), THETA);
            }
        }
        assert_eq!(s.zero(), Some(THETA));
    }

    #[test]
    fn enumerate_counts() {
        // labeled associative tables: 1, 8, 113 (orders 1..3)
        assert_eq!(count_labeled(1).unwrap(), 1);
        assert_eq!(count_labeled(2).unwrap(), 8);
        assert_eq!(count_labeled(3).unwrap(), 113);
        // up to isomorphism (and not anti-isomorphism): 1, 5, 24
        assert_eq!(enumerate_small(1).unwrap().len(), 1);
        assert_eq!(enumerate_small(2).unwrap().len(), 5);
        assert_eq!(enumerate_small(3).unwrap().len(), 24);
    }

    #[test]
    fn enumerate_order4_count() {
        // 3492 labeled tables, 188 up to isomorphism
        assert_eq!(count_labeled(4).unwrap(), 3492);
        assert_eq!(enumerate_small(4).unwrap().len(), 188);
    }

    #[test]
    fn enumerated_are_pairwise_nonisomorphic() {
        let all = enumerate_small(3).unwrap();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(is_isomorphic(a, b).unwrap().is_none());
            }
        }
    }

    #[test]
    fn builtin_groups_resolve() {
        for name in ["trivial", "Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8"] {
            let g = builtin_group(name).unwrap();
            assert!(g.identity().is_some(), "{name}");
        }
        assert!(builtin_group("nope").is_err());
        assert!(builtin("nope").is_err());
    }
}
