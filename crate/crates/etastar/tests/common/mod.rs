//! Shared helpers for integration tests: randomized Rees structures,
//! corpus assembly, partition enumeration.

// each test binary compiles this module separately and uses a subset
#![allow(dead_code)]

use etastar::corpus::{builtin, enumerate_small, BUILTIN_NAMES};
use etastar::group::GroupData;
use etastar::rees::{is_cs_diagonal, ReesStructure};
use etastar::semigroup::{Congruence, FiniteSemigroup, Partition};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn cyclic_group(n: usize) -> GroupData {
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupData::from_semigroup(&FiniteSemigroup::new(table, None).unwrap()).unwrap()
}

/// A random group of order ≤ max_order: cyclic, or S3 when it fits.
pub fn random_group(rng: &mut ChaCha8Rng, max_order: usize) -> GroupData {
    if max_order >= 6 && rng.gen_bool(0.25) {
        return GroupData::from_semigroup(&builtin("s3").unwrap()).unwrap();
    }
    cyclic_group(rng.gen_range(1..=max_order))
}

/// Random regular sandwich structure by rejection; entries nonzero with
/// probability `density`.
pub fn random_regular(
    rng: &mut ChaCha8Rng,
    max_dim: usize,
    max_group: usize,
    density: f64,
) -> ReesStructure {
    loop {
        let group = random_group(rng, max_group);
        let n = rng.gen_range(1..=max_dim);
        let m = rng.gen_range(1..=max_dim);
        let go = group.order();
        let sandwich: Vec<Vec<Option<usize>>> = (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(density) {
                            Some(rng.gen_range(0..go))
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(r) = ReesStructure::new(group, n, m, sandwich, true) {
            return r;
        }
    }
}

/// Random regular structure that is NOT CS-diagonal (rejection).
pub fn random_non_cs_diagonal(rng: &mut ChaCha8Rng) -> ReesStructure {
    loop {
        let r = random_regular(rng, 3, 4, 0.6);
        if !is_cs_diagonal(&r) {
            return r;
        }
    }
}

/// Random CS-diagonal regular structure, built blockwise: k paired
/// column/row classes, nonzero entries exactly on paired blocks.
pub fn random_cs_diagonal(rng: &mut ChaCha8Rng, max_dim: usize, max_group: usize) -> ReesStructure {
    let group = random_group(rng, max_group);
    let go = group.order();
    let n = rng.gen_range(1..=max_dim);
    let m = rng.gen_range(1..=max_dim);
    let k = rng.gen_range(1..=n.min(m));
    let col_class = random_classes(rng, n, k);
    let row_class = random_classes(rng, m, k);
    let sandwich: Vec<Vec<Option<usize>>> = (0..m)
        .map(|j| {
            (0..n)
                .map(|i| {
                    if row_class[j] == col_class[i] {
                        Some(rng.gen_range(0..go))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    ReesStructure::new(group, n, m, sandwich, true).unwrap()
}

/// Random completely simple structure: all entries nonzero, no θ.
pub fn random_completely_simple(rng: &mut ChaCha8Rng, max_dim: usize, max_group: usize) -> ReesStructure {
    let group = random_group(rng, max_group);
    let go = group.order();
    let n = rng.gen_range(1..=max_dim);
    let m = rng.gen_range(1..=max_dim);
    let sandwich: Vec<Vec<Option<usize>>> = (0..m)
        .map(|_| (0..n).map(|_| Some(rng.gen_range(0..go))).collect())
        .collect();
    ReesStructure::new(group, n, m, sandwich, false).unwrap()
}

/// Surjective assignment of `n` items onto classes 0..k.
fn random_classes(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; n];
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    for (c, &i) in idx.iter().take(k).enumerate() {
        out[i] = c;
    }
    for &i in idx.iter().skip(k) {
        out[i] = rng.gen_range(0..k);
    }
    out
}

/// The full test corpus: every builtin followed by every semigroup of
/// order ≤ 4 up to isomorphism.
pub fn full_corpus() -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> = BUILTIN_NAMES
        .iter()
        .map(|&n| (n.to_string(), builtin(n).unwrap()))
        .collect();
    for n in 1..=4 {
        for (i, s) in enumerate_small(n).unwrap().into_iter().enumerate() {
            out.push((format!("enum{n}_{i}"), s));
        }
    }
    out
}

/// All partitions of 0..n as restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        out.push(Partition::from_markers(&rgs));
        // next RGS: increment the rightmost position that can grow
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for x in rgs[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// All congruences of S (only sensible for small S).
pub fn all_congruences(s: &FiniteSemigroup) -> Vec<Congruence> {
    all_partitions(s.order())
        .into_iter()
        .map(|partition| Congruence { partition })
        .filter(|c| c.is_congruence(s))
        .collect()
}
