//! The minimal non-nilpotent representation Γ over a CS-diagonal ideal
//! factor, orbit notation, the Γ-pattern condition of the root theorem,
//! and the upper non-nilpotent graph.

use crate::error::{Error, Result};
use crate::eta::{eta_star_root, EtaStarResult, Root};
use crate::green::{FactorKind, PrincipalSeries};
use crate::malcev::is_malcev_nilpotent;
use crate::rees::{component_partition, rees_coordinates, ComponentPartition};
use crate::semigroup::{generate_subsemigroup, FiniteSemigroup};

/// A self-map of {0..k-1} ∪ {θ} with θ absorbing; None encodes θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialTransformation {
    pub k: usize,
    pub map: Vec<Option<usize>>,
}

impl PartialTransformation {
    pub fn apply(&self, i: Option<usize>) -> Option<usize> {
        i.and_then(|i| self.map[i])
    }

    /// map(i₁) = map(i₂) ≠ θ forces i₁ = i₂.
    pub fn is_injective_off_theta(&self) -> bool {
        let mut seen = vec![false; self.k];
        for v in self.map.iter().flatten() {
            if seen[*v] {
                return false;
            }
            seen[*v] = true;
        }
        true
    }

    /// Composition applying `other` first: (self ∘ other)(i).
    pub fn compose(&self, other: &PartialTransformation) -> PartialTransformation {
        PartialTransformation {
            k: self.k,
            map: (0..self.k).map(|i| self.apply(other.map[i])).collect(),
        }
    }
}

/// Orbit notation with custom index names: cycles "(i_1,…,i_r)", chains
/// falling to θ "(i_1,…,i_r,θ)" (suppressed when r = 1), fixed points
/// "(i)", and "θ" for the all-θ map.
pub fn orbit_notation(t: &PartialTransformation, names: &[&str]) -> String {
    assert_eq!(names.len(), t.k);
    let k = t.k;
    // nodes on cycles: iterate the map k times
    let mut cur: Vec<Option<usize>> = (0..k).map(Some).collect();
    for _ in 0..k {
        cur = cur.into_iter().map(|i| t.apply(i)).collect();
    }
    let on_cycle: Vec<bool> = {
        let mut v = vec![false; k];
        for c in cur.into_iter().flatten() {
            v[c] = true;
        }
        v
    };
    let mut emitted: Vec<(usize, String)> = Vec::new();
    let mut visited = vec![false; k];
    // cycles, each written from its least member
    for start in 0..k {
        if !on_cycle[start] || visited[start] {
            continue;
        }
        let mut orbit = vec![start];
        visited[start] = true;
        let mut cur = t.map[start].unwrap();
        while cur != start {
            orbit.push(cur);
            visited[cur] = true;
            cur = t.map[cur].unwrap();
        }
        let text: Vec<&str> = orbit.iter().map(|&i| names[i]).collect();
        emitted.push((start, format!("({})", text.join(","))));
    }
    // chains: maximal paths into θ; injectivity off θ makes them disjoint
    let mut has_preimage = vec![false; k];
    for v in t.map.iter().flatten() {
        has_preimage[*v] = true;
    }
    for start in 0..k {
        if on_cycle[start] || has_preimage[start] {
            continue;
        }
        let mut orbit = vec![start];
        let mut cur = t.map[start];
        while let Some(c) = cur {
            if on_cycle[c] {
                // path feeding a cycle cannot occur for injective maps;
                // render it as a chain up to the cycle entry
                break;
            }
            orbit.push(c);
            cur = t.map[c];
        }
        if cur.is_none() && orbit.len() == 1 {
            continue; // the suppressed (i,θ) form
        }
        let mut text: Vec<&str> = orbit.iter().map(|&i| names[i]).collect();
        if cur.is_none() {
            text.push("θ");
        }
        emitted.push((start, format!("({})", text.join(","))));
    }
    if emitted.is_empty() {
        return "θ".to_string();
    }
    emitted.sort();
    emitted.into_iter().map(|(_, s)| s).collect()
}

pub fn orbit_notation_numeric(t: &PartialTransformation) -> String {
    let names: Vec<String> = (1..=t.k).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    orbit_notation(t, &refs)
}

/// Γ for factor p of a principal series: S acts from the left on the
/// CS-diagonal ideal S_p, with everything in S_{p+1} read as θ; indices
/// are the component classes of the factor's sandwich matrix.
#[derive(Debug, Clone)]
pub struct GammaRepresentation {
    pub k: usize,
    pub part: ComponentPartition,
    /// per ambient element id of S
    pub maps: Vec<PartialTransformation>,
}

pub fn min_nonnilpotent_representation(
    s: &FiniteSemigroup,
    series: &PrincipalSeries,
    p: usize,
) -> Result<GammaRepresentation> {
    let factor = &series.factors[p];
    if factor.kind == FactorKind::Null {
        return Err(Error::NotSimpleFactor);
    }
    let coords = rees_coordinates(factor)?;
    let part = component_partition(&coords.structure)?;
    let k = part.n_eta;
    let rp = &coords.structure;
    // ambient id -> column class of the factor element, None off the
    // difference set
    let mut amb_class = vec![None; s.order()];
    for (fid, &amb) in factor.embedding.iter().enumerate() {
        if amb == usize::MAX {
            continue;
        }
        let rid = coords.factor_to_rees[fid];
        if let Some((_, i, _)) = rp.decode(rid) {
            amb_class[amb] = Some(part.column_class_of[i]);
        }
    }
    let mut maps = Vec::with_capacity(s.order());
    for v in s.elements() {
        let mut map: Vec<Option<usize>> = vec![None; k];
        for (i, slot) in map.iter_mut().enumerate() {
            let mut value: Option<Option<usize>> = None;
            for &amb in &factor.embedding {
                if amb == usize::MAX || amb_class[amb] != Some(i) {
                    continue;
                }
                let result = amb_class[s.prod(v, amb)];
                match value {
                    None => value = Some(result),
                    Some(prev) if prev == result => {}
                    Some(prev) => {
                        return Err(Error::WellDefinedness(format!(
                            "Γ({v})({i}) ambiguous: {prev:?} vs {result:?}"
                        )))
                    }
                }
            }
            *slot = value.flatten();
        }
        let t = PartialTransformation { k, map };
        if !t.is_injective_off_theta() {
            return Err(Error::WellDefinedness(format!(
                "Γ({v}) is not injective off θ"
            )));
        }
        maps.push(t);
    }
    // homomorphism audit: Γ(st) = Γ(s) ∘ Γ(t)
    for a in s.elements() {
        for b in s.elements() {
            let lhs = &maps[s.prod(a, b)];
            let rhs = maps[a].compose(&maps[b]);
            if *lhs != rhs {
                return Err(Error::WellDefinedness(format!(
                    "Γ({a}·{b}) differs from Γ({a})∘Γ({b})"
                )));
            }
        }
    }
    Ok(GammaRepresentation { k, part, maps })
}

/// A crossing pattern certifying non-nilpotency of the layer action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaPattern {
    pub v1: usize,
    pub v2: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
}

/// Search for v1, v2 and k1 ≠ k3 with Γ(v1): k1↦k2, k3↦k4 and
/// Γ(v2): k1↦k4, k3↦k2. Returns the lexicographically least witness.
pub fn gamma_pattern_search(
    s: &FiniteSemigroup,
    series: &PrincipalSeries,
    p: usize,
) -> Result<Option<GammaPattern>> {
    let gamma = min_nonnilpotent_representation(s, series, p)?;
    let outside: Vec<usize> = if p + 1 < series.ideals.len() {
        let deeper = &series.ideals[p + 1];
        s.elements().filter(|x| !deeper.contains(x)).collect()
    } else {
        s.elements().collect()
    };
    for &v1 in &outside {
        for &v2 in &outside {
            for k1 in 0..gamma.k {
                let Some(k2) = gamma.maps[v1].map[k1] else {
                    continue;
                };
                for k3 in 0..gamma.k {
                    if k3 == k1 {
                        continue;
                    }
                    let (Some(k4), Some(b1), Some(b2)) = (
                        gamma.maps[v1].map[k3],
                        gamma.maps[v2].map[k1],
                        gamma.maps[v2].map[k3],
                    ) else {
                        continue;
                    };
                    if b1 == k4 && b2 == k2 && k2 != k4 {
                        return Ok(Some(GammaPattern {
                            v1,
                            v2,
                            k1,
                            k2,
                            k3,
                            k4,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternCase {
    /// Case (1): the root is a strictly deeper factor and the maps glue
    /// k1 with k3 and k2 with k4.
    DeeperFactor { p_prime: usize },
    /// Case (2): θ is the root of the factor.
    Theta,
}

/// Classify a found pattern: either the factor roots in a strictly
/// deeper layer with the expected gluing, or it collapses to θ.
pub fn theorem_d2_audit(
    s: &FiniteSemigroup,
    series: &PrincipalSeries,
    p: usize,
    pattern: &GammaPattern,
    eta: &EtaStarResult,
) -> Result<PatternCase> {
    let root = eta_star_root(s, series, p, eta)?;
    match root.root {
        Root::Theta => Ok(PatternCase::Theta),
        Root::Factor {
            index,
            phi_map,
            phi_prime_map,
        } => {
            if index == p {
                return Err(Error::TheoremViolation(format!(
                    "pattern found but the root of factor {p} is itself"
                )));
            }
            let gamma = min_nonnilpotent_representation(s, series, p)?;
            // φ on a component class: the common value over its columns
            let class_phi = |cls: usize| -> Result<usize> {
                let cols = &gamma.part.column_classes[cls];
                let vals: Vec<usize> = cols.iter().map(|&c| phi_map[c]).collect();
                if vals.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::TheoremViolation(format!(
                        "φ_{{η*}} not constant on component class {cls}"
                    )));
                }
                Ok(vals[0])
            };
            let class_phi_prime = |cls: usize| -> Result<usize> {
                let rows = &gamma.part.row_classes[cls];
                let vals: Vec<usize> = rows.iter().map(|&r| phi_prime_map[r]).collect();
                if vals.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::TheoremViolation(format!(
                        "φ′_{{η*}} not constant on component class {cls}"
                    )));
                }
                Ok(vals[0])
            };
            if class_phi(pattern.k1)? != class_phi(pattern.k3)? {
                return Err(Error::TheoremViolation(
                    "pattern columns k1, k3 have distinct φ images".into(),
                ));
            }
            if class_phi_prime(pattern.k2)? != class_phi_prime(pattern.k4)? {
                return Err(Error::TheoremViolation(
                    "pattern rows k2, k4 have distinct φ′ images".into(),
                ));
            }
            Ok(PatternCase::DeeperFactor { p_prime: index })
        }
    }
}

#[derive(Debug, Clone)]
pub struct NonNilpotentGraph {
    pub order: usize,
    /// unordered pairs {x,y}, x < y
    pub edges: Vec<(usize, usize)>,
}

/// Edge {x,y} iff ⟨x,y⟩ is not Mal'cev nilpotent. Monogenic subsemigroups
/// are commutative, hence nilpotent: no self-loops exist (asserted).
pub fn upper_nonnilpotent_graph(s: &FiniteSemigroup) -> NonNilpotentGraph {
    let mut edges = Vec::new();
    for x in s.elements() {
        let mono = generate_subsemigroup(s, &[x]);
        let (sub, _) = s.subsemigroup(&mono).unwrap();
        debug_assert!(
            is_malcev_nilpotent(&sub).verdict,
            "monogenic subsemigroup of {x} non-nilpotent"
        );
        for y in x + 1..s.order() {
            let gens = generate_subsemigroup(s, &[x, y]);
            let (sub, _) = s.subsemigroup(&gens).unwrap();
            if !is_malcev_nilpotent(&sub).verdict {
                edges.push((x, y));
            }
        }
    }
    NonNilpotentGraph {
        order: s.order(),
        edges,
    }
}

/// Empty upper non-nilpotent graph. Nilpotency of S is a sound shortcut:
/// the Mal'cev identities are inherited by every subsemigroup.
pub fn is_eunng(s: &FiniteSemigroup) -> bool {
    if is_malcev_nilpotent(s).verdict {
        return true;
    }
    upper_nonnilpotent_graph(s).edges.is_empty()
}
