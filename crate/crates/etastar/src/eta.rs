//! The η* congruence and the structure theory around it: the brute-force
//! oracle, G_{η*}, the canonical projection onto the quotient Rees form,
//! η*-roots of principal factors and the semisimple class audit.

use crate::error::{Error, Result};
use crate::green::{FactorKind, PrincipalSeries};
use crate::group::{group_quotient, nilpotent_residual, normal_closure, GroupData};
use crate::malcev::{eta_pairs, is_malcev_nilpotent};
use crate::rees::{
    build_rees, component_partition, is_cs_diagonal, rees_coordinates, ComponentPartition,
    ReesStructure,
};
use crate::semigroup::{
    congruence_closure, quotient, Congruence, FiniteSemigroup, Partition, SemigroupMorphism,
};

#[derive(Debug, Clone)]
pub struct EtaStarResult {
    pub congruence: Congruence,
    pub quotient: FiniteSemigroup,
    pub projection: SemigroupMorphism,
    pub class_count: usize,
}

/// η*: the congruence closure of the η-pairs. The quotient is verified
/// Mal'cev nilpotent (guaranteed by the cycle-pair construction).
pub fn eta_star(s: &FiniteSemigroup) -> EtaStarResult {
    let congruence = congruence_closure(s, &eta_pairs(s));
    let (q, projection) = quotient(s, &congruence);
    debug_assert!(is_malcev_nilpotent(&q).verdict);
    let class_count = congruence.class_count();
    EtaStarResult {
        congruence,
        quotient: q,
        projection,
        class_count,
    }
}

const ORACLE_CAP: usize = 8;

/// Independent oracle: enumerate every partition of the element set (as
/// restricted-growth strings, lexicographic), keep the congruences whose
/// quotient is Mal'cev nilpotent, and return their meet. The meet is
/// verified to qualify itself.
pub fn eta_star_bruteforce(s: &FiniteSemigroup) -> Result<Congruence> {
    let n = s.order();
    if n > ORACLE_CAP {
        return Err(Error::BudgetExceeded(format!(
            "oracle limited to order {ORACLE_CAP}, got {n}"
        )));
    }
    let mut meet: Option<Partition> = None;
    let mut rgs = vec![0usize; n];
    loop {
        let part = Partition::from_markers(&rgs);
        let cand = Congruence { partition: part };
        if cand.is_congruence(s) {
            let (q, _) = quotient(s, &cand);
            if is_malcev_nilpotent(&q).verdict {
                meet = Some(match meet {
                    None => cand.partition,
                    Some(m) => m.meet(&cand.partition),
                });
            }
        }
        // next restricted-growth string
        let mut i = n;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if i == 0 {
                break false;
            }
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break true;
            }
        };
        if !advanced {
            break;
        }
    }
    let result = Congruence {
        partition: meet.expect("universal congruence always qualifies"),
    };
    // the meet must itself be a qualifying congruence
    if !result.is_congruence(s) {
        return Err(Error::TheoremViolation(
            "meet of nilpotent-quotient congruences is not a congruence".into(),
        ));
    }
    let (q, _) = quotient(s, &result);
    if !is_malcev_nilpotent(&q).verdict {
        return Err(Error::TheoremViolation(
            "meet of nilpotent-quotient congruences has non-nilpotent quotient".into(),
        ));
    }
    Ok(result)
}

/// G_{η*} data for a CS-diagonal Rees structure: the quotient group, the
/// composite projection φ_{η*}, and the β/α coset maps.
#[derive(Debug, Clone)]
pub struct GEtaStar {
    pub structure: ReesStructure,
    pub part: ComponentPartition,
    /// G_{η*} = (G / γ_∞(G)) / normal closure of the sandwich relators
    pub group: GroupData,
    /// G id -> G_{η*} id
    pub phi: Vec<usize>,
}

pub fn g_eta_star(r: &ReesStructure) -> Result<GEtaStar> {
    if !is_cs_diagonal(r) {
        return Err(Error::NotDiagonal);
    }
    let part = component_partition(r)?;
    let g = &r.group;
    let resid = nilpotent_residual(g);
    let (q, q_map) = group_quotient(g, &resid)?;

    // relators in G, then pushed through q_map:
    // columns: (p_{x,c'}⁻¹ p_{x,c}) (p_{β,c'}⁻¹ p_{β,c})⁻¹ over rows x,β
    // of the class of columns c,c'
    let mut relators: Vec<usize> = Vec::new();
    for (cls, cols) in part.column_classes.iter().enumerate() {
        let rows = &part.row_classes[cls];
        for &c in cols {
            for &cp in cols {
                let ratios: Vec<usize> = rows
                    .iter()
                    .map(|&x| {
                        let pc = r.p(x, c).expect("block law");
                        let pcp = r.p(x, cp).expect("block law");
                        g.prod(g.inv(pcp), pc)
                    })
                    .collect();
                for w in ratios.windows(2) {
                    relators.push(q_map[g.prod(w[0], g.inv(w[1]))]);
                }
            }
        }
        // rows: (p_{d,y} p_{d',y}⁻¹) (p_{d,α} p_{d',α}⁻¹)⁻¹ over columns
        // y,α of the class of rows d,d'
        for &d in rows {
            for &dp in rows {
                let ratios: Vec<usize> = cols
                    .iter()
                    .map(|&y| {
                        let pd = r.p(d, y).expect("block law");
                        let pdp = r.p(dp, y).expect("block law");
                        g.prod(pd, g.inv(pdp))
                    })
                    .collect();
                for w in ratios.windows(2) {
                    relators.push(q_map[g.prod(w[0], g.inv(w[1]))]);
                }
            }
        }
    }
    let n = normal_closure(&q, &relators);
    let (geta, n_map) = group_quotient(&q, &n)?;
    let phi: Vec<usize> = (0..g.order()).map(|x| n_map[q_map[x]]).collect();
    let out = GEtaStar {
        structure: r.clone(),
        part,
        group: geta,
        phi,
    };
    out.verify_well_defined()?;
    Ok(out)
}

impl GEtaStar {
    /// β_{c′,c}: the common class of p_{β,c′}⁻¹ p_{β,c} over rows β of the
    /// class of columns c, c′.
    pub fn beta(&self, c_prime: usize, c: usize) -> usize {
        let r = &self.structure;
        let g = &r.group;
        let cls = self.part.column_class_of[c];
        assert_eq!(cls, self.part.column_class_of[c_prime]);
        let row = self.part.row_classes[cls][0];
        let val = g.prod(g.inv(r.p(row, c_prime).unwrap()), r.p(row, c).unwrap());
        self.phi[val]
    }

    /// α_{d′,d}: the common class of p_{d,α} p_{d′,α}⁻¹ over columns α of
    /// the class of rows d, d′.
    pub fn alpha(&self, d_prime: usize, d: usize) -> usize {
        let r = &self.structure;
        let g = &r.group;
        let cls = self.part.row_class_of[d];
        assert_eq!(cls, self.part.row_class_of[d_prime]);
        let col = self.part.column_classes[cls][0];
        let val = g.prod(r.p(d, col).unwrap(), g.inv(r.p(d_prime, col).unwrap()));
        self.phi[val]
    }

    fn verify_well_defined(&self) -> Result<()> {
        let r = &self.structure;
        let g = &r.group;
        for (cls, cols) in self.part.column_classes.iter().enumerate() {
            let rows = &self.part.row_classes[cls];
            for &c in cols {
                for &cp in cols {
                    let vals: Vec<usize> = rows
                        .iter()
                        .map(|&x| {
                            self.phi
                                [g.prod(g.inv(r.p(x, cp).unwrap()), r.p(x, c).unwrap())]
                        })
                        .collect();
                    if vals.windows(2).any(|w| w[0] != w[1]) {
                        return Err(Error::WellDefinedness(format!(
                            "β_{{{cp},{c}}} depends on the row"
                        )));
                    }
                }
            }
            for &d in rows {
                for &dp in rows {
                    let vals: Vec<usize> = cols
                        .iter()
                        .map(|&y| {
                            self.phi
                                [g.prod(r.p(d, y).unwrap(), g.inv(r.p(dp, y).unwrap()))]
                        })
                        .collect();
                    if vals.windows(2).any(|w| w[0] != w[1]) {
                        return Err(Error::WellDefinedness(format!(
                            "α_{{{dp},{d}}} depends on the column"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// M⁰(G_{η*}, n_{η*}, n_{η*}; I): the Rees form of the η*-quotient of a
/// CS-diagonal structure.
pub fn rees_eta_star_quotient(r: &ReesStructure) -> Result<ReesStructure> {
    let data = g_eta_star(r)?;
    let k = data.part.n_eta;
    let id = data.group.identity;
    let sandwich: Vec<Vec<Option<usize>>> = (0..k)
        .map(|j| (0..k).map(|i| if i == j { Some(id) } else { None }).collect())
        .collect();
    ReesStructure::new(data.group, k, k, sandwich, r.effective_zero())
}

/// The explicit surjection build_rees(r) → build_rees(rees_eta_star_quotient(r)):
/// (g;c,d) ↦ (β_{A,c} · φ_{η*}(g) · α_{B,d} · φ_{η*}(p_{B,A_b}); a, b)
/// where a, b are the component classes of c and d, A the least column of
/// class a, B the least row of class b and A_b the least column of class
/// b. The trailing factor renormalizes onto the identity sandwich.
pub fn canonical_projection(r: &ReesStructure) -> Result<SemigroupMorphism> {
    let data = g_eta_star(r)?;
    let target_structure = rees_eta_star_quotient(r)?;
    let source = build_rees(r);
    let target = build_rees(&target_structure);
    let geta = &data.group;
    let mut map = vec![usize::MAX; source.order()];
    if let Some(t) = r.theta_id() {
        map[t] = target_structure
            .theta_id()
            .expect("quotient keeps the zero");
    }
    for c in 0..r.n {
        for d in 0..r.m {
            let a = data.part.column_class_of[c];
            let b = data.part.row_class_of[d];
            let a_min = data.part.column_classes[a][0];
            let b_min_row = data.part.row_classes[b][0];
            let b_min_col = data.part.column_classes[b][0];
            let beta = data.beta(a_min, c);
            let alpha = data.alpha(b_min_row, d);
            let norm = data.phi[r.p(b_min_row, b_min_col).expect("block law")];
            for g in 0..r.group.order() {
                let val = geta.prod(
                    geta.prod(geta.prod(beta, data.phi[g]), alpha),
                    norm,
                );
                map[r.element_id(g, c, d)] = target_structure.element_id(val, a, b);
            }
        }
    }
    let morph = SemigroupMorphism {
        source,
        target,
        map,
    };
    if !morph.is_morphism() || !morph.is_surjective() {
        return Err(Error::WellDefinedness(
            "canonical projection is not a surjective morphism".into(),
        ));
    }
    Ok(morph)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Root {
    /// The whole difference set collapses into the class of θ.
    Theta,
    /// The factor's classes land in factor `index`; the maps send column
    /// and row indices of the source factor to component classes of the
    /// root factor.
    Factor {
        index: usize,
        phi_map: Vec<usize>,
        phi_prime_map: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct RootResult {
    pub source_factor: usize,
    pub root: Root,
}

/// The η*-root of a non-null principal factor: θ, or the unique deeper
/// CS-diagonal factor absorbing its η*-classes.
pub fn eta_star_root(
    s: &FiniteSemigroup,
    series: &PrincipalSeries,
    p: usize,
    eta: &EtaStarResult,
) -> Result<RootResult> {
    let factor = &series.factors[p];
    if factor.kind == FactorKind::Null {
        return Err(Error::NullFactor);
    }
    let diff_p = &factor.jclass;
    if let Some(z) = s.zero() {
        if diff_p.iter().any(|&a| eta.congruence.same(a, z)) {
            // θ case: the whole difference set must lie in the class of θ
            for &a in diff_p {
                if !eta.congruence.same(a, z) {
                    return Err(Error::TheoremViolation(format!(
                        "element {a} of a θ-rooted factor escapes the class of θ"
                    )));
                }
            }
            return Ok(RootResult {
                source_factor: p,
                root: Root::Theta,
            });
        }
    }
    // p′: the biggest factor index whose difference set meets an η*-class
    // of the difference set of p
    let o = series.factors.len();
    let mut p_prime = None;
    for q in (0..o).rev() {
        let hit = series.factors[q].jclass.iter().any(|&b| {
            diff_p.iter().any(|&a| eta.congruence.same(a, b))
        });
        if hit {
            p_prime = Some(q);
            break;
        }
    }
    let pp = p_prime.expect("a ∈ diff_p is η*-equivalent to itself");
    if pp < p {
        return Err(Error::TheoremViolation(format!(
            "root index {pp} precedes source factor {p}"
        )));
    }
    let root_factor = &series.factors[pp];
    let diff_pp = &root_factor.jclass;
    // every element of diff_p must have an η*-partner in diff_pp
    for &a in diff_p {
        if !diff_pp.iter().any(|&b| eta.congruence.same(a, b)) {
            return Err(Error::TheoremViolation(format!(
                "element {a} of factor {p} has no η*-partner in root factor {pp}"
            )));
        }
    }
    // no element of either difference set may be equivalent
    // into S_{p′+1}
    let deeper: Vec<usize> = if pp + 1 < series.ideals.len() {
        series.ideals[pp + 1].clone()
    } else {
        Vec::new()
    };
    for &a in diff_p.iter().chain(diff_pp.iter()) {
        for &b in &deeper {
            if eta.congruence.same(a, b) {
                return Err(Error::TheoremViolation(format!(
                    "element {a} is η*-equivalent to {b} below the root factor"
                )));
            }
        }
    }
    // the root factor must be CS-diagonal
    let root_coords = rees_coordinates(root_factor)?;
    if !is_cs_diagonal(&root_coords.structure) {
        return Err(Error::TheoremViolation(
            "η*-root factor is not CS-diagonal".into(),
        ));
    }
    let root_part = component_partition(&root_coords.structure)?;

    // φ_{η*} / φ′_{η*}: columns and rows of factor p map single-valuedly
    // to component classes of the root factor
    let coords_p = rees_coordinates(factor)?;
    let rp = &coords_p.structure;
    let rr = &root_coords.structure;
    let mut phi_map = vec![usize::MAX; rp.n];
    let mut phi_prime_map = vec![usize::MAX; rp.m];
    // ambient id of a root-factor element -> (column class, row class)
    let root_class_of = |amb: usize| -> Option<(usize, usize)> {
        let fid_in_factor = root_factor.embedding.iter().position(|&x| x == amb)?;
        let rid = root_coords.factor_to_rees[fid_in_factor];
        let (_, i, j) = rr.decode(rid)?;
        Some((root_part.column_class_of[i], root_part.row_class_of[j]))
    };
    #[allow(clippy::needless_range_loop)] // two-axis sandwich traversal
    for g in 0..rp.group.order() {
        for i in 0..rp.n {
            for j in 0..rp.m {
                let fid = coords_p.rees_to_factor[rp.element_id(g, i, j)];
                let amb = factor.embedding[fid];
                for &b in diff_pp {
                    if eta.congruence.same(amb, b) {
                        let (bc, brc) = root_class_of(b).ok_or_else(|| {
                            Error::TheoremViolation("root partner not in root factor".into())
                        })?;
                        if phi_map[i] == usize::MAX {
                            phi_map[i] = bc;
                        } else if phi_map[i] != bc {
                            return Err(Error::TheoremViolation(format!(
                                "φ_{{η*}} not single-valued on column {i}"
                            )));
                        }
                        if phi_prime_map[j] == usize::MAX {
                            phi_prime_map[j] = brc;
                        } else if phi_prime_map[j] != brc {
                            return Err(Error::TheoremViolation(format!(
                                "φ′_{{η*}} not single-valued on row {j}"
                            )));
                        }
                    }
                }
            }
        }
    }
    if phi_map.iter().chain(phi_prime_map.iter()).any(|&v| v == usize::MAX) {
        return Err(Error::TheoremViolation(
            "φ_{η*}/φ′_{η*} left some index unassigned".into(),
        ));
    }
    Ok(RootResult {
        source_factor: p,
        root: Root::Factor {
            index: pp,
            phi_map,
            phi_prime_map,
        },
    })
}

#[derive(Debug, Clone)]
pub struct ClassAssignment {
    pub class_index: usize,
    /// None: the class containing θ; Some(q): the root factor index
    pub root_factor: Option<usize>,
}

/// For a semisimple semigroup, assign every η*-class to θ or to the root
/// factor hosting it, verifying the expected class structure.
pub fn semisimple_class_audit(
    s: &FiniteSemigroup,
    series: &PrincipalSeries,
    eta: &EtaStarResult,
) -> Result<Vec<ClassAssignment>> {
    if !crate::green::is_semisimple(s) {
        return Err(Error::NotSemisimple);
    }
    let mut out = Vec::new();
    for (ci, cls) in eta.congruence.partition.classes().iter().enumerate() {
        if let Some(z) = s.zero() {
            if cls.contains(&z) {
                out.push(ClassAssignment {
                    class_index: ci,
                    root_factor: None,
                });
                continue;
            }
        }
        // deepest factor the class touches
        let q = (0..series.factors.len())
            .rev()
            .find(|&q| series.factors[q].jclass.iter().any(|b| cls.contains(b)))
            .expect("class is nonempty");
        // every factor the class touches must have root q
        for p in 0..series.factors.len() {
            if series.factors[p].jclass.iter().any(|b| cls.contains(b)) {
                let root = eta_star_root(s, series, p, eta)?;
                match root.root {
                    Root::Factor { index, .. } if index == q => {}
                    other => {
                        return Err(Error::TheoremViolation(format!(
                            "class {ci} touches factor {p} whose root is {other:?}, expected factor {q}"
                        )))
                    }
                }
            }
        }
        out.push(ClassAssignment {
            class_index: ci,
            root_factor: Some(q),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;
    use crate::green::principal_series;
    use crate::rees::{brandt_structure, trivial_group};
    use crate::semigroup::is_isomorphic;

    fn all_ones22(has_zero: bool) -> ReesStructure {
        ReesStructure::new(
            trivial_group(),
            2,
            2,
            vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]],
            has_zero,
        )
        .unwrap()
    }

    #[test]
    fn b2_eta_star_is_identity() {
        let b2 = builtin("b2").unwrap();
        let res = eta_star(&b2);
        assert_eq!(res.class_count, 5);
        assert!(is_isomorphic(&res.quotient, &b2).unwrap().is_some());
    }

    #[test]
    fn noncsd_collapses_to_point() {
        let s = builtin("noncsd22").unwrap();
        let res = eta_star(&s);
        assert_eq!(res.class_count, 1);
        assert_eq!(res.quotient.order(), 1);
    }

    #[test]
    fn s3_eta_star_is_a3_cosets() {
        let s3 = builtin("s3").unwrap();
        let res = eta_star(&s3);
        assert_eq!(res.class_count, 2);
        assert_eq!(res.quotient.order(), 2);
        let g = GroupData::from_semigroup(&s3).unwrap();
        let a3 = nilpotent_residual(&g);
        for &x in &a3 {
            assert!(res.congruence.same(g.identity, x));
        }
    }

    #[test]
    fn z6_eta_star_identity() {
        let z6 = builtin("z6").unwrap();
        assert_eq!(eta_star(&z6).class_count, 6);
    }

    #[test]
    fn oracle_matches_on_small_builtins() {
        for name in [
            "trivial",
            "null2",
            "null3",
            "leftzero2",
            "semilattice2",
            "z2",
            "z3",
            "z4",
            "b2",
            "noncsd22",
            "s3",
            "z6",
        ] {
            let s = builtin(name).unwrap();
            if s.order() > 8 {
                continue;
            }
            let fast = eta_star(&s).congruence;
            let slow = eta_star_bruteforce(&s).unwrap();
            assert_eq!(fast.partition, slow.partition, "{name}");
        }
    }

    #[test]
    fn oracle_cap_enforced() {
        let s = builtin("paper23").unwrap();
        assert!(matches!(
            eta_star_bruteforce(&s),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn g_eta_star_trivial_group() {
        let data = g_eta_star(&brandt_structure(2)).unwrap();
        assert_eq!(data.group.order(), 1);
        assert_eq!(data.part.n_eta, 2);
    }

    fn z2_group() -> GroupData {
        GroupData::from_semigroup(&builtin("z2").unwrap()).unwrap()
    }

    #[test]
    fn z2_all_ones_with_twist_forces_trivial() {
        // completely simple, P = [[1,1],[1,g]] with g ≠ 1 in Z2: the
        // column-ratio relators force g = 1 in G_{η*}
        let g = z2_group();
        let nontrivial = (0..2).find(|&x| x != g.identity).unwrap();
        let r = ReesStructure::new(
            g,
            2,
            2,
            vec![
                vec![Some(0), Some(0)],
                vec![Some(0), Some(nontrivial)],
            ],
            false,
        )
        .unwrap();
        let data = g_eta_star(&r).unwrap();
        assert_eq!(data.part.n_eta, 1);
        assert_eq!(data.group.order(), 1);
    }

    #[test]
    fn z2_identity_sandwich_keeps_group() {
        let g = z2_group();
        let id = g.identity;
        let r = ReesStructure::new(
            g,
            2,
            2,
            vec![vec![Some(id), None], vec![None, Some(id)]],
            true,
        )
        .unwrap();
        let data = g_eta_star(&r).unwrap();
        assert_eq!(data.part.n_eta, 2);
        assert_eq!(data.group.order(), 2);
    }

    #[test]
    fn cocycle_laws() {
        let g = z2_group();
        let nontrivial = (0..2).find(|&x| x != g.identity).unwrap();
        let r = ReesStructure::new(
            g,
            3,
            2,
            vec![
                vec![Some(0), Some(1), Some(nontrivial)],
                vec![Some(0), Some(0), Some(0)],
            ],
            false,
        )
        .unwrap();
        let data = g_eta_star(&r).unwrap();
        assert_eq!(data.part.n_eta, 1);
        let geta = &data.group;
        for c in 0..3 {
            assert_eq!(data.beta(c, c), geta.identity);
            for c2 in 0..3 {
                for c3 in 0..3 {
                    let lhs = geta.prod(data.beta(c3, c2), data.beta(c2, c));
                    assert_eq!(lhs, data.beta(c3, c));
                }
            }
        }
        for d in 0..2 {
            assert_eq!(data.alpha(d, d), geta.identity);
            for d2 in 0..2 {
                for d3 in 0..2 {
                    let lhs = geta.prod(data.alpha(d2, d), data.alpha(d3, d2));
                    assert_eq!(lhs, data.alpha(d3, d));
                }
            }
        }
    }

    #[test]
    fn quotient_form_b2() {
        // B2: η* is the identity, so the quotient Rees form is B2 again
        let r = brandt_structure(2);
        let qr = rees_eta_star_quotient(&r).unwrap();
        let q = build_rees(&qr);
        let b2 = build_rees(&r);
        assert!(is_isomorphic(&q, &b2).unwrap().is_some());
        let proj = canonical_projection(&r).unwrap();
        assert!(proj.is_bijective());
    }

    #[test]
    fn quotient_form_all_ones() {
        // with zero: quotient is M⁰({1},1,1;I₁), two elements
        let r = all_ones22(true);
        let qr = rees_eta_star_quotient(&r).unwrap();
        let q = build_rees(&qr);
        assert_eq!(q.order(), 2);
        let proj = canonical_projection(&r).unwrap();
        let eta = eta_star(&proj.source);
        assert_eq!(proj.kernel().partition, eta.congruence.partition);
        // without zero (completely simple): quotient ≅ G_{η*}, trivial
        let r = all_ones22(false);
        let q = build_rees(&rees_eta_star_quotient(&r).unwrap());
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn projection_kernel_is_eta_star_b2() {
        let r = brandt_structure(2);
        let proj = canonical_projection(&r).unwrap();
        let eta = eta_star(&proj.source);
        assert_eq!(proj.kernel().partition, eta.congruence.partition);
    }

    #[test]
    fn root_of_nilpotent_whole_is_itself() {
        let b2 = builtin("b2").unwrap();
        let series = principal_series(&b2);
        let eta = eta_star(&b2);
        let root = eta_star_root(&b2, &series, 0, &eta).unwrap();
        match root.root {
            Root::Factor { index, .. } => assert_eq!(index, 0),
            other => panic!("expected Factor(0), got {other:?}"),
        }
    }

    #[test]
    fn root_of_noncsd_is_theta() {
        let s = builtin("noncsd22").unwrap();
        let series = principal_series(&s);
        let eta = eta_star(&s);
        let p = series
            .factors
            .iter()
            .position(|f| f.kind != FactorKind::Null && f.jclass.len() == 4)
            .unwrap();
        let root = eta_star_root(&s, &series, p, &eta).unwrap();
        assert_eq!(root.root, Root::Theta);
    }

    #[test]
    fn null_factor_has_no_root() {
        let s = builtin("paper23").unwrap();
        let series = principal_series(&s);
        let eta = eta_star(&s);
        let p = series
            .factors
            .iter()
            .position(|f| f.kind == FactorKind::Null)
            .unwrap();
        assert!(matches!(
            eta_star_root(&s, &series, p, &eta),
            Err(Error::NullFactor)
        ));
    }

    #[test]
    fn semisimple_audit_b2_and_f7() {
        for name in ["b2", "f7", "s3"] {
            let s = builtin(name).unwrap();
            let series = principal_series(&s);
            let eta = eta_star(&s);
            let audit = semisimple_class_audit(&s, &series, &eta).unwrap();
            assert_eq!(audit.len(), eta.class_count, "{name}");
        }
    }

    #[test]
    fn audit_rejects_non_semisimple() {
        let s = builtin("paper23").unwrap();
        let series = principal_series(&s);
        let eta = eta_star(&s);
        assert!(matches!(
            semisimple_class_audit(&s, &series, &eta),
            Err(Error::NotSemisimple)
        ));
    }
}
