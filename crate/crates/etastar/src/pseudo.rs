//! Structural predicates (block group, inverse, completely regular,
//! Clifford), semilattice decompositions of completely regular
//! semigroups, the EDS condition, and the membership/containment audits.

use std::fmt;

use crate::error::{Error, Result};
use crate::eta::{eta_star, g_eta_star};
use crate::green::{compute_green, principal_series, FactorKind};
use crate::group::{is_nilpotent_group, maximal_subgroup, GroupData};
use crate::malcev::{is_malcev_nilpotent, is_neumann_taylor, is_positively_engel};
use crate::rees::{incidence_graph, rees_coordinates};
use crate::repr::is_eunng;
use crate::semigroup::{generate_subsemigroup, Congruence, FiniteSemigroup};

/// All y with xyx = x and yxy = y.
pub fn inverses_of(s: &FiniteSemigroup, x: usize) -> Vec<usize> {
    s.elements()
        .filter(|&y| s.prod(s.prod(x, y), x) == x && s.prod(s.prod(y, x), y) == y)
        .collect()
}

pub fn is_regular(s: &FiniteSemigroup) -> bool {
    s.elements()
        .all(|x| s.elements().any(|y| s.prod(s.prod(x, y), x) == x))
}

/// Every element has at most one inverse.
pub fn is_block_group(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| inverses_of(s, x).len() <= 1)
}

/// Regular block group.
pub fn is_inverse_semigroup(s: &FiniteSemigroup) -> bool {
    s.elements().all(|x| inverses_of(s, x).len() == 1)
}

/// Every element lies in a subgroup: its H-class contains an idempotent.
pub fn is_completely_regular(s: &FiniteSemigroup) -> bool {
    let green = compute_green(s);
    s.elements().all(|x| {
        green
            .h
            .class_containing(x)
            .iter()
            .any(|&y| s.is_idempotent(y))
    })
}

pub fn is_clifford(s: &FiniteSemigroup) -> bool {
    is_inverse_semigroup(s) && is_completely_regular(s)
}

/// The maximal subgroups of S: one per idempotent-bearing H-class.
pub fn maximal_subgroups(s: &FiniteSemigroup) -> Vec<GroupData> {
    let green = compute_green(s);
    let mut out = Vec::new();
    for cls in green.h.classes() {
        if cls.iter().any(|&x| s.is_idempotent(x)) {
            out.push(maximal_subgroup(s, cls).expect("idempotent H-class is a group"));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct SemilatticeDecomposition {
    /// the quotient by J, a semilattice
    pub semilattice: FiniteSemigroup,
    /// J-classes of S, each a completely simple subsemigroup
    pub components: Vec<Vec<usize>>,
}

/// A completely regular semigroup is a semilattice of its completely
/// simple J-classes. Additionally audits the η* restriction: on each
/// component, the induced group is a quotient of that component's
/// G_{η*}.
pub fn semilattice_decomposition(s: &FiniteSemigroup) -> Result<SemilatticeDecomposition> {
    if !is_completely_regular(s) {
        return Err(Error::NotCompletelyRegular);
    }
    let green = compute_green(s);
    let j_cong = Congruence {
        partition: green.j.clone(),
    };
    if !j_cong.is_congruence(s) {
        return Err(Error::TheoremViolation(
            "J is not a congruence on a completely regular semigroup".into(),
        ));
    }
    let (y, _) = crate::semigroup::quotient(s, &j_cong);
    if !y.is_commutative() || !y.elements().all(|x| y.is_idempotent(x)) {
        return Err(Error::TheoremViolation(
            "J-quotient of a completely regular semigroup is not a semilattice".into(),
        ));
    }
    let components: Vec<Vec<usize>> = green.j.classes().to_vec();
    component_group_audit(s, &components)?;
    Ok(SemilatticeDecomposition {
        semilattice: y,
        components,
    })
}

/// For each completely simple component T of a completely regular S: the
/// image of T in S/η* is completely simple with maximal subgroup G′, and
/// the projection G → G′ (G the maximal subgroup of T) factors through
/// G → G_{η*}(T). Verified by a kernel-containment check.
fn component_group_audit(s: &FiniteSemigroup, components: &[Vec<usize>]) -> Result<()> {
    let eta = eta_star(s);
    for comp in components {
        let (t, back) = s.subsemigroup(comp)?;
        let series = principal_series(&t);
        if series.factors.len() != 1 || series.factors[0].kind != FactorKind::CompletelySimple {
            return Err(Error::TheoremViolation(
                "component of a completely regular semigroup is not completely simple".into(),
            ));
        }
        let coords = rees_coordinates(&series.factors[0])?;
        let data = g_eta_star(&coords.structure)?;
        let g = &coords.structure.group;
        // compare kernels on G: φ_{η*}-equality must imply η*(S)-equality
        for a in 0..g.order() {
            for b in 0..g.order() {
                if data.phi[a] == data.phi[b] {
                    // translate factor-local group ids to ambient ids of S
                    let amb_a = back[series.factors[0].embedding[g.carrier[a]]];
                    let amb_b = back[series.factors[0].embedding[g.carrier[b]]];
                    if !eta.congruence.same(amb_a, amb_b) {
                        return Err(Error::TheoremViolation(format!(
                            "component group image is not a quotient of G_eta: \
                             {amb_a} and {amb_b} are identified by φ but not by η*"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The idempotent-generated subsemigroup ⟨E(S)⟩ of S.
pub fn idempotent_generated(s: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let e = s.idempotents();
    if e.is_empty() {
        return Err(Error::Invalid("semigroup has no idempotent".into()));
    }
    let gens = generate_subsemigroup(s, &e);
    Ok(s.subsemigroup(&gens)?.0)
}

/// S ∈ DS: in every regular J-class, products of its idempotents stay in
/// the class.
pub fn is_ds(s: &FiniteSemigroup) -> bool {
    let green = compute_green(s);
    for (ji, cls) in green.j.classes().iter().enumerate() {
        if !green.regular_j[ji] {
            continue;
        }
        let idems: Vec<usize> = cls.iter().copied().filter(|&x| s.is_idempotent(x)).collect();
        for &e in &idems {
            for &f in &idems {
                if !green.j.same(s.prod(e, f), e) || !green.j.same(s.prod(f, e), e) {
                    return false;
                }
            }
        }
    }
    true
}

/// EDS via the incidence-graph characterization: every regular principal
/// factor has all incidence components complete bipartite.
pub fn is_eds(s: &FiniteSemigroup) -> bool {
    let series = principal_series(s);
    for factor in &series.factors {
        if factor.kind == FactorKind::Null {
            continue;
        }
        if factor.jclass.len() == 1 && factor.theta.is_none() && factor.semigroup.order() == 1 {
            continue; // trivial kernel {θ}
        }
        let coords = match rees_coordinates(factor) {
            Ok(c) => c,
            Err(_) => return false,
        };
        if !incidence_graph(&coords.structure).components_complete_bipartite() {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pseudovariety {
    MN,
    NT,
    PE,
    BGNIL,
    BI,
    EDS,
    EUNNG,
}

impl Pseudovariety {
    pub const ALL: [Pseudovariety; 7] = [
        Pseudovariety::MN,
        Pseudovariety::NT,
        Pseudovariety::PE,
        Pseudovariety::BGNIL,
        Pseudovariety::BI,
        Pseudovariety::EDS,
        Pseudovariety::EUNNG,
    ];

    pub fn parse(name: &str) -> Result<Pseudovariety> {
        match name.to_ascii_uppercase().as_str() {
            "MN" => Ok(Pseudovariety::MN),
            "NT" => Ok(Pseudovariety::NT),
            "PE" => Ok(Pseudovariety::PE),
            "BGNIL" | "BG_NIL" => Ok(Pseudovariety::BGNIL),
            "BI" => Ok(Pseudovariety::BI),
            "EDS" => Ok(Pseudovariety::EDS),
            "EUNNG" => Ok(Pseudovariety::EUNNG),
            other => Err(Error::Parse(format!("unknown pseudovariety `{other}`"))),
        }
    }
}

impl fmt::Display for Pseudovariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Pseudovariety::MN => "MN",
            Pseudovariety::NT => "NT",
            Pseudovariety::PE => "PE",
            Pseudovariety::BGNIL => "BGnil",
            Pseudovariety::BI => "BI",
            Pseudovariety::EDS => "EDS",
            Pseudovariety::EUNNG => "EUNNG",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub which: Pseudovariety,
    pub verdict: bool,
    pub class_n: Option<usize>,
    pub witness: Option<String>,
}

pub fn membership(s: &FiniteSemigroup, which: Pseudovariety) -> MembershipReport {
    let (verdict, class_n, witness) = match which {
        Pseudovariety::MN => {
            let rep = is_malcev_nilpotent(s);
            (rep.verdict, rep.class_n, rep.witness.map(|w| format!("{w:?}")))
        }
        Pseudovariety::NT => {
            let rep = is_neumann_taylor(s);
            (rep.verdict, rep.class_n, rep.witness.map(|w| format!("{w:?}")))
        }
        Pseudovariety::PE => {
            let rep = is_positively_engel(s);
            (rep.verdict, rep.class_n, rep.witness.map(|w| format!("{w:?}")))
        }
        Pseudovariety::BGNIL => {
            if !is_block_group(s) {
                let x = s
                    .elements()
                    .find(|&x| inverses_of(s, x).len() > 1)
                    .unwrap();
                (
                    false,
                    None,
                    Some(format!("element {x} has inverses {:?}", inverses_of(s, x))),
                )
            } else {
                // maximal subgroups suffice: any subgroup lies inside the
                // maximal subgroup of its idempotent's H-class, and
                // subgroups of nilpotent groups are nilpotent
                match maximal_subgroups(s)
                    .iter()
                    .find(|g| !is_nilpotent_group(g))
                {
                    Some(g) => (
                        false,
                        None,
                        Some(format!(
                            "non-nilpotent maximal subgroup at identity {}",
                            g.carrier[g.identity]
                        )),
                    ),
                    None => (true, None, None),
                }
            }
        }
        Pseudovariety::BI => {
            if !is_block_group(s) {
                (false, None, Some("not a block group".into()))
            } else {
                match maximal_subgroups(s).iter().find(|g| g.order() > 1) {
                    Some(g) => (
                        false,
                        None,
                        Some(format!(
                            "nontrivial subgroup of order {} at identity {}",
                            g.order(),
                            g.carrier[g.identity]
                        )),
                    ),
                    None => (true, None, None),
                }
            }
        }
        Pseudovariety::EDS => (is_eds(s), None, None),
        Pseudovariety::EUNNG => (is_eunng(s), None, None),
    };
    MembershipReport {
        which,
        verdict,
        class_n,
        witness,
    }
}

pub fn all_memberships(s: &FiniteSemigroup) -> Vec<MembershipReport> {
    Pseudovariety::ALL
        .iter()
        .map(|&w| membership(s, w))
        .collect()
}

#[derive(Debug, Clone)]
pub struct ContainmentReport {
    /// "name: X does not imply Y" entries; must be empty
    pub violations: Vec<String>,
    /// strictness witnesses found in the corpus: (smaller, larger, name)
    pub strictness: Vec<(Pseudovariety, Pseudovariety, String)>,
    /// pairs for which no strictness witness was found in the corpus
    pub missing_witnesses: Vec<(Pseudovariety, Pseudovariety)>,
}

/// Audit the chain MN ⇒ EUNNG ⇒ PE ⇒ BGnil and BI ⇒ PE over a corpus,
/// recording strictness witnesses where the corpus contains them.
pub fn containment_audit(corpus: &[(String, FiniteSemigroup)]) -> ContainmentReport {
    use Pseudovariety::*;
    let implications = [(MN, EUNNG), (EUNNG, PE), (PE, BGNIL), (BI, PE)];
    // strictness pairs worth reporting, including MN vs BI incomparability
    let strict_pairs = [(MN, EUNNG), (EUNNG, PE), (PE, BGNIL), (BI, PE), (MN, BI)];
    let mut violations = Vec::new();
    let mut strictness = Vec::new();
    for (name, s) in corpus {
        let verdict = |w: Pseudovariety| membership(s, w).verdict;
        for &(a, b) in &implications {
            if verdict(a) && !verdict(b) {
                violations.push(format!("{name}: {a} does not imply {b}"));
            }
        }
        for &(a, b) in &strict_pairs {
            // a witness for strictness of a ⊆ b (or non-containment of
            // b in a): member of b ∖ a
            let in_b = match (a, b) {
                (MN, BI) => verdict(MN) && !verdict(BI), // MN ⊄ BI witness
                _ => verdict(b) && !verdict(a),
            };
            if in_b && !strictness.iter().any(|(x, y, _)| (*x, *y) == (a, b)) {
                strictness.push((a, b, name.clone()));
            }
        }
    }
    let missing_witnesses = strict_pairs
        .iter()
        .copied()
        .filter(|&(a, b)| !strictness.iter().any(|(x, y, _)| (*x, *y) == (a, b)))
        .collect();
    ContainmentReport {
        violations,
        strictness,
        missing_witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    #[test]
    fn inverses_examples() {
        let z4 = builtin("z4").unwrap();
        let e = z4.identity().unwrap();
        assert!(inverses_of(&z4, e).contains(&e));
        let lz = builtin("leftzero2").unwrap();
        assert_eq!(inverses_of(&lz, 0), vec![0, 1]);
        assert!(!is_block_group(&lz));
        let b2 = builtin("b2").unwrap();
        for x in b2.elements() {
            assert_eq!(inverses_of(&b2, x).len(), 1);
        }
        assert!(is_inverse_semigroup(&b2));
    }

    #[test]
    fn clifford_predicates() {
        assert!(is_clifford(&builtin("z6").unwrap()));
        assert!(is_clifford(&builtin("semilattice2").unwrap()));
        assert!(!is_completely_regular(&builtin("b2").unwrap()));
        assert!(is_inverse_semigroup(&builtin("f7").unwrap()));
        assert!(!is_clifford(&builtin("f7").unwrap()));
    }

    #[test]
    fn semilattice_decomposition_cases() {
        let y = semilattice_decomposition(&builtin("semilattice2").unwrap()).unwrap();
        assert_eq!(y.semilattice.order(), 2);
        assert_eq!(y.components.len(), 2);
        let g = semilattice_decomposition(&builtin("s3").unwrap()).unwrap();
        assert_eq!(g.semilattice.order(), 1);
        assert_eq!(g.components.len(), 1);
        assert!(matches!(
            semilattice_decomposition(&builtin("b2").unwrap()),
            Err(Error::NotCompletelyRegular)
        ));
    }

    #[test]
    fn eds_verdicts() {
        assert!(is_eds(&builtin("b2").unwrap()));
        assert!(is_eds(&builtin("allones22").unwrap()));
        assert!(!is_eds(&builtin("noncsd22").unwrap()));
        assert!(is_eds(&builtin("z6").unwrap()));
    }

    #[test]
    fn eds_cross_check_with_idempotent_generated() {
        for name in [
            "trivial",
            "null2",
            "semilattice2",
            "leftzero2",
            "z4",
            "s3",
            "b2",
            "f7",
            "allones22",
            "noncsd22",
            "paper23",
        ] {
            let s = builtin(name).unwrap();
            let es = idempotent_generated(&s).unwrap();
            assert_eq!(is_eds(&s), is_ds(&es), "{name}: ⟨E(S)⟩ ∈ DS cross-check");
        }
    }

    #[test]
    fn f7_memberships() {
        let f7 = builtin("f7").unwrap();
        assert!(!membership(&f7, Pseudovariety::MN).verdict);
        assert!(!membership(&f7, Pseudovariety::PE).verdict);
        assert!(membership(&f7, Pseudovariety::BGNIL).verdict);
        assert!(!membership(&f7, Pseudovariety::BI).verdict);
    }

    #[test]
    fn z2_memberships() {
        let z2 = builtin("z2").unwrap();
        assert!(membership(&z2, Pseudovariety::MN).verdict);
        assert!(!membership(&z2, Pseudovariety::BI).verdict);
    }

    #[test]
    fn b2_bi() {
        let b2 = builtin("b2").unwrap();
        assert!(membership(&b2, Pseudovariety::MN).verdict);
        assert!(membership(&b2, Pseudovariety::BI).verdict);
    }

    #[test]
    fn containment_on_builtins() {
        let corpus: Vec<(String, FiniteSemigroup)> = ["b2", "f7", "z2", "leftzero2", "s3"]
            .iter()
            .map(|&n| (n.to_string(), builtin(n).unwrap()))
            .collect();
        let rep = containment_audit(&corpus);
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        assert!(rep
            .strictness
            .iter()
            .any(|(a, b, n)| (*a, *b) == (Pseudovariety::PE, Pseudovariety::BGNIL) && n == "f7"));
        assert!(rep
            .strictness
            .iter()
            .any(|(a, b, n)| (*a, *b) == (Pseudovariety::MN, Pseudovariety::BI) && n == "z2"));
    }
}
