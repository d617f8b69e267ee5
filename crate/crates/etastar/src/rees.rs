//! Rees matrix coordinates: building M⁰(G,n,m;P), coordinatizing
//! completely (0-)simple principal factors, incidence graphs, the
//! CS-diagonal property and the component partition.

use crate::error::{Error, Result};
use crate::green::{FactorDescriptor, FactorKind};
use crate::group::{maximal_subgroup, GroupData};
use crate::semigroup::{FiniteSemigroup, SemigroupMorphism};

/// Coordinates of a completely (0-)simple semigroup: a group G, n column
/// indices, m row indices and an m×n sandwich matrix P over G ∪ {θ}.
/// `sandwich[j][i]` is p_{j,i} (row j, column i), `None` meaning θ.
#[derive(Debug, Clone)]
pub struct ReesStructure {
    pub group: GroupData,
    pub n: usize,
    pub m: usize,
    pub sandwich: Vec<Vec<Option<usize>>>,
    pub has_zero: bool,
}

impl ReesStructure {
    pub fn new(
        group: GroupData,
        n: usize,
        m: usize,
        sandwich: Vec<Vec<Option<usize>>>,
        has_zero: bool,
    ) -> Result<ReesStructure> {
        if n == 0 || m == 0 || sandwich.len() != m || sandwich.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("sandwich matrix shape mismatch".into()));
        }
        for row in &sandwich {
            for &e in row {
                if let Some(g) = e {
                    if g >= group.order() {
                        return Err(Error::Invalid(format!("sandwich entry {g} outside group")));
                    }
                }
            }
        }
        for (j, row) in sandwich.iter().enumerate() {
            if row.iter().all(|e| e.is_none()) {
                return Err(Error::Regularity(format!("row {j} is all θ")));
            }
        }
        for i in 0..n {
            if sandwich.iter().all(|row| row[i].is_none()) {
                return Err(Error::Regularity(format!("column {i} is all θ")));
            }
        }
        Ok(ReesStructure {
            group,
            n,
            m,
            sandwich,
            has_zero,
        })
    }

    pub fn p(&self, row: usize, col: usize) -> Option<usize> {
        self.sandwich[row][col]
    }

    /// Whether the built semigroup carries θ: requested, or forced by a θ
    /// sandwich entry.
    pub fn effective_zero(&self) -> bool {
        self.has_zero || self.sandwich.iter().any(|r| r.iter().any(|e| e.is_none()))
    }

    /// Id of (g;i,j) in the built semigroup; 0-based i < n, j < m.
    pub fn element_id(&self, g: usize, i: usize, j: usize) -> usize {
        (i * self.m + j) * self.group.order() + g
    }

    pub fn theta_id(&self) -> Option<usize> {
        if self.effective_zero() {
            Some(self.n * self.m * self.group.order())
        } else {
            None
        }
    }

    /// Decode an id back into (g;i,j); None for θ.
    pub fn decode(&self, id: usize) -> Option<(usize, usize, usize)> {
        let go = self.group.order();
        if id >= self.n * self.m * go {
            return None;
        }
        let g = id % go;
        let cell = id / go;
        Some((g, cell / self.m, cell % self.m))
    }
}

/// Materialize the Rees matrix semigroup with the product law
/// (g;i,j)(h;k,l) = (g·p_{j,k}·h; i,l), θ when p_{j,k} = θ.
pub fn build_rees(r: &ReesStructure) -> FiniteSemigroup {
    let go = r.group.order();
    let base = r.n * r.m * go;
    let with_zero = r.effective_zero();
    let order = base + with_zero as usize;
    let theta = base; // only meaningful when with_zero
    let mut flat = vec![theta; order * order];
    for i in 0..r.n {
        for j in 0..r.m {
            for g in 0..go {
                let x = r.element_id(g, i, j);
                for k in 0..r.n {
                    for l in 0..r.m {
                        match r.p(j, k) {
                            Some(p) => {
                                let gp = r.group.prod(g, p);
                                for h in 0..go {
                                    let y = r.element_id(h, k, l);
                                    flat[x * order + y] =
                                        r.element_id(r.group.prod(gp, h), i, l);
                                }
                            }
                            None => {
                                // already θ-filled
                            }
                        }
                    }
                }
            }
        }
    }
    let mut labels = vec![String::new(); base];
    for i in 0..r.n {
        for j in 0..r.m {
            for g in 0..go {
                labels[r.element_id(g, i, j)] =
                    format!("({};{},{})", r.group.semigroup.label(g), i + 1, j + 1);
            }
        }
    }
    if with_zero {
        labels.push("θ".into());
    }
    FiniteSemigroup::from_flat(order, flat, Some(labels))
        .expect("Rees matrix product is associative")
}

/// Coordinates recovered from a principal factor, together with the
/// element correspondence in both directions.
#[derive(Debug, Clone)]
pub struct ReesCoordinates {
    pub structure: ReesStructure,
    /// factor id -> id in build_rees(structure)
    pub factor_to_rees: Vec<usize>,
    /// id in build_rees(structure) -> factor id
    pub rees_to_factor: Vec<usize>,
}

/// Coordinatize a completely (0-)simple factor: pick the least idempotent
/// e, take G = H_e, index columns by R-classes and rows by L-classes (by
/// least element id), and read the sandwich matrix off transversal
/// products. Verified: the correspondence is an isomorphism.
pub fn rees_coordinates(factor: &FactorDescriptor) -> Result<ReesCoordinates> {
    if factor.kind == FactorKind::Null {
        return Err(Error::NotSimpleFactor);
    }
    let f = &factor.semigroup;
    let theta = factor.theta;
    let green = crate::green::compute_green(f);
    let nonzero: Vec<usize> = f.elements().filter(|&x| Some(x) != theta).collect();
    let e = nonzero
        .iter()
        .copied()
        .find(|&x| f.is_idempotent(x))
        .ok_or_else(|| Error::Regularity("no nonzero idempotent in factor".into()))?;
    let group = maximal_subgroup(f, green.h.class_containing(e))?;

    // columns: R-classes of the nonzero part, rows: L-classes, each
    // ordered by least member
    let mut rclasses: Vec<Vec<usize>> = Vec::new();
    let mut lclasses: Vec<Vec<usize>> = Vec::new();
    for cls in green.r.classes() {
        if Some(cls[0]) != theta {
            rclasses.push(cls.clone());
        }
    }
    for cls in green.l.classes() {
        if Some(cls[0]) != theta {
            lclasses.push(cls.clone());
        }
    }
    let n = rclasses.len();
    let m = lclasses.len();

    // transversals: a_i ∈ R_i ∩ L_e, b_j ∈ L_j ∩ R_e (least ids)
    let a: Vec<usize> = rclasses
        .iter()
        .map(|cls| {
            cls.iter()
                .copied()
                .find(|&x| green.l.same(x, e))
                .ok_or_else(|| Error::Regularity("R-class misses the L-class of e".into()))
        })
        .collect::<Result<_>>()?;
    let b: Vec<usize> = lclasses
        .iter()
        .map(|cls| {
            cls.iter()
                .copied()
                .find(|&x| green.r.same(x, e))
                .ok_or_else(|| Error::Regularity("L-class misses the R-class of e".into()))
        })
        .collect::<Result<_>>()?;

    // ambient group element -> group id
    let mut gid = vec![usize::MAX; f.order()];
    for (g, &amb) in group.carrier.iter().enumerate() {
        gid[amb] = g;
    }

    let mut sandwich = vec![vec![None; n]; m];
    for j in 0..m {
        for i in 0..n {
            let p = f.prod(b[j], a[i]);
            if Some(p) != theta {
                if gid[p] == usize::MAX {
                    return Err(Error::WellDefinedness(
                        "transversal product escapes H_e".into(),
                    ));
                }
                sandwich[j][i] = Some(gid[p]);
            }
        }
    }
    let structure = ReesStructure::new(group.clone(), n, m, sandwich, theta.is_some())?;

    // solve coordinates of every nonzero element: x = a_i · g · b_j
    let built = build_rees(&structure);
    let mut factor_to_rees = vec![usize::MAX; f.order()];
    let mut rees_to_factor = vec![usize::MAX; built.order()];
    if let (Some(t), Some(bt)) = (theta, structure.theta_id()) {
        factor_to_rees[t] = bt;
        rees_to_factor[bt] = t;
    }
    for &x in &nonzero {
        let i = rclasses.iter().position(|cls| cls.contains(&x)).unwrap();
        let j = lclasses.iter().position(|cls| cls.contains(&x)).unwrap();
        let mut found = None;
        for g in 0..group.order() {
            let cand = f.prod(f.prod(a[i], group.carrier[g]), b[j]);
            if cand == x {
                if found.is_some() {
                    return Err(Error::WellDefinedness(format!(
                        "element {x} has two coordinate solutions"
                    )));
                }
                found = Some(g);
            }
        }
        let g = found.ok_or_else(|| {
            Error::WellDefinedness(format!("element {x} has no coordinate solution"))
        })?;
        let id = structure.element_id(g, i, j);
        factor_to_rees[x] = id;
        rees_to_factor[id] = x;
    }
    let coords = ReesCoordinates {
        structure,
        factor_to_rees,
        rees_to_factor,
    };
    // round-trip check: the correspondence is an isomorphism
    let morph = SemigroupMorphism {
        source: f.clone(),
        target: built,
        map: coords.factor_to_rees.clone(),
    };
    if !morph.is_morphism() || !morph.is_bijective() {
        return Err(Error::WellDefinedness(
            "coordinate map is not an isomorphism".into(),
        ));
    }
    Ok(coords)
}

/// Bipartite incidence graph on column indices 0..n and row indices
/// 0..m, with an edge (col i, row j) whenever p_{j,i} ≠ θ.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    pub n_cols: usize,
    pub n_rows: usize,
    /// edges as (col, row) pairs, lexicographic
    pub edges: Vec<(usize, usize)>,
}

pub fn incidence_graph(r: &ReesStructure) -> IncidenceGraph {
    let mut edges = Vec::new();
    for i in 0..r.n {
        for j in 0..r.m {
            if r.p(j, i).is_some() {
                edges.push((i, j));
            }
        }
    }
    IncidenceGraph {
        n_cols: r.n,
        n_rows: r.m,
        edges,
    }
}

impl IncidenceGraph {
    /// Connected components; returns (component of col i, component of row
    /// j, component count).
    pub fn components(&self) -> (Vec<usize>, Vec<usize>, usize) {
        let total = self.n_cols + self.n_rows;
        let mut uf = crate::semigroup::UnionFind::new(total);
        for &(i, j) in &self.edges {
            uf.union(i, self.n_cols + j);
        }
        let mut comp = vec![usize::MAX; total];
        let mut next = 0usize;
        for v in 0..total {
            let root = uf.find(v);
            if comp[root] == usize::MAX {
                comp[root] = next;
                next += 1;
            }
            comp[v] = comp[root];
        }
        let cols = comp[..self.n_cols].to_vec();
        let rows = comp[self.n_cols..].to_vec();
        (cols, rows, next)
    }

    /// Every connected component is complete bipartite.
    pub fn components_complete_bipartite(&self) -> bool {
        let (cols, rows, _) = self.components();
        let has_edge = |i: usize, j: usize| self.edges.contains(&(i, j));
        for (i, &ci) in cols.iter().enumerate() {
            for (j, &rj) in rows.iter().enumerate() {
                if ci == rj && !has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// The quantifier form of the CS-diagonal condition: p_{r,t}, p_{r′,t},
/// p_{r,t′} nonzero force p_{r′,t′} nonzero. Asserted equal to the
/// complete-bipartite-components form.
pub fn is_cs_diagonal(r: &ReesStructure) -> bool {
    let mut quant = true;
    'outer: for row in 0..r.m {
        for row2 in 0..r.m {
            for col in 0..r.n {
                for col2 in 0..r.n {
                    if r.p(row, col).is_some()
                        && r.p(row2, col).is_some()
                        && r.p(row, col2).is_some()
                        && r.p(row2, col2).is_none()
                    {
                        quant = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let graph_form = incidence_graph(r).components_complete_bipartite();
    assert_eq!(
        quant, graph_form,
        "CS-diagonal quantifier and graph forms disagree"
    );
    quant
}

/// Column classes I_1..I_t, row classes I′_1..I′_t and their count n_eta,
/// from the incidence components of a CS-diagonal sandwich matrix.
/// Classes are numbered by least column index.
#[derive(Debug, Clone)]
pub struct ComponentPartition {
    pub column_classes: Vec<Vec<usize>>,
    pub row_classes: Vec<Vec<usize>>,
    pub column_class_of: Vec<usize>,
    pub row_class_of: Vec<usize>,
    pub n_eta: usize,
}

pub fn component_partition(r: &ReesStructure) -> Result<ComponentPartition> {
    if !is_cs_diagonal(r) {
        return Err(Error::NotDiagonal);
    }
    let (cols, rows, count) = incidence_graph(r).components();
    // renumber components by least column index; regularity guarantees
    // every component contains a column
    let mut order: Vec<usize> = Vec::new();
    for &c in &cols {
        if !order.contains(&c) {
            order.push(c);
        }
    }
    debug_assert_eq!(order.len(), count);
    let renum = |c: usize| order.iter().position(|&x| x == c).unwrap();
    let column_class_of: Vec<usize> = cols.iter().map(|&c| renum(c)).collect();
    let row_class_of: Vec<usize> = rows.iter().map(|&c| renum(c)).collect();
    let mut column_classes = vec![Vec::new(); count];
    let mut row_classes = vec![Vec::new(); count];
    for (i, &c) in column_class_of.iter().enumerate() {
        column_classes[c].push(i);
    }
    for (j, &c) in row_class_of.iter().enumerate() {
        row_classes[c].push(j);
    }
    let part = ComponentPartition {
        column_classes,
        row_classes,
        column_class_of,
        row_class_of,
        n_eta: count,
    };
    // block law: p_{j,i} ≠ θ iff i and j lie in paired classes
    for i in 0..r.n {
        for j in 0..r.m {
            let same = part.column_class_of[i] == part.row_class_of[j];
            assert_eq!(r.p(j, i).is_some(), same, "block law violated");
        }
    }
    Ok(part)
}

/// Convenience constructors over the trivial group.
pub fn trivial_group() -> GroupData {
    let s = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
    GroupData::from_semigroup(&s).unwrap()
}

/// M⁰({1},k,k;I_k).
pub fn brandt_structure(k: usize) -> ReesStructure {
    let sandwich: Vec<Vec<Option<usize>>> = (0..k)
        .map(|j| (0..k).map(|i| if i == j { Some(0) } else { None }).collect())
        .collect();
    ReesStructure::new(trivial_group(), k, k, sandwich, true).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

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

    #[test]
    fn brandt_b2_is_builtin_b2() {
        let b2 = build_rees(&brandt_structure(2));
        assert_eq!(b2.order(), 5);
        let builtin_b2 = builtin("b2").unwrap();
        assert!(crate::semigroup::is_isomorphic(&b2, &builtin_b2)
            .unwrap()
            .is_some());
    }

    #[test]
    fn trivial_rees_is_trivial_semigroup() {
        let r = ReesStructure::new(trivial_group(), 1, 1, vec![vec![Some(0)]], false).unwrap();
        let s = build_rees(&r);
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn b2_product_identities() {
        // (1;1,1) = (1;1,2)(1;2,2)(1;2,1)(1;1,1) and
        // θ = (1;1,2)(1;1,1)(1;2,1)(1;2,2)
        let r = brandt_structure(2);
        let s = build_rees(&r);
        let e = |i: usize, j: usize| r.element_id(0, i, j);
        let first = s.prod_all([e(0, 1), e(1, 1), e(1, 0), e(0, 0)]).unwrap();
        assert_eq!(first, e(0, 0));
        let second = s.prod_all([e(0, 1), e(0, 0), e(1, 0), e(1, 1)]).unwrap();
        assert_eq!(second, r.theta_id().unwrap());
        let theta = r.theta_id().unwrap();
        for x in s.elements() {
            assert_eq!(s.prod(theta, x), theta);
            assert_eq!(s.prod(x, theta), theta);
        }
    }

    #[test]
    fn noncsd_build_has_five_elements() {
        let s = build_rees(&noncsd22());
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn incidence_graphs() {
        let id2 = incidence_graph(&brandt_structure(2));
        assert_eq!(id2.edges, vec![(0, 0), (1, 1)]);
        let (_, _, c) = id2.components();
        assert_eq!(c, 2);

        let ones = incidence_graph(&all_ones22(true));
        assert_eq!(ones.edges.len(), 4);
        let (_, _, c) = ones.components();
        assert_eq!(c, 1);
        assert!(ones.components_complete_bipartite());

        let path = incidence_graph(&noncsd22());
        assert_eq!(path.edges.len(), 3);
        let (_, _, c) = path.components();
        assert_eq!(c, 1);
        assert!(!path.components_complete_bipartite());
    }

    #[test]
    fn cs_diagonal_verdicts() {
        assert!(is_cs_diagonal(&brandt_structure(2)));
        assert!(is_cs_diagonal(&brandt_structure(4)));
        assert!(is_cs_diagonal(&all_ones22(true)));
        assert!(!is_cs_diagonal(&noncsd22()));
    }

    #[test]
    fn component_partitions() {
        let p = component_partition(&brandt_structure(2)).unwrap();
        assert_eq!(p.n_eta, 2);
        assert_eq!(p.column_classes, vec![vec![0], vec![1]]);
        assert_eq!(p.row_classes, vec![vec![0], vec![1]]);

        let p = component_partition(&all_ones22(true)).unwrap();
        assert_eq!(p.n_eta, 1);
        assert_eq!(p.column_classes, vec![vec![0, 1]]);

        let p4 = component_partition(&brandt_structure(4)).unwrap();
        assert_eq!(p4.n_eta, 4);

        assert!(matches!(
            component_partition(&noncsd22()),
            Err(Error::NotDiagonal)
        ));
    }

    #[test]
    fn coordinates_round_trip() {
        // rebuild B2 from its own principal factor
        let b2 = builtin("b2").unwrap();
        let ser = crate::green::principal_series(&b2);
        let factor = &ser.factors[0];
        let coords = rees_coordinates(factor).unwrap();
        assert_eq!(coords.structure.n, 2);
        assert_eq!(coords.structure.m, 2);
        assert_eq!(coords.structure.group.order(), 1);
        // exactly one nonzero entry per row/column (inverse form)
        for j in 0..2 {
            let nz = (0..2).filter(|&i| coords.structure.p(j, i).is_some()).count();
            assert_eq!(nz, 1);
        }
    }

    #[test]
    fn group_factor_coordinates() {
        let z4 = builtin("z4").unwrap();
        let ser = crate::green::principal_series(&z4);
        let coords = rees_coordinates(&ser.factors[0]).unwrap();
        assert_eq!((coords.structure.n, coords.structure.m), (1, 1));
        assert_eq!(coords.structure.group.order(), 4);
        assert_eq!(
            coords.structure.p(0, 0),
            Some(coords.structure.group.identity)
        );
    }

    #[test]
    fn all_ones_semigroup_recoordinatized() {
        let s = build_rees(&all_ones22(true));
        let ser = crate::green::principal_series(&s);
        let factor = ser
            .factors
            .iter()
            .find(|f| f.jclass.len() == 4)
            .unwrap();
        let coords = rees_coordinates(factor).unwrap();
        assert!(coords
            .structure
            .sandwich
            .iter()
            .all(|row| row.iter().all(|e| e.is_some())));
    }

    #[test]
    fn null_factor_rejected() {
        let s = builtin("paper23").unwrap();
        let ser = crate::green::principal_series(&s);
        let null = ser
            .factors
            .iter()
            .find(|f| f.kind == FactorKind::Null)
            .unwrap();
        assert!(matches!(
            rees_coordinates(null),
            Err(Error::NotSimpleFactor)
        ));
    }
}
