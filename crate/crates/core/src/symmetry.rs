//! Overlap graph of a basis list and its automorphism group.
//!
//! Automorphisms are found by individualization-refinement: two copies of
//! the graph are colored jointly, a sequence of vertices is individualized
//! on each side, and colors are refined until stable. A discrete stable
//! coloring determines a candidate permutation. The group order comes from
//! a stabilizer chain, `|G| = prod |orbit of b_k under G_(b_1..b_{k-1})|`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize, Serializer};

use crate::bases::BasisSet;

/// Vertices are bases; an edge joins two bases sharing at least one ray and
/// carries the number of shared rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapGraph {
    /// External vertex labels, 1-based positions in the input by default.
    pub labels: Vec<usize>,
    /// `weights[i][j]` shared-ray count, 0 on the diagonal and for non-edges.
    pub weights: Vec<Vec<usize>>,
}

impl OverlapGraph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.weights[i][j] > 0
    }

    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.is_edge(i, j) {
                    out.push((i, j, self.weights[i][j]));
                }
            }
        }
        out
    }

    /// The same graph with every edge weight set to 1.
    pub fn unweighted(&self) -> OverlapGraph {
        OverlapGraph {
            labels: self.labels.clone(),
            weights: self
                .weights
                .iter()
                .map(|r| r.iter().map(|&w| usize::from(w > 0)).collect())
                .collect(),
        }
    }

    /// `label label weight` per edge.
    pub fn edge_list_text(&self) -> String {
        let mut s = String::new();
        for (i, j, w) in self.edges() {
            let _ = writeln!(s, "{} {} {}", self.labels[i], self.labels[j], w);
        }
        s
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertex_count();
        perm.len() == n
            && (0..n).all(|i| (0..n).all(|j| self.weights[i][j] == self.weights[perm[i]][perm[j]]))
    }
}

pub fn build_overlap_graph(bases: &[BasisSet]) -> OverlapGraph {
    let n = bases.len();
    let mut weights = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = bases[i].shared(&bases[j]);
            weights[i][j] = w;
            weights[j][i] = w;
        }
    }
    OverlapGraph {
        labels: (1..=n).collect(),
        weights,
    }
}

pub type Perm = Vec<usize>;

fn compose(p: &[usize], q: &[usize]) -> Perm {
    // apply q, then p
    q.iter().map(|&i| p[i]).collect()
}

fn inverse(p: &[usize]) -> Perm {
    let mut r = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        r[x] = i;
    }
    r
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// Joint refinement of two copies with `left[i]` and `right[i]`
/// individualized to color `i + 1`. Returns the stable colorings, or `None`
/// when the color class sizes differ between the sides.
fn refine(g: &OverlapGraph, left: &[usize], right: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let mut cl = vec![0usize; n];
    let mut cr = vec![0usize; n];
    for (k, (&a, &b)) in left.iter().zip(right).enumerate() {
        cl[a] = k + 1;
        cr[b] = k + 1;
    }
    let mut classes = 0;
    loop {
        let sig = |c: &[usize], v: usize| -> (usize, Vec<(usize, usize)>) {
            let mut nb: Vec<(usize, usize)> = (0..n)
                .filter(|&u| g.weights[v][u] > 0)
                .map(|u| (c[u], g.weights[v][u]))
                .collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sl: Vec<_> = (0..n).map(|v| sig(&cl, v)).collect();
        let sr: Vec<_> = (0..n).map(|v| sig(&cr, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sl.iter().chain(&sr) {
            ids.entry(s.clone()).or_insert(0usize);
        }
        for (k, v) in ids.values_mut().enumerate() {
            *v = k;
        }
        let nl: Vec<usize> = sl.iter().map(|s| ids[s]).collect();
        let nr: Vec<usize> = sr.iter().map(|s| ids[s]).collect();
        let mut count = vec![0i64; ids.len()];
        for &c in &nl {
            count[c] += 1;
        }
        for &c in &nr {
            count[c] -= 1;
        }
        if count.iter().any(|&c| c != 0) {
            return None;
        }
        cl = nl;
        cr = nr;
        if ids.len() == classes {
            return Some((cl, cr));
        }
        classes = ids.len();
    }
}

/// Smallest vertex of the first non-singleton color class (by color id).
fn target_cell(colors: &[usize]) -> Option<(usize, Vec<usize>)> {
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    cells.into_values().find(|vs| vs.len() > 1).map(|vs| (vs[0], vs))
}

/// Some automorphism mapping `left[i]` to `right[i]`, if one exists.
fn extend(g: &OverlapGraph, left: &mut Vec<usize>, right: &mut Vec<usize>, nodes: &mut u64) -> Option<Perm> {
    *nodes += 1;
    let (cl, cr) = refine(g, left, right)?;
    let Some((v, _)) = target_cell(&cl) else {
        let mut by_color = HashMap::new();
        for (u, &c) in cr.iter().enumerate() {
            by_color.insert(c, u);
        }
        let perm: Perm = cl.iter().map(|c| by_color[c]).collect();
        return g.is_automorphism(&perm).then_some(perm);
    };
    let candidates: Vec<usize> = (0..g.vertex_count()).filter(|&w| cr[w] == cl[v]).collect();
    left.push(v);
    for w in candidates {
        right.push(w);
        let found = extend(g, left, right, nodes);
        right.pop();
        if found.is_some() {
            left.pop();
            return found;
        }
    }
    left.pop();
    None
}

fn orbit(start: usize, gens: &[Perm]) -> Vec<usize> {
    let mut seen = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g[x];
            if !seen.contains(&y) {
                seen.push(y);
                queue.push_back(y);
            }
        }
    }
    seen.sort_unstable();
    seen
}

/// Vertex orbits under the group generated by `gens`.
pub fn orbits(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n {
        if !done[v] {
            let o = orbit(v, gens);
            for &x in &o {
                done[x] = true;
            }
            out.push(o);
        }
    }
    out
}

fn serialize_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureEvidence {
    pub group_abelian: bool,
    /// Orders of the involution conjugacy classes.
    pub involution_classes: Vec<usize>,
    /// Largest normal subgroup that is elementary abelian of 2-power order.
    pub normal_elementary_abelian_order: usize,
    /// How many such subgroups attain that order.
    pub normal_elementary_abelian_count: usize,
    pub quotient_order: usize,
    /// Some subgroup of the largest order has a cyclic quotient.
    pub quotient_cyclic: bool,
    /// For some such subgroup, an element of order `quotient_order`
    /// generates a complement.
    pub cyclic_complement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutGroupReport {
    #[serde(serialize_with = "serialize_big")]
    pub order: BigUint,
    /// 0-based vertex images.
    pub generators: Vec<Perm>,
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub search_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Perm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureEvidence>,
}

/// Element lists and structure evidence are produced up to this order.
pub const ELEMENT_LIMIT: usize = 10_000;

/// Automorphism group of `g`, weights included; pass
/// [`OverlapGraph::unweighted`] for the plain overlap relation.
pub fn automorphism_group(g: &OverlapGraph) -> AutGroupReport {
    let n = g.vertex_count();
    let mut gens: Vec<Perm> = Vec::new();
    let mut base = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut nodes = 0;
    loop {
        let (colors, _) = refine(g, &base, &base).expect("identity side is consistent");
        let Some((v, cell)) = target_cell(&colors) else {
            break;
        };
        let fixing: Vec<Perm> = gens.iter().filter(|p| base.iter().all(|&b| p[b] == b)).cloned().collect();
        let mut level_gens = fixing;
        let mut known = orbit(v, &level_gens);
        for &w in &cell {
            if known.contains(&w) {
                continue;
            }
            let mut left = base.clone();
            let mut right = base.clone();
            left.push(v);
            right.push(w);
            if let Some(p) = extend(g, &mut left, &mut right, &mut nodes) {
                debug_assert!(g.is_automorphism(&p));
                gens.push(p.clone());
                level_gens.push(p);
                known = orbit(v, &level_gens);
            }
        }
        orbit_sizes.push(known.len());
        base.push(v);
    }
    let order = orbit_sizes.iter().fold(BigUint::one(), |acc, &k| acc * k);
    let small = order <= BigUint::from(ELEMENT_LIMIT);
    let elements = small.then(|| enumerate_elements(n, &gens));
    let structure = elements.as_ref().map(|els| structure_evidence(els));
    AutGroupReport {
        vertex_orbits: orbits(n, &gens),
        order,
        generators: gens,
        base,
        orbit_sizes,
        search_nodes: nodes,
        elements,
        structure,
    }
}

/// Closure of the generators, sorted. The returned set contains the
/// identity and is closed under right multiplication by every generator,
/// which for a finite set makes it the generated group.
pub fn enumerate_elements(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let e = identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([e.clone()]);
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut v: Vec<Perm> = seen.into_iter().collect();
    v.sort();
    v
}

/// Closure, identity and inverses checked by explicit multiplication.
pub fn verify_group(elements: &[Perm]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let set: HashSet<&Perm> = elements.iter().collect();
    set.contains(&identity(first.len()))
        && elements.iter().all(|p| set.contains(&inverse(p)))
        && elements.iter().all(|p| elements.iter().all(|q| set.contains(&compose(p, q))))
}

fn element_order(p: &[usize]) -> usize {
    let e = identity(p.len());
    let mut x = p.to_vec();
    let mut k = 1;
    while x != e {
        x = compose(p, &x);
        k += 1;
    }
    k
}

/// Grows elementary-abelian subgroups that are unions of the given classes.
/// Adding a class whose members are involutions commuting with the current
/// subgroup spans a larger elementary-abelian subgroup; it is normal because
/// it is generated by whole conjugacy classes.
fn grow(
    classes: &[&Vec<Perm>],
    from: usize,
    current: HashSet<Perm>,
    seen: &mut BTreeMap<Vec<Perm>, ()>,
) {
    let mut key: Vec<Perm> = current.iter().cloned().collect();
    key.sort();
    if seen.insert(key, ()).is_some() {
        return;
    }
    for (i, class) in classes.iter().enumerate().skip(from) {
        if class.iter().all(|p| current.contains(p)) {
            continue;
        }
        let compatible = class
            .iter()
            .all(|p| current.iter().all(|q| compose(p, q) == compose(q, p)));
        if !compatible {
            continue;
        }
        let mut next = current.clone();
        for p in class.iter() {
            if !next.contains(p) {
                let products: Vec<Perm> = next.iter().map(|q| compose(p, q)).collect();
                next.extend(products);
            }
        }
        grow(classes, i + 1, next, seen);
    }
}

/// Subgroup evidence for a finite permutation group given by all elements.
///
/// A normal elementary-abelian 2-subgroup is the identity plus a union of
/// conjugacy classes of involutions.
pub fn structure_evidence(elements: &[Perm]) -> StructureEvidence {
    let n = elements[0].len();
    let e = identity(n);
    let group_abelian = elements
        .iter()
        .all(|p| elements.iter().all(|q| compose(p, q) == compose(q, p)));
    let involutions: Vec<&Perm> = elements.iter().filter(|p| **p != e && compose(p, p) == e).collect();
    let mut classes: Vec<Vec<Perm>> = Vec::new();
    let mut assigned: HashSet<Perm> = HashSet::new();
    for p in involutions {
        if assigned.contains(p) {
            continue;
        }
        let mut class: Vec<Perm> = elements
            .iter()
            .map(|g| compose(&compose(g, p), &inverse(g)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        class.sort();
        assigned.extend(class.iter().cloned());
        classes.push(class);
    }
    let commute = |p: &Perm, q: &Perm| compose(p, q) == compose(q, p);
    // classes whose members commute among themselves
    let usable: Vec<&Vec<Perm>> = classes
        .iter()
        .filter(|c| c.iter().all(|p| c.iter().all(|q| commute(p, q))))
        .collect();
    let mut seen = BTreeMap::new();
    grow(&usable, 0, HashSet::from([e.clone()]), &mut seen);
    let top = seen.keys().map(|k| k.len()).max().unwrap_or(1);
    let largest: Vec<HashSet<Perm>> = seen
        .into_keys()
        .filter(|k| k.len() == top)
        .map(|k| k.into_iter().collect())
        .collect();
    let quotient_order = elements.len() / top;
    let coset_order = |n: &HashSet<Perm>, p: &Perm| -> usize {
        let mut x = p.clone();
        let mut k = 1;
        while !n.contains(&x) {
            x = compose(p, &x);
            k += 1;
        }
        k
    };
    let cyclic_quotient = |n: &HashSet<Perm>| elements.iter().any(|p| coset_order(n, p) == quotient_order);
    let complement = |n: &HashSet<Perm>| {
        elements
            .iter()
            .any(|p| coset_order(n, p) == quotient_order && element_order(p) == quotient_order)
    };
    let quotient_cyclic = largest.iter().any(cyclic_quotient);
    let cyclic_complement = largest.iter().any(complement);
    let mut involution_classes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    involution_classes.sort_unstable();
    StructureEvidence {
        group_abelian,
        involution_classes,
        normal_elementary_abelian_order: top,
        normal_elementary_abelian_count: largest.len(),
        quotient_order,
        quotient_cyclic,
        cyclic_complement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::PROOF_BASES;

    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> OverlapGraph {
        let mut weights = vec![vec![0; n]; n];
        for &(a, b) in edges {
            weights[a][b] = 1;
            weights[b][a] = 1;
        }
        OverlapGraph {
            labels: (1..=n).collect(),
            weights,
        }
    }

    fn paper_graph() -> OverlapGraph {
        let bases: Vec<BasisSet> = PROOF_BASES.iter().map(|b| BasisSet::new(b.to_vec())).collect();
        build_overlap_graph(&bases)
    }

    #[test]
    fn complete_graph_has_symmetric_group() {
        let edges: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let r = automorphism_group(&graph_from_edges(5, &edges));
        assert_eq!(r.order, BigUint::from(120u32));
        assert!(verify_group(r.elements.as_ref().unwrap()));
    }

    #[test]
    fn small_known_orders() {
        // 6-cycle: dihedral of order 12; path on 4 vertices: order 2
        let cycle: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        assert_eq!(automorphism_group(&graph_from_edges(6, &cycle)).order, BigUint::from(12u32));
        let path = [(0, 1), (1, 2), (2, 3)];
        assert_eq!(automorphism_group(&graph_from_edges(4, &path)).order, BigUint::from(2u32));
        // Petersen graph: order 120
        let mut pet = Vec::new();
        for i in 0..5 {
            pet.push((i, (i + 1) % 5));
            pet.push((i, i + 5));
            pet.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(automorphism_group(&graph_from_edges(10, &pet)).order, BigUint::from(120u32));
        // empty graph on 7 vertices: 7!
        assert_eq!(automorphism_group(&graph_from_edges(7, &[])).order, BigUint::from(5040u32));
    }

    #[test]
    fn disjoint_bases_are_not_adjacent() {
        let g = paper_graph();
        assert!(g.is_edge(0, 4));
        let part = [0, 3, 8, 19, 20];
        for &i in &part {
            for &j in &part {
                assert!(!g.is_edge(i, j));
            }
        }
        assert_eq!(g.edges().len(), 155);
    }

    #[test]
    fn overlap_group_of_printed_proof() {
        let g = paper_graph();
        let r = automorphism_group(&g.unweighted());
        assert_eq!(r.order, BigUint::from(192u32));
        let els = r.elements.as_ref().unwrap();
        assert_eq!(els.len(), 192);
        assert!(verify_group(els));
        assert!(r.generators.iter().all(|p| g.unweighted().is_automorphism(p)));
        assert_eq!(r.vertex_orbits.iter().map(|o| o.len()).sum::<usize>(), 21);
        let s = r.structure.unwrap();
        assert_eq!(s.normal_elementary_abelian_order, 32);
        assert_eq!(s.normal_elementary_abelian_count, 1);
        assert_eq!(s.quotient_order, 6);
        // the quotient has three cosets of order 2, so it is not cyclic
        assert!(!s.quotient_cyclic && !s.cyclic_complement && !s.group_abelian);
    }
}
