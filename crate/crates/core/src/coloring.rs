//! Kochen-Specker colorings of ray/basis instances.
//!
//! A coloring assigns 0 or 1 to every ray so that no two orthogonal rays are
//! both 1 and no basis is entirely 0. The solver is a complete backtracking
//! search with the two propagation rules of the problem: a ray set to 1
//! forces all rays orthogonal to it to 0, and a basis whose other rays are
//! all 0 forces its last ray to 1.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bases::BasisSet;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::rays::RayTable;

/// Which orthogonal pairs carry the "not both 1" constraint.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrthoScope {
    /// Every orthogonal pair among the involved rays.
    #[default]
    AllPairs,
    /// Only pairs that sit together in some listed basis.
    WithinBases,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KsInstance {
    /// Involved ray ids, ascending; variable `i` is `ray_ids[i]`.
    pub ray_ids: Vec<usize>,
    pub bases: Vec<BasisSet>,
    /// Every orthogonal pair among the involved rays, as ray ids `(u, v)` with `u < v`.
    pub ortho_pairs: Vec<(usize, usize)>,
    pub scope: OrthoScope,
    #[serde(skip_serializing)]
    neighbors: Vec<Vec<usize>>,
    #[serde(skip_serializing)]
    basis_vars: Vec<Vec<usize>>,
    #[serde(skip_serializing)]
    var_bases: Vec<Vec<usize>>,
}

impl KsInstance {
    /// Instance over the rays appearing in `bases`.
    pub fn new(table: &RayTable, bases: &[BasisSet]) -> Result<KsInstance> {
        let mut ids: Vec<usize> = bases.iter().flat_map(|b| b.ray_ids().iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        Self::with_rays(table, &ids, bases)
    }

    /// Instance over the rays appearing in `bases` with the given constraint scope.
    pub fn with_scope(table: &RayTable, bases: &[BasisSet], scope: OrthoScope) -> Result<KsInstance> {
        let inst = Self::new(table, bases)?;
        Ok(match scope {
            OrthoScope::AllPairs => inst,
            OrthoScope::WithinBases => inst.restrict_to_bases(),
        })
    }

    fn restrict_to_bases(mut self) -> KsInstance {
        let n = self.var_count();
        let mut together = vec![BitSet::new(n); n];
        for vars in &self.basis_vars {
            for &u in vars {
                for &v in vars {
                    if u != v {
                        together[u].insert(v);
                    }
                }
            }
        }
        for (u, nbrs) in self.neighbors.iter_mut().enumerate() {
            nbrs.retain(|&v| together[u].contains(v));
        }
        let ids = &self.ray_ids;
        self.ortho_pairs.retain(|&(a, b)| {
            let (u, v) = (ids.binary_search(&a).unwrap(), ids.binary_search(&b).unwrap());
            together[u].contains(v)
        });
        self.scope = OrthoScope::WithinBases;
        self
    }

    /// Instance over an explicit ray set; every basis must lie inside it.
    pub fn with_rays(table: &RayTable, ray_ids: &[usize], bases: &[BasisSet]) -> Result<KsInstance> {
        let mut ids = ray_ids.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let rays = ids
            .iter()
            .map(|&id| table.ray(id))
            .collect::<Result<Vec<_>>>()?;
        let n = ids.len();
        let mut neighbors = vec![Vec::new(); n];
        let mut ortho_pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rays[u].is_orthogonal(rays[v]) {
                    neighbors[u].push(v);
                    neighbors[v].push(u);
                    ortho_pairs.push((ids[u], ids[v]));
                }
            }
        }
        let var_of = |id: usize| ids.binary_search(&id).map_err(|_| Error::UnknownRay(id));
        let mut basis_vars = Vec::with_capacity(bases.len());
        let mut var_bases = vec![Vec::new(); n];
        for (bi, b) in bases.iter().enumerate() {
            let vars = b
                .ray_ids()
                .iter()
                .map(|&id| var_of(id))
                .collect::<Result<Vec<_>>>()?;
            for &v in &vars {
                var_bases[v].push(bi);
            }
            basis_vars.push(vars);
        }
        Ok(KsInstance {
            ray_ids: ids,
            bases: bases.to_vec(),
            ortho_pairs,
            scope: OrthoScope::AllPairs,
            neighbors,
            basis_vars,
            var_bases,
        })
    }

    pub fn var_count(&self) -> usize {
        self.ray_ids.len()
    }

    pub fn degree(&self, var: usize) -> usize {
        self.neighbors[var].len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringStatus {
    Colorable,
    NonColorable,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub propagations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringResult {
    pub status: ColoringStatus,
    /// Values aligned with the instance's `ray_ids`.
    pub witness: Option<Vec<u8>>,
    pub stats: SearchStats,
    /// The search is deterministic (static order); the seed is recorded so
    /// certificates have a uniform replay field.
    pub replay_seed: u64,
}

impl ColoringResult {
    pub fn is_colorable(&self) -> bool {
        self.status == ColoringStatus::Colorable
    }
}

const UNSET: i8 = -1;

struct Solver<'a> {
    inst: &'a KsInstance,
    values: Vec<i8>,
    order: Vec<usize>,
    stats: SearchStats,
}

impl Solver<'_> {
    fn set(&mut self, v: usize, val: i8, trail: &mut Vec<usize>, queue: &mut Vec<usize>) -> bool {
        match self.values[v] {
            UNSET => {
                self.values[v] = val;
                trail.push(v);
                queue.push(v);
                self.stats.propagations += 1;
                true
            }
            x => x == val,
        }
    }

    /// Assigns and propagates; on conflict the trail still lists every
    /// assignment made so the caller can undo them.
    fn assign(&mut self, var: usize, val: i8, trail: &mut Vec<usize>) -> bool {
        let inst = self.inst;
        let mut queue = Vec::new();
        if !self.set(var, val, trail, &mut queue) {
            return false;
        }
        while let Some(v) = queue.pop() {
            if self.values[v] == 1 {
                for &w in &inst.neighbors[v] {
                    if !self.set(w, 0, trail, &mut queue) {
                        return false;
                    }
                }
                continue;
            }
            for &b in &inst.var_bases[v] {
                let mut open = None;
                let mut open_count = 0;
                let mut satisfied = false;
                for &w in &inst.basis_vars[b] {
                    match self.values[w] {
                        1 => {
                            satisfied = true;
                            break;
                        }
                        UNSET => {
                            open_count += 1;
                            open = Some(w);
                        }
                        _ => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match (open_count, open) {
                    (0, _) => return false,
                    (1, Some(w))
                        if !self.set(w, 1, trail, &mut queue) => {
                            return false;
                        }
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &[usize]) {
        for &v in trail {
            self.values[v] = UNSET;
        }
    }

    fn search(&mut self) -> bool {
        let Some(var) = self.order.iter().copied().find(|&v| self.values[v] == UNSET) else {
            return true;
        };
        self.stats.nodes += 1;
        for val in [1, 0] {
            let mut trail = Vec::new();
            if self.assign(var, val, &mut trail) && self.search() {
                return true;
            }
            self.undo(&trail);
        }
        false
    }
}

/// Exhaustive colorability decision. A returned witness has already been
/// checked with [`verify_coloring`].
pub fn check_colorable(inst: &KsInstance) -> ColoringResult {
    let n = inst.var_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(inst.degree(v)), inst.ray_ids[v]));
    let mut solver = Solver {
        inst,
        values: vec![UNSET; n],
        order,
        stats: SearchStats::default(),
    };
    // bases of a single ray force it immediately
    let mut ok = true;
    for vars in &inst.basis_vars {
        if vars.is_empty() {
            ok = false;
        } else if let [only] = vars.as_slice() {
            let mut trail = Vec::new();
            ok &= solver.assign(*only, 1, &mut trail);
        }
    }
    let found = ok && solver.search();
    let stats = solver.stats;
    if found {
        let witness: Vec<u8> = solver.values.iter().map(|&x| (x == 1) as u8).collect();
        assert!(
            verify_coloring(inst, &witness).unwrap_or(false),
            "solver produced an invalid coloring"
        );
        ColoringResult {
            status: ColoringStatus::Colorable,
            witness: Some(witness),
            stats,
            replay_seed: 0,
        }
    } else {
        ColoringResult {
            status: ColoringStatus::NonColorable,
            witness: None,
            stats,
            replay_seed: 0,
        }
    }
}

/// Checks both coloring rules directly.
pub fn verify_coloring(inst: &KsInstance, assignment: &[u8]) -> Result<bool> {
    if assignment.len() != inst.var_count() {
        return Err(Error::AssignmentSize {
            expected: inst.var_count(),
            found: assignment.len(),
        });
    }
    let value = |id: usize| -> u8 {
        let var = inst.ray_ids.binary_search(&id).expect("id in instance");
        assignment[var]
    };
    let pairs_ok = inst
        .ortho_pairs
        .iter()
        .all(|&(u, v)| !(value(u) == 1 && value(v) == 1));
    let bases_ok = inst
        .bases
        .iter()
        .all(|b| b.ray_ids().iter().any(|&id| value(id) == 1));
    Ok(pairs_ok && bases_ok)
}

/// DIMACS CNF: variable `i + 1` is ray `ray_ids[i]`; one `(¬u ∨ ¬v)` per
/// orthogonal pair, then one positive clause per basis.
pub fn export_cnf(inst: &KsInstance) -> String {
    let var = |id: usize| inst.ray_ids.binary_search(&id).expect("id in instance") + 1;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "c Kochen-Specker coloring: {} rays, {} orthogonal pairs, {} bases",
        inst.var_count(),
        inst.ortho_pairs.len(),
        inst.bases.len()
    );
    for (i, id) in inst.ray_ids.iter().enumerate() {
        let _ = writeln!(out, "c var {} ray {}", i + 1, id);
    }
    let _ = writeln!(
        out,
        "p cnf {} {}",
        inst.var_count(),
        inst.ortho_pairs.len() + inst.bases.len()
    );
    for &(u, v) in &inst.ortho_pairs {
        let _ = writeln!(out, "-{} -{} 0", var(u), var(v));
    }
    for b in &inst.bases {
        let lits: Vec<String> = b.ray_ids().iter().map(|&id| var(id).to_string()).collect();
        let _ = writeln!(out, "{} 0", lits.join(" "));
    }
    out
}
