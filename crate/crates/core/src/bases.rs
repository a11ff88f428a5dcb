//! Orthogonality graph and enumeration of complete orthogonal bases.
//!
//! A "maximal basis" is a clique whose size equals the space dimension.
//! The search branches on the uncovered coordinate with the fewest rays
//! able to cover it (some basis vector must be nonzero on every
//! coordinate); branch `k` takes the `k`-th such ray and drops the earlier
//! ones, so every basis is produced exactly once. Branches are cut as soon
//! as the remaining candidates cannot fill the basis.

use std::fmt;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::rays::{Ray, RayTable};

#[derive(Clone, Debug)]
pub struct OrthoGraph {
    /// Ray id of each vertex.
    ids: Vec<usize>,
    rays: Vec<Ray>,
    adj: Vec<BitSet>,
    /// For each coordinate, the vertices whose ray is nonzero there.
    support: Vec<BitSet>,
    dim: usize,
}

impl OrthoGraph {
    /// Graph over `(id, ray)` pairs; edge iff the exact inner product is zero.
    pub fn new(vertices: Vec<(usize, Ray)>) -> OrthoGraph {
        let n = vertices.len();
        let dim = vertices.first().map_or(0, |(_, r)| r.dim());
        let (ids, rays): (Vec<usize>, Vec<Ray>) = vertices.into_iter().unzip();
        let mut adj = vec![BitSet::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if rays[u].is_orthogonal(&rays[v]) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        let support = (0..dim)
            .map(|c| BitSet::from_indices(n, (0..n).filter(|&v| rays[v].entries()[c] != 0)))
            .collect();
        OrthoGraph {
            ids,
            rays,
            adj,
            support,
            dim,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    fn vertex(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    /// Adjacency by ray id.
    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        match (self.vertex(u), self.vertex(v)) {
            (Some(a), Some(b)) => self.adj[a].contains(b),
            _ => false,
        }
    }

    pub fn degree(&self, id: usize) -> usize {
        self.vertex(id).map_or(0, |v| self.adj[v].count())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// True if the ids form `dim` pairwise-orthogonal nonzero rays.
    ///
    /// Pairwise-orthogonal nonzero vectors are independent, so this is
    /// equivalent to spanning the whole space.
    pub fn is_complete_basis(&self, ids: &[usize]) -> bool {
        if ids.len() != self.dim {
            return false;
        }
        let verts: Option<Vec<usize>> = ids.iter().map(|&id| self.vertex(id)).collect();
        let Some(verts) = verts else { return false };
        verts.iter().enumerate().all(|(i, &u)| {
            self.rays[u].norm_sq() > 0
                && verts[i + 1..]
                    .iter()
                    .all(|&v| self.rays[u].is_orthogonal(&self.rays[v]))
        })
    }
}

pub fn build_ortho_graph(table: &RayTable) -> OrthoGraph {
    OrthoGraph::new(
        table
            .rays
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.clone()))
            .collect(),
    )
}

/// Graph restricted to the given ray ids.
pub fn build_ortho_subgraph(table: &RayTable, ids: &[usize]) -> Result<OrthoGraph> {
    let vertices: Result<Vec<(usize, Ray)>> = ids
        .iter()
        .map(|&id| table.ray(id).map(|r| (id, r.clone())))
        .collect();
    Ok(OrthoGraph::new(vertices?))
}

/// Sorted ray ids of a complete orthogonal basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisSet {
    ray_ids: Vec<usize>,
}

impl BasisSet {
    pub fn new(mut ray_ids: Vec<usize>) -> BasisSet {
        ray_ids.sort_unstable();
        ray_ids.dedup();
        BasisSet { ray_ids }
    }

    pub fn ray_ids(&self) -> &[usize] {
        &self.ray_ids
    }

    pub fn len(&self) -> usize {
        self.ray_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ray_ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.ray_ids.binary_search(&id).is_ok()
    }

    pub fn shared(&self, other: &BasisSet) -> usize {
        self.ray_ids.iter().filter(|&&id| other.contains(id)).count()
    }

    /// Bit mask over ray ids `1..=universe`.
    pub fn mask(&self, universe: usize) -> BitSet {
        BitSet::from_indices(universe, self.ray_ids.iter().map(|&id| id - 1))
    }
}

impl fmt::Debug for BasisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.ray_ids)
    }
}

impl fmt::Display for BasisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ray_ids.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All cliques of size `g.dim()`, sorted lexicographically by ray id.
pub fn enumerate_maximal_bases(g: &OrthoGraph) -> Vec<BasisSet> {
    let n = g.vertex_count();
    if g.dim == 0 || n < g.dim {
        return Vec::new();
    }
    let weights = CoverWeights::new(g);
    let all = BitSet::full(n);
    let start = vec![0u64; g.dim];
    let mut found: Vec<Vec<usize>> = match pivot_coordinate(g, &weights, &all, &start) {
        None => Vec::new(),
        Some((coord, _)) => {
            // branch k includes the k-th candidate and excludes the earlier ones
            let branch: Vec<usize> = all.and(&g.support[coord]).iter().collect();
            branch
                .par_iter()
                .enumerate()
                .flat_map_iter(|(k, &v)| {
                    let mut cand = all.clone();
                    for &u in &branch[..k] {
                        cand.remove(u);
                    }
                    let mut out = Vec::new();
                    let mut clique = vec![v];
                    let cover = weights.add(v, &start);
                    extend(g, &weights, &mut clique, cand.and(&g.adj[v]), cover, &mut out);
                    out
                })
                .collect()
        }
    };
    let mut bases: Vec<BasisSet> = found
        .drain(..)
        .map(|verts| {
            let ids: Vec<usize> = verts.iter().map(|&u| g.ids[u]).collect();
            debug_assert!(g.is_complete_basis(&ids));
            BasisSet::new(ids)
        })
        .collect();
    bases.sort();
    bases
}

/// Per-ray contributions `L * v_c^2 / |v|^2` to each coordinate, with `L`
/// the lcm of all squared norms. Coordinate `c` lies in the span of a set
/// of orthogonal rays iff their contributions at `c` sum to `L`.
struct CoverWeights {
    full: u64,
    per_ray: Vec<Vec<u64>>,
}

impl CoverWeights {
    fn new(g: &OrthoGraph) -> Self {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let full = g.rays.iter().try_fold(1u64, |l, r| {
            let norm = r.norm_sq() as u64;
            (l / gcd(l, norm)).checked_mul(norm)
        });
        match full {
            Some(full) => {
                let per_ray = g
                    .rays
                    .iter()
                    .map(|r| {
                        let norm = r.norm_sq() as u64;
                        r.entries().iter().map(|&x| (x * x) as u64 * (full / norm)).collect()
                    })
                    .collect();
                CoverWeights { full, per_ray }
            }
            // fall back to "some chosen ray is nonzero here", still a valid necessary condition
            None => CoverWeights {
                full: 1,
                per_ray: g
                    .rays
                    .iter()
                    .map(|r| r.entries().iter().map(|&x| u64::from(x != 0)).collect())
                    .collect(),
            },
        }
    }

    fn add(&self, v: usize, cover: &[u64]) -> Vec<u64> {
        cover
            .iter()
            .zip(&self.per_ray[v])
            .map(|(a, b)| (a + b).min(self.full))
            .collect()
    }
}

/// Uncovered coordinate with the fewest candidates nonzero there.
fn pivot_coordinate(g: &OrthoGraph, w: &CoverWeights, cand: &BitSet, cover: &[u64]) -> Option<(usize, usize)> {
    cover
        .iter()
        .enumerate()
        .filter(|(_, &x)| x < w.full)
        .map(|(c, _)| (c, cand.and(&g.support[c]).count()))
        .min_by_key(|&(c, k)| (k, c))
}

// Some vector of a complete basis has a nonzero overlap with every
// coordinate outside the span of the chosen rays, so branching over the
// candidates of one such coordinate is exhaustive.
fn extend(
    g: &OrthoGraph,
    w: &CoverWeights,
    clique: &mut Vec<usize>,
    mut cand: BitSet,
    cover: Vec<u64>,
    out: &mut Vec<Vec<usize>>,
) {
    if clique.len() == g.dim {
        out.push(clique.clone());
        return;
    }
    if clique.len() + cand.count() < g.dim {
        return;
    }
    let Some((coord, k)) = pivot_coordinate(g, w, &cand, &cover) else {
        // only reachable with the fallback weights: extend in vertex order
        while let Some(v) = cand.first() {
            cand.remove(v);
            if clique.len() + 1 + cand.count() < g.dim {
                return;
            }
            let next = cand.and(&g.adj[v]);
            clique.push(v);
            extend(g, w, clique, next, cover.clone(), out);
            clique.pop();
        }
        return;
    };
    if k == 0 {
        return;
    }
    let branch = cand.and(&g.support[coord]);
    for v in branch.iter() {
        let next = cand.and(&g.adj[v]);
        clique.push(v);
        extend(g, w, clique, next, w.add(v, &cover), out);
        clique.pop();
        cand.remove(v);
        if clique.len() + cand.count() < g.dim {
            return;
        }
    }
}

/// Membership test against a canonically sorted list.
pub fn contains_basis(bases: &[BasisSet], candidate: &[usize]) -> bool {
    bases.binary_search(&BasisSet::new(candidate.to_vec())).is_ok()
}

/// One basis per line, ids separated by single spaces.
pub fn write_bases_text<W: Write>(bases: &[BasisSet], mut w: W) -> Result<()> {
    for b in bases {
        writeln!(w, "{b}")?;
    }
    Ok(())
}

pub fn read_bases_text<R: BufRead>(r: R) -> Result<Vec<BasisSet>> {
    let mut out = Vec::new();
    for (lineno, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let ids: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse).collect();
        let ids = ids.map_err(|e| Error::Parse {
            line: lineno + 1,
            message: e.to_string(),
        })?;
        out.push(BasisSet::new(ids));
    }
    Ok(out)
}
