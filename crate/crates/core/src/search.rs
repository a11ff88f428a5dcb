//! Partition detection and randomized search for small non-colorable basis
//! subsets.
//!
//! A candidate qualifies when it (a) contains five bases that partition the
//! ray set and (b) admits no coloring. Restarts are independent: restart `k`
//! draws from a ChaCha stream selected by `k`, so results do not depend on
//! thread scheduling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::BasisSet;
use crate::bitset::BitSet;
use crate::coloring::{check_colorable, ColoringResult, KsInstance, OrthoScope};
use crate::error::Result;
use crate::rays::RayTable;

/// Every subset of `bases` whose members are pairwise disjoint and together
/// cover rays `1..=universe` exactly. Each cover is returned once, as sorted
/// indices into `bases`; the list is sorted.
///
/// Works as exact cover: branch on the lowest uncovered ray over the bases
/// that contain it and avoid everything already covered.
pub fn find_covers(bases: &[BasisSet], universe: usize) -> Vec<Vec<usize>> {
    let masks: Vec<BitSet> = bases.iter().map(|b| b.mask(universe)).collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (i, b) in bases.iter().enumerate() {
        for &id in b.ray_ids() {
            if (1..=universe).contains(&id) {
                containing[id - 1].push(i);
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cover_rec(&masks, &containing, BitSet::new(universe), universe, &mut chosen, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn cover_rec(
    masks: &[BitSet],
    containing: &[Vec<usize>],
    covered: BitSet,
    universe: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(next) = (0..universe).find(|&r| !covered.contains(r)) else {
        out.push(chosen.clone());
        return;
    };
    for &b in &containing[next] {
        if masks[b].is_disjoint(&covered) {
            let mut now = covered.clone();
            now.or_assign(&masks[b]);
            chosen.push(b);
            cover_rec(masks, containing, now, universe, chosen, out);
            chosen.pop();
        }
    }
}

/// Five-basis partitions of the rays `1..=universe`.
pub fn find_partitions(bases: &[BasisSet], universe: usize) -> Vec<[usize; 5]> {
    find_covers(bases, universe)
        .into_iter()
        .filter_map(|c| <[usize; 5]>::try_from(c).ok())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub seed: u64,
    /// Size of each random candidate before minimization.
    pub max_size: usize,
    /// Number of restarts.
    pub budget: usize,
    pub scope: OrthoScope,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            seed: 0,
            max_size: 30,
            budget: 16,
            scope: OrthoScope::AllPairs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofCandidate {
    pub status: SearchStatus,
    pub seed: u64,
    /// Restart that produced the candidate.
    pub restart: Option<usize>,
    /// Sorted indices into the searched basis list.
    pub basis_indices: Vec<usize>,
    /// Five-basis partitions inside the candidate, as indices into the
    /// searched basis list.
    pub partitions: Vec<[usize; 5]>,
    pub coloring: Option<ColoringResult>,
}

/// Conditions (a) and (b) for an explicit subset.
pub struct ProofCheck {
    pub partitions: Vec<[usize; 5]>,
    pub coloring: ColoringResult,
}

impl ProofCheck {
    pub fn holds(&self) -> bool {
        !self.partitions.is_empty() && !self.coloring.is_colorable()
    }
}

pub fn check_proof(table: &RayTable, bases: &[BasisSet], scope: OrthoScope) -> Result<ProofCheck> {
    let inst = KsInstance::with_scope(table, bases, scope)?;
    Ok(ProofCheck {
        partitions: find_partitions(bases, table.len()),
        coloring: check_colorable(&inst),
    })
}

/// Randomized search over subsets of `all_bases`.
///
/// Each restart samples a partition from the catalogue of five-basis
/// partitions, pads it with distinct random bases up to `max_size`, and if
/// the result is non-colorable, greedily drops bases (in a random order)
/// while both conditions still hold. The smallest result wins; ties go to
/// the lowest restart index.
pub fn search_small_proof(
    table: &RayTable,
    all_bases: &[BasisSet],
    params: &SearchParams,
) -> Result<ProofCandidate> {
    let exhausted = ProofCandidate {
        status: SearchStatus::BudgetExhausted,
        seed: params.seed,
        restart: None,
        basis_indices: Vec::new(),
        partitions: Vec::new(),
        coloring: None,
    };
    if params.budget == 0 {
        return Ok(exhausted);
    }
    let catalogue = find_partitions(all_bases, table.len());
    if catalogue.is_empty() {
        return Ok(exhausted);
    }
    let results: Vec<Option<Vec<usize>>> = (0..params.budget)
        .into_par_iter()
        .map(|k| restart(table, all_bases, &catalogue, params, k))
        .collect::<Result<_>>()?;
    let best = results
        .into_iter()
        .enumerate()
        .filter_map(|(k, r)| r.map(|s| (s.len(), k, s)))
        .min_by_key(|(len, k, _)| (*len, *k));
    let Some((_, k, indices)) = best else {
        return Ok(exhausted);
    };
    let subset: Vec<BasisSet> = indices.iter().map(|&i| all_bases[i].clone()).collect();
    let check = check_proof(table, &subset, params.scope)?;
    debug_assert!(check.holds());
    let partitions = check
        .partitions
        .iter()
        .map(|p| p.map(|i| indices[i]))
        .collect();
    Ok(ProofCandidate {
        status: SearchStatus::Found,
        seed: params.seed,
        restart: Some(k),
        basis_indices: indices,
        partitions,
        coloring: Some(check.coloring),
    })
}

fn restart_rng(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

fn restart(
    table: &RayTable,
    all_bases: &[BasisSet],
    catalogue: &[[usize; 5]],
    params: &SearchParams,
    k: usize,
) -> Result<Option<Vec<usize>>> {
    let mut rng = restart_rng(params.seed, k);
    let mut picked: Vec<usize> = catalogue[rng.gen_range(0..catalogue.len())].to_vec();
    let target = params.max_size.clamp(5, all_bases.len());
    let mut rest: Vec<usize> = (0..all_bases.len()).filter(|i| !picked.contains(i)).collect();
    rest.shuffle(&mut rng);
    picked.extend(rest.into_iter().take(target - 5));
    picked.sort_unstable();

    let qualifies = |set: &[usize]| -> Result<bool> {
        let subset: Vec<BasisSet> = set.iter().map(|&i| all_bases[i].clone()).collect();
        Ok(check_proof(table, &subset, params.scope)?.holds())
    };
    if !qualifies(&picked)? {
        return Ok(None);
    }
    loop {
        let mut order = picked.clone();
        order.shuffle(&mut rng);
        let mut dropped = false;
        for b in order {
            let trial: Vec<usize> = picked.iter().copied().filter(|&i| i != b).collect();
            if qualifies(&trial)? {
                picked = trial;
                dropped = true;
            }
        }
        if !dropped {
            return Ok(Some(picked));
        }
    }
}
