//! End-to-end checklist: every headline number recomputed from scratch and
//! compared with its reference value.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bases::{build_ortho_graph, contains_basis, enumerate_maximal_bases, BasisSet};
use crate::coloring::{check_colorable, export_cnf, KsInstance};
use crate::config::{magic_configuration, state_configuration};
use crate::dimacs::{self, SatResult};
use crate::error::Result;
use crate::geometry::{classify_generator_systems, intersect, intersection_dimension_table, span};
use crate::golden::{INTERSECTION_DIMENSIONS, INTERSECTION_POINTS, PROOF_BASES, SPAN_POINTS};
use crate::magic::verify_magic;
use crate::metrics::{distance_spectrum, Rational};
use crate::rays::{state_ray_table, RayTable};
use crate::search::{find_partitions, search_small_proof, SearchParams, SearchStatus};
use crate::symmetry::{automorphism_group, build_overlap_graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub observed: String,
    pub expected: String,
    pub pass: bool,
}

impl Claim {
    fn new(name: &str, observed: impl ToString, expected: impl ToString) -> Claim {
        let (observed, expected) = (observed.to_string(), expected.to_string());
        Claim {
            name: name.to_string(),
            pass: observed == expected,
            observed,
            expected,
        }
    }

    fn check(name: &str, observed: impl ToString, pass: bool) -> Claim {
        Claim {
            name: name.to_string(),
            observed: observed.to_string(),
            expected: String::new(),
            pass,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={} {}", self.name, self.observed, if self.pass { "PASS" } else { "FAIL" })?;
        if !self.pass && !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected)?;
        }
        Ok(())
    }
}

pub fn proof_bases() -> Vec<BasisSet> {
    PROOF_BASES.iter().map(|b| BasisSet::new(b.to_vec())).collect()
}

/// Intermediate results shared by the checks.
pub struct Artifacts {
    pub table: RayTable,
    pub all_bases: Vec<BasisSet>,
    pub proof_bases: Vec<BasisSet>,
}

impl Artifacts {
    /// Builds everything; `all_bases` may come from a cache.
    pub fn build(all_bases: Option<Vec<BasisSet>>) -> Result<Artifacts> {
        let table = state_ray_table()?;
        let all_bases = match all_bases {
            Some(b) => b,
            None => enumerate_maximal_bases(&build_ortho_graph(&table)),
        };
        Ok(Artifacts {
            table,
            all_bases,
            proof_bases: proof_bases(),
        })
    }
}

fn uncolorable_both_ways(table: &RayTable, bases: &[BasisSet]) -> Result<(bool, bool)> {
    let inst = KsInstance::new(table, bases)?;
    let solver = !check_colorable(&inst).is_colorable();
    let cnf = dimacs::Cnf::parse(&export_cnf(&inst))?;
    let sat = dimacs::solve(&cnf).0 == SatResult::Unsat;
    Ok((solver, sat))
}

fn status(non_colorable: bool) -> &'static str {
    if non_colorable {
        "non_colorable"
    } else {
        "colorable"
    }
}

fn labels(v: impl IntoIterator<Item = impl ToString>) -> BTreeSet<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

/// Runs every check in order.
pub fn reproduce(art: &Artifacts, search: &SearchParams) -> Result<Vec<Claim>> {
    let mut out = Vec::new();
    let t = &art.table;

    out.push(Claim::new("rays", t.len(), 160));
    let partners_ok = t.rays.iter().enumerate().all(|(i, r)| {
        let p = r.partner();
        p.partner() == *r
            && t.find(&p)
                .is_some_and(|j| t.block_of(j).map(|b| &b.label) == t.block_of(i + 1).map(|b| &b.label))
    });
    out.push(Claim::check("partners_in_block", partners_ok, partners_ok));

    let magic = verify_magic(&magic_configuration())?;
    out.push(Claim::new("magic_operators", magic.distinct_operators, 14));
    out.push(Claim::new("magic_each_twice", magic.each_occurs_twice, true));
    out.push(Claim::new(
        "magic_sign_product",
        magic.sign_product.map_or("none".to_string(), |s| s.to_string()),
        -1,
    ));

    out.push(Claim::new("bases", art.all_bases.len(), 661));
    let found = art
        .proof_bases
        .iter()
        .filter(|b| contains_basis(&art.all_bases, b.ray_ids()))
        .count();
    out.push(Claim::new("proof_bases_among_all", found, 21));

    let (s661, d661) = uncolorable_both_ways(t, &art.all_bases)?;
    out.push(Claim::new("color(661)", status(s661), "non_colorable"));
    out.push(Claim::new("dpll(661)", if d661 { "unsat" } else { "sat" }, "unsat"));
    let (s21, d21) = uncolorable_both_ways(t, &art.proof_bases)?;
    out.push(Claim::new("color(21)", status(s21), "non_colorable"));
    out.push(Claim::new("dpll(21)", if d21 { "unsat" } else { "sat" }, "unsat"));

    let parts = find_partitions(&art.proof_bases, t.len());
    let printed: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().map(|i| i + 1).collect()).collect();
    out.push(Claim::new("partitions(21)", format!("{printed:?}"), "[[1, 4, 9, 20, 21]]"));

    let spec21 = distance_spectrum(t, &art.proof_bases)?;
    out.push(Claim::new("distinct_D(21)", spec21.distinct_values(), 54));
    let top: Vec<String> = spec21.by_multiplicity().iter().take(2).map(|(v, _)| v.to_string()).collect();
    out.push(Claim::new("peaks_D2(21)", top.join(","), "29/31,43/62"));
    let spec_all = distance_spectrum(t, &art.all_bases)?;
    out.push(Claim::new("distinct_D(661)", spec_all.distinct_values(), 77));
    let in_range = spec_all
        .pairs
        .keys()
        .all(|v| *v >= Rational::from_integer(0.into()) && *v <= Rational::from_integer(1.into()));
    out.push(Claim::check("D2_in_unit_interval", in_range, in_range));

    let cfg = state_configuration();
    let spaces = cfg.iter().map(span).collect::<Result<Vec<_>>>()?;
    let columns_ok = spaces
        .iter()
        .zip(SPAN_POINTS.iter())
        .all(|(s, col)| labels(s.labels()) == labels(col.iter()));
    out.push(Claim::check("span_columns", columns_ok, columns_ok));
    let quadric = spaces.iter().all(|s| s.is_singular() && s.points().len() == 31);
    out.push(Claim::check("points_on_quadric", quadric, quadric));
    let dims = intersection_dimension_table(&spaces);
    let dims_ok = dims.iter().zip(INTERSECTION_DIMENSIONS.iter()).all(|(a, b)| a.as_slice() == b.as_slice());
    out.push(Claim::check("intersection_dimensions", dims_ok, dims_ok));
    let lists_ok = INTERSECTION_POINTS
        .iter()
        .all(|(i, j, pts)| labels(intersect(&spaces[*i], &spaces[*j]).labels()) == labels(pts.iter()));
    out.push(Claim::check("intersection_lists", lists_ok, lists_ok));
    let systems: Vec<Vec<String>> = classify_generator_systems(&spaces)?
        .into_iter()
        .map(|c| c.into_iter().map(|i| cfg[i].label.clone()).collect())
        .collect();
    out.push(Claim::new("generator_systems", format!("{systems:?}"), r#"[["A", "B"], ["A'", "B'", "C"]]"#));

    let group = automorphism_group(&build_overlap_graph(&art.proof_bases).unweighted());
    out.push(Claim::new("aut_order", &group.order, BigUint::from(192u32)));
    let s = group.structure.as_ref();
    out.push(Claim::new(
        "normal_elementary_abelian",
        s.map_or(0, |s| s.normal_elementary_abelian_order),
        32,
    ));
    out.push(Claim::new("quotient_order", s.map_or(0, |s| s.quotient_order), 6));

    let cand = search_small_proof(t, &art.all_bases, search)?;
    let ok = cand.status == SearchStatus::Found
        && !cand.partitions.is_empty()
        && cand.coloring.as_ref().is_some_and(|c| !c.is_colorable());
    out.push(Claim::check(
        "search_candidate_size",
        cand.basis_indices.len(),
        ok,
    ));
    Ok(out)
}
