//! Joint eigenrays of commuting sets and the 160-ray table.
//!
//! Everything here is integer arithmetic. The projector onto a joint
//! eigenspace is formed as `Π (I + s_i O_i)`, which is `2^k` times the true
//! projector; any nonzero column of it, divided by the gcd of its entries,
//! is the ray.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::config::state_configuration;
use crate::error::{Error, Result};
use crate::golden::{PARTNER_PLACEMENT, PRINTED_RAYS, PROOF_BASES};
use crate::matrix::IntMatrix;
use crate::pauli::CommutingSet;

/// A real projective ray with integer entries, sign-normalized so that the
/// first nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ray {
    entries: Vec<i64>,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ray {
    /// Divides out the content and fixes the sign. Returns `None` for the zero vector.
    pub fn canonical(mut entries: Vec<i64>) -> Option<Ray> {
        let content = entries.iter().fold(0, |g, &x| gcd(g, x));
        if content == 0 {
            return None;
        }
        let lead = *entries.iter().find(|&&x| x != 0)?;
        let k = if lead < 0 { -content } else { content };
        for x in &mut entries {
            *x /= k;
        }
        Some(Ray { entries })
    }

    /// Unit vector `e_i`, 0-based.
    pub fn unit(dim: usize, i: usize) -> Ray {
        let mut entries = vec![0; dim];
        entries[i] = 1;
        Ray { entries }
    }

    /// Parses whitespace-separated entries; `+`/`-` stand for ±1.
    pub fn parse(s: &str) -> Option<Ray> {
        let entries: Option<Vec<i64>> = s
            .split_whitespace()
            .map(|t| match t {
                "+" => Some(1),
                "-" => Some(-1),
                other => other.parse().ok(),
            })
            .collect();
        Ray::canonical(entries?)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn dot(&self, other: &Ray) -> i64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> i64 {
        self.dot(self)
    }

    pub fn support(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    pub fn is_orthogonal(&self, other: &Ray) -> bool {
        self.dot(other) == 0
    }

    /// Entry `i` of the partner is `-entry(d-1-i)`.
    pub fn partner(&self) -> Ray {
        let rev: Vec<i64> = self.entries.iter().rev().map(|&x| -x).collect();
        Ray::canonical(rev).expect("partner of a nonzero ray is nonzero")
    }

    /// True if `set`'s operators all have this ray as an eigenvector.
    pub fn is_joint_eigenvector(&self, set: &CommutingSet) -> bool {
        set.ops.iter().all(|op| {
            let image = op.apply(&self.entries);
            image == self.entries || image.iter().zip(&self.entries).all(|(a, b)| *a == -*b)
        })
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The 2^k joint eigenrays of `k` independent commuting operators on `k`
/// qubits, in sign-pattern order (first operator is the most significant
/// pattern bit, bit set means eigenvalue `-1`).
pub fn joint_eigenrays(set: &CommutingSet) -> Result<Vec<Ray>> {
    if !set.is_commuting() {
        return Err(Error::NonCommuting {
            label: set.label.clone(),
        });
    }
    let k = set.ops.len();
    let dim = 1usize << set.qubits();
    let id = IntMatrix::identity(dim);
    let mats: Vec<IntMatrix> = set.ops.iter().map(|o| o.to_matrix()).collect();
    let scale = 1i64 << k;
    let mut rays = Vec::with_capacity(1 << k);
    for pattern in 0..(1usize << k) {
        let signs: Vec<i8> = (0..k)
            .map(|i| if pattern >> (k - 1 - i) & 1 == 1 { -1 } else { 1 })
            .collect();
        let mut proj = id.clone();
        for (m, &s) in mats.iter().zip(&signs) {
            let factor = &id + &m.scale(s as i64);
            proj = &proj * &factor;
        }
        let rank = proj.trace() / scale;
        if rank != 1 || &proj * &proj != proj.scale(scale) {
            return Err(Error::NotRankOne {
                label: set.label.clone(),
                pattern: signs,
                rank,
            });
        }
        let col = (0..dim)
            .map(|c| proj.column(c))
            .find(|c| c.iter().any(|&x| x != 0))
            .expect("rank-one projector has a nonzero column");
        rays.push(Ray::canonical(col).expect("nonzero column"));
    }
    Ok(rays)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub label: String,
    /// First and last ray id, inclusive.
    pub first_id: usize,
    pub last_id: usize,
}

/// Rays with 1-based ids, grouped into one block per commuting set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayTable {
    pub rays: Vec<Ray>,
    pub blocks: Vec<Block>,
}

impl RayTable {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.rays.first().map_or(0, Ray::dim)
    }

    /// Ray by 1-based id.
    pub fn ray(&self, id: usize) -> Result<&Ray> {
        id.checked_sub(1)
            .and_then(|i| self.rays.get(i))
            .ok_or(Error::UnknownRay(id))
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> {
        1..=self.rays.len()
    }

    /// Id of a ray equal to `r`, if present.
    pub fn find(&self, r: &Ray) -> Option<usize> {
        self.rays.iter().position(|x| x == r).map(|i| i + 1)
    }

    pub fn block_of(&self, id: usize) -> Option<&Block> {
        self.blocks
            .iter()
            .find(|b| b.first_id <= id && id <= b.last_id)
    }

    pub fn block_ids(&self, label: &str) -> Option<Vec<usize>> {
        self.blocks
            .iter()
            .find(|b| b.label == label)
            .map(|b| (b.first_id..=b.last_id).collect())
    }

    /// First id at which the two tables differ.
    pub fn first_difference(&self, other: &RayTable) -> Option<usize> {
        let n = self.len().max(other.len());
        (0..n)
            .find(|&i| self.rays.get(i) != other.rays.get(i))
            .map(|i| i + 1)
    }

    /// Writes `id,v1,...,vd` rows under a header.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let header: Vec<String> = (1..=self.dim()).map(|i| format!("v{i}")).collect();
        writeln!(w, "id,{}", header.join(","))?;
        for (i, r) in self.rays.iter().enumerate() {
            let vals: Vec<String> = r.entries().iter().map(|x| x.to_string()).collect();
            writeln!(w, "{},{}", i + 1, vals.join(","))?;
        }
        Ok(())
    }

    /// Reads rows written by [`RayTable::write_csv`]. Block metadata is not
    /// stored in the CSV, so the result has a single unnamed block.
    pub fn read_csv<R: BufRead>(r: R) -> Result<RayTable> {
        let mut rays = Vec::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            let bad = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            if lineno == 0 {
                if !line.starts_with("id,v1") {
                    return Err(bad("missing `id,v1,...` header".into()));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let id: usize = fields
                .next()
                .and_then(|f| f.trim().parse().ok())
                .ok_or_else(|| bad("missing id".into()))?;
            if id != rays.len() + 1 {
                return Err(bad(format!("expected id {}, found {id}", rays.len() + 1)));
            }
            let entries: std::result::Result<Vec<i64>, _> =
                fields.map(|f| f.trim().parse::<i64>()).collect();
            let entries = entries.map_err(|e| bad(e.to_string()))?;
            let ray = Ray::canonical(entries.clone())
                .filter(|r| r.entries() == entries.as_slice())
                .ok_or_else(|| bad("ray is zero or not in canonical form".into()))?;
            rays.push(ray);
        }
        let n = rays.len();
        if rays.iter().any(|r| r.dim() != rays[0].dim()) {
            return Err(Error::Parse {
                line: 0,
                message: "rays of different lengths".into(),
            });
        }
        Ok(RayTable {
            rays,
            blocks: vec![Block {
                label: String::new(),
                first_id: 1,
                last_id: n,
            }],
        })
    }

    /// A table from a plain list of rays, one block.
    pub fn from_rays(label: &str, rays: Vec<Ray>) -> RayTable {
        let n = rays.len();
        RayTable {
            rays,
            blocks: vec![Block {
                label: label.into(),
                first_id: 1,
                last_id: n,
            }],
        }
    }
}

/// Label and first id of each block, in table order.
const BLOCK_LAYOUT: [(&str, usize); 5] = [("B", 1), ("A", 33), ("A'", 65), ("B'", 97), ("C", 129)];

/// Builds the 160-ray table from the five commuting sets and checks it
/// against the reference listing: every printed vector at its id, every
/// partner inside its block, and every reference basis orthogonal.
pub fn build_ray_table(config: &[CommutingSet]) -> Result<RayTable> {
    let by_label: HashMap<&str, &CommutingSet> =
        config.iter().map(|s| (s.label.as_str(), s)).collect();
    let printed: HashMap<usize, &[&str; 16]> = PRINTED_RAYS.iter().map(|(id, v)| (*id, v)).collect();

    let mut rays: Vec<Option<Ray>> = vec![None; 160];
    let mut blocks = Vec::with_capacity(5);
    for (label, first) in BLOCK_LAYOUT {
        let set = by_label.get(label).ok_or_else(|| Error::GoldenMismatch {
            id: first,
            reason: format!("configuration has no set labelled {label}"),
        })?;
        let eigen = joint_eigenrays(set)?;
        let dim = eigen.first().map_or(0, Ray::dim);
        if eigen.len() != 32 || dim != 32 {
            return Err(Error::GoldenMismatch {
                id: first,
                reason: format!("set {label} yields {} rays of dimension {dim}", eigen.len()),
            });
        }
        let ordered: Vec<Ray> = if let Some(vectors) = printed.get(&first) {
            let head: Vec<Ray> = vectors
                .iter()
                .map(|s| Ray::parse(s).expect("reference vector parses"))
                .collect();
            let mut block = vec![None; 32];
            for (k, r) in head.iter().enumerate() {
                block[k] = Some(r.clone());
            }
            for (k, r) in head.iter().enumerate() {
                let printed_id = first + k;
                let slot = PARTNER_PLACEMENT
                    .iter()
                    .find(|(_, p)| *p == printed_id)
                    .map(|(s, _)| *s)
                    .expect("every printed ray has a partner slot");
                block[slot - first] = Some(r.partner());
            }
            block.into_iter().map(|r| r.expect("slot filled")).collect()
        } else {
            (0..32).map(|i| Ray::unit(32, i)).collect()
        };
        for (k, r) in ordered.iter().enumerate() {
            if !eigen.contains(r) {
                return Err(Error::GoldenMismatch {
                    id: first + k,
                    reason: format!("not a joint eigenray of set {label}"),
                });
            }
        }
        for (k, r) in ordered.into_iter().enumerate() {
            rays[first - 1 + k] = Some(r);
        }
        blocks.push(Block {
            label: label.to_string(),
            first_id: first,
            last_id: first + 31,
        });
    }
    let table = RayTable {
        rays: rays.into_iter().map(|r| r.expect("all blocks filled")).collect(),
        blocks,
    };
    check_reference_bases(&table)?;
    Ok(table)
}

/// The table for the state configuration.
pub fn state_ray_table() -> Result<RayTable> {
    build_ray_table(&state_configuration())
}

/// Every reference basis must be pairwise orthogonal in the table; this is
/// what pins the partner placement.
pub fn check_reference_bases(table: &RayTable) -> Result<()> {
    for (n, basis) in PROOF_BASES.iter().enumerate() {
        for (i, &u) in basis.iter().enumerate() {
            for &v in &basis[i + 1..] {
                if !table.ray(u)?.is_orthogonal(table.ray(v)?) {
                    return Err(Error::GoldenMismatch {
                        id: u.max(v),
                        reason: format!("reference basis {} has rays {u} and {v} not orthogonal", n + 1),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Label of the unique set having `r` as a joint eigenvector.
pub fn identify_block<'a>(r: &Ray, config: &'a [CommutingSet]) -> Result<&'a str> {
    let hits: Vec<&CommutingSet> = config.iter().filter(|s| r.is_joint_eigenvector(s)).collect();
    match hits.as_slice() {
        [only] => Ok(&only.label),
        _ => Err(Error::AmbiguousBlock(hits.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::mermin_square_sets;

    fn table() -> RayTable {
        state_ray_table().unwrap()
    }

    #[test]
    fn computational_basis_from_b() {
        let cfg = state_configuration();
        let mut rays = joint_eigenrays(&cfg[1]).unwrap();
        rays.sort();
        let mut units: Vec<Ray> = (0..32).map(|i| Ray::unit(32, i)).collect();
        units.sort();
        assert_eq!(rays, units);
    }

    #[test]
    fn ray_33_is_an_eigenray_of_a() {
        let cfg = state_configuration();
        let r33 = Ray::parse(
            "1 0 0 1 0 -1 1 0 0 1 1 0 -1 0 0 1 0 -1 1 0 1 0 0 1 1 0 0 -1 0 -1 -1 0",
        )
        .unwrap();
        assert!(joint_eigenrays(&cfg[0]).unwrap().contains(&r33));
        assert_eq!(table().ray(33).unwrap(), &r33);
    }

    #[test]
    fn ray_65_has_eight_unit_entries() {
        let t = table();
        let r = t.ray(65).unwrap();
        assert_eq!(r.support(), 8);
        assert_eq!(&r.entries()[..9], &[0, 0, 1, 1, 0, 0, 1, 1, 0]);
        assert!(joint_eigenrays(&state_configuration()[2]).unwrap().contains(r));
    }

    #[test]
    fn printed_ids() {
        let t = table();
        assert_eq!(t.ray(2).unwrap(), &Ray::unit(32, 1));
        let r97 = Ray::parse("1 0 1 0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 1 0 0 0 0 0").unwrap();
        assert_eq!(t.ray(97).unwrap(), &r97);
    }

    #[test]
    fn partner_placement() {
        let t = table();
        assert_eq!(t.ray(1).unwrap().partner(), *t.ray(32).unwrap());
        for base in [33, 65, 97, 129] {
            for k in base..base + 16 {
                let want = match k {
                    138 => 155,
                    139 => 154,
                    _ => k + 16,
                };
                assert_eq!(&t.ray(k).unwrap().partner(), t.ray(want).unwrap(), "ray {k}");
            }
        }
        let p33 = t.ray(33).unwrap().partner();
        assert!((49..=64).contains(&t.find(&p33).unwrap()));
    }

    #[test]
    fn antisymmetric_vector_is_its_own_partner() {
        let mut v = vec![0i64; 32];
        v[0] = 1;
        v[31] = -1;
        v[5] = 1;
        v[26] = -1;
        let r = Ray::canonical(v).unwrap();
        assert_eq!(r.partner(), r);
    }

    #[test]
    fn identify_blocks() {
        let t = table();
        let cfg = state_configuration();
        assert_eq!(identify_block(t.ray(1).unwrap(), &cfg).unwrap(), "B");
        assert_eq!(identify_block(t.ray(33).unwrap(), &cfg).unwrap(), "A");
        assert_eq!(identify_block(t.ray(129).unwrap(), &cfg).unwrap(), "C");
        let e = Ray::canonical((0..32).map(|i| i as i64 + 1).collect()).unwrap();
        assert!(matches!(identify_block(&e, &cfg), Err(Error::AmbiguousBlock(0))));
    }

    #[test]
    fn dependent_set_is_rejected() {
        let cfg = state_configuration();
        let mut set = cfg[1].clone();
        set.ops[4] = set.ops[0].mul(&set.ops[1]).unwrap();
        match joint_eigenrays(&set) {
            Err(Error::NotRankOne { pattern, .. }) => assert_eq!(pattern.len(), 5),
            other => panic!("unexpected {other:?}"),
        }
        let mut bad = cfg[1].clone();
        bad.ops[0] = crate::config::x(2);
        assert!(matches!(joint_eigenrays(&bad), Err(Error::NonCommuting { .. })));
    }

    #[test]
    fn mermin_square_has_24_rays() {
        let mut all = Vec::new();
        for set in mermin_square_sets() {
            all.extend(joint_eigenrays(&set).unwrap());
        }
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn csv_round_trip() {
        let t = table();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let back = RayTable::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back.rays, t.rays);
        assert_eq!(t.first_difference(&back), None);
        let text = String::from_utf8(buf).unwrap().replacen("\n2,0,1", "\n2,1,0", 1);
        let corrupted = RayTable::read_csv(text.as_bytes()).unwrap();
        assert_eq!(t.first_difference(&corrupted), Some(2));
        assert!(RayTable::read_csv("garbage\n".as_bytes()).is_err());
        assert!(RayTable::read_csv("id,v1,v2\n1,1,0\n2,1\n".as_bytes()).is_err());
    }
}
