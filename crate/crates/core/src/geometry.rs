//! Binary symplectic picture of the Pauli group.
//!
//! An unsigned `n`-qubit operator is the vector `(x, z)` in `GF(2)^{2n}`;
//! non-identity operators are the points of `PG(2n-1, 2)`. Two operators
//! commute iff the alternating form `x_u.z_v + z_u.x_v` vanishes, and an
//! operator is symmetric iff `Q(x, z) = x.z` vanishes, so the symmetric
//! operators form a hyperbolic quadric.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{CommutingSet, PauliOp};

/// A nonzero vector `(x, z)`, stored as `x << n | z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GF2Point {
    qubits: u8,
    bits: u16,
}

impl GF2Point {
    pub fn new(qubits: usize, bits: u16) -> Result<GF2Point> {
        if bits == 0 {
            return Err(Error::IdentityPoint);
        }
        Ok(GF2Point {
            qubits: qubits as u8,
            bits,
        })
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    pub fn x(&self) -> u8 {
        (self.bits >> self.qubits) as u8
    }

    pub fn z(&self) -> u8 {
        (self.bits & ((1 << self.qubits) - 1)) as u8
    }

    pub fn to_pauli(&self) -> PauliOp {
        PauliOp::from_bits(self.qubits as usize, self.x(), self.z(), 1)
    }
}

impl fmt::Debug for GF2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pauli().label())
    }
}

impl fmt::Display for GF2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_pauli().label())
    }
}

/// Drops the sign; fails on `±I`.
pub fn pauli_to_point(p: &PauliOp) -> Result<GF2Point> {
    let n = p.qubits();
    GF2Point::new(n, (p.x_bits() as u16) << n | p.z_bits() as u16)
}

fn parity(v: u32) -> u8 {
    (v.count_ones() & 1) as u8
}

pub fn symplectic_form(u: &GF2Point, v: &GF2Point) -> u8 {
    parity((u.x() & v.z()) as u32) ^ parity((u.z() & v.x()) as u32)
}

pub fn quadratic_form(u: &GF2Point) -> u8 {
    parity((u.x() & u.z()) as u32)
}

/// A subspace of `GF(2)^{2n}` held by its reduced row-echelon basis, so
/// equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Subspace {
    qubits: usize,
    basis: Vec<u16>,
}

/// Reduced row-echelon form; rows sorted by decreasing leading bit.
fn echelon(vectors: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut rows: Vec<u32> = Vec::new();
    for mut v in vectors {
        for r in &rows {
            let lead = 31 - r.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= r;
            }
        }
        if v == 0 {
            continue;
        }
        let lead = 31 - v.leading_zeros();
        for r in &mut rows {
            if *r >> lead & 1 == 1 {
                *r ^= v;
            }
        }
        rows.push(v);
    }
    rows.sort_unstable_by(|a, b| b.cmp(a));
    rows
}

impl GF2Subspace {
    pub fn span_points(qubits: usize, points: impl IntoIterator<Item = GF2Point>) -> GF2Subspace {
        GF2Subspace {
            qubits,
            basis: echelon(points.into_iter().map(|p| p.bits as u32))
                .into_iter()
                .map(|r| r as u16)
                .collect(),
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// `rank - 1`; the zero subspace has dimension `-1`.
    pub fn projective_dimension(&self) -> i32 {
        self.basis.len() as i32 - 1
    }

    pub fn basis(&self) -> Vec<GF2Point> {
        self.basis
            .iter()
            .map(|&b| GF2Point {
                qubits: self.qubits as u8,
                bits: b,
            })
            .collect()
    }

    /// All `2^rank - 1` points, sorted.
    pub fn points(&self) -> Vec<GF2Point> {
        let mut out: Vec<GF2Point> = (1u32..1 << self.rank())
            .map(|mask| {
                let bits = self
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u16, |acc, (_, &b)| acc ^ b);
                GF2Point {
                    qubits: self.qubits as u8,
                    bits,
                }
            })
            .collect();
        out.sort();
        out
    }

    pub fn contains(&self, p: &GF2Point) -> bool {
        let mut v = p.bits;
        for &r in &self.basis {
            let lead = 15 - r.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= r;
            }
        }
        v == 0
    }

    pub fn is_totally_isotropic(&self) -> bool {
        let b = self.basis();
        b.iter().all(|u| b.iter().all(|v| symplectic_form(u, v) == 0))
    }

    /// Every point satisfies `Q = 0`.
    pub fn is_singular(&self) -> bool {
        self.points().iter().all(|p| quadratic_form(p) == 0)
    }

    /// Operator labels of all points, sorted.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.points().iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }
}

impl fmt::Debug for GF2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PG({}, 2)<{:?}>", self.projective_dimension(), self.basis())
    }
}

/// Span of the operators of a set; they must be independent.
pub fn span(ops: &CommutingSet) -> Result<GF2Subspace> {
    let points: Vec<GF2Point> = ops.ops.iter().map(pauli_to_point).collect::<Result<_>>()?;
    let s = GF2Subspace::span_points(ops.qubits(), points);
    if s.rank() < ops.ops.len() {
        return Err(Error::DependentOperators {
            rank: s.rank(),
            expected: ops.ops.len(),
        });
    }
    Ok(s)
}

/// Intersection by Zassenhaus: reduce the rows `(u | u)` for `u` in `s1`
/// and `(v | 0)` for `v` in `s2`; rows whose left half vanishes carry a
/// basis of the intersection in their right half.
pub fn intersect(s1: &GF2Subspace, s2: &GF2Subspace) -> GF2Subspace {
    let w = 2 * s1.qubits as u32;
    let rows = s1
        .basis
        .iter()
        .map(|&u| (u as u32) << w | u as u32)
        .chain(s2.basis.iter().map(|&v| (v as u32) << w));
    let reduced = echelon(rows);
    let low = (1u32 << w) - 1;
    GF2Subspace {
        qubits: s1.qubits,
        basis: echelon(reduced.into_iter().filter(|r| r >> w == 0).map(|r| r & low))
            .into_iter()
            .map(|r| r as u16)
            .collect(),
    }
}

pub fn intersection_dimension_table(spaces: &[GF2Subspace]) -> Vec<Vec<i32>> {
    spaces
        .iter()
        .map(|a| spaces.iter().map(|b| intersect(a, b).projective_dimension()).collect())
        .collect()
}

/// Splits generators of a hyperbolic quadric into its two systems: two
/// generators lie in the same system iff their intersection has even
/// codimension in either of them. Returns index classes, the one holding
/// space 0 first.
pub fn classify_generator_systems(spaces: &[GF2Subspace]) -> Result<Vec<Vec<usize>>> {
    for (i, s) in spaces.iter().enumerate() {
        if !s.is_singular() || !s.is_totally_isotropic() {
            return Err(Error::NotOnQuadric(i));
        }
    }
    let n = spaces.len();
    let same = |i: usize, j: usize| -> bool {
        let k = intersect(&spaces[i], &spaces[j]).rank();
        (spaces[i].rank() - k).is_multiple_of(2)
    };
    let rel: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| same(i, j)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // exactly two classes: same(i,j) and same(j,k) must agree with same(i,k)
                if (rel[i][j] == rel[j][k]) != rel[i][k] {
                    return Err(Error::InconsistentSystems(i, j, k));
                }
            }
        }
    }
    let (first, second): (Vec<usize>, Vec<usize>) = (0..n).partition(|&j| rel[0][j]);
    Ok([first, second].into_iter().filter(|c| !c.is_empty()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservableReport {
    /// Unsigned operator label -> number of sets listing it.
    pub occurrences: BTreeMap<String, usize>,
    /// Operators not occurring exactly twice.
    pub distinguished: Vec<(String, usize)>,
    /// Pairs of set labels whose span intersection holds every
    /// distinguished operator, with the intersection's projective dimension.
    pub common_intersections: Vec<(String, String, i32)>,
}

/// Occurrence count of every operator across the sets, and which span
/// intersections hold the operators that do not occur exactly twice.
pub fn distinguished_observables(config: &[CommutingSet]) -> Result<ObservableReport> {
    let mut occurrences = BTreeMap::new();
    for set in config {
        let mut labels: Vec<String> = set.ops.iter().map(|o| o.unsigned().label()).collect();
        labels.sort();
        labels.dedup();
        for l in labels {
            *occurrences.entry(l).or_insert(0) += 1;
        }
    }
    let distinguished: Vec<(String, usize)> = occurrences
        .iter()
        .filter(|(_, &c)| c != 2)
        .map(|(l, &c)| (l.clone(), c))
        .collect();
    let points: Vec<GF2Point> = distinguished
        .iter()
        .map(|(l, _)| pauli_to_point(&l.parse()?))
        .collect::<Result<_>>()?;
    let spans: Vec<GF2Subspace> = config.iter().map(span).collect::<Result<_>>()?;
    let mut common_intersections = Vec::new();
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            let m = intersect(&spans[i], &spans[j]);
            if points.iter().all(|p| m.contains(p)) {
                common_intersections.push((
                    config[i].label.clone(),
                    config[j].label.clone(),
                    m.projective_dimension(),
                ));
            }
        }
    }
    Ok(ObservableReport {
        occurrences,
        distinguished,
        common_intersections,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpanSummary {
    pub label: String,
    pub projective_dimension: i32,
    pub points: Vec<String>,
    pub totally_isotropic: bool,
    pub on_quadric: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntersectionSummary {
    pub left: String,
    pub right: String,
    pub projective_dimension: i32,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeometryReport {
    pub spans: Vec<SpanSummary>,
    pub dimension_table: Vec<Vec<i32>>,
    pub intersections: Vec<IntersectionSummary>,
    pub systems: Vec<Vec<String>>,
    pub observables: ObservableReport,
}

pub fn geometry_report(config: &[CommutingSet]) -> Result<GeometryReport> {
    let spaces: Vec<GF2Subspace> = config.iter().map(span).collect::<Result<_>>()?;
    let label = |i: usize| config[i].label.clone();
    let spans = spaces
        .iter()
        .enumerate()
        .map(|(i, s)| SpanSummary {
            label: label(i),
            projective_dimension: s.projective_dimension(),
            points: s.labels(),
            totally_isotropic: s.is_totally_isotropic(),
            on_quadric: s.is_singular(),
        })
        .collect();
    let mut intersections = Vec::new();
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            let m = intersect(&spaces[i], &spaces[j]);
            intersections.push(IntersectionSummary {
                left: label(i),
                right: label(j),
                projective_dimension: m.projective_dimension(),
                points: m.labels(),
            });
        }
    }
    let systems = classify_generator_systems(&spaces)?
        .into_iter()
        .map(|c| c.into_iter().map(label).collect())
        .collect();
    Ok(GeometryReport {
        spans,
        dimension_table: intersection_dimension_table(&spaces),
        intersections,
        systems,
        observables: distinguished_observables(config)?,
    })
}

/// Plain-text rendering: the dimension table, then the intersection lists.
pub fn render_text(report: &GeometryReport) -> String {
    let mut s = String::new();
    let labels: Vec<String> = report.spans.iter().map(|x| format!("[{}]", x.label)).collect();
    s += &format!("{:6}", "");
    for l in &labels {
        s += &format!("{l:>6}");
    }
    s += "\n";
    for (i, row) in report.dimension_table.iter().enumerate() {
        s += &format!("{:6}", labels[i]);
        for (j, d) in row.iter().enumerate() {
            if i == j {
                s += &format!("{:>6}", "--");
            } else {
                s += &format!("{d:>6}");
            }
        }
        s += "\n";
    }
    s += "\n";
    for x in &report.intersections {
        s += &format!("[{}] ^ [{}] = {{{}}}\n", x.left, x.right, x.points.join(", "));
    }
    s += "\nsystems:";
    for c in &report.systems {
        s += &format!(" {{{}}}", c.join(", "));
    }
    s += "\n";
    s
}
