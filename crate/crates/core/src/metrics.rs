//! Hilbert-Schmidt distances between orthogonal bases, kept as exact
//! fractions.
//!
//! For bases `a`, `b` of a `d`-dimensional space with transition
//! probabilities `p_ij = <a_i,b_j>^2 / (|a_i|^2 |b_j|^2)`,
//!
//! ```text
//! D^2 = 1 - (1/(d-1)) * sum_ij (p_ij - 1/d)^2 = 1 - (sum_ij p_ij^2 - 1)/(d-1)
//! ```
//!
//! The second form needs only the row sums `sum_j p_ij = 1`. [`DistanceEngine`]
//! evaluates it in integers by scaling every ray to a common squared norm `L`;
//! [`hs_distance_squared`] evaluates the first form term by term.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::BasisSet;
use crate::error::{Error, Result};
use crate::rays::{Ray, RayTable};

pub type Rational = BigRational;

fn rational(n: i128, d: i128) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn basis_rays<'t>(table: &'t RayTable, b: &BasisSet) -> Result<Vec<&'t Ray>> {
    let rays: Vec<&Ray> = b.ray_ids().iter().map(|&id| table.ray(id)).collect::<Result<_>>()?;
    let d = table.dim();
    let incomplete = |why: String| Error::IncompleteBasis(format!("{b}: {why}"));
    if rays.len() != d {
        return Err(incomplete(format!("{} rays in dimension {d}", rays.len())));
    }
    for (i, r) in rays.iter().enumerate() {
        for s in &rays[i + 1..] {
            if !r.is_orthogonal(s) {
                return Err(incomplete("rays not mutually orthogonal".into()));
            }
        }
    }
    Ok(rays)
}

/// Exact `p_ij` for two complete bases, rows indexed by `a`.
pub fn transition_matrix(table: &RayTable, a: &BasisSet, b: &BasisSet) -> Result<Vec<Vec<Rational>>> {
    let ra = basis_rays(table, a)?;
    let rb = basis_rays(table, b)?;
    Ok(ra
        .iter()
        .map(|u| {
            rb.iter()
                .map(|v| {
                    let ip = u.dot(v) as i128;
                    rational(ip * ip, u.norm_sq() as i128 * v.norm_sq() as i128)
                })
                .collect()
        })
        .collect())
}

/// `1 - (1/(d-1)) * sum (p_ij - 1/d)^2`, term by term.
pub fn hs_distance_squared(table: &RayTable, a: &BasisSet, b: &BasisSet) -> Result<Rational> {
    let p = transition_matrix(table, a, b)?;
    let d = p.len() as i128;
    let inv_d = rational(1, d);
    let mut sum = Rational::zero();
    for row in &p {
        for x in row {
            let dev = x - &inv_d;
            sum += &dev * &dev;
        }
    }
    Ok(Rational::one() - sum / rational(d - 1, 1))
}

/// Integer evaluation of `sum p_ij^2` over a fixed ray table.
///
/// With `L` the lcm of the squared norms, `sum p_ij^2 = S / L^4` where
/// `S = sum <a_i,b_j>^4 (L/|a_i|^2)^2 (L/|b_j|^2)^2`; the per-pair weights
/// are tabulated once.
pub struct DistanceEngine<'t> {
    table: &'t RayTable,
    weights: Vec<u128>,
    n: usize,
    l4: u128,
}

impl<'t> DistanceEngine<'t> {
    /// `None` when the common scale does not fit the integer path.
    pub fn new(table: &'t RayTable) -> Option<Self> {
        fn gcd(a: u128, b: u128) -> u128 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut l: u128 = 1;
        for r in &table.rays {
            let n = r.norm_sq() as u128;
            l = (l / gcd(l, n)).checked_mul(n)?;
        }
        let l4 = l.checked_pow(4)?;
        let dim = table.dim() as u128;
        // S <= d * L^4, and we form d * L^4 in the distance
        dim.checked_mul(l4)?.checked_mul(dim)?;
        let n = table.len();
        let scale: Vec<u128> = table.rays.iter().map(|r| l / r.norm_sq() as u128).collect();
        let mut weights = vec![0u128; n * n];
        for i in 0..n {
            for j in 0..n {
                let ip = table.rays[i].dot(&table.rays[j]).unsigned_abs() as u128;
                let s = scale[i] * scale[j];
                weights[i * n + j] = ip.checked_pow(4)?.checked_mul(s.checked_mul(s)?)?;
            }
        }
        Some(DistanceEngine {
            table,
            weights,
            n,
            l4,
        })
    }

    fn scaled_sum(&self, a: &BasisSet, b: &BasisSet) -> u128 {
        let mut s = 0u128;
        for &i in a.ray_ids() {
            let row = &self.weights[(i - 1) * self.n..i * self.n];
            for &j in b.ray_ids() {
                s += row[j - 1];
            }
        }
        s
    }

    /// `D^2 = (d L^4 - S) / ((d-1) L^4)`; expects validated bases.
    fn rational_of(&self, s: u128) -> Rational {
        let d = self.table.dim() as u128;
        Rational::new(
            BigInt::from(d * self.l4 - s),
            BigInt::from((d - 1) * self.l4),
        )
    }

    pub fn distance_squared(&self, a: &BasisSet, b: &BasisSet) -> Result<Rational> {
        basis_rays(self.table, a)?;
        basis_rays(self.table, b)?;
        Ok(self.rational_of(self.scaled_sum(a, b)))
    }
}

/// Exact multiset of pairwise `D^2` over unordered pairs of distinct
/// positions in the input list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceSpectrum {
    pub basis_count: usize,
    pub pairs: BTreeMap<Rational, u64>,
}

impl DistanceSpectrum {
    pub fn pair_count(&self) -> u64 {
        self.pairs.values().sum()
    }

    pub fn multiplicity(&self, d2: &Rational) -> u64 {
        self.pairs.get(d2).copied().unwrap_or(0)
    }

    /// Rows of the distance table: one per distinct value in the upper
    /// triangle including the diagonal, so `0` always appears once there is
    /// at least one basis. Counts cover the same triangle.
    pub fn table_rows(&self) -> Vec<(Rational, u64)> {
        let mut rows = self.pairs.clone();
        if self.basis_count > 0 {
            *rows.entry(Rational::zero()).or_insert(0) += self.basis_count as u64;
        }
        rows.into_iter().collect()
    }

    /// Number of distinct distances in the distance table, diagonal included.
    pub fn distinct_values(&self) -> usize {
        self.table_rows().len()
    }

    /// Off-diagonal values by decreasing multiplicity, ties by value.
    pub fn by_multiplicity(&self) -> Vec<(Rational, u64)> {
        let mut v: Vec<(Rational, u64)> = self.pairs.iter().map(|(k, &c)| (k.clone(), c)).collect();
        v.sort_by(|x, y| y.1.cmp(&x.1).then_with(|| x.0.cmp(&y.0)));
        v
    }
}

#[derive(Serialize, Deserialize)]
struct SpectrumEntry {
    d: String,
    d2: String,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    basis_count: usize,
    pair_count: u64,
    distinct_values: usize,
    pairs: Vec<SpectrumEntry>,
}

impl Serialize for DistanceSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpectrumJson {
            basis_count: self.basis_count,
            pair_count: self.pair_count(),
            distinct_values: self.distinct_values(),
            pairs: self
                .pairs
                .iter()
                .map(|(k, &count)| SpectrumEntry {
                    d: sqrt_decimal(k, 10),
                    d2: k.to_string(),
                    count,
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Spectrum over all unordered pairs; uses the integer engine when the
/// table allows it and the term-by-term formula otherwise.
pub fn distance_spectrum(table: &RayTable, bases: &[BasisSet]) -> Result<DistanceSpectrum> {
    for b in bases {
        basis_rays(table, b)?;
    }
    let n = bases.len();
    let pairs = match DistanceEngine::new(table) {
        Some(engine) => {
            let sums: HashMap<u128, u64> = (0..n)
                .into_par_iter()
                .fold(HashMap::new, |mut acc, i| {
                    for j in i + 1..n {
                        *acc.entry(engine.scaled_sum(&bases[i], &bases[j])).or_insert(0) += 1;
                    }
                    acc
                })
                .reduce(HashMap::new, |mut a, b| {
                    for (k, v) in b {
                        *a.entry(k).or_insert(0) += v;
                    }
                    a
                });
            let mut out = BTreeMap::new();
            for (s, c) in sums {
                *out.entry(engine.rational_of(s)).or_insert(0) += c;
            }
            out
        }
        None => {
            let values: Vec<Rational> = (0..n)
                .into_par_iter()
                .flat_map_iter(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| hs_distance_squared(table, &bases[i], &bases[j]))
                .collect::<Result<_>>()?;
            let mut out = BTreeMap::new();
            for v in values {
                *out.entry(v).or_insert(0) += 1;
            }
            out
        }
    };
    Ok(DistanceSpectrum {
        basis_count: n,
        pairs,
    })
}

/// `sqrt(x)` rounded half-to-even at `places` decimals; `x >= 0`.
pub fn sqrt_decimal(x: &Rational, places: u32) -> String {
    assert!(!x.is_negative(), "square root of a negative value");
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let scale = BigUint::from(10u32).pow(2 * places);
    let y = num * &scale;
    // m = floor(sqrt(num * 10^(2p) / den))
    let mut m = (&y / den).sqrt();
    // compare sqrt(y/den) with m + 1/2, i.e. 4y with (2m+1)^2 den
    let lhs = &y * 4u32;
    let mid: BigUint = (&m * 2u32 + 1u32).pow(2) * den;
    if lhs > mid || (lhs == mid && (&m % 2u32) == BigUint::one()) {
        m += 1u32;
    }
    let digits = m.to_string();
    let p = places as usize;
    let padded = format!("{digits:0>width$}", width = p + 1);
    let (int, frac) = padded.split_at(padded.len() - p);
    if p == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

/// CSV with header `D,D2_num,D2_den,count`, one row per distinct distance
/// sorted by `D` (see [`DistanceSpectrum::table_rows`]).
pub fn write_histogram_csv<W: Write>(spectrum: &DistanceSpectrum, mut w: W) -> Result<()> {
    writeln!(w, "D,D2_num,D2_den,count")?;
    for (v, c) in spectrum.table_rows() {
        writeln!(w, "{},{},{},{}", sqrt_decimal(&v, 10), v.numer(), v.denom(), c)?;
    }
    Ok(())
}

/// Self-contained SVG bar chart, one bar per distinct distance placed at `D`
/// on a `[0, 1]` axis.
pub fn histogram_svg(spectrum: &DistanceSpectrum, title: &str) -> String {
    let (w, h, left, bottom, top) = (800.0, 400.0, 50.0, 40.0, 30.0);
    let plot_w = w - left - 20.0;
    let plot_h = h - bottom - top;
    let rows = spectrum.table_rows();
    let max = rows.iter().map(|r| r.1).max().unwrap_or(1).max(1) as f64;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        w / 2.0,
        escape(title)
    );
    let base_y = h - bottom;
    let _ = writeln!(
        s,
        r#"<line x1="{left}" y1="{base_y}" x2="{}" y2="{base_y}" stroke="black"/>"#,
        left + plot_w
    );
    for t in 0..=10 {
        let x = left + plot_w * t as f64 / 10.0;
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" font-family="sans-serif" font-size="10" text-anchor="middle">{:.1}</text>"#,
            base_y + 15.0,
            t as f64 / 10.0
        );
    }
    for (v, c) in &rows {
        let d = (v.numer().to_f64().unwrap_or(0.0) / v.denom().to_f64().unwrap_or(1.0)).sqrt();
        let x = left + plot_w * d;
        let bh = plot_h * *c as f64 / max;
        let _ = writeln!(
            s,
            r#"<rect x="{:.2}" y="{:.2}" width="2" height="{bh:.2}" fill="steelblue"><title>D={} D2={v} count={c}</title></rect>"#,
            x - 1.0,
            base_y - bh,
            sqrt_decimal(v, 10)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::PROOF_BASES;
    use crate::rays::state_ray_table;

    fn block(t: &RayTable, i: usize) -> BasisSet {
        let b = &t.blocks[i];
        BasisSet::new((b.first_id..=b.last_id).collect())
    }

    #[test]
    fn identical_bases_are_at_distance_zero() {
        let t = state_ray_table().unwrap();
        let b = block(&t, 0);
        assert!(hs_distance_squared(&t, &b, &b).unwrap().is_zero());
        let s = distance_spectrum(&t, &[b.clone(), b]).unwrap();
        assert_eq!(s.pairs.len(), 1);
        assert_eq!(s.multiplicity(&Rational::zero()), 1);
        assert_eq!(s.distinct_values(), 1);
    }

    #[test]
    fn unbiased_bases_are_at_distance_one() {
        let rays = [[1, 0], [0, 1], [1, 1], [1, -1]]
            .iter()
            .map(|e| Ray::canonical(e.to_vec()).unwrap())
            .collect();
        let t = RayTable::from_rays("q", rays);
        let (a, b) = (BasisSet::new(vec![1, 2]), BasisSet::new(vec![3, 4]));
        assert_eq!(hs_distance_squared(&t, &a, &b).unwrap(), Rational::one());
        let e = DistanceEngine::new(&t).unwrap();
        assert_eq!(e.distance_squared(&b, &a).unwrap(), Rational::one());
    }

    #[test]
    fn engine_matches_direct_formula() {
        let t = state_ray_table().unwrap();
        let e = DistanceEngine::new(&t).unwrap();
        let bases: Vec<BasisSet> = PROOF_BASES.iter().map(|b| BasisSet::new(b.to_vec())).collect();
        for a in &bases[..6] {
            for b in &bases {
                assert_eq!(e.distance_squared(a, b).unwrap(), hs_distance_squared(&t, a, b).unwrap());
            }
        }
    }

    #[test]
    fn rows_are_stochastic() {
        let t = state_ray_table().unwrap();
        let p = transition_matrix(&t, &block(&t, 0), &block(&t, 4)).unwrap();
        for row in &p {
            assert_eq!(row.iter().sum::<Rational>(), Rational::one());
        }
    }

    #[test]
    fn incomplete_basis_is_rejected() {
        let t = state_ray_table().unwrap();
        let short = BasisSet::new((1..=31).collect());
        assert!(matches!(
            hs_distance_squared(&t, &short, &block(&t, 0)),
            Err(Error::IncompleteBasis(_))
        ));
        let mixed = BasisSet::new((2..=33).collect());
        assert!(hs_distance_squared(&t, &mixed, &block(&t, 0)).is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(sqrt_decimal(&rational(29, 31), 4), "0.9672");
        assert_eq!(sqrt_decimal(&rational(43, 62), 4), "0.8328");
        assert_eq!(sqrt_decimal(&rational(1, 1), 10), "1.0000000000");
        assert_eq!(sqrt_decimal(&rational(0, 1), 3), "0.000");
        assert_eq!(sqrt_decimal(&rational(1, 4), 0), "0");
        assert_eq!(sqrt_decimal(&rational(9, 4), 0), "2");
        assert_eq!(sqrt_decimal(&rational(1, 16), 1), "0.2");
        assert_eq!(sqrt_decimal(&rational(9, 16), 1), "0.8");
    }

    #[test]
    fn empty_spectrum_csv_is_header_only() {
        let s = DistanceSpectrum {
            basis_count: 0,
            pairs: BTreeMap::new(),
        };
        let mut out = Vec::new();
        write_histogram_csv(&s, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "D,D2_num,D2_den,count\n");
    }
}
