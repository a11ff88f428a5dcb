//! Parity check for operator (magic) configurations.
//!
//! A configuration is contradictory when every operator occurs in an even
//! number of sets while the product of the set signs is `-1`: multiplying
//! the eigenvalue constraints of all sets gives `+1` on one side and `-1`
//! on the other.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pauli::{product, PauliOp};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicSet {
    pub label: String,
    pub ops: Vec<PauliOp>,
    /// The operator written after the semicolon.
    pub target: PauliOp,
}

impl MagicSet {
    pub fn new(label: impl Into<String>, ops: Vec<PauliOp>, target: PauliOp) -> Self {
        MagicSet {
            label: label.into(),
            ops,
            target,
        }
    }

    /// Product of the operators preceding the semicolon.
    pub fn product(&self) -> Result<PauliOp> {
        Ok(product(&self.ops)?.unwrap_or_else(|| PauliOp::identity(self.target.qubits())))
    }

    /// `s` such that `product = s · target`, or `None` if they differ beyond a sign.
    pub fn sign(&self) -> Result<Option<i8>> {
        let prod = self.product()?;
        if prod.unsigned() != self.target.unsigned() {
            return Ok(None);
        }
        Ok(Some(prod.sign() * self.target.sign()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSign {
    pub label: String,
    pub product: PauliOp,
    pub target: PauliOp,
    /// `None` when the product is not `±target`.
    pub sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagicReport {
    pub distinct_operators: usize,
    /// Occurrences of each operator, sign dropped, across all sets (targets included).
    pub occurrences: BTreeMap<String, usize>,
    pub each_occurs_twice: bool,
    pub all_even: bool,
    pub sets: Vec<SetSign>,
    /// Product of set signs; `None` if some set has no consistent sign.
    pub sign_product: Option<i8>,
    pub parity_contradiction: bool,
}

pub fn verify_magic(config: &[MagicSet]) -> Result<MagicReport> {
    let mut occurrences: BTreeMap<String, usize> = BTreeMap::new();
    let mut sets = Vec::with_capacity(config.len());
    for set in config {
        for op in set.ops.iter().chain(std::iter::once(&set.target)) {
            *occurrences.entry(op.label()).or_default() += 1;
        }
        sets.push(SetSign {
            label: set.label.clone(),
            product: set.product()?,
            target: set.target,
            sign: set.sign()?,
        });
    }
    let sign_product = sets
        .iter()
        .try_fold(1i8, |acc, s| s.sign.map(|v| acc * v));
    let each_occurs_twice = occurrences.values().all(|&c| c == 2);
    let all_even = occurrences.values().all(|&c| c % 2 == 0);
    Ok(MagicReport {
        distinct_operators: occurrences.len(),
        each_occurs_twice,
        all_even,
        parity_contradiction: all_even && sign_product == Some(-1),
        occurrences,
        sets,
        sign_product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{a, magic_configuration, x, z, z_all};

    #[test]
    fn set_products() {
        let cfg = magic_configuration();
        assert_eq!(cfg[0].product().unwrap(), z_all().negate());
        assert_eq!(cfg[1].product().unwrap(), z_all());
        assert_eq!(cfg[4].product().unwrap(), x(5));
    }

    #[test]
    fn magic_configuration_is_contradictory() {
        let report = verify_magic(&magic_configuration()).unwrap();
        assert_eq!(report.distinct_operators, 14);
        assert!(report.each_occurs_twice);
        assert_eq!(report.sign_product, Some(-1));
        assert!(report.parity_contradiction);
    }

    #[test]
    fn flipping_first_sign_removes_contradiction() {
        let mut cfg = magic_configuration();
        cfg[0].target = z_all().negate();
        let report = verify_magic(&cfg).unwrap();
        assert_eq!(report.sets[0].sign, Some(1));
        assert_eq!(report.sign_product, Some(1));
        assert!(!report.parity_contradiction);
    }

    #[test]
    fn single_set_has_odd_occurrences() {
        let cfg = vec![MagicSet::new("2", (1..=5).map(z).collect(), z_all())];
        let report = verify_magic(&cfg).unwrap();
        assert!(!report.all_even);
        assert!(!report.parity_contradiction);
    }

    #[test]
    fn mismatched_target_has_no_sign() {
        let cfg = vec![MagicSet::new("bad", vec![a(1), a(2)], x(1))];
        let report = verify_magic(&cfg).unwrap();
        assert_eq!(report.sets[0].sign, None);
        assert_eq!(report.sign_product, None);
    }
}
