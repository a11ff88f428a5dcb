//! The named operator configurations: the five-qubit magic configuration,
//! the five-set state configuration derived from it, and the two-qubit
//! Mermin square used as a small known-answer instance.

use crate::magic::MagicSet;
use crate::pauli::{CommutingSet, PauliOp};

fn op(s: &str) -> PauliOp {
    PauliOp::five(s, 1).expect("static operator string")
}

/// `A_i`, 1-based: XZXII, IXZXI, IIXZX, XIIXZ, ZXIIX.
pub fn a(i: usize) -> PauliOp {
    op(["XZXII", "IXZXI", "IIXZX", "XIIXZ", "ZXIIX"][i - 1])
}

/// Single-qubit `Z` on qubit `i` (1-based).
pub fn z(i: usize) -> PauliOp {
    single('Z', i)
}

/// Single-qubit `X` on qubit `i` (1-based).
pub fn x(i: usize) -> PauliOp {
    single('X', i)
}

fn single(c: char, i: usize) -> PauliOp {
    let s: String = (1..=5).map(|q| if q == i { c } else { 'I' }).collect();
    op(&s)
}

/// `ZZZZZ`.
pub fn z_all() -> PauliOp {
    op("ZZZZZ")
}

pub const STATE_LABELS: [&str; 5] = ["A", "B", "A'", "B'", "C"];

/// The five complete commuting sets A, B, A', B', C.
pub fn state_configuration() -> Vec<CommutingSet> {
    vec![
        CommutingSet::new("A", (1..=5).map(a).collect()),
        CommutingSet::new("B", (1..=5).map(z).collect()),
        CommutingSet::new("A'", vec![a(1), a(3), z(2), z(4), x(5)]),
        CommutingSet::new("B'", vec![a(2), a(4), z(3), z(5), x(2)]),
        CommutingSet::new("C", vec![a(5), z(1), x(2), z(4), a(3)]),
    ]
}

/// The magic configuration: each set lists its operators and the operator
/// their product is compared against.
pub fn magic_configuration() -> Vec<MagicSet> {
    vec![
        MagicSet::new("1", (1..=5).map(a).collect(), z_all()),
        MagicSet::new("2", (1..=5).map(z).collect(), z_all()),
        MagicSet::new("3", vec![a(1), a(3), z(2), z(4), x(5)], x(1)),
        MagicSet::new("4", vec![a(2), a(4), z(3), z(5), x(2)], x(1)),
        MagicSet::new("5", vec![a(5), z(1), x(2)], x(5)),
    ]
}

/// Rows then columns of the two-qubit Mermin square, each reduced to two
/// independent generators.
pub fn mermin_square_sets() -> Vec<CommutingSet> {
    let t = |s: &str| PauliOp::new(s, 1).expect("static operator string");
    vec![
        CommutingSet::new("row1", vec![t("XI"), t("IX")]),
        CommutingSet::new("row2", vec![t("IZ"), t("ZI")]),
        CommutingSet::new("row3", vec![t("XZ"), t("ZX")]),
        CommutingSet::new("col1", vec![t("XI"), t("IZ")]),
        CommutingSet::new("col2", vec![t("IX"), t("ZI")]),
        CommutingSet::new("col3", vec![t("XX"), t("ZZ")]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_sets_commute() {
        for set in state_configuration() {
            assert_eq!(set.ops.len(), 5);
            assert!(set.is_commuting(), "{}", set.label);
        }
    }

    #[test]
    fn all_ten_pairs_in_a_commute() {
        let mut pairs = 0;
        for i in 1..=5 {
            for j in i + 1..=5 {
                assert!(a(i).commutes_with(&a(j)));
                pairs += 1;
            }
        }
        assert_eq!(pairs, 10);
    }

    #[test]
    fn mermin_sets_commute() {
        for set in mermin_square_sets() {
            assert!(set.is_commuting());
        }
    }
}
