//! The real N-qubit Pauli group.
//!
//! An operator is stored as a pair of bit vectors plus a sign: the factor on
//! qubit `i` is `X^x_i Z^z_i`, so `(1, 1)` gives the real `Y = XZ =
//! [[0, -1], [1, 0]]`. Qubit 1 is the most significant bit of both vectors
//! and the leftmost tensor factor, so basis index `b` has qubit 1 in its top
//! bit.
//!
//! Every element of this group is real: products only ever pick up a `-1`,
//! never an imaginary phase.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

pub const MAX_QUBITS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    I,
    X,
    Y,
    Z,
}

impl Factor {
    fn from_bits(x: bool, z: bool) -> Factor {
        match (x, z) {
            (false, false) => Factor::I,
            (true, false) => Factor::X,
            (false, true) => Factor::Z,
            (true, true) => Factor::Y,
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            Factor::I => (false, false),
            Factor::X => (true, false),
            Factor::Z => (false, true),
            Factor::Y => (true, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Factor::I => 'I',
            Factor::X => 'X',
            Factor::Y => 'Y',
            Factor::Z => 'Z',
        }
    }

    pub fn matrix(self) -> IntMatrix {
        match self {
            Factor::I => IntMatrix::identity(2),
            Factor::X => IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]),
            Factor::Y => IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]),
            Factor::Z => IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]),
        }
    }
}

/// A signed element of the real Pauli group on `qubits` qubits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOp {
    qubits: u8,
    x: u8,
    z: u8,
    negative: bool,
}

impl PauliOp {
    /// Parses a string such as `"XZXII"` and attaches `sign` (which must be ±1).
    pub fn new(word: &str, sign: i8) -> Result<PauliOp> {
        let chars: Vec<char> = word.chars().collect();
        if chars.is_empty() || chars.len() > MAX_QUBITS {
            return Err(Error::InvalidPauliLength {
                expected: 5,
                found: chars.len(),
            });
        }
        let n = chars.len();
        let (mut x, mut z) = (0u8, 0u8);
        for (pos, &c) in chars.iter().enumerate() {
            let f = match c {
                'I' => Factor::I,
                'X' => Factor::X,
                'Y' => Factor::Y,
                'Z' => Factor::Z,
                other => {
                    return Err(Error::InvalidPauliChar {
                        position: pos,
                        found: other,
                    })
                }
            };
            let (xb, zb) = f.bits();
            let bit = 1u8 << (n - 1 - pos);
            if xb {
                x |= bit;
            }
            if zb {
                z |= bit;
            }
        }
        Ok(PauliOp {
            qubits: n as u8,
            x,
            z,
            negative: sign < 0,
        })
    }

    /// Five-qubit constructor: rejects any length other than five.
    pub fn five(word: &str, sign: i8) -> Result<PauliOp> {
        let len = word.chars().count();
        if len != 5 {
            return Err(Error::InvalidPauliLength {
                expected: 5,
                found: len,
            });
        }
        PauliOp::new(word, sign)
    }

    pub fn from_bits(qubits: usize, x: u8, z: u8, sign: i8) -> PauliOp {
        assert!((1..=MAX_QUBITS).contains(&qubits));
        let mask = Self::mask_for(qubits);
        PauliOp {
            qubits: qubits as u8,
            x: x & mask,
            z: z & mask,
            negative: sign < 0,
        }
    }

    pub fn identity(qubits: usize) -> PauliOp {
        PauliOp::from_bits(qubits, 0, 0, 1)
    }

    fn mask_for(qubits: usize) -> u8 {
        if qubits == 8 {
            0xff
        } else {
            (1u8 << qubits) - 1
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits as usize
    }

    pub fn dim(&self) -> usize {
        1 << self.qubits
    }

    pub fn x_bits(&self) -> u8 {
        self.x
    }

    pub fn z_bits(&self) -> u8 {
        self.z
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Factor on qubit `i`, counted from 0 at the left.
    pub fn factor(&self, i: usize) -> Factor {
        let bit = 1u8 << (self.qubits as usize - 1 - i);
        Factor::from_bits(self.x & bit != 0, self.z & bit != 0)
    }

    pub fn negate(&self) -> PauliOp {
        PauliOp {
            negative: !self.negative,
            ..*self
        }
    }

    pub fn with_sign(&self, sign: i8) -> PauliOp {
        PauliOp {
            negative: sign < 0,
            ..*self
        }
    }

    /// The operator with its sign dropped.
    pub fn unsigned(&self) -> PauliOp {
        self.with_sign(1)
    }

    /// The sign-free tensor string, e.g. `XYYXI`.
    pub fn label(&self) -> String {
        (0..self.qubits()).map(|i| self.factor(i).to_char()).collect()
    }

    /// Number of `Y` factors.
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// Symmetric iff the number of `Y` factors is even.
    pub fn is_symmetric(&self) -> bool {
        self.y_count().is_multiple_of(2)
    }

    /// Group product `self · rhs`.
    ///
    /// The sign is accumulated qubit by qubit: `(X^a Z^b)(X^c Z^d) =
    /// (-1)^(b c) X^(a+c) Z^(b+d)` on each factor.
    pub fn mul(&self, rhs: &PauliOp) -> Result<PauliOp> {
        if self.qubits != rhs.qubits {
            return Err(Error::QubitMismatch(self.qubits(), rhs.qubits()));
        }
        let mut negative = self.negative ^ rhs.negative;
        for i in 0..self.qubits() {
            let bit = 1u8 << i;
            let left_z = self.z & bit != 0;
            let right_x = rhs.x & bit != 0;
            if left_z && right_x {
                negative = !negative;
            }
        }
        Ok(PauliOp {
            qubits: self.qubits,
            x: self.x ^ rhs.x,
            z: self.z ^ rhs.z,
            negative,
        })
    }

    /// Symplectic commutation test.
    pub fn commutes_with(&self, rhs: &PauliOp) -> bool {
        ((self.x & rhs.z) ^ (self.z & rhs.x)).count_ones().is_multiple_of(2)
    }

    /// Kronecker-product realization, scaled by the sign.
    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::identity(1);
        for i in 0..self.qubits() {
            m = m.kron(&self.factor(i).matrix());
        }
        m.scale(self.sign() as i64)
    }

    /// Applies the operator to a vector without forming the matrix:
    /// `X^x Z^z e_c = (-1)^(z·c) e_(c xor x)`.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.dim());
        let mut out = vec![0; v.len()];
        let (x, z) = (self.x as usize, self.z as usize);
        for (c, &val) in v.iter().enumerate() {
            let parity = (z & c).count_ones() % 2 == 1;
            let s = if parity ^ self.negative { -val } else { val };
            out[c ^ x] = s;
        }
        out
    }
}

/// Product of a non-empty sequence, left to right.
pub fn product<'a>(ops: impl IntoIterator<Item = &'a PauliOp>) -> Result<Option<PauliOp>> {
    let mut acc: Option<PauliOp> = None;
    for op in ops {
        acc = Some(match acc {
            None => *op,
            Some(a) => a.mul(op)?,
        });
    }
    Ok(acc)
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.label())
    }
}

impl FromStr for PauliOp {
    type Err = Error;

    /// Accepts an optional leading `+` or `-`.
    fn from_str(s: &str) -> Result<PauliOp> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('-') {
            PauliOp::new(rest, -1)
        } else {
            PauliOp::new(s.strip_prefix('+').unwrap_or(s), 1)
        }
    }
}

impl Serialize for PauliOp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PauliOp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A labelled list of pairwise-commuting operators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutingSet {
    pub label: String,
    pub ops: Vec<PauliOp>,
}

impl CommutingSet {
    pub fn new(label: impl Into<String>, ops: Vec<PauliOp>) -> Self {
        CommutingSet {
            label: label.into(),
            ops,
        }
    }

    pub fn qubits(&self) -> usize {
        self.ops.first().map_or(0, |o| o.qubits())
    }

    pub fn is_commuting(&self) -> bool {
        self.ops
            .iter()
            .enumerate()
            .all(|(i, a)| self.ops[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Product of all operators in listed order.
    pub fn product(&self) -> Result<PauliOp> {
        Ok(product(&self.ops)?.unwrap_or_else(|| PauliOp::identity(self.qubits().max(1))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOp {
        s.parse().unwrap()
    }

    #[test]
    fn parse_bits_match_reference_operators() {
        let a1 = PauliOp::five("XZXII", 1).unwrap();
        assert_eq!((a1.x_bits(), a1.z_bits()), (0b10100, 0b01000));
        let a5 = PauliOp::five("ZXIIX", 1).unwrap();
        assert_eq!((a5.x_bits(), a5.z_bits()), (0b01001, 0b10000));
        let id = PauliOp::five("IIIII", 1).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.to_matrix(), IntMatrix::identity(32));
    }

    #[test]
    fn parse_errors_report_position() {
        match PauliOp::five("XZQII", 1) {
            Err(Error::InvalidPauliChar { position, found }) => {
                assert_eq!(position, 2);
                assert_eq!(found, 'Q');
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            PauliOp::five("XZX", 1),
            Err(Error::InvalidPauliLength { found: 3, .. })
        ));
    }

    #[test]
    fn display_round_trip() {
        for s in ["XYYXI", "-ZZZZZ", "IIIIX"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("+XZ").to_string(), "XZ");
    }

    #[test]
    fn products() {
        let a1 = p("XZXII");
        assert_eq!(a1.mul(&a1).unwrap(), p("IIIII"));
        assert_eq!(p("ZIIII").mul(&p("IZIII")).unwrap(), p("ZZIII"));
        let a12 = a1.mul(&p("IXZXI")).unwrap();
        assert_eq!(a12.label(), "XYYXI");
        // sign from the 32x32 product
        let oracle = &a1.to_matrix() * &p("IXZXI").to_matrix();
        assert_eq!(a12.to_matrix(), oracle);
        assert_eq!(a12.sign(), -1);
    }

    #[test]
    fn commutation() {
        assert!(p("ZIIII").commutes_with(&p("IZIII")));
        assert!(!p("XIIII").commutes_with(&p("ZIIII")));
        assert!(!p("XZXII").commutes_with(&p("ZIIII")));
        assert!(p("XZXII").commutes_with(&p("IIXZX")));
    }

    #[test]
    fn z1_matrix_is_block_diagonal() {
        let m = p("ZIIII").to_matrix();
        for i in 0..32 {
            let want = if i < 16 { 1 } else { -1 };
            assert_eq!(m.get(i, i), want);
        }
        let mut off = m.clone();
        for i in 0..32 {
            off.set(i, i, 0);
        }
        assert!(off.is_zero());
    }

    #[test]
    fn y_is_antisymmetric_and_traceless() {
        let y = p("YIIII");
        let m = y.to_matrix();
        assert_eq!(m.transpose(), m.scale(-1));
        assert_eq!(m.trace(), 0);
        assert!(!y.is_symmetric());
        assert!(p("YYIII").is_symmetric());
    }

    #[test]
    fn apply_agrees_with_matrix() {
        let op = p("-YZXIY");
        let m = op.to_matrix();
        let v: Vec<i64> = (0..32).map(|i| (i as i64 * 7) % 5 - 2).collect();
        assert_eq!(op.apply(&v), m.mul_vec(&v));
    }

    #[test]
    fn mismatched_qubits_rejected() {
        assert!(matches!(
            p("XZ").mul(&p("XZI")),
            Err(Error::QubitMismatch(2, 3))
        ));
    }
}
