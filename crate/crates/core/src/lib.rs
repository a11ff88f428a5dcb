//! Exact reconstruction and verification of five-qubit Bell-Kochen-Specker
//! proofs: real Pauli algebra, joint eigenrays, complete orthogonal bases,
//! non-colorability certificates, Hilbert-Schmidt distance spectra, binary
//! symplectic geometry and the symmetry of the 21-basis overlap graph.

pub mod bases;
pub mod bitset;
pub mod claims;
pub mod coloring;
pub mod config;
pub mod dimacs;
pub mod error;
pub mod geometry;
pub mod golden;
pub mod magic;
pub mod matrix;
pub mod metrics;
pub mod pauli;
pub mod rays;
pub mod search;
pub mod symmetry;

pub use bases::{BasisSet, OrthoGraph};
pub use error::{Error, Result};
pub use magic::{MagicReport, MagicSet};
pub use pauli::{CommutingSet, PauliOp};
pub use rays::{Ray, RayTable};
