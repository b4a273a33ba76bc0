//! Orthogonal arrays over finite fields and mixed alphabets, exact verification
//! of their combinatorial properties, and the classical and quantum codes they carry.
//!
//! - [`gf`]: GF(q) tables and linear algebra.
//! - [`array`]: the array type; strength, distance, irredundancy, partitions.
//! - [`construct`]: linear, IC, moment-curve, repetition, Kronecker, replacement and fold constructions.
//! - [`codes`]: `[n, k, d]` parameters, duals and MDS / NMDS / m-MDS classification.
//! - [`quantum`]: mixed-alphabet Singleton bound, QECC certificates, NQMDS builder, uniform states.
//! - [`format`]: text formats for arrays, partitions and generator matrices.
//! - [`reproduce`]: regenerates the worked examples and the NQMDS table.

pub mod array;
pub mod cli;
pub mod codes;
pub mod construct;
pub mod error;
pub mod format;
pub mod gf;
pub mod quantum;
pub mod reproduce;

pub use array::{OrthogonalArray, OrthogonalPartition};
pub use codes::{CodeReport, Classification};
pub use construct::GeneratorColumns;
pub use error::{Error, Result};
pub use gf::{FieldMatrix, GaloisField};
pub use quantum::{BasisState, QuantumCertificate, Verdict};

/// Value of the `schema` field in every JSON report.
pub const SCHEMA: &str = "oa-codes/1";
