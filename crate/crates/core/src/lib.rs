//! Exact computations in the Hecke-Clifford algebra HC_n and the spin Hecke
//! algebra: normal forms, class polynomials, character tables, Schur
//! elements and a tensor-space oracle for cross-checking.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod hecke_clifford;
pub mod linalg;
pub mod parse;
pub mod relations;
pub mod report;
pub mod scalar;
pub mod spin_hecke;
pub mod symfunc;
pub mod tensor_oracle;
pub mod traces;
pub mod verify;

pub use combinatorics::{Composition, Partition, PartitionKind, Perm, ShiftedData};
pub use error::{Error, Result};
pub use hecke_clifford::{BasisTerm, Element, Generator};
pub use scalar::{Gauss, Ring, Scalar};
pub use traces::{ClassVector, Reducer};
pub use symfunc::SymPoly;
pub use characters::CharacterTable;
pub use report::Check;
pub use spin_hecke::SpinTables;
pub use tensor_oracle::{TVec, TensorSpace};
pub use verify::Suite;
