//! Exact computations with finite-dimensional non-associative algebras.
//!
//! Algebras are given by structure constants over ℚ or a prime field. The
//! crate checks the associative, Lie, Jordan and UJLA identity systems,
//! builds commutator / circle / deformed products, constructs and verifies
//! Yang–Baxter operators on `V⊗V`, builds the two uniform derivation
//! formulas, and classifies small UJLA structures over 𝔽p by exhaustive
//! search.

pub mod algebra;
pub mod axioms;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod derivations;
pub mod error;
pub mod format;
pub mod functors;
pub mod identity;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod yang_baxter;

pub use algebra::{Algebra, LinearMap, StructureTensor};
pub use error::{Error, Result};
pub use identity::{AxiomReport, IdentitySpec, Semantics, Verdict, Witness};
pub use linalg::{Matrix, Vector};
pub use scalar::{FieldSpec, Scalar};
