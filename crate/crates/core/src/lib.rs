//! Finite-dimensional cocommutative Hopf algebras over finite fields:
//! blocks, cohomology, support varieties, Hochschild cohomology and
//! flat maps from truncated polynomial algebras.

pub mod error;
pub mod field;
pub mod mat;
pub mod upoly;
pub mod algebra;
pub mod group;
pub mod hopf;
pub mod module;
pub mod meataxe;
pub mod structure;
pub mod blocks;
pub mod pims;
pub mod resolution;
pub mod hochschild;
pub mod mpoly;
pub mod cohomology;
pub mod varieties;
pub mod adjoint;

pub use error::{Error, Result};
pub use field::{Fe, Field, FieldSpec};
pub use hopf::HopfAlgebra;
pub use mat::Mat;
pub mod verify;
pub mod pipoints;
pub mod report;
pub mod input;
