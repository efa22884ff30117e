//! Exact-arithmetic workbench for finite-dimensional Zinbiel algebras.
//!
//! Algebras are given by structure constants over the rationals or a prime
//! field. Every check is exhaustive over basis tuples and exact, and returns a
//! [`Report`] whose failing clauses carry replayable witnesses.

pub mod algebra;
pub mod bialgebra;
pub mod cli;
pub mod corpus;
pub mod double;
pub mod error;
pub mod format;
pub mod linalg;
pub mod matched_pair;
pub mod report;
pub mod representation;
pub mod rota_baxter;
pub mod sample;
pub mod scalar;
pub mod search;
pub mod tensor;
pub mod yang_baxter;

pub use algebra::{Algebra, Flavor};
pub use bialgebra::{Bialgebra, ManinTriple, QuadraticAlgebra};
pub use double::DoubleAlgebra;
pub use error::{Error, Result};
pub use linalg::{LinearMap, Matrix, Vector};
pub use matched_pair::{CommMatchedPair, MatchedPair};
pub use report::{Clause, Report, Witness};
pub use representation::{CommRepresentation, Representation};
pub use rota_baxter::{ConnesCommutative, QuadraticRB, RBOperator};
pub use scalar::{Field, Scalar};
pub use tensor::{BilinearForm, Slot, Tensor2, Tensor3};
pub use yang_baxter::{ActionData, Classification, RMatrix};
