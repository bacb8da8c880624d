//! Exact scalars and dense linear algebra on tensor-shaped spaces.

mod field;
mod linmap;
mod matrix;
mod shape;
mod solve;
mod subspace;

pub use field::{Field, FieldSpec, Scalar, MAX_PRIME};
pub use linmap::{chain, id, tensor, unit_vector, LinMap};
pub use matrix::{Echelon, Matrix};
pub use shape::TensorShape;
pub use solve::{kernel_image, probe, solve_affine, AffineSolutionSet, LinearSystem};
pub use subspace::{Quotient, Subspace};
