//! Lie algebras over ℚ by structure constants, elements with coefficients in
//! any scalar ring, exact linear algebra and subspaces.

mod algebra;
mod element;
pub mod linalg;
mod subspace;

pub use algebra::{validate_jacobi, JacobiViolation, LieAlgebra};
pub(crate) use element::same_algebra;
pub use element::{latex_basis_name, LieElement};
pub use subspace::{generated_subalgebra, is_nilpotent_action, NilpotencyReport, Subspace};
