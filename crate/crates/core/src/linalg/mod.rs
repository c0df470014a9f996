//! Exact linear algebra over `Q`, `F_p` and `Z`.

mod echelon;
pub(crate) mod field;
mod matrix;
mod rational;
mod smith;

pub use echelon::{rank, rank_kernel_image, subspace_equal, ColumnSolver, SubspaceBasis};
pub use field::{is_prime, ScalarDomain};
pub use matrix::{Matrix, SparseVec};
pub use rational::Rational;
pub use smith::{smith_normal_form, SmithForm};
