//! Finite-dimensional algebras, the Hochschild module, Kähler forms, de Rham
//! and the HKR maps.

mod algebra;
mod forms;
mod hkr;
mod module;

pub use algebra::{FiniteAlgebra, ALGEBRA_PRESETS};
pub use forms::{derham, kaehler_one, omega_power, DeRham, DifferentialForms, PresentedModule};
pub use hkr::{hkr_epsilon, hkr_epsilon_chain, hkr_pi, hkr_report, HkrDegree};
pub use module::{hh, hh_vs_cyclic_bar, hochschild_complex, tensor_count, HochschildModule, PipelineReport, DEFAULT_BUDGET};
