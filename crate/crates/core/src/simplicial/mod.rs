//! The categories Δ and ΔC, and simplicial and cyclic sets given by formulas.

mod bar;
mod bz;
mod circle;
mod cyclic_category;
mod delta;
mod free;
mod group;
mod quotient;
mod set;

pub use bar::{ClassifyingSpace, CyclicBar};
pub use bz::{bz_cyclic, bz_degeneracy, bz_face, circle_code_image, circle_to_bz, LazyBZ};
pub use circle::Circle;
pub use cyclic_category::{cyclic_normal_form, CyclicMorphism, Gen};
pub use delta::{compose, MonotoneMap};
pub use free::{adjunction_report, evaluation_map, unit_section, FreeCyclic};
pub use group::FiniteGroup;
pub use quotient::SimplexQuotient;
pub use set::{act, check_identities, CheckMode, Code, IdentityReport, SimplicialMap, SimplicialSet, Violation};

/// Factorization of a monotone map into canonical generator words.
pub fn factorize_epi_mono(f: &MonotoneMap) -> (alloc::vec::Vec<usize>, alloc::vec::Vec<usize>) {
    f.factorize()
}
