//! Chain complexes, homology, bicomplexes and the Eilenberg–Zilber maps.

mod awez;
mod bicomplex;
mod complex;
mod module;

pub use awez::{alexander_whitney, aw_ez_report, eilenberg_zilber, AwEzReport, TensorComplex, TensorModule};
pub use bicomplex::{total_complex, Bicomplex, Block, Position, TotalComplex, Variance};
pub use complex::{exactness_at, homology, induced_map, ChainComplex, ChainMap, Exactness, HomologyGroup, HomologyResult};
pub use module::{
    alternating_face_sum, chain_complex, check_module_identities, linearize, normalized, signed_cyclic, LinearizedSet,
    Normalization, Normalize, RelationReport, SimplicialModule,
};
