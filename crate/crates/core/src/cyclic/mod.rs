//! Cyclic homology: the cyclic bicomplex, Connes' periodicity sequence and
//! windowed negative and periodic variants.

mod bicomplex;
mod connes;
mod window;

pub use bicomplex::{
    bprime_homotopy_check, column_window, connes_b_report, cyclic_bicomplex, hc, hc_with_columns, CyclicBicomplex, CyclicOperators,
};
pub use connes::{b_component, connes_maps, periodicity_maps, s_component, PeriodicityMaps, SbiMaps, SbiNode, SbiReport};
pub use window::{hc_window, window_extent, TowerDegree, TowerReport, WindowVariant};
