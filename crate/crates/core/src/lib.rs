//! Exact-arithmetic kernels for simplicial, Hochschild and cyclic homology.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of its inputs: the combinatorics of the simplex and cyclic
//! categories, formula-defined simplicial and cyclic sets, chain complexes
//! and bicomplexes over `Q`, `F_p` and `Z`, Hochschild and de Rham objects of
//! finite-dimensional algebras, and the cyclic bicomplex together with the
//! periodicity maps `I`, `S`, `B`.
//!
//! IO, file formats and the command-line driver live in the `cychom` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod chains;
pub mod cyclic;
mod error;
pub mod hochschild;
pub mod linalg;
pub mod simplicial;

pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, ScalarDomain};
