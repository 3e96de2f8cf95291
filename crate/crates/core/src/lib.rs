//! Exact PBW transition matrices and quantized-function-algebra intertwiners
//! for the rank-2 quantum groups of type A2, C2 and G2.
//!
//! Two independent pipelines compute the same matrices: [`pbw`] normal-orders
//! products of root vectors in `U_q^+`, while [`intertwiner`] solves for the
//! intertwiner between q-oscillator representations built in [`fock`].
//! [`verify`] compares them and checks the tetrahedron and 3D reflection
//! equations.

pub mod coeffs;
pub mod error;
pub mod fock;
pub mod intertwiner;
pub mod linalg;
pub mod pbw;
pub mod presets;
pub mod tuple;
pub mod verify;

pub use coeffs::{BigRat, LaurentPoly, RationalFunction};
pub use error::{Error, Result};
pub use presets::AlgebraId;
pub use tuple::Tuple;
