//! Exact-arithmetic Clifford algebra engine.
//!
//! The crate implements spacetime conformal maps in the paravector model of
//! Cl(4,1), twistors as algebraic spinors of the complexified spacetime
//! algebra, and pure-spinor flagpole/orbit machinery over Fock spinor
//! spaces, together with verification suites that check every identity in
//! exact Gaussian-rational arithmetic.
//!
//! Layout:
//! - [`algebra`] — generic Cl(p,q) multivectors over exact or float scalars
//! - [`repr`] — the fixed 4x4 gamma-matrix model, the 2x2 matrix model
//!   over Cl(3,0), and the algebra maps between Cl(4,1), the complexified
//!   spacetime algebra and Cl(3,0)
//! - [`conformal`] — compactified paravector points, the Klein quadric,
//!   and Moebius transformations acting through the twisted adjoint
//! - [`generators`] — the conformal Lie algebra generators and their
//!   commutation table
//! - [`twistor`] — reference twistors, incidence products, flagpoles
//! - [`purespinor`] — Fock spinors, purity, charge conjugation, flag
//!   2-forms and coset orbit dimensions
//! - [`verify`] — seeded verification suites producing structured reports

// index-style loops are the clearer idiom in the dense matrix kernels
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod conformal;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod par;
pub mod purespinor;
pub mod repr;
pub mod twistor;
pub mod verify;

pub use algebra::{Backend, BladeMask, Multivector, Scalar, Signature, CL13, CL30, CL41};
pub use error::Error;
