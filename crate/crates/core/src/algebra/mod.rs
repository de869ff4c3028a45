//! Generic Clifford algebra Cl(p,q) over exact Gaussian-rational or
//! complex floating scalars.

pub mod blade;
pub mod multivector;
pub mod scalar;

pub use blade::{BladeMask, Signature, CL13, CL30, CL41};
pub use multivector::Multivector;
pub use scalar::{Backend, Scalar};
