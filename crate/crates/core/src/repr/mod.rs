//! Concrete representations: the 4x4 gamma model of complexified Cl(1,3),
//! the 2x2 Cl(3,0) matrix model of Cl(4,1), and the generator maps
//! between the three algebras.

pub mod gamma;
pub mod mat2;

pub use gamma::{
    cl30_to_cl41, cl30_vector_image, cl41_to_cl30, cl41_to_complex_cl13, complex_cl13_to_cl41,
    e_cap, e_cap_image, GammaRep, Mat4,
};
pub use mat2::{
    cl41_to_mat2, mat2_to_cl41, mat2_to_paravector, paravector_to_mat2, Mat2, ParavectorCoeffs,
};
