//! Tilting and silting computations for graded one-dimensional hypersurface singularities.

pub mod arith;
pub mod linalg;
pub mod ring;
pub mod semigroup;
pub mod algebra;
pub mod gamma;
pub mod golden;
pub mod homalg;
pub mod quiver;
pub mod dg;
pub mod ainfty;
pub mod report;
