//! Exact computation of hom-associative structures on finite-dimensional algebras.
//!
//! Algebras are given by structure constants over Q or a prime field. The crate computes
//! twisting maps making an algebra hom-associative, the subspaces of elements whose
//! multiplication operators are such maps, and the relations between them.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod campaign;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod homstruct;
pub mod leibniz;
pub mod report;
pub mod scalar;
pub mod subspaces;

pub use algebra::{Algebra, Element, HomAlgebra, InvolutiveAlgebra, LinearMap};
pub use error::{Error, Result, Side};
pub use exactlin::{AffineSet, Matrix, Subspace, Vector};
pub use scalar::{Field, Scalar};
