//! Building new algebras from old: Cayley–Dickson doubling, unitalization, Yau twists,
//! opposites, truncated polynomials, seeded random algebras and a catalog of small examples.

pub mod catalog;
mod cayley_dickson;
mod random;
mod unitalization;
mod yau;

pub use cayley_dickson::{cayley_dickson, cayley_dickson_tower, complexes, octonions, quaternions, sedenions};
pub use random::{random_algebra, random_invertible, GeneratorConfig, GENERATOR_ALGORITHM};
pub use unitalization::{ac_unitalized_by_eigenspaces, unitalize, Unitalization};
pub use yau::{yau_criterion, yau_twist, YauVerdict};

use crate::algebra::Algebra;
use crate::scalar::Field;

/// The algebra with product `x ∘ y = y · x`.
pub fn opposite(a: &Algebra) -> Algebra {
    a.opposite()
}

/// `t·F[t]/(t^(degree+1))` with basis `t, ..., t^degree`, or `F[t]/(t^(degree+1))` with
/// basis `1, t, ..., t^degree` when `with_constants` is set.
pub fn truncated_poly(field: Field, degree: usize, with_constants: bool) -> Algebra {
    let offset = usize::from(!with_constants);
    let dim = degree + 1 - offset;
    let mut entries = alloc::vec::Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let power = i + j + 2 * offset;
            if power <= degree {
                entries.push((i, j, power - offset, 1));
            }
        }
    }
    Algebra::from_i64_entries(field, dim, &entries)
}
