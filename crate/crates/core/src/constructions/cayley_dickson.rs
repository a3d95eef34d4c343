use alloc::vec::Vec;

use crate::algebra::{Algebra, InvolutiveAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// One doubling step on `A ⊕ A`:
/// `(a, b)(c, d) = (ac + γ σ(d) b, d a + b σ(c))`, `σ'(a, b) = (σ(a), -b)`.
///
/// Basis vector `i < m` of the result is `(e_i, 0)` and `m + i` is `(0, e_i)`.
pub fn cayley_dickson(base: &InvolutiveAlgebra, gamma: &Scalar) -> Result<InvolutiveAlgebra> {
    let a = base.base();
    let sigma = base.conj();
    let field = a.field();
    gamma.ensure_same_field(&field.zero())?;
    let m = a.dim();
    let split = |v: &Vector| -> (Vector, Vector) {
        let e = v.entries();
        (
            Vector::new(field, e[..m].to_vec()).expect("same field"),
            Vector::new(field, e[m..].to_vec()).expect("same field"),
        )
    };
    let basis: Vec<Vector> = (0..2 * m).map(|i| Vector::unit(field, 2 * m, i)).collect();
    let doubled = Algebra::from_basis_products(field, 2 * m, |i, j| {
        let (x1, x2) = split(&basis[i]);
        let (y1, y2) = split(&basis[j]);
        let first = &a.mul(&x1, &y1) + &a.mul(&sigma.apply(&y2), &x2).scale(gamma);
        let second = &a.mul(&y2, &x1) + &a.mul(&x2, &sigma.apply(&y1));
        first.concat(&second)
    });
    let mut conj = Matrix::zeros(field, 2 * m, 2 * m);
    let minus_one = field.from_i64(-1);
    for r in 0..m {
        for c in 0..m {
            conj.set(r, c, sigma.get(r, c).clone());
        }
        conj.set(m + r, m + r, minus_one.clone());
    }
    InvolutiveAlgebra::new(doubled, conj)
}

/// `levels` doublings of the one-dimensional algebra `F` with trivial conjugation.
pub fn cayley_dickson_tower(field: Field, levels: usize, gammas: &[Scalar]) -> Result<InvolutiveAlgebra> {
    if gammas.len() != levels {
        return Err(Error::DimensionMismatch {
            expected: levels,
            found: gammas.len(),
        });
    }
    let ground = Algebra::from_i64_entries(field, 1, &[(0, 0, 0, 1)]);
    let mut current = InvolutiveAlgebra::new(ground, Matrix::identity(field, 1))?;
    for g in gammas {
        current = cayley_dickson(&current, g)?;
    }
    Ok(current)
}

fn standard(levels: usize) -> InvolutiveAlgebra {
    let q = Field::Rational;
    cayley_dickson_tower(q, levels, &alloc::vec![q.from_i64(-1); levels]).expect("standard tower")
}

/// The complex numbers over Q, basis `1, i`.
pub fn complexes() -> InvolutiveAlgebra {
    standard(1)
}

/// The quaternions over Q, basis `1, i, j, k` with `ij = k`.
pub fn quaternions() -> InvolutiveAlgebra {
    standard(2)
}

/// The octonions over Q.
pub fn octonions() -> InvolutiveAlgebra {
    standard(3)
}

/// The sedenions over Q.
pub fn sedenions() -> InvolutiveAlgebra {
    standard(4)
}
