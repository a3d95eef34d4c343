//! Small named algebras and ways of combining them.

use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exactlin::{Matrix, Vector};
use crate::scalar::Field;

/// `F[ε]/(ε²)`, basis `1, ε`.
pub fn dual_numbers(field: Field) -> Algebra {
    Algebra::from_i64_entries(field, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

/// `F × F`, basis of the two idempotents.
pub fn split_pair(field: Field) -> Algebra {
    Algebra::from_i64_entries(field, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)])
}

/// The one-dimensional algebra `F`.
pub fn ground(field: Field) -> Algebra {
    Algebra::from_i64_entries(field, 1, &[(0, 0, 0, 1)])
}

/// `e_i · e_j = e_j`: every basis vector is a left unity, so `x·y = (Σ x_i) y`.
pub fn projection_algebra(field: Field, n: usize) -> Algebra {
    let entries: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, j, 1))).collect();
    Algebra::from_i64_entries(field, n, &entries)
}

/// Two-dimensional algebra with `e_0 · e_0 = e_1` and all other products zero.
pub fn nilpotent_square(field: Field) -> Algebra {
    Algebra::from_i64_entries(field, 2, &[(0, 0, 1, 1)])
}

/// Two-dimensional Leibniz algebra, basis `x, y`, with `[y, y] = x` as its only product.
pub fn leib2(field: Field) -> Algebra {
    Algebra::from_i64_entries(field, 2, &[(1, 1, 0, 1)])
}

/// Commutative algebra over `F_2` with `[a,b] = [b,a] = u` and `[u,b] = [b,u] = d` on the
/// basis `a, b, u, d`. It is Leibniz on both sides only because `2 = 0`.
pub fn char_two_leibniz() -> Algebra {
    let f2 = Field::Prime(2);
    Algebra::from_i64_entries(f2, 4, &[(0, 1, 2, 1), (1, 0, 2, 1), (2, 1, 3, 1), (1, 2, 3, 1)])
}

/// Full matrix algebra `M_n(F)`, basis `E_rc` at index `r * n + c`.
pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
    let mut entries = Vec::new();
    for r in 0..n {
        for c in 0..n {
            for d in 0..n {
                entries.push((r * n + c, c * n + d, r * n + d, 1));
            }
        }
    }
    Algebra::from_i64_entries(field, n * n, &entries)
}

/// First-row matrix units `E_11, ..., E_1n` of `M_n(F)`: associative with left unity `E_11`.
pub fn first_row_matrices(field: Field, n: usize) -> Algebra {
    // E_1i E_1j = δ_{i1} E_1j
    let entries: Vec<_> = (0..n).map(|j| (0, j, j, 1)).collect();
    Algebra::from_i64_entries(field, n, &entries)
}

/// `R^3` with the cross product.
pub fn cross_product(field: Field) -> Algebra {
    Algebra::from_i64_entries(
        field,
        3,
        &[(0, 1, 2, 1), (1, 0, 2, -1), (1, 2, 0, 1), (2, 1, 0, -1), (2, 0, 1, 1), (0, 2, 1, -1)],
    )
}

/// `sl_2` in the basis `e, f, h`.
pub fn sl2(field: Field) -> Algebra {
    Algebra::from_i64_entries(
        field,
        3,
        &[(0, 1, 2, 1), (1, 0, 2, -1), (2, 0, 0, 2), (0, 2, 0, -2), (2, 1, 1, -2), (1, 2, 1, 2)],
    )
}

/// Heisenberg Lie algebra `[x, y] = z`.
pub fn heisenberg(field: Field) -> Algebra {
    Algebra::from_i64_entries(field, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// `A × B` with componentwise product; `A` occupies the first coordinates.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Algebra {
    let (m, n) = (a.dim(), b.dim());
    let mut entries = Vec::new();
    for (i, j, k, c) in a.nonzero_entries() {
        entries.push((i, j, k, c.clone()));
    }
    for (i, j, k, c) in b.nonzero_entries() {
        entries.push((m + i, m + j, m + k, c.clone()));
    }
    Algebra::from_entries(a.field(), m + n, entries).expect("disjoint blocks")
}

/// `A ⊗ B`, basis `e_i ⊗ f_j` at index `i * dim(B) + j`.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Algebra {
    let n = b.dim();
    let mut acc: alloc::collections::BTreeMap<(usize, usize, usize), crate::Scalar> = Default::default();
    for (i1, j1, k1, c1) in a.nonzero_entries() {
        for (i2, j2, k2, c2) in b.nonzero_entries() {
            let key = (i1 * n + i2, j1 * n + j2, k1 * n + k2);
            let v = c1 * c2;
            let e = acc.entry(key).or_insert_with(|| a.field().zero());
            *e = &*e + &v;
        }
    }
    Algebra::from_entries(a.field(), a.dim() * n, acc.into_iter().map(|((i, j, k), c)| (i, j, k, c)))
        .expect("distinct keys")
}

/// `g ⊕ V` with `[(x, u), (y, v)] = ([x, y], ρ(x) v)` where `ρ(x) = Σ x_i rho[i]`.
///
/// When `g` is a left Leibniz algebra and `ρ` a representation, the result is left Leibniz.
pub fn hemisemidirect(g: &Algebra, rho: &[Matrix]) -> Result<Algebra> {
    let m = g.dim();
    assert_eq!(rho.len(), m, "one operator per basis vector");
    let n = rho.first().map_or(0, Matrix::rows);
    let field = g.field();
    let dim = m + n;
    Ok(Algebra::from_basis_products(field, dim, |i, j| {
        let mut v = Vector::zeros(field, dim);
        if i < m && j < m {
            for (k, c) in g.basis_product_terms(i, j) {
                v.set(*k, c.clone());
            }
        } else if i < m && j >= m {
            let col = rho[i].column(j - m);
            for (k, c) in col.entries().iter().enumerate() {
                v.set(m + k, c.clone());
            }
        }
        v
    }))
}

/// Two-step nilpotent algebra on `V ⊕ W`: products of `V` land in `W`, everything else is zero.
/// Such algebras satisfy every identity of degree three, Leibniz identities included.
pub fn two_step_nilpotent(field: Field, v_dim: usize, products: &[(usize, usize, Vector)]) -> Algebra {
    let w_dim = products.first().map_or(0, |p| p.2.len());
    let dim = v_dim + w_dim;
    Algebra::from_basis_products(field, dim, |i, j| {
        let mut out = Vector::zeros(field, dim);
        if let Some((_, _, w)) = products.iter().find(|p| p.0 == i && p.1 == j) {
            for (k, c) in w.entries().iter().enumerate() {
                out.set(v_dim + k, c.clone());
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspaces::{unity, UnitySide};

    const Q: Field = Field::Rational;

    #[test]
    fn named_algebras_have_expected_shape() {
        assert!(matrix_algebra(Q, 2).is_associative());
        assert!(unity(&matrix_algebra(Q, 2), UnitySide::TwoSided).is_some());
        let p = projection_algebra(Q, 3);
        assert!(p.is_associative());
        assert!(unity(&p, UnitySide::Left).is_some());
        assert!(unity(&p, UnitySide::Right).is_none());
        let r = first_row_matrices(Q, 3);
        assert!(r.is_associative());
        assert_eq!(unity(&r, UnitySide::Left), Some(Vector::from_i64(Q, &[1, 0, 0])));
        assert!(cross_product(Q).is_anticommutative());
        assert!(sl2(Q).is_anticommutative());
    }

    #[test]
    fn tensor_with_dual_numbers() {
        let t = tensor_product(&projection_algebra(Q, 2), &dual_numbers(Q));
        assert_eq!(t.dim(), 4);
        assert!(t.is_associative());
        assert!(unity(&t, UnitySide::Left).is_some());
    }

    #[test]
    fn direct_product_keeps_blocks() {
        let d = direct_product(&ground(Q), &dual_numbers(Q));
        assert_eq!(d.dim(), 3);
        assert_eq!(unity(&d, UnitySide::TwoSided), Some(Vector::from_i64(Q, &[1, 1, 0])));
    }
}
