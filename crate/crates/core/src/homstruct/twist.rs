use alloc::vec::Vec;

use crate::algebra::{Algebra, LinearMap};
use crate::exactlin::{kernel_of_echelon, Matrix, RowSpaceBuilder, Subspace, Vector};
use crate::scalar::Scalar;

/// The space of linear maps `α` with `(xy)α(z) = α(x)(yz)` for all `x, y, z`.
///
/// Maps are flattened row-major: entry `(r, c)`, the coefficient of `e_r` in `α(e_c)`,
/// sits at index `r * n + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistSpace {
    dim: usize,
    space: Subspace,
}

impl TwistSpace {
    /// Dimension of the twist space itself.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the underlying algebra.
    pub fn algebra_dim(&self) -> usize {
        self.dim
    }

    /// The space as a subspace of `F^(n²)`.
    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_maps(&self) -> Vec<LinearMap> {
        self.space.basis().iter().map(|v| Matrix::unflatten(self.dim, self.dim, v)).collect()
    }

    pub fn contains(&self, map: &LinearMap) -> bool {
        self.space.contains(&map.flatten())
    }

    /// The map with the given coordinates in the canonical basis.
    pub fn map_from(&self, coefficients: &[Scalar]) -> LinearMap {
        Matrix::unflatten(self.dim, self.dim, &self.space.combination(coefficients))
    }
}

/// Solves for every hom-associative twisting map of `a`.
///
/// Each basis triple `(i, j, k)` and output coordinate `r` contributes the row
/// `Σ_m α[m][k] ((e_i e_j) e_m)_r - Σ_m α[m][i] (e_m (e_j e_k))_r = 0`; rows are sparse
/// and deduplicated before elimination.
pub fn twist_space(a: &Algebra) -> TwistSpace {
    let n = a.dim();
    let field = a.field();
    let basis = a.basis_elements();
    let products: Vec<Vector> = (0..n * n).map(|ij| a.basis_product(ij / n, ij % n)).collect();
    // times_basis[ij][m] = (e_i e_j) e_m, basis_times[jk][m] = e_m (e_j e_k)
    let times_basis: Vec<Vec<Vector>> =
        products.iter().map(|p| basis.iter().map(|e| a.mul(p, e)).collect()).collect();
    let basis_times: Vec<Vec<Vector>> =
        products.iter().map(|p| basis.iter().map(|e| a.mul(e, p)).collect()).collect();
    let mut rb = RowSpaceBuilder::new(field, n * n);
    let mut row: Vec<(usize, Scalar)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let left = &times_basis[i * n + j];
            for k in 0..n {
                let right = &basis_times[j * n + k];
                for r in 0..n {
                    row.clear();
                    for m in 0..n {
                        let x = left[m].get(r);
                        if !x.is_zero() {
                            row.push((m * n + k, x.clone()));
                        }
                        let y = right[m].get(r);
                        if !y.is_zero() {
                            row.push((m * n + i, -y));
                        }
                    }
                    if row.is_empty() {
                        continue;
                    }
                    row.sort_by_key(|e| e.0);
                    merge_duplicates(&mut row);
                    if !row.is_empty() {
                        rb.push_sparse(&row);
                    }
                }
            }
        }
    }
    TwistSpace {
        dim: n,
        space: kernel_of_echelon(rb),
    }
}

fn merge_duplicates(row: &mut Vec<(usize, Scalar)>) {
    let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 = &last.1 + &v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    *row = out;
}
