//! Exact linear algebra over Q and prime fields: row reduction, kernels, affine
//! solution sets and canonical subspaces.

mod echelon;
mod matrix;
mod subspace;
mod vector;

use alloc::vec::Vec;

pub use echelon::RowSpaceBuilder;
pub use matrix::Matrix;
pub use subspace::{AffineSet, Subspace};
pub use vector::Vector;

use crate::error::Result;
use crate::scalar::Scalar;

/// Reduced row echelon form (same shape as the input, zero rows last) and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut b = RowSpaceBuilder::new(m.field(), m.cols());
    for r in 0..m.rows() {
        b.push_dense(m.row_slice(r));
    }
    let (nonzero, pivots) = b.finish();
    let padding = Matrix::zeros(m.field(), m.rows() - nonzero.rows(), m.cols());
    (nonzero.stack(&padding), pivots)
}

pub fn rank(m: &Matrix) -> usize {
    let mut b = RowSpaceBuilder::new(m.field(), m.cols());
    for r in 0..m.rows() {
        b.push_dense(m.row_slice(r));
    }
    b.rank()
}

/// `{ v : m v = 0 }`.
pub fn kernel(m: &Matrix) -> Subspace {
    let mut b = RowSpaceBuilder::new(m.field(), m.cols());
    for r in 0..m.rows() {
        b.push_dense(m.row_slice(r));
    }
    kernel_of_echelon(b)
}

pub(crate) fn kernel_of_echelon(b: RowSpaceBuilder) -> Subspace {
    let field = b.field();
    let n = b.cols();
    let (red, pivots) = b.finish();
    let mut is_pivot = alloc::vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = RowSpaceBuilder::new(field, n);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut entries = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            let x = red.get(r, free);
            if !x.is_zero() {
                entries.push((p, -x));
            }
        }
        entries.push((free, field.one()));
        entries.sort_by_key(|e| e.0);
        out.push_sparse(&entries);
    }
    Subspace::from_builder(out)
}

/// Solution set of `m x = b`.
pub fn solve_affine(m: &Matrix, rhs: &Vector) -> Result<AffineSet> {
    rhs.check_compatible(m.field(), m.rows())?;
    let n = m.cols();
    let mut b = RowSpaceBuilder::new(m.field(), n + 1);
    let mut row = Vec::with_capacity(n + 1);
    for r in 0..m.rows() {
        row.clear();
        row.extend_from_slice(m.row_slice(r));
        row.push(rhs.get(r).clone());
        b.push_dense(&row);
    }
    Ok(affine_from_augmented(b))
}

/// Solution set of a system accumulated as augmented rows `[coefficients | rhs]`.
pub(crate) fn affine_from_augmented(b: RowSpaceBuilder) -> AffineSet {
    let field = b.field();
    let n = b.cols() - 1;
    let (red, pivots) = b.finish();
    if pivots.last() == Some(&n) {
        return AffineSet::Empty;
    }
    let mut particular = Vector::zeros(field, n);
    for (r, &p) in pivots.iter().enumerate() {
        particular.set(p, red.get(r, n).clone());
    }
    let mut homogeneous = RowSpaceBuilder::new(field, n);
    for r in 0..red.rows() {
        homogeneous.push_dense(&red.row_slice(r)[..n]);
    }
    AffineSet::NonEmpty {
        particular,
        direction: kernel_of_echelon(homogeneous),
    }
}

/// `{ v : m v = lambda v }`.
pub fn eigenspace(m: &Matrix, lambda: &Scalar) -> Result<Subspace> {
    if !m.is_square() {
        return Err(crate::Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    lambda.ensure_same_field(&m.field().zero())?;
    let shifted = m.sub(&Matrix::identity(m.field(), m.rows()).scale(lambda));
    Ok(kernel(&shifted))
}

/// Homogeneous linear conditions on an unknown vector of fixed length.
///
/// Each condition is given by the images of the unknown's basis vectors under a linear
/// map; the solution space is the common kernel.
pub(crate) struct LinearConditions {
    builder: RowSpaceBuilder,
    unknowns: usize,
    scratch: Vec<(usize, Scalar)>,
}

impl LinearConditions {
    pub(crate) fn new(field: crate::Field, unknowns: usize) -> Self {
        LinearConditions {
            builder: RowSpaceBuilder::new(field, unknowns),
            unknowns,
            scratch: Vec::new(),
        }
    }

    /// Requires `sum_m u_m * images[m] = 0`.
    pub(crate) fn require_zero(&mut self, images: &[Vector]) {
        debug_assert_eq!(images.len(), self.unknowns);
        let Some(len) = images.first().map(Vector::len) else { return };
        for r in 0..len {
            self.scratch.clear();
            for (m, img) in images.iter().enumerate() {
                let x = img.get(r);
                if !x.is_zero() {
                    self.scratch.push((m, x.clone()));
                }
            }
            if !self.scratch.is_empty() {
                self.builder.push_sparse(&self.scratch);
            }
        }
    }

    pub(crate) fn solve(self) -> Subspace {
        kernel_of_echelon(self.builder)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_of_rank_one() {
        let m = Matrix::from_i64_rows(Q, &[&[2, 4], &[1, 2]]);
        let (r, p) = rref(&m);
        assert_eq!(r, Matrix::from_i64_rows(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, alloc::vec![0]);
    }

    #[test]
    fn rref_of_zero() {
        let m = Matrix::zeros(Q, 2, 3);
        let (r, p) = rref(&m);
        assert_eq!(r, m);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 1]]);
        let k = kernel(&m);
        assert_eq!(k, Subspace::span(Q, 2, &[Vector::from_i64(Q, &[-1, 1])]).unwrap());
    }

    #[test]
    fn inconsistent_system_is_empty() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 0], &[1, 0]]);
        let b = Vector::from_i64(Q, &[1, 2]);
        assert_eq!(solve_affine(&m, &b).unwrap(), AffineSet::Empty);
    }

    #[test]
    fn affine_particular_has_zero_free_variables() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 1, 0]]);
        let b = Vector::from_i64(Q, &[3]);
        match solve_affine(&m, &b).unwrap() {
            AffineSet::NonEmpty { particular, direction } => {
                assert_eq!(particular, Vector::from_i64(Q, &[3, 0, 0]));
                assert_eq!(direction.dim(), 2);
            }
            AffineSet::Empty => panic!("expected solutions"),
        }
    }

    #[test]
    fn rational_entries_are_exact() {
        let m = Matrix::from_rows(
            Q,
            alloc::vec![
                alloc::vec![Q.parse_scalar("1/3").unwrap(), Q.parse_scalar("2/5").unwrap()],
                alloc::vec![Q.parse_scalar("1/2").unwrap(), Q.parse_scalar("3/5").unwrap()],
            ],
        )
        .unwrap();
        let (r, _) = rref(&m);
        assert_eq!(*r.get(0, 1), Q.parse_scalar("6/5").unwrap());
        assert!(r.row(1).is_zero());
    }

    #[test]
    fn mod_p_elimination() {
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_i64_rows(f, &[&[1, 2], &[2, 1]]);
        assert_eq!(rank(&m), 1);
        let k = kernel(&m);
        assert!(k.contains(&Vector::from_i64(f, &[1, 1])));
    }

    #[test]
    fn eigenspace_of_swap() {
        let m = Matrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]);
        let e = eigenspace(&m, &Q.from_i64(-1)).unwrap();
        assert_eq!(e, Subspace::span(Q, 2, &[Vector::from_i64(Q, &[1, -1])]).unwrap());
    }

    #[test]
    fn mixed_fields_rejected_at_construction() {
        let f = Field::prime(5).unwrap();
        let r = Matrix::from_rows(Q, alloc::vec![alloc::vec![Q.one(), f.one()]]);
        assert!(matches!(r, Err(crate::Error::FieldMismatch { .. })));
    }
}
