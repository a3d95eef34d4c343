use alloc::vec::Vec;

use super::{kernel, Matrix, RowSpaceBuilder, Vector};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A subspace of `F^n` stored by its canonical basis: the nonzero rows of its reduced
/// row echelon form. Two subspaces are equal exactly when their canonical bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of `vectors` inside `F^ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Subspace> {
        let mut b = RowSpaceBuilder::new(field, ambient);
        for v in vectors {
            v.check_compatible(field, ambient)?;
            b.push_dense(v.entries());
        }
        Ok(Subspace::from_builder(b))
    }

    pub(crate) fn from_builder(b: RowSpaceBuilder) -> Subspace {
        let ambient = b.cols();
        let (basis, pivots) = b.finish();
        Subspace { ambient, basis, pivots }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one row per vector.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Whether `v` lies in the subspace.
    pub fn contains(&self, v: &Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.clone();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w.get(p).clone();
            if !c.is_zero() {
                w.add_scaled(&-&c, &self.basis.row(r));
            }
        }
        w.is_zero()
    }

    /// Checked [`Subspace::contains`].
    pub fn try_contains(&self, v: &Vector) -> Result<bool> {
        v.check_compatible(self.field(), self.ambient)?;
        Ok(self.contains(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    fn check_same_space(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: other.field(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// `self + other`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_space(other)?;
        let mut b = RowSpaceBuilder::new(self.field(), self.ambient);
        for m in [&self.basis, &other.basis] {
            for r in 0..m.rows() {
                b.push_dense(m.row_slice(r));
            }
        }
        Ok(Subspace::from_builder(b))
    }

    /// `self ∩ other`, computed as the common kernel of both equation systems.
    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_space(other)?;
        Ok(kernel(&self.equations().stack(&other.equations())))
    }

    /// Rows spanning the linear forms vanishing on the subspace, so that the subspace is
    /// the kernel of the returned matrix.
    pub fn equations(&self) -> Matrix {
        let k = kernel(&self.basis);
        k.basis
    }

    /// Whether `whole = self ⊕ other`.
    pub fn is_direct_sum_of(whole: &Subspace, a: &Subspace, b: &Subspace) -> Result<bool> {
        Ok(a.meet(b)?.is_zero() && a.join(b)? == *whole)
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map domain mismatch");
        let mut b = RowSpaceBuilder::new(self.field(), map.rows());
        for v in self.basis() {
            b.push_dense(map.apply(&v).entries());
        }
        Subspace::from_builder(b)
    }

    /// Vector with the given coordinates with respect to the canonical basis.
    pub fn combination(&self, coefficients: &[crate::Scalar]) -> Vector {
        assert_eq!(coefficients.len(), self.dim(), "coefficient count mismatch");
        let mut v = Vector::zeros(self.field(), self.ambient);
        for (r, c) in coefficients.iter().enumerate() {
            v.add_scaled(c, &self.basis.row(r));
        }
        v
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subspace", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis)?;
        st.end()
    }
}

/// Solution set of an inhomogeneous linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSet {
    Empty,
    /// `particular + direction`, where `particular` has every free variable set to zero.
    NonEmpty { particular: Vector, direction: Subspace },
}

impl AffineSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSet::Empty)
    }

    pub fn particular(&self) -> Option<&Vector> {
        match self {
            AffineSet::Empty => None,
            AffineSet::NonEmpty { particular, .. } => Some(particular),
        }
    }

    pub fn contains(&self, v: &Vector) -> bool {
        match self {
            AffineSet::Empty => false,
            AffineSet::NonEmpty { particular, direction } => direction.contains(&(v - particular)),
        }
    }
}
